use crate::rootdata::DEFAULT_WEYL_CAP;

/// Resource limits shared by the combinatorial and numeric pipelines.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Budget {
    pub weyl_cap: usize,
    pub irrep_dim_cap: u64,
    /// Largest dim V for symmetric-power computations.
    pub sym_dim_cap: usize,
    /// Largest degree for symmetric-power computations.
    pub sym_degree_cap: usize,
    /// Largest dim V for explicit matrix models.
    pub matrix_dim_cap: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            weyl_cap: DEFAULT_WEYL_CAP,
            irrep_dim_cap: 5000,
            sym_dim_cap: 16,
            sym_degree_cap: 10,
            matrix_dim_cap: 64,
        }
    }
}
