//! Numerical rank and complexity estimates, coisotropy of generic orbits,
//! and highest-weight vectors of a matrix model.

use std::collections::BTreeMap;

use nalgebra::{DMatrix, DVector};

use super::catalog::MatrixRep;
use super::lie::GenKind;
use super::moment::inv_moment_jacobian;
use super::sample::Sampler;
use super::{column_basis, nullspace, numerical_rank, NumericError, Real, RANK_TOL};
use crate::weight::WeightVec;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RankEstimate {
    pub est_rk: usize,
    pub est_orbit_dim: usize,
    pub est_c: usize,
}

/// Columns `ξv` over the Lie basis.
pub(crate) fn tangent_stack<T: Real>(rep: &MatrixRep<T>, v: &DVector<T>) -> DMatrix<T> {
    let cols: Vec<DVector<T>> = rep.lie_basis.iter().map(|g| &g.on_v * v).collect();
    DMatrix::from_columns(&cols)
}

fn normalize_rows<T: Real>(m: &DMatrix<T>) -> DMatrix<T> {
    let mut out = m.clone();
    for mut row in out.row_iter_mut() {
        let n = row.norm();
        if n > T::of(1e-13) {
            row /= n;
        }
    }
    out
}

/// `est_rk` is the generic rank of the Jacobian of the invariant moment map,
/// `est_orbit_dim` the generic dimension of `𝔤v`, and
/// `est_c = ½(dim V − est_orbit_dim − est_rk)`.
pub fn jacobian_rank_and_orbit<T: Real>(
    rep: &MatrixRep<T>,
    samples: usize,
    seed: u64,
) -> Result<RankEstimate, NumericError> {
    let mut sampler = Sampler::new(seed);
    let (mut rk, mut orbit) = (0, 0);
    for _ in 0..samples.max(5) {
        let v = sampler.unit_vector::<T>(rep.dim);
        let jac = inv_moment_jacobian(rep, &v);
        rk = rk.max(numerical_rank(&normalize_rows(&jac)));
        orbit = orbit.max(numerical_rank(&tangent_stack(rep, &v)));
    }
    let rest = rep.dim as i64 - orbit as i64 - rk as i64;
    if rest < 0 || rest % 2 != 0 {
        return Err(NumericError::Degenerate(format!(
            "dim V − orbit − rank = {rest} is not a non-negative even number"
        )));
    }
    Ok(RankEstimate { est_rk: rk, est_orbit_dim: orbit, est_c: (rest / 2) as usize })
}

/// Largest projection residual of `(𝔤v)^⊥` onto `𝔤v` at `v`.
pub(crate) fn coisotropy_residual<T: Real>(rep: &MatrixRep<T>, v: &DVector<T>) -> f64 {
    let q = column_basis(&tangent_stack(rep, v));
    // u ∈ (𝔤v)^⊥ ⇔ qᵀ J u = 0
    let perp = nullspace(&(q.transpose() * &rep.form));
    let proj = &q * (q.transpose() * &perp);
    (perp - proj).column_iter().map(|c| c.norm().to_f64()).fold(0.0, f64::max)
}

/// True iff the generic orbit is coisotropic at every sample.
pub fn coisotropy_test<T: Real>(rep: &MatrixRep<T>, samples: usize, seed: u64) -> bool {
    let mut sampler = Sampler::new(seed);
    (0..samples.max(1)).all(|_| coisotropy_residual(rep, &sampler.unit_vector::<T>(rep.dim)) <= RANK_TOL)
}

/// Weight spaces of the matrix model as coordinate subspaces.
pub(crate) fn weight_spaces<T: Real>(rep: &MatrixRep<T>) -> Vec<(WeightVec, DMatrix<T>)> {
    let mut groups: BTreeMap<WeightVec, Vec<usize>> = BTreeMap::new();
    for (i, w) in rep.weight_labels.iter().enumerate() {
        groups.entry(w.clone()).or_default().push(i);
    }
    groups
        .into_iter()
        .map(|(w, idx)| {
            let mut b = DMatrix::zeros(rep.dim, idx.len());
            for (c, &i) in idx.iter().enumerate() {
                b[(i, c)] = T::one();
            }
            (w, b)
        })
        .collect()
}

/// Vectors of each weight space killed by all the given raising operators.
pub(crate) fn highest_in<T: Real>(
    spaces: &[(WeightVec, DMatrix<T>)],
    raising: &[&DMatrix<T>],
) -> Vec<(WeightVec, DMatrix<T>)> {
    let mut out = Vec::new();
    for (w, b) in spaces {
        if b.ncols() == 0 {
            continue;
        }
        let rows: Vec<DMatrix<T>> = raising.iter().map(|e| *e * b).collect();
        let stacked = if rows.is_empty() {
            DMatrix::zeros(0, b.ncols())
        } else {
            let total: usize = rows.iter().map(|r| r.nrows()).sum();
            let mut s = DMatrix::zeros(total, b.ncols());
            let mut r0 = 0;
            for r in &rows {
                s.rows_mut(r0, r.nrows()).copy_from(r);
                r0 += r.nrows();
            }
            s
        };
        let kernel = nullspace(&stacked);
        if kernel.ncols() > 0 {
            out.push((w.clone(), b * kernel));
        }
    }
    out.sort_by(|a, b| b.0.cmp(&a.0));
    out
}

/// Highest-weight spaces of the model, by decreasing weight; their
/// dimensions are the summand multiplicities.
pub fn find_hw_vectors<T: Real>(rep: &MatrixRep<T>) -> Vec<(WeightVec, DMatrix<T>)> {
    let datum = rep.datum();
    let raising: Vec<&DMatrix<T>> = datum
        .simple_roots()
        .iter()
        .map(|a| &rep.generator(&GenKind::Raising(a.clone())).expect("simple root generator").on_v)
        .collect();
    highest_in(&weight_spaces(rep), &raising)
}
