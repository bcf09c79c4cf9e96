//! Matrix models `MatrixRep` built from a validated spec and its pairing
//! plan, and the catalog suite used by the numeric cross-checks.

use nalgebra::DMatrix;

use super::lie::{defining, irrep, lie_basis, FactorGens, GenKind, LieGenerator};
use super::{commutator, NumericError, Real};
use crate::reps::{Pairing, SympRepSpec, WeightMultiset};
use crate::rootdata::{Letter, RootDatum};
use crate::weight::WeightVec;

/// A block of the defining module: a simple factor or the central lines.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Block {
    Factor { letter: Letter, rank: usize, offset: usize, size: usize },
    Central { offset: usize, size: usize },
}

#[derive(Clone, Debug)]
pub struct MatrixRep<T: Real> {
    pub spec: SympRepSpec,
    pub dim: usize,
    /// Skew matrix `J` with `ω(u, v) = uᵀ J v`.
    pub form: DMatrix<T>,
    pub lie_basis: Vec<LieGenerator<T>>,
    pub weight_labels: Vec<WeightVec>,
    pub provenance: String,
    pub(crate) blocks: Vec<Block>,
}

/// Maximal residuals of the structural identities of a `MatrixRep`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct InvariantResiduals {
    /// `‖XᵀJ + JX‖` over the Lie basis.
    pub form_invariance: f64,
    pub form_skew: f64,
    /// `‖[e_α, f_α] − α^∨‖` on V.
    pub structure: f64,
    /// Off-diagonal torus entries and label mismatches.
    pub labels: f64,
}

impl InvariantResiduals {
    pub fn max(&self) -> f64 {
        self.form_invariance.max(self.form_skew).max(self.structure).max(self.labels)
    }
}

impl<T: Real> MatrixRep<T> {
    pub fn datum(&self) -> &RootDatum {
        self.spec.datum()
    }

    pub fn generator(&self, kind: &GenKind) -> Option<&LieGenerator<T>> {
        self.lie_basis.iter().find(|g| &g.kind == kind)
    }

    /// Torus element given by a coweight vector, acting diagonally.
    pub fn torus_action(&self, coweight: &[f64]) -> DMatrix<T> {
        DMatrix::from_diagonal(&nalgebra::DVector::from_iterator(
            self.dim,
            self.weight_labels.iter().map(|w| T::of(w.iter().zip(coweight).map(|(&a, &b)| a as f64 * b).sum())),
        ))
    }

    pub fn weight_multiset(&self) -> WeightMultiset {
        self.weight_labels.iter().map(|w| (w.clone(), 1)).collect()
    }

    pub fn check_invariants(&self) -> InvariantResiduals {
        let j = &self.form;
        let form_invariance = self
            .lie_basis
            .iter()
            .map(|g| (g.on_v.transpose() * j + j * &g.on_v).norm().to_f64())
            .fold(0.0, f64::max);
        let form_skew = (j + j.transpose()).norm().to_f64();
        let datum = self.datum();
        let mut structure: f64 = 0.0;
        for root in datum.positive_roots() {
            let e = self.generator(&GenKind::Raising(root.vector.clone())).expect("root generator");
            let f = self.generator(&GenKind::Lowering(root.vector.clone())).expect("root generator");
            let coroot: Vec<f64> = root.coroot.iter().map(|&c| c as f64).collect();
            let r = (commutator(&e.on_v, &f.on_v) - self.torus_action(&coroot)).norm().to_f64();
            structure = structure.max(r);
        }
        let mut labels: f64 = 0.0;
        for k in 0..datum.ambient_dim() {
            let h = &self.generator(&GenKind::Torus(k)).expect("torus generator").on_v;
            for r in 0..self.dim {
                for c in 0..self.dim {
                    let expected = if r == c { self.weight_labels[r][k] as f64 } else { 0.0 };
                    labels = labels.max((h[(r, c)].to_f64() - expected).abs());
                }
            }
        }
        InvariantResiduals { form_invariance, form_skew, structure, labels }
    }
}

fn kron_all<T: Real>(mats: &[DMatrix<T>]) -> DMatrix<T> {
    mats.iter().fold(DMatrix::identity(1, 1), |acc, m| acc.kronecker(m))
}

/// An irreducible G-module: simple generators, central scalars, and its
/// invariant bilinear form if self-dual.
struct Module<T: Real> {
    dim: usize,
    e: Vec<DMatrix<T>>,
    f: Vec<DMatrix<T>>,
    z: Vec<DMatrix<T>>,
    form: Option<DMatrix<T>>,
}

fn irreducible<T: Real>(datum: &RootDatum, hw: &WeightVec) -> Result<Module<T>, NumericError> {
    let rank = datum.rank();
    let mut parts: Vec<(FactorGens<T>, Option<DMatrix<T>>)> = Vec::new();
    for factor in datum.factors() {
        let local: Vec<i64> = factor.nodes.iter().map(|&i| hw[i]).collect();
        parts.push(irrep(factor.letter, factor.rank, &local)?);
    }
    let dims: Vec<usize> = parts.iter().map(|(g, _)| g.dim).collect();
    let dim: usize = dims.iter().product();
    let ids: Vec<DMatrix<T>> = dims.iter().map(|&d| DMatrix::identity(d, d)).collect();
    let mut e = vec![DMatrix::zeros(dim, dim); rank];
    let mut f = vec![DMatrix::zeros(dim, dim); rank];
    for (fi, factor) in datum.factors().iter().enumerate() {
        for (p, &node) in factor.nodes.iter().enumerate() {
            let mut me = ids.clone();
            me[fi] = parts[fi].0.e[p].clone();
            e[node] = kron_all(&me);
            let mut mf = ids.clone();
            mf[fi] = parts[fi].0.f[p].clone();
            f[node] = kron_all(&mf);
        }
    }
    let z = (0..datum.central_rank())
        .map(|c| DMatrix::identity(dim, dim) * T::of(hw[rank + c] as f64))
        .collect();
    let central_zero = hw[rank..].iter().all(|&x| x == 0);
    let form = if central_zero && parts.iter().all(|(_, b)| b.is_some()) {
        let forms: Vec<DMatrix<T>> = parts.iter().map(|(_, b)| b.clone().expect("checked")).collect();
        Some(kron_all(&forms))
    } else {
        None
    };
    Ok(Module { dim, e, f, z, form })
}

fn dual_module<T: Real>(m: &Module<T>) -> Module<T> {
    Module {
        dim: m.dim,
        e: m.e.iter().map(|x| -x.transpose()).collect(),
        f: m.f.iter().map(|x| -x.transpose()).collect(),
        z: m.z.iter().map(|x| -x.transpose()).collect(),
        form: m.form.clone(),
    }
}

/// Direct sum of the modules, with the given block form.
struct Assembly<T: Real> {
    blocks: Vec<(Module<T>, usize)>,
    form_entries: Vec<(usize, usize, T)>,
    dim: usize,
}

impl<T: Real> Assembly<T> {
    fn push(&mut self, m: Module<T>) -> usize {
        let off = self.dim;
        self.dim += m.dim;
        self.blocks.push((m, off));
        off
    }
}

/// Builds the matrix model of `spec` from its pairing plan.
pub fn build_rep<T: Real>(spec: &SympRepSpec, matrix_dim_cap: usize) -> Result<MatrixRep<T>, NumericError> {
    let datum = spec.datum();
    for factor in datum.factors() {
        if !matches!(factor.letter, Letter::A | Letter::C) {
            return Err(NumericError::NotSupported(format!("no matrix model for type {factor}")));
        }
    }
    let dim = spec.dim()? as usize;
    if dim > matrix_dim_cap {
        return Err(NumericError::CapExceeded { dim, cap: matrix_dim_cap });
    }

    let mut asm = Assembly { blocks: Vec::new(), form_entries: Vec::new(), dim: 0 };
    let mut provenance = Vec::new();
    for pairing in spec.pairing_plan() {
        match pairing {
            Pairing::Cotangent { weight, dual, copies } => {
                for _ in 0..*copies {
                    let u = irreducible::<T>(datum, weight)?;
                    let n = u.dim;
                    let ud = dual_module(&u);
                    let a = asm.push(u);
                    let b = asm.push(ud);
                    for i in 0..n {
                        asm.form_entries.push((a + i, b + i, T::one()));
                        asm.form_entries.push((b + i, a + i, -T::one()));
                    }
                }
                provenance.push(format!("{copies}×(U{weight} ⊕ U{weight}* ≅ U{dual})"));
            }
            Pairing::SelfPaired { weight, copies } => {
                for _ in 0..*copies {
                    let u = irreducible::<T>(datum, weight)?;
                    let b = match &u.form {
                        Some(b) if (b + b.transpose()).norm() < T::of(1e-12) => b.clone(),
                        _ => return Err(NumericError::NoSymplecticForm(weight.to_string())),
                    };
                    let a = asm.push(u);
                    for r in 0..b.nrows() {
                        for c in 0..b.ncols() {
                            if b[(r, c)] != T::zero() {
                                asm.form_entries.push((a + r, a + c, b[(r, c)]));
                            }
                        }
                    }
                }
                provenance.push(format!("{copies}×U{weight} with invariant form"));
            }
        }
    }
    debug_assert_eq!(asm.dim, dim);
    let n = asm.dim;
    let mut form = DMatrix::zeros(n, n);
    for &(r, c, x) in &asm.form_entries {
        form[(r, c)] = x;
    }
    let rank = datum.rank();
    let embed = |pick: &dyn Fn(&Module<T>) -> &DMatrix<T>| {
        let mut out = DMatrix::zeros(n, n);
        for (m, off) in &asm.blocks {
            out.view_mut((*off, *off), (m.dim, m.dim)).copy_from(pick(m));
        }
        out
    };
    let simple_v: Vec<(DMatrix<T>, DMatrix<T>)> =
        (0..rank).map(|i| (embed(&|m| &m.e[i]), embed(&|m| &m.f[i]))).collect();
    let central_v: Vec<DMatrix<T>> = (0..datum.central_rank()).map(|c| embed(&|m| &m.z[c])).collect();

    // Defining module: factor blocks followed by one line per central direction.
    let mut blocks = Vec::new();
    let mut factor_gens = Vec::new();
    let mut off = 0;
    for factor in datum.factors() {
        let g = defining::<T>(factor.letter, factor.rank)?;
        blocks.push(Block::Factor { letter: factor.letter, rank: factor.rank, offset: off, size: g.dim });
        off += g.dim;
        factor_gens.push(g);
    }
    let central_off = off;
    let d = off + datum.central_rank();
    if datum.central_rank() > 0 {
        blocks.push(Block::Central { offset: central_off, size: datum.central_rank() });
    }
    let mut simple_def = vec![(DMatrix::zeros(d, d), DMatrix::zeros(d, d)); rank];
    for (fi, factor) in datum.factors().iter().enumerate() {
        let Block::Factor { offset, size, .. } = blocks[fi] else { unreachable!("factor blocks come first") };
        for (p, &node) in factor.nodes.iter().enumerate() {
            simple_def[node].0.view_mut((offset, offset), (size, size)).copy_from(&factor_gens[fi].e[p]);
            simple_def[node].1.view_mut((offset, offset), (size, size)).copy_from(&factor_gens[fi].f[p]);
        }
    }
    let central_def: Vec<DMatrix<T>> = (0..datum.central_rank())
        .map(|c| {
            let mut m = DMatrix::zeros(d, d);
            m[(central_off + c, central_off + c)] = T::one();
            m
        })
        .collect();
    let lie_basis = lie_basis(datum, &simple_v, &simple_def, &central_v, &central_def)?;

    let weight_labels = (0..n)
        .map(|r| {
            WeightVec::new(
                (0..datum.ambient_dim())
                    .map(|k| lie_basis[k].on_v[(r, r)].to_f64().round() as i64)
                    .collect(),
            )
        })
        .collect();
    Ok(MatrixRep { spec: spec.clone(), dim: n, form, lie_basis, weight_labels, provenance: provenance.join(" ⊕ "), blocks })
}

/// A named member of the catalog suite.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub spec: SympRepSpec,
}

/// The catalog suite: tori, SL₂ irreducibles, SLₙ standard ⊕ dual,
/// Sp₂ₙ standard, and products.
pub fn catalog_suite() -> Vec<CatalogEntry> {
    let mk = |name, factors: &[(Letter, usize)], central, summands: &[(&[i64], u64)]| {
        let datum = RootDatum::new(factors, central).expect("catalog datum");
        let s: Vec<(WeightVec, u64)> = summands.iter().map(|(w, k)| (WeightVec::new(w.to_vec()), *k)).collect();
        CatalogEntry { name, spec: SympRepSpec::new(datum, &s).expect("catalog spec") }
    };
    use Letter::{A, C};
    vec![
        mk("T1 on C1+C-1", &[], 1, &[(&[1], 1), (&[-1], 1)]),
        mk("T2 three characters", &[], 2, &[(&[1, 0], 1), (&[-1, 0], 1), (&[0, 1], 1), (&[0, -1], 1), (&[1, 1], 1), (&[-1, -1], 1)]),
        mk("SL2 binary cubics", &[(A, 1)], 0, &[(&[3], 1)]),
        mk("SL2 binary quintics", &[(A, 1)], 0, &[(&[5], 1)]),
        mk("SL2 two standards", &[(A, 1)], 0, &[(&[1], 2)]),
        mk("SL2 adjoint+adjoint", &[(A, 1)], 0, &[(&[2], 2)]),
        mk("SL3 std+dual", &[(A, 2)], 0, &[(&[1, 0], 1), (&[0, 1], 1)]),
        mk("SL3 two std+dual", &[(A, 2)], 0, &[(&[1, 0], 2), (&[0, 1], 2)]),
        mk("SL4 std+dual", &[(A, 3)], 0, &[(&[1, 0, 0], 1), (&[0, 0, 1], 1)]),
        mk("Sp4 standard", &[(C, 2)], 0, &[(&[1, 0], 1)]),
        mk("Sp6 standard", &[(C, 3)], 0, &[(&[1, 0, 0], 1)]),
        mk("Sp4 two standards", &[(C, 2)], 0, &[(&[1, 0], 2)]),
        mk("GL2 std+dual", &[(A, 1)], 1, &[(&[1, 1], 1), (&[1, -1], 1)]),
        mk("SL2xSL2 two bistandards", &[(A, 1), (A, 1)], 0, &[(&[1, 1], 2)]),
        mk("SL2xSp4 std+std", &[(A, 1), (C, 2)], 0, &[(&[1, 0, 0], 1), (&[0, 1, 0], 1)]),
    ]
}
