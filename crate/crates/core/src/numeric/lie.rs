//! Chevalley generators in the defining representations of type A and C
//! factors, the catalog irreducibles, and extension of the simple
//! generators to all root vectors by commutators.

use nalgebra::DMatrix;

use super::{commutator, NumericError, Real};
use crate::rootdata::{Letter, RootDatum};
use crate::weight::WeightVec;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GenKind {
    /// The `k`-th ambient coweight direction: a simple coroot for
    /// `k < rank`, a central direction after that.
    Torus(usize),
    Raising(WeightVec),
    Lowering(WeightVec),
}

/// A basis element of 𝔤, acting on V and on the defining module
/// (the direct sum of the factors' defining modules and one line per
/// central direction).
#[derive(Clone, Debug)]
pub struct LieGenerator<T: Real> {
    pub kind: GenKind,
    pub on_v: DMatrix<T>,
    pub defining: DMatrix<T>,
}

/// Simple raising and lowering operators of one factor, in local Bourbaki
/// order.
#[derive(Clone, Debug)]
pub(crate) struct FactorGens<T: Real> {
    pub dim: usize,
    pub e: Vec<DMatrix<T>>,
    pub f: Vec<DMatrix<T>>,
}

fn unit<T: Real>(n: usize, i: usize, j: usize) -> DMatrix<T> {
    let mut m = DMatrix::zeros(n, n);
    m[(i, j)] = T::one();
    m
}

fn sl_standard<T: Real>(rank: usize) -> FactorGens<T> {
    let n = rank + 1;
    FactorGens {
        dim: n,
        e: (0..rank).map(|i| unit(n, i, i + 1)).collect(),
        f: (0..rank).map(|i| unit(n, i + 1, i)).collect(),
    }
}

/// Basis `x₁..xₙ, y₁..yₙ` with `J = [[0, I], [−I, 0]]`; `xᵢ` has weight `εᵢ`.
fn sp_standard<T: Real>(n: usize) -> FactorGens<T> {
    let d = 2 * n;
    let mut e = Vec::with_capacity(n);
    let mut f = Vec::with_capacity(n);
    for i in 0..n - 1 {
        e.push(unit(d, i, i + 1) - unit(d, n + i + 1, n + i));
        f.push(unit(d, i + 1, i) - unit(d, n + i, n + i + 1));
    }
    e.push(unit(d, n - 1, 2 * n - 1));
    f.push(unit(d, 2 * n - 1, n - 1));
    FactorGens { dim: d, e, f }
}

pub(crate) fn standard_form<T: Real>(n: usize) -> DMatrix<T> {
    let mut j = DMatrix::zeros(2 * n, 2 * n);
    for i in 0..n {
        j[(i, n + i)] = T::one();
        j[(n + i, i)] = -T::one();
    }
    j
}

/// The irreducible sl₂-module of highest weight `m` on `v₀..v_m`:
/// `f vⱼ = (j+1) vⱼ₊₁`, `e vⱼ = (m−j+1) vⱼ₋₁`.
fn sl2_irrep<T: Real>(m: usize) -> FactorGens<T> {
    let d = m + 1;
    let mut e = DMatrix::zeros(d, d);
    let mut f = DMatrix::zeros(d, d);
    for j in 0..m {
        f[(j + 1, j)] = T::of((j + 1) as f64);
        e[(j, j + 1)] = T::of((m - j) as f64);
    }
    FactorGens { dim: d, e: vec![e], f: vec![f] }
}

/// Invariant bilinear form `B(vⱼ, v_{m−j}) = (−1)ʲ C(m, j)` on the
/// sl₂-irreducible of highest weight `m`.
fn sl2_form<T: Real>(m: usize) -> DMatrix<T> {
    let mut b = DMatrix::zeros(m + 1, m + 1);
    let mut binom = 1.0f64;
    for j in 0..=m {
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        b[(j, m - j)] = T::of(sign * binom);
        binom = binom * (m - j) as f64 / (j + 1) as f64;
    }
    b
}

fn dual<T: Real>(g: FactorGens<T>) -> FactorGens<T> {
    FactorGens {
        dim: g.dim,
        e: g.e.iter().map(|x| -x.transpose()).collect(),
        f: g.f.iter().map(|x| -x.transpose()).collect(),
    }
}

fn trivial<T: Real>(rank: usize) -> FactorGens<T> {
    FactorGens { dim: 1, e: vec![DMatrix::zeros(1, 1); rank], f: vec![DMatrix::zeros(1, 1); rank] }
}

pub(crate) fn defining<T: Real>(letter: Letter, rank: usize) -> Result<FactorGens<T>, NumericError> {
    match letter {
        Letter::A => Ok(sl_standard(rank)),
        Letter::C => Ok(sp_standard(rank)),
        _ => Err(NumericError::NotSupported(format!("no matrix model for type {letter}{rank}"))),
    }
}

/// A catalog irreducible of one factor with its invariant bilinear form
/// when self-dual.
pub(crate) fn irrep<T: Real>(
    letter: Letter,
    rank: usize,
    hw: &[i64],
) -> Result<(FactorGens<T>, Option<DMatrix<T>>), NumericError> {
    let unsupported = || NumericError::NotSupported(format!("irreducible {hw:?} of {letter}{rank} is not in the catalog"));
    let nonzero: Vec<usize> = (0..rank).filter(|&i| hw[i] != 0).collect();
    if nonzero.is_empty() {
        return Ok((trivial(rank), Some(DMatrix::identity(1, 1))));
    }
    match letter {
        Letter::A if rank == 1 => {
            let m = hw[0] as usize;
            Ok((sl2_irrep(m), Some(sl2_form(m))))
        }
        Letter::A if nonzero == [0] && hw[0] == 1 => Ok((sl_standard(rank), None)),
        Letter::A if nonzero == [rank - 1] && hw[rank - 1] == 1 => Ok((dual(sl_standard(rank)), None)),
        Letter::C if nonzero == [0] && hw[0] == 1 => Ok((sp_standard(rank), Some(standard_form(rank)))),
        Letter::A | Letter::C => Err(unsupported()),
        _ => Err(NumericError::NotSupported(format!("no matrix model for type {letter}{rank}"))),
    }
}

/// Full Lie basis: torus directions, then `e_α, f_α` for each positive root
/// in height order, normalized so that `[e_α, f_α]` is the coroot `α^∨`.
pub(crate) fn lie_basis<T: Real>(
    datum: &RootDatum,
    simple_v: &[(DMatrix<T>, DMatrix<T>)],
    simple_def: &[(DMatrix<T>, DMatrix<T>)],
    central_v: &[DMatrix<T>],
    central_def: &[DMatrix<T>],
) -> Result<Vec<LieGenerator<T>>, NumericError> {
    let rank = datum.rank();
    let mut torus_v: Vec<DMatrix<T>> = simple_v.iter().map(|(e, f)| commutator(e, f)).collect();
    let mut torus_def: Vec<DMatrix<T>> = simple_def.iter().map(|(e, f)| commutator(e, f)).collect();
    torus_v.extend(central_v.iter().cloned());
    torus_def.extend(central_def.iter().cloned());
    let mut basis: Vec<LieGenerator<T>> = (0..datum.ambient_dim())
        .map(|k| LieGenerator { kind: GenKind::Torus(k), on_v: torus_v[k].clone(), defining: torus_def[k].clone() })
        .collect();

    let index = datum.root_index();
    // (e_v, f_v, e_def, f_def) per positive root, in the stored order.
    let mut built: Vec<Option<[DMatrix<T>; 4]>> = vec![None; datum.positive_roots().len()];
    for (idx, root) in datum.positive_roots().iter().enumerate() {
        let mats = if let Some(i) = (0..rank).find(|&i| datum.simple_roots()[i] == root.vector) {
            [simple_v[i].0.clone(), simple_v[i].1.clone(), simple_def[i].0.clone(), simple_def[i].1.clone()]
        } else {
            let (i, prev) = (0..rank)
                .find_map(|i| match index.get(&root.vector.sub(&datum.simple_roots()[i])) {
                    Some(&(j, true)) => Some((i, j)),
                    _ => None,
                })
                .expect("every non-simple positive root is a simple root plus a positive root");
            let [pe, pf, pde, pdf] = built[prev].clone().expect("roots are processed by height");
            let e_v = commutator(&simple_v[i].0, &pe);
            let f_v = commutator(&pf, &simple_v[i].1);
            let e_d = commutator(&simple_def[i].0, &pde);
            let f_d = commutator(&pdf, &simple_def[i].1);
            let h_target = root
                .coroot
                .iter()
                .enumerate()
                .fold(DMatrix::zeros(e_d.nrows(), e_d.ncols()), |acc, (k, &c)| acc + &torus_def[k] * T::of(c as f64));
            let got = commutator(&e_d, &f_d);
            let scale = got.dot(&h_target) / h_target.dot(&h_target);
            if scale.abs() < T::of(1e-12) {
                return Err(NumericError::Degenerate(format!("vanishing root vector for {}", root.vector)));
            }
            [e_v, f_v / scale, e_d, f_d / scale]
        };
        built[idx] = Some(mats);
    }
    for (root, mats) in datum.positive_roots().iter().zip(built) {
        let [e_v, f_v, e_d, f_d] = mats.expect("built above");
        basis.push(LieGenerator { kind: GenKind::Raising(root.vector.clone()), on_v: e_v, defining: e_d });
        basis.push(LieGenerator { kind: GenKind::Lowering(root.vector.clone()), on_v: f_v, defining: f_d });
    }
    Ok(basis)
}
