//! The moment map `m(v)(ξ) = ½ω(ξv, v)`, its matrix form under the trace
//! form of the defining module, and Chevalley coordinates on 𝔤*//G.

use nalgebra::{DMatrix, DVector};
use num_rational::Rational64;
use num_traits::ToPrimitive;

use super::catalog::{Block, MatrixRep};
use super::{omega, NumericError, Real};
use crate::linalg;
use crate::scalar::{Dual, Ring};

#[derive(Clone, Debug)]
pub struct MomentValue<T: Real> {
    /// `⟨m(v), ξ⟩` for each element of the Lie basis.
    pub coords: Vec<T>,
    /// The element of 𝔤 (in the defining module) dual to `coords`.
    pub matrix_form: DMatrix<T>,
}

/// Per simple factor the nontrivial characteristic-polynomial coefficients
/// of its block, then the central coordinates.
pub type ChevalleyCoords<T> = Vec<T>;

fn check_dim<T: Real>(rep: &MatrixRep<T>, v: &DVector<T>) -> Result<(), NumericError> {
    if v.len() != rep.dim {
        return Err(NumericError::DimensionMismatch { expected: rep.dim, found: v.len() });
    }
    Ok(())
}

/// `½ω(ξv, v)` for each basis element in `subset`.
pub(crate) fn moment_coords<T: Real>(rep: &MatrixRep<T>, subset: &[usize], v: &DVector<T>) -> Vec<T> {
    subset.iter().map(|&i| omega(&rep.form, &(&rep.lie_basis[i].on_v * v), v) * T::of(0.5)).collect()
}

/// The element `X` of the span of `subset` with `tr(X ξ) = coords(ξ)`.
pub(crate) fn matrix_form_on<T: Real>(rep: &MatrixRep<T>, subset: &[usize], coords: &[T]) -> DMatrix<T> {
    let k = subset.len();
    let gram = DMatrix::from_fn(k, k, |a, b| {
        (&rep.lie_basis[subset[a]].defining * &rep.lie_basis[subset[b]].defining).trace()
    });
    let rhs = DVector::from_column_slice(coords);
    let sol = gram.lu().solve(&rhs).expect("trace form is non-degenerate on a reductive subalgebra");
    let d = rep.lie_basis[0].defining.nrows();
    subset.iter().zip(sol.iter()).fold(DMatrix::zeros(d, d), |acc, (&i, &a)| acc + &rep.lie_basis[i].defining * a)
}

pub fn moment_eval<T: Real>(rep: &MatrixRep<T>, v: &DVector<T>) -> Result<MomentValue<T>, NumericError> {
    check_dim(rep, v)?;
    let all: Vec<usize> = (0..rep.lie_basis.len()).collect();
    let coords = moment_coords(rep, &all, v);
    let matrix_form = matrix_form_on(rep, &all, &coords);
    Ok(MomentValue { coords, matrix_form })
}

fn block_of<R: Ring>(x: &[Vec<R>], offset: usize, size: usize) -> Vec<Vec<R>> {
    x[offset..offset + size].iter().map(|row| row[offset..offset + size].to_vec()).collect()
}

/// Chevalley coordinates of an element of 𝔤 given in the defining module.
pub(crate) fn chevalley_of<R: Ring>(blocks: &[Block], x: &[Vec<R>]) -> Vec<R> {
    let mut out = Vec::new();
    for b in blocks {
        match *b {
            Block::Factor { letter, rank, offset, size } => {
                let cp = linalg::char_poly(&block_of(x, offset, size));
                match letter {
                    // sl_{r+1}: coefficients of t^{n−k}, k = 2..n.
                    crate::rootdata::Letter::A => out.extend((2..=size).map(|k| cp[size - k].clone())),
                    // sp_{2r}: coefficients of t^{2r−2k}, k = 1..r.
                    _ => out.extend((1..=rank).map(|k| cp[size - 2 * k].clone())),
                }
            }
            Block::Central { offset, size } => out.extend((0..size).map(|c| x[offset + c][offset + c].clone())),
        }
    }
    out
}

fn rows<T: Real>(m: &DMatrix<T>) -> Vec<Vec<T>> {
    (0..m.nrows()).map(|i| m.row(i).iter().copied().collect()).collect()
}

/// The invariant moment map `V → 𝔤*//G ≅ 𝔱*/W` in Chevalley coordinates.
pub fn inv_moment_eval<T: Real>(rep: &MatrixRep<T>, v: &DVector<T>) -> Result<ChevalleyCoords<T>, NumericError> {
    let m = moment_eval(rep, v)?;
    Ok(chevalley_of(&rep.blocks, &rows(&m.matrix_form)))
}

/// Jacobian of [`inv_moment_eval`] at `v` (rows: coordinates), by forward
/// dual numbers along each basis direction.
pub(crate) fn inv_moment_jacobian<T: Real>(rep: &MatrixRep<T>, v: &DVector<T>) -> DMatrix<T> {
    let all: Vec<usize> = (0..rep.lie_basis.len()).collect();
    let x = rows(&matrix_form_on(rep, &all, &moment_coords(rep, &all, v)));
    let n = rep.dim;
    let mut cols = Vec::with_capacity(n);
    for j in 0..n {
        // dm(v)[e_j](ξ) = ω(ξ e_j, v)
        let dcoords: Vec<T> = rep
            .lie_basis
            .iter()
            .map(|g| {
                let col = g.on_v.column(j).into_owned();
                omega(&rep.form, &col, v)
            })
            .collect();
        let dx = rows(&matrix_form_on(rep, &all, &dcoords));
        let xd: Vec<Vec<Dual<T>>> = x
            .iter()
            .zip(&dx)
            .map(|(r, dr)| r.iter().zip(dr).map(|(&a, &b)| Dual::new(a, b)).collect())
            .collect();
        cols.push(chevalley_of(&rep.blocks, &xd).into_iter().map(|d| d.eps).collect::<Vec<T>>());
    }
    let r = cols.first().map_or(0, Vec::len);
    DMatrix::from_fn(r, n, |i, j| cols[j][i])
}

/// Chevalley image of `a ∈ 𝔱*` (ambient coordinates), viewed in 𝔤* by
/// vanishing on root vectors.
pub fn chevalley_image<T: Real>(rep: &MatrixRep<T>, a: &[Rational64]) -> ChevalleyCoords<T> {
    let all: Vec<usize> = (0..rep.lie_basis.len()).collect();
    let mut coords = vec![T::zero(); all.len()];
    for (k, q) in a.iter().enumerate() {
        coords[k] = T::of(q.to_f64().expect("finite rational"));
    }
    chevalley_of(&rep.blocks, &rows(&matrix_form_on(rep, &all, &coords)))
}

pub(crate) fn to_rows<T: Real>(m: &DMatrix<T>) -> Vec<Vec<T>> {
    rows(m)
}
