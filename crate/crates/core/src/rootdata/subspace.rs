//! Normalizer and centralizer in W of a rational subspace `a* ⊆ t*`.

use std::collections::HashMap;

use num_rational::Rational64;
use num_traits::{One, Zero};

use super::{RootDataError, RootDatum, WeylElement};
use crate::linalg::{self, Mat};
use crate::weight::RatVec;

/// An element of `Γ = N(a*)/C(a*)` as a matrix on the echelon basis of a*
/// (column j holds the coordinates of the image of basis vector j).
#[derive(Clone, Debug, PartialEq)]
pub struct GammaElement {
    pub matrix: Mat<Rational64>,
    /// First element of N(a*), in enumeration order, inducing this matrix.
    pub representative: WeylElement,
    /// Fixes a hyperplane of a* pointwise.
    pub is_reflection: bool,
}

#[derive(Clone, Debug)]
pub struct SubspaceGroupData {
    /// Reduced row echelon basis of a*.
    pub a_star_basis: Vec<RatVec>,
    pub normalizer: Vec<WeylElement>,
    pub centralizer: Vec<WeylElement>,
    /// Identity first.
    pub gamma: Vec<GammaElement>,
}

impl SubspaceGroupData {
    pub fn dim(&self) -> usize {
        self.a_star_basis.len()
    }

    pub fn order(&self) -> usize {
        self.gamma.len()
    }

    pub fn reflection_count(&self) -> usize {
        self.gamma.iter().filter(|g| g.is_reflection).count()
    }
}

/// Canonical (reduced row echelon) basis of the span of `vectors`.
pub fn canonical_basis(vectors: &[RatVec], ambient_dim: usize) -> Vec<RatVec> {
    linalg::row_space_basis(vectors, ambient_dim)
}

/// Coordinates of `x` in an echelon basis, or `None` if `x` is outside the
/// span.
pub fn echelon_coords(basis: &[RatVec], x: &[Rational64]) -> Option<RatVec> {
    let pivots: Vec<usize> = basis
        .iter()
        .map(|b| b.iter().position(|v| !v.is_zero()).expect("nonzero basis row"))
        .collect();
    let coords: RatVec = pivots.iter().map(|&p| x[p]).collect();
    let mut recon = vec![Rational64::zero(); x.len()];
    for (c, b) in coords.iter().zip(basis) {
        for (r, bv) in recon.iter_mut().zip(b) {
            *r += c * bv;
        }
    }
    (recon.as_slice() == x).then_some(coords)
}

pub fn subspace_normalizer(
    datum: &RootDatum,
    a_star: &[RatVec],
    cap: usize,
) -> Result<SubspaceGroupData, RootDataError> {
    for v in a_star {
        if v.len() != datum.ambient_dim() {
            return Err(RootDataError::DimensionMismatch { expected: datum.ambient_dim(), found: v.len() });
        }
    }
    let basis = canonical_basis(a_star, datum.ambient_dim());
    let k = basis.len();
    let elements = datum.enumerate_weyl(cap)?;
    let identity = linalg::identity::<Rational64>(k);
    let mut normalizer = Vec::new();
    let mut centralizer = Vec::new();
    let mut gamma: Vec<GammaElement> = Vec::new();
    let mut seen: HashMap<Mat<Rational64>, usize> = HashMap::new();
    'outer: for w in elements {
        let mut cols = Vec::with_capacity(k);
        for b in &basis {
            match echelon_coords(&basis, &w.matrix.apply_rat(b)) {
                Some(c) => cols.push(c),
                None => continue 'outer,
            }
        }
        let matrix = linalg::transpose(&cols, k);
        if matrix == identity {
            centralizer.push(w.clone());
        }
        if !seen.contains_key(&matrix) {
            seen.insert(matrix.clone(), gamma.len());
            let is_reflection = is_reflection(&matrix);
            gamma.push(GammaElement { matrix, representative: w.clone(), is_reflection });
        }
        normalizer.push(w);
    }
    debug_assert_eq!(normalizer.len(), gamma.len() * centralizer.len());
    Ok(SubspaceGroupData { a_star_basis: basis, normalizer, centralizer, gamma })
}

/// `rank(g − I) = 1`; for an element of a finite group this is a reflection.
pub fn is_reflection(g: &Mat<Rational64>) -> bool {
    let k = g.len();
    let d: Mat<Rational64> = (0..k)
        .map(|i| (0..k).map(|j| g[i][j] - if i == j { Rational64::one() } else { Rational64::zero() }).collect())
        .collect();
    linalg::rank(&d, k) == 1
}

#[cfg(test)]
mod tests {
    use super::super::Letter;
    use super::*;

    fn q(n: i64) -> Rational64 {
        Rational64::from_integer(n)
    }

    #[test]
    fn a1_full_torus() {
        let d = RootDatum::new(&[(Letter::A, 1)], 0).unwrap();
        let g = subspace_normalizer(&d, &[vec![q(1)]], 100).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.reflection_count(), 1);
        assert_eq!(g.gamma[1].matrix, vec![vec![q(-1)]]);
    }

    #[test]
    fn a2_line_of_first_fundamental_weight() {
        let d = RootDatum::new(&[(Letter::A, 2)], 0).unwrap();
        let g = subspace_normalizer(&d, &[vec![q(1), q(0)]], 100).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.normalizer.len(), 2);
        assert_eq!(g.centralizer.len(), 2);
    }

    #[test]
    fn zero_subspace() {
        let d = RootDatum::new(&[(Letter::C, 2)], 0).unwrap();
        let g = subspace_normalizer(&d, &[], 100).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.normalizer.len(), 8);
    }
}
