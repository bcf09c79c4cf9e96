//! Root data of connected reductive groups in exact arithmetic.
//!
//! The ambient lattice uses, per simple factor, fundamental-weight
//! coordinates (`λᵢ = ⟨λ, αᵢ^∨⟩`), followed by one coordinate per central
//! torus direction. Simple coroots of the top-level datum are therefore the
//! unit vectors of the dual basis.

pub mod cartan;
pub mod subspace;
pub mod weyl;

use std::collections::{HashMap, VecDeque};
use std::sync::Arc;

use num_rational::Rational64;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::linalg::{self, Mat};
use crate::weight::{RatVec, WeightVec};

pub use cartan::{Letter, SimpleFactor};
pub use subspace::{subspace_normalizer, GammaElement, SubspaceGroupData};
pub use weyl::{IntMatrix, WeylElement};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RootDataError {
    #[error("invalid Cartan type {letter}{rank}")]
    InvalidCartanType { letter: String, rank: usize },
    #[error("dimension mismatch: expected {expected} coordinates, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("group too large: |W| = {order} exceeds the enumeration cap {cap}")]
    GroupTooLarge { order: u128, cap: usize },
    #[error("simple root index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
}

/// Default cap on the number of Weyl group elements enumerated.
pub const DEFAULT_WEYL_CAP: usize = 1_000_000;

/// A root with its coroot, simple-root coefficients and height.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Root {
    pub vector: WeightVec,
    pub coroot: Vec<i64>,
    pub coeffs: Vec<i64>,
    pub height: i64,
}

#[derive(Clone, Debug)]
pub struct RootDatum {
    factors: Vec<SimpleFactor>,
    central_rank: usize,
    ambient_dim: usize,
    simple_roots: Vec<WeightVec>,
    simple_coroots: Vec<Vec<i64>>,
    cartan: Vec<Vec<i64>>,
    positive_roots: Vec<Root>,
    form: Arc<Mat<Rational64>>,
    rho2_coroot: Vec<i64>,
    regular: WeightVec,
}

/// Bundle returned by [`RootDatum::lattice_ops`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeProperties {
    pub pairings: Vec<i64>,
    pub dominant: bool,
    pub dominant_rep: WeightVec,
    /// `to_dominant · λ = dominant_rep`.
    pub to_dominant: WeylElement,
    pub w0_image: WeightVec,
    /// `⟨λ, 2ρ^∨⟩`.
    pub height: i64,
}

impl RootDatum {
    /// Builds the datum of a product of simple factors times a central torus.
    pub fn new(factors: &[(Letter, usize)], central_rank: usize) -> Result<Self, RootDataError> {
        let mut normalized = Vec::new();
        for &(l, r) in factors {
            normalized.extend(cartan::normalize(l, r)?);
        }
        let rank: usize = normalized.iter().map(|f| f.1).sum();
        let n = rank + central_rank;
        let mut simple_roots = Vec::with_capacity(rank);
        let mut decl = Vec::new();
        let mut form = vec![vec![Rational64::zero(); n]; n];
        let mut offset = 0;
        for &(letter, r) in &normalized {
            let a = cartan::cartan_matrix(letter, r);
            for row in &a {
                let mut v = vec![0i64; n];
                v[offset..offset + r].copy_from_slice(row);
                simple_roots.push(WeightVec::new(v));
            }
            let block = factor_form(&a);
            for i in 0..r {
                for j in 0..r {
                    form[offset + i][offset + j] = block[i][j];
                }
            }
            decl.push(SimpleFactor { letter, rank: r, nodes: (offset..offset + r).collect() });
            offset += r;
        }
        for (k, row) in form.iter_mut().enumerate().skip(rank) {
            row[k] = Rational64::one();
        }
        let coroots = (0..rank).map(|i| WeightVec::unit(n, i).into_inner()).collect();
        let mut d = Self::from_parts(n, simple_roots, coroots, Arc::new(form));
        d.factors = decl;
        Ok(d)
    }

    fn from_parts(
        ambient_dim: usize,
        simple_roots: Vec<WeightVec>,
        simple_coroots: Vec<Vec<i64>>,
        form: Arc<Mat<Rational64>>,
    ) -> Self {
        let rank = simple_roots.len();
        let cartan: Vec<Vec<i64>> = simple_roots
            .iter()
            .map(|a| simple_coroots.iter().map(|c| pair(a, c)).collect())
            .collect();
        let factors = cartan::classify_components(&cartan);
        let positive_roots = positive_roots(&simple_roots, &simple_coroots);
        let mut rho2_coroot = vec![0i64; ambient_dim];
        for r in &positive_roots {
            for (acc, c) in rho2_coroot.iter_mut().zip(&r.coroot) {
                *acc += c;
            }
        }
        let regular = regular_dominant(ambient_dim, &simple_coroots);
        RootDatum {
            factors,
            central_rank: ambient_dim - rank,
            ambient_dim,
            simple_roots,
            simple_coroots,
            cartan,
            positive_roots,
            form,
            rho2_coroot,
            regular,
        }
    }

    /// Standard Levi subgroup on a subset of the simple roots. The result
    /// shares the ambient lattice; its roots are the roots of `self` supported
    /// on the subset.
    pub fn levi(&self, subset: &[usize]) -> Result<RootDatum, RootDataError> {
        let mut idx: Vec<usize> = subset.to_vec();
        idx.sort_unstable();
        idx.dedup();
        if let Some(&bad) = idx.iter().find(|&&i| i >= self.rank()) {
            return Err(RootDataError::IndexOutOfRange { index: bad, rank: self.rank() });
        }
        Ok(Self::from_parts(
            self.ambient_dim,
            idx.iter().map(|&i| self.simple_roots[i].clone()).collect(),
            idx.iter().map(|&i| self.simple_coroots[i].clone()).collect(),
            Arc::clone(&self.form),
        ))
    }

    /// Reductive subgroup containing T whose roots are the given positive
    /// roots and their negatives; the set must be closed. Its simple roots
    /// are the indecomposable members of the set.
    pub fn subsystem(&self, positive: &[usize]) -> RootDatum {
        let members: Vec<&Root> = positive.iter().map(|&i| &self.positive_roots[i]).collect();
        let set: std::collections::HashSet<&WeightVec> = members.iter().map(|r| &r.vector).collect();
        let simple: Vec<&Root> = members
            .iter()
            .copied()
            .filter(|r| !members.iter().any(|b| b.vector != r.vector && set.contains(&r.vector.sub(&b.vector))))
            .collect();
        Self::from_parts(
            self.ambient_dim,
            simple.iter().map(|r| r.vector.clone()).collect(),
            simple.iter().map(|r| r.coroot.clone()).collect(),
            Arc::clone(&self.form),
        )
    }

    pub fn factors(&self) -> &[SimpleFactor] {
        &self.factors
    }

    pub fn central_rank(&self) -> usize {
        self.central_rank
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Semisimple rank.
    pub fn rank(&self) -> usize {
        self.simple_roots.len()
    }

    pub fn simple_roots(&self) -> &[WeightVec] {
        &self.simple_roots
    }

    pub fn simple_coroots(&self) -> &[Vec<i64>] {
        &self.simple_coroots
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Positive roots sorted by height, then lexicographically.
    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    /// Dimension of the group: ambient rank plus the number of roots.
    pub fn group_dim(&self) -> usize {
        self.ambient_dim + 2 * self.positive_roots.len()
    }

    pub fn weyl_order(&self) -> u128 {
        self.factors.iter().map(|f| cartan::weyl_order(f.letter, f.rank)).product()
    }

    /// Type label such as `A2+A1+T1`; the trivial group is `1`.
    pub fn type_string(&self) -> String {
        let mut parts: Vec<String> = self.factors.iter().map(|f| f.to_string()).collect();
        if self.central_rank > 0 {
            parts.push(format!("T{}", self.central_rank));
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("+")
        }
    }

    pub fn check_dim(&self, w: &[i64]) -> Result<(), RootDataError> {
        if w.len() != self.ambient_dim {
            return Err(RootDataError::DimensionMismatch { expected: self.ambient_dim, found: w.len() });
        }
        Ok(())
    }

    pub fn simple_pairings(&self, w: &[i64]) -> Vec<i64> {
        self.simple_coroots.iter().map(|c| pair(w, c)).collect()
    }

    pub fn is_dominant(&self, w: &[i64]) -> bool {
        self.simple_coroots.iter().all(|c| pair(w, c) >= 0)
    }

    /// `⟨λ, 2ρ^∨⟩`.
    pub fn height(&self, w: &[i64]) -> i64 {
        pair(w, &self.rho2_coroot)
    }

    /// `2ρ` as a weight.
    pub fn rho2(&self) -> WeightVec {
        let mut acc = WeightVec::zeros(self.ambient_dim);
        for r in &self.positive_roots {
            acc = acc.add(&r.vector);
        }
        acc
    }

    /// A strictly dominant weight with trivial stabilizer in W.
    pub fn regular_dominant(&self) -> &WeightVec {
        &self.regular
    }

    /// W-invariant symmetric form, normalized so that
    /// `⟨λ, α^∨⟩ = 2(λ, α)/(α, α)` for every root.
    pub fn inner(&self, a: &[i64], b: &[i64]) -> Rational64 {
        let mut acc = Rational64::zero();
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                if y != 0 && !self.form[i][j].is_zero() {
                    acc += self.form[i][j] * (x * y);
                }
            }
        }
        acc
    }

    pub fn form(&self) -> &Mat<Rational64> {
        &self.form
    }

    /// Coefficients of `w` in the simple roots, if `w` lies in their span.
    pub fn simple_root_coords(&self, w: &[Rational64]) -> Option<RatVec> {
        let r = self.rank();
        if r == 0 {
            return w.iter().all(|x| x.is_zero()).then(Vec::new);
        }
        let a: Mat<Rational64> = (0..self.ambient_dim)
            .map(|k| self.simple_roots.iter().map(|s| Rational64::from_integer(s[k])).collect())
            .collect();
        linalg::solve(&a, w, r)
    }

    pub fn in_root_span(&self, w: &[i64]) -> bool {
        let w: RatVec = w.iter().map(|&x| Rational64::from_integer(x)).collect();
        self.simple_root_coords(&w).is_some()
    }

    /// Indices into `positive_roots` of the roots whose coroot pairs to zero
    /// with every given vector.
    pub fn roots_orthogonal_to(&self, vectors: &[RatVec]) -> Vec<usize> {
        self.positive_roots
            .iter()
            .enumerate()
            .filter(|(_, r)| {
                vectors.iter().all(|v| {
                    v.iter()
                        .zip(&r.coroot)
                        .fold(Rational64::zero(), |acc, (x, &c)| acc + x * c)
                        .is_zero()
                })
            })
            .map(|(i, _)| i)
            .collect()
    }

    pub fn lattice_ops(&self, w: &[i64]) -> Result<LatticeProperties, RootDataError> {
        self.check_dim(w)?;
        let (dominant_rep, to_dominant) = self.to_dominant(w);
        let w0 = self.longest_element();
        Ok(LatticeProperties {
            pairings: self.simple_pairings(w),
            dominant: self.is_dominant(w),
            dominant_rep,
            to_dominant,
            w0_image: w0.apply(w),
            height: self.height(w),
        })
    }

    /// The ambient index of every root vector, including negatives.
    pub fn root_index(&self) -> HashMap<WeightVec, (usize, bool)> {
        let mut m = HashMap::new();
        for (i, r) in self.positive_roots.iter().enumerate() {
            m.insert(r.vector.clone(), (i, true));
            m.insert(r.vector.neg(), (i, false));
        }
        m
    }
}

pub(crate) fn pair(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Gram matrix `A⁻¹D` of the invariant form on fundamental weights, where
/// `D` holds the half squared root lengths (shortest = 1).
fn factor_form(a: &[Vec<i64>]) -> Mat<Rational64> {
    let n = a.len();
    let mut d: Vec<Option<Rational64>> = vec![None; n];
    d[0] = Some(Rational64::one());
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        let di = d[i].unwrap();
        for j in 0..n {
            if j != i && a[i][j] != 0 && d[j].is_none() {
                // a[i][j] d[j] = a[j][i] d[i]
                d[j] = Some(di * Rational64::new(a[j][i], a[i][j]));
                queue.push_back(j);
            }
        }
    }
    let d: Vec<Rational64> = d.into_iter().map(|x| x.expect("connected factor")).collect();
    let min = d.iter().copied().min().unwrap();
    let am: Mat<Rational64> = a
        .iter()
        .map(|row| row.iter().map(|&x| Rational64::from_integer(x)).collect())
        .collect();
    let inv = linalg::inverse(&am).expect("Cartan matrices are invertible");
    inv.iter()
        .map(|row| row.iter().zip(&d).map(|(x, dj)| x * dj / min).collect())
        .collect()
}

/// All positive roots by reflection closure of the simple (root, coroot)
/// pairs.
fn positive_roots(simple: &[WeightVec], coroots: &[Vec<i64>]) -> Vec<Root> {
    let r = simple.len();
    let mut seen: HashMap<WeightVec, usize> = HashMap::new();
    let mut all: Vec<Root> = Vec::new();
    let mut queue = VecDeque::new();
    for i in 0..r {
        let mut coeffs = vec![0; r];
        coeffs[i] = 1;
        let root = Root { vector: simple[i].clone(), coroot: coroots[i].clone(), coeffs, height: 1 };
        seen.insert(root.vector.clone(), all.len());
        queue.push_back(all.len());
        all.push(root);
    }
    while let Some(k) = queue.pop_front() {
        for i in 0..r {
            let beta = &all[k];
            let p = pair(&beta.vector, &coroots[i]);
            if p == 0 {
                continue;
            }
            let q = pair(&simple[i], &beta.coroot);
            let vector = beta.vector.sub(&simple[i].scaled(p));
            if seen.contains_key(&vector) {
                continue;
            }
            let coroot: Vec<i64> = beta.coroot.iter().zip(&coroots[i]).map(|(b, c)| b - q * c).collect();
            let mut coeffs = beta.coeffs.clone();
            coeffs[i] -= p;
            let height = coeffs.iter().sum();
            seen.insert(vector.clone(), all.len());
            queue.push_back(all.len());
            all.push(Root { vector, coroot, coeffs, height });
        }
    }
    let mut pos: Vec<Root> = all.into_iter().filter(|r| r.coeffs.iter().all(|&c| c >= 0)).collect();
    pos.sort_by(|a, b| a.height.cmp(&b.height).then_with(|| a.vector.cmp(&b.vector)));
    pos
}

/// Integer weight pairing positively with every simple coroot.
fn regular_dominant(n: usize, coroots: &[Vec<i64>]) -> WeightVec {
    if coroots.is_empty() {
        return WeightVec::zeros(n);
    }
    let a: Mat<Rational64> = coroots
        .iter()
        .map(|c| c.iter().map(|&x| Rational64::from_integer(x)).collect())
        .collect();
    let ones = vec![Rational64::one(); coroots.len()];
    let x = linalg::solve(&a, &ones, n).expect("simple coroots are independent");
    let l = x.iter().fold(1i64, |acc, q| num_integer::lcm(acc, *q.denom()));
    WeightVec::new(x.iter().map(|q| (q * l).to_integer()).collect())
}
