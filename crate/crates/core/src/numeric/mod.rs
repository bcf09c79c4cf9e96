//! Explicit matrix models for a catalog of classical representations and
//! floating-point checks of the moment-map constructions: the local-structure
//! embedding q, sections of the invariant moment map, coisotropy, and
//! rank/complexity estimates.
//!
//! Only simple factors of types A and C (plus central tori) have matrix
//! models; other factors report [`NumericError::NotSupported`].

mod catalog;
mod lie;
mod local;
mod moment;
mod poisson;
mod rank;
mod rho;
mod sample;
mod section;

use nalgebra::{DMatrix, RealField};
use thiserror::Error;

use crate::reps::RepError;
use crate::rootdata::RootDataError;
use crate::scalar::Scalar;

pub use catalog::{build_rep, catalog_suite, CatalogEntry, InvariantResiduals, MatrixRep};
pub use lie::{GenKind, LieGenerator};
pub use local::{
    char_reduction_phi, first_stage, phi_solve_q_embed, reduction_chain, verify_commute, CommuteResiduals, LocalStage,
    PhiPoint, QEmbedding, ReductionChain,
};
pub use moment::{chevalley_image, inv_moment_eval, moment_eval, ChevalleyCoords, MomentValue};
pub use poisson::{poisson_bracket, ChevalleyPullback, FiniteDifference, LinearCoordinate, Observable, Product};
pub use rank::{coisotropy_test, find_hw_vectors, jacobian_rank_and_orbit, RankEstimate};
pub use rho::{rho_conditions_hold, rho_psg, RhoCoweight};
pub use sample::Sampler;
pub use section::{build_section, torus_section, Section, SectionCheck, Side, TorusSection};

/// Floating-point scalar for the matrix models.
pub trait Real: RealField + Copy + Scalar {
    fn of(x: f64) -> Self;
    fn to_f64(self) -> f64;
}

impl Real for f64 {
    fn of(x: f64) -> Self {
        x
    }
    fn to_f64(self) -> f64 {
        self
    }
}

impl Real for f32 {
    fn of(x: f64) -> Self {
        x as f32
    }
    fn to_f64(self) -> f64 {
        f64::from(self)
    }
}

/// Relative singular-value threshold for numerical ranks and containments.
pub const RANK_TOL: f64 = 1e-8;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum NumericError {
    #[error("NotSupported: {0}")]
    NotSupported(String),
    #[error("dimension {dim} exceeds the matrix-model cap {cap}")]
    CapExceeded { dim: usize, cap: usize },
    #[error("no invariant symplectic form on the summand with highest weight {0}")]
    NoSymplecticForm(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("NoReductionAvailable: the representation is terminal")]
    NoReductionAvailable,
    #[error("SOutsideDomain: |ω(s, v₀)| = {0:e} is below tolerance")]
    SOutsideDomain(f64),
    #[error("SingularSystem: diagonal entry {0:e} of the triangular system degenerates")]
    SingularSystem(f64),
    #[error("DomainError: {0}")]
    DomainError(String),
    #[error("StageNotRealizable: {0}")]
    StageNotRealizable(String),
    #[error("numerical degeneracy: {0}")]
    Degenerate(String),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    RootData(#[from] RootDataError),
}

/// `ω(u, v) = uᵀ J v`.
pub(crate) fn omega<T: Real>(j: &DMatrix<T>, u: &nalgebra::DVector<T>, v: &nalgebra::DVector<T>) -> T {
    u.dot(&(j * v))
}

/// Thin SVD `a = U Σ Vᵀ` with U and Vᵀ always present.
#[derive(Clone, Debug)]
pub struct CheckedSvd<T: Real> {
    pub u: DMatrix<T>,
    pub singular_values: nalgebra::DVector<T>,
    pub v_t: DMatrix<T>,
}

/// SVD whose reconstruction is checked. nalgebra's bidiagonalizing SVD can
/// return a factorization off by a few percent on nearly rank-one inputs;
/// the transposed problem is then solved instead, and the better of the two
/// factorizations is kept.
pub fn checked_svd<T: Real>(a: &DMatrix<T>) -> CheckedSvd<T> {
    let direct = {
        let s = a.clone().svd(true, true);
        CheckedSvd { u: s.u.expect("requested U"), singular_values: s.singular_values, v_t: s.v_t.expect("requested V^T") }
    };
    let scale = a.norm().max(T::one());
    let tol = T::default_epsilon() * T::of(1e4 * (a.nrows() + a.ncols()) as f64) * scale;
    let residual = |s: &CheckedSvd<T>| {
        let sigma = DMatrix::from_diagonal(&s.singular_values);
        (&s.u * sigma * &s.v_t - a).norm()
    };
    let r_direct = residual(&direct);
    if r_direct <= tol {
        return direct;
    }
    let t = a.transpose().svd(true, true);
    let flipped = CheckedSvd {
        u: t.v_t.expect("requested V^T").transpose(),
        singular_values: t.singular_values,
        v_t: t.u.expect("requested U").transpose(),
    };
    if residual(&flipped) < r_direct {
        flipped
    } else {
        direct
    }
}

/// Columns spanning the nullspace of `a`, by SVD with relative threshold.
pub(crate) fn nullspace<T: Real>(a: &DMatrix<T>) -> DMatrix<T> {
    let n = a.ncols();
    if a.nrows() == 0 {
        return DMatrix::identity(n, n);
    }
    // Pad to at least n rows so that V from the SVD is n×n.
    let padded = if a.nrows() < n {
        let mut p = DMatrix::zeros(n, n);
        p.rows_mut(0, a.nrows()).copy_from(a);
        p
    } else {
        a.clone()
    };
    let svd = checked_svd(&padded);
    let vt = svd.v_t;
    let smax = svd.singular_values.iter().fold(T::zero(), |m, &s| m.max(s));
    let tol = T::of(RANK_TOL) * smax.max(T::one());
    let keep: Vec<usize> = (0..n).filter(|&i| svd.singular_values[i] <= tol).collect();
    let mut out = DMatrix::zeros(n, keep.len());
    for (c, &i) in keep.iter().enumerate() {
        out.set_column(c, &vt.row(i).transpose());
    }
    out
}

/// Numerical rank with singular values compared against the largest.
pub(crate) fn numerical_rank<T: Real>(a: &DMatrix<T>) -> usize {
    if a.nrows() == 0 || a.ncols() == 0 {
        return 0;
    }
    let s = checked_svd(a).singular_values;
    let smax = s.iter().fold(T::zero(), |m, &x| m.max(x));
    if smax <= T::of(1e-14) {
        return 0;
    }
    s.iter().filter(|&&x| x > T::of(RANK_TOL) * smax).count()
}

/// Orthonormal basis of the column space.
pub(crate) fn column_basis<T: Real>(a: &DMatrix<T>) -> DMatrix<T> {
    if a.ncols() == 0 {
        return DMatrix::zeros(a.nrows(), 0);
    }
    let svd = checked_svd(a);
    let u = svd.u;
    let smax = svd.singular_values.iter().fold(T::zero(), |m, &x| m.max(x));
    let keep: Vec<usize> = (0..svd.singular_values.len())
        .filter(|&i| smax > T::of(1e-14) && svd.singular_values[i] > T::of(RANK_TOL) * smax)
        .collect();
    let mut out = DMatrix::zeros(a.nrows(), keep.len());
    for (c, &i) in keep.iter().enumerate() {
        out.set_column(c, &u.column(i));
    }
    out
}

pub(crate) fn commutator<T: Real>(a: &DMatrix<T>, b: &DMatrix<T>) -> DMatrix<T> {
    a * b - b * a
}
