//! Sections of the invariant moment map: the exact torus section and the
//! recursive section `σ: 𝔞* → V` assembled along the reduction chain.

use nalgebra::{DMatrix, DVector};
use num_rational::Rational64;
use num_traits::{One, ToPrimitive, Zero};

use super::catalog::MatrixRep;
use super::local::{phi_solve_q_embed, reduction_chain, LocalStage};
use super::moment::{chevalley_image, inv_moment_eval};
use super::sample::Sampler;
use super::{nullspace, NumericError, Real};
use crate::budget::Budget;
use crate::linalg;
use crate::reps::{Pairing, SympRepSpec};
use crate::weight::{RatVec, WeightVec};

/// Which coordinate of a critical pair is pinned to 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Side {
    #[default]
    X,
    Y,
}

/// A section of `m(x, y) = Σ xᵢyᵢχᵢ` over the span of the χᵢ, exact over ℚ.
#[derive(Clone, Debug, PartialEq)]
pub struct TorusSection {
    pub characters: Vec<WeightVec>,
    /// χᵢ is critical iff dropping it lowers the rank of the span.
    pub critical: Vec<bool>,
    /// Indices carrying a nonzero pair: the critical characters followed by
    /// a greedy completion to a basis of the span.
    pub support: Vec<usize>,
    pub side: Side,
}

fn rat(w: &WeightVec) -> RatVec {
    w.iter().map(|&x| Rational64::from_integer(x)).collect()
}

fn span_rank(vectors: &[RatVec], n: usize) -> usize {
    if vectors.is_empty() {
        0
    } else {
        linalg::rank(vectors, n)
    }
}

/// Coefficients of `a` over the independent `vectors`, if `a` lies in their span.
fn coefficients(vectors: &[RatVec], a: &[Rational64], n: usize) -> Option<Vec<Rational64>> {
    if vectors.is_empty() {
        return a.iter().all(Zero::is_zero).then(Vec::new);
    }
    let rows: Vec<Vec<Rational64>> = (0..n).map(|k| vectors.iter().map(|v| v[k]).collect()).collect();
    linalg::solve(&rows, a, vectors.len())
}

impl TorusSection {
    pub fn new(characters: Vec<WeightVec>, side: Side) -> Self {
        let n = characters.first().map_or(0, |c| c.len());
        let all: Vec<RatVec> = characters.iter().map(rat).collect();
        let full = span_rank(&all, n);
        let critical: Vec<bool> = (0..characters.len())
            .map(|i| {
                !characters[i].is_zero() && {
                    let rest: Vec<RatVec> = all.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, v)| v.clone()).collect();
                    span_rank(&rest, n) < full
                }
            })
            .collect();
        let mut support: Vec<usize> = (0..characters.len()).filter(|&i| critical[i]).collect();
        for i in 0..characters.len() {
            if critical[i] || characters[i].is_zero() {
                continue;
            }
            let mut trial: Vec<RatVec> = support.iter().map(|&j| all[j].clone()).collect();
            trial.push(all[i].clone());
            if span_rank(&trial, n) == trial.len() {
                support.push(i);
            }
        }
        TorusSection { characters, critical, support, side }
    }

    pub fn ambient_dim(&self) -> usize {
        self.characters.first().map_or(0, |c| c.len())
    }

    /// `σ(a)` as pairs `(xᵢ, yᵢ)`.
    pub fn eval(&self, a: &[Rational64]) -> Result<Vec<(Rational64, Rational64)>, NumericError> {
        let n = self.ambient_dim();
        if self.characters.is_empty() {
            return if a.iter().all(Zero::is_zero) {
                Ok(Vec::new())
            } else {
                Err(NumericError::DomainError("nonzero functional on a representation without characters".into()))
            };
        }
        if a.len() != n {
            return Err(NumericError::DimensionMismatch { expected: n, found: a.len() });
        }
        let vectors: Vec<RatVec> = self.support.iter().map(|&i| rat(&self.characters[i])).collect();
        let c = coefficients(&vectors, a, n)
            .ok_or_else(|| NumericError::DomainError("functional outside the span of the characters".into()))?;
        let zero = Rational64::zero();
        let one = Rational64::one();
        let mut point = vec![(zero, zero); self.characters.len()];
        for (&i, &ci) in self.support.iter().zip(&c) {
            point[i] = match (self.critical[i], self.side) {
                (true, Side::Y) => (ci, one),
                _ => (one, ci),
            };
        }
        Ok(point)
    }

    /// `Σ xᵢyᵢχᵢ`.
    pub fn moment(&self, point: &[(Rational64, Rational64)]) -> RatVec {
        let mut out = vec![Rational64::zero(); self.ambient_dim()];
        for (chi, &(x, y)) in self.characters.iter().zip(point) {
            for (o, &c) in out.iter_mut().zip(chi.iter()) {
                *o += x * y * Rational64::from_integer(c);
            }
        }
        out
    }
}

/// The torus section of a representation of a torus, one pair per copy of
/// `C_χ ⊕ C_{−χ}` in pairing-plan order (the coordinate order of the
/// matrix model).
pub fn torus_section(spec: &SympRepSpec, side: Side) -> Result<TorusSection, NumericError> {
    if spec.datum().rank() > 0 {
        return Err(NumericError::NotSupported(format!("{} is not a torus", spec.datum().type_string())));
    }
    let mut chars = Vec::new();
    for p in spec.pairing_plan() {
        match p {
            Pairing::Cotangent { weight, copies, .. } => {
                chars.extend(std::iter::repeat_n(weight.clone(), *copies as usize));
            }
            Pairing::SelfPaired { weight, .. } => return Err(NumericError::NoSymplecticForm(weight.to_string())),
        }
    }
    if chars.is_empty() {
        chars.push(WeightVec::zeros(spec.datum().ambient_dim()));
    }
    Ok(TorusSection::new(chars, side))
}

/// A section `σ: 𝔞* → V` built along the realized reduction chain.
#[derive(Clone, Debug)]
pub struct Section<T: Real> {
    stages: Vec<LocalStage<T>>,
    /// Darboux pairs `(x, y)` with `ω(x, y) = 1`, one per native character.
    native: Vec<(DVector<T>, DVector<T>)>,
    torus: TorusSection,
    /// Independent vectors decomposing `a`: a basis of the native span,
    /// then the stage characters that are new, latest stage first.
    pivots: Vec<RatVec>,
    /// For each stage, its index in `pivots`.
    stage_pivot: Vec<Option<usize>>,
    pub a_star_basis: Vec<RatVec>,
    dim: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SectionCheck {
    pub samples: usize,
    pub stages: usize,
    /// Largest relative Chevalley residual over the samples.
    pub max_residual: f64,
    /// Residual at `a = 0`; `σ(0)` then lies in the zero fiber.
    pub zero_fiber_residual: f64,
    pub seed: u64,
}

impl<T: Real> Section<T> {
    pub fn eval(&self, rep: &MatrixRep<T>, a: &[Rational64]) -> Result<DVector<T>, NumericError> {
        let n = rep.datum().ambient_dim();
        if a.len() != n {
            return Err(NumericError::DimensionMismatch { expected: n, found: a.len() });
        }
        let coef = coefficients(&self.pivots, a, n)
            .ok_or_else(|| NumericError::DomainError("functional outside 𝔞*".into()))?;
        let stage_c: Vec<Rational64> =
            self.stage_pivot.iter().map(|p| p.map_or(Rational64::zero(), |i| coef[i])).collect();
        let mut beta: RatVec = a.to_vec();
        for (stage, c) in self.stages.iter().zip(&stage_c) {
            for (b, &x) in beta.iter_mut().zip(stage.chi.iter()) {
                *b -= c * Rational64::from_integer(x);
            }
        }
        let f = |q: Rational64| T::of(q.to_f64().expect("finite rational"));
        let mut u = DVector::zeros(self.dim);
        if !self.native.is_empty() {
            let pairs = self.torus.eval(&beta)?;
            for ((x, y), (px, py)) in self.native.iter().zip(pairs) {
                u += x * f(px) + y * f(py);
            }
        } else if beta.iter().any(|b| !b.is_zero()) {
            return Err(NumericError::DomainError("functional outside 𝔞*".into()));
        }
        for (stage, c) in self.stages.iter().zip(&stage_c).rev() {
            // Φ(u, c + f(u), 1) = u + c·v₀ − v₀⁻
            let phi = &u + &stage.v0 * f(*c) - &stage.v0_minus;
            u = phi_solve_q_embed(rep, stage, &phi)?.q;
        }
        Ok(u)
    }

    /// `max |m//G(σ(a)) − image of a|`, relative to the size of the image.
    pub fn residual(&self, rep: &MatrixRep<T>, a: &[Rational64]) -> Result<f64, NumericError> {
        let v = self.eval(rep, a)?;
        let got = inv_moment_eval(rep, &v)?;
        let want: Vec<T> = chevalley_image(rep, a);
        let scale = want.iter().fold(1.0_f64, |m, x| m.max(x.to_f64().abs()));
        Ok(got.iter().zip(&want).map(|(g, w)| (*g - *w).to_f64().abs()).fold(0.0, f64::max) / scale)
    }
}

/// Builds σ for `rep` and checks it at `a = 0` and at `samples` rational
/// points of 𝔞*.
pub fn build_section<T: Real>(
    rep: &MatrixRep<T>,
    budget: &Budget,
    samples: usize,
    seed: u64,
) -> Result<(Section<T>, SectionCheck), NumericError> {
    let chain = reduction_chain(rep, budget)?;
    let n = rep.datum().ambient_dim();
    let j = &rep.form;

    let step_vectors: Vec<&DVector<T>> = chain.stages.iter().flat_map(|s| [&s.v0, &s.v0_minus]).collect();
    let term = &chain.terminal.terminal_group;
    let native_spaces: Vec<(WeightVec, DMatrix<T>)> = chain
        .terminal_spaces
        .iter()
        .filter(|(w, _)| !w.is_zero() && term.simple_pairings(w).iter().all(|&p| p == 0))
        .map(|(w, b)| {
            let rows: Vec<nalgebra::RowDVector<T>> = step_vectors.iter().map(|s| (s.transpose() * j) * b).collect();
            let k = if rows.is_empty() { DMatrix::identity(b.ncols(), b.ncols()) } else { nullspace(&DMatrix::from_rows(&rows)) };
            (w.clone(), b * k)
        })
        .filter(|(_, b)| b.ncols() > 0)
        .collect();
    let mut native = Vec::new();
    let mut native_chars = Vec::new();
    for (w, x) in &native_spaces {
        let neg = w.neg();
        if *w < neg {
            continue;
        }
        let y = native_spaces
            .iter()
            .find(|(v, _)| *v == neg)
            .map(|(_, b)| b)
            .ok_or_else(|| NumericError::Degenerate(format!("native character {w} has no dual partner")))?;
        if y.ncols() != x.ncols() {
            return Err(NumericError::Degenerate(format!("native spaces of ±{w} differ in dimension")));
        }
        let m = x.transpose() * j * y;
        let minv = m.try_inverse().ok_or_else(|| NumericError::Degenerate(format!("ω degenerates on ±{w}")))?;
        let yd = y * minv;
        for c in 0..x.ncols() {
            native.push((x.column(c).into_owned(), yd.column(c).into_owned()));
            native_chars.push(w.clone());
        }
    }
    let torus = TorusSection::new(native_chars.clone(), Side::X);

    let mut pivots: Vec<RatVec> = Vec::new();
    for c in torus.support.iter().map(|&i| rat(&native_chars[i])) {
        pivots.push(c);
    }
    let mut stage_pivot = vec![None; chain.stages.len()];
    for (k, stage) in chain.stages.iter().enumerate().rev() {
        let mut trial = pivots.clone();
        trial.push(rat(&stage.chi));
        if span_rank(&trial, n) == trial.len() {
            stage_pivot[k] = Some(pivots.len());
            pivots = trial;
        }
    }
    let section = Section {
        stages: chain.stages,
        native,
        torus,
        pivots,
        stage_pivot,
        a_star_basis: chain.terminal.a_star_basis.clone(),
        dim: rep.dim,
    };

    let zero = vec![Rational64::zero(); n];
    let zero_fiber_residual = section.residual(rep, &zero)?;
    let mut sampler = Sampler::new(seed);
    let mut max_residual = zero_fiber_residual;
    for _ in 0..samples {
        let mut a = zero.clone();
        for b in &section.a_star_basis {
            let r = sampler.rational();
            for (x, &y) in a.iter_mut().zip(b) {
                *x += r * y;
            }
        }
        max_residual = max_residual.max(section.residual(rep, &a)?);
    }
    let check = SectionCheck { samples, stages: section.stages.len(), max_residual, zero_fiber_residual, seed };
    Ok((section, check))
}
