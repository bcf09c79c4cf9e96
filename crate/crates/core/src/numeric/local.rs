//! The local-structure reduction realized on explicit subspaces: the stage
//! chain `V = S₀ ⊇ S₁ ⊇ …`, the triangular solve for φ and the embedding
//! `q(s) = s + φ(s)v₀`, the commutation checks, and the one-dimensional
//! reduction Φ.

use nalgebra::{DMatrix, DVector};
use num_rational::Rational64;
use num_traits::ToPrimitive;

use super::catalog::MatrixRep;
use super::lie::GenKind;
use super::moment::{chevalley_of, matrix_form_on, moment_coords, to_rows};
use super::rank::{highest_in, weight_spaces};
use super::{nullspace, omega, NumericError, Real};
use crate::budget::Budget;
use crate::linalg;
use crate::reduce::{run_reduction, TerminalData};
use crate::reps::WeightMultiset;
use crate::rootdata::{pair, RootDatum};
use crate::weight::WeightVec;

/// One reduction step realized inside V.
#[derive(Clone, Debug)]
pub struct LocalStage<T: Real> {
    /// The group `M_k` acting on `spaces`.
    pub datum: RootDatum,
    /// Orthonormal weight-space bases of `S_k ⊆ V`.
    pub spaces: Vec<(WeightVec, DMatrix<T>)>,
    pub chi: WeightVec,
    pub v0: DVector<T>,
    /// Lowest weight vector of weight `−χ` with `ω(v₀⁻, v₀) = 1`.
    pub v0_minus: DVector<T>,
    /// `Δ_u` in ascending height order.
    pub delta_u: Vec<WeightVec>,
    /// `M_{k+1}`, the Levi centralizing χ.
    pub levi: RootDatum,
    pub next_spaces: Vec<(WeightVec, DMatrix<T>)>,
}

impl<T: Real> LocalStage<T> {
    pub fn next_dim(&self) -> usize {
        self.next_spaces.iter().map(|(_, b)| b.ncols()).sum()
    }

    /// Uniform combination of the next-stage weight spaces.
    pub fn next_basis(&self) -> DMatrix<T> {
        let cols: Vec<DVector<T>> =
            self.next_spaces.iter().flat_map(|(_, b)| b.column_iter().map(|c| c.into_owned())).collect();
        if cols.is_empty() {
            DMatrix::zeros(self.v0.len(), 0)
        } else {
            DMatrix::from_columns(&cols)
        }
    }
}

/// Basis indices of the Lie algebra of a Levi `datum`: the full torus and
/// the root vectors of its roots.
pub(crate) fn levi_indices<T: Real>(rep: &MatrixRep<T>, datum: &RootDatum) -> Vec<usize> {
    let roots: std::collections::HashSet<&WeightVec> = datum.positive_roots().iter().map(|r| &r.vector).collect();
    rep.lie_basis
        .iter()
        .enumerate()
        .filter(|(_, g)| match &g.kind {
            GenKind::Torus(_) => true,
            GenKind::Raising(a) | GenKind::Lowering(a) => roots.contains(a),
        })
        .map(|(i, _)| i)
        .collect()
}

fn op<T: Real>(rep: &MatrixRep<T>, kind: GenKind) -> Result<&DMatrix<T>, NumericError> {
    rep.generator(&kind)
        .map(|g| &g.on_v)
        .ok_or_else(|| NumericError::StageNotRealizable(format!("no generator {kind:?}")))
}

fn space_multiset<T: Real>(spaces: &[(WeightVec, DMatrix<T>)]) -> WeightMultiset {
    spaces.iter().filter(|(_, b)| b.ncols() > 0).map(|(w, b)| (w.clone(), b.ncols() as u64)).collect()
}

/// The realized reduction: its stages, then the terminal group and the
/// terminal stage's weight spaces.
#[derive(Clone, Debug)]
pub struct ReductionChain<T: Real> {
    pub stages: Vec<LocalStage<T>>,
    pub terminal: TerminalData,
    pub terminal_spaces: Vec<(WeightVec, DMatrix<T>)>,
}

/// Realizes every step of the combinatorial reduction of `rep.spec` inside
/// V, following the same choices of non-terminal weights.
pub fn reduction_chain<T: Real>(rep: &MatrixRep<T>, budget: &Budget) -> Result<ReductionChain<T>, NumericError> {
    let (trace, terminal) = run_reduction(&rep.spec, budget).map_err(|e| NumericError::StageNotRealizable(e.to_string()))?;
    let mut spaces = weight_spaces(rep);
    let mut datum = rep.datum().clone();
    let mut stages = Vec::new();
    for step in trace {
        let stage = realize_step(rep, &datum, &spaces, &step.chosen_chi, step.levi.clone())?;
        let got = space_multiset(&stage.next_spaces);
        if got != step.s_weights {
            return Err(NumericError::Degenerate(format!(
                "numeric S at χ = {} has weights differing from the combinatorial S",
                step.chosen_chi
            )));
        }
        spaces = stage.next_spaces.clone();
        datum = step.levi;
        stages.push(stage);
    }
    Ok(ReductionChain { stages, terminal, terminal_spaces: spaces })
}

/// The first reduction stage of `rep`.
pub fn first_stage<T: Real>(rep: &MatrixRep<T>, budget: &Budget) -> Result<LocalStage<T>, NumericError> {
    reduction_chain(rep, budget)?.stages.into_iter().next().ok_or(NumericError::NoReductionAvailable)
}

fn realize_step<T: Real>(
    rep: &MatrixRep<T>,
    datum: &RootDatum,
    spaces: &[(WeightVec, DMatrix<T>)],
    chi: &WeightVec,
    levi: RootDatum,
) -> Result<LocalStage<T>, NumericError> {
    let raising: Vec<&DMatrix<T>> =
        datum.simple_roots().iter().map(|a| op(rep, GenKind::Raising(a.clone()))).collect::<Result<_, _>>()?;
    let lowering: Vec<&DMatrix<T>> =
        datum.simple_roots().iter().map(|a| op(rep, GenKind::Lowering(a.clone()))).collect::<Result<_, _>>()?;
    let hw = highest_in(spaces, &raising);
    let v0: DVector<T> = hw
        .iter()
        .find(|(w, _)| w == chi)
        .map(|(_, b)| b.column(0).into_owned())
        .ok_or_else(|| NumericError::StageNotRealizable(format!("no highest weight vector of weight {chi}")))?;
    let minus = chi.neg();
    let low_space: Vec<(WeightVec, DMatrix<T>)> = spaces.iter().filter(|(w, _)| *w == minus).cloned().collect();
    let low = highest_in(&low_space, &lowering);
    let l = low
        .first()
        .map(|(_, b)| b.clone())
        .ok_or_else(|| NumericError::StageNotRealizable(format!("no lowest weight vector of weight {minus}")))?;
    // The direction in the lowest weight space pairing most strongly with v₀.
    let c = l.transpose() * (&rep.form * &v0);
    let mut u = &l * c;
    let pairing = omega(&rep.form, &u, &v0);
    if pairing.abs() < T::of(1e-10) {
        return Err(NumericError::Degenerate(format!("lowest weight space of {minus} is orthogonal to v₀")));
    }
    u /= pairing;

    let delta_u: Vec<WeightVec> = datum
        .positive_roots()
        .iter()
        .filter(|r| pair(chi, &r.coroot) > 0)
        .map(|r| r.vector.clone())
        .collect();
    let mut constraints: Vec<DVector<T>> = Vec::new();
    for a in &delta_u {
        constraints.push(op(rep, GenKind::Lowering(a.clone()))? * &v0);
        constraints.push(op(rep, GenKind::Raising(a.clone()))? * &u);
    }
    let next_spaces = spaces
        .iter()
        .map(|(w, b)| {
            // rows ω(c, ·) restricted to this weight space
            let rows: Vec<nalgebra::RowDVector<T>> =
                constraints.iter().map(|cv| (cv.transpose() * &rep.form) * b).collect();
            let k = if rows.is_empty() { DMatrix::identity(b.ncols(), b.ncols()) } else { nullspace(&DMatrix::from_rows(&rows)) };
            (w.clone(), b * k)
        })
        .filter(|(_, b)| b.ncols() > 0)
        .collect();
    Ok(LocalStage { datum: datum.clone(), spaces: spaces.to_vec(), chi: chi.clone(), v0, v0_minus: u, delta_u, levi, next_spaces })
}

/// The solve of `ω(ξ₊ξ₋v₀, s) = −½ω(ξ₊s, s)` and its residuals.
#[derive(Clone, Debug)]
pub struct QEmbedding<T: Real> {
    pub q: DVector<T>,
    /// Coefficients of `ξ₋ = Σ c_β f_β`.
    pub phi: Vec<T>,
    /// `[ω(e_α f_β v₀, s)]` in ascending height order.
    pub system: DMatrix<T>,
    /// Largest entry strictly below the diagonal, relative to the diagonal.
    pub triangularity: f64,
    /// Largest deviation of the diagonal from `⟨χ, α^∨⟩ ω(v₀, s)`, relative.
    pub diagonal: f64,
    /// `max |ω(e_α q, q)|`, relative to `‖q‖²`.
    pub sigma_residual: f64,
    /// `max |ω(f_β v₀, q)|`, relative to `‖q‖`.
    pub perp_residual: f64,
}

pub fn phi_solve_q_embed<T: Real>(
    rep: &MatrixRep<T>,
    stage: &LocalStage<T>,
    s: &DVector<T>,
) -> Result<QEmbedding<T>, NumericError> {
    if s.len() != rep.dim {
        return Err(NumericError::DimensionMismatch { expected: rep.dim, found: s.len() });
    }
    let j = &rep.form;
    let v0 = &stage.v0;
    let w_sv0 = omega(j, s, v0);
    let snorm = s.norm().max(T::one());
    if w_sv0.abs() <= T::of(1e-8) * snorm {
        return Err(NumericError::SOutsideDomain(w_sv0.abs().to_f64()));
    }
    let n = stage.delta_u.len();
    let e: Vec<&DMatrix<T>> =
        stage.delta_u.iter().map(|a| op(rep, GenKind::Raising(a.clone()))).collect::<Result<_, _>>()?;
    let f_v0: Vec<DVector<T>> = stage
        .delta_u
        .iter()
        .map(|a| op(rep, GenKind::Lowering(a.clone())).map(|f| f * v0))
        .collect::<Result<_, _>>()?;
    let system = DMatrix::from_fn(n, n, |a, b| omega(j, &(e[a] * &f_v0[b]), s));
    let rhs = DVector::from_iterator(n, (0..n).map(|a| -omega(j, &(e[a] * s), s) * T::of(0.5)));

    let coroots: Vec<i64> = stage
        .delta_u
        .iter()
        .map(|a| {
            let r = stage.datum.positive_roots().iter().find(|r| &r.vector == a).expect("Δ_u ⊆ Δ⁺");
            pair(&stage.chi, &r.coroot)
        })
        .collect();
    let w_v0s = omega(j, v0, s);
    let mut diag_min = f64::INFINITY;
    let (mut lower, mut diag_dev): (f64, f64) = (0.0, 0.0);
    for a in 0..n {
        let d = system[(a, a)].to_f64();
        let expected = coroots[a] as f64 * w_v0s.to_f64();
        diag_min = diag_min.min(d.abs());
        diag_dev = diag_dev.max((d - expected).abs() / expected.abs().max(1e-300));
        for b in 0..a {
            lower = lower.max(system[(a, b)].to_f64().abs() / expected.abs().max(1e-300));
        }
    }
    if n > 0 && diag_min <= 1e-10 * snorm.to_f64() {
        return Err(NumericError::SingularSystem(diag_min));
    }
    let phi = system.clone().lu().solve(&rhs).ok_or(NumericError::SingularSystem(diag_min))?;
    let q = f_v0.iter().zip(phi.iter()).fold(s.clone(), |acc, (fv, &c)| acc + fv * c);
    let qn = q.norm().max(T::one());
    let sigma_residual =
        e.iter().map(|ea| (omega(j, &(*ea * &q), &q) / (qn * qn)).abs().to_f64()).fold(0.0, f64::max);
    let perp_residual = f_v0.iter().map(|fv| (omega(j, fv, &q) / qn).abs().to_f64()).fold(0.0, f64::max);
    Ok(QEmbedding {
        q,
        phi: phi.iter().copied().collect(),
        system,
        triangularity: lower,
        diagonal: diag_dev,
        sigma_residual,
        perp_residual,
    })
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CommuteResiduals {
    /// `‖res(m_V(q(s))) − m_S(s)‖` on the Levi, relative to `‖q‖²`.
    pub restriction: f64,
    /// Difference of characteristic polynomials of `m_V(q(s))` and its
    /// Levi projection, relative.
    pub char_poly: f64,
}

impl CommuteResiduals {
    pub fn max(&self) -> f64 {
        self.restriction.max(self.char_poly)
    }
}

pub fn verify_commute<T: Real>(
    rep: &MatrixRep<T>,
    stage: &LocalStage<T>,
    s: &DVector<T>,
) -> Result<(QEmbedding<T>, CommuteResiduals), NumericError> {
    let emb = phi_solve_q_embed(rep, stage, s)?;
    let q = &emb.q;
    let qn = q.norm().max(T::one());
    let l_idx = levi_indices(rep, &stage.levi);
    let m_idx = levi_indices(rep, &stage.datum);
    let on_q = moment_coords(rep, &l_idx, q);
    let on_s = moment_coords(rep, &l_idx, s);
    let restriction = on_q
        .iter()
        .zip(&on_s)
        .map(|(a, b)| ((*a - *b) / (qn * qn)).abs().to_f64())
        .fold(0.0, f64::max);

    let full = matrix_form_on(rep, &m_idx, &moment_coords(rep, &m_idx, q));
    let proj = matrix_form_on(rep, &l_idx, &on_q);
    let cp_full = chevalley_of(&rep.blocks, &to_rows(&full));
    let cp_proj = chevalley_of(&rep.blocks, &to_rows(&proj));
    let scale = cp_full.iter().chain(&cp_proj).fold(T::one(), |m, x| m.max(x.abs()));
    let char_poly =
        cp_full.iter().zip(&cp_proj).map(|(a, b)| ((*a - *b) / scale).abs().to_f64()).fold(0.0, f64::max);
    Ok((emb, CommuteResiduals { restriction, char_poly }))
}

/// A torus element `ξ` of `datum`'s Lie algebra, central in it, with
/// `χ(ξ) = 1`, as a coweight vector.
pub(crate) fn central_dual(datum: &RootDatum, chi: &WeightVec) -> Result<Vec<Rational64>, NumericError> {
    let n = datum.ambient_dim();
    let mut rows: Vec<Vec<Rational64>> =
        datum.simple_roots().iter().map(|a| a.iter().map(|&x| Rational64::from_integer(x)).collect()).collect();
    let mut rhs = vec![Rational64::from_integer(0); rows.len()];
    rows.push(chi.iter().map(|&x| Rational64::from_integer(x)).collect());
    rhs.push(Rational64::from_integer(1));
    linalg::solve(&rows, &rhs, n)
        .ok_or_else(|| NumericError::DomainError(format!("{chi} is not a nonzero character of {}", datum.type_string())))
}

/// A point `Φ(v, t, y)` with its moment residual.
#[derive(Clone, Debug)]
pub struct PhiPoint<T: Real> {
    pub point: DVector<T>,
    /// `f(v) = ½ω(ξv, v)`; zero when `χ = 0`.
    pub f: T,
    /// `max_ξ |m(Φ)(ξ) − m(v)(ξ) − (t − f(v))χ(ξ)|` over the Lie algebra of
    /// `datum`.
    pub residual: f64,
}

/// `Φ(v, t, y) = v + ((t − f(v))/y) v₀ + y w` with `w = −v₀⁻`, so that
/// `ω(v₀, w) = 1` and the character coordinate of `m(Φ)` is `t`; for
/// `χ = 0`, `Φ(v, t, y) = v + t v₀ + y v₀⁻`. Here `v₀` spans a
/// one-dimensional submodule of character `χ` for `datum`, and `v` is
/// ω-orthogonal to `v₀` and `v₀⁻`.
#[allow(clippy::too_many_arguments)]
pub fn char_reduction_phi<T: Real>(
    rep: &MatrixRep<T>,
    datum: &RootDatum,
    chi: &WeightVec,
    v0: &DVector<T>,
    v0_minus: &DVector<T>,
    t: T,
    y: T,
    v: &DVector<T>,
) -> Result<PhiPoint<T>, NumericError> {
    let idx = levi_indices(rep, datum);
    if chi.is_zero() {
        let point = v + v0 * t + v0_minus * y;
        let a = moment_coords(rep, &idx, &point);
        let b = moment_coords(rep, &idx, v);
        let residual = a.iter().zip(&b).map(|(x, z)| (*x - *z).abs().to_f64()).fold(0.0, f64::max);
        return Ok(PhiPoint { point, f: T::zero(), residual });
    }
    if y == T::zero() {
        return Err(NumericError::DomainError("Φ needs y ≠ 0".into()));
    }
    let xi: Vec<f64> = central_dual(datum, chi)?.iter().map(|q| q.to_f64().expect("finite")).collect();
    let f = omega(&rep.form, &(rep.torus_action(&xi) * v), v) * T::of(0.5);
    let point = v + v0 * ((t - f) / y) - v0_minus * y;
    let mv = moment_coords(rep, &idx, v);
    let mp = moment_coords(rep, &idx, &point);
    let mut residual: f64 = 0.0;
    for ((&i, a), b) in idx.iter().zip(&mp).zip(&mv) {
        let chi_xi = match rep.lie_basis[i].kind {
            GenKind::Torus(k) => T::of(chi[k] as f64),
            _ => T::zero(),
        };
        residual = residual.max((*a - *b - (t - f) * chi_xi).abs().to_f64());
    }
    Ok(PhiPoint { point, f, residual })
}
