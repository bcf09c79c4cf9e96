//! The iterated local-structure reduction `(V, G) ⇝ (S, M)` down to a
//! terminal representation, and the invariants read off from it.

mod analysis;
mod little_weyl;

use num_rational::Rational64;
use thiserror::Error;

use crate::budget::Budget;
use crate::classify::{nonterminal_weights, terminal_decomposition, ClassifyError};
use crate::reps::{decompose_weights, RepError, SympRepSpec, WeightMultiset};
use crate::rootdata::subspace::canonical_basis;
use crate::rootdata::{pair, RootDataError, RootDatum};
use crate::weight::{RatVec, WeightVec};

pub use analysis::{
    analyze, centralizer_levi, conjugating_element, isotropy_shape, AnalysisReport, AnalyzeOptions,
    IsotropyShape,
};
pub use little_weyl::{
    basic_degrees, determine_little_weyl, molien_series, reflection_subgroups, LittleWeyl, ReflectionSubgroup,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReduceError {
    #[error("NoNonTerminalWeight: the representation is already terminal")]
    NoNonTerminalWeight,
    #[error("{0} is not a non-terminal highest weight")]
    NotAdmissible(WeightVec),
    #[error("internal consistency defect: {0}")]
    Defect(String),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    RootData(#[from] RootDataError),
    #[error(transparent)]
    Classify(#[from] ClassifyError),
}

impl ReduceError {
    pub fn is_budget(&self) -> bool {
        matches!(
            self,
            ReduceError::Rep(RepError::BudgetExceeded(_))
                | ReduceError::Rep(RepError::DimensionCap { .. })
                | ReduceError::Rep(RepError::RootData(RootDataError::GroupTooLarge { .. }))
                | ReduceError::RootData(RootDataError::GroupTooLarge { .. })
        )
    }
}

#[derive(Clone, Debug)]
pub struct ReductionStep {
    pub chosen_chi: WeightVec,
    /// Positive roots with `⟨χ, α^∨⟩ > 0`.
    pub delta_u: Vec<WeightVec>,
    pub levi: RootDatum,
    pub v_dim: u64,
    pub s_weights: WeightMultiset,
    pub s_summands: Vec<(WeightVec, u64)>,
}

#[derive(Clone, Debug)]
pub struct TerminalData {
    pub terminal_group: RootDatum,
    pub character_pairs: Vec<WeightVec>,
    pub sp_factor_sizes: Vec<usize>,
    /// Reduced row echelon basis of span{χᵢ}.
    pub a_star_basis: Vec<RatVec>,
    pub a_rank: usize,
    pub c: usize,
}

pub fn choose_nonterminal_weight(spec: &SympRepSpec) -> Result<WeightVec, ReduceError> {
    nonterminal_weights(spec).into_iter().next().ok_or(ReduceError::NoNonTerminalWeight)
}

/// One reduction step at the non-terminal highest weight `chi`. Returns the
/// step record and the representation `(S, M)`.
pub fn reduce_step(
    spec: &SympRepSpec,
    chi: &WeightVec,
    budget: &Budget,
) -> Result<(ReductionStep, SympRepSpec), ReduceError> {
    if !nonterminal_weights(spec).contains(chi) {
        return Err(ReduceError::NotAdmissible(chi.clone()));
    }
    let datum = spec.datum();
    let delta_u: Vec<WeightVec> = datum
        .positive_roots()
        .iter()
        .filter(|r| pair(chi, &r.coroot) > 0)
        .map(|r| r.vector.clone())
        .collect();
    let orthogonal: Vec<usize> =
        (0..datum.rank()).filter(|&i| pair(chi, &datum.simple_coroots()[i]) == 0).collect();
    let levi = datum.levi(&orthogonal)?;

    let v = spec.weights(budget.irrep_dim_cap)?;
    let mut s = v.clone();
    for a in &delta_u {
        for w in [chi.sub(a), a.sub(chi)] {
            s.remove(&w, 1).map_err(|w| ReduceError::Defect(format!("weight {w} missing from V")))?;
        }
    }
    if !s.is_negation_stable() {
        return Err(ReduceError::Defect("S weights are not negation-stable".into()));
    }
    debug_assert_eq!(s.total(), v.total() - 2 * delta_u.len() as u64);
    let s_summands = decompose_weights(&levi, &s, budget.irrep_dim_cap)
        .map_err(|e| ReduceError::Defect(format!("S does not decompose under M: {e}")))?;
    let next = SympRepSpec::new(levi.clone(), &s_summands)
        .map_err(|e| ReduceError::Defect(format!("S is not symplectic under M: {e}")))?;
    let step = ReductionStep {
        chosen_chi: chi.clone(),
        delta_u,
        levi,
        v_dim: v.total(),
        s_weights: s,
        s_summands,
    };
    Ok((step, next))
}

/// Reduces until terminal, choosing weights deterministically.
pub fn run_reduction(
    spec: &SympRepSpec,
    budget: &Budget,
) -> Result<(Vec<ReductionStep>, TerminalData), ReduceError> {
    run_reduction_from(spec, None, budget)
}

/// As [`run_reduction`], with an explicit choice of weight at the first step.
pub fn run_reduction_from(
    spec: &SympRepSpec,
    first: Option<&WeightVec>,
    budget: &Budget,
) -> Result<(Vec<ReductionStep>, TerminalData), ReduceError> {
    let mut trace = Vec::new();
    let mut current = spec.clone();
    if let Some(chi) = first {
        let (step, next) = reduce_step(&current, chi, budget)?;
        trace.push(step);
        current = next;
    }
    loop {
        let td = terminal_decomposition(&current);
        if td.terminal {
            let n = current.datum().ambient_dim();
            let chars: Vec<RatVec> = td.character_pairs.iter().map(WeightVec::to_rational).collect();
            let a_star_basis = canonical_basis(&chars, n);
            let a_rank = a_star_basis.len();
            let pairs = td.character_pairs.len();
            return Ok((
                trace,
                TerminalData {
                    terminal_group: current.datum().clone(),
                    character_pairs: td.character_pairs,
                    sp_factor_sizes: td.sp_factor_sizes,
                    a_star_basis,
                    a_rank,
                    c: pairs - a_rank,
                },
            ));
        }
        let chi = td.witness.expect("non-terminal spec has a witness");
        let (step, next) = reduce_step(&current, &chi, budget)?;
        trace.push(step);
        current = next;
    }
}

/// `(rk_s, c_s)`.
pub fn rank_complexity(td: &TerminalData) -> (usize, usize) {
    (td.a_rank, td.c)
}

/// Rational basis as exact ambient vectors.
pub fn basis_to_strings(basis: &[RatVec]) -> Vec<Vec<String>> {
    basis.iter().map(|v| v.iter().map(Rational64::to_string).collect()).collect()
}
