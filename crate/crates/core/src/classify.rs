//! Singular weights, terminal weights and terminal representations.

use thiserror::Error;

use crate::reps::{duality_class, weyl_dimension, DualityClass, SympRepSpec};
use crate::rootdata::{Letter, RootDatum};
use crate::weight::WeightVec;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("{0} is not a highest weight of the representation")]
    NotASummand(WeightVec),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WeightStatus {
    /// Pairs to zero with every coroot.
    Character,
    /// Singular weight occurring with the given multiplicity (always 1).
    Singular(u64),
    NonTerminal,
}

/// Simple-root index of the first node of a C-type factor (C₁ = A₁), for
/// every factor of that shape.
fn c_type_first_nodes(datum: &RootDatum) -> Vec<(usize, usize)> {
    datum
        .factors()
        .iter()
        .enumerate()
        .filter_map(|(k, f)| match (f.letter, f.rank) {
            (Letter::A, 1) | (Letter::C, _) => Some((k, f.nodes[0])),
            // B2 ≅ C2; the short node carries the first fundamental weight.
            (Letter::B, 2) => Some((k, f.nodes[1])),
            _ => None,
        })
        .collect()
}

/// Index of the factor whose first fundamental weight is `chi`, if `chi`
/// is singular: it pairs to 1 with that node, to 0 with all other simple
/// coroots, and vanishes on the centre.
pub fn is_singular_weight(datum: &RootDatum, chi: &[i64]) -> Option<usize> {
    let pairings = datum.simple_pairings(chi);
    let (factor, _) = c_type_first_nodes(datum).into_iter().find(|&(_, node)| {
        pairings[node] == 1 && pairings.iter().enumerate().all(|(i, &p)| i == node || p == 0)
    })?;
    datum.in_root_span(chi).then_some(factor)
}

pub fn weight_status(spec: &SympRepSpec, chi: &WeightVec) -> Result<WeightStatus, ClassifyError> {
    let mult = spec.mult(chi);
    if mult == 0 {
        return Err(ClassifyError::NotASummand(chi.clone()));
    }
    let datum = spec.datum();
    Ok(if datum.simple_pairings(chi).iter().all(|&p| p == 0) {
        WeightStatus::Character
    } else if mult == 1 && is_singular_weight(datum, chi).is_some() {
        WeightStatus::Singular(mult)
    } else {
        WeightStatus::NonTerminal
    })
}

/// Non-terminal highest weights, ordered by decreasing `⟨·, 2ρ^∨⟩` with
/// lexicographically larger weights first on ties.
pub fn nonterminal_weights(spec: &SympRepSpec) -> Vec<WeightVec> {
    let datum = spec.datum();
    let mut out: Vec<WeightVec> = spec
        .summands()
        .iter()
        .filter(|s| weight_status(spec, &s.highest_weight) == Ok(WeightStatus::NonTerminal))
        .map(|s| s.highest_weight.clone())
        .collect();
    out.sort_by(|a, b| datum.height(b).cmp(&datum.height(a)).then_with(|| b.cmp(a)));
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TerminalDecomposition {
    pub terminal: bool,
    pub witness: Option<WeightVec>,
    /// One χᵢ per pair `C_{χᵢ} ⊕ C_{−χᵢ}`, listed with repetition.
    pub character_pairs: Vec<WeightVec>,
    /// mᵢ with `2mᵢ` the dimension of each singular summand.
    pub sp_factor_sizes: Vec<usize>,
}

pub fn terminal_decomposition(spec: &SympRepSpec) -> TerminalDecomposition {
    let witness = nonterminal_weights(spec).into_iter().next();
    if witness.is_some() {
        return TerminalDecomposition {
            terminal: false,
            witness,
            character_pairs: Vec::new(),
            sp_factor_sizes: Vec::new(),
        };
    }
    let mut character_pairs = Vec::new();
    let mut sp_factor_sizes = Vec::new();
    for s in spec.summands() {
        let w = &s.highest_weight;
        match weight_status(spec, w).expect("summand") {
            WeightStatus::Character => {
                let neg = w.neg();
                if w.is_zero() {
                    character_pairs.extend(std::iter::repeat_n(w.clone(), (s.mult / 2) as usize));
                } else if *w > neg {
                    character_pairs.extend(std::iter::repeat_n(w.clone(), s.mult as usize));
                }
            }
            WeightStatus::Singular(_) => {
                sp_factor_sizes.push((weyl_dimension(spec.datum(), w) / 2) as usize);
            }
            WeightStatus::NonTerminal => unreachable!("no non-terminal weights remain"),
        }
    }
    TerminalDecomposition { terminal: true, witness: None, character_pairs, sp_factor_sizes }
}

/// Which arithmetic conditions of the 2χ criterion hold for a dominant χ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lemma2ChiReport {
    /// χ is the highest weight of a symplectic-type module, the hypothesis
    /// under which the conditions imply singularity.
    pub symplectic_type: bool,
    pub chi_is_root: bool,
    /// (i) `2χ ∈ Δ⁺`.
    pub two_chi_root: bool,
    /// (ii) `2χ = 2α − β`, first witness as positive-root indices.
    pub two_alpha_minus_beta: Option<(usize, usize)>,
    /// (iii) `2χ = α + β`, first witness as positive-root indices.
    pub alpha_plus_beta: Option<(usize, usize)>,
    pub singular: bool,
}

impl Lemma2ChiReport {
    pub fn any_condition(&self) -> bool {
        self.two_chi_root || self.two_alpha_minus_beta.is_some() || self.alpha_plus_beta.is_some()
    }

    /// Under the symplectic hypothesis: χ ∉ Δ⁺, and any condition forces
    /// singularity.
    pub fn consistent(&self) -> bool {
        !self.symplectic_type || (!self.chi_is_root && (!self.any_condition() || self.singular))
    }
}

pub fn lemma2chi_conditions(datum: &RootDatum, chi: &[i64]) -> Lemma2ChiReport {
    let roots = datum.positive_roots();
    let two_chi = WeightVec::new(chi.iter().map(|x| 2 * x).collect());
    let chi_is_root = roots.iter().any(|r| r.vector.coords() == chi);
    let two_chi_root = roots.iter().any(|r| r.vector == two_chi);
    let mut minus = None;
    let mut plus = None;
    for (i, a) in roots.iter().enumerate() {
        for (j, b) in roots.iter().enumerate() {
            if minus.is_none() && a.vector.scaled(2).sub(&b.vector) == two_chi {
                minus = Some((i, j));
            }
            if plus.is_none() && a.vector.add(&b.vector) == two_chi {
                plus = Some((i, j));
            }
        }
    }
    Lemma2ChiReport {
        symplectic_type: duality_class(datum, chi) == DualityClass::SymplecticType,
        chi_is_root,
        two_chi_root,
        two_alpha_minus_beta: minus,
        alpha_plus_beta: plus,
        singular: is_singular_weight(datum, chi).is_some(),
    }
}
