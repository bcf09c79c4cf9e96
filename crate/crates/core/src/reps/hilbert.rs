//! Dimensions of invariants in symmetric powers.

use std::collections::BTreeMap;

use super::{RepError, SympRepSpec, WeightMultiset};
use crate::budget::Budget;
use crate::rootdata::RootDatum;
use crate::weight::WeightVec;

/// Weight multisets of `SᵈV`, extended one degree at a time with Newton's
/// identity `d·h_d = Σ_{k=1}^{d} p_k h_{d−k}`, where `p_k` is the multiset of
/// k-fold weights.
#[derive(Clone, Debug)]
pub struct SymmetricPowers {
    base: Vec<(WeightVec, u64)>,
    powers: Vec<BTreeMap<WeightVec, u128>>,
}

impl SymmetricPowers {
    pub fn new(v: &WeightMultiset) -> Self {
        let dim = v.iter().next().map_or(0, |(w, _)| w.len());
        SymmetricPowers {
            base: v.iter().map(|(w, k)| (w.clone(), k)).collect(),
            powers: vec![BTreeMap::from([(WeightVec::zeros(dim), 1)])],
        }
    }

    pub fn degree(&self) -> usize {
        self.powers.len() - 1
    }

    pub fn extend_to(&mut self, max_degree: usize) {
        while self.degree() < max_degree {
            let d = self.powers.len();
            let mut acc: BTreeMap<WeightVec, i128> = BTreeMap::new();
            for k in 1..=d {
                for (mu, c) in &self.powers[d - k] {
                    for (w, m) in &self.base {
                        let key = mu.add(&w.scaled(k as i64));
                        *acc.entry(key).or_insert(0) += (*c as i128) * (*m as i128);
                    }
                }
            }
            let next = acc
                .into_iter()
                .map(|(w, c)| {
                    debug_assert_eq!(c % d as i128, 0);
                    (w, (c / d as i128) as u128)
                })
                .filter(|(_, c)| *c > 0)
                .collect();
            self.powers.push(next);
        }
    }

    /// Multiplicity of `w` in `SᵈV`.
    pub fn multiplicity(&self, d: usize, w: &WeightVec) -> u128 {
        self.powers[d].get(w).copied().unwrap_or(0)
    }
}

/// `dim (SᵈV)^G` for `d = 0..=max_degree` via the Weyl alternation
/// `Σ_w (−1)^ℓ(w) m(ρ − wρ)`.
pub fn invariant_dims(
    spec: &SympRepSpec,
    max_degree: usize,
    budget: &Budget,
) -> Result<Vec<u64>, RepError> {
    let dim = spec.dim()?;
    check_budget(dim, max_degree, budget)?;
    let v = spec.weights(budget.irrep_dim_cap)?;
    let mut powers = SymmetricPowers::new(&v);
    invariant_dims_with(spec.datum(), &mut powers, max_degree, budget)
}

pub(crate) fn check_budget(dim: u64, max_degree: usize, budget: &Budget) -> Result<(), RepError> {
    if dim > budget.sym_dim_cap as u64 {
        return Err(RepError::BudgetExceeded(format!(
            "symmetric powers need dim V ≤ {}, got {dim}",
            budget.sym_dim_cap
        )));
    }
    if max_degree > budget.sym_degree_cap {
        return Err(RepError::BudgetExceeded(format!(
            "symmetric powers need degree ≤ {}, got {max_degree}",
            budget.sym_degree_cap
        )));
    }
    Ok(())
}

/// As [`invariant_dims`], reusing previously computed symmetric powers.
pub fn invariant_dims_with(
    datum: &RootDatum,
    powers: &mut SymmetricPowers,
    max_degree: usize,
    budget: &Budget,
) -> Result<Vec<u64>, RepError> {
    powers.extend_to(max_degree);
    let rho2 = datum.rho2();
    // ρ − wρ = (2ρ − w·2ρ)/2 lies in the root lattice.
    let shifts: Vec<(i64, WeightVec)> = datum
        .enumerate_weyl(budget.weyl_cap)?
        .iter()
        .map(|w| {
            let diff = rho2.sub(&w.apply(&rho2));
            (w.sign(), WeightVec::new(diff.iter().map(|x| x / 2).collect()))
        })
        .collect();
    Ok((0..=max_degree)
        .map(|d| {
            let n: i128 = shifts
                .iter()
                .map(|(s, shift)| *s as i128 * powers.multiplicity(d, shift) as i128)
                .sum();
            debug_assert!(n >= 0);
            n as u64
        })
        .collect())
}
