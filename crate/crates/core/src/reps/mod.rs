//! Representations as highest-weight data and weight multisets.

mod decompose;
mod freudenthal;
mod hilbert;

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::rootdata::{RootDataError, RootDatum};
use crate::weight::WeightVec;

pub use decompose::decompose_weights;
pub use freudenthal::{freudenthal_multiplicities, weyl_dimension};
pub use hilbert::{invariant_dims, SymmetricPowers};

pub(crate) mod hilbert_support {
    pub(crate) use super::hilbert::{check_budget, invariant_dims_with};
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RepError {
    #[error("highest weight {0} is not dominant")]
    NotDominant(WeightVec),
    #[error("summand {0} has multiplicity zero")]
    ZeroMultiplicity(WeightVec),
    #[error("NotSelfDual: {0} and its dual occur with different multiplicities")]
    NotSelfDual(WeightVec),
    #[error("OddOrthogonalMultiplicity: orthogonal-type weight {0} has odd multiplicity")]
    OddOrthogonalMultiplicity(WeightVec),
    #[error("irreducible module {weight} has dimension {dim}, above the cap {cap}")]
    DimensionCap { weight: WeightVec, dim: u64, cap: u64 },
    #[error("NotACharacter: multiset is not a character (remainder negative at {0})")]
    NotACharacter(WeightVec),
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error(transparent)]
    RootData(#[from] RootDataError),
}

/// Multiset of weights; iteration order is the lexicographic order of the
/// weights.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct WeightMultiset(BTreeMap<WeightVec, u64>);

impl WeightMultiset {
    pub fn new() -> Self {
        WeightMultiset(BTreeMap::new())
    }

    pub fn insert(&mut self, w: WeightVec, k: u64) {
        if k > 0 {
            *self.0.entry(w).or_insert(0) += k;
        }
    }

    /// Removes `k` copies of `w`; fails without modification if fewer are
    /// present.
    pub fn remove(&mut self, w: &WeightVec, k: u64) -> Result<(), WeightVec> {
        match self.0.get_mut(w) {
            Some(c) if *c >= k => {
                *c -= k;
                if *c == 0 {
                    self.0.remove(w);
                }
                Ok(())
            }
            _ if k == 0 => Ok(()),
            _ => Err(w.clone()),
        }
    }

    pub fn get(&self, w: &WeightVec) -> u64 {
        self.0.get(w).copied().unwrap_or(0)
    }

    /// dim of the module.
    pub fn total(&self) -> u64 {
        self.0.values().sum()
    }

    pub fn distinct(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&WeightVec, u64)> {
        self.0.iter().map(|(w, &k)| (w, k))
    }

    pub fn add_scaled(&mut self, other: &WeightMultiset, k: u64) {
        for (w, m) in other.iter() {
            self.insert(w.clone(), m * k);
        }
    }

    pub fn negated(&self) -> WeightMultiset {
        WeightMultiset(self.0.iter().map(|(w, &k)| (w.neg(), k)).collect())
    }

    pub fn is_negation_stable(&self) -> bool {
        self.0.iter().all(|(w, &k)| self.get(&w.neg()) == k)
    }

    /// Weights listed with repetition.
    pub fn expanded(&self) -> Vec<WeightVec> {
        self.0.iter().flat_map(|(w, &k)| std::iter::repeat_n(w.clone(), k as usize)).collect()
    }
}

impl FromIterator<(WeightVec, u64)> for WeightMultiset {
    fn from_iter<I: IntoIterator<Item = (WeightVec, u64)>>(iter: I) -> Self {
        let mut m = WeightMultiset::new();
        for (w, k) in iter {
            m.insert(w, k);
        }
        m
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DualityClass {
    SymplecticType,
    OrthogonalType,
    ComplexType,
}

impl fmt::Display for DualityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DualityClass::SymplecticType => "symplectic",
            DualityClass::OrthogonalType => "orthogonal",
            DualityClass::ComplexType => "complex",
        })
    }
}

/// Dual highest weight `−w₀λ`.
pub fn dual_weight(datum: &RootDatum, lambda: &[i64]) -> WeightVec {
    datum.longest_element().apply(lambda).neg()
}

pub fn duality_class(datum: &RootDatum, lambda: &[i64]) -> DualityClass {
    if dual_weight(datum, lambda).coords() != lambda {
        DualityClass::ComplexType
    } else if datum.height(lambda) % 2 != 0 {
        DualityClass::SymplecticType
    } else {
        DualityClass::OrthogonalType
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Summand {
    pub highest_weight: WeightVec,
    pub mult: u64,
}

/// How the summands carry the symplectic form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Pairing {
    /// `copies` copies of a symplectic-type irreducible, each with its own
    /// invariant form.
    SelfPaired { weight: WeightVec, copies: u64 },
    /// `copies` copies of `U ⊕ U*` with the canonical form, where `U` has
    /// highest weight `weight` and `U*` has highest weight `dual`.
    Cotangent { weight: WeightVec, dual: WeightVec, copies: u64 },
}

/// A validated symplectic representation given by highest weights.
#[derive(Clone, Debug)]
pub struct SympRepSpec {
    datum: RootDatum,
    summands: Vec<Summand>,
    pairing_plan: Vec<Pairing>,
}

impl SympRepSpec {
    /// Validates that an invariant symplectic form exists, merging repeated
    /// highest weights. Summands are stored in decreasing lexicographic order.
    pub fn new(datum: RootDatum, summands: &[(WeightVec, u64)]) -> Result<Self, RepError> {
        let mut merged: BTreeMap<WeightVec, u64> = BTreeMap::new();
        for (w, k) in summands {
            datum.check_dim(w)?;
            if *k == 0 {
                return Err(RepError::ZeroMultiplicity(w.clone()));
            }
            if !datum.is_dominant(w) {
                return Err(RepError::NotDominant(w.clone()));
            }
            *merged.entry(w.clone()).or_insert(0) += k;
        }
        let mut plan = Vec::new();
        for (w, &k) in merged.iter().rev() {
            match duality_class(&datum, w) {
                DualityClass::ComplexType => {
                    let dual = dual_weight(&datum, w);
                    if merged.get(&dual) != Some(&k) {
                        return Err(RepError::NotSelfDual(w.clone()));
                    }
                    if *w > dual {
                        plan.push(Pairing::Cotangent { weight: w.clone(), dual, copies: k });
                    }
                }
                DualityClass::OrthogonalType => {
                    if k % 2 != 0 {
                        return Err(RepError::OddOrthogonalMultiplicity(w.clone()));
                    }
                    plan.push(Pairing::Cotangent { weight: w.clone(), dual: w.clone(), copies: k / 2 });
                }
                DualityClass::SymplecticType => {
                    if k >= 2 {
                        plan.push(Pairing::Cotangent { weight: w.clone(), dual: w.clone(), copies: k / 2 });
                    }
                    if k % 2 == 1 {
                        plan.push(Pairing::SelfPaired { weight: w.clone(), copies: 1 });
                    }
                }
            }
        }
        let summands = merged
            .into_iter()
            .rev()
            .map(|(highest_weight, mult)| Summand { highest_weight, mult })
            .collect();
        Ok(SympRepSpec { datum, summands, pairing_plan: plan })
    }

    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    pub fn summands(&self) -> &[Summand] {
        &self.summands
    }

    pub fn pairing_plan(&self) -> &[Pairing] {
        &self.pairing_plan
    }

    pub fn mult(&self, w: &WeightVec) -> u64 {
        self.summands.iter().find(|s| &s.highest_weight == w).map_or(0, |s| s.mult)
    }

    pub fn summand_pairs(&self) -> Vec<(WeightVec, u64)> {
        self.summands.iter().map(|s| (s.highest_weight.clone(), s.mult)).collect()
    }

    /// All weights of V with multiplicity.
    pub fn weights(&self, irrep_dim_cap: u64) -> Result<WeightMultiset, RepError> {
        let mut out = WeightMultiset::new();
        for s in &self.summands {
            let m = freudenthal_multiplicities(&self.datum, &s.highest_weight, irrep_dim_cap)?;
            out.add_scaled(&m, s.mult);
        }
        Ok(out)
    }

    pub fn dim(&self) -> Result<u64, RepError> {
        let mut d = 0;
        for s in &self.summands {
            d += weyl_dimension(&self.datum, &s.highest_weight) * s.mult;
        }
        Ok(d)
    }
}

impl fmt::Display for SympRepSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} on {{", self.datum.type_string())?;
        for (i, s) in self.summands.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}:{}", s.highest_weight, s.mult)?;
        }
        f.write_str("}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::Letter;

    fn w(v: &[i64]) -> WeightVec {
        WeightVec::new(v.to_vec())
    }

    #[test]
    fn duality_classes() {
        let a1 = RootDatum::new(&[(Letter::A, 1)], 0).unwrap();
        assert_eq!(duality_class(&a1, &[1]), DualityClass::SymplecticType);
        assert_eq!(duality_class(&a1, &[2]), DualityClass::OrthogonalType);
        let a2 = RootDatum::new(&[(Letter::A, 2)], 0).unwrap();
        assert_eq!(duality_class(&a2, &[1, 0]), DualityClass::ComplexType);
        let c2 = RootDatum::new(&[(Letter::C, 2)], 0).unwrap();
        assert_eq!(duality_class(&c2, &[1, 0]), DualityClass::SymplecticType);
        assert_eq!(duality_class(&c2, &[0, 1]), DualityClass::OrthogonalType);
    }

    #[test]
    fn validation() {
        let a1 = RootDatum::new(&[(Letter::A, 1)], 0).unwrap();
        assert!(SympRepSpec::new(a1.clone(), &[(w(&[1]), 1)]).is_ok());
        assert_eq!(
            SympRepSpec::new(a1.clone(), &[(w(&[2]), 1)]).unwrap_err(),
            RepError::OddOrthogonalMultiplicity(w(&[2]))
        );
        let a2 = RootDatum::new(&[(Letter::A, 2)], 0).unwrap();
        assert_eq!(
            SympRepSpec::new(a2.clone(), &[(w(&[1, 0]), 1)]).unwrap_err(),
            RepError::NotSelfDual(w(&[1, 0]))
        );
        let spec = SympRepSpec::new(a2, &[(w(&[1, 0]), 1), (w(&[0, 1]), 1)]).unwrap();
        assert_eq!(spec.pairing_plan().len(), 1);
        assert_eq!(spec.dim().unwrap(), 6);
    }

    #[test]
    fn symplectic_type_pairs_copies() {
        let a1 = RootDatum::new(&[(Letter::A, 1)], 0).unwrap();
        let spec = SympRepSpec::new(a1, &[(w(&[1]), 3)]).unwrap();
        assert_eq!(
            spec.pairing_plan(),
            &[
                Pairing::Cotangent { weight: w(&[1]), dual: w(&[1]), copies: 1 },
                Pairing::SelfPaired { weight: w(&[1]), copies: 1 },
            ]
        );
    }
}
