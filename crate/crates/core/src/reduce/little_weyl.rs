//! Reflection subgroups of Γ and their identification with the little Weyl
//! group by Molien/Hilbert series matching.

use std::collections::{BTreeSet, HashMap};

use num_rational::Rational64;
use num_traits::{One, Zero};

use super::ReduceError;
use crate::budget::Budget;
use crate::linalg::{self, Mat};
use crate::reps::hilbert_support::{check_budget, invariant_dims_with};
use crate::reps::{SymmetricPowers, SympRepSpec};
use crate::rootdata::SubspaceGroupData;

/// A subgroup of Γ generated by reflections, as indices into `gamma`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReflectionSubgroup {
    pub elements: Vec<usize>,
    pub generators: Vec<usize>,
    /// Degrees of the basic invariants of the group on a*.
    pub degrees: Vec<usize>,
}

impl ReflectionSubgroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LittleWeyl {
    Exact { group: ReflectionSubgroup, degree: usize, hilbert: Vec<u64> },
    /// Undetermined (not multiplicity free, or the Hilbert series is over
    /// budget); the reflection subgroups of Γ are listed.
    Unknown { candidates: Vec<ReflectionSubgroup>, reason: String },
    Ambiguous { candidates: Vec<ReflectionSubgroup>, degree: usize, hilbert: Vec<u64> },
}

impl LittleWeyl {
    pub fn status(&self) -> &'static str {
        match self {
            LittleWeyl::Exact { .. } => "exact",
            LittleWeyl::Unknown { .. } => "unknown",
            LittleWeyl::Ambiguous { .. } => "ambiguous",
        }
    }
}

struct Table {
    mul: Vec<Vec<usize>>,
    inv: Vec<usize>,
}

fn table(gamma: &SubspaceGroupData) -> Table {
    debug_assert!(gamma.gamma[0].matrix == linalg::identity(gamma.dim()));
    let index: HashMap<&Mat<Rational64>, usize> =
        gamma.gamma.iter().enumerate().map(|(i, g)| (&g.matrix, i)).collect();
    let n = gamma.gamma.len();
    let mul: Vec<Vec<usize>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let p = linalg::mat_mul(&gamma.gamma[i].matrix, &gamma.gamma[j].matrix);
                    *index.get(&p).expect("Γ is closed under products")
                })
                .collect()
        })
        .collect();
    let inv = (0..n).map(|i| (0..n).find(|&j| mul[i][j] == 0).expect("inverse")).collect();
    Table { mul, inv }
}

fn closure(t: &Table, gens: &[usize]) -> Vec<usize> {
    let mut set = BTreeSet::from([0usize]);
    let mut queue = vec![0usize];
    while let Some(x) = queue.pop() {
        for &g in gens {
            let y = t.mul[x][g];
            if set.insert(y) {
                queue.push(y);
            }
        }
    }
    set.into_iter().collect()
}

/// Reflection subgroups of Γ up to conjugacy in Γ, trivial group first,
/// then by increasing order.
pub fn reflection_subgroups(gamma: &SubspaceGroupData) -> Vec<ReflectionSubgroup> {
    let t = table(gamma);
    let n = gamma.gamma.len();
    let reflections: Vec<usize> = (0..n).filter(|&i| gamma.gamma[i].is_reflection).collect();
    let mut found: Vec<(Vec<usize>, Vec<usize>)> = vec![(vec![0], Vec::new())];
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::from([vec![0]]);
    let mut head = 0;
    while head < found.len() {
        let (elements, gens) = found[head].clone();
        for &r in &reflections {
            if elements.contains(&r) {
                continue;
            }
            let mut g2 = gens.clone();
            g2.push(r);
            let h = closure(&t, &g2);
            if seen.insert(h.clone()) {
                found.push((h, g2));
            }
        }
        head += 1;
    }
    let mut classes: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut out = Vec::new();
    let terms = n + 1;
    for (elements, generators) in found {
        let key = (0..n)
            .map(|x| {
                let mut conj: Vec<usize> = elements.iter().map(|&h| t.mul[t.mul[x][h]][t.inv[x]]).collect();
                conj.sort_unstable();
                conj
            })
            .min()
            .unwrap();
        if classes.insert(key) {
            let molien = molien_series(gamma, &elements, terms);
            let degrees = basic_degrees(&molien, gamma.dim(), elements.len());
            out.push(ReflectionSubgroup { elements, generators, degrees });
        }
    }
    out.sort_by_key(|h| h.order());
    out
}

/// `(1/|H|) Σ_h 1/det(I − t h)` to `terms` coefficients.
pub fn molien_series(gamma: &SubspaceGroupData, elements: &[usize], terms: usize) -> Vec<Rational64> {
    let k = gamma.dim();
    let mut acc = vec![Rational64::zero(); terms];
    for &e in elements {
        let cp = linalg::char_poly(&gamma.gamma[e].matrix);
        // det(I − t h) = Σ_j c_j t^{k−j}
        let den: Vec<Rational64> = (0..=k).map(|d| cp[k - d]).collect();
        for (a, x) in acc.iter_mut().zip(series_inverse(&den, terms)) {
            *a += x;
        }
    }
    let n = Rational64::from_integer(elements.len() as i64);
    acc.into_iter().map(|x| x / n).collect()
}

fn series_inverse(p: &[Rational64], terms: usize) -> Vec<Rational64> {
    let mut out = vec![Rational64::zero(); terms];
    let p0 = p[0];
    for n in 0..terms {
        let mut s = if n == 0 { Rational64::one() } else { Rational64::zero() };
        for j in 1..=n.min(p.len() - 1) {
            s -= p[j] * out[n - j];
        }
        out[n] = s / p0;
    }
    out
}

/// Degrees `d₁ ≤ … ≤ d_k` with `M(t) = Π 1/(1 − t^{dᵢ})`, read off
/// greedily; meaningful for reflection groups.
pub fn basic_degrees(molien: &[Rational64], k: usize, order: usize) -> Vec<usize> {
    let mut rest = molien.to_vec();
    let mut degrees = Vec::new();
    let mut d = 1;
    while degrees.len() < k && d < rest.len() && d <= order.max(1) {
        let c = rest[d];
        if c > Rational64::zero() && c.is_integer() {
            for _ in 0..c.to_integer() {
                degrees.push(d);
                // multiply by (1 − t^d)
                for n in (d..rest.len()).rev() {
                    let prev = rest[n - d];
                    rest[n] -= prev;
                }
            }
        }
        d += 1;
    }
    degrees
}

fn matches(molien: &[Rational64], hilbert: &[u64]) -> bool {
    hilbert.iter().enumerate().all(|(d, &h)| {
        let expected = if d % 2 == 1 { Rational64::zero() } else { molien[d / 2] };
        expected == Rational64::from_integer(h as i64)
    })
}

/// Identifies W_V among the reflection subgroups of Γ. Only multiplicity-free
/// representations are matched, starting at `degree` and raising it in steps
/// of 2 up to the budget while several candidates remain.
pub fn determine_little_weyl(
    spec: &SympRepSpec,
    mf: bool,
    gamma: &SubspaceGroupData,
    degree: usize,
    budget: &Budget,
) -> Result<LittleWeyl, ReduceError> {
    let candidates = reflection_subgroups(gamma);
    if !mf {
        return Ok(LittleWeyl::Unknown { candidates, reason: "not multiplicity free".into() });
    }
    if let Err(e) = check_budget(spec.dim()?, degree, budget) {
        // W_V ⊆ Γ is generated by reflections, so a reflection-free Γ forces it.
        if candidates.len() == 1 {
            return Ok(LittleWeyl::Exact { group: candidates[0].clone(), degree: 0, hilbert: Vec::new() });
        }
        return Ok(LittleWeyl::Unknown { candidates, reason: e.to_string() });
    }
    let mut powers = SymmetricPowers::new(&spec.weights(budget.irrep_dim_cap)?);
    let mut d = degree;
    loop {
        let hilbert = invariant_dims_with(spec.datum(), &mut powers, d, budget)?;
        let mut hits: Vec<ReflectionSubgroup> = candidates
            .iter()
            .filter(|h| matches(&molien_series(gamma, &h.elements, d / 2 + 1), &hilbert))
            .cloned()
            .collect();
        match hits.len() {
            0 => {
                return Err(ReduceError::Defect(format!(
                    "no reflection subgroup of Γ matches the Hilbert series {hilbert:?}"
                )))
            }
            1 => return Ok(LittleWeyl::Exact { group: hits.remove(0), degree: d, hilbert }),
            _ if d + 2 <= budget.sym_degree_cap => d += 2,
            _ => return Ok(LittleWeyl::Ambiguous { candidates: hits, degree: d, hilbert }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational64 {
        Rational64::from_integer(n)
    }

    #[test]
    fn degrees_of_known_series() {
        // 1/(1−t)²
        let m: Vec<Rational64> = (0..6).map(|n| q(n + 1)).collect();
        assert_eq!(basic_degrees(&m, 2, 1), vec![1, 1]);
        // 1/(1−t²)
        let m: Vec<Rational64> = (0..6).map(|n| q(i64::from(n % 2 == 0))).collect();
        assert_eq!(basic_degrees(&m, 1, 2), vec![2]);
    }
}
