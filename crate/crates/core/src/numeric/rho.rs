//! A one-parameter subgroup ρ separating the weights of V: positive on
//! positive roots, terminal highest weights strictly below non-terminal
//! ones, and distinct weights at distinct heights.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::NumericError;
use crate::budget::Budget;
use crate::classify::{weight_status, WeightStatus};
use crate::linalg;
use crate::reps::SympRepSpec;
use crate::rootdata::RootDatum;
use crate::weight::WeightVec;

/// A rational coweight in ambient coordinates.
pub type RhoCoweight = Vec<BigRational>;

const SCALE_ROUNDS: usize = 64;
const PRIMES_TRIED: usize = 200;

fn pairing(w: &[i64], rho: &[BigRational]) -> BigRational {
    w.iter().zip(rho).fold(BigRational::zero(), |acc, (&x, r)| acc + r * BigInt::from(x))
}

/// Fundamental coweights `ϖ_k^∨` (dual to the simple roots, zero on the
/// centre) followed by the central unit coweights.
fn coweight_basis(datum: &RootDatum) -> Vec<RhoCoweight> {
    let r = datum.rank();
    let n = datum.ambient_dim();
    let a: Vec<Vec<BigRational>> = datum
        .cartan()
        .iter()
        .map(|row| row.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect())
        .collect();
    let inv = if r > 0 { linalg::inverse(&a).expect("Cartan matrices are invertible") } else { Vec::new() };
    let mut out = Vec::with_capacity(n);
    for k in 0..r {
        // A·ϖ_k^∨ = e_k
        let mut v: Vec<BigRational> = (0..r).map(|i| inv[i][k].clone()).collect();
        v.resize(n, BigRational::zero());
        out.push(v);
    }
    for c in r..n {
        let mut v = vec![BigRational::zero(); n];
        v[c] = BigRational::one();
        out.push(v);
    }
    out
}

struct Conditions {
    positive: Vec<WeightVec>,
    terminal: Vec<WeightVec>,
    nonterminal: Vec<WeightVec>,
    weights: Vec<WeightVec>,
}

impl Conditions {
    fn positive_on_roots(&self, rho: &[BigRational]) -> bool {
        self.positive.iter().all(|a| pairing(a, rho) > BigRational::zero())
    }

    fn first_separation_failure(&self, rho: &[BigRational]) -> Option<&WeightVec> {
        let top = self.terminal.iter().map(|t| pairing(t, rho)).max()?;
        self.nonterminal.iter().find(|w| pairing(w, rho) <= top)
    }

    fn weights_distinct(&self, rho: &[BigRational]) -> bool {
        let mut p: Vec<BigRational> = self.weights.iter().map(|w| pairing(w, rho)).collect();
        p.sort();
        p.windows(2).all(|w| w[0] != w[1])
    }

    fn all(&self, rho: &[BigRational]) -> bool {
        self.positive_on_roots(rho) && self.first_separation_failure(rho).is_none() && self.weights_distinct(rho)
    }
}

fn primes() -> impl Iterator<Item = u64> {
    (2u64..).filter(|&n| (2..).take_while(|d| d * d <= n).all(|d| n % d != 0))
}

/// Starts from a per-factor multiple of the sum of fundamental coweights,
/// doubling the multiple on factors where a non-terminal highest weight is
/// not yet above every terminal one, then perturbs by `Σᵢ bᵢ/p^{i+1}` over
/// the coweight basis for increasing primes `p` until all weights separate.
pub fn rho_psg(spec: &SympRepSpec, budget: &Budget) -> Result<RhoCoweight, NumericError> {
    let datum = spec.datum();
    let cond = conditions(spec, budget)?;
    let basis = coweight_basis(datum);
    let n = datum.ambient_dim();
    let mut scale: Vec<BigRational> = vec![BigRational::one(); datum.factors().len()];
    let base = |scale: &[BigRational]| {
        let mut rho = vec![BigRational::zero(); n];
        for (f, factor) in datum.factors().iter().enumerate() {
            for &node in &factor.nodes {
                for (r, b) in rho.iter_mut().zip(&basis[node]) {
                    *r += &scale[f] * b;
                }
            }
        }
        rho
    };
    let mut rho0 = base(&scale);
    let mut rounds = 0;
    while let Some(w) = cond.first_separation_failure(&rho0) {
        rounds += 1;
        if rounds > SCALE_ROUNDS {
            return Err(NumericError::Degenerate(format!(
                "no per-factor scaling puts the non-terminal weight {w} above the terminal ones"
            )));
        }
        let pairings = datum.simple_pairings(w);
        let mut grew = false;
        for (f, factor) in datum.factors().iter().enumerate() {
            if factor.nodes.iter().any(|&i| pairings[i] != 0) {
                scale[f] = &scale[f] * BigInt::from(2);
                grew = true;
            }
        }
        if !grew {
            return Err(NumericError::Degenerate(format!("non-terminal weight {w} vanishes on every coroot")));
        }
        rho0 = base(&scale);
    }
    for p in primes().take(PRIMES_TRIED) {
        let mut rho = rho0.clone();
        let p = BigRational::from_integer(BigInt::from(p));
        let mut step = BigRational::one();
        for b in &basis {
            step /= &p;
            for (r, x) in rho.iter_mut().zip(b) {
                *r += &step * x;
            }
        }
        if cond.all(&rho) {
            return Ok(rho);
        }
    }
    Err(NumericError::Degenerate(format!("no perturbation among the first {PRIMES_TRIED} primes separates the weights")))
}

fn conditions(spec: &SympRepSpec, budget: &Budget) -> Result<Conditions, NumericError> {
    let (nonterminal, terminal): (Vec<WeightVec>, Vec<WeightVec>) = spec
        .summands()
        .iter()
        .map(|s| s.highest_weight.clone())
        .partition(|w| weight_status(spec, w) == Ok(WeightStatus::NonTerminal));
    Ok(Conditions {
        positive: spec.datum().positive_roots().iter().map(|r| r.vector.clone()).collect(),
        terminal,
        nonterminal,
        weights: spec.weights(budget.irrep_dim_cap)?.iter().map(|(w, _)| w.clone()).collect(),
    })
}

/// Whether `rho` is positive on positive roots, separates terminal from
/// non-terminal highest weights, and separates all weights.
pub fn rho_conditions_hold(spec: &SympRepSpec, budget: &Budget, rho: &[BigRational]) -> Result<[bool; 3], NumericError> {
    let cond = conditions(spec, budget)?;
    Ok([cond.positive_on_roots(rho), cond.first_separation_failure(rho).is_none(), cond.weights_distinct(rho)])
}
