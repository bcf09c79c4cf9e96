use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::{ToPrimitive, Zero};

use super::{RepError, WeightMultiset};
use crate::rootdata::{pair, RootDatum};
use crate::weight::WeightVec;

/// Weyl dimension formula `Π_{α>0} ⟨λ+ρ, α^∨⟩ / ⟨ρ, α^∨⟩`.
pub fn weyl_dimension(datum: &RootDatum, lambda: &[i64]) -> u64 {
    let rho2 = datum.rho2();
    let mut acc = BigRational::from_integer(BigInt::from(1));
    for r in datum.positive_roots() {
        let b = pair(&rho2, &r.coroot);
        let a = 2 * pair(lambda, &r.coroot) + b;
        acc *= BigRational::new(BigInt::from(a), BigInt::from(b));
    }
    acc.to_integer().to_u64().unwrap_or(u64::MAX)
}

/// All weights of the irreducible module of highest weight `lambda`, by
/// Freudenthal's recursion on the dominant weights followed by W-orbit
/// expansion.
pub fn freudenthal_multiplicities(
    datum: &RootDatum,
    lambda: &WeightVec,
    dim_cap: u64,
) -> Result<WeightMultiset, RepError> {
    datum.check_dim(lambda)?;
    if !datum.is_dominant(lambda) {
        return Err(RepError::NotDominant(lambda.clone()));
    }
    let dim = weyl_dimension(datum, lambda);
    if dim > dim_cap {
        return Err(RepError::DimensionCap { weight: lambda.clone(), dim, cap: dim_cap });
    }
    let dominant = dominant_multiplicities(datum, lambda);
    let mut out = WeightMultiset::new();
    for (mu, m) in &dominant {
        for nu in datum.orbit(mu) {
            out.insert(nu, *m);
        }
    }
    debug_assert_eq!(out.total(), dim);
    Ok(out)
}

fn dominant_multiplicities(datum: &RootDatum, lambda: &WeightVec) -> Vec<(WeightVec, u64)> {
    // Every dominant μ < λ has a positive root α with μ + α dominant and
    // still ≤ λ, so closing {λ} under dominant μ ↦ μ − α reaches them all.
    // Depth is the height of λ − μ.
    let heights: Vec<i64> = datum
        .positive_roots()
        .iter()
        .map(|r| {
            let c = datum.simple_root_coords(&r.vector.to_rational()).expect("roots lie in the root span");
            c.iter().map(Rational64::to_integer).sum()
        })
        .collect();
    let mut depth: HashMap<WeightVec, i64> = HashMap::from([(lambda.clone(), 0)]);
    let mut queue = std::collections::VecDeque::from([lambda.clone()]);
    while let Some(mu) = queue.pop_front() {
        let d = depth[&mu];
        for (root, h) in datum.positive_roots().iter().zip(&heights) {
            let nu = mu.sub(&root.vector);
            if datum.is_dominant(&nu) && !depth.contains_key(&nu) {
                depth.insert(nu.clone(), d + h);
                queue.push_back(nu);
            }
        }
    }
    let mut candidates: Vec<(i64, WeightVec)> = depth.into_iter().map(|(w, d)| (d, w)).collect();
    candidates.sort();

    let rho2 = datum.rho2();
    let lam_norm = datum.inner(lambda, &lambda.add(&rho2));
    let mut mult: HashMap<WeightVec, u64> = HashMap::new();
    let mut out = Vec::new();
    let lookup = |mult: &HashMap<WeightVec, u64>, nu: &WeightVec| -> u64 {
        let (d, _) = datum.to_dominant(nu);
        mult.get(&d).copied().unwrap_or(0)
    };
    for (depth, mu) in candidates {
        let m = if depth == 0 {
            1
        } else {
            // 2 Σ_{α>0} Σ_{k≥1} m(μ+kα)(μ+kα, α) = ((λ+ρ,λ+ρ) − (μ+ρ,μ+ρ)) m(μ)
            let mut num = Rational64::zero();
            for root in datum.positive_roots() {
                let mut k = 1;
                loop {
                    let nu = mu.add(&root.vector.scaled(k));
                    let mnu = lookup(&mult, &nu);
                    if mnu == 0 {
                        break;
                    }
                    num += datum.inner(&nu, &root.vector) * (2 * mnu as i64);
                    k += 1;
                }
            }
            let den = lam_norm - datum.inner(&mu, &mu.add(&rho2));
            let q = num / den;
            debug_assert!(q.is_integer() && q >= Rational64::zero());
            q.to_integer() as u64
        };
        if m > 0 {
            mult.insert(mu.clone(), m);
            out.push((mu, m));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::Letter;

    fn w(v: &[i64]) -> WeightVec {
        WeightVec::new(v.to_vec())
    }

    #[test]
    fn sl2_adjoint_string() {
        let a1 = RootDatum::new(&[(Letter::A, 1)], 0).unwrap();
        let m = freudenthal_multiplicities(&a1, &w(&[2]), 100).unwrap();
        let expected: WeightMultiset = [(w(&[2]), 1), (w(&[0]), 1), (w(&[-2]), 1)].into_iter().collect();
        assert_eq!(m, expected);
    }

    #[test]
    fn sl3_adjoint() {
        let a2 = RootDatum::new(&[(Letter::A, 2)], 0).unwrap();
        let m = freudenthal_multiplicities(&a2, &w(&[1, 1]), 100).unwrap();
        assert_eq!(m.get(&w(&[0, 0])), 2);
        assert_eq!(m.total(), 8);
    }

    #[test]
    fn sp4_fundamental_modules() {
        let c2 = RootDatum::new(&[(Letter::C, 2)], 0).unwrap();
        let five = freudenthal_multiplicities(&c2, &w(&[0, 1]), 100).unwrap();
        assert_eq!((five.total(), five.get(&w(&[0, 0]))), (5, 1));
        let adjoint = freudenthal_multiplicities(&c2, &w(&[2, 0]), 100).unwrap();
        assert_eq!((adjoint.total(), adjoint.get(&w(&[0, 0]))), (10, 2));
    }

    #[test]
    fn central_coordinates_ride_along() {
        let gl2 = RootDatum::new(&[(Letter::A, 1)], 1).unwrap();
        let m = freudenthal_multiplicities(&gl2, &w(&[1, 3]), 100).unwrap();
        assert_eq!(m.expanded(), vec![w(&[-1, 3]), w(&[1, 3])]);
    }

    #[test]
    fn dimension_cap() {
        let a2 = RootDatum::new(&[(Letter::A, 2)], 0).unwrap();
        assert!(matches!(
            freudenthal_multiplicities(&a2, &w(&[10, 10]), 100),
            Err(RepError::DimensionCap { dim: 1331, .. })
        ));
    }
}
