use std::collections::BTreeMap;

use proptest::prelude::*;
use symrep::budget::Budget;
use symrep::reps::{
    decompose_weights, dual_weight, duality_class, freudenthal_multiplicities, invariant_dims, weyl_dimension,
    SympRepSpec, WeightMultiset,
};
use symrep::rootdata::{Letter, RootDatum};
use symrep::weight::WeightVec;
use symrep_oracles::invariants::invariant_dims as oracle_invariant_dims;
use symrep_oracles::kostant::weight_multiplicities;
use symrep_oracles::matrices::{direct_sum, sl2_irrep, sl_dual, sl_standard, sp_standard, torus_characters};
use symrep_oracles::{block_diag, cartan_a, cartan_b, cartan_c, cartan_g2, IMat};

const CAP: u64 = 5000;

fn datum(factors: &[(Letter, usize)], central: usize) -> RootDatum {
    RootDatum::new(factors, central).unwrap()
}

fn spec(d: &RootDatum, summands: &[(&[i64], u64)]) -> SympRepSpec {
    let s: Vec<(WeightVec, u64)> = summands.iter().map(|(w, k)| (WeightVec::new(w.to_vec()), *k)).collect();
    SympRepSpec::new(d.clone(), &s).unwrap()
}

fn as_map(m: &WeightMultiset) -> BTreeMap<Vec<i64>, i64> {
    m.iter().map(|(w, k)| (w.coords().to_vec(), k as i64)).collect()
}

fn dominant_box(d: &RootDatum, max_coord: i64) -> Vec<WeightVec> {
    let r = d.rank();
    let mut out = vec![WeightVec::zeros(r)];
    for i in 0..r {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..=max_coord).map(move |k| {
                    let mut c = w.coords().to_vec();
                    c[i] = k;
                    WeightVec::new(c)
                })
            })
            .collect();
    }
    out
}

/// Dominant λ with ⟨λ, ρ^∨⟩ ≤ `bound`; `height` is ⟨λ, 2ρ^∨⟩ and every
/// fundamental weight has height at least 1.
fn weights_up_to(d: &RootDatum, bound: i64) -> Vec<WeightVec> {
    dominant_box(d, 2 * bound).into_iter().filter(|w| d.height(w) <= 2 * bound).collect()
}

#[test]
fn freudenthal_matches_kostant_on_small_groups() {
    let cases: Vec<(Vec<(Letter, usize)>, IMat, i64)> = vec![
        (vec![(Letter::A, 1)], cartan_a(1), 6),
        (vec![(Letter::A, 2)], cartan_a(2), 6),
        (vec![(Letter::C, 2)], cartan_c(2), 6),
        (vec![(Letter::A, 1), (Letter::A, 1)], block_diag(&[cartan_a(1), cartan_a(1)]), 6),
        (vec![(Letter::B, 3)], cartan_b(3), 6),
        (vec![(Letter::G, 2)], cartan_g2(), 6),
    ];
    for (factors, a, bound) in cases {
        let d = datum(&factors, 0);
        let lambdas = weights_up_to(&d, bound);
        assert!(lambdas.len() > 3);
        for lambda in lambdas {
            let ours = freudenthal_multiplicities(&d, &lambda, CAP).unwrap();
            assert_eq!(as_map(&ours), weight_multiplicities(&a, &lambda), "{} {lambda}", d.type_string());
            assert_eq!(ours.total(), weyl_dimension(&d, &lambda));
        }
    }
}

#[test]
fn named_multiplicities() {
    let a1 = datum(&[(Letter::A, 1)], 0);
    let m = freudenthal_multiplicities(&a1, &WeightVec::new(vec![2]), CAP).unwrap();
    assert_eq!(as_map(&m), BTreeMap::from([(vec![-2], 1), (vec![0], 1), (vec![2], 1)]));
    let a2 = datum(&[(Letter::A, 2)], 0);
    let adj = freudenthal_multiplicities(&a2, &WeightVec::new(vec![1, 1]), CAP).unwrap();
    assert_eq!((adj.get(&WeightVec::zeros(2)), adj.total()), (2, 8));
    // Bourbaki ϖ₂ of C2 is the 5-dimensional module; the 10-dimensional
    // adjoint is 2ϖ₁. Both values come from the Kostant oracle.
    let c2 = datum(&[(Letter::C, 2)], 0);
    for (lambda, zero, dim) in [([0, 1], 1, 5), ([2, 0], 2, 10)] {
        let m = freudenthal_multiplicities(&c2, &WeightVec::new(lambda.to_vec()), CAP).unwrap();
        let oracle = weight_multiplicities(&cartan_c(2), &lambda);
        assert_eq!((oracle[&vec![0, 0]], oracle.values().sum::<i64>()), (zero, dim));
        assert_eq!((m.get(&WeightVec::zeros(2)), m.total()), (zero as u64, dim as u64));
    }
}

#[test]
fn duality_class_is_dual_invariant() {
    for (factors, bound) in [(vec![(Letter::A, 3)], 3), (vec![(Letter::C, 3)], 2), (vec![(Letter::A, 2), (Letter::A, 1)], 3)] {
        let d = datum(&factors, 0);
        for lambda in weights_up_to(&d, bound) {
            let dual = dual_weight(&d, &lambda);
            assert!(d.is_dominant(&dual));
            assert_eq!(duality_class(&d, &lambda), duality_class(&d, &dual), "{lambda}");
            assert_eq!(dual_weight(&d, &dual), lambda);
        }
    }
}

#[test]
fn invariant_dimensions_match_monomial_counts() {
    let budget = Budget::default();
    let a1 = datum(&[(Letter::A, 1)], 0);
    let two_std = spec(&a1, &[(&[1], 2)]);
    let oracle = oracle_invariant_dims(&direct_sum(&[sl2_irrep(1), sl2_irrep(1)]), 4);
    assert_eq!(oracle, vec![1, 0, 1, 0, 1]);
    assert_eq!(invariant_dims(&two_std, 4, &budget).unwrap(), vec![1, 0, 1, 0, 1]);

    let c2 = datum(&[(Letter::C, 2)], 0);
    let oracle = oracle_invariant_dims(&sp_standard(2), 4);
    assert_eq!(oracle, vec![1, 0, 0, 0, 0]);
    assert_eq!(invariant_dims(&spec(&c2, &[(&[1, 0], 1)]), 4, &budget).unwrap(), vec![1, 0, 0, 0, 0]);

    let oracle = oracle_invariant_dims(&sl2_irrep(3), 8);
    assert_eq!(oracle, vec![1, 0, 0, 0, 1, 0, 0, 0, 1]);
    assert_eq!(invariant_dims(&spec(&a1, &[(&[3], 1)]), 8, &budget).unwrap(), vec![1, 0, 0, 0, 1, 0, 0, 0, 1]);

    let adj2 = oracle_invariant_dims(&direct_sum(&[sl2_irrep(2), sl2_irrep(2)]), 6);
    let ours = invariant_dims(&spec(&a1, &[(&[2], 2)]), 6, &budget).unwrap();
    assert_eq!(ours.iter().map(|&x| x as usize).collect::<Vec<_>>(), adj2);

    let a2 = datum(&[(Letter::A, 2)], 0);
    let oracle = oracle_invariant_dims(&direct_sum(&[sl_standard(3), sl_dual(3)]), 6);
    let ours = invariant_dims(&spec(&a2, &[(&[1, 0], 1), (&[0, 1], 1)]), 6, &budget).unwrap();
    assert_eq!(ours.iter().map(|&x| x as usize).collect::<Vec<_>>(), oracle);
}

fn count_torus_invariants(chars: &[Vec<i64>], d: usize) -> u64 {
    fn go(chars: &[Vec<i64>], i: usize, left: usize, acc: &mut Vec<i64>) -> u64 {
        if i == chars.len() {
            return u64::from(left == 0 && acc.iter().all(|&x| x == 0));
        }
        let mut total = 0;
        for e in 0..=left {
            for (a, c) in acc.iter_mut().zip(&chars[i]) {
                *a += c * e as i64;
            }
            total += go(chars, i + 1, left - e, acc);
            for (a, c) in acc.iter_mut().zip(&chars[i]) {
                *a -= c * e as i64;
            }
        }
        total
    }
    go(chars, 0, d, &mut vec![0; chars[0].len()])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn freudenthal_is_weyl_invariant(case in 0usize..4, coords in prop::collection::vec(0i64..=2, 3)) {
        let data = [
            datum(&[(Letter::A, 2)], 0),
            datum(&[(Letter::C, 3)], 0),
            datum(&[(Letter::B, 3)], 0),
            datum(&[(Letter::A, 1), (Letter::G, 2)], 0),
        ];
        let d = &data[case];
        let lambda = WeightVec::new(coords[..d.rank().min(3)].to_vec());
        prop_assume!(lambda.len() == d.ambient_dim());
        let m = freudenthal_multiplicities(d, &lambda, 100_000).unwrap();
        prop_assert_eq!(m.total(), weyl_dimension(d, &lambda));
        for (mu, k) in m.iter() {
            for i in 0..d.rank() {
                prop_assert_eq!(m.get(&d.reflect(i, mu)), k);
            }
        }
    }

    #[test]
    fn decomposition_inverts_summation(
        case in 0usize..3,
        lambdas in prop::collection::vec((prop::collection::vec(0i64..=2, 2), 1u64..=2), 1..4),
    ) {
        let data = [datum(&[(Letter::A, 2)], 0), datum(&[(Letter::C, 2)], 0), datum(&[(Letter::A, 1), (Letter::A, 1)], 0)];
        let d = &data[case];
        let mut want: BTreeMap<WeightVec, u64> = BTreeMap::new();
        let mut ws = WeightMultiset::new();
        for (c, k) in &lambdas {
            let l = WeightVec::new(c.clone());
            ws.add_scaled(&freudenthal_multiplicities(d, &l, CAP).unwrap(), *k);
            *want.entry(l).or_insert(0) += k;
        }
        let got: BTreeMap<WeightVec, u64> = decompose_weights(d, &ws, CAP).unwrap().into_iter().collect();
        prop_assert_eq!(got, want);
    }

    #[test]
    fn torus_invariants_count_exponent_vectors(chars in prop::collection::vec(prop::collection::vec(-2i64..=2, 2), 1..3)) {
        let d = datum(&[], 2);
        let mut summands: Vec<(WeightVec, u64)> = Vec::new();
        for c in &chars {
            summands.push((WeightVec::new(c.clone()), 1));
            summands.push((WeightVec::new(c.iter().map(|x| -x).collect()), 1));
        }
        let s = SympRepSpec::new(d, &summands).unwrap();
        let all: Vec<Vec<i64>> = summands.iter().map(|(w, _)| w.coords().to_vec()).collect();
        let dims = invariant_dims(&s, 6, &Budget::default()).unwrap();
        for (deg, &x) in dims.iter().enumerate() {
            prop_assert_eq!(x, count_torus_invariants(&all, deg), "degree {}", deg);
        }
        prop_assert_eq!(dims[0], 1);
        let oracle = oracle_invariant_dims(&torus_characters(&all), 4);
        prop_assert_eq!(dims[..5].iter().map(|&x| x as usize).collect::<Vec<_>>(), oracle);
    }
}
