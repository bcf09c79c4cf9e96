use std::collections::BTreeSet;

use num_rational::Rational64;
use proptest::prelude::*;
use symrep::rootdata::{subspace_normalizer, Letter, RootDatum};
use symrep::weight::WeightVec;
use symrep_oracles::gamma::gamma_counts;
use symrep_oracles::roots::{positive_roots, to_weight, weyl_group};
use symrep_oracles::{block_diag, cartan_a, cartan_b, cartan_c, cartan_d, cartan_e, cartan_f4, cartan_g2, IMat};

/// Every simple type up to rank 4 plus E6, with its oracle Cartan matrix.
fn simple_types() -> Vec<(Letter, usize, IMat)> {
    use Letter::*;
    let mut out = Vec::new();
    for n in 1..=4 {
        out.push((A, n, cartan_a(n)));
    }
    for n in 2..=4 {
        out.push((B, n, cartan_b(n)));
        out.push((C, n, cartan_c(n)));
    }
    out.push((D, 4, cartan_d(4)));
    out.push((G, 2, cartan_g2()));
    out.push((F, 4, cartan_f4()));
    out.push((E, 6, cartan_e(6)));
    out
}

fn datum(factors: &[(Letter, usize)], central: usize) -> RootDatum {
    RootDatum::new(factors, central).unwrap()
}

#[test]
fn cartan_matrices_follow_bourbaki() {
    for (l, n, a) in simple_types() {
        assert_eq!(datum(&[(l, n)], 0).cartan(), a.as_slice(), "{l}{n}");
    }
}

#[test]
fn positive_roots_match_root_strings() {
    for (l, n, a) in simple_types() {
        let d = datum(&[(l, n)], 0);
        let ours: BTreeSet<Vec<i64>> = d.positive_roots().iter().map(|r| r.vector.coords().to_vec()).collect();
        let oracle: BTreeSet<Vec<i64>> = positive_roots(&a).iter().map(|c| to_weight(&a, c)).collect();
        assert_eq!(ours, oracle, "{l}{n}");
    }
}

#[test]
fn positive_root_counts_are_classical() {
    use Letter::*;
    let count = |l, n| datum(&[(l, n)], 0).positive_roots().len();
    for n in 1..=6 {
        assert_eq!(count(A, n), n * (n + 1) / 2);
    }
    for n in 2..=5 {
        assert_eq!(count(B, n), n * n);
        assert_eq!(count(C, n), n * n);
    }
    for n in 4..=6 {
        assert_eq!(count(D, n), n * (n - 1));
    }
    assert_eq!((count(G, 2), count(F, 4)), (6, 24));
    assert_eq!((count(E, 6), count(E, 7), count(E, 8)), (36, 63, 120));
}

#[test]
fn weyl_groups_match_brute_force_closure() {
    let mut cases: Vec<(Vec<(Letter, usize)>, usize, IMat)> =
        simple_types().into_iter().filter(|(l, _, _)| *l != Letter::E && *l != Letter::F).map(|(l, n, a)| (vec![(l, n)], 0, a)).collect();
    cases.push((vec![(Letter::A, 1), (Letter::A, 1)], 1, block_diag(&[cartan_a(1), cartan_a(1)])));
    cases.push((vec![(Letter::A, 2), (Letter::C, 2)], 0, block_diag(&[cartan_a(2), cartan_c(2)])));
    for (factors, central, a) in cases {
        let d = datum(&factors, central);
        let ours: BTreeSet<Vec<Vec<i64>>> = d.enumerate_weyl(1_000_000).unwrap().iter().map(|w| w.matrix.rows()).collect();
        let oracle: BTreeSet<Vec<Vec<i64>>> = weyl_group(&a, central).into_iter().collect();
        assert_eq!(ours, oracle, "{}", d.type_string());
        assert_eq!(ours.len() as u128, d.weyl_order());
    }
}

#[test]
fn enumeration_lists_reduced_words_identity_first() {
    for (l, n, _) in simple_types().into_iter().filter(|(l, _, _)| *l != Letter::E) {
        let d = datum(&[(l, n)], 0);
        let w = d.enumerate_weyl(1_000_000).unwrap();
        assert!(w[0].word.is_empty());
        let distinct: BTreeSet<Vec<Vec<i64>>> = w.iter().map(|x| x.matrix.rows()).collect();
        assert_eq!(distinct.len(), w.len());
        // reduced words: length = number of positive roots sent negative
        for x in w.iter().step_by(7) {
            let inverted = d
                .positive_roots()
                .iter()
                .filter(|r| !d.positive_roots().iter().any(|p| p.vector == x.apply(&r.vector)))
                .count();
            assert_eq!(x.length(), inverted, "{l}{n} {:?}", x.word);
        }
    }
}

#[test]
fn group_too_large_names_the_cap() {
    let e = datum(&[(Letter::E, 8)], 0).enumerate_weyl(1_000_000).unwrap_err();
    assert!(e.to_string().contains("1000000"), "{e}");
}

#[test]
fn longest_element_negates_positive_roots() {
    for (l, n, _) in simple_types() {
        let d = datum(&[(l, n)], 0);
        let w0 = d.longest_element();
        assert_eq!(w0.length(), d.positive_roots().len(), "{l}{n}");
        let pos: BTreeSet<WeightVec> = d.positive_roots().iter().map(|r| r.vector.clone()).collect();
        let image: BTreeSet<WeightVec> = d.positive_roots().iter().map(|r| w0.apply(&r.vector).neg()).collect();
        assert_eq!(pos, image, "{l}{n}");
        assert_eq!(w0.matrix.mul(&w0.matrix).rows(), symrep::rootdata::IntMatrix::identity(n).rows());
    }
}

#[test]
fn lattice_examples() {
    let a2 = datum(&[(Letter::A, 2)], 0);
    let p = a2.lattice_ops(&[-1, 0]).unwrap();
    assert_eq!(p.dominant_rep.coords(), &[0, 1]);
    assert!(!p.dominant);
    let c2 = datum(&[(Letter::C, 2)], 0);
    assert_eq!(c2.lattice_ops(&[0, 1]).unwrap().pairings, vec![0, 1]);
    assert!(c2.lattice_ops(&[1]).is_err());
}

#[test]
fn low_rank_normalizations() {
    assert_eq!(datum(&[(Letter::B, 1)], 0).type_string(), "A1");
    assert_eq!(datum(&[(Letter::C, 1)], 0).type_string(), "A1");
    assert_eq!(datum(&[(Letter::D, 2)], 0).type_string(), "A1+A1");
    assert_eq!(datum(&[(Letter::D, 3)], 0).type_string(), "A3");
    assert_eq!(datum(&[(Letter::D, 3)], 0).cartan(), cartan_a(3).as_slice());
}

#[test]
fn levi_examples() {
    let a2 = datum(&[(Letter::A, 2)], 0);
    assert_eq!(a2.levi(&[1]).unwrap().positive_roots().len(), 1);
    let c2 = datum(&[(Letter::C, 2)], 0);
    let t = c2.levi(&[]).unwrap();
    assert_eq!((t.rank(), t.ambient_dim()), (0, 2));
    let short = c2.levi(&[0]).unwrap();
    assert_eq!(short.positive_roots().len(), 1);
    assert_eq!(short.positive_roots()[0].vector.coords(), &[2, -1]);
    assert!(c2.levi(&[2]).is_err());
}

fn rat(v: &[i64]) -> Vec<Rational64> {
    v.iter().map(|&x| Rational64::from_integer(x)).collect()
}

#[test]
fn normalizer_examples() {
    let a1 = datum(&[(Letter::A, 1)], 0);
    let g = subspace_normalizer(&a1, &[rat(&[1])], 100).unwrap();
    assert_eq!((g.order(), g.reflection_count()), (2, 1));
    let a2 = datum(&[(Letter::A, 2)], 0);
    let g = subspace_normalizer(&a2, &[rat(&[1, 0])], 100).unwrap();
    assert_eq!(g.order(), 1);
    let g = subspace_normalizer(&a2, &[], 100).unwrap();
    assert_eq!((g.order(), g.normalizer.len(), g.centralizer.len()), (1, 6, 6));
}

fn small_data() -> Vec<(Vec<(Letter, usize)>, usize, IMat)> {
    use Letter::*;
    vec![
        (vec![(A, 2)], 0, cartan_a(2)),
        (vec![(C, 2)], 0, cartan_c(2)),
        (vec![(G, 2)], 0, cartan_g2()),
        (vec![(A, 3)], 0, cartan_a(3)),
        (vec![(B, 3)], 0, cartan_b(3)),
        (vec![(A, 1), (A, 1)], 1, block_diag(&[cartan_a(1), cartan_a(1)])),
        (vec![(A, 1), (C, 2)], 0, block_diag(&[cartan_a(1), cartan_c(2)])),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn dominant_representative_is_orbit_invariant(
        case in 0usize..7,
        coords in prop::collection::vec(-4i64..=4, 4),
        word in prop::collection::vec(0usize..4, 0..10),
    ) {
        let (factors, central, _) = &small_data()[case];
        let d = datum(factors, *central);
        let lambda = &coords[..d.ambient_dim().min(4)];
        prop_assume!(lambda.len() == d.ambient_dim());
        let word: Vec<usize> = word.into_iter().filter(|&i| i < d.rank()).collect();
        let moved = d.element_from_word(&word).apply(lambda);
        prop_assert_eq!(d.to_dominant(&moved).0, d.to_dominant(lambda).0);
        prop_assert!(d.is_dominant(&d.to_dominant(lambda).0));
    }

    #[test]
    fn normalizer_matches_brute_force(
        case in 0usize..7,
        rows in prop::collection::vec(prop::collection::vec(-2i64..=2, 4), 0..3),
    ) {
        let (factors, central, a) = &small_data()[case];
        let d = datum(factors, *central);
        let n = d.ambient_dim();
        prop_assume!(n <= 4);
        let basis: Vec<Vec<Rational64>> = rows.iter().map(|r| rat(&r[..n])).collect();
        let g = subspace_normalizer(&d, &basis, 1_000_000).unwrap();
        let oracle = gamma_counts(a, *central, &g.a_star_basis);
        prop_assert_eq!(g.normalizer.len(), oracle.normalizer);
        prop_assert_eq!(g.centralizer.len(), oracle.centralizer);
        prop_assert_eq!(g.order(), oracle.gamma);
        prop_assert_eq!(g.reflection_count(), oracle.reflections);
        prop_assert_eq!(g.normalizer.len(), g.order() * g.centralizer.len());
    }
}
