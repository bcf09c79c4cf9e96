use nalgebra::DVector;
use num_rational::Rational64;
use proptest::prelude::*;
use symrep::budget::Budget;
use symrep::numeric::*;
use symrep::reps::SympRepSpec;
use symrep::rootdata::{Letter, RootDatum};
use symrep::weight::WeightVec;

fn small_char() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-2i64..=2, 2)
}

fn ratio() -> impl Strategy<Value = Rational64> {
    (-30i64..=30, 1i64..=7).prop_map(|(p, q)| Rational64::new(p, q))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn torus_section_is_exact(chars in prop::collection::vec(small_char(), 1..5),
                              coef in prop::collection::vec(ratio(), 5),
                              y_side in any::<bool>()) {
        let chars: Vec<WeightVec> = chars.into_iter().map(WeightVec::new).collect();
        let sec = TorusSection::new(chars.clone(), if y_side { Side::Y } else { Side::X });
        // a point of the span
        let mut a = vec![Rational64::from_integer(0); 2];
        for (c, r) in chars.iter().zip(&coef) {
            for (x, &w) in a.iter_mut().zip(c.iter()) {
                *x += r * Rational64::from_integer(w);
            }
        }
        let p = sec.eval(&a).unwrap();
        prop_assert_eq!(sec.moment(&p), a);
        for (i, &crit) in sec.critical.iter().enumerate() {
            if crit {
                prop_assert!(sec.support.contains(&i));
            }
        }
    }

    #[test]
    fn symplectic_standard_moment_closed_form(n in 1usize..=3, seed in any::<u64>()) {
        let datum = RootDatum::new(&[(Letter::C, n)], 0).unwrap();
        let spec = SympRepSpec::new(datum, &[(WeightVec::unit(n, 0), 1)]).unwrap();
        let rep = build_rep::<f64>(&spec, 64).unwrap();
        let v = Sampler::new(seed).unit_vector::<f64>(rep.dim);
        let m = moment_eval(&rep, &v).unwrap().matrix_form;
        let closed = -(&v * v.transpose() * &rep.form) * 0.5;
        prop_assert!((&m - closed).norm() <= 1e-12);
        let s = m.clone().svd(false, false).singular_values;
        let mut s: Vec<f64> = s.iter().copied().collect();
        s.sort_by(|a, b| b.partial_cmp(a).unwrap());
        prop_assert!(s.get(1).is_none_or(|&x| x <= 1e-8));
    }

    #[test]
    fn phi_shifts_the_moment_along_the_character(t in -3.0f64..3.0, y in 0.2f64..3.0, x in -2.0f64..2.0, z in -2.0f64..2.0) {
        let datum = RootDatum::new(&[], 1).unwrap();
        let spec = SympRepSpec::new(datum, &[(WeightVec::new(vec![1]), 1), (WeightVec::new(vec![-1]), 1),
            (WeightVec::new(vec![2]), 1), (WeightVec::new(vec![-2]), 1)]).unwrap();
        let rep = build_rep::<f64>(&spec, 64).unwrap();
        let i = rep.weight_labels.iter().position(|w| w.coords() == [1]).unwrap();
        let v0 = DVector::from_fn(rep.dim, |r, _| if r == i { 1.0 } else { 0.0 });
        let v0m = &rep.form * &v0;
        let v = DVector::from_fn(rep.dim, |r, _| match rep.weight_labels[r].coords()[0] { 2 => x, -2 => z, _ => 0.0 });
        let chi = WeightVec::new(vec![1]);
        let p = char_reduction_phi(&rep, rep.datum(), &chi, &v0, &v0m, t, y, &v).unwrap();
        prop_assert!(p.residual <= 1e-10);
        let m = moment_eval(&rep, &p.point).unwrap().coords[0];
        prop_assert!((m - (2.0 * x * z + (t - p.f))).abs() <= 1e-10 * (1.0 + m.abs()));
    }

    #[test]
    fn local_structure_holds_at_random_points(seed in any::<u64>(), which in 0usize..4) {
        let names = ["SL2 binary quintics", "SL3 two std+dual", "SL2xSL2 two bistandards", "Sp4 two standards"];
        let e = catalog_suite().into_iter().find(|e| e.name == names[which]).unwrap();
        let rep = build_rep::<f64>(&e.spec, 64).unwrap();
        let mut s = Sampler::new(seed);
        for stage in reduction_chain(&rep, &Budget::default()).unwrap().stages {
            let sv = stage.next_basis() * s.vector::<f64>(stage.next_dim());
            let (emb, r) = verify_commute(&rep, &stage, &sv).unwrap();
            prop_assert!(emb.sigma_residual <= 1e-9 && emb.perp_residual <= 1e-9);
            prop_assert!(r.max() <= 1e-9);
        }
    }
}
