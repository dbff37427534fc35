use proptest::prelude::*;
use rand::SeedableRng;
use spherical::cones::{check_retraction_property, langlands_retraction, retraction_report};
use spherical::global_sl2::{Domain, GroupoidFunction, Sl2P1};
use spherical::hecke::{gk_mu, nu};
use spherical::intertwining::{delta_p, round_trip};
use spherical::linalg::Q;
use spherical::qfield::{parse_ratfunc, QValue, RatFunc};
use spherical::root_datum::{preset, PRESET_NAMES};
use spherical::verify::random_spherical;

fn datum() -> impl Strategy<Value = &'static str> {
    prop::sample::select(PRESET_NAMES.to_vec())
}

fn small_poly() -> impl Strategy<Value = RatFunc> {
    prop::collection::vec(-3i64..=3, 1..4).prop_map(|c| {
        let s: Vec<String> = c.iter().enumerate().map(|(k, a)| format!("({a})*q^{k}")).collect();
        parse_ratfunc(&s.join(" + ")).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn field_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        if !b.is_zero() {
            prop_assert_eq!(&(&a / &b) * &b, a.clone());
        }
    }

    #[test]
    fn delta_is_multiplicative(name in datum(), mask in 0u32..8, x in prop::collection::vec(-4i64..=4, 3), y in prop::collection::vec(-4i64..=4, 3)) {
        let rd = preset(name);
        let j: Vec<usize> = (0..rd.n_simple()).filter(|i| mask >> i & 1 == 1).collect();
        let p = rd.parabolic(&j).unwrap();
        let (x, y) = (&x[..rd.rank], &y[..rd.rank]);
        let s: Vec<i64> = x.iter().zip(y).map(|(a, b)| a + b).collect();
        prop_assert_eq!(delta_p(&p, &s), &delta_p(&p, x) * &delta_p(&p, y));
    }

    #[test]
    fn mu_times_nu_is_one(name in datum(), mask in 0u32..8, h in 0i64..=8) {
        let rd = preset(name);
        let j: Vec<usize> = (0..rd.n_simple()).filter(|i| mask >> i & 1 == 1).collect();
        let p = rd.parabolic(&j).unwrap();
        let mu = gk_mu(&rd, &p, h).unwrap();
        prop_assert!(mu.is_invariant(&rd, &p));
        prop_assert!(mu.convolve(&nu(&rd, &p, h).unwrap()).unwrap().is_unit());
    }

    #[test]
    fn retraction_is_dominant_and_idempotent(name in datum(), num in prop::collection::vec(-20i64..=20, 3), den in prop::collection::vec(1i64..=7, 3)) {
        let rd = preset(name);
        let lambda: Vec<Q> = (0..rd.rank).map(|i| Q::new(num[i].into(), den[i].into())).collect();
        prop_assert!(retraction_report(&rd, &lambda).unwrap().all());
        let (l, _) = langlands_retraction(&rd, &lambda).unwrap();
        prop_assert_eq!(langlands_retraction(&rd, &l).unwrap().0, l);
        for j in rd.all_parabolic_subsets() {
            let p = rd.parabolic(&j).unwrap();
            if p.is_m_dominant_q(&rd, &lambda) {
                prop_assert!(check_retraction_property(&rd, &p, &lambda).unwrap());
            }
        }
    }

    #[test]
    fn local_round_trip_b2_g2(seed in any::<u64>(), g2 in any::<bool>(), which in 0usize..3) {
        let rd = preset(if g2 { "G2" } else { "B2" });
        let j = rd.borel_and_maximal_subsets()[which].clone();
        let p = rd.parabolic(&j).unwrap();
        let h = 5;
        let mut r = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let phi = random_spherical(&mut r, &rd, &p);
        let rt = round_trip(&rd, &p, &gk_mu(&rd, &p, h).unwrap(), &nu(&rd, &p, h).unwrap(), &phi).unwrap();
        prop_assert!(rt.inverse_after_r && rt.r_after_inverse);
    }

    #[test]
    fn form_b_symmetric_at_q5(a in prop::collection::vec((0i64..=4, -3i64..=3), 1..4), b in prop::collection::vec((0i64..=4, -3i64..=3), 1..4)) {
        let m = Sl2P1::new(QValue::int(5));
        let f = |v: &[(i64, i64)]| GroupoidFunction::finite(Domain::BunG, v.iter().map(|&(n, c)| (n, RatFunc::from_int(c)))).unwrap();
        let (f1, f2) = (f(&a), f(&b));
        prop_assert_eq!(m.form_b(&f1, &f2).unwrap(), m.form_b(&f2, &f1).unwrap());
        let lf = m.op_l(&f1, 6).unwrap();
        prop_assert_eq!(m.op_l_inverse(&lf).unwrap().agrees_on(&f1, 0..=6).unwrap(), true);
    }
}
