//! Values computed by brute-force oracles that live here, frozen as literals.

use num_rational::BigRational;
use num_traits::{One, Zero};
use spherical::global_sl2::{aut_brute, sigma_brute, Sl2P1};
use spherical::hecke::{gk_mu, nu};
use spherical::qfield::{parse_ratfunc, QValue};
use spherical::root_datum::preset;
use spherical::weyl_identities::{verify_vanishing_a, verify_vanishing_b};

fn r(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

/// Indicator coefficient of the GK measure for the Borel, by enumerating
/// multisets of positive coroots summing to `lambda`; each distinct coroot
/// used contributes `1 - 1/q`, and the indicator basis scales by `q^{<rho,lambda>}`.
fn kostant_oracle(name: &str, lambda: &[i64], q: i64) -> BigRational {
    let rd = preset(name);
    let b = rd.parabolic(&[]).unwrap();
    let pos = b.u_coroots(&rd);
    fn go(pos: &[Vec<i64>], i: usize, rest: Vec<i64>, used: u32, c: &BigRational, acc: &mut BigRational) {
        if rest.iter().all(|&x| x == 0) {
            *acc += num_traits::pow(c.clone(), used as usize);
            return;
        }
        if i == pos.len() || rest.iter().any(|&x| x < 0) {
            return;
        }
        go(pos, i + 1, rest.clone(), used, c, acc);
        let mut cur = rest;
        loop {
            cur = cur.iter().zip(&pos[i]).map(|(a, b)| a - b).collect();
            if cur.iter().any(|&x| x < 0) {
                break;
            }
            go(pos, i + 1, cur.clone(), used + 1, c, acc);
        }
    }
    let c = BigRational::one() - BigRational::new(1.into(), q.into());
    let mut acc = BigRational::zero();
    go(&pos, 0, lambda.to_vec(), 0, &c, &mut acc);
    // coroot coordinates: <rho, lambda> is their sum
    let rho: i64 = b.height(lambda) / 2;
    acc * num_traits::pow(r(q), rho as usize)
}

#[test]
fn gk_matches_partition_oracle() {
    let cases: &[(&str, Vec<Vec<i64>>)] = &[
        ("A2", vec![vec![1, 0], vec![1, 1], vec![2, 1], vec![2, 2], vec![3, 1]]),
        ("B2", vec![vec![1, 1], vec![1, 2], vec![2, 2], vec![2, 3]]),
        ("G2", vec![vec![1, 1], vec![1, 3], vec![2, 3], vec![2, 4]]),
        ("A3", vec![vec![1, 1, 1], vec![1, 2, 1], vec![2, 2, 2]]),
    ];
    for (name, pts) in cases {
        let rd = preset(name);
        let b = rd.parabolic(&[]).unwrap();
        let mu = gk_mu(&rd, &b, 16).unwrap();
        for x in pts {
            for q in [2, 3, 5] {
                assert_eq!(mu.indicator_coeff(x).eval(&r(q)).unwrap(), kostant_oracle(name, x, q), "{name} {x:?} q={q}");
            }
        }
    }
}

#[test]
fn frozen_gk_polynomials() {
    let frozen = [
        ("A2", vec![1, 1], "2*q^2 - 3*q + 1"),
        ("A2", vec![2, 2], "3*q^4 - 6*q^3 + 4*q^2 - q"),
        ("B2", vec![1, 1], "2*q^2 - 3*q + 1"),
        ("G2", vec![1, 1], "2*q^2 - 3*q + 1"),
    ];
    for (name, x, want) in frozen {
        let rd = preset(name);
        let b = rd.parabolic(&[]).unwrap();
        let got = gk_mu(&rd, &b, 12).unwrap().indicator_coeff(&x);
        assert_eq!(got, parse_ratfunc(want).unwrap(), "{name} {x:?}");
        for q in [2, 3] {
            assert_eq!(got.eval(&r(q)).unwrap(), kostant_oracle(name, &x, q));
        }
    }
}

#[test]
fn nu_a1_is_one_minus_q() {
    let rd = preset("A1");
    let b = rd.parabolic(&[]).unwrap();
    let n = nu(&rd, &b, 10).unwrap();
    assert!(n.indicator_coeff(&[0]).is_one());
    for k in 1..=5 {
        assert_eq!(n.indicator_coeff(&[k]), parse_ratfunc("1 - q").unwrap());
    }
}

#[test]
fn bundle_counts_over_f2_and_f3() {
    // |Aut(O(n) + O(-n))| over F_2, brute force
    assert_eq!((0..4).map(|n| aut_brute(2, n)).collect::<Vec<_>>(), vec![6, 8, 32, 128]);
    assert_eq!((0..3).map(|n| aut_brute(3, n)).collect::<Vec<_>>(), vec![24, 54, 486]);
    for p in [2u64, 3] {
        let m = Sl2P1::new(QValue::int(p as i64));
        for n in 0..=3 {
            for d in -4..=n {
                assert_eq!(m.sigma(n, d), (sigma_brute(p, n, d) as i64).into(), "p={p} n={n} d={d}");
            }
        }
    }
}

#[test]
fn weyl_sweep_counts() {
    let frozen = [("A2", 24, 4, 24, 10), ("A3", 192, 8, 132, 28), ("B3", 384, 8, 216, 28), ("G2", 48, 4, 36, 10)];
    for (name, ac, an, bc, bn) in frozen {
        let rd = preset(name);
        let a = verify_vanishing_a(&rd).unwrap();
        let b = verify_vanishing_b(&rd).unwrap();
        assert!(a.pass() && b.pass(), "{name}");
        assert_eq!((a.checked, a.nonvanishing, b.checked, b.nonvanishing), (ac, an, bc, bn), "{name}");
    }
}

#[test]
fn parabolic_signs() {
    use spherical::weyl_identities::parabolic_sign;
    let gl2 = preset("GL2");
    assert_eq!(parabolic_sign(&gl2, &[]), 1);
    assert_eq!(parabolic_sign(&gl2, &[0]), -1);
    let a1 = preset("A1");
    assert_eq!(parabolic_sign(&a1, &[0]), 1);
    assert_eq!(parabolic_sign(&a1, &[]), -1);
    let b3 = preset("B3");
    assert_eq!(parabolic_sign(&b3, &[0, 2]), -1);
}
