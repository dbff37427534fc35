//! The acceptance suite as library calls, shared by `verify-all` and the
//! acceptance test target.

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::cones::{check_dual_cone, check_pos_u_intersection, check_pos_u_levi_clause, check_retraction_property, retraction_report};
use crate::error::Result;
use crate::global_sl2::{Domain, GroupoidFunction, Sl2P1};
use crate::hecke::{gk_mu, nu, satake_report};
use crate::intertwining::{round_trip, SphericalFunction};
use crate::linalg::Q;
use crate::padic::{mu_histogram, Group};
use crate::qfield::{QValue, RatFunc};
use crate::root_datum::{preset, RootDatum, PRESET_NAMES};
use crate::weyl_identities::{coset_reports, parabolic_sign, verify_vanishing_a, verify_vanishing_b};

#[derive(Clone, Debug, Serialize)]
pub struct Criterion {
    pub id: u32,
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Criterion {
    fn new(id: u32, name: &str, pass: bool, detail: String) -> Self {
        Criterion { id, name: name.into(), pass, detail }
    }

    fn from_result(id: u32, name: &str, r: Result<(bool, String)>) -> Self {
        match r {
            Ok((pass, detail)) => Criterion::new(id, name, pass, detail),
            Err(e) => Criterion::new(id, name, false, format!("error: {e}")),
        }
    }
}

/// Which data the datum-parametrized criteria sweep over.
#[derive(Clone, Debug)]
pub struct Scope {
    pub data: Option<Vec<String>>,
}

impl Scope {
    pub fn all() -> Self {
        Scope { data: None }
    }

    fn pick(&self, default: &[&str]) -> Vec<String> {
        match &self.data {
            None => default.iter().map(|s| s.to_string()).collect(),
            Some(v) => default.iter().filter(|d| v.iter().any(|x| x == *d)).map(|s| s.to_string()).collect(),
        }
    }
}

fn rng(tag: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(0x5eed_0000 + tag)
}

fn rat(r: &mut ChaCha8Rng, num: i64, den: i64) -> Q {
    Q::new(r.gen_range(-num..=num).into(), r.gen_range(1..=den).into())
}

/// 1. Brute-force p-adic measures equal the product formula.
pub fn gk_oracle(scope: &Scope) -> Criterion {
    let run = || -> Result<(bool, String)> {
        let mut ok = true;
        let mut notes = vec![];
        let mut cases: Vec<(Group, u64, i64, [i64; 2])> = vec![];
        if !scope.pick(&["A1"]).is_empty() {
            cases.push((Group::SL2, 2, 6, [1, 2]));
            cases.push((Group::SL2, 3, 6, [1, 2]));
        }
        if !scope.pick(&["A2"]).is_empty() {
            cases.push((Group::SL3, 2, 3, [3, 4]));
        }
        for (g, q, window, precs) in cases {
            let rd = preset(g.datum_name());
            let mu = gk_mu(&rd, &rd.parabolic(&[])?, 2 * window)?;
            let qr = BigRational::from_integer(q.into());
            let mut tables = vec![];
            for prec in precs {
                let h = mu_histogram(g, q, window, prec)?;
                ok &= h.total == h.window_measure();
                let mut complete = 0;
                for (k, m) in h.complete() {
                    ok &= mu.indicator_coeff(k).eval(&qr)? == *m;
                    complete += 1;
                }
                tables.push(h.complete().map(|(k, m)| (k.clone(), m.clone())).collect::<Vec<_>>());
                notes.push(format!("{g:?} q={q} window={window} N={prec}: {complete} coweights"));
            }
            ok &= tables.windows(2).all(|w| w[0] == w[1]);
        }
        Ok((ok, notes.join("; ")))
    };
    Criterion::from_result(1, "GK-oracle agreement", run())
}

/// 2. `μ ⋆ ν = 1` to height 10.
pub fn inversion(scope: &Scope) -> Criterion {
    let run = || -> Result<(bool, String)> {
        let mut ok = true;
        let mut n = 0;
        for name in scope.pick(&["A1", "A2", "B2", "G2", "A3"]) {
            let rd = preset(&name);
            for j in rd.borel_and_maximal_subsets() {
                let p = rd.parabolic(&j)?;
                let mu = gk_mu(&rd, &p, 10)?;
                ok &= mu.convolve(&nu(&rd, &p, 10)?)?.is_unit();
                n += 1;
            }
        }
        Ok((ok, format!("{n} (datum, J) pairs")))
    };
    Criterion::from_result(2, "inversion", run())
}

/// 3. `ν(0) = 1` for every preset and parabolic.
pub fn nu_constant(scope: &Scope) -> Criterion {
    let run = || -> Result<(bool, String)> {
        let mut ok = true;
        let mut n = 0;
        for name in scope.pick(&PRESET_NAMES) {
            let rd = preset(&name);
            for j in rd.all_parabolic_subsets() {
                let p = rd.parabolic(&j)?;
                ok &= nu(&rd, &p, 4)?.indicator_coeff(&vec![0; rd.rank]).is_one();
                n += 1;
            }
        }
        Ok((ok, format!("{n} (datum, J) pairs")))
    };
    Criterion::from_result(3, "nu(0) = 1", run())
}

/// 4. Retraction properties on random rational coweights.
pub fn retraction(scope: &Scope) -> Criterion {
    let run = || -> Result<(bool, String)> {
        let mut ok = true;
        let mut n = 0;
        let mut membership = 0;
        for (t, name) in scope.pick(&["A1", "A2", "B2", "G2"]).iter().enumerate() {
            let rd = preset(name);
            let mut r = rng(400 + t as u64);
            let parabolics: Vec<_> = rd.all_parabolic_subsets().iter().map(|j| rd.parabolic(j)).collect::<Result<_>>()?;
            for _ in 0..1000 {
                let lambda: Vec<Q> = (0..rd.rank).map(|_| rat(&mut r, 12, 6)).collect();
                ok &= retraction_report(&rd, &lambda)?.all();
                for p in &parabolics {
                    if p.is_m_dominant_q(&rd, &lambda) {
                        ok &= check_retraction_property(&rd, p, &lambda)?;
                        membership += 1;
                    }
                }
                n += 1;
            }
        }
        Ok((ok, format!("{n} coweights, {membership} M-dominant membership checks")))
    };
    Criterion::from_result(4, "Langlands retraction", run())
}

/// 5. Cone equality and duality certificates.
pub fn cone_certificates(scope: &Scope) -> Criterion {
    let run = || -> Result<(bool, String)> {
        let mut ok = true;
        let mut n = 0;
        for name in scope.pick(&PRESET_NAMES) {
            let rd = preset(&name);
            for j in rd.all_parabolic_subsets() {
                ok &= check_pos_u_intersection(&rd, &j)? && check_pos_u_levi_clause(&rd, &j)? && check_dual_cone(&rd, &j)?;
                n += 1;
            }
        }
        Ok((ok, format!("{n} (datum, J) pairs")))
    };
    Criterion::from_result(5, "cone certificates", run())
}

/// 6. Character-ring identities to height 8.
pub fn satake_identities(scope: &Scope) -> Criterion {
    let run = || -> Result<(bool, String)> {
        let mut ok = true;
        let mut n = 0;
        for name in scope.pick(&["A2", "B2", "G2"]) {
            let rd = preset(&name);
            for j in rd.all_parabolic_subsets() {
                ok &= satake_report(&rd, &rd.parabolic(&j)?, 8)?.all();
                n += 1;
            }
        }
        Ok((ok, format!("{n} (datum, J) pairs")))
    };
    Criterion::from_result(6, "character-ring identities", run())
}

/// A random function with 1 to 3 points in a small box and values `±q^k·c`.
pub fn random_spherical(r: &mut ChaCha8Rng, rd: &RootDatum, p: &crate::root_datum::Parabolic) -> SphericalFunction {
    let k = r.gen_range(1..=3);
    let terms: Vec<_> = (0..k)
        .map(|_| {
            let x: Vec<i64> = (0..rd.rank).map(|_| r.gen_range(-2..=2)).collect();
            let c = &RatFunc::from_int(r.gen_range(1..=5) * if r.gen_bool(0.5) { 1 } else { -1 }) * &RatFunc::q_pow(r.gen_range(-1..=1));
            (x, c)
        })
        .collect();
    SphericalFunction::finite(p, terms)
}

/// 7. Local intertwining round trip.
pub fn local_round_trip(scope: &Scope) -> Criterion {
    let run = || -> Result<(bool, String)> {
        let mut ok = true;
        let mut n = 0;
        let h = 6;
        for (t, name) in scope.pick(&["A1", "A2"]).iter().enumerate() {
            let rd = preset(name);
            for j in rd.borel_and_maximal_subsets() {
                let p = rd.parabolic(&j)?;
                let mu = gk_mu(&rd, &p, h)?;
                let nv = nu(&rd, &p, h)?;
                let mut r = rng(700 + 10 * t as u64 + j.len() as u64 + j.first().map_or(0, |x| *x as u64));
                for _ in 0..100 {
                    let phi = random_spherical(&mut r, &rd, &p);
                    let rt = round_trip(&rd, &p, &mu, &nv, &phi)?;
                    ok &= rt.inverse_after_r && rt.r_after_inverse && rt.points > 0;
                    n += 1;
                }
            }
        }
        Ok((ok, format!("{n} functions, series height {h}")))
    };
    Criterion::from_result(7, "local operator round trip", run())
}

/// 8. Weyl-group sweeps.
pub fn weyl_sweeps(scope: &Scope) -> Criterion {
    let run = || -> Result<(bool, String)> {
        let mut ok = true;
        let mut notes = vec![];
        for name in scope.pick(&["A1", "A2", "B2", "G2", "A3", "B3", "C3"]) {
            let rd = preset(&name);
            let a = verify_vanishing_a(&rd)?;
            let b = verify_vanishing_b(&rd)?;
            let cosets = coset_reports(&rd)?;
            let c_ok = cosets.iter().all(|c| c.representatives && c.conditions && c.w_bullet == c.double_cosets);
            ok &= a.pass() && b.pass() && c_ok;
            notes.push(format!("{name}: A {}/{}, B {}/{}", a.nonvanishing, a.checked, b.nonvanishing, b.checked));
        }
        Ok((ok, notes.join("; ")))
    };
    Criterion::from_result(8, "Weyl identity sweeps", run())
}

fn random_bung(r: &mut ChaCha8Rng, nmax: i64, symbolic: bool) -> GroupoidFunction {
    let k = r.gen_range(1..=3);
    let terms: Vec<(i64, RatFunc)> = (0..k)
        .map(|_| {
            let mut c = RatFunc::from_int(r.gen_range(-4..=4));
            if symbolic && r.gen_bool(0.5) {
                c = &c * &RatFunc::q();
            }
            (r.gen_range(0..=nmax), c)
        })
        .collect();
    GroupoidFunction::finite(Domain::BunG, terms).expect("nonnegative points")
}

fn random_bunt(r: &mut ChaCha8Rng, span: i64) -> GroupoidFunction {
    let k = r.gen_range(1..=3);
    let terms: Vec<(i64, RatFunc)> = (0..k).map(|_| (r.gen_range(-span..=span), RatFunc::from_int(r.gen_range(-3..=3)))).collect();
    GroupoidFunction::finite(Domain::BunT, terms).expect("torus points")
}

/// `L⁻¹L = id` on `n ≤ nmax` and `LL⁻¹ = id` on the finitely supported
/// functions there whose constant term is bounded below.
pub fn global_round_trip(m: &Sl2P1, nmax: i64) -> Result<bool> {
    let w = 2 * nmax + 2;
    let mut ok = true;
    for n in 0..=nmax {
        let f = GroupoidFunction::indicator(Domain::BunG, n)?;
        let back = m.op_l_inverse(&m.op_l(&f, w)?)?;
        ok &= back.agrees_on(&f, 0..=w)?;
    }
    for n in 1..=nmax {
        let c = &m.aut(0) / &m.aut(n);
        let g = GroupoidFunction::finite(Domain::BunG, [(n, RatFunc::one()), (0, -c)])?;
        let g = m.certify_finite(&g)?;
        let h = m.op_l_inverse(&g)?;
        ok &= h.is_finite();
        ok &= m.op_l(&h, w)?.agrees_on(&g, 0..=w)?;
    }
    Ok(ok)
}

/// 9. The global SL2 model.
pub fn global_model(scope: &Scope) -> Criterion {
    if scope.pick(&["A1"]).is_empty() {
        return Criterion::new(9, "global SL2 model", true, "skipped: A1 not in scope".into());
    }
    let run = || -> Result<(bool, String)> {
        let sym = Sl2P1::new(QValue::Symbolic);
        let two = Sl2P1::new(QValue::int(2));
        let three = Sl2P1::new(QValue::int(3));
        let mut r = rng(900);
        // (a)
        let mut a = true;
        for _ in 0..100 {
            let f = random_bung(&mut r, 5, true);
            let phi = random_bunt(&mut r, 5);
            a &= sym.adjunction_residual(&f, &phi)?.is_zero();
            a &= sym.ct_bounded_above(&f, 4)?;
            a &= two.psc_certificate_holds(&f, 8)?;
        }
        // (b)
        let b = global_round_trip(&two, 5)? && global_round_trip(&three, 5)? && global_round_trip(&sym, 3)?;
        // (c)
        let mut c = true;
        for _ in 0..100 {
            let f1 = random_bung(&mut r, 4, true);
            let f2 = random_bung(&mut r, 4, true);
            let b12 = sym.form_b(&f1, &f2)?;
            c &= b12 == sym.form_b(&f2, &f1)?;
            let w = f2.support.hi.unwrap_or(0).max(0);
            c &= b12 == sym.naive_pairing(&sym.op_l(&f1, w)?, &f2)?;
        }
        // (d)
        let sl2 = preset("A1");
        let sign = parabolic_sign(&sl2, &sl2.all_simple());
        let zero = GroupoidFunction::zero(Domain::BunG);
        let lz = two.op_l(&zero, 5)?;
        let d = sign == 1 && two.cuspidal_dimension(5)? == 0 && sym.cuspidal_dimension(5)? == 0 && lz.agrees_on(&zero, 0..=5)?;
        Ok((a && b && c && d, format!("adjunction/CT window {a}, L round trip {b}, B {c}, cuspidal {d} (cuspidal space is zero)")))
    };
    Criterion::from_result(9, "global SL2 model", run())
}

pub fn run_all(scope: &Scope) -> Vec<Criterion> {
    vec![
        gk_oracle(scope),
        inversion(scope),
        nu_constant(scope),
        retraction(scope),
        cone_certificates(scope),
        satake_identities(scope),
        local_round_trip(scope),
        weyl_sweeps(scope),
        global_model(scope),
    ]
}
