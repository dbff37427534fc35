//! Alternating-sum identities over parabolic subsets and double-coset counts.
use spherical::root_datum::preset;
use spherical::weyl_identities::{coset_reports, verify_vanishing_a, verify_vanishing_b};

fn main() {
    for name in ["A2", "B2", "G2", "A3"] {
        let rd = preset(name);
        let (a, b) = (verify_vanishing_a(&rd).unwrap(), verify_vanishing_b(&rd).unwrap());
        let c = coset_reports(&rd).unwrap();
        let ok = c.iter().all(|r| r.w_bullet == r.double_cosets);
        println!("{name}: A {}/{} pass={}  B {}/{} pass={}  cosets ok={ok}", a.nonvanishing, a.checked, a.pass(), b.nonvanishing, b.checked, b.pass());
    }
}
