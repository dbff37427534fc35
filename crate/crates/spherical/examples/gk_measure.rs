//! The Gindikin-Karpelevich measure, its inverse, and the character-ring check.
use spherical::hecke::{gk_mu, nu, satake_report, Basis};
use spherical::root_datum::preset;

fn main() {
    let rd = preset("A2");
    let b = rd.parabolic(&[]).unwrap();
    let mu = gk_mu(&rd, &b, 4).unwrap();
    let nv = nu(&rd, &b, 4).unwrap();
    for (x, c) in mu.terms(Basis::Indicator) {
        println!("mu{x:?} = {c}    nu{x:?} = {}", nv.indicator_coeff(&x));
    }
    println!("mu * nu = 1: {}", mu.convolve(&nv).unwrap().is_unit());
    let p = rd.parabolic(&[0]).unwrap();
    println!("character ring identities for J = {{1}}: {:?}", satake_report(&rd, &p, 6).unwrap());
}
