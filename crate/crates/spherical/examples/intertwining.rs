//! The K-invariant intertwining operator and its inverse on a finitely supported function.
use spherical::hecke::{gk_mu, nu};
use spherical::intertwining::{apply_r_inverse_k, apply_r_k, SphericalFunction};
use spherical::qfield::RatFunc;
use spherical::root_datum::preset;

fn main() {
    let rd = preset("A2");
    let p = rd.parabolic(&[1]).unwrap();
    let h = 6;
    let (mu, nv) = (gk_mu(&rd, &p, h).unwrap(), nu(&rd, &p, h).unwrap());
    let phi = SphericalFunction::finite(&p, [(vec![1, 1], RatFunc::one()), (vec![0, 1], RatFunc::q())]);
    let r = apply_r_k(&rd, &p, &mu, &phi, None).unwrap();
    let back = apply_r_inverse_k(&rd, &p, &nv, &r, None).unwrap();
    for (x, c) in &r.values {
        println!("R phi {x:?} = {c}");
    }
    let pts = phi.window_points(&rd, &p, r.window.unwrap()).unwrap();
    println!("R^-1 R phi = phi on {} window points: {}", pts.len(), back.restrict_agrees(&phi, &pts));
}
