//! Graded pieces of Lie(U_P), their exterior powers, and decompositions.
use spherical::charring::{decompose_into_irreducibles, exterior_power, u_p_graded_pieces};
use spherical::root_datum::preset;

fn main() {
    let rd = preset("A3");
    let p = rd.parabolic(&[0, 2]).unwrap();
    for g in u_p_graded_pieces(&rd, &p).unwrap() {
        println!("level {}: {} weights", g.level, g.weights.len());
        for n in 0..=g.weights.len() {
            let f = exterior_power(&g, n, rd.rank);
            let d = decompose_into_irreducibles(&rd, &p, &f).unwrap();
            println!("  Lambda^{n}: highest weights {:?}", d.terms);
        }
    }
}
