//! Cone membership and the Langlands retraction.
use spherical::cones::{cone_member, langlands_retraction, ConeId};
use spherical::linalg::Q;
use spherical::root_datum::preset;

fn main() {
    let rd = preset("B2");
    let x = vec![Q::new(3.into(), 2.into()), Q::from_integer((-1).into())];
    let show = |v: &[Q]| v.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", ");
    for id in [ConeId::PosG, ConeId::PosU(vec![0]), ConeId::DomM(vec![0]), ConeId::NegPosGP(vec![1])] {
        println!("({}) in {id}: {}", show(&x), cone_member(&rd, &id, &x).unwrap());
    }
    let (l, j) = langlands_retraction(&rd, &x).unwrap();
    println!("retraction ({}), J = {j:?}", show(&l));
}
