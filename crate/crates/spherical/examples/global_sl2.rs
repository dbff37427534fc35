//! Constant terms, Eisenstein series and the operators L, L^-1 for SL2 over P^1.
use spherical::global_sl2::{Domain, GroupoidFunction, Sl2P1};
use spherical::qfield::{QValue, RatFunc};

fn main() {
    let m = Sl2P1::new(QValue::Symbolic);
    let f = GroupoidFunction::indicator(Domain::BunG, 2).unwrap();
    let ct = m.ct_b(&f, Some((-3, 2))).unwrap();
    for d in -3..=2 {
        println!("CT 1_2 ({d}) = {}", ct.get(d).unwrap());
    }
    let lf = m.op_l(&f, 4).unwrap();
    for n in 0..=4 {
        println!("L 1_2 ({n}) = {}", lf.get(n).unwrap());
    }
    println!("L^-1 L 1_2 = 1_2: {}", m.op_l_inverse(&lf).unwrap().agrees_on(&f, 0..=4).unwrap());
    let g = GroupoidFunction::finite(Domain::BunG, [(1, RatFunc::from_int(1)), (2, RatFunc::q())]).unwrap();
    println!("B(1_2, g) = {} = B(g, 1_2) = {}", m.form_b(&f, &g).unwrap(), m.form_b(&g, &f).unwrap());
}
