//! Brute-force measures of Iwasawa cells in U(F) for SL3 over Q_2.
use spherical::padic::{mu_histogram, Group};

fn main() {
    let h = mu_histogram(Group::SL3, 2, 2, 2).unwrap();
    println!("{} cells, total measure {}", h.cells, h.total);
    for (x, m) in h.complete() {
        println!("{x:?}: {m}");
    }
}
