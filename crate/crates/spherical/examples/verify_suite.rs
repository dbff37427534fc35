//! Run the acceptance checks one at a time with timings.
use std::time::Instant;

use spherical::verify::*;

fn main() {
    let scope = Scope::all();
    let checks: [fn(&Scope) -> Criterion; 9] =
        [gk_oracle, inversion, nu_constant, retraction, cone_certificates, satake_identities, local_round_trip, weyl_sweeps, global_model];
    for f in checks {
        let t = Instant::now();
        let c = f(&scope);
        println!("{} {:>2} {:<28} {:>7.2}s  {}", if c.pass { "PASS" } else { "FAIL" }, c.id, c.name, t.elapsed().as_secs_f64(), c.detail);
    }
}
