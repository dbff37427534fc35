use std::process::Command;

use spherical::verify::{run_all, Scope};

fn verify_all_bytes() -> Option<Vec<u8>> {
    let out = Command::new(env!("CARGO_BIN_EXE_spherical")).arg("verify-all").output().ok()?;
    out.status.success().then_some(out.stdout)
}

fn main() {
    let mut failed = 0;
    for c in run_all(&Scope::all()) {
        let tag = if c.pass { "PASS" } else { "FAIL" };
        failed += usize::from(!c.pass);
        println!("{tag} {:>2} {}: {}", c.id, c.name, c.detail);
    }
    let det = match (verify_all_bytes(), verify_all_bytes()) {
        (Some(a), Some(b)) => a == b,
        _ => false,
    };
    failed += usize::from(!det);
    println!("{} 10 determinism: verify-all output identical across two runs", if det { "PASS" } else { "FAIL" });
    if failed > 0 {
        std::process::exit(1);
    }
}
