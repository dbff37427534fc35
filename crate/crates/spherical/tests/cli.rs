use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spherical")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn gk_a1_table() {
    let o = run(&["gk", "--datum", "A1", "--height", "6"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "coweight,coefficient\n[0],1\n[1],q - 1\n[2],q^2 - q\n[3],q^3 - q^2\n");
}

#[test]
fn gk_specialized() {
    let o = run(&["gk", "--datum", "A2", "--height", "4", "--q", "3"]);
    assert!(stdout(&o).contains("\"[1,1]\",10\n"));
    let o = run(&["nu", "--datum", "A1", "--height", "2", "--q", "5/2"]);
    assert!(stdout(&o).ends_with("[1],-3/2\n"));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["--bogus"]).status.code(), Some(2));
    assert_eq!(run(&[]).status.code(), Some(2));
    assert_eq!(run(&["gk", "--datum", "nope"]).status.code(), Some(2));
    assert_eq!(run(&["gk", "--q", "1"]).status.code(), Some(2));
    assert_eq!(run(&["oracle-mu", "--group", "SL3", "--coweight", "2,2", "--q", "2", "--precision", "0"]).status.code(), Some(1));
    assert_eq!(run(&["global-sl2", "Linv", "--input", "[[1,\"1\"]]"]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn retract_json() {
    let o = run(&["retract", "--datum", "A2", "--coweight", "1/2,-1"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["retraction"], serde_json::json!(["1/2", "1/4"]));
    assert_eq!(v["J"], serde_json::json!([2]));
}

#[test]
fn oracle_agrees() {
    let o = run(&["oracle-mu", "--group", "SL2", "--coweight", "3", "--q", "3"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["measure"], "18");
    assert_eq!(v["agree"], true);
}

#[test]
fn global_subcommands() {
    let o = run(&["global-sl2", "B", "--f1", "[[1,\"1\"]]", "--f2", "[[2,\"q\"],[0,\"1\"]]"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["symmetric"], true);
    assert_eq!(v["equals_naive_of_L"], true);
    assert!(run(&["global-sl2", "roundtrip", "--q", "2", "--nmax", "4"]).status.success());
    assert!(run(&["--explain-conventions"]).status.success());
}

#[test]
fn verify_all_a2() {
    let o = run(&["verify-all", "--datum", "A2"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["pass"], true);
    assert_eq!(v["checks"].as_array().unwrap().len(), 9);
}
