use std::path::PathBuf;
use std::process::{Command, Output};

use gradedexp::summary::Summary;

fn instance(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../instances").join(name)
}

fn run(args: &[&str], envs: &[(&str, &str)]) -> Output {
    let mut c = Command::new(env!("CARGO_BIN_EXE_gradedexp"));
    c.args(args).env_remove("GRADEDEXP_CAP");
    for (k, v) in envs {
        c.env(k, v);
    }
    c.output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn check_writes_a_summary() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("z4.txt");
    let z4 = instance("z4.spec");
    let o = run(&["check", "--instance", z4.to_str().unwrap(), "--subgroup", "K", "--out", out.to_str().unwrap()], &[]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let s = Summary::parse(&std::fs::read_to_string(&out).unwrap());
    assert_eq!(s.get("lhs"), Some("8"));
    assert_eq!(s.get("rhs"), Some("8"));
    assert_eq!(s.get("holds"), Some("true"));
    assert_eq!(s.get("command"), Some("check"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(code(&run(&["expconj", "--bogus"], &[])), 2);
    assert_eq!(code(&run(&[], &[])), 2);
    let z4 = instance("z4.spec");
    let o = run(&["expconj", "--instance", z4.to_str().unwrap()], &[("GRADEDEXP_CAP", "lots")]);
    assert_eq!(code(&o), 2);
}

#[test]
fn rejected_instances_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.spec");
    std::fs::write(&bad, "group { catalog: \"Z4\" }\nsimple { H: [0], tuple: [9] }\n").unwrap();
    let o = run(&["validate", "--instance", bad.to_str().unwrap()], &[]);
    assert_eq!(code(&o), 1);
    assert!(String::from_utf8_lossy(&o.stderr).contains("simple[0].tuple[0]"));

    let z4 = instance("z4.spec");
    let o = run(&["trace", "--instance", z4.to_str().unwrap(), "--subgroup", "0,1"], &[]);
    assert_eq!(code(&o), 1);
}

#[test]
fn tiny_cap_rejects_the_build() {
    let ut = instance("upper-triangular.spec");
    assert_eq!(code(&run(&["validate", "--instance", ut.to_str().unwrap()], &[])), 0);
    assert_eq!(code(&run(&["validate", "--instance", ut.to_str().unwrap()], &[("GRADEDEXP_CAP", "2")])), 1);
}

#[test]
fn other_subcommands_succeed() {
    let d4 = instance("d4-klein.spec");
    let env = instance("envelope.spec");
    let d4 = d4.to_str().unwrap();
    for args in [
        vec!["expconj", "--instance", d4, "--oracle"],
        vec!["decompose", "--instance", d4, "--subgroup", "N"],
        vec!["check", "--instance", d4, "--subgroup", "all", "--normal", "N"],
        vec!["trace", "--instance", d4, "--subgroup", "N", "--format", "kv"],
        vec!["codim", "--instance", d4, "--n-max", "2", "--graded"],
        vec!["envelope", "--instance", env.to_str().unwrap(), "--generators", "2"],
        vec!["sweep", "--count", "3", "--subgroup-mode", "extremes"],
    ] {
        let o = run(&args, &[]);
        assert_eq!(code(&o), 0, "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
        assert!(!o.stdout.is_empty());
    }
}
