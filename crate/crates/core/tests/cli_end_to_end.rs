mod common;

use common::{check_invocation, exit_code_matrix, random_supernatural};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::process::Command;

const BIN: &str = env!("CARGO_BIN_EXE_steinitz");

fn run(args: &[&str]) -> (i32, String) {
    let out = Command::new(BIN).args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
    )
}

#[test]
fn exit_code_matrix_holds() {
    let failures: Vec<String> = exit_code_matrix()
        .into_iter()
        .filter_map(|(args, code, out)| check_invocation(BIN, &args, code, out).err())
        .collect();
    assert!(failures.is_empty(), "{failures:#?}");
}

#[test]
fn help_and_version_succeed() {
    assert_eq!(run(&["--help"]).0, 0);
    assert_eq!(run(&["--version"]).0, 0);
    assert!(run(&["corner", "--help"]).1.contains("relative rank"));
}

#[test]
fn parse_round_trips_through_the_binary() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..40 {
        let s = random_supernatural(&mut rng);
        let text = s.to_string();
        let (code, out) = run(&["parse", &text]);
        assert_eq!(code, 0);
        assert_eq!(out.trim_end(), text);
    }
}

#[test]
fn enumerate_lists_the_class_in_order() {
    let (code, out) = run(&["enumerate", "2^inf", "--bound", "3"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "2^inf");
    assert!(lines.contains(&"2^inf*3"));
    assert!(lines.iter().all(|l| l.starts_with("2^inf")));
}

#[test]
fn trial_bound_limits_primality_checks() {
    // 1000003 is prime, but confirming it needs divisors up to 1000.
    assert_eq!(run(&["parse", "1000003"]).0, 0);
    assert_eq!(run(&["--trial-bound", "10", "parse", "1000003"]).0, 2);
}

#[test]
fn verify_reports_and_summarizes() {
    let (code, out) = run(&[
        "verify",
        "--seed",
        "3",
        "--max-order",
        "24",
        "--trials",
        "5",
    ]);
    assert_eq!(code, 0, "{out}");
    let last = out.lines().last().unwrap();
    assert!(last.starts_with("SUMMARY checks=") && last.ends_with(" failed=0"));
    for line in out.lines().filter(|l| !l.starts_with("SUMMARY")) {
        let fields: Vec<&str> = line.split(' ').collect();
        assert_eq!(fields[0], "PASS", "{line}");
        assert!(fields[2].starts_with("stage="));
        assert!(fields[3].starts_with("expected="));
        assert!(fields[4].starts_with("got="));
    }
}
