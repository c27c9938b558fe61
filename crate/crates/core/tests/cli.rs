use std::process::Command;

use serde_json::Value;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

impl Run {
    fn json(&self) -> Value {
        serde_json::from_str(&self.stdout).unwrap_or_else(|e| panic!("{e}: {}", self.stdout))
    }
}

fn run_with(args: &[&str], env: &[(&str, &str)]) -> Run {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_voa-forge"));
    cmd.args(args).env_remove("VOA_FORGE_MAX_STEPS");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let out = cmd.output().expect("binary runs");
    Run {
        code: out.status.code().expect("exit code"),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn run(args: &[&str]) -> Run {
    run_with(args, &[])
}

fn is_fraction(s: &str) -> bool {
    let Some((n, d)) = s.split_once('/') else {
        return false;
    };
    let n = n.strip_prefix('-').unwrap_or(n);
    !n.is_empty() && !d.is_empty() && n.chars().all(|c| c.is_ascii_digit()) && d.chars().all(|c| c.is_ascii_digit())
}

#[test]
fn verified_realization_reports_exact_fractions() {
    let r = run(&["realization", "--name", "wakimoto", "--p", "2", "--verify"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let v = r.json();
    assert_eq!(v["level"], "-3/2");
    assert_eq!(v["central_charge"], "-9/1");
    assert!(v["entries"].as_array().unwrap().iter().all(|e| e["ok"] == true));
}

#[test]
fn states_serialize_momenta_as_fractions() {
    let r = run(&["ope", "u[-1]", "u[-1]", "--p", "2"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let v = r.json();
    let poles = v["poles"].as_array().unwrap();
    assert_eq!(poles.len(), 1);
    assert_eq!(poles[0]["order"], 2);
    let term = &poles[0]["state"]["terms"][0];
    assert_eq!(term["c"], "1/1");
    for m in term["momentum"].as_array().unwrap() {
        assert!(is_fraction(m.as_str().unwrap()), "{m}");
    }
}

#[test]
fn text_output_is_available() {
    let r = run(&["ope", "u[-1]", "u[-1]", "--p", "2", "--out", "text"]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.starts_with("(z-w)^-2:"), "{}", r.stdout);
    let r = run(&[
        "omega",
        "--p",
        "2",
        "--r",
        "1",
        "--s",
        "1",
        "--classify",
        "--out",
        "text",
    ]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.contains("(1)(ii)"), "{}", r.stdout);
}

#[test]
fn c2_casimir_check_passes() {
    let r = run(&["c2", "--p", "1", "--check", "casimir"]);
    assert_eq!(r.code, 0);
    let v = r.json();
    assert_eq!(v["least_power"], 2);
    assert_eq!(v["image"], "alpha^2");
}

#[test]
fn qgroup_reduces_a_word() {
    let r = run(&["qgroup", "--variant", "a", "--p", "3", "--reduce", "x1* x1"]);
    assert_eq!(r.code, 0);
    let v = r.json();
    assert_eq!(v["normal"], "(-1 + q)*x1*x1* + (-1)*K1*K1 + 1");
    assert_eq!(v["complete"], true);
}

#[test]
fn failing_check_exits_with_one() {
    let r = run(&[
        "kernel",
        "--p",
        "2",
        "--screenings",
        "Qminus",
        "--compare",
        "--max-conf",
        "2",
    ]);
    assert_eq!(r.code, 1);
    assert_eq!(r.json()["pass"], false);
}

#[test]
fn step_budget_from_the_environment() {
    let r = run_with(
        &["qgroup", "--variant", "a", "--p", "3", "--check", "fg-inverse"],
        &[("VOA_FORGE_MAX_STEPS", "3")],
    );
    assert_eq!(r.code, 3);
    assert_eq!(r.json()["verdict"], "INCONCLUSIVE");
}

#[test]
fn flag_overrides_the_environment() {
    let args = [
        "qgroup",
        "--variant",
        "a",
        "--p",
        "3",
        "--check",
        "fg-inverse",
        "--max-steps",
        "100000",
    ];
    let r = run_with(&args, &[("VOA_FORGE_MAX_STEPS", "3")]);
    assert_eq!(r.code, 0, "{}", r.stderr);
}

#[test]
fn malformed_budget_is_a_usage_error() {
    let r = run_with(
        &["qgroup", "--check", "super-serre"],
        &[("VOA_FORGE_MAX_STEPS", "lots")],
    );
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("VOA_FORGE_MAX_STEPS"), "{}", r.stderr);
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(run(&["bogus"]).code, 2);
    assert_eq!(run(&["realization"]).code, 2);
    assert_eq!(run(&["c2", "--check", "radical"]).code, 2);
    let r = run(&["omega", "--p", "2", "--r", "3", "--s", "1"]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.starts_with("error:"), "{}", r.stderr);
    assert!(r.stdout.is_empty());
    assert_eq!(run(&["ope", "e^{u+w}", "u[-1]"]).code, 2);
}

#[test]
fn help_exits_cleanly() {
    let r = run(&["--help"]);
    assert_eq!(r.code, 0);
    for sub in [
        "realization",
        "ope",
        "screen",
        "kernel",
        "omega",
        "char",
        "check",
        "c2",
        "qgroup",
        "suite",
    ] {
        assert!(r.stdout.contains(sub), "{sub}");
    }
}

#[test]
fn quick_suite_passes() {
    let r = run(&["suite", "--out", "text"]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    let lines: Vec<&str> = r
        .stdout
        .lines()
        .filter(|l| l.starts_with("PASS") || l.starts_with("FAIL"))
        .collect();
    assert_eq!(lines.len(), 10, "{}", r.stdout);
    assert!(lines.iter().all(|l| l.starts_with("PASS")));
}
