use std::process::{Command, Output};

use poisson_elim::expr_io::cert_from_json;
use poisson_elim::verify_certificate;

fn pelim(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pelim"))
        .args(args)
        .output()
        .expect("pelim runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn poisson_bracket_of_generators() {
    let o = pelim(&["--alg", "witt+", "pbracket", "e[1]", "e[2]"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "e[3]");
}

#[test]
fn bracket_in_witt() {
    let o = pelim(&["--alg", "witt", "bracket", "e[-2]", "e[5]"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "7*e[3]");
}

#[test]
fn partial_reduction_prints_identity() {
    let o = pelim(&[
        "--alg",
        "witt+",
        "reduce",
        "--partial",
        "e[4]",
        "--by",
        "e[1]^2",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "remainder: 0\nidentity: (2*e[1]) * (e[4]) = 0 + (1/2) * D[e[3]](e[1]^2)\nverified: true\n"
    );
}

#[test]
fn full_reduction_prints_identity() {
    let o = pelim(&["--alg", "witt+", "reduce", "e[1]^3", "--by", "e[1]^2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("identity: (1) * (e[1]^3) = 0 + (e[1]) * (e[1]^2)"));
}

#[test]
fn json_certificate_round_trips() {
    let o = pelim(&[
        "--alg",
        "witt",
        "--format",
        "json",
        "reduce",
        "e[-2]*e[4]",
        "--by",
        "e[-1]^2 + e[1]",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let c = cert_from_json(&stdout(&o)).unwrap();
    assert!(verify_certificate(c.algebra, &c));
    assert_eq!(c.remainder.to_string(), "-4*e[-2]*e[-1]*e[2]");
}

#[test]
fn membership_verdicts_set_exit_code() {
    let yes = pelim(&["--alg", "witt+", "l-member", "e[1]", "e[4]"]);
    assert_eq!(yes.status.code(), Some(0));
    assert!(stdout(&yes).starts_with("verdict: true"));
    let no = pelim(&["--alg", "witt+", "l-member", "e[1]", "e[2]"]);
    assert_eq!(no.status.code(), Some(1));
    assert!(stdout(&no).starts_with("verdict: false"));
}

#[test]
fn json_report_fields() {
    let o = pelim(&[
        "--alg", "witt+", "--format", "json", "l-member", "e[1]", "e[4]",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["verdict"], true);
    assert_eq!(v["witness"], serde_json::json!(["e[3]"]));
    assert_eq!(v["failing_pair"], serde_json::Value::Null);
}

#[test]
fn usage_and_parse_errors_exit_2() {
    let missing = pelim(&["pbracket", "e[1]", "e[2]"]);
    assert_eq!(missing.status.code(), Some(2));
    assert!(stderr(&missing).contains("--alg"));
    let syntax = pelim(&["--alg", "witt+", "pbracket", "e[1", "e[2]"]);
    assert_eq!(syntax.status.code(), Some(2));
    assert!(stderr(&syntax).contains("syntax error at 3"));
    let invalid = pelim(&["--alg", "witt+", "pbracket", "e[0]", "e[2]"]);
    assert_eq!(invalid.status.code(), Some(2));
    let lemma = pelim(&["--alg", "cartan-w:2", "verify-lemma", "4.3", "--bound", "3"]);
    assert_eq!(lemma.status.code(), Some(2));
}

#[test]
fn step_limit_exits_3() {
    let o = pelim(&[
        "--alg",
        "witt+",
        "--max-steps",
        "0",
        "reduce",
        "e[1]^3",
        "--by",
        "e[1]^2",
    ]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("did not terminate"));
}

#[test]
fn dagger_and_cofinite_checks() {
    let o = pelim(&["--alg", "witt", "check-dagger", "--window", "-3", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let v = pelim(&["--alg", "virasoro", "check-dagger", "--window", "-5", "5"]);
    assert_eq!(v.status.code(), Some(1));
    let z = pelim(&[
        "--alg",
        "virasoro",
        "check-cofinite",
        "z",
        "--window",
        "-6",
        "6",
    ]);
    assert_eq!(z.status.code(), Some(1));
}

#[test]
fn jacobi_test_passes() {
    let o = pelim(&[
        "--alg",
        "loop-sl2",
        "jacobi-test",
        "--window",
        "-3",
        "3",
        "--samples",
        "200",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}
