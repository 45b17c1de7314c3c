use std::process::Command;

use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_pascal-toeplitz"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn det_methods_agree_across_inputs() {
    let inputs = [
        ("pascal", "fib", "fib", "6"),
        ("pascal", "catalan", "fact", "5"),
        ("pascal", "p2aff:1/2 - 1/2*sqrt(5),1", "p2aff:1/2 + 1/2*sqrt(5),1", "6"),
        ("pascal", "arith:1,i", "arith:1,i", "5"),
        ("toeplitz", "hat(fib)", "hat(fib)", "4"),
        ("toeplitz", "geom:2", "geom:-1/3", "5"),
    ];
    for (kind, alpha, beta, n) in inputs {
        let base = run(&["det", "--kind", kind, "--alpha", alpha, "--beta", beta, "-n", n]);
        assert_eq!(base.0, 0, "{}", base.2);
        for method in ["cofactor", "factorization"] {
            let other = run(&["det", "--kind", kind, "--alpha", alpha, "--beta", beta, "-n", n, "--method", method]);
            assert_eq!(other.1, base.1, "{kind} {alpha} {beta} via {method}");
        }
    }
    // corners differ: every method must refuse
    let (code, _, err) = run(&["det", "--alpha", "fib", "--beta", "lucas", "-n", "3", "--method", "factorization"]);
    assert_eq!(code, 2);
    assert!(err.contains("corner"), "{err}");
}

#[test]
fn closed_form_method() {
    let (code, out, _) = run(&["det", "--alpha", "fib", "--beta", "fib", "-n", "7", "--method", "closed-form:fib-symmetric"]);
    assert_eq!((code, out.as_str()), (0, "-32\n"));
    let (code, _, err) = run(&["det", "--alpha", "fib", "--beta", "fib", "-n", "7", "--method", "closed-form:nope"]);
    assert_eq!(code, 2);
    assert!(err.contains("nope"));
}

#[test]
fn approx_prints_alongside() {
    let (code, out, _) = run(&["det", "--kind", "toeplitz", "--alpha", "const:1/2 + 1/2*sqrt(5)", "--beta", "const:1/2 + 1/2*sqrt(5)", "-n", "1", "--approx"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "1/2 + 1/2*sqrt(5)");
    assert!(lines[1].starts_with("approx: 1.618033988"));
}

#[test]
fn verify_json_and_grid() {
    let (code, out, _) = run(&["verify", "geometric-pascal", "--grid", "rho=2;sigma=3", "--max-n", "5", "--json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["pass"], Value::Bool(true));
    assert_eq!(v["reports"][0]["cases_run"], Value::from(5));

    let (code, _, err) = run(&["verify", "all", "--grid", "rho=1"]);
    assert_eq!(code, 2);
    assert!(err.contains("--grid"));
    let (code, _, _) = run(&["verify", "missing-identity"]);
    assert_eq!(code, 2);
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "all", "--max-n", "5", "--json"];
    assert_eq!(run(&args).1, run(&args).1);
}

#[test]
fn matrix_formats() {
    let (_, table, _) = run(&["matrix", "--alpha", "fib", "--beta", "fib", "-n", "3"]);
    assert_eq!(table, "0  1  1\n1  2  3\n1  3  6\n");
    let (_, csv, _) = run(&["matrix", "--kind", "toeplitz", "--alpha", "lit:1,2", "--beta", "lit:1,3", "-n", "2", "--format", "csv"]);
    assert_eq!(csv, "1,3\n2,1\n");
}

#[test]
fn minors_json() {
    let (code, out, _) = run(&["minors", "--family", "griffin_Q", "--max-n", "4", "--json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["minors"], serde_json::json!(["0", "1", "1", "2"]));
    let (code, _, err) = run(&["minors", "--family", "unknown", "--max-n", "4"]);
    assert_eq!(code, 2);
    assert!(err.contains("unknown"));
}
