use std::process::Command;

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_rbshuffle"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).expect("utf8 stdout"),
        String::from_utf8(out.stderr).expect("utf8 stderr"),
    )
}

fn eval(expr: &str) -> String {
    let (code, out, err) = run(&["eval", expr]);
    assert_eq!(code, 0, "eval `{expr}` failed: {err}");
    out.trim_end().to_string()
}

#[test]
fn eval_prints_canonical_forms() {
    assert_eq!(eval("lsh([a];[b])"), "-(a*b|1) + (a|b) + (b|a)");
    assert_eq!(eval("qsh([a];[b])"), "(a|b) + (b|a) + (a*b)");
    assert_eq!(eval("P([a,b]) - [1,a,b]"), "0");
    assert_eq!(eval("[a,b]"), "(a|b)");
    assert_eq!(eval("sh(2;3)"), "6*1_K");
    assert_eq!(eval("(2)"), "2");
}

#[test]
fn eval_respects_session_flags() {
    let (code, out, _) = run(&["eval", "sh([a,b];[c])", "--gens", "a,b,c", "--base", "noncomm"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim_end(), "(a|b|c) + (a|c|b) + (c|a|b)");
    let (code, out, _) = run(&["eval", "qsh([a];[b])", "--theta", "-1/2"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim_end(), "(a|b) + (b|a) - 1/2*(a*b)");
    let (code, out, _) = run(&[
        "eval", "delta([h])", "--gens", "h:prim", "--case", "1",
    ]);
    assert_eq!(code, 0);
    assert_eq!(out.trim_end(), "(h)(x)(1) + (1)(x)(h)");
}

#[test]
fn eval_round_trips_through_its_own_notation() {
    for expr in [
        "lsh([a];[b])",
        "qsh([a];[b])",
        "rsh([a,b];[b])",
        "sh(2;3)",
        "bsh([a];[b])",
        "dagger([a,b])",
        "P([a]) * 3",
        "prec([a];[b])",
        "succ([a];[a,b])",
        "dot([a];[b])",
        "Q([a]) - [a,1]",
        "omega([a,b])",
    ] {
        let once = eval(expr);
        let twice = eval(&once);
        assert_eq!(once, twice, "render/reparse fixpoint for `{expr}`");
    }
}

#[test]
fn eval_reports_parse_errors_with_position() {
    let (code, out, err) = run(&["eval", "qsh([a];[b,c]"]);
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(err.contains("parse error at line 1, column 14"), "got: {err}");
    assert!(err.contains("expected"), "got: {err}");
}

#[test]
fn eval_reports_undeclared_generators() {
    let (code, _, err) = run(&["eval", "eps(delta)"]);
    assert_eq!(code, 2);
    assert!(err.contains("undeclared"), "got: {err}");
}

#[test]
fn usage_errors_exit_two() {
    let (code, _, _) = run(&["check", "--suite", "rb", "--product", "xyz"]);
    assert_eq!(code, 2);
    let (code, _, err) = run(&["check", "--suite", "bogus"]);
    assert_eq!(code, 2);
    assert!(err.contains("unknown suite"), "got: {err}");
    let (code, _, _) = run(&["eval", "[a]", "--case", "5"]);
    assert_eq!(code, 2);
    let (code, _, _) = run(&["eval", "[a]", "--theta", "1/0"]);
    assert_eq!(code, 2);
    let (code, _, _) = run(&["eval", "[a]", "--gens", "a,,b"]);
    assert_eq!(code, 2);
}

#[test]
fn check_td_under_left_shift_passes() {
    let (code, out, _) = run(&["check", "--suite", "td", "--product", "lsh"]);
    assert_eq!(code, 0);
    assert!(out.contains("[PASS] identity=td"), "got: {out}");
}

#[test]
fn check_rb_under_right_shift_fails_with_counterexample() {
    let (code, out, _) = run(&["check", "--suite", "rb", "--product", "rsh", "--theta", "1"]);
    assert_eq!(code, 1);
    assert!(out.contains("[FAIL] identity=rota_baxter(1)"), "got: {out}");
    assert!(out.contains("inputs:"), "got: {out}");
    assert!(out.contains("lhs:"), "got: {out}");
    assert!(out.contains("rhs:"), "got: {out}");
}

#[test]
fn check_output_is_deterministic() {
    let first = run(&["check", "--suite", "rb", "--seed", "7", "--format", "json"]);
    let second = run(&["check", "--suite", "rb", "--seed", "7", "--format", "json"]);
    assert_eq!(first, second);
    assert_eq!(first.0, 0);
    let first = run(&["check", "--suite", "omega"]);
    let second = run(&["check", "--suite", "omega"]);
    assert_eq!(first, second);
}

#[test]
fn check_json_rows_parse() {
    let (code, out, _) = run(&["check", "--suite", "spitzer", "--format", "json"]);
    assert_eq!(code, 0);
    for line in out.lines() {
        let row: serde_json::Value = serde_json::from_str(line).expect("json row");
        assert_eq!(row["pass"], serde_json::json!(true));
        assert!(row["identity"].as_str().unwrap().starts_with("spitzer"));
        assert!(row["counterexample"].is_null());
    }
}

#[test]
fn eval_json_lists_exact_coefficients() {
    let (code, out, _) = run(&["eval", "qsh([a];[b])", "--theta", "1/3", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).expect("json value");
    let terms = v["terms"].as_array().expect("terms");
    assert_eq!(terms.len(), 3);
    assert!(terms
        .iter()
        .any(|t| t["coeff"] == serde_json::json!("1/3") && t["word"] == serde_json::json!(["a*b"])));
}

#[test]
fn spitzer_command_passes() {
    let (code, out, _) = run(&["spitzer"]);
    assert_eq!(code, 0);
    assert!(out.contains("identity=spitzer(1,4)"), "got: {out}");
    assert_eq!(out.matches("[PASS]").count(), out.lines().count());
}

#[test]
fn primitives_lists_powers_of_a_single_generator() {
    let (code, out, _) = run(&["primitives", "--gens", "a", "--case", "2", "--max-len", "3"]);
    assert_eq!(code, 0);
    assert_eq!(out, "(a)\n(a^2)\n(a^3)\n");
}

#[test]
fn decompose_factors_basis_words() {
    let (code, out, _) = run(&["decompose", "(a*b|a)"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim_end(), "prec(dot([a];[b]);[a])");
    let (code, out, _) = run(&["decompose", "(a)"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim_end(), "[a]");
    // sums are not single basis words
    let (code, _, err) = run(&["decompose", "sh([a];[b])"]);
    assert_eq!(code, 2);
    assert!(err.contains("basis word"), "got: {err}");
}

#[test]
fn decompose_output_reevaluates_to_its_input() {
    for word in ["(a*b|a)", "(a|b|a)", "(a^2)", "(b|a*b^2)"] {
        let (code, rendered, err) = run(&["decompose", word]);
        assert_eq!(code, 0, "decompose `{word}`: {err}");
        let (code, back, err) = run(&["eval", rendered.trim_end()]);
        assert_eq!(code, 0, "re-eval `{rendered}`: {err}");
        assert_eq!(back.trim_end(), eval(word), "round trip for `{word}`");
    }
}
