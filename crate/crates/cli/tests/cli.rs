use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_specint")).args(args).output().unwrap()
}

fn run_env(args: &[&str], key: &str, val: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_specint"))
        .args(args)
        .env(key, val)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn eval_iml_one_one() {
    let o = run(&["eval", "--fn", "iml", "--alpha", "1", "--beta", "1", "--x", "1.0", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    // Ei(1) − γ
    let want = 1.895_117_816_355_936_8 - specint_core::EULER_GAMMA;
    let got = v["value"].as_f64().unwrap();
    assert!(((got - want) / want).abs() < 1e-14, "{got}");
    assert!(v["est_error"].as_f64().unwrap() >= 0.0);
    assert!(v["work"].as_u64().unwrap() > 0);
}

#[test]
fn eval_text_uses_seventeen_digits() {
    let o = run(&["eval", "--fn", "iml", "--alpha", "2", "--beta", "1", "--x", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().next().unwrap(), "value     0");
    let o = run(&["eval", "--fn", "elementary:erf", "--x", "0.5"]);
    let text = stdout(&o);
    let shown = text.lines().next().unwrap().trim_start_matches("value").trim();
    let digits = shown.chars().filter(|c| c.is_ascii_digit()).collect::<String>();
    assert_eq!(digits.trim_start_matches('0').len(), 17, "{shown}");
    let v: f64 = shown.parse().unwrap();
    assert!((v - 0.520_499_877_813_046_5).abs() < 1e-15);
}

#[test]
fn eval_error_exit_codes() {
    let o = run(&["eval", "--fn", "wright", "--alpha", "-0.5", "--beta", "1", "--x", "-20"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("DomainError"));

    let o = run(&["eval", "--fn", "ml", "--alpha", "0", "--beta", "1", "--x", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("InvalidParams"));

    let o = run(&["eval", "--fn", "iml", "--alpha", "1", "--beta", "1", "--x", "40", "--max-terms", "4"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("NoConvergence"));
}

#[test]
fn usage_errors_exit_64() {
    assert_eq!(run(&["eval", "--x", "1"]).status.code(), Some(64));
    assert_eq!(run(&["eval", "--fn", "nope", "--x", "1"]).status.code(), Some(64));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(64));
    assert_eq!(run(&["eval", "--fn", "mi", "--alpha", "1", "--x", "1"]).status.code(), Some(64));
    assert_eq!(run(&["check", "--suite", "nope"]).status.code(), Some(64));
    assert_eq!(run(&["grid", "--fn", "iml", "--alpha", "1", "--beta", "1"]).status.code(), Some(64));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn env_term_budget() {
    let args = ["eval", "--fn", "iml", "--alpha", "1", "--beta", "1", "--x", "40"];
    assert_eq!(run_env(&args, "SPECINT_MAX_TERMS", "4").status.code(), Some(3));
    assert_eq!(run_env(&args, "SPECINT_MAX_TERMS", "400").status.code(), Some(0));
    assert_eq!(run_env(&args, "SPECINT_MAX_TERMS", "lots").status.code(), Some(64));
    let mut with_flag = args.to_vec();
    with_flag.extend(["--max-terms", "400"]);
    assert_eq!(run_env(&with_flag, "SPECINT_MAX_TERMS", "4").status.code(), Some(0));
}

#[test]
fn grid_csv_shape() {
    let o = run(&["grid", "--fn", "iml", "--alpha", "1", "--beta", "1", "--min", "0.1", "--max", "5", "--points", "50"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "x,value,est_error,work");
    assert_eq!(lines.len(), 51);
    assert!(lines.iter().all(|l| l.split(',').count() == 4 && !l.ends_with(',')));
    assert!(!text.contains('\r'));
    assert!(lines[1].starts_with("0.10000000000000001,"));
    assert!(lines[50].starts_with("5,"));
}

#[test]
fn grid_log_spacing() {
    let o = run(&["grid", "--fn", "elementary:e1", "--min", "0.01", "--max", "100", "--points", "5", "--spacing", "log"]);
    assert_eq!(o.status.code(), Some(0));
    let xs: Vec<f64> = stdout(&o).lines().skip(1).map(|l| l.split(',').next().unwrap().parse().unwrap()).collect();
    assert_eq!(xs.len(), 5);
    assert!((xs[2] - 1.0).abs() < 1e-15);
}

#[test]
fn grid_row_errors_are_nan_and_nonzero_exit() {
    let o = run(&["grid", "--fn", "wright", "--alpha", "-0.5", "--beta", "1", "--min", "5", "--max", "15", "--points", "3"]);
    assert_eq!(o.status.code(), Some(2));
    let text = stdout(&o);
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 3);
    assert!(!rows[0].contains("NaN"));
    assert_eq!(rows[2], "15,NaN,NaN,0");
}

#[test]
fn presets_exist() {
    for name in ["ei-alpha", "ei-beta", "mi", "mi-tail", "wi", "wi-tail"] {
        let o = run(&["grid", "--fig", name, "--points", "4"]);
        assert_eq!(o.status.code(), Some(0), "{name}: {}", stderr(&o));
        let text = stdout(&o);
        assert_eq!(text.lines().next().unwrap(), "curve,x,value,est_error,work");
        assert_eq!(text.lines().count(), 1 + 5 * 4);
        assert!(!text.contains("NaN"));
    }
    assert_eq!(run(&["grid", "--fig", "nope"]).status.code(), Some(64));
    assert_eq!(run(&["grid", "--fig", "mi", "--fn", "iml"]).status.code(), Some(64));
}

#[test]
fn check_json_schema() {
    let o = run(&["check", "--suite", "laplace", "--report", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["suite"], "laplace");
    let cases = v["cases"].as_array().unwrap();
    assert!(!cases.is_empty());
    for c in cases {
        for key in ["id", "paper_ref", "max_rel_err", "tol", "status"] {
            assert!(c.get(key).is_some(), "missing {key}");
        }
        assert_eq!(c["status"], "pass");
    }
}

#[test]
fn check_eq19_is_informational() {
    let o = run(&["check", "--suite", "eq19", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    for c in v["cases"].as_array().unwrap() {
        assert_eq!(c["status"], "info");
        assert!(c["tol"].is_null());
    }
}

#[test]
fn check_tables_passes() {
    let o = run(&["check", "--suite", "tables"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.lines().last().unwrap().starts_with("PASS"));
    assert!(text.lines().any(|l| l.starts_with("info") && l.contains("-printed")));
}
