use std::process::{Command, Output};

use expratio::{
    eval_f, eval_g, eval_h, eval_p, eval_q, FParams, GParams, HParams, PParams, QParams,
};
use serde_json::Value;

fn expratio(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_expratio"))
        .args(args)
        .env_remove("NO_COLOR")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = expratio(args);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    serde_json::from_str(&stdout(&out)).unwrap()
}

#[test]
fn table_matches_golden_files() {
    for (format, golden) in [
        ("text", include_str!("golden/table.txt")),
        ("csv", include_str!("golden/table.csv")),
        ("json", include_str!("golden/table.json")),
    ] {
        let out = expratio(&["table", "--format", format]);
        assert_eq!(out.status.code(), Some(0));
        assert_eq!(stdout(&out), golden, "{format}");
    }
}

#[test]
fn table_shape() {
    let text = stdout(&expratio(&["table"]));
    assert_eq!(text.lines().count(), 13);
    let csv = stdout(&expratio(&["table", "--format", "csv"]));
    assert_eq!(
        csv.lines().next(),
        Some("interval,direction,A,B,C,D,E,ordering")
    );
    assert!(csv
        .lines()
        .any(|l| l == "(-inf,0),increasing,>=0,,,,>=0,lambda>mu"));
    let rows = json(&["table", "--format", "json"]);
    assert_eq!(rows.as_array().unwrap().len(), 12);
}

#[test]
fn eval_single_points() {
    let out = expratio(&[
        "eval", "H", "3", "1", "2", "0", "--t", "1", "--format", "csv",
    ]);
    assert_eq!(stdout(&out), "t,value\n1.0,2.718281828459045\n");
    let out = expratio(&[
        "eval", "H", "1", "0", "2", "0", "--t", "0", "--format", "csv",
    ]);
    assert_eq!(stdout(&out), "t,value\n0.0,0.5\n");
    let out = expratio(&["eval", "h", "1", "0", "2", "0", "--t", "0"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("0.5"));
}

#[test]
fn csv_round_trips_bit_for_bit() {
    let cases: [(&str, &[f64]); 5] = [
        ("H", &[2.5, -1.0, 0.5, 3.0]),
        ("P", &[2.0, 3.0, 5.0, 7.0]),
        ("Q", &[-0.5, 0.25]),
        ("G", &[0.5, 2.0]),
        ("F", &[-1.0, 1.5]),
    ];
    for (name, params) in cases {
        let shown: Vec<String> = params.iter().map(|x| x.to_string()).collect();
        let mut args = vec!["eval", name];
        args.extend(shown.iter().map(String::as_str));
        args.extend(["--range", "-7.3", "12.1", "97", "--format", "csv"]);
        let out = expratio(&args);
        assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
        let text = stdout(&out);
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("t,value"));
        let mut rows = 0;
        for line in lines {
            let (t, v) = line.split_once(',').unwrap();
            let (t, v): (f64, f64) = (t.parse().unwrap(), v.parse().unwrap());
            let p = params;
            let direct = match name {
                "H" => eval_h(&HParams::new(p[0], p[1], p[2], p[3]).unwrap(), t),
                "P" => eval_p(&PParams::new(p[0], p[1], p[2], p[3]).unwrap(), t),
                "Q" => eval_q(&QParams::new(p[0], p[1]).unwrap(), t),
                "G" => eval_g(&GParams::new(p[0], p[1]).unwrap(), t),
                _ => eval_f(&FParams::new(p[0], p[1]).unwrap(), t),
            }
            .unwrap();
            assert_eq!(v.to_bits(), direct.to_bits(), "{name} at {t}");
            rows += 1;
        }
        assert_eq!(rows, 97);
    }
}

#[test]
fn log_range_is_mirrored() {
    let doc = json(&[
        "eval", "Q", "0", "0.5", "--range", "0.01", "100", "4", "--log", "--format", "json",
    ]);
    let ts: Vec<f64> = doc["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["t"].as_f64().unwrap())
        .collect();
    assert_eq!(ts.len(), 8);
    assert_eq!(ts[0], -100.0);
    assert_eq!(ts[7], 100.0);
    for (a, b) in ts.iter().zip(ts.iter().rev()) {
        assert_eq!(*a, -*b);
    }
    assert_eq!(doc["function"], "Q");
}

#[test]
fn bad_parameters_exit_two() {
    let out = expratio(&["eval", "H", "1", "0", "1", "0", "--t", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("(α,β) = (λ,μ)"), "{}", stderr(&out));
    let out = expratio(&["eval", "H", "1", "1", "2", "0", "--t", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("α"));
    for args in [
        &["eval", "H", "1", "0", "2", "--t", "1"][..],
        &["eval", "H", "1", "0", "2", "0"],
        &["eval", "H", "1", "0", "2", "0", "--range", "0", "1", "0"],
        &["eval", "H", "1", "0", "2", "0", "--range", "0", "1"],
        &["eval", "H", "1", "0", "2", "0", "--t", "x"],
        &["eval", "P", "-1", "2", "3", "4", "--t", "1"],
        &["eval", "Q", "0", "1", "--t", "1"],
        &["eval", "G", "2", "1", "--t", "1"],
        &["classify", "G", "1", "2"],
        &["classify", "H", "1", "0", "2", "0", "--format", "xml"],
        &["verify", "--draws", "0"],
        &["verify", "--draws", "-3"],
        &["frobnicate"],
        &[],
    ] {
        let out = expratio(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}: {}", stderr(&out));
        assert!(out.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn help_and_version_succeed() {
    for args in [&["--help"][..], &["--version"], &["eval", "--help"]] {
        assert_eq!(expratio(args).status.code(), Some(0), "{args:?}");
    }
}

#[test]
fn classify_logistic_ratio() {
    let out = expratio(&["classify", "H", "1", "0", "2", "0"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("(−∞,∞)  decreasing"), "{text}");
    assert!(text.contains("log-concave"));
    assert!(text.contains("ratio 0.5"));
    assert!(text.contains("3-log-convex on (0,∞)"));
    assert!(text.contains("E is inside the zero band"));

    let doc = json(&["classify", "H", "1", "0", "2", "0", "--format", "json"]);
    let report = &doc["report"];
    assert_eq!(report["monotonicity"]["whole_line"]["kind"], "decreasing");
    assert_eq!(report["convexity"]["kind"], "log_concave");
    assert_eq!(report["convexity"]["ratio"], 0.5);
    assert_eq!(report["third_order"]["kind"], "convex_pos_concave_neg");
    assert_eq!(report["zero_band_hits"], serde_json::json!(["E"]));
    assert_eq!(report["invariants"]["A"], -1.0);
}

#[test]
fn classify_q_reports_log_convexity() {
    let doc = json(&["classify", "Q", "0", "2", "--format", "json"]);
    assert_eq!(doc["report"]["convexity"]["kind"], "log_convex");
    assert_eq!(doc["report"]["convexity"]["ratio"], 2.0);
}

/// Replaces every number by a marker so documents can be compared field by field.
fn shape(v: &Value) -> Value {
    match v {
        Value::Number(_) => Value::Null,
        Value::Array(a) => Value::Array(a.iter().map(shape).collect()),
        Value::Object(o) => Value::Object(o.iter().map(|(k, v)| (k.clone(), shape(v))).collect()),
        other => other.clone(),
    }
}

#[test]
fn p_report_matches_h_on_logarithms() {
    for h in [
        [2.0_f64.ln(), 3.0_f64.ln(), 5.0_f64.ln(), 7.0_f64.ln()],
        [0.3, -1.2, 2.5, 0.9],
        [-2.0, 1.0, -0.5, -3.0],
    ] {
        let hs: Vec<String> = h.iter().map(|x| x.to_string()).collect();
        let ps: Vec<String> = h.iter().map(|x| x.exp().to_string()).collect();
        let mut h_args = vec!["classify", "H"];
        h_args.extend(hs.iter().map(String::as_str));
        h_args.extend(["--format", "json"]);
        let mut p_args = vec!["classify", "P"];
        p_args.extend(ps.iter().map(String::as_str));
        p_args.extend(["--format", "json"]);
        let hr = json(&h_args)["report"].clone();
        let pr = json(&p_args)["report"].clone();
        assert_eq!(shape(&hr), shape(&pr));
        assert_eq!(hr["monotonicity"], pr["monotonicity"]);
        for name in ["A", "B", "C", "D", "E"] {
            let (a, b) = (
                hr["invariants"][name].as_f64().unwrap(),
                pr["invariants"][name].as_f64().unwrap(),
            );
            assert!(
                (a - b).abs() <= 1e-12 * a.abs().max(1.0),
                "{name}: {a} vs {b}"
            );
        }
    }
}

#[test]
fn verify_json_document() {
    let doc = json(&["verify", "--draws", "10", "--seed", "7", "--format", "json"]);
    assert_eq!(doc["draws"], 10);
    assert_eq!(doc["seed"], 7);
    let total = doc["agreements"].as_u64().unwrap()
        + doc["boundary_skips"].as_u64().unwrap()
        + doc["contradictions"].as_array().unwrap().len() as u64;
    assert_eq!(total, 10);
    assert_eq!(
        json(&["verify", "--draws", "10", "--seed", "7", "--format", "json"]),
        doc
    );
}

#[test]
fn verify_default_run_is_clean() {
    let out = expratio(&["verify", "--draws", "1000", "--seed", "42"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(
        stdout(&out).contains("contradictions 0"),
        "{}",
        stdout(&out)
    );
    let csv = stdout(&expratio(&["verify", "--draws", "20", "--format", "csv"]));
    assert_eq!(csv.lines().count(), 1);
}

#[test]
fn no_escape_codes_off_a_terminal() {
    for args in [
        &["table"][..],
        &["classify", "H", "3", "-3", "1", "0"],
        &["verify", "--draws", "3"],
    ] {
        let out = expratio(args);
        assert!(!stdout(&out).contains('\u{1b}'), "{args:?}");
        let out = Command::new(env!("CARGO_BIN_EXE_expratio"))
            .args(args)
            .env("NO_COLOR", "1")
            .output()
            .unwrap();
        assert!(!stdout(&out).contains('\u{1b}'), "{args:?}");
    }
}

#[test]
fn library_entry_point_matches_binary() {
    let args = ["classify", "P", "2", "3", "5", "7", "--format", "csv"];
    let lib = expratio_cli::run(std::iter::once("expratio").chain(args));
    let bin = expratio(&args);
    assert_eq!(lib.code, 0);
    assert_eq!(lib.stdout, stdout(&bin));
    let lib = expratio_cli::run(["expratio", "verify", "--draws", "0"]);
    assert_eq!(lib.code, 2);
    assert!(lib.stdout.is_empty() && !lib.stderr.is_empty());
}
