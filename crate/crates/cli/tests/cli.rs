use std::io::Write;
use std::process::{Command, Output, Stdio};

fn rbar(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rbar")).args(args).output().expect("binary runs")
}

fn rbar_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_rbar"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn braid_series_row_and_column() {
    let o = rbar(&["series", "--family", "braid", "--ell", "3", "--max-p", "4", "--max-q", "4", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let grid = doc["grid"]["rbar"].as_array().unwrap();
    let cell = |p: usize, q: usize| grid[p][q].as_str().unwrap().parse::<u64>().unwrap();
    assert_eq!((0..=4).map(|q| cell(0, q)).collect::<Vec<_>>(), vec![1, 3, 5, 7, 9]);
    assert_eq!((0..=4).map(|p| cell(p, 0)).collect::<Vec<_>>(), vec![1, 3, 6, 10, 15]);
}

#[test]
fn braid_series_text() {
    let o = rbar(&["series", "--family", "braid", "--ell", "3", "--max-p", "4", "--max-q", "4"]);
    let out = stdout(&o);
    assert!(out.contains("  0   1   3   5   7   9\n"), "{out}");
}

#[test]
fn verify_braid_passes() {
    let o = rbar(&["verify", "--family", "braid", "--ell", "3", "--max-p", "2", "--max-q", "2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).ends_with("verdict: pass\n"));
}

#[test]
fn verify_with_wrong_exponents_fails() {
    let o = rbar(&["verify", "--family", "boolean", "--ell", "2", "--max-p", "1", "--max-q", "1", "--exponents", "1,2"]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("mismatches"));
    assert!(out.ends_with("verdict: fail\n"));
}

#[test]
fn series_exponent_mismatch_exits_one() {
    let o = rbar(&["series", "--family", "boolean", "--ell", "2", "--max-p", "2", "--max-q", "2", "--exponents", "0,2"]);
    assert_eq!(o.status.code(), Some(1));
    let o = rbar(&["series", "--family", "boolean", "--ell", "2", "--max-p", "2", "--max-q", "2", "--exponents", "1,1"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn boolean_poincare() {
    let o = rbar(&["poincare", "--family", "boolean", "--ell", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().next(), Some("1 + 2 t + 1 t^2"));
}

#[test]
fn file_from_stdin() {
    let o = rbar_stdin(&["poincare", "--file", "-"], r#"{"ell":2,"forms":[[1,0],[0,1],[1,-1],[1,1]]}"#);
    assert_eq!(stdout(&o), "1 + 4 t + 3 t^2\nexponents: 1, 3\n");
}

#[test]
fn input_errors_exit_two_with_prefix() {
    let cases: &[(&str, &str)] = &[
        (r#"{"ell":2,"forms":[[1,0],["2",0]]}"#, "error: proportional-pair:"),
        (r#"{"ell":2,"forms":[[0.5,1]]}"#, "error: float-entry:"),
        (r#"{"ell":2,"forms":[[0,0]]}"#, "error: zero-form:"),
        (r#"{"ell":2,"forms":[[1,0,0]]}"#, "error: wrong-length:"),
        ("[", "error: malformed-input:"),
    ];
    for (input, prefix) in cases {
        let o = rbar_stdin(&["lattice", "--file", "-"], input);
        assert_eq!(o.status.code(), Some(2), "{input}");
        assert!(o.stdout.is_empty(), "{input}");
        assert!(stderr(&o).starts_with(prefix), "{input}: {}", stderr(&o));
    }
    let o = rbar(&["lattice", "--family", "nope", "--ell", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("error: unknown-family:"));
    let o = rbar(&["lattice"]);
    assert!(stderr(&o).starts_with("error: no-source:"));
    let o = rbar(&["frobnicate"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("error: usage:"));
}

#[test]
fn byte_stable_output() {
    for args in [
        &["lattice", "--family", "braid", "--ell", "4", "--json"][..],
        &["series", "--family", "braid", "--ell", "3"],
        &["dims", "--family", "braid", "--ell", "3", "--max-p", "1", "--max-q", "2", "--cell", "1,2"],
        &["cseries", "--family", "boolean", "--ell", "3", "--json"],
    ] {
        let a = rbar(args);
        let b = rbar(args);
        assert_eq!(a.status.code(), Some(0));
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

const WORKED_BASIS: &str = r#"[
  {"numerator": "x1", "denominator": "(x1-x2)*(x1-x3)"},
  {"numerator": "x1", "denominator": "(x1-x2)*(x2-x3)"},
  {"numerator": "x1", "denominator": "(x1-x2)^2"},
  {"numerator": "x3", "denominator": "(x1-x2)^2"},
  {"numerator": "x1", "denominator": "(x2-x3)^2"},
  {"numerator": "x2", "denominator": "(x2-x3)^2"},
  {"numerator": "x1", "denominator": "(x1-x3)^2"},
  {"numerator": "x2", "denominator": "(x1-x3)^2"}
]"#;

#[test]
fn decompose_worked_fraction_against_given_basis() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    file.write_all(WORKED_BASIS.as_bytes()).unwrap();
    let o = rbar(&[
        "decompose",
        "--family",
        "braid",
        "--ell",
        "3",
        "--numerator",
        "x1 + 2*x2 - x3 + 3",
        "--denominator",
        "(x1 - x3)*(x2 - x3)",
        "--basis-file",
        file.path().to_str().unwrap(),
        "--json",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let coords: Vec<&str> = doc["report"]["coordinates"].as_array().unwrap().iter().map(|v| v.as_str().unwrap()).collect();
    assert_eq!(coords, ["-2", "2", "0", "0", "0", "0", "0", "0"]);
    assert_eq!(doc["meta"]["p"], 1);
    assert_eq!(doc["meta"]["q"], 2);
}

#[test]
fn decompose_with_incomplete_basis_is_an_input_error() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    file.write_all(br#"[{"numerator": "x1", "denominator": "(x1-x2)^2"}]"#).unwrap();
    let o = rbar(&[
        "decompose", "--family", "braid", "--ell", "3", "--numerator", "x1", "--denominator", "(x1-x3)*(x2-x3)",
        "--basis-file", file.path().to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("error: not-in-span:"));
}

#[test]
fn decompose_rejects_foreign_denominator() {
    let o = rbar(&["decompose", "--family", "braid", "--ell", "3", "--numerator", "1", "--denominator", "x1*x2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("error: factor-over-delta:"));
}

#[test]
fn dims_cell_split_sums_to_oracle_value() {
    let o = rbar(&["dims", "--family", "braid", "--ell", "3", "--max-p", "1", "--max-q", "2", "--cell", "1,2", "--json"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let cell = &doc["grid"]["cell"];
    let total: u64 = cell["flats"].as_array().unwrap().iter().map(|r| r["product"].as_str().unwrap().parse::<u64>().unwrap()).sum();
    assert_eq!(total, 8);
    assert_eq!(cell["basis"].as_array().unwrap().len(), 8);
    assert_eq!(doc["grid"]["rbar"][1][2], "8");
}

#[test]
fn cseries_total_matches_series_row() {
    let o = rbar(&["cseries", "--family", "braid", "--ell", "3", "--max-q", "4", "--json"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let total: Vec<&str> = doc["grid"]["total"].as_array().unwrap().iter().map(|v| v.as_str().unwrap()).collect();
    assert_eq!(total, ["1", "3", "5", "7", "9"]);
}

#[test]
fn family_list_names_both_families() {
    let out = stdout(&rbar(&["family-list"]));
    assert!(out.starts_with("braid"));
    assert!(out.contains("\nboolean"));
}
