use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;
use tempfile::TempDir;
use trisect::cli::run;

struct Out {
    code: i32,
    stdout: String,
    stderr: String,
}

impl Out {
    fn json(&self) -> Value {
        serde_json::from_str(&self.stdout).unwrap_or_else(|e| panic!("{e}: {}", self.stdout))
    }
}

fn trisect_with_stdin(args: &[&str], stdin: &str) -> Out {
    let mut argv = vec!["trisect"];
    argv.extend_from_slice(args);
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(argv, &mut stdin.as_bytes(), &mut out, &mut err);
    Out { code, stdout: String::from_utf8(out).unwrap(), stderr: String::from_utf8(err).unwrap() }
}

fn trisect(args: &[&str]) -> Out {
    trisect_with_stdin(args, "")
}

fn path(dir: &TempDir, name: &str) -> PathBuf {
    dir.path().join(name)
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn generate(dir: &TempDir, name: &str, args: &[&str]) -> PathBuf {
    let p = path(dir, name);
    let mut argv = vec!["generate", "--output", s(&p)];
    argv.extend_from_slice(args);
    let out = trisect(&argv);
    assert_eq!(out.code, 0, "{}", out.stderr);
    p
}

fn edit(src: &Path, dst: &Path, f: impl FnOnce(&mut Value)) {
    let mut v: Value = serde_json::from_str(&std::fs::read_to_string(src).unwrap()).unwrap();
    f(&mut v);
    std::fs::write(dst, serde_json::to_string_pretty(&v).unwrap()).unwrap();
}

#[test]
fn generate_then_standardize_records_qtilde() {
    let dir = TempDir::new().unwrap();
    let input = generate(&dir, "q1.json", &["--q", "diag:1"]);
    let output = path(&dir, "std.json");
    let out = trisect(&["standardize", "--input", s(&input), "--output", s(&output)]);
    assert_eq!(out.code, 0, "{}", out.stdout);
    let record: Value =
        serde_json::from_str(&std::fs::read_to_string(path(&dir, "std.json.record.json")).unwrap()).unwrap();
    assert_eq!(record["Qtilde"], serde_json::json!([[1]]));
    assert_eq!(record["homologically_torelli"], Value::Bool(true));
    assert_eq!(out.json()["results"]["checks"]["complete"], Value::Bool(true));
    let v = trisect(&["validate", "--input", s(&output)]);
    assert_eq!(v.code, 0);
    assert_eq!(v.json()["results"]["verdict"], "pass");
}

#[test]
fn generate_to_stdout_is_a_diagram() {
    let out = trisect(&["generate", "--q", "h", "--boundary", "2"]);
    assert_eq!(out.code, 0);
    let d = trisect::parse_diagram(&out.stdout).unwrap();
    assert_eq!(d.params.l(), 1);
    assert!(trisect::validate(&d).verdict);
}

#[test]
fn validate_exit_codes() {
    let dir = TempDir::new().unwrap();
    let good = generate(&dir, "good.json", &["--q", "e8", "--boundary", "2"]);
    assert_eq!(trisect(&["validate", "--input", s(&good)]).code, 0);

    let bad = path(&dir, "k1.json");
    edit(&good, &bad, |v| v["params"]["k"][0] = Value::from(0));
    let out = trisect(&["validate", "--input", s(&bad)]);
    assert_eq!(out.code, 1);
    assert_eq!(out.json()["results"]["verdict"], "fail");
    let checks = out.json()["results"]["checks"].as_array().unwrap().clone();
    assert!(checks.iter().any(|c| c["name"] == "params" && c["status"] == "fail"));

    let malformed = path(&dir, "malformed.json");
    edit(&good, &malformed, |v| {
        v.as_object_mut().unwrap().remove("gamma");
    });
    let out = trisect(&["validate", "--input", s(&malformed)]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("gamma"), "{}", out.stderr);
    assert!(out.stdout.is_empty());

    let fractional = path(&dir, "fractional.json");
    edit(&good, &fractional, |v| v["alpha"][0][0] = serde_json::json!(0.5));
    assert_eq!(trisect(&["validate", "--input", s(&fractional)]).code, 2);

    let missing = path(&dir, "missing.json");
    let out = trisect(&["validate", "--input", s(&missing)]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("cannot read"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(trisect(&[]).code, 2);
    assert_eq!(trisect(&["frobnicate"]).code, 2);
    assert_eq!(trisect(&["validate"]).code, 2);
    assert_eq!(trisect(&["--format", "yaml", "validate", "--input", "x"]).code, 2);
    assert_eq!(trisect(&["generate", "--q", "nonsense"]).code, 2);
    assert_eq!(trisect(&["generate", "--boundary", "0"]).code, 2);
    let help = trisect(&["--help"]);
    assert_eq!(help.code, 0);
    assert!(help.stdout.contains("standardize"));
    assert_eq!(trisect(&["--version"]).code, 0);
}

#[test]
fn domain_errors_exit_one() {
    // B = [[2]] is not unimodular
    let out = trisect(&["generate", "--b", "[[2]]", "--boundary", "2"]);
    assert_eq!(out.code, 1);
    assert!(out.json()["results"]["error"].as_str().unwrap().contains("unimodular"));

    let dir = TempDir::new().unwrap();
    let good = generate(&dir, "good.json", &["--q", "diag:1", "--k", "2"]);
    let shifted = path(&dir, "shifted.json");
    edit(&good, &shifted, |v| v["params"]["k"] = serde_json::json!([1, 0, 2]));
    let out = trisect(&["standardize", "--input", s(&shifted), "--output", s(&path(&dir, "o.json"))]);
    assert_eq!(out.code, 1);
    assert!(out.json()["results"]["error"].is_string());
    assert!(!path(&dir, "o.json").exists());
}

#[test]
fn invariants_sections() {
    let dir = TempDir::new().unwrap();
    let input = generate(&dir, "h.json", &["--q", "h", "--boundary", "2"]);
    let out = trisect(&["invariants", "--input", s(&input)]);
    assert_eq!(out.code, 0);
    let r = &out.json()["results"];
    let ranks: Vec<u64> = r["homology"]["groups"].as_array().unwrap().iter().map(|g| g["free_rank"].as_u64().unwrap()).collect();
    assert_eq!(ranks, [1, 0, 2, 0, 0]);
    assert_eq!(r["linking"]["symmetric"], Value::Bool(true));
    assert_eq!(r["form"]["Q"], serde_json::json!([[0, 1], [1, 0]]));
    assert_eq!(r["form"]["invariants"]["parity"], "even");
    assert_eq!(r["form"]["invariants"]["signature"], 0);

    let out = trisect(&["invariants", "--input", s(&input), "--homology"]);
    assert_eq!(out.code, 0);
    assert!(out.json()["results"].get("linking").is_none());

    // no arcs: the arc-dependent sections fail, which only warns without explicit flags
    let bare = path(&dir, "bare.json");
    edit(&input, &bare, |v| {
        let o = v.as_object_mut().unwrap();
        o.remove("arcs");
        o.remove("eta");
    });
    let out = trisect(&["invariants", "--input", s(&bare)]);
    assert_eq!(out.code, 0);
    assert!(!out.json()["warnings"].as_array().unwrap().is_empty());
    assert_eq!(trisect(&["invariants", "--input", s(&bare), "--linking"]).code, 1);
    let out = trisect(&["invariants", "--input", s(&bare), "--homology"]);
    assert_eq!(out.code, 1);
    assert!(out.json()["results"]["homology"]["error"].as_str().unwrap().contains("arcs"));
}

#[test]
fn compare_verdicts() {
    let dir = TempDir::new().unwrap();
    let x = generate(&dir, "x.json", &["--q", "diag:1"]);
    let y = generate(&dir, "y.json", &["--q", "diag:-1"]);
    let out = trisect(&["compare", "--x", s(&x), "--y", s(&x)]);
    assert_eq!(out.code, 0);
    assert_eq!(out.json()["results"]["verdict"], "equivalent");
    let out = trisect(&["compare", "--x", s(&x), "--y", s(&y)]);
    assert_eq!(out.code, 1);
    assert_eq!(out.json()["results"]["verdict"], "not equivalent: signature");
    let z = generate(&dir, "z.json", &["--q", "diag:1", "--k", "1", "--boundary", "1"]);
    let out = trisect(&["compare", "--x", s(&x), "--y", s(&z)]);
    assert_eq!(out.json()["results"]["verdict"], "not equivalent: parameters");
    let digests = out.json()["input_digest"].as_object().unwrap().clone();
    assert!(digests.contains_key("x") && digests.contains_key("y"));
}

#[test]
fn reruns_are_byte_identical() {
    let dir = TempDir::new().unwrap();
    let input = generate(&dir, "in.json", &["--q", "e8+h", "--p", "1"]);
    let output = path(&dir, "out.json");
    let record = path(&dir, "rec.json");
    let args = ["standardize", "--input", s(&input), "--output", s(&output), "--record", s(&record)];
    let first = trisect(&args);
    let bytes = (std::fs::read(&output).unwrap(), std::fs::read(&record).unwrap());
    let second = trisect(&args);
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(bytes, (std::fs::read(&output).unwrap(), std::fs::read(&record).unwrap()));
    assert!(first.stdout.ends_with("}\n"));
}

#[test]
fn input_from_stdin() {
    let d = trisect(&["generate", "--q", "diag:1,-1"]).stdout;
    let out = trisect_with_stdin(&["validate", "--input", "-"], &d);
    assert_eq!(out.code, 0);
    let file_digest = out.json()["input_digest"]["input"].clone();
    let dir = TempDir::new().unwrap();
    let p = path(&dir, "d.json");
    std::fs::write(&p, &d).unwrap();
    assert_eq!(trisect(&["validate", "--input", s(&p)]).json()["input_digest"]["input"], file_digest);
}

#[test]
fn text_format() {
    let dir = TempDir::new().unwrap();
    let input = generate(&dir, "x.json", &["--q", "diag:1,1"]);
    let out = trisect(&["--format", "text", "invariants", "--input", s(&input), "--form"]);
    assert_eq!(out.code, 0);
    assert!(!out.stdout.starts_with('{'));
    assert!(out.stdout.contains("[ 1 0 ]"), "{}", out.stdout);
}

#[test]
fn binary_honours_format_env_and_flag() {
    let dir = TempDir::new().unwrap();
    let input = generate(&dir, "x.json", &["--q", "diag:1"]);
    let bin = env!("CARGO_BIN_EXE_trisect");
    let run_bin = |env: Option<&str>, extra: &[&str]| {
        let mut c = Command::new(bin);
        c.env_remove("TRISECT_FORMAT");
        if let Some(f) = env {
            c.env("TRISECT_FORMAT", f);
        }
        c.args(extra).args(["validate", "--input", s(&input)]);
        let o = c.output().unwrap();
        (o.status.code().unwrap(), String::from_utf8(o.stdout).unwrap())
    };
    let (code, json) = run_bin(None, &[]);
    assert_eq!(code, 0);
    assert!(json.starts_with('{'));
    let (_, text) = run_bin(Some("text"), &[]);
    assert!(!text.starts_with('{'));
    let (_, flag) = run_bin(Some("text"), &["--format", "json"]);
    assert_eq!(flag, json);

    let o = Command::new(bin).args(["validate", "--input", s(&path(&dir, "nope.json"))]).output().unwrap();
    assert_eq!(o.status.code(), Some(2));
}
