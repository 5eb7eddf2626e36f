//! The `trisect` command line: argument parsing, report assembly and output.
//!
//! Exit codes: 0 success, 1 domain failure (failed checks, non-equivalent
//! diagrams, pipeline errors), 2 I/O, argument or parse failure.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use crate::diagram::{default_monodromy, parse_diagram, serialize_diagram, synthesize_diagram, validate, CheckStatus, Diagram, ValidationReport};
use crate::error::Error;
use crate::intlin::IntMatrix;
use crate::invariants::{e8, form_invariants, homology, hyperbolic, linking_matrix, FormInvariants, HomologyResult};
use crate::json::{matrix, vector};
use crate::standardize::{is_homologically_torelli, standardize, torelli_compare, Move, StandardizationResult, Target, Verdict};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "trisect", version, about = "Homological invariants of relative trisection diagrams")]
pub struct Cli {
    /// Report format; the flag wins over TRISECT_FORMAT.
    #[arg(long, value_enum, env = "TRISECT_FORMAT", default_value = "json", global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run the homological checks on a diagram file.
    Validate {
        /// Diagram file, or `-` for stdin.
        #[arg(long)]
        input: String,
    },
    /// Homology, linking matrix and intersection form. All sections when no flag is given.
    Invariants {
        #[arg(long)]
        input: String,
        #[arg(long)]
        homology: bool,
        #[arg(long)]
        linking: bool,
        #[arg(long)]
        form: bool,
    },
    /// Bring a diagram to normal form; writes the diagram and a record file.
    Standardize {
        #[arg(long)]
        input: String,
        #[arg(long)]
        output: PathBuf,
        /// Defaults to `<output>.record.json`.
        #[arg(long)]
        record: Option<PathBuf>,
    },
    /// Compare two diagrams; exits 0 only when they are equivalent.
    Compare {
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
    },
    /// Write the normal-form diagram for an intersection form and monodromy.
    Generate {
        /// e8, hyperbolic, diag:1,1,-1, empty, a JSON matrix, or `+`-separated sums.
        #[arg(long, default_value = "empty", allow_hyphen_values = true)]
        q: String,
        /// Monodromy block (l x l); defaults to the unitriangular block fixed by the page.
        #[arg(long, allow_hyphen_values = true)]
        b: Option<String>,
        /// Defaults to l.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, default_value_t = 0)]
        p: usize,
        #[arg(long, default_value_t = 1)]
        boundary: usize,
        #[arg(long, default_value = "-")]
        output: String,
    },
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub command: String,
    /// sha256 of each input file's bytes.
    pub input_digest: BTreeMap<String, String>,
    pub results: Value,
    pub warnings: Vec<String>,
}

impl Report {
    fn new(command: &str) -> Self {
        Report { command: command.into(), input_digest: BTreeMap::new(), results: Value::Object(Map::new()), warnings: Vec::new() }
    }

    fn set(&mut self, key: &str, v: Value) {
        self.results.as_object_mut().expect("results is an object").insert(key.into(), v);
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("report serializes");
                s.push('\n');
                s
            }
            Format::Text => {
                let mut out = format!("command: {}\n", self.command);
                for (k, v) in &self.input_digest {
                    let _ = writeln!(out, "sha256({k}): {v}");
                }
                render_text(&self.results, 0, &mut out);
                for w in &self.warnings {
                    let _ = writeln!(out, "warning: {w}");
                }
                out
            }
        }
    }
}

fn is_matrix(v: &Value) -> bool {
    match v {
        Value::Array(rows) => {
            !rows.is_empty() && rows.iter().all(|r| r.as_array().is_some_and(|r| r.iter().all(Value::is_number)))
        }
        _ => false,
    }
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(a) if a.iter().all(|x| !x.is_array() && !x.is_object()) => {
            Some(format!("[{}]", a.iter().map(|x| scalar(x).unwrap_or_default()).collect::<Vec<_>>().join(", ")))
        }
        _ => None,
    }
}

fn render_matrix(rows: &[Value], pad: &str, out: &mut String) {
    let cells: Vec<Vec<String>> =
        rows.iter().map(|r| r.as_array().into_iter().flatten().map(|x| x.to_string()).collect()).collect();
    let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
    for r in cells {
        if r.is_empty() {
            let _ = writeln!(out, "{pad}[ ]");
            continue;
        }
        let line: Vec<String> = r.iter().map(|c| format!("{c:>width$}")).collect();
        let _ = writeln!(out, "{pad}[ {} ]", line.join(" "));
    }
}

fn render_text(v: &Value, indent: usize, out: &mut String) {
    let pad = " ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                if let Some(s) = scalar(x) {
                    let _ = writeln!(out, "{pad}{k}: {s}");
                } else if is_matrix(x) {
                    let _ = writeln!(out, "{pad}{k}:");
                    render_matrix(x.as_array().expect("matrix"), &" ".repeat(indent + 2), out);
                } else {
                    let _ = writeln!(out, "{pad}{k}:");
                    render_text(x, indent + 2, out);
                }
            }
        }
        Value::Array(items) => {
            for x in items {
                match scalar(x) {
                    Some(s) => {
                        let _ = writeln!(out, "{pad}- {s}");
                    }
                    None => {
                        let _ = writeln!(out, "{pad}-");
                        render_text(x, indent + 2, out);
                    }
                }
            }
        }
        other => {
            let _ = writeln!(out, "{pad}{}", scalar(other).unwrap_or_default());
        }
    }
}

/// Failure carrying its exit code; code 1 failures still produce a report.
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: 2, message: message.into() }
    }

    /// Output already written (diagram to stdout); no report follows.
    fn done() -> Self {
        Failure { code: 0, message: String::new() }
    }
}

type Outcome = std::result::Result<(Report, i32), Failure>;

struct Io<'a> {
    stdin: &'a mut dyn Read,
    stdout: &'a mut dyn Write,
}

fn digest(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

fn read_input(io: &mut Io<'_>, path: &str) -> std::result::Result<Vec<u8>, Failure> {
    let mut buf = Vec::new();
    let res = if path == "-" { io.stdin.read_to_end(&mut buf).map(|_| ()) } else { std::fs::read(path).map(|b| buf = b) };
    res.map_err(|e| Failure::usage(format!("cannot read {path}: {e}")))?;
    Ok(buf)
}

fn load(io: &mut Io<'_>, report: &mut Report, role: &str, path: &str) -> std::result::Result<Diagram, Failure> {
    let bytes = read_input(io, path)?;
    report.input_digest.insert(role.into(), digest(&bytes));
    let text = String::from_utf8(bytes).map_err(|_| Failure::usage(format!("{path}: not UTF-8")))?;
    parse_diagram(&text).map_err(|e| Failure::usage(format!("{path}: {e}")))
}

fn write_file(path: &Path, text: &str) -> std::result::Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display())))
}

fn opt_matrix(m: Option<&IntMatrix>) -> Value {
    m.map_or(Value::Null, matrix)
}

fn form_json(f: &FormInvariants) -> Value {
    json!({
        "rank": f.rank,
        "signature": f.signature,
        "parity": f.parity.as_str(),
        "determinant": Value::Number(crate::json::big_to_number(&f.determinant)),
    })
}

fn homology_json(h: &HomologyResult) -> Value {
    let groups: Vec<Value> = h
        .groups
        .iter()
        .enumerate()
        .map(|(i, g)| json!({"degree": i, "group": g.to_string(), "free_rank": g.free_rank, "torsion": vector(&g.torsion)}))
        .collect();
    json!({
        "groups": groups,
        "b2": h.b2(),
        "interpretation": "formal homology of the diagram's chain complex; it is H_*(X) when the diagram is geometric",
    })
}

fn validation_json(r: &ValidationReport) -> Value {
    let checks: Vec<Value> = r
        .checks
        .iter()
        .map(|c| {
            let status = match c.status {
                CheckStatus::Pass => "pass",
                CheckStatus::Fail => "fail",
                CheckStatus::Skipped => "skipped",
            };
            let mut o = json!({"name": c.name, "status": status, "detail": c.detail});
            if let Some(w) = &c.witness {
                o["witness"] = matrix(w);
            }
            o
        })
        .collect();
    json!({"verdict": if r.verdict { "pass" } else { "fail" }, "checks": checks, "note": ValidationReport::NOTE})
}

fn standardization_json(r: &StandardizationResult) -> Value {
    let c = &r.checks;
    json!({
        "B": matrix(&r.b),
        "Q": matrix(&r.q),
        "Qtilde": matrix(&r.qtilde),
        "b2": r.b2,
        "A_psi": opt_matrix(r.a_psi.as_ref()),
        "form": form_invariants(&r.q).map(|f| form_json(&f)).unwrap_or(Value::Null),
        "checks": {
            "alpha_gamma_is_qtilde": c.alpha_gamma_is_qtilde,
            "gamma_formula": c.gamma_formula,
            "record_reproduces": c.record_reproduces,
            "record_unimodular": c.record_unimodular,
            "monodromy_inverse": c.monodromy_inverse,
            "complete": c.complete,
        },
    })
}

fn record_json(r: &StandardizationResult, input: &Diagram) -> Value {
    let moves: Vec<Value> = r
        .record
        .moves
        .iter()
        .map(|m| match m {
            Move::Rebasis { target, matrix: u } => json!({"rebasis": {"target": target.as_str(), "matrix": matrix(u)}}),
            Move::SurfaceMap { absolute, relative } => {
                json!({"surface_map": {"absolute": matrix(absolute), "relative": matrix(relative)}})
            }
        })
        .collect();
    let (n, h) = (input.surface.rank(), input.params.curves());
    let (phi, phi_rel) = r.record.surface_composite(n);
    let mut v = standardization_json(r);
    v["format_version"] = json!(1);
    v["moves"] = Value::Array(moves);
    v["composites"] = json!({
        "alpha": matrix(&r.record.composite(Target::Alpha, h)),
        "beta": matrix(&r.record.composite(Target::Beta, h)),
        "gamma": matrix(&r.record.composite(Target::Gamma, h)),
        "surface_absolute": matrix(&phi),
        "surface_relative": matrix(&phi_rel),
    });
    v["homologically_torelli"] = is_homologically_torelli(&r.record, input).map_or(Value::Null, Value::Bool);
    v
}

fn domain(mut report: Report, e: &Error) -> Outcome {
    report.set("error", Value::String(e.to_string()));
    Ok((report, 1))
}

fn cmd_validate(io: &mut Io<'_>, input: &str) -> Outcome {
    let mut report = Report::new("validate");
    let d = load(io, &mut report, "input", input)?;
    let v = validate(&d);
    report.results = validation_json(&v);
    Ok((report, if v.verdict { 0 } else { 1 }))
}

fn cmd_invariants(io: &mut Io<'_>, input: &str, flags: [bool; 3]) -> Outcome {
    let mut report = Report::new("invariants");
    let d = load(io, &mut report, "input", input)?;
    let explicit = flags.iter().any(|&f| f);
    let want = if explicit { flags } else { [true; 3] };
    let mut failed = false;
    let mut section = |report: &mut Report, name: &str, r: std::result::Result<Value, Error>| match r {
        Ok(v) => report.set(name, v),
        Err(e) => {
            failed = true;
            report.warnings.push(format!("{name}: {e}"));
            report.set(name, json!({"error": e.to_string()}));
        }
    };
    if want[0] {
        section(&mut report, "homology", homology(&d).map(|h| homology_json(&h)));
    }
    if want[1] {
        let r = linking_matrix(&d).map(|m| json!({"matrix": matrix(&m), "symmetric": m.is_symmetric()}));
        section(&mut report, "linking", r);
    }
    if want[2] {
        let r = match standardize(&d) {
            Ok(s) => Ok(json!({"Q": matrix(&s.q), "invariants": form_invariants(&s.q).map(|f| form_json(&f)).unwrap_or(Value::Null), "unimodular": true})),
            Err(Error::QNotUnimodular { partial, .. }) => Ok(json!({
                "Q": matrix(&partial.q),
                "invariants": form_invariants(&partial.q).map(|f| form_json(&f)).unwrap_or(Value::Null),
                "unimodular": false,
            })),
            Err(e) => Err(e),
        };
        section(&mut report, "form", r);
    }
    let code = i32::from(explicit && failed);
    Ok((report, code))
}

fn cmd_standardize(io: &mut Io<'_>, input: &str, output: &Path, record: Option<&Path>) -> Outcome {
    let mut report = Report::new("standardize");
    let d = load(io, &mut report, "input", input)?;
    let r = match standardize(&d) {
        Ok(r) => r,
        Err(Error::QNotUnimodular { det, partial }) => {
            report.set("partial", standardization_json(&partial));
            return domain(report, &Error::NotNormalizable(format!("Q is not unimodular (det = {det})")));
        }
        Err(e) => return domain(report, &e),
    };
    let record_path = record.map(Path::to_path_buf).unwrap_or_else(|| {
        let mut s = output.as_os_str().to_owned();
        s.push(".record.json");
        PathBuf::from(s)
    });
    write_file(output, &serialize_diagram(&r.standardized))?;
    let mut rec = serde_json::to_string_pretty(&record_json(&r, &d)).expect("record serializes");
    rec.push('\n');
    write_file(&record_path, &rec)?;
    report.results = standardization_json(&r);
    report.set("output", Value::String(output.display().to_string()));
    report.set("record", Value::String(record_path.display().to_string()));
    report.set("moves", json!(r.record.moves.len()));
    Ok((report, if r.checks.all_passed() { 0 } else { 1 }))
}

fn cmd_compare(io: &mut Io<'_>, x: &str, y: &str) -> Outcome {
    let mut report = Report::new("compare");
    let dx = load(io, &mut report, "x", x)?;
    let dy = load(io, &mut report, "y", y)?;
    let c = match torelli_compare(&dx, &dy) {
        Ok(c) => c,
        Err(e) => return domain(report, &e),
    };
    report.results = json!({
        "verdict": c.summary(),
        "params_equal": c.params_equal,
        "monodromy_equal": c.monodromy_equal,
        "forms": {"x": form_json(&c.forms[0]), "y": form_json(&c.forms[1])},
        "congruence": opt_matrix(c.congruence.as_ref()),
        "certificate": opt_matrix(c.certificate.as_ref()),
        "notes": c.notes,
    });
    Ok((report, if c.verdict == Verdict::Equivalent { 0 } else { 1 }))
}

/// Parses a form: `e8`, `-e8`, `hyperbolic`, `diag:1,1,-1`, `identity:n`,
/// `empty`, a JSON matrix, or a `+`-separated direct sum of these.
pub fn parse_form_spec(spec: &str) -> std::result::Result<IntMatrix, String> {
    let spec = spec.trim();
    if spec.starts_with('[') {
        return literal(spec);
    }
    let mut out = IntMatrix::zeros(0, 0);
    for part in spec.split('+') {
        out = out.direct_sum(&named_form(part.trim())?);
    }
    Ok(out)
}

fn named_form(s: &str) -> std::result::Result<IntMatrix, String> {
    if let Some(rest) = s.strip_prefix('-') {
        return Ok(-&named_form(rest)?);
    }
    let lower = s.to_ascii_lowercase();
    match lower.as_str() {
        "" | "empty" => return Ok(IntMatrix::zeros(0, 0)),
        "e8" => return Ok(e8()),
        "h" | "hyperbolic" => return Ok(hyperbolic()),
        _ => {}
    }
    if let Some(list) = lower.strip_prefix("diag:") {
        let d = list
            .split(',')
            .map(|x| x.trim().parse::<i64>().map_err(|e| format!("diag entry {x:?}: {e}")))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        return Ok(IntMatrix::diagonal(&d));
    }
    if let Some(n) = lower.strip_prefix("identity:") {
        return n.trim().parse().map(IntMatrix::identity).map_err(|e| format!("identity size {n:?}: {e}"));
    }
    Err(format!("unknown form {s:?}"))
}

fn literal(s: &str) -> std::result::Result<IntMatrix, String> {
    let v: Value = serde_json::from_str(s).map_err(|e| format!("matrix literal: {e}"))?;
    let rows = v.as_array().ok_or("matrix literal must be an array of rows")?;
    let mut big = Vec::with_capacity(rows.len());
    for r in rows {
        let r = r.as_array().ok_or("matrix rows must be arrays")?;
        let row = r
            .iter()
            .map(|x| x.as_number().and_then(crate::json::number_to_big).ok_or_else(|| format!("{x} is not an integer")))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        big.push(row);
    }
    let cols = big.first().map_or(0, Vec::len);
    IntMatrix::from_big_rows(big, cols).map_err(|e| e.to_string())
}

struct GenerateArgs<'a> {
    q: &'a str,
    b: Option<&'a str>,
    k: Option<usize>,
    p: usize,
    boundary: usize,
    output: &'a str,
}

fn cmd_generate(io: &mut Io<'_>, a: GenerateArgs<'_>) -> Outcome {
    let mut report = Report::new("generate");
    if a.boundary < 1 {
        return Err(Failure::usage("--boundary must be at least 1"));
    }
    let l = 2 * a.p + a.boundary - 1;
    let q = parse_form_spec(a.q).map_err(|e| Failure::usage(format!("--q: {e}")))?;
    let b = match a.b {
        Some(s) => parse_form_spec(s).map_err(|e| Failure::usage(format!("--b: {e}")))?,
        None => default_monodromy(a.p, a.boundary).map_err(|e| Failure::usage(e.to_string()))?,
    };
    let d = match synthesize_diagram(&q, &b, a.k.unwrap_or(l), a.p, a.boundary) {
        Ok(d) => d,
        Err(e) => return domain(report, &e),
    };
    let text = serialize_diagram(&d);
    if a.output == "-" {
        io.stdout.write_all(text.as_bytes()).map_err(|e| Failure::usage(format!("stdout: {e}")))?;
        return Err(Failure::done());
    }
    write_file(Path::new(a.output), &text)?;
    let p = d.params;
    report.set("output", Value::String(a.output.into()));
    report.set("params", json!({"g": p.g, "b": p.b, "p": p.p, "k": p.k}));
    report.set("Q", matrix(&q));
    report.set("B", matrix(&b));
    Ok((report, 0))
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = stdout.write_all(text.as_bytes());
                    0
                }
                _ => {
                    let _ = stderr.write_all(text.as_bytes());
                    2
                }
            };
        }
    };
    let mut io = Io { stdin, stdout };
    let outcome = match &cli.command {
        Command::Validate { input } => cmd_validate(&mut io, input),
        Command::Invariants { input, homology, linking, form } => {
            cmd_invariants(&mut io, input, [*homology, *linking, *form])
        }
        Command::Standardize { input, output, record } => cmd_standardize(&mut io, input, output, record.as_deref()),
        Command::Compare { x, y } => cmd_compare(&mut io, x, y),
        Command::Generate { q, b, k, p, boundary, output } => cmd_generate(
            &mut io,
            GenerateArgs { q, b: b.as_deref(), k: *k, p: *p, boundary: *boundary, output },
        ),
    };
    match outcome {
        Ok((report, code)) => {
            if io.stdout.write_all(report.render(cli.format).as_bytes()).is_err() {
                return 2;
            }
            code
        }
        Err(f) => {
            if !f.message.is_empty() {
                let _ = writeln!(stderr, "trisect: {}", f.message);
            }
            f.code
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn form_specs() {
        assert_eq!(parse_form_spec("diag:1,1,-1").unwrap(), IntMatrix::diagonal(&[1, 1, -1]));
        assert_eq!(parse_form_spec("[]").unwrap().shape(), (0, 0));
        assert_eq!(parse_form_spec("empty").unwrap().shape(), (0, 0));
        assert_eq!(parse_form_spec("e8").unwrap(), e8());
        assert_eq!(parse_form_spec("-E8").unwrap(), -&e8());
        assert_eq!(parse_form_spec("[[2,1],[1,1]]").unwrap(), IntMatrix::from_rows(&[[2, 1], [1, 1]]));
        assert_eq!(parse_form_spec("hyperbolic+diag:1").unwrap().rows(), 3);
        assert!(parse_form_spec("nonsense").is_err());
        assert!(parse_form_spec("[[1,2],[3]]").is_err());
    }

    #[test]
    fn text_matrix_alignment() {
        let mut out = String::new();
        render_text(&json!({"m": [[1, -10], [200, 3]]}), 0, &mut out);
        assert_eq!(out, "m:\n  [   1 -10 ]\n  [ 200   3 ]\n");
    }
}
