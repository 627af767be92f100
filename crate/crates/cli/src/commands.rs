use std::sync::mpsc;
use std::thread;
use std::time::Duration;

use qsp_core::checks::{CheckResult, Scope, Suite};
use qsp_core::rep::verify_double_centralizer;
use qsp_core::scalars::{Backend, GenericParams, Params, RationalFunction, Specialization};
use qsp_core::schur::{
    check_budget, e_hecke_rank1, higher_pm_power, pm_dim_rows, schur_functor, schur_weyl_table, PmKind, SWReport,
};
use qsp_core::weyl::Bipartition;
use serde_json::{json, Value};

use crate::args::{Command, Flags};

/// Invalid input, budget overruns and anything else that maps to exit code 2.
#[derive(Debug)]
pub struct InputError(pub String);

impl From<qsp_core::Error> for InputError {
    fn from(e: qsp_core::Error) -> Self {
        InputError(e.to_string())
    }
}

type Result<T> = std::result::Result<T, InputError>;

pub struct Report {
    pub command: &'static str,
    pub params: Value,
    pub results: Value,
    pub pass: bool,
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
    /// Replaces the default table in text output.
    pub text: Option<Vec<String>>,
}

impl Report {
    fn new(command: &'static str, params: Value, results: Value, pass: bool) -> Self {
        Self {
            command,
            params,
            results,
            pass,
            header: Vec::new(),
            rows: Vec::new(),
            text: None,
        }
    }

    fn table(mut self, header: Vec<&'static str>, rows: Vec<Vec<String>>) -> Self {
        self.header = header;
        self.rows = rows;
        self
    }
}

pub fn run(command: &Command) -> Result<Report> {
    match command {
        Command::Verify { suite, timeout, flags } => verify(suite, *timeout, flags),
        Command::Dims(f) => dims(f),
        Command::Decompose(f) => decompose(f),
        Command::Schur(f) => schur(f),
        Command::Eigen(f) => eigen(f),
        Command::Centralizer(f) => centralizer(f),
    }
}

fn require(value: Option<usize>, flag: &str, command: &str) -> Result<usize> {
    match value {
        Some(0) => Err(InputError(format!("--{flag} must be at least 1"))),
        Some(v) => Ok(v),
        None => Err(InputError(format!("--{flag} is required for {command}"))),
    }
}

fn positive(value: Option<usize>, flag: &str) -> Result<Option<usize>> {
    match value {
        Some(0) => Err(InputError(format!("--{flag} must be at least 1"))),
        v => Ok(v),
    }
}

/// Parses `--backend`; specializations are checked up to `degree`.
fn backend(flags: &Flags, degree: usize) -> Result<Option<Backend>> {
    flags
        .backend
        .as_deref()
        .map(|s| Backend::parse(s, degree.max(1)))
        .transpose()
        .map_err(InputError::from)
}

fn point(flags: &Flags, degree: usize, command: &str) -> Result<Specialization> {
    match backend(flags, degree)? {
        Some(Backend::Specialized(s)) => Ok(s),
        Some(Backend::Symbolic) => Err(InputError(format!("{command} needs --backend Q=<rat>,q=<rat>"))),
        None => Ok(Specialization::default_point(degree.max(1))),
    }
}

fn label(b: &Option<Backend>) -> Value {
    match b {
        Some(b) => json!(b.label()),
        None => Value::Null,
    }
}

fn verify(suite: &str, timeout: u64, flags: &Flags) -> Result<Report> {
    let suites: Vec<Suite> = if suite == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![suite.parse().map_err(|_| {
            let names: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
            InputError(format!("unknown suite {suite:?}; expected all or one of {}", names.join(", ")))
        })?]
    };
    let n = positive(flags.n, "n")?;
    let d = positive(flags.d, "d")?;
    let e = positive(flags.e, "e")?;
    let scope = Scope {
        n,
        d,
        e,
        backend: backend(flags, d.unwrap_or(4) * e.unwrap_or(2))?,
    };
    let mut results = Vec::new();
    let mut rows = Vec::new();
    let mut summary = Vec::new();
    let mut failures = Vec::new();
    let mut pass = true;
    for s in suites {
        let (outcome, error) = match run_with_timeout(s, &scope, Duration::from_secs(timeout)) {
            Some(Ok(checks)) => (checks, None),
            Some(Err(e)) => return Err(e.into()),
            None => (Vec::new(), Some(format!("timed out after {timeout}s"))),
        };
        let ok = error.is_none() && outcome.iter().all(|c| c.pass);
        pass &= ok;
        for c in &outcome {
            rows.push(vec![
                s.name().to_string(),
                c.check.clone(),
                c.params.to_string(),
                c.backend.clone(),
                c.pass.to_string(),
            ]);
            if !c.pass {
                failures.push(format!("  {} {} {}: {}", s.name(), c.check, c.params, witness_line(c)));
            }
        }
        let failed = outcome.iter().filter(|c| !c.pass).count();
        summary.push(format!(
            "{:<20} {:>4} checks  {}",
            s.name(),
            outcome.len(),
            match (&error, failed) {
                (Some(e), _) => format!("FAIL ({e})"),
                (None, 0) => "pass".to_string(),
                (None, k) => format!("FAIL ({k} failed)"),
            }
        ));
        if let Some(e) = &error {
            failures.push(format!("  {}: {e}", s.name()));
        }
        let mut entry = json!({
            "suite": s.name(),
            "description": s.description(),
            "pass": ok,
            "checks": outcome,
        });
        if let Some(e) = error {
            entry["error"] = json!(e);
        }
        results.push(entry);
    }
    let mut text = summary;
    if !failures.is_empty() {
        text.push("failures:".to_string());
        text.extend(failures);
    }
    text.push(format!("pass: {pass}"));
    let params = json!({ "suite": suite, "n": n, "d": d, "e": e, "backend": label(&scope.backend) });
    let mut report = Report::new("verify", params, json!(results), pass)
        .table(vec!["suite", "check", "params", "backend", "pass"], rows);
    report.text = Some(text);
    Ok(report)
}

fn witness_line(c: &CheckResult) -> String {
    c.witness.as_ref().map_or_else(|| "no witness".to_string(), Value::to_string)
}

/// Runs a suite on a worker thread. A suite that overruns is abandoned and
/// reported as `None`; its thread ends with the process.
fn run_with_timeout(
    suite: Suite,
    scope: &Scope,
    limit: Duration,
) -> Option<std::result::Result<Vec<CheckResult>, qsp_core::Error>> {
    let (tx, rx) = mpsc::channel();
    let scope = scope.clone();
    thread::spawn(move || {
        let _ = tx.send(suite.run(&scope));
    });
    rx.recv_timeout(limit).ok()
}

fn dims(flags: &Flags) -> Result<Report> {
    let n = require(flags.n, "n", "dims")?;
    let d = require(flags.d, "d", "dims")?;
    let b = backend(flags, d)?;
    let (rows, used) = match &b {
        Some(Backend::Specialized(s)) => (pm_dim_rows(n, d, &Params::at(s))?, s.to_string()),
        Some(Backend::Symbolic) => (pm_dim_rows(n, d, &RationalFunction::generic_params())?, "symbolic".into()),
        None if check_budget::<RationalFunction>(n, d, 1).is_ok() => {
            (pm_dim_rows(n, d, &RationalFunction::generic_params())?, "symbolic".into())
        }
        None => {
            let s = Specialization::default_point(d);
            (pm_dim_rows(n, d, &Params::at(&s))?, s.to_string())
        }
    };
    let pass = rows.iter().all(|r| r.pass());
    let table = rows
        .iter()
        .map(|r| {
            vec![
                r.kind.clone(),
                r.presentation.to_string(),
                r.dim.to_string(),
                r.expected.to_string(),
                r.pass().to_string(),
            ]
        })
        .collect();
    Ok(Report::new("dims", json!({ "n": n, "d": d, "backend": used }), json!(rows), pass)
        .table(vec!["kind", "presentation", "dim", "expected", "pass"], table))
}

fn decompose(flags: &Flags) -> Result<Report> {
    let n = require(flags.n, "n", "decompose")?;
    let d = require(flags.d, "d", "decompose")?;
    let report: SWReport = match backend(flags, d)? {
        Some(Backend::Symbolic) => schur_weyl_table(n, d, &RationalFunction::generic_params(), "symbolic")?,
        Some(Backend::Specialized(s)) => schur_weyl_table(n, d, &Params::at(&s), &s.to_string())?,
        None => {
            let s = Specialization::default_point(d);
            schur_weyl_table(n, d, &Params::at(&s), &s.to_string())?
        }
    };
    let rows = report
        .rows
        .iter()
        .map(|r| {
            vec![
                r.shape.lambda.to_string(),
                r.shape.mu.to_string(),
                r.dim_l.to_string(),
                r.dim_m.to_string(),
            ]
        })
        .collect();
    let params = json!({ "n": n, "d": d, "backend": report.backend });
    let mut out = Report::new("decompose", params, report.to_json(), report.pass())
        .table(vec!["lambda", "mu", "dimL", "dimM"], rows);
    let mut text: Vec<String> = vec![format!("{:<8} {:<8} {:>6} {:>6}", "lambda", "mu", "dimL", "dimM")];
    text.extend(
        report
            .rows
            .iter()
            .map(|r| format!("{:<8} {:<8} {:>6} {:>6}", r.shape.lambda.to_string(), r.shape.mu.to_string(), r.dim_l, r.dim_m)),
    );
    text.push(format!("sum dimL*dimM = {} (n^d = {})", report.sum_ld, n.pow(d as u32)));
    text.push(format!("sum dimL^2 = {} (dim S = {})", report.sum_l2, report.schur_algebra_dim));
    text.push(format!("pass: {}", report.pass()));
    out.text = Some(text);
    Ok(out)
}

fn schur(flags: &Flags) -> Result<Report> {
    let n = require(flags.n, "n", "schur")?;
    let shape: Bipartition = flags
        .shape
        .as_deref()
        .ok_or_else(|| InputError("--shape is required for schur".into()))?
        .parse()?;
    let d = shape.size();
    if d == 0 {
        return Err(InputError("--shape must have at least one box".into()));
    }
    if flags.d.is_some_and(|x| x != d) {
        return Err(InputError(format!("--d {} does not match the shape size {d}", flags.d.unwrap_or(0))));
    }
    let b = backend(flags, d)?;
    let symbolic = match &b {
        Some(b) => *b == Backend::Symbolic,
        None => check_budget::<RationalFunction>(n, d, 1).is_ok(),
    };
    let (value, used) = if symbolic {
        let v = schur_functor(&shape, n, &RationalFunction::generic_params())?;
        (json!({ "summary": v.summary(), "basis": v.space.to_json() }), "symbolic".to_string())
    } else {
        let s = match b {
            Some(Backend::Specialized(s)) => s,
            _ => Specialization::default_point(d),
        };
        let v = schur_functor(&shape, n, &Params::at(&s))?;
        (json!({ "summary": v.summary(), "basis": v.space.to_json() }), s.to_string())
    };
    let dim = value["summary"]["dim"].as_u64().unwrap_or_default();
    let expected = shape.semistandard_count(n)?;
    let pass = dim == expected;
    let results = json!({
        "shape": shape.to_string(),
        "dim": dim,
        "semistandard_count": expected,
        "value": value,
    });
    let params = json!({ "n": n, "d": d, "shape": shape.to_string(), "backend": used });
    Ok(Report::new("schur", params, results, pass).table(
        vec!["shape", "n", "dim", "semistandard_count"],
        vec![vec![shape.to_string(), n.to_string(), dim.to_string(), expected.to_string()]],
    ))
}

fn eigen(flags: &Flags) -> Result<Report> {
    let n = require(flags.n, "n", "eigen")?;
    let e = positive(flags.e, "e")?.unwrap_or(2);
    let d = positive(flags.d, "d")?;
    let s = point(flags, d.unwrap_or(1) * e, "eigen")?;
    let r = e_hecke_rank1(e, n, &s)?;
    let mut rows = vec![
        vec!["eigenvalue_count".to_string(), r.eigenvalue_count.to_string()],
        vec!["eigenvalues".to_string(), r.eigenvalues.join(" ")],
        vec!["matrix_algebra_dim".to_string(), r.matrix_algebra_dim.to_string()],
        vec!["abstract_algebra_dim".to_string(), r.abstract_algebra_dim.to_string()],
    ];
    if let Some(q) = r.quoted_dim {
        rows.push(vec!["quoted_dim".to_string(), q.to_string()]);
    }
    if let Some(q) = r.quoted_eigenvalue_count {
        rows.push(vec!["quoted_eigenvalue_count".to_string(), q.to_string()]);
    }
    rows.push(vec!["discrepancy".to_string(), r.discrepancy.to_string()]);
    let mut higher = Vec::new();
    if let Some(d) = d {
        for kind in PmKind::ALL {
            let v = higher_pm_power(d, e, n, kind, &s)?;
            rows.push(vec![format!("higher {kind} d={d}"), v.dim().to_string()]);
            higher.push(json!({ "kind": kind.to_string(), "d": d, "e": e, "dim": v.dim() }));
        }
    }
    let rank_one = serde_json::to_value(&r).map_err(|e| InputError(e.to_string()))?;
    let params = json!({ "n": n, "d": d, "e": e, "backend": s.to_string() });
    Ok(Report::new("eigen", params, json!({ "rank_one": rank_one, "higher": higher }), true)
        .table(vec!["quantity", "value"], rows))
}

fn centralizer(flags: &Flags) -> Result<Report> {
    let n = require(flags.n, "n", "centralizer")?;
    let d = require(flags.d, "d", "centralizer")?;
    check_budget::<qsp_core::scalars::Rational>(n, d, 1)?;
    let s = point(flags, d, "centralizer")?;
    let r = verify_double_centralizer(n, d, &s)?;
    let rows = vec![
        vec!["algebra_dim".to_string(), r.algebra_dim.to_string()],
        vec!["commutant_dim".to_string(), r.commutant_dim.to_string()],
        vec!["noncommuting".to_string(), r.noncommuting.len().to_string()],
    ];
    let pass = r.pass();
    let results = serde_json::to_value(&r).map_err(|e| InputError(e.to_string()))?;
    Ok(
        Report::new("centralizer", json!({ "n": n, "d": d, "backend": s.to_string() }), results, pass)
            .table(vec!["quantity", "value"], rows),
    )
}
