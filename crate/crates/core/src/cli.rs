//! Command-line front end.
//!
//! Every subcommand builds a [`Report`]; the exit code is 0 when no check
//! failed, 1 when one did and 2 for usage, parse and input errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::catalog::{
    family_generators, suite_checks, Family, GroupSpec, Namespace, NamespaceCache, NamespaceKind,
    Suite, WordExpr,
};
use crate::error::{Error, Result};
use crate::geometry::geometry_suite;
use crate::invariants::{
    cusp_modulus, equivalence_witness, homology_report, integral_traces,
    invariant_trace_field_lower, trace_field, IntegralityReport, ModulusClass,
};
use crate::moebius::ProjPoint;
use crate::numfield::{is_algebraic_integer, minimal_polynomial, FieldElement, Subfield};
use crate::parse::{parse_element, parse_point, parse_word};

pub const TOOL: &str = env!("CARGO_PKG_NAME");
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Parser)]
#[command(
    name = "tracefield",
    version,
    about = "Exact invariants of Kleinian groups over Q(i, sqrt2)"
)]
pub struct Cli {
    /// Emit the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    /// Leave the timestamp out of the report.
    #[arg(long, global = true)]
    pub no_timestamp: bool,
    /// Also write the JSON report to this file.
    #[arg(long, global = true, value_name = "PATH")]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    All,
    Section2,
    Section3,
    Section4,
    Section5,
    Section6,
    Geometry,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CuspArg {
    /// The cusp of the knotted component (`p1`, `lambda1`).
    Knotted,
    /// The other cusp (`p2`, `lambda2`).
    Other,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run the catalog identity suites and geometry checks.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: SuiteArg,
    },
    /// Complex modulus of a cusp of a family member.
    Modulus {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum)]
        cusp: Option<CuspArg>,
    },
    /// Trace field of a family member or of explicit generators.
    Tracefield {
        #[arg(long, value_enum, required_unless_present = "generators")]
        family: Option<Family>,
        #[arg(long, default_value_t = 0)]
        n: u32,
        /// Comma-separated words, evaluated in `--namespace`.
        #[arg(long, conflicts_with = "family", value_delimiter = ',')]
        generators: Vec<String>,
        #[arg(long, value_enum, default_value = "links")]
        namespace: NamespaceKind,
        /// Lower bound for the invariant trace field from squares of short words.
        #[arg(long)]
        invariant: bool,
        #[arg(long, default_value_t = 2)]
        radius: usize,
    },
    /// Whether two points are related by a map in PGL_2(Q).
    Equivalent {
        #[arg(long, allow_hyphen_values = true)]
        z: String,
        #[arg(long, allow_hyphen_values = true)]
        w: String,
    },
    /// Dimension of mod-2 homology of the one-cusped family member.
    Homology {
        #[arg(long)]
        n: u32,
    },
    /// Minimal polynomial of an element, or with `--trace` of the trace of a word.
    Minpoly {
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        #[arg(long, value_enum, default_value = "links")]
        namespace: NamespaceKind,
        #[arg(long, default_value_t = 1)]
        n: u32,
        #[arg(long)]
        trace: bool,
    },
    /// Integrality of traces of a family member.
    Integral {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 2)]
        radius: usize,
    },
    /// Evaluate a word to a matrix.
    Eval {
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        #[arg(long, value_enum)]
        namespace: NamespaceKind,
        #[arg(long, default_value_t = 1)]
        n: u32,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
}

impl Status {
    fn from_bool(passed: bool) -> Self {
        if passed {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    fn tag(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Inconclusive => "INCONCLUSIVE",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportCheck {
    pub id: String,
    pub status: Status,
    pub details: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub inconclusive: usize,
}

/// Output of one invocation. Field order is fixed, so the JSON form is
/// byte-stable once the timestamp is disabled.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub tool: String,
    pub version: String,
    pub command: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timestamp: Option<u64>,
    pub result: Value,
    pub checks: Vec<ReportCheck>,
    pub summary: Summary,
}

impl Report {
    fn new(command: Vec<String>, result: Value, checks: Vec<ReportCheck>) -> Self {
        let mut summary = Summary::default();
        for c in &checks {
            match c.status {
                Status::Pass => summary.pass += 1,
                Status::Fail => summary.fail += 1,
                Status::Inconclusive => summary.inconclusive += 1,
            }
        }
        Self {
            tool: TOOL.into(),
            version: VERSION.into(),
            command,
            timestamp: None,
            result,
            checks,
            summary,
        }
    }

    pub fn exit_code(&self) -> i32 {
        if self.summary.fail > 0 {
            1
        } else {
            0
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if let Value::Object(map) = &self.result {
            for (k, v) in map.iter().filter(|(k, _)| *k != "pretty") {
                let v = match v {
                    Value::String(s) => humanize(s),
                    other => other.to_string(),
                };
                out.push_str(&format!("{k}: {v}\n"));
            }
        }
        for c in &self.checks {
            out.push_str(&format!("[{}] {} {}\n", c.status.tag(), c.id, c.details));
        }
        if !self.checks.is_empty() {
            let s = &self.summary;
            out.push_str(&format!(
                "{} passed, {} failed, {} inconclusive\n",
                s.pass, s.fail, s.inconclusive
            ));
        }
        out
    }
}

/// Canonical element and matrix strings in their pretty form.
fn humanize(s: &str) -> String {
    if s.starts_with("[[") {
        if let Ok(WordExpr::Literal(m)) = parse_word(s) {
            return m.pretty();
        }
    } else if s.starts_with('(') {
        if let Ok(e) = parse_element(s) {
            return e.pretty();
        }
    }
    s.to_string()
}

fn check(id: impl Into<String>, passed: bool, details: impl Into<String>) -> ReportCheck {
    ReportCheck {
        id: id.into(),
        status: Status::from_bool(passed),
        details: details.into(),
    }
}

fn verify(suite: SuiteArg) -> (Value, Vec<ReportCheck>) {
    let sections: Vec<Suite> = match suite {
        SuiteArg::All => Suite::ALL.to_vec(),
        SuiteArg::Section2 => vec![Suite::Section2],
        SuiteArg::Section3 => vec![Suite::Section3],
        SuiteArg::Section4 => vec![Suite::Section4],
        SuiteArg::Section5 => vec![Suite::Section5],
        SuiteArg::Section6 => vec![Suite::Section6],
        SuiteArg::Geometry => vec![],
    };
    let mut cache = NamespaceCache::default();
    let mut checks = Vec::new();
    let mut names: Vec<&str> = Vec::new();
    for s in sections {
        names.push(s.tag());
        for c in suite_checks(s) {
            let outcome = c.run(&mut cache);
            checks.push(check(c.id, outcome.passed, outcome.details));
        }
    }
    if matches!(suite, SuiteArg::All | SuiteArg::Geometry) {
        names.push("geometry");
        for c in geometry_suite() {
            checks.push(check(format!("geometry.{}", c.id), c.passed, c.details));
        }
    }
    (json!({ "suites": names }), checks)
}

/// Representative of the class a family member's cusp is expected to have.
pub fn expected_modulus(family: Family, n: u32) -> Option<FieldElement> {
    let src = match family {
        Family::Links => format!("i*(1 + {}*s2)", 2 * n),
        Family::Onecusped => format!("1 + 4i*({n}*s2 + 1)"),
        Family::Mutant => return None,
    };
    Some(parse_element(&src).expect("well-formed"))
}

/// `(alpha, beta)` names of the commuting parabolics for a cusp.
pub fn cusp_pair(family: Family, cusp: Option<CuspArg>) -> Result<(&'static str, &'static str)> {
    match (family, cusp) {
        (Family::Links, None | Some(CuspArg::Knotted)) => Ok(("p1", "lambda1")),
        (Family::Links, Some(CuspArg::Other)) => Ok(("p2", "lambda2")),
        (Family::Onecusped, None) => Ok(("mu", "lambda")),
        (Family::Onecusped, Some(_)) => Err(Error::Unsupported(
            "the one-cusped family has a single cusp; omit --cusp".into(),
        )),
        (Family::Mutant, _) => Err(Error::Unsupported(
            "cusp moduli of the mutant family are not catalogued".into(),
        )),
    }
}

fn modulus(family: Family, n: u32, cusp: Option<CuspArg>) -> Result<(Value, Vec<ReportCheck>)> {
    let (alpha, beta) = cusp_pair(family, cusp)?;
    if n < 1 {
        return Err(Error::InvalidN {
            what: "modulus".into(),
            n: n.into(),
            reason: "the cusp elements are defined for n >= 1".into(),
        });
    }
    let ns = Namespace::for_kind(family.namespace(), n);
    let class = cusp_modulus(ns.get(alpha)?, ns.get(beta)?)?;
    let expected = ProjPoint::Finite(expected_modulus(family, n).expect("catalogued family"));
    let equivalent = class == ModulusClass::new(expected.clone());
    let result = json!({
        "family": family.tag(),
        "n": n,
        "cusp": [alpha, beta],
        "representative": class.representative.to_string(),
        "pretty": class.representative.pretty(),
        "expected_class": expected.to_string(),
        "equivalent_to_expected": equivalent,
    });
    let c = check(
        format!("modulus.{}.{n}.{beta}", family.tag()),
        equivalent,
        format!("{class} ~ [{}]", expected.pretty()),
    );
    Ok((result, vec![c]))
}

fn field_json(f: Subfield) -> Value {
    json!({ "tag": f.tag(), "pretty": f.pretty(), "degree": f.degree() })
}

#[allow(clippy::too_many_arguments)]
fn tracefield(
    family: Option<Family>,
    n: u32,
    generators: &[String],
    namespace: NamespaceKind,
    invariant: bool,
    radius: usize,
) -> Result<Value> {
    let spec = match family {
        Some(f) => family_generators(f, n)?,
        None => {
            let ns = Namespace::for_kind(namespace, n.max(1));
            let words: Vec<&str> = generators.iter().map(String::as_str).collect();
            GroupSpec::from_words("generators", &ns, &words)?
        }
    };
    let field = trace_field(&spec);
    let mut result = json!({
        "group": spec.name,
        "generators": spec.len(),
        "trace_field": field_json(field),
    });
    if invariant {
        result["invariant_trace_field_lower"] =
            field_json(invariant_trace_field_lower(&spec, radius));
        result["radius"] = json!(radius);
    }
    Ok(result)
}

fn equivalent(z: &str, w: &str) -> Result<Value> {
    let (z, w) = (parse_point(z)?, parse_point(w)?);
    let witness = equivalence_witness(&z, &w);
    Ok(json!({
        "z": z.to_string(),
        "w": w.to_string(),
        "equivalent": witness.is_some(),
        "witness": witness.map(|m| m.iter().map(|q| q.to_string()).collect::<Vec<_>>()),
    }))
}

fn minpoly(word: &str, namespace: NamespaceKind, n: u32, trace: bool) -> Result<Value> {
    let value = if trace {
        Namespace::for_kind(namespace, n).evaluate(word)?.trace()
    } else {
        parse_element(word)?
    };
    let p = minimal_polynomial(&value);
    Ok(json!({
        "value": value.to_string(),
        "pretty": value.pretty(),
        "minpoly": p.to_string(),
        "degree": p.degree(),
        "monic": p.is_monic(),
        "algebraic_integer": is_algebraic_integer(&value),
    }))
}

fn integral(family: Family, n: u32, radius: usize) -> Result<(Value, Vec<ReportCheck>)> {
    let spec = family_generators(family, n)?;
    let report = integral_traces(&spec, radius);
    let id = format!("integral.{}.{n}", family.tag());
    let c = match &report {
        IntegralityReport::IntegralCertificate { generators } => check(
            id,
            true,
            format!("all entries of {generators} generators are integral"),
        ),
        IntegralityReport::NonintegralWitness(w) => check(
            id,
            true,
            format!("tr({}) has minimal polynomial {}", w.word, w.minpoly),
        ),
        IntegralityReport::Inconclusive {
            radius,
            words_checked,
        } => ReportCheck {
            id,
            status: Status::Inconclusive,
            details: format!("{words_checked} words up to length {radius} have integral traces"),
        },
    };
    let result = json!({
        "family": family.tag(),
        "n": n,
        "report": serde_json::to_value(&report).expect("serializable"),
    });
    Ok((result, vec![c]))
}

fn eval(word: &str, namespace: NamespaceKind, n: u32) -> Result<Value> {
    let m = Namespace::for_kind(namespace, n).evaluate(word)?;
    Ok(json!({
        "matrix": m.to_string(),
        "pretty": m.pretty(),
        "det": m.det().to_string(),
        "trace": m.trace().to_string(),
    }))
}

/// Runs a parsed command line.
pub fn execute(cli: &Cli, echo: Vec<String>) -> Result<Report> {
    let (result, checks) = match &cli.command {
        Command::Verify { suite } => verify(*suite),
        Command::Modulus { family, n, cusp } => modulus(*family, *n, *cusp)?,
        Command::Tracefield {
            family,
            n,
            generators,
            namespace,
            invariant,
            radius,
        } => (
            tracefield(*family, *n, generators, *namespace, *invariant, *radius)?,
            vec![],
        ),
        Command::Equivalent { z, w } => (equivalent(z, w)?, vec![]),
        Command::Homology { n } => (
            serde_json::to_value(homology_report(*n)?).expect("serializable"),
            vec![],
        ),
        Command::Minpoly {
            word,
            namespace,
            n,
            trace,
        } => (minpoly(word, *namespace, *n, *trace)?, vec![]),
        Command::Integral { family, n, radius } => integral(*family, *n, *radius)?,
        Command::Eval { word, namespace, n } => (eval(word, *namespace, *n)?, vec![]),
    };
    let mut report = Report::new(echo, result, checks);
    if !cli.no_timestamp {
        report.timestamp = SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .ok()
            .map(|d| d.as_secs());
    }
    Ok(report)
}

/// Parses `args` (including the program name), runs the command and writes
/// the report. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if code == 0 { out } else { err };
            let _ = write!(sink, "{rendered}");
            return code;
        }
    };
    let echo = args
        .iter()
        .skip(1)
        .map(|a| a.to_string_lossy().into_owned())
        .collect();
    let report = match execute(&cli, echo) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return 2;
        }
    };
    if let Some(path) = &cli.output {
        if let Err(e) = std::fs::write(path, report.to_json() + "\n") {
            let _ = writeln!(err, "error: cannot write {}: {e}", path.display());
            return 2;
        }
    }
    let text = if cli.json {
        report.to_json() + "\n"
    } else {
        report.to_text()
    };
    let _ = out.write_all(text.as_bytes());
    report.exit_code()
}
