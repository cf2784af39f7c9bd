//! The `qser` command line: `expand`, `verify` and `scan`.
//!
//! Exit codes: 0 when the expectation is met, 1 on a mathematical mismatch,
//! 2 on usage errors. Data goes to stdout, diagnostics to stderr. JSON
//! coefficients are decimal strings.

use std::ffi::OsString;
use std::io::{self, Write};
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;

use crate::error::Error;
use crate::rr::NamedSeries;
use crate::verify::{
    AsymptoticCheck, ConjectureReport, Identity, Report, ScanOutcome, ScanTarget, Status, Verifier,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Table,
    Csv,
    Json,
}

/// `all` or a single identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerifyTarget {
    All,
    One(Identity),
}

impl FromStr for VerifyTarget {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        if s == "all" {
            Ok(VerifyTarget::All)
        } else {
            s.parse().map(VerifyTarget::One)
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "qser",
    version,
    about = "Exact q-series for the Rogers-Ramanujan continued fraction"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the first coefficients of a named series.
    Expand {
        /// G, H, G_sum, H_sum, R, Rinv, R5, R5inv, Rq5, Cratio, Dratio,
        /// Fratio15, Fratio51, A, B, C, D, c or d
        name: NamedSeries,
        #[arg(long, default_value_t = 20, value_parser = clap::value_parser!(u64).range(1..))]
        order: u64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
        format: OutputFormat,
    },
    /// Check an identity (or all of them) coefficient by coefficient.
    Verify {
        /// B20, R5, A_full, B_full, D_full, dissect-A0, dissect-B0,
        /// dissect-D1, dissect-C0 or all
        target: VerifyTarget,
        #[arg(long, default_value_t = 200, value_parser = clap::value_parser!(u64).range(1..))]
        order: u64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
        format: OutputFormat,
    },
    /// Scan coefficient signs against a recorded pattern.
    Scan {
        /// richmond-c, richmond-d, thm2, thm3, thm4, thm5, conjecture13 or asymptotic-c
        target: ScanTarget,
        #[arg(long = "n-max", default_value_t = 500)]
        n_max: u64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
        format: OutputFormat,
    },
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return e.exit_code();
        }
    };
    let result = match cli.command {
        Command::Expand {
            name,
            order,
            format,
        } => cmd_expand(name, order as usize, format, out).map(|()| EXIT_OK),
        Command::Verify {
            target,
            order,
            format,
        } => cmd_verify(target, order as usize, format, out, err),
        Command::Scan {
            target,
            n_max,
            format,
        } => cmd_scan(target, n_max as usize, format, out, err),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "qser: {e}");
            EXIT_USAGE
        }
    }
}

#[derive(Serialize)]
struct ExpandJson<'a> {
    name: &'a str,
    coeffs: Vec<String>,
}

pub fn cmd_expand(
    name: NamedSeries,
    order: usize,
    format: OutputFormat,
    out: &mut dyn Write,
) -> io::Result<()> {
    let series = crate::rr::build(name, order);
    let coeffs = series.coeffs();
    match format {
        OutputFormat::Table => {
            let rows: Vec<(String, String)> = coeffs
                .iter()
                .enumerate()
                .map(|(n, c)| (n.to_string(), c.to_string()))
                .collect();
            let wn = rows.iter().map(|r| r.0.len()).max().unwrap_or(0).max(1);
            let wc = rows
                .iter()
                .map(|r| r.1.len())
                .max()
                .unwrap_or(0)
                .max("coefficient".len());
            writeln!(out, "{:>wn$}  {:>wc$}", "n", "coefficient")?;
            for (n, c) in rows {
                writeln!(out, "{n:>wn$}  {c:>wc$}")?;
            }
        }
        OutputFormat::Csv => {
            writeln!(out, "n,coefficient")?;
            for (n, c) in coeffs.iter().enumerate() {
                writeln!(out, "{n},{c}")?;
            }
        }
        OutputFormat::Json => {
            let doc = ExpandJson {
                name: name.as_str(),
                coeffs: coeffs.iter().map(BigInt::to_string).collect(),
            };
            writeln!(out, "{}", to_json(&doc))?;
        }
    }
    Ok(())
}

pub fn cmd_verify(
    target: VerifyTarget,
    order: usize,
    format: OutputFormat,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> io::Result<i32> {
    let verifier = Verifier::new();
    let reports = match target {
        VerifyTarget::All => verifier.verify_all(order),
        VerifyTarget::One(id) => vec![verifier.verify(id, order)],
    };
    match format {
        OutputFormat::Table => {
            for r in &reports {
                write_report_table(r, out)?;
            }
        }
        OutputFormat::Csv => {
            write_csv_header(out)?;
            for r in &reports {
                write_report_csv(r, out)?;
            }
        }
        OutputFormat::Json => {
            let docs: Vec<ReportJson> = reports.iter().map(ReportJson::from).collect();
            match target {
                VerifyTarget::All => writeln!(out, "{}", to_json(&docs))?,
                VerifyTarget::One(_) => writeln!(out, "{}", to_json(&docs[0]))?,
            }
        }
    }
    let failed: Vec<&Report> = reports.iter().filter(|r| !r.is_verified()).collect();
    for r in &failed {
        writeln!(err, "qser: identity mismatch: {r}")?;
    }
    Ok(if failed.is_empty() {
        EXIT_OK
    } else {
        EXIT_MISMATCH
    })
}

pub fn cmd_scan(
    target: ScanTarget,
    n_max: usize,
    format: OutputFormat,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> io::Result<i32> {
    let outcome = Verifier::new().scan(target, n_max);
    match (&outcome, format) {
        (ScanOutcome::Signs(r), OutputFormat::Table) => write_report_table(r, out)?,
        (ScanOutcome::Signs(r), OutputFormat::Csv) => {
            write_csv_header(out)?;
            write_report_csv(r, out)?;
        }
        (ScanOutcome::Signs(r), OutputFormat::Json) => {
            writeln!(out, "{}", to_json(&ReportJson::from(r)))?
        }
        (ScanOutcome::Conjecture(c), OutputFormat::Table) => {
            let f = c.falsified();
            writeln!(
                out,
                "conjecture13 (n <= {}): falsified at A: {:?}, B: {:?}, D: {:?}",
                c.n_max, f.a, f.b, f.d
            )?;
            for part in c.parts() {
                write_report_table(part, out)?;
            }
        }
        (ScanOutcome::Conjecture(c), OutputFormat::Csv) => {
            write_csv_header(out)?;
            for part in c.parts() {
                write_report_csv(part, out)?;
            }
        }
        (ScanOutcome::Conjecture(c), OutputFormat::Json) => {
            writeln!(out, "{}", to_json(&ConjectureJson::from(c.as_ref())))?
        }
        (ScanOutcome::Asymptotic(a), OutputFormat::Table) => {
            writeln!(
                out,
                "asymptotic-c (n in {}..={}): {} of {} signs agree ({:.2}%), error trend {}",
                a.lo,
                a.hi,
                a.agreements,
                a.compared,
                100.0 * a.agreement_rate(),
                if a.error_trend_decreasing() {
                    "decreasing"
                } else {
                    "not decreasing"
                }
            )?;
            for (n, exact, approx) in &a.mismatches {
                writeln!(
                    out,
                    "  mismatch at n={n}: c(n)={exact}, main term {approx:e}"
                )?;
            }
        }
        (ScanOutcome::Asymptotic(a), OutputFormat::Csv) => {
            writeln!(out, "n,coefficient,main_term")?;
            for (n, exact, approx) in &a.mismatches {
                writeln!(out, "{n},{exact},{approx:e}")?;
            }
        }
        (ScanOutcome::Asymptotic(a), OutputFormat::Json) => {
            writeln!(out, "{}", to_json(&AsymptoticJson::new(a, n_max)))?
        }
    }
    let ok = outcome.meets_expectation();
    if !ok {
        writeln!(
            err,
            "qser: scan {} did not match its expected outcome",
            target.as_str()
        )?;
    }
    Ok(if ok { EXIT_OK } else { EXIT_MISMATCH })
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("report serialization cannot fail")
}

fn write_report_table(r: &Report, out: &mut dyn Write) -> io::Result<()> {
    writeln!(out, "{r}")?;
    for v in &r.violations {
        writeln!(
            out,
            "  n={}: value {} expected {}",
            v.index,
            v.value,
            v.expected.sign_label()
        )?;
    }
    Ok(())
}

fn write_csv_header(out: &mut dyn Write) -> io::Result<()> {
    writeln!(
        out,
        "subject,order_checked,status,divergence_index,lhs,rhs,violations"
    )
}

fn write_report_csv(r: &Report, out: &mut dyn Write) -> io::Result<()> {
    let (idx, lhs, rhs) = match &r.first_divergence {
        Some(d) => (d.index.to_string(), d.lhs.to_string(), d.rhs.to_string()),
        None => Default::default(),
    };
    let violations: Vec<String> = r.violations.iter().map(|v| v.index.to_string()).collect();
    writeln!(
        out,
        "{},{},{},{},{},{},{}",
        r.subject,
        r.order_checked,
        r.status.label(),
        idx,
        lhs,
        rhs,
        violations.join(" ")
    )
}

/// JSON shape of a report.
#[derive(Debug, Serialize)]
pub struct ReportJson {
    pub subject: String,
    pub order_checked: usize,
    pub status: &'static str,
    pub first_divergence: Option<DivergenceJson>,
    pub violations: Vec<ViolationJson>,
}

#[derive(Debug, Serialize)]
pub struct DivergenceJson {
    pub index: usize,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Serialize)]
pub struct ViolationJson {
    pub index: usize,
    pub value: String,
    pub expected: &'static str,
}

impl From<&Report> for ReportJson {
    fn from(r: &Report) -> Self {
        ReportJson {
            subject: r.subject.clone(),
            order_checked: r.order_checked,
            status: r.status.label(),
            first_divergence: r.first_divergence.as_ref().map(|d| DivergenceJson {
                index: d.index,
                lhs: d.lhs.to_string(),
                rhs: d.rhs.to_string(),
            }),
            violations: r
                .violations
                .iter()
                .map(|v| ViolationJson {
                    index: v.index,
                    value: v.value.to_string(),
                    expected: v.expected.sign_label(),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Serialize)]
struct FalsifiedJson {
    #[serde(rename = "A")]
    a: Vec<usize>,
    #[serde(rename = "B")]
    b: Vec<usize>,
    #[serde(rename = "D")]
    d: Vec<usize>,
}

/// The base report fields plus the falsified n per part and the part reports.
#[derive(Debug, Serialize)]
struct ConjectureJson {
    #[serde(flatten)]
    report: ReportJson,
    falsified: FalsifiedJson,
    parts: Vec<ReportJson>,
}

impl From<&ConjectureReport> for ConjectureJson {
    fn from(c: &ConjectureReport) -> Self {
        let f = c.falsified();
        let falsified = !(f.a.is_empty() && f.b.is_empty() && f.d.is_empty());
        let status = if falsified {
            Status::ConjectureFalsifiedAt(Vec::new()).label()
        } else {
            Status::Verified.label()
        };
        let parts: Vec<ReportJson> = c.parts().into_iter().map(ReportJson::from).collect();
        let violations = c
            .parts()
            .into_iter()
            .flat_map(|r| ReportJson::from(r).violations)
            .collect();
        ConjectureJson {
            report: ReportJson {
                subject: ScanTarget::Conjecture13.as_str().to_string(),
                order_checked: c.n_max,
                status,
                first_divergence: None,
                violations,
            },
            falsified: FalsifiedJson {
                a: f.a,
                b: f.b,
                d: f.d,
            },
            parts,
        }
    }
}

/// The base report fields, with sign mismatches as violations, plus counts.
#[derive(Debug, Serialize)]
struct AsymptoticJson {
    #[serde(flatten)]
    report: ReportJson,
    compared: usize,
    agreements: usize,
}

impl AsymptoticJson {
    fn new(a: &AsymptoticCheck, n_max: usize) -> Self {
        let status = if a.passes() {
            Status::Verified.label()
        } else {
            Status::Violated.label()
        };
        AsymptoticJson {
            report: ReportJson {
                subject: ScanTarget::AsymptoticC.as_str().to_string(),
                order_checked: n_max,
                status,
                first_divergence: None,
                violations: a
                    .mismatches
                    .iter()
                    .map(|(n, exact, approx)| ViolationJson {
                        index: *n,
                        value: exact.to_string(),
                        expected: if *approx > 0.0 {
                            "pos"
                        } else if *approx < 0.0 {
                            "neg"
                        } else {
                            "zero"
                        },
                    })
                    .collect(),
            },
            compared: a.compared,
            agreements: a.agreements,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut argv = vec!["qser"];
        argv.extend_from_slice(args);
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn expand_formats() {
        let (code, out, _) = run_str(&["expand", "d", "--order", "4", "--format", "csv"]);
        assert_eq!(code, 0);
        assert_eq!(out, "n,coefficient\n0,1\n1,-1\n2,1\n3,0\n");
        let (code, out, _) = run_str(&["expand", "C", "--order", "1", "--format", "json"]);
        assert_eq!(code, 0);
        assert_eq!(out, "{\"name\":\"C\",\"coeffs\":[\"1\"]}\n");
        let (code, out, _) = run_str(&["expand", "A", "--order", "1"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 2);
        assert!(out.lines().nth(1).unwrap().trim_start().starts_with("0"));
        assert!(out.lines().nth(1).unwrap().trim_end().ends_with("1"));
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(run_str(&["expand", "Q"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["expand", "d", "--order", "0"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["verify", "B20", "--order", "0"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["verify", "B21"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["scan", "thm6"]).0, EXIT_USAGE);
        let (code, out, err) = run_str(&["bogus"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(out.is_empty());
        assert!(!err.is_empty());
    }

    #[test]
    fn verify_json_shape() {
        let (code, out, _) = run_str(&["verify", "B20", "--order", "50", "--format", "json"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["subject"], "B20");
        assert_eq!(v["order_checked"], 50);
        assert_eq!(v["status"], "verified");
        assert!(v["first_divergence"].is_null());
        assert_eq!(v["violations"], serde_json::json!([]));
    }

    #[test]
    fn conjecture_json() {
        let (code, out, _) =
            run_str(&["scan", "conjecture13", "--n-max", "40", "--format", "json"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(
            v["falsified"],
            serde_json::json!({"A": [0], "B": [0], "D": []})
        );
        assert_eq!(v["status"], "falsified");
        assert_eq!(v["violations"][0]["expected"], "neg");
        assert_eq!(v["violations"][0]["value"], "1");
    }

    #[test]
    fn scan_single_index() {
        let (code, out, _) = run_str(&["scan", "richmond-c", "--n-max", "0"]);
        assert_eq!(code, 0);
        assert!(out.contains("verified"));
    }
}
