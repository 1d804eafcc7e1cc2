//! Command-line front end: tables, single verifications and grid audits.
//!
//! Exit status: 0 when every report passes (or a table was written), 1 when
//! any report does not pass, 2 on usage or parameter errors.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::error::Error;
use crate::exact_arith::Rational;
use crate::frobenius::{
    bernoulli_numbers, fe_higher_numbers_oracle, fe_numbers, fe_polynomial, Variant,
};
use crate::stirling::triangle_recurrence;
use crate::verifier::{audit_all, default_grid, Check, GridConfig, IdentityId, VerificationReport};
use crate::Polynomial;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "frobenius-euler",
    version,
    about = "Exact Frobenius-Euler tables and identity verification"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
#[allow(clippy::large_enum_variant)]
pub enum Command {
    /// Print a table of numbers, polynomials or triangle entries.
    Table(TableArgs),
    /// Check one identity at one parameter point.
    Verify(VerifyArgs),
    /// Check every identity over a parameter grid.
    Audit(AuditArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableKind {
    FeNumbers,
    FePolynomials,
    FeHigher,
    Stirling,
    Bernoulli,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct Output {
    /// Output format [default: csv for tables, json otherwise]
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Write to this file instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(value_enum)]
    pub kind: TableKind,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
    pub u: Option<Rational>,
    /// Order of the higher-order numbers.
    #[arg(long = "N")]
    pub order: Option<usize>,
    #[arg(long = "n-max")]
    pub n_max: usize,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(value_parser = parse_identity)]
    pub identity: IdentityId,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long = "N")]
    pub order: Option<usize>,
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
    pub u: Option<Rational>,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
    pub alpha: Option<Rational>,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
    pub beta: Option<Rational>,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
    pub x: Option<Rational>,
    /// Series truncation order.
    #[arg(long, default_value_t = 16)]
    pub trunc: usize,
    /// as-printed or corrected.
    #[arg(long, default_value = "corrected", value_parser = parse_variant)]
    pub variant: Variant,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct AuditArgs {
    /// JSON grid file; the built-in grid is used when absent.
    #[arg(long)]
    pub grid: Option<PathBuf>,
    #[command(flatten)]
    pub output: Output,
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    Rational::from_str(s).map_err(|e| e.to_string())
}

fn parse_variant(s: &str) -> Result<Variant, String> {
    Variant::from_str(s).map_err(|e| e.to_string())
}

fn parse_identity(s: &str) -> Result<IdentityId, String> {
    IdentityId::from_str(s).map_err(|e| e.to_string())
}

/// Parses `args` (including the program name), runs the command and writes
/// the result to `--out` or `stdout`. Diagnostics go to `stderr`.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = err.render().to_string();
            let sink: &mut dyn Write = if err.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };

    let (result, output) = match &cli.command {
        Command::Table(args) => (table(args), &args.output),
        Command::Verify(args) => (verify(args), &args.output),
        Command::Audit(args) => (audit(args), &args.output),
    };
    let (text, code) = match result {
        Ok(ok) => ok,
        Err(msg) => {
            let _ = writeln!(stderr, "error: {msg}");
            return EXIT_USAGE;
        }
    };
    let written = match &output.out {
        Some(path) => fs::write(path, text.as_bytes()).map_err(|e| format!("{}: {e}", path.display())),
        None => stdout.write_all(text.as_bytes()).map_err(|e| e.to_string()),
    };
    if let Err(msg) = written {
        let _ = writeln!(stderr, "error: {msg}");
        return EXIT_USAGE;
    }
    code
}

type CommandResult = Result<(String, i32), String>;

fn table(args: &TableArgs) -> CommandResult {
    let format = args.output.format.unwrap_or(Format::Csv);
    let require_u = || args.u.clone().ok_or_else(|| "--u is required for this table".to_string());
    let err = |e: Error| e.to_string();
    let n_max = args.n_max;

    let text = match args.kind {
        TableKind::FeNumbers => {
            let u = require_u()?;
            let values = fe_numbers(n_max, &u).map_err(err)?;
            number_table("fe-numbers", &[("u", u.to_string())], &values, format)?
        }
        TableKind::FeHigher => {
            let u = require_u()?;
            let order = args.order.ok_or("--N is required for fe-higher")?;
            let values = fe_higher_numbers_oracle(n_max, order, &u).map_err(err)?;
            number_table("fe-higher", &[("u", u.to_string()), ("N", order.to_string())], &values, format)?
        }
        TableKind::Bernoulli => number_table("bernoulli", &[], &bernoulli_numbers(n_max), format)?,
        TableKind::FePolynomials => {
            let u = require_u()?;
            let polys = (0..=n_max)
                .map(|n| fe_polynomial(n, &u))
                .collect::<Result<Vec<_>, _>>()
                .map_err(err)?;
            polynomial_table(&u, &polys, format)?
        }
        TableKind::Stirling => {
            let triangle = triangle_recurrence(n_max).map_err(err)?;
            match format {
                Format::Json => {
                    let rows: Vec<Vec<serde_json::Number>> = triangle
                        .rows()
                        .iter()
                        .map(|row| {
                            row.iter()
                                .map(|a| a.to_string().parse().expect("integers are valid JSON numbers"))
                                .collect()
                        })
                        .collect();
                    to_json(&json!({
                        "table": "stirling",
                        "params": { "n_max": n_max.to_string() },
                        "rows": rows,
                    }))?
                }
                Format::Csv => {
                    let mut records = vec![vec!["N".to_string(), "k".to_string(), "a_k".to_string()]];
                    for (n, k, a) in triangle.entries() {
                        records.push(vec![n.to_string(), k.to_string(), a.to_string()]);
                    }
                    to_csv(&records)?
                }
            }
        }
    };
    Ok((text, EXIT_OK))
}

fn number_table(name: &str, params: &[(&str, String)], values: &[Rational], format: Format) -> Result<String, String> {
    match format {
        Format::Json => {
            let mut p = serde_json::Map::new();
            for (k, v) in params {
                p.insert((*k).to_string(), json!(v));
            }
            p.insert("n_max".into(), json!((values.len() - 1).to_string()));
            let rows: Vec<_> = values
                .iter()
                .enumerate()
                .map(|(n, v)| json!({ "n": n, "value": v }))
                .collect();
            to_json(&json!({ "table": name, "params": p, "rows": rows }))
        }
        Format::Csv => {
            let mut records = vec![vec!["n".to_string(), "value".to_string()]];
            for (n, v) in values.iter().enumerate() {
                records.push(vec![n.to_string(), v.to_string()]);
            }
            to_csv(&records)
        }
    }
}

fn polynomial_table(u: &Rational, polys: &[Polynomial], format: Format) -> Result<String, String> {
    let width = polys.len();
    let padded = |p: &Polynomial| -> Vec<Rational> { (0..width).map(|d| p.coeff(d)).collect() };
    match format {
        Format::Json => {
            let rows: Vec<_> = polys
                .iter()
                .enumerate()
                .map(|(n, p)| json!({ "n": n, "coeffs": p.coeffs() }))
                .collect();
            to_json(&json!({
                "table": "fe-polynomials",
                "params": { "u": u.to_string(), "n_max": (width - 1).to_string() },
                "rows": rows,
            }))
        }
        Format::Csv => {
            let mut header = vec!["n".to_string()];
            header.extend((0..width).map(|d| format!("x^{d}")));
            let mut records = vec![header];
            for (n, p) in polys.iter().enumerate() {
                let mut row = vec![n.to_string()];
                row.extend(padded(p).iter().map(Rational::to_string));
                records.push(row);
            }
            to_csv(&records)
        }
    }
}

fn check_from_args(args: &VerifyArgs) -> Result<Check, String> {
    fn need<T: Clone>(v: &Option<T>, flag: &str, id: IdentityId) -> Result<T, String> {
        v.clone().ok_or_else(|| format!("{flag} is required for {id}"))
    }
    let id = args.identity;
    let variant = args.variant;
    Ok(match id {
        IdentityId::Theorem1 => Check::Theorem1 {
            order: need(&args.order, "--N", id)?,
            u: need(&args.u, "--u", id)?,
            trunc: args.trunc,
            variant,
        },
        IdentityId::Corollary2 => Check::Corollary2 {
            order: need(&args.order, "--N", id)?,
            u: need(&args.u, "--u", id)?,
            x: need(&args.x, "--x", id)?,
            trunc: args.trunc,
            variant,
        },
        IdentityId::Theorem3 => Check::Theorem3 {
            n: need(&args.n, "--n", id)?,
            order: need(&args.order, "--N", id)?,
            u: need(&args.u, "--u", id)?,
            variant,
        },
        IdentityId::Corollary4 => Check::Corollary4 {
            n: need(&args.n, "--n", id)?,
            order: need(&args.order, "--N", id)?,
            u: need(&args.u, "--u", id)?,
            variant,
        },
        IdentityId::Corollary5 => Check::Corollary5 {
            n: need(&args.n, "--n", id)?,
            order: need(&args.order, "--N", id)?,
            u: need(&args.u, "--u", id)?,
            variant,
        },
        IdentityId::Eq60Multinomial => Check::Eq60Multinomial {
            n: need(&args.n, "--n", id)?,
            order: need(&args.order, "--N", id)?,
            u: need(&args.u, "--u", id)?,
        },
        IdentityId::CarlitzProduct => Check::CarlitzProduct {
            m: need(&args.m, "--m", id)?,
            n: need(&args.n, "--n", id)?,
            alpha: need(&args.alpha, "--alpha", id)?,
            beta: need(&args.beta, "--beta", id)?,
            variant,
        },
        IdentityId::CarlitzReciprocal => Check::CarlitzReciprocal {
            m: need(&args.m, "--m", id)?,
            n: need(&args.n, "--n", id)?,
            alpha: need(&args.alpha, "--alpha", id)?,
        },
        IdentityId::BernoulliProduct => Check::BernoulliProduct {
            m: need(&args.m, "--m", id)?,
            n: need(&args.n, "--n", id)?,
        },
    })
}

fn verify(args: &VerifyArgs) -> CommandResult {
    let check = check_from_args(args)?;
    let report = check.run().map_err(|e| e.to_string())?;
    let text = match args.output.format.unwrap_or(Format::Json) {
        Format::Json => to_json(&report)?,
        Format::Csv => reports_csv(std::slice::from_ref(&report))?,
    };
    Ok((text, exit_code(std::slice::from_ref(&report))))
}

fn audit(args: &AuditArgs) -> CommandResult {
    let grid = match &args.grid {
        Some(path) => {
            let raw = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
            serde_json::from_str::<GridConfig>(&raw).map_err(|e| format!("{}: {e}", path.display()))?
        }
        None => default_grid(),
    };
    let audit = audit_all(&grid);
    let text = match args.output.format.unwrap_or(Format::Json) {
        Format::Json => to_json(&audit)?,
        Format::Csv => reports_csv(&audit.reports)?,
    };
    Ok((text, exit_code(&audit.reports)))
}

/// 0 if every report passed, 1 otherwise.
pub fn exit_code(reports: &[VerificationReport]) -> i32 {
    if reports.iter().all(VerificationReport::passed) {
        EXIT_OK
    } else {
        EXIT_FAIL
    }
}

/// One row per mismatch; a report without mismatches still gets one row.
fn reports_csv(reports: &[VerificationReport]) -> Result<String, String> {
    let mut records = vec![["identity", "variant", "params", "verdict", "at", "lhs", "rhs"]
        .map(String::from)
        .to_vec()];
    for report in reports {
        let params = report
            .params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(";");
        let base = vec![
            report.identity.to_string(),
            report.variant.to_string(),
            params,
            report.verdict.to_string(),
        ];
        if report.mismatches.is_empty() {
            let mut row = base.clone();
            row.extend([report.error.clone().unwrap_or_default(), String::new(), String::new()]);
            records.push(row);
        }
        for m in &report.mismatches {
            let mut row = base.clone();
            row.extend([m.at.clone(), m.lhs.clone(), m.rhs.clone()]);
            records.push(row);
        }
    }
    to_csv(&records)
}

fn to_json<T: Serialize>(value: &T) -> Result<String, String> {
    let mut text = serde_json::to_string_pretty(value).map_err(|e| e.to_string())?;
    text.push('\n');
    Ok(text)
}

fn to_csv(records: &[Vec<String>]) -> Result<String, String> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    for record in records {
        writer.write_record(record).map_err(|e| e.to_string())?;
    }
    let bytes = writer.into_inner().map_err(|e| e.to_string())?;
    String::from_utf8(bytes).map_err(|e| e.to_string())
}
