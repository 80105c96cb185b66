//! The `gfcd` command line: `generate`, `check`, `sweep` and `verify`.
//!
//! Exit status is 0 on success, 1 when a property or claim fails, and 2 for
//! usage errors (bad flags, caps exceeded, unparsable input).

use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::analysis::{report, Property};
use crate::cardinality::{census, extremality_report, write_census_csv};
use crate::error::Error;
use crate::necklace::gf_necklace;
use crate::never::{domain_of_scheme, fishburn_k, gf_scheme, KSubset};
use crate::order::{Domain, LinearOrder, DEFAULT_MAX_N};
use crate::verify::{gf_suite, thm7_suite, Check};

#[derive(Debug, Parser)]
#[command(
    name = "gfcd",
    version,
    about = "Generalised Fishburn Condorcet domains"
)]
pub struct Cli {
    /// Worker threads (0 = one per core).
    #[arg(long, global = true, default_value_t = 0)]
    pub parallelism: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build F_K from a never-condition scheme, a necklace, or both.
    Generate {
        #[arg(long)]
        n: usize,
        /// Comma-separated members of K ⊆ [2, n−1]; "" is the empty set.
        /// Defaults to Fishburn's even K.
        #[arg(long, allow_hyphen_values = true)]
        k: Option<String>,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Report properties of a domain read from stdin or --in.
    Check {
        #[arg(long = "in")]
        input: Option<PathBuf>,
        /// Comma-separated subset of: condorcet, copious, maximal,
        /// maximal_width, semi_connected, directly_connected, spoc.
        #[arg(long, value_delimiter = ',')]
        properties: Vec<String>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Census of |F_K| over every K at one n, as CSV.
    Sweep {
        #[arg(long)]
        n: usize,
        /// Skip property flags (allows n up to 8).
        #[arg(long)]
        size_only: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Certify the GF-domain claims at n (or the single-crossing claim with --thm7).
    Verify {
        #[arg(long, default_value_t = 5)]
        n: usize,
        #[arg(long)]
        thm7: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Scheme,
    Necklace,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
    Csv,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Domain(#[from] Error),
    #[error("{0}")]
    Io(#[from] std::io::Error),
    /// A construction or claim did not hold.
    #[error("{0}")]
    Failed(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Failed(_) => 1,
            _ => 2,
        }
    }
}

/// What a successful run produced.
#[derive(Debug, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    /// False when some checked property or claim did not hold.
    pub passed: bool,
}

/// Parses a domain: JSON `{"n":..,"orders":[..]}`, or one order per line
/// (blank lines and `#` comments skipped).
pub fn parse_domain(text: &str) -> Result<Domain, Error> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('{') {
        return serde_json::from_str(trimmed).map_err(|e| Error::ParseLine {
            line: e.line(),
            message: e.to_string(),
        });
    }
    let mut orders: Vec<LinearOrder> = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let v: LinearOrder = line.parse().map_err(|e: Error| Error::ParseLine {
            line: i + 1,
            message: e.to_string(),
        })?;
        if let Some(first) = orders.first() {
            if first.n() != v.n() {
                return Err(Error::ParseLine {
                    line: i + 1,
                    message: format!("order on {} alternatives, expected {}", v.n(), first.n()),
                });
            }
        }
        orders.push(v);
    }
    let n = orders
        .first()
        .map(LinearOrder::n)
        .ok_or_else(|| Error::Parse("no orders in input".into()))?;
    Domain::new(n, orders)
}

fn render_domain(d: &Domain, format: Format) -> Result<String, CliError> {
    match format {
        Format::Json => Ok(serde_json::to_string(d).unwrap() + "\n"),
        Format::Text => Ok(d.iter().map(|v| format!("{v}\n")).collect()),
        Format::Csv => Err(CliError::Usage(
            "domains are emitted as json or text".into(),
        )),
    }
}

fn generate(
    n: usize,
    k: Option<&str>,
    method: Method,
    format: Format,
) -> Result<Outcome, CliError> {
    if n > DEFAULT_MAX_N {
        return Err(Error::CapExceeded {
            n,
            cap: DEFAULT_MAX_N,
        }
        .into());
    }
    let k = match k {
        Some(s) => KSubset::parse(n, s)?,
        None => fishburn_k(n),
    };
    let by_scheme = || -> Result<Domain, Error> { domain_of_scheme(&gf_scheme(n, &k)?) };
    let by_necklace = || -> Result<Domain, Error> { Ok(gf_necklace(n, &k)?.flags_to_domain()) };
    let d = match method {
        Method::Scheme => by_scheme()?,
        Method::Necklace => by_necklace()?,
        Method::Both => {
            let (s, c) = (by_scheme()?, by_necklace()?);
            if s != c {
                return Err(CliError::Failed(format!(
                    "constructions disagree for n={n} K={k}: scheme {} orders, necklace {}",
                    s.len(),
                    c.len()
                )));
            }
            s
        }
    };
    Ok(Outcome {
        output: render_domain(&d, format)?,
        passed: true,
    })
}

fn check(text: &str, properties: &[String], format: Format) -> Result<Outcome, CliError> {
    let d = parse_domain(text)?;
    let props: Vec<Property> = if properties.is_empty() {
        Property::ALL.to_vec()
    } else {
        properties
            .iter()
            .map(|p| p.parse())
            .collect::<Result<_, Error>>()?
    };
    let r = report(&d, &props)?;
    let output = match format {
        Format::Json => serde_json::to_string(&r).unwrap() + "\n",
        Format::Text => r.to_string(),
        Format::Csv => return Err(CliError::Usage("check emits json or text".into())),
    };
    Ok(Outcome {
        output,
        passed: r.all_hold(),
    })
}

fn sweep(n: usize, size_only: bool) -> Result<Outcome, CliError> {
    let rows = census(n, !size_only)?;
    let summary = extremality_report(&rows)?;
    let mut buf = Vec::new();
    write_census_csv(&mut buf, &rows, Some(&summary))?;
    Ok(Outcome {
        output: String::from_utf8(buf).expect("csv is utf-8"),
        passed: true,
    })
}

#[derive(Serialize)]
struct VerifyJson<'a> {
    passed: bool,
    checks: &'a [Check],
}

fn verify(n: usize, thm7: bool, format: Format) -> Result<Outcome, CliError> {
    let checks = if thm7 { thm7_suite(n)? } else { gf_suite(n)? };
    let passed = checks.iter().all(|c| c.passed);
    let output = match format {
        Format::Text => {
            let mut s: String = checks.iter().map(|c| format!("{c}\n")).collect();
            s.push_str(if passed {
                "all checks passed\n"
            } else {
                "FAILED\n"
            });
            s
        }
        Format::Json => {
            serde_json::to_string(&VerifyJson {
                passed,
                checks: &checks,
            })
            .unwrap()
                + "\n"
        }
        Format::Csv => return Err(CliError::Usage("verify emits text or json".into())),
    };
    Ok(Outcome { output, passed })
}

/// Runs one parsed command; `stdin` is read only by `check` without `--in`.
pub fn execute<R: Read>(cli: &Cli, mut stdin: R) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Generate {
            n,
            k,
            method,
            format,
            ..
        } => generate(*n, k.as_deref(), *method, *format),
        Command::Check {
            input,
            properties,
            format,
            ..
        } => {
            let text = match input {
                Some(path) => fs::read_to_string(path)?,
                None => {
                    let mut s = String::new();
                    stdin.read_to_string(&mut s)?;
                    s
                }
            };
            check(&text, properties, *format)
        }
        Command::Sweep { n, size_only, .. } => sweep(*n, *size_only),
        Command::Verify {
            n, thm7, format, ..
        } => verify(*n, *thm7, *format),
    }
}

fn out_path(cli: &Cli) -> Option<&PathBuf> {
    match &cli.command {
        Command::Generate { out, .. }
        | Command::Check { out, .. }
        | Command::Sweep { out, .. }
        | Command::Verify { out, .. } => out.as_ref(),
    }
}

/// Full program: parse `args`, run on a pool of `--parallelism` workers,
/// write the output, and return the exit status.
pub fn run<I, R, W, E>(args: I, stdin: R, stdout: &mut W, stderr: &mut E) -> i32
where
    I: IntoIterator,
    I::Item: Into<std::ffi::OsString> + Clone,
    R: Read + Send,
    W: Write,
    E: Write,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = write!(
                if code == 0 {
                    stdout as &mut dyn Write
                } else {
                    stderr
                },
                "{e}"
            );
            return code;
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(cli.parallelism)
        .build()
    {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return 2;
        }
    };
    let result = pool.install(|| execute(&cli, stdin));
    let outcome = match result {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return e.exit_code();
        }
    };
    let written = match out_path(&cli) {
        Some(path) => fs::write(path, &outcome.output),
        None => stdout.write_all(outcome.output.as_bytes()),
    };
    if let Err(e) = written {
        let _ = writeln!(stderr, "error: {e}");
        return 2;
    }
    if outcome.passed {
        0
    } else {
        1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_domain_forms() {
        let d = parse_domain("1234\n4321\n\n# comment\n").unwrap();
        assert_eq!(d, Domain::from_strs(4, &["1234", "4321"]));
        let d = parse_domain(r#"{"n":3,"orders":["123","321"]}"#).unwrap();
        assert_eq!(d.len(), 2);
        let d = parse_domain("1,2,3\n3,2,1").unwrap();
        assert_eq!(d.len(), 2);
        assert!(matches!(
            parse_domain("123\n12x\n"),
            Err(Error::ParseLine { line: 2, .. })
        ));
        assert!(matches!(
            parse_domain("123\n\n1234\n"),
            Err(Error::ParseLine { line: 3, .. })
        ));
        assert!(parse_domain("\n# nothing\n").is_err());
    }

    #[test]
    fn exit_codes() {
        assert_eq!(CliError::Failed("x".into()).exit_code(), 1);
        assert_eq!(CliError::Usage("x".into()).exit_code(), 2);
        assert_eq!(
            CliError::Domain(Error::CapExceeded { n: 99, cap: 8 }).exit_code(),
            2
        );
    }
}
