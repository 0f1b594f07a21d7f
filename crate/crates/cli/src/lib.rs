//! Command-line front end: `count`, `list`, `series` and `verify`.
//!
//! [`run`] does all the work against caller-supplied streams so it can be
//! driven in-process; the `fishburn` binary only forwards the exit code.

use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fishburn_core::enumerate::{count, list_members, AvoidanceQuery, OnePosition, Prefix};
use fishburn_core::verify::{
    run_suite, Suite, VerificationReport, VerifyConfig, DEFAULT_IDENTITY_MAX,
};
use fishburn_core::{fishburn_series, BigSeries, Error, PatternSet};
use num_bigint::BigInt;
use serde::Serialize;
use serde_json::json;

/// Largest degree accepted by `series`.
pub const SERIES_CAP: usize = 100;
/// `--max-n` for the combinatorial suites when none is given.
pub const DEFAULT_VERIFY_MAX_N: usize = 10;

pub mod exit {
    pub const OK: i32 = 0;
    pub const VERIFICATION_FAILED: i32 = 1;
    pub const USAGE: i32 = 2;
    pub const CAPACITY: i32 = 3;
}

#[derive(Debug, Parser)]
#[command(
    name = "fishburn",
    version,
    about = "Fishburn and classical pattern avoidance"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the size of an avoidance class.
    Count(ClassArgs),
    /// Print the members of an avoidance class in lexicographic order.
    List(ClassArgs),
    /// Print the Fishburn numbers c_0..c_N.
    Series(SeriesArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Delimited,
    Structured,
}

#[derive(Debug, Args)]
pub struct Output {
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Write results here instead of standard output.
    #[arg(long, value_name = "PATH")]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ClassArgs {
    /// Comma-separated classical patterns, e.g. `321,1423,2143`.
    #[arg(long, value_name = "PATTERNS", default_value = "")]
    pub avoid: String,
    /// Also avoid the Fishburn pattern.
    #[arg(long)]
    pub fishburn: bool,
    #[arg(short = 'n', value_name = "N")]
    pub n: usize,
    /// Keep only members with 1 at this position.
    #[arg(long, value_name = "1|2", value_parser = clap::value_parser!(u8).range(1..=2))]
    pub one_pos: Option<u8>,
    /// Keep only members starting with these entries, e.g. `"3 1 2"`.
    #[arg(long, value_name = "ENTRIES")]
    pub prefix: Option<String>,
    /// Require all but the last prefix entry, and reject the full prefix.
    #[arg(long, requires = "prefix")]
    pub prefix_exclude_last: bool,
    #[command(flatten)]
    pub out: Output,
}

#[derive(Debug, Args)]
pub struct SeriesArgs {
    #[arg(short = 'N', value_name = "N")]
    pub degree: usize,
    #[command(flatten)]
    pub out: Output,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// One of: table, decompositions, lemmas, wilf, lrmax, prefix, identities, all.
    pub suite: String,
    /// Largest n checked (default 10; 40 for `identities`).
    #[arg(long, value_name = "N")]
    pub max_n: Option<usize>,
    #[command(flatten)]
    pub out: Output,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Io(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(Error::Capacity { .. } | Error::Overflow(_)) => exit::CAPACITY,
            CliError::Core(Error::OracleDivergence { .. }) => exit::VERIFICATION_FAILED,
            CliError::Core(_) | CliError::Usage(_) | CliError::Io(_) => exit::USAGE,
        }
    }
}

/// Parses `args` (program name first), runs the command and returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                exit::USAGE
            } else {
                exit::OK
            };
            let rendered = e.render().to_string();
            let stream: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = stream.write_all(rendered.as_bytes());
            return code;
        }
    };
    match execute(&cli.command) {
        Ok((text, passed)) => {
            let out = match &cli.command {
                Command::Count(a) | Command::List(a) => &a.out,
                Command::Series(a) => &a.out,
                Command::Verify(a) => &a.out,
            };
            if let Err(e) = emit(out, &text, stdout) {
                let _ = writeln!(stderr, "error: {e}");
                return CliError::from(e).exit_code();
            }
            if passed {
                exit::OK
            } else {
                let _ = writeln!(stderr, "verification failed");
                exit::VERIFICATION_FAILED
            }
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

fn emit(out: &Output, text: &str, stdout: &mut dyn Write) -> io::Result<()> {
    match &out.output {
        Some(path) => File::create(path)?.write_all(text.as_bytes()),
        None => stdout.write_all(text.as_bytes()),
    }
}

/// Rendered output and whether every asserted check passed.
fn execute(command: &Command) -> Result<(String, bool), CliError> {
    match command {
        Command::Count(a) => Ok((cmd_count(a)?, true)),
        Command::List(a) => Ok((cmd_list(a)?, true)),
        Command::Series(a) => Ok((cmd_series(a)?, true)),
        Command::Verify(a) => cmd_verify(a),
    }
}

fn parse_prefix(text: &str) -> Result<Vec<u32>, CliError> {
    text.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<u32>().map_err(|_| {
                CliError::Core(Error::Parse {
                    token: t.to_string(),
                    reason: "prefix entries must be positive integers".into(),
                })
            })
        })
        .collect()
}

fn build_query(a: &ClassArgs) -> Result<AvoidanceQuery, CliError> {
    let patterns = PatternSet::parse(&a.avoid, a.fishburn)?;
    let mut q = AvoidanceQuery::new(a.n, patterns);
    if let Some(i) = a.one_pos {
        q = q.with_one_position(OnePosition::from_index(usize::from(i))?);
    }
    if let Some(text) = &a.prefix {
        let values = parse_prefix(text)?;
        q = q.with_prefix(if a.prefix_exclude_last {
            Prefix::excluding_last(values)
        } else {
            Prefix::exact(values)
        });
    }
    q.validate()?;
    Ok(q)
}

#[derive(Serialize)]
struct QueryDoc<'a> {
    avoid: String,
    fishburn: bool,
    n: usize,
    one_position: Option<u8>,
    prefix: Option<&'a str>,
    prefix_exclude_last: bool,
}

fn query_doc(a: &ClassArgs, q: &AvoidanceQuery) -> serde_json::Value {
    serde_json::to_value(QueryDoc {
        avoid: q.patterns.to_string(),
        fishburn: a.fishburn,
        n: a.n,
        one_position: a.one_pos,
        prefix: a.prefix.as_deref(),
        prefix_exclude_last: a.prefix_exclude_last,
    })
    .expect("query serializes")
}

fn to_json_line(value: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("value serializes");
    s.push('\n');
    s
}

fn cmd_count(a: &ClassArgs) -> Result<String, CliError> {
    let q = build_query(a)?;
    let total = count(&q)?;
    Ok(match a.out.format.unwrap_or(Format::Plain) {
        Format::Plain => format!("{total}\n"),
        Format::Delimited => format!("{}\t{}\t{}\n", q.patterns, a.n, total),
        Format::Structured => to_json_line(&json!({ "query": query_doc(a, &q), "count": total })),
    })
}

fn cmd_list(a: &ClassArgs) -> Result<String, CliError> {
    let q = build_query(a)?;
    let members = list_members(&q)?;
    Ok(match a.out.format.unwrap_or(Format::Plain) {
        Format::Plain => members.iter().map(|p| format!("{p}\n")).collect(),
        Format::Delimited => members
            .iter()
            .map(|p| {
                let cells: Vec<String> = p.as_slice().iter().map(u32::to_string).collect();
                format!("{}\n", cells.join("\t"))
            })
            .collect(),
        Format::Structured => to_json_line(&json!({
            "query": query_doc(a, &q),
            "count": members.len(),
            "members": members,
        })),
    })
}

fn cmd_series(a: &SeriesArgs) -> Result<String, CliError> {
    if a.degree > SERIES_CAP {
        return Err(Error::Capacity {
            what: "series",
            n: a.degree,
            cap: SERIES_CAP,
        }
        .into());
    }
    let series: BigSeries = fishburn_series::<BigInt>(a.degree)?;
    let coefficients = series.coefficients();
    Ok(match a.out.format.unwrap_or(Format::Plain) {
        Format::Plain => coefficients
            .iter()
            .enumerate()
            .map(|(n, c)| format!("{n} {c}\n"))
            .collect(),
        Format::Delimited => coefficients
            .iter()
            .enumerate()
            .map(|(n, c)| format!("{n}\t{c}\n"))
            .collect(),
        // Decimal strings: coefficients outgrow every JSON number type.
        Format::Structured => to_json_line(&json!({
            "degree": a.degree,
            "coefficients": coefficients.iter().map(BigInt::to_string).collect::<Vec<_>>(),
        })),
    })
}

fn cmd_verify(a: &VerifyArgs) -> Result<(String, bool), CliError> {
    let suite: Suite = a.suite.parse()?;
    let (max_n, identity_max) = match (suite, a.max_n) {
        (Suite::Identities, Some(n)) => (DEFAULT_VERIFY_MAX_N, to_u32(n)?),
        (_, Some(n)) => (n, DEFAULT_IDENTITY_MAX),
        (_, None) => (DEFAULT_VERIFY_MAX_N, DEFAULT_IDENTITY_MAX),
    };
    let reports = run_suite(suite, max_n, identity_max, &VerifyConfig::default())?;
    let passed = reports.iter().all(|r| r.pass);
    let text = match a.out.format.unwrap_or(Format::Delimited) {
        Format::Delimited => reports
            .iter()
            .map(VerificationReport::to_delimited)
            .collect(),
        Format::Plain => render_plain(&reports),
        Format::Structured => to_json_line(&json!({
            "suite": suite.name(),
            "max_n": if suite == Suite::Identities { identity_max as usize } else { max_n },
            "pass": passed,
            "reports": reports,
        })),
    };
    Ok((text, passed))
}

fn to_u32(n: usize) -> Result<u32, CliError> {
    u32::try_from(n).map_err(|_| CliError::Usage(format!("--max-n {n} is out of range")))
}

fn render_plain(reports: &[VerificationReport]) -> String {
    use fishburn_core::verify::Status;
    let mut s = String::new();
    for r in reports {
        let asserted = r
            .records
            .iter()
            .filter(|x| x.status != Status::OutOfStatedRange);
        let checked = asserted.clone().count();
        let verdict = if r.pass { "PASS" } else { "FAIL" };
        s.push_str(&format!("{verdict}  {}  ({checked} checks)\n", r.id));
        for bad in asserted.filter(|x| x.status == Status::Mismatch) {
            let formula = bad.formula.map_or_else(|| "-".into(), |f| f.to_string());
            s.push_str(&format!(
                "      n = {}: counted {}, expected {}\n",
                bad.n, bad.brute, formula
            ));
        }
    }
    let failed = reports.iter().filter(|r| !r.pass).count();
    s.push_str(&format!("{} reports, {} failed\n", reports.len(), failed));
    s
}
