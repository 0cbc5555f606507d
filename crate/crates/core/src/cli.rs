//! The `trigpos` command line: argument parsing, grid construction, the
//! worker pool and report serialization.
//!
//! Exit status is 0 when no report failed (budget skips included), 1 when at
//! least one report failed, and 2 for usage, configuration, precondition or
//! I/O errors.

use std::fmt::Write as _;
use std::io::Write as _;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use crate::biwords::CountBudget;
use crate::error::{Error, Result};
use crate::exact::{parse_rat, Rat};
use crate::sums::{MultiParams, Params};
use crate::verify::{self, Report, ScanModes, Status};

#[derive(Parser, Debug)]
#[command(name = "trigpos", version, about = "Exact checks for positive trigonometric sums")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    /// Write reports to this file instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Worker threads for grid runs.
    #[arg(long, env = "TRIGPOS_WORKERS", default_value_t = 1,
          value_parser = clap::value_parser!(u32).range(1..), global = true)]
    workers: u32,

    /// Keep measured runtimes (otherwise runtime_ms is written as 0 so
    /// output is byte-reproducible).
    #[arg(long, global = true)]
    timing: bool,

    /// Longest bi-word the counting oracles will enumerate.
    #[arg(long, default_value_t = CountBudget::default().max_len,
          value_parser = clap::value_parser!(u32).range(1..), global = true)]
    max_len: u32,

    /// Largest number of objects the counting oracles will visit.
    #[arg(long, default_value_t = CountBudget::default().max_items,
          value_parser = clap::value_parser!(u64).range(1..), global = true)]
    max_items: u64,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run one checker over a parameter grid.
    Verify {
        #[command(subcommand)]
        check: Check,
    },
    /// Scan product series for nonnegativity violations.
    Scan {
        #[command(subcommand)]
        target: ScanTarget,
    },
}

#[derive(Subcommand, Debug)]
enum Check {
    /// Single binomial series in powers of 1 + cos x.
    #[command(alias = "iks")]
    Single(Grid),
    /// Squared series against the B_p class counts.
    #[command(alias = "thm23")]
    Squared(Grid),
    /// Mixed series against the same-content class counts.
    #[command(alias = "thm24")]
    Mixed(Grid),
    /// The three k = 1 factorial closed forms.
    ClosedForms {
        #[arg(long, default_value_t = 10)]
        m_max: u32,
    },
    /// Vanishing and diagonal identities of the Chebyshev weight sums.
    Weights {
        #[arg(long, default_value_t = 10)]
        l_max: u64,
        /// Defaults to --l-max.
        #[arg(long)]
        p_max: Option<u64>,
    },
    /// Jacobi and shifted Jacobi weight families.
    Jacobi {
        /// `alpha,beta` points (repeatable); defaults to a built-in grid.
        #[arg(long = "ab", value_parser = parse_ab)]
        ab: Vec<(Rat, Rat)>,
        #[arg(long, default_value_t = 8)]
        l_max: u64,
        #[command(flatten)]
        series: SeriesGrid,
    },
    /// Sine and derivative expansions.
    Sine(Grid),
    /// Product series against iterated Hadamard products.
    Convolution(PairsArgs),
    /// Alternating sums against path and bi-word counts, and the involution.
    #[command(alias = "paths")]
    Involution(Grid),
    /// Segment-exchange surjection onto good guys.
    Surjection(Grid),
}

#[derive(Subcommand, Debug)]
enum ScanTarget {
    /// All products over a grid of factor counts, pairs and k.
    Conjecture {
        /// Number of factors, `a..b` or a single value.
        #[arg(long, default_value = "1..3")]
        r: Span,
        /// Upper bound for every M_i and N_i.
        #[arg(long, default_value_t = 4)]
        max_mn: u32,
        #[arg(long, default_value = "1..3")]
        k: Span,
        /// Expansions to inspect.
        #[arg(long, value_delimiter = ',', default_value = "cos,sine")]
        modes: Vec<Mode>,
    },
}

#[derive(Args, Debug)]
struct Grid {
    /// `a..b` (inclusive) or a single value.
    #[arg(long = "M")]
    m: Span,
    #[arg(long = "N")]
    n: Span,
    #[arg(long)]
    k: Span,
}

#[derive(Args, Debug)]
struct SeriesGrid {
    /// Series used for the positivity checks.
    #[arg(long = "M", default_value = "0..4")]
    m: Span,
    #[arg(long = "N", default_value = "0..4")]
    n: Span,
    #[arg(long, default_value = "1..2")]
    k: Span,
}

#[derive(Args, Debug)]
struct PairsArgs {
    /// `M,N` pairs separated by `;`, e.g. `1,1;2,1`.
    #[arg(long, value_parser = parse_pairs)]
    pairs: Vec<(u32, u32)>,
    #[arg(long)]
    k: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Mode {
    Cos,
    Sine,
}

/// An inclusive integer range written `a..b`, `a..=b` or `a`.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Span(RangeInclusive<u32>);

impl FromStr for Span {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let num = |t: &str| t.trim().parse::<u32>().map_err(|e| format!("{t:?}: {e}"));
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
            None => {
                let v = num(s)?;
                (v, v)
            }
        };
        if lo > hi {
            return Err(format!("empty range {s}"));
        }
        Ok(Span(lo..=hi))
    }
}

impl Span {
    fn values(&self) -> Vec<u32> {
        self.0.clone().collect()
    }

    fn is_single(&self) -> bool {
        self.0.start() == self.0.end()
    }
}

fn parse_ab(s: &str) -> std::result::Result<(Rat, Rat), String> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("expected alpha,beta in {s:?}"))?;
    let a = parse_rat(a.trim()).map_err(|e| e.to_string())?;
    let b = parse_rat(b.trim()).map_err(|e| e.to_string())?;
    Ok((a, b))
}

fn parse_pairs(s: &str) -> std::result::Result<(u32, u32), String> {
    let (m, n) = s.split_once(',').ok_or_else(|| format!("expected M,N in {s:?}"))?;
    let num = |t: &str| t.trim().parse::<u32>().map_err(|e| format!("{t:?}: {e}"));
    Ok((num(m)?, num(n)?))
}

/// Parameter points in `(M, N, k)` lexicographic order. With `gap` set,
/// points violating `|M - N| <= k` are dropped from ranges; a single point
/// that violates it is a precondition error.
fn points(grid: &Grid, gap: bool) -> Result<Vec<Params>> {
    let mut out = Vec::new();
    for m in grid.m.values() {
        for n in grid.n.values() {
            for k in grid.k.values() {
                let p = Params::new(m, n, k)?;
                if gap && !p.gap_ok() {
                    continue;
                }
                out.push(p);
            }
        }
    }
    let single = grid.m.is_single() && grid.n.is_single() && grid.k.is_single();
    if out.is_empty() && single && gap {
        return Err(Error::Precondition(format!(
            "|M - N| <= k fails for M={} N={} k={}",
            grid.m.0.start(),
            grid.n.0.start(),
            grid.k.0.start()
        )));
    }
    Ok(out)
}

fn series_points(s: &SeriesGrid) -> Result<Vec<Params>> {
    points(&Grid { m: s.m.clone(), n: s.n.clone(), k: s.k.clone() }, false)
}

fn each<F>(ps: &[Params], f: F) -> Result<Vec<Report>>
where
    F: Fn(&Params) -> Result<Report> + Sync + Send,
{
    ps.par_iter().map(f).collect()
}

fn run(cli: &Cli) -> Result<Vec<Report>> {
    let budget = CountBudget::new(cli.max_len, cli.max_items)?;
    let budget = &budget;
    match &cli.command {
        Command::Verify { check } => match check {
            Check::Single(g) => each(&points(g, true)?, verify::verify_single),
            Check::Squared(g) => each(&points(g, true)?, |p| verify::verify_squared(p, budget)),
            Check::Mixed(g) => each(&points(g, false)?, |p| verify::verify_mixed(p, budget)),
            Check::ClosedForms { m_max } => Ok(vec![verify::verify_closed_forms(*m_max)]),
            Check::Weights { l_max, p_max } => {
                Ok(vec![verify::verify_weight_identities(*l_max, p_max.unwrap_or(*l_max))?])
            }
            Check::Jacobi { ab, l_max, series } => {
                let grid = if ab.is_empty() { verify::default_jacobi_grid() } else { ab.clone() };
                verify::verify_jacobi(&grid, *l_max, &series_points(series)?)
            }
            Check::Sine(g) => each(&points(g, false)?, |p| Ok(verify::verify_sine(p))),
            Check::Convolution(a) => {
                let mp = MultiParams::new(a.pairs.clone(), a.k)?;
                Ok(vec![verify::verify_convolution(&mp)])
            }
            Check::Involution(g) => each(&points(g, false)?, |p| verify::verify_involution_and_paths(p, budget)),
            Check::Surjection(g) => each(&points(g, true)?, |p| verify::verify_surjection(p, budget)),
        },
        Command::Scan { target: ScanTarget::Conjecture { r, max_mn, k, modes } } => {
            let grid = verify::conjecture_grid(&r.values(), *max_mn, &k.values());
            let modes = ScanModes { cos: modes.contains(&Mode::Cos), sine: modes.contains(&Mode::Sine) };
            verify::scan_conjecture(&grid, modes)
        }
    }
}

/// Serializes reports: JSON is one compact array followed by a newline; CSV
/// has one row per computed value (and per witness) under a fixed header.
pub fn emit_reports(reports: &[Report], csv: bool) -> Vec<u8> {
    if !csv {
        let mut out = serde_json::to_vec(reports).expect("reports serialize");
        out.push(b'\n');
        return out;
    }
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
    w.write_record(["check_id", "params", "status", "series", "index", "value"]).expect("in-memory write");
    for r in reports {
        let params = r.params.to_string();
        let status = serde_json::to_value(r.status).expect("status serializes");
        let status = status.as_str().unwrap_or_default();
        let mut row = |series: &str, index: &str, value: &str| {
            w.write_record([r.check_id.as_str(), &params, status, series, index, value]).expect("in-memory write");
        };
        if r.computed.is_empty() && r.witnesses.is_empty() {
            row("", "", "");
        }
        for (key, values) in &r.computed {
            for (i, v) in values.iter().enumerate() {
                row(key, &i.to_string(), v);
            }
        }
        for (i, wit) in r.witnesses.iter().enumerate() {
            row("witness", &i.to_string(), wit);
        }
    }
    w.into_inner().expect("in-memory flush")
}

/// 1 if any report failed, otherwise 0.
pub fn exit_code(reports: &[Report]) -> i32 {
    if reports.iter().any(|r| r.status == Status::Fail) {
        1
    } else {
        0
    }
}

/// Result of one invocation: exit status and the bytes destined for
/// standard output and standard error.
#[derive(Debug, Default)]
pub struct Outcome {
    pub code: i32,
    pub stdout: Vec<u8>,
    pub stderr: String,
}

fn usage_error(message: String) -> Outcome {
    Outcome { code: 2, stdout: Vec::new(), stderr: message }
}

/// Runs one command line (including the program name) without touching the
/// process's own streams.
pub fn execute<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                usage_error(text)
            } else {
                Outcome { code: 0, stdout: text.into_bytes(), stderr: String::new() }
            };
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.workers as usize).build() {
        Ok(pool) => pool,
        Err(e) => return usage_error(format!("error: cannot start workers: {e}\n")),
    };
    let mut reports = match pool.install(|| run(&cli)) {
        Ok(r) => r,
        Err(e) => return usage_error(format!("error: {e}\n")),
    };
    if !cli.timing {
        for r in &mut reports {
            r.runtime_ms = 0;
        }
    }
    let code = exit_code(&reports);
    let bytes = emit_reports(&reports, cli.format == Format::Csv);
    let mut stderr = String::new();
    let fails = reports.iter().filter(|r| r.status == Status::Fail).count();
    let skips = reports.iter().filter(|r| r.status == Status::Skipped).count();
    if fails + skips > 0 {
        let _ = writeln!(stderr, "{} reports: {fails} failed, {skips} skipped", reports.len());
    }
    match &cli.output {
        Some(path) => match std::fs::write(path, &bytes) {
            Ok(()) => Outcome { code, stdout: Vec::new(), stderr },
            Err(e) => usage_error(format!("error: writing {}: {e}\n", path.display())),
        },
        None => Outcome { code, stdout: bytes, stderr },
    }
}

/// Entry point for the binary: runs [`execute`] on the process arguments.
pub fn main() -> i32 {
    let out = execute(std::env::args_os());
    if std::io::stdout().write_all(&out.stdout).and_then(|()| std::io::stdout().flush()).is_err() {
        eprintln!("error: cannot write to standard output");
        return 2;
    }
    eprint!("{}", out.stderr);
    out.code
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &str) -> Outcome {
        execute(std::iter::once("trigpos").chain(args.split_whitespace()))
    }

    #[test]
    fn spans() {
        assert_eq!("1..3".parse::<Span>().unwrap().values(), vec![1, 2, 3]);
        assert_eq!("1..=2".parse::<Span>().unwrap().values(), vec![1, 2]);
        assert_eq!("4".parse::<Span>().unwrap().values(), vec![4]);
        assert!("3..1".parse::<Span>().is_err());
        assert!("x".parse::<Span>().is_err());
    }

    #[test]
    fn squared_json() {
        let out = run_str("verify thm23 --M 1 --N 1 --k 1 --format json");
        assert_eq!(out.code, 0, "{}", out.stderr);
        let text = String::from_utf8(out.stdout).unwrap();
        assert!(text.contains(r#""status":"pass""#));
        assert!(text.contains(r#""b":["2","2"]"#));
        assert!(text.ends_with("]\n"));
    }

    #[test]
    fn gap_violation_is_usage_error() {
        assert_eq!(run_str("verify thm23 --M 5 --N 1 --k 1").code, 2);
        assert_eq!(run_str("verify thm23 --M 1 --N 1 --k 0").code, 2);
        assert_eq!(run_str("verify bogus").code, 2);
        assert_eq!(run_str("verify thm23 --M 1 --N 1 --k 1 --workers 0").code, 2);
    }

    #[test]
    fn csv_layout() {
        assert_eq!(emit_reports(&[], true), b"check_id,params,status,series,index,value\n");
        assert_eq!(emit_reports(&[], false), b"[]\n");
        let out = run_str("verify single --M 1 --N 1 --k 1 --format csv");
        let text = String::from_utf8(out.stdout).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 3);
        assert_eq!(lines[2], r#"single_expansion,"{""M"":1,""N"":1,""k"":1}",pass,a,1,2"#);
    }

    #[test]
    fn injected_failure() {
        let mut r = verify::verify_closed_forms(1);
        r.status = Status::Fail;
        r.witnesses.push("synthetic".into());
        assert_eq!(exit_code(&[r.clone()]), 1);
        let text = String::from_utf8(emit_reports(&[r], false)).unwrap();
        assert!(text.contains(r#""witnesses":["synthetic"]"#));
    }
}
