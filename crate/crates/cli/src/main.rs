//! `fdp` — first-digit probability tables on stdout.
//!
//! Subcommands cover the closed-form distributions (`analytic`), the six
//! built-in sampled scenarios (`scenario`), integer sequences (`sequence`),
//! user-defined sampling grids (`empirical`), and convergence probes
//! (`limits`). Exit codes: 0 success, 2 usage or parameter error, 1 internal
//! failure.

mod table;

use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fdp_core::analytic::{analytic_distribution, power_p1};
use fdp_core::report::{comparison_table, format_fixed, format_value};
use fdp_core::scenarios::run_scenario;
use fdp_core::sequences::{
    factorial_leading_digits, fibonacci_leading_digits, fibonacci_ratio, sieve_primes,
    stirling_ratio,
};
use fdp_core::{
    DecadeScale, Digit, DigitCounts, DigitDistribution, Error, FactorialMethod, FunctionFamily,
    RangeFilter, SampleSpec, ScenarioId,
};
use table::{OutputFormat, Table};

const PRIMES_LIMIT_CAP: u64 = 100_000_000;
const TERMS_CAP: u32 = 10_000;

#[derive(Parser)]
#[command(
    name = "fdp",
    version,
    about = "First-digit probability tables for analytic functions, sampled data, and integer sequences"
)]
struct Cli {
    /// Output layout for tables.
    #[arg(long, value_enum, global = true, default_value_t = OutputFormat::Csv)]
    format: OutputFormat,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Closed-form digit probabilities of a function family.
    Analytic {
        #[command(flatten)]
        family: FamilyArgs,
        /// Decade n: digits are read on [10^(n-1), 10^n).
        #[arg(long, default_value_t = 1)]
        decade: u32,
    },
    /// Reproduce a built-in sampled scenario.
    Scenario {
        /// bacterial | freefall | pool | height | population | scuba
        name: String,
        /// Emit every sampled point (excluded rows keep a "-" digit).
        #[arg(long, conflicts_with = "summary")]
        rows: bool,
        /// Emit the digit-count comparison table (the default).
        #[arg(long)]
        summary: bool,
    },
    /// Leading-digit frequencies of an integer sequence.
    Sequence {
        /// primes | fibonacci | factorial
        kind: SequenceArg,
        /// Upper bound for primes (counts primes below it; max 100000000).
        #[arg(long)]
        limit: Option<u64>,
        /// Number of terms for fibonacci/factorial (max 10000).
        #[arg(long)]
        count: Option<u32>,
        /// Digit extraction method for factorial.
        #[arg(long, value_enum)]
        method: Option<MethodArg>,
    },
    /// Sample a family over a grid and compare against its closed form.
    Empirical {
        #[command(flatten)]
        family: FamilyArgs,
        /// First grid point.
        #[arg(long)]
        start: f64,
        /// Grid spacing (positive).
        #[arg(long)]
        step: f64,
        /// Number of grid points.
        #[arg(long)]
        count: u32,
        /// Keep only samples with y >= lo (default 1).
        #[arg(long, requires = "hi")]
        lo: Option<f64>,
        /// Keep only samples with y < hi (or <= with --inclusive-hi).
        #[arg(long, requires = "lo")]
        hi: Option<f64>,
        /// Include samples landing exactly on hi.
        #[arg(long, requires = "hi")]
        inclusive_hi: bool,
        /// Decade n: digits are read on [10^(n-1), 10^n).
        #[arg(long, default_value_t = 1)]
        decade: u32,
    },
    /// Evaluate a convergence probe and its gap to the limit constant.
    Limits {
        /// power-p1 | fib-ratio | stirling
        probe: String,
        /// Exponent for power-p1 (default 1000000).
        #[arg(long)]
        a: Option<f64>,
        /// Term index for fib-ratio (default 500).
        #[arg(long)]
        n: Option<u32>,
        /// Argument for stirling (default 2000).
        #[arg(long)]
        x: Option<u64>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyName {
    Exponential,
    Power,
    Linear,
    Root,
    #[value(name = "log", alias = "logarithmic")]
    Log,
    Reciprocal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SequenceArg {
    Primes,
    Fibonacci,
    Factorial,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Exact,
    Logsum,
}

/// Family selector plus every shape parameter; unused parameters are
/// ignored, missing ones take the documented defaults.
#[derive(Args)]
struct FamilyArgs {
    /// exponential | power | linear | root | log | reciprocal
    #[arg(long, value_enum)]
    family: FamilyName,
    /// Exponent a of scale*x^a (power; default 2).
    #[arg(long)]
    exponent: Option<f64>,
    /// Root index a of scale*x^(1/a) (root; default 2).
    #[arg(long)]
    index: Option<f64>,
    /// Base of exponential/log families; accepts "e" (defaults e, 2).
    #[arg(long, value_parser = parse_base)]
    base: Option<f64>,
    /// Vertical scale h (exponential, power, root; default 1).
    #[arg(long)]
    scale: Option<f64>,
    /// Rate m of scale*base^(m*x) (exponential; default 1).
    #[arg(long)]
    rate: Option<f64>,
    /// Slope m of m*x (linear; default 1).
    #[arg(long)]
    slope: Option<f64>,
    /// Stretch h of log_base(x/shift)/h (log; default 1).
    #[arg(long)]
    stretch: Option<f64>,
    /// Inner shift m of log_base(x/m)/stretch (log; default 1).
    #[arg(long)]
    shift: Option<f64>,
    /// Numerator a of a/(x - hshift) (reciprocal; default 1).
    #[arg(long)]
    numerator: Option<f64>,
    /// Horizontal shift of the reciprocal family (default 0).
    #[arg(long)]
    hshift: Option<f64>,
}

fn parse_base(s: &str) -> Result<f64, String> {
    if s == "e" {
        return Ok(std::f64::consts::E);
    }
    s.parse::<f64>().map_err(|e| format!("{e} (or pass \"e\")"))
}

impl FamilyArgs {
    fn build(&self) -> Result<FunctionFamily, CliError> {
        let family = match self.family {
            FamilyName::Exponential => FunctionFamily::Exponential {
                base: self.base.unwrap_or(std::f64::consts::E),
                scale: self.scale.unwrap_or(1.0),
                rate: self.rate.unwrap_or(1.0),
            },
            FamilyName::Power => FunctionFamily::Power {
                exponent: self.exponent.unwrap_or(2.0),
                scale: self.scale.unwrap_or(1.0),
            },
            FamilyName::Linear => FunctionFamily::Linear {
                slope: self.slope.unwrap_or(1.0),
            },
            FamilyName::Root => FunctionFamily::Root {
                index: self.index.unwrap_or(2.0),
                scale: self.scale.unwrap_or(1.0),
            },
            FamilyName::Log => FunctionFamily::Logarithmic {
                base: self.base.unwrap_or(2.0),
                stretch: self.stretch.unwrap_or(1.0),
                shift: self.shift.unwrap_or(1.0),
            },
            FamilyName::Reciprocal => FunctionFamily::Reciprocal {
                numerator: self.numerator.unwrap_or(1.0),
                hshift: self.hshift.unwrap_or(0.0),
            },
        };
        family.validate()?;
        Ok(family)
    }
}

/// Failures after argument parsing, split by exit code.
enum CliError {
    /// Bad parameters or names: exit 2.
    Usage(String),
    /// Engine-level failure that no input should trigger: exit 1.
    Internal(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> CliError {
        match e {
            Error::InvalidDigit(_)
            | Error::ValueOutOfRange(_)
            | Error::InvalidDecade(_)
            | Error::EmptySample
            | Error::InvalidParameter(_)
            | Error::NonFiniteSample { .. } => CliError::Usage(e.to_string()),
            Error::InvalidDistribution(_)
            | Error::NonBracketing { .. }
            | Error::DegenerateDecade => CliError::Internal(e.to_string()),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> CliError {
        CliError::Internal(e.to_string())
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let status = run(&cli, &mut out).and_then(|()| out.flush().map_err(CliError::from));
    match status {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: &Cli, out: &mut impl Write) -> Result<(), CliError> {
    let table = match &cli.command {
        Command::Analytic { family, decade } => cmd_analytic(family, *decade)?,
        Command::Scenario { name, rows, .. } => cmd_scenario(name, *rows)?,
        Command::Sequence {
            kind,
            limit,
            count,
            method,
        } => cmd_sequence(*kind, *limit, *count, *method)?,
        Command::Empirical {
            family,
            start,
            step,
            count,
            lo,
            hi,
            inclusive_hi,
            decade,
        } => cmd_empirical(
            family,
            *start,
            *step,
            *count,
            *lo,
            *hi,
            *inclusive_hi,
            *decade,
        )?,
        Command::Limits { probe, a, n, x } => cmd_limits(probe, *a, *n, *x)?,
    };
    table.write(out, cli.format)?;
    Ok(())
}

/// Nine-digit probability table plus a sum row.
fn cmd_analytic(args: &FamilyArgs, decade: u32) -> Result<Table, CliError> {
    let family = args.build()?;
    let n = DecadeScale::new(decade)?;
    let dist = analytic_distribution(&family, n)?;
    let mut t = Table::new(["Digit", "Probability"]);
    for k in Digit::ALL {
        t.push([k.to_string(), format_fixed(dist.prob(k), 8)]);
    }
    t.push(["Sum".into(), format_fixed(dist.probs().iter().sum(), 8)]);
    Ok(t)
}

fn cmd_scenario(name: &str, rows: bool) -> Result<Table, CliError> {
    let id = ScenarioId::ALL
        .into_iter()
        .find(|id| id.name() == name)
        .ok_or_else(|| {
            usage(format!(
                "unknown scenario {name:?}; expected one of bacterial, freefall, pool, height, population, scuba"
            ))
        })?;
    let run = run_scenario(id)?;
    if rows {
        let mut t = Table::new(["X", "Y", "Digit"]);
        for row in &run.rows {
            t.push([
                format_value(row.x),
                format_value(row.y),
                row.digit.map_or_else(|| "-".into(), |d| d.to_string()),
            ]);
        }
        return Ok(t);
    }
    comparison(&run.counts, &run.reference, 8)
}

fn cmd_sequence(
    kind: SequenceArg,
    limit: Option<u64>,
    count: Option<u32>,
    method: Option<MethodArg>,
) -> Result<Table, CliError> {
    if method.is_some() && kind != SequenceArg::Factorial {
        return Err(usage("--method applies to factorial only"));
    }
    match kind {
        SequenceArg::Primes => {
            if count.is_some() {
                return Err(usage("primes take --limit, not --count"));
            }
            let limit = limit.ok_or_else(|| usage("primes require --limit"))?;
            if limit > PRIMES_LIMIT_CAP {
                return Err(usage(format!("--limit must not exceed {PRIMES_LIMIT_CAP}")));
            }
            prime_table(limit)
        }
        SequenceArg::Fibonacci | SequenceArg::Factorial => {
            if limit.is_some() {
                return Err(usage("fibonacci and factorial take --count, not --limit"));
            }
            let count = count.ok_or_else(|| usage("this sequence requires --count"))?;
            if count > TERMS_CAP {
                return Err(usage(format!("--count must not exceed {TERMS_CAP}")));
            }
            if kind == SequenceArg::Fibonacci {
                let digits = fibonacci_leading_digits(count)?;
                return comparison(&DigitCounts::from_digits(digits), &benford()?, 8);
            }
            let method = match method.unwrap_or(MethodArg::Exact) {
                MethodArg::Exact => FactorialMethod::Exact,
                MethodArg::Logsum => FactorialMethod::LogSum,
            };
            let digits = factorial_leading_digits(count, method)?;
            comparison(&DigitCounts::from_digits(digits.digits), &benford()?, 5)
        }
    }
}

/// Leading-digit frequencies of the primes below each cutoff: the
/// powers-of-100 ladder under `limit`, then `limit` itself.
fn prime_table(limit: u64) -> Result<Table, CliError> {
    let primes = sieve_primes(limit)?;
    let mut cutoffs = Vec::new();
    let mut r = 100u64;
    while r < limit {
        cutoffs.push(r);
        r = r.saturating_mul(100);
    }
    cutoffs.push(limit);

    let mut header = vec!["Digit".to_string()];
    header.extend(cutoffs.iter().map(|c| format!("fdp_lt_{c}")));
    let mut columns = Vec::with_capacity(cutoffs.len());
    for &cutoff in &cutoffs {
        let below = primes.partition_point(|&p| p < cutoff);
        let mut counts = DigitCounts::default();
        for &p in &primes[..below] {
            counts.increment(fdp_core::digits::leading_digit(p as f64)?);
        }
        let total = counts.total();
        if total == 0 {
            return Err(usage(format!("no primes below {cutoff}")));
        }
        let freqs: Vec<f64> = Digit::ALL
            .iter()
            .map(|&k| counts.count(k) as f64 / total as f64)
            .collect();
        columns.push(freqs);
    }

    let mut t = Table::new(header);
    for k in Digit::ALL {
        let mut row = vec![k.to_string()];
        row.extend(columns.iter().map(|c| format_fixed(c[k.index()], 8)));
        t.push(row);
    }
    let mut sum_row = vec!["Sum".to_string()];
    sum_row.extend(columns.iter().map(|c| format_fixed(c.iter().sum(), 8)));
    t.push(sum_row);
    Ok(t)
}

#[allow(clippy::too_many_arguments)]
fn cmd_empirical(
    args: &FamilyArgs,
    start: f64,
    step: f64,
    count: u32,
    lo: Option<f64>,
    hi: Option<f64>,
    inclusive_hi: bool,
    decade: u32,
) -> Result<Table, CliError> {
    let family = args.build()?;
    let n = DecadeScale::new(decade)?;
    let spec = SampleSpec::new(start, step, count)?;
    let filter = match (lo, hi) {
        (Some(lo), Some(hi)) if inclusive_hi => RangeFilter::closed(lo, hi)?,
        (Some(lo), Some(hi)) => RangeFilter::half_open(lo, hi)?,
        _ => RangeFilter::half_open(1.0, f64::INFINITY)?,
    };
    let counts = fdp_core::empirical::sample_digit_counts(|x| family.eval(x), &spec, &filter)?;
    let reference = analytic_distribution(&family, n)?;
    comparison(&counts, &reference, 8)
}

fn cmd_limits(
    probe: &str,
    a: Option<f64>,
    n: Option<u32>,
    x: Option<u64>,
) -> Result<Table, CliError> {
    let (value, limit) = match probe {
        "power-p1" => (power_p1(a.unwrap_or(1e6))?, std::f64::consts::LOG10_2),
        "fib-ratio" => (
            fibonacci_ratio(n.unwrap_or(500))?,
            (1.0 + 5f64.sqrt()) / 2.0,
        ),
        "stirling" => (stirling_ratio(x.unwrap_or(2000))?, 1.0),
        _ => {
            return Err(usage(format!(
                "unknown probe {probe:?}; expected power-p1, fib-ratio, or stirling"
            )))
        }
    };
    let mut t = Table::new(["Probe", "Value", "Limit", "Gap"]);
    t.push([
        probe.to_string(),
        format!("{value}"),
        format!("{limit}"),
        format!("{}", value - limit),
    ]);
    Ok(t)
}

/// Digit/Count/Frequency/Reference rows plus the sum row.
fn comparison(
    counts: &DigitCounts,
    reference: &DigitDistribution,
    freq_decimals: u32,
) -> Result<Table, CliError> {
    let mut t = Table::new(["Digit", "Count", "Frequency", "Reference"]);
    for row in comparison_table(counts, reference, freq_decimals)? {
        t.push(row);
    }
    Ok(t)
}

/// The Benford reference distribution (any exponential dispatches to it).
fn benford() -> Result<DigitDistribution, CliError> {
    let family = FunctionFamily::Exponential {
        base: std::f64::consts::E,
        scale: 1.0,
        rate: 1.0,
    };
    Ok(analytic_distribution(&family, DecadeScale::new(1)?)?)
}
