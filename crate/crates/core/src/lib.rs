//! First-digit probability engine.
//!
//! Computes the probability that a value produced by a growth process has a
//! given leading decimal digit, three ways:
//!
//! * [`analytic`] — closed-form distributions for six function families
//!   (exponential, power, linear, root, logarithmic, reciprocal), plus the
//!   generic inverse-image formula they all derive from.
//! * [`empirical`] — sample a function on a uniform grid, filter to a
//!   measurement range, and tally leading digits.
//! * [`sequences`] — exact integer sequences (primes, Fibonacci, factorials)
//!   with leading-digit statistics and asymptotic probes.
//!
//! [`scenarios`] bundles six frozen real-world sampling setups whose digit
//! counts are pinned, [`report`] compares empirical counts against analytic
//! references, and [`digits`] holds the shared digit/count/distribution types.

pub mod analytic;
pub mod digits;
pub mod empirical;
pub mod report;
pub mod scenarios;
pub mod sequences;

pub use analytic::{FunctionFamily, TrendClass};
pub use digits::{DecadeScale, Digit, DigitCounts, DigitDistribution};
pub use empirical::{RangeFilter, SampleRow, SampleSpec};
pub use report::Comparison;
pub use scenarios::{ScenarioDefinition, ScenarioId, ScenarioRun};
pub use sequences::{BigNat, FactorialDigits, FactorialMethod, SequenceKind};

/// Errors reported by the engine's validating constructors and operations.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// A leading digit outside 1..=9.
    #[error("digit must be between 1 and 9, got {0}")]
    InvalidDigit(u64),
    /// Leading-digit extraction needs a finite value of at least 1.
    #[error("leading digit requires a finite value >= 1, got {0}")]
    ValueOutOfRange(f64),
    /// Decade scales index the intervals [10^(n-1), 10^n); n = 0 and scales
    /// whose bounds overflow binary64 are rejected.
    #[error("decade scale must be between 1 and 308, got {0}")]
    InvalidDecade(u32),
    /// A digit tally with no entries cannot be normalized.
    #[error("cannot normalize an empty digit tally")]
    EmptySample,
    /// Probabilities must lie in [0, 1] and sum to 1 within 1e-12.
    #[error("invalid digit distribution: {0}")]
    InvalidDistribution(String),
    /// A function-family, grid, or filter parameter violated its bound.
    #[error("{0}")]
    InvalidParameter(String),
    /// A sampled function produced NaN or infinity on the grid.
    #[error("function value at x = {x} is not finite")]
    NonFiniteSample { x: f64 },
    /// Bisection requires the target to lie between the bracket images.
    #[error("bracket [{lo}, {hi}] does not enclose a solution of f(x) = {y}")]
    NonBracketing { lo: f64, hi: f64, y: f64 },
    /// The generic digit-probability formula is undefined when the inverse
    /// map is constant across the decade.
    #[error("inverse map is constant on the decade; digit probability undefined")]
    DegenerateDecade,
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
