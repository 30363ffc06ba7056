//! Leading-digit extraction and the decade partition of [1, ∞).
//!
//! Every value x ≥ 1 falls into exactly one decade [10^(n-1), 10^n), and
//! within it into one of nine digit subintervals [k·10^(n-1), (k+1)·10^(n-1)).
//! The types here — [`Digit`], [`DigitCounts`], [`DigitDistribution`],
//! [`DecadeScale`] — and the extractor [`leading_digit`] are the shared
//! vocabulary of the whole crate.

use crate::sequences::BigNat;
use crate::{Error, Result};

/// A leading decimal digit, 1..=9.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Digit(u8);

impl Digit {
    /// All nine digits in ascending order.
    pub const ALL: [Digit; 9] = [
        Digit(1),
        Digit(2),
        Digit(3),
        Digit(4),
        Digit(5),
        Digit(6),
        Digit(7),
        Digit(8),
        Digit(9),
    ];

    /// Validates 1 ≤ d ≤ 9.
    pub fn new(d: u8) -> Result<Digit> {
        if (1..=9).contains(&d) {
            Ok(Digit(d))
        } else {
            Err(Error::InvalidDigit(u64::from(d)))
        }
    }

    /// The digit value, 1..=9.
    pub fn get(self) -> u8 {
        self.0
    }

    /// Zero-based array index, 0..=8.
    pub fn index(self) -> usize {
        usize::from(self.0 - 1)
    }
}

impl std::fmt::Display for Digit {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Decade index n ≥ 1, denoting the interval [10^(n-1), 10^n).
///
/// n is capped at 308 so both decade bounds stay finite in binary64.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DecadeScale(u32);

impl DecadeScale {
    /// Validates 1 ≤ n ≤ 308.
    pub fn new(n: u32) -> Result<DecadeScale> {
        if (1..=308).contains(&n) {
            Ok(DecadeScale(n))
        } else {
            Err(Error::InvalidDecade(n))
        }
    }

    /// The decade index n.
    pub fn get(self) -> u32 {
        self.0
    }

    /// 10^(n-1), the width of one digit subinterval in this decade.
    ///
    /// Parsed from the decimal literal rather than computed with `powi`,
    /// whose repeated multiplication drifts off the correctly rounded
    /// value for large n.
    pub fn unit(self) -> f64 {
        format!("1e{}", self.0 - 1).parse().expect("valid literal")
    }
}

/// Nine non-negative tallies indexed by leading digit.
///
/// The total is derived from the per-digit counts, so the two can never
/// disagree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct DigitCounts {
    counts: [u64; 9],
}

impl DigitCounts {
    /// Builds from nine per-digit counts (index 0 ↔ digit 1).
    pub fn from_counts(counts: [u64; 9]) -> DigitCounts {
        DigitCounts { counts }
    }

    /// Tallies an iterator of digits.
    pub fn from_digits<I: IntoIterator<Item = Digit>>(digits: I) -> DigitCounts {
        let mut c = DigitCounts::default();
        for d in digits {
            c.increment(d);
        }
        c
    }

    /// Adds one observation of digit `d`.
    pub fn increment(&mut self, d: Digit) {
        self.counts[d.index()] += 1;
    }

    /// The tally for one digit.
    pub fn count(&self, d: Digit) -> u64 {
        self.counts[d.index()]
    }

    /// The nine tallies (index 0 ↔ digit 1).
    pub fn counts(&self) -> [u64; 9] {
        self.counts
    }

    /// Sum of all nine tallies.
    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }
}

/// Nine probabilities indexed by leading digit: each in [0, 1], summing to 1
/// within 1e-12.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DigitDistribution {
    probs: [f64; 9],
}

/// Tolerance on Σ p_k = 1 for a valid distribution.
pub const NORMALIZATION_TOL: f64 = 1e-12;

impl DigitDistribution {
    /// Validates entries in [0, 1] and Σ = 1 within [`NORMALIZATION_TOL`].
    pub fn new(probs: [f64; 9]) -> Result<DigitDistribution> {
        for (i, p) in probs.iter().enumerate() {
            if !(0.0..=1.0).contains(p) {
                return Err(Error::InvalidDistribution(format!(
                    "probability for digit {} is {}, outside [0, 1]",
                    i + 1,
                    p
                )));
            }
        }
        let sum: f64 = probs.iter().sum();
        if (sum - 1.0).abs() > NORMALIZATION_TOL {
            return Err(Error::InvalidDistribution(format!(
                "probabilities sum to {sum}, not 1"
            )));
        }
        Ok(DigitDistribution { probs })
    }

    /// The probability assigned to one digit.
    pub fn prob(&self, d: Digit) -> f64 {
        self.probs[d.index()]
    }

    /// The nine probabilities (index 0 ↔ digit 1).
    pub fn probs(&self) -> [f64; 9] {
        self.probs
    }
}

/// Threshold above which `f64 as u128` can no longer hold the whole part.
const U128_SAFE_LIMIT: f64 = 170141183460469231731687303715884105728.0; // 2^127

/// The leading decimal digit of the whole part of `x`, for finite x ≥ 1.
///
/// Computed by repeated integer division by 10 (and, beyond the 128-bit
/// range, by inspecting the exact decimal rendering of the value, which is
/// integral there) — never by a floating logarithm, which misclassifies
/// values within rounding distance of a decade boundary.
pub fn leading_digit(x: f64) -> Result<Digit> {
    if !x.is_finite() || x < 1.0 {
        return Err(Error::ValueOutOfRange(x));
    }
    if x < U128_SAFE_LIMIT {
        let mut v = x as u128; // truncation = floor for positive x
        while v >= 10 {
            v /= 10;
        }
        Digit::new(v as u8)
    } else {
        // Every binary64 this large is an integer; {:.0} renders it exactly.
        let s = format!("{x:.0}");
        let first = s.as_bytes()[0] - b'0';
        Digit::new(first)
    }
}

/// The most significant decimal digit of an exact natural number ≥ 1.
pub fn leading_digit_of_bignat(v: &BigNat) -> Result<Digit> {
    match v.most_significant_digit() {
        Some(d) => Digit::new(d),
        None => Err(Error::ValueOutOfRange(0.0)),
    }
}

/// The digit subinterval [k·10^(n-1), (k+1)·10^(n-1)) as (lo, hi).
pub fn decade_subinterval(n: DecadeScale, k: Digit) -> (f64, f64) {
    let unit = n.unit();
    (f64::from(k.get()) * unit, f64::from(k.get() + 1) * unit)
}

/// Normalizes tallies to relative frequencies. Rejects an empty tally.
pub fn counts_to_distribution(c: &DigitCounts) -> Result<DigitDistribution> {
    let total = c.total();
    if total == 0 {
        return Err(Error::EmptySample);
    }
    let mut probs = [0.0; 9];
    for d in Digit::ALL {
        probs[d.index()] = c.count(d) as f64 / total as f64;
    }
    DigitDistribution::new(probs)
}
