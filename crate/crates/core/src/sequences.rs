//! Exact integer sequences — primes, Fibonacci, factorials — with
//! leading-digit statistics and asymptotic probes.
//!
//! Fibonacci and factorial terms outgrow every machine integer long before
//! the sample sizes of interest (2000! has 5736 digits), so the digit
//! statistics are backed by [`BigNat`], a minimal arbitrary-precision natural
//! number stored as decimal digits. Decimal storage makes the only queries we
//! ever run — leading digit and digit count — trivially exact.

use crate::digits::{leading_digit, leading_digit_of_bignat, Digit, DigitCounts};
use crate::{Error, Result};

/// Largest factor accepted by [`BigNat::mul_small`].
pub const MUL_SMALL_MAX: u32 = 1_000_000;

/// An exact natural number stored as decimal digits, most significant first.
///
/// Canonical form has no leading zero digit; zero is the empty digit
/// sequence. Only the operations the digit statistics need are provided:
/// addition and multiplication by a small factor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BigNat {
    digits: Vec<u8>,
}

impl BigNat {
    /// The number 0 (canonically, no digits).
    pub fn zero() -> BigNat {
        BigNat { digits: Vec::new() }
    }

    /// Converts a machine integer.
    pub fn from_u64(mut v: u64) -> BigNat {
        let mut digits = Vec::new();
        while v > 0 {
            digits.push((v % 10) as u8);
            v /= 10;
        }
        digits.reverse();
        BigNat { digits }
    }

    /// Parses a base-10 string of ASCII digits.
    pub fn from_decimal_str(s: &str) -> Result<BigNat> {
        if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::InvalidParameter(format!(
                "not a decimal natural number: {s:?}"
            )));
        }
        let digits: Vec<u8> = s
            .bytes()
            .map(|b| b - b'0')
            .skip_while(|&d| d == 0)
            .collect();
        Ok(BigNat { digits })
    }

    /// True for the number 0.
    pub fn is_zero(&self) -> bool {
        self.digits.is_empty()
    }

    /// Number of decimal digits (1 for the number 0).
    pub fn len_digits(&self) -> usize {
        self.digits.len().max(1)
    }

    /// The most significant decimal digit, or `None` for 0.
    pub fn most_significant_digit(&self) -> Option<u8> {
        self.digits.first().copied()
    }

    /// Exact sum.
    pub fn add(&self, other: &BigNat) -> BigNat {
        let (a, b) = if self.digits.len() >= other.digits.len() {
            (&self.digits, &other.digits)
        } else {
            (&other.digits, &self.digits)
        };
        let mut out = Vec::with_capacity(a.len() + 1);
        let mut carry = 0u8;
        for i in 0..a.len() {
            let da = a[a.len() - 1 - i];
            let db = if i < b.len() { b[b.len() - 1 - i] } else { 0 };
            let s = da + db + carry;
            out.push(s % 10);
            carry = s / 10;
        }
        if carry > 0 {
            out.push(carry);
        }
        out.reverse();
        BigNat { digits: out }
    }

    /// Exact product with a factor in 1..=[`MUL_SMALL_MAX`].
    ///
    /// Zero factors are rejected rather than producing a zero chain.
    pub fn mul_small(&self, s: u32) -> Result<BigNat> {
        if s == 0 || s > MUL_SMALL_MAX {
            return Err(Error::InvalidParameter(format!(
                "small factor must be in 1..={MUL_SMALL_MAX}, got {s}"
            )));
        }
        if self.is_zero() {
            return Ok(BigNat::zero());
        }
        let mut out = Vec::with_capacity(self.digits.len() + 7);
        let mut carry = 0u64;
        for &d in self.digits.iter().rev() {
            let t = u64::from(d) * u64::from(s) + carry;
            out.push((t % 10) as u8);
            carry = t / 10;
        }
        while carry > 0 {
            out.push((carry % 10) as u8);
            carry /= 10;
        }
        out.reverse();
        Ok(BigNat { digits: out })
    }

    /// The value of the first `max_digits` digits and the total digit count.
    ///
    /// The returned pair (p, len) satisfies self ≈ p · 10^(len − digits-in-p).
    fn prefix(&self, max_digits: usize) -> (u128, usize) {
        let take = self.digits.len().min(max_digits);
        let mut p: u128 = 0;
        for &d in &self.digits[..take] {
            p = p * 10 + u128::from(d);
        }
        (p, self.digits.len())
    }
}

impl std::fmt::Display for BigNat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for d in &self.digits {
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

/// Which integer sequence to tally.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SequenceKind {
    /// All primes strictly below `limit`.
    Primes { limit: u64 },
    /// Fibonacci numbers F_1..F_count, with F_1 = F_2 = 1.
    Fibonacci { count: u32 },
    /// Factorials 1!..count!.
    Factorial { count: u32 },
}

/// All primes ≤ `limit`, ascending, by sieve of Eratosthenes.
pub fn sieve_primes(limit: u64) -> Result<Vec<u64>> {
    if limit < 2 {
        return Err(Error::InvalidParameter(format!(
            "prime sieve requires limit >= 2, got {limit}"
        )));
    }
    let n = limit as usize;
    let mut composite = vec![false; n + 1];
    let mut p = 2usize;
    while p * p <= n {
        if !composite[p] {
            let mut m = p * p;
            while m <= n {
                composite[m] = true;
                m += p;
            }
        }
        p += 1;
    }
    Ok((2..=n)
        .filter(|&i| !composite[i])
        .map(|i| i as u64)
        .collect())
}

/// Leading-digit tallies over all primes in the half-open range [1, limit).
pub fn prime_digit_counts(limit: u64) -> Result<DigitCounts> {
    let primes = sieve_primes(limit)?;
    let mut counts = DigitCounts::default();
    for p in primes {
        if p < limit {
            counts.increment(leading_digit(p as f64).expect("primes are >= 2"));
        }
    }
    Ok(counts)
}

/// Leading digits of F_1..F_count computed by the exact recurrence,
/// with F_1 = F_2 = 1.
pub fn fibonacci_leading_digits(count: u32) -> Result<Vec<Digit>> {
    if count < 1 {
        return Err(Error::InvalidParameter(
            "fibonacci sequence needs count >= 1".into(),
        ));
    }
    let mut out = Vec::with_capacity(count as usize);
    let mut a = BigNat::from_u64(1); // F_1
    let mut b = BigNat::from_u64(1); // F_2
    out.push(leading_digit_of_bignat(&a)?);
    if count >= 2 {
        out.push(leading_digit_of_bignat(&b)?);
    }
    for _ in 3..=count {
        let next = a.add(&b);
        a = b;
        b = next;
        out.push(leading_digit_of_bignat(&b)?);
    }
    Ok(out)
}

/// How factorial leading digits are produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FactorialMethod {
    /// Running exact product; the ground truth.
    Exact,
    /// Running sum of log₁₀ in binary64; fast, with a confidence flag for
    /// terms whose fractional log lands within 1e-9 of a digit boundary.
    LogSum,
}

/// Leading digits of 1!..count!, plus the 1-based indices the log-sum method
/// could not place with confidence (empty for the exact method).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorialDigits {
    pub digits: Vec<Digit>,
    pub low_confidence: Vec<u32>,
}

/// Fractional-log distance below which a log-sum digit is flagged.
pub const LOGSUM_FLAG_TOL: f64 = 1e-9;

/// Bias applied when placing a fractional log between digit boundaries, so
/// sums that land exactly on a boundary (1! = 1, 2! = 2, 3! = 6) classify as
/// the boundary's own digit instead of falling one ulp short.
const LOGSUM_BOUNDARY_BIAS: f64 = 1e-12;

/// Leading digits of 1!..count! by the chosen method.
pub fn factorial_leading_digits(count: u32, method: FactorialMethod) -> Result<FactorialDigits> {
    if count < 1 {
        return Err(Error::InvalidParameter(
            "factorial sequence needs count >= 1".into(),
        ));
    }
    match method {
        FactorialMethod::Exact => {
            let mut digits = Vec::with_capacity(count as usize);
            let mut product = BigNat::from_u64(1);
            for x in 1..=count {
                product = product.mul_small(x)?;
                digits.push(leading_digit_of_bignat(&product)?);
            }
            Ok(FactorialDigits {
                digits,
                low_confidence: Vec::new(),
            })
        }
        FactorialMethod::LogSum => {
            // log10 of 1..=10; the fractional part of log10(x!) selects digit d
            // when it falls in [log10(d), log10(d+1)).
            let bounds: Vec<f64> = (1..=10).map(|d| f64::from(d).log10()).collect();
            let mut digits = Vec::with_capacity(count as usize);
            let mut low_confidence = Vec::new();
            let mut log_sum = 0.0f64;
            for x in 1..=count {
                log_sum += f64::from(x).log10();
                let frac = log_sum - log_sum.floor();
                let dist = bounds
                    .iter()
                    .map(|b| (frac - b).abs())
                    .fold(f64::INFINITY, f64::min);
                if dist < LOGSUM_FLAG_TOL {
                    low_confidence.push(x);
                }
                let adjusted = frac + LOGSUM_BOUNDARY_BIAS;
                let mut d = 1u8;
                if adjusted < 1.0 {
                    for k in 2..=9u8 {
                        if bounds[usize::from(k) - 1] <= adjusted {
                            d = k;
                        }
                    }
                }
                digits.push(Digit::new(d)?);
            }
            Ok(FactorialDigits {
                digits,
                low_confidence,
            })
        }
    }
}

/// The exact value of count! (exposed for digit-length queries).
pub fn factorial_exact(count: u32) -> Result<BigNat> {
    let mut product = BigNat::from_u64(1);
    for x in 1..=count.max(1) {
        product = product.mul_small(x)?;
    }
    Ok(product)
}

/// Leading-digit tallies over one of the integer sequences.
pub fn sequence_digit_counts(kind: SequenceKind) -> Result<DigitCounts> {
    match kind {
        SequenceKind::Primes { limit } => prime_digit_counts(limit),
        SequenceKind::Fibonacci { count } => {
            Ok(DigitCounts::from_digits(fibonacci_leading_digits(count)?))
        }
        SequenceKind::Factorial { count } => Ok(DigitCounts::from_digits(
            factorial_leading_digits(count, FactorialMethod::Exact)?.digits,
        )),
    }
}

/// Number of leading digits retained when forming the Fibonacci ratio.
const RATIO_PREFIX_DIGITS: usize = 30;

/// F_{n+1} / F_n, computed from 30-digit prefixes of the exact terms so the
/// quotient never touches an overflowing conversion.
pub fn fibonacci_ratio(n: u32) -> Result<f64> {
    if n < 2 {
        return Err(Error::InvalidParameter(
            "fibonacci ratio needs n >= 2".into(),
        ));
    }
    let mut a = BigNat::from_u64(1); // F_1
    let mut b = BigNat::from_u64(1); // F_2
    for _ in 0..(n - 1) {
        let next = a.add(&b);
        a = b;
        b = next;
    }
    // a = F_n, b = F_{n+1}
    let (pa, len_a) = a.prefix(RATIO_PREFIX_DIGITS);
    let (pb, len_b) = b.prefix(RATIO_PREFIX_DIGITS);
    let digits_a = len_a.min(RATIO_PREFIX_DIGITS) as i32;
    let digits_b = len_b.min(RATIO_PREFIX_DIGITS) as i32;
    let exponent = (len_b as i32 - digits_b) - (len_a as i32 - digits_a);
    Ok(pb as f64 / pa as f64 * 10f64.powi(exponent))
}

/// x! / (√(2πx)·(x/e)^x), evaluated in log space.
///
/// Strictly decreasing in x and > 1 everywhere, approaching 1 like 1 + 1/(12x).
pub fn stirling_ratio(x: u64) -> Result<f64> {
    if x < 1 {
        return Err(Error::InvalidParameter(
            "stirling ratio needs x >= 1".into(),
        ));
    }
    let ln_factorial: f64 = (1..=x).map(|i| (i as f64).ln()).sum();
    let xf = x as f64;
    let ln_stirling = 0.5 * (2.0 * std::f64::consts::PI * xf).ln() + xf * (xf.ln() - 1.0);
    Ok((ln_factorial - ln_stirling).exp())
}
