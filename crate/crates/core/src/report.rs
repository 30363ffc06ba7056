//! Distance metrics between digit distributions and fixed-layout comparison
//! tables.
//!
//! Tables print probabilities in fixed-point decimal, rounded half away from
//! zero: eight places by default, with a five-place option for the frequency
//! column. Large sampled values render in `4.48E+02`-style scientific
//! notation.

use crate::digits::{counts_to_distribution, Digit, DigitCounts, DigitDistribution};
use crate::{Error, Result};

/// Largest pointwise gap between two digit distributions.
pub fn max_abs_diff(p: &DigitDistribution, q: &DigitDistribution) -> f64 {
    Digit::ALL
        .iter()
        .map(|&k| (p.prob(k) - q.prob(k)).abs())
        .fold(0.0, f64::max)
}

/// Total variation-style L1 gap: Σ_k |p_k − q_k|.
pub fn l1_distance(p: &DigitDistribution, q: &DigitDistribution) -> f64 {
    Digit::ALL
        .iter()
        .map(|&k| (p.prob(k) - q.prob(k)).abs())
        .sum()
}

/// Pearson statistic of observed tallies against a reference distribution:
/// Σ_k (c_k − total·p_k)² / (total·p_k).
///
/// Rejects an empty tally and any zero reference cell.
pub fn chi_square(c: &DigitCounts, reference: &DigitDistribution) -> Result<f64> {
    let total = c.total();
    if total == 0 {
        return Err(Error::EmptySample);
    }
    let mut stat = 0.0;
    for k in Digit::ALL {
        let expected = total as f64 * reference.prob(k);
        if expected <= 0.0 {
            return Err(Error::InvalidParameter(format!(
                "reference probability for digit {k} is zero"
            )));
        }
        let gap = c.count(k) as f64 - expected;
        stat += gap * gap / expected;
    }
    Ok(stat)
}

/// Observed tallies side by side with a reference distribution, plus the
/// three gap metrics.
#[derive(Debug, Clone, PartialEq)]
pub struct Comparison {
    pub counts: DigitCounts,
    pub empirical: DigitDistribution,
    pub reference: DigitDistribution,
    pub max_abs: f64,
    pub l1: f64,
    pub chi_square: f64,
}

impl Comparison {
    /// Normalizes the tallies and computes all metrics.
    pub fn new(counts: DigitCounts, reference: DigitDistribution) -> Result<Comparison> {
        let empirical = counts_to_distribution(&counts)?;
        let max_abs = max_abs_diff(&empirical, &reference);
        let l1 = l1_distance(&empirical, &reference);
        let chi = chi_square(&counts, &reference)?;
        debug_assert!(max_abs <= l1 && max_abs >= 0.0 && chi >= 0.0);
        Ok(Comparison {
            counts,
            empirical,
            reference,
            max_abs,
            l1,
            chi_square: chi,
        })
    }
}

/// Fixed-point rendering with `decimals` places, rounded half away from
/// zero. Intended for probability-scale values (|v|·10^decimals must fit a
/// 64-bit integer).
pub fn format_fixed(v: f64, decimals: u32) -> String {
    let scale = 10f64.powi(decimals as i32);
    let scaled = (v * scale).round(); // ties round away from zero
    debug_assert!(scaled.abs() < 9.2e18, "value out of fixed-point range");
    let units = scaled.abs() as i64;
    let base = 10i64.pow(decimals);
    let sign = if scaled < 0.0 { "-" } else { "" };
    if decimals == 0 {
        return format!("{sign}{units}");
    }
    format!(
        "{sign}{}.{:0width$}",
        units / base,
        units % base,
        width = decimals as usize
    )
}

/// Threshold above which sampled values print in scientific notation.
const SCI_NOTATION_MIN: f64 = 1e6;

/// Renders a sampled value: three-significant-digit scientific notation
/// (`1.11E+37`) at or above 10^6, shortest exact decimal otherwise.
pub fn format_value(y: f64) -> String {
    if !y.is_finite() || y.abs() < SCI_NOTATION_MIN {
        return format!("{y}");
    }
    let mut exp = y.abs().log10().floor() as i32;
    let normalize = |e: i32| y / 10f64.powi(e);
    let mut mantissa = normalize(exp);
    if mantissa.abs() >= 10.0 {
        exp += 1;
        mantissa = normalize(exp);
    } else if mantissa.abs() < 1.0 {
        exp -= 1;
        mantissa = normalize(exp);
    }
    let mut rendered = format!("{mantissa:.2}");
    // Rounding to two places can push the mantissa to 10.00; renormalize.
    if rendered.trim_start_matches('-').starts_with("10.") {
        exp += 1;
        mantissa = normalize(exp);
        rendered = format!("{mantissa:.2}");
    }
    format!("{rendered}E+{exp:02}")
}

/// Digit-by-digit comparison rows: nine `[digit, count, frequency,
/// reference]` rows and a closing `[Sum, total, 1, 1]` row.
///
/// The frequency column prints with `freq_decimals` places; the reference
/// column always prints with eight.
pub fn comparison_table(
    c: &DigitCounts,
    reference: &DigitDistribution,
    freq_decimals: u32,
) -> Result<Vec<[String; 4]>> {
    let empirical = counts_to_distribution(c)?;
    let mut rows = Vec::with_capacity(10);
    for k in Digit::ALL {
        rows.push([
            k.to_string(),
            c.count(k).to_string(),
            format_fixed(empirical.prob(k), freq_decimals),
            format_fixed(reference.prob(k), 8),
        ]);
    }
    let freq_sum: f64 = Digit::ALL.iter().map(|&k| empirical.prob(k)).sum();
    let ref_sum: f64 = Digit::ALL.iter().map(|&k| reference.prob(k)).sum();
    rows.push([
        "Sum".into(),
        c.total().to_string(),
        format_fixed(freq_sum, freq_decimals),
        format_fixed(ref_sum, 8),
    ]);
    Ok(rows)
}
