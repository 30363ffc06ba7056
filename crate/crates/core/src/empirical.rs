//! Grid sampling of a function with range filtering and digit tallying —
//! the procedure behind every worked scenario.
//!
//! A [`SampleSpec`] fixes a uniform grid, a [`RangeFilter`] fixes the
//! measurement range, and [`sample_table`] records one row per grid point:
//! included rows carry the leading digit of the sampled value, excluded rows
//! keep their value but no digit, mirroring tables whose out-of-range cells
//! are left blank.

use crate::digits::{leading_digit, Digit, DigitCounts};
use crate::{Error, Result};

/// A uniform grid: samples at start + i·step for i = 0..count.
///
/// Grid points are always computed from the integer index — never by
/// accumulation — so they are reproducible bit for bit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SampleSpec {
    pub start: f64,
    pub step: f64,
    pub count: u32,
}

impl SampleSpec {
    /// Validates step > 0 and count ≥ 1 (start may be any finite value).
    pub fn new(start: f64, step: f64, count: u32) -> Result<SampleSpec> {
        if !start.is_finite() {
            return Err(Error::InvalidParameter("grid start must be finite".into()));
        }
        if !(step.is_finite() && step > 0.0) {
            return Err(Error::InvalidParameter("grid step must be positive".into()));
        }
        if count < 1 {
            return Err(Error::InvalidParameter(
                "grid needs at least one sample".into(),
            ));
        }
        Ok(SampleSpec { start, step, count })
    }

    /// The i-th grid point, start + i·step.
    pub fn point(&self, i: u32) -> f64 {
        self.start + f64::from(i) * self.step
    }

    /// All grid points in order.
    pub fn points(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.count).map(|i| self.point(i))
    }
}

/// The measurement range values must fall in to be tallied.
///
/// The lower bound is always inclusive; the upper bound is exclusive by
/// default ([lo, hi)) with a per-use inclusive option for setups that keep
/// values landing exactly on `hi`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RangeFilter {
    pub lo: f64,
    pub hi: f64,
    pub inclusive_hi: bool,
}

impl RangeFilter {
    /// The default half-open range [lo, hi), with 1 ≤ lo < hi.
    pub fn half_open(lo: f64, hi: f64) -> Result<RangeFilter> {
        RangeFilter::build(lo, hi, false)
    }

    /// The closed range [lo, hi], with 1 ≤ lo < hi.
    pub fn closed(lo: f64, hi: f64) -> Result<RangeFilter> {
        RangeFilter::build(lo, hi, true)
    }

    fn build(lo: f64, hi: f64, inclusive_hi: bool) -> Result<RangeFilter> {
        if !(lo.is_finite() && lo >= 1.0) {
            return Err(Error::InvalidParameter(
                "range filter needs a finite lower bound >= 1".into(),
            ));
        }
        if hi.is_nan() || hi <= lo {
            return Err(Error::InvalidParameter("range filter needs hi > lo".into()));
        }
        Ok(RangeFilter {
            lo,
            hi,
            inclusive_hi,
        })
    }

    /// Whether `y` lies inside the range.
    pub fn contains(&self, y: f64) -> bool {
        y >= self.lo && (y < self.hi || (self.inclusive_hi && y == self.hi))
    }
}

/// One sampled grid point: the input, the value, and the leading digit for
/// in-range values (`None` marks an excluded row).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SampleRow {
    pub x: f64,
    pub y: f64,
    pub digit: Option<Digit>,
}

/// Samples `f` over the grid and records every row in grid order.
///
/// A non-finite sample is an error, never a silent skip.
pub fn sample_table(
    f: impl Fn(f64) -> f64,
    spec: &SampleSpec,
    filter: &RangeFilter,
) -> Result<Vec<SampleRow>> {
    let mut rows = Vec::with_capacity(spec.count as usize);
    for x in spec.points() {
        let y = f(x);
        if !y.is_finite() {
            return Err(Error::NonFiniteSample { x });
        }
        let digit = if filter.contains(y) {
            Some(leading_digit(y)?)
        } else {
            None
        };
        rows.push(SampleRow { x, y, digit });
    }
    Ok(rows)
}

/// Leading-digit tallies of the in-range samples of `f` over the grid.
pub fn sample_digit_counts(
    f: impl Fn(f64) -> f64,
    spec: &SampleSpec,
    filter: &RangeFilter,
) -> Result<DigitCounts> {
    let rows = sample_table(f, spec, filter)?;
    Ok(DigitCounts::from_digits(
        rows.into_iter().filter_map(|r| r.digit),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn uniform_fill_counts() {
        // y = 5t over t = 1..200 inside [10, 1000) hits every digit 22 times.
        let spec = SampleSpec::new(1.0, 1.0, 200).unwrap();
        let filter = RangeFilter::half_open(10.0, 1000.0).unwrap();
        let counts = sample_digit_counts(|t| 5.0 * t, &spec, &filter).unwrap();
        assert_eq!(counts.counts(), [22; 9]);
        assert_eq!(counts.total(), 198);
    }

    #[test]
    fn constant_function() {
        let spec = SampleSpec::new(0.0, 1.0, 5).unwrap();
        let filter = RangeFilter::half_open(1.0, 10.0).unwrap();
        let counts = sample_digit_counts(|_| 3.7, &spec, &filter).unwrap();
        assert_eq!(counts.counts(), [0, 0, 5, 0, 0, 0, 0, 0, 0]);
    }

    #[test]
    fn inclusive_upper_keeps_boundary_values() {
        let spec = SampleSpec::new(0.05, 0.05, 158).unwrap();
        let filter = RangeFilter::closed(1.0, 1000.0).unwrap();
        let counts = sample_digit_counts(|t| 16.1 * t * t, &spec, &filter).unwrap();
        assert_eq!(counts.total(), 153);
    }

    #[test]
    fn rows_keep_excluded_values() {
        let spec = SampleSpec::new(1.0, 1.0, 3).unwrap();
        let filter = RangeFilter::half_open(10.0, 1000.0).unwrap();
        let rows = sample_table(|t| 5.0 * t, &spec, &filter).unwrap();
        assert_eq!(rows.len(), 3);
        assert_eq!(rows[0].y, 5.0);
        assert_eq!(rows[0].digit, None); // below the range, value still shown
        assert_eq!(rows[1].y, 10.0);
        assert_eq!(rows[1].digit.unwrap().get(), 1);
    }

    #[test]
    fn single_included_row() {
        let spec = SampleSpec::new(2.0, 1.0, 1).unwrap();
        let filter = RangeFilter::half_open(1.0, 100.0).unwrap();
        let rows = sample_table(|x| x * x, &spec, &filter).unwrap();
        assert_eq!(rows.len(), 1);
        assert_eq!(rows[0].digit.unwrap().get(), 4);
    }

    #[test]
    fn included_plus_excluded_equals_grid_size() {
        let spec = SampleSpec::new(1.0, 1.0, 200).unwrap();
        let filter = RangeFilter::half_open(10.0, 1000.0).unwrap();
        let rows = sample_table(|t| 5.0 * t, &spec, &filter).unwrap();
        let included = rows.iter().filter(|r| r.digit.is_some()).count();
        let excluded = rows.iter().filter(|r| r.digit.is_none()).count();
        assert_eq!(included + excluded, 200);
        assert_eq!(excluded, 2); // t = 1 (y = 5) and t = 200 (y = 1000)
    }

    #[test]
    fn grid_points_are_index_based() {
        let spec = SampleSpec::new(0.05, 0.05, 158).unwrap();
        // Point i must equal start + i·step exactly, immune to accumulation.
        assert_eq!(spec.point(157), 0.05 + 157.0 * 0.05);
        let via_iter: Vec<f64> = spec.points().collect();
        assert_eq!(via_iter[157], spec.point(157));
    }

    #[test]
    fn non_finite_sample_is_an_error() {
        let spec = SampleSpec::new(0.0, 1.0, 3).unwrap();
        let filter = RangeFilter::half_open(1.0, 10.0).unwrap();
        let err = sample_table(|x| 1.0 / x, &spec, &filter).unwrap_err();
        assert_eq!(err, Error::NonFiniteSample { x: 0.0 });
    }

    #[test]
    fn invalid_specs_rejected() {
        assert!(SampleSpec::new(0.0, 0.0, 5).is_err());
        assert!(SampleSpec::new(0.0, -1.0, 5).is_err());
        assert!(SampleSpec::new(0.0, 1.0, 0).is_err());
        assert!(RangeFilter::half_open(0.5, 10.0).is_err());
        assert!(RangeFilter::half_open(10.0, 10.0).is_err());
        assert!(RangeFilter::closed(5.0, 1.0).is_err());
    }
}
