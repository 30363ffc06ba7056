//! Randomized invariants over the analytic formulas, digit extraction, and
//! the decimal big-number type.
//!
//! Parameter strategies stay inside the ranges where each mathematical
//! invariant survives binary64: shape parameters are kept off the extremes
//! that underflow probabilities or overflow the sampled functions.

use fdp_core::analytic::{
    analytic_distribution, benford_pk, linear_pk, log_pk, numeric_trend, power_pk, reciprocal_pk,
    root_pk, trend_classify,
};
use fdp_core::digits::{counts_to_distribution, leading_digit};
use fdp_core::report::{chi_square, l1_distance, max_abs_diff, Comparison};
use fdp_core::sequences::BigNat;
use fdp_core::{DecadeScale, Digit, DigitCounts, FunctionFamily, RangeFilter, SampleSpec};
use proptest::prelude::*;

fn decade() -> impl Strategy<Value = DecadeScale> {
    (1u32..=6).prop_map(|n| DecadeScale::new(n).unwrap())
}

/// Shape parameter comfortably above 1 and small enough that nothing
/// degenerates (see the root-vs-log ordering note below).
fn shape() -> impl Strategy<Value = f64> {
    1.001f64..10.0
}

fn family() -> impl Strategy<Value = FunctionFamily> {
    prop_oneof![
        (shape(), 0.01f64..100.0, 0.05f64..3.0)
            .prop_map(|(base, scale, rate)| FunctionFamily::Exponential { base, scale, rate }),
        (shape(), 0.01f64..100.0)
            .prop_map(|(exponent, scale)| FunctionFamily::Power { exponent, scale }),
        (0.01f64..100.0).prop_map(|slope| FunctionFamily::Linear { slope }),
        (shape(), 0.01f64..100.0).prop_map(|(index, scale)| FunctionFamily::Root { index, scale }),
        (shape(), 0.05f64..3.0, 0.01f64..100.0).prop_map(|(base, stretch, shift)| {
            FunctionFamily::Logarithmic {
                base,
                stretch,
                shift,
            }
        }),
        (0.01f64..1000.0, -50.0f64..50.0)
            .prop_map(|(numerator, hshift)| FunctionFamily::Reciprocal { numerator, hshift }),
    ]
}

proptest! {
    // Every valid family yields a normalized distribution on every decade.
    #[test]
    fn distributions_normalize(f in family(), n in decade()) {
        let probs = analytic_distribution(&f, n).unwrap().probs();
        let sum: f64 = probs.iter().sum();
        prop_assert!((sum - 1.0).abs() < 1e-12, "{f:?} n={n:?} sums to {sum}");
        prop_assert!(probs.iter().all(|p| (0.0..=1.0).contains(p)));
    }

    // Per-family closed forms follow their trend class; strict except in
    // the float-underflow zone of steep logarithms.
    #[test]
    fn probabilities_follow_trend(f in family(), n in decade()) {
        use fdp_core::TrendClass::*;
        let probs = analytic_distribution(&f, n).unwrap().probs();
        let trend = trend_classify(&f);
        for w in probs.windows(2) {
            let strict = w[0] > 1e-300 && w[1] > 1e-300;
            let ok = match trend {
                DecreasingPk if strict => w[1] < w[0],
                DecreasingPk => w[1] <= w[0],
                ConstantPk => w[0] == w[1],
                IncreasingPk if strict => w[1] > w[0],
                IncreasingPk => w[1] >= w[0],
            };
            prop_assert!(ok, "{:?} violates {:?} at {:?}", f, trend, w);
        }
    }

    // The curvature probe agrees with the trend table on moderate shapes,
    // where the sampled second differences stay well-conditioned.
    #[test]
    fn numeric_trend_agrees(
        kind in 0usize..6,
        a in 1.05f64..6.0,
        scale in 0.1f64..50.0,
    ) {
        let f = match kind {
            0 => FunctionFamily::Exponential { base: a, scale, rate: 0.5 },
            1 => FunctionFamily::Power { exponent: a, scale },
            2 => FunctionFamily::Linear { slope: scale },
            3 => FunctionFamily::Root { index: a, scale },
            4 => FunctionFamily::Logarithmic { base: a, stretch: 1.0, shift: scale },
            _ => FunctionFamily::Reciprocal { numerator: scale, hshift: 0.0 },
        };
        prop_assert_eq!(numeric_trend(&f), Some(trend_classify(&f)));
    }

    // Exact decade shifts never move the leading digit (v·5^i stays below
    // 2^53, so every product here is representable exactly).
    #[test]
    fn digit_survives_decade_shift(v in 1.0f64..10.0, i in 0i32..=12) {
        let shifted = v * 10f64.powi(i);
        prop_assert_eq!(leading_digit(v).unwrap(), leading_digit(shifted).unwrap());
    }

    // On [1, 10) the leading digit is the integer part.
    #[test]
    fn digit_on_unit_decade(v in 1.0f64..10.0) {
        prop_assert_eq!(leading_digit(v).unwrap().get(), v as u8);
    }

    // Grid points come from the closed form start + i·step, not from
    // accumulation.
    #[test]
    fn grid_points_are_affine(start in -1e3f64..1e3, step in 1e-3f64..1e3, count in 1u32..500) {
        let spec = SampleSpec::new(start, step, count).unwrap();
        for (i, x) in spec.points().enumerate() {
            prop_assert_eq!(x, start + i as f64 * step);
        }
    }

    // Range filters implement [lo, hi) and [lo, hi] exactly.
    #[test]
    fn filter_bounds(lo in 1.0f64..100.0, width in 0.5f64..100.0, y in 0.0f64..300.0) {
        let hi = lo + width;
        let half_open = RangeFilter::half_open(lo, hi).unwrap();
        let closed = RangeFilter::closed(lo, hi).unwrap();
        prop_assert_eq!(half_open.contains(y), y >= lo && y < hi);
        prop_assert_eq!(closed.contains(y), y >= lo && y <= hi);
        prop_assert!(!half_open.contains(hi));
        prop_assert!(closed.contains(hi));
    }

    // Decimal addition and small multiplication agree with native integers.
    #[test]
    fn bignat_matches_u64(a in 0u64..(1 << 62), b in 0u64..(1 << 62), s in 1u32..=1_000_000) {
        let sum = BigNat::from_u64(a).add(&BigNat::from_u64(b));
        prop_assert_eq!(&sum, &BigNat::from_u64(a + b));
        prop_assert_eq!(sum.to_string(), (a + b).to_string());
        let m = a >> 20; // keep m·s inside u64
        let product = BigNat::from_u64(m).mul_small(s).unwrap();
        prop_assert_eq!(product, BigNat::from_u64(m * s as u64));
    }

    #[test]
    fn bignat_add_commutes_and_associates(a in 0u64..u64::MAX, b in 0u64..u64::MAX, c in 0u64..u64::MAX) {
        let (x, y, z) = (BigNat::from_u64(a), BigNat::from_u64(b), BigNat::from_u64(c));
        prop_assert_eq!(x.add(&y), y.add(&x));
        prop_assert_eq!(x.add(&y).add(&z), x.add(&y.add(&z)));
    }

    // mul_small distributes over add (no overflow: BigNat is unbounded).
    #[test]
    fn bignat_mul_distributes(a in 0u64..u64::MAX, b in 0u64..u64::MAX, s in 1u32..=1_000_000) {
        let (x, y) = (BigNat::from_u64(a), BigNat::from_u64(b));
        let lhs = x.add(&y).mul_small(s).unwrap();
        let rhs = x.mul_small(s).unwrap().add(&y.mul_small(s).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    // Decimal round-trip through the string form.
    #[test]
    fn bignat_string_round_trip(v in 0u64..u64::MAX) {
        let n = BigNat::from_u64(v);
        prop_assert_eq!(n.to_string(), v.to_string());
        prop_assert_eq!(BigNat::from_decimal_str(&n.to_string()).unwrap(), n);
    }

    // The six families order themselves strictly at digit 1 for any shape
    // in (1, 10]: log < root < linear < power < exponential < reciprocal.
    // (P_1 of the power family climbs from 1/9 toward 0.30103 as the
    // exponent grows; the root family mirrors it downward.)
    #[test]
    fn first_digit_orderings(a in shape()) {
        let one = Digit::new(1).unwrap();
        let n1 = DecadeScale::new(1).unwrap();
        prop_assert!(log_pk(a, n1, one).unwrap() < root_pk(a, one).unwrap());
        prop_assert!(root_pk(a, one).unwrap() < linear_pk(one));
        prop_assert!(linear_pk(one) < power_pk(a, one).unwrap());
        prop_assert!(power_pk(a, one).unwrap() < benford_pk(one));
        prop_assert!(benford_pk(one) < reciprocal_pk(one));
    }

    // Comparison metrics: symmetric, ordered, and non-negative on any
    // non-empty tally.
    #[test]
    fn metric_invariants(counts in proptest::array::uniform9(0u64..5000)) {
        prop_assume!(counts.iter().sum::<u64>() > 0);
        let tally = DigitCounts::from_counts(counts);
        let empirical = counts_to_distribution(&tally).unwrap();
        let reference = analytic_distribution(
            &FunctionFamily::Exponential { base: std::f64::consts::E, scale: 1.0, rate: 1.0 },
            DecadeScale::new(1).unwrap(),
        ).unwrap();
        let cmp = Comparison::new(tally, reference).unwrap();
        prop_assert!(cmp.max_abs <= cmp.l1 + 1e-15);
        prop_assert!(cmp.max_abs >= 0.0 && cmp.chi_square >= 0.0);
        prop_assert_eq!(max_abs_diff(&empirical, &reference), max_abs_diff(&reference, &empirical));
        prop_assert_eq!(l1_distance(&empirical, &reference), l1_distance(&reference, &empirical));
        prop_assert!(chi_square(&cmp.counts, &reference).unwrap() >= 0.0);
    }
}

#[test]
fn linear_pk_is_exactly_uniform() {
    for k in Digit::ALL {
        assert_eq!(linear_pk(k), 1.0 / 9.0);
    }
}
