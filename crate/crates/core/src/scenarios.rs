//! Six frozen real-world sampling setups whose digit counts are pinned.
//!
//! Each scenario fixes a forward function (or a measured data series), a
//! sampling grid, and a measurement-range filter, and carries the exact digit
//! tallies the setup must reproduce. Five scenarios are generated; the height
//! scenario replays a 217-row growth series shipped as fixture data, since
//! its values were read off a hand-drawn curve and cannot be regenerated.

use crate::analytic::{analytic_distribution, FunctionFamily};
use crate::digits::{leading_digit, DecadeScale, DigitCounts, DigitDistribution};
use crate::empirical::{sample_table, RangeFilter, SampleRow, SampleSpec};
use crate::Result;

/// The six bundled scenarios.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ScenarioId {
    /// Bacteria count N(t) = 300·e^(0.4t) over hours t = 1..200, measured in
    /// [1, 10^37): the last two samples outgrow the range.
    Bacterial,
    /// Free-fall distance D(t) = 16.1·t² at twentieth-of-a-second ticks,
    /// measured in [1, 1000] feet.
    FreeFall,
    /// Pool volume V(t) = 5t over minutes t = 1..200, measured in
    /// [10, 1000) cubic feet.
    Pool,
    /// Monthly height-growth series (fixture data, eighth-centimeter units).
    Height,
    /// Years-since-1900 curve T(p) = 40·ln(p/1600) over populations
    /// p = 1640..2055, measured in [1, 10).
    Population,
    /// No-decompression dive time t(d) = 525/(d − 10) over depths
    /// d = 15..535 feet, measured in [1, 100] minutes.
    Scuba,
}

impl ScenarioId {
    /// All scenarios, in presentation order.
    pub const ALL: [ScenarioId; 6] = [
        ScenarioId::Bacterial,
        ScenarioId::FreeFall,
        ScenarioId::Pool,
        ScenarioId::Height,
        ScenarioId::Population,
        ScenarioId::Scuba,
    ];

    /// Stable lowercase name (CLI argument and output label).
    pub fn name(self) -> &'static str {
        match self {
            ScenarioId::Bacterial => "bacterial",
            ScenarioId::FreeFall => "freefall",
            ScenarioId::Pool => "pool",
            ScenarioId::Height => "height",
            ScenarioId::Population => "population",
            ScenarioId::Scuba => "scuba",
        }
    }
}

/// Where a scenario's rows come from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ScenarioSource {
    /// Evaluate the reference family's forward function over a grid.
    Grid {
        spec: SampleSpec,
        filter: RangeFilter,
    },
    /// Replay the embedded height-growth series.
    Fixture,
}

/// A scenario's frozen definition: formula, sampling setup, the exact digit
/// tallies it must reproduce, and the family its distribution is compared to.
#[derive(Debug, Clone, PartialEq)]
pub struct ScenarioDefinition {
    pub id: ScenarioId,
    /// Human-readable formula or data description.
    pub formula: &'static str,
    pub source: ScenarioSource,
    pub expected_counts: DigitCounts,
    pub reference_family: FunctionFamily,
    /// Decade the reference distribution is evaluated on (only the
    /// logarithmic family is sensitive to it).
    pub decade: DecadeScale,
}

/// A scenario's computed output: per-point rows, digit tallies, and the
/// reference distribution for comparison.
#[derive(Debug, Clone, PartialEq)]
pub struct ScenarioRun {
    pub rows: Vec<SampleRow>,
    pub counts: DigitCounts,
    pub reference: DigitDistribution,
}

/// Monthly height-growth series: (month index 1..=217, growth in
/// eighth-centimeter units, all within [1, 1010)).
pub type HeightFixture = Vec<(u32, f64)>;

const HEIGHT_FIXTURE_RAW: &str = include_str!("data/height_growth.txt");

/// Parses and validates the embedded height-growth series.
pub fn height_fixture() -> HeightFixture {
    let rows: HeightFixture = HEIGHT_FIXTURE_RAW
        .lines()
        .map(|line| {
            let (x, y) = line.split_once(' ').expect("fixture line is 'x y'");
            (
                x.parse().expect("fixture month index"),
                y.parse().expect("fixture growth value"),
            )
        })
        .collect();
    assert_eq!(rows.len(), 217, "height fixture must hold 217 rows");
    for (i, &(x, y)) in rows.iter().enumerate() {
        assert_eq!(x, i as u32 + 1, "month indices must run 1..=217");
        assert!((1.0..1010.0).contains(&y), "growth value {y} out of range");
    }
    rows
}

fn counts(c: [u64; 9]) -> DigitCounts {
    DigitCounts::from_counts(c)
}

/// The frozen definition of one scenario.
pub fn scenario_definition(id: ScenarioId) -> ScenarioDefinition {
    let e = std::f64::consts::E;
    let n1 = DecadeScale::new(1).expect("1 is a valid decade");
    match id {
        ScenarioId::Bacterial => ScenarioDefinition {
            id,
            formula: "N(t) = 300*e^(0.4*t), t = 1..200 hours, range [1, 1e37)",
            source: ScenarioSource::Grid {
                spec: SampleSpec::new(1.0, 1.0, 200).expect("valid grid"),
                filter: RangeFilter::half_open(1.0, 1e37).expect("valid range"),
            },
            expected_counts: counts([59, 34, 25, 19, 17, 13, 12, 10, 9]),
            reference_family: FunctionFamily::Exponential {
                base: e,
                scale: 300.0,
                rate: 0.4,
            },
            decade: n1,
        },
        ScenarioId::FreeFall => ScenarioDefinition {
            id,
            formula: "D(t) = 16.1*t^2, t = 0.05*i, i = 1..158 seconds, range [1, 1000]",
            source: ScenarioSource::Grid {
                spec: SampleSpec::new(0.05, 0.05, 158).expect("valid grid"),
                filter: RangeFilter::closed(1.0, 1000.0).expect("valid range"),
            },
            expected_counts: counts([31, 22, 18, 18, 15, 13, 13, 12, 11]),
            reference_family: FunctionFamily::Power {
                exponent: 2.0,
                scale: 16.1,
            },
            decade: n1,
        },
        ScenarioId::Pool => ScenarioDefinition {
            id,
            formula: "V(t) = 5*t, t = 1..200 minutes, range [10, 1000)",
            source: ScenarioSource::Grid {
                spec: SampleSpec::new(1.0, 1.0, 200).expect("valid grid"),
                filter: RangeFilter::half_open(10.0, 1000.0).expect("valid range"),
            },
            expected_counts: counts([22; 9]),
            reference_family: FunctionFamily::Linear { slope: 5.0 },
            decade: n1,
        },
        ScenarioId::Height => ScenarioDefinition {
            id,
            formula: "monthly height growth, 217 measured values (fixture)",
            source: ScenarioSource::Fixture,
            expected_counts: counts([8, 16, 22, 23, 25, 28, 26, 23, 46]),
            reference_family: FunctionFamily::Root {
                index: 2.0,
                scale: 1.0,
            },
            decade: n1,
        },
        ScenarioId::Population => ScenarioDefinition {
            id,
            formula: "T(p) = 40*ln(p/1600), p = 1640..2055 thousand, range [1, 10)",
            source: ScenarioSource::Grid {
                spec: SampleSpec::new(1640.0, 1.0, 416).expect("valid grid"),
                filter: RangeFilter::half_open(1.0, 10.0).expect("valid range"),
            },
            expected_counts: counts([42, 42, 44, 45, 45, 47, 49, 49, 51]),
            reference_family: FunctionFamily::Logarithmic {
                base: e,
                stretch: 0.025,
                shift: 1600.0,
            },
            decade: n1,
        },
        ScenarioId::Scuba => ScenarioDefinition {
            id,
            formula: "t(d) = 525/(d - 10), d = 15..535 feet, range [1, 100]",
            source: ScenarioSource::Grid {
                spec: SampleSpec::new(15.0, 1.0, 521).expect("valid grid"),
                filter: RangeFilter::closed(1.0, 100.0).expect("valid range"),
            },
            expected_counts: counts([289, 96, 48, 29, 20, 13, 11, 8, 6]),
            reference_family: FunctionFamily::Reciprocal {
                numerator: 525.0,
                hshift: 10.0,
            },
            decade: n1,
        },
    }
}

/// Runs a scenario: computes its rows, tallies digits, and attaches the
/// reference distribution.
///
/// A tally that disagrees with the frozen expected counts is a defect in the
/// engine, surfaced loudly in debug builds.
pub fn run_scenario(id: ScenarioId) -> Result<ScenarioRun> {
    let def = scenario_definition(id);
    let rows = match def.source {
        ScenarioSource::Grid { spec, filter } => {
            let fam = def.reference_family;
            sample_table(|x| fam.eval(x), &spec, &filter)?
        }
        ScenarioSource::Fixture => height_fixture()
            .into_iter()
            .map(|(x, y)| {
                Ok(SampleRow {
                    x: f64::from(x),
                    y,
                    digit: Some(leading_digit(y)?),
                })
            })
            .collect::<Result<Vec<_>>>()?,
    };
    let counts = DigitCounts::from_digits(rows.iter().filter_map(|r| r.digit));
    debug_assert_eq!(
        counts,
        def.expected_counts,
        "scenario {} diverged from its frozen tallies",
        def.id.name()
    );
    let reference = analytic_distribution(&def.reference_family, def.decade)?;
    Ok(ScenarioRun {
        rows,
        counts,
        reference,
    })
}
