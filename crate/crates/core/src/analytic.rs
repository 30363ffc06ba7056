//! Closed-form first-digit probabilities for six function families, the
//! generic inverse-image formula they all derive from, and trend/limit
//! probes.
//!
//! For a strictly monotone f, the probability that a value f(x) drawn from
//! the decade [10^(n-1), 10^n) starts with digit k is the share of the
//! x-axis whose image lands in [k·10^(n-1), (k+1)·10^(n-1)):
//!
//! ```text
//! P_k = |f⁻¹((k+1)·10^(n-1)) − f⁻¹(k·10^(n-1))| / |f⁻¹(10^n) − f⁻¹(10^(n-1))|
//! ```
//!
//! Each family collapses this to a closed form. Scale and shift parameters
//! cancel, so [`analytic_distribution`] reduces every family to its shape
//! parameter alone; only the logarithmic family depends on the decade n.

use crate::digits::{DecadeScale, Digit, DigitDistribution};
use crate::{Error, Result};

/// One of the six supported function shapes, with its parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FunctionFamily {
    /// y = scale · base^(rate·x), base > 1, scale > 0, rate > 0.
    Exponential { base: f64, scale: f64, rate: f64 },
    /// y = scale · x^exponent, exponent > 1, scale > 0.
    Power { exponent: f64, scale: f64 },
    /// y = slope · x, slope > 0.
    Linear { slope: f64 },
    /// y = scale · x^(1/index), index > 1, scale > 0.
    Root { index: f64, scale: f64 },
    /// y = log_base(x / shift) / stretch, base > 1, stretch > 0, shift > 0.
    Logarithmic { base: f64, stretch: f64, shift: f64 },
    /// y = numerator / (x − hshift), numerator > 0.
    Reciprocal { numerator: f64, hshift: f64 },
}

impl FunctionFamily {
    /// Checks every parameter against its bound.
    pub fn validate(&self) -> Result<()> {
        fn check(ok: bool, msg: &str) -> Result<()> {
            if ok {
                Ok(())
            } else {
                Err(Error::InvalidParameter(msg.into()))
            }
        }
        match *self {
            FunctionFamily::Exponential { base, scale, rate } => {
                check(base.is_finite() && base > 1.0, "base must exceed 1")?;
                check(scale.is_finite() && scale > 0.0, "scale must be positive")?;
                check(rate.is_finite() && rate > 0.0, "rate must be positive")
            }
            FunctionFamily::Power { exponent, scale } => {
                check(
                    exponent.is_finite() && exponent > 1.0,
                    "exponent must exceed 1",
                )?;
                check(scale.is_finite() && scale > 0.0, "scale must be positive")
            }
            FunctionFamily::Linear { slope } => {
                check(slope.is_finite() && slope > 0.0, "slope must be positive")
            }
            FunctionFamily::Root { index, scale } => {
                check(index.is_finite() && index > 1.0, "index must exceed 1")?;
                check(scale.is_finite() && scale > 0.0, "scale must be positive")
            }
            FunctionFamily::Logarithmic {
                base,
                stretch,
                shift,
            } => {
                check(base.is_finite() && base > 1.0, "base must exceed 1")?;
                check(
                    stretch.is_finite() && stretch > 0.0,
                    "stretch must be positive",
                )?;
                check(shift.is_finite() && shift > 0.0, "shift must be positive")
            }
            FunctionFamily::Reciprocal { numerator, hshift } => {
                check(
                    numerator.is_finite() && numerator > 0.0,
                    "numerator must be positive",
                )?;
                check(hshift.is_finite(), "horizontal shift must be finite")
            }
        }
    }

    /// Evaluates the forward function at `x`.
    pub fn eval(&self, x: f64) -> f64 {
        match *self {
            FunctionFamily::Exponential { base, scale, rate } => scale * base.powf(rate * x),
            FunctionFamily::Power { exponent, scale } => scale * x.powf(exponent),
            FunctionFamily::Linear { slope } => slope * x,
            FunctionFamily::Root { index, scale } => scale * x.powf(1.0 / index),
            FunctionFamily::Logarithmic {
                base,
                stretch,
                shift,
            } => (x / shift).ln() / base.ln() / stretch,
            FunctionFamily::Reciprocal { numerator, hshift } => numerator / (x - hshift),
        }
    }
}

/// How a family's digit probabilities change as the digit grows.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrendClass {
    /// P_1 > P_2 > … > P_9 (convex forward function).
    DecreasingPk,
    /// All nine probabilities equal (straight line).
    ConstantPk,
    /// P_1 < P_2 < … < P_9 (concave forward function).
    IncreasingPk,
}

/// P_k = log₁₀((k+1)/k): the first-digit law of every exponential.
pub fn benford_pk(k: Digit) -> f64 {
    let kf = f64::from(k.get());
    ((kf + 1.0) / kf).log10()
}

/// P_k for y = x^a: ((k+1)^(1/a) − k^(1/a)) / (10^(1/a) − 1), a > 1.
pub fn power_pk(a: f64, k: Digit) -> Result<f64> {
    FunctionFamily::Power {
        exponent: a,
        scale: 1.0,
    }
    .validate()?;
    let inv = 1.0 / a;
    let kf = f64::from(k.get());
    Ok(((kf + 1.0).powf(inv) - kf.powf(inv)) / (10f64.powf(inv) - 1.0))
}

/// P_k for y = mx: 1/9 for every digit, regardless of slope.
pub fn linear_pk(_k: Digit) -> f64 {
    1.0 / 9.0
}

/// P_k for y = x^(1/a): ((k+1)^a − k^a) / (10^a − 1), a > 1.
///
/// For a = 2 this is (2k+1)/99; for a = 3 it is (3k²+3k+1)/999.
pub fn root_pk(a: f64, k: Digit) -> Result<f64> {
    FunctionFamily::Root {
        index: a,
        scale: 1.0,
    }
    .validate()?;
    let kf = f64::from(k.get());
    Ok(((kf + 1.0).powf(a) - kf.powf(a)) / (10f64.powf(a) - 1.0))
}

/// P_k for y = log_a(x) on the decade [10^(n-1), 10^n):
/// a^(k·10^(n-1)) / Σᵢ a^(i·10^(n-1)), a > 1.
///
/// Evaluated as 1 / Σᵢ a^((i−k)·10^(n-1)) so the ratio stays finite even
/// where a^(k·10^(n-1)) itself would overflow binary64 (already at a = 2,
/// n = 3 for the raw form).
pub fn log_pk(a: f64, n: DecadeScale, k: Digit) -> Result<f64> {
    if !(a.is_finite() && a > 1.0) {
        return Err(Error::InvalidParameter("base must exceed 1".into()));
    }
    let scale = n.unit() * a.ln(); // may overflow to inf at extreme n·ln a
    let kf = f64::from(k.get());
    let mut denom = 0.0;
    for i in 1..=9 {
        let diff = f64::from(i) - kf;
        denom += if diff == 0.0 {
            1.0
        } else {
            (diff * scale).exp()
        };
    }
    Ok(1.0 / denom)
}

/// P_k for y = a/x: 10 / (9·k·(k+1)).
pub fn reciprocal_pk(k: Digit) -> f64 {
    let kf = f64::from(k.get());
    10.0 / (9.0 * kf * (kf + 1.0))
}

/// The family's digit distribution on decade `n`.
///
/// Every scale/shift parameter cancels analytically: exponentials follow
/// Benford's law for any base, scale, and rate; power/root scales drop out;
/// a stretched logarithm log_a(x)/h behaves as base a^h (and its inner shift
/// cancels); a reciprocal's numerator and horizontal shift both cancel. Only
/// the logarithmic family's result depends on `n`.
pub fn analytic_distribution(f: &FunctionFamily, n: DecadeScale) -> Result<DigitDistribution> {
    f.validate()?;
    let mut probs = [0.0; 9];
    for k in Digit::ALL {
        probs[k.index()] = match *f {
            FunctionFamily::Exponential { .. } => benford_pk(k),
            FunctionFamily::Power { exponent, .. } => power_pk(exponent, k)?,
            FunctionFamily::Linear { .. } => linear_pk(k),
            FunctionFamily::Root { index, .. } => root_pk(index, k)?,
            FunctionFamily::Logarithmic { base, stretch, .. } => log_pk(base.powf(stretch), n, k)?,
            FunctionFamily::Reciprocal { .. } => reciprocal_pk(k),
        };
    }
    DigitDistribution::new(probs)
}

/// The generic inverse-image digit probability, given the inverse map f⁻¹.
///
/// Absolute values make the formula valid for decreasing f, where both
/// differences are negative and the signs cancel.
pub fn generic_pk(inv: impl Fn(f64) -> f64, n: DecadeScale, k: Digit) -> Result<f64> {
    let unit = n.unit();
    let kf = f64::from(k.get());
    let num = inv((kf + 1.0) * unit) - inv(kf * unit);
    let den = inv(10.0 * unit) - inv(unit);
    if !num.is_finite() || !den.is_finite() {
        return Err(Error::InvalidParameter(
            "inverse map is not finite on the decade".into(),
        ));
    }
    if den == 0.0 {
        return Err(Error::DegenerateDecade);
    }
    Ok((num / den).abs())
}

/// Default bisection resolution as a fraction of the initial bracket width.
pub const BISECTION_REL_TOL: f64 = 1e-12;

/// Solves f(x) = y for strictly monotone f by bisection, shrinking the
/// bracket to width ≤ `tol` (or to floating-point resolution).
pub fn invert_monotone(
    f: impl Fn(f64) -> f64,
    y: f64,
    bracket: (f64, f64),
    tol: f64,
) -> Result<f64> {
    let (mut lo, mut hi) = bracket;
    if !(lo.is_finite() && hi.is_finite() && lo < hi && tol > 0.0) {
        return Err(Error::InvalidParameter(
            "bisection needs a finite bracket with lo < hi and tol > 0".into(),
        ));
    }
    let f_lo = f(lo);
    let f_hi = f(hi);
    let increasing = f_hi >= f_lo;
    let (y_min, y_max) = if increasing {
        (f_lo, f_hi)
    } else {
        (f_hi, f_lo)
    };
    if !(y_min <= y && y <= y_max) {
        return Err(Error::NonBracketing { lo, hi, y });
    }
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break; // bracket already at floating-point resolution
        }
        let go_right = if increasing { f(mid) < y } else { f(mid) > y };
        if go_right {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// [`generic_pk`] for callers who only have the forward function: the four
/// inverse values are obtained by bisection over `bracket` at the default
/// [`BISECTION_REL_TOL`] resolution.
pub fn generic_pk_via_bisection(
    f: impl Fn(f64) -> f64,
    bracket: (f64, f64),
    n: DecadeScale,
    k: Digit,
) -> Result<f64> {
    let tol = BISECTION_REL_TOL * (bracket.1 - bracket.0);
    let unit = n.unit();
    let kf = f64::from(k.get());
    let at = |y: f64| invert_monotone(&f, y, bracket, tol);
    let num = at((kf + 1.0) * unit)? - at(kf * unit)?;
    let den = at(10.0 * unit)? - at(unit)?;
    if den == 0.0 {
        return Err(Error::DegenerateDecade);
    }
    Ok((num / den).abs())
}

/// How the family's P_k values trend in k.
///
/// Functions with positive second derivative sweep later digit subintervals
/// ever faster, so their digit probabilities decrease in k; straight lines
/// weight all digits equally; concave functions do the opposite. (The
/// reciprocal traverses decades in descending order, but its P_k ordering is
/// still governed by its convexity, so no special case is needed.)
pub fn trend_classify(f: &FunctionFamily) -> TrendClass {
    match f {
        FunctionFamily::Exponential { .. }
        | FunctionFamily::Power { .. }
        | FunctionFamily::Reciprocal { .. } => TrendClass::DecreasingPk,
        FunctionFamily::Linear { .. } => TrendClass::ConstantPk,
        FunctionFamily::Root { .. } | FunctionFamily::Logarithmic { .. } => {
            TrendClass::IncreasingPk
        }
    }
}

/// Relative threshold below which a second difference counts as zero.
const CURVATURE_ZERO_TOL: f64 = 1e-9;

/// Classifies the trend numerically from centered second differences of the
/// forward function at three interior points of the family's domain.
///
/// Returns `None` if the three samples disagree. Agreement with
/// [`trend_classify`] is a checked property of every family.
pub fn numeric_trend(f: &FunctionFamily) -> Option<TrendClass> {
    // Sample x ∈ {base+1, base+2, base+3} with unit spacing; the reciprocal's
    // pole pushes its sample window right of the shift.
    let base_x = match f {
        FunctionFamily::Reciprocal { hshift, .. } => hshift + 1.0,
        _ => 1.0,
    };
    let mut signs = [0i32; 3];
    for (j, sign) in signs.iter_mut().enumerate() {
        let xc = base_x + 1.0 + j as f64;
        let (lo, mid, hi) = (f.eval(xc - 1.0), f.eval(xc), f.eval(xc + 1.0));
        let d2 = lo - 2.0 * mid + hi;
        let magnitude = lo.abs().max(mid.abs()).max(hi.abs()).max(1.0);
        *sign = if d2.abs() <= CURVATURE_ZERO_TOL * magnitude {
            0
        } else if d2 > 0.0 {
            1
        } else {
            -1
        };
    }
    if signs[0] != signs[1] || signs[1] != signs[2] {
        return None;
    }
    Some(match signs[0] {
        1 => TrendClass::DecreasingPk,
        0 => TrendClass::ConstantPk,
        _ => TrendClass::IncreasingPk,
    })
}

/// P₁ of the power family as a function of its exponent:
/// (2^(1/a) − 1) / (10^(1/a) − 1).
///
/// Strictly increasing in a and bounded above by its limit log₁₀2 ≈ 0.30103.
pub fn power_p1(a: f64) -> Result<f64> {
    if !(a.is_finite() && a > 1.0) {
        return Err(Error::InvalidParameter("exponent must exceed 1".into()));
    }
    let inv = 1.0 / a;
    Ok((2f64.powf(inv) - 1.0) / (10f64.powf(inv) - 1.0))
}
