//! Confluent hypergeometric machinery: the Kummer function M(a,b,z), the
//! Tricomi function U(a,b,z), the Pochhammer symbol, and the companion
//! special functions (erf family, gamma, Lambert W) the similarity solution
//! is built from.
//!
//! Evaluation strategy for M:
//! * `z >= 0`, moderate: direct power series with compensated summation,
//!   truncated once two consecutive terms fall below 1e-17 of the partial sum;
//! * `z < 0`: always rewritten through the Kummer transform
//!   `M(a,b,z) = e^z * M(b-a, b, -z)` so the summed series has
//!   eventually-positive terms (the direct alternating series cancels
//!   catastrophically for z << 0);
//! * `z > 30`: two-term large-argument asymptotic evaluated in log scale,
//!   since the `e^z` growth otherwise overflows near z = 709. Terminating
//!   (polynomial) cases keep the exact direct series instead.

mod erf;
mod gamma;
mod lambert;

pub use erf::{erf, erfc, inerfc, INERFC_MAX_ABS_Z, INERFC_MAX_N};
pub use gamma::{gamma_fn, ln_gamma};
pub use lambert::lambert_w0;

pub mod identities;

use gamma::{is_non_positive_integer, ln_gamma_signed};

use std::fmt;

/// Errors from the special-function layer.
#[derive(Debug, Clone, PartialEq)]
pub enum SpecialError {
    /// M(a,b,z) is undefined for b in {0, -1, -2, ...}.
    InvalidB { b: f64 },
    /// The series hit the term cap without meeting the truncation rule.
    NotConverged { terms: usize },
    /// |z| outside the overflow-safe domain for M.
    ArgumentTooLarge { z: f64 },
    /// The two-gamma formula for U degenerates (a gamma argument is a
    /// non-positive integer).
    SingularCombination { arg: f64 },
    /// Gamma evaluated at a pole.
    GammaPole { x: f64 },
    /// i^n erfc requested outside the recurrence's stability window.
    OutOfStabilityWindow { n: u32, z: f64 },
    /// Lambert W0 requested below x = -1/e.
    BelowBranchPoint { x: f64 },
}

impl fmt::Display for SpecialError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpecialError::InvalidB { b } => {
                write!(f, "M(a,b,z) undefined: b = {b} is a non-positive integer")
            }
            SpecialError::NotConverged { terms } => {
                write!(f, "Kummer series did not converge within {terms} terms")
            }
            SpecialError::ArgumentTooLarge { z } => {
                write!(f, "argument z = {z} outside the overflow-safe domain (|z| <= 700)")
            }
            SpecialError::SingularCombination { arg } => {
                write!(f, "U(a,b,z) two-gamma formula singular: gamma argument {arg}")
            }
            SpecialError::GammaPole { x } => write!(f, "gamma pole at x = {x}"),
            SpecialError::OutOfStabilityWindow { n, z } => write!(
                f,
                "i^n erfc recurrence outside stability window (n = {n}, z = {z}; need n <= 20, |z| <= 6)"
            ),
            SpecialError::BelowBranchPoint { x } => {
                write!(f, "Lambert W0 undefined for x = {x} < -1/e")
            }
        }
    }
}

impl std::error::Error for SpecialError {}

/// How a particular M(a,b,z) value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    DirectSeries,
    TransformedSeries,
    LargeZAsymptotic,
}

/// Evaluation record for M(a,b,z).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KummerEval {
    pub value: f64,
    pub terms_used: usize,
    pub converged: bool,
    pub method: Method,
}

/// Two consecutive terms at or below this fraction of the partial sum end the series.
const SERIES_TOL: f64 = 1e-17;
/// Hard cap on summed terms; hitting it reports NotConverged.
const SERIES_CAP: usize = 500;
/// Above this argument the two-term asymptotic replaces the series.
const ASYMPTOTIC_THRESHOLD: f64 = 30.0;
/// Overflow-safe domain for |z|.
const MAX_SAFE_ARG: f64 = 700.0;

/// Rising factorial (a)_s = a (a+1) ... (a+s-1), with (a)_0 = 1.
pub fn pochhammer(a: f64, s: u32) -> f64 {
    let mut p = 1.0;
    for k in 0..s {
        p *= a + k as f64;
    }
    p
}

/// Kummer's confluent hypergeometric function of the first kind,
/// M(a,b,z) = sum over s of (a)_s / ((b)_s s!) z^s.
pub fn kummer_m(a: f64, b: f64, z: f64) -> Result<KummerEval, SpecialError> {
    if is_non_positive_integer(b) {
        return Err(SpecialError::InvalidB { b });
    }
    if !z.is_finite() || z.abs() > MAX_SAFE_ARG {
        return Err(SpecialError::ArgumentTooLarge { z });
    }
    if a == 0.0 {
        // every term beyond s = 0 carries the factor (0)_s = 0
        return Ok(KummerEval {
            value: 1.0,
            terms_used: 1,
            converged: true,
            method: if z < 0.0 {
                Method::TransformedSeries
            } else {
                Method::DirectSeries
            },
        });
    }
    if z < 0.0 {
        let inner = eval_non_negative(b - a, b, -z)?;
        return Ok(KummerEval {
            value: z.exp() * inner.value,
            terms_used: inner.terms_used,
            converged: inner.converged,
            method: Method::TransformedSeries,
        });
    }
    eval_non_negative(a, b, z)
}

/// d/dz M(a,b,z) = (a/b) M(a+1, b+1, z).
pub fn kummer_m_dz(a: f64, b: f64, z: f64) -> Result<f64, SpecialError> {
    if is_non_positive_integer(b) {
        return Err(SpecialError::InvalidB { b });
    }
    Ok(a / b * kummer_m(a + 1.0, b + 1.0, z)?.value)
}

fn eval_non_negative(a: f64, b: f64, z: f64) -> Result<KummerEval, SpecialError> {
    if z > ASYMPTOTIC_THRESHOLD && !is_non_positive_integer(a) {
        return asymptotic_large_z(a, b, z);
    }
    direct_series(a, b, z)
}

/// Power series with Kahan (compensated) summation. Terms are generated by
/// the ratio recurrence term_{s+1} = term_s * (a+s) z / ((b+s)(s+1)).
fn direct_series(a: f64, b: f64, z: f64) -> Result<KummerEval, SpecialError> {
    let mut sum = 1.0f64;
    let mut comp = 0.0f64;
    let mut term = 1.0f64;
    let mut tiny_streak = 0u32;
    let mut s = 0usize;
    while s < SERIES_CAP {
        term *= (a + s as f64) * z / ((b + s as f64) * (s as f64 + 1.0));
        s += 1;
        let y = term - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        if term == 0.0 {
            // (a)_s hit zero: the series terminates exactly
            return Ok(KummerEval {
                value: sum,
                terms_used: s + 1,
                converged: true,
                method: Method::DirectSeries,
            });
        }
        if term.abs() <= SERIES_TOL * sum.abs() {
            tiny_streak += 1;
            if tiny_streak >= 2 {
                return Ok(KummerEval {
                    value: sum,
                    terms_used: s + 1,
                    converged: true,
                    method: Method::DirectSeries,
                });
            }
        } else {
            tiny_streak = 0;
        }
    }
    Err(SpecialError::NotConverged { terms: SERIES_CAP })
}

/// Two-term large-z asymptotic in log scale:
/// M(a,b,z) ~ Gamma(b)/Gamma(a) e^z z^(a-b) (1 + (1-a)(b-a)/z).
fn asymptotic_large_z(a: f64, b: f64, z: f64) -> Result<KummerEval, SpecialError> {
    let (ln_mag, sign) = kummer_m_ln_large(a, b, z)?;
    Ok(KummerEval {
        value: sign * ln_mag.exp(),
        terms_used: 2,
        converged: true,
        method: Method::LargeZAsymptotic,
    })
}

/// (ln |M|, sign) from the large-z asymptotic, for callers that need to stay
/// in log scale (the root function's f(z) for z^2 > 30, where the plain value
/// can overflow).
pub(crate) fn kummer_m_ln_large(a: f64, b: f64, z: f64) -> Result<(f64, f64), SpecialError> {
    let (lg_b, sg_b) = ln_gamma_signed(b)?;
    let (lg_a, sg_a) = ln_gamma_signed(a)?;
    let corr = 1.0 + (1.0 - a) * (b - a) / z;
    let ln_mag = lg_b - lg_a + z + (a - b) * z.ln() + corr.abs().ln();
    Ok((ln_mag, sg_b * sg_a * corr.signum()))
}

/// Tricomi's confluent hypergeometric function via the two-gamma formula
/// U(a,b,z) = Gamma(1-b)/Gamma(a-b+1) M(a,b,z)
///          + Gamma(b-1)/Gamma(a) z^(1-b) M(a-b+1, 2-b, z),
/// valid for non-integer b and z > 0.
pub fn kummer_u(a: f64, b: f64, z: f64) -> Result<f64, SpecialError> {
    for arg in [1.0 - b, a - b + 1.0, b - 1.0, a] {
        if is_non_positive_integer(arg) {
            return Err(SpecialError::SingularCombination { arg });
        }
    }
    let first = gamma_fn(1.0 - b)? / gamma_fn(a - b + 1.0)? * kummer_m(a, b, z)?.value;
    let second =
        gamma_fn(b - 1.0)? / gamma_fn(a)? * z.powf(1.0 - b) * kummer_m(a - b + 1.0, 2.0 - b, z)?.value;
    Ok(first + second)
}
