//! Problem definition: parameters of the melting problem with latent heat
//! L = gamma * s^beta * sdot^delta, the validity region, and the scalar
//! root function H(z) = C f(z) - z^(beta+delta+1) whose unique positive zero
//! is the front coefficient xi.
//!
//! Monotonicity facts that make the root unique: C f(z) decreases strictly
//! from +infinity to 0 on z > 0, while z^(beta+delta+1) is non-decreasing
//! whenever beta + delta + 1 >= 0. Everything here preserves the sign of H
//! even when one side of the balance leaves the range of f64 (log-scale
//! evaluation takes over past z^2 = 30).

use crate::kummer::{kummer_m, SpecialError};
use std::fmt;

/// One-phase melting problem on x > 0 with fixed-face temperature
/// T(0,t) = t^(alpha/2) T0 and front-dependent latent heat.
///
/// `a` is the square root of the thermal diffusivity (the diffusion
/// coefficient of the heat equation is a^2); every closed formula uses `a`
/// itself, so that is what is stored.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StefanProblem {
    /// Thermal conductivity k > 0, W/(m C).
    pub k: f64,
    /// Square root of the diffusivity, m/s^(1/2), > 0.
    pub a: f64,
    /// Fixed-face temperature coefficient T0 > 0, C/s^(alpha/2).
    pub t0: f64,
    /// Latent-heat coefficient gamma > 0.
    pub gamma: f64,
    /// Front-position exponent beta in L = gamma s^beta sdot^delta.
    pub beta: f64,
    /// Front-velocity exponent delta.
    pub delta: f64,
}

/// A named violation of the problem's validity region. These are data, not
/// errors: sweeps record them per grid point and keep going.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Violation {
    /// k, a, T0 or gamma is zero, negative, or NaN.
    NonPositiveParameter { name: &'static str, value: f64 },
    /// alpha = beta - delta < 0: the fixed-face exponent must be non-negative.
    NegativeAlpha { alpha: f64 },
    /// beta + delta + 1 < 0: outside the region where the root is unique.
    OutsideUniquenessRegion { sum: f64 },
    /// a^(beta+delta+2) or the assembled coefficient leaves f64 range.
    CoefficientNotRepresentable { value: f64 },
}

impl Violation {
    /// Short machine-readable token (safe to embed in CSV fields).
    pub fn code(&self) -> &'static str {
        match self {
            Violation::NonPositiveParameter { .. } => "nonpositive-parameter",
            Violation::NegativeAlpha { .. } => "alpha-negative",
            Violation::OutsideUniquenessRegion { .. } => "outside-uniqueness-region",
            Violation::CoefficientNotRepresentable { .. } => "coefficient-not-representable",
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NonPositiveParameter { name, value } => {
                write!(f, "parameter {name} must be positive (got {value})")
            }
            Violation::NegativeAlpha { alpha } => {
                write!(f, "alpha = beta - delta must be non-negative (got {alpha})")
            }
            Violation::OutsideUniquenessRegion { sum } => {
                write!(f, "uniqueness requires beta + delta + 1 >= 0 (got {sum})")
            }
            Violation::CoefficientNotRepresentable { value } => {
                write!(f, "coefficient scale leaves double-precision range (got {value})")
            }
        }
    }
}

/// Errors from evaluating the model's functions at a bad point.
#[derive(Debug, Clone, PartialEq)]
pub enum ModelError {
    NonPositiveArgument { name: &'static str, value: f64 },
    Special(SpecialError),
}

impl fmt::Display for ModelError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelError::NonPositiveArgument { name, value } => {
                write!(f, "{name} must be positive (got {value})")
            }
            ModelError::Special(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for ModelError {}

impl From<SpecialError> for ModelError {
    fn from(e: SpecialError) -> Self {
        ModelError::Special(e)
    }
}

/// Past this z^2 the Kummer factor is evaluated through its log-scale
/// asymptotic so C f(z) underflows to 0 instead of erroring out.
const LOG_SCALE_THRESHOLD: f64 = 30.0;

const LN_2: f64 = std::f64::consts::LN_2;

/// f(z) = 1 / (z M(alpha/2 + 1, 3/2, z^2)), the decreasing side of the
/// balance, divided out of the Stefan condition.
pub fn f_of(alpha: f64, z: f64) -> Result<f64, ModelError> {
    Ok(ln_f(alpha, z)?.exp())
}

/// ln f(z); finite for every z > 0 even where f itself underflows.
fn ln_f(alpha: f64, z: f64) -> Result<f64, ModelError> {
    if !(z > 0.0) {
        return Err(ModelError::NonPositiveArgument { name: "z", value: z });
    }
    let a = alpha / 2.0 + 1.0;
    let w = z * z;
    if w <= LOG_SCALE_THRESHOLD {
        Ok(-(z * kummer_m(a, 1.5, w)?.value).ln())
    } else {
        let (ln_m, _) = crate::kummer::kummer_m_ln_large(a, 1.5, w)?;
        Ok(-z.ln() - ln_m)
    }
}

/// ln |f'(z)| with f'(z) = -f(z)^2 M(alpha/2 + 1, 1/2, z^2); f' < 0 always.
fn ln_f_prime_mag(alpha: f64, z: f64) -> Result<f64, ModelError> {
    let a = alpha / 2.0 + 1.0;
    let w = z * z;
    let ln_m2 = if w <= LOG_SCALE_THRESHOLD {
        kummer_m(a, 0.5, w)?.value.ln()
    } else {
        crate::kummer::kummer_m_ln_large(a, 0.5, w)?.0
    };
    Ok(2.0 * ln_f(alpha, z)? + ln_m2)
}

impl StefanProblem {
    pub fn new(k: f64, a: f64, t0: f64, gamma: f64, beta: f64, delta: f64) -> Self {
        StefanProblem { k, a, t0, gamma, beta, delta }
    }

    /// All physical coefficients set to 1.
    pub fn unit(t0: f64, beta: f64, delta: f64) -> Self {
        StefanProblem::new(1.0, 1.0, t0, 1.0, beta, delta)
    }

    /// Liquid water: k = 0.58 W/(m C), a^2 = 1.39e-7 m^2/s, gamma = 1.
    pub fn water(t0: f64, beta: f64, delta: f64) -> Self {
        StefanProblem::new(0.58, 1.39e-7_f64.sqrt(), t0, 1.0, beta, delta)
    }

    /// Fixed-face exponent alpha = beta - delta; always derived, never stored.
    pub fn alpha(&self) -> f64 {
        self.beta - self.delta
    }

    /// Check every validity condition; collects all violations rather than
    /// stopping at the first.
    pub fn validate(&self) -> Result<(), Vec<Violation>> {
        let mut v = Vec::new();
        for (name, value) in [
            ("k", self.k),
            ("a", self.a),
            ("T0", self.t0),
            ("gamma", self.gamma),
        ] {
            if !(value > 0.0) || !value.is_finite() {
                v.push(Violation::NonPositiveParameter { name, value });
            }
        }
        let alpha = self.alpha();
        if !(alpha >= 0.0) {
            v.push(Violation::NegativeAlpha { alpha });
        }
        let sum = self.beta + self.delta + 1.0;
        if !(sum >= 0.0) {
            v.push(Violation::OutsideUniquenessRegion { sum });
        }
        if v.is_empty() {
            let c = self.stefan_coefficient();
            if !c.is_finite() || !(c > 0.0) {
                v.push(Violation::CoefficientNotRepresentable { value: c });
            }
        }
        if v.is_empty() {
            Ok(())
        } else {
            Err(v)
        }
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_ok()
    }

    /// L = gamma s^beta sdot^delta, energy per unit volume at the front.
    pub fn latent_heat(&self, s: f64, sdot: f64) -> Result<f64, ModelError> {
        if !(s > 0.0) {
            return Err(ModelError::NonPositiveArgument { name: "s", value: s });
        }
        if !(sdot > 0.0) {
            return Err(ModelError::NonPositiveArgument { name: "sdot", value: sdot });
        }
        Ok(self.gamma * s.powf(self.beta) * sdot.powf(self.delta))
    }

    /// C = k T0 / (gamma a^(beta+delta+2) 2^(beta+1)).
    pub fn stefan_coefficient(&self) -> f64 {
        self.k * self.t0 / (self.gamma * self.a.powf(self.beta + self.delta + 2.0))
            / 2f64.powf(self.beta + 1.0)
    }

    fn ln_stefan_coefficient(&self) -> f64 {
        self.k.ln() + self.t0.ln()
            - self.gamma.ln()
            - (self.beta + self.delta + 2.0) * self.a.ln()
            - (self.beta + 1.0) * LN_2
    }

    /// The two sides of the balance: (C f(z), z^(beta+delta+1)). The solver
    /// scales its residual rule by the left side.
    pub(crate) fn balance(&self, z: f64) -> Result<(f64, f64), ModelError> {
        let p = self.beta + self.delta + 1.0;
        let w = z * z;
        let lhs = if w <= LOG_SCALE_THRESHOLD {
            // plain product keeps full precision on the everyday range
            self.stefan_coefficient() * f_of(self.alpha(), z)?
        } else {
            (self.ln_stefan_coefficient() + ln_f(self.alpha(), z)?).exp()
        };
        Ok((lhs, z.powf(p)))
    }

    /// H(z) = C f(z) - z^(beta+delta+1). Positive near 0, negative for large
    /// z; its sign is preserved even when one side saturates to infinity.
    pub fn h_of(&self, z: f64) -> Result<f64, ModelError> {
        let (lhs, rhs) = self.balance(z)?;
        Ok(lhs - rhs)
    }

    /// H'(z) = C f'(z) - (beta+delta+1) z^(beta+delta).
    pub fn h_prime(&self, z: f64) -> Result<f64, ModelError> {
        if !(z > 0.0) {
            return Err(ModelError::NonPositiveArgument { name: "z", value: z });
        }
        let p = self.beta + self.delta + 1.0;
        let lhs_d = -(self.ln_stefan_coefficient() + ln_f_prime_mag(self.alpha(), z)?).exp();
        Ok(lhs_d - p * z.powf(p - 1.0))
    }
}
