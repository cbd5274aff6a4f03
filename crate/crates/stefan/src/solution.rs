//! The assembled similarity solution: temperature field T(x,t), its spatial
//! gradient, the moving front s(t) = 2 a xi sqrt(t), and the profile
//! phi(eta) in the similarity variable eta = x / (2 a sqrt(t)).
//!
//! T(x,t) = t^(alpha/2) [ c1 M(-alpha/2, 1/2, -eta^2)
//!                      + c2 eta M(-alpha/2 + 1/2, 3/2, -eta^2) ],
//! with c1 = T0 and c2 fixed by T(s(t), t) = 0.

use crate::kummer::{erf, kummer_m, SpecialError};
use crate::model::StefanProblem;
use std::fmt;

/// Phase classification of an evaluation point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Region {
    Liquid,
    Interface,
    Solid,
}

impl Region {
    pub fn as_str(&self) -> &'static str {
        match self {
            Region::Liquid => "liquid",
            Region::Interface => "interface",
            Region::Solid => "solid",
        }
    }
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A field value tagged with the region it was sampled in. Points past the
/// front are not extrapolated: the solid phase sits at the phase-change
/// temperature, so the value there is an explicit 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FieldSample {
    pub value: f64,
    pub region: Region,
}

#[derive(Debug, Clone, PartialEq)]
pub enum SolutionError {
    /// xi M(-alpha/2+1/2, 3/2, -xi^2) vanished or was not finite; xi is
    /// outside the admissible range.
    DegenerateDenominator { denominator: f64 },
    /// The alpha = 1 closed form was requested for a problem with alpha != 1.
    WrongAlpha { alpha: f64 },
    /// The similarity variable is singular at t = 0.
    NonPositiveTime { t: f64 },
    NegativePosition { x: f64 },
    NegativeEta { eta: f64 },
    Special(SpecialError),
}

impl fmt::Display for SolutionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolutionError::DegenerateDenominator { denominator } => {
                write!(f, "degenerate interface denominator (got {denominator})")
            }
            SolutionError::WrongAlpha { alpha } => {
                write!(f, "closed form requires alpha = 1 (got {alpha})")
            }
            SolutionError::NonPositiveTime { t } => {
                write!(f, "time must be positive (got {t})")
            }
            SolutionError::NegativePosition { x } => {
                write!(f, "position must be non-negative (got {x})")
            }
            SolutionError::NegativeEta { eta } => {
                write!(f, "similarity variable must be non-negative (got {eta})")
            }
            SolutionError::Special(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for SolutionError {}

impl From<SpecialError> for SolutionError {
    fn from(e: SpecialError) -> Self {
        SolutionError::Special(e)
    }
}

/// eta = x / (2 a sqrt(t)). Kept in exactly one place so scale-invariance
/// checks are bit-stable.
pub fn similarity_eta(a: f64, x: f64, t: f64) -> f64 {
    x / (2.0 * a * t.sqrt())
}

/// The fully determined similarity solution for one problem.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SimilaritySolution {
    pub problem: StefanProblem,
    pub xi: f64,
    /// Coefficient of the even profile branch; equals T0.
    pub c1: f64,
    /// Coefficient of the odd branch, fixed by phi(xi) = 0.
    pub c2: f64,
}

/// Fix (c1, c2) from the front coefficient:
/// c1 = T0, c2 = -T0 M(-alpha/2, 1/2, -xi^2) / (xi M(-alpha/2+1/2, 3/2, -xi^2)).
pub fn build_solution(p: &StefanProblem, xi: f64) -> Result<SimilaritySolution, SolutionError> {
    let alpha = p.alpha();
    let numerator = kummer_m(-alpha / 2.0, 0.5, -(xi * xi))?.value;
    let denominator = xi * kummer_m(-alpha / 2.0 + 0.5, 1.5, -(xi * xi))?.value;
    if !denominator.is_finite() || denominator.abs() < 1e-300 {
        return Err(SolutionError::DegenerateDenominator { denominator });
    }
    Ok(SimilaritySolution {
        problem: *p,
        xi,
        c1: p.t0,
        c2: -p.t0 * numerator / denominator,
    })
}

impl SimilaritySolution {
    pub fn eta(&self, x: f64, t: f64) -> f64 {
        similarity_eta(self.problem.a, x, t)
    }

    /// Front position s(t) = 2 a xi sqrt(t); s(0) = 0.
    pub fn front_position(&self, t: f64) -> f64 {
        2.0 * self.problem.a * self.xi * t.sqrt()
    }

    /// Front velocity sdot(t) = a xi / sqrt(t); unbounded as t -> 0.
    pub fn front_velocity(&self, t: f64) -> f64 {
        self.problem.a * self.xi / t.sqrt()
    }

    /// Similarity profile phi(eta) = c1 M(-alpha/2,1/2,-eta^2)
    /// + c2 eta M(-alpha/2+1/2,3/2,-eta^2); phi(0) = T0, phi(xi) = 0.
    pub fn phi_profile(&self, eta: f64) -> Result<f64, SolutionError> {
        if !(eta >= 0.0) {
            return Err(SolutionError::NegativeEta { eta });
        }
        let alpha = self.problem.alpha();
        let w = -(eta * eta);
        let even = kummer_m(-alpha / 2.0, 0.5, w)?.value;
        let odd = kummer_m(-alpha / 2.0 + 0.5, 1.5, w)?.value;
        Ok(self.c1 * even + self.c2 * eta * odd)
    }

    fn check_point(&self, x: f64, t: f64) -> Result<(), SolutionError> {
        if !(t > 0.0) {
            return Err(SolutionError::NonPositiveTime { t });
        }
        if !(x >= 0.0) {
            return Err(SolutionError::NegativePosition { x });
        }
        Ok(())
    }

    /// Temperature at (x, t): t^(alpha/2) phi(eta) in the liquid region,
    /// 0 (solid at phase-change temperature) past the front.
    pub fn temperature(&self, x: f64, t: f64) -> Result<FieldSample, SolutionError> {
        self.check_point(x, t)?;
        let s = self.front_position(t);
        if x > s {
            return Ok(FieldSample { value: 0.0, region: Region::Solid });
        }
        let region = if x == s { Region::Interface } else { Region::Liquid };
        let alpha = self.problem.alpha();
        let value = t.powf(alpha / 2.0) * self.phi_profile(self.eta(x, t))?;
        Ok(FieldSample { value, region })
    }

    /// Spatial gradient T_x(x, t) =
    /// (t^((alpha-1)/2) / a) [ c1 alpha eta M(-alpha/2+1, 3/2, -eta^2)
    ///                       + (c2/2) M(-alpha/2+1/2, 1/2, -eta^2) ],
    /// 0 past the front.
    ///
    /// Exactly on the front the two branches cancel down to an e^(-xi^2)
    /// residue (amplification e^(xi^2) would eat all 8 required digits for
    /// water-sized xi), so that point uses the equivalent Wronskian form
    /// phi'(xi) = -T0 e^(-xi^2) / (xi M(-alpha/2+1/2, 3/2, -xi^2)).
    pub fn temperature_gradient(&self, x: f64, t: f64) -> Result<FieldSample, SolutionError> {
        self.check_point(x, t)?;
        let s = self.front_position(t);
        if x > s {
            return Ok(FieldSample { value: 0.0, region: Region::Solid });
        }
        let alpha = self.problem.alpha();
        let scale = t.powf((alpha - 1.0) / 2.0) / self.problem.a;
        if x == s {
            let xi = self.xi;
            let odd = kummer_m(-alpha / 2.0 + 0.5, 1.5, -(xi * xi))?.value;
            let phi_prime = -self.c1 * (-(xi * xi)).exp() / (xi * odd);
            return Ok(FieldSample { value: scale * phi_prime / 2.0, region: Region::Interface });
        }
        let eta = self.eta(x, t);
        let w = -(eta * eta);
        let even_branch = self.c1 * alpha * eta * kummer_m(-alpha / 2.0 + 1.0, 1.5, w)?.value;
        let odd_branch = self.c2 / 2.0 * kummer_m(-alpha / 2.0 + 0.5, 0.5, w)?.value;
        Ok(FieldSample { value: scale * (even_branch + odd_branch), region: Region::Liquid })
    }

    /// The alpha = 1 temperature in elementary functions:
    /// T = c1 [ sqrt(t) e^(-eta^2) + (sqrt(pi)/2)(x/a) erf(eta) ] + (c2/2)(x/a).
    /// Defined on the liquid region; equals `temperature` there.
    pub fn closed_form_alpha1(&self, x: f64, t: f64) -> Result<f64, SolutionError> {
        let alpha = self.problem.alpha();
        if (alpha - 1.0).abs() > 1e-12 {
            return Err(SolutionError::WrongAlpha { alpha });
        }
        self.check_point(x, t)?;
        let eta = self.eta(x, t);
        let scaled_x = x / self.problem.a;
        const SQRT_PI: f64 = 1.7724538509055160273;
        Ok(self.c1 * (t.sqrt() * (-eta * eta).exp() + SQRT_PI / 2.0 * scaled_x * erf(eta))
            + self.c2 / 2.0 * scaled_x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::{solve_xi, SolverConfig};
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    const SQRT_PI: f64 = 1.7724538509055160273;

    fn solved(p: StefanProblem) -> SimilaritySolution {
        let r = solve_xi(&p, &SolverConfig::default()).unwrap();
        build_solution(&p, r.xi).unwrap()
    }

    #[test]
    fn c1_is_t0_and_classical_c2_matches_erf_form() {
        let sol = solved(StefanProblem::unit(1.0, 0.0, 0.0));
        assert_eq!(sol.c1, 1.0);
        // alpha = 0: T = c1 + c2 (sqrt(pi)/2) erf(eta), zero at eta = xi
        let expected = -2.0 / (SQRT_PI * crate::kummer::erf(sol.xi));
        assert_relative_eq!(sol.c2, expected, max_relative = 1e-13);
    }

    #[test]
    fn classical_temperature_equals_erf_profile() {
        let sol = solved(StefanProblem::unit(1.0, 0.0, 0.0));
        for &t in &[0.1, 1.0, 10.0] {
            let s = sol.front_position(t);
            for i in 0..=20 {
                let x = s * i as f64 / 20.0;
                let eta = sol.eta(x, t);
                let closed = 1.0 - crate::kummer::erf(eta) / crate::kummer::erf(sol.xi);
                let sample = sol.temperature(x, t).unwrap();
                assert!(
                    (sample.value - closed).abs() <= 1e-12,
                    "x={x} t={t}: {} vs {closed}",
                    sample.value
                );
            }
        }
    }

    #[test]
    fn boundary_and_interface_reproduction() {
        for p in [
            StefanProblem::unit(1.0, 0.0, 0.0),
            StefanProblem::unit(5.0, 1.0, 0.0),
            StefanProblem::unit(2.0, 2.5, 0.5),
            StefanProblem::water(10.0, 1.0, -0.5),
        ] {
            let sol = solved(p);
            let alpha = p.alpha();
            for &t in &[0.1f64, 1.0, 10.0, 1000.0] {
                let scale = t.powf(alpha / 2.0) * p.t0;
                let face = sol.temperature(0.0, t).unwrap();
                assert_eq!(face.region, Region::Liquid);
                assert!((face.value - scale).abs() <= 1e-12 * scale);
                let interface = sol.temperature(sol.front_position(t), t).unwrap();
                assert_eq!(interface.region, Region::Interface);
                assert!(interface.value.abs() <= 1e-12 * scale);
            }
        }
    }

    #[test]
    fn solid_region_is_explicit_zero() {
        let sol = solved(StefanProblem::unit(1.0, 0.0, 0.0));
        let t = 2.0;
        let sample = sol.temperature(sol.front_position(t) * 1.5, t).unwrap();
        assert_eq!(sample.value, 0.0);
        assert_eq!(sample.region, Region::Solid);
        let grad = sol.temperature_gradient(sol.front_position(t) * 1.5, t).unwrap();
        assert_eq!(grad.value, 0.0);
        assert_eq!(grad.region, Region::Solid);
    }

    #[test]
    fn evaluation_guards() {
        let sol = solved(StefanProblem::unit(1.0, 0.0, 0.0));
        assert!(matches!(
            sol.temperature(0.1, 0.0),
            Err(SolutionError::NonPositiveTime { .. })
        ));
        assert!(matches!(
            sol.temperature(-0.1, 1.0),
            Err(SolutionError::NegativePosition { .. })
        ));
        assert!(matches!(
            sol.phi_profile(-0.5),
            Err(SolutionError::NegativeEta { .. })
        ));
        assert!(matches!(
            build_solution(&StefanProblem::unit(1.0, 0.0, 0.0), 0.0),
            Err(SolutionError::DegenerateDenominator { .. })
        ));
    }

    #[test]
    fn gradient_matches_central_difference() {
        for p in [
            StefanProblem::unit(1.0, 0.0, 0.0),
            StefanProblem::unit(5.0, 1.0, 0.0),
            StefanProblem::unit(1.0, 2.5, 0.5),
            StefanProblem::water(10.0, 0.0, -1.0),
        ] {
            let sol = solved(p);
            for &t in &[0.5, 2.0] {
                let s = sol.front_position(t);
                let h = 1e-6 * s;
                for &frac in &[0.1, 0.5, 0.9] {
                    let x = frac * s;
                    let fd = (sol.temperature(x + h, t).unwrap().value
                        - sol.temperature(x - h, t).unwrap().value)
                        / (2.0 * h);
                    let grad = sol.temperature_gradient(x, t).unwrap().value;
                    assert_relative_eq!(grad, fd, max_relative = 1e-6);
                }
            }
        }
    }

    #[test]
    fn classical_gradient_closed_form() {
        let sol = solved(StefanProblem::unit(1.0, 0.0, 0.0));
        let (x, t) = (0.4, 1.3);
        let eta = sol.eta(x, t);
        let expected = sol.c2 * (-eta * eta).exp() / (2.0 * sol.problem.a * t.sqrt());
        assert_relative_eq!(
            sol.temperature_gradient(x, t).unwrap().value,
            expected,
            max_relative = 1e-13
        );
    }

    #[test]
    fn stefan_balance_at_the_front() {
        // -k T_x(s(t), t) = gamma s^beta sdot^(delta+1)
        for p in [
            StefanProblem::unit(1.0, 0.0, 0.0),
            StefanProblem::unit(5.0, 1.0, 0.0),
            StefanProblem::unit(2.0, 2.5, 0.5),
            StefanProblem::unit(1.0, 0.0, -1.0),
            StefanProblem::water(10.0, 1.0, -0.5),
        ] {
            let sol = solved(p);
            for &t in &[0.1, 1.0, 100.0] {
                let s = sol.front_position(t);
                let sdot = sol.front_velocity(t);
                let lhs = -p.k * sol.temperature_gradient(s, t).unwrap().value;
                let rhs = p.gamma * s.powf(p.beta) * sdot.powf(p.delta + 1.0);
                assert_relative_eq!(lhs, rhs, max_relative = 1e-8);
            }
        }
    }

    #[test]
    fn phi_profile_endpoints_and_ode() {
        let sol = solved(StefanProblem::unit(3.0, 2.0, 0.5));
        assert_relative_eq!(sol.phi_profile(0.0).unwrap(), 3.0, max_relative = 1e-15);
        assert!(sol.phi_profile(sol.xi).unwrap().abs() <= 1e-12 * sol.c1);
        // phi'' + 2 eta phi' - 2 alpha phi = 0
        let alpha = sol.problem.alpha();
        let h = 1e-4;
        for i in 1..=25 {
            let eta = 0.1 * i as f64;
            let f = |e: f64| sol.phi_profile(e).unwrap();
            let d1 = (f(eta + h) - f(eta - h)) / (2.0 * h);
            let d2 = (f(eta + h) - 2.0 * f(eta) + f(eta - h)) / (h * h);
            let residual = d2 + 2.0 * eta * d1 - 2.0 * alpha * f(eta);
            let scale = sol.c1.abs() + sol.c2.abs();
            assert!(residual.abs() <= 1e-6 * scale, "eta {eta}: {residual}");
        }
    }

    #[test]
    fn front_kinematics() {
        let sol = solved(StefanProblem::unit(1.0, 1.0, 0.0));
        assert_eq!(sol.front_position(0.0), 0.0);
        assert_relative_eq!(
            sol.front_position(1.0),
            2.0 * sol.problem.a * sol.xi,
            max_relative = 1e-15
        );
        for &t in &[0.3, 1.0, 7.0] {
            assert_relative_eq!(
                sol.front_position(4.0 * t),
                2.0 * sol.front_position(t),
                max_relative = 1e-15
            );
            assert_relative_eq!(
                sol.front_velocity(4.0 * t),
                sol.front_velocity(t) / 2.0,
                max_relative = 1e-15
            );
            let h = 1e-6 * t;
            let fd = (sol.front_position(t + h) - sol.front_position(t - h)) / (2.0 * h);
            assert_relative_eq!(fd, sol.front_velocity(t), max_relative = 1e-8);
        }
    }

    #[test]
    fn alpha1_closed_form_agrees_with_kummer_form() {
        for p in [StefanProblem::unit(1.0, 1.0, 0.0), StefanProblem::unit(4.0, 0.0, -1.0)] {
            let sol = solved(p);
            assert_eq!(p.alpha(), 1.0);
            for &t in &[0.2, 1.0, 9.0] {
                let s = sol.front_position(t);
                let scale = t.sqrt() * p.t0;
                // interface annihilation in the elementary form
                assert!(sol.closed_form_alpha1(s, t).unwrap().abs() <= 1e-12 * scale);
                assert_relative_eq!(
                    sol.closed_form_alpha1(0.0, t).unwrap(),
                    p.t0 * t.sqrt(),
                    max_relative = 1e-15
                );
                for i in 1..20 {
                    let x = s * i as f64 / 20.0;
                    let kummer = sol.temperature(x, t).unwrap().value;
                    let closed = sol.closed_form_alpha1(x, t).unwrap();
                    assert!(
                        (kummer - closed).abs() <= 1e-12 * kummer.abs().max(1e-3 * scale),
                        "x={x} t={t}: {kummer} vs {closed}"
                    );
                }
            }
        }
    }

    #[test]
    fn alpha1_closed_form_rejects_other_alpha() {
        let sol = solved(StefanProblem::unit(1.0, 0.0, 0.0));
        assert!(matches!(
            sol.closed_form_alpha1(0.1, 1.0),
            Err(SolutionError::WrongAlpha { .. })
        ));
    }

    proptest! {
        // T(lambda x, lambda^2 t) = lambda^alpha T(x, t)
        #[test]
        fn self_similarity(
            lambda in 0.25f64..4.0,
            frac in 0.0f64..1.0,
            t in 0.1f64..10.0,
        ) {
            for p in [StefanProblem::unit(1.0, 0.0, 0.0), StefanProblem::unit(2.0, 1.5, -0.5)] {
                let sol = solved(p);
                let alpha = p.alpha();
                let x = frac * sol.front_position(t);
                let base = sol.temperature(x, t).unwrap().value;
                let scaled = sol
                    .temperature(lambda * x, lambda * lambda * t)
                    .unwrap()
                    .value;
                let tol = 1e-12 * (lambda * lambda * t).powf(alpha / 2.0) * p.t0;
                prop_assert!(
                    (scaled - lambda.powf(alpha) * base).abs() <= tol,
                    "lambda={lambda} frac={frac} t={t}: {scaled} vs {}",
                    lambda.powf(alpha) * base
                );
            }
        }
    }
}
