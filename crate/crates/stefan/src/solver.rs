//! Root finder for the front coefficient: a safeguarded Newton iteration on
//! H(z) = C f(z) - z^(beta+delta+1) inside a certified sign-change bracket.
//!
//! H decreases through its unique positive zero, so the bracket [lo, hi]
//! with H(lo) > 0 > H(hi) never loses the root. Newton steps that would
//! leave the bracket are replaced by bisection; a few log-space bisections
//! come first because f is so steep near 0 that raw Newton from a bad seed
//! can overshoot to z <= 0.

use crate::model::{ModelError, StefanProblem, Violation};
use std::fmt;

/// Iteration tolerances and bracketing parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverConfig {
    /// Absolute step stopping rule: accept z_k once |z_k - z_{k-1}| < step_tol.
    pub step_tol: f64,
    /// Fallback rule: accept once |H(z)| <= residual_tol * C f(z). Needed for
    /// coefficient scales (water: C ~ 2e6) where the step rule alone can
    /// stall at the limits of double precision.
    pub residual_tol: f64,
    pub max_iter: usize,
    /// First probe for the lower bracket end.
    pub bracket_lo_seed: f64,
    /// Geometric growth factor for bracket expansion, > 1.
    pub bracket_growth: f64,
    /// Retain the iterate history in the result (off by default: sweeps over
    /// thousands of points should not allocate per-iteration history).
    pub keep_trace: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            step_tol: 1e-15,
            residual_tol: 1e-14,
            max_iter: 200,
            bracket_lo_seed: 1e-6,
            bracket_growth: 2.0,
            keep_trace: false,
        }
    }
}

/// A converged (or best-effort) root, with enough diagnostics to audit the
/// stopping rule that fired.
#[derive(Debug, Clone, PartialEq)]
pub struct SolveResult {
    pub xi: f64,
    pub iterations: usize,
    pub final_step: f64,
    pub final_residual: f64,
    /// Bracket at termination; lo < xi < hi.
    pub bracket: (f64, f64),
    pub converged: bool,
    pub trace: Option<Vec<f64>>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum SolverError {
    InvalidProblem(Vec<Violation>),
    /// Geometric growth left the overflow-safe domain without a sign change.
    BracketNotFound { last_probe: f64 },
    MaxIterationsExceeded { iterations: usize, best: f64 },
    Model(ModelError),
}

impl fmt::Display for SolverError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolverError::InvalidProblem(v) => {
                write!(f, "invalid problem:")?;
                for violation in v {
                    write!(f, " {violation};")?;
                }
                Ok(())
            }
            SolverError::BracketNotFound { last_probe } => {
                write!(f, "no sign change found up to z = {last_probe}")
            }
            SolverError::MaxIterationsExceeded { iterations, best } => {
                write!(f, "no convergence after {iterations} iterations (best iterate {best})")
            }
            SolverError::Model(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for SolverError {}

impl From<ModelError> for SolverError {
    fn from(e: ModelError) -> Self {
        SolverError::Model(e)
    }
}

/// Hard ends of the bracket search; far beyond any representable root.
const MIN_LO: f64 = 1e-300;
const MAX_HI: f64 = 1e160;

/// Number of log-space bisections before Newton takes over.
const SEED_BISECTIONS: usize = 5;

/// Find lo < hi with H(lo) > 0 > H(hi) by geometric expansion from the seed
/// (shrinking the seed first if it starts on the wrong side).
pub fn bracket_root(p: &StefanProblem, cfg: &SolverConfig) -> Result<(f64, f64), SolverError> {
    p.validate().map_err(SolverError::InvalidProblem)?;
    let mut lo = cfg.bracket_lo_seed;
    while p.h_of(lo)? <= 0.0 {
        lo /= cfg.bracket_growth;
        if lo < MIN_LO {
            return Err(SolverError::BracketNotFound { last_probe: lo });
        }
    }
    let mut hi = lo * cfg.bracket_growth;
    while p.h_of(hi)? > 0.0 {
        lo = hi;
        hi *= cfg.bracket_growth;
        if hi > MAX_HI {
            return Err(SolverError::BracketNotFound { last_probe: hi });
        }
    }
    Ok((lo, hi))
}

/// Solve H(xi) = 0 for the unique positive front coefficient.
///
/// Iterates z_k = z_{k-1} - H(z_{k-1})/H'(z_{k-1}), replaced by the bracket
/// midpoint whenever the Newton step is non-finite or leaves the bracket.
/// Stops on |z_k - z_{k-1}| < step_tol or |H| <= residual_tol * C f(z).
/// Deterministic: identical inputs give bit-identical results.
pub fn solve_xi(p: &StefanProblem, cfg: &SolverConfig) -> Result<SolveResult, SolverError> {
    let (mut lo, mut hi) = bracket_root(p, cfg)?;
    let mut iterations = 0usize;
    let mut trace: Option<Vec<f64>> = cfg.keep_trace.then(Vec::new);

    let record = |t: &mut Option<Vec<f64>>, z: f64| {
        if let Some(v) = t.as_mut() {
            v.push(z);
        }
    };

    // log-space bisection seed phase
    for _ in 0..SEED_BISECTIONS.min(cfg.max_iter) {
        let mid = (lo * hi).sqrt();
        let h = p.h_of(mid)?;
        iterations += 1;
        record(&mut trace, mid);
        if h > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }

    let mut z = (lo * hi).sqrt();
    let mut last_step = 0.0f64;
    loop {
        let (lhs, rhs) = p.balance(z)?;
        let h = lhs - rhs;
        // convergence check precedes the bracket update: z is strictly
        // inside (lo, hi) here, so the returned bracket certifies the root
        if h == 0.0 || h.abs() <= cfg.residual_tol * lhs.abs() {
            return Ok(SolveResult {
                xi: z,
                iterations,
                final_step: last_step,
                final_residual: h,
                bracket: (lo, hi),
                converged: true,
                trace,
            });
        }
        if h > 0.0 {
            lo = z;
        } else {
            hi = z;
        }
        if iterations >= cfg.max_iter {
            return Err(SolverError::MaxIterationsExceeded { iterations, best: z });
        }
        let hp = p.h_prime(z)?;
        let newton = z - h / hp;
        let next = if newton.is_finite() && newton > lo && newton < hi {
            newton
        } else {
            0.5 * (lo + hi)
        };
        let step = (next - z).abs();
        iterations += 1;
        record(&mut trace, next);
        if step < cfg.step_tol {
            let residual = p.h_of(next)?;
            return Ok(SolveResult {
                xi: next,
                iterations,
                final_step: step,
                final_residual: residual,
                bracket: (lo, hi),
                converged: true,
                trace,
            });
        }
        last_step = step;
        z = next;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kummer::{erf, lambert_w0};
    use approx::assert_relative_eq;

    const SQRT_PI: f64 = 1.7724538509055160273;

    /// Independent bisection on the classical transcendental equation
    /// sqrt(pi) z erf(z) e^(z^2) = Ste.
    fn neumann_bisect(ste: f64) -> f64 {
        let g = |z: f64| SQRT_PI * z * erf(z) * (z * z).exp() - ste;
        let (mut lo, mut hi) = (1e-12, 30.0);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if g(mid) > 0.0 {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        0.5 * (lo + hi)
    }

    #[test]
    fn classical_unit_case() {
        let p = StefanProblem::unit(1.0, 0.0, 0.0);
        let r = solve_xi(&p, &SolverConfig::default()).unwrap();
        assert!(r.converged);
        // C = 1/2 corresponds to Ste = kT0/(gamma a^2) = 1
        assert_relative_eq!(r.xi, neumann_bisect(1.0), max_relative = 1e-12);
        assert_relative_eq!(r.xi, 0.6200626333135956, max_relative = 1e-13);
    }

    #[test]
    fn threshold_gradient_case_matches_lambert() {
        // beta = 0, delta = -1: H = C e^(-z^2)/z - 1, root sqrt(W(2 C^2)/2)
        let p = StefanProblem::new(2.0, 1.0, 1.0, 1.0, 0.0, -1.0);
        assert_relative_eq!(p.stefan_coefficient(), 1.0, max_relative = 1e-15);
        let r = solve_xi(&p, &SolverConfig::default()).unwrap();
        let expected = (lambert_w0(2.0).unwrap() / 2.0).sqrt();
        assert_relative_eq!(r.xi, expected, max_relative = 1e-12);
        assert_relative_eq!(r.xi, 0.6529186404192047, max_relative = 1e-13);
    }

    #[test]
    fn water_xi_grows_with_t0() {
        let cfg = SolverConfig::default();
        let xs: Vec<f64> = [1.0, 5.0, 10.0]
            .iter()
            .map(|&t0| solve_xi(&StefanProblem::water(t0, 0.0, 0.0), &cfg).unwrap().xi)
            .collect();
        assert!(xs[0] < xs[1] && xs[1] < xs[2], "{xs:?}");
        // Ste ~ 4.17e6 for T0 = 1
        assert_relative_eq!(xs[0], neumann_bisect(0.58 / 1.39e-7), max_relative = 1e-10);
    }

    #[test]
    fn bracket_certifies_sign_change() {
        let cfg = SolverConfig::default();
        for p in [
            StefanProblem::unit(1.0, 0.0, 0.0),
            StefanProblem::unit(10.0, 2.0, -0.5),
            StefanProblem::water(5.0, 1.0, 0.0),
        ] {
            let (lo, hi) = bracket_root(&p, &cfg).unwrap();
            assert!(lo < hi);
            assert!(p.h_of(lo).unwrap() > 0.0);
            assert!(p.h_of(hi).unwrap() <= 0.0);
            let xi = solve_xi(&p, &cfg).unwrap().xi;
            assert!(lo < xi && xi < hi);
        }
    }

    #[test]
    fn result_invariants_hold() {
        let cfg = SolverConfig::default();
        for p in [
            StefanProblem::unit(1.0, 0.0, 0.0),
            StefanProblem::unit(1.0, 1.0, 0.0),
            StefanProblem::unit(3.0, 2.0, 0.5),
            StefanProblem::water(10.0, 0.0, -1.0),
        ] {
            let r = solve_xi(&p, &cfg).unwrap();
            assert!(r.converged);
            assert!(r.bracket.0 < r.xi && r.xi < r.bracket.1);
            // certification: tight sign change or small scaled residual
            let pad = 10.0 * cfg.step_tol * r.xi.max(1.0);
            let sign_change =
                p.h_of(r.xi - pad).unwrap() > 0.0 && p.h_of(r.xi + pad).unwrap() < 0.0;
            let (lhs, _) = p.balance(r.xi).unwrap();
            let residual_ok = r.final_residual.abs() <= cfg.residual_tol * lhs;
            assert!(sign_change || residual_ok, "uncertified root for {p:?}");
        }
    }

    #[test]
    fn determinism_is_bitwise() {
        let p = StefanProblem::water(5.0, 1.0, -0.5);
        let cfg = SolverConfig { keep_trace: true, ..SolverConfig::default() };
        let a = solve_xi(&p, &cfg).unwrap();
        let b = solve_xi(&p, &cfg).unwrap();
        assert_eq!(a.xi.to_bits(), b.xi.to_bits());
        assert_eq!(a.iterations, b.iterations);
        assert_eq!(a.trace, b.trace);
    }

    #[test]
    fn trace_records_every_iteration() {
        let p = StefanProblem::unit(1.0, 0.0, 0.0);
        let cfg = SolverConfig { keep_trace: true, ..SolverConfig::default() };
        let r = solve_xi(&p, &cfg).unwrap();
        assert_eq!(r.trace.as_ref().unwrap().len(), r.iterations);
        let plain = solve_xi(&p, &SolverConfig::default()).unwrap();
        assert!(plain.trace.is_none());
    }

    #[test]
    fn iteration_budget_is_modest() {
        let cfg = SolverConfig::default();
        for &beta in &[-0.5, 0.0, 0.5, 1.0, 2.0] {
            for &delta in &[-1.0, -0.5, 0.0, 0.5] {
                let p = StefanProblem::unit(1.0, beta, delta);
                if !p.is_valid() {
                    continue;
                }
                let r = solve_xi(&p, &cfg).unwrap();
                assert!(r.converged);
                assert!(r.iterations <= 50, "{beta},{delta}: {} iters", r.iterations);
            }
        }
    }

    #[test]
    fn unique_sign_change_over_log_grid() {
        let cfg = SolverConfig::default();
        for p in [
            StefanProblem::unit(1.0, 0.0, 0.0),
            StefanProblem::unit(5.0, 1.5, -0.75),
            StefanProblem::water(10.0, 1.0, 0.0),
        ] {
            let (_, hi) = bracket_root(&p, &cfg).unwrap();
            let lo = cfg.bracket_lo_seed;
            let mut changes = 0;
            let mut prev = p.h_of(lo).unwrap().signum();
            for i in 1..1000 {
                let z = lo * (hi / lo).powf(i as f64 / 999.0);
                let s = p.h_of(z).unwrap().signum();
                if s != prev {
                    changes += 1;
                    prev = s;
                }
            }
            assert_eq!(changes, 1, "expected exactly one sign change for {p:?}");
        }
    }

    #[test]
    fn invalid_problem_is_rejected() {
        let p = StefanProblem::unit(1.0, 0.0, 0.5); // alpha = -0.5
        match solve_xi(&p, &SolverConfig::default()) {
            Err(SolverError::InvalidProblem(v)) => assert!(!v.is_empty()),
            other => panic!("expected InvalidProblem, got {other:?}"),
        }
    }

    #[test]
    fn iteration_cap_is_enforced() {
        let p = StefanProblem::water(10.0, 1.0, 0.0);
        let cfg = SolverConfig { max_iter: 2, ..SolverConfig::default() };
        match solve_xi(&p, &cfg) {
            Err(SolverError::MaxIterationsExceeded { iterations, .. }) => {
                assert!(iterations <= 2)
            }
            other => panic!("expected MaxIterationsExceeded, got {other:?}"),
        }
    }

    #[test]
    fn small_coefficient_shrinks_lower_bracket() {
        // C ~ 3.5e-17 puts the root near 2.6e-7, below the default seed
        let p = StefanProblem::new(1e-16, 1.0, 1.0, 1.0, 0.5, 0.0);
        let cfg = SolverConfig::default();
        let (lo, hi) = bracket_root(&p, &cfg).unwrap();
        assert!(lo < cfg.bracket_lo_seed);
        assert!(p.h_of(lo).unwrap() > 0.0 && p.h_of(hi).unwrap() < 0.0);
        let r = solve_xi(&p, &cfg).unwrap();
        assert!(r.converged && r.xi < 1e-4);
    }
}
