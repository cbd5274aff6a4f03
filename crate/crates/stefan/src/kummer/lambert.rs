//! Principal branch of the Lambert W function, the closed-form route for the
//! beta = 0, delta = -1 front coefficient: z*e^(z^2) = C gives
//! xi = sqrt(W(2C^2)/2).

use super::SpecialError;

/// W0(x): the solution w >= -1 of w*e^w = x, defined for x >= -1/e.
///
/// Seeded piecewise (branch-point series near -1/e, log-based guess for
/// large x) and polished with Halley iterations until the scaled residual
/// |w*e^w - x| <= 1e-15 * max(1, |x|) or the step stagnates.
pub fn lambert_w0(x: f64) -> Result<f64, SpecialError> {
    let branch_point = -(-1.0f64).exp(); // -1/e
    if x.is_nan() || x < branch_point {
        return Err(SpecialError::BelowBranchPoint { x });
    }
    if x == 0.0 {
        return Ok(0.0);
    }

    let mut w = if x < -0.25 {
        // series around the branch point in p = sqrt(2(e*x + 1))
        let p = (2.0 * (std::f64::consts::E * x + 1.0)).max(0.0).sqrt();
        -1.0 + p - p * p / 3.0 + 11.0 / 72.0 * p * p * p
    } else if x < std::f64::consts::E {
        // ln(1+x) tracks W0 well on the middle range
        x.ln_1p()
    } else {
        let l = x.ln();
        l - l.ln()
    };

    let tol = 1e-15 * x.abs().max(1.0);
    for _ in 0..60 {
        let ew = w.exp();
        let res = w * ew - x;
        if res.abs() <= tol {
            break;
        }
        // Halley step
        let denom = ew * (w + 1.0) - (w + 2.0) * res / (2.0 * w + 2.0);
        let step = res / denom;
        w -= step;
        if step.abs() <= f64::EPSILON * w.abs() {
            break;
        }
    }
    Ok(w)
}
