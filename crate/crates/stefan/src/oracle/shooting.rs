//! Independent route to the front coefficient: integrate the similarity ODE
//!
//! ```text
//! phi'' = -2 eta phi' + 2 alpha phi,      eta in [0, xi],
//! ```
//!
//! with a classical 4th-order one-step method and shoot on the interface
//! energy balance. Nothing here evaluates hypergeometric series; agreement
//! with the series-based solver is the point of this module.

/// Integrate the two fundamental solutions and superpose them so the profile
/// vanishes at the trial front: phi = T0 u + d v with u(0)=1, u'(0)=0,
/// v(0)=0, v'(0)=1 and d = -T0 u(xi)/v(xi).
///
/// Returns (phi(xi), phi'(xi)). The first is ~0 by construction; the second
/// is the quantity the energy balance needs. `steps` must be at least 100.
pub fn ode_shoot(alpha: f64, t0: f64, xi_trial: f64, steps: usize) -> (f64, f64) {
    assert!(steps >= 100, "integrator needs at least 100 steps");
    assert!(xi_trial > 0.0, "trial front coefficient must be positive");
    let (u, _up) = integrate(alpha, xi_trial, steps, 1.0, 0.0);
    let (v, _vp) = integrate(alpha, xi_trial, steps, 0.0, 1.0);
    let d = -t0 * u / v;
    // phi' = t0 u' + d v' algebraically, but u' and v' cancel down to an
    // e^(-xi^2) residue there (hopeless in floating point for water-sized
    // fronts). Abel's identity pins the Wronskian of this ODE exactly:
    // u v' - u' v = e^(-eta^2), hence phi'(xi) = -t0 e^(-xi^2) / v(xi).
    let phi_prime = -t0 * (-xi_trial * xi_trial).exp() / v;
    (t0 * u + d * v, phi_prime)
}

/// One fundamental solution: y'' = -2 eta y' + 2 alpha y from given initial
/// data, fixed-step 4th-order Runge-Kutta. Returns (y, y') at eta = end.
fn integrate(alpha: f64, end: f64, steps: usize, y0: f64, yp0: f64) -> (f64, f64) {
    let h = end / steps as f64;
    let rhs = |eta: f64, y: f64, yp: f64| (yp, -2.0 * eta * yp + 2.0 * alpha * y);
    let mut y = y0;
    let mut yp = yp0;
    for i in 0..steps {
        let eta = i as f64 * h;
        let (k1y, k1p) = rhs(eta, y, yp);
        let (k2y, k2p) = rhs(eta + 0.5 * h, y + 0.5 * h * k1y, yp + 0.5 * h * k1p);
        let (k3y, k3p) = rhs(eta + 0.5 * h, y + 0.5 * h * k2y, yp + 0.5 * h * k2p);
        let (k4y, k4p) = rhs(eta + h, y + h * k3y, yp + h * k3p);
        y += h / 6.0 * (k1y + 2.0 * k2y + 2.0 * k3y + k4y);
        yp += h / 6.0 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p);
    }
    (y, yp)
}
