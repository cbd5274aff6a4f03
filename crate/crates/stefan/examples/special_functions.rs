//! The special-function layer on its own: Kummer's M, the Tricomi U, the
//! erf family and its repeated integrals, gamma, Lambert W, and the
//! cross-identity suite that ties them together.
//!
//! Run with `cargo run --example special_functions`.

use stefan::kummer::identities::run_identity_suite;
use stefan::kummer::{
    erf, erfc, gamma_fn, inerfc, kummer_m, kummer_m_dz, kummer_u, lambert_w0, pochhammer,
};

fn main() {
    // M(a, b, z) across the three evaluation regimes
    println!("Kummer M(a, b, z):");
    for (a, b, z) in [(0.5, 1.5, 2.0), (0.5, 1.5, -2.0), (-1.5, 0.5, -9.0), (2.0, 3.0, 80.0)] {
        let m = kummer_m(a, b, z).unwrap();
        println!(
            "  M({a:>4}, {b}, {z:>5}) = {:>24.16e}   [{:?}, {} terms]",
            m.value, m.method, m.terms_used
        );
    }

    // the transform behind the negative-z route: M(a,b,z) = e^z M(b-a,b,-z)
    let (a, b, z) = (0.75, 1.25, 3.5);
    let lhs = kummer_m(a, b, z).unwrap().value;
    let rhs = z.exp() * kummer_m(b - a, b, -z).unwrap().value;
    println!("\nKummer transform residual at (0.75, 1.25, 3.5): {:.2e}", (lhs - rhs).abs());

    // the bridge the temperature profile stands on:
    // M(1/2, 3/2, -z^2) = sqrt(pi) erf(z) / (2 z)
    let z = 1.3;
    let bridge = kummer_m(0.5, 1.5, -z * z).unwrap().value;
    let closed = f64::sqrt(std::f64::consts::PI) * erf(z) / (2.0 * z);
    println!("erf bridge residual at z = 1.3: {:.2e}", (bridge - closed).abs());

    // derivative against a central difference
    let d = kummer_m_dz(0.5, 1.5, 0.8).unwrap();
    let h = 1e-6;
    let fd = (kummer_m(0.5, 1.5, 0.8 + h).unwrap().value
        - kummer_m(0.5, 1.5, 0.8 - h).unwrap().value)
        / (2.0 * h);
    println!("dM/dz vs central difference: {:.2e}", (d - fd).abs());

    // companions
    println!("\ngamma(1/2)^2         = {:.16} (pi)", gamma_fn(0.5).unwrap().powi(2));
    println!("pochhammer(3, 4)     = {} (3*4*5*6)", pochhammer(3.0, 4));
    println!("erfc(1) + erf(1)     = {:.16}", erfc(1.0) + erf(1.0));
    println!("i^2erfc(0)           = {:.16} (1/4)", inerfc(2, 0.0).unwrap());
    println!("W(1)                 = {:.16} (omega constant)", lambert_w0(1.0).unwrap());
    println!("U(1, 1.5, 2)         = {:.16}", kummer_u(1.0, 1.5, 2.0).unwrap());

    // the whole identity suite, as the verifier runs it
    println!("\nidentity suite:");
    let mut all_ok = true;
    for check in run_identity_suite() {
        println!(
            "  {:<28} max error {:>9.2e}  (tolerance {:>7.1e})  {}",
            check.name,
            check.max_error,
            check.tolerance,
            if check.passed { "ok" } else { "FAILED" }
        );
        all_ok &= check.passed;
    }
    assert!(all_ok);
}
