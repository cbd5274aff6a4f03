//! Velocity-inverse latent heat (beta = 0, delta = -1): absorbing the front
//! costs energy in proportion to 1/sdot, so beta + delta + 1 = 0 and the
//! balance degenerates to C f(xi) = 1. That case closes in Lambert W:
//! xi = sqrt(W(2 C^2) / 2).
//!
//! Run with `cargo run --example threshold_gradient`.

use stefan::kummer::lambert_w0;
use stefan::oracle::lambert_xi;
use stefan::{build_solution, solve_xi, SolverConfig, StefanProblem};

fn main() {
    let cfg = SolverConfig::default();
    println!(
        "{:>8}  {:>22}  {:>22}  {:>9}",
        "C", "xi (general solver)", "xi (Lambert W)", "|diff|"
    );
    for c in [0.1, 0.5, 1.0, 4.0, 10.0] {
        // unit material with T0 chosen so the balance coefficient equals c:
        // C = k T0 / (gamma a^(beta+delta+2) 2^(beta+1)) = T0 / 2 here
        let p = StefanProblem::unit(2.0 * c, 0.0, -1.0);
        assert!((p.stefan_coefficient() - c).abs() <= 1e-15 * c);
        let r = solve_xi(&p, &cfg).expect("valid problem");
        let closed = lambert_xi(c);
        println!(
            "{:>8}  {:>22.16}  {:>22.16}  {:>9.2e}",
            c,
            r.xi,
            closed,
            (r.xi - closed).abs()
        );
        assert!((r.xi - closed).abs() <= 1e-10 * r.xi);
    }

    // alpha = beta - delta = 1 here, so the front grows like sqrt(t) while
    // the face gradient stays time-independent in similarity scale
    let p = StefanProblem::unit(2.0, 0.0, -1.0);
    let r = solve_xi(&p, &cfg).unwrap();
    let sol = build_solution(&p, r.xi).unwrap();
    println!("\nface gradient at t = 1, 4, 9 (alpha = 1 scales it like t^0):");
    for t in [1.0, 4.0, 9.0] {
        let g = sol.temperature_gradient(0.0, t).unwrap().value;
        println!("  t = {t}: dT/dx(0, t) = {g:.12}");
    }

    let w2 = lambert_w0(2.0).unwrap();
    println!("\nW(2)        = {w2:.16}");
    println!("sqrt(W(2)/2) = {:.16} (the C = 1 coefficient)", (w2 / 2.0).sqrt());
    assert!(((w2 / 2.0).sqrt() - 0.652_918_640_419_204_7).abs() <= 1e-12);
}
