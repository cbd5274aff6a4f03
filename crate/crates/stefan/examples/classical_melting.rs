//! Constant latent heat (beta = delta = 0): the textbook melting problem.
//!
//! The front coefficient then solves sqrt(pi) xi erf(xi) exp(xi^2) = Ste,
//! and the general Kummer-based solver must land on exactly that root.
//! Run with `cargo run --example classical_melting`.

use stefan::oracle::neumann_xi;
use stefan::{build_solution, solve_xi, SolverConfig, StefanProblem};

fn main() {
    let cfg = SolverConfig::default();
    println!("liquid water, k = 0.58 W/(m C), a^2 = 1.39e-7 m^2/s, gamma = 1\n");
    println!(
        "{:>5}  {:>22}  {:>22}  {:>9}  {:>12}",
        "T0", "xi (general solver)", "xi (error-function)", "|diff|", "s(1 day) [m]"
    );
    for t0 in [1.0, 5.0, 10.0] {
        let p = StefanProblem::water(t0, 0.0, 0.0);
        let r = solve_xi(&p, &cfg).expect("classical case always solvable");
        // beta = delta = 0 collapses the balance to the error-function form
        // with Stefan number 2C
        let reference = neumann_xi(2.0 * p.stefan_coefficient());
        let sol = build_solution(&p, r.xi).expect("valid problem");
        let day = 86_400.0;
        println!(
            "{:>5}  {:>22.16}  {:>22.16}  {:>9.2e}  {:>12.6}",
            t0,
            r.xi,
            reference,
            (r.xi - reference).abs(),
            sol.front_position(day)
        );
        assert!((r.xi - reference).abs() <= 1e-10 * r.xi);
    }

    // dimensionless sanity point: Ste = 1 has a well-known coefficient
    let xi_ste1 = neumann_xi(1.0);
    println!("\nxi at Ste = 1: {xi_ste1:.16}");
    assert!((xi_ste1 - 0.620_062_633_313_595_6).abs() <= 1e-12);
}
