//! Latent heat growing linearly with the front position (beta = 1,
//! delta = 0, hence alpha = 1). The Kummer profile then collapses to
//! elementary functions:
//!
//!   T(x,t) = c1 [ sqrt(t) e^(-eta^2) + (sqrt(pi)/2) (x/a) erf(eta) ]
//!          + (c2/2) (x/a)
//!
//! `closed_form_alpha1` evaluates that expression; here it is pitted
//! against the general series evaluation across the liquid region.
//!
//! Run with `cargo run --example linear_latent_heat`.

use stefan::{build_solution, solve_xi, SolverConfig, StefanProblem};

fn main() {
    let p = StefanProblem::unit(1.0, 1.0, 0.0);
    let r = solve_xi(&p, &SolverConfig::default()).expect("valid problem");
    let sol = build_solution(&p, r.xi).expect("positive root");
    println!("beta = 1, delta = 0, T0 = 1 on the unit material");
    println!("xi = {:.16}, c1 = {:.16}, c2 = {:.16}\n", sol.xi, sol.c1, sol.c2);

    println!("{:>6} {:>6}  {:>22}  {:>22}  {:>9}", "t", "x", "series", "closed form", "|diff|");
    let mut worst = 0.0f64;
    for t in [0.25, 1.0, 4.0] {
        let s = sol.front_position(t);
        for i in 1..=5 {
            let x = s * i as f64 / 6.0;
            let series = sol.temperature(x, t).unwrap().value;
            let closed = sol.closed_form_alpha1(x, t).unwrap();
            let diff = (series - closed).abs();
            worst = worst.max(diff);
            println!("{t:>6} {x:>6.3}  {series:>22.16}  {closed:>22.16}  {diff:>9.2e}");
        }
    }
    println!("\nlargest deviation: {worst:.2e}");
    assert!(worst <= 1e-12, "closed form must match the series route");

    // the other alpha = 1 member: beta = 0, delta = -1 uses the same profile
    let q = StefanProblem::unit(1.0, 0.0, -1.0);
    let rq = solve_xi(&q, &SolverConfig::default()).unwrap();
    let solq = build_solution(&q, rq.xi).unwrap();
    let x = 0.5 * solq.front_position(1.0);
    let d = (solq.temperature(x, 1.0).unwrap().value - solq.closed_form_alpha1(x, 1.0).unwrap()).abs();
    println!("beta = 0, delta = -1 midpoint check: |series - closed| = {d:.2e}");
    assert!(d <= 1e-12);
}
