//! Evaluating the temperature field T(x, t) across the moving front, and
//! the self-similar structure that makes the solution exact: scaling
//! (x, t) -> (lambda x, lambda^2 t) multiplies the field by lambda^alpha.
//!
//! Run with `cargo run --example temperature_profile`.

use stefan::{build_solution, solve_xi, SolverConfig, StefanProblem};

fn main() {
    // a fractional-exponent law: L = gamma s^1.2 sdot^0.3, alpha = 0.9
    let p = StefanProblem::unit(1.0, 1.2, 0.3);
    let r = solve_xi(&p, &SolverConfig::default()).expect("inside the validity region");
    let sol = build_solution(&p, r.xi).expect("positive root");
    println!(
        "beta = {}, delta = {}, alpha = {}; xi = {:.12}\n",
        p.beta,
        p.delta,
        p.alpha(),
        sol.xi
    );

    for t in [0.5, 2.0] {
        let s = sol.front_position(t);
        println!("t = {t}: front at s = {s:.9}, speed {:.9}", sol.front_velocity(t));
        println!("{:>10}  {:>8}  {:>14}  {:>10}", "x", "eta", "T", "region");
        for j in 0..=8 {
            let x = 1.25 * s * j as f64 / 8.0;
            let sample = sol.temperature(x, t).unwrap();
            println!(
                "{:>10.6}  {:>8.5}  {:>14.9}  {:>10}",
                x,
                sol.eta(x, t),
                sample.value,
                sample.region.as_str()
            );
        }
        // melt boundary condition: T vanishes exactly on x = s(t)
        assert!(sol.temperature(s, t).unwrap().value.abs() <= 1e-12);
        println!();
    }

    // self-similarity: T(lambda x, lambda^2 t) = lambda^alpha T(x, t)
    let (x, t, lambda) = (0.4, 0.7, 3.0);
    let base = sol.temperature(x, t).unwrap().value;
    let scaled = sol.temperature(lambda * x, lambda * lambda * t).unwrap().value;
    let predicted = lambda.powf(p.alpha()) * base;
    println!("self-similarity at (x, t) = ({x}, {t}), lambda = {lambda}:");
    println!("  T(lx, l^2 t) = {scaled:.15}");
    println!("  l^a T(x, t)  = {predicted:.15}");
    assert!((scaled - predicted).abs() <= 1e-12 * predicted.abs().max(1.0));
}
