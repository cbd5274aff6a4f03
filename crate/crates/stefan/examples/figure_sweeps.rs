//! Parameter sweeps of the front coefficient: xi against delta (fixed
//! beta = 0), against beta (fixed delta = 0), and against T0, for liquid
//! water. These are the curve families one plots when mapping how strongly
//! the latent-heat exponents brake or release the front.
//!
//! Points outside the validity region (alpha < 0, i.e. delta > beta) are
//! reported as such rather than skipped silently.
//!
//! Run with `cargo run --example figure_sweeps`.

use stefan::{solve_xi, SolverConfig, StefanProblem};

fn sweep<F: Fn(f64, f64) -> StefanProblem>(
    label: &str,
    lo: f64,
    hi: f64,
    n: usize,
    make: F,
) -> Vec<(f64, Vec<Option<f64>>)> {
    let cfg = SolverConfig::default();
    let t0s = [1.0, 5.0, 10.0];
    println!("{label}");
    println!("{:>8}  {:>14}  {:>14}  {:>14}", "value", "xi (T0=1)", "xi (T0=5)", "xi (T0=10)");
    let mut rows = Vec::new();
    for i in 0..n {
        let v = lo + (hi - lo) * i as f64 / (n - 1) as f64;
        let xis: Vec<Option<f64>> = t0s
            .iter()
            .map(|&t0| {
                let p = make(v, t0);
                p.validate().ok().and_then(|_| solve_xi(&p, &cfg).ok().map(|r| r.xi))
            })
            .collect();
        let cell = |o: &Option<f64>| match o {
            Some(x) => format!("{x:>14.9}"),
            None => format!("{:>14}", "outside"),
        };
        println!("{:>8.2}  {}  {}  {}", v, cell(&xis[0]), cell(&xis[1]), cell(&xis[2]));
        rows.push((v, xis));
    }
    println!();
    rows
}

fn main() {
    let delta_rows = sweep("sweep delta in [-1, 1], beta = 0 (water):", -1.0, 1.0, 11, |d, t0| {
        StefanProblem::water(t0, 0.0, d)
    });
    let beta_rows = sweep("sweep beta in [-1, 1], delta = 0 (water):", -1.0, 1.0, 11, |b, t0| {
        StefanProblem::water(t0, b, 0.0)
    });

    println!("sweep T0 in [1, 10], beta = delta = 0 (water):");
    println!("{:>8}  {:>14}", "T0", "xi");
    let cfg = SolverConfig::default();
    let mut t0_xis = Vec::new();
    for i in 0..10 {
        let t0 = 1.0 + 9.0 * i as f64 / 9.0;
        let xi = solve_xi(&StefanProblem::water(t0, 0.0, 0.0), &cfg).unwrap().xi;
        println!("{t0:>8.2}  {xi:>14.9}");
        t0_xis.push(xi);
    }
    assert!(t0_xis.windows(2).all(|w| w[0] < w[1]));
    println!();

    // the monotone trends the curves display: a larger delta or beta weakens
    // the effective latent heat along the trajectory, so the front speeds up;
    // a hotter face does too
    for rows in [&delta_rows, &beta_rows] {
        for col in 0..3 {
            let valid: Vec<f64> = rows.iter().filter_map(|(_, xs)| xs[col]).collect();
            assert!(
                valid.windows(2).all(|w| w[0] < w[1]),
                "xi must increase along the sweep"
            );
        }
    }
    for (_, xs) in &delta_rows {
        if let (Some(a), Some(b), Some(c)) = (xs[0], xs[1], xs[2]) {
            assert!(a < b && b < c, "xi must increase with T0");
        }
    }
    println!("monotonicity holds: xi grows with delta, with beta, and with T0");
}
