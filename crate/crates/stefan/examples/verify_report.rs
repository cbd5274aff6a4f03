//! The verification harness: solve a problem with the Kummer/Newton path,
//! re-solve it with the independent Runge-Kutta shooting oracle, and check
//! boundary residuals, the interface energy balance, the PDE convergence
//! order, and the special-function identity suite in one report.
//!
//! The second half injects a corrupted front coefficient to show the report
//! actually catches inconsistencies instead of rubber-stamping them.
//!
//! Run with `cargo run --example verify_report`.

use stefan::oracle::verify_with_xi;
use stefan::{verify, SolverConfig, StefanProblem};

fn main() {
    let cfg = SolverConfig::default();

    let p = StefanProblem::water(10.0, 0.5, -0.5);
    let report = verify(&p, &cfg);
    println!("report for water, beta = 0.5, delta = -0.5, T0 = 10:\n");
    println!("{}\n", serde_json::to_string_pretty(&report).unwrap());
    assert!(report.passed(), "healthy problem must verify cleanly");
    println!(
        "passed; solver and oracle agree to {:.2e} (relative)",
        report.xi_discrepancy
    );

    // fault injection: push the front coefficient off the root and the
    // Stefan balance plus the oracle comparison both light up
    let broken = verify_with_xi(&p, &cfg, Some(report.xi_solver * 0.9));
    println!("\nwith xi forced 10% low, failing checks:");
    for failure in &broken.identity_failures {
        println!("  {}: {}", failure.name, failure.detail);
    }
    assert!(!broken.passed());
    assert!(broken.identity_failures.iter().any(|f| f.name.contains("stefan")));
}
