//! Exact similarity solutions of the one-phase Stefan problem with a latent
//! heat that depends on both the position and the velocity of the melting
//! front, `L = gamma * s(t)^beta * sdot(t)^delta`.
//!
//! The temperature field and the front law
//!
//! ```text
//! T(x,t) = t^(alpha/2) * [ c1*M(-alpha/2, 1/2, -eta^2) + c2*eta*M(-alpha/2+1/2, 3/2, -eta^2) ]
//! s(t)   = 2*a*xi*sqrt(t),        eta = x / (2*a*sqrt(t)),   alpha = beta - delta
//! ```
//!
//! are exact once the dimensionless front coefficient `xi` solves
//! `C*f(xi) = xi^(beta+delta+1)`, a scalar equation with a provably unique
//! positive root. This crate provides:
//!
//! * [`kummer`]: the confluent hypergeometric engine `M(a,b,z)` with its
//!   companions (Tricomi `U`, `erf`/`erfc`, repeated `erfc` integrals, the
//!   gamma function, Lambert `W`) and the identity suite the solution relies on;
//! * [`model`]: problem parameters, the validity region, the latent-heat law,
//!   and the root function `H(z) = C*f(z) - z^(beta+delta+1)`;
//! * [`solver`]: a safeguarded Newton iteration inside a certified bracket;
//! * [`solution`]: evaluation of the temperature field, front position and
//!   velocity, gradients, and closed forms for special exponent pairs;
//! * [`oracle`]: an independent Runge-Kutta shooting solver for `xi`, the
//!   classical (Neumann) and Lambert-W closed-form cases, and a full
//!   verification report;
//! * [`cli`]: the `solve | sweep | eval | verify` command-line front end
//!   backing the thin `stefan` binary.
//!
//! Runnable walkthroughs live in `examples/`:
//!
//! ```text
//! cargo run --example classical_melting      # beta=delta=0 vs the Neumann form
//! cargo run --example threshold_gradient     # beta=0, delta=-1 vs Lambert W
//! cargo run --example linear_latent_heat     # beta=1, delta=0 and the alpha=1 closed form
//! cargo run --example temperature_profile    # evaluating T(x,t) across the front
//! cargo run --example figure_sweeps          # xi against beta / delta / T0, CSV out
//! cargo run --example verify_report          # solver vs oracle residual report
//! cargo run --example special_functions      # the Kummer engine on its own
//! ```

pub mod cli;
pub mod kummer;
pub mod model;
pub mod oracle;
pub mod solution;
pub mod solver;

pub use model::{StefanProblem, Violation};
pub use oracle::{verify, VerifyReport};
pub use solution::{build_solution, SimilaritySolution};
pub use solver::{solve_xi, SolveResult, SolverConfig};
