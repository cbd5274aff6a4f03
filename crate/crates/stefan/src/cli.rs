//! Command-line front end: solve a single problem (JSON), sweep a parameter
//! and emit a CSV curve family, evaluate a temperature grid (CSV), or run
//! the verification report (JSON).
//!
//! Exit codes are a stable contract:
//! 0 success, 1 verification failure, 2 invalid parameters,
//! 3 solver non-convergence, 4 I/O error.
//!
//! All numeric CSV fields carry 17 significant digits so that re-parsing a
//! sweep row and re-solving reproduces the xi column bit-exactly.

use crate::model::StefanProblem;
use crate::oracle::verify_with_xi;
use crate::solution::{build_solution, SimilaritySolution};
use crate::solver::{solve_xi, SolverConfig, SolverError};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use std::path::PathBuf;

/// Exact similarity solutions of a one-phase melting problem whose latent
/// heat depends on the front position and speed.
#[derive(Debug, Parser)]
#[command(name = "stefan", version, about)]
pub struct Cli {
    #[command(flatten)]
    pub params: ParamFlags,
    #[command(subcommand)]
    pub command: Command,
}

/// Problem and solver flags shared by every subcommand. Defaults are the
/// liquid-water parameters (k = 0.58 W/(m C), a^2 = 1.39e-7 m^2/s, gamma=1).
#[derive(Debug, Args)]
pub struct ParamFlags {
    /// Thermal conductivity k, W/(m C)
    #[arg(long, global = true, default_value_t = 0.58)]
    pub k: f64,
    /// Diffusion coefficient a^2, m^2/s (the square root a is what the
    /// formulas use; the flag takes the tabulated quantity)
    #[arg(long, global = true, default_value_t = 1.39e-7)]
    pub a2: f64,
    /// Latent-heat coefficient gamma
    #[arg(long, global = true, default_value_t = 1.0)]
    pub gamma: f64,
    /// Fixed-face temperature coefficient; repeatable. Sweeps solve one
    /// curve per value (default 1, 5, 10); other commands use the first
    /// value (default 1).
    #[arg(long = "T0", global = true, value_name = "T0")]
    pub t0: Vec<f64>,
    /// Front-position exponent in the latent-heat law
    #[arg(long, global = true, default_value_t = 0.0, allow_hyphen_values = true)]
    pub beta: f64,
    /// Front-velocity exponent in the latent-heat law
    #[arg(long, global = true, default_value_t = 0.0, allow_hyphen_values = true)]
    pub delta: f64,
    /// Newton absolute step stopping tolerance
    #[arg(long, global = true)]
    pub step_tol: Option<f64>,
    /// Iteration cap for the root finder
    #[arg(long, global = true)]
    pub max_iter: Option<usize>,
    /// Output file; standard output when omitted
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Worker threads for sweeps (default: all cores)
    #[arg(long, global = true)]
    pub workers: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve one problem; print xi, c2, iterations, residual as JSON
    Solve,
    /// Sweep beta, delta, or T0 and write a CSV table of xi values
    Sweep {
        /// Which parameter to sweep
        #[arg(long, value_enum, default_value = "delta")]
        param: SweepParam,
        /// Lower end of the sweep range
        #[arg(long, default_value_t = -1.0, allow_hyphen_values = true)]
        lo: f64,
        /// Upper end of the sweep range
        #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
        hi: f64,
        /// Number of evenly spaced samples (including both ends)
        #[arg(long, default_value_t = 41)]
        samples: usize,
    },
    /// Solve, then tabulate the temperature field on a space-time grid
    Eval {
        /// Evaluation times; repeatable (default 0.1, 1, 10)
        #[arg(long = "times", value_name = "T", allow_hyphen_values = true)]
        times: Vec<f64>,
        /// Number of x subdivisions per time (grid reaches 1.25 s(t), with
        /// an exact interface row inserted)
        #[arg(long, default_value_t = 64)]
        x_count: usize,
    },
    /// Solve, cross-check against the shooting oracle, and write the
    /// verification report as JSON; exit 0 only on a full pass
    Verify {
        /// Replace the solved front coefficient downstream (fault
        /// injection: a corrupted value must show up in the residuals)
        #[arg(long, allow_hyphen_values = true)]
        xi_override: Option<f64>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SweepParam {
    Beta,
    Delta,
    #[value(name = "T0", alias = "t0")]
    T0,
}

/// A fully resolved sweep request.
#[derive(Debug, Clone)]
pub struct SweepSpec {
    pub k: f64,
    pub a: f64,
    pub gamma: f64,
    pub t0_list: Vec<f64>,
    pub param: SweepParam,
    pub lo: f64,
    pub hi: f64,
    pub samples: usize,
}

#[derive(Debug, Serialize)]
struct SolveOutput {
    xi: f64,
    c2: f64,
    iterations: usize,
    residual: f64,
}

pub const SWEEP_HEADER: &str = "beta,delta,alpha,T0,xi,iterations,residual,status";
pub const EVAL_HEADER: &str = "t,x,eta,temperature,region";

/// One computed sweep point; `status` is "ok" or a short failure token.
#[derive(Debug, Clone)]
struct SweepRow {
    beta: f64,
    delta: f64,
    t0: f64,
    xi: f64,
    iterations: usize,
    residual: f64,
    status: String,
}

impl SweepRow {
    fn to_csv(&self) -> String {
        format!(
            "{:.16e},{:.16e},{:.16e},{:.16e},{:.16e},{},{:.16e},{}",
            self.beta,
            self.delta,
            self.beta - self.delta,
            self.t0,
            self.xi,
            self.iterations,
            self.residual,
            self.status
        )
    }
}

fn problem_from(flags: &ParamFlags, t0: f64) -> StefanProblem {
    StefanProblem::new(flags.k, flags.a2.sqrt(), t0, flags.gamma, flags.beta, flags.delta)
}

fn config_from(flags: &ParamFlags) -> SolverConfig {
    let mut cfg = SolverConfig::default();
    if let Some(tol) = flags.step_tol {
        cfg.step_tol = tol;
    }
    if let Some(n) = flags.max_iter {
        cfg.max_iter = n;
    }
    cfg
}

fn single_t0(flags: &ParamFlags) -> f64 {
    flags.t0.first().copied().unwrap_or(1.0)
}

fn write_output(out: &Option<PathBuf>, content: &str) -> i32 {
    match out {
        Some(path) => match std::fs::write(path, content) {
            Ok(()) => 0,
            Err(e) => {
                eprintln!("cannot write {}: {e}", path.display());
                4
            }
        },
        None => {
            print!("{content}");
            0
        }
    }
}

/// Execute a parsed invocation; returns the process exit code.
pub fn run(cli: Cli) -> i32 {
    let cfg = config_from(&cli.params);
    match &cli.command {
        Command::Solve => {
            let p = problem_from(&cli.params, single_t0(&cli.params));
            if let Err(violations) = p.validate() {
                for v in violations {
                    eprintln!("invalid parameters: {v}");
                }
                return 2;
            }
            let result = match solve_xi(&p, &cfg) {
                Ok(r) => r,
                Err(e) => {
                    eprintln!("solver failed: {e}");
                    return 3;
                }
            };
            let sol = match build_solution(&p, result.xi) {
                Ok(s) => s,
                Err(e) => {
                    eprintln!("solution assembly failed: {e}");
                    return 3;
                }
            };
            let output = SolveOutput {
                xi: result.xi,
                c2: sol.c2,
                iterations: result.iterations,
                residual: result.final_residual,
            };
            let json = serde_json::to_string(&output).expect("plain struct serializes");
            write_output(&cli.params.out, &format!("{json}\n"))
        }
        Command::Sweep { param, lo, hi, samples } => {
            if !(lo < hi) || *samples < 2 {
                eprintln!("invalid sweep range: need lo < hi and samples >= 2");
                return 2;
            }
            let mut t0_list = if cli.params.t0.is_empty() {
                vec![1.0, 5.0, 10.0]
            } else {
                cli.params.t0.clone()
            };
            t0_list.sort_by(|a, b| a.partial_cmp(b).expect("finite T0 values"));
            let spec = SweepSpec {
                k: cli.params.k,
                a: cli.params.a2.sqrt(),
                gamma: cli.params.gamma,
                t0_list,
                param: *param,
                lo: *lo,
                hi: *hi,
                samples: *samples,
            };
            let csv = sweep_csv(&spec, &cfg, cli.params.workers, cli.params.beta, cli.params.delta);
            write_output(&cli.params.out, &csv)
        }
        Command::Eval { times, x_count } => {
            let p = problem_from(&cli.params, single_t0(&cli.params));
            if let Err(violations) = p.validate() {
                for v in violations {
                    eprintln!("invalid parameters: {v}");
                }
                return 2;
            }
            let times = if times.is_empty() { vec![0.1, 1.0, 10.0] } else { times.clone() };
            if times.iter().any(|&t| !(t > 0.0)) || *x_count == 0 {
                eprintln!("invalid grid: times must be positive and x-count nonzero");
                return 2;
            }
            let sol = match solve_xi(&p, &cfg).map_err(|e| e.to_string()).and_then(|r| {
                build_solution(&p, r.xi).map_err(|e| e.to_string())
            }) {
                Ok(s) => s,
                Err(e) => {
                    eprintln!("solver failed: {e}");
                    return 3;
                }
            };
            match eval_csv(&sol, &times, *x_count) {
                Ok(csv) => write_output(&cli.params.out, &csv),
                Err(e) => {
                    eprintln!("evaluation failed: {e}");
                    return 3;
                }
            }
        }
        Command::Verify { xi_override } => {
            let p = problem_from(&cli.params, single_t0(&cli.params));
            let report = verify_with_xi(&p, &cfg, *xi_override);
            let json =
                serde_json::to_string_pretty(&report).expect("report serializes");
            let io_code = write_output(&cli.params.out, &format!("{json}\n"));
            if io_code != 0 {
                return io_code;
            }
            if report.passed() {
                0
            } else {
                1
            }
        }
    }
}

/// Solve every sweep point (in parallel) and assemble the CSV. Invalid
/// points are reported with a status token, never dropped: the row count is
/// always samples x |T0 list|.
fn sweep_csv(
    spec: &SweepSpec,
    cfg: &SolverConfig,
    workers: Option<usize>,
    fixed_beta: f64,
    fixed_delta: f64,
) -> String {
    let values: Vec<f64> = (0..spec.samples)
        .map(|i| spec.lo + (spec.hi - spec.lo) * i as f64 / (spec.samples - 1) as f64)
        .collect();
    // (swept value, T0) pairs, ordered by swept value then T0
    let jobs: Vec<(f64, f64)> = match spec.param {
        SweepParam::T0 => values.iter().map(|&v| (v, v)).collect(),
        _ => values
            .iter()
            .flat_map(|&v| spec.t0_list.iter().map(move |&t0| (v, t0)))
            .collect(),
    };
    let solve_one = |&(v, t0): &(f64, f64)| -> SweepRow {
        let (beta, delta) = match spec.param {
            SweepParam::Beta => (v, fixed_delta),
            SweepParam::Delta => (fixed_beta, v),
            SweepParam::T0 => (fixed_beta, fixed_delta),
        };
        let p = StefanProblem::new(spec.k, spec.a, t0, spec.gamma, beta, delta);
        let (xi, iterations, residual, status) = match p.validate() {
            Err(violations) => (f64::NAN, 0, f64::NAN, violations[0].code().to_string()),
            Ok(()) => match solve_xi(&p, cfg) {
                Ok(r) => (r.xi, r.iterations, r.final_residual, "ok".to_string()),
                Err(SolverError::BracketNotFound { .. }) => {
                    (f64::NAN, 0, f64::NAN, "bracket-not-found".to_string())
                }
                Err(SolverError::MaxIterationsExceeded { iterations, best }) => {
                    (best, iterations, f64::NAN, "max-iterations".to_string())
                }
                Err(_) => (f64::NAN, 0, f64::NAN, "solver-error".to_string()),
            },
        };
        SweepRow { beta, delta, t0, xi, iterations, residual, status }
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.unwrap_or(0))
        .build()
        .expect("thread pool");
    let rows: Vec<SweepRow> = pool.install(|| jobs.par_iter().map(solve_one).collect());
    let mut csv = String::from(SWEEP_HEADER);
    csv.push('\n');
    for row in &rows {
        csv.push_str(&row.to_csv());
        csv.push('\n');
    }
    csv
}

/// Temperature table: for each time, x runs from 0 past the front to
/// 1.25 s(t), with one row exactly at the interface.
fn eval_csv(
    sol: &SimilaritySolution,
    times: &[f64],
    x_count: usize,
) -> Result<String, String> {
    let mut csv = String::from(EVAL_HEADER);
    csv.push('\n');
    for &t in times {
        let s = sol.front_position(t);
        let x_max = 1.25 * s;
        let mut xs: Vec<f64> = (0..=x_count)
            .map(|j| x_max * j as f64 / x_count as f64)
            .collect();
        xs.push(s);
        xs.sort_by(|a, b| a.partial_cmp(b).expect("finite grid"));
        xs.dedup();
        for x in xs {
            let sample = sol.temperature(x, t).map_err(|e| e.to_string())?;
            csv.push_str(&format!(
                "{:.16e},{:.16e},{:.16e},{:.16e},{}\n",
                t,
                x,
                sol.eta(x, t),
                sample.value,
                sample.region.as_str()
            ));
        }
    }
    Ok(csv)
}
