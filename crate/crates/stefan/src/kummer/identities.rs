//! Cross-checks between independent evaluation routes: Kummer series vs
//! erf/erfc closed forms, iterated-erfc recurrences, and the product and
//! reflection relations the interface analysis leans on. Each check reports
//! its worst grid error so a caller can surface regressions by name.

use super::{erf, gamma_fn, inerfc, kummer_m};

/// Outcome of one named identity swept over its grid.
#[derive(Debug, Clone, PartialEq)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub max_error: f64,
    pub tolerance: f64,
    pub passed: bool,
}

impl IdentityCheck {
    fn from_sweep(name: &'static str, max_error: f64, tolerance: f64) -> Self {
        IdentityCheck {
            name,
            max_error,
            tolerance,
            passed: max_error.is_finite() && max_error <= tolerance,
        }
    }
}

const SQRT_PI: f64 = 1.7724538509055160273;

const ALPHA_GRID: [f64; 5] = [0.0, 0.5, 1.0, 2.0, 3.7];

fn xi_grid() -> Vec<f64> {
    (1..=12).map(|i| 0.25 * i as f64).collect()
}

/// A failed evaluation poisons the sweep: report infinite error, not a panic.
fn worst<I: IntoIterator<Item = Result<f64, super::SpecialError>>>(errors: I) -> f64 {
    let mut max = 0.0f64;
    for e in errors {
        match e {
            Ok(v) => max = max.max(v.abs()),
            Err(_) => return f64::INFINITY,
        }
    }
    max
}

/// M(0,b,z) = 1 for every admissible b and z.
fn check_zero_a_constant() -> IdentityCheck {
    let err = worst([0.3, 1.5, 2.7].iter().flat_map(|&b| {
        [-10.0, -1.0, 0.0, 1.0, 10.0]
            .iter()
            .map(move |&z| kummer_m(0.0, b, z).map(|e| e.value - 1.0))
            .collect::<Vec<_>>()
    }));
    IdentityCheck::from_sweep("zero-a-constant", err, 1e-15)
}

/// M(a,b,z) = e^z M(b-a, b, -z), error scaled by max(1, |M|).
fn check_kummer_transform() -> IdentityCheck {
    let a_grid = [-2.5, -1.0, -0.3, 0.0, 0.7, 1.5, 3.0, 4.0];
    let b_grid = [0.3, 0.5, 1.5, 2.7];
    let z_grid = [-25.0, -10.0, -3.0, -0.7, 0.4, 2.0, 10.0, 25.0];
    let mut errs = Vec::new();
    for &a in &a_grid {
        for &b in &b_grid {
            for &z in &z_grid {
                errs.push(kummer_m(a, b, z).and_then(|lhs| {
                    kummer_m(b - a, b, -z).map(|inner| {
                        let rhs = z.exp() * inner.value;
                        (lhs.value - rhs) / lhs.value.abs().max(1.0)
                    })
                }));
            }
        }
    }
    IdentityCheck::from_sweep("kummer-transform", worst(errs), 1e-12)
}

/// e^(-x^2) = -2 a x^2 M(-a/2+1/2,3/2,-x^2) M(-a/2+1,3/2,-x^2)
///          + M(-a/2,1/2,-x^2) M(-a/2+1/2,1/2,-x^2), written with a for alpha.
///
/// The two products are Wronskian-type terms that can exceed the e^(-x^2)
/// result by 1e7 at the far grid corner, so the error is measured against
/// the largest participating term; against the result alone the check would
/// demand sub-f64 accuracy from each factor.
fn check_exp_product() -> IdentityCheck {
    let mut errs = Vec::new();
    for &al in &ALPHA_GRID {
        for x in xi_grid() {
            let w = -x * x;
            let lhs = (-x * x).exp();
            let rhs = (|| {
                let m1 = kummer_m(-al / 2.0 + 0.5, 1.5, w)?.value;
                let m2 = kummer_m(-al / 2.0 + 1.0, 1.5, w)?.value;
                let m3 = kummer_m(-al / 2.0, 0.5, w)?.value;
                let m4 = kummer_m(-al / 2.0 + 0.5, 0.5, w)?.value;
                let products = (-2.0 * al * x * x * m1 * m2, m3 * m4);
                let scale = products.0.abs().max(products.1.abs()).max(lhs);
                Ok((lhs - (products.0 + products.1)) / scale)
            })();
            errs.push(rhs);
        }
    }
    IdentityCheck::from_sweep("exp-product-identity", worst(errs), 1e-10)
}

/// M(-a/2+1/2, 3/2, -x^2) = e^(-x^2) M(a/2+1, 3/2, x^2).
fn check_reflection() -> IdentityCheck {
    let mut errs = Vec::new();
    for &al in &ALPHA_GRID {
        for x in xi_grid() {
            errs.push(kummer_m(-al / 2.0 + 0.5, 1.5, -x * x).and_then(|lhs| {
                kummer_m(al / 2.0 + 1.0, 1.5, x * x).map(|rhs| {
                    let r = (-x * x).exp() * rhs.value;
                    (lhs.value - r) / r
                })
            }));
        }
    }
    IdentityCheck::from_sweep("reflection-negative-argument", worst(errs), 1e-12)
}

/// d/dz [z M(a/2+1, 3/2, z^2)] = M(a/2+1, 1/2, z^2), central difference at h = 1e-5.
fn check_derivative_bridge() -> IdentityCheck {
    let h = 1e-5;
    let g = |a: f64, z: f64| kummer_m(a, 1.5, z * z).map(|e| z * e.value);
    let mut errs = Vec::new();
    for &al in &ALPHA_GRID {
        let a = al / 2.0 + 1.0;
        for z in xi_grid() {
            errs.push((|| {
                let fd = (g(a, z + h)? - g(a, z - h)?) / (2.0 * h);
                let rhs = kummer_m(a, 0.5, z * z)?.value;
                Ok((fd - rhs) / rhs)
            })());
        }
    }
    IdentityCheck::from_sweep("derivative-bridge", worst(errs), 1e-6)
}

/// M(-n/2, 1/2, -z^2) = 2^(n-1) Gamma(n/2+1) [i^n erfc(z) + i^n erfc(-z)].
fn check_erfc_bridge_even() -> IdentityCheck {
    let mut errs = Vec::new();
    for n in 0u32..=6 {
        let half_n = n as f64 / 2.0;
        for z in xi_grid() {
            errs.push((|| {
                let lhs = kummer_m(-half_n, 0.5, -z * z)?.value;
                let comb = inerfc(n, z)? + inerfc(n, -z)?;
                let rhs = 2f64.powi(n as i32 - 1) * gamma_fn(half_n + 1.0)? * comb;
                Ok((lhs - rhs) / rhs)
            })());
        }
    }
    IdentityCheck::from_sweep("erfc-bridge-even", worst(errs), 1e-9)
}

/// z M(-n/2+1/2, 3/2, -z^2) = 2^(n-2) Gamma(n/2+1/2) [i^n erfc(-z) - i^n erfc(z)].
fn check_erfc_bridge_odd() -> IdentityCheck {
    let mut errs = Vec::new();
    for n in 0u32..=6 {
        let half_n = n as f64 / 2.0;
        for z in xi_grid() {
            errs.push((|| {
                let lhs = z * kummer_m(-half_n + 0.5, 1.5, -z * z)?.value;
                let comb = inerfc(n, -z)? - inerfc(n, z)?;
                let rhs = 2f64.powi(n as i32 - 2) * gamma_fn(half_n + 0.5)? * comb;
                Ok((lhs - rhs) / rhs)
            })());
        }
    }
    IdentityCheck::from_sweep("erfc-bridge-odd", worst(errs), 1e-9)
}

/// z M(1, 3/2, z^2) = (sqrt(pi)/2) e^(z^2) erf(z); the classical-case closed form.
fn check_alpha0_erf_form() -> IdentityCheck {
    let errs = (1..=10).map(|i| {
        let z = 0.5 * i as f64;
        kummer_m(1.0, 1.5, z * z).map(|e| {
            let lhs = z * e.value;
            let rhs = SQRT_PI / 2.0 * (z * z).exp() * erf(z);
            (lhs - rhs) / rhs
        })
    });
    IdentityCheck::from_sweep("alpha0-erf-form", worst(errs), 1e-12)
}

/// Run every named identity over its grid; order is stable.
pub fn run_identity_suite() -> Vec<IdentityCheck> {
    vec![
        check_zero_a_constant(),
        check_kummer_transform(),
        check_exp_product(),
        check_reflection(),
        check_derivative_bridge(),
        check_erfc_bridge_even(),
        check_erfc_bridge_odd(),
        check_alpha0_erf_form(),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_suite_passes() {
        let suite = run_identity_suite();
        assert_eq!(suite.len(), 8);
        for check in &suite {
            assert!(
                check.passed,
                "{} failed: max error {:.3e} > tolerance {:.3e}",
                check.name, check.max_error, check.tolerance
            );
        }
    }

    #[test]
    fn suite_names_are_unique_and_stable() {
        let names: Vec<_> = run_identity_suite().iter().map(|c| c.name).collect();
        let mut dedup = names.clone();
        dedup.sort_unstable();
        dedup.dedup();
        assert_eq!(dedup.len(), names.len());
        assert_eq!(names[0], "zero-a-constant");
        assert!(names.contains(&"kummer-transform"));
        assert!(names.contains(&"erfc-bridge-odd"));
    }

    #[test]
    fn tolerances_are_not_vacuous() {
        // every tolerance sits well below 1, and the recorded errors are finite
        for check in run_identity_suite() {
            assert!(check.tolerance < 1e-5);
            assert!(check.max_error.is_finite());
        }
    }
}
