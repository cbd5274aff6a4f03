//! Error function, complementary error function, and the repeated integrals
//! i^n erfc needed by the integer-exponent solution forms.
//!
//! erf/erfc are a port of the FreeBSD msun rational approximations (via the
//! Go standard library's erf.go); absolute error is below 1e-15 everywhere.
//
// The erf/erfc coefficient tables and branch structure below come from
// FreeBSD's /usr/src/lib/msun/src/s_erf.c and carry this notice:
//
// ====================================================
// Copyright (C) 1993 by Sun Microsystems, Inc. All rights reserved.
//
// Developed at SunPro, a Sun Microsystems, Inc. business.
// Permission to use, copy, modify, and distribute this
// software is freely granted, provided that this notice
// is preserved.
// ====================================================

use super::SpecialError;

const ERX: f64 = 8.45062911510467529297e-01;

// coefficients for approximation to erf in [0, 0.84375]
const EFX: f64 = 1.28379167095512586316e-01;
const EFX8: f64 = 1.02703333676410069053e+00;
const PP0: f64 = 1.28379167095512558561e-01;
const PP1: f64 = -3.25042107247001499370e-01;
const PP2: f64 = -2.84817495755985104766e-02;
const PP3: f64 = -5.77027029648944159157e-03;
const PP4: f64 = -2.37630166566501626084e-05;
const QQ1: f64 = 3.97917223959155352819e-01;
const QQ2: f64 = 6.50222499887672944485e-02;
const QQ3: f64 = 5.08130628187576562776e-03;
const QQ4: f64 = 1.32494738004321644526e-04;
const QQ5: f64 = -3.96022827877536812320e-06;

// coefficients for approximation to erf in [0.84375, 1.25]
const PA0: f64 = -2.36211856075265944077e-03;
const PA1: f64 = 4.14856118683748331666e-01;
const PA2: f64 = -3.72207876035701323847e-01;
const PA3: f64 = 3.18346619901161753674e-01;
const PA4: f64 = -1.10894694282396677476e-01;
const PA5: f64 = 3.54783043256182359371e-02;
const PA6: f64 = -2.16637559486879084300e-03;
const QA1: f64 = 1.06420880400844228286e-01;
const QA2: f64 = 5.40397917702171048937e-01;
const QA3: f64 = 7.18286544141962662868e-02;
const QA4: f64 = 1.26171219808761642112e-01;
const QA5: f64 = 1.36370839120290507362e-02;
const QA6: f64 = 1.19844998467991074170e-02;

// coefficients for approximation to erfc in [1.25, 1/0.35]
const RA0: f64 = -9.86494403484714822705e-03;
const RA1: f64 = -6.93858572707181764372e-01;
const RA2: f64 = -1.05586262253232909814e+01;
const RA3: f64 = -6.23753324503260060396e+01;
const RA4: f64 = -1.62396669462573470355e+02;
const RA5: f64 = -1.84605092906711035994e+02;
const RA6: f64 = -8.12874355063065934246e+01;
const RA7: f64 = -9.81432934416914548592e+00;
const SA1: f64 = 1.96512716674392571292e+01;
const SA2: f64 = 1.37657754143519042600e+02;
const SA3: f64 = 4.34565877475229228821e+02;
const SA4: f64 = 6.45387271733267880336e+02;
const SA5: f64 = 4.29008140027567833386e+02;
const SA6: f64 = 1.08635005541779435134e+02;
const SA7: f64 = 6.57024977031928170135e+00;
const SA8: f64 = -6.04244152148580987438e-02;

// coefficients for approximation to erfc in [1/0.35, 28]
const RB0: f64 = -9.86494292470009928597e-03;
const RB1: f64 = -7.99283237680523006574e-01;
const RB2: f64 = -1.77579549177547519889e+01;
const RB3: f64 = -1.60636384855821916062e+02;
const RB4: f64 = -6.37566443368389627722e+02;
const RB5: f64 = -1.02509513161107724954e+03;
const RB6: f64 = -4.83519191608651397019e+02;
const SB1: f64 = 3.03380607434824582924e+01;
const SB2: f64 = 3.25792512996573918826e+02;
const SB3: f64 = 1.53672958608443695994e+03;
const SB4: f64 = 3.19985821950859553908e+03;
const SB5: f64 = 2.55305040643316442583e+03;
const SB6: f64 = 4.74528541206955367215e+02;
const SB7: f64 = -2.24409524465858183362e+01;

const VERY_TINY: f64 = 2.848094538889218e-306;
const TINY: f64 = 1.0 / (1u64 << 56) as f64; // 2^-56
const SMALL: f64 = 1.0 / (1u64 << 28) as f64; // 2^-28

/// erf(x) = (2/sqrt(pi)) * integral of exp(-u^2) from 0 to x.
pub fn erf(x: f64) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    if x == f64::INFINITY {
        return 1.0;
    }
    if x == f64::NEG_INFINITY {
        return -1.0;
    }
    let sign = x < 0.0;
    let x = x.abs();
    if x < 0.84375 {
        let temp = if x < SMALL {
            if x < VERY_TINY {
                0.125 * (8.0 * x + EFX8 * x) // avoid underflow
            } else {
                x + EFX * x
            }
        } else {
            let z = x * x;
            let r = PP0 + z * (PP1 + z * (PP2 + z * (PP3 + z * PP4)));
            let s = 1.0 + z * (QQ1 + z * (QQ2 + z * (QQ3 + z * (QQ4 + z * QQ5))));
            x + x * (r / s)
        };
        return if sign { -temp } else { temp };
    }
    if x < 1.25 {
        let s = x - 1.0;
        let p = PA0 + s * (PA1 + s * (PA2 + s * (PA3 + s * (PA4 + s * (PA5 + s * PA6)))));
        let q = 1.0 + s * (QA1 + s * (QA2 + s * (QA3 + s * (QA4 + s * (QA5 + s * QA6)))));
        return if sign { -ERX - p / q } else { ERX + p / q };
    }
    if x >= 6.0 {
        return if sign { -1.0 } else { 1.0 };
    }
    let r = erfc_tail(x);
    if sign {
        r - 1.0
    } else {
        1.0 - r
    }
}

/// erfc(x) = 1 - erf(x), computed without cancellation for large x.
pub fn erfc(x: f64) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    if x == f64::INFINITY {
        return 0.0;
    }
    if x == f64::NEG_INFINITY {
        return 2.0;
    }
    let sign = x < 0.0;
    let x = x.abs();
    if x < 0.84375 {
        let temp = if x < TINY {
            x
        } else {
            let z = x * x;
            let r = PP0 + z * (PP1 + z * (PP2 + z * (PP3 + z * PP4)));
            let s = 1.0 + z * (QQ1 + z * (QQ2 + z * (QQ3 + z * (QQ4 + z * QQ5))));
            let y = r / s;
            if x < 0.25 {
                x + x * y
            } else {
                0.5 + (x * y + (x - 0.5))
            }
        };
        return if sign { 1.0 + temp } else { 1.0 - temp };
    }
    if x < 1.25 {
        let s = x - 1.0;
        let p = PA0 + s * (PA1 + s * (PA2 + s * (PA3 + s * (PA4 + s * (PA5 + s * PA6)))));
        let q = 1.0 + s * (QA1 + s * (QA2 + s * (QA3 + s * (QA4 + s * (QA5 + s * QA6)))));
        return if sign { 1.0 + ERX + p / q } else { 1.0 - ERX - p / q };
    }
    if x < 28.0 {
        if sign && x > 6.0 {
            return 2.0;
        }
        let r = erfc_tail(x);
        return if sign { 2.0 - r } else { r };
    }
    if sign {
        2.0
    } else {
        0.0
    }
}

/// Shared tail branch: erfc(x) for 1.25 <= x < 28 via exp(-x^2 - 0.5625 + R/S)/x.
fn erfc_tail(x: f64) -> f64 {
    let s = 1.0 / (x * x);
    let (r, q) = if x < 1.0 / 0.35 {
        (
            RA0 + s * (RA1 + s * (RA2 + s * (RA3 + s * (RA4 + s * (RA5 + s * (RA6 + s * RA7)))))),
            1.0 + s
                * (SA1
                    + s * (SA2
                        + s * (SA3 + s * (SA4 + s * (SA5 + s * (SA6 + s * (SA7 + s * SA8))))))),
        )
    } else {
        (
            RB0 + s * (RB1 + s * (RB2 + s * (RB3 + s * (RB4 + s * (RB5 + s * RB6))))),
            1.0 + s
                * (SB1 + s * (SB2 + s * (SB3 + s * (SB4 + s * (SB5 + s * (SB6 + s * SB7)))))),
        )
    };
    // split x into a 20-significant-bit head so -x*x is computed exactly in two parts
    let z = f64::from_bits(f64::to_bits(x) & 0xffff_ffff_0000_0000);
    (-z * z - 0.5625).exp() * ((z - x) * (z + x) + r / q).exp() / x
}

const TWO_OVER_SQRT_PI: f64 = 1.1283791670955125739;

/// Stability window for the i^n erfc forward recurrence.
pub const INERFC_MAX_N: u32 = 20;
pub const INERFC_MAX_ABS_Z: f64 = 6.0;

/// n-fold repeated integral of erfc: i^0 = erfc, i^n(z) = integral of
/// i^(n-1) from z to infinity. Computed by the forward recurrence
/// i^n = -(z/n) i^(n-1) + (1/(2n)) i^(n-2) with base i^(-1)(z) = (2/sqrt(pi)) e^(-z^2).
///
/// The recurrence is only accurate inside n <= 20, |z| <= 6; outside that
/// window it errors rather than silently degrade.
pub fn inerfc(n: u32, z: f64) -> Result<f64, SpecialError> {
    if n > INERFC_MAX_N || z.abs() > INERFC_MAX_ABS_Z {
        return Err(SpecialError::OutOfStabilityWindow { n, z });
    }
    let mut prev = TWO_OVER_SQRT_PI * (-z * z).exp(); // i^(-1) erfc
    let mut cur = erfc(z); // i^0 erfc
    if n == 0 {
        return Ok(cur);
    }
    for k in 1..=n {
        let kf = k as f64;
        let next = -(z / kf) * cur + prev / (2.0 * kf);
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    const SQRT_PI: f64 = 1.7724538509055160273;

    /// Adaptive Simpson quadrature, the independent reference for erf here.
    fn adaptive_simpson(f: &dyn Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
        fn simpson(f: &dyn Fn(f64) -> f64, a: f64, fa: f64, b: f64, fb: f64) -> (f64, f64, f64) {
            let m = 0.5 * (a + b);
            let fm = f(m);
            ((b - a) / 6.0 * (fa + 4.0 * fm + fb), m, fm)
        }
        fn recurse(
            f: &dyn Fn(f64) -> f64,
            a: f64,
            fa: f64,
            b: f64,
            fb: f64,
            whole: f64,
            m: f64,
            fm: f64,
            tol: f64,
            depth: u32,
        ) -> f64 {
            let (left, lm, flm) = simpson(f, a, fa, m, fm);
            let (right, rm, frm) = simpson(f, m, fm, b, fb);
            let delta = left + right - whole;
            if depth == 0 || delta.abs() <= 15.0 * tol {
                return left + right + delta / 15.0;
            }
            recurse(f, a, fa, m, fm, left, lm, flm, tol / 2.0, depth - 1)
                + recurse(f, m, fm, b, fb, right, rm, frm, tol / 2.0, depth - 1)
        }
        let fa = f(a);
        let fb = f(b);
        let (whole, m, fm) = simpson(f, a, fa, b, fb);
        recurse(f, a, fa, b, fb, whole, m, fm, tol, 48)
    }

    fn erf_quadrature(z: f64) -> f64 {
        adaptive_simpson(&|u| TWO_OVER_SQRT_PI * (-u * u).exp(), 0.0, z, 1e-16)
    }

    #[test]
    fn special_points() {
        assert_eq!(erf(0.0), 0.0);
        assert_eq!(erfc(0.0), 1.0);
        assert_eq!(erf(f64::INFINITY), 1.0);
        assert_eq!(erfc(f64::NEG_INFINITY), 2.0);
        assert!(erf(f64::NAN).is_nan());
    }

    #[test]
    fn erf_matches_quadrature() {
        for &z in &[0.1, 0.5, 0.84, 1.0, 1.24, 1.3, 2.0, 2.9, 3.5, 4.8, 5.9] {
            let q = erf_quadrature(z);
            assert!(
                (erf(z) - q).abs() <= 1e-15,
                "erf({z}) = {} vs quadrature {q}",
                erf(z)
            );
            assert!((erf(-z) + q).abs() <= 1e-15, "odd symmetry at {z}");
        }
        assert!((erf(1.0) - 0.8427007929497149).abs() < 1e-15);
    }

    #[test]
    fn erfc_complements_erf() {
        let mut z = -5.9;
        while z < 5.9 {
            assert!((erf(z) + erfc(z) - 1.0).abs() <= 1e-15, "z = {z}");
            z += 0.137;
        }
    }

    #[test]
    fn erfc_tail_against_quadrature() {
        // erfc(z) = (2/sqrt(pi)) e^(-z^2) int_0^14 e^(-2zv - v^2) dv after u = z + v
        // (truncation < 1e-80). Factoring out e^(-z^2) keeps the integrand O(1), so
        // the absolute tolerance stays meaningful where the tail itself is ~1e-12.
        for &z in &[1.5, 2.5, 3.0, 4.0, 5.0] {
            let q = adaptive_simpson(&|v| (-2.0 * z * v - v * v).exp(), 0.0, 14.0, 1e-16);
            let reference = TWO_OVER_SQRT_PI * (-z * z).exp() * q;
            assert_relative_eq!(erfc(z), reference, max_relative = 1e-12);
        }
    }

    #[test]
    fn inerfc_base_cases() {
        assert_eq!(inerfc(0, 0.0).unwrap(), 1.0);
        assert_relative_eq!(inerfc(1, 0.0).unwrap(), 1.0 / SQRT_PI, max_relative = 1e-15);
        // i^1 erfc(z) = exp(-z^2)/sqrt(pi) - z*erfc(z)
        for &z in &[-2.0f64, -0.5, 0.3, 1.0, 2.7] {
            let expect = (-z * z).exp() / SQRT_PI - z * erfc(z);
            assert_relative_eq!(inerfc(1, z).unwrap(), expect, max_relative = 1e-13);
        }
    }

    #[test]
    fn inerfc_matches_quadrature() {
        // i^n erfc(z) = (2/sqrt(pi)) / n! * integral of (u-z)^n e^(-u^2) over [z, inf)
        for n in [1u32, 2, 3] {
            let nf = (1..=n).product::<u32>() as f64;
            for &z in &[-1.0, 0.0, 0.7, 1.5] {
                let q = adaptive_simpson(
                    &|u: f64| TWO_OVER_SQRT_PI * (u - z).powi(n as i32) * (-u * u).exp() / nf,
                    z,
                    z + 14.0,
                    1e-15,
                );
                assert_relative_eq!(inerfc(n, z).unwrap(), q, max_relative = 1e-9);
            }
        }
    }

    #[test]
    fn inerfc_recurrence_window() {
        assert!(matches!(
            inerfc(21, 0.0),
            Err(SpecialError::OutOfStabilityWindow { .. })
        ));
        assert!(matches!(
            inerfc(3, 6.5),
            Err(SpecialError::OutOfStabilityWindow { .. })
        ));
        // inside the window the recurrence stays finite even at the corner
        for n in 0..=20 {
            let v = inerfc(n, 6.0).unwrap();
            assert!(v.is_finite(), "n = {n}: {v}");
        }
    }
}
