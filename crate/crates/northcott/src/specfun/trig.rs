//! Trigonometric helpers with argument reduction.
//!
//! `sin(πz)` evaluated naively loses absolute accuracy once the real part is
//! a few units from zero, which is fatal when the value itself is tiny (the
//! radii around the negative integers go down to 1e-19). All routines here
//! reduce the real part to the nearest period first, so cancellation never
//! happens.

use num_complex::Complex64;
use std::f64::consts::PI;

/// sin(πz) with exact period reduction: sin(π(m+w)) = (−1)^m sin(πw).
pub fn sin_pi(z: Complex64) -> Complex64 {
    let m = z.re.round();
    let w = z.re - m; // exact for |re| < 2^52
    let (s, c) = (PI * w).sin_cos();
    let v = Complex64::new(s * (PI * z.im).cosh(), c * (PI * z.im).sinh());
    if (m as i64).rem_euclid(2) == 0 {
        v
    } else {
        -v
    }
}

/// cos(πz) with the same reduction.
pub fn cos_pi(z: Complex64) -> Complex64 {
    let m = z.re.round();
    let w = z.re - m;
    let (s, c) = (PI * w).sin_cos();
    let v = Complex64::new(c * (PI * z.im).cosh(), -s * (PI * z.im).sinh());
    if (m as i64).rem_euclid(2) == 0 {
        v
    } else {
        -v
    }
}

/// log|sin(πz)|, finite for all z off the integer lattice, −∞ exactly on it.
///
/// Uses |sin(π(x+iy))|² = sin²(πw) + sinh²(πy) with w the reduced real part;
/// for large |y| the sinh term is evaluated in log form so nothing overflows.
pub fn log_abs_sin_pi(z: Complex64) -> f64 {
    let w = z.re - z.re.round();
    let s = (PI * w).sin();
    let py = PI * z.im.abs();
    if py > 20.0 {
        // sinh dominates: log sinh(py) = py - ln 2 + log(1 - e^{-2py});
        // the sin² term is smaller by e^{-2py} < 2e-18 and is dropped.
        py - std::f64::consts::LN_2 + (-(-2.0 * py).exp()).ln_1p()
    } else {
        let sh = py.sinh();
        0.5 * (s * s + sh * sh).ln()
    }
}

/// log|sin(πz/2)|, reduced modulo the period 2 of the half-angle.
pub fn log_abs_sin_half_pi(z: Complex64) -> f64 {
    let w = z.re - 2.0 * (z.re / 2.0).round();
    let s = (0.5 * PI * w).sin();
    let py = 0.5 * PI * z.im.abs();
    if py > 20.0 {
        py - std::f64::consts::LN_2 + (-(-2.0 * py).exp()).ln_1p()
    } else {
        let sh = py.sinh();
        0.5 * (s * s + sh * sh).ln()
    }
}

/// The sandwich |sin(|z|)| ≤ |sin(z)| ≤ sinh(|z|), returned as
/// (lower, value, upper). The ordering is asserted in debug builds.
pub fn sin_abs_bounds(z: Complex64) -> (f64, f64, f64) {
    let r = z.norm();
    let out = (r.sin().abs(), z.sin().norm(), r.sinh());
    debug_assert!(out.0 <= out.1 * (1.0 + 1e-12) + 1e-300);
    debug_assert!(out.1 <= out.2 * (1.0 + 1e-12) + 1e-300);
    out
}

/// Companion sandwich |cos(|z|)| ≤ |cos(z)| ≤ cosh(|z|).
pub fn cos_abs_bounds(z: Complex64) -> (f64, f64, f64) {
    let r = z.norm();
    let out = (r.cos().abs(), z.cos().norm(), r.cosh());
    debug_assert!(out.0 <= out.1 * (1.0 + 1e-12) + 1e-300);
    debug_assert!(out.1 <= out.2 * (1.0 + 1e-12) + 1e-300);
    out
}
