//! The unconditional non-Northcott threshold B(s) for points inside the
//! critical strip 1/2 < Re(s) < 1:
//!
//! ```text
//!   B(s) = |ζ(s)| · ( e^{1/2} · A_{s−1/2, s̄−1/2} · 8I/9 )^{1/2},
//! ```
//!
//! where `I` is the integral of the smooth bump `Φ` supported on [1/2, 3]
//! and `A` is the second-moment constant for the family of real quadratic
//! characters, an Euler product over the odd primes.
//!
//! The raw Euler product converges like Σ p^{−1−2a} (a = Re α), far too
//! slowly to truncate at any feasible prime when a < 1/2. Each factor is
//! therefore split as (1−p^{−1−2α₁})^{-1}(1−p^{−1−2α₂})^{-1}(1−p^{−1−α₁−α₂})^{-1}·h_p
//! with h_p = 1 + O(p^{−2}); the three zeta prefactors are evaluated in
//! closed form and the fast h-product is truncated with an explicit
//! prime-zeta tail correction. The achieved accuracy is reported.

use crate::specfun::{zeta_complex, SpecFunError};
use crate::NumericsConfig;
use num_complex::Complex64;
use std::sync::OnceLock;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum CritStripError {
    #[error("moment constant requires |Re(alpha)| < 1/2, got {0}")]
    AlphaDomain(f64),
    #[error("the Euler product diverges for this shift pair (an exponent hits the zeta pole)")]
    Divergent,
    #[error("b_threshold requires 1/2 < Re(s) < 1, got {0}")]
    StripDomain(f64),
    #[error(transparent)]
    SpecFun(#[from] SpecFunError),
}

/// Smooth bump: exp(−1/((2x−1)(3−x))) on (1/2, 3), zero elsewhere.
pub fn phi(x: f64) -> f64 {
    if x <= 0.5 || x >= 3.0 {
        return 0.0;
    }
    (-1.0 / ((2.0 * x - 1.0) * (3.0 - x))).exp()
}

fn simpson(f: &dyn Fn(f64) -> f64, a: f64, fa: f64, b: f64, fb: f64) -> (f64, f64, f64) {
    let m = 0.5 * (a + b);
    let fm = f(m);
    ((b - a) / 6.0 * (fa + 4.0 * fm + fb), m, fm)
}

#[allow(clippy::too_many_arguments)]
fn adaptive(
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
    adaptive(f, a, fa, m, fm, left, lm, flm, 0.5 * tol, depth - 1)
        + adaptive(f, m, fm, b, fb, right, rm, frm, 0.5 * tol, depth - 1)
}

/// Adaptive Simpson quadrature with absolute tolerance.
pub fn integrate(f: &dyn Fn(f64) -> f64, a: f64, b: f64, abs_tol: f64) -> f64 {
    let (fa, fb) = (f(a), f(b));
    let (whole, m, fm) = simpson(f, a, fa, b, fb);
    adaptive(f, a, fa, b, fb, whole, m, fm, abs_tol, 48)
}

/// I = ∫ Φ, computed once to the default quadrature tolerance (1e-12).
pub fn i_integral() -> f64 {
    static I: OnceLock<f64> = OnceLock::new();
    *I.get_or_init(|| {
        let tol = NumericsConfig::default().quadrature_abs_tol;
        integrate(&phi, 0.5, 3.0, tol)
    })
}

/// One factor of the Euler product for A at an odd prime p:
/// [½((1−p^{−½−α₁})⁻¹(1−p^{−½−α₂})⁻¹ + (1+p^{−½−α₁})⁻¹(1+p^{−½−α₂})⁻¹) + 1/p]·(1+1/p)⁻¹.
pub fn euler_factor(p: u64, alpha1: Complex64, alpha2: Complex64) -> Complex64 {
    let lp = (p as f64).ln();
    let x = (-(alpha1 + 0.5) * lp).exp();
    let y = (-(alpha2 + 0.5) * lp).exp();
    let one = Complex64::new(1.0, 0.0);
    let w = 1.0 / p as f64;
    let bracket =
        0.5 * ((one - x).inv() * (one - y).inv() + (one + x).inv() * (one + y).inv()) + w;
    bracket / (1.0 + w)
}

/// The second-moment constant with its provenance.
#[derive(Debug, Clone, PartialEq)]
pub struct MomentConstant {
    pub alpha1: Complex64,
    pub alpha2: Complex64,
    pub value: Complex64,
    pub truncation_prime: u64,
    /// Bound on the relative error left after the tail correction.
    pub tail_bound: f64,
}

fn primes_up_to(n: usize) -> Vec<u32> {
    let mut sieve = vec![true; n + 1];
    sieve[0] = false;
    if n >= 1 {
        sieve[1] = false;
    }
    let mut p = 2;
    while p * p <= n {
        if sieve[p] {
            let mut q = p * p;
            while q <= n {
                sieve[q] = false;
                q += p;
            }
        }
        p += 1;
    }
    (2..=n).filter(|&i| sieve[i]).map(|i| i as u32).collect()
}

fn prime_cache() -> &'static [u32] {
    static PRIMES: OnceLock<Vec<u32>> = OnceLock::new();
    PRIMES.get_or_init(|| primes_up_to(DEFAULT_TRUNCATION_PRIME as usize))
}

const DEFAULT_TRUNCATION_PRIME: u64 = 1_000_000;

fn moebius(n: u64) -> i32 {
    let mut n = n;
    let mut mu = 1i32;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            mu = -mu;
        }
        p += 1;
    }
    if n > 1 {
        mu = -mu;
    }
    mu
}

/// Prime zeta P(e) = Σ_p p^{−e} for Re(e) > 1, via P(e) = Σ μ(k)/k·log ζ(ke).
fn prime_zeta(e: Complex64) -> Result<Complex64, CritStripError> {
    let mut acc = Complex64::new(0.0, 0.0);
    for k in 1..=64u64 {
        let mu = moebius(k);
        if mu == 0 {
            continue;
        }
        let z = zeta_complex(e * k as f64)?;
        let term = z.ln() * (mu as f64 / k as f64);
        acc += term;
        if term.norm() < 1e-18 {
            break;
        }
    }
    Ok(acc)
}

/// Σ_{p > P} p^{−e}: prime zeta minus the explicit partial sum.
fn prime_zeta_tail(e: Complex64, cutoff: u64) -> Result<Complex64, CritStripError> {
    let mut partial = Complex64::new(0.0, 0.0);
    for &p in prime_cache() {
        if p as u64 > cutoff {
            break;
        }
        partial += (-e * (p as f64).ln()).exp();
    }
    Ok(prime_zeta(e)? - partial)
}

pub fn moment_constant(
    alpha1: Complex64,
    alpha2: Complex64,
) -> Result<MomentConstant, CritStripError> {
    moment_constant_with(alpha1, alpha2, DEFAULT_TRUNCATION_PRIME)
}

pub fn moment_constant_with(
    alpha1: Complex64,
    alpha2: Complex64,
    truncation_prime: u64,
) -> Result<MomentConstant, CritStripError> {
    for a in [alpha1, alpha2] {
        if a.re.abs() >= 0.5 {
            return Err(CritStripError::AlphaDomain(a.re));
        }
    }
    let one = Complex64::new(1.0, 0.0);
    let e1 = one + 2.0 * alpha1;
    let e2 = one + 2.0 * alpha2;
    let e3 = one + alpha1 + alpha2;
    for e in [e1, e2, e3] {
        if (e - one).norm() < 1e-12 {
            return Err(CritStripError::Divergent);
        }
    }

    let ln2 = std::f64::consts::LN_2;
    let mut value = Complex64::new(1.0, 0.0);
    for e in [e1, e2, e3] {
        value *= zeta_complex(e)? * (one - (-e * ln2).exp());
    }

    let cutoff = truncation_prime.min(DEFAULT_TRUNCATION_PRIME);
    for &p in prime_cache() {
        if p == 2 {
            continue;
        }
        if p as u64 > cutoff {
            break;
        }
        let lp = (p as f64).ln();
        let x = (-(alpha1 + 0.5) * lp).exp();
        let y = (-(alpha2 + 0.5) * lp).exp();
        let w = 1.0 / p as f64;
        let (x2, y2, xy) = (x * x, y * y, x * y);
        let h = ((one - x2 * y2) + w * (one - xy) * (one - x2) * (one - y2)) / (1.0 + w);
        value *= h;
    }

    // quadratic tail: log h_p = −(p^{−2−α₁−α₂} + p^{−2−2α₁} + p^{−2−2α₂}
    //                            + p^{−2−2α₁−2α₂}) + O(p^{−3−2 min(Re α,0)})
    let two = Complex64::new(2.0, 0.0);
    let mut corr = Complex64::new(0.0, 0.0);
    for e in [
        two + alpha1 + alpha2,
        two + 2.0 * alpha1,
        two + 2.0 * alpha2,
        two + 2.0 * (alpha1 + alpha2),
    ] {
        corr -= prime_zeta_tail(e, cutoff)?;
    }
    value *= corr.exp();

    let a_min = alpha1.re.min(alpha2.re).min(0.0);
    let e_res = 3.0 + 2.0 * a_min;
    let tail_bound = 20.0 * (cutoff as f64).powf(1.0 - e_res) / (e_res - 1.0) + 1e-13;

    Ok(MomentConstant {
        alpha1,
        alpha2,
        value,
        truncation_prime: cutoff,
        tail_bound,
    })
}

/// The threshold together with the accuracy actually achieved for A.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BThreshold {
    pub value: f64,
    /// Relative accuracy bound inherited from the moment constant.
    pub moment_accuracy: f64,
}

/// B(s) = |ζ(s)|·(e^{1/2}·A_{s−1/2, s̄−1/2}·8I/9)^{1/2} for 1/2 < Re(s) < 1.
pub fn b_threshold(s: Complex64) -> Result<BThreshold, CritStripError> {
    if !(s.re > 0.5 && s.re < 1.0) {
        return Err(CritStripError::StripDomain(s.re));
    }
    let alpha = s - 0.5;
    let a = moment_constant(alpha, alpha.conj())?;
    let zeta_abs = zeta_complex(s)?.norm();
    let i = i_integral();
    let value = zeta_abs * (0.5f64.exp() * a.value.re * 8.0 * i / 9.0).sqrt();
    Ok(BThreshold {
        value,
        moment_accuracy: 0.5 * a.tail_bound + 1e-12,
    })
}
