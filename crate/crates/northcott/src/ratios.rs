//! Ratios of the archimedean factors in the functional equation of a
//! Dedekind zeta function,
//!
//! ```text
//!   γ_R(s) = |Γ_R(1−s)/Γ_R(s)|,     Γ_R(s) = π^{−s/2} Γ(s/2),
//!   γ_C(s) = |Γ_C(1−s)/Γ_C(s)|^½,   Γ_C(s) = 2(2π)^{−s} Γ(s),
//!   Γ_m(s) = min(γ_R, γ_C),
//! ```
//!
//! evaluated through the reflected forms
//!
//! ```text
//!   γ_C(s)² = (2π)^{2σ−1} |Γ(1−s)|² |sin(πs)| / π,
//!   γ_R(s)  = π^{σ−1/2} |Γ((1−s)/2) Γ(1−s/2)| |sin(πs/2)| / π,
//! ```
//!
//! which never divide by Γ(s) and therefore stay finite (with exact zeros)
//! across the poles on the negative real axis. All computation happens in
//! log space so |τ| up to the boundary-scan range costs no accuracy.

use crate::specfun::{log_abs_gamma, log_abs_sin_half_pi, log_abs_sin_pi, SpecFunError};
use num_complex::Complex64;
use std::f64::consts::PI;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum RatioError {
    #[error("gamma-factor ratios are only defined for Re(s) < 1, got {0}")]
    Domain(f64),
    #[error(transparent)]
    SpecFun(#[from] SpecFunError),
}

/// Both ratios and their minimum at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GammaRatios {
    pub gamma_r: f64,
    pub gamma_c: f64,
    pub gamma_m: f64,
}

fn check_domain(s: Complex64) -> Result<(), RatioError> {
    if s.re < 1.0 {
        Ok(())
    } else {
        Err(RatioError::Domain(s.re))
    }
}

/// log γ_C(s); −∞ exactly at the non-positive integers.
pub fn log_gamma_c_ratio(s: Complex64) -> Result<f64, RatioError> {
    check_domain(s)?;
    let lg = log_abs_gamma(Complex64::new(1.0, 0.0) - s)?;
    Ok(0.5 * ((2.0 * s.re - 1.0) * (2.0 * PI).ln() + 2.0 * lg + log_abs_sin_pi(s) - PI.ln()))
}

/// log γ_R(s); −∞ exactly at zero and the negative even integers.
pub fn log_gamma_r_ratio(s: Complex64) -> Result<f64, RatioError> {
    check_domain(s)?;
    let one = Complex64::new(1.0, 0.0);
    let lg1 = log_abs_gamma((one - s) / 2.0)?;
    let lg2 = log_abs_gamma(one - s / 2.0)?;
    Ok((s.re - 0.5) * PI.ln() + lg1 + lg2 + log_abs_sin_half_pi(s) - PI.ln())
}

/// γ_C(s) = |Γ_C(1−s)/Γ_C(s)|^{1/2} ≥ 0, via the reflected form.
pub fn gamma_c_ratio(s: Complex64) -> Result<f64, RatioError> {
    Ok(log_gamma_c_ratio(s)?.exp())
}

/// γ_R(s) = |Γ_R(1−s)/Γ_R(s)| ≥ 0, via the reflected form.
pub fn gamma_r_ratio(s: Complex64) -> Result<f64, RatioError> {
    Ok(log_gamma_r_ratio(s)?.exp())
}

/// Both ratios and Γ_m(s) = min(γ_R(s), γ_C(s)).
pub fn gamma_m(s: Complex64) -> Result<GammaRatios, RatioError> {
    let gamma_r = gamma_r_ratio(s)?;
    let gamma_c = gamma_c_ratio(s)?;
    Ok(GammaRatios {
        gamma_r,
        gamma_c,
        gamma_m: gamma_r.min(gamma_c),
    })
}

/// log Γ_m(s) = min of the two log ratios (may be −∞).
pub fn log_gamma_m(s: Complex64) -> Result<f64, RatioError> {
    Ok(log_gamma_r_ratio(s)?.min(log_gamma_c_ratio(s)?))
}
