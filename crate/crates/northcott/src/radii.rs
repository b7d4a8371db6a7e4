//! Closed-form radii and thresholds around the negative integers.
//!
//! For every center −m the strip |τ| ≤ τ₀ is covered by discs in which the
//! Northcott criterion is guaranteed outside an explicit radius (`rho_even`,
//! `rho_odd`), while a much smaller disc around the center is proven
//! non-Northcott (`non_northcott_radius`). `tau_threshold` gives the
//! effective height above which the criterion holds for any σ < 0.

use crate::specfun::{log_abs_gamma_real, zeta_real, Constants, SpecFunError, EULER_GAMMA};
use std::f64::consts::PI;
use std::sync::OnceLock;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum RadiiError {
    #[error("{0}")]
    Domain(&'static str),
    #[error("no radius exists: the circle coefficient {value} is not below 1")]
    ArgumentRange { value: f64 },
    #[error("covering inequality violated at n = {n}: the admissible ring does not reach the strip corner")]
    CoveringViolation { n: u32 },
    #[error(transparent)]
    SpecFun(#[from] SpecFunError),
}

/// τ₀ = (2/π)·atanh(ζ(5/2) / (3√2·e^{2γ})) ≈ 0.063666.
pub fn tau0() -> f64 {
    static TAU0: OnceLock<f64> = OnceLock::new();
    *TAU0.get_or_init(|| {
        let z = zeta_real(2.5).expect("2.5 > 1");
        let x = z / (3.0 * 2f64.sqrt() * (2.0 * EULER_GAMMA).exp());
        (2.0 / PI) * x.atanh()
    })
}

/// cosh(π·τ₀).
pub fn cosh_pi_tau0() -> f64 {
    (PI * tau0()).cosh()
}

/// cosh(π·τ₀/2).
pub fn cosh_half_pi_tau0() -> f64 {
    (0.5 * PI * tau0()).cosh()
}

/// √(1/4 + τ₀²), the disc radius needed to cover the strip |τ| ≤ τ₀ from
/// circles centered at consecutive integers.
pub fn covering_radius() -> f64 {
    let t = tau0();
    (0.25 + t * t).sqrt()
}

/// The constants entering the closed-form radii. [`ClosedFormConstants::exact`]
/// uses the full-precision values; the [`mod@reference`] module keeps the
/// rounded literals under which the bundled reference table was tabulated.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClosedFormConstants {
    pub d_min: f64,
    pub cosh_pi_tau0: f64,
    pub cosh_half_pi_tau0: f64,
}

impl ClosedFormConstants {
    pub fn exact() -> Self {
        Self {
            d_min: Constants::get().d_min,
            cosh_pi_tau0: cosh_pi_tau0(),
            cosh_half_pi_tau0: cosh_half_pi_tau0(),
        }
    }
}

fn log_zeta_over_gamma(arg: f64) -> Result<f64, RadiiError> {
    Ok(zeta_real(arg)?.ln() - log_abs_gamma_real(arg))
}

/// Radius ρ(−2n) of the circle around the even center −2n outside of which
/// (within the strip |τ| ≤ τ₀) the Northcott property holds for every B.
pub fn rho_even(n: u32) -> Result<f64, RadiiError> {
    rho_even_with(n, &ClosedFormConstants::exact())
}

/// The circle coefficients (C_C(n), C_R(n)) entering the even radius; both
/// must stay below 1 for a radius to exist.
pub fn even_circle_coefficients(
    n: u32,
    c: &ClosedFormConstants,
) -> Result<(f64, f64), RadiiError> {
    if n == 0 {
        return Err(RadiiError::Domain("rho_even requires n >= 1"));
    }
    let ln_ratio = (2.0 * PI / c.d_min).ln();
    let lzg = log_zeta_over_gamma(2.0 * n as f64 + 0.5)?;
    let cc = (PI.ln() + 4.0 * n as f64 * ln_ratio + 2.0 * lzg + c.cosh_pi_tau0.ln()).exp();
    let cr = (0.5 * (PI / 2.0).ln() + 2.0 * n as f64 * ln_ratio + lzg
        + c.cosh_half_pi_tau0.ln())
    .exp();
    Ok((cc, cr))
}

pub fn rho_even_with(n: u32, c: &ClosedFormConstants) -> Result<f64, RadiiError> {
    let (cc, cr) = even_circle_coefficients(n, c)?;
    if cc >= 1.0 {
        return Err(RadiiError::ArgumentRange { value: cc });
    }
    if cr >= 1.0 {
        return Err(RadiiError::ArgumentRange { value: cr });
    }
    // the ring [rho, upper) must reach the corner radius sqrt(1/4 + tau0^2)
    let upper = (1.0 - cc.asin() / PI).min(2.0 - 2.0 * cr.asin() / PI);
    if covering_radius() >= upper {
        return Err(RadiiError::CoveringViolation { n });
    }
    Ok((cc.asin() / PI).max(2.0 * cr.asin() / PI))
}

/// Radius ρ(−2n+1) around the odd center −2n+1, n ≥ 2.
pub fn rho_odd(n: u32) -> Result<f64, RadiiError> {
    rho_odd_with(n, &ClosedFormConstants::exact())
}

pub fn rho_odd_with(n: u32, c: &ClosedFormConstants) -> Result<f64, RadiiError> {
    if n < 2 {
        return Err(RadiiError::Domain("rho_odd requires n >= 2"));
    }
    let ln_ratio = (2.0 * PI / c.d_min).ln();
    let lzg = log_zeta_over_gamma(2.0 * n as f64 - 0.5)?;
    let arg = (PI.ln() + (4.0 * n as f64 - 2.0) * ln_ratio + 2.0 * lzg
        + c.cosh_pi_tau0.ln())
    .exp();
    if arg >= 1.0 {
        return Err(RadiiError::ArgumentRange { value: arg });
    }
    Ok(arg.asin() / PI)
}

/// The criterion guaranteeing that near odd centers the real-factor branch
/// never obstructs: returns (holds, lhs) where the property needs lhs > 1.
///
/// The cosine is kept signed: once √(1/4+τ₀²) passes 1 the bound becomes
/// vacuous and the criterion must report failure.
pub fn odd_real_criterion(n: u32) -> (bool, f64) {
    odd_real_criterion_with_tau(n, tau0())
}

pub fn odd_real_criterion_with_tau(n: u32, tau: f64) -> (bool, f64) {
    debug_assert!(n >= 2);
    let c = Constants::get();
    let arg = 2.0 * n as f64 - 0.5;
    let zeta = zeta_real(arg).expect("arg > 1");
    let gamma = log_abs_gamma_real(arg).exp();
    let r_corner = (0.25 + tau * tau).sqrt();
    let cos_part = (0.5 * PI * r_corner).cos();
    let lhs = (2.0 / PI).sqrt() * gamma / zeta * (cos_part / (0.5 * PI * tau).cosh())
        * (c.d_min / (2.0 * PI)).powf(2.0 * n as f64 - 1.0);
    (lhs > 1.0, lhs)
}

/// Radius of the disc around −n proven non-Northcott for every B:
/// (1/π)·asinh(π/(Γ(n+3/2)²ζ(n+1/2)²)·(2π/D_max)^{2n+2}).
pub fn non_northcott_radius(n: u32) -> Result<f64, RadiiError> {
    non_northcott_radius_with(n, Constants::get().d_max)
}

pub fn non_northcott_radius_with(n: u32, d_max: f64) -> Result<f64, RadiiError> {
    if n == 0 {
        return Err(RadiiError::Domain("non_northcott_radius requires n >= 1"));
    }
    let nf = n as f64;
    let y = (PI.ln() - 2.0 * log_abs_gamma_real(nf + 1.5) - 2.0 * zeta_real(nf + 0.5)?.ln()
        + (2.0 * nf + 2.0) * (2.0 * PI / d_max).ln())
    .exp();
    // for tiny arguments asinh(y) = y to well below double rounding
    let r = if y < 1e-8 { y } else { y.asinh() };
    Ok(r / PI)
}

/// Effective height threshold: for σ < 0 and |τ| above the returned value
/// the Northcott criterion holds. With x = (D_min/2π)^{2σ−1}·ζ(1−σ)²/Γ(1−σ)²
/// this is x/tanh(πx/2); it tends to 2/π as σ → −∞.
pub fn tau_threshold(sigma: f64) -> Result<f64, RadiiError> {
    if !(sigma < 0.0) {
        return Err(RadiiError::Domain("tau_threshold requires sigma < 0"));
    }
    let c = Constants::get();
    let arg = 1.0 - sigma;
    let x = ((2.0 * sigma - 1.0) * (c.d_min / (2.0 * PI)).ln() + 2.0 * zeta_real(arg)?.ln()
        - 2.0 * log_abs_gamma_real(arg))
    .exp();
    if x == 0.0 {
        return Ok(2.0 / PI);
    }
    Ok(x / (0.5 * PI * x).tanh())
}

/// One row of the radii table for a negative center.
#[derive(Debug, Clone, PartialEq)]
pub struct RadiiRow {
    pub center: i32,
    /// None for −1, where no closed form exists.
    pub closed_form_radius: Option<f64>,
    pub non_northcott_radius: f64,
    /// Filled by the boundary module's circle fit.
    pub numerical_radius: Option<f64>,
}

/// Closed-form radius for a negative center with explicit constants
/// (None at −1, even/odd dispatch elsewhere).
pub fn closed_form_radius_with(
    center: i32,
    c: &ClosedFormConstants,
) -> Result<Option<f64>, RadiiError> {
    if center >= 0 {
        return Err(RadiiError::Domain("center must be a negative integer"));
    }
    if center == -1 {
        return Ok(None);
    }
    let m = (-center) as u32;
    if m.is_multiple_of(2) {
        rho_even_with(m / 2, c).map(Some)
    } else {
        rho_odd_with(m.div_ceil(2), c).map(Some)
    }
}

pub fn closed_form_radius(center: i32) -> Result<Option<f64>, RadiiError> {
    closed_form_radius_with(center, &ClosedFormConstants::exact())
}

/// The conventions under which the bundled reference radii were tabulated.
///
/// The reference tabulation entered the discriminant bounds as the rounded
/// literals 22.38 (22.3815 for the deeper even centers) and 78.43, and for
/// the odd centers evaluated cosh(πτ₀) at τ₀ = 0.064. The functions here
/// keep those roundings verbatim so the reference values reproduce digit
/// for digit; the parent module computes the same formulas from the
/// full-precision constants.
pub mod reference {
    use super::*;

    pub const D_MIN_ROUNDED: f64 = 22.38;
    pub const D_MIN_ROUNDED_EVEN_DEEP: f64 = 22.3815;
    pub const D_MAX_ROUNDED: f64 = 78.43;
    pub const TAU0_ROUNDED_ODD: f64 = 0.064;

    fn even_constants(n: u32) -> ClosedFormConstants {
        ClosedFormConstants {
            d_min: if n == 1 {
                D_MIN_ROUNDED
            } else {
                D_MIN_ROUNDED_EVEN_DEEP
            },
            cosh_pi_tau0: cosh_pi_tau0(),
            cosh_half_pi_tau0: cosh_half_pi_tau0(),
        }
    }

    fn odd_constants() -> ClosedFormConstants {
        ClosedFormConstants {
            d_min: D_MIN_ROUNDED,
            cosh_pi_tau0: (PI * TAU0_ROUNDED_ODD).cosh(),
            cosh_half_pi_tau0: (0.5 * PI * TAU0_ROUNDED_ODD).cosh(),
        }
    }

    pub fn closed_form_radius(center: i32) -> Result<Option<f64>, RadiiError> {
        if center >= 0 {
            return Err(RadiiError::Domain("center must be a negative integer"));
        }
        if center == -1 {
            return Ok(None);
        }
        let m = (-center) as u32;
        if m.is_multiple_of(2) {
            rho_even_with(m / 2, &even_constants(m / 2)).map(Some)
        } else {
            rho_odd_with(m.div_ceil(2), &odd_constants()).map(Some)
        }
    }

    pub fn non_northcott_radius(center: i32) -> Result<f64, RadiiError> {
        if center >= 0 {
            return Err(RadiiError::Domain("center must be a negative integer"));
        }
        super::non_northcott_radius_with((-center) as u32, D_MAX_ROUNDED)
    }

    /// Table rows under the reference convention; the numerical column is
    /// left empty for the boundary module to fill.
    pub fn rows(centers: &[i32]) -> Result<Vec<RadiiRow>, RadiiError> {
        centers
            .iter()
            .map(|&center| {
                Ok(RadiiRow {
                    center,
                    closed_form_radius: closed_form_radius(center)?,
                    non_northcott_radius: non_northcott_radius(center)?,
                    numerical_radius: None,
                })
            })
            .collect()
    }
}
