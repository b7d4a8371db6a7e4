//! The sufficient conditions deciding the Northcott property at a point,
//! and the classifier assembling them into a verdict.
//!
//! For σ < 0 the two criteria are
//!
//! ```text
//!   Γ_m(s) · D_min^{1/2−σ} / ζ(1−σ) > 1   ⟹  Northcott for every B > 0,
//!   γ_C(s) · ζ(1−σ) · D_max^{1/2−σ} < 1   ⟹  non-Northcott for every B > 0,
//! ```
//!
//! never both (D_min < D_max and Γ_m ≤ γ_C force the second left side above
//! the first). For σ > 1 quadratic fields give |ζ_K(s)| ≤ ζ(σ)², so the set
//! is infinite once B ≥ ζ(σ)². Inside 1/2 < σ < 1 the property fails under
//! GRH for every B, and unconditionally above the explicit threshold B(s).

use crate::critstrip::{self, CritStripError};
use crate::ratios::{self, RatioError};
use crate::specfun::{zeta_real, Constants, SpecFunError};
use crate::ComplexPoint;
use num_complex::Complex64;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum CriteriaError {
    #[error("operation requires Re(s) < 0, got {0}")]
    Domain(f64),
    #[error("sandwich bounds require sigma > 1, got {0}")]
    SandwichDomain(f64),
    #[error("degree must be at least 1")]
    Degree,
    #[error("no classification is available for Re(s) = {0}: the band 0 <= sigma <= 1/2 and the lines sigma = 0, 1/2, 1 are open")]
    UnsupportedRegion(f64),
    #[error(transparent)]
    Ratio(#[from] RatioError),
    #[error(transparent)]
    SpecFun(#[from] SpecFunError),
    #[error(transparent)]
    CritStrip(#[from] CritStripError),
}

/// Classification outcome.
#[derive(Debug, Clone, PartialEq)]
pub enum VerdictKind {
    /// The set of fields with |ζ_K*(s)| ≤ B is finite for every B > 0.
    NorthcottAllB,
    /// The set is infinite for every B > 0.
    NonNorthcottAllB,
    /// The set is infinite once B reaches the carried threshold.
    NonNorthcottForLargeB(f64),
    /// Non-Northcott for all B under GRH; unconditionally above the carried
    /// threshold B(s).
    ConditionalGrhNonNorthcott { unconditional_threshold: f64 },
    /// Neither criterion applies at this point.
    Unknown,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Verdict {
    pub kind: VerdictKind,
    /// Signed distance of the deciding inequality from 1 (zero when the
    /// verdict does not hinge on an inequality).
    pub margin: f64,
    /// Short tag naming the result that justifies the verdict.
    pub theorem_tag: &'static str,
}

/// log of the left side of the Northcott criterion; −∞ at the negative
/// integers, +∞ is never produced.
pub fn northcott_log_lhs(s: Complex64) -> Result<f64, CriteriaError> {
    if !(s.re < 0.0) {
        return Err(CriteriaError::Domain(s.re));
    }
    let c = Constants::get();
    let lg = ratios::log_gamma_m(s)?;
    Ok(lg + (0.5 - s.re) * c.d_min.ln() - zeta_real(1.0 - s.re)?.ln())
}

/// Northcott criterion at σ < 0: returns (holds, lhs) with
/// lhs = Γ_m(s)·D_min^{1/2−σ}/ζ(1−σ).
pub fn northcott_condition(s: Complex64) -> Result<(bool, f64), CriteriaError> {
    let log_lhs = northcott_log_lhs(s)?;
    Ok((log_lhs > 0.0, log_lhs.exp()))
}

/// log of the left side of the non-Northcott criterion.
pub fn non_northcott_log_lhs(s: Complex64) -> Result<f64, CriteriaError> {
    if !(s.re < 0.0) {
        return Err(CriteriaError::Domain(s.re));
    }
    let c = Constants::get();
    let lg = ratios::log_gamma_c_ratio(s)?;
    Ok(lg + (0.5 - s.re) * c.d_max.ln() + zeta_real(1.0 - s.re)?.ln())
}

/// Non-Northcott criterion at σ < 0: returns (fails_northcott, lhs) with
/// lhs = γ_C(s)·ζ(1−σ)·D_max^{1/2−σ}.
pub fn non_northcott_condition(s: Complex64) -> Result<(bool, f64), CriteriaError> {
    let log_lhs = non_northcott_log_lhs(s)?;
    Ok((log_lhs < 0.0, log_lhs.exp()))
}

/// The proven envelope (ζ(σ)^{−d}, ζ(σ)^{d}) for |ζ_K(σ+iτ)| over all fields
/// of degree d, valid for σ > 1.
pub fn sandwich_bounds(sigma: f64, degree: u32) -> Result<(f64, f64), CriteriaError> {
    if !(sigma > 1.0) {
        return Err(CriteriaError::SandwichDomain(sigma));
    }
    if degree == 0 {
        return Err(CriteriaError::Degree);
    }
    let z = zeta_real(sigma)?;
    let upper = z.powi(degree as i32);
    Ok((1.0 / upper, upper))
}

/// Strongest verdict available at `s`.
///
/// Exact negative integers short-circuit to [`VerdictKind::NorthcottAllB`]
/// with tag `"PP"`: the property is known to hold there even though both
/// numeric criteria degenerate (the punctured disc around each negative
/// integer is non-Northcott while its center is not).
pub fn classify(s: ComplexPoint) -> Result<Verdict, CriteriaError> {
    let sigma = s.re();
    let z: Complex64 = s.into();
    if s.is_negative_integer() {
        return Ok(Verdict {
            kind: VerdictKind::NorthcottAllB,
            margin: 0.0,
            theorem_tag: "PP",
        });
    }
    if sigma < 0.0 {
        let log14 = northcott_log_lhs(z)?;
        if log14 > 0.0 {
            return Ok(Verdict {
                kind: VerdictKind::NorthcottAllB,
                margin: log14.exp() - 1.0,
                theorem_tag: "northcott-criterion",
            });
        }
        let log15 = non_northcott_log_lhs(z)?;
        if log15 < 0.0 {
            return Ok(Verdict {
                kind: VerdictKind::NonNorthcottAllB,
                margin: log15.exp() - 1.0,
                theorem_tag: "non-northcott-criterion",
            });
        }
        return Ok(Verdict {
            kind: VerdictKind::Unknown,
            margin: log14.exp() - 1.0,
            theorem_tag: "none",
        });
    }
    if sigma > 1.0 {
        let z2 = zeta_real(sigma)?;
        return Ok(Verdict {
            kind: VerdictKind::NonNorthcottForLargeB(z2 * z2),
            margin: 0.0,
            theorem_tag: "zeta-sandwich",
        });
    }
    if sigma > 0.5 && sigma < 1.0 {
        let b = critstrip::b_threshold(z)?;
        return Ok(Verdict {
            kind: VerdictKind::ConditionalGrhNonNorthcott {
                unconditional_threshold: b.value,
            },
            margin: 0.0,
            theorem_tag: "grh-critical-strip",
        });
    }
    Err(CriteriaError::UnsupportedRegion(sigma))
}
