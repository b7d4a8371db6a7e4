//! Computer-assisted tracing of the boundary of the proven Northcott region.
//!
//! The σ-axis is subdivided into short segments [α, β]. On each segment the
//! factors of the criterion are worst-cased through their monotonicity: the
//! gamma/zeta part decreases in σ (outside the circle |z − 0.5| < 1.1, which
//! is why every evaluation is kept at distance ≥ 1.1 from 0.5), while each
//! |sin| factor is monotone between consecutive integers resp. half-integers
//! and is evaluated at its minimizing endpoint. A certificate that holds at
//! height t therefore holds for every σ in the segment — and, since both
//! ratios grow with τ, for every τ ≥ t.
//!
//! Both the complex-factor and the real-factor certificates must hold: the
//! criterion bounds the functional-equation factor through the *minimum* of
//! the two ratios, so certifying only one branch proves nothing about fields
//! with places of the other kind.

use crate::criteria::{self, CriteriaError};
use crate::specfun::{
    log_abs_gamma, log_abs_sin_half_pi, log_abs_sin_pi, zeta_real, Constants, SpecFunError,
};
use crate::NumericsConfig;
use num_complex::Complex64;
use std::f64::consts::PI;
use std::sync::OnceLock;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum BoundaryError {
    #[error("invalid interval: {0}")]
    InvalidInterval(&'static str),
    #[error("segment [{alpha}, {beta}] does not fit a single monotonicity window")]
    WindowViolation { alpha: f64, beta: f64 },
    #[error("evaluation at ({sigma}, {tau}) violates the distance-1.1 circle around 0.5")]
    CircleViolation { sigma: f64, tau: f64 },
    #[error("no height up to {ceiling} certifies segment [{alpha}, {beta}]")]
    NotFound { alpha: f64, beta: f64, ceiling: f64 },
    #[error("circle fit requires a negative integer center, got {0}")]
    BadCenter(i32),
    #[error("the failure region around {center} is smaller than doubles can resolve there (radius floor {floor:e})")]
    BelowResolution { center: i32, floor: f64 },
    #[error(transparent)]
    Criteria(#[from] CriteriaError),
    #[error(transparent)]
    SpecFun(#[from] SpecFunError),
}

/// Which monotonicity case applies to a segment, per |sin| factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    /// |sin(πσ)| increasing on [n, n+1/2]: evaluate at α.
    CIncreasing,
    /// |sin(πσ)| decreasing on [n−1/2, n]: evaluate at β.
    CDecreasing,
    /// |sin(πσ/2)| increasing on [2n, 2n+1]: evaluate at α.
    RIncreasing,
    /// |sin(πσ/2)| decreasing on [2n−1, 2n]: evaluate at β.
    RDecreasing,
}

/// A certified segment: for every σ ∈ [alpha, beta] and τ ≥ tau_min the
/// Northcott criterion holds.
#[derive(Debug, Clone, PartialEq)]
pub struct Subinterval {
    pub alpha: f64,
    pub beta: f64,
    pub c_branch: Branch,
    pub r_branch: Branch,
    pub tau_min: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundaryCurve {
    pub segments: Vec<Subinterval>,
    pub delta: f64,
    pub range: (f64, f64),
}

const SEARCH_CEILING: f64 = 50.0;
const ALIGN_EPS: f64 = 1e-9;

/// Monotonicity branches for a segment, or an error when it straddles a
/// half-integer (complex factor) or integer (real factor) cut.
pub fn segment_branches(alpha: f64, beta: f64) -> Result<(Branch, Branch), BoundaryError> {
    if !(alpha < beta) || !alpha.is_finite() || !beta.is_finite() {
        return Err(BoundaryError::InvalidInterval("need alpha < beta, finite"));
    }
    if beta > 0.0 {
        return Err(BoundaryError::InvalidInterval(
            "certificates only apply left of the imaginary axis",
        ));
    }
    let k = (2.0 * alpha + ALIGN_EPS).floor();
    if 2.0 * beta > k + 1.0 + ALIGN_EPS {
        return Err(BoundaryError::WindowViolation { alpha, beta });
    }
    let c_branch = if (k as i64).rem_euclid(2) == 0 {
        Branch::CIncreasing
    } else {
        Branch::CDecreasing
    };
    let m = (alpha + ALIGN_EPS).floor();
    if beta > m + 1.0 + ALIGN_EPS {
        return Err(BoundaryError::WindowViolation { alpha, beta });
    }
    let r_branch = if (m as i64).rem_euclid(2) == 0 {
        Branch::RIncreasing
    } else {
        Branch::RDecreasing
    };
    Ok((c_branch, r_branch))
}

fn circle_check(beta: f64, t: f64) -> Result<(), BoundaryError> {
    // closest segment point to 0.5 is the right endpoint
    let d2 = (beta - 0.5) * (beta - 0.5) + t * t;
    if d2 < 1.1 * 1.1 - 1e-12 {
        return Err(BoundaryError::CircleViolation {
            sigma: beta,
            tau: t,
        });
    }
    Ok(())
}

/// Smallest height at which the circle constraint admits evaluation.
fn circle_floor(beta: f64) -> f64 {
    let d2 = 1.1 * 1.1 - (beta - 0.5) * (beta - 0.5);
    if d2 > 0.0 {
        d2.sqrt()
    } else {
        0.0
    }
}

/// Segment-independent part of the certificate at height t, in log form.
fn segment_base(beta: f64, t: f64) -> Result<f64, BoundaryError> {
    let c = Constants::get();
    let lg = log_abs_gamma(Complex64::new(1.0 - beta, -t))?;
    Ok((0.5 - beta) * (c.d_min / (2.0 * PI)).ln() + lg - zeta_real(1.0 - beta)?.ln())
}

fn branch_log_value(alpha: f64, beta: f64, t: f64, branch: Branch) -> Result<f64, BoundaryError> {
    let base = segment_base(beta, t)?;
    Ok(match branch {
        Branch::CIncreasing => {
            -0.5 * PI.ln() + base + 0.5 * log_abs_sin_pi(Complex64::new(alpha, t))
        }
        Branch::CDecreasing => {
            -0.5 * PI.ln() + base + 0.5 * log_abs_sin_pi(Complex64::new(beta, t))
        }
        Branch::RIncreasing => {
            0.5 * (2.0 / PI).ln() + base + log_abs_sin_half_pi(Complex64::new(alpha, t))
        }
        Branch::RDecreasing => {
            0.5 * (2.0 / PI).ln() + base + log_abs_sin_half_pi(Complex64::new(beta, t))
        }
    })
}

/// One monotonicity case of the certificate: true when the displayed
/// inequality holds, which proves the corresponding ratio condition for all
/// σ ∈ [alpha, beta] at height t (and above).
pub fn branch_certificate(
    alpha: f64,
    beta: f64,
    t: f64,
    branch: Branch,
) -> Result<bool, BoundaryError> {
    let (cb, rb) = segment_branches(alpha, beta)?;
    if branch != cb && branch != rb {
        return Err(BoundaryError::WindowViolation { alpha, beta });
    }
    circle_check(beta, t)?;
    Ok(branch_log_value(alpha, beta, t, branch)? > 0.0)
}

/// The sound certificate for the full criterion: both the complex-factor and
/// the real-factor cases must hold, because the criterion goes through the
/// minimum of the two ratios.
pub fn certified_condition(alpha: f64, beta: f64, t: f64) -> Result<bool, BoundaryError> {
    let (cb, rb) = segment_branches(alpha, beta)?;
    circle_check(beta, t)?;
    Ok(branch_log_value(alpha, beta, t, cb)? > 0.0
        && branch_log_value(alpha, beta, t, rb)? > 0.0)
}

fn branch_min_tau(
    alpha: f64,
    beta: f64,
    branch: Branch,
    floor: f64,
    rel_tol: f64,
) -> Result<f64, BoundaryError> {
    if branch_log_value(alpha, beta, floor, branch)? > 0.0 {
        return Ok(floor);
    }
    let mut lo = floor;
    let mut hi = if floor > 0.0 { 1.5 * floor } else { 0.05 };
    loop {
        if hi > SEARCH_CEILING {
            return Err(BoundaryError::NotFound {
                alpha,
                beta,
                ceiling: SEARCH_CEILING,
            });
        }
        if branch_log_value(alpha, beta, hi, branch)? > 0.0 {
            break;
        }
        lo = hi;
        hi *= 2.0;
    }
    while hi - lo > rel_tol * hi {
        let mid = 0.5 * (lo + hi);
        if branch_log_value(alpha, beta, mid, branch)? > 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(hi)
}

/// Smallest certified height for a segment (0 when it certifies on the real
/// axis). Errors when nothing up to τ = 50 certifies.
pub fn min_tau(alpha: f64, beta: f64) -> Result<f64, BoundaryError> {
    min_tau_with(alpha, beta, &NumericsConfig::default())
}

pub fn min_tau_with(
    alpha: f64,
    beta: f64,
    cfg: &NumericsConfig,
) -> Result<f64, BoundaryError> {
    let (cb, rb) = segment_branches(alpha, beta)?;
    let floor = circle_floor(beta);
    let tc = branch_min_tau(alpha, beta, cb, floor, cfg.bisection_rel_tol)?;
    let tr = branch_min_tau(alpha, beta, rb, floor, cfg.bisection_rel_tol)?;
    Ok(tc.max(tr))
}

/// Subdivide [from, to] into segments of length `delta` (split additionally
/// at every half-integer so each piece sits in single monotonicity windows)
/// and certify the minimal height of each.
pub fn build_boundary(from: f64, to: f64, delta: f64) -> Result<BoundaryCurve, BoundaryError> {
    build_boundary_with(from, to, delta, &NumericsConfig::default())
}

pub fn build_boundary_with(
    from: f64,
    to: f64,
    delta: f64,
    cfg: &NumericsConfig,
) -> Result<BoundaryCurve, BoundaryError> {
    if !(from < to) || !(to <= -0.05) {
        return Err(BoundaryError::InvalidInterval(
            "need from < to <= -0.05",
        ));
    }
    if !(delta > 0.0) {
        return Err(BoundaryError::InvalidInterval("need delta > 0"));
    }
    let mut cuts = Vec::new();
    let mut x = from;
    let mut i = 1u64;
    while x < to - 1e-12 {
        cuts.push(x);
        x = from + i as f64 * delta;
        i += 1;
    }
    cuts.push(to);
    // split at half-integer window boundaries
    let mut h = (2.0 * from).ceil() / 2.0;
    while h < to {
        if h > from {
            cuts.push(h);
        }
        h += 0.5;
    }
    cuts.sort_by(|a, b| a.partial_cmp(b).unwrap());
    cuts.dedup_by(|a, b| (*a - *b).abs() < 1e-12);

    let mut segments = Vec::with_capacity(cuts.len() - 1);
    for pair in cuts.windows(2) {
        let (alpha, beta) = (pair[0], pair[1]);
        let (c_branch, r_branch) = segment_branches(alpha, beta)?;
        let tau_min = min_tau_with(alpha, beta, cfg)?;
        segments.push(Subinterval {
            alpha,
            beta,
            c_branch,
            r_branch,
            tau_min,
        });
    }
    Ok(BoundaryCurve {
        segments,
        delta,
        range: (from, to),
    })
}

impl BoundaryCurve {
    /// Minimal distance from any certified segment endpoint (σ, τ_min) to
    /// the point 0.5 on the real axis.
    pub fn min_distance_to_half(&self) -> f64 {
        let mut best = f64::INFINITY;
        for seg in &self.segments {
            for sigma in [seg.alpha, seg.beta] {
                let d = ((sigma - 0.5) * (sigma - 0.5) + seg.tau_min * seg.tau_min).sqrt();
                best = best.min(d);
            }
        }
        best
    }

    /// Certified height at a given σ, if the curve covers it.
    pub fn tau_at(&self, sigma: f64) -> Option<f64> {
        self.segments
            .iter()
            .find(|s| s.alpha <= sigma && sigma <= s.beta)
            .map(|s| s.tau_min)
    }

    /// CSV serialization: `sigma_lo,sigma_hi,tau_min`, one line per segment.
    pub fn to_csv(&self, sig_digits: usize) -> String {
        let mut out = String::from("sigma_lo,sigma_hi,tau_min\n");
        let p = sig_digits.saturating_sub(1);
        for s in &self.segments {
            out.push_str(&format!(
                "{:.*e},{:.*e},{:.*e}\n",
                p, s.alpha, p, s.beta, p, s.tau_min
            ));
        }
        out
    }
}

/// Smallest circle radius around a negative integer such that the Northcott
/// criterion holds at every sampled angle (step π/512 over the upper half;
/// the condition is conjugation-symmetric). Bisection in the radius to
/// relative 1e-12.
///
/// Deep centers have failure regions below what doubles can resolve around
/// the center (points `center + r·e^{iθ}` with r under a few ulps of
/// |center| collapse onto the center itself); those report
/// [`BoundaryError::BelowResolution`] instead of a junk radius.
pub fn fit_circle_radius(center: i32) -> Result<f64, BoundaryError> {
    if center >= 0 {
        return Err(BoundaryError::BadCenter(center));
    }
    let c = center as f64;
    let all_hold = |r: f64| -> Result<bool, BoundaryError> {
        for k in 0..=512u32 {
            let theta = PI * k as f64 / 512.0;
            let s = Complex64::new(c + r * theta.cos(), r * theta.sin());
            if criteria::northcott_log_lhs(s)? <= 0.0 {
                return Ok(false);
            }
        }
        Ok(true)
    };
    let mut hi = 0.25;
    if !all_hold(hi)? {
        return Err(BoundaryError::NotFound {
            alpha: c,
            beta: c,
            ceiling: hi,
        });
    }
    let mut lo = 0.0;
    while hi - lo > 1e-12 * hi {
        let mid = 0.5 * (lo + hi);
        if all_hold(mid)? {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    let floor = 64.0 * f64::EPSILON * c.abs();
    if hi < floor {
        return Err(BoundaryError::BelowResolution { center, floor });
    }
    Ok(hi)
}

/// The real abscissa σ₁ ∈ (−0.75, −0.6) where the complex-factor criterion
/// equals one on the real axis: γ_C(σ)·D_min^{1/2−σ}/ζ(1−σ) = 1.
pub fn sigma1() -> f64 {
    static SIGMA1: OnceLock<f64> = OnceLock::new();
    *SIGMA1.get_or_init(|| {
        let c = Constants::get();
        let f = |sigma: f64| -> f64 {
            let s = Complex64::new(sigma, 0.0);
            crate::ratios::log_gamma_c_ratio(s).expect("sigma < 1")
                + (0.5 - sigma) * c.d_min.ln()
                - zeta_real(1.0 - sigma).expect("arg > 1").ln()
        };
        let (mut lo, mut hi) = (-0.75, -0.6);
        debug_assert!(f(lo) > 0.0 && f(hi) < 0.0);
        while hi - lo > 1e-10 {
            let mid = 0.5 * (lo + hi);
            if f(mid) > 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        0.5 * (lo + hi)
    })
}

/// Four-term truncation of the real part of the digamma series, in polar
/// coordinates centered at 0.5: −γ + Σ_{k=1}^4 (numerator_k / denominator_k).
pub fn truncated_polar(r: f64, x: f64) -> f64 {
    let c = x.cos();
    let mut acc = -crate::specfun::EULER_GAMMA;
    for k in 1..=4u32 {
        let kf = k as f64;
        let num = 4.0 * r * r + 4.0 * (kf - 1.0) * r * c - 2.0 * kf + 1.0;
        let den = 4.0 * kf * r * r
            + 4.0 * (2.0 * kf * kf - kf) * r * c
            + 4.0 * kf * kf * kf
            - 4.0 * kf * kf
            + kf;
        acc += num / den;
    }
    acc
}

/// Positivity witness for the digamma real part on the circle of radius 1.1:
/// the truncated polar expression at its minimizing angle x = 0.
pub fn psi_positivity_check() -> f64 {
    truncated_polar(1.1, 0.0)
}

/// Evaluate the Northcott criterion on a grid; σ range must stay negative.
pub fn grid_scan(
    rect: (f64, f64, f64, f64),
    step: f64,
) -> Result<Vec<(Complex64, bool)>, BoundaryError> {
    let (sigma_lo, sigma_hi, tau_lo, tau_hi) = rect;
    if sigma_hi >= 0.0 {
        return Err(BoundaryError::InvalidInterval("grid requires sigma_hi < 0"));
    }
    if !(step > 0.0) {
        return Err(BoundaryError::InvalidInterval("need step > 0"));
    }
    let mut out = Vec::new();
    let mut i = 0u64;
    loop {
        let sigma = sigma_lo + i as f64 * step;
        if sigma > sigma_hi + 1e-12 {
            break;
        }
        let mut j = 0u64;
        loop {
            let tau = tau_lo + j as f64 * step;
            if tau > tau_hi + 1e-12 {
                break;
            }
            let s = Complex64::new(sigma, tau);
            let holds = criteria::northcott_log_lhs(s)? > 0.0;
            out.push((s, holds));
            j += 1;
        }
        i += 1;
    }
    Ok(out)
}

/// CSV serialization of grid data: `sigma,tau,holds` with holds as 0/1.
pub fn grid_to_csv(points: &[(Complex64, bool)], sig_digits: usize) -> String {
    let mut out = String::from("sigma,tau,holds\n");
    let p = sig_digits.saturating_sub(1);
    for (s, holds) in points {
        out.push_str(&format!(
            "{:.*e},{:.*e},{}\n",
            p,
            s.re,
            p,
            s.im,
            if *holds { 1 } else { 0 }
        ));
    }
    out
}
