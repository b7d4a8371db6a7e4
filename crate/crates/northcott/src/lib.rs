//! Classification of complex points `s = σ + iτ` with respect to the
//! Northcott property of Dedekind zeta values.
//!
//! For a number field `K` write `ζ_K*(s)` for the leading Taylor coefficient
//! of its Dedekind zeta function at `s`. A point `s` has the Northcott
//! property for a bound `B > 0` when only finitely many isomorphism classes
//! of number fields satisfy `|ζ_K*(s)| ≤ B`. This crate decides, for a given
//! point, whether that property provably holds, provably fails, or is only
//! known conditionally, and reproduces the associated certified radii and
//! boundary curves:
//!
//! * [`specfun`] — complex gamma, digamma and Riemann zeta evaluation,
//!   self-contained and oracle-tested.
//! * [`ratios`] — the archimedean gamma-factor ratios `γ_R`, `γ_C` from the
//!   functional equation, in pole-safe reflected form.
//! * [`criteria`] — the sufficient conditions and the point classifier.
//! * [`radii`] — closed-form Northcott and non-Northcott radii around the
//!   negative integers, and the effective `τ` thresholds.
//! * [`boundary`] — the certified subdivision procedure that traces the
//!   boundary of the proven region, plus circle fitting.
//! * [`critstrip`] — the unconditional bound threshold `B(s)` inside the
//!   critical strip.
//! * [`counting`] — upper bounds for the number of fields below a bound.
//!
//! # Example
//!
//! ```
//! use northcott::{criteria, criteria::VerdictKind, ComplexPoint};
//!
//! let point = ComplexPoint::new(-2.5, 1.0).unwrap();
//! let verdict = criteria::classify(point).unwrap();
//! assert_eq!(verdict.kind, VerdictKind::NorthcottAllB);
//! assert!(verdict.margin > 0.0);
//! ```

// Domain guards are written as `!(x > a)` on purpose: the negation rejects
// NaN along with the out-of-range values, which `x <= a` would not.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod boundary;
pub mod counting;
pub mod criteria;
pub mod critstrip;
pub mod radii;
pub mod ratios;
pub mod specfun;

mod config;
mod point;

pub use config::{ConfigError, NumericsConfig};
pub use point::{ComplexPoint, PointError};
