use num_complex::Complex64;
use thiserror::Error;

/// A point `s = σ + iτ` of the complex plane under classification.
///
/// Both coordinates are guaranteed finite; NaN or infinity never enters any
/// downstream operation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexPoint {
    re: f64,
    im: f64,
}

#[derive(Debug, Error, PartialEq)]
pub enum PointError {
    #[error("coordinates must be finite, got ({re}, {im})")]
    NonFinite { re: f64, im: f64 },
}

impl ComplexPoint {
    pub fn new(re: f64, im: f64) -> Result<Self, PointError> {
        if re.is_finite() && im.is_finite() {
            Ok(Self { re, im })
        } else {
            Err(PointError::NonFinite { re, im })
        }
    }

    /// Real part σ.
    pub fn re(&self) -> f64 {
        self.re
    }

    /// Imaginary part τ.
    pub fn im(&self) -> f64 {
        self.im
    }

    pub fn conj(&self) -> Self {
        Self {
            re: self.re,
            im: -self.im,
        }
    }

    /// True when the point is exactly a negative integer on the real axis.
    pub fn is_negative_integer(&self) -> bool {
        self.im == 0.0 && self.re < 0.0 && self.re == self.re.round()
    }
}

impl From<ComplexPoint> for Complex64 {
    fn from(p: ComplexPoint) -> Self {
        Complex64::new(p.re, p.im)
    }
}

impl TryFrom<Complex64> for ComplexPoint {
    type Error = PointError;

    fn try_from(z: Complex64) -> Result<Self, PointError> {
        Self::new(z.re, z.im)
    }
}

impl std::fmt::Display for ComplexPoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.im >= 0.0 {
            write!(f, "{}+{}i", self.re, self.im)
        } else {
            write!(f, "{}{}i", self.re, self.im)
        }
    }
}
