use thiserror::Error;

/// Numerical knobs shared by the evaluation and certification routines.
///
/// The backend is IEEE double precision (about 16 decimal digits);
/// `working_precision` controls how many significant digits are emitted when
/// results are serialized, not the arithmetic itself.
#[derive(Debug, Clone, PartialEq)]
pub struct NumericsConfig {
    /// Output precision in decimal digits, at least 15.
    pub working_precision: u32,
    /// Term count for the brute-force series used as validation oracles.
    pub series_truncation: usize,
    /// Relative tolerance for every bisection (minimal-τ search, circle
    /// fitting, root finding).
    pub bisection_rel_tol: f64,
    /// Absolute tolerance for adaptive quadrature.
    pub quadrature_abs_tol: f64,
}

impl Default for NumericsConfig {
    fn default() -> Self {
        Self {
            working_precision: 15,
            series_truncation: 1_000_000,
            bisection_rel_tol: 1e-12,
            quadrature_abs_tol: 1e-12,
        }
    }
}

#[derive(Debug, Error, PartialEq)]
pub enum ConfigError {
    #[error("working_precision must be at least 15 digits, got {0}")]
    Precision(u32),
    #[error("series_truncation must be at least 50, got {0}")]
    Truncation(usize),
    #[error("bisection_rel_tol must lie in (0, 1e-9], got {0}")]
    BisectionTol(f64),
    #[error("quadrature_abs_tol must be positive, got {0}")]
    QuadratureTol(f64),
}

impl NumericsConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.working_precision < 15 {
            return Err(ConfigError::Precision(self.working_precision));
        }
        if self.series_truncation < 50 {
            return Err(ConfigError::Truncation(self.series_truncation));
        }
        if !(self.bisection_rel_tol > 0.0 && self.bisection_rel_tol <= 1e-9) {
            return Err(ConfigError::BisectionTol(self.bisection_rel_tol));
        }
        if !(self.quadrature_abs_tol > 0.0) {
            return Err(ConfigError::QuadratureTol(self.quadrature_abs_tol));
        }
        Ok(())
    }
}
