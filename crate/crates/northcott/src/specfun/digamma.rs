//! Digamma ψ(z) = Γ'(z)/Γ(z), computed by shifting the argument with the
//! recurrence ψ(z+1) = ψ(z) + 1/z until Re(z) ≥ 10 and then applying the
//! Bernoulli asymptotic expansion.

use super::{near_nonpositive_integer, SpecFunError};
use num_complex::Complex64;

/// B_{2k} / (2k) for k = 1..7.
const ASYMP: [f64; 7] = [
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32760.0,
    1.0 / 12.0,
];

const SHIFT_TO: f64 = 10.0;

pub fn digamma(z: Complex64) -> Result<Complex64, SpecFunError> {
    if near_nonpositive_integer(z) {
        return Err(SpecFunError::Pole { z });
    }
    let mut w = z;
    let mut shift = Complex64::new(0.0, 0.0);
    while w.re < SHIFT_TO {
        shift -= w.inv();
        w += 1.0;
    }
    let inv = w.inv();
    let inv2 = inv * inv;
    let mut acc = Complex64::new(0.0, 0.0);
    let mut p = inv2;
    for &c in &ASYMP {
        acc += c * p;
        p *= inv2;
    }
    Ok(w.ln() - 0.5 * inv - acc + shift)
}
