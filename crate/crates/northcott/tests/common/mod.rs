//! Brute-force oracles, independent of the library's evaluation paths.
//!
//! Gamma goes through Euler's infinite product, digamma through its defining
//! series, zeta through the alternating eta series (analytic continuation)
//! or the Dirichlet series with an integral tail (real axis). Truncation
//! tails are corrected with Euler–Maclaurin sums of k^{-m} so a modest term
//! count reaches well below the comparison tolerances.

#![allow(dead_code)] // each test target uses its own subset

use num_complex::Complex64;

pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Kahan-compensated accumulator: a million-term oracle sum onto a large
/// running value would otherwise carry ~1e-11 of rounding drift.
struct Kahan {
    sum: Complex64,
    carry: Complex64,
}

impl Kahan {
    fn new() -> Self {
        Kahan {
            sum: Complex64::new(0.0, 0.0),
            carry: Complex64::new(0.0, 0.0),
        }
    }

    fn add(&mut self, v: Complex64) {
        let y = v - self.carry;
        let t = self.sum + y;
        self.carry = (t - self.sum) - y;
        self.sum = t;
    }
}

/// Σ_{k>K} k^{-m} for m = 2..5.
fn tail_power_sums(k: f64) -> [f64; 4] {
    [
        1.0 / k - 1.0 / (2.0 * k * k) + 1.0 / (6.0 * k * k * k),
        1.0 / (2.0 * k * k) - 1.0 / (2.0 * k * k * k) + 1.0 / (4.0 * k * k * k * k),
        1.0 / (3.0 * k * k * k) - 1.0 / (2.0 * k * k * k * k),
        1.0 / (4.0 * k * k * k * k),
    ]
}

/// log(1/Γ(z)) from the factors of Euler's infinite product:
/// 1/Γ(z) = z e^{γz} Π_{k=1}^{K} (1+z/k) e^{-z/k}, plus the series tail.
fn log_recip_gamma_product(z: Complex64, factors: usize) -> Complex64 {
    let mut acc = Kahan::new();
    for k in 1..=factors {
        let kf = k as f64;
        acc.add((1.0 + z / kf).ln() - z / kf);
    }
    // Σ_{k>K} [ln(1+z/k) − z/k] = −z²/2·S₂ + z³/3·S₃ − z⁴/4·S₄ + z⁵/5·S₅ − …
    let s = tail_power_sums(factors as f64);
    let z2 = z * z;
    acc.add(
        -z2 / 2.0 * s[0] + z2 * z / 3.0 * s[1] - z2 * z2 / 4.0 * s[2]
            + z2 * z2 * z / 5.0 * s[3],
    );
    acc.add(z.ln() + EULER_GAMMA * z);
    acc.sum
}

/// Γ(z) by the truncated Euler product.
pub fn gamma_product_oracle(z: Complex64, factors: usize) -> Complex64 {
    (-log_recip_gamma_product(z, factors)).exp()
}

/// log|Γ(z)| by summing log|1 + z/k| − Re(z)/k over the product factors.
pub fn log_abs_gamma_product_oracle(z: Complex64, factors: usize) -> f64 {
    -log_recip_gamma_product(z, factors).re
}

/// ψ(z) by the series ψ(z) = −γ + Σ_{k≥1} (1/k − 1/(k+z−1)), truncated with
/// a tail in powers of (z−1).
pub fn digamma_series_oracle(z: Complex64, terms: usize) -> Complex64 {
    let mut acc = Kahan::new();
    acc.add(Complex64::new(-EULER_GAMMA, 0.0));
    let w = z - 1.0;
    for k in 1..=terms {
        let kf = k as f64;
        acc.add(Complex64::new(1.0 / kf, 0.0) - (w + kf).inv());
    }
    let s = tail_power_sums(terms as f64);
    acc.add(w * s[0] - w * w * s[1] + w * w * w * s[2] - w * w * w * w * s[3]);
    acc.sum
}

/// ζ(s) for Re(s) > 0 via the eta alternating series with repeated
/// averaging of the last partial sums (six levels), divided by 1 − 2^{1−s}.
pub fn zeta_eta_oracle(s: Complex64, terms: usize) -> Complex64 {
    let mut partial = Complex64::new(0.0, 0.0);
    let mut sign = 1.0;
    for n in 1..terms {
        partial += sign * (-s * (n as f64).ln()).exp();
        sign = -sign;
    }
    // last seven partial sums
    let mut tail_sums = [Complex64::new(0.0, 0.0); 7];
    for (i, t) in tail_sums.iter_mut().enumerate() {
        let n = (terms + i) as f64;
        partial += sign * (-s * n.ln()).exp();
        sign = -sign;
        *t = partial;
    }
    let mut level = tail_sums.to_vec();
    while level.len() > 1 {
        level = level.windows(2).map(|p| 0.5 * (p[0] + p[1])).collect();
    }
    let eta = level[0];
    let denom = 1.0 - ((Complex64::new(1.0, 0.0) - s) * std::f64::consts::LN_2).exp();
    eta / denom
}

/// ζ(x) for real x > 1: plain partial sum plus the integral tail bound.
/// Summed smallest-first so a million additions do not drift.
pub fn zeta_dirichlet_oracle(x: f64, terms: usize) -> f64 {
    let mut acc = 0.0;
    for n in (1..=terms).rev() {
        acc += (n as f64).powf(-x);
    }
    let nf = terms as f64;
    // ∫_N^∞ t^{-x} dt − N^{-x}/2 (midpoint correction of the tail)
    acc + nf.powf(1.0 - x) / (x - 1.0) - 0.5 * nf.powf(-x)
}

/// Composite Simpson with a fixed (even) panel count.
pub fn composite_simpson(f: &dyn Fn(f64) -> f64, a: f64, b: f64, panels: usize) -> f64 {
    let n = panels.max(2) & !1;
    let h = (b - a) / n as f64;
    let mut acc = f(a) + f(b);
    for i in 1..n {
        let w = if i % 2 == 1 { 4.0 } else { 2.0 };
        acc += w * f(a + i as f64 * h);
    }
    acc * h / 3.0
}

/// Deterministic xorshift generator for the sampled property suites.
pub struct Rng(u64);

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng(seed.max(1))
    }

    pub fn next_f64(&mut self) -> f64 {
        self.0 ^= self.0 << 13;
        self.0 ^= self.0 >> 7;
        self.0 ^= self.0 << 17;
        (self.0 >> 11) as f64 / (1u64 << 53) as f64
    }

    /// Uniform in [lo, hi).
    pub fn range(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.next_f64()
    }
}

pub fn rel_err(got: Complex64, want: Complex64) -> f64 {
    (got - want).norm() / want.norm().max(f64::MIN_POSITIVE)
}

pub fn rel_err_f(got: f64, want: f64) -> f64 {
    (got - want).abs() / want.abs().max(f64::MIN_POSITIVE)
}
