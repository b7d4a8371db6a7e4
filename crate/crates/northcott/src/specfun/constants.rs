use std::sync::OnceLock;

/// Euler–Mascheroni constant γ.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Transcendental constants computed once and shared by every module.
///
/// `d_min = 4π·e^γ` is a lower bound and `d_max` an upper bound for the
/// inferior limit of the root discriminant `|Δ_K|^{1/[K:Q]}` as the degree
/// grows; `d_max` is the explicit prime-power product coming from an
/// infinite tower of totally complex fields.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Constants {
    pub euler_gamma: f64,
    /// e^γ.
    pub exp_gamma: f64,
    /// Root-discriminant lower bound, 4π·e^γ = 22.3816… (often written D_m).
    pub d_min: f64,
    /// Root-discriminant upper bound, 78.4269… (often written D_M).
    pub d_max: f64,
}

impl Constants {
    fn compute() -> Self {
        let exp_gamma = EULER_GAMMA.exp();
        let d_min = 4.0 * std::f64::consts::PI * exp_gamma;
        let d_max = 3f64.powf(1.0 / 8.0)
            * 7f64.powf(1.0 / 12.0)
            * 13f64.powf(1.0 / 12.0)
            * 19f64.powf(1.0 / 6.0)
            * 23f64.powf(1.0 / 3.0)
            * 29f64.powf(1.0 / 12.0)
            * 31f64.powf(1.0 / 12.0)
            * 35509f64.powf(1.0 / 6.0);
        Self {
            euler_gamma: EULER_GAMMA,
            exp_gamma,
            d_min,
            d_max,
        }
    }

    /// Shared instance, computed on first use.
    pub fn get() -> &'static Self {
        static INSTANCE: OnceLock<Constants> = OnceLock::new();
        INSTANCE.get_or_init(Self::compute)
    }
}
