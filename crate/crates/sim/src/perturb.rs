use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Unit roundoff used by the roundoff model, `2^-52`.
pub const ROUNDOFF: f64 = f64::EPSILON;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PerturbationMode {
    #[default]
    None,
    /// Components uniform in `[-ε, ε]`.
    FixedMagnitude,
    /// Components uniform in `[-ε, ε]·(1 + ‖Y_i‖_∞)`.
    RelativeRoundoff,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PerturbationPolicy {
    pub mode: PerturbationMode,
    pub magnitude: f64,
    pub seed: u64,
}

impl PerturbationPolicy {
    pub fn none() -> Self {
        PerturbationPolicy {
            mode: PerturbationMode::None,
            magnitude: 0.0,
            seed: 0,
        }
    }

    pub fn roundoff(seed: u64) -> Self {
        PerturbationPolicy {
            mode: PerturbationMode::RelativeRoundoff,
            magnitude: ROUNDOFF,
            seed,
        }
    }

    pub fn fixed(magnitude: f64, seed: u64) -> Self {
        PerturbationPolicy {
            mode: PerturbationMode::FixedMagnitude,
            magnitude,
            seed,
        }
    }
}

/// Supplies the residual added to a freshly computed stage.
///
/// `row` is the 0-based Shu-Osher row: `1..s` are stages, `s` is the update
/// and `s + 1` the embedded update. Row 0 is `U_n` itself and is never asked for.
pub trait ResidualSource {
    /// Add the residual for `row` to `y` in place and return it in `r`.
    fn inject(&mut self, row: usize, y: &mut [f64], r: &mut [f64]);
}

/// Seeded residuals following a [`PerturbationPolicy`].
#[derive(Debug, Clone)]
pub struct Perturber {
    policy: PerturbationPolicy,
    rng: ChaCha8Rng,
}

impl Perturber {
    pub fn new(policy: PerturbationPolicy) -> Self {
        Perturber {
            policy,
            rng: ChaCha8Rng::seed_from_u64(policy.seed),
        }
    }
}

impl ResidualSource for Perturber {
    fn inject(&mut self, _row: usize, y: &mut [f64], r: &mut [f64]) {
        let scale = match self.policy.mode {
            PerturbationMode::None => {
                r.fill(0.0);
                return;
            }
            PerturbationMode::FixedMagnitude => self.policy.magnitude,
            PerturbationMode::RelativeRoundoff => {
                self.policy.magnitude * (1.0 + y.iter().fold(0.0f64, |a, v| a.max(v.abs())))
            }
        };
        for (yi, ri) in y.iter_mut().zip(r.iter_mut()) {
            *ri = scale * self.rng.gen_range(-1.0..=1.0);
            *yi += *ri;
        }
    }
}

/// Prescribed residuals, one vector per row `0..=s+1`; missing rows are zero.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct FixedResiduals(pub Vec<Vec<f64>>);

impl ResidualSource for FixedResiduals {
    fn inject(&mut self, row: usize, y: &mut [f64], r: &mut [f64]) {
        r.fill(0.0);
        if let Some(v) = self.0.get(row) {
            for ((yi, ri), vi) in y.iter_mut().zip(r.iter_mut()).zip(v) {
                *ri = *vi;
                *yi += vi;
            }
        }
    }
}
