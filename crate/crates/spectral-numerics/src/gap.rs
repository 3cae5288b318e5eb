use std::collections::BTreeSet;

use coxsp_core::{Ball, CoxeterSystem, GroupElement, GroupOps};
use coxsp_gamma::psi_values;
use coxsp_length::{LengthSpec, Q};
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::SpectralError;

#[derive(Clone, Debug, PartialEq)]
pub struct GapReport {
    /// Distinct ψ values on the ball, increasing.
    pub values: Vec<Q>,
    /// Largest generator weight.
    pub bound: Q,
    pub max_gap: Q,
    /// λ_{k+1}/λ_k for λ_k > 0.
    pub ratios: Vec<f64>,
    /// The ball is the whole (finite) group.
    pub closed: bool,
}

impl GapReport {
    pub fn holds(&self) -> bool {
        self.max_gap <= self.bound
    }
}

pub fn spectral_gap_check(
    system: &CoxeterSystem,
    spec: &LengthSpec,
    radius: usize,
    cap: usize,
) -> Result<GapReport, SpectralError> {
    spec.validate(system)?;
    let ball = Ball::with_cap(system, radius, cap)?;
    let values: Vec<Q> = psi_values(&ball, spec).into_iter().collect::<BTreeSet<_>>().into_iter().collect();
    let max_gap = values.windows(2).map(|w| &w[1] - &w[0]).max().unwrap_or_else(Q::zero);
    let ratios = values
        .windows(2)
        .filter(|w| !w[0].is_zero())
        .map(|w| (&w[1] / &w[0]).to_f64().unwrap_or(f64::NAN))
        .collect();
    Ok(GapReport { values, bound: spec.max_weight(), max_gap, ratios, closed: ball.is_closed() })
}

/// Largest Σ c_i c_j ψ(s_j⁻¹s_i) over `trials` random unit vectors c with Σ c_i = 0.
pub fn conditional_negativity_check(
    system: &CoxeterSystem,
    spec: &LengthSpec,
    samples: &[GroupElement],
    trials: usize,
    seed: u64,
) -> Result<f64, SpectralError> {
    spec.validate(system)?;
    let n = samples.len();
    let k: Vec<Vec<f64>> = samples
        .iter()
        .map(|si| {
            samples
                .iter()
                .map(|sj| spec.evaluate(&system.multiply(&system.inverse(sj), si)).to_f64().unwrap_or(f64::NAN))
                .collect()
        })
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = f64::NEG_INFINITY;
    for _ in 0..trials {
        let mut c: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let mean = c.iter().sum::<f64>() / n as f64;
        c.iter_mut().for_each(|x| *x -= mean);
        let norm = c.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm == 0.0 {
            continue;
        }
        let mut total = 0.0;
        for i in 0..n {
            for j in 0..n {
                total += c[i] * c[j] * k[i][j];
            }
        }
        worst = worst.max(total / (norm * norm));
    }
    Ok(worst)
}
