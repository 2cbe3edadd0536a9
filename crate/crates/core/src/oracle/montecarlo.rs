use alloc::vec;
use alloc::vec::Vec;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use super::{eval_integrand, Integrand, IntegrandSpec, QuadConfig};
use crate::error::{Error, Result};
use crate::math::{pairwise_sum, powf, sqrt, PI};

/// Sample mean with its one-sigma standard error.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct McEstimate {
    pub mean: f64,
    pub stderr: f64,
    pub samples: usize,
}

impl McEstimate {
    /// |mean − target| in units of the standard error.
    pub fn z_score(&self, target: f64) -> f64 {
        let d = (self.mean - target).abs();
        if self.stderr > 0.0 {
            d / self.stderr
        } else if d == 0.0 {
            0.0
        } else {
            f64::INFINITY
        }
    }
}

const CHUNK: usize = 4096;

/// Running per-chunk sums, reduced pairwise at the end.
struct Sums {
    chunks: Vec<Vec<f64>>,
    current: Vec<f64>,
}

impl Sums {
    fn new(n: usize) -> Self {
        Sums {
            chunks: vec![Vec::new(); n],
            current: vec![0.0; n],
        }
    }

    fn flush(&mut self) {
        for (c, v) in self.chunks.iter_mut().zip(self.current.iter_mut()) {
            c.push(*v);
            *v = 0.0;
        }
    }

    fn totals(&self) -> Vec<f64> {
        self.chunks.iter().map(|c| pairwise_sum(c)).collect()
    }
}

/// Importance-sampled estimates of several integrands from one sample set,
/// followed by the weight integral ∫|r₁−r₂|^{2γ} e^{−λ(r₁²+r₂²)} itself.
///
/// Positions are drawn from the Gaussian e^{−λ(r₁²+r₂²)}; each draw is paired
/// with the configuration whose relative vector is turned by 90° about the
/// centre of mass (same weight, same law). Expectations use the ratio
/// estimator with a delta-method standard error.
pub fn montecarlo_batch(
    gamma: f64,
    lambda: f64,
    integrands: &[Integrand],
    samples: usize,
    seed: u64,
) -> Result<(Vec<McEstimate>, McEstimate)> {
    if samples < 2 {
        return Err(Error::InvalidParameter {
            name: "mc_samples",
            reason: "must be at least 2",
        });
    }
    let m = integrands.len();
    // Layout: [Σa_k, Σa_k², Σa_k b] per integrand, then Σb, Σb².
    let mut sums = Sums::new(3 * m + 2);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sigma = sqrt(0.5 / lambda);
    let mut vals = vec![0.0; m];
    for i in 0..samples {
        let mut z = [0.0f64; 4];
        for v in z.iter_mut() {
            *v = sigma * <StandardNormal as Distribution<f64>>::sample(&StandardNormal, &mut rng);
        }
        let d = [z[0] - z[2], z[1] - z[3]];
        let d2 = d[0] * d[0] + d[1] * d[1];
        // Coincident draws carry zero weight (γ > 0); only the chunk counter moves.
        if d2 > 0.0 || gamma == 0.0 {
            accumulate(&mut sums, &mut vals, integrands, z, d, d2, gamma, lambda);
        }
        if (i + 1) % CHUNK == 0 {
            sums.flush();
        }
    }
    finish(sums, m, samples, lambda)
}

#[allow(clippy::too_many_arguments)]
#[inline]
fn accumulate(
    sums: &mut Sums,
    vals: &mut [f64],
    integrands: &[Integrand],
    z: [f64; 4],
    d: [f64; 2],
    d2: f64,
    gamma: f64,
    lambda: f64,
) {
    let m = integrands.len();
    let cx = 0.5 * (z[0] + z[2]);
    let cy = 0.5 * (z[1] + z[3]);
    {
        let w = if gamma == 0.0 { 1.0 } else { powf(d2, gamma) };
        let dr = [-d[1], d[0]];
        let x = [z[0], z[1], z[2], z[3]];
        let xr = [
            cx + 0.5 * dr[0],
            cy + 0.5 * dr[1],
            cx - 0.5 * dr[0],
            cy - 0.5 * dr[1],
        ];
        for (v, f) in vals.iter_mut().zip(integrands) {
            let a = eval_integrand(f, x, d, gamma, lambda, d2);
            let b = eval_integrand(f, xr, dr, gamma, lambda, d2);
            *v = 0.5 * w * (a + b);
        }
        for (k, v) in vals.iter().enumerate() {
            sums.current[3 * k] += v;
            sums.current[3 * k + 1] += v * v;
            sums.current[3 * k + 2] += v * w;
        }
        sums.current[3 * m] += w;
        sums.current[3 * m + 1] += w * w;
    }
}

fn finish(
    mut sums: Sums,
    m: usize,
    samples: usize,
    lambda: f64,
) -> Result<(Vec<McEstimate>, McEstimate)> {
    sums.flush();
    let t = sums.totals();
    let n = samples as f64;
    let sb = t[3 * m];
    let sbb = t[3 * m + 1];
    if !(sb > 0.0) {
        return Err(Error::NonConvergence {
            what: "Monte Carlo weight sum",
            iterations: samples,
            residual: sb,
        });
    }
    let mean_b = sb / n;
    let est = (0..m)
        .map(|k| {
            let (sa, saa, sab) = (t[3 * k], t[3 * k + 1], t[3 * k + 2]);
            let r = sa / sb;
            let resid = (saa - 2.0 * r * sab + r * r * sbb).max(0.0) / (n - 1.0);
            McEstimate {
                mean: r,
                stderr: sqrt(resid / n) / mean_b,
                samples,
            }
        })
        .collect();
    let var_b = (sbb / n - mean_b * mean_b).max(0.0) * n / (n - 1.0);
    let vol = (PI / lambda) * (PI / lambda);
    let weight = McEstimate {
        mean: vol * mean_b,
        stderr: vol * sqrt(var_b / n),
        samples,
    };
    Ok((est, weight))
}

/// ⟨monomial⟩ (or ⟨P_{x₁}²⟩ with the P2 flag) by Monte Carlo.
pub fn moment_montecarlo(spec: &IntegrandSpec, cfg: &QuadConfig) -> Result<McEstimate> {
    cfg.validate()?;
    let (e, _) = montecarlo_batch(
        spec.gamma,
        spec.lambda,
        &[spec.integrand()],
        cfg.mc_samples,
        cfg.mc_seed,
    )?;
    Ok(e[0])
}

/// |N| = I^{−1/2} from the Monte Carlo weight integral I.
pub fn norm_montecarlo(gamma: f64, lambda: f64, cfg: &QuadConfig) -> Result<McEstimate> {
    IntegrandSpec::monomial(gamma, lambda, [0; 4])?;
    cfg.validate()?;
    let (_, w) = montecarlo_batch(gamma, lambda, &[], cfg.mc_samples, cfg.mc_seed)?;
    let n = 1.0 / sqrt(w.mean);
    Ok(McEstimate {
        mean: n,
        stderr: 0.5 * n * w.stderr / w.mean,
        samples: w.samples,
    })
}
