use alloc::vec;
use alloc::vec::Vec;

use super::{eval_integrand, Integrand, IntegrandSpec, QuadConfig};
use crate::error::{Error, Result};
use crate::math::{abs, exp, powf, sin, sin_cos, sqrt, TAU};
use crate::quad::{gauss_laguerre, DeRule};

/// Deterministic quadrature value with its node-doubling diagnostic.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct QuadValue {
    /// Value at the doubled node counts.
    pub value: f64,
    /// Value at the requested node counts.
    pub coarse: f64,
    pub rel_change: f64,
    pub converged: bool,
}

/// Rotations of the pair used to average out the centre-of-mass angle. The
/// integrands are trigonometric polynomials of degree ≤ 4 in it, so eight
/// equispaced nodes are exact.
const PHI_NODES: usize = 8;

/// Raw four-dimensional integrals ∫ d²r₁ d²r₂ |r₁−r₂|^{2γ} e^{−λ(r₁²+r₂²)} f
/// for each integrand, followed by the weight integral itself (f = 1).
///
/// Coordinates: u = λr² for both particles, the relative polar angle θ and
/// the common rotation φ. The outer u₁ integral is Gauss–Laguerre; the inner
/// u₂ range is split at u₁ (tanh-sinh below, exp-sinh above) and θ uses
/// tanh-sinh on [0, 2π], so the coincidence kink sits at rule endpoints
/// where |r₁−r₂|² is formed from endpoint distances without cancellation.
pub fn raw_integrals(
    gamma: f64,
    lambda: f64,
    integrands: &[Integrand],
    radial: usize,
    angular: usize,
) -> Result<Vec<f64>> {
    let outer = gauss_laguerre(radial, 0.0)?;
    let below = DeRule::tanh_sinh(4 * radial + 1);
    let above = DeRule::exp_sinh(4 * radial + 1);
    let theta_rule = DeRule::tanh_sinh(2 * angular + 1);
    let sl = sqrt(lambda);

    let phis: Vec<(f64, f64)> = (0..PHI_NODES)
        .map(|k| sin_cos(TAU * k as f64 / PHI_NODES as f64))
        .collect();
    // θ nodes: (sin θ, cos θ, sin²(θ/2), weight), all taken from the nearer
    // endpoint.
    let thetas: Vec<(f64, f64, f64, f64)> = theta_rule
        .nodes()
        .iter()
        .map(|nd| {
            let dl = TAU * nd.from_lo;
            let dh = TAU * nd.from_hi;
            let (near, sign) = if dl <= dh { (dl, 1.0) } else { (dh, -1.0) };
            let s = sin(0.5 * near);
            let (st, ct) = sin_cos(near);
            let st = sign * st;
            (st, ct, s * s, nd.weight * TAU)
        })
        .collect();

    let m = integrands.len();
    let mut total = vec![0.0; m + 1];
    let mut acc_u2 = vec![0.0; m + 1];
    let mut acc_th = vec![0.0; m + 1];
    let mut acc_phi = vec![0.0; m + 1];

    for (&u1, &w1) in outer.nodes.iter().zip(&outer.weights) {
        if negligible(w1, u1) {
            continue;
        }
        let r1 = sqrt(u1) / sl;
        acc_u2.iter_mut().for_each(|v| *v = 0.0);
        for (rule, finite) in [(&below, true), (&above, false)] {
            for nd in rule.nodes() {
                // u₂ and |u₁ − u₂|.
                let (u2, du, w2) = if finite {
                    let dl = u1 * nd.from_lo;
                    let dh = u1 * nd.from_hi;
                    let u2 = if nd.from_lo <= 0.5 { dl } else { u1 - dh };
                    (u2, dh, nd.weight * u1)
                } else {
                    (u1 + nd.from_lo, nd.from_lo, nd.weight)
                };
                let e2 = exp(-u2);
                if negligible(w2 * e2, u2) {
                    continue;
                }
                let r2 = sqrt(u2) / sl;
                let denom = sqrt(u1) + sqrt(u2);
                // r₁ − r₂, signed.
                let dr = if denom > 0.0 { du / (sl * denom) } else { 0.0 };
                let dr = if finite { dr } else { -dr };
                acc_th.iter_mut().for_each(|v| *v = 0.0);
                for &(st, ct, s2, wt) in &thetas {
                    let d2 = dr * dr + 4.0 * r1 * r2 * s2;
                    // r₁ − r₂ in the frame where particle 1 lies on the x axis.
                    let dxl = dr + 2.0 * r2 * s2;
                    let dyl = -r2 * st;
                    if d2 <= 0.0 {
                        continue;
                    }
                    let wgt = if gamma == 0.0 { 1.0 } else { powf(d2, gamma) };
                    acc_phi.iter_mut().for_each(|v| *v = 0.0);
                    for &(sp, cp) in &phis {
                        let x = [
                            r1 * cp,
                            r1 * sp,
                            r2 * (cp * ct - sp * st),
                            r2 * (sp * ct + cp * st),
                        ];
                        let d = [cp * dxl - sp * dyl, sp * dxl + cp * dyl];
                        for (a, f) in acc_phi.iter_mut().zip(integrands) {
                            *a += eval_integrand(f, x, d, gamma, lambda, d2);
                        }
                    }
                    acc_phi[m] = PHI_NODES as f64;
                    let w = wt * wgt;
                    for (a, p) in acc_th.iter_mut().zip(&acc_phi) {
                        *a += w * p;
                    }
                }
                let w = w2 * e2;
                for (a, t) in acc_u2.iter_mut().zip(&acc_th) {
                    *a += w * t;
                }
            }
        }
        for (a, t) in total.iter_mut().zip(&acc_u2) {
            *a += w1 * t;
        }
    }
    // d²r = du dφ / (2λ) per particle; φ trapezoid weight 2π/8.
    let scale = (TAU / PHI_NODES as f64) / (4.0 * lambda * lambda);
    Ok(total.into_iter().map(|v| v * scale).collect())
}

/// Nodes whose weight cannot matter for integrands of degree ≤ 4 (at most
/// u⁴ growth including the |r₁−r₂|^{2γ} factor).
#[inline]
fn negligible(w: f64, u: f64) -> bool {
    let g = 1.0 + u;
    let g2 = g * g;
    w * g2 * g2 * g2 < 1e-24
}

/// Normalized expectations of several integrands from one pass.
pub fn reduced_batch(
    gamma: f64,
    lambda: f64,
    integrands: &[Integrand],
    radial: usize,
    angular: usize,
) -> Result<Vec<f64>> {
    let raw = raw_integrals(gamma, lambda, integrands, radial, angular)?;
    let z = raw[integrands.len()];
    if !(z > 0.0) || !z.is_finite() {
        return Err(Error::NonConvergence {
            what: "reduced quadrature norm",
            iterations: radial,
            residual: z,
        });
    }
    Ok(raw[..integrands.len()].iter().map(|v| v / z).collect())
}

/// Batch evaluation at `cfg` and at doubled node counts; one extra trailing
/// entry holds |N| from the same pass.
pub fn reduced_batch_refined(
    gamma: f64,
    lambda: f64,
    integrands: &[Integrand],
    cfg: &QuadConfig,
) -> Result<Vec<QuadValue>> {
    cfg.validate()?;
    IntegrandSpec::monomial(gamma, lambda, [0; 4])?;
    let m = integrands.len();
    let normalize = |raw: Vec<f64>| -> Result<Vec<f64>> {
        let z = raw[m];
        if !(z > 0.0) || !z.is_finite() {
            return Err(Error::NonConvergence {
                what: "reduced quadrature norm",
                iterations: cfg.radial_nodes,
                residual: z,
            });
        }
        let mut v: Vec<f64> = raw[..m].iter().map(|v| v / z).collect();
        v.push(1.0 / sqrt(z));
        Ok(v)
    };
    let (r, a) = (cfg.radial_nodes, cfg.angular_nodes);
    let coarse = normalize(raw_integrals(gamma, lambda, integrands, r, a)?)?;
    let fine = normalize(raw_integrals(gamma, lambda, integrands, 2 * r, 2 * a)?)?;
    // Odd moments vanish; measure their change against a small absolute floor.
    Ok(coarse
        .into_iter()
        .zip(fine)
        .enumerate()
        .map(|(k, (c, f))| {
            let floor = integrands
                .get(k)
                .map_or(0.0, |i| 1e-3 * natural_scale(i, lambda));
            let rel_change = abs(f - c) / abs(f).max(floor);
            QuadValue {
                value: f,
                coarse: c,
                rel_change,
                converged: rel_change <= cfg.rel_tol,
            }
        })
        .collect())
}

/// λ^{−deg/2} for monomials, λ for the kinetic term.
pub(crate) fn natural_scale(f: &Integrand, lambda: f64) -> f64 {
    match f {
        Integrand::Monomial(e) => powf(lambda, -0.5 * crate::poly::degree(e) as f64),
        Integrand::P2 => lambda,
        Integrand::Potential => 1.0 / (lambda * lambda),
    }
}

fn single(spec: &IntegrandSpec, cfg: &QuadConfig) -> Result<QuadValue> {
    Ok(reduced_batch_refined(spec.gamma, spec.lambda, &[spec.integrand()], cfg)?[0])
}

/// ⟨monomial⟩ by deterministic quadrature. A `P2` flag is forwarded to
/// [`p2_quadrature`].
pub fn moment_quadrature(spec: &IntegrandSpec, cfg: &QuadConfig) -> Result<QuadValue> {
    single(spec, cfg)
}

/// ⟨P_{x₁}²⟩ (ħ = 1) from the unsplit second-derivative bracket.
pub fn p2_quadrature(gamma: f64, lambda: f64, cfg: &QuadConfig) -> Result<QuadValue> {
    single(&IntegrandSpec::p2(gamma, lambda)?, cfg)
}

/// |N| = (∫|r₁−r₂|^{2γ} e^{−λ(r₁²+r₂²)})^{−1/2}.
pub fn norm_quadrature(gamma: f64, lambda: f64, cfg: &QuadConfig) -> Result<QuadValue> {
    Ok(reduced_batch_refined(gamma, lambda, &[], cfg)?[0])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::math::rel_err;
    use crate::moments::{self, FiducialSpec};

    #[test]
    fn gaussian_case_is_exact() {
        let v = reduced_batch(
            0.0,
            1.0,
            &[
                Integrand::Monomial([2, 0, 0, 0]),
                Integrand::Monomial([1, 0, 1, 0]),
            ],
            24,
            48,
        )
        .unwrap();
        assert!(rel_err(v[0], 0.5) < 1e-12, "{v:?}");
        assert!(abs(v[1]) < 1e-12);
    }

    #[test]
    fn half_gamma_values() {
        let ints = [
            Integrand::Monomial([2, 0, 0, 0]),
            Integrand::Monomial([4, 0, 0, 0]),
            Integrand::Monomial([2, 0, 2, 0]),
            Integrand::Monomial([2, 0, 0, 2]),
            Integrand::Monomial([1, 0, 1, 0]),
            Integrand::Potential,
            Integrand::P2,
        ];
        let want = [0.625, 1.1015625, 0.3515625, 0.3671875, -0.125, 8.75, 0.625];
        let v = reduced_batch(0.5, 1.0, &ints, 40, 64).unwrap();
        for (k, (a, b)) in v.iter().zip(want).enumerate() {
            assert!(rel_err(*a, b) < 1e-8, "{k}: {a} vs {b}");
        }
        let n = norm_quadrature(0.5, 1.0, &QuadConfig::default()).unwrap();
        assert!(n.converged);
        let c = moments::norm_constant(&FiducialSpec::from_lambda(0.5, 1.0).unwrap()).unwrap();
        assert!(rel_err(n.value, c) < 1e-9, "{} {}", n.value, c);
    }
}
