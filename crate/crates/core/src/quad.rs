//! Quadrature rules.
//!
//! The double-exponential rules hand the integrand the distance to each
//! endpoint as well as the abscissa, so integrands with algebraic endpoint
//! singularities can be evaluated without cancellation.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::math::{abs, cos, cosh, exp, sinh, FRAC_PI_2, PI};
use crate::specfun::log_gamma;

/// A Gaussian rule on its canonical interval.
#[derive(Debug, Clone, PartialEq)]
pub struct GaussRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl GaussRule {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Integrate `f` over [a, b] with a Legendre rule.
    pub fn integrate<F: FnMut(f64) -> f64>(&self, a: f64, b: f64, mut f: F) -> f64 {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (b + a);
        let mut s = 0.0;
        for (x, w) in self.nodes.iter().zip(&self.weights) {
            s += w * f(mid + half * x);
        }
        s * half
    }
}

/// n-point Gauss–Legendre rule on [-1, 1].
pub fn gauss_legendre(n: usize) -> GaussRule {
    let mut nodes = alloc::vec![0.0; n];
    let mut weights = alloc::vec![0.0; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        let mut z = cos(PI * (i as f64 + 0.75) / (n as f64 + 0.5));
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre_with_derivative(n, z);
            dp = d;
            let dz = p / d;
            z -= dz;
            if abs(dz) < 1e-16 {
                break;
            }
        }
        let (_, d) = legendre_with_derivative(n, z);
        if d != 0.0 {
            dp = d;
        }
        let w = 2.0 / ((1.0 - z * z) * dp * dp);
        nodes[i] = -z;
        nodes[n - 1 - i] = z;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    GaussRule { nodes, weights }
}

fn legendre_with_derivative(n: usize, z: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = 0.0;
    for j in 0..n {
        let p2 = p1;
        p1 = p0;
        p0 = ((2 * j + 1) as f64 * z * p1 - j as f64 * p2) / (j + 1) as f64;
    }
    (p0, n as f64 * (z * p0 - p1) / (z * z - 1.0))
}

/// n-point generalized Gauss–Laguerre rule for weight x^alpha e^{-x} on [0, inf).
pub fn gauss_laguerre(n: usize, alpha: f64) -> Result<GaussRule> {
    if n == 0 {
        return Err(Error::InvalidParameter {
            name: "n",
            reason: "must be positive",
        });
    }
    if !(alpha > -1.0) {
        return Err(Error::Domain {
            what: "gauss_laguerre alpha",
            value: alpha,
        });
    }
    let nf = n as f64;
    let lg = log_gamma(alpha + nf)? - log_gamma(nf)?;
    let mut nodes = alloc::vec![0.0; n];
    let mut weights = alloc::vec![0.0; n];
    let mut z = 0.0;
    for i in 0..n {
        // Initial guesses from Numerical Recipes' gaulag.
        if i == 0 {
            z = (1.0 + alpha) * (3.0 + 0.92 * alpha) / (1.0 + 2.4 * nf + 1.8 * alpha);
        } else if i == 1 {
            z += (15.0 + 6.25 * alpha) / (1.0 + 0.9 * alpha + 2.5 * nf);
        } else {
            let ai = (i - 1) as f64;
            z += ((1.0 + 2.55 * ai) / (1.9 * ai) + 1.26 * ai * alpha / (1.0 + 3.5 * ai))
                * (z - nodes[i - 2])
                / (1.0 + 0.3 * alpha);
        }
        let mut converged = false;
        let mut pp = 0.0;
        let mut p2 = 0.0;
        for _ in 0..200 {
            let (l, lm1) = laguerre_pair(n, alpha, z);
            p2 = lm1;
            pp = (nf * l - (nf + alpha) * lm1) / z;
            let dz = l / pp;
            z -= dz;
            if abs(dz) <= 1e-15 * z.max(1.0) {
                converged = true;
                break;
            }
        }
        if !converged {
            return Err(Error::NonConvergence {
                what: "gauss_laguerre root",
                iterations: 200,
                residual: z,
            });
        }
        let (l, lm1) = laguerre_pair(n, alpha, z);
        if l.is_finite() {
            p2 = lm1;
            pp = (nf * l - (nf + alpha) * lm1) / z;
        }
        nodes[i] = z;
        weights[i] = -exp(lg) / (pp * nf * p2);
    }
    Ok(GaussRule { nodes, weights })
}

/// (L_n^alpha(z), L_{n-1}^alpha(z)), scaled so that Newton and weight formulas match gaulag.
fn laguerre_pair(n: usize, alpha: f64, z: f64) -> (f64, f64) {
    let mut p1 = 1.0;
    let mut p2 = 0.0;
    for j in 1..=n {
        let p3 = p2;
        p2 = p1;
        let jf = j as f64;
        p1 = ((2.0 * jf - 1.0 + alpha - z) * p2 - (jf - 1.0 + alpha) * p3) / jf;
    }
    (p1, p2)
}

/// One node of a double-exponential rule.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DeNode {
    /// Abscissa measured from the lower endpoint.
    pub from_lo: f64,
    /// Distance to the upper endpoint (infinite for semi-infinite rules).
    pub from_hi: f64,
    pub weight: f64,
}

/// A precomputed double-exponential rule.
#[derive(Debug, Clone, PartialEq)]
pub struct DeRule {
    nodes: Vec<DeNode>,
    finite: bool,
}

const TANH_SINH_T: f64 = 4.5;
const EXP_SINH_T_LO: f64 = 6.4;
const EXP_SINH_T_HI: f64 = 2.3;

impl DeRule {
    /// Tanh-sinh rule on the unit interval with (about) `n` nodes.
    pub fn tanh_sinh(n: usize) -> Self {
        let n = (n.max(3)) | 1;
        let h = 2.0 * TANH_SINH_T / (n - 1) as f64;
        let mut nodes = Vec::with_capacity(n);
        for k in 0..n {
            let t = -TANH_SINH_T + k as f64 * h;
            let u = FRAC_PI_2 * sinh(t);
            let lo = 1.0 / (1.0 + exp(-2.0 * u));
            let hi = 1.0 / (1.0 + exp(2.0 * u));
            let w = h * PI * cosh(t) * lo * hi;
            if w > 0.0 && lo > 0.0 && hi > 0.0 {
                nodes.push(DeNode {
                    from_lo: lo,
                    from_hi: hi,
                    weight: w,
                });
            }
        }
        DeRule {
            nodes,
            finite: true,
        }
    }

    /// Exp-sinh rule on [0, inf) with (about) `n` nodes; tuned for integrands
    /// decaying like e^{-x} on an O(1) scale.
    pub fn exp_sinh(n: usize) -> Self {
        let n = n.max(3);
        let h = (EXP_SINH_T_LO + EXP_SINH_T_HI) / (n - 1) as f64;
        let mut nodes = Vec::with_capacity(n);
        for k in 0..n {
            let t = -EXP_SINH_T_LO + k as f64 * h;
            let x = exp(FRAC_PI_2 * sinh(t));
            let w = h * FRAC_PI_2 * cosh(t) * x;
            if x > 0.0 && w.is_finite() {
                nodes.push(DeNode {
                    from_lo: x,
                    from_hi: f64::INFINITY,
                    weight: w,
                });
            }
        }
        DeRule {
            nodes,
            finite: false,
        }
    }

    pub fn nodes(&self) -> &[DeNode] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Integrate over [a, b] (finite rule) or [a, inf) (semi-infinite rule, `b` ignored).
    /// `f` receives (x, x - a, b - x).
    pub fn integrate<F: FnMut(f64, f64, f64) -> f64>(&self, a: f64, b: f64, mut f: F) -> f64 {
        let mut s = 0.0;
        if self.finite {
            let len = b - a;
            for nd in &self.nodes {
                let dl = len * nd.from_lo;
                let dh = len * nd.from_hi;
                let x = if nd.from_lo <= 0.5 { a + dl } else { b - dh };
                s += nd.weight * f(x, dl, dh);
            }
            s * len
        } else {
            for nd in &self.nodes {
                s += nd.weight * f(a + nd.from_lo, nd.from_lo, f64::INFINITY);
            }
            s
        }
    }
}

/// Result of an adaptive integration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Adaptive {
    pub value: f64,
    pub error: f64,
    pub evaluations: usize,
}

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_8,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

fn gk15<F: FnMut(f64) -> f64>(f: &mut F, a: f64, b: f64) -> (f64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut k = fc * WGK[7];
    let mut g = fc * WG[3];
    for j in 0..7 {
        let dx = h * XGK[j];
        let s = f(c - dx) + f(c + dx);
        k += WGK[j] * s;
        if j % 2 == 1 {
            g += WG[j / 2] * s;
        }
    }
    (k * h, abs((k - g) * h))
}

/// Globally adaptive Gauss–Kronrod (7/15) on [a, b].
pub fn adaptive_gk<F: FnMut(f64) -> f64>(
    mut f: F,
    a: f64,
    b: f64,
    abs_tol: f64,
    rel_tol: f64,
    max_intervals: usize,
) -> Result<Adaptive> {
    let mut segs: Vec<(f64, f64, f64, f64)> = Vec::new();
    let (v, e) = gk15(&mut f, a, b);
    segs.push((a, b, v, e));
    let mut evals = 15;
    loop {
        let mut total = 0.0;
        let mut err = 0.0;
        let mut worst = 0;
        for (i, s) in segs.iter().enumerate() {
            total += s.2;
            err += s.3;
            if s.3 > segs[worst].3 {
                worst = i;
            }
        }
        if err <= abs_tol.max(rel_tol * abs(total)) {
            return Ok(Adaptive {
                value: total,
                error: err,
                evaluations: evals,
            });
        }
        if segs.len() >= max_intervals {
            return Err(Error::NonConvergence {
                what: "adaptive_gk",
                iterations: segs.len(),
                residual: err,
            });
        }
        let (lo, hi, _, _) = segs.swap_remove(worst);
        let mid = 0.5 * (lo + hi);
        let (v1, e1) = gk15(&mut f, lo, mid);
        let (v2, e2) = gk15(&mut f, mid, hi);
        evals += 30;
        segs.push((lo, mid, v1, e1));
        segs.push((mid, hi, v2, e2));
    }
}

/// Adaptive Gauss–Kronrod on [a, inf) through x = a + t/(1-t).
pub fn adaptive_gk_semi_infinite<F: FnMut(f64) -> f64>(
    mut f: F,
    a: f64,
    abs_tol: f64,
    rel_tol: f64,
    max_intervals: usize,
) -> Result<Adaptive> {
    adaptive_gk(
        |t| {
            if t >= 1.0 {
                return 0.0;
            }
            let om = 1.0 - t;
            let v = f(a + t / om) / (om * om);
            if v.is_finite() {
                v
            } else {
                0.0
            }
        },
        0.0,
        1.0,
        abs_tol,
        rel_tol,
        max_intervals,
    )
}

/// Equally spaced periodic trapezoid on [0, 2π).
pub fn periodic_trapezoid<F: FnMut(f64) -> f64>(n: usize, mut f: F) -> f64 {
    let h = 2.0 * PI / n as f64;
    let mut s = 0.0;
    for k in 0..n {
        s += f(k as f64 * h);
    }
    s * h
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::math::{powi, rel_err};
    use crate::specfun::gamma;

    #[test]
    fn legendre_integrates_polynomials_exactly() {
        let r = gauss_legendre(10);
        for k in 0..20 {
            let v = r.integrate(0.0, 1.0, |x| powi(x, k));
            assert!(rel_err(v, 1.0 / (k as f64 + 1.0)) < 1e-14, "k={k}");
        }
    }

    #[test]
    fn laguerre_integrates_monomials() {
        for &alpha in &[0.0, 0.5, 1.7] {
            let r = gauss_laguerre(40, alpha).unwrap();
            for k in 0..30 {
                let v: f64 = r
                    .nodes
                    .iter()
                    .zip(&r.weights)
                    .map(|(x, w)| w * powi(*x, k))
                    .sum();
                let exact = gamma(alpha + k as f64 + 1.0);
                assert!(rel_err(v, exact) < 1e-11, "alpha={alpha} k={k} {v} {exact}");
            }
        }
    }

    #[test]
    fn tanh_sinh_handles_endpoint_singularity() {
        let r = DeRule::tanh_sinh(161);
        // ∫_0^1 x^{-1/2} (1-x)^{-1/2} dx = π
        let v = r.integrate(0.0, 1.0, |_, lo, hi| 1.0 / crate::math::sqrt(lo * hi));
        assert!(rel_err(v, PI) < 1e-13, "{v}");
    }

    #[test]
    fn exp_sinh_gamma_integral() {
        let r = DeRule::exp_sinh(200);
        let v = r.integrate(0.0, f64::INFINITY, |x, _, _| {
            crate::math::powf(x, -0.3) * exp(-x)
        });
        assert!(rel_err(v, gamma(0.7)) < 1e-13, "{v}");
    }

    #[test]
    fn adaptive_semi_infinite() {
        let r = adaptive_gk_semi_infinite(|x| exp(-x) * x * x, 0.0, 1e-14, 1e-13, 500).unwrap();
        assert!(rel_err(r.value, 2.0) < 1e-12);
    }
}
