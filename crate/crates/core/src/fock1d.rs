//! Truncated harmonic-oscillator basis: canonical coherent states, their
//! symbols, the Fubini–Study metric and the resolution of unity.
//!
//! Convention: Q = √(ħ/2)(a + a†), P = −i√(ħ/2)(a − a†), so that
//! (Q + iP)|0⟩ = 0 and P = R Q R† with R = diag(iⁿ). Coherent states are
//! built from one eigendecomposition of the tridiagonal Q; a dense
//! scaling-and-squaring exponential is kept as a cross-check.

use alloc::vec::Vec;

use nalgebra::{DMatrix, DVector, SymmetricEigen};
use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::math::{abs, cos, sin, sin_cos, sqrt, PI, TAU};
use crate::quad::gauss_legendre;

/// Amplitude weight in the top quarter of the basis above which a state is
/// flagged as truncation-affected.
pub const TAIL_TOL: f64 = 1e-8;

#[derive(Debug, Clone)]
pub struct FockSpace {
    dim: usize,
    hbar: f64,
    q: DMatrix<f64>,
    p: DMatrix<C64>,
    /// Eigenvalues and (column) eigenvectors of Q.
    nodes: DVector<f64>,
    vecs: DMatrix<f64>,
}

/// Q and P in the number basis, with Q diagonalised once.
pub fn build_fock(dim: usize, hbar: f64) -> Result<FockSpace> {
    if dim < 8 {
        return Err(Error::InvalidParameter {
            name: "dim",
            reason: "must be at least 8",
        });
    }
    if !(hbar > 0.0) || !hbar.is_finite() {
        return Err(Error::InvalidParameter {
            name: "hbar",
            reason: "must be positive",
        });
    }
    let s = sqrt(0.5 * hbar);
    let mut q = DMatrix::<f64>::zeros(dim, dim);
    let mut p = DMatrix::<C64>::zeros(dim, dim);
    for k in 0..dim - 1 {
        let e = s * sqrt((k + 1) as f64);
        q[(k, k + 1)] = e;
        q[(k + 1, k)] = e;
        p[(k, k + 1)] = C64::new(0.0, -e);
        p[(k + 1, k)] = C64::new(0.0, e);
    }
    let eig = SymmetricEigen::new(q.clone());
    Ok(FockSpace {
        dim,
        hbar,
        q,
        p,
        nodes: eig.eigenvalues,
        vecs: eig.eigenvectors,
    })
}

impl FockSpace {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn hbar(&self) -> f64 {
        self.hbar
    }

    pub fn q_matrix(&self) -> &DMatrix<f64> {
        &self.q
    }

    pub fn p_matrix(&self) -> &DMatrix<C64> {
        &self.p
    }

    pub fn q_complex(&self) -> DMatrix<C64> {
        self.q.map(|x| C64::new(x, 0.0))
    }

    /// max |[Q,P] − iħ| over the leading (dim−1)×(dim−1) block.
    pub fn commutator_defect(&self) -> f64 {
        let q = self.q_complex();
        let c = &q * &self.p - &self.p * &q;
        let mut worst: f64 = 0.0;
        for i in 0..self.dim - 1 {
            for j in 0..self.dim - 1 {
                let want = if i == j {
                    C64::new(0.0, self.hbar)
                } else {
                    C64::new(0.0, 0.0)
                };
                worst = worst.max((c[(i, j)] - want).norm());
            }
        }
        worst
    }

    /// ‖(Q + iP) e₀‖.
    pub fn ground_residual(&self) -> f64 {
        let mut r: f64 = 0.0;
        for i in 0..self.dim {
            let v = C64::new(self.q[(i, 0)], 0.0) + C64::new(0.0, 1.0) * self.p[(i, 0)];
            r += v.norm_sqr();
        }
        sqrt(r)
    }

    /// (−i)ⁿ or iⁿ.
    fn quarter_phase(n: usize, conj: bool) -> C64 {
        let k = if conj { (4 - n % 4) % 4 } else { n % 4 };
        match k {
            0 => C64::new(1.0, 0.0),
            1 => C64::new(0.0, 1.0),
            2 => C64::new(-1.0, 0.0),
            _ => C64::new(0.0, -1.0),
        }
    }

    /// V x for complex x (V real).
    fn v_mul(&self, x: &[C64], rows: usize) -> Vec<C64> {
        let n = self.dim;
        (0..rows)
            .map(|i| {
                let mut acc = C64::new(0.0, 0.0);
                for k in 0..n {
                    acc += x[k] * self.vecs[(i, k)];
                }
                acc
            })
            .collect()
    }

    /// Vᵀ x.
    fn vt_mul(&self, x: &[C64]) -> Vec<C64> {
        let n = self.dim;
        (0..n)
            .map(|k| {
                let mut acc = C64::new(0.0, 0.0);
                for i in 0..n {
                    acc += x[i] * self.vecs[(i, k)];
                }
                acc
            })
            .collect()
    }

    /// First `rows` amplitudes of e^{−iqP/ħ} e^{ipQ/ħ} e₀.
    fn displaced(&self, p: f64, q: f64, rows: usize) -> Vec<C64> {
        let n = self.dim;
        let h = self.hbar;
        // e^{ipQ/ħ} e₀ = V diag(e^{ipx/ħ}) Vᵀ e₀
        let b: Vec<C64> = (0..n)
            .map(|k| {
                let (s, c) = sin_cos(p * self.nodes[k] / h);
                C64::new(c, s) * self.vecs[(0, k)]
            })
            .collect();
        let c = self.v_mul(&b, n);
        // e^{−iqP/ħ} = R V diag(e^{−iqx/ħ}) Vᵀ R†
        let d: Vec<C64> = c
            .iter()
            .enumerate()
            .map(|(j, v)| v * Self::quarter_phase(j, true))
            .collect();
        let e = self.vt_mul(&d);
        let f: Vec<C64> = e
            .iter()
            .enumerate()
            .map(|(k, v)| {
                let (s, c) = sin_cos(-q * self.nodes[k] / h);
                v * C64::new(c, s)
            })
            .collect();
        let g = self.v_mul(&f, rows);
        g.into_iter()
            .enumerate()
            .map(|(j, v)| v * Self::quarter_phase(j, false))
            .collect()
    }
}

#[derive(Debug, Clone)]
pub struct CoherentState {
    pub p: f64,
    pub q: f64,
    pub amplitudes: DVector<C64>,
    /// | ‖ψ‖ − 1 |.
    pub norm_defect: f64,
    /// Weight in the top quarter of the basis.
    pub tail_weight: f64,
    pub truncation_warning: bool,
}

/// e^{−iqP/ħ} e^{ipQ/ħ} |0⟩ in the truncated basis.
pub fn coherent_state(f: &FockSpace, p: f64, q: f64) -> CoherentState {
    let a = DVector::from_vec(f.displaced(p, q, f.dim));
    finish_state(f, p, q, a)
}

/// Same state from dense matrix exponentials (scaling and squaring).
pub fn coherent_state_dense(f: &FockSpace, p: f64, q: f64) -> CoherentState {
    let i = C64::new(0.0, 1.0);
    let up = expm(&(f.q_complex() * (i * p / f.hbar)));
    let uq = expm(&(f.p.clone() * (-i * q / f.hbar)));
    let mut e0 = DVector::<C64>::zeros(f.dim);
    e0[0] = C64::new(1.0, 0.0);
    finish_state(f, p, q, uq * (up * e0))
}

/// Dense e^A: scale to ‖A/2^s‖₁ ≤ 1/2, Taylor-sum to machine precision,
/// square back.
pub fn expm(a: &DMatrix<C64>) -> DMatrix<C64> {
    let n = a.nrows();
    let norm1 = (0..n)
        .map(|j| a.column(j).iter().map(|z| z.norm()).sum::<f64>())
        .fold(0.0, f64::max);
    let mut s = 0u32;
    let mut scale = 1.0;
    while norm1 * scale > 0.5 {
        scale *= 0.5;
        s += 1;
    }
    let b = a * C64::new(scale, 0.0);
    let mut term = DMatrix::<C64>::identity(n, n);
    let mut sum = term.clone();
    for k in 1..=30 {
        term = &term * &b / C64::new(k as f64, 0.0);
        sum += &term;
        if term.norm() < 1e-18 * sum.norm() {
            break;
        }
    }
    for _ in 0..s {
        sum = &sum * &sum;
    }
    sum
}

fn finish_state(f: &FockSpace, p: f64, q: f64, a: DVector<C64>) -> CoherentState {
    let norm = a.norm();
    let tail: f64 = a.iter().skip(f.dim - f.dim / 4).map(|c| c.norm_sqr()).sum();
    let norm_defect = abs(norm - 1.0);
    CoherentState {
        p,
        q,
        amplitudes: a,
        norm_defect,
        tail_weight: tail,
        truncation_warning: norm_defect > TAIL_TOL || tail > TAIL_TOL,
    }
}

/// ⟨ψ|A|ψ⟩.
pub fn expectation(a: &DMatrix<C64>, psi: &DVector<C64>) -> C64 {
    psi.dotc(&(a * psi))
}

/// P² + Q² + Q⁴ in the truncated basis.
pub fn quartic_hamiltonian(f: &FockSpace) -> DMatrix<C64> {
    let q = f.q_complex();
    let q2 = &q * &q;
    &f.p * &f.p + &q2 + &q2 * &q2
}

/// Symbol value with the state's truncation flag.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SymbolValue {
    pub value: f64,
    pub truncation_warning: bool,
}

/// ⟨p,q|H|p,q⟩ for Hermitian H.
pub fn symbol_expectation(f: &FockSpace, h: &DMatrix<C64>, p: f64, q: f64) -> Result<SymbolValue> {
    if h.nrows() != f.dim || h.ncols() != f.dim {
        return Err(Error::InvalidParameter {
            name: "hamiltonian",
            reason: "must match the Fock dimension",
        });
    }
    let scale = h.norm().max(1.0);
    let defect = (h - h.adjoint()).norm();
    if defect > 1e-12 * scale {
        return Err(Error::Inconsistent {
            what: "hamiltonian hermiticity",
            lhs: defect,
            rhs: 0.0,
        });
    }
    let s = coherent_state(f, p, q);
    Ok(SymbolValue {
        value: expectation(h, &s.amplitudes).re,
        truncation_warning: s.truncation_warning,
    })
}

/// Fubini–Study metric in the (p, q) chart, already multiplied by 2ħ.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct FsMetric {
    /// [[g_pp, g_pq], [g_qp, g_qq]]
    pub g: [[f64; 2]; 2],
    /// max |extrapolated − half-step| entry.
    pub richardson_gap: f64,
    pub warning: bool,
}

impl FsMetric {
    /// max |g − 1| entry-wise.
    pub fn identity_defect(&self) -> f64 {
        let mut w: f64 = 0.0;
        for i in 0..2 {
            for j in 0..2 {
                let want = if i == j { 1.0 } else { 0.0 };
                w = w.max(abs(self.g[i][j] - want));
            }
        }
        w
    }
}

/// Beyond this extrapolation gap the step is reported as unreliable.
pub const FS_RICHARDSON_TOL: f64 = 1e-6;

/// (2ħ) Re[⟨∂ᵢψ|∂ⱼψ⟩ − ⟨∂ᵢψ|ψ⟩⟨ψ|∂ⱼψ⟩] from central differences at `step`
/// and `step/2`, Richardson-combined.
pub fn fubini_study_metric(f: &FockSpace, p: f64, q: f64, step: f64) -> Result<FsMetric> {
    if !(step > 0.0) || step > 0.1 * sqrt(f.hbar) {
        return Err(Error::InvalidParameter {
            name: "step",
            reason: "must be positive and below 0.1*sqrt(hbar)",
        });
    }
    let psi = coherent_state(f, p, q).amplitudes;
    let at = |h: f64| -> [[f64; 2]; 2] {
        let dp = (coherent_state(f, p + h, q).amplitudes - coherent_state(f, p - h, q).amplitudes)
            / C64::new(2.0 * h, 0.0);
        let dq = (coherent_state(f, p, q + h).amplitudes - coherent_state(f, p, q - h).amplitudes)
            / C64::new(2.0 * h, 0.0);
        let d = [&dp, &dq];
        let mut g = [[0.0; 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                let v = d[i].dotc(d[j]) - d[i].dotc(&psi) * psi.dotc(d[j]);
                g[i][j] = 2.0 * f.hbar * v.re;
            }
        }
        g
    };
    let g1 = at(step);
    let g2 = at(0.5 * step);
    let mut g = [[0.0; 2]; 2];
    let mut gap: f64 = 0.0;
    for i in 0..2 {
        for j in 0..2 {
            g[i][j] = (4.0 * g2[i][j] - g1[i][j]) / 3.0;
            gap = gap.max(abs(g[i][j] - g2[i][j]));
        }
    }
    Ok(FsMetric {
        g,
        richardson_gap: gap,
        warning: gap > FS_RICHARDSON_TOL,
    })
}

/// ∫|p,q⟩⟨p,q| dp dq/(2πħ) restricted to the low block n, m < dim/4.
#[derive(Debug, Clone)]
pub struct UnityReport {
    pub block: usize,
    pub matrix: DMatrix<C64>,
    pub max_diag_dev: f64,
    pub max_offdiag: f64,
    pub trace: f64,
    /// Largest truncation tail met at any node.
    pub max_tail_weight: f64,
}

/// Disc radius √(1.4·dim·ħ): covers the low block's Gaussian weight with
/// room to spare while staying where truncation leaves it untouched.
pub fn default_unity_cutoff(f: &FockSpace) -> f64 {
    sqrt(1.4 * f.dim as f64 * f.hbar)
}

/// Radial Gauss–Legendre order paired with [`default_unity_cutoff`].
pub const DEFAULT_UNITY_NODES: usize = 96;

/// Polar phase-space quadrature of the resolution of unity over the disc
/// p² + q² ≤ cutoff²: Gauss–Legendre in the radius, trapezoid in the angle.
pub fn resolution_of_unity_check(
    f: &FockSpace,
    radial_cutoff: f64,
    n_quad: usize,
) -> Result<UnityReport> {
    if !(radial_cutoff > 0.0) {
        return Err(Error::InvalidParameter {
            name: "radial_cutoff",
            reason: "must be positive",
        });
    }
    if n_quad < 16 {
        return Err(Error::InvalidParameter {
            name: "n_quad",
            reason: "must be at least 16",
        });
    }
    let block = f.dim / 4;
    // The angular integrand is a trigonometric polynomial of degree < block.
    let n_ang = 2 * block.max(8);
    let rule = gauss_legendre(n_quad);
    let mut acc = DMatrix::<C64>::zeros(block, block);
    let mut max_tail: f64 = 0.0;
    for (&x, &w) in rule.nodes.iter().zip(&rule.weights) {
        let rho = 0.5 * radial_cutoff * (x + 1.0);
        let wr = 0.5 * radial_cutoff * w * rho;
        for k in 0..n_ang {
            let phi = TAU * k as f64 / n_ang as f64;
            let (p, q) = (rho * sin(phi), rho * cos(phi));
            let low = f.displaced(p, q, block);
            if k == 0 {
                let full = coherent_state(f, p, q);
                max_tail = max_tail.max(full.tail_weight);
            }
            let wt = wr * TAU / n_ang as f64;
            for i in 0..block {
                for j in 0..block {
                    acc[(i, j)] += low[i] * low[j].conj() * wt;
                }
            }
        }
    }
    acc /= C64::new(2.0 * PI * f.hbar, 0.0);
    let mut dd: f64 = 0.0;
    let mut od: f64 = 0.0;
    let mut tr = 0.0;
    for i in 0..block {
        for j in 0..block {
            if i == j {
                dd = dd.max((acc[(i, i)] - C64::new(1.0, 0.0)).norm());
                tr += acc[(i, i)].re;
            } else {
                od = od.max(acc[(i, j)].norm());
            }
        }
    }
    Ok(UnityReport {
        block,
        matrix: acc,
        max_diag_dev: dd,
        max_offdiag: od,
        trace: tr,
        max_tail_weight: max_tail,
    })
}
