//! Brute-force ground truth for the closed forms: a deterministic reduced
//! quadrature, a Monte Carlo estimator over the raw four-dimensional
//! integral, and dual-route checks of the radial reduction.

mod angular;
mod appendix;
mod montecarlo;
mod reduced;
mod suite;

pub use angular::{angular_closed_form, angular_integral, AngularResult};
pub use appendix::{
    appendix_chain_check, lambda_coefficient, r_n_closed_form, r_n_quadrature, varrho_quadrature,
    varrho_whittaker, AppendixReport, AppendixRow, Sign, APPENDIX_TOL,
};
pub use montecarlo::{moment_montecarlo, montecarlo_batch, norm_montecarlo, McEstimate};
pub use reduced::{
    moment_quadrature, norm_quadrature, p2_quadrature, raw_integrals, reduced_batch,
    reduced_batch_refined, QuadValue,
};

pub use suite::{moment_suite, CheckRecord, MC_SIGMAS};

use crate::error::{Error, Result};
use crate::poly::degree;

/// Node counts and sampling budget.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct QuadConfig {
    /// Gauss–Laguerre order of the outer radial rule; the inner radial
    /// double-exponential rules use four times as many nodes per segment.
    pub radial_nodes: usize,
    /// Half the node count of the relative-angle rule.
    pub angular_nodes: usize,
    pub mc_samples: usize,
    pub mc_seed: u64,
    pub rel_tol: f64,
}

impl Default for QuadConfig {
    fn default() -> Self {
        QuadConfig {
            radial_nodes: 40,
            angular_nodes: 64,
            mc_samples: 1_000_000,
            mc_seed: 42,
            rel_tol: 1e-6,
        }
    }
}

impl QuadConfig {
    pub fn validate(&self) -> Result<()> {
        if self.radial_nodes < 16 {
            return Err(Error::InvalidParameter {
                name: "radial_nodes",
                reason: "must be at least 16",
            });
        }
        if self.angular_nodes < 32 {
            return Err(Error::InvalidParameter {
                name: "angular_nodes",
                reason: "must be at least 32",
            });
        }
        if self.mc_samples < 1000 {
            return Err(Error::InvalidParameter {
                name: "mc_samples",
                reason: "must be at least 1000",
            });
        }
        if !(self.rel_tol > 0.0) {
            return Err(Error::InvalidParameter {
                name: "rel_tol",
                reason: "must be positive",
            });
        }
        Ok(())
    }

    pub fn doubled(&self) -> Self {
        QuadConfig {
            radial_nodes: 2 * self.radial_nodes,
            angular_nodes: 2 * self.angular_nodes,
            ..*self
        }
    }
}

/// Which integrand: a position monomial or the kinetic ⟨P_{x₁}²⟩ form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum DerivativeFlag {
    None,
    P2,
}

/// A moment to integrate: x₁^a y₁^b x₂^c y₂^d, or ⟨P_{x₁}²⟩ (ħ = 1).
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct IntegrandSpec {
    pub gamma: f64,
    pub lambda: f64,
    pub monomial: [u8; 4],
    pub derivative_flag: DerivativeFlag,
}

impl IntegrandSpec {
    pub fn new(
        gamma: f64,
        lambda: f64,
        monomial: [u8; 4],
        derivative_flag: DerivativeFlag,
    ) -> Result<Self> {
        crate::moments::StatisticsParam::new(gamma)?;
        if !(lambda > 0.0) || !lambda.is_finite() {
            return Err(Error::InvalidParameter {
                name: "lambda",
                reason: "must be positive",
            });
        }
        if degree(&monomial) > 4 {
            return Err(Error::InvalidParameter {
                name: "monomial",
                reason: "total degree must be at most 4",
            });
        }
        Ok(IntegrandSpec {
            gamma,
            lambda,
            monomial,
            derivative_flag,
        })
    }

    pub fn monomial(gamma: f64, lambda: f64, monomial: [u8; 4]) -> Result<Self> {
        Self::new(gamma, lambda, monomial, DerivativeFlag::None)
    }

    pub fn p2(gamma: f64, lambda: f64) -> Result<Self> {
        Self::new(gamma, lambda, [0; 4], DerivativeFlag::P2)
    }

    fn integrand(&self) -> Integrand {
        match self.derivative_flag {
            DerivativeFlag::None => Integrand::Monomial(self.monomial),
            DerivativeFlag::P2 => Integrand::P2,
        }
    }
}

/// Integrands understood by the batch evaluators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Integrand {
    Monomial([u8; 4]),
    /// −η*∂²_{x₁}η / |η|² with ħ = 1, as one unsplit bracket.
    P2,
    /// V = (x₁² + y₁² + x₂² + y₂²)².
    Potential,
}

#[inline(always)]
fn ipow(x: f64, e: u8) -> f64 {
    match e {
        0 => 1.0,
        1 => x,
        2 => x * x,
        3 => x * x * x,
        _ => {
            let x2 = x * x;
            let mut v = x2 * x2;
            for _ in 4..e {
                v *= x;
            }
            v
        }
    }
}

/// `x` = (x₁, y₁, x₂, y₂); `d` = r₁ − r₂ supplied separately so that it keeps
/// full relative accuracy near coincidence; `d2` = |d|².
#[inline]
pub(crate) fn eval_integrand(
    which: &Integrand,
    x: [f64; 4],
    d: [f64; 2],
    gamma: f64,
    lambda: f64,
    d2: f64,
) -> f64 {
    match which {
        Integrand::Monomial(e) => {
            ipow(x[0], e[0]) * ipow(x[1], e[1]) * ipow(x[2], e[2]) * ipow(x[3], e[3])
        }
        Integrand::Potential => {
            let s = x[0] * x[0] + x[1] * x[1] + x[2] * x[2] + x[3] * x[3];
            s * s
        }
        Integrand::P2 => {
            // |d|^{-4} [γ(γ−1)(Δx²−Δy²) − 2λγ x₁Δx|d|² + λ(λx₁²−1)|d|⁴]; the |d|^{2γ}
            // factor is carried by the weight.
            let [dx, dy] = d;
            let mut b = lambda * (lambda * x[0] * x[0] - 1.0);
            if gamma != 0.0 {
                b += gamma * (gamma - 1.0) * ((dx * dx - dy * dy) / d2) / d2
                    - 2.0 * lambda * gamma * x[0] * dx / d2;
            }
            -b
        }
    }
}
