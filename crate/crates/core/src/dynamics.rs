//! Hamilton's equations for the enhanced (and classical) Hamiltonians.
//!
//! H = T(p) + V(q) exactly, so explicit kick–drift–kick splittings are
//! symplectic: leapfrog (order 2) and its Yoshida triple-jump (order 4).

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::math::{abs, ceil, powf, round, sqrt, TAU};
use crate::symbol::{EnhancedHamiltonian, PhaseSpacePoint};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum Scheme {
    Leapfrog,
    Yoshida4,
}

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct IntegratorConfig {
    pub dt: f64,
    pub t_end: f64,
    pub scheme: Scheme,
    pub record_every: usize,
}

impl IntegratorConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.dt > 0.0) || !self.dt.is_finite() {
            return Err(Error::InvalidParameter {
                name: "dt",
                reason: "must be positive",
            });
        }
        if !(self.t_end > 0.0) || !self.t_end.is_finite() {
            return Err(Error::InvalidParameter {
                name: "t_end",
                reason: "must be positive",
            });
        }
        if self.record_every == 0 {
            return Err(Error::InvalidParameter {
                name: "record_every",
                reason: "must be at least 1",
            });
        }
        Ok(())
    }

    /// Number of steps; the step is shrunk to t_end/steps when t_end is not a
    /// whole multiple of dt.
    pub fn steps(&self) -> usize {
        let n = self.t_end / self.dt;
        let r = round(n);
        if abs(n - r) <= 1e-9 * n.max(1.0) {
            r as usize
        } else {
            ceil(n) as usize
        }
    }

    pub fn effective_dt(&self) -> f64 {
        self.t_end / self.steps() as f64
    }
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Trajectory {
    pub times: Vec<f64>,
    pub states: Vec<PhaseSpacePoint>,
    pub energies: Vec<f64>,
    /// dt times the largest local frequency exceeded 0.1.
    pub dt_warning: bool,
}

impl Trajectory {
    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    /// max |E(t) − E(0)| / |E(0)| (absolute if E(0) = 0).
    pub fn energy_drift(&self) -> f64 {
        let e0 = self.energies[0];
        let d = self
            .energies
            .iter()
            .map(|e| abs(e - e0))
            .fold(0.0, f64::max);
        if e0 != 0.0 {
            d / abs(e0)
        } else {
            d
        }
    }

    /// max |L(t) − L(0)| relative to max(|L(0)|, 1e-300).
    pub fn angular_momentum_drift(&self) -> f64 {
        let l0 = self.states[0].angular_momentum();
        let d = self
            .states
            .iter()
            .map(|s| abs(s.angular_momentum() - l0))
            .fold(0.0, f64::max);
        if l0 != 0.0 {
            d / abs(l0)
        } else {
            d
        }
    }

    pub fn last(&self) -> &PhaseSpacePoint {
        self.states
            .last()
            .expect("trajectory holds the initial state")
    }
}

/// (∂H/∂p, ∂H/∂q), each ordered (x₁, y₁, x₂, y₂).
pub fn gradient(h: &EnhancedHamiltonian, x: &PhaseSpacePoint) -> ([f64; 4], [f64; 4]) {
    let p = &h.params;
    let inv_m = 1.0 / p.m;
    let dp = [
        x.p1[0] * inv_m,
        x.p1[1] * inv_m,
        x.p2[0] * inv_m,
        x.p2[1] * inv_m,
    ];
    (dp, force_gradient(h, &x.q1, &x.q2))
}

fn force_gradient(h: &EnhancedHamiltonian, q1: &[f64; 2], q2: &[f64; 2]) -> [f64; 4] {
    let p = &h.params;
    let hb = p.hbar;
    let c = &h.coeffs;
    let s = q1[0] * q1[0] + q1[1] * q1[1] + q2[0] * q2[0] + q2[1] * q2[1];
    let a = p.m * p.varpi * p.varpi + 4.0 * p.g * s + 2.0 * c.c_q2.at(hb);
    let b = c.c_q1q2.at(hb);
    [
        a * q1[0] + b * q2[0],
        a * q1[1] + b * q2[1],
        a * q2[0] + b * q1[0],
        a * q2[1] + b * q1[1],
    ]
}

/// Largest local frequency √(|∂²V|/m) bound at q, used for the dt warning.
fn local_frequency(h: &EnhancedHamiltonian, x: &PhaseSpacePoint) -> f64 {
    let p = &h.params;
    let hb = p.hbar;
    let s = x.q1[0] * x.q1[0] + x.q1[1] * x.q1[1] + x.q2[0] * x.q2[0] + x.q2[1] * x.q2[1];
    let k = p.m * p.varpi * p.varpi
        + 12.0 * abs(p.g) * s
        + 2.0 * abs(h.coeffs.c_q2.at(hb))
        + abs(h.coeffs.c_q1q2.at(hb));
    sqrt(k / p.m)
}

const BLOW_UP: f64 = 1e12;

#[inline]
fn kick(h: &EnhancedHamiltonian, x: &mut PhaseSpacePoint, tau: f64) {
    let f = force_gradient(h, &x.q1, &x.q2);
    x.p1[0] -= tau * f[0];
    x.p1[1] -= tau * f[1];
    x.p2[0] -= tau * f[2];
    x.p2[1] -= tau * f[3];
}

#[inline]
fn drift(h: &EnhancedHamiltonian, x: &mut PhaseSpacePoint, tau: f64) {
    let c = tau / h.params.m;
    x.q1[0] += c * x.p1[0];
    x.q1[1] += c * x.p1[1];
    x.q2[0] += c * x.p2[0];
    x.q2[1] += c * x.p2[1];
}

fn leapfrog(h: &EnhancedHamiltonian, x: &mut PhaseSpacePoint, dt: f64) {
    kick(h, x, 0.5 * dt);
    drift(h, x, dt);
    kick(h, x, 0.5 * dt);
}

fn step(h: &EnhancedHamiltonian, x: &mut PhaseSpacePoint, dt: f64, scheme: Scheme) {
    match scheme {
        Scheme::Leapfrog => leapfrog(h, x, dt),
        Scheme::Yoshida4 => {
            let cbrt2 = powf(2.0, 1.0 / 3.0);
            let w1 = 1.0 / (2.0 - cbrt2);
            let w0 = -cbrt2 * w1;
            leapfrog(h, x, w1 * dt);
            leapfrog(h, x, w0 * dt);
            leapfrog(h, x, w1 * dt);
        }
    }
}

/// Integrate from x0 over [0, t_end], recording x0 and every
/// `record_every`-th step (and the final step).
pub fn integrate(
    h: &EnhancedHamiltonian,
    x0: PhaseSpacePoint,
    cfg: &IntegratorConfig,
) -> Result<Trajectory> {
    cfg.validate()?;
    h.params.validate()?;
    if !x0.is_finite() {
        return Err(Error::Domain {
            what: "initial state",
            value: f64::NAN,
        });
    }
    let n = cfg.steps();
    let dt = cfg.effective_dt();
    let cap = n / cfg.record_every + 2;
    let mut tr = Trajectory {
        times: Vec::with_capacity(cap),
        states: Vec::with_capacity(cap),
        energies: Vec::with_capacity(cap),
        dt_warning: false,
    };
    let mut x = x0;
    let record = |k: usize, x: &PhaseSpacePoint, tr: &mut Trajectory| {
        tr.times.push(k as f64 * dt);
        tr.states.push(*x);
        tr.energies.push(h.eval(x));
        if dt * local_frequency(h, x) > 0.1 {
            tr.dt_warning = true;
        }
    };
    record(0, &x, &mut tr);
    for k in 1..=n {
        step(h, &mut x, dt, cfg.scheme);
        let a = x.to_array();
        if a.iter().any(|v| !(abs(*v) <= BLOW_UP)) {
            return Err(Error::BlowUp {
                step: k,
                time: k as f64 * dt,
            });
        }
        if k % cfg.record_every == 0 || k == n {
            record(k, &x, &mut tr);
        }
    }
    Ok(tr)
}

/// Period 2π/ϖ of the harmonic part.
pub fn harmonic_period(h: &EnhancedHamiltonian) -> f64 {
    TAU / h.params.varpi
}

/// Euclidean distance between two phase-space points.
pub fn state_distance(a: &PhaseSpacePoint, b: &PhaseSpacePoint) -> f64 {
    let (a, b) = (a.to_array(), b.to_array());
    sqrt(a.iter().zip(&b).map(|(x, y)| (x - y) * (x - y)).sum())
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct PairDistance {
    pub gamma_a: f64,
    pub gamma_b: f64,
    pub distances: Vec<f64>,
    pub max_distance: f64,
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ComparisonReport {
    pub gammas: Vec<f64>,
    pub trajectories: Vec<Trajectory>,
    pub pairs: Vec<PairDistance>,
    /// At ħ = 0: whether every pair stayed within [`CLASSICAL_COINCIDENCE_TOL`].
    pub classical_coincidence: Option<bool>,
}

pub const CLASSICAL_COINCIDENCE_TOL: f64 = 1e-10;

/// Integrate each Hamiltonian from the same x0 and compare all pairs.
pub fn compare_statistics(
    hs: &[EnhancedHamiltonian],
    x0: PhaseSpacePoint,
    cfg: &IntegratorConfig,
) -> Result<ComparisonReport> {
    if let Some(first) = hs.first() {
        if hs.iter().any(|h| h.params != first.params) {
            return Err(Error::InvalidParameter {
                name: "hamiltonians",
                reason: "must share physical parameters and differ only in gamma",
            });
        }
    }
    let trajectories = hs
        .iter()
        .map(|h| integrate(h, x0, cfg))
        .collect::<Result<Vec<_>>>()?;
    let gammas: Vec<f64> = hs.iter().map(|h| h.gamma()).collect();
    let mut pairs = Vec::new();
    for i in 0..hs.len() {
        for j in i + 1..hs.len() {
            let distances: Vec<f64> = trajectories[i]
                .states
                .iter()
                .zip(&trajectories[j].states)
                .map(|(a, b)| state_distance(a, b))
                .collect();
            let max_distance = distances.iter().copied().fold(0.0, f64::max);
            pairs.push(PairDistance {
                gamma_a: gammas[i],
                gamma_b: gammas[j],
                distances,
                max_distance,
            });
        }
    }
    let classical_coincidence = match hs.first() {
        Some(h) if h.params.hbar == 0.0 => Some(
            pairs
                .iter()
                .all(|p| p.max_distance <= CLASSICAL_COINCIDENCE_TOL),
        ),
        _ => None,
    };
    Ok(ComparisonReport {
        gammas,
        trajectories,
        pairs,
        classical_coincidence,
    })
}
