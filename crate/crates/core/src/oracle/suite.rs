use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::{montecarlo_batch, reduced_batch_refined, Integrand, QuadConfig};
use crate::error::Result;
use crate::math::{abs, sqrt};
use crate::moments::{moment_table, norm_constant, FiducialSpec};

/// One closed-form-versus-oracle comparison.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CheckRecord {
    pub check: String,
    pub gamma: f64,
    pub lambda: f64,
    pub closed_form: f64,
    pub oracle: f64,
    pub rel_err: f64,
    pub pass: bool,
    /// Monte Carlo rows only.
    #[cfg_attr(
        feature = "serde",
        serde(default, skip_serializing_if = "Option::is_none")
    )]
    pub stderr: Option<f64>,
}

/// Monte Carlo rows pass within this many standard errors.
pub const MC_SIGMAS: f64 = 3.0;

/// Relative roundoff allowance added to the Monte Carlo band; it only matters
/// when the estimator has zero variance (constant weight at γ = 0).
const MC_ROUNDOFF: f64 = 1e-12;

fn mc_pass(mean: f64, closed: f64, stderr: f64, scale: f64) -> bool {
    abs(mean - closed) <= MC_SIGMAS * stderr + MC_ROUNDOFF * abs(closed).max(scale)
}

struct Row {
    name: &'static str,
    integrand: Integrand,
    closed: f64,
    /// Characteristic size used when the closed form vanishes.
    scale: f64,
}

fn rel(oracle: f64, closed: f64, scale: f64) -> f64 {
    abs(oracle - closed) / abs(closed).max(scale)
}

/// Every closed-form moment against the deterministic quadrature and the
/// Monte Carlo estimator, with ħ = 1 and Ω = λ.
pub fn moment_suite(gamma: f64, lambda: f64, cfg: &QuadConfig) -> Result<Vec<CheckRecord>> {
    cfg.validate()?;
    let spec = FiducialSpec::from_lambda(gamma, lambda)?;
    let t = moment_table(&spec)?;
    let l1 = 1.0 / lambda;
    let l2 = l1 * l1;
    let rows = [
        Row {
            name: "q2",
            integrand: Integrand::Monomial([2, 0, 0, 0]),
            closed: t.q2,
            scale: l1,
        },
        Row {
            name: "p2",
            integrand: Integrand::P2,
            closed: t.p2,
            scale: lambda,
        },
        Row {
            name: "q4",
            integrand: Integrand::Monomial([4, 0, 0, 0]),
            closed: t.q4,
            scale: l2,
        },
        Row {
            name: "q2q2_same",
            integrand: Integrand::Monomial([2, 2, 0, 0]),
            closed: t.q2q2_same,
            scale: l2,
        },
        Row {
            name: "q2q2_cross",
            integrand: Integrand::Monomial([2, 0, 2, 0]),
            closed: t.q2q2_cross,
            scale: l2,
        },
        Row {
            name: "q2q2_mixed",
            integrand: Integrand::Monomial([2, 0, 0, 2]),
            closed: t.q2q2_mixed,
            scale: l2,
        },
        Row {
            name: "qq_cross",
            integrand: Integrand::Monomial([1, 0, 1, 0]),
            closed: t.qq_cross,
            scale: l1,
        },
        Row {
            name: "v_expect",
            integrand: Integrand::Potential,
            closed: t.v_expect,
            scale: l2,
        },
        Row {
            name: "q1_mean",
            integrand: Integrand::Monomial([1, 0, 0, 0]),
            closed: 0.0,
            scale: sqrt(l1),
        },
        Row {
            name: "q3_odd",
            integrand: Integrand::Monomial([3, 0, 0, 0]),
            closed: 0.0,
            scale: l1 * sqrt(l1),
        },
        Row {
            name: "x1y1x2y2",
            integrand: Integrand::Monomial([1, 1, 1, 1]),
            closed: 0.5 * (t.q2q2_cross - t.q2q2_mixed),
            scale: l2,
        },
    ];
    let integrands: Vec<Integrand> = rows.iter().map(|r| r.integrand).collect();
    let mut out = Vec::with_capacity(2 * rows.len() + 2);

    let record =
        |check: String, closed: f64, oracle: f64, rel_err: f64, pass: bool, stderr| CheckRecord {
            check,
            gamma,
            lambda,
            closed_form: closed,
            oracle,
            rel_err,
            pass,
            stderr,
        };

    let n_closed = norm_constant(&spec)?;
    let quad = reduced_batch_refined(gamma, lambda, &integrands, cfg)?;
    let nq = quad[rows.len()];
    let e = rel(nq.value, n_closed, 0.0);
    out.push(record(
        "quadrature:norm_const".to_string(),
        n_closed,
        nq.value,
        e,
        e <= cfg.rel_tol,
        None,
    ));
    for (r, q) in rows.iter().zip(&quad) {
        let e = rel(q.value, r.closed, r.scale);
        let mut name = String::from("quadrature:");
        name.push_str(r.name);
        out.push(record(name, r.closed, q.value, e, e <= cfg.rel_tol, None));
    }

    let (mc, weight) = montecarlo_batch(gamma, lambda, &integrands, cfg.mc_samples, cfg.mc_seed)?;
    let n_mc = 1.0 / sqrt(weight.mean);
    let n_se = 0.5 * n_mc * weight.stderr / weight.mean;
    let pass = mc_pass(n_mc, n_closed, n_se, 0.0);
    out.push(record(
        "montecarlo:norm_const".to_string(),
        n_closed,
        n_mc,
        rel(n_mc, n_closed, 0.0),
        pass,
        Some(n_se),
    ));
    for (r, m) in rows.iter().zip(&mc) {
        let pass = mc_pass(m.mean, r.closed, m.stderr, r.scale);
        let mut name = String::from("montecarlo:");
        name.push_str(r.name);
        out.push(record(
            name,
            r.closed,
            m.mean,
            rel(m.mean, r.closed, r.scale),
            pass,
            Some(m.stderr),
        ));
    }
    Ok(out)
}
