use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::math::{abs, exp, ln, powf, PI};
use crate::quad::{adaptive_gk_semi_infinite, DeRule};
use crate::specfun::{
    ln_whittaker_w_rule, log_gamma, pochhammer, WhittakerParams, WHITTAKER_NODES,
};

/// Upper (`Plus`, cos² weight) or lower (`Minus`, bare) angular branch.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// (1 ± 1)/2.
    fn k(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => 0.0,
        }
    }

    /// ±1.
    fn pm(self) -> f64 {
        2.0 * self.k() - 1.0
    }
}

/// Relative agreement demanded of both routes.
pub const APPENDIX_TOL: f64 = 1e-7;

/// Radial points at which the two forms of ϱ are compared.
const U_POINTS: [f64; 5] = [0.05, 0.5, 1.0, 2.5, 7.5];

/// Whittaker indices of the radial integral, with ν reflected into the
/// range of the integral representation (W is even in ν).
fn indices(gamma: f64, s: u32, sign: Sign) -> Result<WhittakerParams> {
    let sf = s as f64;
    let pm = sign.pm();
    let mu = (2.0 * (gamma - 3.0 * sf) - 1.0 - pm) / 4.0;
    let nu = (2.0 * (sf - gamma) - 3.0 - pm) / 4.0;
    WhittakerParams::with_valid_nu(mu, nu)
}

/// Series coefficient of the radial density:
/// π λ^{−γ−(3±1)/2} 4^s/s! ((1−γ)/2)_s (−γ/2)_s / ((3±1)/2)_s.
pub fn lambda_coefficient(gamma: f64, s: u32, lambda: f64, sign: Sign) -> f64 {
    let c = 1.0 + sign.k();
    let mut v = PI / powf(lambda, gamma + c);
    v *= pochhammer(0.5 * (1.0 - gamma), s) * pochhammer(-0.5 * gamma, s) / pochhammer(c, s);
    for j in 1..=s {
        v *= 4.0 / j as f64;
    }
    v
}

/// ϱ(u) = ∫₀^∞ e^{−u'} u'^{s+(1±1)/2} (u' + u)^{γ−2s} du', by adaptive quadrature.
pub fn varrho_quadrature(gamma: f64, s: u32, u: f64, sign: Sign) -> Result<f64> {
    check_u(u)?;
    let p = s as f64 + sign.k();
    let q = gamma - 2.0 * s as f64;
    let r = adaptive_gk_semi_infinite(
        |t| {
            if t <= 0.0 {
                return if p == 0.0 { powf(u, q) } else { 0.0 };
            }
            exp(-t + p * ln(t) + q * ln(t + u))
        },
        0.0,
        0.0,
        1e-13,
        4000,
    )?;
    Ok(r.value)
}

/// ϱ(u) = Γ(s + (3±1)/2) u^{(2(γ−s)+1±1)/4} e^{u/2} W_{μ,ν}(u).
pub fn varrho_whittaker(gamma: f64, s: u32, u: f64, sign: Sign) -> Result<f64> {
    check_u(u)?;
    let p = indices(gamma, s, sign)?;
    let rule = DeRule::exp_sinh(WHITTAKER_NODES);
    let lw = ln_whittaker_w_rule(p, u, &rule)?;
    let k = sign.k();
    let sf = s as f64;
    Ok(exp(log_gamma(sf + k + 1.0)?
        + 0.5 * (gamma - sf + k) * ln(u)
        + 0.5 * u
        + lw))
}

/// R_n = ∫₀^∞ e^{−u/2} u^{(γ+s)/2+n} W_{μ,ν}(u) du by double-exponential
/// quadrature, refined once; returns (value, relative change).
pub fn r_n_quadrature(gamma: f64, s: u32, n: u32, sign: Sign) -> Result<(f64, f64)> {
    let p = indices(gamma, s, sign)?;
    let wrule = DeRule::exp_sinh(WHITTAKER_NODES);
    let e = 0.5 * (gamma + s as f64) + n as f64;
    let integrate = |nodes: usize| -> Result<f64> {
        let mut err = None;
        let v = DeRule::exp_sinh(nodes).integrate(0.0, 0.0, |u, _, _| {
            match ln_whittaker_w_rule(p, u, &wrule) {
                Ok(lw) => exp(-0.5 * u + e * ln(u) + lw),
                Err(x) => {
                    err = Some(x);
                    0.0
                }
            }
        });
        match err {
            Some(x) => Err(x),
            None => Ok(v),
        }
    };
    let a = integrate(160)?;
    let b = integrate(320)?;
    Ok((b, abs(a - b) / abs(b)))
}

/// Γ(n+s+(3∓1)/4) Γ(n+γ+(9±1)/4) / Γ(2s+n+(9±1)/4), valid for n > (−3±1)/4.
pub fn r_n_closed_form(gamma: f64, s: u32, n: u32, sign: Sign) -> Result<f64> {
    let pm = sign.pm();
    let (s, n) = (s as f64, n as f64);
    let a = n + s + (3.0 - pm) / 4.0;
    let b = n + gamma + (9.0 + pm) / 4.0;
    let c = 2.0 * s + n + (9.0 + pm) / 4.0;
    Ok(exp(log_gamma(a)? + log_gamma(b)? - log_gamma(c)?))
}

fn check_u(u: f64) -> Result<()> {
    if !(u > 0.0) || !u.is_finite() {
        return Err(Error::Domain {
            what: "radial variable u",
            value: u,
        });
    }
    Ok(())
}

/// One (s, identity) comparison.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct AppendixRow {
    pub s: u32,
    /// "varrho" or "R_n".
    pub check: String,
    /// u for ϱ rows (the worst point), n for R_n rows.
    pub point: f64,
    pub closed_form: f64,
    pub quadrature: f64,
    pub rel_err: f64,
    pub pass: bool,
    /// Series coefficient at λ = 1; zero marks a term that drops out.
    pub lambda_coefficient: f64,
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct AppendixReport {
    pub gamma: f64,
    pub n: u32,
    pub sign: Sign,
    pub rows: Vec<AppendixRow>,
}

impl AppendixReport {
    pub fn pass(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AppendixRow> {
        self.rows.iter().filter(|r| !r.pass)
    }
}

/// Both forms of ϱ_{γ,s} and of R_n for s = 0..=s_max.
pub fn appendix_chain_check(gamma: f64, s_max: u32, n: u32, sign: Sign) -> Result<AppendixReport> {
    crate::moments::StatisticsParam::new(gamma)?;
    if s_max < 8 {
        return Err(Error::InvalidParameter {
            name: "s_max",
            reason: "must be at least 8",
        });
    }
    if n > 2 {
        return Err(Error::InvalidParameter {
            name: "n",
            reason: "must be 0, 1 or 2",
        });
    }
    let mut rows = Vec::with_capacity(2 * (s_max as usize + 1));
    for s in 0..=s_max {
        let lam = lambda_coefficient(gamma, s, 1.0, sign);
        let mut worst = (0.0, 0.0, 0.0, -1.0);
        for &u in &U_POINTS {
            let q = varrho_quadrature(gamma, s, u, sign)?;
            let c = varrho_whittaker(gamma, s, u, sign)?;
            let e = abs(q - c) / abs(q);
            if !(e <= worst.3) {
                worst = (u, c, q, e);
            }
        }
        rows.push(AppendixRow {
            s,
            check: String::from("varrho"),
            point: worst.0,
            closed_form: worst.1,
            quadrature: worst.2,
            rel_err: worst.3,
            pass: worst.3 <= APPENDIX_TOL,
            lambda_coefficient: lam,
        });
        let c = r_n_closed_form(gamma, s, n, sign)?;
        let (q, _) = r_n_quadrature(gamma, s, n, sign)?;
        let e = abs(q - c) / abs(c);
        rows.push(AppendixRow {
            s,
            check: String::from("R_n"),
            point: n as f64,
            closed_form: c,
            quadrature: q,
            rel_err: e,
            pass: e <= APPENDIX_TOL,
            lambda_coefficient: lam,
        });
    }
    Ok(AppendixReport {
        gamma,
        n,
        sign,
        rows,
    })
}
