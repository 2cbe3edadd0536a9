//! Closed-form moments of the two-particle fiducial family
//! η_γ = N (z₁ − z₂)^γ exp(−λ(r₁² + r₂²)/2),  λ = Ω/ħ.
//!
//! Every value is a pure power of ħ/Ω times a function of γ; the
//! γ-dependence is written through unit-argument ₂F₁ ratios where that is
//! the natural form.

use crate::error::{Error, Result};
use crate::math::{exp, ln, PI};
use crate::specfun::{hyp2f1_unit, log_gamma, HypParams};

/// Particle statistics implied by γ.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Statistics {
    Boson,
    Fermion,
    Anyon,
}

/// Exchange exponent γ ∈ [0, 2) with exchange phase α = πγ.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct StatisticsParam {
    gamma: f64,
    alpha: f64,
}

impl StatisticsParam {
    pub fn new(gamma: f64) -> Result<Self> {
        if !(0.0..2.0).contains(&gamma) {
            return Err(Error::InvalidParameter {
                name: "gamma",
                reason: "must lie in [0,2)",
            });
        }
        Ok(StatisticsParam {
            gamma,
            alpha: PI * gamma,
        })
    }

    pub fn boson() -> Self {
        StatisticsParam {
            gamma: 0.0,
            alpha: 0.0,
        }
    }

    pub fn fermion() -> Self {
        StatisticsParam {
            gamma: 1.0,
            alpha: PI,
        }
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn kind(&self) -> Statistics {
        if self.gamma == 0.0 {
            Statistics::Boson
        } else if self.gamma == 1.0 {
            Statistics::Fermion
        } else {
            Statistics::Anyon
        }
    }
}

/// (γ, Ω, ħ) with λ = Ω/ħ.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct FiducialSpec {
    pub stats: StatisticsParam,
    omega: f64,
    hbar: f64,
}

impl FiducialSpec {
    pub fn new(gamma: f64, omega: f64, hbar: f64) -> Result<Self> {
        let stats = StatisticsParam::new(gamma)?;
        if !(omega > 0.0) || !omega.is_finite() {
            return Err(Error::InvalidParameter {
                name: "Omega",
                reason: "must be positive",
            });
        }
        if !(hbar > 0.0) || !hbar.is_finite() {
            return Err(Error::InvalidParameter {
                name: "hbar",
                reason: "must be positive",
            });
        }
        Ok(FiducialSpec { stats, omega, hbar })
    }

    /// ħ = 1 and Ω = λ, the normalization the oracle works in.
    pub fn from_lambda(gamma: f64, lambda: f64) -> Result<Self> {
        Self::new(gamma, lambda, 1.0)
    }

    pub fn gamma(&self) -> f64 {
        self.stats.gamma()
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn hbar(&self) -> f64 {
        self.hbar
    }

    pub fn lambda(&self) -> f64 {
        self.omega / self.hbar
    }

    /// ħ/Ω, the natural length² unit.
    fn len2(&self) -> f64 {
        self.hbar / self.omega
    }
}

/// ₂F₁((1−γ)/2, −γ/2; c; 1).
fn f_base(gamma: f64, c: f64) -> Result<f64> {
    hyp2f1_unit(HypParams::new(0.5 * (1.0 - gamma), -0.5 * gamma, c)?)
}

/// ₂F₁((3−γ)/2, (2−γ)/2; 7/2; 1), the companion of the quartic moments.
fn f7(gamma: f64) -> Result<f64> {
    hyp2f1_unit(HypParams::new(
        0.5 * (3.0 - gamma),
        0.5 * (2.0 - gamma),
        3.5,
    )?)
}

/// The recurring denominator ₂F₁((1−γ)/2, −γ/2; 3/2; 1).
fn f0(gamma: f64) -> Result<f64> {
    f_base(gamma, 1.5)
}

/// |N_γ|: the normalization constant of η_γ.
pub fn norm_constant(f: &FiducialSpec) -> Result<f64> {
    let g = f.gamma();
    let lam = f.lambda();
    // |N|^{-2} = π²√π Γ(2+γ) ₂F₁(·;3/2;1) / (2 λ^{γ+2} Γ(3/2))
    let ln_inv_sq = 2.5 * ln(PI) + log_gamma(g + 2.0)? + ln(f0(g)?)
        - ln(2.0)
        - (g + 2.0) * ln(lam)
        - log_gamma(1.5)?;
    Ok(exp(-0.5 * ln_inv_sq))
}

/// ⟨Q_{x₁}²⟩ = ħ(γ+2)/(4Ω).
pub fn moment_q2(f: &FiducialSpec) -> f64 {
    f.len2() * (f.gamma() + 2.0) / 4.0
}

/// ⟨P_{x₁}²⟩ = ħΩ(γ+2)/4.
///
/// The kinetic moment is Ω² times the position moment: integrating the
/// Laplacian of η_γ by parts leaves λ²⟨x₁²⟩ times ħ².
pub fn moment_p2(f: &FiducialSpec) -> f64 {
    f.hbar * f.omega * (f.gamma() + 2.0) / 4.0
}

/// ⟨Q_{x₁}⁴⟩.
pub fn moment_q4(f: &FiducialSpec) -> Result<f64> {
    let g = f.gamma();
    let l2 = f.len2() * f.len2();
    let pref = (g + 3.0) * (g + 2.0) / (16.0 * f0(g)?);
    Ok(l2 * pref * (2.0 * f_base(g, 2.5)? + 0.1 * g * (g - 1.0) * f7(g)?))
}

/// ⟨Q_{x₁}²Q_{y₁}²⟩ = ⟨Q_{x₁}⁴⟩/3 by rotational invariance.
pub fn moment_q2q2_same(f: &FiducialSpec) -> Result<f64> {
    Ok(moment_q4(f)? / 3.0)
}

/// ⟨Q_{x₁}²Q_{x₂}²⟩, same axis, different particles.
///
/// Carries the γ(γ−1) companion term that also appears in ⟨Q_{x₁}⁴⟩; the
/// term vanishes at γ = 0 and γ = 1.
pub fn moment_q2q2_cross(f: &FiducialSpec) -> Result<f64> {
    let g = f.gamma();
    let l2 = f.len2() * f.len2();
    let pref = (g + 3.0) * (g + 2.0) / (48.0 * f0(g)?);
    Ok(l2 * pref * (2.0 * f_base(g, 2.5)? + 0.3 * g * (g - 1.0) * f7(g)?))
}

/// ⟨Q_{x₁}²Q_{y₂}²⟩, orthogonal axes, different particles.
pub fn moment_q2q2_mixed(f: &FiducialSpec) -> Result<f64> {
    let g = f.gamma();
    let l2 = f.len2() * f.len2();
    let pref = (g + 3.0) * (g + 2.0) / (48.0 * f0(g)?);
    Ok(l2 * pref * (2.0 * f_base(g, 2.5)? + 0.1 * g * (g - 1.0) * f7(g)?))
}

/// ⟨Q_{x₁}Q_{x₂}⟩ = −(ħ(γ+2)/4Ω)·[₂F₁(−(1+γ)/2, −γ/2; 3/2; 1)/₂F₁((1−γ)/2, −γ/2; 3/2; 1) − 1],
/// which collapses to −ħγ/(4Ω).
pub fn moment_qq_cross(f: &FiducialSpec) -> Result<f64> {
    let g = f.gamma();
    let num = hyp2f1_unit(HypParams::new(-0.5 * (1.0 + g), -0.5 * g, 1.5)?)?;
    Ok(-f.len2() * (g + 2.0) / 4.0 * (num / f0(g)? - 1.0))
}

/// ⟨V⟩ for V = (Σ_σ Q_σ²)² over both particles and both axes:
/// 4⟨x⁴⟩ + 4⟨x₁²y₁²⟩ + 4⟨x₁²x₂²⟩ + 4⟨x₁²y₂²⟩ = (16/3)⟨x⁴⟩ + 4(cross + mixed).
pub fn moment_v(f: &FiducialSpec) -> Result<f64> {
    Ok(16.0 / 3.0 * moment_q4(f)? + 4.0 * (moment_q2q2_cross(f)? + moment_q2q2_mixed(f)?))
}

/// Every second- and fourth-order moment of one fiducial vector.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct MomentTable {
    pub gamma: f64,
    #[cfg_attr(feature = "serde", serde(rename = "Omega"))]
    pub omega: f64,
    pub hbar: f64,
    pub norm_const: f64,
    pub q2: f64,
    pub p2: f64,
    pub q4: f64,
    pub q2q2_same: f64,
    pub q2q2_cross: f64,
    pub q2q2_mixed: f64,
    pub qq_cross: f64,
    pub v_expect: f64,
}

pub fn moment_table(f: &FiducialSpec) -> Result<MomentTable> {
    let q4 = moment_q4(f)?;
    let cross = moment_q2q2_cross(f)?;
    let mixed = moment_q2q2_mixed(f)?;
    Ok(MomentTable {
        gamma: f.gamma(),
        omega: f.omega(),
        hbar: f.hbar(),
        norm_const: norm_constant(f)?,
        q2: moment_q2(f),
        p2: moment_p2(f),
        q4,
        q2q2_same: q4 / 3.0,
        q2q2_cross: cross,
        q2q2_mixed: mixed,
        qq_cross: moment_qq_cross(f)?,
        v_expect: 16.0 / 3.0 * q4 + 4.0 * (cross + mixed),
    })
}

impl MomentTable {
    pub fn spec(&self) -> Result<FiducialSpec> {
        FiducialSpec::new(self.gamma, self.omega, self.hbar)
    }

    /// Same γ and Ω at a different ħ. Each moment is rescaled by its ħ power,
    /// which is exact because the reduced moments depend on γ only.
    pub fn rescaled_hbar(&self, hbar: f64) -> MomentTable {
        let r = hbar / self.hbar;
        let lam_ratio = 1.0 / r; // λ ∝ 1/ħ
        MomentTable {
            hbar,
            norm_const: self.norm_const * powf_pos(lam_ratio, 0.5 * (self.gamma + 2.0)),
            q2: self.q2 * r,
            p2: self.p2 * r,
            q4: self.q4 * r * r,
            q2q2_same: self.q2q2_same * r * r,
            q2q2_cross: self.q2q2_cross * r * r,
            q2q2_mixed: self.q2q2_mixed * r * r,
            qq_cross: self.qq_cross * r,
            v_expect: self.v_expect * r * r,
            ..*self
        }
    }
}

fn powf_pos(x: f64, y: f64) -> f64 {
    exp(y * ln(x))
}

/// Closed forms for γ = 0 (independent Gaussians) in ħ/Ω units.
pub mod gaussian {
    pub const Q2: f64 = 0.5;
    pub const P2: f64 = 0.5;
    pub const Q4: f64 = 0.75;
    pub const Q2Q2: f64 = 0.25;
    pub const QQ: f64 = 0.0;
}

/// Closed forms for γ = 1 in ħ/Ω units.
pub mod fermion {
    pub const Q2: f64 = 0.75;
    pub const P2: f64 = 0.75;
    pub const Q4: f64 = 1.5;
    pub const Q2Q2: f64 = 0.5;
    pub const QQ: f64 = -0.25;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::math::{rel_err, sqrt};

    fn unit(g: f64) -> FiducialSpec {
        FiducialSpec::new(g, 1.0, 1.0).unwrap()
    }

    #[test]
    fn gamma_validation() {
        assert!(StatisticsParam::new(2.0).is_err());
        assert!(StatisticsParam::new(-0.1).is_err());
        assert!(StatisticsParam::new(f64::NAN).is_err());
        assert_eq!(
            StatisticsParam::new(1.0).unwrap().kind(),
            Statistics::Fermion
        );
        assert_eq!(StatisticsParam::new(0.0).unwrap().kind(), Statistics::Boson);
        assert!(rel_err(StatisticsParam::new(0.5).unwrap().alpha(), PI / 2.0) < 1e-16);
    }

    #[test]
    fn boson_table() {
        let t = moment_table(&unit(0.0)).unwrap();
        assert!(rel_err(t.norm_const, 1.0 / PI) < 1e-14);
        assert!(rel_err(t.q2, 0.5) < 1e-15);
        assert!(rel_err(t.p2, 0.5) < 1e-15);
        assert!(rel_err(t.q4, 0.75) < 1e-14);
        assert!(rel_err(t.q2q2_cross, 0.25) < 1e-14);
        assert!(rel_err(t.q2q2_mixed, 0.25) < 1e-14);
        assert_eq!(t.qq_cross, 0.0);
        assert!(rel_err(t.v_expect, 6.0) < 1e-14);
    }

    #[test]
    fn fermion_table() {
        let t = moment_table(&unit(1.0)).unwrap();
        assert!(rel_err(t.norm_const, 1.0 / (PI * sqrt(2.0))) < 1e-14);
        assert!(rel_err(t.q2, 0.75) < 1e-15);
        assert!(rel_err(t.p2, 0.75) < 1e-15);
        assert!(rel_err(t.q4, 1.5) < 1e-14);
        assert!(rel_err(t.q2q2_cross, 0.5) < 1e-14);
        assert!(rel_err(t.qq_cross, -0.25) < 1e-14);
        assert!(rel_err(t.v_expect, 12.0) < 1e-14);
    }

    #[test]
    fn polynomial_reductions() {
        for g in [0.1, 0.25, 0.5, 0.75, 1.25, 1.5, 1.9] {
            let f = unit(g);
            let q4 = 3.0 * (g * g + 7.0 * g + 8.0) / 32.0;
            assert!(rel_err(moment_q4(&f).unwrap(), q4) < 1e-13, "q4 {g}");
            let xx = (3.0 * g * g + 5.0 * g + 8.0) / 32.0;
            assert!(
                rel_err(moment_q2q2_cross(&f).unwrap(), xx) < 1e-13,
                "xx {g}"
            );
            let xy = (g * g + 7.0 * g + 8.0) / 32.0;
            assert!(
                rel_err(moment_q2q2_mixed(&f).unwrap(), xy) < 1e-13,
                "xy {g}"
            );
            assert!(
                rel_err(moment_qq_cross(&f).unwrap(), -g / 4.0) < 1e-13,
                "qq {g}"
            );
        }
    }

    #[test]
    fn anyon_half_frozen() {
        // γ = 1/2 values confirmed by the quadrature and Monte Carlo oracles.
        let t = moment_table(&unit(0.5)).unwrap();
        assert!(rel_err(t.q2, 0.625) < 1e-15);
        assert!(rel_err(t.p2, 0.625) < 1e-15);
        assert!(rel_err(t.q4, 1.101_562_5) < 1e-13);
        assert!(rel_err(t.q2q2_cross, 0.351_562_5) < 1e-13);
        assert!(rel_err(t.q2q2_mixed, 0.367_187_5) < 1e-13);
        assert!(rel_err(t.qq_cross, -0.125) < 1e-13);
        assert!(rel_err(t.v_expect, 8.75) < 1e-13);
    }

    #[test]
    fn rescaling_matches_direct_evaluation() {
        let a = moment_table(&FiducialSpec::new(0.7, 1.3, 0.4).unwrap()).unwrap();
        let b = moment_table(&FiducialSpec::new(0.7, 1.3, 2.2).unwrap()).unwrap();
        let r = a.rescaled_hbar(2.2);
        for (x, y) in [
            (r.norm_const, b.norm_const),
            (r.q2, b.q2),
            (r.p2, b.p2),
            (r.q4, b.q4),
            (r.q2q2_cross, b.q2q2_cross),
            (r.qq_cross, b.qq_cross),
            (r.v_expect, b.v_expect),
        ] {
            assert!(rel_err(x, y) < 1e-13);
        }
    }
}
