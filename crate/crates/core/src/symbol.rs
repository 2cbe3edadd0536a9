//! Enhanced classical Hamiltonians: ⟨p,q|𝓗|p,q⟩ for the two-particle quartic
//! oscillator, assembled by exact polynomial expansion over a [`MomentTable`].

use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::math::{abs, powi};
use crate::moments::{moment_table, FiducialSpec, MomentTable, StatisticsParam};
use crate::poly::{degree, partial_expectation, Poly};

/// (m, ϖ, g, ħ, Ω).
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct PhysicalParams {
    pub m: f64,
    pub varpi: f64,
    pub g: f64,
    pub hbar: f64,
    #[cfg_attr(feature = "serde", serde(rename = "Omega"))]
    pub omega: f64,
}

impl Default for PhysicalParams {
    fn default() -> Self {
        PhysicalParams {
            m: 1.0,
            varpi: 1.0,
            g: 1.0,
            hbar: 1.0,
            omega: 1.0,
        }
    }
}

impl PhysicalParams {
    pub fn new(m: f64, varpi: f64, g: f64, hbar: f64, omega: f64) -> Result<Self> {
        let p = PhysicalParams {
            m,
            varpi,
            g,
            hbar,
            omega,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        let finite = [self.m, self.varpi, self.g, self.hbar, self.omega]
            .iter()
            .all(|v| v.is_finite());
        if !finite {
            return Err(Error::InvalidParameter {
                name: "physical parameters",
                reason: "must be finite",
            });
        }
        if !(self.m > 0.0) {
            return Err(Error::InvalidParameter {
                name: "m",
                reason: "must be positive",
            });
        }
        if self.varpi < 0.0 {
            return Err(Error::InvalidParameter {
                name: "varpi",
                reason: "must be non-negative",
            });
        }
        if self.g < 0.0 {
            return Err(Error::InvalidParameter {
                name: "g",
                reason: "must be non-negative",
            });
        }
        if self.hbar < 0.0 {
            return Err(Error::InvalidParameter {
                name: "hbar",
                reason: "must be non-negative",
            });
        }
        if !(self.omega > 0.0) {
            return Err(Error::InvalidParameter {
                name: "Omega",
                reason: "must be positive",
            });
        }
        Ok(())
    }
}

/// Two particles in the plane: (p₁, p₂, q₁, q₂).
#[derive(Debug, Clone, Copy, PartialEq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct PhaseSpacePoint {
    pub p1: [f64; 2],
    pub p2: [f64; 2],
    pub q1: [f64; 2],
    pub q2: [f64; 2],
}

impl PhaseSpacePoint {
    /// Components in the order px1, py1, px2, py2, qx1, qy1, qx2, qy2.
    pub fn to_array(&self) -> [f64; 8] {
        [
            self.p1[0], self.p1[1], self.p2[0], self.p2[1], self.q1[0], self.q1[1], self.q2[0],
            self.q2[1],
        ]
    }

    pub fn from_array(a: [f64; 8]) -> Self {
        PhaseSpacePoint {
            p1: [a[0], a[1]],
            p2: [a[2], a[3]],
            q1: [a[4], a[5]],
            q2: [a[6], a[7]],
        }
    }

    pub fn is_finite(&self) -> bool {
        self.to_array().iter().all(|v| v.is_finite())
    }

    /// Rotate every planar vector by θ.
    pub fn rotated(&self, theta: f64) -> Self {
        let (s, c) = crate::math::sin_cos(theta);
        let r = |v: [f64; 2]| [c * v[0] - s * v[1], s * v[0] + c * v[1]];
        PhaseSpacePoint {
            p1: r(self.p1),
            p2: r(self.p2),
            q1: r(self.q1),
            q2: r(self.q2),
        }
    }

    /// Exchange the particle labels.
    pub fn swapped(&self) -> Self {
        PhaseSpacePoint {
            p1: self.p2,
            p2: self.p1,
            q1: self.q2,
            q2: self.q1,
        }
    }

    /// Σ_σ q_σ × p_σ.
    pub fn angular_momentum(&self) -> f64 {
        self.q1[0] * self.p1[1] - self.q1[1] * self.p1[0] + self.q2[0] * self.p2[1]
            - self.q2[1] * self.p2[0]
    }
}

/// A coefficient c·ħ^k stored as its ħ-free part c.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Tagged {
    pub hbar_power: u32,
    pub reduced: f64,
}

impl Tagged {
    pub fn at(&self, hbar: f64) -> f64 {
        if self.hbar_power == 0 {
            self.reduced
        } else {
            self.reduced * powi(hbar, self.hbar_power as i32)
        }
    }
}

/// The ħ-dependent part of the enhanced Hamiltonian.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CoefficientSet {
    /// Σ_σ⟨P_σ²⟩/2m.
    pub c_kin_const: Tagged,
    /// (mϖ²/2) Σ_σ⟨Q_σ²⟩.
    pub c_harm_const: Tagged,
    /// Coefficient of Σ_σ q_σ².
    pub c_q2: Tagged,
    /// Coefficient of q₁·q₂.
    pub c_q1q2: Tagged,
    /// g⟨V⟩.
    pub c_const_quartic: Tagged,
}

/// One line of the coefficient dump.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CoefficientRecord {
    pub term: String,
    pub hbar_power: u32,
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct EnhancedHamiltonian {
    pub params: PhysicalParams,
    pub stats: StatisticsParam,
    /// The table the coefficients were reduced from.
    pub moments: MomentTable,
    pub coeffs: CoefficientSet,
}

/// Moments divided by their natural ħ power.
#[derive(Debug, Clone, Copy)]
struct Reduced {
    q2: f64,
    p2: f64,
    q4: f64,
    same: f64,
    cross: f64,
    mixed: f64,
    qq: f64,
}

impl Reduced {
    fn from_table(t: &MomentTable) -> Self {
        let h = t.hbar;
        Reduced {
            q2: t.q2 / h,
            p2: t.p2 / h,
            q4: t.q4 / (h * h),
            same: t.q2q2_same / (h * h),
            cross: t.q2q2_cross / (h * h),
            mixed: t.q2q2_mixed / (h * h),
            qq: t.qq_cross / h,
        }
    }

    /// ⟨Q_{x₁}^a Q_{y₁}^b Q_{x₂}^c Q_{y₂}^d⟩ / ħ^{deg/2}.
    ///
    /// Odd total degree vanishes by parity, odd x- or y-degree by the
    /// reflections y → −y and x → −x; the rest follow from rotation and
    /// exchange symmetry.
    fn position(&self, e: &[u8]) -> Option<(f64, u32)> {
        let deg = degree(e);
        let k = deg / 2;
        if deg == 0 {
            return Some((1.0, 0));
        }
        if deg % 2 == 1 || (e[0] + e[2]) % 2 == 1 || (e[1] + e[3]) % 2 == 1 {
            return Some((0.0, k));
        }
        let v = match (deg, e) {
            (2, [2, 0, 0, 0] | [0, 2, 0, 0] | [0, 0, 2, 0] | [0, 0, 0, 2]) => self.q2,
            (2, [1, 0, 1, 0] | [0, 1, 0, 1]) => self.qq,
            (4, [4, 0, 0, 0] | [0, 4, 0, 0] | [0, 0, 4, 0] | [0, 0, 0, 4]) => self.q4,
            (4, [2, 2, 0, 0] | [0, 0, 2, 2]) => self.same,
            (4, [2, 0, 2, 0] | [0, 2, 0, 2]) => self.cross,
            (4, [2, 0, 0, 2] | [0, 2, 2, 0]) => self.mixed,
            // Isotropy: ⟨x₁y₁x₂y₂⟩ = (⟨x₁²x₂²⟩ − ⟨x₁²y₂²⟩)/2.
            (4, [1, 1, 1, 1]) => 0.5 * (self.cross - self.mixed),
            _ => return None,
        };
        Some((v, k))
    }

    /// Momentum moments needed by Σ(p + P)²: only ⟨P_i⟩ = 0 and ⟨P_i²⟩.
    fn momentum(&self, e: &[u8]) -> Option<(f64, u32)> {
        match degree(e) {
            0 => Some((1.0, 0)),
            1 => Some((0.0, 0)),
            2 if e.contains(&2) => Some((self.p2, 1)),
            _ => None,
        }
    }
}

/// Σ_i (x_i + X_i)² over four classical variables (0..4) and four operators (4..8).
fn shifted_square_sum() -> Poly<8> {
    let mut s = Poly::zero();
    for i in 0..4 {
        s = s.add(&Poly::var(i).add(&Poly::var(i + 4)).square());
    }
    s
}

type Collected = alloc::collections::BTreeMap<(Vec<u8>, u32), f64>;

fn unsupported(what: &'static str) -> Error {
    Error::Inconsistent {
        what,
        lhs: f64::NAN,
        rhs: f64::NAN,
    }
}

fn take(map: &mut Collected, mono: [u8; 4], k: u32) -> f64 {
    map.remove(&(mono.to_vec(), k)).unwrap_or(0.0)
}

fn ensure_equal(what: &'static str, vals: &[f64]) -> Result<f64> {
    let first = vals[0];
    for &v in &vals[1..] {
        if abs(v - first) > 1e-12 * abs(first).max(1e-300) {
            return Err(Error::Inconsistent {
                what,
                lhs: first,
                rhs: v,
            });
        }
    }
    Ok(first)
}

fn ensure_empty(what: &'static str, map: &Collected) -> Result<()> {
    match map.iter().find(|(_, v)| abs(**v) > 1e-14) {
        Some((_, v)) => Err(Error::Inconsistent {
            what,
            lhs: *v,
            rhs: 0.0,
        }),
        None => Ok(()),
    }
}

const SQUARES: [[u8; 4]; 4] = [[2, 0, 0, 0], [0, 2, 0, 0], [0, 0, 2, 0], [0, 0, 0, 2]];

/// Expand and collect the ħ-tagged coefficients.
pub fn assemble_enhanced(
    params: PhysicalParams,
    table: &MomentTable,
) -> Result<EnhancedHamiltonian> {
    params.validate()?;
    let omega_ok = abs(table.omega - params.omega) <= 1e-12 * params.omega;
    let hbar_ok = params.hbar == 0.0 || abs(table.hbar - params.hbar) <= 1e-12 * params.hbar;
    if !omega_ok {
        return Err(Error::Inconsistent {
            what: "moment table Omega vs params",
            lhs: table.omega,
            rhs: params.omega,
        });
    }
    if !hbar_ok {
        return Err(Error::Inconsistent {
            what: "moment table hbar vs params",
            lhs: table.hbar,
            rhs: params.hbar,
        });
    }
    let red = Reduced::from_table(table);
    let s = shifted_square_sum();

    // Kinetic: Σ(p + P)².
    let mut kin = partial_expectation(&s, 4, |e| red.momentum(e))
        .ok_or_else(|| unsupported("kinetic expansion"))?;
    let kin_const = take(&mut kin, [0; 4], 1);
    let kin_sq: Vec<f64> = SQUARES.iter().map(|m| take(&mut kin, *m, 0)).collect();
    ensure_equal("kinetic p² coefficients", &kin_sq)?;
    ensure_empty("kinetic expansion", &kin)?;

    // Harmonic: Σ(q + Q)².
    let mut harm = partial_expectation(&s, 4, |e| red.position(e))
        .ok_or_else(|| unsupported("harmonic expansion"))?;
    let harm_const = take(&mut harm, [0; 4], 1);
    let harm_sq: Vec<f64> = SQUARES.iter().map(|m| take(&mut harm, *m, 0)).collect();
    ensure_equal("harmonic q² coefficients", &harm_sq)?;
    // ⟨Q_{x₁}Q_{x₂}⟩ enters only through the quartic.
    ensure_empty("harmonic expansion", &harm)?;

    // Quartic: (Σ(q + Q)²)².
    let mut pot = partial_expectation(&s.square(), 4, |e| red.position(e))
        .ok_or_else(|| unsupported("quartic expansion"))?;
    let quartic_const = take(&mut pot, [0; 4], 2);
    let q2_coef: Vec<f64> = SQUARES.iter().map(|m| take(&mut pot, *m, 1)).collect();
    let c_q2 = ensure_equal("quartic Σq² coefficients", &q2_coef)?;
    let dot = [
        take(&mut pot, [1, 0, 1, 0], 1),
        take(&mut pot, [0, 1, 0, 1], 1),
    ];
    let c_dot = ensure_equal("quartic q₁·q₂ coefficients", &dot)?;
    // Classical part must be exactly (Σq²)².
    for i in 0..4 {
        for j in i..4 {
            let mut m = [0u8; 4];
            m[i] += 2;
            m[j] += 2;
            let want = if i == j { 1.0 } else { 2.0 };
            let got = take(&mut pot, m, 0);
            if abs(got - want) > 1e-12 {
                return Err(Error::Inconsistent {
                    what: "classical quartic structure",
                    lhs: got,
                    rhs: want,
                });
            }
        }
    }
    ensure_empty("quartic expansion", &pot)?;

    let p = params;
    let coeffs = CoefficientSet {
        c_kin_const: Tagged {
            hbar_power: 1,
            reduced: kin_const / (2.0 * p.m),
        },
        c_harm_const: Tagged {
            hbar_power: 1,
            reduced: 0.5 * p.m * p.varpi * p.varpi * harm_const,
        },
        c_q2: Tagged {
            hbar_power: 1,
            reduced: p.g * c_q2,
        },
        c_q1q2: Tagged {
            hbar_power: 1,
            reduced: p.g * c_dot,
        },
        c_const_quartic: Tagged {
            hbar_power: 2,
            reduced: p.g * quartic_const,
        },
    };
    Ok(EnhancedHamiltonian {
        params,
        stats: StatisticsParam::new(table.gamma)?,
        moments: *table,
        coeffs,
    })
}

impl EnhancedHamiltonian {
    /// Build the moment table for γ and assemble. With ħ = 0 the table is
    /// evaluated at ħ = 1; only its reduced (ħ-free) values are used.
    pub fn for_gamma(params: PhysicalParams, gamma: f64) -> Result<Self> {
        params.validate()?;
        let h = if params.hbar > 0.0 { params.hbar } else { 1.0 };
        let table = moment_table(&FiducialSpec::new(gamma, params.omega, h)?)?;
        assemble_enhanced(params, &table)
    }

    /// Same coefficients, different ħ: the tags make the ħ → 0 limit exact.
    pub fn with_hbar(&self, hbar: f64) -> Self {
        let mut h = self.clone();
        h.params.hbar = hbar;
        h
    }

    pub fn gamma(&self) -> f64 {
        self.stats.gamma()
    }

    /// Classical part H_c.
    pub fn classical(&self, x: &PhaseSpacePoint) -> f64 {
        let p = &self.params;
        let pp = sq(x.p1) + sq(x.p2);
        let qq = sq(x.q1) + sq(x.q2);
        pp / (2.0 * p.m) + 0.5 * p.m * p.varpi * p.varpi * qq + p.g * qq * qq
    }

    /// ħ-tagged part.
    pub fn quantum(&self, x: &PhaseSpacePoint) -> f64 {
        let h = self.params.hbar;
        let c = &self.coeffs;
        let qq = sq(x.q1) + sq(x.q2);
        let dot = x.q1[0] * x.q2[0] + x.q1[1] * x.q2[1];
        c.c_kin_const.at(h)
            + c.c_harm_const.at(h)
            + c.c_q2.at(h) * qq
            + c.c_q1q2.at(h) * dot
            + c.c_const_quartic.at(h)
    }

    pub fn eval(&self, x: &PhaseSpacePoint) -> f64 {
        self.classical(x) + self.quantum(x)
    }

    /// Coefficient dump, one record per monomial of the polynomial.
    pub fn coefficient_records(&self) -> Vec<CoefficientRecord> {
        let p = &self.params;
        let h = p.hbar;
        let c = &self.coeffs;
        let rec = |term: &str, k: u32, v: f64| CoefficientRecord {
            term: String::from(term),
            hbar_power: k,
            value: v,
        };
        alloc::vec![
            rec("|p1|^2+|p2|^2", 0, 1.0 / (2.0 * p.m)),
            rec("|q1|^2+|q2|^2", 0, 0.5 * p.m * p.varpi * p.varpi),
            rec("(|q1|^2+|q2|^2)^2", 0, p.g),
            rec("1 [kinetic]", c.c_kin_const.hbar_power, c.c_kin_const.at(h)),
            rec(
                "1 [harmonic]",
                c.c_harm_const.hbar_power,
                c.c_harm_const.at(h)
            ),
            rec("|q1|^2+|q2|^2 [quartic]", c.c_q2.hbar_power, c.c_q2.at(h)),
            rec("q1.q2 [quartic]", c.c_q1q2.hbar_power, c.c_q1q2.at(h)),
            rec(
                "1 [quartic]",
                c.c_const_quartic.hbar_power,
                c.c_const_quartic.at(h)
            ),
        ]
    }

    /// The full symbol as a polynomial in (px1, py1, px2, py2, qx1, qy1, qx2, qy2),
    /// rebuilt from the coefficient set. Used to cross-check evaluation.
    pub fn polynomial(&self) -> Poly<8> {
        let p = &self.params;
        let h = p.hbar;
        let c = &self.coeffs;
        let mut out =
            Poly::constant(c.c_kin_const.at(h) + c.c_harm_const.at(h) + c.c_const_quartic.at(h));
        let mut psq = Poly::zero();
        let mut qsq = Poly::zero();
        for i in 0..4 {
            psq = psq.add(&Poly::var(i).square());
            qsq = qsq.add(&Poly::var(i + 4).square());
        }
        let dot = Poly::var(4)
            .mul(&Poly::var(6))
            .add(&Poly::var(5).mul(&Poly::var(7)));
        out = out.add(&psq.scale(1.0 / (2.0 * p.m)));
        out = out.add(&qsq.scale(0.5 * p.m * p.varpi * p.varpi + c.c_q2.at(h)));
        out = out.add(&qsq.square().scale(p.g));
        out.add(&dot.scale(c.c_q1q2.at(h)))
    }
}

fn sq(v: [f64; 2]) -> f64 {
    v[0] * v[0] + v[1] * v[1]
}

/// H(p, q) including every ħ-tagged term.
pub fn eval_hamiltonian(h: &EnhancedHamiltonian, x: &PhaseSpacePoint) -> f64 {
    h.eval(x)
}

/// Only the ħ⁰ terms; identical for every γ.
pub fn classical_limit(h: &EnhancedHamiltonian, x: &PhaseSpacePoint) -> f64 {
    h.classical(x)
}

/// Additive constant contributed by `n_spectators` decoupled copies sitting in
/// their ground state.
pub fn spectator_shift(_h: &EnhancedHamiltonian, n_spectators: u32, ground_energy: f64) -> f64 {
    n_spectators as f64 * ground_energy
}

/// ⟨(P+p)² + (Q+q)² + (Q+q)⁴⟩ for a single degree of freedom with vanishing
/// odd moments.
pub fn symbol_1dof_quartic(q2_fid: f64, p2_fid: f64, q4_fid: f64, p: f64, q: f64) -> f64 {
    let q2 = q * q;
    p * p + q2 + q2 * q2 + 6.0 * q2 * q2_fid + (p2_fid + q2_fid + q4_fid)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::math::rel_err;

    fn unit_params(hbar: f64) -> PhysicalParams {
        PhysicalParams {
            hbar,
            ..PhysicalParams::default()
        }
    }

    #[test]
    fn boson_coefficients() {
        let h = EnhancedHamiltonian::for_gamma(unit_params(1.0), 0.0).unwrap();
        let c = h.coeffs;
        assert!(rel_err(c.c_kin_const.at(1.0), 1.0) < 1e-14);
        assert!(rel_err(c.c_harm_const.at(1.0), 1.0) < 1e-14);
        assert!(rel_err(c.c_q2.at(1.0), 6.0) < 1e-14);
        assert_eq!(c.c_q1q2.at(1.0), 0.0);
        assert!(rel_err(c.c_const_quartic.at(1.0), 6.0) < 1e-14);
    }

    #[test]
    fn fermion_coefficients() {
        let h = EnhancedHamiltonian::for_gamma(unit_params(1.0), 1.0).unwrap();
        let c = h.coeffs;
        assert!(rel_err(c.c_kin_const.at(1.0) + c.c_harm_const.at(1.0), 3.0) < 1e-14);
        assert!(rel_err(c.c_q2.at(1.0), 9.0) < 1e-14);
        assert!(rel_err(c.c_q1q2.at(1.0), -2.0) < 1e-14);
        assert!(rel_err(c.c_const_quartic.at(1.0), 12.0) < 1e-14);
    }

    #[test]
    fn quartic_constant_is_g_times_v() {
        for g in [0.0, 0.3, 0.5, 1.2, 1.7] {
            let p = PhysicalParams {
                g: 0.8,
                hbar: 0.6,
                omega: 1.4,
                ..PhysicalParams::default()
            };
            let h = EnhancedHamiltonian::for_gamma(p, g).unwrap();
            let v = h.coeffs.c_const_quartic.at(p.hbar) / p.g;
            assert!(rel_err(v, h.moments.v_expect) < 1e-13);
        }
    }

    #[test]
    fn origin_sees_only_constants() {
        let h = EnhancedHamiltonian::for_gamma(unit_params(1.0), 0.5).unwrap();
        let c = h.coeffs;
        let want = c.c_kin_const.at(1.0) + c.c_harm_const.at(1.0) + c.c_const_quartic.at(1.0);
        assert!(rel_err(h.eval(&PhaseSpacePoint::default()), want) < 1e-15);
        assert_eq!(h.with_hbar(0.0).eval(&PhaseSpacePoint::default()), 0.0);
    }

    #[test]
    fn boson_single_particle_point() {
        let h = EnhancedHamiltonian::for_gamma(unit_params(1.0), 0.0).unwrap();
        let x = PhaseSpacePoint {
            q1: [1.0, 0.0],
            ..Default::default()
        };
        assert!(rel_err(h.classical(&x), 1.5) < 1e-15);
        // ħ-terms: 1 + 1 + 6·1 + 6.
        assert!(rel_err(h.eval(&x), 1.5 + 14.0) < 1e-14);
        assert!(rel_err(h.polynomial().eval(&x.to_array()), h.eval(&x)) < 1e-14);
    }

    #[test]
    fn classical_limit_examples() {
        let p = PhysicalParams {
            m: 2.0,
            varpi: 1.0,
            g: 0.5,
            hbar: 1.0,
            omega: 1.0,
        };
        let h = EnhancedHamiltonian::for_gamma(p, 0.3).unwrap();
        let x = PhaseSpacePoint {
            q1: [1.0, 1.0],
            ..Default::default()
        };
        assert!(rel_err(classical_limit(&h, &x), 4.0) < 1e-15);
        let x = PhaseSpacePoint {
            p1: [1.0, 0.0],
            ..Default::default()
        };
        assert!(rel_err(classical_limit(&h, &x), 0.25) < 1e-15);
    }

    #[test]
    fn table_mismatch_is_rejected() {
        let t = moment_table(&FiducialSpec::new(0.5, 1.0, 1.0).unwrap()).unwrap();
        assert!(assemble_enhanced(unit_params(2.0), &t).is_err());
        let p = PhysicalParams {
            omega: 3.0,
            ..unit_params(1.0)
        };
        assert!(assemble_enhanced(p, &t).is_err());
        assert!(assemble_enhanced(unit_params(0.0), &t).is_ok());
    }

    #[test]
    fn one_dof_examples() {
        assert!(rel_err(symbol_1dof_quartic(0.5, 0.5, 0.75, 0.0, 0.0), 1.75) < 1e-15);
        assert!(rel_err(symbol_1dof_quartic(0.5, 0.5, 0.75, 0.0, 1.0), 6.75) < 1e-15);
        assert_eq!(
            symbol_1dof_quartic(0.0, 0.0, 0.0, 1.5, -0.5),
            2.25 + 0.25 + 0.0625
        );
    }

    #[test]
    fn spectators() {
        let h = EnhancedHamiltonian::for_gamma(unit_params(1.0), 0.0).unwrap();
        assert_eq!(spectator_shift(&h, 3, 2.5), 7.5);
        assert_eq!(spectator_shift(&h, 5, 0.0), 0.0);
        assert_eq!(spectator_shift(&h, 0, 9.0), 0.0);
    }
}
