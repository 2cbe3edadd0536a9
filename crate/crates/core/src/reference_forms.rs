//! Closed forms as originally printed, kept as regression fixtures.
//!
//! Several of them disagree with direct integration of the defining
//! integrals. [`discrepancy_report`] lines each one up against the assembled
//! symbol and records whether the two are expected to agree, so a change in
//! either side shows up as a flipped row rather than a silent drift.

use alloc::string::String;
use alloc::vec::Vec;

use crate::error::Result;
use crate::math::{abs, rel_err};
use crate::moments::{moment_table, FiducialSpec};
use crate::specfun::{hyp2f1_unit, HypParams};
use crate::symbol::{EnhancedHamiltonian, PhysicalParams};

fn f(a: f64, b: f64, c: f64) -> Result<f64> {
    hyp2f1_unit(HypParams::new(a, b, c)?)
}

fn f0(g: f64) -> Result<f64> {
    f(0.5 * (1.0 - g), -0.5 * g, 1.5)
}

fn f5(g: f64) -> Result<f64> {
    f(0.5 * (1.0 - g), -0.5 * g, 2.5)
}

fn f7(g: f64) -> Result<f64> {
    f(0.5 * (3.0 - g), 0.5 * (2.0 - g), 3.5)
}

/// γ·₂F₁((2−γ)/2, (1−γ)/2; 3/2; 1) / ₂F₁((1−γ)/2, −γ/2; 3/2; 1).
/// The ₂F₁ in the numerator diverges at γ = 0; the product is taken as 0 there.
fn printed_kinetic_ratio(g: f64) -> Result<f64> {
    if g == 0.0 {
        return Ok(0.0);
    }
    Ok(g * f(0.5 * (2.0 - g), 0.5 * (1.0 - g), 1.5)? / f0(g)?)
}

/// Printed ⟨P_{x₁}²⟩ = (Ωħ/2)[1 + γF₁/F₀ − γ/2]. Equals 3ħΩ/4 for every γ in (0, 2).
pub fn p2_printed(s: &FiducialSpec) -> Result<f64> {
    let g = s.gamma();
    Ok(0.5 * s.omega() * s.hbar() * (1.0 + printed_kinetic_ratio(g)? - 0.5 * g))
}

/// Printed ⟨Q_{x₁}²Q_{x₂}²⟩ = ħ²(γ+3)(γ+2)/(24Ω²)·F₅/F₀; drops the γ(γ−1) term.
pub fn q2q2_cross_printed(s: &FiducialSpec) -> Result<f64> {
    let g = s.gamma();
    let l = s.hbar() / s.omega();
    Ok(l * l * (g + 3.0) * (g + 2.0) / 24.0 * f5(g)? / f0(g)?)
}

/// Printed ⟨V⟩ = (16/3)⟨Q⁴⟩ + 4⟨Q_{x₁}²Q_{x₂}²⟩ with the printed cross moment.
pub fn v_printed(s: &FiducialSpec) -> Result<f64> {
    Ok(16.0 / 3.0 * crate::moments::moment_q4(s)? + 4.0 * q2q2_cross_printed(s)?)
}

/// Printed ⟨V⟩ in its single-fraction hypergeometric form.
pub fn v_printed_hypergeometric(s: &FiducialSpec) -> Result<f64> {
    let g = s.gamma();
    let l = s.hbar() / s.omega();
    Ok(l * l * (g + 3.0) * (g + 2.0) / (6.0 * f0(g)?)
        * (5.0 * f5(g)? + 0.2 * g * (g - 1.0) * f7(g)?))
}

/// Conjectured general-γ ⟨Q_{x₁}Q_{x₂}⟩ = −ħγ/(8Ω), inferred from the printed
/// general-γ q₁·q₂ coefficient. Half the value obtained by direct integration.
pub fn qq_cross_conjectured(s: &FiducialSpec) -> Result<f64> {
    let g = s.gamma();
    let num = f(-0.5 * (1.0 + g), -0.5 * g, 1.5)?;
    Ok(-s.hbar() * (g + 2.0) / (8.0 * s.omega()) * (num / f0(g)? - 1.0))
}

/// Coefficients of one printed Hamiltonian, all evaluated at the params' ħ.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct PrintedCoefficients {
    pub kin_const: f64,
    pub harm_const: f64,
    pub c_q2: f64,
    pub c_q1q2: f64,
    pub quartic_const: f64,
    /// Coefficient of q₁²q₂² in the ħ⁰ part.
    pub classical_q1sq_q2sq: f64,
}

/// Printed boson Hamiltonian.
pub fn boson_printed(p: &PhysicalParams) -> PrintedCoefficients {
    let h = p.hbar;
    PrintedCoefficients {
        kin_const: h * p.omega / p.m,
        harm_const: h * p.m * p.varpi * p.varpi / p.omega,
        c_q2: h * 3.0 * p.g / p.omega,
        c_q1q2: 0.0,
        quartic_const: h * h * 3.0 * p.g / (p.omega * p.omega),
        classical_q1sq_q2sq: 0.0,
    }
}

/// Printed fermion Hamiltonian.
pub fn fermion_printed(p: &PhysicalParams) -> PrintedCoefficients {
    let h = p.hbar;
    PrintedCoefficients {
        kin_const: h * 1.5 * p.omega / p.m,
        harm_const: h * 1.5 * p.m * p.varpi * p.varpi / p.omega,
        c_q2: 6.0 * h * 3.0 * p.g / p.omega,
        c_q1q2: 0.0,
        quartic_const: 2.0 * h * h * 3.0 * p.g / (p.omega * p.omega),
        classical_q1sq_q2sq: 0.0,
    }
}

/// Printed general-γ Hamiltonian.
pub fn general_printed(p: &PhysicalParams, gamma: f64) -> Result<PrintedCoefficients> {
    let h = p.hbar;
    let g = gamma;
    let kin = h * p.omega / p.m * (1.0 + printed_kinetic_ratio(g)? - 0.5 * g);
    let ratio = f(-0.5 * (1.0 + g), -0.5 * g, 1.5)? / f0(g)?;
    let l = h / p.omega;
    Ok(PrintedCoefficients {
        kin_const: kin,
        harm_const: h * p.m * p.varpi * p.varpi / (2.0 * p.omega) * (2.0 + g),
        c_q2: h * p.g * (g + 2.0) / p.omega * 2.5,
        c_q1q2: -h * p.g * (g + 2.0) / p.omega * (ratio - 1.0),
        // No factor g in front of the printed constant.
        quartic_const: l * l * (g + 3.0) * (g + 2.0) / (6.0 * f0(g)?)
            * (5.0 * f5(g)? + 0.2 * g * (g - 1.0) * f7(g)?),
        classical_q1sq_q2sq: 0.0,
    })
}

/// One fixture comparison.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Discrepancy {
    pub source: String,
    pub term: String,
    pub gamma: f64,
    pub assembled: f64,
    pub printed: f64,
    pub rel_diff: f64,
    pub agree: bool,
    /// Whether the printed form is derived consistently for this term and γ,
    /// i.e. whether agreement is the expected outcome.
    pub expected_agreement: bool,
    pub note: String,
}

/// Relative tolerance for counting a fixture row as agreeing.
pub const AGREEMENT_TOL: f64 = 1e-10;

fn row(
    source: &str,
    term: &str,
    gamma: f64,
    assembled: f64,
    printed: f64,
    expected: bool,
    note: &str,
) -> Discrepancy {
    let d = if assembled == 0.0 && printed == 0.0 {
        0.0
    } else {
        rel_err(printed, assembled)
    };
    let agree = d <= AGREEMENT_TOL || abs(printed - assembled) <= 1e-300;
    Discrepancy {
        source: String::from(source),
        term: String::from(term),
        gamma,
        assembled,
        printed,
        rel_diff: d,
        agree,
        expected_agreement: expected,
        note: String::from(note),
    }
}

fn is_boson(g: f64) -> bool {
    g == 0.0
}

fn is_fermion(g: f64) -> bool {
    g == 1.0
}

/// Compare every printed fixture applicable at γ against the assembled symbol.
/// Requires ħ > 0 so that the ħ-tagged terms are visible.
pub fn discrepancy_report(params: &PhysicalParams, gamma: f64) -> Result<Vec<Discrepancy>> {
    let h = EnhancedHamiltonian::for_gamma(*params, gamma)?;
    let hb = params.hbar;
    let c = &h.coeffs;
    let spec = FiducialSpec::new(gamma, params.omega, hb)?;
    let t = moment_table(&spec)?;
    let classical_cross = 2.0 * params.g;
    let g0_or_g1 = is_boson(gamma) || is_fermion(gamma);
    let mut out = Vec::new();

    // Moment fixtures.
    out.push(row(
        "printed moments",
        "<P_x1^2>",
        gamma,
        t.p2,
        p2_printed(&spec)?,
        g0_or_g1,
        "printed ratio makes the bracket 3/2 for every gamma in (0,2)",
    ));
    out.push(row(
        "printed moments",
        "<Q_x1^2 Q_x2^2>",
        gamma,
        t.q2q2_cross,
        q2q2_cross_printed(&spec)?,
        g0_or_g1,
        "printed form omits the gamma(gamma-1) companion term",
    ));
    out.push(row("printed moments", "<Q_x1 Q_x2>", gamma, t.qq_cross, qq_cross_conjectured(&spec)?, is_boson(gamma),
        "conjectured value is -hbar gamma/(8 Omega); direct integration gives -hbar gamma/(4 Omega)"));
    out.push(row(
        "printed moments",
        "<V>",
        gamma,
        t.v_expect,
        v_printed(&spec)?,
        false,
        "printed sum omits 4<Q_x1^2 Q_y2^2>",
    ));
    out.push(row(
        "printed moments",
        "<V> sum form vs hypergeometric form",
        gamma,
        v_printed(&spec)?,
        v_printed_hypergeometric(&spec)?,
        true,
        "internal identity of the printed forms",
    ));

    // Printed ⟨p,q|V|p,q⟩ expansion with the true moments substituted.
    let vexp_q2 = 10.0 * t.q2;
    let vexp_dot = 2.0 * (2.0 * t.qq_cross);
    let vexp_const = 16.0 / 3.0 * t.q4 + 4.0 * t.q2q2_cross;
    if params.g > 0.0 {
        out.push(row(
            "printed <V> expansion",
            "|q|^2 coefficient",
            gamma,
            c.c_q2.at(hb) / params.g,
            vexp_q2,
            false,
            "direct expansion gives 12<Q^2>: 8 from 2 S_q <S_Q>, 4 from 4<(q.Q)^2>",
        ));
        out.push(row(
            "printed <V> expansion",
            "q1.q2 coefficient",
            gamma,
            c.c_q1q2.at(hb) / params.g,
            vexp_dot,
            is_boson(gamma),
            "direct expansion gives 8<Q_x1 Q_x2>",
        ));
        out.push(row(
            "printed <V> expansion",
            "constant",
            gamma,
            c.c_const_quartic.at(hb) / params.g,
            vexp_const,
            false,
            "omits 4<Q_x1^2 Q_y2^2>",
        ));
    }
    out.push(row(
        "printed <V> expansion",
        "classical q1^2 q2^2 coefficient",
        gamma,
        2.0,
        0.0,
        false,
        "(|q1|^2+|q2|^2)^2 has a 2|q1|^2|q2|^2 cross term; printed as a per-particle sum",
    ));

    // Printed Hamiltonians.
    let mut ham = |source: &str, pc: PrintedCoefficients, kin_ok: bool, dot_ok: bool| {
        out.push(row(
            source,
            "kinetic constant",
            gamma,
            c.c_kin_const.at(hb),
            pc.kin_const,
            kin_ok,
            "",
        ));
        out.push(row(
            source,
            "harmonic constant",
            gamma,
            c.c_harm_const.at(hb),
            pc.harm_const,
            true,
            "",
        ));
        out.push(row(
            source,
            "|q|^2 coefficient",
            gamma,
            c.c_q2.at(hb),
            pc.c_q2,
            params.g == 0.0,
            "true coefficient is 12 g <Q_x1^2>",
        ));
        out.push(row(
            source,
            "q1.q2 coefficient",
            gamma,
            c.c_q1q2.at(hb),
            pc.c_q1q2,
            dot_ok,
            "true coefficient is 8 g <Q_x1 Q_x2>; the general form prints 4 g <Q_x1 Q_x2>",
        ));
        out.push(row(
            source,
            "quartic constant",
            gamma,
            c.c_const_quartic.at(hb),
            pc.quartic_const,
            false,
            "true constant is g<V> including 4<Q_x1^2 Q_y2^2>",
        ));
        out.push(row(
            source,
            "classical q1^2 q2^2 coefficient",
            gamma,
            classical_cross,
            pc.classical_q1sq_q2sq,
            params.g == 0.0,
            "classical part printed as a per-particle sum",
        ));
    };
    if is_boson(gamma) {
        ham(
            "printed boson Hamiltonian",
            boson_printed(params),
            true,
            true,
        );
    }
    if is_fermion(gamma) {
        ham(
            "printed fermion Hamiltonian",
            fermion_printed(params),
            true,
            params.g == 0.0,
        );
    }
    ham(
        "printed general-gamma Hamiltonian",
        general_printed(params, gamma)?,
        g0_or_g1,
        is_boson(gamma) || params.g == 0.0,
    );
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit() -> PhysicalParams {
        PhysicalParams::default()
    }

    #[test]
    fn printed_kinetic_is_flat_for_anyons() {
        for g in [0.25, 0.5, 1.0, 1.5, 1.9] {
            let s = FiducialSpec::new(g, 1.0, 1.0).unwrap();
            assert!(rel_err(p2_printed(&s).unwrap(), 0.75) < 1e-12, "{g}");
        }
        let s = FiducialSpec::new(0.0, 1.0, 1.0).unwrap();
        assert_eq!(p2_printed(&s).unwrap(), 0.5);
    }

    #[test]
    fn printed_v_values() {
        let s0 = FiducialSpec::new(0.0, 1.0, 1.0).unwrap();
        let s1 = FiducialSpec::new(1.0, 1.0, 1.0).unwrap();
        assert!(rel_err(v_printed(&s0).unwrap(), 5.0) < 1e-13);
        assert!(rel_err(v_printed(&s1).unwrap(), 10.0) < 1e-13);
        let s = FiducialSpec::new(0.5, 1.0, 1.0).unwrap();
        assert!(
            rel_err(
                v_printed(&s).unwrap(),
                v_printed_hypergeometric(&s).unwrap()
            ) < 1e-12
        );
    }

    #[test]
    fn conjectured_cross_moment_is_half_the_truth() {
        let s = FiducialSpec::new(1.0, 1.0, 1.0).unwrap();
        assert!(rel_err(qq_cross_conjectured(&s).unwrap(), -0.125) < 1e-13);
    }

    #[test]
    fn every_prediction_holds() {
        for g in [0.0, 0.25, 0.5, 1.0, 1.5] {
            for row in discrepancy_report(&unit(), g).unwrap() {
                assert_eq!(row.agree, row.expected_agreement, "{row:?}");
            }
        }
    }
}
