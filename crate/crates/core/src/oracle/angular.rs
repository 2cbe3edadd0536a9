use crate::error::{Error, Result};
use crate::math::{abs, cos, powf, sin, PI, TAU};
use crate::quad::{periodic_trapezoid, DeRule};
use crate::specfun::{hyp2f1_partial, HypParams};

/// Angular integral together with its refinement diagnostics.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct AngularResult {
    pub value: f64,
    /// Relative change between n and 2n nodes.
    pub disagreement: f64,
    pub warning: bool,
}

/// Beyond this value of 2r₁r₂/(r₁²+r₂²) the integrand is treated as kinked.
const SMOOTH_LIMIT: f64 = 0.5;

/// ∫₀^{2π} (cos ϑ)^k (r₁² + r₂² − 2r₁r₂ sin ϑ)^γ dϑ for k ∈ {0, 2}.
///
/// Well-separated radii give a smooth periodic integrand and the trapezoid
/// rule; otherwise ϑ = π/2 + τ moves the kink at sin ϑ = 1 to the ends of a
/// tanh-sinh rule on τ ∈ [0, 2π].
pub fn angular_integral(
    r1: f64,
    r2: f64,
    gamma: f64,
    cos_power: u8,
    n_nodes: usize,
    rel_tol: f64,
) -> Result<AngularResult> {
    if !(r1 >= 0.0 && r2 >= 0.0) {
        return Err(Error::Domain {
            what: "angular_integral radius",
            value: r1.min(r2),
        });
    }
    if cos_power != 0 && cos_power != 2 {
        return Err(Error::InvalidParameter {
            name: "cos_power",
            reason: "must be 0 or 2",
        });
    }
    if n_nodes < 32 {
        return Err(Error::InvalidParameter {
            name: "n_nodes",
            reason: "must be at least 32",
        });
    }
    let a = r1 * r1 + r2 * r2;
    let z = if a > 0.0 { 2.0 * r1 * r2 / a } else { 0.0 };
    let eval = |n: usize| -> f64 {
        if z <= SMOOTH_LIMIT {
            periodic_trapezoid(n, |t| {
                let c = if cos_power == 2 {
                    let c = cos(t);
                    c * c
                } else {
                    1.0
                };
                c * pow_gamma(a - 2.0 * r1 * r2 * sin(t), gamma)
            })
        } else {
            let dr = r1 - r2;
            DeRule::tanh_sinh(n).integrate(0.0, TAU, |_, lo, hi| {
                let near = if lo <= hi { lo } else { hi };
                let s = sin(0.5 * near);
                let base = dr * dr + 4.0 * r1 * r2 * s * s;
                // cos ϑ = −sin τ; only its square is needed.
                let c = if cos_power == 2 {
                    let st = sin(near);
                    st * st
                } else {
                    1.0
                };
                c * pow_gamma(base, gamma)
            })
        }
    };
    let v1 = eval(n_nodes);
    let v2 = eval(2 * n_nodes);
    let disagreement = if v2 == 0.0 {
        abs(v1)
    } else {
        abs(v1 - v2) / abs(v2)
    };
    Ok(AngularResult {
        value: v2,
        disagreement,
        warning: disagreement > rel_tol,
    })
}

fn pow_gamma(x: f64, gamma: f64) -> f64 {
    if gamma == 0.0 {
        1.0
    } else {
        powf(x.max(0.0), gamma)
    }
}

/// Closed form: ((3∓1)/2) π (r₁²+r₂²)^γ ₂F₁((1−γ)/2, −γ/2; (3±1)/2; 4r₁²r₂²/(r₁²+r₂²)²),
/// upper sign for cos² and lower for the bare integral.
pub fn angular_closed_form(r1: f64, r2: f64, gamma: f64, cos_power: u8, tol: f64) -> Result<f64> {
    let (pref, c) = match cos_power {
        0 => (2.0 * PI, 1.0),
        2 => (PI, 2.0),
        _ => {
            return Err(Error::InvalidParameter {
                name: "cos_power",
                reason: "must be 0 or 2",
            })
        }
    };
    let a = r1 * r1 + r2 * r2;
    if a == 0.0 {
        return Ok(if gamma == 0.0 { pref } else { 0.0 });
    }
    let z = (2.0 * r1 * r2 / a) * (2.0 * r1 * r2 / a);
    let f = hyp2f1_partial(
        HypParams::new(0.5 * (1.0 - gamma), -0.5 * gamma, c)?,
        z.min(1.0),
        tol,
    )?;
    Ok(pref * pow_gamma(a, gamma) * f)
}
