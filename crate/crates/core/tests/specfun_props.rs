use eqfid_core::specfun::*;
use proptest::prelude::*;

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(1e-300)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn gauss_theorem_matches_extrapolated_series(
        a in -1.8f64..1.8,
        b in -1.8f64..1.8,
        excess in 0.5f64..3.0,
    ) {
        let c = a + b + excess;
        prop_assume!(c > 0.2);
        prop_assume!(non_positive_integer(a).is_none() && non_positive_integer(b).is_none());
        let p = HypParams::new(a, b, c).unwrap();
        let closed = hyp2f1_unit(p).unwrap();
        let series = hyp2f1_partial(p, 1.0, 1e-14).unwrap();
        prop_assert!((closed - series).abs() <= 1e-9 * closed.abs().max(1e-3), "{closed} {series}");
    }

    /// The direct series (z ≤ 1/2) and the 1−z connection (z > 1/2) meet
    /// continuously, including near integer c-a-b.
    #[test]
    fn series_and_connection_agree_at_switch(
        a in -1.8f64..1.8,
        b in -1.8f64..1.8,
        c in 0.3f64..3.5,
        snap in any::<bool>(),
    ) {
        // Optionally put c-a-b within the cancellation window of an integer.
        let c = if snap { a + b + (c - a - b).round().max(1.0) + 1e-4 * (c - 2.0) } else { c };
        prop_assume!(c > 0.2);
        prop_assume!(non_positive_integer(a).is_none() && non_positive_integer(b).is_none());
        let p = HypParams::new(a, b, c).unwrap();
        let h = 1e-9;
        let lo = hyp2f1_partial(p, 0.5, 1e-15).unwrap();
        let hi = hyp2f1_partial(p, 0.5 + h, 1e-15).unwrap();
        // d/dz ₂F₁(a,b;c;z) = (ab/c) ₂F₁(a+1,b+1;c+1;z)
        let dp = HypParams::new(a + 1.0, b + 1.0, c + 1.0).unwrap();
        let slope = a * b / c * hyp2f1_partial(dp, 0.5, 1e-15).unwrap();
        let predicted = lo + slope * h;
        // Inside the integer window the connection pieces cancel from ~1e5.
        let tol = if snap { 1e-9 } else { 1e-11 };
        prop_assert!((hi - predicted).abs() <= tol * lo.abs().max(1.0), "{lo} {hi} {predicted}");
    }

    #[test]
    fn pochhammer_recurrence(a in -5.0f64..5.0, s in 0u32..20) {
        let lhs = pochhammer(a, s + 1);
        let rhs = pochhammer(a, s) * (a + s as f64);
        prop_assert!((lhs - rhs).abs() <= 1e-12 * lhs.abs().max(rhs.abs()).max(1e-300));
    }

    #[test]
    fn log_gamma_recurrence(x in 0.01f64..60.0) {
        let lhs = log_gamma(x + 1.0).unwrap();
        let rhs = log_gamma(x).unwrap() + x.ln();
        prop_assert!((lhs - rhs).abs() <= 1e-13 * lhs.abs().max(1.0), "{lhs} {rhs}");
    }

    #[test]
    fn whittaker_node_refinement(mu in -6.0f64..0.5, nu in 0.0f64..4.0, z in 0.05f64..20.0) {
        let p = WhittakerParams::with_valid_nu(mu, nu).unwrap();
        let w1 = whittaker_w_nodes(p, z, WHITTAKER_NODES).unwrap();
        let w2 = whittaker_w_nodes(p, z, 2 * WHITTAKER_NODES).unwrap();
        prop_assert!(rel(w1, w2) < 1e-10, "{w1} {w2}");
    }

    #[test]
    fn whittaker_even_in_nu(mu in -3.0f64..-0.6, nu in 0.0f64..1.0, z in 0.1f64..10.0) {
        // Both signs satisfy the representation's condition here.
        let a = whittaker_w(WhittakerParams::new(mu, nu).unwrap(), z).unwrap();
        let b = whittaker_w(WhittakerParams::new(mu, -nu).unwrap(), z).unwrap();
        prop_assert!(rel(a, b) < 1e-10);
    }
}

#[test]
fn unit_argument_special_cases() {
    // a = 0 terminates immediately.
    let p = HypParams::new(0.0, -0.5, 1.5).unwrap();
    assert_eq!(hyp2f1_unit(p).unwrap(), 1.0);
    // c − a − b ≤ 0 diverges.
    let p = HypParams::new(1.0, 1.0, 1.5).unwrap();
    assert!(matches!(
        hyp2f1_unit(p),
        Err(eqfid_core::Error::Divergent { .. })
    ));
}
