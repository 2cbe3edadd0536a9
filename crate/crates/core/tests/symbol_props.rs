use eqfid_core::symbol::*;
use proptest::prelude::*;

fn point() -> impl Strategy<Value = PhaseSpacePoint> {
    proptest::array::uniform8(-2.0f64..2.0).prop_map(PhaseSpacePoint::from_array)
}

fn ham(gamma: f64, hbar: f64) -> EnhancedHamiltonian {
    EnhancedHamiltonian::for_gamma(
        PhysicalParams {
            hbar,
            ..PhysicalParams::default()
        },
        gamma,
    )
    .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn rotation_and_exchange_invariance(x in point(), theta in 0.0f64..6.3, gamma in 0.0f64..1.99) {
        let h = ham(gamma, 1.0);
        let e = h.eval(&x);
        prop_assert!((h.eval(&x.rotated(theta)) - e).abs() <= 1e-12 * e.abs().max(1.0));
        prop_assert!((h.eval(&x.swapped()) - e).abs() <= 1e-12 * e.abs().max(1.0));
    }

    #[test]
    fn classical_part_is_statistics_blind(x in point(), a in 0.0f64..1.99, b in 0.0f64..1.99) {
        let (ha, hb) = (ham(a, 1.0), ham(b, 1.0));
        prop_assert_eq!(classical_limit(&ha, &x), classical_limit(&hb, &x));
        prop_assert_eq!(eval_hamiltonian(&ha.with_hbar(0.0), &x), classical_limit(&ha, &x));
    }

    /// H(ħ) − H_c = aħ + bħ² with a > 0: halving ħ halves the gap to first order.
    #[test]
    fn linear_collapse_to_classical(x in point(), gamma in 0.0f64..1.99) {
        let h = ham(gamma, 1.0);
        let hc = classical_limit(&h, &x);
        let d = |hb: f64| eval_hamiltonian(&h.with_hbar(hb), &x) - hc;
        let (d1, d2, d3) = (d(4e-3), d(2e-3), d(1e-3));
        prop_assert!(d1 > 0.0 && d2 > 0.0 && d3 > 0.0);
        let (r1, r2) = (d1 / d2, d2 / d3);
        prop_assert!((r1 - 2.0).abs() < 0.05 && (r2 - 2.0).abs() < (r1 - 2.0).abs().max(1e-9) + 1e-9, "{r1} {r2}");
    }

    #[test]
    fn polynomial_matches_direct_evaluation(x in point(), gamma in 0.0f64..1.99) {
        let h = ham(gamma, 0.7);
        let p = h.polynomial();
        let e = h.eval(&x);
        prop_assert!((p.eval(&x.to_array()) - e).abs() <= 1e-12 * e.abs().max(1.0));
    }
}

#[test]
fn coefficient_records_round_trip_names() {
    let h = ham(0.5, 1.0);
    let recs = h.coefficient_records();
    assert_eq!(recs.len(), 8);
    assert!(recs.iter().all(|r| r.value.is_finite()));
}
