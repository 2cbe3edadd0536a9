use eqfid_core::moments::*;
use proptest::prelude::*;

fn table(gamma: f64, omega: f64, hbar: f64) -> MomentTable {
    moment_table(&FiducialSpec::new(gamma, omega, hbar).unwrap()).unwrap()
}

#[test]
fn printed_boson_and_fermion_values() {
    let b = table(0.0, 1.0, 1.0);
    for (got, want) in [(b.q2, 0.5), (b.p2, 0.5), (b.q4, 0.75), (b.q2q2_same, 0.25)] {
        assert!((got - want).abs() <= 1e-10 * want);
    }
    assert!(b.qq_cross.abs() <= 1e-15);
    let f = table(1.0, 1.0, 1.0);
    for (got, want) in [(f.q2, 0.75), (f.p2, 0.75), (f.q4, 1.5), (f.qq_cross, -0.25)] {
        assert!((got - want).abs() <= 1e-10 * want.abs());
    }
}

#[test]
fn rejects_out_of_range_gamma() {
    let e = FiducialSpec::new(2.5, 1.0, 1.0).unwrap_err();
    assert_eq!(e.to_string(), "gamma must lie in [0,2)");
    assert!(FiducialSpec::new(-0.1, 1.0, 1.0).is_err());
    assert!(FiducialSpec::new(2.0, 1.0, 1.0).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn length_scaling(gamma in 0.0f64..1.99, omega in 0.2f64..5.0, hbar in 0.2f64..5.0) {
        let t = table(gamma, omega, hbar);
        let u = table(gamma, 1.0, 1.0);
        let l = hbar / omega;
        prop_assert!((t.q2 - u.q2 * l).abs() <= 1e-12 * t.q2);
        prop_assert!((t.p2 - u.p2 * hbar * omega).abs() <= 1e-12 * t.p2);
        prop_assert!((t.q4 - u.q4 * l * l).abs() <= 1e-12 * t.q4);
        prop_assert!((t.qq_cross - u.qq_cross * l).abs() <= 1e-12 * t.q2);
    }

    #[test]
    fn positivity_and_inequalities(gamma in 0.0f64..1.99) {
        let t = table(gamma, 1.0, 1.0);
        prop_assert!(t.norm_const > 0.0 && t.q2 > 0.0 && t.p2 > 0.0);
        // Uncertainty and Cauchy–Schwarz.
        prop_assert!(t.q2 * t.p2 >= 0.25 - 1e-12);
        prop_assert!(t.q4 >= t.q2 * t.q2);
        prop_assert!(t.q2q2_cross >= 0.0 && t.q2q2_mixed >= 0.0);
        prop_assert!(t.qq_cross.abs() <= t.q2);
        // ⟨V⟩ assembled from the quartic pieces.
        let v = 16.0 * t.q4 / 3.0 + 4.0 * (t.q2q2_cross + t.q2q2_mixed);
        prop_assert!((v - t.v_expect).abs() <= 1e-12 * v);
        // Planar isotropy: ⟨x²y²⟩ = ⟨x⁴⟩/3.
        prop_assert!((t.q2q2_same - t.q4 / 3.0).abs() <= 1e-12 * t.q4);
    }

    #[test]
    fn closed_polynomial_forms(gamma in 0.0f64..1.99) {
        let t = table(gamma, 1.0, 1.0);
        let g = gamma;
        let want = [
            (t.q2, (g + 2.0) / 4.0),
            (t.p2, (g + 2.0) / 4.0),
            (t.q4, 3.0 * (g * g + 7.0 * g + 8.0) / 32.0),
            (t.q2q2_cross, (3.0 * g * g + 5.0 * g + 8.0) / 32.0),
            (t.q2q2_mixed, (g * g + 7.0 * g + 8.0) / 32.0),
        ];
        for (got, w) in want {
            prop_assert!((got - w).abs() <= 1e-10 * w, "{got} {w}");
        }
        prop_assert!((t.qq_cross + g / 4.0).abs() <= 1e-10);
    }
}
