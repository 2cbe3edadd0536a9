use eqfid_core::oracle::*;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn angular_reduction(r1 in 0.01f64..3.0, ratio in 0.2f64..1.8, gamma in 0.0f64..1.99, plus in any::<bool>()) {
        let r2 = r1 * ratio;
        let k = if plus { 2 } else { 0 };
        let q = angular_integral(r1, r2, gamma, k, 64, 1e-10).unwrap();
        let c = angular_closed_form(r1, r2, gamma, k, 1e-15).unwrap();
        prop_assert!((q.value - c).abs() <= 1e-8 * c.abs(), "{} {}", q.value, c);
    }
}

/// Radii within a hair of each other put the closed form's argument at 1 − O(δ²).
#[test]
fn angular_reduction_near_equal_radii() {
    for gamma in [0.05, 0.5, 1.0, 1.5, 1.95] {
        for d in [1e-2, 1e-4, 1e-6, 0.0] {
            for k in [0, 2] {
                let q = angular_integral(1.3, 1.3 * (1.0 + d), gamma, k, 128, 1e-10).unwrap();
                let c = angular_closed_form(1.3, 1.3 * (1.0 + d), gamma, k, 1e-15).unwrap();
                assert!((q.value - c).abs() <= 1e-8 * c.abs(), "{gamma} {d} {k}: {} {c}", q.value);
            }
        }
    }
}

#[test]
fn montecarlo_is_deterministic() {
    let cfg = QuadConfig {
        mc_samples: 50_000,
        ..QuadConfig::default()
    };
    let spec = IntegrandSpec::monomial(0.25, 2.0, [2, 0, 0, 0]).unwrap();
    let a = moment_montecarlo(&spec, &cfg).unwrap();
    let b = moment_montecarlo(&spec, &cfg).unwrap();
    assert_eq!(a.mean.to_bits(), b.mean.to_bits());
    assert_eq!(a.stderr.to_bits(), b.stderr.to_bits());
    let c = moment_montecarlo(&spec, &QuadConfig { mc_seed: 43, ..cfg }).unwrap();
    assert_ne!(a.mean, c.mean);
}

#[test]
fn printed_kinetic_examples() {
    let cfg = QuadConfig {
        radial_nodes: 16,
        angular_nodes: 32,
        ..QuadConfig::default()
    };
    let b = p2_quadrature(0.0, 1.0, &cfg).unwrap();
    assert!((b.value - 0.5).abs() < 1e-10);
    let f = p2_quadrature(1.0, 1.0, &cfg).unwrap();
    assert!((f.value - 0.75).abs() < 1e-10);
    assert!(b.converged && f.converged);
}

#[test]
fn odd_moments_vanish() {
    let cfg = QuadConfig {
        radial_nodes: 16,
        angular_nodes: 32,
        ..QuadConfig::default()
    };
    for m in [
        [1, 0, 0, 0],
        [0, 1, 0, 0],
        [3, 0, 0, 0],
        [2, 0, 1, 0],
        [1, 1, 1, 0],
    ] {
        let q = moment_quadrature(&IntegrandSpec::monomial(0.5, 1.0, m).unwrap(), &cfg).unwrap();
        assert!(q.value.abs() < 1e-12, "{m:?}: {}", q.value);
    }
}

#[test]
fn validation() {
    assert!(IntegrandSpec::monomial(2.0, 1.0, [2, 0, 0, 0]).is_err());
    assert!(IntegrandSpec::monomial(0.5, 0.0, [2, 0, 0, 0]).is_err());
    assert!(IntegrandSpec::monomial(0.5, 1.0, [3, 2, 0, 0]).is_err());
    assert!(appendix_chain_check(0.5, 4, 0, Sign::Minus).is_err());
}
