use eqfid_core::dynamics::*;
use eqfid_core::symbol::*;
use proptest::prelude::*;

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

fn x0() -> PhaseSpacePoint {
    PhaseSpacePoint {
        p1: [0.1, 0.4],
        p2: [-0.2, -0.3],
        q1: [1.0, 0.2],
        q2: [-0.8, 0.1],
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn gradient_matches_finite_differences(
        a in proptest::array::uniform8(-1.5f64..1.5),
        gamma in 0.0f64..1.99,
    ) {
        let h = ham(gamma, 1.0);
        let x = PhaseSpacePoint::from_array(a);
        let (dp, dq) = gradient(&h, &x);
        let exact: Vec<f64> = dp.iter().chain(&dq).copied().collect();
        let scale = exact.iter().fold(0.0f64, |m, v| m.max(v.abs())).max(1.0);
        for k in 0..8 {
            // Richardson-combined central differences.
            let fd = |step: f64| {
                let (mut up, mut dn) = (a, a);
                up[k] += step;
                dn[k] -= step;
                (h.eval(&PhaseSpacePoint::from_array(up)) - h.eval(&PhaseSpacePoint::from_array(dn))) / (2.0 * step)
            };
            let d = (4.0 * fd(5e-4) - fd(1e-3)) / 3.0;
            prop_assert!((d - exact[k]).abs() <= 1e-8 * scale, "k={k}: {d} vs {}", exact[k]);
        }
    }
}

#[test]
fn origin_is_a_fixed_point() {
    let h = ham(0.5, 1.0);
    let cfg = IntegratorConfig {
        dt: 0.01,
        t_end: 5.0,
        scheme: Scheme::Leapfrog,
        record_every: 1,
    };
    let tr = integrate(&h, PhaseSpacePoint::default(), &cfg).unwrap();
    assert!(tr.states.iter().all(|s| *s == PhaseSpacePoint::default()));
    assert_eq!(tr.len(), 501);
}

#[test]
fn time_reversal() {
    let h = ham(1.0, 1.0);
    let cfg = IntegratorConfig {
        dt: 1e-3,
        t_end: 10.0,
        scheme: Scheme::Yoshida4,
        record_every: 1000,
    };
    let fwd = integrate(&h, x0(), &cfg).unwrap();
    let mut back = *fwd.last();
    back.p1 = [-back.p1[0], -back.p1[1]];
    back.p2 = [-back.p2[0], -back.p2[1]];
    let rev = integrate(&h, back, &cfg).unwrap();
    let mut end = *rev.last();
    end.p1 = [-end.p1[0], -end.p1[1]];
    end.p2 = [-end.p2[0], -end.p2[1]];
    assert!(
        state_distance(&end, &x0()) < 1e-9,
        "{}",
        state_distance(&end, &x0())
    );
}

#[test]
fn convergence_orders() {
    let h = ham(0.5, 1.0);
    let t_end = 2.0;
    let run = |scheme, dt: f64| {
        let cfg = IntegratorConfig {
            dt,
            t_end,
            scheme,
            record_every: 1_000_000,
        };
        *integrate(&h, x0(), &cfg).unwrap().last()
    };
    for (scheme, order) in [(Scheme::Leapfrog, 4.0), (Scheme::Yoshida4, 16.0)] {
        let dt = 0.02;
        let reference = run(scheme, dt / 16.0);
        let e1 = state_distance(&run(scheme, dt), &reference);
        let e2 = state_distance(&run(scheme, dt / 2.0), &reference);
        let ratio = e1 / e2;
        assert!(
            (ratio / order - 1.0).abs() < 0.25,
            "{scheme:?}: ratio {ratio}"
        );
    }
}

#[test]
fn leapfrog_energy_budget() {
    let h = ham(0.5, 1.0);
    let t = harmonic_period(&h);
    let cfg = IntegratorConfig {
        dt: t / 1000.0,
        t_end: 100.0 * t,
        scheme: Scheme::Leapfrog,
        record_every: 100,
    };
    let tr = integrate(&h, x0(), &cfg).unwrap();
    assert!(tr.energy_drift() < 1e-3);
    assert!(tr.angular_momentum_drift() < 1e-8);
}

#[test]
fn rotated_start_gives_rotated_flow() {
    let h = ham(1.5, 1.0);
    let cfg = IntegratorConfig {
        dt: 1e-3,
        t_end: 3.0,
        scheme: Scheme::Yoshida4,
        record_every: 3000,
    };
    let a = integrate(&h, x0(), &cfg).unwrap();
    let b = integrate(&h, x0().rotated(0.9), &cfg).unwrap();
    assert!(state_distance(&a.last().rotated(0.9), b.last()) < 1e-10);
}

#[test]
fn blow_up_is_reported() {
    // A step far beyond the quartic stability limit.
    let h = ham(0.0, 1.0);
    let x = PhaseSpacePoint {
        q1: [10.0, 0.0],
        ..PhaseSpacePoint::default()
    };
    let cfg = IntegratorConfig {
        dt: 0.5,
        t_end: 50.0,
        scheme: Scheme::Leapfrog,
        record_every: 10,
    };
    assert!(matches!(
        integrate(&h, x, &cfg),
        Err(eqfid_core::Error::BlowUp { .. })
    ));
}
