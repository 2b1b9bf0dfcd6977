use std::f64::consts::{PI, TAU};

use proptest::prelude::*;
use swapsim_core::{
    concurrence, concurrence_phi_plus, concurrence_psi_minus, concurrence_pure, maximal_entanglement_times,
    post_bsm_state, AmplitudePair, BellChannel, PairInit, SystemParams,
};

fn init_strategy() -> impl Strategy<Value = PairInit> {
    (0.0..=PI, 0.0..TAU, 0.0..=PI, 0.0..TAU).prop_map(|(t1, p1, t2, p2)| PairInit::new(t1, p1, t2, p2).unwrap())
}

fn params_strategy() -> impl Strategy<Value = SystemParams> {
    (0.02f64..15.0, -20.0f64..20.0).prop_map(|(r, d)| SystemParams::scaled(r, d).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn closed_forms_match_constructed_states(
        params in params_strategy(),
        init in init_strategy(),
        tau in 0.0f64..6.0,
    ) {
        for channel in BellChannel::ALL {
            let state = post_bsm_state(channel, &params, &init, tau);
            let closed = concurrence(channel, &params, &init, tau);
            match (state, closed) {
                (Ok(s), Ok(c)) => prop_assert!((concurrence_pure(&s) - c).abs() < 1e-10,
                    "{channel}: {} vs {c}", concurrence_pure(&s)),
                (Err(_), Err(_)) => {}
                (s, c) => prop_assert!(false, "{channel}: state {s:?} closed {c:?}"),
            }
        }
    }

    #[test]
    fn concurrences_in_unit_interval(params in params_strategy(), init in init_strategy(), tau in 0.0f64..10.0) {
        for channel in BellChannel::ALL {
            if let Ok(c) = concurrence(channel, &params, &init, tau) {
                prop_assert!((0.0..=1.0).contains(&c));
            }
        }
    }

    #[test]
    fn label_exchange_symmetry(params in params_strategy(), init in init_strategy(), tau in 0.0f64..6.0) {
        for channel in BellChannel::ALL {
            if let (Ok(a), Ok(b)) = (
                concurrence(channel, &params, &init, tau),
                concurrence(channel, &params, &init.swapped(), tau),
            ) {
                prop_assert!((a - b).abs() < 1e-12);
            }
        }
    }
}

#[test]
fn psi_minus_stationary_for_matched_inputs() {
    let p = SystemParams::scaled(10.0, 0.0).unwrap();
    for (theta, phi) in [(PI / 3.0, 0.0), (1.0, 2.0), (2.9, 5.5)] {
        let init = PairInit::new(theta, phi, theta, phi).unwrap();
        let values: Vec<f64> = (0..1000).map(|k| concurrence_psi_minus(&p, &init, 0.01 * k as f64).unwrap()).collect();
        let mean = values.iter().sum::<f64>() / values.len() as f64;
        let var = values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / values.len() as f64;
        assert!(var < 1e-20 && (mean - 1.0).abs() < 1e-12);
    }
}

#[test]
fn phi_plus_excited_pair_maximum_characterization() {
    for (r, d) in [(10.0, 0.0), (10.0, 15.0), (3.0, 1.0)] {
        let p = SystemParams::scaled(r, d).unwrap();
        for k in 1..600 {
            let tau = 0.005 * k as f64;
            let a = AmplitudePair::at(&p, tau).unwrap();
            let x = (a.gamma.norm() / a.survival.norm()).powi(2);
            let c = concurrence_phi_plus(&p, &PairInit::excited(), tau).unwrap();
            assert!((c - 2.0 * x / (1.0 + x * x)).abs() < 1e-12);
            let equal = (a.survival.norm() - a.gamma.norm()).abs() < 1e-9;
            assert_eq!(equal, c > 1.0 - 1e-15, "τ={tau}");
        }
    }
}

#[test]
fn phi_plus_roots_reach_unit_concurrence() {
    let p = SystemParams::scaled(10.0, 0.0).unwrap();
    let roots = maximal_entanglement_times(&p, 3.0).unwrap();
    assert!(roots.len() > 10);
    assert!(roots.windows(2).all(|w| w[0] < w[1]));
    for &t in &roots {
        let c = concurrence_phi_plus(&p, &PairInit::excited(), t).unwrap();
        assert!(c >= 1.0 - 1e-9, "root {t}: {c}");
    }
    // Roots in the resonant strong-coupling case recur every π/|Ω| in pairs.
    for n in 0..3 {
        let tau_n = (2.0 * n as f64 * PI + PI / 4.0) / 10.0;
        let nearest = roots.iter().map(|r| (r - tau_n).abs()).fold(f64::INFINITY, f64::min);
        assert!(nearest < 2e-2, "n={n}: {nearest}");
    }
}

#[test]
fn phi_plus_phase_sum_matters() {
    // Only Φ outcomes feel φ₁ + φ₂.
    let p = SystemParams::scaled(10.0, 0.0).unwrap();
    let base = PairInit::new(1.0, 0.3, 2.0, 0.3).unwrap();
    let shifted = PairInit::new(1.0, 1.3, 2.0, 1.3).unwrap();
    let tau = 0.4;
    let psi_a = concurrence_psi_minus(&p, &base, tau).unwrap();
    let psi_b = concurrence_psi_minus(&p, &shifted, tau).unwrap();
    assert!((psi_a - psi_b).abs() < 1e-14);
    let phi_a = concurrence_phi_plus(&p, &base, tau).unwrap();
    let phi_b = concurrence_phi_plus(&p, &shifted, tau).unwrap();
    assert!((phi_a - phi_b).abs() > 1e-3);
}

#[test]
fn phi_plus_curve_shapes() {
    // Resonant strong coupling: the |e,e⟩ curve swings between 0 and 1.
    let p = SystemParams::scaled(10.0, 0.0).unwrap();
    let curve: Vec<f64> =
        (0..=1000).map(|k| concurrence_phi_plus(&p, &PairInit::excited(), k as f64 * 1e-3).unwrap()).collect();
    let max = curve.iter().cloned().fold(0.0, f64::max);
    let min_after = curve[200..].iter().cloned().fold(1.0, f64::min);
    assert!(max > 0.99 && min_after < 1e-3);

    // θ = π/2 pair: sudden death, no stationary value.
    let half = PairInit::new(PI / 2.0, 0.0, PI / 2.0, 0.0).unwrap();
    let late: Vec<f64> = (0..200).map(|k| concurrence_phi_plus(&p, &half, 8.0 + 0.01 * k as f64).unwrap()).collect();
    assert!(late.contains(&0.0) || late.iter().all(|&c| c < 1e-3));

    // Weak coupling never approaches unity.
    let weak = SystemParams::scaled(0.1, 0.0).unwrap();
    let peak = (0..2000)
        .map(|k| concurrence_phi_plus(&weak, &PairInit::excited(), 0.01 * k as f64).unwrap())
        .fold(0.0, f64::max);
    assert!(peak < 0.05, "{peak}");
}

#[test]
fn common_photon_factor_drops_out() {
    use swapsim_core::{gamma_amplitude, PureTwoQubitState};
    let p = SystemParams::scaled(10.0, 15.0).unwrap();
    let init = PairInit::new(0.7, 1.9, 2.2, 4.0).unwrap();
    for tau in [0.05, 0.6, 2.3] {
        let reduced = post_bsm_state(BellChannel::PsiMinus, &p, &init, tau).unwrap();
        let factor = gamma_amplitude(&p, tau).unwrap();
        let full = PureTwoQubitState::from_unnormalized(reduced.amplitudes().map(|a| a * factor)).unwrap();
        assert!((reduced.overlap(&full) - 1.0).abs() < 1e-12);
    }
}

#[test]
fn psi_minus_equatorial_pair_against_oracle() {
    use swapsim_core::oracle::{solve_volterra_amplitude, GridSpec, VolterraMethod};
    let p = SystemParams::scaled(10.0, 0.0).unwrap();
    let grid = GridSpec::new(0.05, 100, VolterraMethod::TrapezoidVolterra).unwrap();
    let e2 = solve_volterra_amplitude(&p, &grid).unwrap()[100].norm_sqr();
    let init = PairInit::new(PI / 2.0, 0.0, PI / 2.0, PI).unwrap();
    let c = concurrence_psi_minus(&p, &init, 0.05).unwrap();
    assert!((c - 0.5 * e2 / (0.5 * e2 + 1.0)).abs() < 1e-9);
}
