//! Property-based contracts: randomized inputs against the invariants the
//! library promises, with the slow oracles as referees.

use std::f64::consts::TAU;

use num_complex::Complex64;
use proptest::prelude::*;

use unimod_core::autocorr::{autocorrelation_direct, isl, psl};
use unimod_core::baselines::{misl_iteration, run_baseline, BaselineKind};
use unimod_core::fbmm::{block_coefficients, mm_step, run_fbmm, BlockQuadratic, ConstantsState};
use unimod_core::oracle::{oracle_block_objective, oracle_constants};
use unimod_core::run::RunConfig;
use unimod_core::sequence::{project_unimodular, UnimodularSequence};
use unimod_core::spectral::{autocorrelation_fft, forward_2n, inverse_first_n, isl_frequency};

fn phase_vec(max_len: usize) -> impl Strategy<Value = Vec<f64>> {
    proptest::collection::vec(0.0..TAU, 2..=max_len)
}

fn sequence_from(phases: &[f64]) -> UnimodularSequence {
    UnimodularSequence::from_phases(phases).unwrap()
}

proptest! {
    #[test]
    fn global_phase_leaves_isl_unchanged(phases in phase_vec(128), shift in 0.0..TAU) {
        let y = sequence_from(&phases);
        let rotation = Complex64::cis(shift);
        let rotated = UnimodularSequence::new(
            y.entries().iter().map(|z| z * rotation).collect(),
        ).unwrap();
        let base = isl(&y);
        prop_assert!((isl(&rotated) - base).abs() <= 1e-9 * base.max(1.0));
    }

    #[test]
    fn conjugation_leaves_isl_unchanged(phases in phase_vec(128)) {
        let y = sequence_from(&phases);
        let conjugated = UnimodularSequence::new(
            y.entries().iter().map(|z| z.conj()).collect(),
        ).unwrap();
        let base = isl(&y);
        prop_assert!((isl(&conjugated) - base).abs() <= 1e-9 * base.max(1.0));
    }

    #[test]
    fn reversal_leaves_isl_unchanged(phases in phase_vec(128)) {
        let y = sequence_from(&phases);
        let reversed = UnimodularSequence::new(
            y.entries().iter().rev().copied().collect(),
        ).unwrap();
        let base = isl(&y);
        prop_assert!((isl(&reversed) - base).abs() <= 1e-9 * base.max(1.0));
    }

    #[test]
    fn zero_lag_is_the_sequence_length(phases in phase_vec(128)) {
        let y = sequence_from(&phases);
        let r0 = autocorrelation_direct(&y).lags()[0];
        prop_assert!((r0 - Complex64::new(y.len() as f64, 0.0)).norm() <= 1e-9);
    }

    #[test]
    fn sidelobe_metrics_bound_each_other(phases in phase_vec(128)) {
        let y = sequence_from(&phases);
        let profile = autocorrelation_direct(&y);
        let (isl, psl) = (profile.isl(), profile.psl());
        let lag_count = (y.len() - 1) as f64;
        prop_assert!(isl >= 0.0);
        prop_assert!(psl * psl <= isl * (1.0 + 1e-12));
        prop_assert!(isl <= lag_count * psl * psl * (1.0 + 1e-12));
    }

    #[test]
    fn frequency_and_lag_isl_agree(phases in phase_vec(256)) {
        let y = sequence_from(&phases);
        let lag_domain = autocorrelation_direct(&y).isl();
        let freq_domain = isl_frequency(&y);
        prop_assert!(
            (freq_domain - lag_domain).abs() <= 1e-10 * lag_domain.max(1.0),
            "{freq_domain} vs {lag_domain}"
        );
    }

    #[test]
    fn fft_and_direct_lags_agree(phases in phase_vec(256)) {
        let y = sequence_from(&phases);
        let direct = autocorrelation_direct(&y);
        let fft = autocorrelation_fft(&y);
        let tolerance = 1e-10 * y.len() as f64;
        for (a, b) in fft.lags().iter().zip(direct.lags()) {
            prop_assert!((a - b).norm() <= tolerance);
        }
    }

    #[test]
    fn forward_transform_round_trips(phases in phase_vec(200)) {
        let y = sequence_from(&phases);
        let n = y.len();
        let u = forward_2n(&y);
        let g = inverse_first_n(&u, n).unwrap();
        let scale = 1.0 / (2 * n) as f64;
        for (g_i, y_i) in g.iter().zip(y.entries()) {
            prop_assert!((g_i * scale - y_i).norm() <= 1e-12);
        }
    }

    #[test]
    fn projection_ignores_positive_scale(
        phases in phase_vec(64),
        scale in prop::sample::select(vec![1e-6, 0.25, 1.0, 3.0, 1e6]),
    ) {
        let z: Vec<Complex64> = phases.iter().map(|&p| Complex64::cis(p) * 2.5).collect();
        let scaled: Vec<Complex64> = z.iter().map(|v| v * scale).collect();
        for (a, b) in project_unimodular(&scaled).iter().zip(project_unimodular(&z)) {
            prop_assert!((a - b).norm() <= 1e-12);
        }
    }

    #[test]
    fn misl_update_never_increases_isl(phases in phase_vec(64)) {
        let y = sequence_from(&phases);
        let before = autocorrelation_direct(&y).isl();
        let after = autocorrelation_direct(&misl_iteration(&y)).isl();
        prop_assert!(after <= before * (1.0 + 1e-9), "{after} > {before}");
    }

    #[test]
    fn majorizer_dominates_and_touches(
        a in -5.0..5.0f64,
        b in -5.0..5.0f64,
        c in -5.0..5.0f64,
        d in -5.0..5.0f64,
        anchor_phase in 0.0..TAU,
        probe_phase in 0.0..TAU,
    ) {
        let quad = BlockQuadratic {
            a, b, c, d,
            alpha: Complex64::new(a / 2.0, b / 4.0),
            beta: Complex64::new(c / 2.0, d / 2.0),
        };
        let lambda = quad.lambda_max();
        let m = quad.matrix();
        let e = quad.linear();
        let anchor = [anchor_phase.cos(), anchor_phase.sin()];
        let surrogate = |v: [f64; 2]| {
            let a_anchor = [
                m[0][0] * anchor[0] + m[0][1] * anchor[1],
                m[1][0] * anchor[0] + m[1][1] * anchor[1],
            ];
            lambda * (v[0] * v[0] + v[1] * v[1])
                + 2.0 * (v[0] * (a_anchor[0] - lambda * anchor[0])
                    + v[1] * (a_anchor[1] - lambda * anchor[1]))
                + (lambda * (anchor[0] * anchor[0] + anchor[1] * anchor[1])
                    - (anchor[0] * a_anchor[0] + anchor[1] * a_anchor[1]))
                + e[0] * v[0] + e[1] * v[1]
        };
        let objective = |v: [f64; 2]| quad.value(v);
        let probe = [probe_phase.cos(), probe_phase.sin()];
        prop_assert!(surrogate(probe) >= objective(probe) - 1e-12);
        prop_assert!((surrogate(anchor) - objective(anchor)).abs() <= 1e-12);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    // Replays a full sweep by hand so every intermediate can be held against
    // the oracles: the constants engine must track the partially updated
    // sequence, and no block update may push its own objective up.
    #[test]
    fn sweep_internals_match_the_oracles(phases in phase_vec(24)) {
        let mut y = sequence_from(&phases);
        let n = y.len();
        let tolerance = 1e-8 * n as f64;
        let mut state = ConstantsState::init(&y);
        for i in 1..=n {
            let expected = oracle_constants(&y, i);
            for (got, want) in state.constants().iter().zip(&expected) {
                prop_assert!((got - want).norm() <= tolerance, "block {i}");
            }
            let quad = block_coefficients(&state, &y, i);
            let old = y.entries()[i - 1];
            let updated = mm_step(&quad, [old.re, old.im]);
            let new = Complex64::new(updated[0], updated[1]);
            prop_assert!(
                oracle_block_objective(&y, i, new)
                    <= oracle_block_objective(&y, i, old) + 1e-9,
                "block {i} went uphill"
            );
            y.set_entry(i - 1, new);
            state.note_entry(i - 1, y.entries()[i - 1]);
            if i < n {
                state.advance();
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn optimizer_outputs_stay_unimodular(phases in phase_vec(24)) {
        let y0 = sequence_from(&phases);
        let config = RunConfig {
            max_iterations: 300,
            ..RunConfig::default()
        };
        let (fbmm_y, fbmm_trace) = run_fbmm(&y0, &config);
        let (misl_y, misl_trace) = run_baseline(BaselineKind::Misl, &y0, &config);
        let (can_y, _) = run_baseline(BaselineKind::Can, &y0, &config);
        for y in [&fbmm_y, &misl_y, &can_y] {
            for z in y.entries() {
                prop_assert!((z.norm() - 1.0).abs() <= 1e-12);
            }
        }
        for trace in [&fbmm_trace, &misl_trace] {
            for pair in trace.rows.windows(2) {
                prop_assert!(pair[1].isl <= pair[0].isl * (1.0 + 1e-9));
            }
        }
    }
}

/// The closed-form largest eigenvalue against a generic 2×2 symmetric
/// eigensolver (characteristic polynomial) plus an explicit eigenpair
/// residual check, over 1000 random quadratics.
#[test]
fn lambda_closed_form_matches_generic_eigensolver() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..1000 {
        let a = (rng.gen::<f64>() - 0.5) * 20.0;
        let b = (rng.gen::<f64>() - 0.5) * 20.0;
        let quad = BlockQuadratic {
            a,
            b,
            c: 0.0,
            d: 0.0,
            alpha: Complex64::new(a / 2.0, b / 4.0),
            beta: Complex64::new(0.0, 0.0),
        };
        let lambda = quad.lambda_max();
        let m = quad.matrix();

        let trace = m[0][0] + m[1][1];
        let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
        let from_poly = 0.5 * (trace + (trace * trace - 4.0 * det).sqrt());
        assert!(
            (lambda - from_poly).abs() <= 1e-12 * lambda.max(1.0),
            "{lambda} vs {from_poly}"
        );

        // (A - λI)·v = 0 for the analytically constructed eigenvector.
        let candidates = [[m[0][1], lambda - m[0][0]], [lambda - m[1][1], m[1][0]]];
        let v = if candidates[0][0].hypot(candidates[0][1])
            >= candidates[1][0].hypot(candidates[1][1])
        {
            candidates[0]
        } else {
            candidates[1]
        };
        let norm = v[0].hypot(v[1]);
        if norm > 0.0 {
            let residual = [
                m[0][0] * v[0] + m[0][1] * v[1] - lambda * v[0],
                m[1][0] * v[0] + m[1][1] * v[1] - lambda * v[1],
            ];
            assert!(residual[0].hypot(residual[1]) <= 1e-12 * norm * lambda.max(1.0));
        }
    }
}

/// Wrapping the constants around the sequence end agrees with recomputing
/// them from scratch, across several lengths.
#[test]
fn wrapped_constants_agree_with_fresh_ones() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    for n in [2usize, 3, 5, 17, 64] {
        let phases: Vec<f64> = (0..n).map(|_| rng.gen::<f64>() * TAU).collect();
        let y = sequence_from(&phases);
        let mut state = ConstantsState::init(&y);
        for _ in 1..n {
            state.advance();
        }
        state.wrap_to_first_block();
        let fresh = ConstantsState::init(&y);
        for (got, want) in state.constants().iter().zip(fresh.constants()) {
            assert!((got - want).norm() <= 1e-10 * n as f64, "n = {n}");
        }
    }
}

/// PSL of a unimodular sequence is never below 1: the outermost lag is a
/// single unit product.
#[test]
fn outermost_lag_pins_the_psl_floor() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(99);
    for n in [2usize, 7, 33] {
        let phases: Vec<f64> = (0..n).map(|_| rng.gen::<f64>() * TAU).collect();
        let y = sequence_from(&phases);
        assert!(psl(&y) >= 1.0 - 1e-12);
    }
}
