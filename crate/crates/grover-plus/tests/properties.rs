//! Randomized invariants over the gate, state, and analytic layers.

use proptest::prelude::*;

use grover_plus::analytic::{
    iteration_count, iteration_count_floor, optimal_mixing, optimal_zeta, predicted_success,
    two_level_propagator,
};
use grover_plus::bitstring::{hamming_distance, hamming_weight, intersection, BasisIndex};
use grover_plus::gates::{
    apply_phase_oracle, generalized_hadamard, hadamard_amplitude, PolarAngle, TargetSpec,
};
use grover_plus::statevec::StateVector;

fn zeta_strategy() -> impl Strategy<Value = PolarAngle> {
    (1e-6..std::f64::consts::PI - 1e-6).prop_map(|z| PolarAngle::new(z).unwrap())
}

proptest! {
    #[test]
    fn tensor_power_preserves_norm(n in 1u32..=8, zeta in zeta_strategy(), j in 0u64..256) {
        let j = j % (1 << n);
        let mut state = StateVector::basis(n, j).unwrap();
        state.apply_single_qubit_all(&generalized_hadamard(zeta)).unwrap();
        prop_assert!((state.norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn generalized_hadamard_is_involutory(n in 1u32..=8, zeta in zeta_strategy(), j in 0u64..256) {
        let j = j % (1 << n);
        let mut state = StateVector::basis(n, j).unwrap();
        let gate = generalized_hadamard(zeta);
        state.apply_single_qubit_all(&gate).unwrap();
        state.apply_single_qubit_all(&gate).unwrap();
        let back = StateVector::basis(n, j).unwrap();
        prop_assert!((state.overlap(&back).unwrap().norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn amplitudes_match_closed_form(n in 1u32..=7, zeta in zeta_strategy(), j in 0u64..128) {
        let j = j % (1 << n);
        let mut state = StateVector::basis(n, j).unwrap();
        state.apply_single_qubit_all(&generalized_hadamard(zeta)).unwrap();
        for k in 0..1u64 << n {
            let expect = hadamard_amplitude(n, zeta, j, k);
            prop_assert!((state.amplitude(k).re - expect).abs() < 1e-12);
        }
    }

    #[test]
    fn oracle_flips_only_marked_phases(n in 1u32..=8, zeta in zeta_strategy(), delta in 0u32..=8) {
        let delta = delta.min(n);
        let mut state = StateVector::basis(n, 0).unwrap();
        state.apply_single_qubit_all(&generalized_hadamard(zeta)).unwrap();
        let reference = state.clone();
        let targets = TargetSpec::WeightClass(delta);
        apply_phase_oracle(&mut state, &targets).unwrap();
        for k in 0..1u64 << n {
            let sign = if targets.contains(k) { -1.0 } else { 1.0 };
            let diff = (state.amplitude(k) - reference.amplitude(k) * sign).norm();
            prop_assert!(diff == 0.0);
        }
    }

    #[test]
    fn weight_distance_intersection_identity(n in 1u32..=16, j in 0u64..65536, k in 0u64..65536) {
        let j = BasisIndex::new(j % (1 << n), n).unwrap();
        let k = BasisIndex::new(k % (1 << n), n).unwrap();
        let lhs = hamming_distance(j, k).unwrap();
        let rhs = hamming_weight(j) + hamming_weight(k) - 2 * intersection(j, k).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn propagator_satisfies_power_law(theta in 1e-4..std::f64::consts::FRAC_PI_2, t in 0u64..200) {
        let step = two_level_propagator(theta, 1);
        let mut acc = two_level_propagator(theta, 0);
        for _ in 0..t {
            let next = [
                [
                    step[0][0] * acc[0][0] + step[0][1] * acc[1][0],
                    step[0][0] * acc[0][1] + step[0][1] * acc[1][1],
                ],
                [
                    step[1][0] * acc[0][0] + step[1][1] * acc[1][0],
                    step[1][0] * acc[0][1] + step[1][1] * acc[1][1],
                ],
            ];
            acc = next;
        }
        let direct = two_level_propagator(theta, t);
        for r in 0..2 {
            for c in 0..2 {
                prop_assert!((acc[r][c] - direct[r][c]).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn best_iteration_count_never_loses_to_floor(theta in 1e-4..std::f64::consts::FRAC_PI_2) {
        let best = iteration_count(theta).unwrap();
        let floor = iteration_count_floor(theta).unwrap();
        prop_assert!(best == floor || best == floor + 1);
        prop_assert!(predicted_success(theta, best) >= predicted_success(theta, floor));
    }

    #[test]
    fn mixing_is_symmetric_and_bounded(n in 1u32..=40, delta in 0u32..=40) {
        let delta = delta.min(n);
        let theta = optimal_mixing(n, delta).unwrap();
        let mirrored = optimal_mixing(n, n - delta).unwrap();
        prop_assert_eq!(theta.to_bits(), mirrored.to_bits());
        prop_assert!((0.0..=std::f64::consts::FRAC_PI_2).contains(&theta));
        // the optimum is attained at the closed-form polar angle
        let zeta = optimal_zeta(n, delta).unwrap();
        let at_opt = grover_plus::analytic::mixing_sin2_at(n, delta, zeta);
        prop_assert!((at_opt - theta.sin().powi(2)).abs() < 1e-14);
    }
}
