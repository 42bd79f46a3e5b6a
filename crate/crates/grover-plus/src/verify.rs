//! The invariant suites behind the `verify` command. Each suite exercises
//! one family of properties up to a size bound and reports its worst
//! observed deviation.

use std::f64::consts::PI;

use num_complex::Complex64;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::analytic::{
    dicke_plan, grover_mixing, iteration_count, mixing_sin2_at, optimal_mixing, optimal_zeta,
    predicted_success, two_level_propagator, OscillationPlan,
};
use crate::bitstring::{binomial, hamming_distance, hamming_weight, intersection, BasisIndex};
use crate::error::Result;
use crate::gates::{
    apply_phase_oracle, apply_reflection_about, generalized_hadamard, PolarAngle, TargetSpec,
};
use crate::search::Amplifier;
use crate::statevec::StateVector;

/// Outcome of one suite.
#[derive(Debug, Clone)]
pub struct SuiteResult {
    pub name: &'static str,
    pub max_deviation: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl SuiteResult {
    fn new(name: &'static str, max_deviation: f64, tolerance: f64) -> Self {
        Self {
            name,
            max_deviation,
            tolerance,
            pass: max_deviation <= tolerance,
        }
    }
}

/// Runs every suite with sizes capped at `max_n`; `tol` is the budget for
/// the simulation-accuracy checks (exact-identity suites keep tighter
/// built-in budgets).
pub fn run_all(max_n: u32, tol: f64) -> Result<Vec<SuiteResult>> {
    Ok(vec![
        bitstring_identities(max_n)?,
        bitstring_metric(max_n)?,
        binomial_rows()?,
        norm_drift(max_n)?,
        probability_partition(max_n)?,
        amplitude_closed_form(max_n)?,
        binomial_normalization(max_n)?,
        operator_involutions(max_n)?,
        zeta_optimality(max_n)?,
        dicke_scaling(max_n, tol)?,
        success_monotonicity()?,
        mixing_symmetry(max_n)?,
        propagator_power_law()?,
        two_level_closure(max_n, tol)?,
        dicke_class_symmetry(max_n)?,
        query_dominance()?,
        sqrt_n_scaling()?,
    ])
}

pub fn all_pass(results: &[SuiteResult]) -> bool {
    results.iter().all(|r| r.pass)
}

/// distance = weight(j) + weight(k) - 2 intersection(j, k), exhaustively.
fn bitstring_identities(max_n: u32) -> Result<SuiteResult> {
    let n = max_n.min(12);
    let mut worst = 0.0f64;
    for j in 0..1u64 << n {
        let bj = BasisIndex::new(j, n)?;
        for k in 0..1u64 << n {
            let bk = BasisIndex::new(k, n)?;
            let lhs = hamming_distance(bj, bk)? as i64;
            let rhs = hamming_weight(bj) as i64 + hamming_weight(bk) as i64
                - 2 * intersection(bj, bk)? as i64;
            worst = worst.max((lhs - rhs).abs() as f64);
        }
    }
    Ok(SuiteResult::new("bitstring/weight-identity", worst, 0.0))
}

/// Triangle inequality of the Hamming distance, exhaustively.
fn bitstring_metric(max_n: u32) -> Result<SuiteResult> {
    let n = max_n.min(8);
    let dist = |a: u64, b: u64| (a ^ b).count_ones() as i64;
    let mut worst = 0.0f64;
    for j in 0..1u64 << n {
        for k in 0..1u64 << n {
            let d = dist(j, k);
            for l in 0..1u64 << n {
                let slack = d - dist(j, l) - dist(l, k);
                if slack > 0 {
                    worst = worst.max(slack as f64);
                }
            }
        }
    }
    Ok(SuiteResult::new("bitstring/triangle", worst, 0.0))
}

/// Binomial rows sum to powers of two, exactly, up to n = 30.
fn binomial_rows() -> Result<SuiteResult> {
    let mut worst = 0.0f64;
    for n in 0..=30u32 {
        let total: u128 = (0..=n).map(|r| binomial(n, r).unwrap()).sum();
        worst = worst.max((total as i128 - (1i128 << n)).unsigned_abs() as f64);
    }
    Ok(SuiteResult::new("bitstring/binomial-sum", worst, 0.0))
}

/// Norm drift after 10^4 mixed gate/oracle/reflection applications.
fn norm_drift(max_n: u32) -> Result<SuiteResult> {
    let n = max_n.min(10);
    let mut rng = StdRng::seed_from_u64(7);
    let mut state = StateVector::basis(n, 0)?;
    let axis = {
        let mut a = StateVector::basis(n, 0)?;
        a.apply_single_qubit_all(&generalized_hadamard(PolarAngle::standard()))?;
        a
    };
    let mut worst = 0.0f64;
    for _ in 0..10_000 {
        match rng.gen_range(0..3) {
            0 => {
                let zeta = PolarAngle::new(rng.gen_range(0.0..=PI))?;
                state.apply_single_qubit_all(&generalized_hadamard(zeta))?;
            }
            1 => {
                let delta = rng.gen_range(0..=n);
                apply_phase_oracle(&mut state, &TargetSpec::WeightClass(delta))?;
            }
            _ => apply_reflection_about(&mut state, &axis)?,
        }
        worst = worst.max((state.norm() - 1.0).abs());
    }
    Ok(SuiteResult::new("statevec/norm-drift", worst, 1e-10))
}

/// Probabilities over a partition of the index set sum to one.
fn probability_partition(max_n: u32) -> Result<SuiteResult> {
    let mut worst = 0.0f64;
    for n in 1..=max_n.min(12) {
        let mut state = StateVector::basis(n, 0)?;
        state.apply_single_qubit_all(&generalized_hadamard(PolarAngle::new(1.234)?))?;
        let total: f64 = (0..=n)
            .map(|d| state.probability_of(&TargetSpec::WeightClass(d)).unwrap())
            .sum();
        worst = worst.max((total - 1.0).abs());
    }
    Ok(SuiteResult::new("statevec/partition", worst, 1e-12))
}

/// Simulated `H_zeta^n |j>` equals the closed-form amplitudes, per entry.
fn amplitude_closed_form(max_n: u32) -> Result<SuiteResult> {
    let mut rng = StdRng::seed_from_u64(11);
    let mut worst = 0.0f64;
    for n in 1..=max_n.min(10) {
        let dim = 1u64 << n;
        for _ in 0..20 {
            let zeta = PolarAngle::new(rng.gen_range(0.0..=PI))?;
            let gate = generalized_hadamard(zeta);
            let half = zeta.radians() / 2.0;
            // precomputed powers keep the oracle cheap without changing it
            let cos_pow: Vec<f64> = (0..=n).map(|m| half.cos().powi(m as i32)).collect();
            let sin_pow: Vec<f64> = (0..=n).map(|m| half.sin().powi(m as i32)).collect();
            for j in 0..dim {
                let mut state = StateVector::basis(n, j)?;
                state.apply_single_qubit_all(&gate)?;
                for (k, amp) in state.amplitudes().iter().enumerate() {
                    let k = k as u64;
                    let d = (j ^ k).count_ones() as usize;
                    let sign = if (j & k).count_ones().is_multiple_of(2) {
                        1.0
                    } else {
                        -1.0
                    };
                    let expect = sign * cos_pow[n as usize - d] * sin_pow[d];
                    worst = worst.max((amp.re - expect).abs().max(amp.im.abs()));
                }
            }
        }
    }
    Ok(SuiteResult::new(
        "gates/amplitude-closed-form",
        worst,
        1e-12,
    ))
}

/// Unitarity of the closed form: the binomial-weighted mixing masses sum to 1.
fn binomial_normalization(_max_n: u32) -> Result<SuiteResult> {
    let mut worst = 0.0f64;
    for n in 1..=20u32 {
        for i in 0..=16 {
            let zeta = PolarAngle::new(PI * i as f64 / 16.0)?;
            let total: f64 = (0..=n)
                .map(|d| binomial(n, d).unwrap() as f64 * mixing_sin2_at(n, d, zeta))
                .sum();
            worst = worst.max((total - 1.0).abs());
        }
    }
    Ok(SuiteResult::new(
        "gates/binomial-normalization",
        worst,
        1e-12,
    ))
}

/// Oracle and reflection applied twice restore the state elementwise.
fn operator_involutions(max_n: u32) -> Result<SuiteResult> {
    let n = max_n.min(10);
    let mut state = StateVector::basis(n, 0)?;
    state.apply_single_qubit_all(&generalized_hadamard(PolarAngle::new(0.77)?))?;
    let axis = state.clone();
    state.apply_single_qubit_all(&generalized_hadamard(PolarAngle::new(1.9)?))?;
    let reference = state.clone();

    let mut worst = 0.0f64;
    let spec = TargetSpec::WeightClass(n / 2);
    apply_phase_oracle(&mut state, &spec)?;
    apply_phase_oracle(&mut state, &spec)?;
    worst = worst.max(max_elem_deviation(&state, &reference));

    apply_reflection_about(&mut state, &axis)?;
    apply_reflection_about(&mut state, &axis)?;
    worst = worst.max(max_elem_deviation(&state, &reference));
    Ok(SuiteResult::new("gates/involutions", worst, 1e-12))
}

fn max_elem_deviation(a: &StateVector, b: &StateVector) -> f64 {
    a.amplitudes()
        .iter()
        .zip(b.amplitudes())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

/// A 10^4-point grid scan over zeta never beats the closed-form optimum,
/// and the optimum value agrees with the optimal mixing angle.
fn zeta_optimality(max_n: u32) -> Result<SuiteResult> {
    let points = 10_000u32;
    let mut worst = 0.0f64;
    for n in 2..=max_n.min(16) {
        for delta in 0..=n {
            let star = optimal_zeta(n, delta)?;
            let best = mixing_sin2_at(n, delta, star);
            let theta = optimal_mixing(n, delta)?;
            worst = worst.max((best - theta.sin().powi(2)).abs());
            for i in 0..=points {
                let z = PolarAngle::new(PI * i as f64 / points as f64)?;
                let excess = mixing_sin2_at(n, delta, z) - best;
                if excess > 0.0 {
                    worst = worst.max(excess);
                }
            }
        }
    }
    Ok(SuiteResult::new("analytic/zeta-optimality", worst, 1e-8))
}

/// Collective Dicke mixing equals the simulated weight-class probability.
fn dicke_scaling(max_n: u32, tol: f64) -> Result<SuiteResult> {
    let mut worst = 0.0f64;
    for n in 2..=max_n.min(12) {
        for delta in 0..=n {
            let plan = dicke_plan(n, delta)?;
            let mut state = StateVector::basis(n, 0)?;
            state.apply_single_qubit_all(&generalized_hadamard(plan.zeta))?;
            let simulated = state.probability_of(&TargetSpec::WeightClass(delta))?;
            worst = worst.max((simulated - plan.sin2_theta).abs());
            if plan.sin2_theta > 1.0 {
                worst = worst.max(plan.sin2_theta - 1.0);
            }
        }
    }
    Ok(SuiteResult::new(
        "analytic/dicke-scaling",
        worst,
        tol.min(1e-12),
    ))
}

/// Predicted success is strictly increasing while the phase stays in the
/// first quadrant.
fn success_monotonicity() -> Result<SuiteResult> {
    let mut worst = 0.0f64;
    for i in 1..=50 {
        let theta = std::f64::consts::FRAC_PI_2 * i as f64 / 50.0 / 10.0;
        let mut t = 0u64;
        while (2 * (t + 1) + 1) as f64 * theta <= std::f64::consts::FRAC_PI_2 {
            let gain = predicted_success(theta, t + 1) - predicted_success(theta, t);
            if gain <= 0.0 {
                worst = worst.max(-gain + f64::MIN_POSITIVE);
            }
            t += 1;
        }
    }
    Ok(SuiteResult::new("analytic/monotonicity", worst, 0.0))
}

/// optimal_mixing(n, delta) == optimal_mixing(n, n - delta), bitwise.
fn mixing_symmetry(max_n: u32) -> Result<SuiteResult> {
    let mut worst = 0.0f64;
    for n in 1..=max_n.min(20) {
        for delta in 0..=n {
            let a = optimal_mixing(n, delta)?;
            let b = optimal_mixing(n, n - delta)?;
            if a.to_bits() != b.to_bits() {
                worst = worst.max((a - b).abs().max(f64::MIN_POSITIVE));
            }
        }
    }
    Ok(SuiteResult::new("analytic/symmetry", worst, 0.0))
}

/// (T_theta)^t == T_{t theta} over random angles up to t = 100.
fn propagator_power_law() -> Result<SuiteResult> {
    let mut rng = StdRng::seed_from_u64(23);
    let mut worst = 0.0f64;
    for _ in 0..20 {
        let theta: f64 = rng.gen_range(1e-3..std::f64::consts::FRAC_PI_2);
        let step = two_level_propagator(theta, 1);
        let mut power = [[1.0f64, 0.0], [0.0, 1.0]];
        for t in 0..=100u64 {
            let direct = two_level_propagator(theta, t);
            for r in 0..2 {
                for c in 0..2 {
                    worst = worst.max((power[r][c] - direct[r][c]).abs());
                }
            }
            let mut next = [[0.0f64; 2]; 2];
            for r in 0..2 {
                for c in 0..2 {
                    next[r][c] = step[r][0] * power[0][c] + step[r][1] * power[1][c];
                }
            }
            power = next;
        }
    }
    Ok(SuiteResult::new("analytic/propagator-power", worst, 1e-10))
}

/// Squared residual norm outside span{prepared axis, target projection}
/// stays tiny at every iteration of every runner.
fn two_level_closure(max_n: u32, tol: f64) -> Result<SuiteResult> {
    let mut worst = 0.0f64;
    for n in 2..=max_n.min(10) {
        for delta in 0..=n {
            let k = (1u64 << delta) - 1;

            // plain Grover
            let plan = OscillationPlan::grover(n, delta)?;
            worst = worst.max(closure_residual(
                n,
                PolarAngle::standard(),
                TargetSpec::SingleIndex(k),
                plan.t_star,
            )?);

            // Grover-Plus
            let plan = OscillationPlan::grover_plus(n, delta)?;
            worst = worst.max(closure_residual(
                n,
                plan.zeta,
                TargetSpec::SingleIndex(k),
                plan.t_star,
            )?);

            // Dicke
            let plan = dicke_plan(n, delta)?;
            worst = worst.max(closure_residual(
                n,
                plan.zeta,
                TargetSpec::WeightClass(delta),
                plan.t_star,
            )?);
        }
    }
    Ok(SuiteResult::new("search/two-level-closure", worst, tol))
}

fn closure_residual(n: u32, zeta: PolarAngle, targets: TargetSpec, t_star: u64) -> Result<f64> {
    let mut axis = StateVector::basis(n, 0)?;
    axis.apply_single_qubit_all(&generalized_hadamard(zeta))?;

    // normalized projection of the axis onto the marked subspace
    let dim = axis.dim();
    let mut projected: Vec<Complex64> = (0..dim)
        .map(|i| {
            if targets.contains(i as u64) {
                axis.amplitude(i as u64)
            } else {
                Complex64::new(0.0, 0.0)
            }
        })
        .collect();
    let pnorm = projected.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
    if pnorm == 0.0 {
        return Ok(0.0);
    }
    for a in projected.iter_mut() {
        *a /= pnorm;
    }
    let target_dir = StateVector::from_amplitudes(n, projected)?;

    // Gram-Schmidt the axis against the target direction
    let overlap = target_dir.overlap(&axis)?;
    let gram: Vec<Complex64> = axis
        .amplitudes()
        .iter()
        .zip(target_dir.amplitudes())
        .map(|(a, t)| a - overlap * t)
        .collect();
    let gnorm = gram.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();

    let mut amp = Amplifier::new(axis.clone(), axis, targets)?;
    let mut worst = 0.0f64;
    for _ in 0..=t_star {
        let state = amp.state();
        let c1 = target_dir.overlap(state)?;
        let c2 = if gnorm > 1e-14 {
            gram.iter()
                .zip(state.amplitudes())
                .map(|(g, s)| g.conj() / gnorm * s)
                .sum::<Complex64>()
        } else {
            Complex64::new(0.0, 0.0)
        };
        // squared norm outside the span; taking a square root here would
        // just amplify rounding noise
        let residual_sq = 1.0 - c1.norm_sqr() - c2.norm_sqr();
        worst = worst.max(residual_sq.max(0.0));
        amp.step()?;
    }
    Ok(worst)
}

/// During Dicke preparation, amplitudes within every fixed weight class stay
/// equal (permutation invariance).
fn dicke_class_symmetry(max_n: u32) -> Result<SuiteResult> {
    let mut worst = 0.0f64;
    for n in 2..=max_n.min(10) {
        for delta in 0..=n {
            let plan = dicke_plan(n, delta)?;
            let mut axis = StateVector::basis(n, 0)?;
            axis.apply_single_qubit_all(&generalized_hadamard(plan.zeta))?;
            let mut amp = Amplifier::new(axis.clone(), axis, TargetSpec::WeightClass(delta))?;
            for _ in 0..=plan.t_star {
                let state = amp.state();
                for w in 0..=n {
                    let mut first: Option<Complex64> = None;
                    for idx in 0..state.dim() as u64 {
                        if idx.count_ones() != w {
                            continue;
                        }
                        match first {
                            None => first = Some(state.amplitude(idx)),
                            Some(f) => {
                                worst = worst.max((state.amplitude(idx) - f).norm());
                            }
                        }
                    }
                }
                amp.step()?;
            }
        }
    }
    Ok(SuiteResult::new("search/dicke-symmetry", worst, 1e-12))
}

/// Grover-Plus never queries more than Grover, strictly less at the extreme
/// weights. Analytic iteration counts only.
fn query_dominance() -> Result<SuiteResult> {
    let mut worst = 0.0f64;
    for n in 8..=16u32 {
        let grover_t = iteration_count(grover_mixing(n)?)?;
        for delta in 0..=n {
            let plus_t = iteration_count(optimal_mixing(n, delta)?)?;
            if 2 * delta != n && plus_t > grover_t {
                worst = worst.max((plus_t - grover_t) as f64);
            }
            let extreme = delta == 0 || delta == 1 || delta == n - 1 || delta == n;
            if extreme && plus_t >= grover_t {
                worst = worst.max(1.0);
            }
        }
    }
    Ok(SuiteResult::new("search/query-dominance", worst, 0.0))
}

/// Weight-1 query counts grow like sqrt(n): log-log fit exponent in
/// [0.4, 0.6] over n in {16, 36, 64, 100}.
fn sqrt_n_scaling() -> Result<SuiteResult> {
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    for n in [16u32, 36, 64, 100] {
        let t = iteration_count(optimal_mixing(n, 1)?)?;
        xs.push((n as f64).ln());
        ys.push((t as f64).ln());
    }
    let mx = xs.iter().sum::<f64>() / xs.len() as f64;
    let my = ys.iter().sum::<f64>() / ys.len() as f64;
    let num: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let den: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    let slope = num / den;
    let deviation = (slope - 0.5).abs();
    Ok(SuiteResult::new("search/sqrt-n-scaling", deviation, 0.1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_verify_passes_quickly() {
        let results = run_all(2, 1e-10).unwrap();
        assert!(all_pass(&results), "{results:?}");
    }

    #[test]
    fn medium_verify_passes() {
        let results = run_all(8, 1e-10).unwrap();
        for r in &results {
            assert!(r.pass, "{} deviated {:.3e}", r.name, r.max_deviation);
        }
    }
}
