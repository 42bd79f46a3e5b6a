//! End-to-end runners: Grover, Grover-Plus, Dicke preparation, and the
//! modified-Grover working-registry baseline. Every runner records the
//! per-iteration success probability, so a trajectory can be checked against
//! the two-level oscillation model after the fact.

use num_complex::Complex64;

use crate::analytic::{
    self, dicke_plan, iteration_count_floor, registry_qubits, DickePlan, OscillationPlan,
};
use crate::bitstring::binomial;
use crate::error::{Error, Result};
use crate::gates::{
    apply_base_shift, apply_phase_oracle, apply_reflection_about, generalized_hadamard, PolarAngle,
    TargetSpec,
};
use crate::statevec::{StateVector, DEFAULT_QUBIT_CAP};

/// Analytic plan attached to a trajectory.
#[derive(Debug, Clone, PartialEq)]
pub enum Plan {
    Oscillation(OscillationPlan),
    Dicke(DickePlan),
    /// Modified Grover: a plain-Grover plan on the `n'`-qubit registry.
    Registry {
        plan: OscillationPlan,
        original_n: u32,
        n_prime: u32,
        bracket_feasible: bool,
    },
}

impl Plan {
    pub fn theta(&self) -> f64 {
        match self {
            Plan::Oscillation(p) => p.theta,
            Plan::Dicke(p) => p.theta,
            Plan::Registry { plan, .. } => plan.theta,
        }
    }

    pub fn t_star(&self) -> u64 {
        match self {
            Plan::Oscillation(p) => p.t_star,
            Plan::Dicke(p) => p.t_star,
            Plan::Registry { plan, .. } => plan.t_star,
        }
    }

    pub fn predicted_success(&self) -> f64 {
        match self {
            Plan::Oscillation(p) => p.predicted_success,
            Plan::Dicke(p) => p.predicted_success,
            Plan::Registry { plan, .. } => plan.predicted_success,
        }
    }
}

/// One recorded run: success probabilities by iteration (index `t`), the
/// oracle query count, and the fidelity with the analytic target state.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    pub plan: Plan,
    pub success_by_iteration: Vec<f64>,
    pub queries: u64,
    pub final_state_overlap: f64,
}

/// How many oracle iterations a runner performs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum IterationMode {
    /// Best of the floor/ceil bracket.
    #[default]
    Auto,
    /// The bare floor convention.
    PaperFloor,
    /// An explicit override.
    Fixed(u64),
}

/// Runner knobs; `Default` gives the standard pipeline at the default cap.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RunOptions {
    pub cap: u32,
    pub iterations: IterationMode,
    /// Iterations to record past the stopping point, to exhibit the decline
    /// of the oscillation. Not counted in `t_star`.
    pub extra_iterations: u64,
    /// Prepare `H_zeta^n |0>` directly instead of shifting from the uniform
    /// state. Same trajectory, one tensor pass instead of three.
    pub direct_prepare: bool,
}

impl Default for RunOptions {
    fn default() -> Self {
        Self {
            cap: DEFAULT_QUBIT_CAP,
            iterations: IterationMode::Auto,
            extra_iterations: 0,
            direct_prepare: false,
        }
    }
}

impl RunOptions {
    fn resolve_iterations(&self, auto: u64, theta: f64) -> Result<u64> {
        Ok(match self.iterations {
            IterationMode::Auto => auto,
            IterationMode::PaperFloor => iteration_count_floor(theta)?,
            IterationMode::Fixed(t) => t,
        })
    }
}

/// One amplitude-amplification loop: phase oracle on the marked states, then
/// reflection about the prepared axis. Exposes the evolving state so callers
/// can observe invariants mid-run.
pub struct Amplifier {
    state: StateVector,
    axis: StateVector,
    targets: TargetSpec,
}

impl Amplifier {
    pub fn new(state: StateVector, axis: StateVector, targets: TargetSpec) -> Result<Self> {
        targets.validate(state.qubits())?;
        if state.qubits() != axis.qubits() {
            return Err(Error::QubitMismatch {
                left: state.qubits(),
                right: axis.qubits(),
            });
        }
        Ok(Self {
            state,
            axis,
            targets,
        })
    }

    pub fn step(&mut self) -> Result<()> {
        apply_phase_oracle(&mut self.state, &self.targets)?;
        apply_reflection_about(&mut self.state, &self.axis)
    }

    pub fn success(&self) -> f64 {
        self.state
            .probability_of(&self.targets)
            .expect("targets validated at construction")
    }

    pub fn state(&self) -> &StateVector {
        &self.state
    }

    pub fn axis(&self) -> &StateVector {
        &self.axis
    }

    fn run(&mut self, t_star: u64, extra: u64) -> Result<Vec<f64>> {
        let total = t_star + extra;
        let mut success = Vec::with_capacity(total as usize + 1);
        success.push(self.success());
        for _ in 0..total {
            self.step()?;
            success.push(self.success());
        }
        Ok(success)
    }
}

fn prepared_state(n: u32, zeta: PolarAngle, opts: &RunOptions) -> Result<StateVector> {
    let mut state = StateVector::basis_with_cap(n, 0, opts.cap)?;
    if opts.direct_prepare {
        state.apply_single_qubit_all(&generalized_hadamard(zeta))?;
    } else {
        // the pipeline as stated: uniform superposition, then base-shift
        state.apply_single_qubit_all(&generalized_hadamard(PolarAngle::standard()))?;
        apply_base_shift(&mut state, PolarAngle::standard(), zeta)?;
    }
    Ok(state)
}

/// Plain Grover for a single target index.
pub fn run_grover(n: u32, k: u64) -> Result<Trajectory> {
    run_grover_with(n, k, &RunOptions::default())
}

pub fn run_grover_with(n: u32, k: u64, opts: &RunOptions) -> Result<Trajectory> {
    let plan = OscillationPlan::grover(n, k.count_ones())?;
    let axis = prepared_state(n, PolarAngle::standard(), opts)?;
    let targets = TargetSpec::SingleIndex(k);
    let mut amp = Amplifier::new(axis.clone(), axis, targets)?;
    let t = opts.resolve_iterations(plan.t_star, plan.theta)?;
    let success = amp.run(t, opts.extra_iterations)?;
    let final_state_overlap = amp.state().probability_of(&targets)?;
    Ok(Trajectory {
        plan: Plan::Oscillation(OscillationPlan { t_star: t, ..plan }),
        success_by_iteration: success,
        queries: t + opts.extra_iterations,
        final_state_overlap,
    })
}

/// Grover-Plus: base-shift to the optimal polar angle for the target's
/// Hamming weight, then oscillate.
pub fn run_grover_plus(n: u32, k: u64) -> Result<Trajectory> {
    run_grover_plus_with(n, k, &RunOptions::default())
}

pub fn run_grover_plus_with(n: u32, k: u64, opts: &RunOptions) -> Result<Trajectory> {
    let delta = k.count_ones();
    let plan = OscillationPlan::grover_plus(n, delta)?;
    let axis = prepared_state(n, plan.zeta, opts)?;
    let targets = TargetSpec::SingleIndex(k);
    let mut amp = Amplifier::new(axis.clone(), axis, targets)?;
    let t = opts.resolve_iterations(plan.t_star, plan.theta)?;
    let success = amp.run(t, opts.extra_iterations)?;
    let final_state_overlap = amp.state().probability_of(&targets)?;
    Ok(Trajectory {
        plan: Plan::Oscillation(OscillationPlan { t_star: t, ..plan }),
        success_by_iteration: success,
        queries: t + opts.extra_iterations,
        final_state_overlap,
    })
}

/// Dicke preparation: Grover-Plus with the whole weight class marked.
pub fn run_dicke(n: u32, delta: u32) -> Result<Trajectory> {
    run_dicke_with(n, delta, &RunOptions::default())
}

pub fn run_dicke_with(n: u32, delta: u32, opts: &RunOptions) -> Result<Trajectory> {
    let plan = dicke_plan(n, delta)?;
    let axis = prepared_state(n, plan.zeta, opts)?;
    let targets = TargetSpec::WeightClass(delta);
    let mut amp = Amplifier::new(axis.clone(), axis, targets)?;
    let t = opts.resolve_iterations(plan.t_star, plan.theta)?;
    let success = amp.run(t, opts.extra_iterations)?;
    let dicke = dicke_state(n, delta)?;
    let final_state_overlap = dicke.overlap(amp.state())?.norm_sqr();
    Ok(Trajectory {
        plan: Plan::Dicke(DickePlan { t_star: t, ..plan }),
        success_by_iteration: success,
        queries: t + opts.extra_iterations,
        final_state_overlap,
    })
}

/// The exact Dicke state `|D^n_delta>`: uniform amplitudes over the
/// weight-`delta` class.
pub fn dicke_state(n: u32, delta: u32) -> Result<StateVector> {
    if delta > n {
        return Err(Error::Domain(format!("weight {delta} > {n} qubits")));
    }
    let class = binomial(n, delta)? as f64;
    let amp = (1.0 / class).sqrt();
    let amps = (0..1u64 << n)
        .map(|k| {
            if k.count_ones() == delta {
                Complex64::new(amp, 0.0)
            } else {
                Complex64::new(0.0, 0.0)
            }
        })
        .collect();
    StateVector::from_amplitudes(n, amps)
}

/// Modified Grover: plain Grover on the `n'`-qubit working registry onto
/// which the weight-`delta` class is mapped. `k_prime` addresses a mapped
/// class member, so it must lie below `C(n, delta)`; padding indices are
/// never marked.
pub fn run_modified_grover(n: u32, delta: u32, k_prime: u64) -> Result<Trajectory> {
    run_modified_grover_with(n, delta, k_prime, &RunOptions::default())
}

pub fn run_modified_grover_with(
    n: u32,
    delta: u32,
    k_prime: u64,
    opts: &RunOptions,
) -> Result<Trajectory> {
    if delta == 0 || delta >= n {
        return Err(Error::Domain(format!(
            "modified Grover needs 0 < weight < n, got {delta} on {n} qubits"
        )));
    }
    let reg = registry_qubits(n, delta)?;
    let class = binomial(n, delta)?;
    if k_prime as u128 >= class {
        return Err(Error::Domain(format!(
            "registry target {k_prime} outside the mapped class of size {class}"
        )));
    }
    let plan = OscillationPlan::grover(reg.n_prime, k_prime.count_ones())?;
    let axis = prepared_state(reg.n_prime, PolarAngle::standard(), opts)?;
    let targets = TargetSpec::SingleIndex(k_prime);
    let mut amp = Amplifier::new(axis.clone(), axis, targets)?;
    let t = opts.resolve_iterations(plan.t_star, plan.theta)?;
    let success = amp.run(t, opts.extra_iterations)?;
    let final_state_overlap = amp.state().probability_of(&targets)?;
    Ok(Trajectory {
        plan: Plan::Registry {
            plan: OscillationPlan { t_star: t, ..plan },
            original_n: n,
            n_prime: reg.n_prime,
            bracket_feasible: reg.bracket_feasible,
        },
        success_by_iteration: success,
        queries: t + opts.extra_iterations,
        final_state_overlap,
    })
}

/// Maximum deviation of the recorded trajectory from the closed-form
/// prediction `sin^2((2t+1) theta)` at the plan's exact mixing angle.
pub fn verify_against_analytic(traj: &Trajectory) -> f64 {
    let theta = traj.plan.theta();
    traj.success_by_iteration
        .iter()
        .enumerate()
        .map(|(t, p)| (p - analytic::predicted_success(theta, t as u64)).abs())
        .fold(0.0, f64::max)
}
