//! The operators of the search pipeline: the generalized (biased) Hadamard
//! `H_zeta`, phase oracles, reflections, the base-shift, and the closed-form
//! amplitudes of `H_zeta^{\otimes n} |j>`.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::statevec::StateVector;

/// Tolerance for the unitarity check on user-supplied 2x2 gates.
pub const UNITARY_TOL: f64 = 1e-12;

/// The set of marked basis states: a single index or a whole
/// Hamming-weight class.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TargetSpec {
    SingleIndex(u64),
    WeightClass(u32),
}

impl TargetSpec {
    /// True if basis index `idx` is marked.
    pub fn contains(&self, idx: u64) -> bool {
        match *self {
            TargetSpec::SingleIndex(k) => idx == k,
            TargetSpec::WeightClass(delta) => idx.count_ones() == delta,
        }
    }

    /// Number of marked states in an `n`-qubit register.
    pub fn count(&self, n: u32) -> u128 {
        match *self {
            TargetSpec::SingleIndex(_) => 1,
            TargetSpec::WeightClass(delta) => crate::bitstring::binomial(n, delta).unwrap_or(0),
        }
    }

    /// Checks that the spec denotes a non-empty set of valid indices.
    pub fn validate(&self, n: u32) -> Result<()> {
        match *self {
            TargetSpec::SingleIndex(k) => {
                if n < 64 && k >> n != 0 {
                    return Err(Error::Domain(format!(
                        "target index {k} does not fit in {n} qubits"
                    )));
                }
            }
            TargetSpec::WeightClass(delta) => {
                if delta > n {
                    return Err(Error::Domain(format!(
                        "weight class {delta} is empty on {n} qubits"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Polar rotation angle `zeta` of the biased Hadamard, restricted to `[0, pi]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolarAngle(f64);

impl PolarAngle {
    pub fn new(radians: f64) -> Result<Self> {
        if !(0.0..=std::f64::consts::PI).contains(&radians) {
            return Err(Error::Domain(format!(
                "polar angle {radians} outside [0, pi]"
            )));
        }
        Ok(Self(radians))
    }

    /// The unbiased case `zeta = pi/2` (standard Hadamard).
    pub fn standard() -> Self {
        Self(std::f64::consts::FRAC_PI_2)
    }

    pub fn radians(self) -> f64 {
        self.0
    }
}

/// A single-qubit gate as a dense 2x2 complex matrix, row major.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Gate2(pub [[Complex64; 2]; 2]);

impl Gate2 {
    pub fn identity() -> Self {
        Gate2([
            [Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)],
            [Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)],
        ])
    }

    pub fn from_real(m: [[f64; 2]; 2]) -> Self {
        Gate2([
            [Complex64::new(m[0][0], 0.0), Complex64::new(m[0][1], 0.0)],
            [Complex64::new(m[1][0], 0.0), Complex64::new(m[1][1], 0.0)],
        ])
    }

    /// Max elementwise deviation of `G G^dagger` from the identity.
    pub fn unitarity_defect(&self) -> f64 {
        let g = &self.0;
        let mut worst = 0.0f64;
        for r in 0..2 {
            for c in 0..2 {
                let dot = g[r][0] * g[c][0].conj() + g[r][1] * g[c][1].conj();
                let expect = if r == c { 1.0 } else { 0.0 };
                worst = worst.max((dot - expect).norm());
            }
        }
        worst
    }

    pub fn is_unitary(&self, tol: f64) -> bool {
        self.unitarity_defect() <= tol
    }
}

/// The biased Hadamard `H_zeta = sigma_z cos(zeta/2) + sigma_x sin(zeta/2)`:
/// `[[cos zeta/2, sin zeta/2], [sin zeta/2, -cos zeta/2]]`. Involutory for
/// every `zeta`; `zeta = pi/2` recovers the standard Hadamard.
pub fn generalized_hadamard(zeta: PolarAngle) -> Gate2 {
    let half = zeta.radians() / 2.0;
    let (s, c) = (half.sin(), half.cos());
    Gate2::from_real([[c, s], [s, -c]])
}

/// Closed-form amplitude `<k| H_zeta^{\otimes n} |j>`:
/// `(-1)^{I_{j,k}} (cos zeta/2)^{n - d} (sin zeta/2)^{d}` where `d` is
/// the Hamming distance between `j` and `k` and `I_{j,k}` their intersection.
pub fn hadamard_amplitude(n: u32, zeta: PolarAngle, j: u64, k: u64) -> f64 {
    debug_assert!(n >= 64 || (j >> n == 0 && k >> n == 0));
    let d = (j ^ k).count_ones();
    let sign = if (j & k).count_ones().is_multiple_of(2) {
        1.0
    } else {
        -1.0
    };
    let half = zeta.radians() / 2.0;
    sign * half.cos().powi((n - d) as i32) * half.sin().powi(d as i32)
}

/// Flips the sign of every marked amplitude. Norm is preserved exactly and
/// the map is an involution.
pub fn apply_phase_oracle(state: &mut StateVector, targets: &TargetSpec) -> Result<()> {
    targets.validate(state.qubits())?;
    match *targets {
        TargetSpec::SingleIndex(k) => state.negate_amplitude(k as usize),
        TargetSpec::WeightClass(delta) => {
            state.negate_where(|idx| (idx as u64).count_ones() == delta)
        }
    }
    Ok(())
}

/// Reflection `2 |a><a| - 1` about a normalized axis state.
pub fn apply_reflection_about(state: &mut StateVector, axis: &StateVector) -> Result<()> {
    if (axis.norm() - 1.0).abs() > 1e-10 {
        return Err(Error::Domain(format!(
            "reflection axis is not normalized (norm = {})",
            axis.norm()
        )));
    }
    let coeff = 2.0 * axis.overlap(state)?;
    state.combine(coeff, axis, -1.0);
    Ok(())
}

/// The base-shift `H_to^{\otimes n} H_from^{\otimes n}`: maps the prepared
/// state of polar angle `from` onto the prepared state of `to`. When the two
/// angles are bit-identical the shift is the identity and is skipped, so a
/// no-op shift leaves the state untouched exactly.
pub fn apply_base_shift(state: &mut StateVector, from: PolarAngle, to: PolarAngle) -> Result<()> {
    if from.radians() == to.radians() {
        return Ok(());
    }
    state.apply_single_qubit_all(&generalized_hadamard(from))?;
    state.apply_single_qubit_all(&generalized_hadamard(to))
}
