//! Dense `2^n`-amplitude state vectors and the primitive operations on them.
//!
//! Tensor gates are applied qubit-by-qubit over paired strided indices,
//! never by materializing a `2^n x 2^n` matrix: O(n 2^n) time, O(2^n)
//! memory. Probabilities are read exactly from amplitudes; there is no
//! sampling here.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::gates::{Gate2, TargetSpec, UNITARY_TOL};

/// Default qubit cap: 2^20 amplitudes, 16 MiB.
pub const DEFAULT_QUBIT_CAP: u32 = 20;
/// Hard ceiling regardless of configuration.
pub const MAX_QUBIT_CAP: u32 = 26;

/// An `n`-qubit pure state as a unit-norm vector of `2^n` complex amplitudes.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    n: u32,
    amps: Vec<Complex64>,
}

impl StateVector {
    /// The basis state `|j>` under the default qubit cap.
    pub fn basis(n: u32, j: u64) -> Result<Self> {
        Self::basis_with_cap(n, j, DEFAULT_QUBIT_CAP)
    }

    /// The basis state `|j>` under an explicit cap (itself capped at
    /// [`MAX_QUBIT_CAP`]).
    pub fn basis_with_cap(n: u32, j: u64, cap: u32) -> Result<Self> {
        if cap > MAX_QUBIT_CAP {
            return Err(Error::Domain(format!(
                "cap {cap} exceeds hard maximum {MAX_QUBIT_CAP}"
            )));
        }
        if n == 0 {
            return Err(Error::Domain("need at least one qubit".into()));
        }
        if n > cap {
            return Err(Error::ResourceCap { n, cap });
        }
        if j >> n != 0 {
            return Err(Error::Domain(format!(
                "basis index {j} does not fit in {n} qubits"
            )));
        }
        let mut amps = vec![Complex64::new(0.0, 0.0); 1usize << n];
        amps[j as usize] = Complex64::new(1.0, 0.0);
        Ok(Self { n, amps })
    }

    /// Builds a state from raw amplitudes; the vector must have length `2^n`
    /// and unit norm within 1e-10.
    pub fn from_amplitudes(n: u32, amps: Vec<Complex64>) -> Result<Self> {
        if n == 0 || n > MAX_QUBIT_CAP {
            return Err(Error::Domain(format!("bad qubit count {n}")));
        }
        if amps.len() != 1usize << n {
            return Err(Error::Domain(format!(
                "expected {} amplitudes, got {}",
                1usize << n,
                amps.len()
            )));
        }
        let state = Self { n, amps };
        if (state.norm() - 1.0).abs() > 1e-10 {
            return Err(Error::Domain(format!(
                "amplitudes are not normalized (norm = {})",
                state.norm()
            )));
        }
        Ok(state)
    }

    pub fn qubits(&self) -> u32 {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn amplitude(&self, k: u64) -> Complex64 {
        self.amps[k as usize]
    }

    pub fn norm(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Applies `gate` to every qubit (`G^{\otimes n}`), in place.
    pub fn apply_single_qubit_all(&mut self, gate: &Gate2) -> Result<()> {
        if !gate.is_unitary(UNITARY_TOL) {
            return Err(Error::Domain(format!(
                "gate is not unitary (defect = {:.3e})",
                gate.unitarity_defect()
            )));
        }
        for q in 0..self.n {
            self.apply_single_qubit(gate, q);
        }
        Ok(())
    }

    /// Applies `gate` to qubit `q` over paired strided indices.
    fn apply_single_qubit(&mut self, gate: &Gate2, q: u32) {
        let g = gate.0;
        let stride = 1usize << q;
        let dim = self.amps.len();
        let mut base = 0usize;
        while base < dim {
            for lo in base..base + stride {
                let hi = lo + stride;
                let a = self.amps[lo];
                let b = self.amps[hi];
                self.amps[lo] = g[0][0] * a + g[0][1] * b;
                self.amps[hi] = g[1][0] * a + g[1][1] * b;
            }
            base += stride << 1;
        }
    }

    /// Inner product `<self|other>` (conjugation on `self`).
    pub fn overlap(&self, other: &StateVector) -> Result<Complex64> {
        if self.n != other.n {
            return Err(Error::QubitMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(self
            .amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    /// Total probability carried by the marked states.
    pub fn probability_of(&self, targets: &TargetSpec) -> Result<f64> {
        targets.validate(self.n)?;
        match *targets {
            TargetSpec::SingleIndex(k) => Ok(self.amps[k as usize].norm_sqr()),
            TargetSpec::WeightClass(delta) => Ok(self
                .amps
                .iter()
                .enumerate()
                .filter(|(idx, _)| (*idx as u64).count_ones() == delta)
                .map(|(_, a)| a.norm_sqr())
                .sum()),
        }
    }

    pub(crate) fn negate_amplitude(&mut self, idx: usize) {
        self.amps[idx] = -self.amps[idx];
    }

    pub(crate) fn negate_where(&mut self, marked: impl Fn(usize) -> bool) {
        for (idx, a) in self.amps.iter_mut().enumerate() {
            if marked(idx) {
                *a = -*a;
            }
        }
    }

    /// `self <- coeff * other + scale * self`, used by reflections.
    pub(crate) fn combine(&mut self, coeff: Complex64, other: &StateVector, scale: f64) {
        for (a, b) in self.amps.iter_mut().zip(&other.amps) {
            *a = coeff * b + scale * *a;
        }
    }

    #[cfg(test)]
    pub(crate) fn scale(&mut self, factor: f64) {
        for a in self.amps.iter_mut() {
            *a *= factor;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gates::{generalized_hadamard, PolarAngle};
    use std::f64::consts::FRAC_PI_3;

    fn assert_close(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() <= tol, "{a} vs {b}");
    }

    #[test]
    fn basis_states() {
        let s = StateVector::basis(2, 0).unwrap();
        assert_eq!(s.amplitude(0), Complex64::new(1.0, 0.0));
        assert_eq!(s.amplitude(3), Complex64::new(0.0, 0.0));

        let s = StateVector::basis(1, 1).unwrap();
        assert_eq!(s.amplitude(1), Complex64::new(1.0, 0.0));

        let s = StateVector::basis(3, 5).unwrap();
        assert_eq!(s.amplitude(5), Complex64::new(1.0, 0.0));
        assert_close(s.norm(), 1.0, 0.0);
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            StateVector::basis(21, 0),
            Err(Error::ResourceCap { n: 21, cap: 20 })
        ));
        assert!(StateVector::basis_with_cap(21, 0, 22).is_ok());
        assert!(StateVector::basis_with_cap(10, 0, 27).is_err());
    }

    #[test]
    fn uniform_superposition_amplitudes() {
        let n = 6;
        let mut s = StateVector::basis(n, 0).unwrap();
        s.apply_single_qubit_all(&generalized_hadamard(PolarAngle::standard()))
            .unwrap();
        let expect = 0.5f64.powi(n as i32).sqrt();
        for a in s.amplitudes() {
            assert_close(a.re, expect, 1e-14);
            assert_eq!(a.im, 0.0);
        }
    }

    #[test]
    fn identity_gate_is_a_noop() {
        let mut s = StateVector::basis(4, 9).unwrap();
        s.apply_single_qubit_all(&generalized_hadamard(PolarAngle::new(0.4).unwrap()))
            .unwrap();
        let before = s.clone();
        s.apply_single_qubit_all(&Gate2::identity()).unwrap();
        assert_eq!(s.amplitudes(), before.amplitudes());
    }

    #[test]
    fn non_unitary_gate_is_rejected() {
        let mut s = StateVector::basis(2, 0).unwrap();
        let g = Gate2::from_real([[1.0, 0.0], [0.0, 0.5]]);
        assert!(s.apply_single_qubit_all(&g).is_err());
    }

    // oracle: explicit 4x4 tensor-product matrix multiply at zeta = pi/3
    #[test]
    fn biased_hadamard_on_two_qubits_matches_dense_matrix() {
        let zeta = PolarAngle::new(FRAC_PI_3).unwrap();
        let g = generalized_hadamard(zeta).0;
        let mut s = StateVector::basis(2, 0).unwrap();
        s.apply_single_qubit_all(&generalized_hadamard(zeta))
            .unwrap();
        for k in 0..4usize {
            let expect = (g[k >> 1][0] * g[k & 1][0]).re;
            assert_close(s.amplitudes()[k].re, expect, 1e-15);
        }
    }

    #[test]
    fn overlap_basics() {
        let n = 5;
        let mut s = StateVector::basis(n, 0).unwrap();
        s.apply_single_qubit_all(&generalized_hadamard(PolarAngle::standard()))
            .unwrap();
        assert_close(s.overlap(&s).unwrap().re, 1.0, 1e-14);

        let zero = StateVector::basis(1, 0).unwrap();
        let one = StateVector::basis(1, 1).unwrap();
        assert_eq!(zero.overlap(&one).unwrap(), Complex64::new(0.0, 0.0));

        // <k | H^n |0> = 2^{-n/2}
        let k = StateVector::basis(n, 19).unwrap();
        assert_close(
            k.overlap(&s).unwrap().re,
            0.5f64.powi(n as i32).sqrt(),
            1e-14,
        );
    }

    #[test]
    fn overlap_rejects_mismatched_sizes() {
        let a = StateVector::basis(2, 0).unwrap();
        let b = StateVector::basis(3, 0).unwrap();
        assert!(a.overlap(&b).is_err());
    }

    #[test]
    fn probabilities() {
        let n = 4;
        let mut s = StateVector::basis(n, 0).unwrap();
        s.apply_single_qubit_all(&generalized_hadamard(PolarAngle::standard()))
            .unwrap();
        assert_close(
            s.probability_of(&TargetSpec::SingleIndex(7)).unwrap(),
            0.5f64.powi(n as i32),
            1e-14,
        );
        let total: f64 = (0..=n)
            .map(|d| s.probability_of(&TargetSpec::WeightClass(d)).unwrap())
            .sum();
        assert_close(total, 1.0, 1e-12);
    }

    // weight-1 class of H_zeta^4 |0> at the Delta = 1 optimum: 4 * 27/256
    #[test]
    fn weight_class_probability_closed_form() {
        let zeta = PolarAngle::new(FRAC_PI_3).unwrap();
        let mut s = StateVector::basis(4, 0).unwrap();
        s.apply_single_qubit_all(&generalized_hadamard(zeta))
            .unwrap();
        assert_close(
            s.probability_of(&TargetSpec::WeightClass(1)).unwrap(),
            4.0 * 27.0 / 256.0,
            1e-14,
        );
    }

    #[test]
    fn empty_target_class_is_rejected() {
        let s = StateVector::basis(3, 0).unwrap();
        assert!(s.probability_of(&TargetSpec::WeightClass(9)).is_err());
        assert!(s.probability_of(&TargetSpec::SingleIndex(8)).is_err());
    }

    #[test]
    fn involutory_gate_applied_twice_restores_state() {
        let zeta = PolarAngle::new(1.31).unwrap();
        let g = generalized_hadamard(zeta);
        let mut s = StateVector::basis(6, 37).unwrap();
        s.apply_single_qubit_all(&generalized_hadamard(PolarAngle::new(0.8).unwrap()))
            .unwrap();
        let before = s.clone();
        s.apply_single_qubit_all(&g).unwrap();
        s.apply_single_qubit_all(&g).unwrap();
        for (x, y) in s.amplitudes().iter().zip(before.amplitudes()) {
            assert_close(x.re, y.re, 1e-12);
            assert_close(x.im, y.im, 1e-12);
        }
    }
}
