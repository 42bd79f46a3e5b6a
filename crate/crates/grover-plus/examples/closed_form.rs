//! The tensor power of a generalized Hadamard has a fully closed-form
//! matrix element: a sign from the bitwise intersection and a cos/sin
//! power split by Hamming distance. This compares it entrywise against a
//! dense simulation.

use grover_plus::bitstring::{hamming_distance, intersection, BasisIndex};
use grover_plus::gates::{generalized_hadamard, hadamard_amplitude, PolarAngle};
use grover_plus::statevec::StateVector;

fn main() {
    let n = 4;
    let j = 0b0110;
    let zeta = PolarAngle::new(1.1).unwrap();

    let mut state = StateVector::basis(n, j).unwrap();
    state
        .apply_single_qubit_all(&generalized_hadamard(zeta))
        .unwrap();

    let jj = BasisIndex::new(j, n).unwrap();
    println!("H_zeta^(x){n} |{j:04b}>, zeta = {}", zeta.radians());
    println!(
        "{:>6}  {:>5}  {:>5}  {:>12}  {:>12}",
        "k", "dist", "inter", "simulated", "closed form"
    );
    let mut worst = 0.0f64;
    for k in 0..1u64 << n {
        let kk = BasisIndex::new(k, n).unwrap();
        let expect = hadamard_amplitude(n, zeta, j, k);
        let got = state.amplitude(k).re;
        worst = worst.max((got - expect).abs());
        println!(
            "{k:>6b}  {:>5}  {:>5}  {got:>12.8}  {expect:>12.8}",
            hamming_distance(jj, kk).unwrap(),
            intersection(jj, kk).unwrap(),
        );
    }
    println!("\nworst entry deviation: {worst:.3e}");
}
