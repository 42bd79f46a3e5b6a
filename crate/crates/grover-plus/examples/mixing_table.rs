//! The analytic layer in one table: optimal polar angle, mixing angle, and
//! iteration count per Hamming weight, plus the asymptotic regime of the
//! class mixing.

use grover_plus::analytic::{asymptotic_mixing, iteration_count, optimal_mixing, optimal_zeta};

fn main() {
    let n = 16;

    println!(
        "{:>3}  {:>10}  {:>12}  {:>6}  {:>12}",
        "d", "zeta", "theta", "t*", "regime"
    );
    for d in 0..=n {
        let zeta = optimal_zeta(n, d).unwrap();
        let theta = optimal_mixing(n, d).unwrap();
        let flips = d.min(n - d);
        let (_, regime) = asymptotic_mixing(n, flips);
        println!(
            "{d:>3}  {:>10.6}  {:>12.4e}  {:>6}  {:>12}",
            zeta.radians(),
            theta,
            iteration_count(theta).unwrap(),
            regime,
        );
    }
    println!("\nnote the exact symmetry of theta under d <-> n - d,");
    println!("and the t* peak at the balanced weight (the plain-Grover case).");
}
