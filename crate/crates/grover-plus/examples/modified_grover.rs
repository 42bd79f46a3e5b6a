//! The registry baseline: map a weight-d class onto the smallest n'-qubit
//! space holding it, then run plain Grover there. Its mixing angle trails
//! the class-aware one by roughly [2 pi d (1 - d/n)]^{1/4}.

use grover_plus::analytic::{mixing_ratio, registry_qubits};
use grover_plus::search::run_modified_grover;

fn main() {
    let n = 12;

    println!(
        "{:>3}  {:>4}  {:>9}  {:>12}  {:>12}",
        "d", "n'", "bracket", "ratio", "predicted"
    );
    for d in 1..n {
        let reg = registry_qubits(n, d).unwrap();
        let (actual, predicted) = mixing_ratio(n, d).unwrap();
        println!(
            "{d:>3}  {:>4}  {:>9}  {:>12.4}  {:>12.4}",
            reg.n_prime,
            if reg.bracket_feasible {
                "tight"
            } else {
                "loose"
            },
            actual,
            predicted,
        );
    }

    // the registry search itself is just Grover on n' qubits
    let traj = run_modified_grover(n, 2, 0).unwrap();
    println!(
        "\nregistry run at d = 2: {} queries, success {:.6}",
        traj.queries,
        traj.success_by_iteration.last().unwrap()
    );
}
