//! Amplifying an entire Hamming-weight class produces a Dicke state: the
//! equal-amplitude superposition of all weight-d basis states. The class
//! mixing angle scales the single-target one by binomial(n, d).

use grover_plus::analytic::dicke_plan;
use grover_plus::bitstring::binomial;
use grover_plus::search::{dicke_state, run_dicke};

fn main() {
    let n = 8;

    println!(
        "{:>3}  {:>10}  {:>12}  {:>12}  {:>4}  {:>10}",
        "d", "class size", "sin^2 class", "Stirling", "t*", "fidelity"
    );
    for d in 0..=n {
        let plan = dicke_plan(n, d).unwrap();
        let traj = run_dicke(n, d).unwrap();
        println!(
            "{d:>3}  {:>10}  {:>12.6}  {:>12}  {:>4}  {:>10.6}",
            binomial(n, d).unwrap(),
            plan.sin2_theta,
            plan.sin2_theta_stirling
                .map_or("-".into(), |s| format!("{s:.6}")),
            plan.t_star,
            traj.final_state_overlap,
        );
    }

    // the prepared state really is equal-amplitude over the class
    let d = 3;
    let dicke = dicke_state(n, d).unwrap();
    let amp = dicke.amplitude((1 << d) - 1);
    println!(
        "\n|D^{n}_{d}> amplitude per class member: {:.6} (expect {:.6})",
        amp.re,
        (1.0 / binomial(n, d).unwrap() as f64).sqrt()
    );
}
