//! Amplitude amplification is a rotation, so success oscillates; running
//! past t* undoes the work. Record a few extra iterations to watch the
//! probability come back down.

use grover_plus::search::{run_grover_with, RunOptions};

fn main() {
    let n = 8;
    let opts = RunOptions {
        extra_iterations: 12,
        ..Default::default()
    };
    let traj = run_grover_with(n, 0, &opts).unwrap();
    let t_star = traj.plan.t_star();

    println!("n = {n}, t* = {t_star}");
    for (t, p) in traj.success_by_iteration.iter().enumerate() {
        let bar = "#".repeat((p * 60.0).round() as usize);
        let mark = if t as u64 == t_star { " <- t*" } else { "" };
        println!("{t:>3} {p:>9.6} {bar}{mark}");
    }
}
