//! Plain Grover search on a dense state vector, checked against the
//! closed-form success curve sin^2((2t+1) theta).

use grover_plus::analytic::predicted_success;
use grover_plus::search::{run_grover, verify_against_analytic};

fn main() {
    let n = 10;
    let target = 0b1011001110;

    let traj = run_grover(n, target).expect("valid target");
    let theta = traj.plan.theta();

    println!(
        "n = {n}, target = {target:#0width$b}",
        width = n as usize + 2
    );
    println!("theta = {theta:.6}, t* = {}", traj.plan.t_star());
    println!();
    println!("{:>4}  {:>12}  {:>12}", "t", "simulated", "closed form");
    for (t, p) in traj.success_by_iteration.iter().enumerate() {
        println!(
            "{t:>4}  {p:>12.9}  {:>12.9}",
            predicted_success(theta, t as u64)
        );
    }
    println!();
    println!("max deviation: {:.3e}", verify_against_analytic(&traj));
    println!("oracle queries: {}", traj.queries);
}
