//! Closed-form oscillation model: mixing angles, the optimal polar angle,
//! iteration counts, success predictions, asymptotics, and the Dicke /
//! working-registry quantities.

use std::f64::consts::{FRAC_PI_2, PI};

use crate::bitstring::binomial;
use crate::error::{Error, Result};
use crate::gates::PolarAngle;

/// The analytic prescription for one search instance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OscillationPlan {
    pub n: u32,
    /// Hamming weight of the target (informational for plain Grover).
    pub delta: u32,
    pub zeta: PolarAngle,
    /// Mixing angle, in (0, pi/2].
    pub theta: f64,
    pub t_star: u64,
    pub predicted_success: f64,
}

impl OscillationPlan {
    /// Plain Grover: unbiased polar angle, mixing `arcsin(2^{-n/2})`.
    pub fn grover(n: u32, delta: u32) -> Result<Self> {
        let theta = grover_mixing(n)?;
        let t_star = iteration_count(theta)?;
        Ok(Self {
            n,
            delta,
            zeta: PolarAngle::standard(),
            theta,
            t_star,
            predicted_success: predicted_success(theta, t_star),
        })
    }

    /// Grover-Plus for a target of Hamming weight `delta`.
    pub fn grover_plus(n: u32, delta: u32) -> Result<Self> {
        let zeta = optimal_zeta(n, delta)?;
        let theta = optimal_mixing(n, delta)?;
        let t_star = iteration_count(theta)?;
        Ok(Self {
            n,
            delta,
            zeta,
            theta,
            t_star,
            predicted_success: predicted_success(theta, t_star),
        })
    }
}

/// The analytic prescription for preparing a Dicke state of weight `delta`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DickePlan {
    pub n: u32,
    pub delta: u32,
    pub zeta: PolarAngle,
    /// Collective mixing: `sin^2 theta = C(n, delta) sin^2 theta_delta`.
    pub sin2_theta: f64,
    pub theta: f64,
    /// Stirling approximation of `sin2_theta`; absent at delta in {0, n}.
    pub sin2_theta_stirling: Option<f64>,
    pub t_star: u64,
    pub predicted_success: f64,
}

/// Base mixing of plain Grover: `arcsin(2^{-n/2})`.
pub fn grover_mixing(n: u32) -> Result<f64> {
    if n == 0 {
        return Err(Error::Domain("need at least one qubit".into()));
    }
    Ok(0.5f64.powi(n as i32).sqrt().asin())
}

/// The class-mixing weight `sin^2 theta_delta(zeta) =
/// (cos zeta/2)^{2(n-delta)} (sin zeta/2)^{2 delta}` at an arbitrary polar
/// angle.
pub fn mixing_sin2_at(n: u32, delta: u32, zeta: PolarAngle) -> f64 {
    let half = zeta.radians() / 2.0;
    half.cos().powi(2 * (n - delta) as i32) * half.sin().powi(2 * delta as i32)
}

/// Optimal polar angle: `sin^2(zeta/2) = delta / n`. Exactly `pi/2` at
/// `delta = n/2`, `0` at `delta = 0` and `pi` at `delta = n`.
pub fn optimal_zeta(n: u32, delta: u32) -> Result<PolarAngle> {
    if delta > n {
        return Err(Error::Domain(format!("weight {delta} > {n} qubits")));
    }
    // snap the balanced case so Grover-Plus degenerates to Grover bit-for-bit
    if 2 * delta == n {
        return PolarAngle::new(FRAC_PI_2);
    }
    let ratio = delta as f64 / n as f64;
    PolarAngle::new(2.0 * ratio.sqrt().asin())
}

/// Optimal mixing angle: `sin^2 theta = (d/n)^d (1 - d/n)^{n-d}` with the
/// `0^0 = 1` convention at `d` in `{0, n}`.
pub fn optimal_mixing(n: u32, delta: u32) -> Result<f64> {
    if delta > n {
        return Err(Error::Domain(format!("weight {delta} > {n} qubits")));
    }
    // both ratios come straight from the integers so the expression is
    // bitwise symmetric under delta <-> n - delta
    let p = delta as f64 / n as f64;
    let q = (n - delta) as f64 / n as f64;
    let sin2 = p.powi(delta as i32) * q.powi((n - delta) as i32);
    Ok(sin2.sqrt().asin())
}

/// Best iteration count over the floor/ceil bracket of `(pi/theta - 2)/4`,
/// ties broken toward the smaller count.
pub fn iteration_count(theta: f64) -> Result<u64> {
    check_mixing_angle(theta)?;
    let x = (PI / theta - 2.0) / 4.0;
    let lo = x.floor().max(0.0) as u64;
    let hi = x.ceil().max(0.0) as u64;
    if predicted_success(theta, hi) > predicted_success(theta, lo) {
        Ok(hi)
    } else {
        Ok(lo)
    }
}

/// The bare floor `max(0, floor((pi/theta - 2)/4))`, kept for comparisons
/// against the simple convention; can be one short of the best count.
pub fn iteration_count_floor(theta: f64) -> Result<u64> {
    check_mixing_angle(theta)?;
    Ok(((PI / theta - 2.0) / 4.0).floor().max(0.0) as u64)
}

fn check_mixing_angle(theta: f64) -> Result<()> {
    if !(theta > 0.0 && theta <= FRAC_PI_2) {
        return Err(Error::Domain(format!(
            "mixing angle {theta} outside (0, pi/2]"
        )));
    }
    Ok(())
}

/// Success probability after `t` oscillation cycles: `sin^2((2t+1) theta)`.
pub fn predicted_success(theta: f64, t: u64) -> f64 {
    ((2 * t + 1) as f64 * theta).sin().powi(2)
}

/// The two-level propagator after `t` cycles: a plane rotation by `2 t theta`.
/// The power law holds exactly: the `t`-th power of the single-step rotation
/// is the single rotation by `t theta`.
pub fn two_level_propagator(theta: f64, t: u64) -> [[f64; 2]; 2] {
    let phi = 2.0 * t as f64 * theta;
    let (s, c) = phi.sin_cos();
    [[c, -s], [s, c]]
}

/// Asymptotic regime of the mixing hierarchy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MixingRegime {
    /// `delta << n/2`: mixing of order `(delta/n)^{delta/2}`.
    SmallDelta,
    /// `delta ~ n/2`: mixing of order `(delta/n)^{delta}`.
    NearHalf,
}

impl std::fmt::Display for MixingRegime {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            MixingRegime::SmallDelta => write!(f, "small-delta"),
            MixingRegime::NearHalf => write!(f, "near-half"),
        }
    }
}

/// Order-of-magnitude estimate of the mixing angle from `delta =
/// min(weight, n - weight)`. The regime boundary is set at `delta = n/4`.
pub fn asymptotic_mixing(n: u32, delta: u32) -> (f64, MixingRegime) {
    let ratio = delta as f64 / n as f64;
    if 4 * delta <= n {
        (ratio.powf(delta as f64 / 2.0), MixingRegime::SmallDelta)
    } else {
        (ratio.powi(delta as i32), MixingRegime::NearHalf)
    }
}

/// Collective plan for preparing the Dicke state `|D^n_delta>`.
pub fn dicke_plan(n: u32, delta: u32) -> Result<DickePlan> {
    let zeta = optimal_zeta(n, delta)?;
    let theta_single = optimal_mixing(n, delta)?;
    let sin2_single = theta_single.sin().powi(2);
    let class = binomial(n, delta)? as f64;
    let sin2_theta = (class * sin2_single).min(1.0);
    let theta = sin2_theta.sqrt().asin();
    let sin2_theta_stirling = if delta == 0 || delta == n {
        None
    } else {
        let d = delta as f64;
        Some(1.0 / (2.0 * PI * d * (1.0 - d / n as f64)).sqrt())
    };
    let t_star = iteration_count(theta)?;
    Ok(DickePlan {
        n,
        delta,
        zeta,
        sin2_theta,
        theta,
        sin2_theta_stirling,
        t_star,
        predicted_success: predicted_success(theta, t_star),
    })
}

/// Classical density of Hamming weight `delta` in an unstructured dataset:
/// `2^{-n} C(n, delta)`.
pub fn classical_density(n: u32, delta: u32) -> Result<f64> {
    Ok(binomial(n, delta)? as f64 * 0.5f64.powi(n as i32))
}

/// Working-registry size for the modified-Grover baseline.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RegistrySize {
    /// Smallest `n'` with `2^{n'} >= C(n, delta)`.
    pub n_prime: u32,
    /// Whether `C(n, delta + 1) > 2^{n'}` also holds; infeasible brackets
    /// occur for small `n` and for `delta >= n/2`.
    pub bracket_feasible: bool,
}

/// Smallest working registry holding the weight-`delta` class, with a flag
/// for the double inequality `C(n, delta+1) > 2^{n'} >= C(n, delta)`.
pub fn registry_qubits(n: u32, delta: u32) -> Result<RegistrySize> {
    if delta >= n {
        return Err(Error::Domain(format!(
            "registry sizing needs weight < n, got {delta} on {n} qubits"
        )));
    }
    let class = binomial(n, delta)?;
    let n_prime = 128 - (class - 1).leading_zeros();
    let bracket_feasible = binomial(n, delta + 1)? > (1u128 << n_prime);
    Ok(RegistrySize {
        n_prime,
        bracket_feasible,
    })
}

/// Base mixing of the modified-Grover working registry:
/// `sin theta' = 2^{-n'/2}`.
pub fn registry_mixing(n: u32, delta: u32) -> Result<f64> {
    let reg = registry_qubits(n, delta)?;
    if reg.n_prime == 0 {
        // single state, nothing to amplify
        return Ok(FRAC_PI_2);
    }
    grover_mixing(reg.n_prime)
}

/// Ratio of the registry mixing to the Grover-Plus mixing, paired with the
/// order-of-magnitude prediction `[2 pi delta (1 - delta/n)]^{1/4}`.
pub fn mixing_ratio(n: u32, delta: u32) -> Result<(f64, f64)> {
    if delta == 0 || delta >= n {
        return Err(Error::Domain(format!(
            "mixing ratio needs 0 < weight < n, got {delta} on {n} qubits"
        )));
    }
    let actual = registry_mixing(n, delta)?.sin() / optimal_mixing(n, delta)?.sin();
    let d = delta as f64;
    let predicted = (2.0 * PI * d * (1.0 - d / n as f64)).powf(0.25);
    Ok((actual, predicted))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gates::hadamard_amplitude;
    use std::f64::consts::FRAC_PI_6;

    fn assert_close(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() <= tol, "{a} vs {b}");
    }

    #[test]
    fn grover_mixing_values() {
        assert_close(grover_mixing(2).unwrap(), FRAC_PI_6, 1e-15);
        assert_close(grover_mixing(4).unwrap(), 0.25f64.asin(), 1e-15);
        for n in (2..=16).step_by(2) {
            assert_eq!(
                grover_mixing(n).unwrap(),
                optimal_mixing(n, n / 2).unwrap(),
                "n = {n}"
            );
        }
    }

    #[test]
    fn optimal_zeta_special_cases() {
        assert_eq!(optimal_zeta(8, 4).unwrap().radians(), FRAC_PI_2);
        assert_eq!(optimal_zeta(7, 0).unwrap().radians(), 0.0);
        assert_eq!(optimal_zeta(7, 7).unwrap().radians(), PI);
        assert_close(
            optimal_zeta(4, 1).unwrap().radians(),
            std::f64::consts::FRAC_PI_3,
            1e-15,
        );
        assert!(optimal_zeta(4, 5).is_err());
    }

    // oracle: 1e4-point grid scan of the class-mixing weight
    #[test]
    fn optimal_zeta_wins_grid_scan() {
        for (n, delta) in [(4u32, 1u32), (6, 2), (9, 3), (10, 7)] {
            let star = optimal_zeta(n, delta).unwrap();
            let best = mixing_sin2_at(n, delta, star);
            let points = 10_000;
            let mut grid_best = f64::MIN;
            let mut grid_arg = 0.0;
            for i in 0..=points {
                let z = PolarAngle::new(PI * i as f64 / points as f64).unwrap();
                let v = mixing_sin2_at(n, delta, z);
                if v > grid_best {
                    grid_best = v;
                    grid_arg = z.radians();
                }
            }
            assert!(grid_best <= best + 1e-12, "grid beats closed form");
            assert!(
                (grid_arg - star.radians()).abs() <= PI / points as f64 + 1e-12,
                "maximum not at zeta*"
            );
        }
    }

    #[test]
    fn optimal_mixing_values() {
        assert_close(optimal_mixing(5, 0).unwrap(), FRAC_PI_2, 0.0);
        assert_close(optimal_mixing(5, 5).unwrap(), FRAC_PI_2, 0.0);
        assert_close(optimal_mixing(4, 2).unwrap(), 0.25f64.asin(), 1e-15);
        // oracle: |<k| H_zeta^4 |0>| at zeta = pi/3 for a weight-1 target
        let zeta = optimal_zeta(4, 1).unwrap();
        let amp = hadamard_amplitude(4, zeta, 0, 0b0001);
        assert_close(optimal_mixing(4, 1).unwrap(), amp.abs().asin(), 1e-14);
        assert_close(
            optimal_mixing(4, 1).unwrap(),
            (27.0f64 / 256.0).sqrt().asin(),
            1e-15,
        );
    }

    #[test]
    fn mixing_symmetry_is_exact() {
        for n in 1..=20u32 {
            for delta in 0..=n {
                assert_eq!(
                    optimal_mixing(n, delta).unwrap(),
                    optimal_mixing(n, n - delta).unwrap()
                );
            }
        }
    }

    // Exhaustive argmax over the first half-oscillation (phase <= pi); later
    // peaks of sin^2 are repeats, not earlier successes.
    fn argmax_iterations(theta: f64, up_to: u64) -> u64 {
        (0..=up_to)
            .filter(|t| (2 * t + 1) as f64 * theta <= PI)
            .max_by(|a, b| {
                predicted_success(theta, *a)
                    .partial_cmp(&predicted_success(theta, *b))
                    .unwrap()
                    // ties toward the smaller count
                    .then(b.cmp(a))
            })
            .unwrap_or(0)
    }

    #[test]
    fn iteration_count_examples() {
        assert_eq!(iteration_count(FRAC_PI_2).unwrap(), 0);

        // oracle: exhaustive argmax over t in [0, 10]
        assert_eq!(argmax_iterations(FRAC_PI_6, 10), 1);
        assert_eq!(iteration_count(FRAC_PI_6).unwrap(), 1);
        assert_close(predicted_success(FRAC_PI_6, 1), 1.0, 1e-15);

        // oracle: exhaustive argmax over t in [0, 100]; the ceil beats the floor
        let theta = (1.0f64 / 32.0).asin();
        assert_eq!(argmax_iterations(theta, 100), 25);
        assert_eq!(iteration_count(theta).unwrap(), 25);
        assert_eq!(iteration_count_floor(theta).unwrap(), 24);
        assert!(predicted_success(theta, 25) > predicted_success(theta, 24));

        assert!(iteration_count(0.0).is_err());
        assert!(iteration_count(2.0).is_err());
    }

    #[test]
    fn iteration_count_matches_exhaustive_argmax_on_grid() {
        for i in 1..=200u64 {
            let theta = FRAC_PI_2 * i as f64 / 200.0;
            let got = iteration_count(theta).unwrap();
            let want = argmax_iterations(theta, (PI / theta) as u64 + 2);
            assert_eq!(got, want, "theta = {theta}");
        }
    }

    #[test]
    fn predicted_success_basics() {
        let theta = 0.37;
        assert_close(predicted_success(theta, 0), theta.sin().powi(2), 1e-16);
        assert_close(predicted_success(FRAC_PI_6, 1), 1.0, 1e-15);
    }

    #[test]
    fn propagator_rotation_group() {
        let id = two_level_propagator(0.9, 0);
        assert_eq!(id, [[1.0, 0.0], [0.0, 1.0]]);

        let mat_mul = |a: [[f64; 2]; 2], b: [[f64; 2]; 2]| {
            let mut out = [[0.0; 2]; 2];
            for r in 0..2 {
                for c in 0..2 {
                    out[r][c] = a[r][0] * b[0][c] + a[r][1] * b[1][c];
                }
            }
            out
        };

        // oracle: explicit repeated matrix multiplication
        let theta = 0.3;
        let step = two_level_propagator(theta, 1);
        let mut power = [[1.0, 0.0], [0.0, 1.0]];
        for _ in 0..10 {
            power = mat_mul(step, power);
        }
        let direct = two_level_propagator(theta, 10);
        for r in 0..2 {
            for c in 0..2 {
                assert_close(power[r][c], direct[r][c], 1e-12);
            }
        }

        let combined = mat_mul(
            two_level_propagator(theta, 4),
            two_level_propagator(theta, 3),
        );
        let direct = two_level_propagator(theta, 7);
        for r in 0..2 {
            for c in 0..2 {
                assert_close(combined[r][c], direct[r][c], 1e-13);
            }
        }
    }

    #[test]
    fn asymptotic_mixing_regimes() {
        let (est, regime) = asymptotic_mixing(20, 10);
        assert_eq!(regime, MixingRegime::NearHalf);
        assert_close(est, 0.5f64.powi(10), 1e-15);

        let (est, regime) = asymptotic_mixing(16, 1);
        assert_eq!(regime, MixingRegime::SmallDelta);
        assert_close(est, 0.25, 1e-15);

        // oracle: exact optimal_mixing stays within an order of magnitude
        for delta in 1..=3u32 {
            let (est, _) = asymptotic_mixing(20, delta);
            let ratio = optimal_mixing(20, delta).unwrap() / est;
            assert!((0.1..=10.0).contains(&ratio), "ratio {ratio}");
        }
    }

    #[test]
    fn dicke_plan_values() {
        // oracle: projection of H_zeta^4 |0> onto the weight-2 class
        let zeta = optimal_zeta(4, 2).unwrap();
        let class_prob: f64 = (0..16u64)
            .filter(|k| k.count_ones() == 2)
            .map(|k| hadamard_amplitude(4, zeta, 0, k).powi(2))
            .sum();
        let plan = dicke_plan(4, 2).unwrap();
        assert_close(plan.sin2_theta, 6.0 / 16.0, 1e-15);
        assert_close(plan.sin2_theta, class_prob, 1e-14);
        assert_eq!(plan.t_star, 1);
        let stirling = plan.sin2_theta_stirling.unwrap();
        assert_close(stirling, 1.0 / (2.0 * PI).sqrt(), 1e-15);
        assert!((stirling - 0.375).abs() / 0.375 < 0.10);

        let plan = dicke_plan(9, 0).unwrap();
        assert_close(plan.theta, FRAC_PI_2, 0.0);
        assert_eq!(plan.t_star, 0);
        assert!(plan.sin2_theta_stirling.is_none());
    }

    #[test]
    fn classical_density_values() {
        assert_close(classical_density(2, 1).unwrap(), 0.5, 0.0);
        assert_close(classical_density(8, 2).unwrap(), 28.0 / 256.0, 0.0);
        for n in [4u32, 11, 20] {
            let total: f64 = (0..=n).map(|d| classical_density(n, d).unwrap()).sum();
            assert_close(total, 1.0, 1e-12);
        }
    }

    // oracle: enumerate powers of two against exact binomials
    #[test]
    fn registry_sizing() {
        let reg = registry_qubits(8, 2).unwrap();
        assert_eq!(reg.n_prime, 5);
        assert!(reg.bracket_feasible); // 28 <= 32 < 56

        let reg = registry_qubits(9, 0).unwrap();
        assert_eq!(reg.n_prime, 0);

        let reg = registry_qubits(4, 2).unwrap();
        assert_eq!(reg.n_prime, 3);
        assert!(!reg.bracket_feasible); // C(4,3) = 4 < 8

        for (n, delta) in [(8u32, 2u32), (12, 3), (16, 5)] {
            let reg = registry_qubits(n, delta).unwrap();
            let class = binomial(n, delta).unwrap();
            assert!(1u128 << reg.n_prime >= class);
            assert!(reg.n_prime == 0 || 1u128 << (reg.n_prime - 1) < class);
        }

        assert!(registry_qubits(4, 4).is_err());
    }

    #[test]
    fn mixing_ratio_values() {
        let (actual, predicted) = mixing_ratio(8, 2).unwrap();
        assert!(actual / predicted <= 2.0 && actual / predicted >= 0.5);

        let (_, predicted) = mixing_ratio(10, 5).unwrap();
        assert_close(predicted, (PI * 10.0 / 2.0).powf(0.25), 1e-14);

        // oracle: exhaustive sweep of both closed forms
        for n in 8..=20u32 {
            for delta in 1..n {
                let (actual, predicted) = mixing_ratio(n, delta).unwrap();
                let r = actual / predicted;
                assert!((0.5..=2.0).contains(&r), "n={n} delta={delta} r={r}");
            }
        }
    }

    #[test]
    fn success_monotone_until_quarter_period() {
        for theta in [0.01f64, 0.1, 0.3] {
            let mut t = 0u64;
            while (2 * (t + 1) + 1) as f64 * theta <= FRAC_PI_2 {
                assert!(predicted_success(theta, t + 1) > predicted_success(theta, t));
                t += 1;
            }
        }
    }
}
