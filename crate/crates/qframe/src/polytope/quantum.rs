use rand::Rng;
use serde::Serialize;

use crate::error::Result;
use crate::hilbert::{singlet_correlation, Direction};
use crate::polytope::scenario::{CorrelationFunctional, Scenario};
use crate::rng::Seed;

/// Largest value of a correlation functional over deterministic ±1
/// assignments (equivalently, over the polytope vertices): for each
/// assignment of party A the best B response is the coordinate-wise sign,
/// so the scan is `2^settings_a` instead of `2^(settings_a+settings_b)`.
pub fn classical_bound(functional: &CorrelationFunctional, scenario: &Scenario) -> Result<f64> {
    functional.matches(scenario)?;
    let sa = scenario.settings_a();
    let sb = scenario.settings_b();
    let mut best = f64::NEG_INFINITY;
    for assignment in 0..(1u32 << sa) {
        let mut total = 0.0;
        for j in 0..sb {
            let mut column = 0.0;
            for i in 0..sa {
                let sign = if assignment >> i & 1 == 1 { -1.0 } else { 1.0 };
                column += sign * functional.coefficients[scenario.index(i, j)];
            }
            total += column.abs();
        }
        best = best.max(total);
    }
    Ok(best)
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct OptimizerConfig {
    pub restarts: usize,
    pub max_iterations: usize,
    pub tolerance: f64,
    pub seed: Seed,
}

impl Default for OptimizerConfig {
    fn default() -> Self {
        OptimizerConfig {
            restarts: 8,
            max_iterations: 400,
            tolerance: 1e-12,
            seed: Seed(0),
        }
    }
}

/// One entry of the optimizer trace.
#[derive(Debug, Clone, Serialize)]
pub struct RestartTrace {
    pub label: String,
    pub value: f64,
    pub iterations: usize,
    pub converged: bool,
}

/// Result of maximizing a correlation functional over singlet measurement
/// settings.
#[derive(Debug, Clone, Serialize)]
pub struct QuantumMaximum {
    /// Best value found, evaluated through the state-vector correlation
    /// path (not the vector shortcut used inside the optimizer).
    pub value: f64,
    pub settings_a: Vec<Direction>,
    pub settings_b: Vec<Direction>,
    /// Algebraic ceiling from the operator-norm analysis; `value` never
    /// exceeds it.
    pub ceiling: f64,
    /// False only if no restart reached the tolerance within its iteration
    /// budget (the result is then best-so-far).
    pub converged: bool,
    pub trace: Vec<RestartTrace>,
}

type Vec3 = [f64; 3];

fn dot(a: Vec3, b: Vec3) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn norm(v: Vec3) -> f64 {
    dot(v, v).sqrt()
}

fn scale(v: Vec3, s: f64) -> Vec3 {
    [v[0] * s, v[1] * s, v[2] * s]
}

fn random_unit(rng: &mut impl Rng) -> Vec3 {
    loop {
        let v = [
            rng.gen::<f64>() * 2.0 - 1.0,
            rng.gen::<f64>() * 2.0 - 1.0,
            rng.gen::<f64>() * 2.0 - 1.0,
        ];
        let n = norm(v);
        if n > 1e-2 && n <= 1.0 {
            return scale(v, 1.0 / n);
        }
    }
}

struct SeesawResult {
    value: f64,
    a: Vec<Vec3>,
    b: Vec<Vec3>,
    iterations: usize,
    converged: bool,
}

/// Alternating closed-form response updates on the vector model
/// `E(a, b) = −a·b`. Each half-step is the exact optimum for the other
/// party held fixed, so the value is nondecreasing.
fn seesaw(
    functional: &CorrelationFunctional,
    scenario: &Scenario,
    init_a: Vec<Vec3>,
    max_iterations: usize,
    tolerance: f64,
) -> SeesawResult {
    let sb = scenario.settings_b();
    let coeff = |i: usize, j: usize| functional.coefficients[scenario.index(i, j)];

    let mut a = init_a;
    let mut b = vec![[0.0, 0.0, 1.0]; sb];
    let mut value = f64::NEG_INFINITY;
    let mut iterations = 0;
    let mut converged = false;

    for iter in 0..max_iterations {
        iterations = iter + 1;
        // Best B response: b_j anti-parallel to Σ_i c_ij a_i.
        for (j, bj) in b.iter_mut().enumerate() {
            let mut w = [0.0; 3];
            for (i, ai) in a.iter().enumerate() {
                let c = coeff(i, j);
                w[0] += c * ai[0];
                w[1] += c * ai[1];
                w[2] += c * ai[2];
            }
            let n = norm(w);
            if n > 1e-15 {
                *bj = scale(w, -1.0 / n);
            }
        }
        // Best A response: a_i anti-parallel to Σ_j c_ij b_j.
        let mut new_value = 0.0;
        for (i, ai) in a.iter_mut().enumerate() {
            let mut u = [0.0; 3];
            for (j, bj) in b.iter().enumerate() {
                let c = coeff(i, j);
                u[0] += c * bj[0];
                u[1] += c * bj[1];
                u[2] += c * bj[2];
            }
            let n = norm(u);
            if n > 1e-15 {
                *ai = scale(u, -1.0 / n);
            }
            new_value += n;
        }
        if new_value - value <= tolerance {
            value = value.max(new_value);
            converged = true;
            break;
        }
        value = new_value;
    }

    SeesawResult {
        value,
        a,
        b,
        iterations,
        converged,
    }
}

/// Exact supremum for 2×2 functionals. With unit vectors the value after
/// optimal A responses is `f(t) = Σ_i ‖c_i0 b_0 + c_i1 b_1‖`, which depends
/// on the B settings only through `t = b_0·b_1`; each term is concave in
/// `t`, so a golden-section search over `[−1, 1]` finds the global maximum.
fn two_by_two_sup(functional: &CorrelationFunctional, scenario: &Scenario) -> (f64, f64) {
    let c = |i: usize, j: usize| functional.coefficients[scenario.index(i, j)];
    let f = |t: f64| -> f64 {
        (0..2)
            .map(|i| {
                let q = c(i, 0) * c(i, 0) + c(i, 1) * c(i, 1) + 2.0 * c(i, 0) * c(i, 1) * t;
                q.max(0.0).sqrt()
            })
            .sum()
    };
    // Coarse scan to bracket, then golden-section refinement.
    let mut best_t = -1.0;
    let mut best = f64::NEG_INFINITY;
    for k in 0..=2000 {
        let t = -1.0 + 2.0 * k as f64 / 2000.0;
        let v = f(t);
        if v > best {
            best = v;
            best_t = t;
        }
    }
    let mut lo: f64 = (best_t - 0.002).max(-1.0);
    let mut hi: f64 = (best_t + 0.002).min(1.0);
    let phi = (5.0_f64.sqrt() - 1.0) / 2.0;
    let mut x1 = hi - phi * (hi - lo);
    let mut x2 = lo + phi * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    while hi - lo > 1e-14 {
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + phi * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - phi * (hi - lo);
            f1 = f(x1);
        }
    }
    let t = 0.5 * (lo + hi);
    (f(t), t)
}

/// Algebraic ceiling for the quantum value. For 2×2 scenarios this is the
/// exact operator-norm supremum; otherwise the entrywise ℓ1 bound (every
/// correlator has magnitude at most 1).
pub fn quantum_ceiling(functional: &CorrelationFunctional, scenario: &Scenario) -> Result<f64> {
    functional.matches(scenario)?;
    if scenario.settings_a() == 2 && scenario.settings_b() == 2 {
        Ok(two_by_two_sup(functional, scenario).0)
    } else {
        Ok(functional.coefficients.iter().map(|c| c.abs()).sum())
    }
}

fn to_directions(vs: &[Vec3]) -> Vec<Direction> {
    vs.iter()
        .map(|v| Direction::normalized(v[0], v[1], v[2]).expect("unit vector"))
        .collect()
}

/// Maximize `Σ c_ij · E(a_i, b_j)` over unit measurement directions, with
/// the shared state fixed to the singlet.
///
/// Deterministic multi-start local search (closed-form alternating
/// responses) from a fixed seed grid; 2×2 scenarios additionally run the
/// exact planar-parameter scan and keep whichever is better. The reported
/// value is recomputed through [`singlet_correlation`], and never exceeds
/// [`quantum_ceiling`].
pub fn quantum_maximize(
    functional: &CorrelationFunctional,
    scenario: &Scenario,
    config: &OptimizerConfig,
) -> Result<QuantumMaximum> {
    functional.matches(scenario)?;
    let sa = scenario.settings_a();
    let sb = scenario.settings_b();

    let mut trace = Vec::new();
    let mut best: Option<SeesawResult> = None;

    for restart in 0..config.restarts.max(1) {
        let init_a: Vec<Vec3> = if restart == 0 {
            // Planar spread start.
            (0..sa)
                .map(|i| {
                    let angle = std::f64::consts::PI * i as f64 / (2.0 * sa as f64);
                    [angle.cos(), angle.sin(), 0.0]
                })
                .collect()
        } else {
            let mut rng = config.seed.child(restart as u64).rng();
            (0..sa).map(|_| random_unit(&mut rng)).collect()
        };
        let result = seesaw(
            functional,
            scenario,
            init_a,
            config.max_iterations,
            config.tolerance,
        );
        trace.push(RestartTrace {
            label: format!("restart-{restart}"),
            value: result.value,
            iterations: result.iterations,
            converged: result.converged,
        });
        if best.as_ref().map_or(true, |b| result.value > b.value) {
            best = Some(result);
        }
    }
    let mut best = best.expect("at least one restart");

    if sa == 2 && sb == 2 {
        let (scan_value, t) = two_by_two_sup(functional, scenario);
        trace.push(RestartTrace {
            label: "planar-scan".into(),
            value: scan_value,
            iterations: 0,
            converged: true,
        });
        if scan_value > best.value + 1e-12 {
            // Rebuild settings from the optimal inner product.
            let b0: Vec3 = [1.0, 0.0, 0.0];
            let b1: Vec3 = [t, (1.0 - t * t).max(0.0).sqrt(), 0.0];
            let b = vec![b0, b1];
            let mut a = Vec::with_capacity(2);
            let mut value = 0.0;
            for i in 0..2 {
                let c0 = functional.coefficients[scenario.index(i, 0)];
                let c1 = functional.coefficients[scenario.index(i, 1)];
                let w = [c0 * b0[0] + c1 * b1[0], c0 * b0[1] + c1 * b1[1], 0.0];
                let n = norm(w);
                value += n;
                if n > 1e-15 {
                    a.push(scale(w, -1.0 / n));
                } else {
                    a.push([0.0, 0.0, 1.0]);
                }
            }
            best = SeesawResult {
                value,
                a,
                b,
                iterations: 0,
                converged: true,
            };
        }
    }

    let settings_a = to_directions(&best.a);
    let settings_b = to_directions(&best.b);
    let value: f64 = (0..sa)
        .flat_map(|i| (0..sb).map(move |j| (i, j)))
        .map(|(i, j)| {
            functional.coefficients[scenario.index(i, j)]
                * singlet_correlation(settings_a[i], settings_b[j])
        })
        .sum();
    let ceiling = quantum_ceiling(functional, scenario)?;
    let converged = best.converged || trace.iter().any(|t| t.converged);

    Ok(QuantumMaximum {
        value,
        settings_a,
        settings_b,
        ceiling,
        converged,
        trace,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::{enumerate_vertices, relabel_temporal};
    use crate::spacetime::SpacetimeLabel;

    const TSIRELSON: f64 = 2.0 * std::f64::consts::SQRT_2;

    #[test]
    fn classical_chsh_bound_is_two() {
        let bound = classical_bound(&CorrelationFunctional::chsh(), &Scenario::chsh()).unwrap();
        assert_eq!(bound, 2.0);
    }

    #[test]
    fn classical_bound_elementary_cases() {
        let scenario = Scenario::chsh();
        let single = CorrelationFunctional::new(vec![1.0, 0.0, 0.0, 0.0]);
        assert_eq!(classical_bound(&single, &scenario).unwrap(), 1.0);
        let zero = CorrelationFunctional::new(vec![0.0; 4]);
        assert_eq!(classical_bound(&zero, &scenario).unwrap(), 0.0);
    }

    #[test]
    fn classical_bound_agrees_with_vertex_scan() {
        // Dual route: the closed-form B response vs. the explicit polytope
        // vertices.
        let scenario = Scenario::new(2, 3).unwrap();
        let functional = CorrelationFunctional::new(vec![0.7, -1.3, 0.4, 2.0, 0.1, -0.5]);
        let fast = classical_bound(&functional, &scenario).unwrap();
        let brute = enumerate_vertices(&scenario)
            .iter()
            .map(|v| {
                v.correlators()
                    .iter()
                    .zip(&functional.coefficients)
                    .map(|(&s, c)| f64::from(s) * c)
                    .sum::<f64>()
            })
            .fold(f64::NEG_INFINITY, f64::max);
        assert!((fast - brute).abs() < 1e-12);
    }

    #[test]
    fn dimension_mismatch_is_rejected() {
        let scenario = Scenario::new(1, 1).unwrap();
        assert!(classical_bound(&CorrelationFunctional::chsh(), &scenario).is_err());
        assert!(
            quantum_maximize(
                &CorrelationFunctional::chsh(),
                &scenario,
                &OptimizerConfig::default()
            )
            .is_err()
        );
    }

    #[test]
    fn chsh_quantum_maximum_hits_tsirelson() {
        let result = quantum_maximize(
            &CorrelationFunctional::chsh(),
            &Scenario::chsh(),
            &OptimizerConfig::default(),
        )
        .unwrap();
        assert!(result.converged);
        assert!(
            (result.value - TSIRELSON).abs() < 1e-6,
            "value {}",
            result.value
        );
        assert!((result.ceiling - TSIRELSON).abs() < 1e-9);
        assert!(result.value <= result.ceiling + 1e-9);
    }

    #[test]
    fn single_correlator_maximum_is_anti_aligned() {
        let functional = CorrelationFunctional::new(vec![1.0, 0.0, 0.0, 0.0]);
        let result = quantum_maximize(
            &functional,
            &Scenario::chsh(),
            &OptimizerConfig::default(),
        )
        .unwrap();
        assert!((result.value - 1.0).abs() < 1e-9);
        let a0 = result.settings_a[0];
        let b0 = result.settings_b[0];
        assert!(a0.dot(&b0) < -1.0 + 1e-9, "settings not anti-aligned");
    }

    #[test]
    fn zero_functional_maximum_is_zero() {
        let functional = CorrelationFunctional::new(vec![0.0; 4]);
        let result = quantum_maximize(
            &functional,
            &Scenario::chsh(),
            &OptimizerConfig::default(),
        )
        .unwrap();
        assert_eq!(result.value, 0.0);
    }

    #[test]
    fn tsirelson_ceiling_property() {
        // 10^3 random settings draws never beat the ceiling.
        let mut rng = Seed(0xC0).rng();
        let chsh = CorrelationFunctional::chsh();
        let scenario = Scenario::chsh();
        for _ in 0..1000 {
            let dirs: Vec<Direction> = (0..4)
                .map(|_| {
                    let v = random_unit(&mut rng);
                    Direction::normalized(v[0], v[1], v[2]).unwrap()
                })
                .collect();
            let value: f64 = (0..2)
                .flat_map(|i| (0..2).map(move |j| (i, j)))
                .map(|(i, j)| {
                    chsh.coefficients[scenario.index(i, j)]
                        * singlet_correlation(dirs[i], dirs[2 + j])
                })
                .sum();
            assert!(value <= TSIRELSON + 1e-9, "value {value}");
        }
    }

    #[test]
    fn quantum_gap_over_classical() {
        let scenario = Scenario::chsh();
        let config = OptimizerConfig::default();
        for coefficients in [
            vec![1.0, 1.0, 1.0, -1.0],
            vec![1.0, 0.0, 0.0, 1.0],
            vec![0.5, -0.5, 1.5, 1.0],
        ] {
            let functional = CorrelationFunctional::new(coefficients);
            let classical = classical_bound(&functional, &scenario).unwrap();
            let quantum = quantum_maximize(&functional, &scenario, &config).unwrap();
            assert!(
                quantum.value >= classical - 1e-9,
                "classical {} beat quantum {}",
                classical,
                quantum.value
            );
        }
        let chsh = CorrelationFunctional::chsh();
        let gap = quantum_maximize(&chsh, &scenario, &config).unwrap().value
            - classical_bound(&chsh, &scenario).unwrap();
        assert!((gap - (TSIRELSON - 2.0)).abs() < 1e-6);
    }

    #[test]
    fn labels_change_nothing() {
        let scenario = Scenario::chsh();
        // Both parties at the same place, different times.
        let labels: Vec<SpacetimeLabel> = (0..4)
            .map(|k| SpacetimeLabel::new(0.0, 0.0, 0.0, k as f64).unwrap())
            .collect();
        let annotated = relabel_temporal(scenario, labels).unwrap();
        let chsh = CorrelationFunctional::chsh();
        assert_eq!(
            classical_bound(&chsh, &annotated.scenario).unwrap(),
            2.0
        );
        let quantum = quantum_maximize(
            &chsh,
            &annotated.scenario,
            &OptimizerConfig::default(),
        )
        .unwrap();
        assert!((quantum.value - TSIRELSON).abs() < 1e-6);
    }
}
