//! Maximum-entropy distributions over finite outcome sets under moment
//! constraints, via damped Newton minimization of the convex Lagrangian
//! dual, plus the entropy / KL-divergence / information-gain accounting
//! that goes with them.
//!
//! The canonical solution has the Gibbs form `p_i = exp(-sum_k l_k f_k(x_i)) / Z`;
//! the solver works entirely in log domain with a log-sum-exp shift so large
//! multipliers cannot overflow.

use crate::error::{Error, Result};
use crate::evidence::ExtendedNonneg;
use crate::plausibility::FiniteDistribution;

/// Default residual tolerance for [`solve_maxent`].
pub const DEFAULT_TOL: f64 = 1e-10;
/// Default iteration cap for [`solve_maxent`].
pub const DEFAULT_MAX_ITER: usize = 100;

/// One moment constraint: `sum_i p_i f_values[i] = target`.
#[derive(Debug, Clone, PartialEq)]
pub struct MomentConstraint {
    /// Value of the constraint function at each outcome.
    pub f_values: Vec<f64>,
    /// Required expectation.
    pub target: f64,
}

/// A finite-support maximum-entropy problem: outcome values plus moment
/// constraints on expectations.
#[derive(Debug, Clone, PartialEq)]
pub struct MaxEntProblem {
    outcomes: Vec<f64>,
    constraints: Vec<MomentConstraint>,
}

impl MaxEntProblem {
    pub fn new(outcomes: Vec<f64>, constraints: Vec<MomentConstraint>) -> Result<Self> {
        if outcomes.is_empty() {
            return Err(Error::domain("a maxent problem needs at least one outcome"));
        }
        if let Some(bad) = outcomes.iter().find(|x| !x.is_finite()) {
            return Err(Error::domain(format!("outcome values must be finite, got {bad}")));
        }
        for (k, c) in constraints.iter().enumerate() {
            if c.f_values.len() != outcomes.len() {
                return Err(Error::domain(format!(
                    "constraint {k} has {} f_values for {} outcomes",
                    c.f_values.len(),
                    outcomes.len()
                )));
            }
            if c.f_values.iter().any(|v| !v.is_finite()) || !c.target.is_finite() {
                return Err(Error::domain(format!(
                    "constraint {k} contains non-finite values"
                )));
            }
        }
        Ok(MaxEntProblem {
            outcomes,
            constraints,
        })
    }

    /// Convenience: a mean constraint `E[x] = target` on the outcomes themselves.
    pub fn with_mean(outcomes: Vec<f64>, target: f64) -> Result<Self> {
        let f_values = outcomes.clone();
        MaxEntProblem::new(outcomes, vec![MomentConstraint { f_values, target }])
    }

    pub fn outcomes(&self) -> &[f64] {
        &self.outcomes
    }

    pub fn constraints(&self) -> &[MomentConstraint] {
        &self.constraints
    }
}

/// Output of [`solve_maxent`].
#[derive(Debug, Clone, PartialEq)]
pub struct MaxEntSolution {
    /// One Lagrange multiplier per constraint.
    pub lambdas: Vec<f64>,
    /// Log of the partition function at the solution.
    pub log_z: f64,
    /// The maximum-entropy distribution itself.
    pub probs: FiniteDistribution,
    /// Shannon entropy of `probs` in nats.
    pub entropy: f64,
    /// Accepted Newton steps performed.
    pub iterations: usize,
    /// Final `max_k |E_p[f_k] - F_k|`.
    pub residual: f64,
}

/// Shannon entropy `-sum p_i ln p_i` in nats, with `0 ln 0 := 0`.
/// Lies in `[0, ln(len)]` for any valid distribution.
pub fn entropy(p: &FiniteDistribution) -> f64 {
    let mut h = 0.0;
    for i in 0..p.len() {
        let pi = p.prob(i);
        if pi > 0.0 {
            h -= pi * pi.ln();
        }
    }
    // Guard against -0.0 and the odd negative ulp from summation on
    // near-degenerate distributions.
    h.max(0.0)
}

/// Kullback–Leibler divergence `sum p_i ln(p_i / q_i)` in nats, with
/// `0 ln(0/q) := 0` and `Infinite` whenever some `p_i > 0` has `q_i = 0`.
///
/// Rounding can push the sum a few ulps below zero when `p ~ q`; such
/// values are clamped to exactly 0, preserving nonnegativity.
///
/// # Panics
/// Panics if the two distributions have different support sizes.
pub fn kl_divergence(p: &FiniteDistribution, q: &FiniteDistribution) -> ExtendedNonneg {
    assert_eq!(
        p.len(),
        q.len(),
        "KL divergence requires equal support sizes"
    );
    let mut sum = 0.0;
    for i in 0..p.len() {
        let pi = p.prob(i);
        if pi == 0.0 {
            continue;
        }
        let qi = q.prob(i);
        if qi == 0.0 {
            return ExtendedNonneg::Infinite;
        }
        sum += pi * (pi / qi).ln();
    }
    ExtendedNonneg::Finite(sum.max(0.0))
}

/// Information gained by moving from `prior` to `posterior`:
/// `-D_KL(posterior || prior)`. Always `<= 0`; `-inf` when the posterior
/// puts mass where the prior had none.
///
/// # Panics
/// Panics if the two distributions have different support sizes.
pub fn info_gain(prior: &FiniteDistribution, posterior: &FiniteDistribution) -> f64 {
    -kl_divergence(posterior, prior).as_f64()
}

// Log-weights s_i = -sum_k lambda_k f_k(x_i), their log-sum-exp logZ, and
// the normalized probabilities, all shifted by max s_i for stability.
fn gibbs_probs(problem: &MaxEntProblem, lambdas: &[f64]) -> (Vec<f64>, f64) {
    let n = problem.outcomes.len();
    let mut s = vec![0.0; n];
    for (k, c) in problem.constraints.iter().enumerate() {
        let lk = lambdas[k];
        for i in 0..n {
            s[i] -= lk * c.f_values[i];
        }
    }
    let m = s.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let z_shifted: f64 = s.iter().map(|si| (si - m).exp()).sum();
    let log_z = m + z_shifted.ln();
    let probs: Vec<f64> = s.iter().map(|si| (si - log_z).exp()).collect();
    (probs, log_z)
}

// Convex dual D(lambda) = logZ(lambda) + sum_k lambda_k F_k.
fn dual_value(problem: &MaxEntProblem, lambdas: &[f64]) -> f64 {
    let (_, log_z) = gibbs_probs(problem, lambdas);
    let linear: f64 = problem
        .constraints
        .iter()
        .zip(lambdas)
        .map(|(c, l)| l * c.target)
        .sum();
    log_z + linear
}

fn expectations(problem: &MaxEntProblem, probs: &[f64]) -> Vec<f64> {
    problem
        .constraints
        .iter()
        .map(|c| c.f_values.iter().zip(probs).map(|(f, p)| f * p).sum())
        .collect()
}

fn max_abs_residual(problem: &MaxEntProblem, exps: &[f64]) -> f64 {
    problem
        .constraints
        .iter()
        .zip(exps)
        .map(|(c, e)| (e - c.target).abs())
        .fold(0.0, f64::max)
}

// Cholesky solve of the symmetric positive-definite system `a x = b`.
// Returns None when a pivot is nonpositive or non-finite.
fn cholesky_solve(a: &[Vec<f64>], b: &[f64]) -> Option<Vec<f64>> {
    let k = b.len();
    let mut l = vec![vec![0.0; k]; k];
    for i in 0..k {
        for j in 0..=i {
            let mut sum = a[i][j];
            for t in 0..j {
                sum -= l[i][t] * l[j][t];
            }
            if i == j {
                if !(sum > 0.0) || !sum.is_finite() {
                    return None;
                }
                l[i][j] = sum.sqrt();
            } else {
                l[i][j] = sum / l[j][j];
            }
        }
    }
    // Forward substitution L y = b, then back substitution L^T x = y.
    let mut y = vec![0.0; k];
    for i in 0..k {
        let mut sum = b[i];
        for t in 0..i {
            sum -= l[i][t] * y[t];
        }
        y[i] = sum / l[i][i];
    }
    let mut x = vec![0.0; k];
    for i in (0..k).rev() {
        let mut sum = y[i];
        for t in (i + 1)..k {
            sum -= l[t][i] * x[t];
        }
        x[i] = sum / l[i][i];
    }
    Some(x)
}

/// Solves for the maximum-entropy distribution subject to the problem's
/// moment constraints.
///
/// Each target must lie strictly inside the hull
/// `[min_i f_k(x_i), max_i f_k(x_i)]` of its constraint function (a
/// constant function may be targeted at its common value); boundary targets
/// are rejected because the multiplier diverges there.
///
/// The solver minimizes the convex dual `D(l) = log Z(l) + sum_k l_k F_k`
/// by Newton iteration from `l = 0`: the gradient is `F - E_p[f]`, the
/// Hessian is the covariance matrix of the constraint functions under the
/// current Gibbs distribution, steps are backtracked by halving until the
/// dual stops increasing (up to rounding slack), and a `1e-10` ridge is
/// added when the Hessian resists Cholesky factorization. Iteration stops once
/// `max_k |E_p[f_k] - F_k| <= tol`; hitting `max_iter` first is a
/// nonconvergence error reporting the best residual seen.
pub fn solve_maxent(
    problem: &MaxEntProblem,
    tol: f64,
    max_iter: usize,
) -> Result<MaxEntSolution> {
    solve_traced(problem, tol, max_iter).map(|(sol, _)| sol)
}

// Same as `solve_maxent`, additionally returning the dual value at the
// start and after each accepted step (used to verify descent).
fn solve_traced(
    problem: &MaxEntProblem,
    tol: f64,
    max_iter: usize,
) -> Result<(MaxEntSolution, Vec<f64>)> {
    if !tol.is_finite() || tol <= 0.0 {
        return Err(Error::domain(format!("tolerance must be positive, got {tol}")));
    }
    if max_iter == 0 {
        return Err(Error::domain("iteration cap must be at least 1"));
    }
    for (k, c) in problem.constraints.iter().enumerate() {
        let lo = c.f_values.iter().cloned().fold(f64::INFINITY, f64::min);
        let hi = c.f_values.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        let feasible = if lo == hi {
            c.target == lo
        } else {
            lo < c.target && c.target < hi
        };
        if !feasible {
            return Err(Error::InfeasibleConstraint {
                index: k,
                target: c.target,
                lo,
                hi,
            });
        }
    }

    let kdim = problem.constraints.len();
    let mut lambdas = vec![0.0; kdim];
    let (mut probs, mut log_z) = gibbs_probs(problem, &lambdas);
    let mut exps = expectations(problem, &probs);
    let mut residual = max_abs_residual(problem, &exps);
    let mut dual = dual_value(problem, &lambdas);
    let mut trace = vec![dual];
    let mut best_residual = residual;
    let mut iterations = 0;

    while residual > tol {
        if iterations >= max_iter {
            return Err(Error::MaxEntNonconvergence {
                best_residual,
                iterations,
                tol,
            });
        }
        // Gradient of the dual and covariance Hessian under the current
        // Gibbs distribution.
        let grad: Vec<f64> = problem
            .constraints
            .iter()
            .zip(&exps)
            .map(|(c, e)| c.target - e)
            .collect();
        let mut hess = vec![vec![0.0; kdim]; kdim];
        for a in 0..kdim {
            for b in a..kdim {
                let mut cov = 0.0;
                let fa = &problem.constraints[a].f_values;
                let fb = &problem.constraints[b].f_values;
                for i in 0..probs.len() {
                    cov += probs[i] * (fa[i] - exps[a]) * (fb[i] - exps[b]);
                }
                hess[a][b] = cov;
                hess[b][a] = cov;
            }
        }
        let neg_grad: Vec<f64> = grad.iter().map(|g| -g).collect();
        let direction = match cholesky_solve(&hess, &neg_grad) {
            Some(d) => d,
            None => {
                let mut ridged = hess.clone();
                for (i, row) in ridged.iter_mut().enumerate() {
                    row[i] += 1e-10;
                }
                cholesky_solve(&ridged, &neg_grad)
                    // Steepest descent as the last resort.
                    .unwrap_or(neg_grad)
            }
        };

        // Backtracking line search: halve until the dual stops increasing.
        // Near the minimum the computed dual is flat to within rounding
        // while the gradient is still resolvable far below that, so steps
        // are accepted with a few ulps of slack and the residual check
        // governs termination. The slack scales with the magnitudes of the
        // terms summed into the dual, not the dual itself, which can be
        // small through cancellation.
        let term_scale: f64 = 1.0
            + log_z.abs()
            + lambdas
                .iter()
                .zip(&problem.constraints)
                .map(|(l, c)| (l * c.target).abs())
                .sum::<f64>();
        let slack = 16.0 * f64::EPSILON * term_scale;
        let mut step = 1.0;
        let mut accepted = None;
        for _ in 0..60 {
            let candidate: Vec<f64> = lambdas
                .iter()
                .zip(&direction)
                .map(|(l, d)| l + step * d)
                .collect();
            let cand_dual = dual_value(problem, &candidate);
            if cand_dual <= dual + slack {
                accepted = Some((candidate, cand_dual));
                break;
            }
            step *= 0.5;
        }
        let Some((next_lambdas, next_dual)) = accepted else {
            // No descent direction left at float resolution.
            return Err(Error::MaxEntNonconvergence {
                best_residual,
                iterations,
                tol,
            });
        };
        lambdas = next_lambdas;
        dual = next_dual;
        trace.push(dual);
        iterations += 1;
        let (p, lz) = gibbs_probs(problem, &lambdas);
        probs = p;
        log_z = lz;
        exps = expectations(problem, &probs);
        residual = max_abs_residual(problem, &exps);
        best_residual = best_residual.min(residual);
    }

    let labels: Vec<String> = problem.outcomes.iter().map(|x| format!("{x}")).collect();
    let dist = FiniteDistribution::new(labels, probs)?;
    let h = entropy(&dist);
    Ok((
        MaxEntSolution {
            lambdas,
            log_z,
            probs: dist,
            entropy: h,
            iterations,
            residual,
        },
        trace,
    ))
}
