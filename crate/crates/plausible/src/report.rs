//! Rendering layer for the command-line surface: CSV tables over the
//! inference and evidence operations, the sequential stream runner, and
//! the JSON problem/solution formats for maxent and rule checking.
//!
//! Every writer is a pure function of its arguments. Floats are rendered
//! as the shortest decimal string that round-trips the 64-bit value, and
//! extended reals use `inf` / `-inf` sentinels, so identical invocations
//! produce byte-identical output.

use std::io::{BufRead, Write};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::evidence::{
    bayes_factor_law, confidence_in_law, CoverageSummary, ExtendedNonneg,
};
use crate::inference::{
    credible_interval, mixture_posterior, normal_approx, posterior, predictive,
    universal_law_probability, BetaParams, BoundaryMixture, EvidenceSummary, PosteriorState,
};
use crate::maxent::{entropy, info_gain, MaxEntProblem, MaxEntSolution, MomentConstraint};
use crate::plausibility::{rule_residuals, FiniteDistribution, FiniteJoint};

/// Sample sizes used by the table commands when `--n` is not given;
/// log-spaced so plots of the CSV show the asymptotics.
pub const DEFAULT_N_GRID: &[u64] = &[1, 2, 5, 10, 100, 1000, 10000];

/// Sample size used by `summary` when `--n` is not given.
pub const DEFAULT_SUMMARY_N: u64 = 10_000;

/// Shortest round-trip rendering of a float, with `inf`/`-inf` sentinels
/// for the extended reals. Negative zero renders as `0` so that values
/// reached by cancellation do not grow a spurious sign.
pub fn fmt_float(x: f64) -> String {
    if x == f64::INFINITY {
        "inf".to_string()
    } else if x == f64::NEG_INFINITY {
        "-inf".to_string()
    } else if x == 0.0 {
        "0".to_string()
    } else {
        format!("{x}")
    }
}

/// Predictive probability of another success after `n` straight successes,
/// one row per requested `n`.
pub fn write_sunrise_table(n_values: &[u64], out: &mut impl Write) -> Result<()> {
    if n_values.is_empty() {
        return Err(Error::domain("sunrise table needs at least one n value"));
    }
    writeln!(out, "n,predictive")?;
    for &n in n_values {
        let post = posterior(BetaParams::uniform(), EvidenceSummary::all_successes(n));
        writeln!(out, "{n},{}", fmt_float(predictive(post)))?;
    }
    Ok(())
}

/// Posterior boundary mass of the universal law after `n` straight
/// successes under a boundary-mass prior with weight `w` on `theta = 1`.
pub fn write_jeffreys_table(n_values: &[u64], w: f64, out: &mut impl Write) -> Result<()> {
    let prior = BoundaryMixture::new(w, BetaParams::uniform())?;
    writeln!(out, "n,w,posterior_mass")?;
    for &n in n_values {
        let post = mixture_posterior(&prior, EvidenceSummary::all_successes(n))?;
        let mass = universal_law_probability(&post);
        writeln!(out, "{n},{},{}", fmt_float(w), fmt_float(mass))?;
    }
    Ok(())
}

/// Bayes factor of the universal law against the uniform alternative after
/// `n` straight successes, with its log10.
pub fn write_bf_table(n_values: &[u64], out: &mut impl Write) -> Result<()> {
    writeln!(out, "n,bf,log10_bf")?;
    for &n in n_values {
        let bf = bayes_factor_law(EvidenceSummary::all_successes(n));
        writeln!(
            out,
            "{n},{},{}",
            fmt_float(bf.as_f64()),
            fmt_float(log10_extended(bf))
        )?;
    }
    Ok(())
}

/// Posterior shape and predictive probability after `n` trials containing
/// exactly one failure.
pub fn write_failure_table(n_values: &[u64], out: &mut impl Write) -> Result<()> {
    writeln!(out, "n,predictive,alpha,beta")?;
    for &n in n_values {
        if n == 0 {
            return Err(Error::domain(
                "a one-failure record needs at least one trial (n >= 1)",
            ));
        }
        let post = posterior(
            BetaParams::uniform(),
            EvidenceSummary::new(n, n - 1).expect("n - 1 <= n"),
        );
        writeln!(
            out,
            "{n},{},{},{}",
            fmt_float(predictive(post)),
            fmt_float(post.alpha()),
            fmt_float(post.beta())
        )?;
    }
    Ok(())
}

/// Equal-tailed credible intervals for the all-success posterior, with the
/// normal approximation alongside.
pub fn write_ci_table(n_values: &[u64], level: f64, out: &mut impl Write) -> Result<()> {
    if !level.is_finite() || level <= 0.0 || level >= 1.0 {
        return Err(Error::domain(format!(
            "credible level must lie strictly inside (0, 1), got {level}"
        )));
    }
    writeln!(out, "n,level,mean,lower,upper,approx_mu,approx_sigma2")?;
    for &n in n_values {
        let post = posterior(BetaParams::uniform(), EvidenceSummary::all_successes(n));
        let interval = credible_interval(post, level)?;
        let approx = normal_approx(EvidenceSummary::all_successes(n))?;
        writeln!(
            out,
            "{n},{},{},{},{},{},{}",
            fmt_float(level),
            fmt_float(predictive(post)),
            fmt_float(interval.lo()),
            fmt_float(interval.hi()),
            fmt_float(approx.mu),
            fmt_float(approx.sigma2)
        )?;
    }
    Ok(())
}

/// Summary row of a coverage simulation.
pub fn write_coverage(summary: &CoverageSummary, out: &mut impl Write) -> Result<()> {
    writeln!(out, "nominal,empirical,mc_stderr")?;
    writeln!(
        out,
        "{},{},{}",
        fmt_float(summary.nominal),
        fmt_float(summary.empirical),
        fmt_float(summary.mc_stderr)
    )?;
    Ok(())
}

/// The at-a-glance closed forms for a single `n`: Laplace predictive,
/// the continuous prior's (always zero) law probability, the boundary-mass
/// posterior at `w = 1/2`, the all-success Bayes factor, and the
/// one-failure predictive.
pub fn write_summary(n: u64, out: &mut impl Write) -> Result<()> {
    if n == 0 {
        return Err(Error::domain("summary needs at least one trial (n >= 1)"));
    }
    let all = EvidenceSummary::all_successes(n);
    let laplace_post = posterior(BetaParams::uniform(), all);
    let laplace_predictive = predictive(laplace_post);
    let laplace_law_prob = universal_law_probability(&PosteriorState::PureBeta(laplace_post));
    // With w = 1/2 and a uniform continuous component, the boundary mass
    // after n straight successes reduces to (n+1)/(n+2) — the same closed
    // form as the predictive. Emitting the reduced form keeps the two
    // columns bit-identical instead of merely equal to rounding.
    let jeffreys_mass = laplace_predictive;
    let bf = bayes_factor_law(all).as_f64();
    let failure_post = posterior(
        BetaParams::uniform(),
        EvidenceSummary::new(n, n - 1).expect("n - 1 <= n"),
    );
    writeln!(
        out,
        "laplace_predictive,laplace_law_prob,jeffreys_mass,bf_all_success,failure_predictive"
    )?;
    writeln!(
        out,
        "{},{},{},{},{}",
        fmt_float(laplace_predictive),
        fmt_float(laplace_law_prob),
        fmt_float(jeffreys_mass),
        fmt_float(bf),
        fmt_float(predictive(failure_post))
    )?;
    Ok(())
}

/// Parses an observation stream: one ASCII `0` or `1` per line, optional
/// trailing newline. Anything else — including an empty stream — is a
/// parse error carrying the offending line number.
pub fn parse_stream(input: &mut impl BufRead) -> Result<Vec<u8>> {
    let mut observations = Vec::new();
    for (idx, line) in input.lines().enumerate() {
        let line = line?;
        let trimmed = line.strip_suffix('\r').unwrap_or(&line);
        match trimmed {
            "0" => observations.push(0),
            "1" => observations.push(1),
            other => {
                return Err(Error::parse(
                    idx + 1,
                    format!("expected 0 or 1, got {other:?}"),
                ))
            }
        }
    }
    if observations.is_empty() {
        return Err(Error::parse(1, "stream contains no observations"));
    }
    Ok(observations)
}

// Two-point distribution over {law, not-law} with the given boundary mass.
fn law_two_point(mass: f64) -> FiniteDistribution {
    FiniteDistribution::new(vec!["law", "not_law"], vec![mass, 1.0 - mass])
        .expect("a boundary mass in [0, 1] always yields a valid two-point distribution")
}

/// Runs a sequential observation stream under a boundary-mass prior and
/// writes one CSV row per step.
///
/// Each row is computed by the batch operations on the running `(n, t)`
/// counts, so sequential output is bit-identical to recomputation from
/// scratch. `info_gain_step` is the (nonpositive) KL-based gain on the
/// two-point {law, not-law} distribution across the step;
/// `entropy_diff_step` is the literal Shannon-entropy difference of the
/// same two distributions, which unlike the KL form can be positive.
pub fn run_stream(observations: &[u8], w: f64, out: &mut impl Write) -> Result<()> {
    if observations.is_empty() {
        return Err(Error::parse(1, "stream contains no observations"));
    }
    let prior = BoundaryMixture::new(w, BetaParams::uniform())?;
    writeln!(
        out,
        "step,observation,n,t,predictive,log10_bf,confidence_law,mixture_mass,info_gain_step,entropy_diff_step"
    )?;
    let mut t: u64 = 0;
    let mut before = law_two_point(w);
    for (i, &obs) in observations.iter().enumerate() {
        debug_assert!(obs <= 1);
        let n = (i + 1) as u64;
        t += obs as u64;
        let data = EvidenceSummary::new(n, t).expect("t <= n by construction");
        let pred = predictive(posterior(BetaParams::uniform(), data));
        let log10_bf = log10_extended(bayes_factor_law(data));
        let conf = confidence_in_law(data)?;
        let mass = universal_law_probability(&mixture_posterior(&prior, data)?);
        let after = law_two_point(mass);
        let gained = info_gain(&before, &after);
        let entropy_diff = entropy(&after) - entropy(&before);
        writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{}",
            i + 1,
            obs,
            n,
            t,
            fmt_float(pred),
            fmt_float(log10_bf),
            conf,
            fmt_float(mass),
            fmt_float(gained),
            fmt_float(entropy_diff)
        )?;
        before = after;
    }
    Ok(())
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConstraint {
    f_values: Vec<f64>,
    target: f64,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawProblem {
    outcomes: Vec<f64>,
    #[serde(default)]
    constraints: Vec<RawConstraint>,
}

/// Parses a maxent problem document: JSON with an `outcomes` array of
/// reals and a `constraints` array of `{f_values, target}` objects.
pub fn parse_maxent_problem(text: &str) -> Result<MaxEntProblem> {
    let raw: RawProblem =
        serde_json::from_str(text).map_err(|e| Error::parse(e.line(), e.to_string()))?;
    MaxEntProblem::new(
        raw.outcomes,
        raw.constraints
            .into_iter()
            .map(|c| MomentConstraint {
                f_values: c.f_values,
                target: c.target,
            })
            .collect(),
    )
}

#[derive(Serialize)]
struct SolutionDoc<'a> {
    lambdas: &'a [f64],
    log_z: f64,
    probabilities: Vec<f64>,
    entropy: f64,
    iterations: usize,
    residual: f64,
}

/// Emits a solved maxent problem as pretty-printed JSON. With `bits` the
/// entropy is reported in base 2 instead of nats.
pub fn write_maxent_solution(
    solution: &MaxEntSolution,
    bits: bool,
    out: &mut impl Write,
) -> Result<()> {
    let entropy = if bits {
        solution.entropy / std::f64::consts::LN_2
    } else {
        solution.entropy
    };
    let doc = SolutionDoc {
        lambdas: &solution.lambdas,
        log_z: solution.log_z,
        probabilities: (0..solution.probs.len())
            .map(|i| solution.probs.prob(i))
            .collect(),
        entropy,
        iterations: solution.iterations,
        residual: solution.residual,
    };
    let text = serde_json::to_string_pretty(&doc)
        .expect("a plain numeric document always serializes");
    writeln!(out, "{text}")?;
    Ok(())
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawJoint {
    probs: Vec<Vec<f64>>,
    #[serde(default)]
    row_labels: Option<Vec<String>>,
    #[serde(default)]
    col_labels: Option<Vec<String>>,
}

/// Parses a joint-table document: JSON with a `probs` matrix (rows =
/// hypotheses, columns = evidence outcomes) and optional `row_labels` /
/// `col_labels` arrays.
pub fn parse_joint_table(text: &str) -> Result<FiniteJoint> {
    let raw: RawJoint =
        serde_json::from_str(text).map_err(|e| Error::parse(e.line(), e.to_string()))?;
    let rows = raw.probs.len();
    let cols = raw.probs.first().map(|r| r.len()).unwrap_or(0);
    let row_labels = raw
        .row_labels
        .unwrap_or_else(|| (0..rows).map(|i| format!("H{i}")).collect());
    let col_labels = raw
        .col_labels
        .unwrap_or_else(|| (0..cols).map(|j| format!("E{j}")).collect());
    FiniteJoint::new(row_labels, col_labels, raw.probs)
}

/// Checks the product/sum/Bayes identities on a joint table and writes the
/// largest violation of each as CSV, with an overall `max` row.
pub fn write_rules_check(joint: &FiniteJoint, out: &mut impl Write) -> Result<()> {
    let residuals = rule_residuals(joint);
    writeln!(out, "rule,residual")?;
    writeln!(out, "product,{}", fmt_float(residuals.product_residual))?;
    writeln!(out, "sum,{}", fmt_float(residuals.sum_residual))?;
    writeln!(out, "bayes,{}", fmt_float(residuals.bayes_residual))?;
    writeln!(out, "max,{}", fmt_float(residuals.max_residual()))?;
    Ok(())
}

// log10 of an extended nonnegative value, with 0 mapping to -inf.
fn log10_extended(value: ExtendedNonneg) -> f64 {
    match value {
        ExtendedNonneg::Finite(v) if v == 0.0 => f64::NEG_INFINITY,
        ExtendedNonneg::Finite(v) => v.log10(),
        ExtendedNonneg::Infinite => f64::INFINITY,
    }
}
