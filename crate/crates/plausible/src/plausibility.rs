//! Finite-proposition probability algebra: distributions and two-way joint
//! tables over finitely many propositions, conditioning, Bayesian updating,
//! and executable checks of the product rule, sum rule, and Bayes identity.
//!
//! The identities are theorems of the algebra, so for any valid joint the
//! residuals returned by [`rule_residuals`] measure floating-point rounding
//! only; they are required to stay below `1e-10`.

use crate::error::{Error, Result};

/// Tolerance for "sums to one" checks on construction.
const NORMALIZATION_TOL: f64 = 1e-12;

/// A probability distribution over finitely many labeled propositions.
///
/// Entries are validated to lie in `[0, 1]` and to sum to 1 within `1e-12`,
/// then renormalized exactly by their computed sum.
#[derive(Debug, Clone, PartialEq)]
pub struct FiniteDistribution {
    labels: Vec<String>,
    probs: Vec<f64>,
}

impl FiniteDistribution {
    /// Builds a distribution from probabilities that already sum to 1
    /// within `1e-12`.
    pub fn new<L: Into<String>>(labels: Vec<L>, probs: Vec<f64>) -> Result<Self> {
        if labels.len() != probs.len() {
            return Err(Error::domain(format!(
                "labels ({}) and probabilities ({}) differ in length",
                labels.len(),
                probs.len()
            )));
        }
        if probs.is_empty() {
            return Err(Error::domain("a distribution needs at least one proposition"));
        }
        for (i, p) in probs.iter().enumerate() {
            if !p.is_finite() || !(0.0..=1.0).contains(p) {
                return Err(Error::domain(format!(
                    "probability {p} at index {i} is outside [0, 1]"
                )));
            }
        }
        let sum: f64 = probs.iter().sum();
        if (sum - 1.0).abs() > NORMALIZATION_TOL {
            return Err(Error::domain(format!(
                "probabilities sum to {sum}, more than 1e-12 away from 1"
            )));
        }
        let probs = probs.iter().map(|p| p / sum).collect();
        Ok(FiniteDistribution {
            labels: labels.into_iter().map(Into::into).collect(),
            probs,
        })
    }

    /// Builds a distribution by normalizing arbitrary nonnegative weights.
    pub fn from_weights<L: Into<String>>(labels: Vec<L>, weights: Vec<f64>) -> Result<Self> {
        if labels.len() != weights.len() {
            return Err(Error::domain(format!(
                "labels ({}) and weights ({}) differ in length",
                labels.len(),
                weights.len()
            )));
        }
        for (i, w) in weights.iter().enumerate() {
            if !w.is_finite() || *w < 0.0 {
                return Err(Error::domain(format!(
                    "weight {w} at index {i} is not a finite nonnegative real"
                )));
            }
        }
        let sum: f64 = weights.iter().sum();
        if sum <= 0.0 {
            return Err(Error::domain("weights sum to zero; no distribution exists"));
        }
        Ok(FiniteDistribution {
            labels: labels.into_iter().map(Into::into).collect(),
            probs: weights.iter().map(|w| w / sum).collect(),
        })
    }

    // Internal constructor for values already normalized by arithmetic that
    // guarantees the invariants (conditioning, Bayes updates).
    fn normalized_unchecked(labels: Vec<String>, probs: Vec<f64>) -> Self {
        FiniteDistribution { labels, probs }
    }

    pub fn len(&self) -> usize {
        self.probs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.probs.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    pub fn prob(&self, i: usize) -> f64 {
        self.probs[i]
    }
}

/// A two-way joint probability table `P(A_i, B_j)` over labeled rows and
/// columns. Entries are nonnegative and the grand total is 1 within
/// `1e-12`, renormalized exactly on construction.
#[derive(Debug, Clone, PartialEq)]
pub struct FiniteJoint {
    row_labels: Vec<String>,
    col_labels: Vec<String>,
    table: Vec<Vec<f64>>,
}

impl FiniteJoint {
    pub fn new<L: Into<String>>(
        row_labels: Vec<L>,
        col_labels: Vec<L>,
        table: Vec<Vec<f64>>,
    ) -> Result<Self> {
        let rows = row_labels.len();
        let cols = col_labels.len();
        if rows == 0 || cols == 0 {
            return Err(Error::domain("a joint table needs at least one row and column"));
        }
        if table.len() != rows {
            return Err(Error::domain(format!(
                "table has {} rows, labels promise {rows}",
                table.len()
            )));
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::domain(format!(
                    "row {i} has {} entries, labels promise {cols}",
                    row.len()
                )));
            }
            for (j, p) in row.iter().enumerate() {
                if !p.is_finite() || *p < 0.0 {
                    return Err(Error::domain(format!(
                        "joint entry ({i},{j}) = {p} is not a finite nonnegative real"
                    )));
                }
            }
        }
        let total: f64 = table.iter().flatten().sum();
        if (total - 1.0).abs() > NORMALIZATION_TOL {
            return Err(Error::domain(format!(
                "joint entries sum to {total}, more than 1e-12 away from 1"
            )));
        }
        let table = table
            .into_iter()
            .map(|row| row.into_iter().map(|p| p / total).collect())
            .collect();
        Ok(FiniteJoint {
            row_labels: row_labels.into_iter().map(Into::into).collect(),
            col_labels: col_labels.into_iter().map(Into::into).collect(),
            table,
        })
    }

    pub fn rows(&self) -> usize {
        self.row_labels.len()
    }

    pub fn cols(&self) -> usize {
        self.col_labels.len()
    }

    pub fn row_labels(&self) -> &[String] {
        &self.row_labels
    }

    pub fn col_labels(&self) -> &[String] {
        &self.col_labels
    }

    pub fn entry(&self, i: usize, j: usize) -> f64 {
        self.table[i][j]
    }

    /// Marginal probabilities of the row propositions.
    pub fn row_marginals(&self) -> Vec<f64> {
        self.table.iter().map(|row| row.iter().sum()).collect()
    }

    /// Marginal probabilities of the column propositions.
    pub fn col_marginals(&self) -> Vec<f64> {
        (0..self.cols())
            .map(|j| self.table.iter().map(|row| row[j]).sum())
            .collect()
    }
}

/// Conditions the joint on column `col`: returns `P(row | column)`.
///
/// Conditioning on a column of probability zero is undefined and fails with
/// a zero-probability-condition error.
pub fn condition(joint: &FiniteJoint, col: usize) -> Result<FiniteDistribution> {
    if col >= joint.cols() {
        return Err(Error::domain(format!(
            "column index {col} out of range for {} columns",
            joint.cols()
        )));
    }
    let total: f64 = joint.table.iter().map(|row| row[col]).sum();
    if total <= 0.0 {
        return Err(Error::ZeroProbabilityCondition(format!(
            "column {:?}",
            joint.col_labels[col]
        )));
    }
    let probs = joint.table.iter().map(|row| row[col] / total).collect();
    Ok(FiniteDistribution::normalized_unchecked(
        joint.row_labels.clone(),
        probs,
    ))
}

/// Conditions the joint on row `row`: returns `P(column | row)`.
pub fn condition_on_row(joint: &FiniteJoint, row: usize) -> Result<FiniteDistribution> {
    if row >= joint.rows() {
        return Err(Error::domain(format!(
            "row index {row} out of range for {} rows",
            joint.rows()
        )));
    }
    let total: f64 = joint.table[row].iter().sum();
    if total <= 0.0 {
        return Err(Error::ZeroProbabilityCondition(format!(
            "row {:?}",
            joint.row_labels[row]
        )));
    }
    let probs = joint.table[row].iter().map(|p| p / total).collect();
    Ok(FiniteDistribution::normalized_unchecked(
        joint.col_labels.clone(),
        probs,
    ))
}

/// Bayes's rule on a finite hypothesis set: `posterior_i proportional to
/// prior_i * likelihood_i`, accumulated in log domain so long evidence
/// streams cannot underflow.
///
/// A hypothesis with prior 0 keeps posterior exactly 0 (certainty is
/// unrevisable). If every product vanishes the evidence is impossible under
/// the whole support and the update fails with a total-evidence-zero error.
pub fn bayes_update(
    prior: &FiniteDistribution,
    likelihoods: &[f64],
) -> Result<FiniteDistribution> {
    if likelihoods.len() != prior.len() {
        return Err(Error::domain(format!(
            "{} likelihoods for {} hypotheses",
            likelihoods.len(),
            prior.len()
        )));
    }
    for (i, l) in likelihoods.iter().enumerate() {
        if !l.is_finite() || *l < 0.0 {
            return Err(Error::domain(format!(
                "likelihood {l} at index {i} is not a finite nonnegative real"
            )));
        }
    }
    // ln(prior * likelihood); ln 0 = -inf marks impossible hypotheses.
    let log_w: Vec<f64> = prior
        .probs
        .iter()
        .zip(likelihoods)
        .map(|(p, l)| p.ln() + l.ln())
        .collect();
    let max = log_w.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    if max == f64::NEG_INFINITY {
        return Err(Error::TotalEvidenceZero);
    }
    let lse = max + log_w.iter().map(|w| (w - max).exp()).sum::<f64>().ln();
    let probs = log_w.iter().map(|w| (w - lse).exp()).collect();
    Ok(FiniteDistribution::normalized_unchecked(
        prior.labels.clone(),
        probs,
    ))
}

/// Maximum absolute violations of the three consistency identities on a
/// joint table. All three are theorems, so the residuals measure rounding
/// noise and stay below `1e-10` for any valid joint.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RuleResiduals {
    /// Product rule: `P(A_i, B_j) = P(B_j) P(A_i | B_j)` and the symmetric
    /// row-conditioned form.
    pub product_residual: f64,
    /// Sum rule on unions of row events:
    /// `P(S or T) = P(S) + P(T) - P(S and T)`.
    pub sum_residual: f64,
    /// Bayes identity: `P(A_i | B_j) = P(B_j | A_i) P(A_i) / P(B_j)`.
    pub bayes_residual: f64,
}

impl RuleResiduals {
    /// Largest of the three residuals.
    pub fn max_residual(&self) -> f64 {
        self.product_residual
            .max(self.sum_residual)
            .max(self.bayes_residual)
    }
}

/// Evaluates the product rule, sum rule, and Bayes identity on `joint`,
/// returning the worst absolute violation of each. Cells whose conditioning
/// event has probability zero are skipped (those conditionals are
/// undefined, not violated).
///
/// The sum rule is checked over all unordered pairs of nonempty row-event
/// unions when the table has at most 8 rows (the proposition sets this type
/// is meant for); beyond that, singleton pairs keep the cost linear.
pub fn rule_residuals(joint: &FiniteJoint) -> RuleResiduals {
    let rows = joint.rows();
    let cols = joint.cols();
    let row_marg = joint.row_marginals();
    let col_marg = joint.col_marginals();

    // Product rule, both factorizations.
    let mut product_residual = 0.0_f64;
    for i in 0..rows {
        for j in 0..cols {
            let p = joint.entry(i, j);
            if col_marg[j] > 0.0 {
                let via_col = col_marg[j] * (p / col_marg[j]);
                product_residual = product_residual.max((p - via_col).abs());
            }
            if row_marg[i] > 0.0 {
                let via_row = row_marg[i] * (p / row_marg[i]);
                product_residual = product_residual.max((p - via_row).abs());
            }
        }
    }

    // Sum rule over unions of row events.
    let mut sum_residual = 0.0_f64;
    let event_prob = |mask: u32| -> f64 {
        (0..rows)
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| row_marg[i])
            .sum()
    };
    if rows <= 8 {
        let all = (1u32 << rows) - 1;
        for s in 1..=all {
            for t in s..=all {
                let union = event_prob(s | t);
                let inter = event_prob(s & t);
                let rhs = event_prob(s) + event_prob(t) - inter;
                sum_residual = sum_residual.max((union - rhs).abs());
            }
        }
    } else {
        for i in 0..rows {
            for k in i..rows {
                let (s, t) = (1u32 << i, 1u32 << k);
                let union = event_prob(s | t);
                let inter = event_prob(s & t);
                let rhs = event_prob(s) + event_prob(t) - inter;
                sum_residual = sum_residual.max((union - rhs).abs());
            }
        }
    }

    // Bayes identity on every cell with well-defined conditionals.
    let mut bayes_residual = 0.0_f64;
    for i in 0..rows {
        if row_marg[i] <= 0.0 {
            continue;
        }
        for j in 0..cols {
            if col_marg[j] <= 0.0 {
                continue;
            }
            let p = joint.entry(i, j);
            let lhs = p / col_marg[j];
            let rhs = (p / row_marg[i]) * row_marg[i] / col_marg[j];
            bayes_residual = bayes_residual.max((lhs - rhs).abs());
        }
    }

    RuleResiduals {
        product_residual,
        sum_residual,
        bayes_residual,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SplitMix64;
    use proptest::prelude::*;

    fn dist(probs: Vec<f64>) -> FiniteDistribution {
        let labels: Vec<String> = (0..probs.len()).map(|i| format!("H{i}")).collect();
        FiniteDistribution::new(labels, probs).unwrap()
    }

    fn joint(table: Vec<Vec<f64>>) -> FiniteJoint {
        let rows: Vec<String> = (0..table.len()).map(|i| format!("A{i}")).collect();
        let cols: Vec<String> = (0..table[0].len()).map(|j| format!("B{j}")).collect();
        FiniteJoint::new(rows, cols, table).unwrap()
    }

    fn seeded_joint(rng: &mut SplitMix64, rows: usize, cols: usize) -> FiniteJoint {
        loop {
            let raw: Vec<Vec<f64>> = (0..rows)
                .map(|_| (0..cols).map(|_| rng.next_f64()).collect())
                .collect();
            let total: f64 = raw.iter().flatten().sum();
            if total > 0.0 {
                let table = raw
                    .into_iter()
                    .map(|r| r.into_iter().map(|p| p / total).collect())
                    .collect();
                return joint(table);
            }
        }
    }

    // ---- constructors -----------------------------------------------------

    #[test]
    fn distribution_rejects_bad_probabilities() {
        assert!(FiniteDistribution::new(vec!["a", "b"], vec![0.5, 0.6]).is_err());
        assert!(FiniteDistribution::new(vec!["a", "b"], vec![-0.1, 1.1]).is_err());
        assert!(FiniteDistribution::new(vec!["a"], vec![0.5, 0.5]).is_err());
        assert!(FiniteDistribution::new(Vec::<&str>::new(), vec![]).is_err());
        assert!(FiniteDistribution::new(vec!["a", "b"], vec![0.5, 0.5]).is_ok());
    }

    #[test]
    fn from_weights_normalizes() {
        let d = FiniteDistribution::from_weights(vec!["x", "y", "z"], vec![2.0, 1.0, 1.0]).unwrap();
        assert_eq!(d.probs(), &[0.5, 0.25, 0.25]);
        assert!(FiniteDistribution::from_weights(vec!["x"], vec![0.0]).is_err());
    }

    #[test]
    fn joint_rejects_ragged_and_unnormalized() {
        assert!(FiniteJoint::new(
            vec!["a", "b"],
            vec!["c", "d"],
            vec![vec![0.5, 0.5], vec![0.5]]
        )
        .is_err());
        assert!(FiniteJoint::new(
            vec!["a", "b"],
            vec!["c", "d"],
            vec![vec![0.5, 0.5], vec![0.5, 0.5]]
        )
        .is_err());
        assert!(FiniteJoint::new(vec!["a"], vec!["c"], vec![vec![-1.0]]).is_err());
    }

    // ---- condition ---------------------------------------------------------

    #[test]
    fn conditioning_on_independent_column_recovers_marginal() {
        let j = joint(vec![vec![0.25, 0.25], vec![0.25, 0.25]]);
        let d = condition(&j, 0).unwrap();
        assert!((d.prob(0) - 0.5).abs() <= 1e-12);
        assert!((d.prob(1) - 0.5).abs() <= 1e-12);
    }

    #[test]
    fn conditioning_renormalizes_the_column() {
        let j = joint(vec![vec![0.45, 0.45], vec![0.05, 0.05]]);
        let d = condition(&j, 1).unwrap();
        assert!((d.prob(0) - 0.9).abs() <= 1e-12);
        assert!((d.prob(1) - 0.1).abs() <= 1e-12);
    }

    #[test]
    fn conditioning_on_impossible_event_fails() {
        let j = joint(vec![vec![0.5, 0.5], vec![0.0, 0.0]]);
        // Row 1 has zero marginal mass: conditioning on it is undefined.
        let err = condition_on_row(&j, 1).unwrap_err();
        assert!(matches!(err, Error::ZeroProbabilityCondition(_)));
        // Out-of-range identifiers are domain errors, not zero-probability ones.
        assert!(matches!(condition(&j, 5), Err(Error::Domain(_))));
    }

    // ---- bayes_update --------------------------------------------------------

    #[test]
    fn update_matches_direct_normalization() {
        let post = bayes_update(&dist(vec![0.5, 0.5]), &[0.9, 0.3]).unwrap();
        assert!((post.prob(0) - 0.75).abs() <= 1e-12);
        assert!((post.prob(1) - 0.25).abs() <= 1e-12);
    }

    #[test]
    fn deductive_limit_yields_exact_truth_values() {
        let post = bayes_update(&dist(vec![0.5, 0.5]), &[1.0, 0.0]).unwrap();
        assert_eq!(post.prob(0), 1.0);
        assert_eq!(post.prob(1), 0.0);
    }

    #[test]
    fn impossible_evidence_is_an_error() {
        let err = bayes_update(&dist(vec![0.5, 0.5]), &[0.0, 0.0]).unwrap_err();
        assert!(matches!(err, Error::TotalEvidenceZero));
        // Evidence impossible only where the prior already vanishes counts too.
        let err = bayes_update(&dist(vec![1.0, 0.0]), &[0.0, 3.0]).unwrap_err();
        assert!(matches!(err, Error::TotalEvidenceZero));
    }

    #[test]
    fn zero_prior_is_never_resurrected() {
        let prior = dist(vec![0.0, 0.3, 0.7]);
        let post = bayes_update(&prior, &[1000.0, 0.1, 0.1]).unwrap();
        assert_eq!(post.prob(0), 0.0);
    }

    #[test]
    fn rejects_mismatched_or_negative_likelihoods() {
        assert!(bayes_update(&dist(vec![0.5, 0.5]), &[1.0]).is_err());
        assert!(bayes_update(&dist(vec![0.5, 0.5]), &[1.0, -0.5]).is_err());
        assert!(bayes_update(&dist(vec![0.5, 0.5]), &[1.0, f64::INFINITY]).is_err());
    }

    proptest! {
        #[test]
        fn uninformative_evidence_is_identity(p in 1e-6f64..1.0, c in 1e-6f64..1e6) {
            let prior = dist(vec![p, 1.0 - p]);
            let post = bayes_update(&prior, &[c, c]).unwrap();
            prop_assert!((post.prob(0) - prior.prob(0)).abs() <= 1e-12);
            prop_assert!((post.prob(1) - prior.prob(1)).abs() <= 1e-12);
        }

        #[test]
        fn sequential_updates_compose(
            seed in any::<u64>(),
            len in 2usize..6,
        ) {
            let mut rng = SplitMix64::new(seed);
            let weights: Vec<f64> = (0..len).map(|_| rng.next_f64() + 1e-3).collect();
            let labels: Vec<String> = (0..len).map(|i| format!("H{i}")).collect();
            let prior = FiniteDistribution::from_weights(labels, weights).unwrap();
            let l1: Vec<f64> = (0..len).map(|_| rng.next_f64() * 10.0 + 1e-3).collect();
            let l2: Vec<f64> = (0..len).map(|_| rng.next_f64() * 10.0 + 1e-3).collect();
            let stepwise = bayes_update(&bayes_update(&prior, &l1).unwrap(), &l2).unwrap();
            let prod: Vec<f64> = l1.iter().zip(&l2).map(|(a, b)| a * b).collect();
            let once = bayes_update(&prior, &prod).unwrap();
            for i in 0..len {
                prop_assert!((stepwise.prob(i) - once.prob(i)).abs() <= 1e-12);
            }
        }
    }

    // ---- rule_residuals -------------------------------------------------------

    #[test]
    fn uniform_joint_has_vanishing_residuals() {
        let r = rule_residuals(&joint(vec![vec![0.25, 0.25], vec![0.25, 0.25]]));
        assert!(r.product_residual <= 1e-10);
        assert!(r.sum_residual <= 1e-10);
        assert!(r.bayes_residual <= 1e-10);
    }

    #[test]
    fn zero_mass_rows_are_skipped_not_violated() {
        let r = rule_residuals(&joint(vec![vec![0.5, 0.5], vec![0.0, 0.0]]));
        assert!(r.max_residual() <= 1e-10);
    }

    #[test]
    fn seeded_joints_satisfy_the_identities() {
        let mut rng = SplitMix64::new(2024);
        for _ in 0..200 {
            let rows = 2 + (rng.next_u64() % 5) as usize;
            let cols = 2 + (rng.next_u64() % 5) as usize;
            let j = seeded_joint(&mut rng, rows, cols);
            let r = rule_residuals(&j);
            assert!(
                r.max_residual() <= 1e-10,
                "residuals {r:?} for a {rows}x{cols} joint"
            );
        }
    }
}
