//! The product rule, the sum rule, and Bayes' theorem are not independent
//! laws: any joint table of plausibilities satisfies all three at once, to
//! rounding. This example builds a small diagnostic joint — two hypotheses
//! against three observable outcomes — and audits it.
//!
//! Run with: `cargo run --example consistency_rules`

use plausible::plausibility::{
    bayes_update, condition, rule_residuals, FiniteDistribution, FiniteJoint,
};

fn main() {
    // Joint plausibility of (hypothesis, observation): a disease panel with
    // a test that has three readings.
    let joint = FiniteJoint::new(
        vec!["sick", "well"],
        vec!["pos", "ambiguous", "neg"],
        vec![
            vec![0.08, 0.015, 0.005], // P(sick, reading)
            vec![0.05, 0.10, 0.75],   // P(well, reading)
        ],
    )
    .unwrap();

    let h = joint.row_marginals();
    println!("prior over hypotheses: sick {:.3}, well {:.3}", h[0], h[1]);

    // Conditioning on each test reading is the sum and product rules in
    // action; Bayes' theorem is the same computation routed through the
    // likelihoods.
    for (j, reading) in joint.col_labels().iter().enumerate() {
        let posterior = condition(&joint, j).unwrap();
        println!(
            "  after reading {reading:>9}: sick {:.4}, well {:.4}",
            posterior.prob(0),
            posterior.prob(1)
        );
    }

    // bayes_update takes the factored route: prior x likelihood, normalized.
    let marginals = joint.row_marginals();
    let prior = FiniteDistribution::new(joint.row_labels().to_vec(), marginals.clone()).unwrap();
    let likelihood_pos: Vec<f64> = (0..2).map(|i| joint.entry(i, 0) / marginals[i]).collect();
    let via_bayes = bayes_update(&prior, &likelihood_pos).unwrap();
    let via_condition = condition(&joint, 0).unwrap();
    println!(
        "\nfactored update after 'pos': sick {:.12} (direct conditioning {:.12})",
        via_bayes.prob(0),
        via_condition.prob(0)
    );

    // The audit: reconstruct the joint from marginals and conditionals and
    // measure every discrepancy.
    let residuals = rule_residuals(&joint);
    println!("\nconsistency residuals:");
    println!("  product rule: {:.3e}", residuals.product_residual);
    println!("  sum rule:     {:.3e}", residuals.sum_residual);
    println!("  bayes rule:   {:.3e}", residuals.bayes_residual);
    println!("  worst:        {:.3e}", residuals.max_residual());
    println!("\nall three hold to floating-point rounding — they are one rule");
    println!("wearing three notations.");
}
