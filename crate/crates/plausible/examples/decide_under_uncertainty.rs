//! From belief to action: expected-utility decisions on a finite hypothesis
//! set. Beliefs about a universal law feed a payoff table, and the chosen
//! action flips exactly where the expected utilities cross — not where the
//! belief crosses one half.
//!
//! Run with: `cargo run --example decide_under_uncertainty`

use plausible::evidence::{decide, UtilityTable};
use plausible::inference::{
    mixture_posterior, universal_law_probability, BetaParams, BoundaryMixture, EvidenceSummary,
};
use plausible::plausibility::FiniteDistribution;

fn main() {
    // Deploying a component that is safe iff the law holds. Deploying under
    // a false law is catastrophic; holding back is mildly costly either way.
    let utilities = UtilityTable::new(vec![
        vec![10.0, -100.0], // deploy:   great if law holds, disaster if not
        vec![-1.0, -1.0],   // hold off: small fixed cost
    ])
    .unwrap();

    let prior = BoundaryMixture::new(0.5, BetaParams::uniform()).unwrap();
    println!("decision after n straight successes (deploy vs hold off):");
    println!(
        "{:>5} {:>10} {:>14} {:>14}  {}",
        "n", "P(law)", "EU(deploy)", "EU(hold off)", "choice"
    );
    for n in [0u64, 10, 50, 100, 500, 1_000, 5_000] {
        let state = mixture_posterior(&prior, EvidenceSummary::all_successes(n)).unwrap();
        let p_law = universal_law_probability(&state);
        let belief =
            FiniteDistribution::new(vec!["law", "not_law"], vec![p_law, 1.0 - p_law]).unwrap();
        let d = decide(&belief, &utilities).unwrap();
        println!(
            "{:>5} {:>10.6} {:>14.4} {:>14.4}  {}",
            n,
            p_law,
            d.expected_utilities[0],
            d.expected_utilities[1],
            if d.action_index == 0 { "deploy" } else { "hold off" }
        );
    }

    // The break-even belief solves 10 p - 100 (1 - p) = -1, i.e. p = 0.9:
    // a lopsided downside demands much more than token confidence.
    println!("\nbreak-even belief for this table: P(law) = 0.9");
    println!("with these stakes, even a 98% confident agent deploys, but an");
    println!("89% confident one does not — the table, not the threshold 1/2,");
    println!("decides.");

    // Ties resolve to the lowest-numbered action, so adding a redundant
    // action never changes behavior.
    let tied = UtilityTable::new(vec![vec![1.0, 1.0], vec![1.0, 1.0]]).unwrap();
    let belief = FiniteDistribution::new(vec!["law", "not_law"], vec![0.4, 0.6]).unwrap();
    let d = decide(&belief, &tied).unwrap();
    println!("\nwith an all-ties table the first action wins: action {}", d.action_index);
}
