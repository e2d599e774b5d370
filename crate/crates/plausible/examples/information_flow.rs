//! Entropy, relative entropy, and the information budget of learning.
//! Updating on evidence never gains information in the divergence sense:
//! the gain, defined as minus the divergence of the posterior from the
//! prior, is always at most zero — surprise is spent, not earned.
//!
//! Run with: `cargo run --example information_flow`

use plausible::inference::{
    mixture_posterior, universal_law_probability, BetaParams, BoundaryMixture, EvidenceSummary,
};
use plausible::maxent::{entropy, info_gain, kl_divergence};
use plausible::plausibility::FiniteDistribution;

fn two_point(mass_on_law: f64) -> FiniteDistribution {
    FiniteDistribution::new(vec!["law", "not_law"], vec![mass_on_law, 1.0 - mass_on_law])
        .unwrap()
}

fn main() {
    // Track the two-point belief {law, not law} as successes accumulate.
    let prior_mix = BoundaryMixture::new(0.5, BetaParams::uniform()).unwrap();
    let mass_after = |n: u64| {
        let state = mixture_posterior(&prior_mix, EvidenceSummary::all_successes(n)).unwrap();
        universal_law_probability(&state)
    };

    println!("belief in the law, its entropy, and the step-by-step information gain:");
    println!(
        "{:>4} {:>12} {:>12} {:>14} {:>14}",
        "n", "P(law)", "entropy", "gain this step", "entropy change"
    );
    let mut prev = two_point(mass_after(0));
    for n in 1..=6u64 {
        let curr = two_point(mass_after(n));
        println!(
            "{:>4} {:>12.6} {:>12.6} {:>14.9} {:>+14.9}",
            n,
            curr.prob(0),
            entropy(&curr),
            info_gain(&prev, &curr),
            entropy(&curr) - entropy(&prev)
        );
        prev = curr;
    }
    println!("\nthe gain column is never positive, while the entropy change can go");
    println!("either way: divergence from where you stood and spread of where you");
    println!("are measure different things.\n");

    // Divergence is asymmetric, and infinite exactly when the posterior
    // puts weight where the prior allowed none.
    let open = two_point(0.5);
    let confident = two_point(0.999);
    println!(
        "KL(confident || open)  = {:.6}",
        kl_divergence(&confident, &open).as_f64()
    );
    println!(
        "KL(open || confident)  = {:.6}",
        kl_divergence(&open, &confident).as_f64()
    );

    let closed = two_point(0.0);
    println!(
        "KL(open || closed)     = {}",
        kl_divergence(&open, &closed).as_f64()
    );
    println!("\nonce a hypothesis is given probability zero, no evidence priced in");
    println!("finite information can resurrect it.");
}
