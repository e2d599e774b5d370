//! Giving an exact law a fighting chance: a prior that mixes a point mass
//! at `theta = 1` (the law holds universally) with a continuous density
//! over `theta < 1`. Unlike a purely continuous prior — whose posterior
//! probability of `theta = 1` stays exactly zero forever — the mixture lets
//! an unbroken record push real posterior mass onto the law itself.
//!
//! Run with: `cargo run --example law_mass`

use plausible::inference::{
    mixture_posterior, universal_law_probability, BetaParams, BoundaryMixture, EvidenceSummary,
};

fn main() {
    // A 50/50 mixture of "the law is exact" and "theta is uniform on [0,1)".
    let even_odds = BoundaryMixture::new(0.5, BetaParams::uniform()).unwrap();

    println!("posterior mass on the exact law, prior weight w = 0.5:");
    for n in [0u64, 1, 2, 10, 98, 1_000, 100_000] {
        let state = mixture_posterior(&even_odds, EvidenceSummary::all_successes(n)).unwrap();
        println!(
            "  n = {n:>6} straight successes: {:.6}",
            universal_law_probability(&state)
        );
    }
    println!("  (with w = 1/2 and a uniform alternative the mass is (n+1)/(n+2))\n");

    // The prior weight moves the curve but not its destination.
    println!("sensitivity to the prior weight at n = 10:");
    for w in [0.01, 0.2, 0.5, 0.9] {
        let prior = BoundaryMixture::new(w, BetaParams::uniform()).unwrap();
        let state = mixture_posterior(&prior, EvidenceSummary::all_successes(10)).unwrap();
        println!("  w = {w:<4}: {:.6}", universal_law_probability(&state));
    }

    // One failure is fatal for an exact law: the point mass collapses to
    // zero no matter how strong the record was otherwise.
    let state = mixture_posterior(&even_odds, EvidenceSummary::new(1_000_000, 999_999).unwrap())
        .unwrap();
    println!(
        "\nafter 999,999 successes and a single failure: mass = {}",
        universal_law_probability(&state)
    );

    // Cromwell's rule enforced at construction: w must lie strictly inside
    // (0, 1). Certainty in, certainty out — so certainty is not a legal prior.
    let err = BoundaryMixture::new(1.0, BetaParams::uniform()).unwrap_err();
    println!("\ntrying to assert the law with prior certainty: {err}");
}
