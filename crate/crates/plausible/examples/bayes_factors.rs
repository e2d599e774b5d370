//! Weighing an exact law against a uniform alternative with Bayes factors:
//! `n` straight successes give a factor of `n + 1`, a single failure gives
//! exactly zero, and log-factors from disjoint batches simply add.
//!
//! Run with: `cargo run --example bayes_factors`

use plausible::evidence::{accumulate_log_bf, bayes_factor_law, posterior_odds, ExtendedNonneg};
use plausible::inference::EvidenceSummary;

fn main() {
    println!("Bayes factor for the law after n straight successes:");
    for n in [0u64, 1, 9, 99, 999] {
        let bf = bayes_factor_law(EvidenceSummary::all_successes(n));
        println!("  n = {n:>4}: {:>6}", bf.as_f64());
    }

    let refuted = bayes_factor_law(EvidenceSummary::new(1_000, 999).unwrap());
    println!("  999 successes, 1 failure: {}", refuted.as_f64());

    // Odds in, odds out: a skeptic starting at 1:100 against the law still
    // ends up favoring it once the record is long enough.
    println!("\nposterior odds from prior odds of 0.01:");
    for n in [9u64, 99, 999, 9_999] {
        let bf = bayes_factor_law(EvidenceSummary::all_successes(n));
        let odds = posterior_odds(0.01, bf).unwrap();
        println!("  n = {n:>5}: odds {:.2}", odds.as_f64());
    }

    // Evidence composes additively on the log scale. Splitting 1000
    // observations into batches of 100 means each batch multiplies the
    // running factor by (n_total + 1) / (n_before + 1); the logs telescope
    // back to log(1001).
    let mut steps = Vec::new();
    let mut seen = 0u64;
    for _ in 0..10 {
        let before = bayes_factor_law(EvidenceSummary::all_successes(seen)).as_f64();
        seen += 100;
        let after = bayes_factor_law(EvidenceSummary::all_successes(seen)).as_f64();
        steps.push(after.ln() - before.ln());
    }
    let total = accumulate_log_bf(&steps);
    let direct = bayes_factor_law(EvidenceSummary::all_successes(1_000))
        .as_f64()
        .ln();
    println!("\nten batches of 100 observations:");
    println!("  sum of per-batch log factors: {total:.12}");
    println!("  log factor of the whole record: {direct:.12}");
    println!("  difference: {:.3e}", (total - direct).abs());

    // The one combination with no defensible answer: infinitely strong
    // evidence times a flat-zero prior.
    let err = posterior_odds(0.0, ExtendedNonneg::Infinite).unwrap_err();
    println!("\ninfinite evidence against zero prior odds: {err}");
}
