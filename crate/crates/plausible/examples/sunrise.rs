//! The rule of succession: after observing `n` successes in a row starting
//! from a uniform prior, the probability that the next trial succeeds is
//! `(n + 1) / (n + 2)` — never 1, no matter how long the streak.
//!
//! Run with: `cargo run --example sunrise`

use plausible::inference::{posterior, predictive, BetaParams, EvidenceSummary};

fn main() {
    // Update one observation at a time and watch the predictive climb.
    let mut state = BetaParams::uniform();
    println!("sequential updates from a uniform prior:");
    for day in 1..=5u64 {
        state = posterior(state, EvidenceSummary::new(1, 1).unwrap());
        println!(
            "  after {day} success(es): Beta({}, {}), next-success probability {:.6}",
            state.alpha(),
            state.beta(),
            predictive(state)
        );
    }

    // Batch updates give exactly the same state: the order of conjugate
    // updates never matters.
    let batch = posterior(BetaParams::uniform(), EvidenceSummary::all_successes(5));
    assert_eq!(state, batch);
    println!("(batching all five observations lands on the same posterior)\n");

    println!("the long run: predictive = (n + 1) / (n + 2)");
    for n in [10u64, 100, 1_000, 10_000, 1_000_000] {
        let p = predictive(posterior(
            BetaParams::uniform(),
            EvidenceSummary::all_successes(n),
        ));
        println!("  n = {n:>8}: {p:.10}   (gap to certainty {:.3e})", 1.0 - p);
    }
    println!("\nan unbroken record only ever buys probability 1 - 1/(n + 2):");
    println!("certainty is not reachable by finite evidence.");
}
