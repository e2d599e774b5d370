//! The asymmetry between confirmation and refutation. An unbroken record
//! leaves the case for a universal law open — summarized by a point mass of
//! confidence and an infinite evidence ratio in the law's favor — while a
//! single counterexample closes it for good.
//!
//! Run with: `cargo run --example falsification`

use plausible::evidence::{confidence_density, confidence_in_law, elr, ConfidenceObject};
use plausible::inference::EvidenceSummary;

fn describe(data: EvidenceSummary) {
    let confidence = confidence_density(data).unwrap();
    let vote = confidence_in_law(data).unwrap();
    let ratio = elr(data).unwrap();
    print!(
        "  n = {:>5}, failures = {:>2}: ",
        data.n(),
        data.failures()
    );
    match confidence {
        ConfidenceObject::PointMassAtOne => print!("confidence = point mass at theta 1"),
        ConfidenceObject::ContinuousBeta(b) => {
            print!("confidence ~ Beta({}, {})", b.alpha(), b.beta())
        }
    }
    println!(
        ", law-compatible = {vote}, evidence ratio = {}",
        if ratio.is_infinite() {
            "infinite".to_string()
        } else {
            format!("{}", ratio.as_f64())
        }
    );
}

fn main() {
    println!("records that have never failed:");
    for n in [1u64, 10, 10_000] {
        describe(EvidenceSummary::all_successes(n));
    }

    println!("\nrecords with at least one failure:");
    describe(EvidenceSummary::new(10, 9).unwrap());
    describe(EvidenceSummary::new(10_000, 9_999).unwrap());
    describe(EvidenceSummary::new(10, 5).unwrap());

    // With no data at all there is nothing to summarize: the operations
    // refuse rather than invent a verdict.
    let err = elr(EvidenceSummary::new(0, 0).unwrap()).unwrap_err();
    println!("\nasking for a verdict on an empty record: {err}");

    println!("\nno finite run of successes produces a finite ratio — support for");
    println!("an exact law is all-or-nothing, and refutation is permanent.");
}
