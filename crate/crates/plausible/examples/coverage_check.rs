//! Does a 95% credible interval cover the truth 95% of the time? A Monte
//! Carlo check: simulate Bernoulli records at a known success probability,
//! build the equal-tailed interval from each, and count how often it
//! contains the value that generated the data.
//!
//! Run with: `cargo run --example coverage_check`

use plausible::evidence::coverage_simulation;

fn main() {
    let level = 0.95;
    let reps = 20_000;
    let seed = 42;

    println!("nominal level {level}, {reps} replicates per cell, seed {seed}\n");
    println!(
        "{:>6} {:>6} {:>10} {:>10} {:>10}",
        "theta", "n", "empirical", "stderr", "gap"
    );
    for &theta0 in &[0.3, 0.5, 0.7, 0.9] {
        for &n in &[20u64, 50, 200] {
            let s = coverage_simulation(theta0, n, level, reps, seed).unwrap();
            println!(
                "{:>6} {:>6} {:>10.5} {:>10.5} {:>+10.5}",
                theta0,
                n,
                s.empirical,
                s.mc_stderr,
                s.empirical - s.nominal
            );
        }
    }

    println!("\nthe gaps are not Monte Carlo noise: with a discrete success count");
    println!("the interval cannot hit 95% exactly, so true coverage oscillates");
    println!("around the nominal level as n changes (and sits above it for");
    println!("small n, where the intervals are conservative).");

    // Reruns with the same arguments are bit-identical: each replicate
    // derives its own generator from (seed, replicate index).
    let a = coverage_simulation(0.5, 50, level, reps, seed).unwrap();
    let b = coverage_simulation(0.5, 50, level, reps, seed).unwrap();
    assert_eq!(a, b);
    println!("\n(rerunning a cell with the same seed reproduces it exactly)");
}
