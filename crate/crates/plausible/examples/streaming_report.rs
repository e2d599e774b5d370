//! The full bookkeeping of a lifelong record, one observation at a time:
//! predictive probability, cumulative log-evidence, belief in the law, and
//! the information spent at each step, emitted as a CSV audit trail. The
//! same report is available from the command line via `plausible stream`.
//!
//! Run with: `cargo run --example streaming_report`

use plausible::report::{parse_stream, run_stream};
use std::io::BufReader;

fn main() {
    // Nine confirmations, a counterexample, then two more successes —
    // parsed from the one-observation-per-line text format used on disk.
    let record = "1\n1\n1\n1\n1\n1\n1\n1\n1\n0\n1\n1\n";
    let observations = parse_stream(&mut BufReader::new(record.as_bytes())).unwrap();

    let mut csv = Vec::new();
    run_stream(&observations, 0.5, &mut csv).unwrap();
    print!("{}", String::from_utf8(csv).unwrap());

    println!();
    println!("reading the columns:");
    println!("  predictive     climbs along (t+1)/(n+2), dips when the failure lands");
    println!("  log10_bf       evidence for the exact law; -inf and stays there after");
    println!("                 the counterexample (zero is forever on the log scale)");
    println!("  confidence_law 1 while the record is unbroken, 0 afterwards");
    println!("  mixture_mass   posterior mass on the law; collapses to 0 at step 10");
    println!("  info_gain_step divergence cost of each update (never positive)");
    println!("  entropy_diff   spread change of the two-point belief (either sign)");
}
