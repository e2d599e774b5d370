//! The maximum-entropy die: among all distributions on {1,...,6} with a
//! prescribed mean, the least committal one — the distribution that assumes
//! nothing beyond the constraint — is an exponential tilt of uniform.
//!
//! Run with: `cargo run --example maxent_die`

use plausible::maxent::{
    entropy, solve_maxent, MaxEntProblem, MomentConstraint, DEFAULT_MAX_ITER, DEFAULT_TOL,
};

fn faces() -> Vec<f64> {
    (1..=6).map(|k| k as f64).collect()
}

fn solve_mean(mean: f64) -> plausible::maxent::MaxEntSolution {
    let problem = MaxEntProblem::with_mean(faces(), mean).unwrap();
    solve_maxent(&problem, DEFAULT_TOL, DEFAULT_MAX_ITER).unwrap()
}

fn main() {
    // A die reported to average 4.5 instead of the fair 3.5.
    let sol = solve_mean(4.5);
    println!("die constrained to mean 4.5:");
    println!("  multiplier {:.12}, log partition {:.12}", sol.lambdas[0], sol.log_z);
    for k in 0..6 {
        println!("    P({}) = {:.12}", k + 1, sol.probs.prob(k));
    }
    println!(
        "  entropy {:.6} nats vs ln 6 = {:.6} for the fair die",
        sol.entropy,
        6f64.ln()
    );
    println!("  ({} Newton steps, final residual {:.2e})\n", sol.iterations, sol.residual);

    // The mean sweeps the tilt: below 3.5 favors low faces, above favors
    // high ones, and 3.5 itself recovers the uniform distribution exactly.
    println!("how the tilt follows the constrained mean:");
    for mean in [2.0, 3.0, 3.5, 4.0, 5.0] {
        let s = solve_mean(mean);
        println!(
            "  mean {mean:>3}: multiplier {:>13.8}, P(6)/P(1) = {:.4}, entropy {:.4}",
            s.lambdas[0],
            s.probs.prob(5) / s.probs.prob(0),
            s.entropy
        );
    }

    // Adding a second moment pins the spread as well as the center.
    let both = MaxEntProblem::new(
        faces(),
        vec![
            MomentConstraint { f_values: faces(), target: 4.5 },
            MomentConstraint {
                f_values: faces().iter().map(|x| x * x).collect(),
                target: 21.5,
            },
        ],
    )
    .unwrap();
    let sol2 = solve_maxent(&both, DEFAULT_TOL, DEFAULT_MAX_ITER).unwrap();
    println!("\nmean 4.5 and second moment 21.5 together:");
    for k in 0..6 {
        println!("    P({}) = {:.12}", k + 1, sol2.probs.prob(k));
    }
    println!("  entropy {:.6} (below the single-constraint {:.6}: more", sol2.entropy, sol.entropy);
    println!("  constraints can only remove entropy)");

    // An impossible demand is detected up front rather than chased forever.
    let bad = MaxEntProblem::with_mean(faces(), 6.5).unwrap();
    let err = solve_maxent(&bad, DEFAULT_TOL, DEFAULT_MAX_ITER).unwrap_err();
    println!("\nasking a die for mean 6.5: {err}");

    // The uniform die really is the zero-constraint answer.
    let uniform = MaxEntProblem::new(faces(), vec![]).unwrap();
    let u = solve_maxent(&uniform, DEFAULT_TOL, DEFAULT_MAX_ITER).unwrap();
    let max_h = entropy(&u.probs);
    println!("\nno constraints at all: entropy {:.12} = ln 6 (uniform)", max_h);
}
