use std::fs;
use std::io::{self, BufReader, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use plausible::evidence::coverage_simulation;
use plausible::maxent::{solve_maxent, DEFAULT_MAX_ITER, DEFAULT_TOL};
use plausible::report::{
    parse_joint_table, parse_maxent_problem, parse_stream, run_stream, write_bf_table,
    write_ci_table, write_coverage, write_failure_table, write_jeffreys_table,
    write_maxent_solution, write_rules_check, write_summary, write_sunrise_table,
    DEFAULT_N_GRID, DEFAULT_SUMMARY_N,
};
use plausible::Result;

/// Reproducible probability tables, sequential evidence streams, and
/// maximum-entropy solving for reasoning about universal laws from
/// Bernoulli trials. Identical invocations produce byte-identical output.
#[derive(Parser)]
#[command(name = "plausible", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Predictive probability of another success after n straight successes
    SunriseTable {
        /// Comma-separated sample sizes
        #[arg(long, value_delimiter = ',')]
        n: Option<Vec<u64>>,
        /// Output path (default: stdout)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Posterior mass on the exact law under a boundary-mass prior
    JeffreysTable {
        /// Comma-separated sample sizes
        #[arg(long, value_delimiter = ',')]
        n: Option<Vec<u64>>,
        /// Prior mass on theta = 1 (must be strictly between 0 and 1)
        #[arg(long, default_value_t = 0.5)]
        w: f64,
        /// Output path (default: stdout)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Bayes factor of the exact law against the uniform alternative
    BfTable {
        /// Comma-separated sample sizes
        #[arg(long, value_delimiter = ',')]
        n: Option<Vec<u64>>,
        /// Output path (default: stdout)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Posterior shape and predictive after exactly one failure in n trials
    FailureTable {
        /// Comma-separated sample sizes (each must be >= 1)
        #[arg(long, value_delimiter = ',')]
        n: Option<Vec<u64>>,
        /// Output path (default: stdout)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Equal-tailed credible intervals for the all-success posterior
    CiTable {
        /// Comma-separated sample sizes
        #[arg(long, value_delimiter = ',')]
        n: Option<Vec<u64>>,
        /// Credible level (strictly between 0 and 1)
        #[arg(long, default_value_t = 0.95)]
        level: f64,
        /// Output path (default: stdout)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a 0/1 observation stream and report the per-step update
    Stream {
        /// File with one 0 or 1 per line
        #[arg(value_name = "FILE")]
        input: PathBuf,
        /// Prior mass on theta = 1 (must be strictly between 0 and 1)
        #[arg(long, default_value_t = 0.5)]
        w: f64,
        /// Output path (default: stdout)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Solve a maximum-entropy problem from a JSON problem file
    Maxent {
        /// Problem file: {"outcomes": [...], "constraints": [{"f_values": [...], "target": ...}]}
        #[arg(value_name = "PROBLEM")]
        problem: PathBuf,
        /// Constraint-residual tolerance
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        /// Report entropy in bits instead of nats
        #[arg(long)]
        bits: bool,
        /// Output path (default: stdout)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Monte Carlo coverage of the equal-tailed posterior interval
    Coverage {
        /// True success probability (strictly between 0 and 1)
        #[arg(long)]
        theta0: f64,
        /// Trials per replicate
        #[arg(long)]
        n: u64,
        /// Nominal interval level
        #[arg(long, default_value_t = 0.95)]
        level: f64,
        /// Number of simulated replicates
        #[arg(long, default_value_t = 100_000)]
        reps: u64,
        /// Generator seed (replicate k derives its state from seed + k)
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Output path (default: stdout)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// One-row summary of the closed forms at a single n
    Summary {
        /// Sample size (>= 1)
        #[arg(long, default_value_t = DEFAULT_SUMMARY_N)]
        n: u64,
        /// Output path (default: stdout)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the product/sum/Bayes identities on a JSON joint table
    RulesCheck {
        /// Table file: {"probs": [[...], ...], "row_labels": [...], "col_labels": [...]}
        #[arg(value_name = "TABLE")]
        table: PathBuf,
        /// Output path (default: stdout)
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn grid(n: Option<Vec<u64>>) -> Vec<u64> {
    n.unwrap_or_else(|| DEFAULT_N_GRID.to_vec())
}

// Runs a writer against either a freshly created file or stdout.
fn with_sink<F>(out: Option<PathBuf>, f: F) -> Result<()>
where
    F: FnOnce(&mut dyn Write) -> Result<()>,
{
    match out {
        Some(path) => {
            let mut sink = io::BufWriter::new(fs::File::create(&path)?);
            f(&mut sink)?;
            sink.flush()?;
        }
        None => {
            let stdout = io::stdout();
            let mut sink = io::BufWriter::new(stdout.lock());
            f(&mut sink)?;
            sink.flush()?;
        }
    }
    Ok(())
}

fn run(command: Command) -> Result<()> {
    match command {
        Command::SunriseTable { n, out } => {
            let ns = grid(n);
            with_sink(out, |mut sink| write_sunrise_table(&ns, &mut sink))
        }
        Command::JeffreysTable { n, w, out } => {
            let ns = grid(n);
            with_sink(out, |mut sink| write_jeffreys_table(&ns, w, &mut sink))
        }
        Command::BfTable { n, out } => {
            let ns = grid(n);
            with_sink(out, |mut sink| write_bf_table(&ns, &mut sink))
        }
        Command::FailureTable { n, out } => {
            let ns = grid(n);
            with_sink(out, |mut sink| write_failure_table(&ns, &mut sink))
        }
        Command::CiTable { n, level, out } => {
            let ns = grid(n);
            with_sink(out, |mut sink| write_ci_table(&ns, level, &mut sink))
        }
        Command::Stream { input, w, out } => {
            let file = fs::File::open(&input)?;
            let observations = parse_stream(&mut BufReader::new(file))?;
            with_sink(out, |mut sink| run_stream(&observations, w, &mut sink))
        }
        Command::Maxent {
            problem,
            tol,
            bits,
            out,
        } => {
            let text = fs::read_to_string(&problem)?;
            let parsed = parse_maxent_problem(&text)?;
            let solution = solve_maxent(&parsed, tol, DEFAULT_MAX_ITER)?;
            with_sink(out, |mut sink| {
                write_maxent_solution(&solution, bits, &mut sink)
            })
        }
        Command::Coverage {
            theta0,
            n,
            level,
            reps,
            seed,
            out,
        } => {
            let summary = coverage_simulation(theta0, n, level, reps, seed)?;
            with_sink(out, |mut sink| write_coverage(&summary, &mut sink))
        }
        Command::Summary { n, out } => with_sink(out, |mut sink| write_summary(n, &mut sink)),
        Command::RulesCheck { table, out } => {
            let text = fs::read_to_string(&table)?;
            let joint = parse_joint_table(&text)?;
            with_sink(out, |mut sink| write_rules_check(&joint, &mut sink))
        }
    }
}

fn main() {
    let cli = Cli::parse();
    if let Err(err) = run(cli.command) {
        eprintln!("error: {err}");
        std::process::exit(err.exit_code());
    }
}
