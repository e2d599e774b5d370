//! Exact, reproducible machinery for reasoning about universal laws from
//! Bernoulli evidence, built around a handful of closed forms that deserve
//! careful numerics:
//!
//! - **Conjugate Beta–Bernoulli inference** ([`inference`]): posteriors,
//!   the rule-of-succession predictive `(n+1)/(n+2)`, post-failure
//!   dynamics, credible intervals, and a boundary-mass mixture prior that
//!   keeps discrete probability on `theta = 1` so a universal law can
//!   actually gain (and catastrophically lose) credence.
//! - **Finite probability algebra** ([`plausibility`]): normalized finite
//!   distributions and joints, conditioning, log-domain Bayes updating,
//!   and residual checks of the product/sum/Bayes identities.
//! - **Evidence accounting** ([`evidence`]): Bayes factors on the extended
//!   nonnegative reals, additive log₁₀ evidence, the confidence density
//!   with its point mass at `theta = 1`, Monte Carlo coverage checks with
//!   a bit-reproducible generator, and expected-utility decisions.
//! - **Maximum entropy** ([`maxent`]): Gibbs-form solutions of
//!   moment-constrained problems on finite supports via a damped Newton
//!   dual solver, plus entropy / KL divergence / information gain.
//! - **Special functions** ([`special`]): log-gamma, the regularized
//!   incomplete beta function, and its inverse — the numeric bedrock for
//!   everything above.
//!
//! The `plausible` binary (and the runnable examples) expose these as CSV
//! tables and small file-driven commands; every output is a pure function
//! of its inputs, so fixtures compare byte-for-byte across runs.

pub mod error;
pub mod evidence;
pub mod inference;
pub mod maxent;
pub mod plausibility;
pub mod report;
pub mod rng;
pub mod special;

pub use error::{Error, Result};
