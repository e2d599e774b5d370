//! Beta-Bernoulli conjugate inference: the Laplace posterior and rule of
//! succession, the boundary-mass (point mass at theta = 1 plus continuous
//! Beta) mixture posterior, post-failure updating, credible intervals, and
//! the normal approximation around the all-success posterior mean.
//!
//! Counts are exact 64-bit integers; every density normalizer is computed
//! in log domain so the machinery survives exponents far beyond anything a
//! linear-space `theta^n` could represent.

use crate::error::{Error, Result};
use crate::special::{inv_reg_inc_beta, ln_beta, RealInterval};

/// Shape parameters `(alpha, beta)` of a Beta distribution over a success
/// probability. Both must be positive and finite.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BetaParams {
    alpha: f64,
    beta: f64,
}

impl BetaParams {
    pub fn new(alpha: f64, beta: f64) -> Result<Self> {
        if !alpha.is_finite() || !beta.is_finite() || alpha <= 0.0 || beta <= 0.0 {
            return Err(Error::domain(format!(
                "Beta shapes must be finite and positive, got ({alpha}, {beta})"
            )));
        }
        Ok(BetaParams { alpha, beta })
    }

    /// The uniform distribution `Beta(1, 1)`.
    pub fn uniform() -> Self {
        BetaParams {
            alpha: 1.0,
            beta: 1.0,
        }
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// Distribution mean `alpha / (alpha + beta)`.
    pub fn mean(&self) -> f64 {
        self.alpha / (self.alpha + self.beta)
    }

    /// Exact variance `alpha*beta / ((alpha+beta)^2 (alpha+beta+1))`.
    pub fn variance(&self) -> f64 {
        let s = self.alpha + self.beta;
        self.alpha * self.beta / (s * s * (s + 1.0))
    }
}

/// A Bernoulli evidence record: `n` trials containing `t` successes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EvidenceSummary {
    n: u64,
    t: u64,
}

impl EvidenceSummary {
    pub fn new(n: u64, t: u64) -> Result<Self> {
        if t > n {
            return Err(Error::domain(format!(
                "successes t = {t} cannot exceed trials n = {n}"
            )));
        }
        Ok(EvidenceSummary { n, t })
    }

    /// A record in which every trial succeeded.
    pub fn all_successes(n: u64) -> Self {
        EvidenceSummary { n, t: n }
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn t(&self) -> u64 {
        self.t
    }

    /// Number of failures, `n - t`.
    pub fn failures(&self) -> u64 {
        self.n - self.t
    }

    /// True when every observed trial succeeded (including `n = 0`).
    pub fn unrefuted(&self) -> bool {
        self.t == self.n
    }
}

/// A prior (or posterior) that places discrete mass `w` on `theta = 1` and
/// spreads the rest over a continuous Beta component.
///
/// As a prior, `w` must lie strictly inside `(0, 1)`: assigning probability
/// 0 or 1 to an empirical hypothesis makes it immune to evidence, so such
/// priors are rejected with a cromwell-violation error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundaryMixture {
    w: f64,
    continuous: BetaParams,
}

impl BoundaryMixture {
    pub fn new(w: f64, continuous: BetaParams) -> Result<Self> {
        if !w.is_finite() || w <= 0.0 || w >= 1.0 {
            return Err(Error::CromwellViolation { w });
        }
        Ok(BoundaryMixture { w, continuous })
    }

    /// Mass at `theta = 1`.
    pub fn w(&self) -> f64 {
        self.w
    }

    pub fn continuous(&self) -> BetaParams {
        self.continuous
    }
}

/// Posterior over the success probability: either purely continuous or a
/// mixture carrying discrete mass at `theta = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PosteriorState {
    PureBeta(BetaParams),
    Mixture {
        mass_at_one: f64,
        continuous: BetaParams,
    },
}

/// Conjugate update: `Beta(alpha, beta)` prior plus `(n, t)` evidence gives
/// `Beta(alpha + t, beta + n - t)`.
pub fn posterior(prior: BetaParams, data: EvidenceSummary) -> BetaParams {
    BetaParams {
        alpha: prior.alpha + data.t as f64,
        beta: prior.beta + (data.n - data.t) as f64,
    }
}

/// Predictive probability that the next trial succeeds: the posterior mean
/// `alpha / (alpha + beta)`. With a uniform prior and `t = n` this is the
/// rule of succession `(n + 1) / (n + 2)`.
pub fn predictive(posterior: BetaParams) -> f64 {
    posterior.mean()
}

/// Posterior of a boundary-mass prior after `(n, t)` evidence.
///
/// For an unrefuted record (`t = n`) the mass at `theta = 1` becomes
/// `w / (w + (1 - w) m)`, where `m` is the continuous component's marginal
/// likelihood of `n` straight successes — a Beta-function ratio evaluated
/// in log domain. For the uniform component `m = 1/(n+1)`, so at `w = 1/2`
/// the mass is `(n+1)/(n+2)`.
///
/// A single failure makes the likelihood of `theta = 1` exactly zero, so
/// for `t < n` the mass collapses to exactly `0` (not merely a small float)
/// and only the continuous component survives.
pub fn mixture_posterior(prior: &BoundaryMixture, data: EvidenceSummary) -> Result<PosteriorState> {
    let cont = posterior(prior.continuous, data);
    if !data.unrefuted() {
        return Ok(PosteriorState::Mixture {
            mass_at_one: 0.0,
            continuous: cont,
        });
    }
    // Marginal likelihood of n straight successes under Beta(alpha, beta):
    // B(alpha + n, beta) / B(alpha, beta), in log domain.
    let a = prior.continuous.alpha;
    let b = prior.continuous.beta;
    let log_m = ln_beta(a + data.n as f64, b)? - ln_beta(a, b)?;
    let m = log_m.exp();
    let w = prior.w;
    let mass = w / (w + (1.0 - w) * m);
    Ok(PosteriorState::Mixture {
        mass_at_one: mass,
        continuous: cont,
    })
}

/// Equal-tailed credible interval `[q((1-level)/2), q(1-(1-level)/2)]` from
/// the Beta quantile function.
pub fn credible_interval(posterior: BetaParams, level: f64) -> Result<RealInterval> {
    if !level.is_finite() || level <= 0.0 || level >= 1.0 {
        return Err(Error::domain(format!(
            "credible level must lie strictly inside (0, 1), got {level}"
        )));
    }
    let tail = (1.0 - level) / 2.0;
    let lo = inv_reg_inc_beta(tail, posterior.alpha, posterior.beta)?;
    let hi = inv_reg_inc_beta(1.0 - tail, posterior.alpha, posterior.beta)?;
    RealInterval::new(lo, hi)
}

/// Normal approximation around the all-success posterior mean.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormalApprox {
    /// `(n + 1) / (n + 2)`.
    pub mu: f64,
    /// `mu (1 - mu) / (n + 3)`.
    pub sigma2: f64,
}

/// Normal approximation to the all-success posterior `Beta(n+1, 1)`:
/// `mu = (n+1)/(n+2)`, `sigma2 = mu(1-mu)/(n+3)`.
///
/// The raw `(mu, sigma2)` are reported; conceptually the approximating
/// normal is truncated to `[0, 1]`. Requires an unrefuted record (`t = n`).
pub fn normal_approx(data: EvidenceSummary) -> Result<NormalApprox> {
    if !data.unrefuted() {
        return Err(Error::domain(format!(
            "normal approximation is defined for all-success records; got t = {} of n = {}",
            data.t, data.n
        )));
    }
    let mu = (data.n as f64 + 1.0) / (data.n as f64 + 2.0);
    Ok(NormalApprox {
        mu,
        sigma2: mu * (1.0 - mu) / (data.n as f64 + 3.0),
    })
}

/// Posterior probability that the universal law holds exactly
/// (`theta = 1`): zero for any purely continuous posterior — no amount of
/// evidence moves it — and the point mass for a mixture posterior.
pub fn universal_law_probability(posterior: &PosteriorState) -> f64 {
    match posterior {
        PosteriorState::PureBeta(_) => 0.0,
        PosteriorState::Mixture { mass_at_one, .. } => *mass_at_one,
    }
}
