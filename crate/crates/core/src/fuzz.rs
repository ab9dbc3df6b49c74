//! Seeded random campaigns over the theorem checkers.
//!
//! Each trial draws its inputs from its own ChaCha stream keyed by the campaign
//! seed and the trial index, so any trial can be replayed in isolation and the
//! summary does not depend on the order trials run in.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::{Matrix, DEFAULT_DET_BOUND};
use crate::oracle;
use crate::scalar::Scalar;
use crate::spectral::{self, ids, Checker, Outcome, Relation, TheoremVerdict};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FuzzConfig {
    pub trials: usize,
    pub seed: u64,
    pub min_n: usize,
    pub max_n: usize,
    pub min_m: u32,
    pub max_m: u32,
    /// Inclusive integer range the ν-values of entries are drawn from.
    pub value_min: i64,
    pub value_max: i64,
    pub ghost_prob: f64,
    pub zero_prob: f64,
    pub det_bound: usize,
    /// Eigenpairs are searched for only up to this dimension.
    pub eigen_max_n: usize,
    /// Half-width of the lattice searched for eigenvector entries.
    pub eigen_radius: i64,
}

impl Default for FuzzConfig {
    fn default() -> Self {
        FuzzConfig {
            trials: 1000,
            seed: 42,
            min_n: 2,
            max_n: 4,
            min_m: 2,
            max_m: 3,
            value_min: -5,
            value_max: 5,
            ghost_prob: 0.2,
            zero_prob: 0.05,
            det_bound: DEFAULT_DET_BOUND,
            eigen_max_n: 3,
            eigen_radius: 6,
        }
    }
}

impl FuzzConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: &str| Err(Error::InvalidArgument(msg.into()));
        if self.trials == 0 {
            return bad("trials must be at least 1");
        }
        if self.min_n == 0 || self.min_n > self.max_n {
            return bad("need 1 <= min_n <= max_n");
        }
        if self.min_m == 0 || self.min_m > self.max_m {
            return bad("need 1 <= min_m <= max_m");
        }
        if self.value_min > self.value_max {
            return bad("value_min exceeds value_max");
        }
        let prob_ok = |p: f64| (0.0..=1.0).contains(&p);
        if !prob_ok(self.ghost_prob)
            || !prob_ok(self.zero_prob)
            || self.ghost_prob + self.zero_prob > 1.0
        {
            return bad("ghost and zero probabilities must lie in [0, 1] and sum to at most 1");
        }
        if self.det_bound == 0 || self.max_n > self.det_bound {
            return Err(Error::BoundExceeded {
                dimension: self.max_n,
                bound: self.det_bound,
            });
        }
        Ok(())
    }
}

/// The RNG for one trial of a campaign.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

pub fn random_scalar<R: Rng>(rng: &mut R, config: &FuzzConfig) -> Scalar {
    let roll: f64 = rng.random();
    if roll < config.zero_prob {
        return Scalar::Zero;
    }
    let v = rng.random_range(config.value_min..=config.value_max);
    if roll < config.zero_prob + config.ghost_prob {
        Scalar::ghost(v)
    } else {
        Scalar::tangible(v)
    }
}

pub fn random_matrix<R: Rng>(rng: &mut R, n: usize, config: &FuzzConfig) -> Matrix {
    Matrix::from_fn(n, |_, _| random_scalar(rng, config))
}

/// Search a lattice of tangible vectors with first entry `0` for an
/// eigenvector of `a` with eigenvalue `x`. The lattice step is `1/q` where `q`
/// is the denominator of `x`.
pub fn find_eigenvector(a: &Matrix, x: &Scalar, radius: i64) -> Option<Vec<Scalar>> {
    let value = x.value()?;
    let step = value.denom().clone();
    let q: i64 = step.clone().try_into().ok()?;
    let n = a.dim();
    let span = 2 * radius * q + 1;
    let total = (span as u128).checked_pow((n - 1) as u32)?;
    let checker = Checker::new(n);
    let point =
        |k: i64| Scalar::Tangible(BigRational::new(BigInt::from(k - radius * q), step.clone()));
    for index in 0..total {
        let mut v = vec![Scalar::one()];
        let mut rest = index;
        for _ in 1..n {
            v.push(point((rest % span as u128) as i64));
            rest /= span as u128;
        }
        if checker.check_eigenpair(a, &v, x).ok()?.holds() {
            return Some(v);
        }
    }
    None
}

/// Pass/fail tallies for one checker.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub pass: usize,
    pub fail: usize,
    pub not_applicable: usize,
    /// Passing verdicts whose every comparison was an exact equality.
    pub exact: usize,
}

impl Tally {
    fn record(&mut self, verdict: &TheoremVerdict) {
        match verdict.outcome {
            Outcome::Holds => {
                self.pass += 1;
                if verdict.detail.iter().all(|r| r.relation == Relation::Equal) {
                    self.exact += 1;
                }
            }
            Outcome::Violated => self.fail += 1,
            Outcome::NotApplicable => self.not_applicable += 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Failure {
    pub trial: usize,
    pub seed: u64,
    pub verdict: TheoremVerdict,
}

/// Result of a campaign. Serializes identically for identical configs.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CampaignSummary {
    pub config: FuzzConfig,
    pub tallies: BTreeMap<String, Tally>,
    pub failures: Vec<Failure>,
}

impl CampaignSummary {
    pub fn violations(&self) -> usize {
        self.tallies.values().map(|t| t.fail).sum()
    }

    pub fn tally(&self, theorem: &str) -> Tally {
        self.tallies.get(theorem).cloned().unwrap_or_default()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("summary serializes")
    }
}

/// Inputs and verdicts of a single trial.
#[derive(Debug, Clone)]
pub struct TrialOutcome {
    pub n: usize,
    pub m: u32,
    pub a: Matrix,
    pub b: Matrix,
    pub verdicts: Vec<TheoremVerdict>,
}

/// Run trial number `trial` of the campaign described by `config`.
pub fn run_trial(config: &FuzzConfig, trial: usize) -> Result<TrialOutcome> {
    let mut rng = trial_rng(config.seed, trial as u64);
    let n = rng.random_range(config.min_n..=config.max_n);
    let m = rng.random_range(config.min_m..=config.max_m);
    let a = random_matrix(&mut rng, n, config);
    let b = random_matrix(&mut rng, n, config);
    let (s, t) = (
        random_scalar(&mut rng, config),
        random_scalar(&mut rng, config),
    );
    let frob_power = rng.random_range(1..=4);

    let checker = Checker::new(config.det_bound);
    let mut verdicts = vec![
        checker.check_charpoly_power(&a, m)?,
        checker.check_tangible_equality(&a, m)?,
        checker.check_corner_root_power(&a, m)?,
        checker.check_det_rule(&a, &b)?,
        checker.check_trace_power(&a, m)?,
        oracle::check_charpoly_equiv(&a)?,
        spectral::check_frobenius(&s, &t, frob_power)?,
    ];

    let mut eigen = TheoremVerdict::not_applicable(ids::EIGEN_POWER, Vec::new());
    if n <= config.eigen_max_n {
        for e in checker.eigenvalues(&a)?.eigenvalues {
            if let Some(v) = find_eigenvector(&a, &e.root, config.eigen_radius) {
                eigen = checker.check_eigen_power(&a, &v, &e.root, m)?;
                break;
            }
        }
    }
    verdicts.push(eigen);

    Ok(TrialOutcome {
        n,
        m,
        a,
        b,
        verdicts,
    })
}

pub fn run_campaign(config: &FuzzConfig) -> Result<CampaignSummary> {
    config.validate()?;
    let mut tallies: BTreeMap<String, Tally> = BTreeMap::new();
    let mut failures = Vec::new();
    for trial in 0..config.trials {
        for verdict in run_trial(config, trial)?.verdicts {
            tallies
                .entry(verdict.theorem.clone())
                .or_default()
                .record(&verdict);
            if verdict.is_violated() {
                failures.push(Failure {
                    trial,
                    seed: config.seed,
                    verdict,
                });
            }
        }
    }
    Ok(CampaignSummary {
        config: config.clone(),
        tallies,
        failures,
    })
}
