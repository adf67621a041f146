//! Randomized invariance experiment.
//!
//! Draws random equations and kernel chains, classifies each equation before
//! and after convolution, and reports whether the per-quadrant verdicts
//! agree. Agreement is recorded, never asserted: the experiment exists to
//! measure the claim that the type survives convolution, not to assume it.

use core::fmt;

use convpde_core::{
    classify_equation, Axis, BiPoly, KernelChain, Monomial, Rational, SecondOrderPde, TypeVerdict,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Which population of equations to draw from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// `a u_tt - c u_xx` with positive-coefficient `a`, `c` and `b = 0`.
    Wave,
    /// All three principal coefficients random positive polynomials.
    General,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Wave => write!(f, "wave"),
            Family::General => write!(f, "general"),
        }
    }
}

/// Invalid experiment configuration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConfigError {
    ZeroTrials,
    /// Degrees above 12 make exact arithmetic needlessly slow.
    DegreeOutOfRange,
    ZeroChainLength,
}

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConfigError::ZeroTrials => write!(f, "trials must be at least 1"),
            ConfigError::DegreeOutOfRange => write!(f, "max degree must be in 1..=12"),
            ConfigError::ZeroChainLength => write!(f, "chain length must be at least 1"),
        }
    }
}

impl std::error::Error for ConfigError {}

/// Parameters of one experiment run; reproducible from the seed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExperimentConfig {
    pub trials: usize,
    pub max_degree: u32,
    pub max_chain_len: usize,
    pub seed: u64,
    pub axis: Axis,
    pub family: Family,
}

impl ExperimentConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.trials == 0 {
            return Err(ConfigError::ZeroTrials);
        }
        if self.max_degree == 0 || self.max_degree > 12 {
            return Err(ConfigError::DegreeOutOfRange);
        }
        if self.max_chain_len == 0 {
            return Err(ConfigError::ZeroChainLength);
        }
        Ok(())
    }
}

/// One classified trial: verdicts before and after convolution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrialRecord {
    pub index: u64,
    pub pde: SecondOrderPde,
    pub chain: KernelChain,
    pub original: [TypeVerdict; 4],
    pub convolved: [TypeVerdict; 4],
    pub agree: bool,
}

/// All trial records plus aggregate counts (which always sum to `trials`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvarianceReport {
    pub records: Vec<TrialRecord>,
    pub agree_count: usize,
    pub disagree_count: usize,
}

impl InvarianceReport {
    pub fn disagreeing(&self) -> impl Iterator<Item = &TrialRecord> {
        self.records.iter().filter(|r| !r.agree)
    }
}

fn random_positive_poly<R: Rng>(rng: &mut R, max_degree: u32, max_terms: usize) -> BiPoly {
    let n_terms = rng.gen_range(1..=max_terms);
    BiPoly::from_terms((0..n_terms).map(|_| {
        (
            Monomial::new(
                rng.gen_range(0..=max_degree),
                rng.gen_range(0..=max_degree),
            ),
            Rational::new(rng.gen_range(1..=9i64), rng.gen_range(1..=9i64)).unwrap(),
        )
    }))
}

// A fixed general-family trial: convolving by x^3 turns this equation from
// parabolic (its own discriminant is identically zero) to elliptic, so every
// general report carries at least one known type change.
fn reference_general_trial() -> (SecondOrderPde, KernelChain) {
    let term = |d1, d2| BiPoly::monomial(Rational::integer(1), Monomial::new(d1, d2));
    let pde = SecondOrderPde::new(term(2, 3), term(3, 4), term(4, 5)).expect("nonzero principal");
    let chain = KernelChain::new(vec![term(3, 0)], Axis::X).expect("nonzero kernel");
    (pde, chain)
}

/// The equation and chain for one trial. Deterministic in `(config.seed,
/// trial)`: each trial gets its own stream of the seeded generator, so
/// serial and parallel runs produce identical draws.
pub fn random_pde_and_chain(config: &ExperimentConfig, trial: u64) -> (SecondOrderPde, KernelChain) {
    if config.family == Family::General && trial == 0 {
        return reference_general_trial();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    rng.set_stream(trial);
    let a = random_positive_poly(&mut rng, config.max_degree, 3);
    let (b, c) = match config.family {
        Family::Wave => {
            let c_abs = random_positive_poly(&mut rng, config.max_degree, 3);
            (BiPoly::zero(), -&c_abs)
        }
        Family::General => (
            random_positive_poly(&mut rng, config.max_degree, 3),
            random_positive_poly(&mut rng, config.max_degree, 3),
        ),
    };
    let pde = SecondOrderPde::new(a, b, c).expect("positive a is nonzero");
    let len = rng.gen_range(1..=config.max_chain_len);
    let kernels = (0..len)
        .map(|_| random_positive_poly(&mut rng, config.max_degree, 2))
        .collect();
    let chain = KernelChain::new(kernels, config.axis).expect("positive kernels are nonzero");
    (pde, chain)
}

/// Runs the experiment: per trial, per-quadrant verdicts of the original
/// discriminant `b^2 - ac` and of the convolved one, and whether they agree.
pub fn run_invariance_experiment(config: &ExperimentConfig) -> InvarianceReport {
    let mut records = Vec::with_capacity(config.trials);
    for trial in 0..config.trials as u64 {
        let (pde, chain) = random_pde_and_chain(config, trial);
        let report = classify_equation(&pde, &chain);
        let agree = report.agreement.unwrap_or(false);
        records.push(TrialRecord {
            index: trial,
            pde,
            chain,
            original: report.original.types,
            convolved: report.convolved.types,
            agree,
        });
    }
    let agree_count = records.iter().filter(|r| r.agree).count();
    let disagree_count = records.len() - agree_count;
    InvarianceReport {
        records,
        agree_count,
        disagree_count,
    }
}
