//! Independent verification paths for the exact engine: a binomial-expansion
//! integrator, floating-point quadrature, and the randomized invariance
//! experiment.

mod exact;
mod experiment;
mod quadrature;

pub use exact::conv_oracle_exact;
pub use experiment::{
    random_pde_and_chain, run_invariance_experiment, ConfigError, ExperimentConfig, Family,
    InvarianceReport, TrialRecord,
};
pub use quadrature::{conv_numeric_at, eval_f64, GaussLegendre, QuadratureError};
