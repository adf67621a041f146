//! Verification harness and command-line surface for the exact convolution
//! and classification engine in `convpde-core`.
//!
//! The [`oracle`] module holds the independent checks (binomial-expansion
//! integration, Gauss-Legendre quadrature, the randomized invariance
//! experiment), [`repro`] the built-in reference reproduction suite, and
//! [`cli`]/[`report`] the `convpde` binary and its output documents.

pub mod cli;
pub mod oracle;
pub mod report;
pub mod repro;

pub use oracle::{
    conv_numeric_at, conv_oracle_exact, random_pde_and_chain, run_invariance_experiment,
    ConfigError, ExperimentConfig, Family, GaussLegendre, InvarianceReport, QuadratureError,
    TrialRecord,
};
pub use repro::{run_repro, ExpectedValues, ReproReport, DISCREPANCY_NOTE};
