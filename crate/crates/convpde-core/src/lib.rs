//! Exact computer-algebra kernel for convolving bivariate polynomial PDE
//! coefficients and classifying the resulting second-order equations.
//!
//! Everything in this crate is exact: coefficients are arbitrary-precision
//! rationals and no floating point is used anywhere. All values are immutable
//! after construction and all operations are pure functions, so the crate is
//! safe to use from any number of threads.
//!
//! The crate is `no_std` (it only needs `alloc`); IO, file formats and the
//! command-line surface live in the companion `convpde` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod conv;
pub mod parser;
pub mod pde;
pub mod poly;
pub mod rational;

pub use conv::{
    closed_form_chain_coeff, conv_chain, conv_x, conv_xy, conv_y, convolve, Axis, ChainError,
    KernelChain,
};
pub use parser::{
    parse_pde_file, parse_poly, pretty_print, ParseError, ParseErrorKind, PdeFileError,
    PdeFileErrorKind, VarNames,
};
pub use pde::{
    analyze_triple, classify_at_point, classify_equation, convolved_principal, discriminant,
    parity_predict_wave, sign_summary, Classification, ClassificationReport, ParityCase, PdeError,
    PrincipalTriple, Quadrant, SecondOrderPde, SignMethod, SignSummary, SignVerdict,
    TripleAnalysis, TypeVerdict, WaveFormError, WaveParityPrediction,
};
pub use poly::{BiPoly, Monomial};
pub use rational::{beta_coefficient, AlgebraError, Factorials, Rational, Sign};
