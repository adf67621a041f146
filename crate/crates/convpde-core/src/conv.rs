//! Convolution operators on bivariate polynomials.
//!
//! Three operators are provided: convolution in the first variable, in the
//! second variable, and in both at once. On monomials they reduce to exact
//! factorial coefficients:
//!
//! ```text
//! x^i y^j  *x  x^a y^b  =  beta(i,a) * x^(i+a+1) y^(j+b)
//! x^i y^j  *y  x^a y^b  =  beta(j,b) * x^(i+a)   y^(j+b+1)
//! x^i y^j  **  x^a y^b  =  beta(i,a) * beta(j,b) * x^(i+a+1) y^(j+b+1)
//! ```
//!
//! with `beta(m,n) = m! n! / (m+n+1)!`, and extend bilinearly to general
//! polynomials. [`conv_chain`] folds a finite list of kernels over a target;
//! [`closed_form_chain_coeff`] computes the same chain coefficient for
//! all-monomial inputs through a direct product formula, giving a second,
//! independent code path that tests reconcile against the fold.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::poly::{BiPoly, Monomial};
use crate::rational::{Factorials, Rational};

/// Which variable(s) a convolution runs over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Axis {
    /// Single convolution with respect to the first variable.
    X,
    /// Single convolution with respect to the second variable.
    Y,
    /// Double convolution over both variables.
    Xy,
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Axis::X => write!(f, "x"),
            Axis::Y => write!(f, "y"),
            Axis::Xy => write!(f, "xy"),
        }
    }
}

/// Error building a kernel chain.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChainError {
    /// Kernel at the given position is the zero polynomial.
    ZeroKernel(usize),
}

impl fmt::Display for ChainError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChainError::ZeroKernel(i) => write!(f, "kernel {} is the zero polynomial", i),
        }
    }
}

impl core::error::Error for ChainError {}

/// An ordered list of nonzero kernel polynomials plus the axis they convolve
/// over. The empty chain is the identity (no convolution applied).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelChain {
    kernels: Vec<BiPoly>,
    axis: Axis,
}

impl KernelChain {
    pub fn new(kernels: Vec<BiPoly>, axis: Axis) -> Result<Self, ChainError> {
        if let Some(i) = kernels.iter().position(BiPoly::is_zero) {
            return Err(ChainError::ZeroKernel(i));
        }
        Ok(KernelChain { kernels, axis })
    }

    /// The identity chain: applying it returns the target unchanged.
    pub fn identity(axis: Axis) -> Self {
        KernelChain {
            kernels: Vec::new(),
            axis,
        }
    }

    pub fn kernels(&self) -> &[BiPoly] {
        &self.kernels
    }

    pub fn axis(&self) -> Axis {
        self.axis
    }

    pub fn len(&self) -> usize {
        self.kernels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.kernels.is_empty()
    }
}

fn conv_terms(p: &BiPoly, q: &BiPoly, axis: Axis, facts: &mut Factorials) -> BiPoly {
    let mut out = BiPoly::zero();
    for (m1, c1) in p.terms() {
        for (m2, c2) in q.terms() {
            let (mono, beta) = match axis {
                Axis::X => (
                    Monomial::new(m1.deg1 + m2.deg1 + 1, m1.deg2 + m2.deg2),
                    facts.beta(m1.deg1, m2.deg1),
                ),
                Axis::Y => (
                    Monomial::new(m1.deg1 + m2.deg1, m1.deg2 + m2.deg2 + 1),
                    facts.beta(m1.deg2, m2.deg2),
                ),
                Axis::Xy => (
                    Monomial::new(m1.deg1 + m2.deg1 + 1, m1.deg2 + m2.deg2 + 1),
                    &facts.beta(m1.deg1, m2.deg1) * &facts.beta(m1.deg2, m2.deg2),
                ),
            };
            out.add_term(mono, &(c1 * c2) * &beta);
        }
    }
    out
}

/// Single convolution with respect to the first variable.
pub fn conv_x(p: &BiPoly, q: &BiPoly) -> BiPoly {
    conv_terms(p, q, Axis::X, &mut Factorials::new())
}

/// Single convolution with respect to the second variable.
pub fn conv_y(p: &BiPoly, q: &BiPoly) -> BiPoly {
    conv_terms(p, q, Axis::Y, &mut Factorials::new())
}

/// Double convolution over both variables.
pub fn conv_xy(p: &BiPoly, q: &BiPoly) -> BiPoly {
    conv_terms(p, q, Axis::Xy, &mut Factorials::new())
}

/// Convolution along the given axis.
pub fn convolve(p: &BiPoly, q: &BiPoly, axis: Axis) -> BiPoly {
    conv_terms(p, q, axis, &mut Factorials::new())
}

/// Folds the chain over the target: `k1 * k2 * ... * kl * target`, applied
/// left to right. The operators are associative (tested), so the fold order
/// does not affect the result. An empty chain returns the target unchanged.
pub fn conv_chain(chain: &KernelChain, target: &BiPoly) -> BiPoly {
    let mut facts = Factorials::new();
    let mut kernels = chain.kernels().iter();
    let Some(first) = kernels.next() else {
        return target.clone();
    };
    let mut acc = first.clone();
    for k in kernels {
        acc = conv_terms(&acc, k, chain.axis(), &mut facts);
    }
    conv_terms(&acc, target, chain.axis(), &mut facts)
}

fn factorial_product(exps: impl Iterator<Item = u32>, facts: &mut Factorials) -> BigInt {
    let mut acc = BigInt::one();
    for e in exps {
        acc *= facts.factorial(e);
    }
    acc
}

/// `(start+1)(start+2)...(start+count)` as an exact integer.
fn rising_product(start: u32, count: u32) -> BigInt {
    let mut acc = BigInt::one();
    for v in 1..=count {
        acc *= BigInt::from(start + v);
    }
    acc
}

// One variable's share of the chain coefficient: (i1! i2! ... il!) divided by
// the rising product from a+1 through a + (i1+...+il) + l. This is the direct
// product formula, not a fold; the denominators of the per-step integrals
// telescope into a single rising chain.
fn closed_form_part(kernel_exps: &[u32], target_exp: u32, facts: &mut Factorials) -> Rational {
    let numer = factorial_product(kernel_exps.iter().copied(), facts);
    let span: u32 = kernel_exps.iter().sum::<u32>() + kernel_exps.len() as u32;
    let denom = rising_product(target_exp, span);
    Rational::new(numer, denom).expect("rising product is never zero")
}

/// Coefficient of the single monomial produced by an all-monomial chain,
/// computed by the direct product formula rather than by folding. For the
/// `Xy` axis both variables contribute a factor; for a single axis only that
/// variable does. An empty kernel list yields 1.
pub fn closed_form_chain_coeff(kernels: &[Monomial], target: Monomial, axis: Axis) -> Rational {
    let mut facts = Factorials::new();
    let xs: Vec<u32> = kernels.iter().map(|m| m.deg1).collect();
    let ys: Vec<u32> = kernels.iter().map(|m| m.deg2).collect();
    match axis {
        Axis::X => closed_form_part(&xs, target.deg1, &mut facts),
        Axis::Y => closed_form_part(&ys, target.deg2, &mut facts),
        Axis::Xy => {
            &closed_form_part(&xs, target.deg1, &mut facts)
                * &closed_form_part(&ys, target.deg2, &mut facts)
        }
    }
}
