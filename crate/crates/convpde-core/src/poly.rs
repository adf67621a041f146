//! Sparse bivariate polynomials over exact rationals.
//!
//! A polynomial is a finite map from exponent pairs to nonzero coefficients.
//! Degrees grow linearly under convolution but term counts stay small, so the
//! sparse form is the right one. The map is ordered (graded lexicographic),
//! which makes printing and iteration deterministic.

use alloc::collections::BTreeMap;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::rational::Rational;

/// An exponent pair `x^deg1 * y^deg2` (the second variable may be displayed
/// as `t`; the engine does not care).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    pub deg1: u32,
    pub deg2: u32,
}

impl Monomial {
    pub fn new(deg1: u32, deg2: u32) -> Self {
        Monomial { deg1, deg2 }
    }

    pub fn total_degree(&self) -> u32 {
        self.deg1 + self.deg2
    }

    pub fn is_constant(&self) -> bool {
        self.deg1 == 0 && self.deg2 == 0
    }

    /// Product of monomials: exponents add.
    pub fn times(&self, other: &Monomial) -> Monomial {
        Monomial::new(self.deg1 + other.deg1, self.deg2 + other.deg2)
    }
}

// Graded lexicographic: total degree first, then first-variable exponent.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.total_degree(), self.deg1).cmp(&(other.total_degree(), other.deg1))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A sparse bivariate polynomial with exact rational coefficients.
///
/// Canonical form: no stored coefficient is zero. Two polynomials are equal
/// iff their term maps are identical.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct BiPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn one() -> Self {
        BiPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        BiPoly::monomial(c, Monomial::new(0, 0))
    }

    /// Single-term polynomial `coeff * x^deg1 * y^deg2`; the zero coefficient
    /// yields the zero polynomial.
    pub fn monomial(coeff: Rational, m: Monomial) -> Self {
        let mut p = BiPoly::zero();
        p.add_term(m, coeff);
        p
    }

    /// The first variable as a polynomial.
    pub fn var1() -> Self {
        BiPoly::monomial(Rational::one(), Monomial::new(1, 0))
    }

    /// The second variable as a polynomial.
    pub fn var2() -> Self {
        BiPoly::monomial(Rational::one(), Monomial::new(0, 1))
    }

    /// Collects terms, summing duplicates and dropping zeros.
    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = BiPoly::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    /// Adds `coeff * m` in place, keeping the sparse form canonical.
    pub(crate) fn add_term(&mut self, m: Monomial, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let sum = &*existing + &coeff;
                if sum.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(m, coeff);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lexicographic order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    /// The coefficient of `m` (zero when absent).
    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// When the polynomial has exactly one term, that term.
    pub fn as_monomial(&self) -> Option<(Monomial, &Rational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(m, c)| (*m, c))
        } else {
            None
        }
    }

    /// Componentwise maximum exponents, or `None` for the zero polynomial.
    pub fn degrees(&self) -> Option<(u32, u32)> {
        if self.is_zero() {
            return None;
        }
        let d1 = self.terms.keys().map(|m| m.deg1).max().unwrap();
        let d2 = self.terms.keys().map(|m| m.deg2).max().unwrap();
        Some((d1, d2))
    }

    /// Exact evaluation at a rational point.
    pub fn eval(&self, x: &Rational, y: &Rational) -> Rational {
        let Some((d1, d2)) = self.degrees() else {
            return Rational::zero();
        };
        let x_pows = power_table(x, d1);
        let y_pows = power_table(y, d2);
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let term = c * &(&x_pows[m.deg1 as usize] * &y_pows[m.deg2 as usize]);
            acc = &acc + &term;
        }
        acc
    }

    /// Multiplies every coefficient by `s`.
    pub fn scale(&self, s: &Rational) -> BiPoly {
        if s.is_zero() {
            return BiPoly::zero();
        }
        BiPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, c * s)).collect(),
        }
    }

    /// `self^exp` by repeated multiplication.
    pub fn powi(&self, exp: u32) -> BiPoly {
        let mut acc = BiPoly::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// True when every coefficient is strictly positive.
    pub fn all_coeffs_positive(&self) -> bool {
        !self.is_zero() && self.terms.values().all(|c| c.is_positive())
    }
}

// base^0 ..= base^max, computed incrementally
fn power_table(base: &Rational, max: u32) -> alloc::vec::Vec<Rational> {
    let mut pows = alloc::vec::Vec::with_capacity(max as usize + 1);
    pows.push(Rational::one());
    for k in 1..=max as usize {
        pows.push(&pows[k - 1] * base);
    }
    pows
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c);
        }
        out
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.times(m2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}",
            crate::parser::pretty_print(self, &crate::parser::VarNames::default())
        )
    }
}
