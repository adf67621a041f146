//! Arbitrary-precision exact rational arithmetic.
//!
//! Every coefficient in the engine is a [`Rational`]: a reduced fraction with
//! a positive denominator, backed by arbitrary-precision integers. There is
//! no floating-point mode; values such as
//! `1/88914462097412421550080000` must survive arithmetic exactly.

use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Errors from rational construction and arithmetic.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlgebraError {
    /// A fraction was constructed with denominator zero.
    ZeroDenominator,
    /// Division by an exact zero.
    DivisionByZero,
}

impl fmt::Display for AlgebraError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraError::ZeroDenominator => write!(f, "denominator is zero"),
            AlgebraError::DivisionByZero => write!(f, "division by zero"),
        }
    }
}

impl core::error::Error for AlgebraError {}

/// Three-way sign of an exact quantity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    /// Sign of the negated quantity.
    pub fn flipped(self) -> Sign {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
            Sign::Positive => Sign::Negative,
        }
    }

    /// Flips the sign when `odd` is true; used for parity arguments ((-1)^k).
    pub fn flipped_if(self, odd: bool) -> Sign {
        if odd {
            self.flipped()
        } else {
            self
        }
    }
}

/// An exact rational number in canonical form: `gcd(|numer|, denom) = 1`,
/// `denom >= 1`, zero represented as `0/1`.
///
/// Canonical form is maintained by every operation, so two values are equal
/// iff their numerator/denominator pairs are identical.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds the reduced fraction `numer/denom`.
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Result<Self, AlgebraError> {
        let denom = denom.into();
        if denom.is_zero() {
            return Err(AlgebraError::ZeroDenominator);
        }
        Ok(Rational(BigRational::new(numer.into(), denom)))
    }

    /// The integer `n` as a rational.
    pub fn integer(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn sign(&self) -> Sign {
        if self.0.is_positive() {
            Sign::Positive
        } else if self.0.is_negative() {
            Sign::Negative
        } else {
            Sign::Zero
        }
    }

    pub fn abs(&self) -> Rational {
        Rational(self.0.abs())
    }

    /// Exact division; `rhs` must be nonzero.
    pub fn checked_div(&self, rhs: &Rational) -> Result<Rational, AlgebraError> {
        if rhs.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(Rational(&self.0 / &rhs.0))
    }

    /// `self^exp` for a nonnegative exponent.
    pub fn powi(&self, exp: u32) -> Rational {
        let mut acc = Rational::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Nearest `f64`; only used by floating-point cross-checks, never by the
    /// exact engine itself.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

// Debug delegates to Display: the canonical fraction is the whole story.
impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::integer(n)
    }
}

macro_rules! impl_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                (&self).$method(&rhs)
            }
        }
    };
}

impl_binop!(Add, add);
impl_binop!(Sub, sub);
impl_binop!(Mul, mul);

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

/// Grow-on-demand factorial table.
///
/// Convolution folds request the same factorials over and over; each caller
/// owns its table, which keeps the memo race-free without any locking.
#[derive(Debug, Default)]
pub struct Factorials {
    // table[k] = k!
    table: Vec<BigInt>,
}

impl Factorials {
    pub fn new() -> Self {
        Factorials {
            table: alloc::vec![BigInt::one()],
        }
    }

    fn grow_to(&mut self, n: u32) {
        let n = n as usize;
        while self.table.len() <= n {
            let k = self.table.len();
            let next = &self.table[k - 1] * BigInt::from(k);
            self.table.push(next);
        }
    }

    /// `n!` as an exact integer.
    pub fn factorial(&mut self, n: u32) -> BigInt {
        self.grow_to(n);
        self.table[n as usize].clone()
    }

    /// The monomial convolution coefficient `m! n! / (m + n + 1)!`, i.e. the
    /// exact value of `∫₀ˣ (x−μ)ᵐ μⁿ dμ / x^{m+n+1}`.
    pub fn beta(&mut self, m: u32, n: u32) -> Rational {
        self.grow_to(m + n + 1);
        let numer = &self.table[m as usize] * &self.table[n as usize];
        let denom = self.table[(m + n + 1) as usize].clone();
        Rational(BigRational::new(numer, denom))
    }
}

/// One-shot [`Factorials::beta`]; positive for all `m`, `n`.
pub fn beta_coefficient(m: u32, n: u32) -> Rational {
    Factorials::new().beta(m, n)
}
