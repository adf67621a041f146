//! Binomial-expansion integrator.
//!
//! Computes monomial convolutions by expanding `(x - θ)^i` with binomial
//! coefficients and integrating term by term, instead of through the
//! factorial-ratio coefficient the engine uses. The two routes must agree
//! exactly; this one exists to check the other.

use convpde_core::{Axis, BiPoly, Monomial, Rational};
use num_bigint::BigInt;

/// Multiplier of `x^(i+a+1)` in `∫₀ˣ (x-θ)^i θ^a dθ`, as the alternating sum
/// `Σ_k (-1)^k C(i,k) / (k+a+1)`.
fn binomial_integral_multiplier(i: u32, a: u32) -> Rational {
    let mut sum = Rational::zero();
    let mut binom = BigInt::from(1);
    for k in 0..=i {
        if k > 0 {
            // C(i,k) from C(i,k-1); the division is always exact
            binom = binom * BigInt::from(i - k + 1) / BigInt::from(k);
        }
        let signed = if k % 2 == 1 { -binom.clone() } else { binom.clone() };
        let term = Rational::new(signed, BigInt::from(k + a + 1)).expect("k+a+1 >= 1");
        sum = &sum + &term;
    }
    sum
}

/// Convolution computed by the binomial-expansion route. Exactly equals the
/// engine's result on every input; used as an acceptance oracle.
pub fn conv_oracle_exact(p: &BiPoly, q: &BiPoly, axis: Axis) -> BiPoly {
    let mut out = BiPoly::zero();
    for (m1, c1) in p.terms() {
        for (m2, c2) in q.terms() {
            let (mono, mult) = match axis {
                Axis::X => (
                    Monomial::new(m1.deg1 + m2.deg1 + 1, m1.deg2 + m2.deg2),
                    binomial_integral_multiplier(m1.deg1, m2.deg1),
                ),
                Axis::Y => (
                    Monomial::new(m1.deg1 + m2.deg1, m1.deg2 + m2.deg2 + 1),
                    binomial_integral_multiplier(m1.deg2, m2.deg2),
                ),
                Axis::Xy => (
                    Monomial::new(m1.deg1 + m2.deg1 + 1, m1.deg2 + m2.deg2 + 1),
                    &binomial_integral_multiplier(m1.deg1, m2.deg1)
                        * &binomial_integral_multiplier(m1.deg2, m2.deg2),
                ),
            };
            let contribution = BiPoly::monomial(&(c1 * c2) * &mult, mono);
            out = &out + &contribution;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    fn mono(n: i64, d: i64, d1: u32, d2: u32) -> BiPoly {
        BiPoly::monomial(rat(n, d), Monomial::new(d1, d2))
    }

    #[test]
    fn alternating_sum_collapses_to_exact_fraction() {
        // ∫₀ˣ (x-θ)^3 θ^2 dθ = x^6/60
        assert_eq!(binomial_integral_multiplier(3, 2), rat(1, 60));
        assert_eq!(binomial_integral_multiplier(0, 0), rat(1, 1));
        // the value the engine must produce where the reference table
        // misprints 1/3860
        assert_eq!(binomial_integral_multiplier(7, 4), rat(1, 3960));
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(
            conv_oracle_exact(&mono(1, 1, 3, 0), &mono(1, 1, 2, 0), Axis::X),
            mono(1, 60, 6, 0)
        );
        assert_eq!(
            conv_oracle_exact(&mono(1, 1, 0, 7), &mono(1, 1, 3, 4), Axis::Y),
            mono(1, 3960, 3, 12)
        );
        assert_eq!(
            conv_oracle_exact(&BiPoly::one(), &BiPoly::one(), Axis::X),
            BiPoly::var1()
        );
    }
}
