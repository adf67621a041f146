//! Shared generators for the property suites.
#![allow(dead_code)] // each test binary uses a different subset

use convpde_core::{Axis, BiPoly, Monomial, Rational};
use proptest::prelude::*;
use rand::Rng;

pub fn arb_rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=9).prop_map(|(n, d)| Rational::new(n, d).unwrap())
}

pub fn arb_nonzero_rational() -> impl Strategy<Value = Rational> {
    arb_rational().prop_filter("nonzero", |r| !r.is_zero())
}

/// A random sparse polynomial, possibly zero.
pub fn arb_poly(max_deg: u32, max_terms: usize) -> impl Strategy<Value = BiPoly> {
    prop::collection::vec((0..=max_deg, 0..=max_deg, arb_rational()), 0..=max_terms).prop_map(
        |terms| {
            BiPoly::from_terms(
                terms
                    .into_iter()
                    .map(|(d1, d2, c)| (Monomial::new(d1, d2), c)),
            )
        },
    )
}

/// A random polynomial with strictly positive coefficients (hence nonzero).
pub fn arb_positive_poly(max_deg: u32, max_terms: usize) -> impl Strategy<Value = BiPoly> {
    prop::collection::vec(
        (0..=max_deg, 0..=max_deg, (1i64..=9, 1i64..=9)),
        1..=max_terms,
    )
    .prop_map(|terms| {
        BiPoly::from_terms(terms.into_iter().map(|(d1, d2, (n, d))| {
            (Monomial::new(d1, d2), Rational::new(n, d).unwrap())
        }))
    })
}

pub fn arb_monomial(max_deg: u32) -> impl Strategy<Value = Monomial> {
    (0..=max_deg, 0..=max_deg).prop_map(|(d1, d2)| Monomial::new(d1, d2))
}

pub fn arb_axis() -> impl Strategy<Value = Axis> {
    prop_oneof![Just(Axis::X), Just(Axis::Y), Just(Axis::Xy)]
}

/// Seeded-rng counterpart of [`arb_positive_poly`] for fixed-count loops.
pub fn random_positive_poly<R: Rng>(rng: &mut R, max_deg: u32, max_terms: usize) -> BiPoly {
    let n_terms = rng.gen_range(1..=max_terms);
    BiPoly::from_terms((0..n_terms).map(|_| {
        (
            Monomial::new(rng.gen_range(0..=max_deg), rng.gen_range(0..=max_deg)),
            Rational::new(rng.gen_range(1..=9i64), rng.gen_range(1..=9i64)).unwrap(),
        )
    }))
}
