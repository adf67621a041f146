//! Classification properties: pointwise/sign-summary agreement, wave-family
//! positivity, and discriminant symmetries.

mod common;

use common::{arb_poly, arb_rational, random_positive_poly};
use convpde_core::{
    analyze_triple, classify_at_point, classify_equation, discriminant, sign_summary, Axis,
    BiPoly, Classification, KernelChain, PrincipalTriple, Quadrant, Rational, SecondOrderPde,
    SignVerdict,
};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn pointwise_classification_is_sign_of_value(
        d in arb_poly(6, 4),
        x in arb_rational(),
        y in arb_rational(),
    ) {
        let value = d.eval(&x, &y);
        let expected = if value.is_positive() {
            Classification::Hyperbolic
        } else if value.is_negative() {
            Classification::Elliptic
        } else {
            Classification::Parabolic
        };
        prop_assert_eq!(classify_at_point(&d, &x, &y), expected);
    }

    #[test]
    fn discriminant_symmetric_in_outer_coefficients(
        a in arb_poly(5, 3),
        b in arb_poly(5, 3),
        c in arb_poly(5, 3),
    ) {
        let t1 = PrincipalTriple { a: a.clone(), b: b.clone(), c: c.clone() };
        let t2 = PrincipalTriple { a: c, b, c: a };
        prop_assert_eq!(discriminant(&t1), discriminant(&t2));
    }

    #[test]
    fn positive_scaling_preserves_verdicts(
        a in arb_poly(5, 3),
        b in arb_poly(5, 3),
        c in arb_poly(5, 3),
        n in 1i64..=9,
        d in 1i64..=9,
    ) {
        let lambda = Rational::new(n, d).unwrap();
        let t = PrincipalTriple { a, b, c };
        let scaled = PrincipalTriple {
            a: t.a.scale(&lambda),
            b: t.b.scale(&lambda),
            c: t.c.scale(&lambda),
        };
        let base = analyze_triple(&t);
        let after = analyze_triple(&scaled);
        // D scales by lambda^2 exactly
        let lambda_sq = &lambda * &lambda;
        prop_assert_eq!(after.discriminant, base.discriminant.scale(&lambda_sq));
        prop_assert_eq!(after.types, base.types);
    }

    #[test]
    fn conclusive_summaries_match_pointwise_probe(d in arb_poly(6, 3)) {
        let s = sign_summary(&d);
        if !s.conclusive {
            return Ok(());
        }
        for q in Quadrant::ALL {
            let (mx, my) = (Rational::new(3, 2).unwrap(), Rational::new(5, 4).unwrap());
            let x = if q.x_negative() { -&mx } else { mx.clone() };
            let y = if q.y_negative() { -&my } else { my.clone() };
            let value = d.eval(&x, &y);
            match s.verdict(q) {
                SignVerdict::Positive => prop_assert!(value.is_positive()),
                SignVerdict::Negative => prop_assert!(value.is_negative()),
                SignVerdict::Zero => prop_assert!(value.is_zero()),
                _ => prop_assert!(false, "conclusive summary with inconclusive verdict"),
            }
        }
    }
}

#[test]
fn wave_family_discriminant_positive_on_first_quadrant() {
    // a u_tt - c u_xx with positive-coefficient polynomials and positive
    // kernels: D = A * |C| must be positive on the open first quadrant,
    // before and after convolution.
    let mut rng = ChaCha8Rng::seed_from_u64(7001);
    for trial in 0..500 {
        let a = random_positive_poly(&mut rng, 5, 3);
        let c_abs = random_positive_poly(&mut rng, 5, 3);
        let kernels: Vec<BiPoly> = (0..rng.gen_range(1..=3))
            .map(|_| random_positive_poly(&mut rng, 4, 2))
            .collect();
        let axis = match rng.gen_range(0..3) {
            0 => Axis::X,
            1 => Axis::Y,
            _ => Axis::Xy,
        };
        let pde = SecondOrderPde::new(a, BiPoly::zero(), -&c_abs).unwrap();
        let chain = KernelChain::new(kernels, axis).unwrap();
        let report = classify_equation(&pde, &chain);
        assert_eq!(
            report.original.signs.verdict(Quadrant::I),
            SignVerdict::Positive,
            "trial {}",
            trial
        );
        assert_eq!(
            report.convolved.signs.verdict(Quadrant::I),
            SignVerdict::Positive,
            "trial {}",
            trial
        );
    }
}
