//! Acceptance suite: one test per criterion, every tolerance pinned in code.
//! Exact checks use zero tolerance; the only floating-point bar is the
//! relative 1e-9 quadrature agreement. Run with `--nocapture` to see one
//! PASS line per criterion.

use convpde::oracle::{
    conv_numeric_at, conv_oracle_exact, eval_f64, run_invariance_experiment, ExperimentConfig,
    Family,
};
use convpde::repro::{run_repro, ExpectedValues};
use convpde_core::{
    closed_form_chain_coeff, conv_chain, convolve, convolved_principal, discriminant, parse_poly,
    pretty_print, sign_summary, Axis, BiPoly, KernelChain, Monomial, Rational, SecondOrderPde,
    SignMethod, TypeVerdict, VarNames,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn rat(n: i128, d: i128) -> Rational {
    Rational::new(n, d).unwrap()
}

fn mono(d1: u32, d2: u32) -> BiPoly {
    BiPoly::monomial(Rational::integer(1), Monomial::new(d1, d2))
}

fn cmono(n: i128, d: i128, d1: u32, d2: u32) -> BiPoly {
    BiPoly::monomial(rat(n, d), Monomial::new(d1, d2))
}

fn random_poly(rng: &mut ChaCha8Rng, max_deg: u32, max_terms: usize, positive: bool) -> BiPoly {
    let n_terms = rng.gen_range(1..=max_terms);
    BiPoly::from_terms((0..n_terms).map(|_| {
        let lo = if positive { 1 } else { -9 };
        (
            Monomial::new(rng.gen_range(0..=max_deg), rng.gen_range(0..=max_deg)),
            Rational::new(rng.gen_range(lo..=9i64), rng.gen_range(1..=9i64)).unwrap(),
        )
    }))
}

fn random_axis(rng: &mut ChaCha8Rng) -> Axis {
    match rng.gen_range(0..3) {
        0 => Axis::X,
        1 => Axis::Y,
        _ => Axis::Xy,
    }
}

#[test]
fn criterion_1_single_convolution_in_x() {
    let x3 = mono(3, 0);
    assert_eq!(conv_chain(&chain(&[(3, 0)], Axis::X), &mono(2, 3)), cmono(1, 60, 6, 3));
    assert_eq!(convolve(&x3, &mono(2, 3), Axis::X), cmono(1, 60, 6, 3));
    assert_eq!(convolve(&x3, &mono(3, 4), Axis::X), cmono(1, 140, 7, 4));
    assert_eq!(convolve(&x3, &mono(4, 5), Axis::X), cmono(1, 280, 8, 5));

    let pde = SecondOrderPde::new(mono(2, 3), mono(3, 4), mono(4, 5)).unwrap();
    let t = convolved_principal(&pde, &chain(&[(3, 0)], Axis::X));
    assert_eq!(discriminant(&t), cmono(-1, 117600, 14, 8));
    println!("PASS criterion 1: single convolution in x reproduces all four exact values");
}

#[test]
fn criterion_2_single_convolution_in_y_with_corrected_coefficient() {
    let y7 = mono(0, 7);
    assert_eq!(convolve(&y7, &mono(2, 3), Axis::Y), cmono(1, 1320, 2, 11));
    assert_eq!(convolve(&y7, &mono(4, 5), Axis::Y), cmono(1, 10296, 4, 13));
    // the engine must produce 1/3960, not the printed 1/3860
    assert_eq!(convolve(&y7, &mono(3, 4), Axis::Y), cmono(1, 3960, 3, 12));

    let pde = SecondOrderPde::new(mono(2, 3), mono(3, 4), mono(4, 5)).unwrap();
    let t = convolved_principal(&pde, &chain(&[(0, 7)], Axis::Y));
    assert_eq!(discriminant(&t), cmono(-1, 101930400, 6, 24));

    // and the reproduction suite must flag the misprint
    let report = run_repro(&ExpectedValues::default());
    assert!(report.all_pass);
    assert!(report.discrepancy.contains("1/3860"));
    assert!(report.discrepancy.contains("1/3960"));
    println!("PASS criterion 2: single convolution in y exact, 1/3860 misprint flagged");
}

fn chain(kernels: &[(u32, u32)], axis: Axis) -> KernelChain {
    KernelChain::new(kernels.iter().map(|&(a, b)| mono(a, b)).collect(), axis).unwrap()
}

#[test]
fn criterion_3_double_convolution_chains() {
    // wave 1: coefficients and discriminant
    let wave1 = SecondOrderPde::new(mono(2, 7), BiPoly::zero(), -&mono(6, 5)).unwrap();
    let t1 = convolved_principal(&wave1, &chain(&[(5, 2), (4, 3)], Axis::Xy));
    assert_eq!(t1.a, cmono(1, 1558311955200, 13, 14));
    assert_eq!(t1.c, cmono(-1, 57058191590400, 17, 12));
    assert_eq!(
        discriminant(&t1),
        cmono(1, 88914462097412421550080000, 30, 26)
    );

    // waves 2 and 3 share the coefficient pair
    let wave23 = SecondOrderPde::new(mono(3, 7), BiPoly::zero(), -&mono(7, 5)).unwrap();
    let d2 = discriminant(&convolved_principal(&wave23, &chain(&[(1, 9), (5, 3)], Axis::Xy)));
    assert_eq!(d2, cmono(1, 259841930424676205263257600000, 26, 40));
    let d3 = discriminant(&convolved_principal(&wave23, &chain(&[(3, 4), (6, 5)], Axis::Xy)));
    assert_eq!(d3, cmono(1, 26409729190021827098490961920000, 32, 34));

    // elliptic double-convolution example
    let elliptic = SecondOrderPde::new(mono(2, 3), mono(3, 4), mono(4, 5)).unwrap();
    let de = discriminant(&convolved_principal(&elliptic, &chain(&[(7, 4), (3, 2)], Axis::Xy)));
    assert_eq!(de, cmono(-23, 466987721099855155200000000, 30, 24));
    println!("PASS criterion 3: all five double-convolution values reproduced exactly");
}

#[test]
fn criterion_4_classification_verdicts() {
    let elliptic = SecondOrderPde::new(mono(2, 3), mono(3, 4), mono(4, 5)).unwrap();
    let wave1 = SecondOrderPde::new(mono(2, 7), BiPoly::zero(), -&mono(6, 5)).unwrap();
    let wave23 = SecondOrderPde::new(mono(3, 7), BiPoly::zero(), -&mono(7, 5)).unwrap();

    let cases: [(&SecondOrderPde, KernelChain, TypeVerdict); 5] = [
        (&elliptic, chain(&[(3, 0)], Axis::X), TypeVerdict::Elliptic),
        (&elliptic, chain(&[(0, 7)], Axis::Y), TypeVerdict::Elliptic),
        (&wave1, chain(&[(5, 2), (4, 3)], Axis::Xy), TypeVerdict::Hyperbolic),
        (&wave23, chain(&[(1, 9), (5, 3)], Axis::Xy), TypeVerdict::Hyperbolic),
        (&wave23, chain(&[(3, 4), (6, 5)], Axis::Xy), TypeVerdict::Hyperbolic),
    ];
    for (pde, kernel_chain, expected) in cases {
        let d = discriminant(&convolved_principal(pde, &kernel_chain));
        let signs = sign_summary(&d);
        assert_eq!(signs.method, SignMethod::MonomialParity, "conclusive path required");
        assert!(signs.conclusive);
        assert_eq!(signs.quadrants.map(TypeVerdict::from_sign), [expected; 4]);
    }
    println!("PASS criterion 4: verdicts match in all four open quadrants via monomial parity");
}

#[test]
fn criterion_5_oracle_equivalence() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for trial in 0..300 {
        let p = random_poly(&mut rng, 8, 4, false);
        let q = random_poly(&mut rng, 8, 4, false);
        let axis = random_axis(&mut rng);
        assert_eq!(
            convolve(&p, &q, axis),
            conv_oracle_exact(&p, &q, axis),
            "trial {}",
            trial
        );
    }
    // quadrature at points in [1/2, 2], relative 1e-9
    for trial in 0..100 {
        let p = random_poly(&mut rng, 8, 3, false);
        let q = random_poly(&mut rng, 8, 3, false);
        let axis = random_axis(&mut rng);
        let x0 = 0.5 + 1.5 * rng.gen::<f64>();
        let y0 = 0.5 + 1.5 * rng.gen::<f64>();
        let numeric = conv_numeric_at(&p, &q, axis, (x0, y0), 64).unwrap();
        let reference = eval_f64(&convolve(&p, &q, axis), x0, y0);
        let scale = reference.abs().max(1e-300);
        assert!(
            (numeric - reference).abs() / scale < 1e-9,
            "trial {}: {} vs {}",
            trial,
            numeric,
            reference
        );
    }
    println!("PASS criterion 5: engine = binomial oracle on 300 cases; quadrature within 1e-9");
}

#[test]
fn criterion_6_algebraic_laws() {
    let mut rng = ChaCha8Rng::seed_from_u64(6001);

    // commutativity
    for _ in 0..200 {
        let (p, q) = (
            random_poly(&mut rng, 5, 3, false),
            random_poly(&mut rng, 5, 3, false),
        );
        let axis = random_axis(&mut rng);
        assert_eq!(convolve(&p, &q, axis), convolve(&q, &p, axis));
    }
    // associativity
    for _ in 0..200 {
        let p = random_poly(&mut rng, 4, 2, false);
        let q = random_poly(&mut rng, 4, 2, false);
        let r = random_poly(&mut rng, 4, 2, false);
        let axis = random_axis(&mut rng);
        assert_eq!(
            convolve(&convolve(&p, &q, axis), &r, axis),
            convolve(&p, &convolve(&q, &r, axis), axis)
        );
    }
    // bilinearity
    for _ in 0..200 {
        let p = random_poly(&mut rng, 4, 3, false);
        let q = random_poly(&mut rng, 4, 3, false);
        let r = random_poly(&mut rng, 4, 3, false);
        let alpha = rat(rng.gen_range(-9..=9i64) as i128, rng.gen_range(1..=9i64) as i128);
        let beta = rat(rng.gen_range(-9..=9i64) as i128, rng.gen_range(1..=9i64) as i128);
        let axis = random_axis(&mut rng);
        let blend = &q.scale(&alpha) + &r.scale(&beta);
        assert_eq!(
            convolve(&p, &blend, axis),
            &convolve(&p, &q, axis).scale(&alpha) + &convolve(&p, &r, axis).scale(&beta)
        );
    }
    // degree law on monomials
    for _ in 0..200 {
        let m1 = Monomial::new(rng.gen_range(0..=8), rng.gen_range(0..=8));
        let m2 = Monomial::new(rng.gen_range(0..=8), rng.gen_range(0..=8));
        let p = BiPoly::monomial(Rational::integer(1), m1);
        let q = BiPoly::monomial(Rational::integer(1), m2);
        assert_eq!(
            convolve(&p, &q, Axis::X).degrees().unwrap(),
            (m1.deg1 + m2.deg1 + 1, m1.deg2 + m2.deg2)
        );
        assert_eq!(
            convolve(&p, &q, Axis::Xy).degrees().unwrap(),
            (m1.deg1 + m2.deg1 + 1, m1.deg2 + m2.deg2 + 1)
        );
    }
    // positivity
    for _ in 0..200 {
        let p = random_poly(&mut rng, 5, 3, true);
        let q = random_poly(&mut rng, 5, 3, true);
        assert!(convolve(&p, &q, random_axis(&mut rng)).all_coeffs_positive());
    }
    // closed form equals fold on all-monomial chains
    for _ in 0..200 {
        let l = rng.gen_range(0..=4usize);
        let kernels: Vec<Monomial> = (0..l)
            .map(|_| Monomial::new(rng.gen_range(0..=9), rng.gen_range(0..=9)))
            .collect();
        let target = Monomial::new(rng.gen_range(0..=9), rng.gen_range(0..=9));
        let axis = random_axis(&mut rng);
        let kernel_polys = kernels
            .iter()
            .map(|&m| BiPoly::monomial(Rational::integer(1), m))
            .collect();
        let folded = conv_chain(
            &KernelChain::new(kernel_polys, axis).unwrap(),
            &BiPoly::monomial(Rational::integer(1), target),
        );
        let (_, coeff) = folded.as_monomial().unwrap();
        assert_eq!(coeff, &closed_form_chain_coeff(&kernels, target, axis));
    }
    println!("PASS criterion 6: six algebraic-law suites, 200 seeded trials each, all exact");
}

#[test]
fn criterion_7_invariance_experiment() {
    // positive-coefficient wave family: quadrant I is hyperbolic before and
    // after convolution in every one of 500 trials
    let wave = ExperimentConfig {
        trials: 500,
        max_degree: 6,
        max_chain_len: 3,
        seed: 0,
        axis: Axis::Xy,
        family: Family::Wave,
    };
    let report = run_invariance_experiment(&wave);
    assert_eq!(report.records.len(), 500);
    let all_hyperbolic_q1 = report
        .records
        .iter()
        .all(|r| r.original[0] == TypeVerdict::Hyperbolic && r.convolved[0] == TypeVerdict::Hyperbolic);
    assert!(all_hyperbolic_q1, "some trial broke quadrant-I hyperbolicity");

    // general family: the report deterministically records at least one
    // disagreement, including the reference equation that convolution turns
    // from parabolic into elliptic
    let general = ExperimentConfig {
        trials: 50,
        max_degree: 5,
        max_chain_len: 3,
        seed: 0,
        axis: Axis::Xy,
        family: Family::General,
    };
    let report = run_invariance_experiment(&general);
    assert!(report.disagree_count >= 1);
    let pinned = &report.records[0];
    assert_eq!(pinned.original, [TypeVerdict::Parabolic; 4]);
    assert_eq!(pinned.convolved, [TypeVerdict::Elliptic; 4]);
    assert!(!pinned.agree);
    println!("PASS criterion 7: wave family 500/500 hyperbolic on quadrant I; general family records the parabolic-to-elliptic disagreement");
}

#[test]
fn criterion_8_parser_round_trip_and_error_positions() {
    let vars = VarNames::default();
    let mut rng = ChaCha8Rng::seed_from_u64(8001);
    for trial in 0..500 {
        let p = random_poly(&mut rng, 10, 6, false);
        let printed = pretty_print(&p, &vars);
        let reparsed = parse_poly(&printed, &vars)
            .unwrap_or_else(|e| panic!("trial {}: {} on {:?}", trial, e, printed));
        assert_eq!(reparsed, p, "trial {} via {:?}", trial, printed);
    }
    let malformed = [
        "x^", "x^-1", "x^y", "(", ")", "(x", "x)", "1/", "1/0", "1/x", "x**y", "", "x y", "2.5",
        "x + + y", "x + ", "z", "x*-y", "--x", "^2", "x^99999999999999999999", "x & y", "1//2",
    ];
    for bad in malformed {
        let err = parse_poly(bad, &vars).expect_err(bad);
        assert!(err.pos <= bad.len());
    }
    println!("PASS criterion 8: 500 print/parse round-trips exact; malformed corpus all positioned errors");
}
