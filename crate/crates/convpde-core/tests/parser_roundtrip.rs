//! Parser totality and print/parse round-trip properties.

mod common;

use common::arb_poly;
use convpde_core::{parse_poly, pretty_print, VarNames};
use proptest::prelude::*;

/// Strings produced by walking the grammar; every one of them must parse.
/// Operands are parenthesized so the productions compose freely.
fn arb_wellformed_expr() -> impl Strategy<Value = String> {
    let leaf = prop_oneof![
        (0u64..=999).prop_map(|n| n.to_string()),
        (0u64..=999, 1u64..=99).prop_map(|(n, d)| format!("{}/{}", n, d)),
        Just("x".to_string()),
        Just("y".to_string()),
    ];
    leaf.prop_recursive(3, 32, 4, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("({}) + ({})", a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("({}) - ({})", a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("({})*({})", a, b)),
            (inner.clone(), 0u32..=3).prop_map(|(a, e)| format!("({})^{}", a, e)),
            inner.prop_map(|a| format!("-({})", a)),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn print_then_parse_is_identity(p in arb_poly(10, 6)) {
        let vars = VarNames::default();
        let printed = pretty_print(&p, &vars);
        let reparsed = parse_poly(&printed, &vars).unwrap();
        prop_assert_eq!(reparsed, p);
    }

    #[test]
    fn print_then_parse_with_renamed_second_var(p in arb_poly(10, 6)) {
        let vars = VarNames::new("x", "t").unwrap();
        let printed = pretty_print(&p, &vars);
        let reparsed = parse_poly(&printed, &vars).unwrap();
        prop_assert_eq!(reparsed, p);
    }

    #[test]
    fn wellformed_strings_always_parse(s in arb_wellformed_expr()) {
        let vars = VarNames::default();
        prop_assert!(parse_poly(&s, &vars).is_ok(), "failed on {:?}", s);
    }

    #[test]
    fn arbitrary_input_never_panics(s in "\\PC{0,40}") {
        let _ = parse_poly(&s, &VarNames::default());
    }
}

#[test]
fn malformed_corpus_gives_positioned_errors() {
    let corpus = [
        "x^",
        "x^-1",
        "x^y",
        "x^(2)",
        "(",
        ")",
        "(x",
        "x)",
        "1/",
        "1/0",
        "1/x",
        "x**y",
        "",
        "   ",
        "x y",
        "2.5",
        "x + + y",
        "x + ",
        "z",
        "x*-y",
        "--x",
        "^2",
        "x^99999999999999999999",
        "x & y",
        "1//2",
    ];
    let vars = VarNames::default();
    for bad in corpus {
        let err = parse_poly(bad, &vars).expect_err(bad);
        assert!(err.pos <= bad.len(), "position out of range for {:?}", bad);
        // the Display form always carries the byte offset
        assert!(format!("{}", err).contains("byte"), "no position in {:?}", err);
    }
}
