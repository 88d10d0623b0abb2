use braidist_cli::parse::{parse_braid, parse_morphism, parse_object};
use braidist_core::expr::{MorphExpr, ObjectExpr};
use proptest::prelude::*;

fn object() -> impl Strategy<Value = ObjectExpr> {
    let leaf = prop_oneof![
        Just(ObjectExpr::Zero),
        Just(ObjectExpr::One),
        "[A-D]|x|y2|long_name".prop_map(ObjectExpr::atom),
    ];
    leaf.prop_recursive(4, 16, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| ObjectExpr::sum(a, b)),
            (inner.clone(), inner).prop_map(|(a, b)| ObjectExpr::prod(a, b)),
        ]
    })
}

// Syntactic only: the printer and parser do not care about types.
fn morphism() -> impl Strategy<Value = MorphExpr> {
    let o = object;
    let leaf = prop_oneof![
        o().prop_map(MorphExpr::Id),
        (o(), o(), o()).prop_map(|(a, b, c)| MorphExpr::AlphaPlus(a, b, c)),
        (o(), o(), o()).prop_map(|(a, b, c)| MorphExpr::AlphaTimes(a, b, c)),
        o().prop_map(MorphExpr::LambdaPlus),
        o().prop_map(MorphExpr::RhoPlus),
        o().prop_map(MorphExpr::LambdaTimes),
        o().prop_map(MorphExpr::RhoTimes),
        (o(), o()).prop_map(|(a, b)| MorphExpr::GammaPlus(a, b)),
        (o(), o()).prop_map(|(a, b)| MorphExpr::GammaTimes(a, b)),
        (o(), o(), o()).prop_map(|(a, b, c)| MorphExpr::Delta(a, b, c)),
        o().prop_map(MorphExpr::Epsilon),
    ];
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(MorphExpr::inv),
            (inner.clone(), inner.clone()).prop_map(|(f, g)| MorphExpr::comp(f, g)),
            (inner.clone(), inner.clone()).prop_map(|(f, g)| MorphExpr::sum(f, g)),
            (inner.clone(), inner).prop_map(|(f, g)| MorphExpr::prod(f, g)),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn objects_round_trip(x in object()) {
        let printed = x.to_string();
        prop_assert_eq!(parse_object(&printed).unwrap(), x, "{}", printed);
    }

    #[test]
    fn morphisms_round_trip(m in morphism()) {
        let printed = m.to_string();
        prop_assert_eq!(parse_morphism(&printed).unwrap(), m, "{}", printed);
    }

    #[test]
    fn braid_words_round_trip(cs in prop::collection::vec((0usize..5, any::<bool>()), 0..12)) {
        let text = if cs.is_empty() {
            "e".to_string()
        } else {
            cs.iter()
                .map(|(i, inv)| format!("s{}{}", i + 1, if *inv { "'" } else { "" }))
                .collect::<Vec<_>>()
                .join(" ")
        };
        let parsed = parse_braid(&text).unwrap();
        prop_assert_eq!(parsed.len(), cs.len());
        for (c, (i, inv)) in parsed.iter().zip(&cs) {
            prop_assert_eq!(c.index, i + 1);
            prop_assert_eq!(c.positive, !*inv);
        }
    }
}

#[test]
fn whitespace_and_parentheses_are_ignored() {
    let a = parse_morphism("( gT(A , B) ) ; ( gT(B,A) )").unwrap();
    let b = parse_morphism("gT(A,B);gT(B,A)").unwrap();
    assert_eq!(a, b);
}
