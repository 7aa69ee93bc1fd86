//! ESTree JSON decoding and encoding.

mod common;

use fraggen::estree::{self, STUB_TYPE};
use fraggen::Error;
use fraggen_core::fragment::fragmentize;
use fraggen_testkit::program_strategy;
use proptest::prelude::*;
use serde_json::Value as Json;

#[test]
fn every_fixture_round_trips() {
    let mut n = 0;
    for path in fraggen::store::json_files(&common::fixtures().join("ast")).unwrap() {
        let text = std::fs::read_to_string(&path).unwrap();
        let ast = estree::decode_ast(&text).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        let again = estree::decode_ast(&estree::encode_ast(&ast).unwrap()).unwrap();
        assert_eq!(again, ast, "{}", path.display());
        n += 1;
    }
    assert!(n >= 1000, "only {n} fixtures");
}

#[test]
fn unsupported_syntax_is_rejected() {
    let dir = common::fixtures().join("unsupported/ast");
    let files = fraggen::store::json_files(&dir).unwrap();
    assert!(!files.is_empty());
    for path in files {
        let err = estree::decode_ast(&std::fs::read_to_string(&path).unwrap()).unwrap_err();
        assert!(matches!(err, Error::Core(_)), "{}: {err}", path.display());
    }
}

#[test]
fn malformed_json_is_a_json_error() {
    assert!(matches!(estree::decode_ast("{\"type\": "), Err(Error::Json(_))));
}

#[test]
fn missing_required_child_is_rejected() {
    let text = r#"{"type":"Program","body":[{"type":"ExpressionStatement"}]}"#;
    assert!(estree::decode_ast(text).is_err());
}

/// Every object carrying a `type` field, as JSON pointers.
fn typed_pointers(j: &Json, at: String, out: &mut Vec<String>) {
    match j {
        Json::Object(m) => {
            if m.contains_key("type") {
                out.push(at.clone());
            }
            for (k, v) in m {
                typed_pointers(v, format!("{at}/{k}"), out);
            }
        }
        Json::Array(items) => {
            for (i, v) in items.iter().enumerate() {
                typed_pointers(v, format!("{at}/{i}"), out);
            }
        }
        _ => {}
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn random_programs_round_trip(ast in program_strategy(150)) {
        let text = estree::encode_ast(&ast).unwrap();
        prop_assert_eq!(estree::decode_ast(&text).unwrap(), ast);
    }

    #[test]
    fn unknown_kinds_are_rejected_anywhere(
        ast in program_strategy(80),
        pick in any::<prop::sample::Index>(),
        name in "[A-Z][a-zA-Z]{3,12}",
    ) {
        prop_assume!(fraggen_core::NodeKind::from_name(&name).is_none());
        let mut json = estree::to_json(&ast).unwrap();
        let mut ptrs = Vec::new();
        typed_pointers(&json, String::new(), &mut ptrs);
        let at = &ptrs[pick.index(ptrs.len())];
        json.pointer_mut(&format!("{at}/type")).map(|t| *t = Json::String(name));
        prop_assert!(estree::from_json(&json).is_err());
    }

    #[test]
    fn fragments_round_trip_with_stubs(ast in program_strategy(100)) {
        for frag in fragmentize(&ast).fragments {
            let j = estree::fragment_to_json(&frag);
            if !frag.stubs().is_empty() {
                prop_assert!(j.to_string().contains(STUB_TYPE));
            }
            prop_assert_eq!(estree::fragment_from_json(&j).unwrap(), frag);
        }
    }
}
