//! JSON loaders for the built-in registry and the usage-hint table.

use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;

use fraggen_core::normalize::BuiltinRegistry;
use fraggen_core::resolve::{JsType, UsageHints};
use serde::Deserialize;

use crate::error::{Error, Result};

/// Engines with a bundled registry.
pub const ENGINES: [&str; 5] = ["node", "chakra", "v8", "jsc", "spidermonkey"];

const BUNDLED: [(&str, &str); 5] = [
    ("node", include_str!("../data/builtins/node.json")),
    ("chakra", include_str!("../data/builtins/chakra.json")),
    ("v8", include_str!("../data/builtins/v8.json")),
    ("jsc", include_str!("../data/builtins/jsc.json")),
    ("spidermonkey", include_str!("../data/builtins/spidermonkey.json")),
];

const DEFAULT_HINTS: &str = include_str!("../data/usage_hints.json");

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RegistryFile {
    #[serde(default)]
    names: BTreeSet<String>,
    #[serde(default)]
    test_functions: BTreeSet<String>,
    #[serde(default)]
    types: BTreeMap<String, String>,
}

fn js_type(name: &str) -> Result<JsType> {
    JsType::from_name(name).ok_or_else(|| Error::Format(format!("unknown type `{name}`")))
}

pub fn parse_builtins(text: &str) -> Result<BuiltinRegistry> {
    let f: RegistryFile = serde_json::from_str(text)?;
    let types = f.types.iter().map(|(n, t)| Ok((n.clone(), js_type(t)?))).collect::<Result<_>>()?;
    Ok(BuiltinRegistry { names: f.names, test_functions: f.test_functions, types })
}

/// The registry bundled for `engine`.
pub fn bundled_builtins(engine: &str) -> Result<BuiltinRegistry> {
    let (_, text) = BUNDLED
        .iter()
        .find(|(name, _)| *name == engine)
        .ok_or_else(|| Error::Format(format!("no bundled registry for `{engine}` (known: {})", ENGINES.join(", "))))?;
    parse_builtins(text)
}

/// `spec` is either a bundled engine name or a path to a registry file.
pub fn load_builtins(spec: &str) -> Result<BuiltinRegistry> {
    if ENGINES.contains(&spec) {
        return bundled_builtins(spec);
    }
    let path = Path::new(spec);
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_builtins(&text)
}

pub fn parse_usage_hints(text: &str) -> Result<UsageHints> {
    let raw: BTreeMap<String, String> = serde_json::from_str(text)?;
    let table = raw.iter().map(|(k, t)| Ok((k.clone(), js_type(t)?))).collect::<Result<_>>()?;
    Ok(UsageHints { table })
}

pub fn default_usage_hints() -> UsageHints {
    parse_usage_hints(DEFAULT_HINTS).expect("bundled usage hints are valid")
}

pub fn load_usage_hints(path: Option<&Path>) -> Result<UsageHints> {
    match path {
        None => Ok(default_usage_hints()),
        Some(p) => parse_usage_hints(&std::fs::read_to_string(p).map_err(|e| Error::io(p, e))?),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_files_parse() {
        for engine in ENGINES {
            let reg = bundled_builtins(engine).unwrap();
            for name in ["Math", "JSON", "Array", "undefined", "print"] {
                assert!(reg.contains(name), "{engine} lacks {name}");
            }
            assert_eq!(reg.types.get("Math"), Some(&JsType::Object));
        }
        assert!(bundled_builtins("chakra").unwrap().test_functions.contains("WScript"));
    }

    #[test]
    fn default_hints_match_built_in_table() {
        assert_eq!(default_usage_hints(), UsageHints::default());
    }

    #[test]
    fn bad_type_names_are_rejected() {
        assert!(parse_usage_hints(r#"{"call": "callable"}"#).is_err());
        assert!(parse_builtins(r#"{"names": [], "types": {"x": "float"}}"#).is_err());
        assert!(parse_builtins(r#"{"nmes": []}"#).is_err());
    }
}
