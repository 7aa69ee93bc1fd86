//! ESTree JSON codec for [`AstNode`] trees and fragments.
//!
//! Fragments are stored with their stubs as `{"type": "$stub", "kind": K}`.

use fraggen_core::ast::SlotArity;
use fraggen_core::fragment::Fragment;
use fraggen_core::{AstNode, Error as CoreError, NodeKind, Slot, Value};
use serde_json::{json, Map, Number, Value as Json};

use crate::error::Result;

pub const STUB_TYPE: &str = "$stub";

/// Parses ESTree JSON text. Locations, comments and unknown fields are
/// ignored; kinds outside the registry are rejected.
pub fn decode_ast(text: &str) -> Result<AstNode> {
    let json: Json = serde_json::from_str(text)?;
    Ok(from_json(&json)?)
}

pub fn from_json(json: &Json) -> Result<AstNode, CoreError> {
    decode_node(json, &mut String::new(), false)
}

/// Serializes a stub-free tree.
pub fn encode_ast(ast: &AstNode) -> Result<String> {
    Ok(serde_json::to_string(&to_json(ast)?)?)
}

pub fn to_json(ast: &AstNode) -> Result<Json, CoreError> {
    encode_node(ast, false)
}

pub fn fragment_to_json(frag: &Fragment) -> Json {
    encode_node(frag.as_node(), true).expect("stubs are allowed")
}

pub fn fragment_from_json(json: &Json) -> Result<Fragment> {
    let node = decode_node(json, &mut String::new(), true)?;
    Ok(Fragment::from_node(node)?)
}

fn malformed(path: &str) -> CoreError {
    CoreError::MalformedAst(path.to_string())
}

fn decode_node(json: &Json, path: &mut String, allow_stubs: bool) -> Result<AstNode, CoreError> {
    let obj = json.as_object().ok_or_else(|| malformed(path))?;
    let ty = obj.get("type").and_then(Json::as_str).ok_or_else(|| malformed(path))?;
    let kind = NodeKind::from_name(ty).ok_or_else(|| CoreError::UnsupportedKind(ty.to_string()))?;
    if path.is_empty() {
        path.push_str(ty);
    }
    let mut slots = Vec::with_capacity(kind.schema().len());
    for spec in kind.schema() {
        let len = path.len();
        path.push('.');
        path.push_str(spec.name);
        let field = obj.get(spec.name).filter(|v| !v.is_null());
        let slot = match spec.arity {
            SlotArity::Node => match field {
                Some(v) => decode_child(v, path, allow_stubs)?,
                None => return Err(malformed(path)),
            },
            SlotArity::OptNode => match field {
                Some(v) => decode_child(v, path, allow_stubs)?,
                None => Slot::Absent,
            },
            SlotArity::NodeList | SlotArity::HoleyList => {
                let items = match field {
                    Some(v) => v.as_array().ok_or_else(|| malformed(path))?,
                    None => return Err(malformed(path)),
                };
                let mut out = Vec::with_capacity(items.len());
                for (i, item) in items.iter().enumerate() {
                    let l = path.len();
                    path.push_str(&format!("[{i}]"));
                    out.push(match item {
                        Json::Null if spec.arity == SlotArity::HoleyList => Slot::Absent,
                        Json::Null => return Err(malformed(path)),
                        v => decode_child(v, path, allow_stubs)?,
                    });
                    path.truncate(l);
                }
                Slot::List(out)
            }
            SlotArity::Value => Slot::Value(decode_value(kind, spec.name, obj, path)?),
        };
        path.truncate(len);
        slots.push(slot);
    }
    AstNode::new(kind, slots)
}

fn decode_child(json: &Json, path: &mut String, allow_stubs: bool) -> Result<Slot, CoreError> {
    if json.get("type").and_then(Json::as_str) == Some(STUB_TYPE) {
        if !allow_stubs {
            return Err(malformed(path));
        }
        let name = json.get("kind").and_then(Json::as_str).ok_or_else(|| malformed(path))?;
        let kind = NodeKind::from_name(name).ok_or_else(|| CoreError::UnsupportedKind(name.to_string()))?;
        return Ok(Slot::Stub(kind));
    }
    Ok(Slot::node(decode_node(json, path, allow_stubs)?))
}

fn primitive(json: Option<&Json>, path: &str) -> Result<Value, CoreError> {
    match json {
        None | Some(Json::Null) => Ok(Value::Null),
        Some(Json::Bool(b)) => Ok(Value::Bool(*b)),
        Some(Json::Number(n)) => n.as_f64().map(Value::Num).ok_or_else(|| malformed(path)),
        Some(Json::String(s)) => Ok(Value::Str(s.clone())),
        Some(_) => Err(malformed(path)),
    }
}

fn decode_value(kind: NodeKind, slot: &str, obj: &Map<String, Json>, path: &str) -> Result<Value, CoreError> {
    match (kind, slot) {
        (NodeKind::Literal, "value") => {
            if obj.get("bigint").is_some_and(|b| !b.is_null()) {
                return Err(CoreError::UnsupportedKind("BigIntLiteral".into()));
            }
            if let Some(re) = obj.get("regex").filter(|r| !r.is_null()) {
                let part = |k: &str| re.get(k).and_then(Json::as_str).map(String::from).ok_or_else(|| malformed(path));
                return Ok(Value::Regex { pattern: part("pattern")?, flags: part("flags")? });
            }
            primitive(obj.get("value"), path)
        }
        (NodeKind::TemplateElement, "raw" | "cooked") => {
            primitive(obj.get("value").and_then(|v| v.get(slot)), path)
        }
        _ => primitive(obj.get(slot), path),
    }
}

fn number(n: f64) -> Json {
    if n.fract() == 0.0 && n.abs() < 1e15 && !(n == 0.0 && n.is_sign_negative()) {
        Json::from(n as i64)
    } else {
        Number::from_f64(n).map(Json::Number).unwrap_or(Json::Null)
    }
}

fn encode_value(v: &Value) -> Json {
    match v {
        Value::Null | Value::Regex { .. } => Json::Null,
        Value::Bool(b) => Json::Bool(*b),
        Value::Num(n) => number(*n),
        Value::Str(s) => Json::String(s.clone()),
    }
}

fn encode_slot(slot: &Slot, allow_stubs: bool) -> Result<Json, CoreError> {
    match slot {
        Slot::Node(n) => encode_node(n, allow_stubs),
        Slot::Stub(k) if allow_stubs => Ok(json!({ "type": STUB_TYPE, "kind": k.name() })),
        Slot::Stub(_) => Err(CoreError::IncompleteAst),
        Slot::Absent => Ok(Json::Null),
        Slot::List(items) => items.iter().map(|i| encode_slot(i, allow_stubs)).collect::<Result<Vec<_>, _>>().map(Json::Array),
        Slot::Value(v) => Ok(encode_value(v)),
    }
}

fn encode_node(node: &AstNode, allow_stubs: bool) -> Result<Json, CoreError> {
    let mut obj = Map::new();
    obj.insert("type".into(), Json::String(node.kind.name().into()));
    match node.kind {
        NodeKind::TemplateElement => {
            obj.insert(
                "value".into(),
                json!({
                    "raw": encode_value(node.value("raw").unwrap_or(&Value::Null)),
                    "cooked": encode_value(node.value("cooked").unwrap_or(&Value::Null)),
                }),
            );
            obj.insert("tail".into(), Json::Bool(node.bool_value("tail")));
            return Ok(Json::Object(obj));
        }
        NodeKind::Literal => {
            if let Some(Value::Regex { pattern, flags }) = node.value("value") {
                obj.insert("value".into(), Json::Null);
                obj.insert("raw".into(), encode_value(node.value("raw").unwrap_or(&Value::Null)));
                obj.insert("regex".into(), json!({ "pattern": pattern, "flags": flags }));
                return Ok(Json::Object(obj));
            }
        }
        _ => {}
    }
    for (spec, slot) in node.kind.schema().iter().zip(&node.slots) {
        obj.insert(spec.name.into(), encode_slot(slot, allow_stubs)?);
    }
    // Fields implied by the tree, kept for consumers expecting full ESTree.
    match node.kind {
        NodeKind::Program => {
            obj.insert("sourceType".into(), json!("script"));
        }
        NodeKind::ArrowFunctionExpression => {
            let expression = node.child("body").map(|b| b.kind != NodeKind::BlockStatement).unwrap_or(false);
            obj.insert("id".into(), Json::Null);
            obj.insert("expression".into(), Json::Bool(expression));
            obj.insert("generator".into(), Json::Bool(false));
        }
        NodeKind::FunctionDeclaration | NodeKind::FunctionExpression => {
            obj.insert("expression".into(), Json::Bool(false));
        }
        NodeKind::UnaryExpression => {
            obj.insert("prefix".into(), Json::Bool(true));
        }
        _ => {}
    }
    Ok(Json::Object(obj))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use fraggen_core::ast::build::*;

    #[test]
    fn minimal_program() {
        let ast = decode_ast(r#"{"type":"Program","body":[{"type":"EmptyStatement"}]}"#).unwrap();
        assert_eq!(ast, program(vec![leaf(NodeKind::EmptyStatement)]));
        assert_eq!(
            encode_ast(&ast).unwrap(),
            r#"{"type":"Program","body":[{"type":"EmptyStatement"}],"sourceType":"script"}"#
        );
    }

    #[test]
    fn unknown_kind_and_bad_shape() {
        let err = decode_ast(r#"{"type":"WithStatement","object":null,"body":null}"#).unwrap_err();
        assert!(matches!(err, Error::Core(CoreError::UnsupportedKind(k)) if k == "WithStatement"));
        let err = decode_ast(r#"{"type":"Program","body":[{"type":"ExpressionStatement"}]}"#).unwrap_err();
        assert!(matches!(err, Error::Core(CoreError::MalformedAst(p)) if p == "Program.body[0].expression"));
    }

    #[test]
    fn stubs_are_refused_outside_fragments() {
        let mut ast = program(vec![expr_stmt(ident("v0"))]);
        if let Slot::List(items) = &mut ast.slots[0] {
            items[0] = Slot::Stub(NodeKind::ExpressionStatement);
        }
        assert!(matches!(encode_ast(&ast), Err(Error::Core(CoreError::IncompleteAst))));
        let frag = Fragment::of(&ast);
        assert_eq!(fragment_from_json(&fragment_to_json(&frag)).unwrap(), frag);
    }

    #[test]
    fn literals_round_trip() {
        let text = r#"{"type":"Program","body":[
            {"type":"ExpressionStatement","expression":{"type":"Literal","value":{},"raw":"/a+/g","regex":{"pattern":"a+","flags":"g"}}},
            {"type":"ExpressionStatement","expression":{"type":"Literal","value":1.5,"raw":"1.50"}},
            {"type":"ExpressionStatement","expression":{"type":"Literal","value":null,"raw":"null"}},
            {"type":"ExpressionStatement","expression":{"type":"TemplateLiteral","quasis":[{"type":"TemplateElement","value":{"raw":"a\\n","cooked":"a\n"},"tail":true}],"expressions":[]}},
            {"type":"ExpressionStatement","expression":{"type":"ArrayExpression","elements":[null,{"type":"Literal","value":-0.0,"raw":"0"}]}}
        ]}"#;
        let ast = decode_ast(text).unwrap();
        assert_eq!(decode_ast(&encode_ast(&ast).unwrap()).unwrap(), ast);
        let re = ast.preorder().into_iter().find(|n| matches!(n.value("value"), Some(Value::Regex { .. }))).unwrap();
        assert_eq!(re.str_value("raw"), Some("/a+/g"));
    }
}
