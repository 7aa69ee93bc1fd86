//! The parser service client, against a scripted fake and against acorn.

mod common;

use std::path::Path;

use fraggen::adapter::{Adapter, ADAPTER_ENV};
use fraggen::Error;
use fraggen_core::normalize::ProgramParser;

const FAKE: &str = r#"
import json, sys
mode = sys.argv[1]
for line in sys.stdin:
    req = json.loads(line)
    rid = req["id"]
    if mode == "garbage":
        print("this is not json", flush=True); continue
    if mode == "wrong-id":
        rid += 100
    if mode == "quit":
        sys.exit(0)
    if req["op"] == "parse" and "(" in req["source"]:
        reply = {"id": rid, "ok": False, "error": {"kind": "syntax", "message": "Unexpected token", "line": 1, "col": 4}}
    elif req["op"] == "parse":
        ast = {"type": "Program", "body": [{"type": "ExpressionStatement",
               "expression": {"type": "Identifier", "name": req["source"].strip()}}]}
        reply = {"id": rid, "ok": True, "ast": ast}
    elif req["op"] == "print":
        reply = {"id": rid, "ok": True, "source": req["ast"]["body"][0]["expression"]["name"] + ";"}
    else:
        reply = {"id": rid, "ok": False, "error": {"kind": "unsupported", "message": "no"}}
    print(json.dumps(reply), flush=True)
"#;

fn fake(dir: &Path, mode: &str) -> Adapter {
    let script = dir.join("fake.py");
    std::fs::write(&script, FAKE).unwrap();
    Adapter::spawn(&format!("python3 {} {mode}", script.display())).unwrap()
}

#[test]
fn requests_and_replies_pair_up() {
    let dir = tempfile::tempdir().unwrap();
    let a = fake(dir.path(), "ok");
    for name in ["alpha", "beta", "gamma"] {
        let ast = a.parse(name).unwrap();
        assert_eq!(ast.preorder()[2].ident_name(), Some(name));
        assert_eq!(a.print(&ast).unwrap(), format!("{name};"));
    }
    assert!(a.parse_program("delta").is_some());
}

#[test]
fn error_replies_carry_kind_and_position() {
    let dir = tempfile::tempdir().unwrap();
    let a = fake(dir.path(), "ok");
    match a.parse("f(") {
        Err(Error::Adapter { kind, message }) => {
            assert_eq!(kind, "syntax");
            assert_eq!(message, "Unexpected token (1:4)");
        }
        other => panic!("{other:?}"),
    }
    assert!(a.parse_program("f(").is_none());
    // The session survives an error reply.
    assert!(a.parse("ok").is_ok());
}

#[test]
fn protocol_violations_are_errors() {
    let dir = tempfile::tempdir().unwrap();
    for (mode, kind) in [("garbage", "protocol"), ("wrong-id", "protocol"), ("quit", "io")] {
        match fake(dir.path(), mode).parse("x") {
            Err(Error::Adapter { kind: k, .. }) => assert_eq!(k, kind, "{mode}"),
            other => panic!("{mode}: {other:?}"),
        }
    }
}

#[test]
fn environment_variable_selects_the_adapter() {
    // Only this test touches the variable.
    std::env::remove_var(ADAPTER_ENV);
    assert!(Adapter::from_env().unwrap().is_none());
    std::env::set_var(ADAPTER_ENV, "  ");
    assert!(Adapter::from_env().unwrap().is_none());
    let dir = tempfile::tempdir().unwrap();
    let script = dir.path().join("fake.py");
    std::fs::write(&script, FAKE).unwrap();
    std::env::set_var(ADAPTER_ENV, format!("python3 {} ok", script.display()));
    let a = Adapter::from_env().unwrap().expect("adapter");
    assert!(a.parse("x").is_ok());
    std::env::remove_var(ADAPTER_ENV);
}

#[test]
fn acorn_adapter_parses_real_programs() {
    let Some(a) = common::acorn_adapter() else { return };
    let ast = a.parse("let x = 1 + 2;\nfunction f(a) { return a * x; }\n").unwrap();
    assert_eq!(ast.kind, fraggen_core::NodeKind::Program);
    assert_eq!(fraggen_core::print::print_program(&ast).unwrap(), "let x = 1 + 2;\nfunction f(a) {\n  return a * x;\n}");
    match a.parse("let = ;") {
        Err(Error::Adapter { kind, message }) => {
            assert_eq!(kind, "syntax");
            assert!(message.contains(" (1:"), "{message}");
        }
        other => panic!("{other:?}"),
    }
    // Syntax outside the supported kinds is refused by the decoder.
    assert!(matches!(a.parse("a?.b"), Err(Error::Core(_))));
}
