//! Small repeated corpus shared by unit tests.

use alloc::{vec, vec::Vec};

use crate::ast::{build::*, AstNode, NodeKind, Slot, Value};
use crate::fragment::{build_vocabulary, fragmentize, EncodedSequence, Vocabulary};

pub fn func_decl(name: &str, params: Vec<AstNode>, body: Vec<AstNode>) -> AstNode {
    AstNode {
        kind: NodeKind::FunctionDeclaration,
        slots: vec![
            Slot::node(ident(name)),
            Slot::List(params.into_iter().map(Slot::node).collect()),
            Slot::node(block(body)),
            Slot::Value(Value::Bool(false)),
            Slot::Value(Value::Bool(false)),
        ],
    }
}

pub fn ret(arg: AstNode) -> AstNode {
    AstNode { kind: NodeKind::ReturnStatement, slots: vec![Slot::node(arg)] }
}

pub fn programs() -> Vec<AstNode> {
    vec![
        program(vec![
            var_decl("var", "v0", Some(num(1.0))),
            expr_stmt(assign("=", ident("v0"), binary("+", ident("v0"), num(2.0)))),
        ]),
        program(vec![
            var_decl("var", "v0", Some(array(vec![num(1.0), num(2.0)]))),
            expr_stmt(call(ident("print"), vec![member(ident("v0"), num(0.0), true)])),
            expr_stmt(ident("v0")),
        ]),
        program(vec![
            func_decl("f0", vec![ident("v0")], vec![ret(binary("*", ident("v0"), num(2.0)))]),
            expr_stmt(call(ident("f0"), vec![num(3.0)])),
        ]),
        program(vec![
            expr_stmt(string("use strict")),
            var_decl("var", "v0", Some(string("s"))),
            expr_stmt(call(ident("print"), vec![member(ident("v0"), ident("length"), false)])),
        ]),
    ]
}

/// Four programs, five copies each, so every fragment clears the
/// frequency threshold. Their root fragments differ, so each sequence is
/// predictable from its first fragment on.
pub fn toy_corpus() -> (Vocabulary, Vec<EncodedSequence>) {
    let seqs: Vec<_> = (0..5).flat_map(|_| programs()).map(|p| fragmentize(&p)).collect();
    build_vocabulary(&seqs, 5).expect("toy corpus")
}
