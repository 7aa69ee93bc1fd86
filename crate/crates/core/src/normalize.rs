//! Identifier normalization and constant-`eval` inlining.
//!
//! Declared variables become `v0, v1, …` and declared functions `f0, f1, …`
//! in order of first appearance, so structurally identical code from
//! different files yields identical fragments. Built-ins, vendor test
//! helpers, property names and labels are left alone.

use alloc::{
    collections::{BTreeMap, BTreeSet},
    format,
    string::String,
    vec::Vec,
};

use crate::ast::{build, AstNode, NodeKind, Slot, Value};
use crate::resolve::JsType;

/// Names the engine provides, which must never be renamed or replaced.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct BuiltinRegistry {
    pub names: BTreeSet<String>,
    pub test_functions: BTreeSet<String>,
    /// Static types of built-ins, used when resolving references.
    pub types: BTreeMap<String, JsType>,
}

impl BuiltinRegistry {
    pub fn contains(&self, name: &str) -> bool {
        self.names.contains(name) || self.test_functions.contains(name) || self.types.contains_key(name)
    }

    /// All built-in names with their type (`unknown` where none is given).
    pub fn typed_names(&self) -> impl Iterator<Item = (&str, JsType)> + '_ {
        let untyped = self
            .names
            .iter()
            .chain(&self.test_functions)
            .filter(|n| !self.types.contains_key(*n))
            .map(|n| (n.as_str(), JsType::Unknown));
        self.types.iter().map(|(n, t)| (n.as_str(), *t)).chain(untyped)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NameClass {
    Variable,
    Function,
}

/// Original → normalized identifier names.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RenameMap {
    pub variables: BTreeMap<String, String>,
    pub functions: BTreeMap<String, String>,
}

impl RenameMap {
    pub fn get(&self, original: &str) -> Option<&str> {
        self.variables
            .get(original)
            .or_else(|| self.functions.get(original))
            .map(String::as_str)
    }
}

/// Renames declared identifiers to the canonical `v*` / `f*` sequence.
pub fn normalize(ast: &AstNode, builtins: &BuiltinRegistry) -> (AstNode, RenameMap) {
    let mut out = ast.clone();
    expand_shorthand(&mut out);

    let mut declared: BTreeMap<String, NameClass> = BTreeMap::new();
    collect_declarations(&out, &mut declared);
    declared.retain(|name, _| !builtins.contains(name));

    let mut order: Vec<String> = Vec::new();
    let mut seen = BTreeSet::new();
    let mut free = BTreeSet::new();
    for_each_reference(&mut out, &mut |name| {
        if declared.contains_key(name.as_str()) {
            if seen.insert(name.clone()) {
                order.push(name.clone());
            }
        } else {
            free.insert(name.clone());
        }
    });

    let mut map = RenameMap::default();
    let (mut next_v, mut next_f) = (0usize, 0usize);
    for name in order {
        let (prefix, counter, table) = match declared[&name] {
            NameClass::Variable => ("v", &mut next_v, &mut map.variables),
            NameClass::Function => ("f", &mut next_f, &mut map.functions),
        };
        let fresh = loop {
            let candidate = format!("{prefix}{counter}");
            *counter += 1;
            if !free.contains(&candidate) && !builtins.contains(&candidate) {
                break candidate;
            }
        };
        table.insert(name, fresh);
    }

    for_each_reference(&mut out, &mut |name| {
        if let Some(new) = map.get(name) {
            *name = new.into();
        }
    });
    (out, map)
}

/// `{a}` → `{a: a}`, in object literals and object patterns alike.
fn expand_shorthand(node: &mut AstNode) {
    if node.kind == NodeKind::Property && node.bool_value("shorthand") {
        if let Some(slot) = node.slot_mut("shorthand") {
            *slot = Slot::Value(Value::Bool(false));
        }
    }
    for_each_child_mut(node, &mut expand_shorthand);
}

pub(crate) fn for_each_child_mut(node: &mut AstNode, f: &mut impl FnMut(&mut AstNode)) {
    for slot in node.slots.iter_mut() {
        match slot {
            Slot::Node(child) => f(child),
            Slot::List(items) => {
                for item in items.iter_mut() {
                    if let Slot::Node(child) = item {
                        f(child);
                    }
                }
            }
            _ => {}
        }
    }
}

/// True when the child in slot `slot` of `parent` is a name that does not
/// denote a binding (property keys, labels, `new.target`).
pub(crate) fn is_non_binding_position(parent: &AstNode, slot: &str) -> bool {
    use NodeKind::*;
    match (parent.kind, slot) {
        (MemberExpression, "property") | (Property, "key") | (MethodDefinition, "key") => {
            !parent.bool_value("computed")
        }
        (LabeledStatement | BreakStatement | ContinueStatement, "label") => true,
        (MetaProperty, _) => true,
        _ => false,
    }
}

/// Calls `f` on the name of every identifier that may denote a binding, in
/// pre-order.
fn for_each_reference(node: &mut AstNode, f: &mut impl FnMut(&mut String)) {
    if node.kind == NodeKind::Identifier {
        if let Some(Slot::Value(Value::Str(name))) = node.slots.get_mut(0) {
            f(name);
        }
        return;
    }
    let skips: Vec<bool> = node.kind.schema().iter().map(|s| is_non_binding_position(node, s.name)).collect();
    for (skip, slot) in skips.into_iter().zip(node.slots.iter_mut()) {
        if skip {
            continue;
        }
        match slot {
            Slot::Node(child) => for_each_reference(child, f),
            Slot::List(items) => {
                for item in items.iter_mut() {
                    if let Slot::Node(child) = item {
                        for_each_reference(child, f);
                    }
                }
            }
            _ => {}
        }
    }
}

/// Binding identifiers introduced by a declaration pattern.
pub(crate) fn pattern_names<'a>(pattern: &'a AstNode, out: &mut Vec<&'a str>) {
    use NodeKind::*;
    match pattern.kind {
        Identifier => out.extend(pattern.ident_name()),
        ObjectPattern => {
            for p in pattern.slot("properties").and_then(Slot::as_list).unwrap_or(&[]) {
                if let Some(p) = p.as_node() {
                    match p.kind {
                        Property => {
                            if let Some(v) = p.child("value") {
                                pattern_names(v, out);
                            }
                        }
                        _ => pattern_names(p, out),
                    }
                }
            }
        }
        ArrayPattern => {
            for e in pattern.slot("elements").and_then(Slot::as_list).unwrap_or(&[]) {
                if let Some(e) = e.as_node() {
                    pattern_names(e, out);
                }
            }
        }
        AssignmentPattern => {
            if let Some(l) = pattern.child("left") {
                pattern_names(l, out);
            }
        }
        RestElement => {
            if let Some(a) = pattern.child("argument") {
                pattern_names(a, out);
            }
        }
        _ => {}
    }
}

fn collect_declarations(node: &AstNode, out: &mut BTreeMap<String, NameClass>) {
    use NodeKind::*;
    let mut declare = |names: Vec<&str>, class| {
        for n in names {
            out.entry(n.into()).or_insert(class);
        }
    };
    match node.kind {
        VariableDeclarator => {
            let mut names = Vec::new();
            if let Some(id) = node.child("id") {
                pattern_names(id, &mut names);
            }
            declare(names, NameClass::Variable);
        }
        FunctionDeclaration | FunctionExpression | ArrowFunctionExpression => {
            if let Some(name) = node.child("id").and_then(AstNode::ident_name) {
                declare(alloc::vec![name], NameClass::Function);
            }
            let mut names = Vec::new();
            for p in node.slot("params").and_then(Slot::as_list).unwrap_or(&[]) {
                if let Some(p) = p.as_node() {
                    pattern_names(p, &mut names);
                }
            }
            declare(names, NameClass::Variable);
        }
        ClassDeclaration | ClassExpression => {
            if let Some(name) = node.child("id").and_then(AstNode::ident_name) {
                declare(alloc::vec![name], NameClass::Variable);
            }
        }
        CatchClause => {
            let mut names = Vec::new();
            if let Some(p) = node.child("param") {
                pattern_names(p, &mut names);
            }
            declare(names, NameClass::Variable);
        }
        _ => {}
    }
    for child in node.children() {
        collect_declarations(child, out);
    }
}

/// Source-to-tree parsing used to inline constant `eval` arguments.
pub trait ProgramParser {
    fn parse_program(&self, source: &str) -> Option<AstNode>;
}

impl<F: Fn(&str) -> Option<AstNode>> ProgramParser for F {
    fn parse_program(&self, source: &str) -> Option<AstNode> {
        self(source)
    }
}

/// Nested `eval` strings are inlined at most this deep.
pub const EVAL_INLINE_DEPTH: usize = 3;

/// Replaces `eval("<constant>")` with the code it would run.
///
/// A single-expression argument replaces the call itself. Anything else is
/// only inlined when the call is a whole expression statement, which then
/// becomes a block of the parsed statements.
pub fn inline_eval(ast: &AstNode, parser: &dyn ProgramParser) -> AstNode {
    let mut out = ast.clone();
    inline_in(&mut out, parser, EVAL_INLINE_DEPTH);
    out
}

enum Inlined {
    Expression(AstNode),
    Statements(Vec<AstNode>),
}

fn parse_eval_call(call: &AstNode, parser: &dyn ProgramParser, depth: usize) -> Option<Inlined> {
    if call.kind != NodeKind::CallExpression || depth == 0 {
        return None;
    }
    if call.child("callee").and_then(AstNode::ident_name) != Some("eval") {
        return None;
    }
    let args = call.slot("arguments")?.as_list()?;
    let [Slot::Node(arg)] = args else { return None };
    if arg.kind != NodeKind::Literal {
        return None;
    }
    let source = arg.value("value")?.as_str()?;
    let program = parser.parse_program(source)?;
    if program.kind != NodeKind::Program || program.validate().is_err() || program.has_stub() {
        return None;
    }
    let mut program = program;
    inline_in(&mut program, parser, depth - 1);
    let mut body: Vec<AstNode> = match program.slots.into_iter().next() {
        Some(Slot::List(items)) => items
            .into_iter()
            .filter_map(|s| match s {
                Slot::Node(n) => Some(*n),
                _ => None,
            })
            .collect(),
        _ => return None,
    };
    if body.len() == 1 && body[0].kind == NodeKind::ExpressionStatement {
        let stmt = body.pop().expect("one statement");
        match stmt.slots.into_iter().next() {
            Some(Slot::Node(expr)) => Some(Inlined::Expression(*expr)),
            _ => None,
        }
    } else {
        Some(Inlined::Statements(body))
    }
}

fn inline_in(node: &mut AstNode, parser: &dyn ProgramParser, depth: usize) {
    if depth == 0 {
        return;
    }
    for slot in node.slots.iter_mut() {
        match slot {
            Slot::Node(child) => inline_child(child, parser, depth),
            Slot::List(items) => {
                for item in items.iter_mut() {
                    if let Slot::Node(child) = item {
                        inline_child(child, parser, depth);
                    }
                }
            }
            _ => {}
        }
    }
}

fn inline_child(child: &mut alloc::boxed::Box<AstNode>, parser: &dyn ProgramParser, depth: usize) {
    if child.kind == NodeKind::ExpressionStatement {
        if let Some(expr) = child.child("expression") {
            match parse_eval_call(expr, parser, depth) {
                Some(Inlined::Statements(body)) => {
                    **child = build::block(body);
                    return;
                }
                Some(Inlined::Expression(e)) => {
                    **child = build::expr_stmt(e);
                    return;
                }
                None => {}
            }
        }
    } else if let Some(Inlined::Expression(e)) = parse_eval_call(child, parser, depth) {
        **child = e;
        return;
    }
    inline_in(child, parser, depth);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ast::build::*;
    use alloc::vec;

    fn builtins() -> BuiltinRegistry {
        let mut b = BuiltinRegistry::default();
        b.names.insert("Math".into());
        b.test_functions.insert("print".into());
        b
    }

    #[test]
    fn renames_only_declared_names() {
        // var b = a + 1
        let ast = program(vec![var_decl("var", "b", Some(binary("+", ident("a"), num(1.0))))]);
        let (out, map) = normalize(&ast, &builtins());
        let expected = program(vec![var_decl("var", "v0", Some(binary("+", ident("a"), num(1.0))))]);
        assert_eq!(out, expected);
        assert_eq!(map.get("b"), Some("v0"));
        assert_eq!(map.get("a"), None);
    }

    #[test]
    fn alpha_equivalent_files_normalize_identically() {
        let a = program(vec![var_decl("var", "b", Some(binary("+", ident("a"), num(1.0))))]);
        let c = program(vec![var_decl("var", "c", Some(binary("+", ident("a"), num(1.0))))]);
        assert_eq!(normalize(&a, &builtins()).0, normalize(&c, &builtins()).0);
    }

    #[test]
    fn builtins_and_properties_are_untouched() {
        // var x; Math.floor(x); print(x.floor);
        let ast = program(vec![
            var_decl("var", "x", None),
            expr_stmt(call(member(ident("Math"), ident("floor"), false), vec![ident("x")])),
            expr_stmt(call(ident("print"), vec![member(ident("x"), ident("floor"), false)])),
        ]);
        let (out, _) = normalize(&ast, &builtins());
        let expected = program(vec![
            var_decl("var", "v0", None),
            expr_stmt(call(member(ident("Math"), ident("floor"), false), vec![ident("v0")])),
            expr_stmt(call(ident("print"), vec![member(ident("v0"), ident("floor"), false)])),
        ]);
        assert_eq!(out, expected);
    }

    #[test]
    fn functions_get_their_own_sequence() {
        let f = AstNode {
            kind: NodeKind::FunctionDeclaration,
            slots: vec![
                Slot::node(ident("go")),
                Slot::List(vec![Slot::node(ident("n"))]),
                Slot::node(block(vec![])),
                Slot::Value(Value::Bool(false)),
                Slot::Value(Value::Bool(false)),
            ],
        };
        let ast = program(vec![var_decl("let", "q", None), f, expr_stmt(call(ident("go"), vec![ident("q")]))]);
        let (out, map) = normalize(&ast, &builtins());
        assert_eq!(map.get("go"), Some("f0"));
        assert_eq!(map.get("q"), Some("v0"));
        assert_eq!(map.get("n"), Some("v1"));
        assert_eq!(normalize(&out, &builtins()).0, out);
    }

    #[test]
    fn free_names_are_not_reused() {
        // var x = v0;  (v0 is an undeclared global)
        let ast = program(vec![var_decl("var", "x", Some(ident("v0")))]);
        let (out, map) = normalize(&ast, &builtins());
        assert_eq!(map.get("x"), Some("v1"));
        assert_eq!(normalize(&out, &builtins()).0, out);
    }

    #[test]
    fn shorthand_is_expanded_before_renaming() {
        let prop = AstNode {
            kind: NodeKind::Property,
            slots: vec![
                Slot::node(ident("a")),
                Slot::node(ident("a")),
                Slot::Value(Value::str("init")),
                Slot::Value(Value::Bool(false)),
                Slot::Value(Value::Bool(true)),
                Slot::Value(Value::Bool(false)),
            ],
        };
        let obj = AstNode { kind: NodeKind::ObjectExpression, slots: vec![Slot::List(vec![Slot::node(prop)])] };
        let ast = program(vec![var_decl("var", "a", None), expr_stmt(obj)]);
        let (out, _) = normalize(&ast, &builtins());
        let text = crate::print::print_program(&out).unwrap();
        assert_eq!(text, "var v0;\n({ a: v0 });");
    }

    fn fake_parser(src: &str) -> Option<AstNode> {
        match src {
            "1+1" => Some(program(vec![expr_stmt(binary("+", num(1.0), num(1.0)))])),
            "var q=3; q" => Some(program(vec![var_decl("var", "q", Some(num(3.0))), expr_stmt(ident("q"))])),
            "eval('2')" => Some(program(vec![expr_stmt(call(ident("eval"), vec![string("2")]))])),
            "2" => Some(program(vec![expr_stmt(num(2.0))])),
            _ => None,
        }
    }

    #[test]
    fn eval_of_expression_is_inlined_in_place() {
        let ast = program(vec![expr_stmt(call(ident("print"), vec![call(ident("eval"), vec![string("1+1")])]))]);
        let out = inline_eval(&ast, &fake_parser);
        let expected = program(vec![expr_stmt(call(ident("print"), vec![binary("+", num(1.0), num(1.0))]))]);
        assert_eq!(out, expected);
    }

    #[test]
    fn non_constant_eval_is_untouched() {
        let ast = program(vec![expr_stmt(call(ident("eval"), vec![ident("s")]))]);
        assert_eq!(inline_eval(&ast, &fake_parser), ast);
        let unparseable = program(vec![expr_stmt(call(ident("eval"), vec![string("(((")]))]);
        assert_eq!(inline_eval(&unparseable, &fake_parser), unparseable);
    }

    #[test]
    fn statement_eval_becomes_a_block_and_is_normalized() {
        let ast = program(vec![expr_stmt(call(ident("eval"), vec![string("var q=3; q")]))]);
        let inlined = inline_eval(&ast, &fake_parser);
        assert_eq!(inlined.get(&[crate::ast::ChildRef { slot: 0, item: Some(0) }]).unwrap().kind, NodeKind::BlockStatement);
        let (_, map) = normalize(&inlined, &builtins());
        assert_eq!(map.get("q"), Some("v0"));
    }

    #[test]
    fn nested_eval_is_inlined() {
        let ast = program(vec![expr_stmt(call(ident("eval"), vec![string("eval('2')")]))]);
        assert_eq!(inline_eval(&ast, &fake_parser), program(vec![expr_stmt(num(2.0))]));
    }
}
