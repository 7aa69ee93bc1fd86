//! Typed tree model for the supported ECMAScript subset.
//!
//! Every node kind carries a fixed, ordered slot schema. A node is a kind
//! plus one [`Slot`] per schema entry; node-valued slots own their children,
//! so an [`AstNode`] is always a proper tree. Stubs are kind-only
//! placeholders that appear while a tree is being rebuilt from fragments.

use alloc::{boxed::Box, string::String, vec, vec::Vec};
use core::fmt;

use crate::error::Error;

/// How many values a slot holds, and of what sort.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SlotArity {
    /// Exactly one child node.
    Node,
    /// Zero or one child node.
    OptNode,
    /// Ordered list of child nodes.
    NodeList,
    /// Ordered list of child nodes where elisions (holes) are allowed.
    HoleyList,
    /// A primitive value (string, number, boolean, null, regex).
    Value,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SlotSpec {
    pub name: &'static str,
    pub arity: SlotArity,
}

macro_rules! node_kinds {
    ($($kind:ident { $($slot:literal : $arity:ident),* $(,)? }),* $(,)?) => {
        /// Node kinds understood by the toolkit. Anything else is rejected at
        /// ingestion.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
        #[repr(u8)]
        pub enum NodeKind {
            $($kind),*
        }

        impl NodeKind {
            pub const ALL: &'static [NodeKind] = &[$(NodeKind::$kind),*];
            pub const COUNT: usize = NodeKind::ALL.len();

            pub fn name(self) -> &'static str {
                match self {
                    $(NodeKind::$kind => stringify!($kind)),*
                }
            }

            pub fn from_name(name: &str) -> Option<Self> {
                match name {
                    $(stringify!($kind) => Some(NodeKind::$kind),)*
                    _ => None,
                }
            }

            /// Ordered slot schema of this kind.
            pub fn schema(self) -> &'static [SlotSpec] {
                match self {
                    $(NodeKind::$kind => &[$(SlotSpec { name: $slot, arity: SlotArity::$arity }),*]),*
                }
            }
        }
    };
}

node_kinds! {
    Program { "body": NodeList },
    EmptyStatement {},
    ExpressionStatement { "expression": Node },
    BlockStatement { "body": NodeList },
    VariableDeclaration { "declarations": NodeList, "kind": Value },
    VariableDeclarator { "id": Node, "init": OptNode },
    FunctionDeclaration { "id": OptNode, "params": NodeList, "body": Node, "generator": Value, "async": Value },
    FunctionExpression { "id": OptNode, "params": NodeList, "body": Node, "generator": Value, "async": Value },
    ArrowFunctionExpression { "params": NodeList, "body": Node, "async": Value },
    ClassDeclaration { "id": OptNode, "superClass": OptNode, "body": Node },
    ClassExpression { "id": OptNode, "superClass": OptNode, "body": Node },
    ClassBody { "body": NodeList },
    MethodDefinition { "key": Node, "value": Node, "kind": Value, "computed": Value, "static": Value },
    ReturnStatement { "argument": OptNode },
    IfStatement { "test": Node, "consequent": Node, "alternate": OptNode },
    ForStatement { "init": OptNode, "test": OptNode, "update": OptNode, "body": Node },
    ForInStatement { "left": Node, "right": Node, "body": Node },
    ForOfStatement { "left": Node, "right": Node, "body": Node, "await": Value },
    WhileStatement { "test": Node, "body": Node },
    DoWhileStatement { "body": Node, "test": Node },
    SwitchStatement { "discriminant": Node, "cases": NodeList },
    SwitchCase { "test": OptNode, "consequent": NodeList },
    BreakStatement { "label": OptNode },
    ContinueStatement { "label": OptNode },
    LabeledStatement { "label": Node, "body": Node },
    TryStatement { "block": Node, "handler": OptNode, "finalizer": OptNode },
    CatchClause { "param": OptNode, "body": Node },
    ThrowStatement { "argument": Node },
    Identifier { "name": Value },
    Literal { "value": Value, "raw": Value },
    ArrayExpression { "elements": HoleyList },
    ObjectExpression { "properties": NodeList },
    Property { "key": Node, "value": Node, "kind": Value, "method": Value, "shorthand": Value, "computed": Value },
    MemberExpression { "object": Node, "property": Node, "computed": Value },
    CallExpression { "callee": Node, "arguments": NodeList },
    NewExpression { "callee": Node, "arguments": NodeList },
    AssignmentExpression { "operator": Value, "left": Node, "right": Node },
    BinaryExpression { "operator": Value, "left": Node, "right": Node },
    LogicalExpression { "operator": Value, "left": Node, "right": Node },
    UnaryExpression { "operator": Value, "argument": Node },
    UpdateExpression { "operator": Value, "prefix": Value, "argument": Node },
    ConditionalExpression { "test": Node, "consequent": Node, "alternate": Node },
    SequenceExpression { "expressions": NodeList },
    SpreadElement { "argument": Node },
    TemplateLiteral { "quasis": NodeList, "expressions": NodeList },
    TemplateElement { "raw": Value, "cooked": Value, "tail": Value },
    TaggedTemplateExpression { "tag": Node, "quasi": Node },
    ObjectPattern { "properties": NodeList },
    ArrayPattern { "elements": HoleyList },
    AssignmentPattern { "left": Node, "right": Node },
    RestElement { "argument": Node },
    Super {},
    ThisExpression {},
    YieldExpression { "argument": OptNode, "delegate": Value },
    AwaitExpression { "argument": Node },
    DebuggerStatement {},
    MetaProperty { "meta": Node, "property": Node },
}

impl NodeKind {
    /// Dense index of this kind, `0..NodeKind::COUNT`.
    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(index: usize) -> Option<Self> {
        NodeKind::ALL.get(index).copied()
    }

    pub fn slot_index(self, name: &str) -> Option<usize> {
        self.schema().iter().position(|s| s.name == name)
    }
}

impl fmt::Display for NodeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Primitive content of a value slot.
#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Null,
    Bool(bool),
    Num(f64),
    Str(String),
    /// Regex literal body. The raw source text lives in the sibling `raw` slot.
    Regex { pattern: String, flags: String },
}

impl Value {
    pub fn as_str(&self) -> Option<&str> {
        match self {
            Value::Str(s) => Some(s),
            _ => None,
        }
    }

    pub fn as_bool(&self) -> Option<bool> {
        match self {
            Value::Bool(b) => Some(*b),
            _ => None,
        }
    }

    pub fn str(s: impl Into<String>) -> Self {
        Value::Str(s.into())
    }
}

/// Content of one schema slot (or one element of a node list).
#[derive(Debug, Clone, PartialEq)]
pub enum Slot {
    Node(Box<AstNode>),
    /// Kind-only placeholder awaiting a fragment of that kind.
    Stub(NodeKind),
    /// Missing optional child, or an elision inside a holey list.
    Absent,
    List(Vec<Slot>),
    Value(Value),
}

impl Slot {
    pub fn node(node: AstNode) -> Self {
        Slot::Node(Box::new(node))
    }

    pub fn as_node(&self) -> Option<&AstNode> {
        match self {
            Slot::Node(n) => Some(n),
            _ => None,
        }
    }

    pub fn as_node_mut(&mut self) -> Option<&mut AstNode> {
        match self {
            Slot::Node(n) => Some(n),
            _ => None,
        }
    }

    pub fn as_value(&self) -> Option<&Value> {
        match self {
            Slot::Value(v) => Some(v),
            _ => None,
        }
    }

    pub fn as_list(&self) -> Option<&[Slot]> {
        match self {
            Slot::List(items) => Some(items),
            _ => None,
        }
    }
}

/// One step from a node into a child position: the slot index and, for
/// list slots, the element index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ChildRef {
    pub slot: usize,
    pub item: Option<usize>,
}

/// Position of a node (or of a stub) relative to a root, as a chain of
/// child steps. The empty path is the root itself.
pub type NodePath = Vec<ChildRef>;

#[derive(Debug, Clone, PartialEq)]
pub struct AstNode {
    pub kind: NodeKind,
    pub slots: Vec<Slot>,
}

impl AstNode {
    /// Builds a node and checks its immediate slots against the schema.
    pub fn new(kind: NodeKind, slots: Vec<Slot>) -> Result<Self, Error> {
        let node = AstNode { kind, slots };
        node.check_shallow(&mut String::from(kind.name()))?;
        Ok(node)
    }

    /// Node of a kind whose slots are all empty (absent, empty list, null).
    pub fn empty(kind: NodeKind) -> Self {
        let slots = kind
            .schema()
            .iter()
            .map(|s| match s.arity {
                SlotArity::Node | SlotArity::OptNode => Slot::Absent,
                SlotArity::NodeList | SlotArity::HoleyList => Slot::List(Vec::new()),
                SlotArity::Value => Slot::Value(Value::Null),
            })
            .collect();
        AstNode { kind, slots }
    }

    pub fn slot(&self, name: &str) -> Option<&Slot> {
        self.kind.slot_index(name).map(|i| &self.slots[i])
    }

    pub fn slot_mut(&mut self, name: &str) -> Option<&mut Slot> {
        self.kind.slot_index(name).map(move |i| &mut self.slots[i])
    }

    pub fn child(&self, name: &str) -> Option<&AstNode> {
        self.slot(name).and_then(Slot::as_node)
    }

    pub fn value(&self, name: &str) -> Option<&Value> {
        self.slot(name).and_then(Slot::as_value)
    }

    pub fn str_value(&self, name: &str) -> Option<&str> {
        self.value(name).and_then(Value::as_str)
    }

    pub fn bool_value(&self, name: &str) -> bool {
        self.value(name).and_then(Value::as_bool).unwrap_or(false)
    }

    /// Name of an `Identifier` node.
    pub fn ident_name(&self) -> Option<&str> {
        if self.kind == NodeKind::Identifier {
            self.str_value("name")
        } else {
            None
        }
    }

    /// True when at least one slot is not [`Slot::Absent`]. Such nodes own a
    /// fragment; the rest are terminal leaves.
    pub fn is_fragmentizable(&self) -> bool {
        self.slots.iter().any(|s| !matches!(s, Slot::Absent))
    }

    /// Direct node-valued children, in slot order.
    pub fn children(&self) -> impl Iterator<Item = &AstNode> {
        self.slots.iter().flat_map(|slot| {
            let items: &[Slot] = match slot {
                Slot::List(items) => items,
                other => core::slice::from_ref(other),
            };
            items.iter().filter_map(Slot::as_node)
        })
    }

    /// Pre-order walk: the node, then each slot in schema order, lists left
    /// to right.
    pub fn preorder(&self) -> Vec<&AstNode> {
        let mut out = Vec::new();
        let mut stack = vec![self];
        while let Some(node) = stack.pop() {
            out.push(node);
            let start = stack.len();
            stack.extend(node.children());
            stack[start..].reverse();
        }
        out
    }

    /// Paths of every node in pre-order; index-aligned with [`preorder`](Self::preorder).
    pub fn preorder_paths(&self) -> Vec<NodePath> {
        let mut out = Vec::new();
        self.walk_positions(&mut Vec::new(), &mut |path, slot| {
            if matches!(slot, Position::Node) {
                out.push(path.to_vec());
            }
        });
        out
    }

    pub fn node_count(&self) -> usize {
        self.preorder().len()
    }

    pub fn stub_count(&self) -> usize {
        let mut count = 0;
        self.walk_positions(&mut Vec::new(), &mut |_, pos| {
            if matches!(pos, Position::Stub) {
                count += 1;
            }
        });
        count
    }

    pub fn has_stub(&self) -> bool {
        self.first_stub().is_some()
    }

    /// Path and kind of the first stub in pre-order.
    pub fn first_stub(&self) -> Option<(NodePath, NodeKind)> {
        fn go(node: &AstNode, path: &mut NodePath) -> Option<NodeKind> {
            for (si, slot) in node.slots.iter().enumerate() {
                match slot {
                    Slot::Stub(k) => {
                        path.push(ChildRef { slot: si, item: None });
                        return Some(*k);
                    }
                    Slot::Node(child) => {
                        path.push(ChildRef { slot: si, item: None });
                        if let Some(k) = go(child, path) {
                            return Some(k);
                        }
                        path.pop();
                    }
                    Slot::List(items) => {
                        for (ii, item) in items.iter().enumerate() {
                            path.push(ChildRef { slot: si, item: Some(ii) });
                            match item {
                                Slot::Stub(k) => return Some(*k),
                                Slot::Node(child) => {
                                    if let Some(k) = go(child, path) {
                                        return Some(k);
                                    }
                                }
                                _ => {}
                            }
                            path.pop();
                        }
                    }
                    _ => {}
                }
            }
            None
        }
        let mut path = Vec::new();
        go(self, &mut path).map(|k| (path, k))
    }

    /// Node at `path`, if the path leads to a node.
    pub fn get(&self, path: &[ChildRef]) -> Option<&AstNode> {
        let mut node = self;
        for step in path {
            node = position(node.slots.get(step.slot)?, step.item)?.as_node()?;
        }
        Some(node)
    }

    pub fn get_mut(&mut self, path: &[ChildRef]) -> Option<&mut AstNode> {
        let mut node = self;
        for step in path {
            node = position_mut(node.slots.get_mut(step.slot)?, step.item)?.as_node_mut()?;
        }
        Some(node)
    }

    /// The slot (or list element) that `path` ends in. The empty path has no
    /// enclosing slot.
    pub fn position_mut(&mut self, path: &[ChildRef]) -> Option<&mut Slot> {
        let (last, parents) = path.split_last()?;
        let parent = self.get_mut(parents)?;
        position_mut(parent.slots.get_mut(last.slot)?, last.item)
    }

    /// Checks the whole tree against the registry schemas.
    pub fn validate(&self) -> Result<(), Error> {
        let mut path = String::from(self.kind.name());
        self.validate_at(&mut path)
    }

    fn validate_at(&self, path: &mut String) -> Result<(), Error> {
        self.check_shallow(path)?;
        for (spec, slot) in self.kind.schema().iter().zip(&self.slots) {
            match slot {
                Slot::Node(child) => {
                    let len = path.len();
                    path.push('.');
                    path.push_str(spec.name);
                    child.validate_at(path)?;
                    path.truncate(len);
                }
                Slot::List(items) => {
                    for (i, item) in items.iter().enumerate() {
                        if let Slot::Node(child) = item {
                            let len = path.len();
                            use core::fmt::Write;
                            let _ = write!(path, ".{}[{}]", spec.name, i);
                            child.validate_at(path)?;
                            path.truncate(len);
                        }
                    }
                }
                _ => {}
            }
        }
        Ok(())
    }

    fn check_shallow(&self, path: &mut String) -> Result<(), Error> {
        let schema = self.kind.schema();
        if schema.len() != self.slots.len() {
            return Err(Error::MalformedAst(path.clone()));
        }
        for (spec, slot) in schema.iter().zip(&self.slots) {
            let ok = match (spec.arity, slot) {
                (SlotArity::Node, Slot::Node(_) | Slot::Stub(_)) => true,
                (SlotArity::OptNode, Slot::Node(_) | Slot::Stub(_) | Slot::Absent) => true,
                (SlotArity::NodeList, Slot::List(items)) => items
                    .iter()
                    .all(|i| matches!(i, Slot::Node(_) | Slot::Stub(_))),
                (SlotArity::HoleyList, Slot::List(items)) => items
                    .iter()
                    .all(|i| matches!(i, Slot::Node(_) | Slot::Stub(_) | Slot::Absent)),
                (SlotArity::Value, Slot::Value(_)) => true,
                _ => false,
            };
            if !ok {
                let mut p = path.clone();
                p.push('.');
                p.push_str(spec.name);
                return Err(Error::MalformedAst(p));
            }
        }
        Ok(())
    }

    fn walk_positions<'a>(&'a self, path: &mut NodePath, f: &mut impl FnMut(&[ChildRef], Position)) {
        f(path, Position::Node);
        for (si, slot) in self.slots.iter().enumerate() {
            match slot {
                Slot::List(items) => {
                    for (ii, item) in items.iter().enumerate() {
                        path.push(ChildRef { slot: si, item: Some(ii) });
                        walk_item(item, path, f);
                        path.pop();
                    }
                }
                other => {
                    path.push(ChildRef { slot: si, item: None });
                    walk_item(other, path, f);
                    path.pop();
                }
            }
        }
    }
}

enum Position {
    Node,
    Stub,
}

fn walk_item<'a>(slot: &'a Slot, path: &mut NodePath, f: &mut impl FnMut(&[ChildRef], Position)) {
    match slot {
        Slot::Node(child) => child.walk_positions(path, f),
        Slot::Stub(_) => f(path, Position::Stub),
        _ => {}
    }
}

fn position(slot: &Slot, item: Option<usize>) -> Option<&Slot> {
    match (slot, item) {
        (Slot::List(items), Some(i)) => items.get(i),
        (s, None) if !matches!(s, Slot::List(_)) => Some(s),
        _ => None,
    }
}

fn position_mut(slot: &mut Slot, item: Option<usize>) -> Option<&mut Slot> {
    match (slot, item) {
        (Slot::List(items), Some(i)) => items.get_mut(i),
        (s, None) if !matches!(s, Slot::List(_)) => Some(s),
        _ => None,
    }
}

/// Small constructors for nodes the toolkit synthesizes itself.
pub mod build {
    use super::*;

    pub fn ident(name: &str) -> AstNode {
        AstNode { kind: NodeKind::Identifier, slots: vec![Slot::Value(Value::str(name))] }
    }

    pub fn literal(value: Value) -> AstNode {
        AstNode { kind: NodeKind::Literal, slots: vec![Slot::Value(value), Slot::Value(Value::Null)] }
    }

    pub fn num(n: f64) -> AstNode {
        literal(Value::Num(n))
    }

    pub fn string(s: &str) -> AstNode {
        literal(Value::str(s))
    }

    pub fn expr_stmt(expr: AstNode) -> AstNode {
        AstNode { kind: NodeKind::ExpressionStatement, slots: vec![Slot::node(expr)] }
    }

    pub fn program(body: Vec<AstNode>) -> AstNode {
        AstNode { kind: NodeKind::Program, slots: vec![Slot::List(body.into_iter().map(Slot::node).collect())] }
    }

    pub fn block(body: Vec<AstNode>) -> AstNode {
        AstNode {
            kind: NodeKind::BlockStatement,
            slots: vec![Slot::List(body.into_iter().map(Slot::node).collect())],
        }
    }

    pub fn array(elements: Vec<AstNode>) -> AstNode {
        AstNode {
            kind: NodeKind::ArrayExpression,
            slots: vec![Slot::List(elements.into_iter().map(Slot::node).collect())],
        }
    }

    pub fn object() -> AstNode {
        AstNode { kind: NodeKind::ObjectExpression, slots: vec![Slot::List(Vec::new())] }
    }

    pub fn function_expr(params: Vec<AstNode>, body: Vec<AstNode>) -> AstNode {
        AstNode {
            kind: NodeKind::FunctionExpression,
            slots: vec![
                Slot::Absent,
                Slot::List(params.into_iter().map(Slot::node).collect()),
                Slot::node(block(body)),
                Slot::Value(Value::Bool(false)),
                Slot::Value(Value::Bool(false)),
            ],
        }
    }

    /// `<kind> <name> = <init>;`
    pub fn var_decl(kind: &str, name: &str, init: Option<AstNode>) -> AstNode {
        let declarator = AstNode {
            kind: NodeKind::VariableDeclarator,
            slots: vec![Slot::node(ident(name)), init.map_or(Slot::Absent, Slot::node)],
        };
        AstNode {
            kind: NodeKind::VariableDeclaration,
            slots: vec![Slot::List(vec![Slot::node(declarator)]), Slot::Value(Value::str(kind))],
        }
    }

    pub fn binary(op: &str, left: AstNode, right: AstNode) -> AstNode {
        AstNode {
            kind: NodeKind::BinaryExpression,
            slots: vec![Slot::Value(Value::str(op)), Slot::node(left), Slot::node(right)],
        }
    }

    pub fn assign(op: &str, left: AstNode, right: AstNode) -> AstNode {
        AstNode {
            kind: NodeKind::AssignmentExpression,
            slots: vec![Slot::Value(Value::str(op)), Slot::node(left), Slot::node(right)],
        }
    }

    pub fn member(object: AstNode, property: AstNode, computed: bool) -> AstNode {
        AstNode {
            kind: NodeKind::MemberExpression,
            slots: vec![Slot::node(object), Slot::node(property), Slot::Value(Value::Bool(computed))],
        }
    }

    pub fn call(callee: AstNode, args: Vec<AstNode>) -> AstNode {
        AstNode {
            kind: NodeKind::CallExpression,
            slots: vec![Slot::node(callee), Slot::List(args.into_iter().map(Slot::node).collect())],
        }
    }

    pub fn regex(pattern: &str, flags: &str) -> AstNode {
        let raw = alloc::format!("/{pattern}/{flags}");
        AstNode {
            kind: NodeKind::Literal,
            slots: vec![
                Slot::Value(Value::Regex { pattern: pattern.into(), flags: flags.into() }),
                Slot::Value(Value::Str(raw)),
            ],
        }
    }

    pub fn leaf(kind: NodeKind) -> AstNode {
        AstNode::empty(kind)
    }
}

#[cfg(test)]
mod tests {
    use super::build::*;
    use super::*;

    fn fig2_statement() -> AstNode {
        // v0[v1] = v1 + 5;
        expr_stmt(assign(
            "=",
            member(ident("v0"), ident("v1"), true),
            binary("+", ident("v1"), num(5.0)),
        ))
    }

    #[test]
    fn registry_is_unique_and_complete() {
        for (i, k) in NodeKind::ALL.iter().enumerate() {
            assert_eq!(k.index(), i);
            assert_eq!(NodeKind::from_name(k.name()), Some(*k));
        }
        assert!(NodeKind::COUNT >= 57);
        assert_eq!(NodeKind::from_name("WithStatement"), None);
    }

    #[test]
    fn preorder_of_minimal_program() {
        let p = program(vec![leaf(NodeKind::EmptyStatement)]);
        let kinds: Vec<_> = p.preorder().iter().map(|n| n.kind).collect();
        assert_eq!(kinds, [NodeKind::Program, NodeKind::EmptyStatement]);
    }

    #[test]
    fn preorder_follows_slot_order() {
        use NodeKind::*;
        let s = fig2_statement();
        let order: Vec<_> = s
            .preorder()
            .iter()
            .map(|n| (n.kind, n.ident_name().map(String::from)))
            .collect();
        let expected = [
            (ExpressionStatement, None),
            (AssignmentExpression, None),
            (MemberExpression, None),
            (Identifier, Some("v0".into())),
            (Identifier, Some("v1".into())),
            (BinaryExpression, None),
            (Identifier, Some("v1".into())),
            (Literal, None),
        ];
        assert_eq!(order, expected);
        assert_eq!(s.preorder_paths().len(), 8);
    }

    #[test]
    fn paths_address_preorder_nodes() {
        let s = fig2_statement();
        let nodes = s.preorder();
        for (path, node) in s.preorder_paths().iter().zip(nodes) {
            assert_eq!(s.get(path), Some(node));
        }
    }

    #[test]
    fn schema_violations_are_reported() {
        let bad = AstNode::new(NodeKind::ExpressionStatement, vec![]);
        assert!(matches!(bad, Err(Error::MalformedAst(_))));
        let bad = AstNode::new(NodeKind::ExpressionStatement, vec![Slot::Value(Value::Null)]);
        assert_eq!(bad, Err(Error::MalformedAst("ExpressionStatement.expression".into())));
        let holey = AstNode::new(NodeKind::ArrayExpression, vec![Slot::List(vec![Slot::Absent])]);
        assert!(holey.is_ok());
        let not_holey = AstNode::new(NodeKind::Program, vec![Slot::List(vec![Slot::Absent])]);
        assert!(not_holey.is_err());
    }

    #[test]
    fn stubs_are_found_in_preorder() {
        let mut s = fig2_statement();
        assert!(!s.has_stub());
        let path = s.preorder_paths()[5].clone(); // BinaryExpression
        *s.position_mut(&path).unwrap() = Slot::Stub(NodeKind::BinaryExpression);
        let path2 = s.preorder_paths()[3].clone(); // Identifier(v0)
        *s.position_mut(&path2).unwrap() = Slot::Stub(NodeKind::Identifier);
        assert_eq!(s.stub_count(), 2);
        let (first, kind) = s.first_stub().unwrap();
        assert_eq!(kind, NodeKind::Identifier);
        assert_eq!(first, path2);
    }

    #[test]
    fn fragmentizable_means_some_slot_present() {
        assert!(!leaf(NodeKind::EmptyStatement).is_fragmentizable());
        let ret = AstNode::new(NodeKind::ReturnStatement, vec![Slot::Absent]).unwrap();
        assert!(!ret.is_fragmentizable());
        assert!(ident("a").is_fragmentizable());
        assert!(block(vec![]).is_fragmentizable());
    }
}
