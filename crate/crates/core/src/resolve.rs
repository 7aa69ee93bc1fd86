//! Reference-error repair for generated programs.
//!
//! A scope is built for every construct that opens one, declarations are
//! hoisted, and binding types are tracked through declarators and plain
//! assignments in traversal order. Each reference to an undeclared name is
//! then swapped for a live binding, preferring one whose type matches what
//! the use site suggests.

use alloc::{
    collections::{BTreeMap, BTreeSet},
    format,
    string::{String, ToString},
    vec::Vec,
};
use core::fmt;

use rand::Rng;

use crate::ast::{build, AstNode, ChildRef, NodeKind, NodePath, Slot, Value};
use crate::normalize::{pattern_names, BuiltinRegistry};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum JsType {
    Array,
    Boolean,
    Function,
    Null,
    Number,
    Object,
    Regex,
    String,
    Undefined,
    Unknown,
}

impl JsType {
    pub const ALL: [JsType; 10] = [
        JsType::Array,
        JsType::Boolean,
        JsType::Function,
        JsType::Null,
        JsType::Number,
        JsType::Object,
        JsType::Regex,
        JsType::String,
        JsType::Undefined,
        JsType::Unknown,
    ];

    pub fn name(self) -> &'static str {
        match self {
            JsType::Array => "array",
            JsType::Boolean => "boolean",
            JsType::Function => "function",
            JsType::Null => "null",
            JsType::Number => "number",
            JsType::Object => "object",
            JsType::Regex => "regex",
            JsType::String => "string",
            JsType::Undefined => "undefined",
            JsType::Unknown => "unknown",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        JsType::ALL.into_iter().find(|t| t.name() == name)
    }

    /// Initializer used when a fresh binding of this type must be invented.
    pub fn default_init(self) -> AstNode {
        match self {
            JsType::Array => build::array(Vec::new()),
            JsType::Boolean => build::literal(Value::Bool(false)),
            JsType::Function => build::function_expr(Vec::new(), Vec::new()),
            JsType::Null => build::literal(Value::Null),
            JsType::Number | JsType::Unknown => build::num(0.0),
            JsType::Object => build::object(),
            JsType::Regex => build::regex("a", ""),
            JsType::String => build::string(""),
            JsType::Undefined => build::ident("undefined"),
        }
    }
}

impl fmt::Display for JsType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Type of an expression judged from its node kind alone.
pub fn infer_static_type(expr: &AstNode) -> JsType {
    match expr.kind {
        NodeKind::ArrayExpression => JsType::Array,
        NodeKind::ObjectExpression => JsType::Object,
        NodeKind::FunctionExpression | NodeKind::ArrowFunctionExpression | NodeKind::ClassExpression => {
            JsType::Function
        }
        NodeKind::Literal => match expr.value("value") {
            Some(Value::Bool(_)) => JsType::Boolean,
            Some(Value::Null) => JsType::Null,
            Some(Value::Num(_)) => JsType::Number,
            Some(Value::Str(_)) => JsType::String,
            Some(Value::Regex { .. }) => JsType::Regex,
            None => JsType::Unknown,
        },
        NodeKind::Identifier if expr.ident_name() == Some("undefined") => JsType::Undefined,
        _ => JsType::Unknown,
    }
}

/// How an undeclared name is used, looked up in [`UsageHints`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Usage {
    Plain,
    /// Object of a non-computed member access `x.<name>`.
    Member(String),
    /// Object of a computed member access `x[…]`.
    ComputedMemberObject,
    Call,
    Arithmetic,
}

impl Usage {
    pub fn key(&self) -> Option<String> {
        match self {
            Usage::Plain => None,
            Usage::Member(name) => Some(format!("member:{name}")),
            Usage::ComputedMemberObject => Some("computed-member-object".into()),
            Usage::Call => Some("call".into()),
            Usage::Arithmetic => Some("arithmetic".into()),
        }
    }
}

/// Usage pattern → type table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UsageHints {
    pub table: BTreeMap<String, JsType>,
}

impl Default for UsageHints {
    fn default() -> Self {
        let table = [
            ("member:length", JsType::String),
            ("call", JsType::Function),
            ("arithmetic", JsType::Number),
            ("computed-member-object", JsType::Array),
        ]
        .into_iter()
        .map(|(k, t)| (k.to_string(), t))
        .collect();
        UsageHints { table }
    }
}

impl UsageHints {
    pub fn infer(&self, usage: &Usage) -> JsType {
        usage.key().and_then(|k| self.table.get(&k).copied()).unwrap_or(JsType::Unknown)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScopeKind {
    /// Holds the registry built-ins; parent of the program scope.
    Builtins,
    Program,
    Function,
    Block,
    Catch,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Scope {
    pub kind: ScopeKind,
    /// Path of the node that opened the scope (empty for the builtin scope).
    pub owner: NodePath,
    pub bindings: BTreeMap<String, JsType>,
    pub parent: Option<usize>,
    /// Whether a fresh declaration can be prepended to this scope's body.
    can_host: bool,
    /// Non-arrow functions have an implicit `arguments`.
    has_arguments: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScopeTree {
    pub scopes: Vec<Scope>,
}

impl ScopeTree {
    pub const BUILTINS: usize = 0;
    pub const PROGRAM: usize = 1;

    /// Innermost scope on the chain from `scope` that binds `name`.
    pub fn lookup(&self, mut scope: usize, name: &str) -> Option<usize> {
        loop {
            let s = &self.scopes[scope];
            if s.bindings.contains_key(name) || (name == "arguments" && s.has_arguments) {
                return Some(scope);
            }
            scope = s.parent?;
        }
    }

    /// Program-declared bindings visible from `scope`, innermost shadowing
    /// outer ones.
    fn visible(&self, mut scope: usize) -> Vec<(String, JsType)> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        loop {
            let s = &self.scopes[scope];
            if s.kind != ScopeKind::Builtins {
                for (name, ty) in &s.bindings {
                    if seen.insert(name.clone()) {
                        out.push((name.clone(), *ty));
                    }
                }
            }
            match s.parent {
                Some(p) => scope = p,
                None => return out,
            }
        }
    }

    fn nearest_host(&self, mut scope: usize) -> usize {
        loop {
            let s = &self.scopes[scope];
            if s.can_host {
                return scope;
            }
            scope = s.parent.unwrap_or(ScopeTree::PROGRAM);
        }
    }
}

/// One rewritten reference.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Replacement {
    pub old: String,
    pub new: String,
    pub inferred: JsType,
}

/// Scope tree of a program, with binding types as they stand after the
/// whole program has been traversed.
pub fn build_scopes(ast: &AstNode, builtins: &BuiltinRegistry) -> ScopeTree {
    let mut copy = ast.clone();
    let hints = UsageHints::default();
    let mut w = Walker::<rand_chacha::ChaCha8Rng>::new(&copy, builtins, &hints, Mode::Scan(Vec::new()));
    w.run(&mut copy);
    w.tree
}

/// Names referenced without a visible declaration, in traversal order.
pub fn find_undeclared(ast: &AstNode, builtins: &BuiltinRegistry) -> Vec<String> {
    let mut copy = ast.clone();
    let hints = UsageHints::default();
    let mut w = Walker::<rand_chacha::ChaCha8Rng>::new(&copy, builtins, &hints, Mode::Scan(Vec::new()));
    w.run(&mut copy);
    match w.mode {
        Mode::Scan(found) => found,
        Mode::Resolve { .. } => unreachable!(),
    }
}

/// Replaces every reference to an undeclared name with a live binding.
pub fn resolve_references<R: Rng + ?Sized>(
    ast: &AstNode,
    builtins: &BuiltinRegistry,
    hints: &UsageHints,
    rng: &mut R,
) -> (AstNode, Vec<Replacement>) {
    let mut out = ast.clone();
    let mode = Mode::Resolve { rng, report: Vec::new(), pending: BTreeMap::new() };
    let mut w = Walker::new(&out, builtins, hints, mode);
    w.run(&mut out);
    let Mode::Resolve { report, pending, .. } = w.mode else { unreachable!() };

    // Deepest owners first so earlier insertions cannot shift later paths.
    let mut pending: Vec<(NodePath, AstNode)> =
        pending.into_values().map(|(path, decl)| (path, decl)).collect();
    pending.sort_by(|a, b| b.0.len().cmp(&a.0.len()));
    for (owner, decl) in pending {
        let node = out.get_mut(&owner).expect("scope owner path");
        let list = match node.kind {
            NodeKind::Program => &mut node.slots[0],
            _ => {
                let body = node.slot_mut("body").and_then(Slot::as_node_mut).expect("function body");
                &mut body.slots[0]
            }
        };
        if let Slot::List(items) = list {
            items.insert(0, Slot::node(decl));
        }
    }
    (out, report)
}

enum Mode<'r, R: ?Sized> {
    Scan(Vec<String>),
    Resolve {
        rng: &'r mut R,
        report: Vec<Replacement>,
        /// Host scope → (owner path, declaration to prepend).
        pending: BTreeMap<usize, (NodePath, AstNode)>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum PatternMode {
    Bind,
    Assign,
}

struct Walker<'a, 'r, R: ?Sized> {
    builtins: &'a BuiltinRegistry,
    hints: &'a UsageHints,
    tree: ScopeTree,
    mode: Mode<'r, R>,
    path: NodePath,
    used_names: BTreeSet<String>,
}

impl<'a, 'r, R: Rng + ?Sized> Walker<'a, 'r, R> {
    fn new(ast: &AstNode, builtins: &'a BuiltinRegistry, hints: &'a UsageHints, mode: Mode<'r, R>) -> Self {
        let mut builtin_scope = Scope {
            kind: ScopeKind::Builtins,
            owner: NodePath::new(),
            bindings: BTreeMap::new(),
            parent: None,
            can_host: false,
            has_arguments: false,
        };
        for (name, ty) in builtins.typed_names() {
            builtin_scope.bindings.insert(name.into(), ty);
        }
        let used_names = ast.preorder().into_iter().filter_map(|n| n.ident_name()).map(String::from).collect();
        Walker { builtins, hints, tree: ScopeTree { scopes: alloc::vec![builtin_scope] }, mode, path: NodePath::new(), used_names }
    }

    fn run(&mut self, ast: &mut AstNode) {
        let program = self.open(ScopeKind::Program, ScopeTree::BUILTINS, true);
        if ast.kind == NodeKind::Program {
            let body = ast.slots[0].as_list().unwrap_or(&[]);
            self.hoist_vars(body, program);
            self.declare_lexical(body, program);
            self.walk_list(ast, 0, program);
        } else {
            self.walk(ast, program);
        }
    }

    fn open(&mut self, kind: ScopeKind, parent: usize, can_host: bool) -> usize {
        self.tree.scopes.push(Scope {
            kind,
            owner: self.path.clone(),
            bindings: BTreeMap::new(),
            parent: Some(parent),
            can_host,
            has_arguments: false,
        });
        self.tree.scopes.len() - 1
    }

    fn bind(&mut self, scope: usize, name: &str, ty: JsType) {
        let slot = self.tree.scopes[scope].bindings.entry(name.into()).or_insert(ty);
        if ty == JsType::Function {
            *slot = ty;
        }
    }

    fn set_type(&mut self, scope: usize, name: &str, ty: JsType) {
        if let Some(owner) = self.tree.lookup(scope, name) {
            if owner != ScopeTree::BUILTINS {
                if let Some(t) = self.tree.scopes[owner].bindings.get_mut(name) {
                    *t = ty;
                }
            }
        }
    }

    /// `var` declarations anywhere below `stmts` (not inside nested
    /// functions) bind in the function-level `scope`.
    fn hoist_vars(&mut self, stmts: &[Slot], scope: usize) {
        for s in stmts {
            if let Some(n) = s.as_node() {
                self.hoist_vars_in(n, scope);
            }
        }
    }

    fn hoist_vars_in(&mut self, node: &AstNode, scope: usize) {
        use NodeKind::*;
        match node.kind {
            FunctionDeclaration | FunctionExpression | ArrowFunctionExpression | ClassDeclaration
            | ClassExpression => {}
            VariableDeclaration if node.str_value("kind") == Some("var") => {
                for d in node.slot("declarations").and_then(Slot::as_list).unwrap_or(&[]) {
                    let mut names = Vec::new();
                    if let Some(id) = d.as_node().and_then(|d| d.child("id")) {
                        pattern_names(id, &mut names);
                    }
                    for n in names {
                        self.bind(scope, n, JsType::Undefined);
                    }
                }
            }
            _ => {
                for c in node.children() {
                    self.hoist_vars_in(c, scope);
                }
            }
        }
    }

    /// `let`/`const`/`class` and function declarations directly in `stmts`.
    fn declare_lexical(&mut self, stmts: &[Slot], scope: usize) {
        for s in stmts {
            let Some(n) = s.as_node() else { continue };
            match n.kind {
                NodeKind::VariableDeclaration if n.str_value("kind") != Some("var") => {
                    self.declare_declaration(n, scope);
                }
                NodeKind::FunctionDeclaration => {
                    if let Some(name) = n.child("id").and_then(AstNode::ident_name) {
                        self.bind(scope, name, JsType::Function);
                    }
                }
                NodeKind::ClassDeclaration => {
                    if let Some(name) = n.child("id").and_then(AstNode::ident_name) {
                        self.bind(scope, name, JsType::Undefined);
                    }
                }
                _ => {}
            }
        }
    }

    fn declare_declaration(&mut self, decl: &AstNode, scope: usize) {
        for d in decl.slot("declarations").and_then(Slot::as_list).unwrap_or(&[]) {
            let mut names = Vec::new();
            if let Some(id) = d.as_node().and_then(|d| d.child("id")) {
                pattern_names(id, &mut names);
            }
            for n in names {
                self.bind(scope, n, JsType::Undefined);
            }
        }
    }

    fn declare_pattern(&mut self, pattern: &AstNode, scope: usize) {
        let mut names = Vec::new();
        pattern_names(pattern, &mut names);
        for n in names {
            self.bind(scope, n, JsType::Undefined);
        }
    }

    fn walk_slot(&mut self, node: &mut AstNode, name: &str, scope: usize) {
        self.with_slot(node, name, |w, child| w.walk(child, scope));
    }

    fn with_slot(&mut self, node: &mut AstNode, name: &str, f: impl FnOnce(&mut Self, &mut AstNode)) {
        let Some(i) = node.kind.slot_index(name) else { return };
        if let Slot::Node(child) = &mut node.slots[i] {
            self.path.push(ChildRef { slot: i, item: None });
            f(self, child);
            self.path.pop();
        }
    }

    fn walk_list(&mut self, node: &mut AstNode, slot: usize, scope: usize) {
        self.walk_list_with(node, slot, |w, child| w.walk(child, scope));
    }

    fn walk_list_with(&mut self, node: &mut AstNode, slot: usize, mut f: impl FnMut(&mut Self, &mut AstNode)) {
        if let Slot::List(items) = &mut node.slots[slot] {
            for (j, item) in items.iter_mut().enumerate() {
                if let Slot::Node(child) = item {
                    self.path.push(ChildRef { slot, item: Some(j) });
                    f(self, child);
                    self.path.pop();
                }
            }
        }
    }

    fn walk_children(&mut self, node: &mut AstNode, scope: usize) {
        for i in 0..node.slots.len() {
            match &node.slots[i] {
                Slot::Node(_) => {
                    let name = node.kind.schema()[i].name;
                    self.walk_slot(node, name, scope);
                }
                Slot::List(_) => self.walk_list(node, i, scope),
                _ => {}
            }
        }
    }

    fn walk(&mut self, node: &mut AstNode, scope: usize) {
        self.walk_expr(node, scope, Usage::Plain);
    }

    fn walk_expr(&mut self, node: &mut AstNode, scope: usize, usage: Usage) {
        use NodeKind::*;
        match node.kind {
            Identifier => self.reference(node, scope, usage),
            FunctionDeclaration | FunctionExpression | ArrowFunctionExpression => self.walk_function(node, scope),
            BlockStatement => {
                let inner = self.open(ScopeKind::Block, scope, false);
                self.declare_lexical(node.slots[0].as_list().unwrap_or(&[]), inner);
                self.walk_list(node, 0, inner);
            }
            CatchClause => {
                let inner = self.open(ScopeKind::Catch, scope, false);
                if let Some(p) = node.child("param") {
                    let p = p.clone();
                    self.declare_pattern(&p, inner);
                }
                self.with_slot(node, "param", |w, p| w.walk_pattern(p, inner, PatternMode::Bind));
                self.walk_slot(node, "body", inner);
            }
            ForStatement | ForInStatement | ForOfStatement => {
                let head = if node.kind == ForStatement { "init" } else { "left" };
                let lexical = node
                    .child(head)
                    .filter(|d| d.kind == VariableDeclaration && d.str_value("kind") != Some("var"))
                    .cloned();
                let inner = match lexical {
                    Some(decl) => {
                        let s = self.open(ScopeKind::Block, scope, false);
                        self.declare_declaration(&decl, s);
                        s
                    }
                    None => scope,
                };
                if node.kind == ForStatement {
                    self.walk_children(node, inner);
                } else {
                    let is_decl = node.child("left").map(|l| l.kind == VariableDeclaration).unwrap_or(false);
                    if is_decl {
                        self.walk_slot(node, "left", inner);
                    } else {
                        self.with_slot(node, "left", |w, l| w.walk_pattern(l, inner, PatternMode::Assign));
                    }
                    self.walk_slot(node, "right", inner);
                    self.walk_slot(node, "body", inner);
                }
            }
            SwitchStatement => {
                self.walk_slot(node, "discriminant", scope);
                let inner = self.open(ScopeKind::Block, scope, false);
                let consequents: Vec<Slot> = node.slots[1]
                    .as_list()
                    .unwrap_or(&[])
                    .iter()
                    .filter_map(Slot::as_node)
                    .flat_map(|c| c.slots[1].as_list().unwrap_or(&[]).iter().cloned())
                    .collect();
                self.declare_lexical(&consequents, inner);
                self.walk_list(node, 1, inner);
            }
            ClassExpression if node.child("id").is_some() => {
                let inner = self.open(ScopeKind::Block, scope, false);
                if let Some(name) = node.child("id").and_then(AstNode::ident_name) {
                    let name = String::from(name);
                    self.bind(inner, &name, JsType::Function);
                }
                self.walk_slot(node, "superClass", inner);
                self.walk_slot(node, "body", inner);
            }
            ClassDeclaration | ClassExpression => {
                self.walk_slot(node, "superClass", scope);
                self.walk_slot(node, "body", scope);
            }
            VariableDeclarator => {
                self.with_slot(node, "id", |w, id| w.walk_pattern(id, scope, PatternMode::Bind));
                self.walk_slot(node, "init", scope);
                if let (Some(name), Some(init)) = (node.child("id").and_then(AstNode::ident_name), node.child("init")) {
                    let ty = infer_static_type(init);
                    let name = String::from(name);
                    self.set_type(scope, &name, ty);
                }
            }
            AssignmentExpression => {
                let op = node.str_value("operator").unwrap_or("=");
                let left_usage = if is_arithmetic_assign(op) { Usage::Arithmetic } else { Usage::Plain };
                let plain = op == "=";
                self.with_slot(node, "left", |w, l| {
                    if l.kind == Identifier {
                        w.reference(l, scope, left_usage);
                    } else {
                        w.walk_pattern(l, scope, PatternMode::Assign);
                    }
                });
                self.walk_slot(node, "right", scope);
                if plain {
                    if let (Some(name), Some(right)) = (node.child("left").and_then(AstNode::ident_name), node.child("right")) {
                        let ty = infer_static_type(right);
                        let name = String::from(name);
                        self.set_type(scope, &name, ty);
                    }
                }
            }
            MemberExpression => {
                let computed = node.bool_value("computed");
                let usage = if computed {
                    Usage::ComputedMemberObject
                } else {
                    Usage::Member(node.child("property").and_then(AstNode::ident_name).unwrap_or("").into())
                };
                self.with_slot(node, "object", |w, o| w.walk_expr(o, scope, usage));
                if computed {
                    self.walk_slot(node, "property", scope);
                }
            }
            CallExpression | NewExpression => {
                self.with_slot(node, "callee", |w, c| w.walk_expr(c, scope, Usage::Call));
                self.walk_list(node, 1, scope);
            }
            UpdateExpression => {
                self.with_slot(node, "argument", |w, a| w.walk_expr(a, scope, Usage::Arithmetic));
            }
            UnaryExpression => {
                let usage = match node.str_value("operator") {
                    Some("-" | "+" | "~") => Usage::Arithmetic,
                    _ => Usage::Plain,
                };
                self.with_slot(node, "argument", |w, a| w.walk_expr(a, scope, usage));
            }
            BinaryExpression => {
                let usage = if is_arithmetic(node.str_value("operator").unwrap_or("")) {
                    Usage::Arithmetic
                } else {
                    Usage::Plain
                };
                let u2 = usage.clone();
                self.with_slot(node, "left", |w, a| w.walk_expr(a, scope, usage));
                self.with_slot(node, "right", |w, a| w.walk_expr(a, scope, u2));
            }
            Property | MethodDefinition => {
                if node.bool_value("computed") {
                    self.walk_slot(node, "key", scope);
                }
                self.walk_slot(node, "value", scope);
            }
            LabeledStatement => self.walk_slot(node, "body", scope),
            BreakStatement | ContinueStatement | MetaProperty => {}
            _ => self.walk_children(node, scope),
        }
    }

    fn walk_function(&mut self, node: &mut AstNode, scope: usize) {
        let arrow = node.kind == NodeKind::ArrowFunctionExpression;
        let block_body = node.child("body").map(|b| b.kind == NodeKind::BlockStatement).unwrap_or(false);
        let inner = self.open(ScopeKind::Function, scope, block_body);
        self.tree.scopes[inner].has_arguments = !arrow;
        if node.kind == NodeKind::FunctionExpression {
            if let Some(name) = node.child("id").and_then(AstNode::ident_name) {
                let name = String::from(name);
                self.bind(inner, &name, JsType::Function);
            }
        }
        let params: Vec<AstNode> =
            node.slot("params").and_then(Slot::as_list).unwrap_or(&[]).iter().filter_map(Slot::as_node).cloned().collect();
        for p in &params {
            self.declare_pattern(p, inner);
        }
        if block_body {
            let body = node.child("body").expect("body").slots[0].as_list().unwrap_or(&[]).to_vec();
            self.hoist_vars(&body, inner);
            self.declare_lexical(&body, inner);
        }
        let params_slot = node.kind.slot_index("params").expect("params");
        self.walk_list_with(node, params_slot, |w, p| w.walk_pattern(p, inner, PatternMode::Bind));
        if block_body {
            self.with_slot(node, "body", |w, b| w.walk_list(b, 0, inner));
        } else {
            self.walk_slot(node, "body", inner);
        }
    }

    fn walk_pattern(&mut self, node: &mut AstNode, scope: usize, mode: PatternMode) {
        use NodeKind::*;
        match node.kind {
            Identifier => {
                if mode == PatternMode::Assign {
                    self.reference(node, scope, Usage::Plain);
                }
            }
            ObjectPattern => self.walk_list_with(node, 0, |w, p| match p.kind {
                Property => {
                    if p.bool_value("computed") {
                        w.walk_slot(p, "key", scope);
                    }
                    w.with_slot(p, "value", |w, v| w.walk_pattern(v, scope, mode));
                }
                _ => w.walk_pattern(p, scope, mode),
            }),
            ArrayPattern => self.walk_list_with(node, 0, |w, e| w.walk_pattern(e, scope, mode)),
            AssignmentPattern => {
                self.with_slot(node, "left", |w, l| w.walk_pattern(l, scope, mode));
                self.walk_slot(node, "right", scope);
            }
            RestElement => self.with_slot(node, "argument", |w, a| w.walk_pattern(a, scope, mode)),
            _ => self.walk(node, scope),
        }
    }

    fn reference(&mut self, ident: &mut AstNode, scope: usize, usage: Usage) {
        let Some(name) = ident.ident_name() else { return };
        if self.tree.lookup(scope, name).is_some() || self.builtins.contains(name) {
            return;
        }
        let name = String::from(name);
        let inferred = self.hints.infer(&usage);
        let candidates = self.tree.visible(scope);
        let tree = &mut self.tree;
        match &mut self.mode {
            Mode::Scan(found) => found.push(name),
            Mode::Resolve { rng, report, pending } => {
                let typed: Vec<&(String, JsType)> = if inferred == JsType::Unknown {
                    Vec::new()
                } else {
                    candidates.iter().filter(|(_, t)| *t == inferred).collect()
                };
                let pool: Vec<&(String, JsType)> =
                    if typed.is_empty() { candidates.iter().collect() } else { typed };
                let new = if pool.is_empty() {
                    let host = tree.nearest_host(scope);
                    let fresh = fresh_name(&self.used_names, self.builtins);
                    self.used_names.insert(fresh.clone());
                    tree.scopes[host].bindings.insert(fresh.clone(), inferred);
                    let decl = build::var_decl("var", &fresh, Some(inferred.default_init()));
                    let owner = tree.scopes[host].owner.clone();
                    pending.insert(host, (owner, decl));
                    fresh
                } else {
                    pool[rng.gen_range(0..pool.len())].0.clone()
                };
                if let Some(Slot::Value(v)) = ident.slots.get_mut(0) {
                    *v = Value::Str(new.clone());
                }
                report.push(Replacement { old: name, new, inferred });
            }
        }
    }
}

fn fresh_name(used: &BTreeSet<String>, builtins: &BuiltinRegistry) -> String {
    (0..)
        .map(|i| format!("v{i}"))
        .find(|n| !used.contains(n) && !builtins.contains(n))
        .expect("unbounded")
}

fn is_arithmetic(op: &str) -> bool {
    matches!(op, "-" | "*" | "/" | "%" | "**" | "<<" | ">>" | ">>>" | "&" | "|" | "^")
}

fn is_arithmetic_assign(op: &str) -> bool {
    op.strip_suffix('=').map(is_arithmetic).unwrap_or(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ast::build::*;
    use alloc::vec;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn builtins() -> BuiltinRegistry {
        let mut b = BuiltinRegistry::default();
        b.names.insert("Math".into());
        b.names.insert("undefined".into());
        b.test_functions.insert("print".into());
        b
    }

    fn func_decl(name: &str, body: Vec<AstNode>) -> AstNode {
        AstNode {
            kind: NodeKind::FunctionDeclaration,
            slots: vec![
                Slot::node(ident(name)),
                Slot::List(vec![]),
                Slot::node(block(body)),
                Slot::Value(Value::Bool(false)),
                Slot::Value(Value::Bool(false)),
            ],
        }
    }

    fn try_catch(param: &str) -> AstNode {
        let handler = AstNode {
            kind: NodeKind::CatchClause,
            slots: vec![Slot::node(ident(param)), Slot::node(block(vec![]))],
        };
        AstNode {
            kind: NodeKind::TryStatement,
            slots: vec![Slot::node(block(vec![])), Slot::node(handler), Slot::Absent],
        }
    }

    fn resolve(ast: &AstNode, seed: u64) -> (AstNode, Vec<Replacement>) {
        resolve_references(ast, &builtins(), &UsageHints::default(), &mut ChaCha8Rng::seed_from_u64(seed))
    }

    #[test]
    fn static_types() {
        assert_eq!(infer_static_type(&array(vec![])), JsType::Array);
        assert_eq!(infer_static_type(&function_expr(vec![], vec![])), JsType::Function);
        assert_eq!(infer_static_type(&binary("+", ident("v1"), ident("v2"))), JsType::Unknown);
        assert_eq!(infer_static_type(&regex("a", "g")), JsType::Regex);
        assert_eq!(infer_static_type(&literal(Value::Null)), JsType::Null);
        assert_eq!(infer_static_type(&ident("undefined")), JsType::Undefined);
        assert_eq!(JsType::ALL.len(), 10);
    }

    #[test]
    fn var_in_block_hoists_to_program() {
        let ast = program(vec![block(vec![var_decl("var", "v0", Some(num(1.0)))])]);
        let tree = build_scopes(&ast, &builtins());
        assert_eq!(tree.scopes[ScopeTree::PROGRAM].bindings.get("v0"), Some(&JsType::Number));
        assert!(tree.scopes[2..].iter().all(|s| !s.bindings.contains_key("v0")));
    }

    #[test]
    fn catch_param_is_local_to_catch() {
        let ast = program(vec![try_catch("v0")]);
        let tree = build_scopes(&ast, &builtins());
        let holders: Vec<ScopeKind> =
            tree.scopes.iter().filter(|s| s.bindings.contains_key("v0")).map(|s| s.kind).collect();
        assert_eq!(holders, vec![ScopeKind::Catch]);
    }

    #[test]
    fn use_before_var_is_declared() {
        let ast = program(vec![expr_stmt(ident("v0")), var_decl("var", "v0", None)]);
        assert!(find_undeclared(&ast, &builtins()).is_empty());
        let (out, report) = resolve(&ast, 1);
        assert_eq!(out, ast);
        assert!(report.is_empty());
    }

    #[test]
    fn length_usage_prefers_a_string() {
        // var v0 = "s"; var v1 = 1; var v2 = []; v9.length;
        let ast = program(vec![
            var_decl("var", "v0", Some(string("s"))),
            var_decl("var", "v1", Some(num(1.0))),
            var_decl("var", "v2", Some(array(vec![]))),
            expr_stmt(member(ident("v9"), ident("length"), false)),
        ]);
        for seed in 0..20 {
            let (_, report) = resolve(&ast, seed);
            assert_eq!(report, vec![Replacement { old: "v9".into(), new: "v0".into(), inferred: JsType::String }]);
        }
    }

    #[test]
    fn call_usage_prefers_a_function() {
        let ast = program(vec![
            var_decl("var", "v0", Some(num(1.0))),
            func_decl("f0", vec![]),
            expr_stmt(call(ident("v9"), vec![])),
        ]);
        let (out, report) = resolve(&ast, 3);
        assert_eq!(report[0].new, "f0");
        assert_eq!(out.get(&[ChildRef { slot: 0, item: Some(2) }]).unwrap().child("expression").unwrap().child("callee").unwrap().ident_name(), Some("f0"));
    }

    #[test]
    fn empty_scope_gets_a_fresh_declaration() {
        let ast = program(vec![expr_stmt(call(ident("print"), vec![ident("v9")]))]);
        let (out, report) = resolve(&ast, 0);
        let expected = program(vec![
            var_decl("var", "v0", Some(num(0.0))),
            expr_stmt(call(ident("print"), vec![ident("v0")])),
        ]);
        assert_eq!(out, expected);
        assert_eq!(report[0].inferred, JsType::Unknown);
    }

    #[test]
    fn fresh_declaration_goes_into_the_enclosing_function() {
        // function f0() { return v9 * 2; }
        let ret = AstNode {
            kind: NodeKind::ReturnStatement,
            slots: vec![Slot::node(binary("*", ident("v9"), num(2.0)))],
        };
        let ast = program(vec![func_decl("f0", vec![ret])]);
        let (out, _) = resolve(&ast, 0);
        // f0 itself is visible, so it is a candidate; nothing fresh needed.
        assert!(find_undeclared(&out, &builtins()).is_empty());

        let arrow = AstNode {
            kind: NodeKind::ArrowFunctionExpression,
            slots: vec![Slot::List(vec![]), Slot::node(block(vec![expr_stmt(ident("v9"))])), Slot::Value(Value::Bool(false))],
        };
        let ast = program(vec![expr_stmt(arrow)]);
        let (out, _) = resolve(&ast, 0);
        let text = crate::print::print_program(&out).unwrap();
        assert_eq!(text, "() => {\n  var v0 = 0;\n  v0;\n};");
    }

    #[test]
    fn builtins_are_never_rewritten() {
        let ast = program(vec![expr_stmt(call(member(ident("Math"), ident("abs"), false), vec![ident("undefined")]))]);
        let (out, report) = resolve(&ast, 0);
        assert_eq!(out, ast);
        assert!(report.is_empty());
    }

    #[test]
    fn let_in_block_is_not_visible_outside() {
        let ast = program(vec![block(vec![var_decl("let", "v0", None)]), expr_stmt(ident("v0"))]);
        assert_eq!(find_undeclared(&ast, &builtins()), vec![String::from("v0")]);
        let (out, _) = resolve(&ast, 0);
        assert!(find_undeclared(&out, &builtins()).is_empty());
        assert_eq!(resolve(&out, 9).0, out);
    }

    #[test]
    fn assignment_updates_binding_type() {
        // var v0; v0 = []; v9[0];
        let ast = program(vec![
            var_decl("var", "v0", None),
            var_decl("var", "v1", Some(num(1.0))),
            expr_stmt(assign("=", ident("v0"), array(vec![]))),
            expr_stmt(member(ident("v9"), num(0.0), true)),
        ]);
        let (_, report) = resolve(&ast, 5);
        assert_eq!(report[0].new, "v0");
        assert_eq!(report[0].inferred, JsType::Array);
    }

    #[test]
    fn labels_and_properties_are_not_references() {
        let labeled = AstNode {
            kind: NodeKind::LabeledStatement,
            slots: vec![
                Slot::node(ident("outer")),
                Slot::node(AstNode {
                    kind: NodeKind::BreakStatement,
                    slots: vec![Slot::node(ident("outer"))],
                }),
            ],
        };
        let ast = program(vec![labeled, expr_stmt(member(ident("Math"), ident("zz"), false))]);
        assert!(find_undeclared(&ast, &builtins()).is_empty());
    }
}
