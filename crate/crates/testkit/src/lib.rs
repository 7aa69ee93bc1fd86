//! Seeded random ECMAScript programs for property tests.
//!
//! Programs are syntactically valid scripts (sloppy mode): `yield` only in
//! generators, `await` only in async functions, `break`/`continue` only in
//! loops, labels only where a matching label encloses, `super` only in
//! methods. They are not meant to run without errors.

use fraggen_core::ast::{build, Value};
use fraggen_core::{AstNode, NodeKind, Slot};
use proptest::strategy::{BoxedStrategy, Strategy};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Identifier pool. Includes a few globals so normalization sees builtins.
pub const NAMES: &[&str] = &[
    "a", "b", "c", "x", "y", "z", "obj", "arr", "fn1", "tmp", "count", "value", "Math", "print", "Object", "Array",
    "String", "undefined", "NaN", "JSON",
];

const PROP_NAMES: &[&str] = &["p", "q", "length", "next", "value", "then", "x0", "get", "set", "static"];

const BINARY_OPS: &[&str] = &[
    "+", "-", "*", "/", "%", "**", "==", "!=", "===", "!==", "<", "<=", ">", ">=", "<<", ">>", ">>>", "&", "|", "^",
    "in", "instanceof",
];
const LOGICAL_OPS: &[&str] = &["&&", "||", "??"];
const ASSIGN_OPS: &[&str] = &["=", "+=", "-=", "*=", "/=", "%=", "**=", "<<=", ">>=", ">>>=", "&=", "|=", "^="];
const UNARY_OPS: &[&str] = &["-", "+", "!", "~", "typeof", "void", "delete"];

/// Builds a node from named slots; unnamed slots stay empty.
pub fn node(kind: NodeKind, slots: Vec<(&str, Slot)>) -> AstNode {
    let mut n = AstNode::empty(kind);
    for (name, slot) in slots {
        *n.slot_mut(name).unwrap_or_else(|| panic!("{} has no slot {name}", kind.name())) = slot;
    }
    n
}

fn boxed(n: AstNode) -> Slot {
    Slot::node(n)
}

fn list(items: Vec<AstNode>) -> Slot {
    Slot::List(items.into_iter().map(Slot::node).collect())
}

fn flag(b: bool) -> Slot {
    Slot::Value(Value::Bool(b))
}

fn text(s: &str) -> Slot {
    Slot::Value(Value::str(s))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum FnKind {
    Plain,
    Arrow,
    Method,
}

#[derive(Debug, Clone, Copy, Default)]
struct Ctx {
    /// Inside a non-arrow function (`new.target` allowed).
    function: bool,
    can_return: bool,
    strict: bool,
    generator: bool,
    is_async: bool,
    in_loop: bool,
    in_switch: bool,
    method: bool,
    derived_ctor: bool,
    /// Disallow `in` at the top level of the expression (for-init heads).
    no_in: bool,
}

/// Random program source. `budget` roughly bounds the node count.
pub struct ProgramGen<R: Rng> {
    rng: R,
    budget: i64,
    depth: u32,
    /// Enclosing labels and whether each labels a loop.
    labels: Vec<(String, bool)>,
    label_seq: u32,
    declared: Vec<String>,
}

impl ProgramGen<ChaCha8Rng> {
    pub fn seeded(seed: u64, budget: usize) -> Self {
        ProgramGen::new(ChaCha8Rng::seed_from_u64(seed), budget)
    }
}

impl<R: Rng> ProgramGen<R> {
    pub fn new(rng: R, budget: usize) -> Self {
        ProgramGen { rng, budget: budget as i64, depth: 0, labels: Vec::new(), label_seq: 0, declared: Vec::new() }
    }

    pub fn program(&mut self) -> AstNode {
        let ctx = Ctx::default();
        let n = self.rng.gen_range(1..=6);
        let body = (0..n).map(|_| self.statement(ctx)).collect();
        build::program(body)
    }

    fn exhausted(&self) -> bool {
        self.budget <= 0 || self.depth > 8
    }

    fn tick(&mut self) {
        self.budget -= 1;
    }

    fn chance(&mut self, p: f64) -> bool {
        self.rng.gen_bool(p)
    }

    fn pick<'s>(&mut self, xs: &[&'s str]) -> &'s str {
        xs.choose(&mut self.rng).copied().unwrap()
    }

    /// Reference to a pool name or an earlier binding.
    fn name(&mut self) -> AstNode {
        if !self.declared.is_empty() && self.chance(0.5) {
            let n = self.declared.choose(&mut self.rng).unwrap().clone();
            return build::ident(&n);
        }
        build::ident(self.pick(NAMES))
    }

    /// Fresh binding, so no declaration ever clashes with another.
    fn binding_name(&mut self) -> AstNode {
        let n = format!("v{}", self.declared.len());
        self.declared.push(n.clone());
        build::ident(&n)
    }

    fn nested<T>(&mut self, f: impl FnOnce(&mut Self) -> T) -> T {
        self.depth += 1;
        let out = f(self);
        self.depth -= 1;
        out
    }

    // Statements

    fn statement(&mut self, ctx: Ctx) -> AstNode {
        self.tick();
        if self.exhausted() {
            return if self.chance(0.5) { build::expr_stmt(self.simple_expr(ctx)) } else { self.var_decl(ctx, true) };
        }
        self.nested(|g| g.statement_inner(ctx))
    }

    fn statement_inner(&mut self, ctx: Ctx) -> AstNode {
        match self.rng.gen_range(0..24) {
            0..=4 => build::expr_stmt(self.expression(ctx)),
            5 | 6 => self.var_decl(ctx, true),
            7 => self.function_decl(ctx),
            8 => self.class_decl(ctx),
            9 => self.if_stmt(ctx),
            10 => self.for_stmt(ctx),
            11 => self.for_in_of(ctx),
            12 => self.while_stmt(ctx),
            13 => self.switch_stmt(ctx),
            14 => self.try_stmt(ctx),
            15 => self.block_stmt(ctx),
            16 => self.labeled(ctx),
            17 => node(NodeKind::ThrowStatement, vec![("argument", boxed(self.expression(ctx)))]),
            18 if ctx.can_return => {
                let arg = if self.chance(0.7) { Slot::node(self.expression(ctx)) } else { Slot::Absent };
                node(NodeKind::ReturnStatement, vec![("argument", arg)])
            }
            19 if ctx.in_loop || ctx.in_switch => self.jump(NodeKind::BreakStatement),
            20 if ctx.in_loop => self.jump(NodeKind::ContinueStatement),
            21 => build::leaf(NodeKind::EmptyStatement),
            22 => build::leaf(NodeKind::DebuggerStatement),
            _ => build::expr_stmt(self.call_expr(ctx)),
        }
    }

    fn body(&mut self, ctx: Ctx, max: usize) -> Vec<AstNode> {
        let n = self.rng.gen_range(0..=max);
        (0..n).map(|_| self.statement(ctx)).collect()
    }

    fn block_stmt(&mut self, ctx: Ctx) -> AstNode {
        let body = self.body(ctx, 3);
        build::block(body)
    }

    fn var_decl(&mut self, ctx: Ctx, allow_pattern: bool) -> AstNode {
        let kind = self.pick(&["var", "let", "const"]);
        let n = self.rng.gen_range(1..=2);
        let decls = (0..n)
            .map(|_| {
                let id = if allow_pattern && !self.exhausted() && self.chance(0.15) {
                    self.pattern(ctx)
                } else {
                    self.binding_name()
                };
                let needs_init = kind == "const" || id.kind != NodeKind::Identifier;
                let init = if needs_init || self.chance(0.7) { Slot::node(self.expression(ctx)) } else { Slot::Absent };
                node(NodeKind::VariableDeclarator, vec![("id", boxed(id)), ("init", init)])
            })
            .collect();
        node(NodeKind::VariableDeclaration, vec![("declarations", list(decls)), ("kind", text(kind))])
    }

    fn fn_ctx(ctx: Ctx, generator: bool, is_async: bool, kind: FnKind) -> Ctx {
        let arrow = kind == FnKind::Arrow;
        Ctx {
            function: if arrow { ctx.function } else { true },
            can_return: true,
            strict: ctx.strict,
            generator,
            is_async,
            in_loop: false,
            in_switch: false,
            no_in: false,
            method: kind == FnKind::Method || (arrow && ctx.method),
            derived_ctor: ctx.derived_ctor && kind != FnKind::Plain,
        }
    }

    fn function_parts(&mut self, ctx: Ctx, generator: bool, is_async: bool, kind: FnKind) -> (Vec<AstNode>, AstNode) {
        let inner = Self::fn_ctx(ctx, generator, is_async, kind);
        let labels = std::mem::take(&mut self.labels);
        let params = self.params(inner);
        let body = self.body(inner, 3);
        self.labels = labels;
        (params, build::block(body))
    }

    fn params(&mut self, ctx: Ctx) -> Vec<AstNode> {
        let n = self.rng.gen_range(0..=3);
        let mut out: Vec<AstNode> = (0..n)
            .map(|_| match self.rng.gen_range(0..6) {
                0 if !self.exhausted() => node(
                    NodeKind::AssignmentPattern,
                    vec![("left", boxed(self.binding_name())), ("right", boxed(self.simple_expr(ctx)))],
                ),
                1 if !self.exhausted() => self.pattern(ctx),
                _ => self.binding_name(),
            })
            .collect();
        if self.chance(0.1) {
            out.push(node(NodeKind::RestElement, vec![("argument", boxed(self.binding_name()))]));
        }
        out
    }

    fn function_decl(&mut self, ctx: Ctx) -> AstNode {
        let generator = self.chance(0.2);
        let is_async = self.chance(0.2);
        let (params, body) = self.function_parts(ctx, generator, is_async, FnKind::Plain);
        node(
            NodeKind::FunctionDeclaration,
            vec![
                ("id", boxed(self.binding_name())),
                ("params", list(params)),
                ("body", boxed(body)),
                ("generator", flag(generator)),
                ("async", flag(is_async)),
            ],
        )
    }

    fn class_parts(&mut self, ctx: Ctx) -> (Slot, AstNode) {
        // Class bodies are strict.
        let ctx = Ctx { strict: true, ..ctx };
        let derived = self.chance(0.3);
        let superclass = if derived { Slot::node(self.name()) } else { Slot::Absent };
        let n = self.rng.gen_range(0..=3);
        let mut members = Vec::new();
        if self.chance(0.4) {
            let mctx = Ctx { method: true, derived_ctor: derived, ..ctx };
            let (mut params, mut body) = self.function_parts(mctx, false, false, FnKind::Method);
            if derived {
                let sup = build::expr_stmt(build::call(build::leaf(NodeKind::Super), Vec::new()));
                if let Some(Slot::List(items)) = body.slot_mut("body") {
                    items.insert(0, Slot::node(sup));
                }
            }
            params.retain(|p| p.kind == NodeKind::Identifier);
            members.push(self.method(build::ident("constructor"), "constructor", false, params, body));
        }
        for _ in 0..n {
            let is_static = self.chance(0.2);
            let kind = self.pick(&["method", "method", "get", "set"]);
            let (generator, is_async) =
                if kind == "method" { (self.chance(0.2), self.chance(0.2)) } else { (false, false) };
            let mctx = Ctx { method: true, ..ctx };
            let (mut params, body) = self.function_parts(mctx, generator, is_async, FnKind::Method);
            fix_accessor_params(kind, &mut params, || build::ident("v"));
            let computed = self.chance(0.2);
            let key = if computed { self.simple_expr(ctx) } else { build::ident(self.pick(PROP_NAMES)) };
            // `constructor` may only name the constructor, and a static
            // `prototype` is an error.
            let key = match key.ident_name() {
                Some("constructor" | "prototype") if !computed => build::ident("m"),
                _ => key,
            };
            let value = function_node(NodeKind::FunctionExpression, None, params, body, generator, is_async);
            members.push(node(
                NodeKind::MethodDefinition,
                vec![
                    ("key", boxed(key)),
                    ("value", boxed(value)),
                    ("kind", text(kind)),
                    ("computed", flag(computed)),
                    ("static", flag(is_static)),
                ],
            ));
        }
        (superclass, node(NodeKind::ClassBody, vec![("body", list(members))]))
    }

    fn method(&mut self, key: AstNode, kind: &str, is_static: bool, params: Vec<AstNode>, body: AstNode) -> AstNode {
        let value = function_node(NodeKind::FunctionExpression, None, params, body, false, false);
        node(
            NodeKind::MethodDefinition,
            vec![
                ("key", boxed(key)),
                ("value", boxed(value)),
                ("kind", text(kind)),
                ("computed", flag(false)),
                ("static", flag(is_static)),
            ],
        )
    }

    fn class_decl(&mut self, ctx: Ctx) -> AstNode {
        let (superclass, body) = self.class_parts(ctx);
        node(
            NodeKind::ClassDeclaration,
            vec![("id", boxed(self.binding_name())), ("superClass", superclass), ("body", boxed(body))],
        )
    }

    fn if_stmt(&mut self, ctx: Ctx) -> AstNode {
        let test = self.expression(ctx);
        let consequent = self.block_or_stmt(ctx);
        let alternate = if self.chance(0.4) { Slot::node(self.block_or_stmt(ctx)) } else { Slot::Absent };
        // A bare `if` ending the consequent would capture the `else`; only
        // braces can express that tree.
        let dangling = matches!(
            consequent.kind,
            NodeKind::IfStatement
                | NodeKind::ForStatement
                | NodeKind::ForInStatement
                | NodeKind::ForOfStatement
                | NodeKind::WhileStatement
                | NodeKind::LabeledStatement
        );
        let consequent =
            if dangling && !matches!(alternate, Slot::Absent) { build::block(vec![consequent]) } else { consequent };
        node(
            NodeKind::IfStatement,
            vec![("test", boxed(test)), ("consequent", boxed(consequent)), ("alternate", alternate)],
        )
    }

    /// Sub-statement of a compound statement. Declarations are wrapped in a
    /// block, since only plain statements may stand there.
    fn block_or_stmt(&mut self, ctx: Ctx) -> AstNode {
        let s = self.statement(ctx);
        match s.kind {
            NodeKind::VariableDeclaration | NodeKind::FunctionDeclaration | NodeKind::ClassDeclaration => {
                build::block(vec![s])
            }
            NodeKind::LabeledStatement => build::block(vec![s]),
            _ => s,
        }
    }

    fn loop_body(&mut self, ctx: Ctx) -> AstNode {
        let inner = Ctx { in_loop: true, ..ctx };
        self.block_or_stmt(inner)
    }

    fn for_stmt(&mut self, ctx: Ctx) -> AstNode {
        let head = Ctx { no_in: true, ..ctx };
        let init = match self.rng.gen_range(0..3) {
            0 => Slot::Absent,
            1 => Slot::node(self.var_decl(head, false)),
            _ => Slot::node(self.expression(head)),
        };
        let test = if self.chance(0.7) { Slot::node(self.expression(ctx)) } else { Slot::Absent };
        let update = if self.chance(0.7) { Slot::node(self.expression(ctx)) } else { Slot::Absent };
        let body = self.loop_body(ctx);
        node(NodeKind::ForStatement, vec![("init", init), ("test", test), ("update", update), ("body", boxed(body))])
    }

    fn for_in_of(&mut self, ctx: Ctx) -> AstNode {
        let of = self.chance(0.5);
        let left = if self.chance(0.6) {
            let kind = self.pick(&["var", "let", "const"]);
            let id = if self.chance(0.2) && !self.exhausted() { self.pattern(ctx) } else { self.binding_name() };
            let decl = node(NodeKind::VariableDeclarator, vec![("id", boxed(id))]);
            node(NodeKind::VariableDeclaration, vec![("declarations", list(vec![decl])), ("kind", text(kind))])
        } else {
            self.binding_name()
        };
        let right = if of { self.assignment_level(ctx) } else { self.expression(ctx) };
        let body = self.loop_body(ctx);
        if of {
            node(
                NodeKind::ForOfStatement,
                vec![("left", boxed(left)), ("right", boxed(right)), ("body", boxed(body)), ("await", flag(false))],
            )
        } else {
            node(NodeKind::ForInStatement, vec![("left", boxed(left)), ("right", boxed(right)), ("body", boxed(body))])
        }
    }

    fn while_stmt(&mut self, ctx: Ctx) -> AstNode {
        let test = self.expression(ctx);
        let body = self.loop_body(ctx);
        if self.chance(0.5) {
            node(NodeKind::WhileStatement, vec![("test", boxed(test)), ("body", boxed(body))])
        } else {
            node(NodeKind::DoWhileStatement, vec![("body", boxed(body)), ("test", boxed(test))])
        }
    }

    fn switch_stmt(&mut self, ctx: Ctx) -> AstNode {
        let discriminant = self.expression(ctx);
        let inner = Ctx { in_switch: true, ..ctx };
        let n = self.rng.gen_range(0..=3);
        let default_at = if self.chance(0.5) { Some(self.rng.gen_range(0..=n)) } else { None };
        let mut cases = Vec::new();
        for i in 0..=n {
            if i == n && default_at != Some(n) {
                break;
            }
            let test = if default_at == Some(i) { Slot::Absent } else { Slot::node(self.expression(ctx)) };
            let body = self.body(inner, 2);
            cases.push(node(NodeKind::SwitchCase, vec![("test", test), ("consequent", list(body))]));
        }
        node(NodeKind::SwitchStatement, vec![("discriminant", boxed(discriminant)), ("cases", list(cases))])
    }

    fn try_stmt(&mut self, ctx: Ctx) -> AstNode {
        let block = self.block_stmt(ctx);
        let (handler, finalizer) = match self.rng.gen_range(0..3) {
            0 => (true, false),
            1 => (false, true),
            _ => (true, true),
        };
        let handler = if handler {
            let param = match self.rng.gen_range(0..4) {
                0 => Slot::Absent,
                1 if !self.exhausted() => Slot::node(self.pattern(ctx)),
                _ => Slot::node(self.binding_name()),
            };
            Slot::node(node(NodeKind::CatchClause, vec![("param", param), ("body", boxed(self.block_stmt(ctx)))]))
        } else {
            Slot::Absent
        };
        let finalizer = if finalizer { Slot::node(self.block_stmt(ctx)) } else { Slot::Absent };
        node(NodeKind::TryStatement, vec![("block", boxed(block)), ("handler", handler), ("finalizer", finalizer)])
    }

    fn labeled(&mut self, ctx: Ctx) -> AstNode {
        self.label_seq += 1;
        let label = format!("L{}", self.label_seq);
        let is_loop = self.chance(0.7);
        self.labels.push((label.clone(), is_loop));
        let body = if is_loop {
            match self.rng.gen_range(0..3) {
                0 => self.for_stmt(ctx),
                1 => self.while_stmt(ctx),
                _ => self.for_in_of(ctx),
            }
        } else {
            self.block_stmt(ctx)
        };
        self.labels.pop();
        node(NodeKind::LabeledStatement, vec![("label", boxed(build::ident(&label))), ("body", boxed(body))])
    }

    fn jump(&mut self, kind: NodeKind) -> AstNode {
        // Only labels of enclosing loops qualify for `continue`; labels of
        // blocks qualify for `break` only.
        let candidates: Vec<String> = self
            .labels
            .iter()
            .filter(|(_, is_loop)| kind == NodeKind::BreakStatement || *is_loop)
            .map(|(l, _)| l.clone())
            .collect();
        let label = if !candidates.is_empty() && self.chance(0.3) {
            Slot::node(build::ident(candidates.choose(&mut self.rng).unwrap()))
        } else {
            Slot::Absent
        };
        node(kind, vec![("label", label)])
    }

    // Patterns

    fn pattern(&mut self, ctx: Ctx) -> AstNode {
        self.tick();
        if self.chance(0.5) {
            let n = self.rng.gen_range(0..=3);
            let mut elems: Vec<Slot> = (0..n)
                .map(|_| match self.rng.gen_range(0..5) {
                    0 => Slot::Absent,
                    1 => Slot::node(node(
                        NodeKind::AssignmentPattern,
                        vec![("left", boxed(self.binding_name())), ("right", boxed(self.simple_expr(ctx)))],
                    )),
                    _ => Slot::node(self.binding_name()),
                })
                .collect();
            if self.chance(0.2) {
                elems.push(Slot::node(node(NodeKind::RestElement, vec![("argument", boxed(self.binding_name()))])));
            }
            node(NodeKind::ArrayPattern, vec![("elements", Slot::List(elems))])
        } else {
            let n = self.rng.gen_range(0..=3);
            let mut props: Vec<AstNode> = (0..n)
                .map(|_| {
                    let shorthand = self.chance(0.5);
                    let id = self.binding_name();
                    let (key, value) = if shorthand {
                        (id.clone(), id)
                    } else {
                        (build::ident(self.pick(PROP_NAMES)), id)
                    };
                    let value = if self.chance(0.2) {
                        node(
                            NodeKind::AssignmentPattern,
                            vec![("left", boxed(value)), ("right", boxed(self.simple_expr(ctx)))],
                        )
                    } else {
                        value
                    };
                    property(key, value, "init", false, shorthand, false)
                })
                .collect();
            if self.chance(0.2) {
                props.push(node(NodeKind::RestElement, vec![("argument", boxed(self.binding_name()))]));
            }
            node(NodeKind::ObjectPattern, vec![("properties", list(props))])
        }
    }

    // Expressions

    fn simple_expr(&mut self, ctx: Ctx) -> AstNode {
        match self.rng.gen_range(0..5) {
            0 | 1 => self.name(),
            2 => self.number(),
            3 => self.string_literal(),
            _ => {
                if ctx.function && !ctx.method && self.chance(0.3) {
                    build::leaf(NodeKind::ThisExpression)
                } else {
                    build::literal([Value::Bool(true), Value::Bool(false), Value::Null].choose(&mut self.rng).unwrap().clone())
                }
            }
        }
    }

    fn number(&mut self) -> AstNode {
        let v = match self.rng.gen_range(0..4) {
            0 => self.rng.gen_range(0..10) as f64,
            1 => self.rng.gen_range(0..100_000) as f64,
            2 => (self.rng.gen_range(0..1000) as f64) / 8.0,
            _ => [0.1, 1e21, 1.5e-7, 4294967296.0, 9007199254740993.0].choose(&mut self.rng).copied().unwrap(),
        };
        build::num(v)
    }

    fn string_literal(&mut self) -> AstNode {
        const PIECES: &[&str] = &["a", "b", "hello", " ", "'", "\"", "\\", "\n", "\t", "\u{e9}", "\u{2028}", "${x}", "\0"];
        let n = self.rng.gen_range(0..=4);
        let s: String = (0..n).map(|_| self.pick(PIECES)).collect();
        build::string(&s)
    }

    fn template(&mut self, ctx: Ctx) -> AstNode {
        const RAW: &[&str] = &["", "a", "x y", "n = ", "\\n", "$", "{}"];
        let n = self.rng.gen_range(0..=2);
        let exprs: Vec<AstNode> = (0..n).map(|_| self.expression(Ctx { no_in: false, ..ctx })).collect();
        let quasis = (0..=n)
            .map(|i| {
                let raw = self.pick(RAW);
                let cooked = raw.replace("\\n", "\n");
                node(
                    NodeKind::TemplateElement,
                    vec![("raw", text(raw)), ("cooked", text(&cooked)), ("tail", flag(i == n))],
                )
            })
            .collect();
        node(NodeKind::TemplateLiteral, vec![("quasis", list(quasis)), ("expressions", list(exprs))])
    }

    pub fn expression_pub(&mut self) -> AstNode {
        self.expression(Ctx::default())
    }

    fn expression(&mut self, ctx: Ctx) -> AstNode {
        self.tick();
        if self.exhausted() {
            return self.simple_expr(ctx);
        }
        self.nested(|g| g.expression_inner(ctx))
    }

    /// Expression that is not a sequence (argument, element, initializer).
    fn assignment_level(&mut self, ctx: Ctx) -> AstNode {
        let e = self.expression(ctx);
        if e.kind == NodeKind::SequenceExpression {
            self.simple_expr(ctx)
        } else {
            e
        }
    }

    fn expression_inner(&mut self, ctx: Ctx) -> AstNode {
        match self.rng.gen_range(0..30) {
            0..=3 => self.simple_expr(ctx),
            4 | 5 => {
                let mut op = self.pick(BINARY_OPS);
                if ctx.no_in && op == "in" {
                    op = "+";
                }
                build::binary(op, self.expression(ctx), self.expression(ctx))
            }
            6 => {
                let op = self.pick(LOGICAL_OPS);
                let (l, r) = (self.expression(ctx), self.expression(ctx));
                // `??` may not be mixed with unparenthesized `&&`/`||`; the
                // tree already fixes grouping, so the printer must handle it.
                node(
                    NodeKind::LogicalExpression,
                    vec![("operator", text(op)), ("left", boxed(l)), ("right", boxed(r))],
                )
            }
            7 | 8 => {
                let op = self.pick(ASSIGN_OPS);
                let left = if op == "=" && self.chance(0.15) { self.pattern(ctx) } else { self.target(ctx) };
                build::assign(op, left, self.assignment_level(ctx))
            }
            9 => {
                let op = self.pick(UNARY_OPS);
                let mut arg = self.expression(ctx);
                // Deleting a plain name is a syntax error in strict code.
                if op == "delete" && ctx.strict && arg.kind == NodeKind::Identifier {
                    arg = build::member(arg, build::ident("p"), false);
                }
                node(NodeKind::UnaryExpression, vec![("operator", text(op)), ("argument", boxed(arg))])
            }
            10 => {
                let op = self.pick(&["++", "--"]);
                node(
                    NodeKind::UpdateExpression,
                    vec![("operator", text(op)), ("prefix", flag(self.chance(0.5))), ("argument", boxed(self.target(ctx)))],
                )
            }
            11 => node(
                NodeKind::ConditionalExpression,
                vec![
                    ("test", boxed(self.expression(ctx))),
                    ("consequent", boxed(self.assignment_level(Ctx { no_in: false, ..ctx }))),
                    ("alternate", boxed(self.assignment_level(ctx))),
                ],
            ),
            12 => {
                let n = self.rng.gen_range(2..=3);
                let exprs = (0..n).map(|_| self.assignment_level(ctx)).collect();
                node(NodeKind::SequenceExpression, vec![("expressions", list(exprs))])
            }
            13 | 14 => self.call_expr(ctx),
            15 | 16 => {
                let computed = self.chance(0.4);
                let prop = if computed { self.expression(Ctx { no_in: false, ..ctx }) } else { build::ident(self.pick(PROP_NAMES)) };
                build::member(self.expression(ctx), prop, computed)
            }
            17 => {
                let args = self.arguments(ctx);
                node(NodeKind::NewExpression, vec![("callee", boxed(self.expression(ctx))), ("arguments", list(args))])
            }
            18 => {
                let n = self.rng.gen_range(0..=4);
                let items = (0..n)
                    .map(|_| match self.rng.gen_range(0..8) {
                        0 => Slot::Absent,
                        1 => Slot::node(self.spread(ctx)),
                        _ => Slot::node(self.assignment_level(Ctx { no_in: false, ..ctx })),
                    })
                    .collect();
                node(NodeKind::ArrayExpression, vec![("elements", Slot::List(items))])
            }
            19 => self.object_expr(ctx),
            20 => {
                let generator = self.chance(0.2);
                let is_async = self.chance(0.2);
                let (params, body) = self.function_parts(ctx, generator, is_async, FnKind::Plain);
                let id = if self.chance(0.3) { Some(self.binding_name()) } else { None };
                function_node(NodeKind::FunctionExpression, id, params, body, generator, is_async)
            }
            21 => {
                let is_async = self.chance(0.2);
                let (params, body) = self.function_parts(ctx, false, is_async, FnKind::Arrow);
                let inner = Self::fn_ctx(ctx, false, is_async, FnKind::Arrow);
                let body = if self.chance(0.5) { body } else { self.assignment_level(inner) };
                node(
                    NodeKind::ArrowFunctionExpression,
                    vec![("params", list(params)), ("body", boxed(body)), ("async", flag(is_async))],
                )
            }
            22 => {
                let (superclass, body) = self.class_parts(ctx);
                let id = if self.chance(0.3) { Slot::node(self.binding_name()) } else { Slot::Absent };
                node(NodeKind::ClassExpression, vec![("id", id), ("superClass", superclass), ("body", boxed(body))])
            }
            23 => self.template(ctx),
            24 => {
                let tag = self.name();
                let quasi = self.template(ctx);
                node(NodeKind::TaggedTemplateExpression, vec![("tag", boxed(tag)), ("quasi", boxed(quasi))])
            }
            25 if ctx.generator => {
                let delegate = self.chance(0.2);
                let arg = if delegate || self.chance(0.6) { Slot::node(self.assignment_level(ctx)) } else { Slot::Absent };
                node(NodeKind::YieldExpression, vec![("argument", arg), ("delegate", flag(delegate))])
            }
            26 if ctx.is_async => {
                node(NodeKind::AwaitExpression, vec![("argument", boxed(self.expression(ctx)))])
            }
            27 if ctx.method => {
                let prop = build::ident(self.pick(PROP_NAMES));
                build::member(build::leaf(NodeKind::Super), prop, false)
            }
            28 if ctx.function => node(
                NodeKind::MetaProperty,
                vec![("meta", boxed(build::ident("new"))), ("property", boxed(build::ident("target")))],
            ),
            28 => build::regex(self.pick(&["a+", "[0-9]*", "x|y", "\\/"]), self.pick(&["", "g", "gi"])),
            _ => self.simple_expr(ctx),
        }
    }

    fn target(&mut self, ctx: Ctx) -> AstNode {
        if self.chance(0.6) || self.exhausted() {
            self.name()
        } else {
            let computed = self.chance(0.4);
            let prop = if computed { self.simple_expr(ctx) } else { build::ident(self.pick(PROP_NAMES)) };
            build::member(self.name(), prop, computed)
        }
    }

    fn spread(&mut self, ctx: Ctx) -> AstNode {
        node(NodeKind::SpreadElement, vec![("argument", boxed(self.assignment_level(Ctx { no_in: false, ..ctx })))])
    }

    fn arguments(&mut self, ctx: Ctx) -> Vec<AstNode> {
        let n = self.rng.gen_range(0..=3);
        (0..n)
            .map(|_| if self.chance(0.1) { self.spread(ctx) } else { self.assignment_level(Ctx { no_in: false, ..ctx }) })
            .collect()
    }

    fn call_expr(&mut self, ctx: Ctx) -> AstNode {
        let callee = if self.chance(0.5) || self.exhausted() { self.name() } else { self.expression(ctx) };
        let args = self.arguments(ctx);
        build::call(callee, args)
    }

    fn object_expr(&mut self, ctx: Ctx) -> AstNode {
        let inner = Ctx { no_in: false, ..ctx };
        let n = self.rng.gen_range(0..=3);
        let props = (0..n)
            .map(|_| match self.rng.gen_range(0..8) {
                0 => self.spread(inner),
                1 => {
                    let id = self.binding_name();
                    property(id.clone(), id, "init", false, true, false)
                }
                2 | 3 => {
                    let kind = self.pick(&["init", "get", "set"]);
                    let generator = kind == "init" && self.chance(0.2);
                    let is_async = kind == "init" && self.chance(0.2);
                    let (mut params, body) =
                        self.function_parts(inner, generator, is_async, FnKind::Method);
                    fix_accessor_params(kind, &mut params, || build::ident("v"));
                    let (key, computed) = self.prop_key(inner);
                    let f = function_node(NodeKind::FunctionExpression, None, params, body, generator, is_async);
                    property(key, f, kind, kind == "init", false, computed)
                }
                _ => {
                    let (key, computed) = self.prop_key(inner);
                    let value = self.assignment_level(inner);
                    property(key, value, "init", false, false, computed)
                }
            })
            .collect();
        node(NodeKind::ObjectExpression, vec![("properties", list(props))])
    }

    fn prop_key(&mut self, ctx: Ctx) -> (AstNode, bool) {
        match self.rng.gen_range(0..6) {
            0 => (self.string_literal(), false),
            1 => (build::num(self.rng.gen_range(0..100) as f64), false),
            2 => (self.assignment_level(ctx), true),
            _ => (build::ident(self.pick(PROP_NAMES)), false),
        }
    }
}

fn fix_accessor_params(kind: &str, params: &mut Vec<AstNode>, fresh: impl Fn() -> AstNode) {
    match kind {
        "get" => params.clear(),
        "set" => {
            params.retain(|p| p.kind != NodeKind::RestElement);
            params.truncate(1);
            if params.is_empty() {
                params.push(fresh());
            }
        }
        _ => {}
    }
}

fn function_node(
    kind: NodeKind,
    id: Option<AstNode>,
    params: Vec<AstNode>,
    body: AstNode,
    generator: bool,
    is_async: bool,
) -> AstNode {
    node(
        kind,
        vec![
            ("id", id.map_or(Slot::Absent, Slot::node)),
            ("params", list(params)),
            ("body", boxed(body)),
            ("generator", flag(generator)),
            ("async", flag(is_async)),
        ],
    )
}

fn property(key: AstNode, value: AstNode, kind: &str, method: bool, shorthand: bool, computed: bool) -> AstNode {
    node(
        NodeKind::Property,
        vec![
            ("key", boxed(key)),
            ("value", boxed(value)),
            ("kind", text(kind)),
            ("method", flag(method)),
            ("shorthand", flag(shorthand)),
            ("computed", flag(computed)),
        ],
    )
}

/// Random program with about `budget` nodes.
pub fn random_program(seed: u64, budget: usize) -> AstNode {
    ProgramGen::seeded(seed, budget).program()
}

/// Proptest strategy over random programs. Shrinking goes through the seed
/// and the budget.
pub fn program_strategy(max_budget: usize) -> BoxedStrategy<AstNode> {
    (proptest::num::u64::ANY, 1..=max_budget).prop_map(|(seed, budget)| random_program(seed, budget)).boxed()
}

/// Tree with every `raw` slot of literals and template elements cleared,
/// for comparisons that ignore source spelling.
pub fn strip_raw(ast: &AstNode) -> AstNode {
    let mut out = ast.clone();
    strip_raw_in(&mut out);
    out
}

fn strip_raw_in(n: &mut AstNode) {
    if n.kind == NodeKind::Literal {
        if let Some(slot) = n.slot_mut("raw") {
            *slot = Slot::Value(Value::Null);
        }
    }
    for slot in &mut n.slots {
        match slot {
            Slot::Node(c) => strip_raw_in(c),
            Slot::List(items) => {
                for item in items {
                    if let Slot::Node(c) = item {
                        strip_raw_in(c);
                    }
                }
            }
            _ => {}
        }
    }
}
