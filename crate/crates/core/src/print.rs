//! Source printer for stub-free trees.
//!
//! Output style is fixed: two-space indentation, every statement that takes
//! a semicolon gets one, and binary operands of equal precedence are always
//! parenthesized so the printed text reparses to the same tree.

use alloc::string::{String, ToString};
use core::fmt::Write;

use crate::ast::{AstNode, NodeKind, Slot, Value};
use crate::error::Error;

/// Prints a `Program` as executable source text.
pub fn print_program(ast: &AstNode) -> Result<String, Error> {
    if ast.kind != NodeKind::Program {
        return Err(Error::MalformedAst(alloc::format!("expected Program, found {}", ast.kind)));
    }
    if ast.has_stub() {
        return Err(Error::IncompleteAst);
    }
    let mut p = Printer { out: String::new(), indent: 0 };
    for (i, stmt) in list(ast, "body").enumerate() {
        if i > 0 {
            p.out.push('\n');
        }
        if let Some(stmt) = stmt {
            p.stmt(stmt);
        }
    }
    Ok(p.out)
}

mod prec {
    pub const SEQUENCE: u8 = 0;
    pub const ASSIGN: u8 = 1;
    pub const CONDITIONAL: u8 = 2;
    pub const NULLISH: u8 = 3;
    pub const UNARY: u8 = 15;
    pub const UPDATE: u8 = 16;
    pub const CALL: u8 = 18;
    pub const MEMBER: u8 = 19;
    pub const PRIMARY: u8 = 20;
}

fn binary_prec(op: &str) -> u8 {
    match op {
        "??" => prec::NULLISH,
        "||" => 4,
        "&&" => 5,
        "|" => 6,
        "^" => 7,
        "&" => 8,
        "==" | "!=" | "===" | "!==" => 9,
        "<" | ">" | "<=" | ">=" | "in" | "instanceof" => 10,
        "<<" | ">>" | ">>>" => 11,
        "+" | "-" => 12,
        "*" | "/" | "%" => 13,
        "**" => 14,
        _ => 4,
    }
}

fn expr_prec(n: &AstNode) -> u8 {
    use NodeKind::*;
    match n.kind {
        SequenceExpression => prec::SEQUENCE,
        AssignmentExpression | YieldExpression | ArrowFunctionExpression => prec::ASSIGN,
        ConditionalExpression => prec::CONDITIONAL,
        BinaryExpression | LogicalExpression => binary_prec(n.str_value("operator").unwrap_or("")),
        UnaryExpression | AwaitExpression => prec::UNARY,
        UpdateExpression => prec::UPDATE,
        CallExpression | TaggedTemplateExpression => prec::CALL,
        MemberExpression | NewExpression => prec::MEMBER,
        _ => prec::PRIMARY,
    }
}

fn list<'a>(n: &'a AstNode, name: &str) -> impl Iterator<Item = Option<&'a AstNode>> {
    n.slot(name)
        .and_then(Slot::as_list)
        .unwrap_or(&[])
        .iter()
        .map(Slot::as_node)
}

fn is_ident_char(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '$'
}

fn starts_with_word(s: &str, word: &str) -> bool {
    s.strip_prefix(word)
        .is_some_and(|rest| !rest.chars().next().is_some_and(is_ident_char))
}

/// Text that would be misread at the start of an expression statement.
fn needs_statement_parens(s: &str) -> bool {
    s.starts_with('{')
        || starts_with_word(s, "function")
        || starts_with_word(s, "class")
        || s.starts_with("let [")
        || s.starts_with("async function")
}

/// Double-quoted string literal text for `s`.
pub fn escape_string(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            '\u{2028}' => out.push_str("\\u2028"),
            '\u{2029}' => out.push_str("\\u2029"),
            c if (c as u32) < 0x20 => {
                let _ = write!(out, "\\x{:02x}", c as u32);
            }
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

fn escape_template(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    let mut chars = s.chars().peekable();
    while let Some(c) = chars.next() {
        match c {
            '`' => out.push_str("\\`"),
            '\\' => out.push_str("\\\\"),
            '$' if chars.peek() == Some(&'{') => out.push_str("\\$"),
            c => out.push(c),
        }
    }
    out
}

fn number_text(n: f64) -> String {
    if n.is_nan() {
        "NaN".into()
    } else if n.is_infinite() {
        if n > 0.0 { "Infinity".into() } else { "(-Infinity)".into() }
    } else if n < 0.0 || (n == 0.0 && n.is_sign_negative()) {
        alloc::format!("(-{})", -n)
    } else {
        n.to_string()
    }
}

fn literal_text(n: &AstNode) -> String {
    if let Some(Value::Str(raw)) = n.value("raw") {
        return raw.clone();
    }
    match n.value("value") {
        Some(Value::Null) | None => "null".into(),
        Some(Value::Bool(b)) => b.to_string(),
        Some(Value::Num(x)) => number_text(*x),
        Some(Value::Str(s)) => escape_string(s),
        Some(Value::Regex { pattern, flags }) => alloc::format!("/{pattern}/{flags}"),
    }
}

/// True if `stmt` ends in an `if` without `else`, which would capture a
/// following `else`.
fn ends_with_open_if(stmt: &AstNode) -> bool {
    use NodeKind::*;
    match stmt.kind {
        IfStatement => match stmt.child("alternate") {
            None => true,
            Some(alt) => ends_with_open_if(alt),
        },
        ForStatement | ForInStatement | ForOfStatement | WhileStatement | LabeledStatement => {
            stmt.child("body").is_some_and(ends_with_open_if)
        }
        _ => false,
    }
}

fn contains_in_operator(n: &AstNode) -> bool {
    (n.kind == NodeKind::BinaryExpression && n.str_value("operator") == Some("in"))
        || n.children().any(contains_in_operator)
}

struct Printer {
    out: String,
    indent: usize,
}

impl Printer {
    fn newline(&mut self) {
        self.out.push('\n');
        for _ in 0..self.indent {
            self.out.push_str("  ");
        }
    }

    fn sub<F: FnOnce(&mut Printer)>(&self, f: F) -> String {
        let mut p = Printer { out: String::new(), indent: self.indent };
        f(&mut p);
        p.out
    }

    fn block(&mut self, n: &AstNode) {
        self.statements_in_braces(list(n, "body").flatten());
    }

    fn statements_in_braces<'a>(&mut self, body: impl Iterator<Item = &'a AstNode>) {
        self.out.push('{');
        self.indent += 1;
        let mut any = false;
        for stmt in body {
            any = true;
            self.newline();
            self.stmt(stmt);
        }
        self.indent -= 1;
        if any {
            self.newline();
        }
        self.out.push('}');
    }

    fn stmt(&mut self, n: &AstNode) {
        use NodeKind::*;
        match n.kind {
            EmptyStatement => self.out.push(';'),
            DebuggerStatement => self.out.push_str("debugger;"),
            ExpressionStatement => {
                let e = n.child("expression").expect("validated");
                let text = self.sub(|p| p.expr(e, prec::SEQUENCE));
                if needs_statement_parens(&text) {
                    self.out.push('(');
                    self.out.push_str(&text);
                    self.out.push(')');
                } else {
                    self.out.push_str(&text);
                }
                self.out.push(';');
            }
            BlockStatement => self.block(n),
            VariableDeclaration => {
                self.var_decl(n, false);
                self.out.push(';');
            }
            FunctionDeclaration => self.function(n),
            ClassDeclaration => self.class(n),
            ReturnStatement => self.keyword_arg("return", n.child("argument")),
            ThrowStatement => self.keyword_arg("throw", n.child("argument")),
            BreakStatement => self.keyword_label("break", n),
            ContinueStatement => self.keyword_label("continue", n),
            IfStatement => {
                self.out.push_str("if (");
                self.expr(n.child("test").expect("validated"), prec::SEQUENCE);
                self.out.push_str(") ");
                let cons = n.child("consequent").expect("validated");
                match n.child("alternate") {
                    Some(alt) => {
                        if cons.kind != BlockStatement && ends_with_open_if(cons) {
                            self.statements_in_braces(core::iter::once(cons));
                        } else {
                            self.stmt(cons);
                        }
                        self.out.push_str(" else ");
                        self.stmt(alt);
                    }
                    None => self.stmt(cons),
                }
            }
            ForStatement => {
                self.out.push_str("for (");
                if let Some(init) = n.child("init") {
                    if init.kind == VariableDeclaration {
                        self.var_decl(init, true);
                    } else if contains_in_operator(init) {
                        self.out.push('(');
                        self.expr(init, prec::SEQUENCE);
                        self.out.push(')');
                    } else {
                        self.expr(init, prec::SEQUENCE);
                    }
                }
                self.out.push(';');
                if let Some(test) = n.child("test") {
                    self.out.push(' ');
                    self.expr(test, prec::SEQUENCE);
                }
                self.out.push(';');
                if let Some(update) = n.child("update") {
                    self.out.push(' ');
                    self.expr(update, prec::SEQUENCE);
                }
                self.out.push_str(") ");
                self.stmt(n.child("body").expect("validated"));
            }
            ForInStatement | ForOfStatement => {
                self.out.push_str("for ");
                if n.bool_value("await") {
                    self.out.push_str("await ");
                }
                self.out.push('(');
                let left = n.child("left").expect("validated");
                if left.kind == VariableDeclaration {
                    self.var_decl(left, false);
                } else {
                    self.expr(left, prec::CALL);
                }
                if n.kind == ForInStatement {
                    self.out.push_str(" in ");
                    self.expr(n.child("right").expect("validated"), prec::SEQUENCE);
                } else {
                    self.out.push_str(" of ");
                    self.expr(n.child("right").expect("validated"), prec::ASSIGN);
                }
                self.out.push_str(") ");
                self.stmt(n.child("body").expect("validated"));
            }
            WhileStatement => {
                self.out.push_str("while (");
                self.expr(n.child("test").expect("validated"), prec::SEQUENCE);
                self.out.push_str(") ");
                self.stmt(n.child("body").expect("validated"));
            }
            DoWhileStatement => {
                self.out.push_str("do ");
                self.stmt(n.child("body").expect("validated"));
                self.out.push_str(" while (");
                self.expr(n.child("test").expect("validated"), prec::SEQUENCE);
                self.out.push_str(");");
            }
            SwitchStatement => {
                self.out.push_str("switch (");
                self.expr(n.child("discriminant").expect("validated"), prec::SEQUENCE);
                self.out.push_str(") {");
                self.indent += 1;
                let mut any = false;
                for case in list(n, "cases").flatten() {
                    any = true;
                    self.newline();
                    match case.child("test") {
                        Some(test) => {
                            self.out.push_str("case ");
                            self.expr(test, prec::SEQUENCE);
                            self.out.push(':');
                        }
                        None => self.out.push_str("default:"),
                    }
                    self.indent += 1;
                    for s in list(case, "consequent").flatten() {
                        self.newline();
                        self.stmt(s);
                    }
                    self.indent -= 1;
                }
                self.indent -= 1;
                if any {
                    self.newline();
                }
                self.out.push('}');
            }
            LabeledStatement => {
                self.expr(n.child("label").expect("validated"), prec::PRIMARY);
                self.out.push_str(": ");
                self.stmt(n.child("body").expect("validated"));
            }
            TryStatement => {
                self.out.push_str("try ");
                self.block(n.child("block").expect("validated"));
                if let Some(handler) = n.child("handler") {
                    self.out.push_str(" catch ");
                    if let Some(param) = handler.child("param") {
                        self.out.push('(');
                        self.expr(param, prec::ASSIGN);
                        self.out.push_str(") ");
                    }
                    self.block(handler.child("body").expect("validated"));
                }
                if let Some(fin) = n.child("finalizer") {
                    self.out.push_str(" finally ");
                    self.block(fin);
                }
            }
            // Expression kinds in statement position only arise from
            // hand-built trees; print them as expression statements.
            _ => {
                self.expr(n, prec::SEQUENCE);
                self.out.push(';');
            }
        }
    }

    fn keyword_arg(&mut self, kw: &str, arg: Option<&AstNode>) {
        self.out.push_str(kw);
        if let Some(arg) = arg {
            self.out.push(' ');
            self.expr(arg, prec::SEQUENCE);
        }
        self.out.push(';');
    }

    fn keyword_label(&mut self, kw: &str, n: &AstNode) {
        self.out.push_str(kw);
        if let Some(label) = n.child("label") {
            self.out.push(' ');
            self.expr(label, prec::PRIMARY);
        }
        self.out.push(';');
    }

    fn var_decl(&mut self, n: &AstNode, in_for_init: bool) {
        self.out.push_str(n.str_value("kind").unwrap_or("var"));
        self.out.push(' ');
        for (i, d) in list(n, "declarations").flatten().enumerate() {
            if i > 0 {
                self.out.push_str(", ");
            }
            self.expr(d.child("id").expect("validated"), prec::ASSIGN);
            if let Some(init) = d.child("init") {
                self.out.push_str(" = ");
                if in_for_init && contains_in_operator(init) {
                    self.out.push('(');
                    self.expr(init, prec::SEQUENCE);
                    self.out.push(')');
                } else {
                    self.expr(init, prec::ASSIGN);
                }
            }
        }
    }

    fn params(&mut self, n: &AstNode) {
        self.out.push('(');
        for (i, p) in list(n, "params").flatten().enumerate() {
            if i > 0 {
                self.out.push_str(", ");
            }
            self.expr(p, prec::ASSIGN);
        }
        self.out.push(')');
    }

    fn function(&mut self, n: &AstNode) {
        if n.bool_value("async") {
            self.out.push_str("async ");
        }
        self.out.push_str("function");
        if n.bool_value("generator") {
            self.out.push('*');
        }
        self.out.push(' ');
        if let Some(id) = n.child("id") {
            self.expr(id, prec::PRIMARY);
        }
        self.params(n);
        self.out.push(' ');
        self.block(n.child("body").expect("validated"));
    }

    fn class(&mut self, n: &AstNode) {
        self.out.push_str("class");
        if let Some(id) = n.child("id") {
            self.out.push(' ');
            self.expr(id, prec::PRIMARY);
        }
        if let Some(sup) = n.child("superClass") {
            self.out.push_str(" extends ");
            self.expr(sup, prec::CALL);
        }
        self.out.push(' ');
        let body = n.child("body").expect("validated");
        self.out.push('{');
        self.indent += 1;
        let mut any = false;
        for m in list(body, "body").flatten() {
            any = true;
            self.newline();
            self.method(m);
        }
        self.indent -= 1;
        if any {
            self.newline();
        }
        self.out.push('}');
    }

    fn method(&mut self, m: &AstNode) {
        if m.bool_value("static") {
            self.out.push_str("static ");
        }
        let kind = m.str_value("kind").unwrap_or("method");
        let func = m.child("value").expect("validated");
        self.method_like(kind, m.child("key").expect("validated"), m.bool_value("computed"), func);
    }

    fn method_like(&mut self, kind: &str, key: &AstNode, computed: bool, func: &AstNode) {
        if func.bool_value("async") {
            self.out.push_str("async ");
        }
        if func.bool_value("generator") {
            self.out.push('*');
        }
        if kind == "get" || kind == "set" {
            self.out.push_str(kind);
            self.out.push(' ');
        }
        self.property_key(key, computed);
        self.params(func);
        self.out.push(' ');
        self.block(func.child("body").expect("validated"));
    }

    fn property_key(&mut self, key: &AstNode, computed: bool) {
        if computed {
            self.out.push('[');
            self.expr(key, prec::ASSIGN);
            self.out.push(']');
        } else {
            self.expr(key, prec::PRIMARY);
        }
    }

    fn property(&mut self, p: &AstNode) {
        if p.kind != NodeKind::Property {
            // RestElement / SpreadElement inside object literals and patterns.
            self.expr(p, prec::ASSIGN);
            return;
        }
        let key = p.child("key").expect("validated");
        let value = p.child("value").expect("validated");
        let computed = p.bool_value("computed");
        let kind = p.str_value("kind").unwrap_or("init");
        if kind == "get" || kind == "set" || p.bool_value("method") {
            self.method_like(kind, key, computed, value);
            return;
        }
        if p.bool_value("shorthand") && !computed {
            let short_name = match value.kind {
                NodeKind::Identifier => value.ident_name(),
                NodeKind::AssignmentPattern => value.child("left").and_then(AstNode::ident_name),
                _ => None,
            };
            if short_name.is_some() && short_name == key.ident_name() {
                self.expr(value, prec::ASSIGN);
                return;
            }
        }
        self.property_key(key, computed);
        self.out.push_str(": ");
        self.expr(value, prec::ASSIGN);
    }

    fn elements(&mut self, n: &AstNode) {
        self.out.push('[');
        let items: alloc::vec::Vec<_> = list(n, "elements").collect();
        for (i, item) in items.iter().enumerate() {
            if i > 0 {
                self.out.push_str(", ");
            }
            if let Some(e) = item {
                self.expr(e, prec::ASSIGN);
            }
        }
        if matches!(items.last(), Some(None)) {
            self.out.push(',');
        }
        self.out.push(']');
    }

    fn args(&mut self, n: &AstNode) {
        self.out.push('(');
        for (i, a) in list(n, "arguments").flatten().enumerate() {
            if i > 0 {
                self.out.push_str(", ");
            }
            self.expr(a, prec::ASSIGN);
        }
        self.out.push(')');
    }

    fn template(&mut self, n: &AstNode) {
        self.out.push('`');
        let exprs: alloc::vec::Vec<_> = list(n, "expressions").flatten().collect();
        for (i, q) in list(n, "quasis").flatten().enumerate() {
            match q.value("raw") {
                Some(Value::Str(raw)) => self.out.push_str(raw),
                _ => {
                    let cooked = q.str_value("cooked").unwrap_or("");
                    self.out.push_str(&escape_template(cooked));
                }
            }
            if let Some(e) = exprs.get(i) {
                self.out.push_str("${");
                self.expr(e, prec::SEQUENCE);
                self.out.push('}');
            }
        }
        self.out.push('`');
    }

    fn expr(&mut self, n: &AstNode, min: u8) {
        if expr_prec(n) < min {
            self.out.push('(');
            self.expr_inner(n);
            self.out.push(')');
        } else {
            self.expr_inner(n);
        }
    }

    fn binary_operand(&mut self, n: &AstNode, op: &str, min: u8) {
        let mixes_nullish = n.kind == NodeKind::LogicalExpression && {
            let inner = n.str_value("operator").unwrap_or("");
            (op == "??") != (inner == "??")
        };
        if mixes_nullish {
            self.out.push('(');
            self.expr_inner(n);
            self.out.push(')');
        } else {
            self.expr(n, min);
        }
    }

    fn expr_inner(&mut self, n: &AstNode) {
        use NodeKind::*;
        match n.kind {
            Identifier => self.out.push_str(n.ident_name().unwrap_or("")),
            Literal => self.out.push_str(&literal_text(n)),
            ThisExpression => self.out.push_str("this"),
            Super => self.out.push_str("super"),
            ArrayExpression | ArrayPattern => self.elements(n),
            ObjectExpression | ObjectPattern => {
                let props: alloc::vec::Vec<_> = list(n, "properties").flatten().collect();
                if props.is_empty() {
                    self.out.push_str("{}");
                    return;
                }
                self.out.push_str("{ ");
                for (i, p) in props.into_iter().enumerate() {
                    if i > 0 {
                        self.out.push_str(", ");
                    }
                    self.property(p);
                }
                self.out.push_str(" }");
            }
            // Some parsers take a `/` after an async function expression
            // for the start of a regex.
            FunctionExpression if n.bool_value("async") => {
                self.out.push('(');
                self.function(n);
                self.out.push(')');
            }
            FunctionExpression => self.function(n),
            ClassExpression => self.class(n),
            ArrowFunctionExpression => {
                if n.bool_value("async") {
                    self.out.push_str("async ");
                }
                self.params(n);
                self.out.push_str(" => ");
                let body = n.child("body").expect("validated");
                if body.kind == BlockStatement {
                    self.block(body);
                } else {
                    let text = self.sub(|p| p.expr(body, prec::ASSIGN));
                    if text.starts_with('{') {
                        self.out.push('(');
                        self.out.push_str(&text);
                        self.out.push(')');
                    } else {
                        self.out.push_str(&text);
                    }
                }
            }
            SequenceExpression => {
                for (i, e) in list(n, "expressions").flatten().enumerate() {
                    if i > 0 {
                        self.out.push_str(", ");
                    }
                    self.expr(e, prec::ASSIGN);
                }
            }
            AssignmentExpression => {
                self.expr(n.child("left").expect("validated"), prec::CALL);
                self.out.push(' ');
                self.out.push_str(n.str_value("operator").unwrap_or("="));
                self.out.push(' ');
                self.expr(n.child("right").expect("validated"), prec::ASSIGN);
            }
            AssignmentPattern => {
                self.expr(n.child("left").expect("validated"), prec::CALL);
                self.out.push_str(" = ");
                self.expr(n.child("right").expect("validated"), prec::ASSIGN);
            }
            ConditionalExpression => {
                self.expr(n.child("test").expect("validated"), prec::NULLISH);
                self.out.push_str(" ? ");
                self.expr(n.child("consequent").expect("validated"), prec::ASSIGN);
                self.out.push_str(" : ");
                self.expr(n.child("alternate").expect("validated"), prec::ASSIGN);
            }
            BinaryExpression | LogicalExpression => {
                let op = n.str_value("operator").unwrap_or("");
                let p = binary_prec(op);
                let left = n.child("left").expect("validated");
                if op == "**" && matches!(left.kind, UnaryExpression | AwaitExpression) {
                    self.out.push('(');
                    self.expr_inner(left);
                    self.out.push(')');
                } else {
                    self.binary_operand(left, op, p + 1);
                }
                self.out.push(' ');
                self.out.push_str(op);
                self.out.push(' ');
                self.binary_operand(n.child("right").expect("validated"), op, p + 1);
            }
            UnaryExpression => {
                let op = n.str_value("operator").unwrap_or("");
                self.out.push_str(op);
                let arg = n.child("argument").expect("validated");
                let text = self.sub(|p| p.expr(arg, prec::UNARY));
                let word = op.chars().next().is_some_and(char::is_alphabetic);
                let clash = (op == "-" || op == "+") && text.starts_with(op);
                if word || clash {
                    self.out.push(' ');
                }
                self.out.push_str(&text);
            }
            AwaitExpression => {
                self.out.push_str("await ");
                self.expr(n.child("argument").expect("validated"), prec::UNARY);
            }
            UpdateExpression => {
                let op = n.str_value("operator").unwrap_or("++");
                let arg = n.child("argument").expect("validated");
                if n.bool_value("prefix") {
                    self.out.push_str(op);
                    self.expr(arg, prec::CALL);
                } else {
                    self.expr(arg, prec::CALL);
                    self.out.push_str(op);
                }
            }
            YieldExpression => {
                self.out.push_str("yield");
                if n.bool_value("delegate") {
                    self.out.push('*');
                }
                if let Some(arg) = n.child("argument") {
                    self.out.push(' ');
                    self.expr(arg, prec::ASSIGN);
                }
            }
            CallExpression => {
                self.expr(n.child("callee").expect("validated"), prec::CALL);
                self.args(n);
            }
            NewExpression => {
                self.out.push_str("new ");
                let callee = n.child("callee").expect("validated");
                if callee_contains_call(callee) || expr_prec(callee) < prec::MEMBER {
                    self.out.push('(');
                    self.expr_inner(callee);
                    self.out.push(')');
                } else {
                    self.expr_inner(callee);
                }
                self.args(n);
            }
            MemberExpression => {
                let object = n.child("object").expect("validated");
                if object.kind == Literal && matches!(object.value("value"), Some(Value::Num(_))) {
                    self.out.push('(');
                    self.expr_inner(object);
                    self.out.push(')');
                } else {
                    self.expr(object, prec::CALL);
                }
                let property = n.child("property").expect("validated");
                if n.bool_value("computed") {
                    self.out.push('[');
                    self.expr(property, prec::SEQUENCE);
                    self.out.push(']');
                } else {
                    self.out.push('.');
                    self.expr_inner(property);
                }
            }
            TemplateLiteral => self.template(n),
            TaggedTemplateExpression => {
                self.expr(n.child("tag").expect("validated"), prec::CALL);
                self.template(n.child("quasi").expect("validated"));
            }
            SpreadElement | RestElement => {
                self.out.push_str("...");
                self.expr(n.child("argument").expect("validated"), prec::ASSIGN);
            }
            MetaProperty => {
                self.expr_inner(n.child("meta").expect("validated"));
                self.out.push('.');
                self.expr_inner(n.child("property").expect("validated"));
            }
            // Statement-only kinds reached through hand-built trees.
            _ => self.stmt(n),
        }
    }
}

/// `new f().x` would call `f` with `new`; such callees need parentheses.
fn callee_contains_call(n: &AstNode) -> bool {
    match n.kind {
        NodeKind::CallExpression => true,
        NodeKind::MemberExpression => n.child("object").is_some_and(callee_contains_call),
        NodeKind::TaggedTemplateExpression => n.child("tag").is_some_and(callee_contains_call),
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ast::build::*;
    use alloc::vec;

    fn print_expr(e: AstNode) -> String {
        let text = print_program(&program(vec![expr_stmt(e)])).unwrap();
        text.trim_end_matches(';').into()
    }

    #[test]
    fn empty_statement() {
        assert_eq!(print_program(&program(vec![leaf(NodeKind::EmptyStatement)])).unwrap(), ";");
    }

    #[test]
    fn precedence_parens() {
        let e = binary("*", binary("+", num(1.0), num(2.0)), num(3.0));
        assert_eq!(print_expr(e), "(1 + 2) * 3");
        let e = binary("+", num(1.0), binary("*", num(2.0), num(3.0)));
        assert_eq!(print_expr(e), "1 + 2 * 3");
        // equal precedence is always parenthesized
        let e = binary("-", binary("-", ident("a"), ident("b")), ident("c"));
        assert_eq!(print_expr(e), "(a - b) - c");
        let e = binary("-", ident("a"), binary("-", ident("b"), ident("c")));
        assert_eq!(print_expr(e), "a - (b - c)");
    }

    #[test]
    fn statement_start_hazards() {
        let e = call(function_expr(vec![], vec![]), vec![]);
        assert_eq!(print_expr(e), "(function () {}())");
        let e = member(object(), ident("x"), false);
        assert_eq!(print_expr(e), "({}.x)");
        let e = member(num(5.0), ident("x"), false);
        assert_eq!(print_expr(e), "(5).x");
    }

    #[test]
    fn unary_spacing() {
        let neg = |a| AstNode { kind: NodeKind::UnaryExpression, slots: vec![Slot::Value(Value::str("-")), Slot::node(a)] };
        assert_eq!(print_expr(neg(neg(ident("x")))), "- -x");
        let t = AstNode { kind: NodeKind::UnaryExpression, slots: vec![Slot::Value(Value::str("typeof")), Slot::node(ident("x"))] };
        assert_eq!(print_expr(t), "typeof x");
    }

    #[test]
    fn strings_without_raw_are_escaped() {
        assert_eq!(print_expr(string("a\"b\n")), "\"a\\\"b\\n\"");
        assert_eq!(print_expr(regex("a+", "g")), "/a+/g");
    }

    #[test]
    fn stubs_are_rejected() {
        let p = AstNode { kind: NodeKind::Program, slots: vec![Slot::List(vec![Slot::Stub(NodeKind::ExpressionStatement)])] };
        assert_eq!(print_program(&p), Err(Error::IncompleteAst));
    }

    #[test]
    fn var_and_blocks() {
        let p = program(vec![
            var_decl("var", "v0", Some(num(1.0))),
            block(vec![expr_stmt(call(ident("f0"), vec![ident("v0")]))]),
        ]);
        assert_eq!(print_program(&p).unwrap(), "var v0 = 1;\n{\n  f0(v0);\n}");
    }
}
