//! A small C AST, just rich enough for the two encodings.
//!
//! Keeping the program as an AST until the last moment lets tests make
//! structural assertions (guard shapes, nondet budgets, error call sites)
//! without diffing text. Printing is deterministic and fully parenthesized.

use std::fmt::Write;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CExpr {
    /// Signed decimal constant.
    Int(i128),
    /// Unsigned constant, printed in hex; `ull` adds the ULL suffix.
    Hex { value: u64, ull: bool },
    /// Decimal constant too large for the carrier; printed verbatim.
    Big(String),
    Var(String),
    Call(String, Vec<CExpr>),
    Unary(&'static str, Box<CExpr>),
    Binary(&'static str, Box<CExpr>, Box<CExpr>),
    Ternary(Box<CExpr>, Box<CExpr>, Box<CExpr>),
    Cast(String, Box<CExpr>),
}

impl CExpr {
    pub fn var(name: impl Into<String>) -> CExpr {
        CExpr::Var(name.into())
    }

    pub fn bin(op: &'static str, a: CExpr, b: CExpr) -> CExpr {
        CExpr::Binary(op, Box::new(a), Box::new(b))
    }

    pub fn call(name: impl Into<String>, args: Vec<CExpr>) -> CExpr {
        CExpr::Call(name.into(), args)
    }

    /// Left-associated `&&` over a non-empty list.
    pub fn and_all(mut parts: Vec<CExpr>) -> CExpr {
        assert!(!parts.is_empty());
        let mut acc = parts.remove(0);
        for p in parts {
            acc = CExpr::bin("&&", acc, p);
        }
        acc
    }

    fn print(&self, out: &mut String) {
        match self {
            CExpr::Int(v) => {
                let _ = write!(out, "{v}");
            }
            CExpr::Hex { value, ull } => {
                let _ = write!(out, "{:#x}{}", value, if *ull { "ULL" } else { "" });
            }
            CExpr::Big(text) => out.push_str(text),
            CExpr::Var(name) => out.push_str(name),
            CExpr::Call(name, args) => {
                out.push_str(name);
                out.push('(');
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        out.push_str(", ");
                    }
                    a.print(out);
                }
                out.push(')');
            }
            CExpr::Unary(op, a) => {
                out.push('(');
                out.push_str(op);
                a.print(out);
                out.push(')');
            }
            CExpr::Binary(op, a, b) => {
                out.push('(');
                a.print(out);
                let _ = write!(out, " {op} ");
                b.print(out);
                out.push(')');
            }
            CExpr::Ternary(c, t, e) => {
                out.push('(');
                c.print(out);
                out.push_str(" ? ");
                t.print(out);
                out.push_str(" : ");
                e.print(out);
                out.push(')');
            }
            CExpr::Cast(ty, a) => {
                let _ = write!(out, "(({ty})");
                a.print(out);
                out.push(')');
            }
        }
    }

    pub fn to_c(&self) -> String {
        let mut s = String::new();
        self.print(&mut s);
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CStmt {
    Decl {
        ty: String,
        name: String,
        init: Option<CExpr>,
    },
    Assign(String, CExpr),
    If {
        cond: CExpr,
        then: Vec<CStmt>,
        els: Vec<CStmt>,
    },
    While {
        cond: CExpr,
        body: Vec<CStmt>,
    },
    Expr(CExpr),
    Return(CExpr),
    Goto(String),
    Label(String),
    Block(Vec<CStmt>),
}

impl CStmt {
    fn print(&self, out: &mut String, indent: usize) {
        let pad = "    ".repeat(indent);
        match self {
            CStmt::Decl { ty, name, init } => {
                let _ = write!(out, "{pad}{ty} {name}");
                if let Some(e) = init {
                    let _ = write!(out, " = {}", e.to_c());
                }
                out.push_str(";\n");
            }
            CStmt::Assign(name, e) => {
                let _ = writeln!(out, "{pad}{name} = {};", e.to_c());
            }
            CStmt::If { cond, then, els } => {
                let _ = writeln!(out, "{pad}if ({}) {{", cond.to_c());
                for s in then {
                    s.print(out, indent + 1);
                }
                if els.is_empty() {
                    let _ = writeln!(out, "{pad}}}");
                } else if let [CStmt::If { .. }] = els.as_slice() {
                    let _ = write!(out, "{pad}}} else ");
                    // else-if chain: splice without extra braces
                    let mut nested = String::new();
                    els[0].print(&mut nested, indent);
                    out.push_str(nested.trim_start());
                } else {
                    let _ = writeln!(out, "{pad}}} else {{");
                    for s in els {
                        s.print(out, indent + 1);
                    }
                    let _ = writeln!(out, "{pad}}}");
                }
            }
            CStmt::While { cond, body } => {
                let _ = writeln!(out, "{pad}while ({}) {{", cond.to_c());
                for s in body {
                    s.print(out, indent + 1);
                }
                let _ = writeln!(out, "{pad}}}");
            }
            CStmt::Expr(e) => {
                let _ = writeln!(out, "{pad}{};", e.to_c());
            }
            CStmt::Return(e) => {
                let _ = writeln!(out, "{pad}return {};", e.to_c());
            }
            CStmt::Goto(l) => {
                let _ = writeln!(out, "{pad}goto {l};");
            }
            CStmt::Label(l) => {
                let _ = writeln!(out, "{l}:;");
            }
            CStmt::Block(body) => {
                let _ = writeln!(out, "{pad}{{");
                for s in body {
                    s.print(out, indent + 1);
                }
                let _ = writeln!(out, "{pad}}}");
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CFunction {
    pub ret: String,
    pub name: String,
    pub params: Vec<(String, String)>,
    pub body: Vec<CStmt>,
}

impl CFunction {
    fn signature(&self) -> String {
        let params = if self.params.is_empty() {
            "void".to_string()
        } else {
            self.params
                .iter()
                .map(|(ty, n)| format!("{ty} {n}"))
                .collect::<Vec<_>>()
                .join(", ")
        };
        format!("{} {}({})", self.ret, self.name, params)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CUnit {
    pub header_comment: Vec<String>,
    pub externs: Vec<String>,
    pub functions: Vec<CFunction>,
}

impl CUnit {
    pub fn to_c(&self) -> String {
        let mut out = String::new();
        for line in &self.header_comment {
            let _ = writeln!(out, "/* {line} */");
        }
        if !self.header_comment.is_empty() {
            out.push('\n');
        }
        for e in &self.externs {
            let _ = writeln!(out, "extern {e};");
        }
        if !self.externs.is_empty() {
            out.push('\n');
        }
        if self.functions.len() > 1 {
            for f in &self.functions {
                let _ = writeln!(out, "{};", f.signature());
            }
            out.push('\n');
        }
        for (i, f) in self.functions.iter().enumerate() {
            if i > 0 {
                out.push('\n');
            }
            let _ = writeln!(out, "{} {{", f.signature());
            for s in &f.body {
                s.print(&mut out, 1);
            }
            let _ = writeln!(out, "}}");
        }
        out
    }

    /// Number of syntactic occurrences of the error location in the unit.
    pub fn error_site_count(&self, error_symbol: &str) -> usize {
        fn expr_count(e: &CExpr, sym: &str) -> usize {
            match e {
                CExpr::Call(name, args) => {
                    let own = usize::from(name == sym);
                    own + args.iter().map(|a| expr_count(a, sym)).sum::<usize>()
                }
                CExpr::Unary(_, a) | CExpr::Cast(_, a) => expr_count(a, sym),
                CExpr::Binary(_, a, b) => expr_count(a, sym) + expr_count(b, sym),
                CExpr::Ternary(a, b, c) => {
                    expr_count(a, sym) + expr_count(b, sym) + expr_count(c, sym)
                }
                _ => 0,
            }
        }
        fn stmt_count(s: &CStmt, sym: &str) -> usize {
            match s {
                CStmt::Decl { init: Some(e), .. }
                | CStmt::Assign(_, e)
                | CStmt::Expr(e)
                | CStmt::Return(e) => expr_count(e, sym),
                CStmt::Decl { init: None, .. } | CStmt::Goto(_) | CStmt::Label(_) => 0,
                CStmt::If { cond, then, els } => {
                    expr_count(cond, sym)
                        + then.iter().map(|s| stmt_count(s, sym)).sum::<usize>()
                        + els.iter().map(|s| stmt_count(s, sym)).sum::<usize>()
                }
                CStmt::While { cond, body } => {
                    expr_count(cond, sym)
                        + body.iter().map(|s| stmt_count(s, sym)).sum::<usize>()
                }
                CStmt::Block(body) => body.iter().map(|s| stmt_count(s, sym)).sum(),
            }
        }
        self.functions
            .iter()
            .flat_map(|f| &f.body)
            .map(|s| stmt_count(s, error_symbol))
            .sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prints_else_if_chains_flat() {
        let f = CFunction {
            ret: "int".into(),
            name: "main".into(),
            params: vec![],
            body: vec![CStmt::If {
                cond: CExpr::bin("==", CExpr::var("x"), CExpr::Int(0)),
                then: vec![CStmt::Return(CExpr::Int(1))],
                els: vec![CStmt::If {
                    cond: CExpr::bin("==", CExpr::var("x"), CExpr::Int(1)),
                    then: vec![CStmt::Return(CExpr::Int(2))],
                    els: vec![],
                }],
            }],
        };
        let unit = CUnit {
            header_comment: vec![],
            externs: vec![],
            functions: vec![f],
        };
        let text = unit.to_c();
        assert!(text.contains("} else if ((x == 1)) {"), "{text}");
    }

    #[test]
    fn counts_error_sites() {
        let unit = CUnit {
            header_comment: vec![],
            externs: vec![],
            functions: vec![CFunction {
                ret: "int".into(),
                name: "main".into(),
                params: vec![],
                body: vec![
                    CStmt::Expr(CExpr::call("reach_error", vec![])),
                    CStmt::Return(CExpr::Int(0)),
                ],
            }],
        };
        assert_eq!(unit.error_site_count("reach_error"), 1);
    }
}
