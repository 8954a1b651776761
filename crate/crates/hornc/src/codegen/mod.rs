//! Translation of normalized CHC systems into C reachability tasks.
//!
//! Two encodings are provided: a nonrecursive forward (bottom-up) encoding
//! that simulates fact derivation in a loop and only supports linear systems,
//! and a recursive backward (top-down) encoding that unfolds rules from the
//! query. In both, reaching the single error location corresponds to the
//! unsatisfiability of the input system.

pub mod c_ast;
mod backward;
mod forward;

pub use backward::transform_backward;
pub use forward::transform_forward;

use std::collections::{HashMap, HashSet};

use num_traits::ToPrimitive;

use crate::chc::{sort_of, ChcSystem, Op, Sort, Term, TheoryClass};
use crate::error::CodegenError;
use c_ast::{CExpr, CUnit};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Encoding {
    Forward,
    Backward,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorStyle {
    /// SV-COMP convention: call an external `reach_error()`.
    ReachError,
    /// Listing style: `return -1` marks the error location.
    ReturnMinusOne,
}

#[derive(Debug, Clone)]
pub struct EmitOptions {
    pub error_style: ErrorStyle,
    /// C type used for the LIA Int sort.
    pub int_c_type: String,
    /// Hash of the source file, recorded in the header comment.
    pub source_hash: Option<String>,
}

impl Default for EmitOptions {
    fn default() -> Self {
        EmitOptions {
            error_style: ErrorStyle::ReachError,
            int_c_type: "int".into(),
            source_hash: None,
        }
    }
}

/// An emitted C program plus its metadata. The AST is retained so tests can
/// assert structure instead of diffing text.
#[derive(Debug, Clone)]
pub struct CProgram {
    pub source: String,
    pub ast: CUnit,
    pub encoding: Encoding,
    pub recursive: bool,
    pub theory: TheoryClass,
    /// `"reach_error"` or `"return -1"`, depending on the error style.
    pub error_symbol: String,
    pub nondet_symbols: Vec<String>,
}

/// How a sort is carried in C.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CTypeSpec {
    pub c_name: String,
    pub bits: u32,
    pub signed: bool,
    /// Post-arithmetic mask; present iff `bits` is not an exact carrier width.
    pub mask: Option<u64>,
}

pub fn map_sort(sort: Sort, opts: &EmitOptions) -> Result<CTypeSpec, CodegenError> {
    match sort {
        Sort::Bool => Ok(CTypeSpec {
            c_name: "unsigned char".into(),
            bits: 1,
            signed: false,
            mask: Some(1),
        }),
        Sort::Int => {
            let bits = int_type_bits(&opts.int_c_type);
            Ok(CTypeSpec {
                c_name: opts.int_c_type.clone(),
                bits,
                signed: true,
                mask: None,
            })
        }
        Sort::BitVec(w) => {
            if w > 64 {
                return Err(CodegenError::UnsupportedWidth(w));
            }
            let (c_name, bits) = bv_carrier(w);
            let mask = if w == bits {
                None
            } else {
                Some(width_mask(w))
            };
            Ok(CTypeSpec {
                c_name: c_name.into(),
                bits: w,
                signed: false,
                mask,
            })
        }
    }
}

fn int_type_bits(ty: &str) -> u32 {
    match ty {
        "char" | "signed char" => 8,
        "short" => 16,
        "long" | "long long" => 64,
        _ => 32,
    }
}

fn bv_carrier(w: u32) -> (&'static str, u32) {
    match w {
        0..=8 => ("unsigned char", 8),
        9..=16 => ("unsigned short", 16),
        17..=32 => ("unsigned int", 32),
        _ => ("unsigned long long", 64),
    }
}

fn width_mask(w: u32) -> u64 {
    if w >= 64 {
        u64::MAX
    } else {
        (1u64 << w) - 1
    }
}

/// Nondet extern for a carrier type name.
fn nondet_fn(c_name: &str) -> String {
    let suffix = match c_name {
        "unsigned char" => "uchar",
        "unsigned short" => "ushort",
        "unsigned int" => "uint",
        "unsigned long long" => "ulonglong",
        "char" | "signed char" => "char",
        "short" => "short",
        "long" => "long",
        "long long" => "longlong",
        _ => "int",
    };
    format!("__VERIFIER_nondet_{suffix}")
}

/// Expression drawing a nondeterministic value of `sort`, masked into range.
pub(crate) fn nondet_draw(sort: Sort, opts: &EmitOptions) -> Result<CExpr, CodegenError> {
    let spec = map_sort(sort, opts)?;
    let call = CExpr::call(nondet_fn(&spec.c_name), vec![]);
    match sort {
        Sort::Bool => Ok(CExpr::bin("&", call, CExpr::Int(1))),
        Sort::Int => Ok(call),
        Sort::BitVec(w) => match spec.mask {
            Some(m) => Ok(CExpr::bin(
                "&",
                call,
                CExpr::Hex {
                    value: m,
                    ull: bv_carrier(w).1 == 64,
                },
            )),
            None => Ok(call),
        },
    }
}

/// Computation type wide enough to evaluate width-`w` arithmetic without
/// signed overflow after C integer promotion.
fn compute_type(w: u32) -> &'static str {
    if w <= 32 {
        "unsigned int"
    } else {
        "unsigned long long"
    }
}

/// A post-arithmetic mask is required unless the value wraps naturally in
/// the computation type.
fn needs_mask(w: u32) -> bool {
    w != 32 && w != 64
}

fn bv_const(value: u64, w: u32) -> CExpr {
    CExpr::Hex {
        value,
        ull: w > 32,
    }
}

fn masked(e: CExpr, w: u32) -> CExpr {
    if needs_mask(w) {
        CExpr::bin("&", e, bv_const(width_mask(w), w))
    } else {
        e
    }
}

/// Cast into the computation type so small carriers do not overflow the
/// promoted `int` and wide results are not truncated at 32 bits.
fn widened(e: CExpr, w: u32) -> CExpr {
    CExpr::Cast(compute_type(w).into(), Box::new(e))
}

fn sign_bit(w: u32) -> CExpr {
    bv_const(1u64 << (w - 1), w)
}

fn term_width(t: &Term) -> u32 {
    match sort_of(t).expect("emit_term input is well-sorted") {
        Sort::BitVec(w) => w,
        _ => unreachable!("bitvector operand expected"),
    }
}

/// Lowers a well-sorted term to a C expression. `env` maps rule variables to
/// C identifiers; all emitted expressions are pure.
pub fn emit_term(
    term: &Term,
    env: &HashMap<String, String>,
    opts: &EmitOptions,
) -> Result<CExpr, CodegenError> {
    match term {
        Term::Var(name, _) => Ok(CExpr::var(
            env.get(name).cloned().unwrap_or_else(|| name.clone()),
        )),
        Term::IntLit(v) => match v.to_i128() {
            Some(i) => Ok(CExpr::Int(i)),
            None => Err(CodegenError::LiteralOverflow(v.to_string())),
        },
        Term::BvLit(v, w) => {
            if *w > 64 {
                return Err(CodegenError::UnsupportedWidth(*w));
            }
            let value = v.to_u64().expect("validated literal fits its width");
            Ok(bv_const(value, *w))
        }
        Term::BoolLit(b) => Ok(CExpr::Int(i128::from(*b))),
        Term::App(op, children) => emit_app(*op, children, env, opts),
    }
}

fn emit_app(
    op: Op,
    children: &[Term],
    env: &HashMap<String, String>,
    opts: &EmitOptions,
) -> Result<CExpr, CodegenError> {
    let sub = |i: usize| emit_term(&children[i], env, opts);
    let all = || -> Result<Vec<CExpr>, CodegenError> {
        children.iter().map(|c| emit_term(c, env, opts)).collect()
    };
    let fold = |sym: &'static str| -> Result<CExpr, CodegenError> {
        let mut parts = all()?;
        let mut acc = parts.remove(0);
        for p in parts {
            acc = CExpr::bin(sym, acc, p);
        }
        Ok(acc)
    };
    use Op::*;
    match op {
        And => fold("&&"),
        Or => fold("||"),
        Not => Ok(CExpr::Unary("!", Box::new(sub(0)?))),
        Implies => Ok(CExpr::bin(
            "||",
            CExpr::Unary("!", Box::new(sub(0)?)),
            sub(1)?,
        )),
        Ite => Ok(CExpr::Ternary(
            Box::new(sub(0)?),
            Box::new(sub(1)?),
            Box::new(sub(2)?),
        )),
        Eq => Ok(CExpr::bin("==", sub(0)?, sub(1)?)),
        Add => fold("+"),
        Sub => fold("-"),
        Neg => Ok(CExpr::Unary("-", Box::new(sub(0)?))),
        Mul => fold("*"),
        Lt => Ok(CExpr::bin("<", sub(0)?, sub(1)?)),
        Le => Ok(CExpr::bin("<=", sub(0)?, sub(1)?)),
        Gt => Ok(CExpr::bin(">", sub(0)?, sub(1)?)),
        Ge => Ok(CExpr::bin(">=", sub(0)?, sub(1)?)),
        BvAdd | BvSub | BvMul | BvAnd | BvOr | BvXor => {
            let w = term_width(&children[0]);
            check_width(w)?;
            let sym = match op {
                BvAdd => "+",
                BvSub => "-",
                BvMul => "*",
                BvAnd => "&",
                BvOr => "|",
                _ => "^",
            };
            let wrap_free = matches!(op, BvAnd | BvOr | BvXor);
            let lhs = if wrap_free { sub(0)? } else { widened(sub(0)?, w) };
            let e = CExpr::bin(sym, lhs, sub(1)?);
            Ok(if wrap_free { e } else { masked(e, w) })
        }
        BvNeg => {
            let w = term_width(&children[0]);
            check_width(w)?;
            let e = CExpr::bin("-", widened(CExpr::Int(0), w), sub(0)?);
            Ok(masked(e, w))
        }
        BvNot => {
            let w = term_width(&children[0]);
            check_width(w)?;
            // always masked: ~ sets bits above the width
            Ok(CExpr::bin(
                "&",
                CExpr::Unary("~", Box::new(widened(sub(0)?, w))),
                bv_const(width_mask(w), w),
            ))
        }
        BvShl => {
            let w = term_width(&children[0]);
            check_width(w)?;
            let shifted = masked(CExpr::bin("<<", widened(sub(0)?, w), sub(1)?), w);
            Ok(CExpr::Ternary(
                Box::new(CExpr::bin(">=", sub(1)?, CExpr::Int(i128::from(w)))),
                Box::new(CExpr::Int(0)),
                Box::new(shifted),
            ))
        }
        BvLshr => {
            let w = term_width(&children[0]);
            check_width(w)?;
            Ok(CExpr::Ternary(
                Box::new(CExpr::bin(">=", sub(1)?, CExpr::Int(i128::from(w)))),
                Box::new(CExpr::Int(0)),
                Box::new(CExpr::bin(">>", sub(0)?, sub(1)?)),
            ))
        }
        BvAshr => {
            let w = term_width(&children[0]);
            check_width(w)?;
            let neg = CExpr::bin("&", sub(0)?, sign_bit(w));
            // fill = bits of the mask cleared by >> shift, i.e. the top `y` bits
            let fill = CExpr::bin(
                "^",
                CExpr::bin(">>", bv_const(width_mask(w), w), sub(1)?),
                bv_const(width_mask(w), w),
            );
            let in_range = CExpr::bin(
                "|",
                CExpr::bin(">>", sub(0)?, sub(1)?),
                CExpr::Ternary(Box::new(neg.clone()), Box::new(fill), Box::new(CExpr::Int(0))),
            );
            let saturated = CExpr::Ternary(
                Box::new(neg),
                Box::new(bv_const(width_mask(w), w)),
                Box::new(CExpr::Int(0)),
            );
            Ok(CExpr::Ternary(
                Box::new(CExpr::bin(">=", sub(1)?, CExpr::Int(i128::from(w)))),
                Box::new(saturated),
                Box::new(in_range),
            ))
        }
        BvUlt => Ok(CExpr::bin("<", sub(0)?, sub(1)?)),
        BvUle => Ok(CExpr::bin("<=", sub(0)?, sub(1)?)),
        BvUgt => Ok(CExpr::bin(">", sub(0)?, sub(1)?)),
        BvUge => Ok(CExpr::bin(">=", sub(0)?, sub(1)?)),
        BvSlt | BvSle | BvSgt | BvSge => {
            let w = term_width(&children[0]);
            check_width(w)?;
            let sym = match op {
                BvSlt => "<",
                BvSle => "<=",
                BvSgt => ">",
                _ => ">=",
            };
            // flipping the sign bit turns signed order into unsigned order
            Ok(CExpr::bin(
                sym,
                CExpr::bin("^", sub(0)?, sign_bit(w)),
                CExpr::bin("^", sub(1)?, sign_bit(w)),
            ))
        }
        Concat => {
            let w1 = term_width(&children[0]);
            let w2 = term_width(&children[1]);
            let w = w1 + w2;
            check_width(w)?;
            Ok(CExpr::bin(
                "|",
                CExpr::bin("<<", widened(sub(0)?, w), CExpr::Int(i128::from(w2))),
                widened(sub(1)?, w),
            ))
        }
        Extract { hi, lo } => {
            let shifted = if lo == 0 {
                sub(0)?
            } else {
                CExpr::bin(">>", sub(0)?, CExpr::Int(i128::from(lo)))
            };
            let w_new = hi - lo + 1;
            Ok(CExpr::bin(
                "&",
                shifted,
                bv_const(width_mask(w_new), term_width(&children[0])),
            ))
        }
        ZeroExtend(k) => {
            let w = term_width(&children[0]) + k;
            check_width(w)?;
            sub(0)
        }
        SignExtend(k) => {
            let w_old = term_width(&children[0]);
            let w = w_old + k;
            check_width(w)?;
            let s = bv_const(1u64 << (w_old - 1), w);
            let e = CExpr::bin(
                "-",
                CExpr::bin("^", widened(sub(0)?, w), s.clone()),
                s,
            );
            Ok(masked(e, w))
        }
    }
}

fn check_width(w: u32) -> Result<(), CodegenError> {
    if w > 64 {
        Err(CodegenError::UnsupportedWidth(w))
    } else {
        Ok(())
    }
}

/// Injective mapping from SMT-LIB symbols to C identifiers. Non-alphanumeric
/// characters are hex-escaped; collisions and reserved words get a numeric
/// suffix.
pub(crate) struct NameTable {
    used: HashSet<String>,
    map: HashMap<String, String>,
}

const C_RESERVED: &[&str] = &[
    "auto", "break", "case", "char", "const", "continue", "default", "do", "double", "else",
    "enum", "extern", "float", "for", "goto", "if", "inline", "int", "long", "register",
    "restrict", "return", "short", "signed", "sizeof", "static", "struct", "switch", "typedef",
    "union", "unsigned", "void", "volatile", "while", "main", "abort", "exit", "reach_error",
];

impl NameTable {
    pub fn new(reserved: impl IntoIterator<Item = String>) -> Self {
        let mut used: HashSet<String> = C_RESERVED.iter().map(|s| s.to_string()).collect();
        used.extend(reserved);
        NameTable {
            used,
            map: HashMap::new(),
        }
    }

    pub fn get(&mut self, smt_name: &str) -> String {
        if let Some(c) = self.map.get(smt_name) {
            return c.clone();
        }
        let mut base = String::new();
        for (i, ch) in smt_name.chars().enumerate() {
            if ch.is_ascii_alphanumeric() || ch == '_' {
                if i == 0 && ch.is_ascii_digit() {
                    base.push('v');
                }
                base.push(ch);
            } else {
                let mut buf = [0u8; 4];
                for b in ch.encode_utf8(&mut buf).as_bytes() {
                    base.push_str(&format!("_x{b:02x}"));
                }
            }
        }
        if base.is_empty() {
            base.push('v');
        }
        let mut candidate = base.clone();
        let mut n = 0;
        while self.used.contains(&candidate) || candidate.starts_with("__VERIFIER") {
            n += 1;
            candidate = format!("{base}_{n}");
        }
        self.used.insert(candidate.clone());
        self.map.insert(smt_name.to_string(), candidate.clone());
        candidate
    }
}

/// Header comment and extern block shared by both transforms.
pub(crate) fn unit_frame(
    system: &ChcSystem,
    encoding: Encoding,
    opts: &EmitOptions,
    used_nondets: &[String],
    with_error_extern: bool,
) -> (Vec<String>, Vec<String>) {
    let header = vec![
        format!("generated by hornc {}", env!("CARGO_PKG_VERSION")),
        format!(
            "encoding: {}",
            match encoding {
                Encoding::Forward => "forward",
                Encoding::Backward => "backward",
            }
        ),
        format!("theory: {}", system.theory),
        format!(
            "source-hash: {}",
            opts.source_hash.as_deref().unwrap_or("unknown")
        ),
    ];
    let mut externs = Vec::new();
    if with_error_extern {
        externs.push("void reach_error(void)".to_string());
    }
    externs.extend(used_nondets.iter().cloned());
    (header, externs)
}

/// Collects `extern` declarations for every nondet function called in `unit`.
pub(crate) fn collect_nondet_externs(unit: &CUnit) -> Vec<String> {
    let mut names: std::collections::BTreeSet<String> = std::collections::BTreeSet::new();
    fn walk_expr(e: &CExpr, names: &mut std::collections::BTreeSet<String>) {
        match e {
            CExpr::Call(name, args) => {
                if name.starts_with("__VERIFIER_nondet_") {
                    names.insert(name.clone());
                }
                for a in args {
                    walk_expr(a, names);
                }
            }
            CExpr::Unary(_, a) | CExpr::Cast(_, a) => walk_expr(a, names),
            CExpr::Binary(_, a, b) => {
                walk_expr(a, names);
                walk_expr(b, names);
            }
            CExpr::Ternary(a, b, c) => {
                walk_expr(a, names);
                walk_expr(b, names);
                walk_expr(c, names);
            }
            _ => {}
        }
    }
    fn walk_stmt(s: &c_ast::CStmt, names: &mut std::collections::BTreeSet<String>) {
        use c_ast::CStmt::*;
        match s {
            Decl { init: Some(e), .. } | Assign(_, e) | Expr(e) | Return(e) => walk_expr(e, names),
            Decl { init: None, .. } | Goto(_) | Label(_) => {}
            If { cond, then, els } => {
                walk_expr(cond, names);
                for s in then.iter().chain(els) {
                    walk_stmt(s, names);
                }
            }
            While { cond, body } => {
                walk_expr(cond, names);
                for s in body {
                    walk_stmt(s, names);
                }
            }
            Block(body) => {
                for s in body {
                    walk_stmt(s, names);
                }
            }
        }
    }
    for f in &unit.functions {
        for s in &f.body {
            walk_stmt(s, &mut names);
        }
    }
    names
        .into_iter()
        .map(|n| {
            let ret = match n.as_str() {
                "__VERIFIER_nondet_uchar" => "unsigned char",
                "__VERIFIER_nondet_ushort" => "unsigned short",
                "__VERIFIER_nondet_uint" => "unsigned int",
                "__VERIFIER_nondet_ulonglong" => "unsigned long long",
                "__VERIFIER_nondet_char" => "char",
                "__VERIFIER_nondet_short" => "short",
                "__VERIFIER_nondet_long" => "long",
                "__VERIFIER_nondet_longlong" => "long long",
                _ => "int",
            };
            format!("{ret} {n}(void)")
        })
        .collect()
}

/// Statements performed at the error location, per the configured style.
pub(crate) fn error_statements(style: ErrorStyle) -> Vec<c_ast::CStmt> {
    match style {
        ErrorStyle::ReachError => vec![
            c_ast::CStmt::Expr(CExpr::call("reach_error", vec![])),
            c_ast::CStmt::Return(CExpr::Int(-1)),
        ],
        ErrorStyle::ReturnMinusOne => vec![c_ast::CStmt::Return(CExpr::Int(-1))],
    }
}

pub(crate) fn error_symbol(style: ErrorStyle) -> String {
    match style {
        ErrorStyle::ReachError => "reach_error".into(),
        ErrorStyle::ReturnMinusOne => "return -1".into(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn maps_native_width_without_mask() {
        let spec = map_sort(Sort::BitVec(32), &EmitOptions::default()).unwrap();
        assert_eq!(spec.c_name, "unsigned int");
        assert_eq!(spec.mask, None);
    }

    #[test]
    fn maps_narrow_width_with_mask() {
        let spec = map_sort(Sort::BitVec(4), &EmitOptions::default()).unwrap();
        assert_eq!(spec.c_name, "unsigned char");
        assert_eq!(spec.mask, Some(0xF));
    }

    #[test]
    fn maps_int_to_signed_int() {
        let spec = map_sort(Sort::Int, &EmitOptions::default()).unwrap();
        assert_eq!(spec.c_name, "int");
        assert!(spec.signed);
        assert_eq!(spec.mask, None);
    }

    #[test]
    fn rejects_wide_bitvectors() {
        assert!(matches!(
            map_sort(Sort::BitVec(65), &EmitOptions::default()),
            Err(CodegenError::UnsupportedWidth(65))
        ));
    }

    #[test]
    fn emits_int_subtraction() {
        let t = Term::App(Op::Sub, vec![Term::var("x", Sort::Int), Term::int(1)]);
        let e = emit_term(&t, &HashMap::new(), &EmitOptions::default()).unwrap();
        assert_eq!(e.to_c(), "(x - 1)");
    }

    #[test]
    fn masks_narrow_bv_addition() {
        let t = Term::App(
            Op::BvAdd,
            vec![Term::var("x", Sort::BitVec(4)), Term::bv(1, 4)],
        );
        let e = emit_term(&t, &HashMap::new(), &EmitOptions::default()).unwrap();
        assert_eq!(e.to_c(), "((((unsigned int)x) + 0x1) & 0xf)");
    }

    #[test]
    fn unsigned_comparison_is_direct() {
        let t = Term::App(
            Op::BvUlt,
            vec![Term::var("x", Sort::BitVec(8)), Term::var("y", Sort::BitVec(8))],
        );
        let e = emit_term(&t, &HashMap::new(), &EmitOptions::default()).unwrap();
        assert_eq!(e.to_c(), "(x < y)");
    }

    #[test]
    fn signed_comparison_flips_sign_bit() {
        let t = Term::App(
            Op::BvSlt,
            vec![Term::var("x", Sort::BitVec(8)), Term::var("y", Sort::BitVec(8))],
        );
        let e = emit_term(&t, &HashMap::new(), &EmitOptions::default()).unwrap();
        assert_eq!(e.to_c(), "((x ^ 0x80) < (y ^ 0x80))");
    }

    #[test]
    fn sanitizer_is_injective() {
        let mut t = NameTable::new([]);
        let a = t.get("a+b");
        let b = t.get("a-b");
        let c = t.get("a+b");
        assert_ne!(a, b);
        assert_eq!(a, c);
        assert_ne!(t.get("while"), "while");
    }
}
