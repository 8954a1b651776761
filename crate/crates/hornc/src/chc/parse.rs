//! SMT-LIBv2 HORN-fragment front end.
//!
//! Accepted commands: `set-logic HORN`, `set-info`, `declare-fun` with Bool
//! result, `assert` of a (possibly unquantified) Horn-shaped implication,
//! `check-sat`, and `exit`. Bodies are split into the constraint (non-predicate
//! conjuncts) and the premise (predicate applications); nested and-trees are
//! flattened and let-bindings are inlined while reading.

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_traits::Num;

use super::{
    detect_theory, sort_of, validate, ChcSystem, Op, PredId, PredicateApp, PredicateDecl, Rule,
    RuleHead, Sort, Term,
};
use crate::error::ChcError;
use crate::sexpr::{parse_all, Pos, Sexp};

pub fn parse_chc(text: &str) -> Result<ChcSystem, ChcError> {
    let commands = parse_all(text)?;
    let mut parser = Parser {
        decls: Vec::new(),
        by_name: HashMap::new(),
        rules: Vec::new(),
    };
    for cmd in &commands {
        parser.command(cmd)?;
    }
    let mut system = ChcSystem {
        decls: parser.decls,
        rules: parser.rules,
        theory: super::TheoryClass::Core,
    };
    validate(&system)?;
    system.theory = detect_theory(&system)?;
    Ok(system)
}

struct Parser {
    decls: Vec<PredicateDecl>,
    by_name: HashMap<String, PredId>,
    rules: Vec<Rule>,
}

fn err_at(pos: Pos, msg: impl Into<String>) -> ChcError {
    ChcError::syntax(pos.line, pos.col, msg)
}

impl Parser {
    fn command(&mut self, cmd: &Sexp) -> Result<(), ChcError> {
        let items = cmd
            .list()
            .ok_or_else(|| err_at(cmd.pos(), "expected a command list"))?;
        let head = items
            .first()
            .and_then(|s| s.atom())
            .ok_or_else(|| err_at(cmd.pos(), "expected a command name"))?;
        match head {
            "set-logic" => {
                match items.get(1).and_then(|s| s.atom()) {
                    Some("HORN") => Ok(()),
                    Some(other) => Err(ChcError::Unsupported(format!("logic {other}"))),
                    None => Err(err_at(cmd.pos(), "set-logic expects a logic name")),
                }
            }
            "set-info" | "set-option" | "check-sat" | "exit" | "get-model" => Ok(()),
            "declare-fun" => self.declare_fun(cmd, items),
            "assert" => {
                let body = items
                    .get(1)
                    .ok_or_else(|| err_at(cmd.pos(), "assert expects a term"))?;
                let rule = self.rule(body)?;
                self.rules.push(rule);
                Ok(())
            }
            "define-fun" | "declare-datatypes" | "declare-datatype" | "declare-sort"
            | "define-sort" | "push" | "pop" => {
                Err(ChcError::Unsupported(format!("command {head}")))
            }
            other => Err(ChcError::Unsupported(format!("command {other}"))),
        }
    }

    fn declare_fun(&mut self, cmd: &Sexp, items: &[Sexp]) -> Result<(), ChcError> {
        if items.len() != 4 {
            return Err(err_at(
                cmd.pos(),
                "declare-fun expects a name, argument sorts, and a result sort",
            ));
        }
        let name = items[1]
            .atom()
            .ok_or_else(|| err_at(items[1].pos(), "expected a symbol"))?
            .to_string();
        let args = items[2]
            .list()
            .ok_or_else(|| err_at(items[2].pos(), "expected a sort list"))?;
        let arg_sorts = args.iter().map(parse_sort).collect::<Result<Vec<_>, _>>()?;
        let result = parse_sort(&items[3])?;
        if result != Sort::Bool {
            return Err(ChcError::Unsupported(
                "declare-fun with non-Bool result".into(),
            ));
        }
        if self.by_name.contains_key(&name) {
            return Err(ChcError::Sort(format!("duplicate declaration of {name}")));
        }
        let id = PredId(self.decls.len());
        self.by_name.insert(name.clone(), id);
        self.decls.push(PredicateDecl { name, arg_sorts });
        Ok(())
    }

    fn rule(&mut self, body: &Sexp) -> Result<Rule, ChcError> {
        // Optional outer forall; ground facts and queries come without one.
        let (vars, inner) = match body.list() {
            Some([h, binders, inner]) if h.atom() == Some("forall") => {
                let binders = binders
                    .list()
                    .ok_or_else(|| err_at(body.pos(), "forall expects a binder list"))?;
                let mut vars = Vec::new();
                for b in binders {
                    let pair = b
                        .list()
                        .ok_or_else(|| err_at(b.pos(), "expected (name sort)"))?;
                    let [name, sort] = pair else {
                        return Err(err_at(b.pos(), "expected (name sort)"));
                    };
                    let name = name
                        .atom()
                        .ok_or_else(|| err_at(b.pos(), "expected a variable name"))?;
                    vars.push((name.to_string(), parse_sort(sort)?));
                }
                (vars, inner)
            }
            Some([h, ..]) if h.atom() == Some("exists") => {
                return Err(ChcError::Unsupported("quantifier alternation".into()));
            }
            _ => (Vec::new(), body),
        };
        let inner = expand_lets(inner, &HashMap::new())?;
        let scope: HashMap<String, Sort> = vars.iter().cloned().collect();

        let (body_sexp, head_sexp) = match inner.list() {
            Some([h, b, c]) if h.atom() == Some("=>") => (Some(b.clone()), c.clone()),
            _ => (None, inner.clone()),
        };

        let (premise, constraint) = match &body_sexp {
            Some(b) => self.body(b, &scope)?,
            None => (Vec::new(), Vec::new()),
        };

        let head = self.head(&head_sexp, &scope)?;
        Ok(Rule {
            vars,
            constraint: Term::and(constraint),
            premise,
            head,
        })
    }

    /// Splits a rule body into premise applications and constraint conjuncts.
    fn body(
        &self,
        sexp: &Sexp,
        scope: &HashMap<String, Sort>,
    ) -> Result<(Vec<PredicateApp>, Vec<Term>), ChcError> {
        let mut premise = Vec::new();
        let mut constraint = Vec::new();
        self.body_conjunct(sexp, scope, &mut premise, &mut constraint)?;
        Ok((premise, constraint))
    }

    fn body_conjunct(
        &self,
        sexp: &Sexp,
        scope: &HashMap<String, Sort>,
        premise: &mut Vec<PredicateApp>,
        constraint: &mut Vec<Term>,
    ) -> Result<(), ChcError> {
        if let Some(items) = sexp.list() {
            if items.first().and_then(|s| s.atom()) == Some("and") {
                for c in &items[1..] {
                    self.body_conjunct(c, scope, premise, constraint)?;
                }
                return Ok(());
            }
        }
        if let Some(app) = self.try_pred_app(sexp, scope)? {
            premise.push(app);
            return Ok(());
        }
        let term = self.term(sexp, scope)?;
        if sort_of(&term)? != Sort::Bool {
            return Err(err_at(sexp.pos(), "body conjunct must be Bool"));
        }
        if pred_occurs(sexp, &self.by_name, scope) {
            return Err(ChcError::Unsupported(
                "predicate application nested under a non-conjunctive operator (non-Horn shape)"
                    .into(),
            ));
        }
        if !term.is_true() {
            constraint.push(term);
        }
        Ok(())
    }

    fn head(&self, sexp: &Sexp, scope: &HashMap<String, Sort>) -> Result<RuleHead, ChcError> {
        if sexp.atom() == Some("false") {
            return Ok(RuleHead::Query);
        }
        if let Some(app) = self.try_pred_app(sexp, scope)? {
            return Ok(RuleHead::Head(app));
        }
        Err(ChcError::Unsupported(
            "rule head must be a predicate application or false (non-Horn shape)".into(),
        ))
    }

    /// Recognizes `(P t...)` or a bare nullary `P` for a declared predicate.
    /// Quantified variables shadow predicate names.
    fn try_pred_app(
        &self,
        sexp: &Sexp,
        scope: &HashMap<String, Sort>,
    ) -> Result<Option<PredicateApp>, ChcError> {
        match sexp {
            Sexp::Atom { text, .. } => {
                if scope.contains_key(text) {
                    return Ok(None);
                }
                match self.by_name.get(text) {
                    Some(&id) => {
                        if !self.decls[id.0].arg_sorts.is_empty() {
                            return Err(ChcError::Arity(format!(
                                "{text} expects {} arguments, got 0",
                                self.decls[id.0].arg_sorts.len()
                            )));
                        }
                        Ok(Some(PredicateApp {
                            pred: id,
                            args: vec![],
                        }))
                    }
                    None => Ok(None),
                }
            }
            Sexp::List { items, .. } => {
                let Some(name) = items.first().and_then(|s| s.atom()) else {
                    return Ok(None);
                };
                let Some(&id) = self.by_name.get(name) else {
                    return Ok(None);
                };
                let args = items[1..]
                    .iter()
                    .map(|a| self.term(a, scope))
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(Some(PredicateApp { pred: id, args }))
            }
        }
    }

    fn term(&self, sexp: &Sexp, scope: &HashMap<String, Sort>) -> Result<Term, ChcError> {
        match sexp {
            Sexp::Atom { text, pos } => self.atom_term(text, *pos, scope),
            Sexp::List { items, pos } => {
                let head = items
                    .first()
                    .ok_or_else(|| err_at(*pos, "empty application"))?;
                // Indexed identifiers: (_ bvN w), (_ extract hi lo), ...
                if head.atom() == Some("_") {
                    return indexed_literal_or_op(items, *pos).and_then(|r| match r {
                        Indexed::Literal(t) => Ok(t),
                        Indexed::Op(_) => Err(err_at(*pos, "indexed operator used without operands")),
                    });
                }
                if let Some(op_items) = head.list() {
                    // ((_ extract hi lo) x) and friends
                    if op_items.first().and_then(|s| s.atom()) == Some("_") {
                        let indexed = indexed_literal_or_op(op_items, head.pos())?;
                        let Indexed::Op(op) = indexed else {
                            return Err(err_at(head.pos(), "literal used as an operator"));
                        };
                        let args = items[1..]
                            .iter()
                            .map(|a| self.term(a, scope))
                            .collect::<Result<Vec<_>, _>>()?;
                        let t = Term::App(op, args);
                        sort_of(&t)?;
                        return Ok(t);
                    }
                }
                let name = head
                    .atom()
                    .ok_or_else(|| err_at(head.pos(), "expected an operator"))?;
                let args = items[1..]
                    .iter()
                    .map(|a| self.term(a, scope))
                    .collect::<Result<Vec<_>, _>>()?;
                self.apply(name, args, *pos)
            }
        }
    }

    fn atom_term(
        &self,
        text: &str,
        pos: Pos,
        scope: &HashMap<String, Sort>,
    ) -> Result<Term, ChcError> {
        if let Some(sort) = scope.get(text) {
            return Ok(Term::var(text, *sort));
        }
        match text {
            "true" => return Ok(Term::BoolLit(true)),
            "false" => return Ok(Term::BoolLit(false)),
            _ => {}
        }
        if text.chars().all(|c| c.is_ascii_digit()) {
            let v = BigInt::from_str_radix(text, 10)
                .map_err(|_| err_at(pos, "invalid numeral"))?;
            return Ok(Term::IntLit(v));
        }
        if let Some(hex) = text.strip_prefix("#x") {
            let v = BigUint::from_str_radix(hex, 16)
                .map_err(|_| err_at(pos, "invalid hexadecimal literal"))?;
            return Ok(Term::BvLit(v, 4 * hex.len() as u32));
        }
        if let Some(bin) = text.strip_prefix("#b") {
            let v = BigUint::from_str_radix(bin, 2)
                .map_err(|_| err_at(pos, "invalid binary literal"))?;
            return Ok(Term::BvLit(v, bin.len() as u32));
        }
        if self.by_name.contains_key(text) {
            return Err(ChcError::Unsupported(
                "predicate application nested inside a term (non-Horn shape)".into(),
            ));
        }
        Err(err_at(pos, format!("unknown symbol {text}")))
    }

    fn apply(&self, name: &str, mut args: Vec<Term>, pos: Pos) -> Result<Term, ChcError> {
        let op = match name {
            "and" => Op::And,
            "or" => Op::Or,
            "not" => Op::Not,
            "=>" => Op::Implies,
            "ite" => Op::Ite,
            "=" => Op::Eq,
            "+" => Op::Add,
            "-" => {
                if args.len() == 1 {
                    // Fold unary minus on a literal so printing round-trips.
                    if let Term::IntLit(v) = &args[0] {
                        return Ok(Term::IntLit(-v.clone()));
                    }
                    Op::Neg
                } else {
                    Op::Sub
                }
            }
            "*" => Op::Mul,
            "<" => Op::Lt,
            "<=" => Op::Le,
            ">" => Op::Gt,
            ">=" => Op::Ge,
            "bvadd" => Op::BvAdd,
            "bvsub" => Op::BvSub,
            "bvmul" => Op::BvMul,
            "bvneg" => Op::BvNeg,
            "bvand" => Op::BvAnd,
            "bvor" => Op::BvOr,
            "bvxor" => Op::BvXor,
            "bvnot" => Op::BvNot,
            "bvshl" => Op::BvShl,
            "bvlshr" => Op::BvLshr,
            "bvashr" => Op::BvAshr,
            "bvult" => Op::BvUlt,
            "bvule" => Op::BvUle,
            "bvugt" => Op::BvUgt,
            "bvuge" => Op::BvUge,
            "bvslt" => Op::BvSlt,
            "bvsle" => Op::BvSle,
            "bvsgt" => Op::BvSgt,
            "bvsge" => Op::BvSge,
            "concat" => Op::Concat,
            "select" | "store" => {
                return Err(ChcError::Unsupported("arrays".into()));
            }
            "div" | "mod" | "abs" => {
                return Err(ChcError::Unsupported(format!("operator {name}")));
            }
            other => {
                return Err(ChcError::Unsupported(format!("operator {other}")));
            }
        };
        // Chainable/n-ary surface forms are desugared to the binary core.
        let term = match op {
            Op::Eq if args.len() > 2 => {
                let pairs = args
                    .windows(2)
                    .map(|w| Term::eq(w[0].clone(), w[1].clone()))
                    .collect();
                Term::and(pairs)
            }
            Op::Lt | Op::Le | Op::Gt | Op::Ge if args.len() > 2 => {
                let pairs = args
                    .windows(2)
                    .map(|w| Term::App(op, vec![w[0].clone(), w[1].clone()]))
                    .collect();
                Term::and(pairs)
            }
            Op::Eq if args.len() != 2 => {
                return Err(ChcError::Arity("= expects at least 2 operands".into()));
            }
            _ => {
                if args.len() == 1 && matches!(op, Op::And | Op::Or) {
                    args.pop().unwrap()
                } else {
                    Term::App(op, args)
                }
            }
        };
        sort_of(&term).map_err(|e| match e {
            ChcError::Syntax { .. } => e,
            other => {
                let _ = pos;
                other
            }
        })?;
        Ok(term)
    }
}

enum Indexed {
    Literal(Term),
    Op(Op),
}

fn indexed_literal_or_op(items: &[Sexp], pos: Pos) -> Result<Indexed, ChcError> {
    let name = items
        .get(1)
        .and_then(|s| s.atom())
        .ok_or_else(|| err_at(pos, "expected an indexed identifier"))?;
    let num = |i: usize| -> Result<u32, ChcError> {
        items
            .get(i)
            .and_then(|s| s.atom())
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| err_at(pos, "expected a numeral index"))
    };
    if let Some(dec) = name.strip_prefix("bv") {
        let v = BigUint::from_str_radix(dec, 10).map_err(|_| err_at(pos, "invalid bv literal"))?;
        let w = num(2)?;
        if w == 0 || v.bits() > u64::from(w) {
            return Err(ChcError::Sort(format!(
                "bitvector literal {v} does not fit width {w}"
            )));
        }
        return Ok(Indexed::Literal(Term::BvLit(v, w)));
    }
    match name {
        "extract" => Ok(Indexed::Op(Op::Extract {
            hi: num(2)?,
            lo: num(3)?,
        })),
        "zero_extend" => Ok(Indexed::Op(Op::ZeroExtend(num(2)?))),
        "sign_extend" => Ok(Indexed::Op(Op::SignExtend(num(2)?))),
        other => Err(ChcError::Unsupported(format!("indexed identifier {other}"))),
    }
}

fn parse_sort(sexp: &Sexp) -> Result<Sort, ChcError> {
    match sexp {
        Sexp::Atom { text, pos } => match text.as_str() {
            "Bool" => Ok(Sort::Bool),
            "Int" => Ok(Sort::Int),
            "Array" => Err(ChcError::Unsupported("arrays".into())),
            other => Err(err_at(*pos, format!("unknown sort {other}"))),
        },
        Sexp::List { items, pos } => {
            if items.first().and_then(|s| s.atom()) == Some("Array")
                || items.get(1).and_then(|s| s.atom()) == Some("Array")
            {
                return Err(ChcError::Unsupported("arrays".into()));
            }
            match (
                items.first().and_then(|s| s.atom()),
                items.get(1).and_then(|s| s.atom()),
                items.get(2).and_then(|s| s.atom()),
            ) {
                (Some("_"), Some("BitVec"), Some(w)) => {
                    let w: u32 = w
                        .parse()
                        .map_err(|_| err_at(*pos, "invalid bitvector width"))?;
                    if w == 0 {
                        return Err(ChcError::Sort("bitvector width must be at least 1".into()));
                    }
                    Ok(Sort::BitVec(w))
                }
                _ => Err(err_at(*pos, "unknown sort")),
            }
        }
    }
}

/// Returns true if a declared predicate name occurs anywhere inside `sexp`
/// (used to reject non-Horn nesting after the conjunct was typed as Bool).
fn pred_occurs(sexp: &Sexp, preds: &HashMap<String, PredId>, scope: &HashMap<String, Sort>) -> bool {
    match sexp {
        Sexp::Atom { text, .. } => preds.contains_key(text) && !scope.contains_key(text),
        Sexp::List { items, .. } => items.iter().any(|s| pred_occurs(s, preds, scope)),
    }
}

/// Inlines `let` bindings (parallel semantics) by s-expression substitution.
fn expand_lets(sexp: &Sexp, subst: &HashMap<String, Sexp>) -> Result<Sexp, ChcError> {
    match sexp {
        Sexp::Atom { text, .. } => Ok(subst.get(text).cloned().unwrap_or_else(|| sexp.clone())),
        Sexp::List { items, pos } => {
            if items.first().and_then(|s| s.atom()) == Some("let") {
                let [_, binders, body] = items.as_slice() else {
                    return Err(err_at(*pos, "let expects bindings and a body"));
                };
                let binders = binders
                    .list()
                    .ok_or_else(|| err_at(*pos, "let expects a binding list"))?;
                let mut inner = subst.clone();
                for b in binders {
                    let Some([name, value]) = b.list() else {
                        return Err(err_at(b.pos(), "expected (name value)"));
                    };
                    let name = name
                        .atom()
                        .ok_or_else(|| err_at(b.pos(), "expected a binding name"))?;
                    // Parallel let: values see the outer substitution only.
                    let value = expand_lets(value, subst)?;
                    inner.insert(name.to_string(), value);
                }
                return expand_lets(body, &inner);
            }
            let items = items
                .iter()
                .map(|s| expand_lets(s, subst))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(Sexp::List { items, pos: *pos })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chc::{classify_linearity, Linearity, TheoryClass};

    const RUNNING_EXAMPLE: &str = r#"
(set-logic HORN)
(declare-fun A (Int) Bool)
(assert (forall ((x Int)) (=> (= x 1) (A x))))
(assert (forall ((x Int)) (=> (A (- x 1)) (A x))))
(assert (=> (A 11) false))
(check-sat)
"#;

    #[test]
    fn parses_running_example() {
        let sys = parse_chc(RUNNING_EXAMPLE).unwrap();
        assert_eq!(sys.decls.len(), 1);
        assert_eq!(sys.rules.len(), 3);
        assert_eq!(sys.query_count(), 1);
        assert_eq!(sys.theory, TheoryClass::Lia);
        assert_eq!(classify_linearity(&sys), Linearity::Linear);
    }

    #[test]
    fn parses_empty_script() {
        let sys = parse_chc("(set-logic HORN)(check-sat)").unwrap();
        assert_eq!(sys.decls.len(), 0);
        assert_eq!(sys.rules.len(), 0);
    }

    #[test]
    fn splits_body_into_premise_and_constraint() {
        let text = r#"
(set-logic HORN)
(declare-fun A (Int) Bool)
(declare-fun B (Int) Bool)
(assert (forall ((x Int)) (=> (and (A x) (A (+ x 1)) (> x 0)) (B x))))
(check-sat)
"#;
        let sys = parse_chc(text).unwrap();
        assert_eq!(sys.rules[0].premise.len(), 2);
        assert_eq!(sys.rules[0].constraint.conjuncts().len(), 1);
    }

    #[test]
    fn inlines_let_bindings() {
        let text = r#"
(set-logic HORN)
(declare-fun A (Int) Bool)
(assert (forall ((x Int)) (=> (let ((y (+ x 1))) (= y 2)) (A x))))
(check-sat)
"#;
        let sys = parse_chc(text).unwrap();
        // y is gone; the constraint mentions x directly
        let mut fv = std::collections::HashSet::new();
        sys.rules[0].constraint.free_vars(&mut fv);
        assert_eq!(fv.len(), 1);
    }

    #[test]
    fn parallel_let_uses_outer_scope() {
        let text = r#"
(set-logic HORN)
(declare-fun A (Int) Bool)
(assert (forall ((x Int) (y Int))
  (=> (let ((x y) (y x)) (= x y)) (A x))))
(check-sat)
"#;
        // (let ((x y) (y x)) (= x y)) means y = x, not x = x.
        let sys = parse_chc(text).unwrap();
        let Term::App(Op::Eq, args) = &sys.rules[0].constraint else {
            panic!()
        };
        assert_eq!(args[0], Term::var("y", Sort::Int));
        assert_eq!(args[1], Term::var("x", Sort::Int));
    }

    #[test]
    fn ground_fact_without_forall() {
        let text = r#"
(set-logic HORN)
(declare-fun A (Int) Bool)
(assert (A 3))
(check-sat)
"#;
        let sys = parse_chc(text).unwrap();
        assert!(sys.rules[0].is_atom());
        assert!(sys.rules[0].vars.is_empty());
    }

    #[test]
    fn rejects_arrays() {
        let text = "(set-logic HORN)(declare-fun A ((Array Int Int)) Bool)(check-sat)";
        let err = parse_chc(text).unwrap_err();
        assert!(err.to_string().contains("arrays"), "{err}");
    }

    #[test]
    fn rejects_non_horn_head() {
        let text = r#"
(set-logic HORN)
(declare-fun A (Int) Bool)
(assert (forall ((x Int)) (=> (A x) (= x 1))))
(check-sat)
"#;
        assert!(matches!(
            parse_chc(text).unwrap_err(),
            ChcError::Unsupported(_)
        ));
    }

    #[test]
    fn rejects_pred_under_negation() {
        let text = r#"
(set-logic HORN)
(declare-fun A (Int) Bool)
(assert (forall ((x Int)) (=> (not (A x)) false)))
(check-sat)
"#;
        assert!(parse_chc(text).is_err());
    }

    #[test]
    fn rejects_ill_sorted_terms() {
        let text = r#"
(set-logic HORN)
(declare-fun A (Int) Bool)
(assert (forall ((x Int)) (=> (= x true) (A x))))
(check-sat)
"#;
        assert!(matches!(parse_chc(text).unwrap_err(), ChcError::Sort(_)));
    }

    #[test]
    fn rejects_arity_mismatch() {
        let text = r#"
(set-logic HORN)
(declare-fun A (Int) Bool)
(assert (forall ((x Int)) (=> (= x 1) (A x x))))
(check-sat)
"#;
        assert!(matches!(parse_chc(text).unwrap_err(), ChcError::Arity(_)));
    }

    #[test]
    fn parses_bitvector_literals() {
        let text = r#"
(set-logic HORN)
(declare-fun A ((_ BitVec 4)) Bool)
(assert (forall ((x (_ BitVec 4))) (=> (= x (_ bv3 4)) (A x))))
(assert (forall ((x (_ BitVec 4))) (=> (= x #xA) (A (bvadd x (_ bv1 4))))))
(check-sat)
"#;
        let sys = parse_chc(text).unwrap();
        assert_eq!(sys.theory, TheoryClass::Bv([4].into()));
    }

    #[test]
    fn quoted_symbols_survive() {
        let text = r#"
(set-logic HORN)
(declare-fun |my pred| (Int) Bool)
(assert (forall ((x Int)) (=> (= x 0) (|my pred| x))))
(check-sat)
"#;
        let sys = parse_chc(text).unwrap();
        assert_eq!(sys.decls[0].name, "my pred");
    }
}
