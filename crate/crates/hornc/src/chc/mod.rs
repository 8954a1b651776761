//! Typed in-memory representation of constrained Horn clause systems.
//!
//! A system is a set of deduction rules over uninterpreted predicates. Each
//! rule carries its universally quantified variables, a constraint over a
//! supported SMT theory (core, linear integer arithmetic, or fixed-size
//! bitvectors), a premise of predicate applications, and either a predicate
//! head or the query head `false`.

pub mod parse;
pub mod print;

pub use parse::parse_chc;
pub use print::print_chc;

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;

use num_bigint::{BigInt, BigUint};

use crate::error::ChcError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sort {
    Bool,
    Int,
    BitVec(u32),
}

impl fmt::Display for Sort {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sort::Bool => write!(f, "Bool"),
            Sort::Int => write!(f, "Int"),
            Sort::BitVec(w) => write!(f, "(_ BitVec {w})"),
        }
    }
}

/// Operators allowed inside constraints.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Op {
    // core
    And,
    Or,
    Not,
    Implies,
    Ite,
    Eq,
    // linear integer arithmetic
    Add,
    Sub,
    Neg,
    Mul,
    Lt,
    Le,
    Gt,
    Ge,
    // bitvectors
    BvAdd,
    BvSub,
    BvMul,
    BvNeg,
    BvAnd,
    BvOr,
    BvXor,
    BvNot,
    BvShl,
    BvLshr,
    BvAshr,
    BvUlt,
    BvUle,
    BvUgt,
    BvUge,
    BvSlt,
    BvSle,
    BvSgt,
    BvSge,
    Concat,
    Extract { hi: u32, lo: u32 },
    ZeroExtend(u32),
    SignExtend(u32),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Term {
    Var(String, Sort),
    IntLit(BigInt),
    /// Value and width; the value is kept below `2^width`.
    BvLit(BigUint, u32),
    BoolLit(bool),
    App(Op, Vec<Term>),
}

impl Term {
    pub fn var(name: impl Into<String>, sort: Sort) -> Term {
        Term::Var(name.into(), sort)
    }

    pub fn int(v: i64) -> Term {
        Term::IntLit(BigInt::from(v))
    }

    pub fn bv(v: u64, width: u32) -> Term {
        Term::BvLit(BigUint::from(v), width)
    }

    pub fn is_true(&self) -> bool {
        matches!(self, Term::BoolLit(true))
    }

    /// Binary equality of two same-sorted terms.
    pub fn eq(a: Term, b: Term) -> Term {
        Term::App(Op::Eq, vec![a, b])
    }

    /// Conjunction; collapses the empty and singleton cases.
    pub fn and(mut conjuncts: Vec<Term>) -> Term {
        conjuncts.retain(|t| !t.is_true());
        match conjuncts.len() {
            0 => Term::BoolLit(true),
            1 => conjuncts.pop().unwrap(),
            _ => Term::App(Op::And, conjuncts),
        }
    }

    /// Top-level conjuncts, with nested and-trees flattened.
    pub fn conjuncts(&self) -> Vec<&Term> {
        match self {
            Term::App(Op::And, children) => children.iter().flat_map(|c| c.conjuncts()).collect(),
            other => vec![other],
        }
    }

    pub fn free_vars(&self, out: &mut HashSet<(String, Sort)>) {
        match self {
            Term::Var(n, s) => {
                out.insert((n.clone(), *s));
            }
            Term::App(_, children) => {
                for c in children {
                    c.free_vars(out);
                }
            }
            _ => {}
        }
    }
}

/// Computes the sort of a term, checking well-sortedness of every
/// application along the way.
pub fn sort_of(term: &Term) -> Result<Sort, ChcError> {
    match term {
        Term::Var(_, s) => Ok(*s),
        Term::IntLit(_) => Ok(Sort::Int),
        Term::BvLit(v, w) => {
            if *w == 0 {
                return Err(ChcError::Sort("bitvector width must be at least 1".into()));
            }
            if v.bits() > u64::from(*w) {
                return Err(ChcError::Sort(format!(
                    "bitvector literal {v} does not fit width {w}"
                )));
            }
            Ok(Sort::BitVec(*w))
        }
        Term::BoolLit(_) => Ok(Sort::Bool),
        Term::App(op, children) => {
            let sorts = children
                .iter()
                .map(sort_of)
                .collect::<Result<Vec<_>, _>>()?;
            op_result_sort(*op, &sorts, children)
        }
    }
}

fn expect_arity(op: Op, sorts: &[Sort], n: usize) -> Result<(), ChcError> {
    if sorts.len() != n {
        return Err(ChcError::Arity(format!(
            "{op:?} expects {n} operands, got {}",
            sorts.len()
        )));
    }
    Ok(())
}

fn all_of(op: Op, sorts: &[Sort], want: Sort) -> Result<(), ChcError> {
    for s in sorts {
        if *s != want {
            return Err(ChcError::Sort(format!(
                "{op:?} expects {want} operands, got {s}"
            )));
        }
    }
    Ok(())
}

fn bv_operands(op: Op, sorts: &[Sort]) -> Result<u32, ChcError> {
    let Sort::BitVec(w) = sorts[0] else {
        return Err(ChcError::Sort(format!(
            "{op:?} expects bitvector operands, got {}",
            sorts[0]
        )));
    };
    all_of(op, sorts, Sort::BitVec(w))?;
    Ok(w)
}

fn op_result_sort(op: Op, sorts: &[Sort], children: &[Term]) -> Result<Sort, ChcError> {
    use Op::*;
    match op {
        And | Or => {
            if sorts.len() < 2 {
                return Err(ChcError::Arity(format!("{op:?} expects at least 2 operands")));
            }
            all_of(op, sorts, Sort::Bool)?;
            Ok(Sort::Bool)
        }
        Not => {
            expect_arity(op, sorts, 1)?;
            all_of(op, sorts, Sort::Bool)?;
            Ok(Sort::Bool)
        }
        Implies => {
            expect_arity(op, sorts, 2)?;
            all_of(op, sorts, Sort::Bool)?;
            Ok(Sort::Bool)
        }
        Ite => {
            expect_arity(op, sorts, 3)?;
            if sorts[0] != Sort::Bool {
                return Err(ChcError::Sort("ite condition must be Bool".into()));
            }
            if sorts[1] != sorts[2] {
                return Err(ChcError::Sort("ite branches must share a sort".into()));
            }
            Ok(sorts[1])
        }
        Eq => {
            expect_arity(op, sorts, 2)?;
            if sorts[0] != sorts[1] {
                return Err(ChcError::Sort(format!(
                    "= expects same-sorted operands, got {} and {}",
                    sorts[0], sorts[1]
                )));
            }
            Ok(Sort::Bool)
        }
        Add | Sub => {
            if sorts.len() < 2 {
                return Err(ChcError::Arity(format!("{op:?} expects at least 2 operands")));
            }
            all_of(op, sorts, Sort::Int)?;
            Ok(Sort::Int)
        }
        Neg => {
            expect_arity(op, sorts, 1)?;
            all_of(op, sorts, Sort::Int)?;
            Ok(Sort::Int)
        }
        Mul => {
            if sorts.len() < 2 {
                return Err(ChcError::Arity("* expects at least 2 operands".into()));
            }
            all_of(op, sorts, Sort::Int)?;
            let non_literal = children
                .iter()
                .filter(|c| !matches!(c, Term::IntLit(_)))
                .count();
            if non_literal > 1 {
                return Err(ChcError::Unsupported(
                    "non-linear multiplication (at most one non-literal factor)".into(),
                ));
            }
            Ok(Sort::Int)
        }
        Lt | Le | Gt | Ge => {
            expect_arity(op, sorts, 2)?;
            all_of(op, sorts, Sort::Int)?;
            Ok(Sort::Bool)
        }
        BvAdd | BvSub | BvMul | BvAnd | BvOr | BvXor | BvShl | BvLshr | BvAshr => {
            if sorts.len() != 2 {
                return Err(ChcError::Arity(format!("{op:?} expects 2 operands")));
            }
            let w = bv_operands(op, sorts)?;
            Ok(Sort::BitVec(w))
        }
        BvNeg | BvNot => {
            expect_arity(op, sorts, 1)?;
            let w = bv_operands(op, sorts)?;
            Ok(Sort::BitVec(w))
        }
        BvUlt | BvUle | BvUgt | BvUge | BvSlt | BvSle | BvSgt | BvSge => {
            expect_arity(op, sorts, 2)?;
            bv_operands(op, sorts)?;
            Ok(Sort::Bool)
        }
        Concat => {
            expect_arity(op, sorts, 2)?;
            let (Sort::BitVec(w1), Sort::BitVec(w2)) = (sorts[0], sorts[1]) else {
                return Err(ChcError::Sort("concat expects bitvector operands".into()));
            };
            Ok(Sort::BitVec(w1 + w2))
        }
        Extract { hi, lo } => {
            expect_arity(op, sorts, 1)?;
            let Sort::BitVec(w) = sorts[0] else {
                return Err(ChcError::Sort("extract expects a bitvector operand".into()));
            };
            if lo > hi || hi >= w {
                return Err(ChcError::Sort(format!(
                    "extract [{hi}:{lo}] out of range for width {w}"
                )));
            }
            Ok(Sort::BitVec(hi - lo + 1))
        }
        ZeroExtend(k) | SignExtend(k) => {
            expect_arity(op, sorts, 1)?;
            let Sort::BitVec(w) = sorts[0] else {
                return Err(ChcError::Sort("extend expects a bitvector operand".into()));
            };
            Ok(Sort::BitVec(w + k))
        }
    }
}

/// Index of a predicate declaration within [`ChcSystem::decls`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PredId(pub usize);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PredicateDecl {
    pub name: String,
    pub arg_sorts: Vec<Sort>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PredicateApp {
    pub pred: PredId,
    pub args: Vec<Term>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RuleHead {
    Head(PredicateApp),
    Query,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rule {
    /// Universally quantified variables, in declaration order.
    pub vars: Vec<(String, Sort)>,
    pub constraint: Term,
    pub premise: Vec<PredicateApp>,
    pub head: RuleHead,
}

impl Rule {
    pub fn is_query(&self) -> bool {
        matches!(self.head, RuleHead::Query)
    }

    /// A rule with no premise applications and a predicate head.
    pub fn is_atom(&self) -> bool {
        self.premise.is_empty() && !self.is_query()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TheoryClass {
    Core,
    Lia,
    Bv(BTreeSet<u32>),
}

impl fmt::Display for TheoryClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TheoryClass::Core => write!(f, "Core"),
            TheoryClass::Lia => write!(f, "LIA"),
            TheoryClass::Bv(widths) => {
                let ws: Vec<String> = widths.iter().map(|w| w.to_string()).collect();
                write!(f, "BV({})", ws.join(","))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChcSystem {
    pub decls: Vec<PredicateDecl>,
    pub rules: Vec<Rule>,
    pub theory: TheoryClass,
}

impl ChcSystem {
    pub fn decl(&self, id: PredId) -> &PredicateDecl {
        &self.decls[id.0]
    }

    pub fn query_count(&self) -> usize {
        self.rules.iter().filter(|r| r.is_query()).count()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Linearity {
    Linear,
    NonLinear,
}

/// A system is non-linear iff some rule carries two or more premise
/// applications.
pub fn classify_linearity(system: &ChcSystem) -> Linearity {
    if system.rules.iter().any(|r| r.premise.len() >= 2) {
        Linearity::NonLinear
    } else {
        Linearity::Linear
    }
}

/// Determines the theory class from the sorts occurring anywhere in the
/// system. Mixing Int and BitVec is rejected.
pub fn detect_theory(system: &ChcSystem) -> Result<TheoryClass, ChcError> {
    let mut widths = BTreeSet::new();
    let mut has_int = false;
    let mut note = |s: Sort| match s {
        Sort::Int => has_int = true,
        Sort::BitVec(w) => {
            widths.insert(w);
        }
        Sort::Bool => {}
    };
    for d in &system.decls {
        for s in &d.arg_sorts {
            note(*s);
        }
    }
    for r in &system.rules {
        for (_, s) in &r.vars {
            note(*s);
        }
        let mut fv = HashSet::new();
        r.constraint.free_vars(&mut fv);
        note_term_sorts(&r.constraint, &mut note);
        for app in r.premise.iter().chain(match &r.head {
            RuleHead::Head(app) => Some(app),
            RuleHead::Query => None,
        }) {
            for a in &app.args {
                note_term_sorts(a, &mut note);
            }
        }
    }
    if has_int && !widths.is_empty() {
        return Err(ChcError::MixedTheory);
    }
    Ok(if !widths.is_empty() {
        TheoryClass::Bv(widths)
    } else if has_int {
        TheoryClass::Lia
    } else {
        TheoryClass::Core
    })
}

fn note_term_sorts(term: &Term, note: &mut impl FnMut(Sort)) {
    match term {
        Term::Var(_, s) => note(*s),
        Term::IntLit(_) => note(Sort::Int),
        Term::BvLit(_, w) => note(Sort::BitVec(*w)),
        Term::BoolLit(_) => {}
        Term::App(_, children) => {
            for c in children {
                note_term_sorts(c, note);
            }
        }
    }
}

/// Rewrites every rule so its head arguments are pairwise-distinct variables;
/// original head-argument terms become equality conjuncts in the constraint.
/// Idempotent, and preserves rule count, query count, linearity, and theory.
pub fn normalize(system: &ChcSystem) -> ChcSystem {
    let mut out = system.clone();
    for rule in &mut out.rules {
        let RuleHead::Head(app) = &rule.head else {
            continue;
        };
        let already_normal = {
            let mut seen = HashSet::new();
            app.args
                .iter()
                .all(|a| matches!(a, Term::Var(n, _) if seen.insert(n.clone())))
        };
        if already_normal {
            continue;
        }
        let taken: HashSet<String> = rule.vars.iter().map(|(n, _)| n.clone()).collect();
        let mut fresh = Vec::new();
        let mut eqs = Vec::new();
        let mut counter = 0usize;
        for arg in &app.args {
            let sort = sort_of(arg).expect("head argument of a validated rule is well-sorted");
            let name = loop {
                let cand = format!("hv{counter}");
                counter += 1;
                if !taken.contains(&cand) {
                    break cand;
                }
            };
            eqs.push(Term::eq(Term::var(name.clone(), sort), arg.clone()));
            fresh.push((name, sort));
        }
        let mut conjuncts = vec![std::mem::replace(&mut rule.constraint, Term::BoolLit(true))];
        conjuncts.extend(eqs);
        rule.constraint = Term::and(conjuncts);
        let new_args = fresh
            .iter()
            .map(|(n, s)| Term::var(n.clone(), *s))
            .collect();
        rule.vars.extend(fresh);
        let pred = app.pred;
        rule.head = RuleHead::Head(PredicateApp {
            pred,
            args: new_args,
        });
    }
    out
}

/// Structural validity check: predicate references, arities, argument sorts,
/// free-variable closure, and well-sortedness of every term.
pub fn validate(system: &ChcSystem) -> Result<(), ChcError> {
    let mut names = HashSet::new();
    for d in &system.decls {
        if !names.insert(d.name.clone()) {
            return Err(ChcError::Sort(format!(
                "duplicate predicate declaration {}",
                d.name
            )));
        }
    }
    for rule in &system.rules {
        let scope: HashMap<&str, Sort> =
            rule.vars.iter().map(|(n, s)| (n.as_str(), *s)).collect();
        let check_closed = |t: &Term| -> Result<(), ChcError> {
            sort_of(t)?;
            let mut fv = HashSet::new();
            t.free_vars(&mut fv);
            for (n, vs) in fv {
                match scope.get(n.as_str()) {
                    Some(ss) if *ss == vs => {}
                    Some(_) => {
                        return Err(ChcError::Sort(format!(
                            "variable {n} used at a different sort than declared"
                        )))
                    }
                    None => {
                        return Err(ChcError::Sort(format!(
                            "free variable {n} not bound by the rule quantifier"
                        )))
                    }
                }
            }
            Ok(())
        };
        let csort = sort_of(&rule.constraint)?;
        if csort != Sort::Bool {
            return Err(ChcError::Sort("rule constraint must be Bool".into()));
        }
        check_closed(&rule.constraint)?;
        let check_app = |app: &PredicateApp| -> Result<(), ChcError> {
            let decl = system
                .decls
                .get(app.pred.0)
                .ok_or_else(|| ChcError::Sort("dangling predicate reference".into()))?;
            if decl.arg_sorts.len() != app.args.len() {
                return Err(ChcError::Arity(format!(
                    "{} expects {} arguments, got {}",
                    decl.name,
                    decl.arg_sorts.len(),
                    app.args.len()
                )));
            }
            for (arg, want) in app.args.iter().zip(&decl.arg_sorts) {
                let got = sort_of(arg)?;
                if got != *want {
                    return Err(ChcError::Sort(format!(
                        "argument of {} has sort {got}, expected {want}",
                        decl.name
                    )));
                }
            }
            Ok(())
        };
        for app in &rule.premise {
            check_app(app)?;
            for a in &app.args {
                check_closed(a)?;
            }
        }
        if let RuleHead::Head(app) = &rule.head {
            check_app(app)?;
            for a in &app.args {
                check_closed(a)?;
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lia_example() -> ChcSystem {
        // A(x) <= x = 1 ; A(x) <= A(x - 1) ; false <= A(11)
        let a = PredId(0);
        let x = || Term::var("x", Sort::Int);
        ChcSystem {
            decls: vec![PredicateDecl {
                name: "A".into(),
                arg_sorts: vec![Sort::Int],
            }],
            rules: vec![
                Rule {
                    vars: vec![("x".into(), Sort::Int)],
                    constraint: Term::eq(x(), Term::int(1)),
                    premise: vec![],
                    head: RuleHead::Head(PredicateApp {
                        pred: a,
                        args: vec![x()],
                    }),
                },
                Rule {
                    vars: vec![("x".into(), Sort::Int)],
                    constraint: Term::BoolLit(true),
                    premise: vec![PredicateApp {
                        pred: a,
                        args: vec![Term::App(Op::Sub, vec![x(), Term::int(1)])],
                    }],
                    head: RuleHead::Head(PredicateApp {
                        pred: a,
                        args: vec![x()],
                    }),
                },
                Rule {
                    vars: vec![],
                    constraint: Term::BoolLit(true),
                    premise: vec![PredicateApp {
                        pred: a,
                        args: vec![Term::int(11)],
                    }],
                    head: RuleHead::Query,
                },
            ],
            theory: TheoryClass::Lia,
        }
    }

    #[test]
    fn linearity_of_running_example() {
        assert_eq!(classify_linearity(&lia_example()), Linearity::Linear);
    }

    #[test]
    fn two_premise_rule_is_nonlinear() {
        let mut sys = lia_example();
        let app = sys.rules[1].premise[0].clone();
        sys.rules[1].premise.push(app);
        assert_eq!(classify_linearity(&sys), Linearity::NonLinear);
    }

    #[test]
    fn empty_system_is_linear() {
        let sys = ChcSystem {
            decls: vec![],
            rules: vec![],
            theory: TheoryClass::Core,
        };
        assert_eq!(classify_linearity(&sys), Linearity::Linear);
    }

    #[test]
    fn theory_of_running_example_is_lia() {
        assert_eq!(detect_theory(&lia_example()).unwrap(), TheoryClass::Lia);
    }

    #[test]
    fn boolean_only_system_is_core() {
        let sys = ChcSystem {
            decls: vec![PredicateDecl {
                name: "P".into(),
                arg_sorts: vec![Sort::Bool],
            }],
            rules: vec![Rule {
                vars: vec![("b".into(), Sort::Bool)],
                constraint: Term::var("b", Sort::Bool),
                premise: vec![],
                head: RuleHead::Head(PredicateApp {
                    pred: PredId(0),
                    args: vec![Term::var("b", Sort::Bool)],
                }),
            }],
            theory: TheoryClass::Core,
        };
        assert_eq!(detect_theory(&sys).unwrap(), TheoryClass::Core);
    }

    #[test]
    fn mixed_theory_is_rejected() {
        let mut sys = lia_example();
        sys.decls.push(PredicateDecl {
            name: "B".into(),
            arg_sorts: vec![Sort::BitVec(4)],
        });
        assert!(matches!(
            detect_theory(&sys).unwrap_err(),
            ChcError::MixedTheory
        ));
    }

    #[test]
    fn normalize_rewrites_compound_head_args() {
        // head A(x + 1) becomes head A(hv0) with hv0 = x + 1 in the constraint
        let mut sys = lia_example();
        sys.rules[0].head = RuleHead::Head(PredicateApp {
            pred: PredId(0),
            args: vec![Term::App(
                Op::Add,
                vec![Term::var("x", Sort::Int), Term::int(1)],
            )],
        });
        let normed = normalize(&sys);
        let RuleHead::Head(app) = &normed.rules[0].head else {
            panic!()
        };
        assert_eq!(app.args, vec![Term::var("hv0", Sort::Int)]);
        let conj = normed.rules[0].constraint.conjuncts().len();
        assert_eq!(conj, 2);
        validate(&normed).unwrap();
    }

    #[test]
    fn normalize_is_identity_on_normal_systems() {
        let sys = lia_example();
        assert_eq!(normalize(&sys), sys);
    }

    #[test]
    fn normalize_splits_repeated_head_vars() {
        // head A2(x, x) becomes A2(hv0, hv1) with hv0 = x and hv1 = x
        let sys = ChcSystem {
            decls: vec![PredicateDecl {
                name: "A2".into(),
                arg_sorts: vec![Sort::Int, Sort::Int],
            }],
            rules: vec![Rule {
                vars: vec![("x".into(), Sort::Int)],
                constraint: Term::BoolLit(true),
                premise: vec![],
                head: RuleHead::Head(PredicateApp {
                    pred: PredId(0),
                    args: vec![Term::var("x", Sort::Int), Term::var("x", Sort::Int)],
                }),
            }],
            theory: TheoryClass::Lia,
        };
        let normed = normalize(&sys);
        let RuleHead::Head(app) = &normed.rules[0].head else {
            panic!()
        };
        assert_eq!(
            app.args,
            vec![Term::var("hv0", Sort::Int), Term::var("hv1", Sort::Int)]
        );
        assert_eq!(normed.rules[0].constraint.conjuncts().len(), 2);
        assert_eq!(normalize(&normed), normed);
    }

    #[test]
    fn sort_checker_rejects_ill_typed_apps() {
        let bad = Term::App(Op::Add, vec![Term::int(1), Term::BoolLit(true)]);
        assert!(matches!(sort_of(&bad).unwrap_err(), ChcError::Sort(_)));
        let nonlin = Term::App(
            Op::Mul,
            vec![Term::var("x", Sort::Int), Term::var("y", Sort::Int)],
        );
        assert!(matches!(
            sort_of(&nonlin).unwrap_err(),
            ChcError::Unsupported(_)
        ));
    }
}
