//! Emits a system back as SMT-LIBv2 text that re-parses to a structurally
//! equal system.

use super::{ChcSystem, Op, PredicateApp, Rule, RuleHead, Term};
use num_traits::Signed;
use std::fmt::Write;

pub fn print_chc(system: &ChcSystem) -> String {
    let mut out = String::from("(set-logic HORN)\n");
    for d in &system.decls {
        let args: Vec<String> = d.arg_sorts.iter().map(|s| s.to_string()).collect();
        let _ = writeln!(
            out,
            "(declare-fun {} ({}) Bool)",
            symbol(&d.name),
            args.join(" ")
        );
    }
    for r in &system.rules {
        let _ = writeln!(out, "(assert {})", rule(system, r));
    }
    out.push_str("(check-sat)\n");
    out
}

fn rule(system: &ChcSystem, r: &Rule) -> String {
    let head = match &r.head {
        RuleHead::Head(app) => pred_app(system, app),
        RuleHead::Query => "false".to_string(),
    };
    let mut body: Vec<String> = r
        .constraint
        .conjuncts()
        .iter()
        .filter(|t| !t.is_true())
        .map(|t| term(t))
        .collect();
    body.extend(r.premise.iter().map(|app| pred_app(system, app)));
    let implication = match body.len() {
        0 => head,
        1 => format!("(=> {} {})", body[0], head),
        _ => format!("(=> (and {}) {})", body.join(" "), head),
    };
    if r.vars.is_empty() {
        implication
    } else {
        let binders: Vec<String> = r
            .vars
            .iter()
            .map(|(n, s)| format!("({} {})", symbol(n), s))
            .collect();
        format!("(forall ({}) {})", binders.join(" "), implication)
    }
}

fn pred_app(system: &ChcSystem, app: &PredicateApp) -> String {
    let name = symbol(&system.decl(app.pred).name);
    if app.args.is_empty() {
        name
    } else {
        let args: Vec<String> = app.args.iter().map(term).collect();
        format!("({} {})", name, args.join(" "))
    }
}

fn term(t: &Term) -> String {
    match t {
        Term::Var(n, _) => symbol(n),
        Term::IntLit(v) => {
            if v.is_negative() {
                format!("(- {})", -v.clone())
            } else {
                v.to_string()
            }
        }
        Term::BvLit(v, w) => format!("(_ bv{v} {w})"),
        Term::BoolLit(b) => b.to_string(),
        Term::App(op, children) => {
            let args: Vec<String> = children.iter().map(term).collect();
            format!("({} {})", op_name(op), args.join(" "))
        }
    }
}

fn op_name(op: &Op) -> String {
    match op {
        Op::And => "and".into(),
        Op::Or => "or".into(),
        Op::Not => "not".into(),
        Op::Implies => "=>".into(),
        Op::Ite => "ite".into(),
        Op::Eq => "=".into(),
        Op::Add => "+".into(),
        Op::Sub | Op::Neg => "-".into(),
        Op::Mul => "*".into(),
        Op::Lt => "<".into(),
        Op::Le => "<=".into(),
        Op::Gt => ">".into(),
        Op::Ge => ">=".into(),
        Op::BvAdd => "bvadd".into(),
        Op::BvSub => "bvsub".into(),
        Op::BvMul => "bvmul".into(),
        Op::BvNeg => "bvneg".into(),
        Op::BvAnd => "bvand".into(),
        Op::BvOr => "bvor".into(),
        Op::BvXor => "bvxor".into(),
        Op::BvNot => "bvnot".into(),
        Op::BvShl => "bvshl".into(),
        Op::BvLshr => "bvlshr".into(),
        Op::BvAshr => "bvashr".into(),
        Op::BvUlt => "bvult".into(),
        Op::BvUle => "bvule".into(),
        Op::BvUgt => "bvugt".into(),
        Op::BvUge => "bvuge".into(),
        Op::BvSlt => "bvslt".into(),
        Op::BvSle => "bvsle".into(),
        Op::BvSgt => "bvsgt".into(),
        Op::BvSge => "bvsge".into(),
        Op::Concat => "concat".into(),
        Op::Extract { hi, lo } => format!("(_ extract {hi} {lo})"),
        Op::ZeroExtend(k) => format!("(_ zero_extend {k})"),
        Op::SignExtend(k) => format!("(_ sign_extend {k})"),
    }
}

/// Quotes a symbol when it is not a simple SMT-LIB symbol.
fn symbol(name: &str) -> String {
    let simple = !name.is_empty()
        && !name.chars().next().unwrap().is_ascii_digit()
        && name
            .chars()
            .all(|c| c.is_ascii_alphanumeric() || "~!@$%^&*_-+=<>.?/".contains(c));
    if simple {
        name.to_string()
    } else {
        format!("|{name}|")
    }
}

#[cfg(test)]
mod tests {
    use super::super::parse_chc;
    use super::*;

    #[test]
    fn empty_system_prints_minimal_script() {
        let sys = parse_chc("(set-logic HORN)(check-sat)").unwrap();
        assert_eq!(print_chc(&sys), "(set-logic HORN)\n(check-sat)\n");
    }

    #[test]
    fn running_example_round_trips() {
        let text = r#"
(set-logic HORN)
(declare-fun A (Int) Bool)
(assert (forall ((x Int)) (=> (= x 1) (A x))))
(assert (forall ((x Int)) (=> (A (- x 1)) (A x))))
(assert (=> (A 11) false))
(check-sat)
"#;
        let sys = parse_chc(text).unwrap();
        let printed = print_chc(&sys);
        let reparsed = parse_chc(&printed).unwrap();
        assert_eq!(sys, reparsed);
    }

    #[test]
    fn bitvector_widths_round_trip() {
        let text = r#"
(set-logic HORN)
(declare-fun A ((_ BitVec 4)) Bool)
(assert (forall ((x (_ BitVec 4))) (=> (= x (_ bv1 4)) (A x))))
(assert (forall ((x (_ BitVec 4))) (=> (A (bvsub x (_ bv1 4))) (A x))))
(assert (forall ((x (_ BitVec 4))) (=> (and (A x) (bvuge x (_ bv11 4))) false)))
(check-sat)
"#;
        let sys = parse_chc(text).unwrap();
        let reparsed = parse_chc(&print_chc(&sys)).unwrap();
        assert_eq!(sys, reparsed);
    }

    #[test]
    fn quoted_symbols_round_trip() {
        let text = r#"
(set-logic HORN)
(declare-fun |my pred| (Int) Bool)
(assert (forall ((x Int)) (=> (= x 0) (|my pred| x))))
(check-sat)
"#;
        let sys = parse_chc(text).unwrap();
        let reparsed = parse_chc(&print_chc(&sys)).unwrap();
        assert_eq!(sys, reparsed);
    }
}
