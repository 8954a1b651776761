//! Ground evaluation of constraint terms.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::GroundValue;
use crate::chc::{Op, Term};

/// Evaluated value. Int is exact; bitvectors are kept masked to their width.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Ev {
    Bool(bool),
    Int(BigInt),
    Bv(u64, u32),
}

impl Ev {
    pub fn truthy(&self) -> bool {
        matches!(self, Ev::Bool(true))
    }
}

impl From<&GroundValue> for Ev {
    fn from(v: &GroundValue) -> Ev {
        match v {
            GroundValue::Bool(b) => Ev::Bool(*b),
            GroundValue::Int(i) => Ev::Int(BigInt::from(*i)),
            GroundValue::Bv(v, w) => Ev::Bv(*v, *w),
        }
    }
}

fn mask(w: u32) -> u64 {
    if w >= 64 {
        u64::MAX
    } else {
        (1u64 << w) - 1
    }
}

fn to_signed(v: u64, w: u32) -> i64 {
    let shift = 64 - w;
    ((v << shift) as i64) >> shift
}

/// Evaluates a well-sorted term under a total assignment. When `overflow` is
/// provided, any integer intermediate outside the 32-bit `int` range sets the
/// flag, mirroring what the emitted C would compute with the default carrier.
pub(crate) fn eval_with(
    term: &Term,
    asg: &HashMap<&str, GroundValue>,
    overflow: &mut Option<&mut bool>,
) -> Ev {
    match term {
        Term::Var(name, _) => Ev::from(
            asg.get(name.as_str())
                .unwrap_or_else(|| panic!("unbound variable {name} during evaluation")),
        ),
        Term::IntLit(v) => {
            note_int(v, overflow);
            Ev::Int(v.clone())
        }
        Term::BvLit(v, w) => Ev::Bv(v.to_u64().expect("literal fits width <= 64"), *w),
        Term::BoolLit(b) => Ev::Bool(*b),
        Term::App(op, children) => {
            let vs: Vec<Ev> = children
                .iter()
                .map(|c| eval_with(c, asg, overflow))
                .collect();
            apply(*op, vs, overflow)
        }
    }
}

pub(crate) fn eval(term: &Term, asg: &HashMap<&str, GroundValue>) -> Ev {
    eval_with(term, asg, &mut None)
}

fn note_int(v: &BigInt, overflow: &mut Option<&mut bool>) {
    if let Some(flag) = overflow {
        if *v > BigInt::from(i32::MAX) || *v < BigInt::from(i32::MIN) {
            **flag = true;
        }
    }
}

fn apply(op: Op, vs: Vec<Ev>, overflow: &mut Option<&mut bool>) -> Ev {
    use Op::*;
    let as_bool = |e: &Ev| match e {
        Ev::Bool(b) => *b,
        _ => unreachable!("Bool operand expected"),
    };
    let as_int = |e: &Ev| match e {
        Ev::Int(i) => i.clone(),
        _ => unreachable!("Int operand expected"),
    };
    let as_bv = |e: &Ev| match e {
        Ev::Bv(v, w) => (*v, *w),
        _ => unreachable!("bitvector operand expected"),
    };
    let int_result = |v: BigInt, overflow: &mut Option<&mut bool>| {
        note_int(&v, overflow);
        Ev::Int(v)
    };
    match op {
        And => Ev::Bool(vs.iter().all(as_bool)),
        Or => Ev::Bool(vs.iter().any(as_bool)),
        Not => Ev::Bool(!as_bool(&vs[0])),
        Implies => Ev::Bool(!as_bool(&vs[0]) || as_bool(&vs[1])),
        Ite => {
            if as_bool(&vs[0]) {
                vs[1].clone()
            } else {
                vs[2].clone()
            }
        }
        Eq => Ev::Bool(vs[0] == vs[1]),
        Add => int_result(vs.iter().map(as_int).sum(), overflow),
        Sub => {
            let mut it = vs.iter();
            let first = as_int(it.next().unwrap());
            int_result(it.fold(first, |acc, v| acc - as_int(v)), overflow)
        }
        Neg => int_result(-as_int(&vs[0]), overflow),
        Mul => int_result(vs.iter().map(as_int).product(), overflow),
        Lt => Ev::Bool(as_int(&vs[0]) < as_int(&vs[1])),
        Le => Ev::Bool(as_int(&vs[0]) <= as_int(&vs[1])),
        Gt => Ev::Bool(as_int(&vs[0]) > as_int(&vs[1])),
        Ge => Ev::Bool(as_int(&vs[0]) >= as_int(&vs[1])),
        BvAdd | BvSub | BvMul | BvAnd | BvOr | BvXor => {
            let (a, w) = as_bv(&vs[0]);
            let (b, _) = as_bv(&vs[1]);
            let r = match op {
                BvAdd => a.wrapping_add(b),
                BvSub => a.wrapping_sub(b),
                BvMul => a.wrapping_mul(b),
                BvAnd => a & b,
                BvOr => a | b,
                _ => a ^ b,
            };
            Ev::Bv(r & mask(w), w)
        }
        BvNeg => {
            let (a, w) = as_bv(&vs[0]);
            Ev::Bv(a.wrapping_neg() & mask(w), w)
        }
        BvNot => {
            let (a, w) = as_bv(&vs[0]);
            Ev::Bv(!a & mask(w), w)
        }
        BvShl => {
            let (a, w) = as_bv(&vs[0]);
            let (s, _) = as_bv(&vs[1]);
            if s >= u64::from(w) {
                Ev::Bv(0, w)
            } else {
                Ev::Bv((a << s) & mask(w), w)
            }
        }
        BvLshr => {
            let (a, w) = as_bv(&vs[0]);
            let (s, _) = as_bv(&vs[1]);
            if s >= u64::from(w) {
                Ev::Bv(0, w)
            } else {
                Ev::Bv(a >> s, w)
            }
        }
        BvAshr => {
            let (a, w) = as_bv(&vs[0]);
            let (s, _) = as_bv(&vs[1]);
            let sa = to_signed(a, w);
            let shifted = if s >= u64::from(w) {
                if sa < 0 {
                    -1
                } else {
                    0
                }
            } else {
                sa >> s
            };
            Ev::Bv((shifted as u64) & mask(w), w)
        }
        BvUlt => cmp_u(&vs, |a, b| a < b),
        BvUle => cmp_u(&vs, |a, b| a <= b),
        BvUgt => cmp_u(&vs, |a, b| a > b),
        BvUge => cmp_u(&vs, |a, b| a >= b),
        BvSlt => cmp_s(&vs, |a, b| a < b),
        BvSle => cmp_s(&vs, |a, b| a <= b),
        BvSgt => cmp_s(&vs, |a, b| a > b),
        BvSge => cmp_s(&vs, |a, b| a >= b),
        Concat => {
            let (a, w1) = as_bv(&vs[0]);
            let (b, w2) = as_bv(&vs[1]);
            Ev::Bv((a << w2) | b, w1 + w2)
        }
        Extract { hi, lo } => {
            let (a, _) = as_bv(&vs[0]);
            Ev::Bv((a >> lo) & mask(hi - lo + 1), hi - lo + 1)
        }
        ZeroExtend(k) => {
            let (a, w) = as_bv(&vs[0]);
            Ev::Bv(a, w + k)
        }
        SignExtend(k) => {
            let (a, w) = as_bv(&vs[0]);
            let v = to_signed(a, w) as u64;
            Ev::Bv(v & mask(w + k), w + k)
        }
    }
}

fn cmp_u(vs: &[Ev], f: impl Fn(u64, u64) -> bool) -> Ev {
    let (Ev::Bv(a, _), Ev::Bv(b, _)) = (&vs[0], &vs[1]) else {
        unreachable!("bitvector operands expected")
    };
    Ev::Bool(f(*a, *b))
}

fn cmp_s(vs: &[Ev], f: impl Fn(i64, i64) -> bool) -> Ev {
    let (Ev::Bv(a, w), Ev::Bv(b, _)) = (&vs[0], &vs[1]) else {
        unreachable!("bitvector operands expected")
    };
    Ev::Bool(f(to_signed(*a, *w), to_signed(*b, *w)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chc::Sort;

    #[test]
    fn bitvector_arithmetic_wraps() {
        let t = Term::App(Op::BvAdd, vec![Term::bv(15, 4), Term::bv(3, 4)]);
        assert_eq!(eval(&t, &HashMap::new()), Ev::Bv(2, 4));
    }

    #[test]
    fn signed_bv_comparison() {
        // 0b1111 is -1 signed, so slt 0
        let t = Term::App(Op::BvSlt, vec![Term::bv(15, 4), Term::bv(0, 4)]);
        assert_eq!(eval(&t, &HashMap::new()), Ev::Bool(true));
    }

    #[test]
    fn ashr_fills_sign() {
        let t = Term::App(Op::BvAshr, vec![Term::bv(0b1010, 4), Term::bv(1, 4)]);
        assert_eq!(eval(&t, &HashMap::new()), Ev::Bv(0b1101, 4));
    }

    #[test]
    fn overflow_flag_tracks_int_range() {
        let mut flag = false;
        let big = Term::App(
            Op::Mul,
            vec![Term::int(1 << 30), Term::int(4)],
        );
        let asg = HashMap::new();
        eval_with(&big, &asg, &mut Some(&mut flag));
        assert!(flag);

        let mut flag2 = false;
        let small = Term::App(Op::Add, vec![Term::int(1), Term::int(2)]);
        eval_with(&small, &asg, &mut Some(&mut flag2));
        assert!(!flag2);
    }

    #[test]
    fn variables_resolve_through_assignment() {
        let mut asg = HashMap::new();
        asg.insert("x", GroundValue::Int(5));
        let t = Term::App(Op::Sub, vec![Term::var("x", Sort::Int), Term::int(1)]);
        assert_eq!(eval(&t, &asg), Ev::Int(BigInt::from(4)));
    }
}
