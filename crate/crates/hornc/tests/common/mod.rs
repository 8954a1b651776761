//! Shared helpers for integration tests: a reference brute-force solver, a
//! seeded random system generator, and a compile-and-replay harness.

#![allow(dead_code)]

use std::collections::HashSet;
use std::path::Path;
use std::process::Command;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use hornc::chc::{
    detect_theory, ChcSystem, Op, PredId, PredicateApp, PredicateDecl, Rule, RuleHead, Sort, Term,
};
use hornc::codegen::CProgram;

/// The running example: a counter from 1 that must never reach 11, except the
/// query makes 11 reachable, so the system is unsatisfiable.
pub const COUNTER_SYSTEM: &str = r#"
(set-logic HORN)
(declare-fun A (Int) Bool)
(assert (forall ((x Int)) (=> (= x 1) (A x))))
(assert (forall ((x Int)) (=> (A (- x 1)) (A x))))
(assert (forall ((x Int)) (=> (and (A x) (= x 11)) false)))
(check-sat)
"#;

// ---------------------------------------------------------------------------
// Reference solver: naive bottom-up enumeration for all-BitVec(4) systems.
//
// Deliberately built from scratch (own value type, own evaluator, no frontier
// bookkeeping, full re-scan every pass) so that agreement with the library's
// semi-naive oracle is meaningful.
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NaiveVerdict {
    Sat,
    Unsat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum NV {
    B(bool),
    X(u8), // 4-bit value, kept masked
}

fn nv_eval(term: &Term, vars: &[(String, Sort)], asg: &[u8]) -> NV {
    match term {
        Term::Var(name, _) => {
            let i = vars
                .iter()
                .position(|(n, _)| n == name)
                .expect("bound variable");
            NV::X(asg[i])
        }
        Term::BvLit(v, _) => NV::X((v.iter_u32_digits().next().unwrap_or(0) as u8) & 0xf),
        Term::BoolLit(b) => NV::B(*b),
        Term::IntLit(_) => panic!("reference solver only handles BitVec(4) systems"),
        Term::App(op, args) => {
            let vs: Vec<NV> = args.iter().map(|a| nv_eval(a, vars, asg)).collect();
            let x = |i: usize| match vs[i] {
                NV::X(v) => v,
                NV::B(_) => panic!("bitvector operand expected"),
            };
            let b = |i: usize| match vs[i] {
                NV::B(v) => v,
                NV::X(_) => panic!("boolean operand expected"),
            };
            let sgn = |v: u8| ((v << 4) as i8) >> 4;
            match op {
                Op::And => NV::B((0..vs.len()).all(b)),
                Op::Or => NV::B((0..vs.len()).any(b)),
                Op::Not => NV::B(!b(0)),
                Op::Eq => NV::B(vs[0] == vs[1]),
                Op::BvAdd => NV::X(x(0).wrapping_add(x(1)) & 0xf),
                Op::BvSub => NV::X(x(0).wrapping_sub(x(1)) & 0xf),
                Op::BvMul => NV::X(x(0).wrapping_mul(x(1)) & 0xf),
                Op::BvAnd => NV::X(x(0) & x(1)),
                Op::BvOr => NV::X(x(0) | x(1)),
                Op::BvXor => NV::X(x(0) ^ x(1)),
                Op::BvNot => NV::X(!x(0) & 0xf),
                Op::BvNeg => NV::X(x(0).wrapping_neg() & 0xf),
                Op::BvUlt => NV::B(x(0) < x(1)),
                Op::BvUle => NV::B(x(0) <= x(1)),
                Op::BvSlt => NV::B(sgn(x(0)) < sgn(x(1))),
                other => panic!("reference solver does not handle {other:?}"),
            }
        }
    }
}

fn nv_truthy(term: &Term, vars: &[(String, Sort)], asg: &[u8]) -> bool {
    matches!(nv_eval(term, vars, asg), NV::B(true))
}

fn nv_fact(app: &PredicateApp, vars: &[(String, Sort)], asg: &[u8]) -> (usize, Vec<u8>) {
    let args = app
        .args
        .iter()
        .map(|a| match nv_eval(a, vars, asg) {
            NV::X(v) => v,
            NV::B(_) => panic!("boolean predicate argument unsupported here"),
        })
        .collect();
    (app.pred.0, args)
}

/// Every assignment of 4-bit values to `n` variables.
fn all_assignments(n: usize) -> Vec<Vec<u8>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|a| {
                (0u8..16).map(move |v| {
                    let mut b = a.clone();
                    b.push(v);
                    b
                })
            })
            .collect();
    }
    out
}

pub fn naive_solve(system: &ChcSystem) -> NaiveVerdict {
    let mut facts: HashSet<(usize, Vec<u8>)> = HashSet::new();
    loop {
        let mut changed = false;
        for rule in &system.rules {
            let RuleHead::Head(head) = &rule.head else {
                continue;
            };
            for asg in all_assignments(rule.vars.len()) {
                if !nv_truthy(&rule.constraint, &rule.vars, &asg) {
                    continue;
                }
                if rule
                    .premise
                    .iter()
                    .all(|app| facts.contains(&nv_fact(app, &rule.vars, &asg)))
                    && facts.insert(nv_fact(head, &rule.vars, &asg))
                {
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    for rule in &system.rules {
        if !rule.is_query() {
            continue;
        }
        for asg in all_assignments(rule.vars.len()) {
            if nv_truthy(&rule.constraint, &rule.vars, &asg)
                && rule
                    .premise
                    .iter()
                    .all(|app| facts.contains(&nv_fact(app, &rule.vars, &asg)))
            {
                return NaiveVerdict::Unsat;
            }
        }
    }
    NaiveVerdict::Sat
}

// ---------------------------------------------------------------------------
// Seeded random linear BitVec(4) systems.
// ---------------------------------------------------------------------------

const BV4: Sort = Sort::BitVec(4);

pub fn random_bv4_system(seed: u64) -> ChcSystem {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let npreds = rng.gen_range(1..=3usize);
    let decls: Vec<PredicateDecl> = (0..npreds)
        .map(|i| PredicateDecl {
            name: format!("P{i}"),
            arg_sorts: vec![BV4; rng.gen_range(1..=2usize)],
        })
        .collect();

    let nrules = rng.gen_range(3..=5usize);
    let mut rules = Vec::new();
    for ri in 0..nrules {
        let nvars = rng.gen_range(1..=2usize);
        let vars: Vec<(String, Sort)> = (0..nvars).map(|i| (format!("x{i}"), BV4)).collect();
        // first rule is an atom, last is a query, the rest are random
        let kind = if ri == 0 {
            0
        } else if ri == nrules - 1 {
            2
        } else {
            rng.gen_range(0..3)
        };
        let (premise, head) = match kind {
            0 => (vec![], RuleHead::Head(random_app(&mut rng, &decls, &vars))),
            1 => (
                vec![random_app(&mut rng, &decls, &vars)],
                RuleHead::Head(random_app(&mut rng, &decls, &vars)),
            ),
            _ => (vec![random_app(&mut rng, &decls, &vars)], RuleHead::Query),
        };
        rules.push(Rule {
            constraint: random_constraint(&mut rng, &vars),
            vars,
            premise,
            head,
        });
    }

    let mut system = ChcSystem {
        decls,
        rules,
        theory: hornc::TheoryClass::Core,
    };
    system.theory = detect_theory(&system).expect("generated systems are single-theory");
    system
}

fn random_app(rng: &mut ChaCha8Rng, decls: &[PredicateDecl], vars: &[(String, Sort)]) -> PredicateApp {
    let pred = rng.gen_range(0..decls.len());
    let args = (0..decls[pred].arg_sorts.len())
        .map(|_| random_bv_term(rng, vars, 2))
        .collect();
    PredicateApp {
        pred: PredId(pred),
        args,
    }
}

fn random_bv_term(rng: &mut ChaCha8Rng, vars: &[(String, Sort)], depth: u32) -> Term {
    if depth == 0 || rng.gen_bool(0.4) {
        return if rng.gen_bool(0.6) {
            let (name, sort) = &vars[rng.gen_range(0..vars.len())];
            Term::var(name.clone(), *sort)
        } else {
            Term::bv(rng.gen_range(0..16u64), 4)
        };
    }
    let unary = [Op::BvNot, Op::BvNeg];
    let binary = [Op::BvAdd, Op::BvSub, Op::BvMul, Op::BvAnd, Op::BvOr, Op::BvXor];
    if rng.gen_bool(0.25) {
        Term::App(
            unary[rng.gen_range(0..unary.len())],
            vec![random_bv_term(rng, vars, depth - 1)],
        )
    } else {
        Term::App(
            binary[rng.gen_range(0..binary.len())],
            vec![
                random_bv_term(rng, vars, depth - 1),
                random_bv_term(rng, vars, depth - 1),
            ],
        )
    }
}

fn random_constraint(rng: &mut ChaCha8Rng, vars: &[(String, Sort)]) -> Term {
    let atom = |rng: &mut ChaCha8Rng| {
        let cmp = [Op::Eq, Op::BvUlt, Op::BvUle, Op::BvSlt];
        Term::App(
            cmp[rng.gen_range(0..cmp.len())],
            vec![random_bv_term(rng, vars, 1), random_bv_term(rng, vars, 1)],
        )
    };
    match rng.gen_range(0..4) {
        0 => Term::BoolLit(true),
        1 | 2 => atom(rng),
        _ => {
            let (a, b) = (atom(rng), atom(rng));
            Term::App(Op::And, vec![a, b])
        }
    }
}

// ---------------------------------------------------------------------------
// Compile-and-run harness.
// ---------------------------------------------------------------------------

/// Exit code the stub uses when the program reaches the error location.
pub const EXIT_REACHED: i32 = 107;
/// Exit code when the program asks for more nondet values than scripted.
pub const EXIT_EXHAUSTED: i32 = 99;

/// Stub definitions for `reach_error` and the nondet functions, scripted to
/// return `inputs` in order.
pub fn replay_stub(inputs: &[i64]) -> String {
    let values: Vec<String> = inputs.iter().map(|v| format!("{v}LL")).collect();
    format!(
        r#"#include <stdlib.h>

static long long script[] = {{ {values} }};
static int script_len = {len};
static int pos = 0;

static long long take(void) {{
    if (pos >= script_len) exit({exhausted});
    return script[pos++];
}}

void reach_error(void) {{ exit({reached}); }}

int __VERIFIER_nondet_int(void) {{ return (int)take(); }}
unsigned char __VERIFIER_nondet_uchar(void) {{ return (unsigned char)take(); }}
unsigned short __VERIFIER_nondet_ushort(void) {{ return (unsigned short)take(); }}
unsigned int __VERIFIER_nondet_uint(void) {{ return (unsigned int)take(); }}
unsigned long long __VERIFIER_nondet_ulonglong(void) {{ return (unsigned long long)take(); }}
"#,
        values = if values.is_empty() {
            "0LL".to_string()
        } else {
            values.join(", ")
        },
        len = inputs.len(),
        exhausted = EXIT_EXHAUSTED,
        reached = EXIT_REACHED,
    )
}

/// Compiles `program` together with a scripted stub and runs it, returning
/// the exit code.
pub fn compile_and_replay(program: &CProgram, inputs: &[i64], dir: &Path) -> i32 {
    let prog_path = dir.join("program.c");
    let stub_path = dir.join("stub.c");
    let bin_path = dir.join("replay.bin");
    std::fs::write(&prog_path, &program.source).unwrap();
    std::fs::write(&stub_path, replay_stub(inputs)).unwrap();

    let compile = Command::new("cc")
        .arg(&prog_path)
        .arg(&stub_path)
        .arg("-o")
        .arg(&bin_path)
        .output()
        .expect("cc is available");
    assert!(
        compile.status.success(),
        "compilation failed:\n{}",
        String::from_utf8_lossy(&compile.stderr)
    );

    let run = Command::new(&bin_path).output().expect("binary runs");
    run.status.code().expect("binary exits normally")
}

/// Compiles `source` alone (no linking) and returns the compiler's stderr;
/// empty means warning-clean at default warning levels.
pub fn compile_warnings(source: &str, dir: &Path, name: &str) -> String {
    let c_path = dir.join(format!("{name}.c"));
    let o_path = dir.join(format!("{name}.o"));
    std::fs::write(&c_path, source).unwrap();
    let out = Command::new("cc")
        .arg("-c")
        .arg(&c_path)
        .arg("-o")
        .arg(&o_path)
        .output()
        .expect("cc is available");
    let stderr = String::from_utf8_lossy(&out.stderr).into_owned();
    if !out.status.success() {
        return format!("compilation failed:\n{stderr}");
    }
    stderr
}
