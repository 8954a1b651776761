//! Forward (bottom-up) encoding: a single nonrecursive `main` that simulates
//! fact derivation.
//!
//! State is a predicate selector plus one slot per argument position and sort
//! class, shared across predicates. The selector starts at a sentinel, so
//! premise guards cannot fire before some atom has established a fact; every
//! loop iteration draws a rule index and that rule's quantified variables,
//! then either establishes a head fact or, for a query, jumps to the error
//! location.

use std::collections::{BTreeSet, HashMap};

use super::c_ast::{CExpr, CFunction, CStmt, CUnit};
use super::{
    collect_nondet_externs, emit_term, error_statements, error_symbol, map_sort, nondet_draw,
    unit_frame, CProgram, EmitOptions, Encoding, NameTable,
};
use crate::chc::{classify_linearity, ChcSystem, Linearity, RuleHead, Sort};
use crate::error::CodegenError;

const PRED_NONE: i128 = -1;

pub fn transform_forward(
    system: &ChcSystem,
    opts: &EmitOptions,
) -> Result<CProgram, CodegenError> {
    if classify_linearity(system) != Linearity::Linear {
        return Err(CodegenError::ForwardRequiresLinear);
    }
    // normalize is idempotent, so this is a no-op for already-normal input
    let system = &crate::chc::normalize(system);

    // slot per (argument position, sort), shared across predicates
    let mut position_sorts: Vec<BTreeSet<Sort>> = Vec::new();
    for d in &system.decls {
        for (i, s) in d.arg_sorts.iter().enumerate() {
            if position_sorts.len() <= i {
                position_sorts.resize(i + 1, BTreeSet::new());
            }
            position_sorts[i].insert(*s);
        }
    }
    let mut slot_names: HashMap<(usize, Sort), String> = HashMap::new();
    let mut slot_decls = Vec::new();
    for (i, sorts) in position_sorts.iter().enumerate() {
        for s in sorts {
            let name = format!("s{i}_{}", sort_suffix(*s));
            let spec = map_sort(*s, opts)?;
            slot_decls.push(CStmt::Decl {
                ty: spec.c_name,
                name: name.clone(),
                init: Some(CExpr::Int(0)),
            });
            slot_names.insert((i, *s), name);
        }
    }
    let reserved: Vec<String> = slot_names
        .values()
        .cloned()
        .chain(["pred".to_string(), "sel".to_string()])
        .collect();

    let mut body = vec![CStmt::Decl {
        ty: "int".into(),
        name: "pred".into(),
        init: Some(CExpr::Int(PRED_NONE)),
    }];
    body.extend(slot_decls);

    let has_query = system.query_count() > 0;
    if !has_query {
        // keep the error location present but trivially unreachable
        body.push(CStmt::If {
            cond: CExpr::Int(0),
            then: error_statements(opts.error_style),
            els: vec![],
        });
    }

    // one branch per rule, chained as else-ifs on the drawn selector
    let mut branches: Vec<(CExpr, Vec<CStmt>)> = Vec::new();
    for (ri, rule) in system.rules.iter().enumerate() {
        let mut names = NameTable::new(reserved.iter().cloned());
        let mut env: HashMap<String, String> = HashMap::new();
        let mut stmts = Vec::new();
        for (name, sort) in &rule.vars {
            let cname = names.get(name);
            env.insert(name.clone(), cname.clone());
            stmts.push(CStmt::Decl {
                ty: map_sort(*sort, opts)?.c_name,
                name: cname,
                init: Some(nondet_draw(*sort, opts)?),
            });
        }
        let mut guard = Vec::new();
        for app in &rule.premise {
            guard.push(CExpr::bin(
                "==",
                CExpr::var("pred"),
                CExpr::Int(app.pred.0 as i128),
            ));
            let decl = system.decl(app.pred);
            for (j, (arg, sort)) in app.args.iter().zip(&decl.arg_sorts).enumerate() {
                guard.push(CExpr::bin(
                    "==",
                    CExpr::var(slot_names[&(j, *sort)].clone()),
                    emit_term(arg, &env, opts)?,
                ));
            }
        }
        if !rule.constraint.is_true() {
            guard.push(emit_term(&rule.constraint, &env, opts)?);
        }
        let action = match &rule.head {
            RuleHead::Query => vec![CStmt::Goto("ERR".into())],
            RuleHead::Head(app) => {
                let decl = system.decl(app.pred);
                let mut updates = vec![CStmt::Assign(
                    "pred".into(),
                    CExpr::Int(app.pred.0 as i128),
                )];
                for (j, (arg, sort)) in app.args.iter().zip(&decl.arg_sorts).enumerate() {
                    updates.push(CStmt::Assign(
                        slot_names[&(j, *sort)].clone(),
                        emit_term(arg, &env, opts)?,
                    ));
                }
                updates
            }
        };
        if guard.is_empty() {
            stmts.extend(action);
        } else {
            stmts.push(CStmt::If {
                cond: CExpr::and_all(guard),
                then: action,
                els: vec![],
            });
        }
        branches.push((
            CExpr::bin("==", CExpr::var("sel"), CExpr::Int(ri as i128)),
            stmts,
        ));
    }

    let mut chain: Vec<CStmt> = Vec::new();
    for (cond, stmts) in branches.into_iter().rev() {
        let if_stmt = CStmt::If {
            cond,
            then: stmts,
            els: chain,
        };
        chain = vec![if_stmt];
    }
    let mut loop_body = vec![CStmt::Decl {
        ty: "int".into(),
        name: "sel".into(),
        init: Some(CExpr::call("__VERIFIER_nondet_int", vec![])),
    }];
    loop_body.extend(chain);

    body.push(CStmt::While {
        cond: CExpr::Int(1),
        body: loop_body,
    });
    if has_query {
        body.push(CStmt::Label("ERR".into()));
        body.extend(error_statements(opts.error_style));
    }

    let mut unit = CUnit {
        header_comment: vec![],
        externs: vec![],
        functions: vec![CFunction {
            ret: "int".into(),
            name: "main".into(),
            params: vec![],
            body,
        }],
    };
    let nondets = collect_nondet_externs(&unit);
    let (header, externs) = unit_frame(
        system,
        Encoding::Forward,
        opts,
        &nondets,
        matches!(opts.error_style, super::ErrorStyle::ReachError),
    );
    unit.header_comment = header;
    unit.externs = externs;

    Ok(CProgram {
        source: unit.to_c(),
        ast: unit.clone(),
        encoding: Encoding::Forward,
        recursive: false,
        theory: system.theory.clone(),
        error_symbol: error_symbol(opts.error_style),
        nondet_symbols: nondets,
    })
}

fn sort_suffix(s: Sort) -> String {
    match s {
        Sort::Bool => "b".into(),
        Sort::Int => "i".into(),
        Sort::BitVec(w) => format!("u{w}"),
    }
}
