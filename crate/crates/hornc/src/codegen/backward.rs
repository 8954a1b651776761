//! Backward (top-down) encoding: one recursive function per predicate.
//!
//! Each function tries the rules for its predicate in order, drawing nondet
//! values for non-head variables, testing the constraint, and conjoining a
//! recursive call per premise application. `main` does the same for the
//! query rules and jumps to the error location when one fires.

use std::collections::HashMap;

use super::c_ast::{CExpr, CFunction, CStmt, CUnit};
use super::{
    collect_nondet_externs, emit_term, error_statements, error_symbol, map_sort, nondet_draw,
    unit_frame, CProgram, EmitOptions, Encoding, NameTable,
};
use crate::chc::{ChcSystem, PredId, PredicateApp, Rule, RuleHead, Term};
use crate::error::CodegenError;

pub fn transform_backward(
    system: &ChcSystem,
    opts: &EmitOptions,
) -> Result<CProgram, CodegenError> {
    // normalize is idempotent, so this is a no-op for already-normal input
    let system = &crate::chc::normalize(system);
    let mut fn_names = NameTable::new([]);
    let fns: Vec<String> = system
        .decls
        .iter()
        .map(|d| fn_names.get(&d.name))
        .collect();

    let mut functions = Vec::new();
    for (pi, decl) in system.decls.iter().enumerate() {
        let rules: Vec<&Rule> = system
            .rules
            .iter()
            .filter(|r| matches!(&r.head, RuleHead::Head(app) if app.pred == PredId(pi)))
            .collect();

        // parameter names follow the first rule's head variables when possible
        let mut param_table = NameTable::new(fns.iter().cloned());
        let params: Vec<String> = (0..decl.arg_sorts.len())
            .map(|j| {
                let preferred = rules.first().and_then(|r| head_var(r, j));
                match preferred {
                    Some(v) => param_table.get(&v),
                    None => param_table.get(&format!("p{j}")),
                }
            })
            .collect();

        let mut body = Vec::new();
        for rule in &rules {
            body.push(rule_branch(
                system,
                rule,
                &fns,
                &params,
                opts,
                Branch::Return1,
            )?);
        }
        body.push(CStmt::Return(CExpr::Int(0)));

        functions.push(CFunction {
            ret: "int".into(),
            name: fns[pi].clone(),
            params: decl
                .arg_sorts
                .iter()
                .zip(&params)
                .map(|(s, n)| Ok((map_sort(*s, opts)?.c_name, n.clone())))
                .collect::<Result<Vec<_>, CodegenError>>()?,
            body,
        });
    }

    let queries: Vec<&Rule> = system.rules.iter().filter(|r| r.is_query()).collect();
    let mut main_body = Vec::new();
    if queries.is_empty() {
        main_body.push(CStmt::If {
            cond: CExpr::Int(0),
            then: error_statements(opts.error_style),
            els: vec![],
        });
        main_body.push(CStmt::Return(CExpr::Int(0)));
    } else {
        for q in &queries {
            main_body.push(rule_branch(system, q, &fns, &[], opts, Branch::GotoErr)?);
        }
        main_body.push(CStmt::Return(CExpr::Int(0)));
        main_body.push(CStmt::Label("ERR".into()));
        main_body.extend(error_statements(opts.error_style));
    }
    functions.push(CFunction {
        ret: "int".into(),
        name: "main".into(),
        params: vec![],
        body: main_body,
    });

    let mut unit = CUnit {
        header_comment: vec![],
        externs: vec![],
        functions,
    };
    let nondets = collect_nondet_externs(&unit);
    let (header, externs) = unit_frame(
        system,
        Encoding::Backward,
        opts,
        &nondets,
        matches!(opts.error_style, super::ErrorStyle::ReachError),
    );
    unit.header_comment = header;
    unit.externs = externs;

    Ok(CProgram {
        source: unit.to_c(),
        ast: unit.clone(),
        encoding: Encoding::Backward,
        recursive: true,
        theory: system.theory.clone(),
        error_symbol: error_symbol(opts.error_style),
        nondet_symbols: nondets,
    })
}

enum Branch {
    Return1,
    GotoErr,
}

/// One ordered branch: nondet draws for non-head variables, then a guard of
/// the constraint conjoined with one call per premise application.
fn rule_branch(
    system: &ChcSystem,
    rule: &Rule,
    fns: &[String],
    params: &[String],
    opts: &EmitOptions,
    kind: Branch,
) -> Result<CStmt, CodegenError> {
    let mut env: HashMap<String, String> = HashMap::new();
    if let RuleHead::Head(app) = &rule.head {
        for (j, arg) in app.args.iter().enumerate() {
            let Term::Var(name, _) = arg else {
                unreachable!("backward transform expects a normalized system");
            };
            env.insert(name.clone(), params[j].clone());
        }
    }

    let mut names = NameTable::new(
        fns.iter()
            .cloned()
            .chain(params.iter().cloned()),
    );
    let mut decls = Vec::new();
    for (name, sort) in &rule.vars {
        if env.contains_key(name) {
            continue;
        }
        let cname = names.get(name);
        env.insert(name.clone(), cname.clone());
        decls.push(CStmt::Decl {
            ty: map_sort(*sort, opts)?.c_name,
            name: cname,
            init: Some(nondet_draw(*sort, opts)?),
        });
    }

    let mut guard = Vec::new();
    if !rule.constraint.is_true() {
        guard.push(emit_term(&rule.constraint, &env, opts)?);
    }
    for app in &rule.premise {
        guard.push(premise_call(system, app, &env, fns, opts)?);
    }

    let action = match kind {
        Branch::Return1 => vec![CStmt::Return(CExpr::Int(1))],
        Branch::GotoErr => vec![CStmt::Goto("ERR".into())],
    };
    let inner = if guard.is_empty() {
        action
    } else {
        vec![CStmt::If {
            cond: CExpr::and_all(guard),
            then: action,
            els: vec![],
        }]
    };
    Ok(if decls.is_empty() {
        match inner.len() {
            1 => inner.into_iter().next().unwrap(),
            _ => CStmt::Block(inner),
        }
    } else {
        let mut block = decls;
        block.extend(inner);
        CStmt::Block(block)
    })
}

fn premise_call(
    system: &ChcSystem,
    app: &PredicateApp,
    env: &HashMap<String, String>,
    fns: &[String],
    opts: &EmitOptions,
) -> Result<CExpr, CodegenError> {
    let args = app
        .args
        .iter()
        .map(|a| emit_term(a, env, opts))
        .collect::<Result<Vec<_>, _>>()?;
    let _ = system;
    Ok(CExpr::call(fns[app.pred.0].clone(), args))
}

fn head_var(rule: &Rule, j: usize) -> Option<String> {
    let RuleHead::Head(app) = &rule.head else {
        return None;
    };
    match app.args.get(j) {
        Some(Term::Var(name, _)) => Some(name.clone()),
        _ => None,
    }
}
