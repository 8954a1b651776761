//! Text serialization of derivations.
//!
//! One line per step. Assignments are positional (declaration order of the
//! rule's variables); the derived fact is rendered after `|-` for human
//! auditing and ignored when parsing, since it is recomputed from the rule.
//!
//! ```text
//! step 1 2 |- A(2)
//! query 2 11
//! ```

use std::fmt::Write as _;

use super::{Derivation, Fact, GroundValue, Step};
use crate::chc::{normalize, ChcSystem, Rule, RuleHead, Sort};
use crate::error::ReplayError;

pub fn dump_derivation(system: &ChcSystem, derivation: &Derivation) -> String {
    let system = normalize(system);
    let mut out = String::new();
    for step in &derivation.steps {
        let _ = write!(out, "step {}", step.rule);
        for v in &step.assignment {
            let _ = write!(out, " {v}");
        }
        let _ = writeln!(out, " |- {}", render_fact(&system, &step.fact));
    }
    let _ = write!(out, "query {}", derivation.query_rule);
    for v in &derivation.query_assignment {
        let _ = write!(out, " {v}");
    }
    out.push('\n');
    out
}

fn render_fact(system: &ChcSystem, fact: &Fact) -> String {
    let args: Vec<String> = fact.args.iter().map(|v| v.to_string()).collect();
    format!("{}({})", system.decl(fact.pred).name, args.join(","))
}

/// Parses the output of [`dump_derivation`] back against the same system.
/// The fact of each step is recomputed, so a dump cannot smuggle in facts the
/// rules do not produce; full validity is still the job of
/// [`super::check_derivation`].
pub fn parse_derivation(system: &ChcSystem, text: &str) -> Result<Derivation, ReplayError> {
    let system = normalize(system);
    let mut steps: Vec<Step> = Vec::new();
    let mut query: Option<(usize, Vec<GroundValue>)> = None;
    for line in text.lines() {
        let line = line.split("|-").next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let kind = tokens.next().unwrap_or("");
        let rest: Vec<&str> = tokens.collect();
        match kind {
            "step" => {
                if query.is_some() {
                    return Err(ReplayError::InvalidDerivation);
                }
                let (rule_idx, assignment) = parse_line(&system, &rest)?;
                let rule = &system.rules[rule_idx];
                let RuleHead::Head(app) = &rule.head else {
                    return Err(ReplayError::InvalidDerivation);
                };
                let asg = super::asg_map(rule, &assignment);
                let fact =
                    super::eval_app(app, &asg).ok_or(ReplayError::InvalidDerivation)?;
                steps.push(Step {
                    rule: rule_idx,
                    assignment,
                    fact,
                });
            }
            "query" => {
                if query.is_some() {
                    return Err(ReplayError::InvalidDerivation);
                }
                let (rule_idx, assignment) = parse_line(&system, &rest)?;
                if !system.rules[rule_idx].is_query() {
                    return Err(ReplayError::InvalidDerivation);
                }
                query = Some((rule_idx, assignment));
            }
            _ => return Err(ReplayError::InvalidDerivation),
        }
    }
    let (query_rule, query_assignment) = query.ok_or(ReplayError::InvalidDerivation)?;
    Ok(Derivation {
        steps,
        query_rule,
        query_assignment,
    })
}

fn parse_line(
    system: &ChcSystem,
    tokens: &[&str],
) -> Result<(usize, Vec<GroundValue>), ReplayError> {
    let (idx_tok, val_toks) = tokens.split_first().ok_or(ReplayError::InvalidDerivation)?;
    let rule_idx: usize = idx_tok.parse().map_err(|_| ReplayError::InvalidDerivation)?;
    let rule: &Rule = system
        .rules
        .get(rule_idx)
        .ok_or(ReplayError::InvalidDerivation)?;
    if val_toks.len() != rule.vars.len() {
        return Err(ReplayError::InvalidDerivation);
    }
    let assignment = rule
        .vars
        .iter()
        .zip(val_toks)
        .map(|((_, sort), tok)| parse_value(*sort, tok))
        .collect::<Result<Vec<_>, _>>()?;
    Ok((rule_idx, assignment))
}

fn parse_value(sort: Sort, tok: &str) -> Result<GroundValue, ReplayError> {
    match sort {
        Sort::Bool => match tok {
            "true" => Ok(GroundValue::Bool(true)),
            "false" => Ok(GroundValue::Bool(false)),
            _ => Err(ReplayError::InvalidDerivation),
        },
        Sort::Int => tok
            .parse::<i64>()
            .map(GroundValue::Int)
            .map_err(|_| ReplayError::InvalidDerivation),
        Sort::BitVec(w) => {
            let v: u64 = tok.parse().map_err(|_| ReplayError::InvalidDerivation)?;
            let max = if w >= 64 {
                u64::MAX
            } else {
                (1u64 << w) - 1
            };
            if v > max {
                return Err(ReplayError::InvalidDerivation);
            }
            Ok(GroundValue::Bv(v, w))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::{check_derivation, saturate, DomainSpec, Limits, OracleVerdict};
    use super::*;
    use crate::chc::parse::parse_chc;

    const COUNTER: &str = r#"
(set-logic HORN)
(declare-fun A (Int) Bool)
(assert (forall ((x Int)) (=> (= x 1) (A x))))
(assert (forall ((x Int)) (=> (A (- x 1)) (A x))))
(assert (forall ((x Int)) (=> (and (A x) (= x 11)) false)))
(check-sat)
"#;

    #[test]
    fn dump_round_trips() {
        let sys = parse_chc(COUNTER).unwrap();
        let OracleVerdict::Unsat(d) = saturate(&sys, &DomainSpec::default(), &Limits::default())
        else {
            panic!("expected Unsat");
        };
        let text = dump_derivation(&sys, &d);
        assert!(text.contains("|- A(1)"), "{text}");
        assert!(text.lines().last().unwrap().starts_with("query 2 "));
        let back = parse_derivation(&sys, &text).unwrap();
        assert_eq!(back, d);
        assert!(check_derivation(&sys, &back));
    }

    #[test]
    fn parse_rejects_garbage() {
        let sys = parse_chc(COUNTER).unwrap();
        assert!(parse_derivation(&sys, "nonsense 0 1").is_err());
        assert!(parse_derivation(&sys, "step 99 1\nquery 2 11").is_err());
        assert!(parse_derivation(&sys, "step 0 1").is_err()); // missing query
        assert!(parse_derivation(&sys, "query 2 eleven").is_err());
    }
}
