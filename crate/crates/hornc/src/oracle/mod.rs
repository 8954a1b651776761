//! Bounded bottom-up saturation over finite domains.
//!
//! The oracle enumerates ground instantiations of every rule over a finite
//! value domain and derives facts until either a query fires (Unsat, with a
//! step-by-step derivation), a fixpoint is reached (Sat when the domain covers
//! the theory exactly, Unknown otherwise), or a resource bound trips.
//!
//! Derivations double as executable witnesses: [`replay_inputs`] turns one
//! into the nondet input sequence that drives the forward-encoded C program
//! into its error location.

mod dump;
mod eval;

pub use dump::{dump_derivation, parse_derivation};

use std::collections::{BTreeSet, HashMap, HashSet};

use num_traits::ToPrimitive;

use crate::chc::{
    classify_linearity, normalize, ChcSystem, Linearity, PredId, PredicateApp, Rule, RuleHead,
    Sort, TheoryClass,
};
use crate::error::ReplayError;
use eval::{eval, eval_with, Ev};

/// Finite value domain used for enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DomainSpec {
    /// Inclusive range enumerated for Int variables.
    pub int_lo: i64,
    pub int_hi: i64,
    /// Bitvector widths above this are enumerated only up to `2^bv_cap`
    /// values, which makes the domain incomplete for them.
    pub bv_cap: u32,
}

impl Default for DomainSpec {
    fn default() -> Self {
        DomainSpec {
            int_lo: -64,
            int_hi: 64,
            bv_cap: 8,
        }
    }
}

impl DomainSpec {
    fn values(&self, sort: Sort) -> Vec<GroundValue> {
        match sort {
            Sort::Bool => vec![GroundValue::Bool(false), GroundValue::Bool(true)],
            Sort::Int => (self.int_lo..=self.int_hi).map(GroundValue::Int).collect(),
            Sort::BitVec(w) => {
                let n = 1u64 << w.min(self.bv_cap);
                (0..n).map(|v| GroundValue::Bv(v, w)).collect()
            }
        }
    }

    /// Whether enumeration over this domain covers every value the theory can
    /// produce. Int is always incomplete; bitvectors are complete up to the
    /// cap width.
    pub fn complete_for(&self, theory: &TheoryClass) -> bool {
        match theory {
            TheoryClass::Core => true,
            TheoryClass::Lia => false,
            TheoryClass::Bv(widths) => widths.iter().all(|w| *w <= self.bv_cap),
        }
    }
}

/// Resource bounds for saturation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_facts: usize,
    /// Budget of ground rule instantiations evaluated.
    pub max_steps: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_facts: 1_000_000,
            max_steps: 10_000_000,
        }
    }
}

/// A ground value of one of the three sorts. Bitvectors carry their width so
/// equality distinguishes `#b01` from `#b0001`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GroundValue {
    Bool(bool),
    Int(i64),
    Bv(u64, u32),
}

impl std::fmt::Display for GroundValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GroundValue::Bool(b) => write!(f, "{b}"),
            GroundValue::Int(v) => write!(f, "{v}"),
            GroundValue::Bv(v, _) => write!(f, "{v}"),
        }
    }
}

/// A derived ground fact `P(v1, ..., vk)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fact {
    pub pred: PredId,
    pub args: Vec<GroundValue>,
}

/// One derivation step: rule index, assignment to the rule's variables in
/// declaration order, and the fact the head produces under it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Step {
    pub rule: usize,
    pub assignment: Vec<GroundValue>,
    pub fact: Fact,
}

/// A complete refutation: the facts derived in order, then the query rule and
/// assignment that fired.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Derivation {
    pub steps: Vec<Step>,
    pub query_rule: usize,
    pub query_assignment: Vec<GroundValue>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IncompleteReason {
    /// A fact or step limit tripped before fixpoint.
    BoundExhausted,
    /// Fixpoint was reached, but the enumeration domain does not cover the
    /// theory (Int always, or a bitvector width above the cap), so absence of
    /// a refutation proves nothing.
    IntDomainIncomplete,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleVerdict {
    /// A query fired; the derivation is checkable ground evidence.
    Unsat(Derivation),
    /// Fixpoint over a complete domain: the derived facts form a model.
    Sat(BTreeSet<Fact>),
    Unknown(IncompleteReason),
}

/// Outcome of the bounded integer-overflow scan.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OverflowOutcome {
    /// No enumerated instantiation produced an intermediate outside 32-bit
    /// `int` range. Bounded evidence, not a general proof.
    NoOverflow,
    OverflowFound,
    OverflowUnknown,
}

/// Iterates all assignments to `vars` over the domain, in odometer order
/// (last variable fastest).
struct Assignments {
    domains: Vec<Vec<GroundValue>>,
    idx: Vec<usize>,
    done: bool,
}

impl Assignments {
    fn new(vars: &[(String, Sort)], dom: &DomainSpec) -> Assignments {
        let domains: Vec<Vec<GroundValue>> = vars.iter().map(|(_, s)| dom.values(*s)).collect();
        let done = domains.iter().any(|d| d.is_empty());
        Assignments {
            idx: vec![0; domains.len()],
            domains,
            done,
        }
    }
}

impl Iterator for Assignments {
    type Item = Vec<GroundValue>;

    fn next(&mut self) -> Option<Vec<GroundValue>> {
        if self.done {
            return None;
        }
        let current: Vec<GroundValue> = self
            .idx
            .iter()
            .zip(&self.domains)
            .map(|(i, d)| d[*i])
            .collect();
        // advance the odometer
        let mut k = self.idx.len();
        loop {
            if k == 0 {
                self.done = true;
                break;
            }
            k -= 1;
            self.idx[k] += 1;
            if self.idx[k] < self.domains[k].len() {
                break;
            }
            self.idx[k] = 0;
        }
        Some(current)
    }
}

fn asg_map<'a>(rule: &'a Rule, assignment: &[GroundValue]) -> HashMap<&'a str, GroundValue> {
    rule.vars
        .iter()
        .zip(assignment)
        .map(|((n, _), v)| (n.as_str(), *v))
        .collect()
}

/// Evaluates a predicate application to the ground fact it denotes. Returns
/// None when an Int argument falls outside the i64 carrier.
fn eval_app(app: &PredicateApp, asg: &HashMap<&str, GroundValue>) -> Option<Fact> {
    let mut args = Vec::with_capacity(app.args.len());
    for a in &app.args {
        args.push(ground(eval(a, asg))?);
    }
    Some(Fact {
        pred: app.pred,
        args,
    })
}

fn ground(ev: Ev) -> Option<GroundValue> {
    match ev {
        Ev::Bool(b) => Some(GroundValue::Bool(b)),
        Ev::Int(i) => i.to_i64().map(GroundValue::Int),
        Ev::Bv(v, w) => Some(GroundValue::Bv(v, w)),
    }
}

fn premise_facts(rule: &Rule, asg: &HashMap<&str, GroundValue>) -> Option<Vec<Fact>> {
    rule.premise.iter().map(|app| eval_app(app, asg)).collect()
}

/// Runs bounded saturation: seed with all satisfying atom instantiations,
/// then alternate query checks and one semi-naive derivation round until a
/// query fires, fixpoint, or a bound trips. Every new fact is logged in
/// derivation order, so an Unsat verdict carries a complete refutation.
///
/// Systems with no query rule are vacuously satisfiable and return `Sat`
/// immediately with an empty model.
pub fn saturate(system: &ChcSystem, dom: &DomainSpec, limits: &Limits) -> OracleVerdict {
    let system = normalize(system);
    if system.query_count() == 0 {
        return OracleVerdict::Sat(BTreeSet::new());
    }

    let mut facts: HashSet<Fact> = HashSet::new();
    let mut log: Vec<Step> = Vec::new();
    let mut budget = limits.max_steps;

    // ground queries hold or fail independently of any facts; check them once
    for (ri, rule) in system.rules.iter().enumerate() {
        if !rule.is_query() || !rule.premise.is_empty() {
            continue;
        }
        for assignment in Assignments::new(&rule.vars, dom) {
            if budget == 0 {
                return OracleVerdict::Unknown(IncompleteReason::BoundExhausted);
            }
            budget -= 1;
            let asg = asg_map(rule, &assignment);
            if eval(&rule.constraint, &asg).truthy() {
                return OracleVerdict::Unsat(Derivation {
                    steps: log,
                    query_rule: ri,
                    query_assignment: assignment,
                });
            }
        }
    }

    // seed round: atoms fire unconditionally on satisfying assignments
    let mut delta: HashSet<Fact> = HashSet::new();
    let mut round_steps: Vec<Step> = Vec::new();
    for (ri, rule) in system.rules.iter().enumerate() {
        if !rule.is_atom() {
            continue;
        }
        if let Err(reason) = derive(rule, dom, &facts, None, &mut budget, &mut |f, a| {
            if delta.insert(f.clone()) {
                round_steps.push(Step {
                    rule: ri,
                    assignment: a,
                    fact: f,
                });
            }
        }) {
            return OracleVerdict::Unknown(reason);
        }
    }
    commit_round(round_steps, &delta, &mut facts, &mut log);
    if facts.len() > limits.max_facts {
        return OracleVerdict::Unknown(IncompleteReason::BoundExhausted);
    }

    while !delta.is_empty() {
        // check queries; requiring a delta premise avoids re-checking
        // instantiations already covered in earlier rounds
        for (ri, rule) in system.rules.iter().enumerate() {
            if !rule.is_query() || rule.premise.is_empty() {
                continue;
            }
            for assignment in Assignments::new(&rule.vars, dom) {
                if budget == 0 {
                    return OracleVerdict::Unknown(IncompleteReason::BoundExhausted);
                }
                budget -= 1;
                let asg = asg_map(rule, &assignment);
                if !eval(&rule.constraint, &asg).truthy() {
                    continue;
                }
                let Some(prem) = premise_facts(rule, &asg) else {
                    continue;
                };
                if prem.iter().all(|f| facts.contains(f))
                    && prem.iter().any(|f| delta.contains(f))
                {
                    return OracleVerdict::Unsat(Derivation {
                        steps: log,
                        query_rule: ri,
                        query_assignment: assignment,
                    });
                }
            }
        }

        // semi-naive round: every firing must use at least one delta fact
        let mut next_delta: HashSet<Fact> = HashSet::new();
        let mut round_steps: Vec<Step> = Vec::new();
        for (ri, rule) in system.rules.iter().enumerate() {
            if rule.is_query() || rule.premise.is_empty() {
                continue;
            }
            if let Err(reason) =
                derive(rule, dom, &facts, Some(&delta), &mut budget, &mut |f, a| {
                    if !facts.contains(&f) && next_delta.insert(f.clone()) {
                        round_steps.push(Step {
                            rule: ri,
                            assignment: a,
                            fact: f,
                        });
                    }
                })
            {
                return OracleVerdict::Unknown(reason);
            }
        }
        commit_round(round_steps, &next_delta, &mut facts, &mut log);
        if facts.len() > limits.max_facts {
            return OracleVerdict::Unknown(IncompleteReason::BoundExhausted);
        }
        delta = next_delta;
    }

    if dom.complete_for(&system.theory) {
        OracleVerdict::Sat(facts.into_iter().collect())
    } else {
        OracleVerdict::Unknown(IncompleteReason::IntDomainIncomplete)
    }
}

/// Sorts one round's steps by derived fact (so the log does not depend on
/// rule order within a round) and folds them into the fact set and log.
fn commit_round(
    mut round_steps: Vec<Step>,
    delta: &HashSet<Fact>,
    facts: &mut HashSet<Fact>,
    log: &mut Vec<Step>,
) {
    round_steps.sort_by(|a, b| a.fact.cmp(&b.fact).then(a.rule.cmp(&b.rule)));
    log.extend(round_steps);
    for f in delta {
        facts.insert(f.clone());
    }
}

/// Applies one rule over all assignments, invoking `emit` for each firing.
/// When `delta` is given, firings must use at least one delta premise fact.
fn derive(
    rule: &Rule,
    dom: &DomainSpec,
    facts: &HashSet<Fact>,
    delta: Option<&HashSet<Fact>>,
    budget: &mut u64,
    emit: &mut dyn FnMut(Fact, Vec<GroundValue>),
) -> Result<(), IncompleteReason> {
    for assignment in Assignments::new(&rule.vars, dom) {
        if *budget == 0 {
            return Err(IncompleteReason::BoundExhausted);
        }
        *budget -= 1;
        let asg = asg_map(rule, &assignment);
        if !eval(&rule.constraint, &asg).truthy() {
            continue;
        }
        let Some(prem) = premise_facts(rule, &asg) else {
            continue;
        };
        if !prem.iter().all(|f| facts.contains(f)) {
            continue;
        }
        if let Some(delta) = delta {
            if !prem.iter().any(|f| delta.contains(f)) {
                continue;
            }
        }
        let RuleHead::Head(app) = &rule.head else {
            unreachable!("derive is only called for head rules");
        };
        let Some(fact) = eval_app(app, &asg) else {
            continue;
        };
        emit(fact, assignment);
    }
    Ok(())
}

/// Re-derives every step of `derivation` from scratch and confirms the query
/// firing, using only linear scans over the recorded facts. Returns false on
/// any mismatch.
pub fn check_derivation(system: &ChcSystem, derivation: &Derivation) -> bool {
    let system = normalize(system);
    let mut known: Vec<Fact> = Vec::new();
    for step in &derivation.steps {
        let Some(rule) = system.rules.get(step.rule) else {
            return false;
        };
        let RuleHead::Head(app) = &rule.head else {
            return false;
        };
        if step.assignment.len() != rule.vars.len() || !sorts_match(rule, &step.assignment) {
            return false;
        }
        let asg = asg_map(rule, &step.assignment);
        if !eval(&rule.constraint, &asg).truthy() {
            return false;
        }
        let Some(prem) = premise_facts(rule, &asg) else {
            return false;
        };
        if !prem.iter().all(|f| known.contains(f)) {
            return false;
        }
        match eval_app(app, &asg) {
            Some(f) if f == step.fact => known.push(f),
            _ => return false,
        }
    }
    let Some(rule) = system.rules.get(derivation.query_rule) else {
        return false;
    };
    if !rule.is_query()
        || derivation.query_assignment.len() != rule.vars.len()
        || !sorts_match(rule, &derivation.query_assignment)
    {
        return false;
    }
    let asg = asg_map(rule, &derivation.query_assignment);
    if !eval(&rule.constraint, &asg).truthy() {
        return false;
    }
    match premise_facts(rule, &asg) {
        Some(prem) => prem.iter().all(|f| known.contains(f)),
        None => false,
    }
}

fn sorts_match(rule: &Rule, assignment: &[GroundValue]) -> bool {
    rule.vars
        .iter()
        .zip(assignment)
        .all(|((_, sort), v)| match (sort, v) {
            (Sort::Bool, GroundValue::Bool(_)) => true,
            (Sort::Int, GroundValue::Int(_)) => true,
            (Sort::BitVec(w), GroundValue::Bv(_, vw)) => w == vw,
            _ => false,
        })
}

/// Extracts the nondet input sequence that steers the forward-encoded program
/// along `derivation` into the error location.
///
/// The forward program draws, per loop iteration, a rule selector followed by
/// that rule's variables in declaration order; the returned values follow the
/// same shape: the chain of steps supporting the query's premise fact (atom
/// first), then the query firing itself.
pub fn replay_inputs(system: &ChcSystem, derivation: &Derivation) -> Result<Vec<i64>, ReplayError> {
    if classify_linearity(system) != Linearity::Linear {
        return Err(ReplayError::ReplayUnsupported);
    }
    if !check_derivation(system, derivation) {
        return Err(ReplayError::InvalidDerivation);
    }
    let system = normalize(system);

    // walk the support chain backwards from the query's premise fact
    let mut chain: Vec<&Step> = Vec::new();
    let query = &system.rules[derivation.query_rule];
    let mut want: Option<Fact> = match query.premise.first() {
        None => None,
        Some(app) => {
            let asg = asg_map(query, &derivation.query_assignment);
            Some(eval_app(app, &asg).ok_or(ReplayError::InvalidDerivation)?)
        }
    };
    while let Some(target) = want {
        let step = derivation
            .steps
            .iter()
            .find(|s| s.fact == target)
            .ok_or(ReplayError::InvalidDerivation)?;
        chain.push(step);
        let rule = &system.rules[step.rule];
        want = match rule.premise.first() {
            None => None,
            Some(app) => {
                let asg = asg_map(rule, &step.assignment);
                Some(eval_app(app, &asg).ok_or(ReplayError::InvalidDerivation)?)
            }
        };
    }
    chain.reverse();

    let mut inputs = Vec::new();
    for step in chain {
        inputs.push(step.rule as i64);
        inputs.extend(step.assignment.iter().map(encode));
    }
    inputs.push(derivation.query_rule as i64);
    inputs.extend(derivation.query_assignment.iter().map(encode));
    Ok(inputs)
}

fn encode(v: &GroundValue) -> i64 {
    match v {
        GroundValue::Bool(b) => i64::from(*b),
        GroundValue::Int(v) => *v,
        GroundValue::Bv(v, _) => *v as i64,
    }
}

/// Re-evaluates every step of a derivation (and the query firing) under the
/// 32-bit `int` overflow monitor. True when any intermediate leaves range,
/// meaning the corresponding C execution would overflow.
pub fn replay_overflows(system: &ChcSystem, derivation: &Derivation) -> bool {
    let system = normalize(system);
    let mut flag = false;
    let mut monitor = |rule: &Rule, assignment: &[GroundValue]| {
        let asg = asg_map(rule, assignment);
        eval_with(&rule.constraint, &asg, &mut Some(&mut flag));
        let head_app = match &rule.head {
            RuleHead::Head(app) => Some(app),
            RuleHead::Query => None,
        };
        for app in rule.premise.iter().chain(head_app) {
            for arg in &app.args {
                eval_with(arg, &asg, &mut Some(&mut flag));
            }
        }
    };
    for step in &derivation.steps {
        monitor(&system.rules[step.rule], &step.assignment);
    }
    monitor(
        &system.rules[derivation.query_rule],
        &derivation.query_assignment,
    );
    flag
}

/// Scans every rule instantiation over the domain and reports whether any
/// evaluation produces an integer intermediate outside 32-bit `int` range.
/// `NoOverflow` is evidence within the scanned bounds, not a general proof.
pub fn overflow_scan(system: &ChcSystem, dom: &DomainSpec, limits: &Limits) -> OverflowOutcome {
    let system = normalize(system);
    let mut budget = limits.max_steps;
    for rule in &system.rules {
        for assignment in Assignments::new(&rule.vars, dom) {
            if budget == 0 {
                return OverflowOutcome::OverflowUnknown;
            }
            budget -= 1;
            let asg = asg_map(rule, &assignment);
            let mut flag = false;
            eval_with(&rule.constraint, &asg, &mut Some(&mut flag));
            let head_app = match &rule.head {
                RuleHead::Head(app) => Some(app),
                RuleHead::Query => None,
            };
            for app in rule.premise.iter().chain(head_app) {
                for arg in &app.args {
                    eval_with(arg, &asg, &mut Some(&mut flag));
                }
            }
            if flag {
                return OverflowOutcome::OverflowFound;
            }
        }
    }
    OverflowOutcome::NoOverflow
}

#[cfg(test)]
mod tests {
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
    fn counter_refuted_with_eleven_steps() {
        let sys = parse_chc(COUNTER).unwrap();
        let v = saturate(&sys, &DomainSpec::default(), &Limits::default());
        let OracleVerdict::Unsat(d) = v else {
            panic!("expected Unsat, got {v:?}");
        };
        assert_eq!(d.steps.len(), 11);
        assert_eq!(d.steps[0].fact.args, vec![GroundValue::Int(1)]);
        assert_eq!(d.steps[10].fact.args, vec![GroundValue::Int(11)]);
        assert!(check_derivation(&sys, &d));
    }

    #[test]
    fn verdict_stable_under_rule_permutation() {
        let sys = parse_chc(COUNTER).unwrap();
        let mut permuted = sys.clone();
        permuted.rules.swap(0, 1);
        let a = saturate(&sys, &DomainSpec::default(), &Limits::default());
        let b = saturate(&permuted, &DomainSpec::default(), &Limits::default());
        let (OracleVerdict::Unsat(da), OracleVerdict::Unsat(db)) = (a, b) else {
            panic!("expected Unsat on both orderings");
        };
        assert_eq!(da.steps.len(), db.steps.len());
        let fa: Vec<&Fact> = da.steps.iter().map(|s| &s.fact).collect();
        let fb: Vec<&Fact> = db.steps.iter().map(|s| &s.fact).collect();
        assert_eq!(fa, fb);
    }

    #[test]
    fn safe_bitvector_system_is_sat_with_model() {
        // A holds on even 4-bit values; the query demands an odd one
        let text = r#"
(set-logic HORN)
(declare-fun A ((_ BitVec 4)) Bool)
(assert (forall ((x (_ BitVec 4))) (=> (= x #x0) (A x))))
(assert (forall ((x (_ BitVec 4))) (=> (A x) (A (bvadd x #x2)))))
(assert (forall ((x (_ BitVec 4))) (=> (and (A x) (= x #x5)) false)))
(check-sat)
"#;
        let sys = parse_chc(text).unwrap();
        let v = saturate(&sys, &DomainSpec::default(), &Limits::default());
        let OracleVerdict::Sat(model) = v else {
            panic!("expected Sat, got {v:?}");
        };
        assert_eq!(model.len(), 8);
        assert!(model
            .iter()
            .all(|f| matches!(f.args[0], GroundValue::Bv(v, 4) if v % 2 == 0)));
    }

    #[test]
    fn int_fixpoint_is_unknown_not_sat() {
        // safe for all integers, but the bounded domain cannot prove it
        let text = r#"
(set-logic HORN)
(declare-fun A (Int) Bool)
(assert (forall ((x Int)) (=> (= x 0) (A x))))
(assert (forall ((x Int)) (=> (and (A x) (= x 1)) false)))
(check-sat)
"#;
        let sys = parse_chc(text).unwrap();
        let v = saturate(&sys, &DomainSpec::default(), &Limits::default());
        assert_eq!(
            v,
            OracleVerdict::Unknown(IncompleteReason::IntDomainIncomplete)
        );
    }

    #[test]
    fn zero_queries_sat_immediately() {
        let text = r#"
(set-logic HORN)
(declare-fun A (Int) Bool)
(assert (forall ((x Int)) (=> (= x 1) (A x))))
(check-sat)
"#;
        let sys = parse_chc(text).unwrap();
        let v = saturate(&sys, &DomainSpec::default(), &Limits::default());
        assert_eq!(v, OracleVerdict::Sat(BTreeSet::new()));
    }

    #[test]
    fn ground_query_refuted_without_steps() {
        let text = r#"
(set-logic HORN)
(declare-fun A (Int) Bool)
(assert (forall ((x Int)) (=> (= x 0) (A x))))
(assert (forall ((x Int)) (=> (= x 3) false)))
(check-sat)
"#;
        let sys = parse_chc(text).unwrap();
        let OracleVerdict::Unsat(d) = saturate(&sys, &DomainSpec::default(), &Limits::default())
        else {
            panic!("expected Unsat");
        };
        assert!(d.steps.is_empty());
        assert_eq!(d.query_assignment, vec![GroundValue::Int(3)]);
        assert!(check_derivation(&sys, &d));
    }

    #[test]
    fn bound_exhaustion_reported() {
        let sys = parse_chc(COUNTER).unwrap();
        let tight = Limits {
            max_facts: 2,
            max_steps: 10_000_000,
        };
        let v = saturate(&sys, &DomainSpec::default(), &tight);
        assert_eq!(v, OracleVerdict::Unknown(IncompleteReason::BoundExhausted));

        let starved = Limits {
            max_facts: 1_000_000,
            max_steps: 10,
        };
        let v = saturate(&sys, &DomainSpec::default(), &starved);
        assert_eq!(v, OracleVerdict::Unknown(IncompleteReason::BoundExhausted));
    }

    #[test]
    fn check_derivation_rejects_tampering() {
        let sys = parse_chc(COUNTER).unwrap();
        let OracleVerdict::Unsat(mut d) =
            saturate(&sys, &DomainSpec::default(), &Limits::default())
        else {
            panic!("expected Unsat");
        };
        assert!(check_derivation(&sys, &d));
        d.steps[5].fact.args[0] = GroundValue::Int(42);
        assert!(!check_derivation(&sys, &d));
    }

    #[test]
    fn replay_orders_selector_then_variables() {
        let sys = parse_chc(COUNTER).unwrap();
        let OracleVerdict::Unsat(d) = saturate(&sys, &DomainSpec::default(), &Limits::default())
        else {
            panic!("expected Unsat");
        };
        let inputs = replay_inputs(&sys, &d).unwrap();
        // 11 chain steps plus the query, one selector and one variable each
        assert_eq!(inputs.len(), 24);
        assert_eq!(&inputs[0..2], &[0, 1]); // atom rule, x = 1
        assert_eq!(&inputs[2..4], &[1, 2]); // step rule, x = 2
        assert_eq!(&inputs[22..24], &[2, 11]); // query rule, x = 11
    }

    #[test]
    fn replay_refuses_nonlinear_systems() {
        let text = r#"
(set-logic HORN)
(declare-fun A (Int) Bool)
(assert (forall ((x Int)) (=> (= x 1) (A x))))
(assert (forall ((x Int) (y Int)) (=> (and (A x) (A y)) (A (+ x y)))))
(assert (forall ((x Int)) (=> (and (A x) (= x 2)) false)))
(check-sat)
"#;
        let sys = parse_chc(text).unwrap();
        let OracleVerdict::Unsat(d) = saturate(&sys, &DomainSpec::default(), &Limits::default())
        else {
            panic!("expected Unsat");
        };
        assert!(matches!(
            replay_inputs(&sys, &d),
            Err(ReplayError::ReplayUnsupported)
        ));
    }

    #[test]
    fn overflow_scan_flags_wide_arithmetic() {
        let text = r#"
(set-logic HORN)
(declare-fun A (Int) Bool)
(assert (forall ((x Int)) (=> (= x 0) (A x))))
(assert (forall ((x Int)) (=> (and (A x) (= (* x 2000000000) 0)) false)))
(check-sat)
"#;
        let sys = parse_chc(text).unwrap();
        let v = overflow_scan(&sys, &DomainSpec::default(), &Limits::default());
        assert_eq!(v, OverflowOutcome::OverflowFound);

        let safe = parse_chc(COUNTER).unwrap();
        let v = overflow_scan(&safe, &DomainSpec::default(), &Limits::default());
        assert_eq!(v, OverflowOutcome::NoOverflow);
    }
}
