//! Verifier portfolio: encode, fan out to actors, gate the answers.
//!
//! A plan (selected by theory) runs stages in order; each stage picks an
//! encoding, generates C, and races a group of reachability actors. The raw
//! reach answer is then gated by theory:
//!
//! - Bitvector systems map to C unsigned arithmetic exactly, so safe/unsafe
//!   carry over as sat/unsat directly.
//! - Integer systems are encoded with C `int`, which is narrower than Int.
//!   A safe answer only yields sat together with a no-overflow verdict (the
//!   C program must not have wrapped where Int would not). An unsafe answer
//!   only yields unsat once a validator confirms the violation replays as a
//!   real, overflow-free execution.
//!
//! Anything else stays unknown, with the reasons collected.

mod actor;
mod builtin;
mod config;

pub use actor::{run_parallel, ActorInput, ActorOutcome, GroupRun, RawAnswer};
pub use builtin::WITNESS_FILE;
pub use config::{
    default_config, load_config, ActorConfig, ActorKind, EncodingChoice, PlanConfig,
    PortfolioConfig, StageConfig, TheoryRoute, DEFAULT_PORTFOLIO,
};

use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use crate::chc::{classify_linearity, ChcSystem, Linearity};
use crate::codegen::{transform_backward, transform_forward, EmitOptions, Encoding};
use crate::error::PortfolioError;

/// Final gated verdict. Unknown carries one reason per dead end.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Sat,
    Unsat,
    Unknown(Vec<String>),
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Sat => "sat",
            Verdict::Unsat => "unsat",
            Verdict::Unknown(_) => "unknown",
        }
    }
}

/// Verdict plus a human-readable trace of how it was reached.
#[derive(Debug, Clone)]
pub struct SolveOutcome {
    pub verdict: Verdict,
    pub provenance: Vec<String>,
}

#[derive(Debug, Clone)]
pub struct RunOptions {
    pub total_budget: Duration,
    /// Where to put generated C, logs, and witnesses. Defaults to a fresh
    /// temporary directory.
    pub scratch: Option<PathBuf>,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            total_budget: Duration::from_secs(60),
            scratch: None,
        }
    }
}

/// Gate for integer-sorted systems (`int` carrier narrower than Int).
/// `overflow` is the program-level no-overflow answer, `validation` the
/// witness-level replay answer; either may be absent.
pub fn gate_lia(
    reach: &RawAnswer,
    overflow: Option<&RawAnswer>,
    validation: Option<&RawAnswer>,
) -> Verdict {
    match reach {
        RawAnswer::Safe => match overflow {
            Some(RawAnswer::Safe) => Verdict::Sat,
            Some(RawAnswer::Unsafe) => Verdict::Unknown(vec![
                "program proved unreachable, but int overflow occurs, so the proof does not \
                 transfer to Int"
                    .into(),
            ]),
            Some(RawAnswer::Unknown(r)) => {
                Verdict::Unknown(vec![format!("overflow not excluded: {r}")])
            }
            None => Verdict::Unknown(vec!["overflow not excluded: no overflow verdict".into()]),
        },
        RawAnswer::Unsafe => match validation {
            Some(RawAnswer::Safe) => Verdict::Unsat,
            Some(RawAnswer::Unsafe) => {
                Verdict::Unknown(vec!["violation witness was refuted".into()])
            }
            Some(RawAnswer::Unknown(r)) => {
                Verdict::Unknown(vec![format!("violation not validated: {r}")])
            }
            None => Verdict::Unknown(vec!["violation not validated: no witness check".into()]),
        },
        RawAnswer::Unknown(r) => Verdict::Unknown(vec![r.clone()]),
    }
}

/// Gate for bitvector systems: the encoding is exact, raw answers relabel.
pub fn gate_bv(reach: &RawAnswer) -> Verdict {
    match reach {
        RawAnswer::Safe => Verdict::Sat,
        RawAnswer::Unsafe => Verdict::Unsat,
        RawAnswer::Unknown(r) => Verdict::Unknown(vec![r.clone()]),
    }
}

pub fn run_portfolio(
    system: &ChcSystem,
    config: &PortfolioConfig,
    opts: &RunOptions,
) -> Result<SolveOutcome, PortfolioError> {
    let plan = config
        .plan_for(&system.theory)
        .ok_or_else(|| PortfolioError::PlanTheoryMismatch(system.theory.to_string()))?;

    let temp;
    let scratch: &Path = match &opts.scratch {
        Some(p) => {
            std::fs::create_dir_all(p)?;
            p
        }
        None => {
            temp = tempfile::tempdir()?;
            temp.path()
        }
    };

    let start = Instant::now();
    let mut provenance = Vec::new();
    let mut reasons = Vec::new();

    for (si, stage) in plan.stages.iter().enumerate() {
        let encoding: Encoding = stage.encoding.into();
        let label = format!("stage{si}-{}", encoding_name(encoding));
        let deadline = start + opts.total_budget.mul_f64(cumulative_fraction(plan, si));

        if encoding == Encoding::Forward && classify_linearity(system) == Linearity::NonLinear {
            provenance.push(format!("{label}: stage skipped: forward requires linear"));
            continue;
        }
        let program = match encoding {
            Encoding::Forward => transform_forward(system, &EmitOptions::default()),
            Encoding::Backward => transform_backward(system, &EmitOptions::default()),
        }?;
        let c_file = scratch.join(format!("{label}.c"));
        std::fs::write(&c_file, &program.source)?;

        let verdict = run_stage(system, config, stage, &c_file, scratch, &label, deadline, {
            &mut provenance
        })?;
        match verdict {
            Verdict::Unknown(mut r) => reasons.append(&mut r),
            decisive => {
                provenance.push(format!("{label}: verdict {}", decisive.as_str()));
                return Ok(SolveOutcome {
                    verdict: decisive,
                    provenance,
                });
            }
        }
    }

    Ok(SolveOutcome {
        verdict: Verdict::Unknown(reasons),
        provenance,
    })
}

/// Deadline for stage `si`: consume the budget fractions of all stages up to
/// and including it, so later stages inherit time an early stage left unused.
fn cumulative_fraction(plan: &PlanConfig, si: usize) -> f64 {
    plan.stages[..=si]
        .iter()
        .map(|s| s.budget_fraction)
        .sum::<f64>()
        .min(1.0)
}

#[allow(clippy::too_many_arguments)]
fn run_stage(
    system: &ChcSystem,
    config: &PortfolioConfig,
    stage: &StageConfig,
    c_file: &Path,
    scratch: &Path,
    label: &str,
    deadline: Instant,
    provenance: &mut Vec<String>,
) -> Result<Verdict, PortfolioError> {
    let actors = |names: &[String]| -> Vec<&ActorConfig> {
        names
            .iter()
            .map(|n| config.actor(n).expect("plan actors are validated at load"))
            .collect()
    };
    let input = ActorInput {
        system,
        c_file,
        violation_witness: None,
    };

    let reach_group = actors(&stage.reach);
    if reach_group.is_empty() {
        return Ok(Verdict::Unknown(vec![format!(
            "{label}: no reach actors configured"
        )]));
    }
    let reach_run = actor::run_parallel(&reach_group, &input, scratch, &format!("{label}-reach"), deadline);
    let Some(winner) = reach_run.decisive_outcome() else {
        let mut reasons = reach_run.unknown_reasons();
        for r in &mut reasons {
            *r = format!("{label}: {r}");
        }
        return Ok(Verdict::Unknown(reasons));
    };
    provenance.push(format!(
        "{label}: reach {} answered {}",
        winner.actor,
        answer_name(&winner.answer)
    ));

    if TheoryRoute::of(&system.theory) == TheoryRoute::Bv {
        return Ok(gate_bv(&winner.answer));
    }

    // integer gating: overflow answer for safe, witness validation for unsafe
    let overflow = match winner.answer {
        RawAnswer::Safe if !stage.overflow.is_empty() => {
            let run = actor::run_parallel(
                &actors(&stage.overflow),
                &input,
                scratch,
                &format!("{label}-overflow"),
                deadline,
            );
            run.decisive_outcome().map(|o| {
                provenance.push(format!(
                    "{label}: overflow {} answered {}",
                    o.actor,
                    answer_name(&o.answer)
                ));
                o.answer.clone()
            })
        }
        _ => None,
    };
    let validation = match winner.answer {
        RawAnswer::Unsafe => {
            let witness = winner.witness_dir.clone();
            let mut result = None;
            for v in actors(&stage.validators) {
                let vin = ActorInput {
                    system,
                    c_file,
                    violation_witness: Some(&witness),
                };
                let answer = actor::run_actor(
                    v,
                    &vin,
                    &scratch.join(format!("{label}-validate-{}", v.name)),
                    deadline,
                    &std::sync::atomic::AtomicBool::new(false),
                );
                provenance.push(format!(
                    "{label}: validator {} answered {}",
                    v.name,
                    answer_name(&answer)
                ));
                if answer.is_decisive() {
                    result = Some(answer);
                    break;
                }
                result = Some(answer);
            }
            result
        }
        _ => None,
    };

    let verdict = gate_lia(&winner.answer, overflow.as_ref(), validation.as_ref());
    Ok(match verdict {
        Verdict::Unknown(reasons) => Verdict::Unknown(
            reasons
                .into_iter()
                .map(|r| format!("{label}: {r}"))
                .collect(),
        ),
        v => v,
    })
}

fn encoding_name(e: Encoding) -> &'static str {
    match e {
        Encoding::Forward => "forward",
        Encoding::Backward => "backward",
    }
}

fn answer_name(a: &RawAnswer) -> &'static str {
    match a {
        RawAnswer::Safe => "safe",
        RawAnswer::Unsafe => "unsafe",
        RawAnswer::Unknown(_) => "unknown",
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chc::parse_chc;

    #[test]
    fn lia_gate_truth_table() {
        use RawAnswer::{Safe, Unsafe};
        let unk = || RawAnswer::Unknown("x".into());
        let sat = |v: &Verdict| matches!(v, Verdict::Sat);
        let unsat = |v: &Verdict| matches!(v, Verdict::Unsat);
        let unknown = |v: &Verdict| matches!(v, Verdict::Unknown(_));

        // every reach/overflow/validation combination, including absent sides
        let sides = [None, Some(Safe), Some(Unsafe), Some(unk())];
        for overflow in &sides {
            for validation in &sides {
                let v = gate_lia(&Safe, overflow.as_ref(), validation.as_ref());
                // sat exactly when overflow is excluded
                assert_eq!(sat(&v), matches!(overflow, Some(Safe)), "{overflow:?}");
                assert!(!unsat(&v));

                let v = gate_lia(&Unsafe, overflow.as_ref(), validation.as_ref());
                // unsat exactly when the witness replayed cleanly
                assert_eq!(unsat(&v), matches!(validation, Some(Safe)), "{validation:?}");
                assert!(!sat(&v));

                let v = gate_lia(&unk(), overflow.as_ref(), validation.as_ref());
                assert!(unknown(&v));
            }
        }
    }

    #[test]
    fn bv_gate_is_a_relabeling() {
        assert_eq!(gate_bv(&RawAnswer::Safe), Verdict::Sat);
        assert_eq!(gate_bv(&RawAnswer::Unsafe), Verdict::Unsat);
        assert!(matches!(
            gate_bv(&RawAnswer::Unknown("r".into())),
            Verdict::Unknown(_)
        ));
    }

    #[test]
    fn missing_plan_is_a_theory_mismatch() {
        let config = load_config(
            r#"
[[actor]]
name = "builtin-oracle"
kind = "reach"
builtin = true

[[plan]]
theory = "bv"
[[plan.stage]]
encoding = "forward"
reach = ["builtin-oracle"]
budget_fraction = 1.0
"#,
        )
        .unwrap();
        let sys = parse_chc(
            "(set-logic HORN)(declare-fun A (Int) Bool)\
             (assert (forall ((x Int)) (=> (= x 1) (A x))))(check-sat)",
        )
        .unwrap();
        assert!(matches!(
            run_portfolio(&sys, &config, &RunOptions::default()),
            Err(PortfolioError::PlanTheoryMismatch(t)) if t == "LIA"
        ));
    }

    #[test]
    fn builtin_portfolio_refutes_lia_counter() {
        let sys = parse_chc(
            r#"
(set-logic HORN)
(declare-fun A (Int) Bool)
(assert (forall ((x Int)) (=> (= x 1) (A x))))
(assert (forall ((x Int)) (=> (A (- x 1)) (A x))))
(assert (forall ((x Int)) (=> (and (A x) (= x 11)) false)))
(check-sat)
"#,
        )
        .unwrap();
        let config = builtin_only_config();
        let out = run_portfolio(&sys, &config, &RunOptions::default()).unwrap();
        assert_eq!(out.verdict, Verdict::Unsat, "{:?}", out.provenance);
        assert!(out
            .provenance
            .iter()
            .any(|p| p.contains("builtin-validator answered safe")));
    }

    #[test]
    fn builtin_portfolio_proves_bv_system_sat() {
        let sys = parse_chc(
            r#"
(set-logic HORN)
(declare-fun A ((_ BitVec 4)) Bool)
(assert (forall ((x (_ BitVec 4))) (=> (= x #x0) (A x))))
(assert (forall ((x (_ BitVec 4))) (=> (A x) (A (bvadd x #x2)))))
(assert (forall ((x (_ BitVec 4))) (=> (and (A x) (= x #x5)) false)))
(check-sat)
"#,
        )
        .unwrap();
        let config = builtin_only_config();
        let out = run_portfolio(&sys, &config, &RunOptions::default()).unwrap();
        assert_eq!(out.verdict, Verdict::Sat, "{:?}", out.provenance);
    }

    #[test]
    fn safe_lia_system_stays_unknown_under_builtins() {
        // safe over Int, but the bounded oracle cannot prove it
        let sys = parse_chc(
            r#"
(set-logic HORN)
(declare-fun A (Int) Bool)
(assert (forall ((x Int)) (=> (= x 0) (A x))))
(assert (forall ((x Int)) (=> (and (A x) (= x 1)) false)))
(check-sat)
"#,
        )
        .unwrap();
        let config = builtin_only_config();
        let out = run_portfolio(&sys, &config, &RunOptions::default()).unwrap();
        let Verdict::Unknown(reasons) = &out.verdict else {
            panic!("expected unknown, got {:?}", out.verdict);
        };
        assert!(!reasons.is_empty());
    }

    #[test]
    fn nonlinear_system_skips_forward_stage() {
        let sys = parse_chc(
            r#"
(set-logic HORN)
(declare-fun A (Int) Bool)
(assert (forall ((x Int)) (=> (= x 1) (A x))))
(assert (forall ((x Int) (y Int)) (=> (and (A x) (A y)) (A (+ x y)))))
(assert (forall ((x Int)) (=> (and (A x) (= x 2)) false)))
(check-sat)
"#,
        )
        .unwrap();
        let config = builtin_only_config();
        let out = run_portfolio(&sys, &config, &RunOptions::default()).unwrap();
        assert!(out
            .provenance
            .iter()
            .any(|p| p.contains("stage skipped: forward requires linear")));
        // backward stage still refutes it via the builtins
        assert_eq!(out.verdict, Verdict::Unsat, "{:?}", out.provenance);
    }

    fn builtin_only_config() -> PortfolioConfig {
        load_config(
            r#"
[[actor]]
name = "builtin-oracle"
kind = "reach"
builtin = true

[[actor]]
name = "builtin-overflow"
kind = "overflow"
builtin = true

[[actor]]
name = "builtin-validator"
kind = "validator"
builtin = true

[[plan]]
theory = "lia"
[[plan.stage]]
encoding = "forward"
reach = ["builtin-oracle"]
overflow = ["builtin-overflow"]
validators = ["builtin-validator"]
budget_fraction = 0.5
[[plan.stage]]
encoding = "backward"
reach = ["builtin-oracle"]
overflow = ["builtin-overflow"]
validators = ["builtin-validator"]
budget_fraction = 0.5

[[plan]]
theory = "bv"
[[plan.stage]]
encoding = "forward"
reach = ["builtin-oracle"]
budget_fraction = 0.5
[[plan.stage]]
encoding = "backward"
reach = ["builtin-oracle"]
budget_fraction = 0.5

[[plan]]
theory = "core"
[[plan.stage]]
encoding = "forward"
reach = ["builtin-oracle"]
overflow = ["builtin-overflow"]
validators = ["builtin-validator"]
budget_fraction = 1.0
"#,
        )
        .unwrap()
    }
}
