//! In-process actors backed by the bounded saturation oracle.
//!
//! They speak the same safe/unsafe/unknown protocol as external tools:
//!
//! - `builtin-oracle` (reach): saturates the clause system directly. On a
//!   refutation it writes the derivation to `derivation.txt` in its witness
//!   directory, which is the witness format `builtin-validator` consumes.
//! - `builtin-overflow`: scans rule instantiations for intermediates outside
//!   32-bit `int` range.
//! - `builtin-validator`: re-checks a dumped derivation step by step and
//!   replays it under the overflow monitor.

use std::path::Path;

use super::actor::{ActorInput, RawAnswer};
use crate::oracle::{
    check_derivation, dump_derivation, overflow_scan, parse_derivation, saturate, DomainSpec,
    IncompleteReason, Limits, OracleVerdict, OverflowOutcome,
};

pub const WITNESS_FILE: &str = "derivation.txt";

pub fn run_builtin(name: &str, input: &ActorInput<'_>, witness_dir: &Path) -> RawAnswer {
    match name {
        "builtin-oracle" => oracle_reach(input, witness_dir),
        "builtin-overflow" => overflow(input),
        "builtin-validator" => validate(input),
        _ => RawAnswer::Unknown(format!("unknown builtin {name:?}")),
    }
}

fn oracle_reach(input: &ActorInput<'_>, witness_dir: &Path) -> RawAnswer {
    match saturate(input.system, &DomainSpec::default(), &Limits::default()) {
        OracleVerdict::Sat(_) => RawAnswer::Safe,
        OracleVerdict::Unsat(derivation) => {
            let text = dump_derivation(input.system, &derivation);
            if std::fs::write(witness_dir.join(WITNESS_FILE), text).is_err() {
                return RawAnswer::Unknown("could not write witness".into());
            }
            RawAnswer::Unsafe
        }
        OracleVerdict::Unknown(IncompleteReason::BoundExhausted) => {
            RawAnswer::Unknown("saturation bound exhausted".into())
        }
        OracleVerdict::Unknown(IncompleteReason::IntDomainIncomplete) => {
            RawAnswer::Unknown("fixpoint over an incomplete domain".into())
        }
    }
}

fn overflow(input: &ActorInput<'_>) -> RawAnswer {
    match overflow_scan(input.system, &DomainSpec::default(), &Limits::default()) {
        OverflowOutcome::NoOverflow => RawAnswer::Safe,
        OverflowOutcome::OverflowFound => RawAnswer::Unsafe,
        OverflowOutcome::OverflowUnknown => {
            RawAnswer::Unknown("overflow scan budget exhausted".into())
        }
    }
}

fn validate(input: &ActorInput<'_>) -> RawAnswer {
    let Some(dir) = input.violation_witness else {
        return RawAnswer::Unknown("no violation witness to validate".into());
    };
    let text = match std::fs::read_to_string(dir.join(WITNESS_FILE)) {
        Ok(t) => t,
        Err(_) => return RawAnswer::Unknown("witness format not understood".into()),
    };
    let Ok(derivation) = parse_derivation(input.system, &text) else {
        return RawAnswer::Unsafe;
    };
    if !check_derivation(input.system, &derivation) {
        return RawAnswer::Unsafe;
    }
    // the violation is real; confirm the replayed run stays within int range
    if crate::oracle::replay_overflows(input.system, &derivation) {
        RawAnswer::Unsafe
    } else {
        RawAnswer::Safe
    }
}
