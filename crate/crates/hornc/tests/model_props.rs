//! Property tests for the clause model: printing round-trips through the
//! parser, and normalization is idempotent and verdict-preserving.

mod common;

use hornc::chc::{normalize, parse_chc, print_chc, validate};
use hornc::oracle::{saturate, DomainSpec, Limits, OracleVerdict};

use common::random_bv4_system;

const SEEDS: u64 = 60;

#[test]
fn print_then_parse_round_trips() {
    for seed in 0..SEEDS {
        let system = random_bv4_system(seed);
        let text = print_chc(&system);
        let reparsed = parse_chc(&text).unwrap_or_else(|e| panic!("seed {seed}: {e}\n{text}"));
        assert_eq!(system.decls, reparsed.decls, "seed {seed}");
        assert_eq!(system.rules, reparsed.rules, "seed {seed}");
        assert_eq!(system.theory, reparsed.theory, "seed {seed}");
    }
}

#[test]
fn normalization_is_idempotent() {
    for seed in 0..SEEDS {
        let system = random_bv4_system(seed);
        let once = normalize(&system);
        validate(&once).unwrap_or_else(|e| panic!("seed {seed}: {e}"));
        let twice = normalize(&once);
        assert_eq!(once.rules, twice.rules, "seed {seed}");
    }
}

#[test]
fn normalization_preserves_the_verdict() {
    let dom = DomainSpec::default();
    let limits = Limits::default();
    for seed in 0..SEEDS {
        let system = random_bv4_system(seed);
        let before = saturate(&system, &dom, &limits);
        let after = saturate(&normalize(&system), &dom, &limits);
        let label = |v: &OracleVerdict| match v {
            OracleVerdict::Sat(_) => "sat",
            OracleVerdict::Unsat(_) => "unsat",
            OracleVerdict::Unknown(_) => "unknown",
        };
        assert_eq!(label(&before), label(&after), "seed {seed}");
    }
}

#[test]
fn normalized_unsat_facts_match_original_facts() {
    // the equality-conjunct rewrite must not change which ground facts a
    // refutation derives
    let dom = DomainSpec::default();
    let limits = Limits::default();
    for seed in 0..SEEDS {
        let system = random_bv4_system(seed);
        let (OracleVerdict::Unsat(a), OracleVerdict::Unsat(b)) = (
            saturate(&system, &dom, &limits),
            saturate(&normalize(&system), &dom, &limits),
        ) else {
            continue;
        };
        let facts = |d: &hornc::oracle::Derivation| {
            d.steps
                .iter()
                .map(|s| s.fact.clone())
                .collect::<std::collections::BTreeSet<_>>()
        };
        assert_eq!(facts(&a), facts(&b), "seed {seed}");
    }
}
