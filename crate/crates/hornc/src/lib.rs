//! Solve Constrained Horn Clauses by translating them to C reachability
//! problems and dispatching a portfolio of software verifiers.
//!
//! The pipeline has four layers:
//!
//! - [`chc`]: parse SMT-LIBv2 HORN scripts into a typed clause system and
//!   classify it (theory, linearity).
//! - [`codegen`]: translate a system to a C program, either as a single
//!   nonrecursive loop (forward) or as mutually recursive functions
//!   (backward), with the clause semantics encoded bit-precisely.
//! - [`oracle`]: a built-in bounded saturation solver that produces
//!   checkable derivations and serves as ground truth in tests.
//! - [`portfolio`]: run external verifiers on the generated C concurrently,
//!   with theory-aware gating of their raw answers.
//!
//! The `hornc` binary wires these together; see the user guide in `book/`.

pub mod bench;
pub mod chc;
pub mod codegen;
pub mod error;
pub mod oracle;
pub mod portfolio;
pub mod sexpr;

pub use chc::{parse_chc, print_chc, ChcSystem, TheoryClass};
pub use codegen::{transform_backward, transform_forward, EmitOptions, Encoding};
pub use error::{ChcError, CodegenError, PortfolioError, ReplayError};
pub use oracle::{saturate, DomainSpec, Limits, OracleVerdict};
pub use portfolio::{run_portfolio, PortfolioConfig, RunOptions, SolveOutcome, Verdict};

// Compile and run every code example in the user guide as a doctest, one
// module per chapter so failures name their origin.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/clauses.md")]
    mod clauses {}
    #[doc = include_str!("../../../book/src/encodings.md")]
    mod encodings {}
    #[doc = include_str!("../../../book/src/oracle.md")]
    mod oracle {}
    #[doc = include_str!("../../../book/src/portfolio.md")]
    mod portfolio {}
    #[doc = include_str!("../../../book/src/benchmarking.md")]
    mod benchmarking {}
}
