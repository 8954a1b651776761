//! Error types shared across the crate.

use thiserror::Error;

/// Errors raised while parsing or validating a CHC system.
#[derive(Debug, Error)]
pub enum ChcError {
    #[error("syntax error at {line}:{col}: {msg}")]
    Syntax { line: u32, col: u32, msg: String },
    #[error("UnsupportedFeature: {0}")]
    Unsupported(String),
    #[error("SortError: {0}")]
    Sort(String),
    #[error("ArityError: {0}")]
    Arity(String),
    #[error("MixedTheory: both Int and BitVec sorts occur in one system")]
    MixedTheory,
}

impl ChcError {
    pub fn syntax(line: u32, col: u32, msg: impl Into<String>) -> Self {
        ChcError::Syntax {
            line,
            col,
            msg: msg.into(),
        }
    }
}

/// Errors raised by the C code generator.
#[derive(Debug, Error)]
pub enum CodegenError {
    #[error("ForwardRequiresLinear: the forward encoding only supports linear systems")]
    ForwardRequiresLinear,
    #[error("UnsupportedWidth: bitvector width {0} exceeds 64")]
    UnsupportedWidth(u32),
    #[error("integer literal {0} does not fit the C carrier type")]
    LiteralOverflow(String),
}

/// Errors raised by the replay bridge from oracle derivations to compiled programs.
#[derive(Debug, Error)]
pub enum ReplayError {
    #[error("ReplayUnsupported: replay is only defined for linear systems")]
    ReplayUnsupported,
    #[error("derivation does not validate against the system")]
    InvalidDerivation,
}

/// Errors raised by portfolio configuration and orchestration.
#[derive(Debug, Error)]
pub enum PortfolioError {
    #[error("PlanTheoryMismatch: no stage in the plan routes theory {0}")]
    PlanTheoryMismatch(String),
    #[error("unknown actor {0:?} referenced by plan")]
    UnknownActor(String),
    #[error("invalid portfolio config: {0}")]
    Config(String),
    #[error("codegen failed: {0}")]
    Codegen(#[from] CodegenError),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}
