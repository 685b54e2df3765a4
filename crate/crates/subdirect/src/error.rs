use std::path::PathBuf;

use serde::Serialize;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] subdirect_core::Error),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("invalid document: {0}")]
    Document(String),
    /// Bad invocation discovered after argument parsing.
    #[error("{0}")]
    Usage(String),
}

pub type CliResult<T> = Result<T, CliError>;

impl CliError {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        CliError::Io { path: path.into(), source }
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }

    pub fn kind(&self) -> &'static str {
        use subdirect_core::Error as E;
        match self {
            CliError::Core(e) => match e {
                E::Empty | E::NonSquare { .. } | E::IndexOutOfRange { .. } | E::DuplicateName(_) => "invalid-table",
                E::NotAssociative { .. } => "not-associative",
                E::UnknownElement(_) | E::ElementOutOfRange { .. } => "unknown-element",
                E::SizeCap { .. } | E::PeriodCap { .. } => "cap-exceeded",
                E::NotClosed => "not-closed",
                E::ArityMismatch { .. } | E::ArityTooSmall { .. } => "arity",
                E::NotCommutative | E::NotSemilattice | E::TrivialSemilattice | E::NotAnIdeal => "wrong-kind",
                E::Precondition(_) | E::ClassTooSmall(_) | E::NotStrictlyComparable => "precondition",
                E::EmptyPeriod | E::Parse(_) => "parse",
                E::InadmissibleM { .. } | E::InvalidParams(_) => "invalid-params",
                E::BudgetExceeded { .. } => "budget-exceeded",
                E::CrossBase | E::ExponentMismatch { .. } => "cross-base",
                E::UnknownName(_) => "unknown-name",
            },
            CliError::Io { .. } => "io",
            CliError::Document(_) => "document",
            CliError::Usage(_) => "usage",
        }
    }

    /// The machine-readable form written to stderr.
    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Body<'a> {
            kind: &'a str,
            message: String,
            exit_code: u8,
        }
        #[derive(Serialize)]
        struct Wrapper<'a> {
            error: Body<'a>,
        }
        let body = Body { kind: self.kind(), message: self.to_string(), exit_code: self.exit_code() };
        serde_json::to_string(&Wrapper { error: body }).expect("error JSON")
    }
}
