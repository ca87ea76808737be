//! Error type shared by every module.

use thiserror::Error;

/// Domain errors. The variant name is the stable error name shown by the CLI.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("SerNotInSim: ({0},{1}) is in ser but not in sim")]
    SerNotInSim(String, String),
    #[error("SimInlOverlap: ({0},{1}) is in both sim and inl")]
    SimInlOverlap(String, String),
    #[error("ReflexivePair: ({0},{0})")]
    ReflexivePair(String),
    #[error("UnknownEvent: {0}")]
    UnknownEvent(String),
    #[error("UniverseTooLarge: more than {0} steps")]
    UniverseTooLarge(usize),
    #[error("ClassCapExceeded: more than {0} members")]
    ClassCapExceeded(usize),
    #[error("InlNotEmpty: operation requires a comtrace alphabet (inl = empty)")]
    InlNotEmpty,
    #[error("NotStratified: {0}")]
    NotStratified(String),
    #[error("CarrierTooLarge: {size} points exceeds cap {cap}")]
    CarrierTooLarge { size: usize, cap: usize },
    #[error("AxiomViolation: {axiom} at {witness}")]
    AxiomViolation { axiom: String, witness: String },
    #[error("EmptyZ: no admissible step over remaining {0}")]
    EmptyZ(String),
    #[error("NotTraceAlphabet: sim and ser must coincide and inl must be empty")]
    NotTraceAlphabet,
    #[error("BoundExceeded: language larger than {0} sequences")]
    BoundExceeded(usize),
    #[error("ParseError: {0}")]
    Parse(String),
    #[error("InvalidStep: {0} is not a clique of sim")]
    InvalidStep(String),
}

impl Error {
    /// Stable variant name.
    pub fn name(&self) -> &'static str {
        match self {
            Error::SerNotInSim(..) => "SerNotInSim",
            Error::SimInlOverlap(..) => "SimInlOverlap",
            Error::ReflexivePair(..) => "ReflexivePair",
            Error::UnknownEvent(..) => "UnknownEvent",
            Error::UniverseTooLarge(..) => "UniverseTooLarge",
            Error::ClassCapExceeded(..) => "ClassCapExceeded",
            Error::InlNotEmpty => "InlNotEmpty",
            Error::NotStratified(..) => "NotStratified",
            Error::CarrierTooLarge { .. } => "CarrierTooLarge",
            Error::AxiomViolation { .. } => "AxiomViolation",
            Error::EmptyZ(..) => "EmptyZ",
            Error::NotTraceAlphabet => "NotTraceAlphabet",
            Error::BoundExceeded(..) => "BoundExceeded",
            Error::Parse(..) => "ParseError",
            Error::InvalidStep(..) => "InvalidStep",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
