use thiserror::Error;

use crate::separation::Element;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Every failure the library can report.
///
/// The `Display` form starts with the variant name so the CLI can surface it
/// verbatim on stderr.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("BadToken(line {line}): {detail}")]
    BadToken { line: usize, detail: String },
    #[error("DuplicateEdge(line {line}): {u} {v}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("HasCycle(line {line}): {u} {v}")]
    HasCycle { line: usize, u: usize, v: usize },
    #[error("NotConnected: {components} components")]
    NotConnected { components: usize },
    #[error("EmptyTree: the document mentions no edges")]
    EmptyTree,
    #[error("UnknownVertex({0})")]
    UnknownVertex(usize),
    #[error("NotALeaf({0})")]
    NotALeaf(usize),
    #[error("InvalidPath(path {index}): {detail}")]
    InvalidPath { index: usize, detail: String },
    #[error("UnknownElement({0})")]
    UnknownElement(Element),
    #[error("PreconditionViolated: {0}")]
    PreconditionViolated(String),
    #[error("InvalidPair: {0}")]
    InvalidPair(String),
    #[error("TreeTooSmall: n = {0}")]
    TreeTooSmall(usize),
    #[error("InternalClassificationError: {0}")]
    InternalClassification(String),
    #[error("NotConsecutive: {0}")]
    NotConsecutive(String),
    #[error("UnsupportedTree: {0}")]
    UnsupportedTree(String),
    #[error("TooLarge: {what} = {got} exceeds cap {cap}")]
    TooLarge { what: &'static str, got: usize, cap: usize },
    #[error("Timeout: budget of {budget_ms} ms exhausted after {nodes} nodes")]
    Timeout { budget_ms: u64, nodes: u64 },
    #[error("NotSeparating({0}, {1})")]
    NotSeparating(Element, Element),
    #[error("NotCovering({0})")]
    NotCovering(Element),
    #[error("ReportLengthMismatch: report has {got} outcomes, system has {expected} paths")]
    ReportLengthMismatch { expected: usize, got: usize },
}

impl Error {
    /// The bare variant name, e.g. `"HasCycle"`.
    pub fn name(&self) -> &'static str {
        match self {
            Error::BadToken { .. } => "BadToken",
            Error::DuplicateEdge { .. } => "DuplicateEdge",
            Error::HasCycle { .. } => "HasCycle",
            Error::NotConnected { .. } => "NotConnected",
            Error::EmptyTree => "EmptyTree",
            Error::UnknownVertex(_) => "UnknownVertex",
            Error::NotALeaf(_) => "NotALeaf",
            Error::InvalidPath { .. } => "InvalidPath",
            Error::UnknownElement(_) => "UnknownElement",
            Error::PreconditionViolated(_) => "PreconditionViolated",
            Error::InvalidPair(_) => "InvalidPair",
            Error::TreeTooSmall(_) => "TreeTooSmall",
            Error::InternalClassification(_) => "InternalClassificationError",
            Error::NotConsecutive(_) => "NotConsecutive",
            Error::UnsupportedTree(_) => "UnsupportedTree",
            Error::TooLarge { .. } => "TooLarge",
            Error::Timeout { .. } => "Timeout",
            Error::NotSeparating(..) => "NotSeparating",
            Error::NotCovering(_) => "NotCovering",
            Error::ReportLengthMismatch { .. } => "ReportLengthMismatch",
        }
    }
}
