use thiserror::Error;

use crate::cells::Violation;

/// Errors produced by the library.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("group of type {ty} with n = {n} exceeds the configured cap of {cap}")]
    SizeLimit { ty: char, n: usize, cap: usize },
    #[error("shape is empty")]
    EmptyShape,
    #[error("{0}")]
    Domain(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("not a content vector: entries {i} and {j} are equal without both neighbours in between")]
    InvalidContentVector { i: usize, j: usize },
    #[error("functional is not generic for the cell: {}", format_violations(.0))]
    NotGeneric(Vec<Violation>),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("inconsistent basic flat: reflection {0} is constrained to both +1 and -1")]
    InconsistentFlat(String),
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
}

fn format_violations(v: &[Violation]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("; ")
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
