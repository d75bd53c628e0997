use thiserror::Error;

use crate::parse::ParseError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("matrix is singular (determinant zero)")]
    SingularMatrix,
    #[error("matrix is not parabolic")]
    NotParabolic,
    #[error("generator `{0}` does not have determinant 1")]
    NotUnimodular(String),
    #[error("element is not in the real subfield Q(sqrt2): {0}")]
    NotReal(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("unknown name `{name}` in namespace `{namespace}`")]
    UnknownName { name: String, namespace: String },
    #[error("invalid n = {n} for {what}: {reason}")]
    InvalidN {
        what: String,
        n: i64,
        reason: String,
    },
    #[error("parabolic elements do not commute")]
    NotCommuting,
    #[error("invalid circle: {0}")]
    InvalidCircle(String),
    #[error("invalid polyhedron data: {0}")]
    Config(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
