use thiserror::Error;

use crate::verdict::CheckResult;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("scalars or objects over different fields")]
    FieldMismatch,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid structure-constant entry: {0}")]
    InvalidEntry(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("axiom violated: {}", .0.detail)]
    Axiom(CheckResult),
    #[error("not a {level} morphism: {}", .result.detail)]
    NotMorphism { level: &'static str, result: CheckResult },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("Hopf algebra has no antipode attached")]
    MissingAntipode,
    #[error("unsupported characteristic: {0}")]
    UnsupportedCharacteristic(String),
    #[error("resource budget exceeded: {0}")]
    Budget(String),
    #[error("unsupported example: {0}")]
    UnsupportedExample(String),
}
