use thiserror::Error;

use crate::exactfield::FieldError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("{0} requires a unital (hurwitz) algebra")]
    NotHurwitz(&'static str),
    #[error("unsupported dimension {0}")]
    Dimension(usize),
    #[error("field mismatch")]
    FieldMismatch,
    #[error("inconsistent quadratic form: {0}")]
    BadForm(String),
    #[error("not an automorphism: {0}")]
    NotAutomorphism(String),
    #[error("map does not satisfy tau^3 = id")]
    NotOrder3,
    #[error("element is not an idempotent")]
    NotIdempotent,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("search exhausted: {0}")]
    SearchExhausted(String),
    #[error("no feasible strategy: {0}")]
    NoStrategy(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("wrong characteristic: {0}")]
    Characteristic(String),
    #[error("map is not nilpotent")]
    NotNilpotent,
    #[error("unexpected Segre symbol {0}")]
    UnexpectedSegre(String),
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
    #[error("tau_e has a para-unit in C_tau, so e lives in a para-Cayley algebra")]
    ParaCayleyIdempotent,
    #[error("algebra has a para-unit, so it is not an Okubo algebra")]
    HasParaUnit,
}

pub type Result<T> = std::result::Result<T, Error>;
