use std::ops::Range;

use crate::algebra::Signature;

/// Errors raised by the algebra, the solver front end and the text grammar.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("invalid signature Cl({p},{q}): need 1 <= p+q <= 3")]
    InvalidSignature { p: i64, q: i64 },

    #[error("cannot parse signature {0:?}: expected \"p,q\"")]
    MalformedSignature(String),

    #[error("incompatible operands: {left} vs {right}")]
    SignatureMismatch { left: Signature, right: Signature },

    #[error("operation requires a {expected}-dimensional algebra, got {found}")]
    WrongDimension { expected: usize, found: Signature },

    #[error("expected {expected} coefficients for {signature}, got {found}")]
    CoefficientCount {
        signature: Signature,
        expected: usize,
        found: usize,
    },

    #[error("parse error at {span:?}: {message}")]
    Parse { message: String, span: Range<usize> },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    /// The linear recovery of the vector parts is singular for this (s, S).
    #[error("generic recovery inapplicable: denominator {denominator:e} below tolerance")]
    GenericInapplicable { denominator: f64 },

    /// A Sullivan branch whose denominator vanishes.
    #[error("matrix square-root branch (eps1={eps1}, eps2={eps2}) is singular")]
    SingularBranch { eps1: i8, eps2: i8 },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
