//! Error types shared across the crate.

use thiserror::Error;

/// Errors raised by group construction and the subgroup search engines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    /// Closure enumeration passed the element cap; the input is runaway.
    #[error("group closure exceeded the element cap of {cap}")]
    CapExceeded { cap: usize },

    /// Generators of mixed element kinds or mismatched degree/shape.
    #[error("generator kind/shape mismatch: {0}")]
    KindMismatch(String),

    /// The exhaustive subgroup oracle only runs on groups of order <= 200.
    #[error("subgroup oracle refused: order {order} exceeds the oracle limit of {limit}")]
    OracleScopeExceeded { order: usize, limit: usize },

    /// The automorphism search only runs on groups of order <= 48 with a
    /// greedy generating set of size <= 3.
    #[error("automorphism search refused: {0}")]
    AutScopeExceeded(String),

    /// A symbolic group spec that cannot be realized.
    #[error("invalid group spec: {0}")]
    InvalidSpec(String),

    /// Extension-structure analysis found no normal A_n/S_n with abelian quotient.
    #[error("no normal subgroup isomorphic to A_n or S_n (n in {{4,5}}) with abelian quotient")]
    NoSuitableNormalSubgroup,
}

/// Errors raised by the number-field layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    /// Operations on square-free parts and radicals reject zero.
    #[error("zero is not a valid radicand")]
    ZeroInput,

    /// Division by the zero element of a field.
    #[error("division by zero")]
    DivisionByZero,

    /// Mixing elements of different ambient fields.
    #[error("ambient field mismatch: {0} vs {1}")]
    AmbientMismatch(String, String),
}

/// Errors raised by the classification tables.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    /// The conic-bundle table is defined on {Cyclic, Dihedral, A4, S4} only.
    #[error("conic-bundle bound is undefined for the pair ({0}, {1})")]
    UnsupportedPair(String, String),

    /// del Pezzo degrees range over 1..=9.
    #[error("del Pezzo degree {0} out of range 1..=9")]
    DegreeOutOfRange(u8),
}

/// A parse error carrying the byte offset of the offending character, so
/// front ends can render a caret under the input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at offset {offset}: {message}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(offset: usize, message: impl Into<String>) -> Self {
        ParseError {
            offset,
            message: message.into(),
        }
    }
}

/// A field-descriptor string that parses structurally but names a field kind
/// outside the supported scope (rationals, multiquadratic towers, R, C).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unsupported field kind `{kind}`")]
pub struct UnsupportedField {
    pub kind: String,
}
