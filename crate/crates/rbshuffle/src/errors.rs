//! Error type shared across the kernel.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KernelError {
    #[error("mode mismatch between operands")]
    ModeMismatch,
    #[error("generator `{0}` is not declared")]
    UndeclaredGenerator(String),
    #[error("invalid generator name `{0}`")]
    InvalidGeneratorName(String),
    #[error("duplicate generator `{0}`")]
    DuplicateGenerator(String),
    #[error("involution sends `{0}` to `{1}` but does not map it back")]
    BrokenInvolution(String, String),
    #[error("generator `{0}` carries no coproduct rule")]
    MissingCoproductRule(String),
    #[error("invalid monomial text `{0}`: {1}")]
    InvalidMonomial(String, String),
    #[error("invalid scalar literal `{0}`")]
    InvalidScalar(String),
    #[error("element contains the empty word, outside the positive-degree module")]
    NotPositive,
    #[error("word contains a unit letter, which the reduced carrier forbids")]
    UnitLetter,
    #[error("operand is not a single basis word")]
    NotBasisWord,
    #[error("generator images do not commute, so the assignment does not factor through the commutative base")]
    NonMultiplicative,
    #[error("invalid element payload: {0}")]
    InvalidPayload(String),
    #[error("{0}")]
    Unsupported(String),
}
