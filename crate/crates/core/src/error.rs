use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable '{name}' at position {pos}")]
    UnknownVariable { name: String, pos: usize },
    #[error("division by zero")]
    DivisionByZero,
    #[error("not divisible")]
    NotDivisible,
    #[error("not reduced: repeated factor {witness}")]
    NotReduced { witness: String },
    #[error("principal symbol of the zero operator")]
    ZeroOperator,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("monomial order not admissible for Weyl Groebner bases: {0}")]
    InadmissibleOrder(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("dual presentation differs from the tilde generators at index {index}: {detail}")]
    MismatchWithTilde { index: usize, detail: String },
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    /// Errors caused by the caller's input rather than by a broken invariant.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Syntax { .. }
                | Error::UnknownVariable { .. }
                | Error::NotReduced { .. }
                | Error::DimensionMismatch(_)
                | Error::Precondition(_)
                | Error::InadmissibleOrder(_)
        )
    }
}
