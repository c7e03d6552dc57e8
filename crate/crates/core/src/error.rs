use thiserror::Error;

/// Errors raised by the symbolic and numeric engines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("symbol table mismatch: [{left}] vs [{right}]")]
    SymbolMismatch { left: String, right: String },

    #[error("symbol table holds at most {max} symbols, got {got}")]
    TooManySymbols { max: usize, got: usize },

    #[error("duplicate symbol `{0}`")]
    DuplicateSymbol(String),

    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("pole: {0}")]
    Pole(String),

    #[error("series with zero constant term is not invertible")]
    NonInvertible,

    #[error("index {index} exceeds truncation order {order}")]
    Order { index: usize, order: usize },

    #[error("matrix is singular: diagonal entry ({0},{0}) is not 1")]
    Singular(usize),

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("domain error: {0}")]
    Domain(String),
}

pub type Result<T> = std::result::Result<T, Error>;
