//! Exact coefficient field: multivariate integer polynomials and their
//! quotients over a fixed symbol table.

mod modp;
mod monomial;
mod parse;
mod poly;
mod ratfun;
mod symbols;

pub use monomial::Monomial;
pub use parse::{collect_symbols, parse_ratfun};
pub use poly::MultiPoly;
pub use ratfun::RatFun;
pub use symbols::{Symbol, SymbolTable, MAX_SYMBOLS};
