//! Exact q-expansion engine.
//!
//! Expands formal power series in the base `z^n (az;q)_n / (bz;q)_n`, builds
//! the base-change matrix and its inverse, evaluates the closed coefficient
//! formula, and verifies a corpus of q-series identities exactly at finite
//! truncation order, with an arbitrary-precision numeric cross-check.

pub mod coeffring;
pub mod error;
pub mod exec;
pub mod identities;
pub mod inversion;
pub mod numeric;
pub mod rng;
pub mod series;

pub use coeffring::{MultiPoly, RatFun, Symbol, SymbolTable};
pub use error::{Error, Result};
