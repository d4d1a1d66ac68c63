//! Exact multivariate polynomials over the rationals.

mod gcd;
mod monomial;
mod parse;
mod polynomial;

use alloc::string::String;

pub use gcd::{gcd, gcd_many};
pub use monomial::{monomials_of_degree, Monomial};
pub use polynomial::{Polynomial, VarSet};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("operands live over different variable sets")]
    VarSetMismatch,
    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("variable `{0}` was not assigned a value")]
    Unassigned(String),
    #[error("exponent vector has {found} entries, expected {expected}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("gcd of two zero polynomials is undefined")]
    ZeroGcd,
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}
