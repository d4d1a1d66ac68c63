//! Determinantal resultants over exact rational arithmetic.
//!
//! The crate covers multivariate polynomials and fraction-free linear
//! algebra, the partition combinatorics of Lascoux resolutions, Chern class
//! degree formulas, the resultant matrices `σ_d` with gcd-of-minors and rank
//! tests, and Chow forms of rational normal scrolls.

#![no_std]

extern crate alloc;

pub mod chern;
pub mod matrix;
pub mod partition;
pub mod poly;
pub mod problem;
pub mod resultant;
pub mod scroll;

pub use matrix::{det_fraction_free, rank, ExactDomain, Matrix, MatrixError};
pub use poly::{gcd, gcd_many, Monomial, PolyError, Polynomial, VarSet};
pub use problem::{Existence, ProblemSpec};
