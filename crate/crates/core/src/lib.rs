//! Exact enumeration of arithmetical structures.
//!
//! For a non-negative integer matrix `L` with zero diagonal, a pair `(d, r)`
//! of positive integer vectors with `(Diag(d) - L) r = 0` and `gcd(r) = 1` is
//! an arithmetical structure. The same notion extends to dominated
//! square-free polynomials via `f_L(X) = det(Diag(X) - L)`. This crate finds
//! them all exactly, through the finite antichain of minimal vectors `d`
//! whose shifted polynomial has positive non-constant coefficients.

pub mod arith_enum;
pub mod classify;
pub mod cli;
pub mod error;
pub mod exactmat;
pub mod frontier;
pub mod graphs;
pub mod json;
pub mod poly_enum;
pub mod polyring;
pub mod solutions;

pub use error::{Error, Result};
pub use exactmat::{IndexSet, IntMatrix, PrimitiveVector};
pub use frontier::{Frontier, IntVec};
pub use polyring::{charpoly_of_matrix, parse, parse_general, GeneralPoly, Monomial, SqFreePoly};
