//! Exact sparse multivariate polynomials and rational functions over ℚ.

mod gcd;
mod linalg;
mod poly;
mod ratfunc;
mod scalar;
mod var;

pub use gcd::gcd;
pub use linalg::{nullity, rank, solve, sparse_rank, Field, Matrix};
pub use poly::{q, q_frac, Monomial, Polynomial, Q};
pub use ratfunc::RationalFunction;
pub use scalar::Scalar;
pub use var::VarId;
