//! Finite sums `Σ f·π` of rational coefficients times affine symmetries,
//! the Gelfand-Zeitlin generators and the invariance checker.

mod generators;
mod operator;
mod symmetry;

pub use generators::{build_generators, check_invariance, gz_coefficient, GZGenerators, InvarianceReport, Sign};
pub use operator::SkewOperator;
pub use symmetry::AffineSymmetry;
