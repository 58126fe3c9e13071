//! Exact computations with orthogonal Gelfand-Zeitlin algebras: skew operators,
//! divided differences, singular Gelfand-Zeitlin modules on finite windows and
//! lattice walks. The guide in `book/` is compiled as doctests.

pub mod cli;
pub mod combinat;
pub mod divdiff;
pub mod error;
pub mod exactalg;
pub mod gzmod;
pub mod invariants;
pub mod latwalk;
pub mod skewops;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/arithmetic.md")]
    mod arithmetic {}
    #[doc = include_str!("../../../book/src/operators.md")]
    mod operators {}
    #[doc = include_str!("../../../book/src/divided-differences.md")]
    mod divided_differences {}
    #[doc = include_str!("../../../book/src/modules.md")]
    mod modules {}
    #[doc = include_str!("../../../book/src/walks.md")]
    mod walks {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
