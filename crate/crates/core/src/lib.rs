//! Riordan arrays of polynomials and the periodicity of their column
//! partial sums, computed exactly over cyclotomic fields.

pub mod circulant;
pub mod classify;
pub mod error;
pub mod exactnum;
pub mod graphs;
pub mod oracles;
pub mod periodicity;
pub mod riordan;
pub mod series;

pub use error::{Error, Result};

// The guide's code listings run as doctests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/exact-arithmetic.md")]
    mod exact_arithmetic {}
    #[doc = include_str!("../../../book/src/arrays.md")]
    mod arrays {}
    #[doc = include_str!("../../../book/src/partial-sums.md")]
    mod partial_sums {}
    #[doc = include_str!("../../../book/src/periodicity.md")]
    mod periodicity {}
    #[doc = include_str!("../../../book/src/classification.md")]
    mod classification {}
    #[doc = include_str!("../../../book/src/graphs.md")]
    mod graphs {}
    #[doc = include_str!("../../../book/src/identities.md")]
    mod identities {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
    #[doc = include_str!("../../../book/src/json.md")]
    mod json {}
    #[doc = include_str!("../../../README.md")]
    mod readme {}
}
