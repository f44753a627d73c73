//! Exact rational computations for configuration spaces, partition-lattice
//! order complexes and spaces of equivariant maps between spheres.
//!
//! Every number the crate produces is computed over `ℚ` or `ℤ` without
//! floating point, and most have at least two independent routes so they
//! can be checked against each other (see [`verify`]).

pub mod confighom;
pub mod error;
pub mod graded;
pub mod linalg;
pub mod mapspace;
pub mod partitions;
pub mod resolution;
pub mod series;
pub mod specseq;
pub mod verify;

pub use error::{Error, Result};
pub use graded::GradedDims;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/series.md")]
    mod series {}
    #[doc = include_str!("../../../book/src/configurations.md")]
    mod configurations {}
    #[doc = include_str!("../../../book/src/spectral-sequence.md")]
    mod spectral_sequence {}
    #[doc = include_str!("../../../book/src/partitions.md")]
    mod partitions {}
    #[doc = include_str!("../../../book/src/resolution.md")]
    mod resolution {}
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
}
