//! Exact Lie theory for period domains.
//!
//! The crate builds root systems and Killing-normalised Weyl bases of the
//! simple complex Lie algebras, encodes Hodge data as gradings of the root
//! system, evaluates the curvature tensor of the first Pontryagin form on
//! horizontal vectors, computes Poincaré polynomials of equal-rank
//! homogeneous spaces and classifies real forms. All arithmetic is exact.

pub mod chevalley;
pub mod classify;
pub mod cohomology;
pub mod curvature;
pub mod error;
pub mod hodge;
pub mod rootsys;
pub mod scalar;
pub mod suite;

pub use error::{Error, Result};
