//! Exact linear algebra over the bicomplex numbers `ℂ₂ = {z₁ + i₂z₂}`.
//!
//! Scalars carry Gaussian-rational coordinates, so every singularity and
//! rank decision is an exact comparison with zero. The crate provides
//!
//! * [`Bicomplex`] arithmetic with the idempotent decomposition
//!   `ξ = 1ξ·e₁ + 2ξ·e₂`,
//! * dense [`BicomplexMatrix`] values with their component matrices,
//!   determinants and e₁/e₂/e₁e₂ classification,
//! * the chain, row, column and idempotent ranks in [`rank`],
//! * idempotent row/column spaces and subspace lifts in [`spaces`],
//! * brute-force references and seeded generators in [`oracle`].

pub mod bicomplex;
pub mod cmatrix;
pub mod error;
pub mod matrix;
pub mod oracle;
pub mod rank;
pub mod scalar;
pub mod spaces;

pub use bicomplex::{Bicomplex, SingularityClass};
pub use cmatrix::ComplexMatrix;
pub use error::{Error, Result};
pub use matrix::{BicomplexMatrix, IndexSet, MatrixClass};
pub use rank::{ChainCertificate, ChainLevel, RankReport};
pub use scalar::{rational, GaussianRational, Rational};
pub use spaces::{BicomplexSpan, ComplexSubspace, Idempotent};
