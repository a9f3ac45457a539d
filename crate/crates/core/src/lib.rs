//! Exact computations with presentations of binary quadratic operads.
//!
//! The engine is generic over [`Scalar`]; the aliases below fix it to exact rationals.

pub mod algcheck;
pub mod catalog;
pub mod dsl;
pub mod error;
pub mod exactlin;
pub mod quad;
pub mod scalar;
pub mod trees;

pub use error::{Error, Result};
pub use scalar::Scalar;
pub use trees::{Mode, ReplicaTag};

/// Exact rational numbers.
pub type Rat = num_rational::BigRational;
pub type Mat = exactlin::Mat<Rat>;
pub type Subspace = exactlin::Subspace<Rat>;
pub type GenSpace = trees::GenSpace<Rat>;
pub type TreeSum = trees::TreeSum<Rat>;
pub type Presentation = quad::Presentation<Rat>;
pub type GenMap = quad::GenMap<Rat>;
pub type FinAlgebra = algcheck::FinAlgebra<Rat>;
