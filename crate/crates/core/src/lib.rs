//! Exact computations with finite-dimensional algebras, coalgebras,
//! bialgebras and Hopf algebras.
//!
//! Objects are stored as sparse structure constants over ℚ or 𝔽_p. On top of
//! them the crate provides antipodes as convolution inverses, decision
//! procedures for epimorphisms of algebras and monomorphisms of coalgebras,
//! coradicals, freeness tests for extensions, and degree-truncated models of
//! free bialgebras and free Hopf algebras.

pub mod categorical;
pub mod convolution;
mod error;
pub mod free;
pub mod library;
pub mod linalg;
pub mod structure;
pub mod verdict;

pub use error::{Error, Result};
pub use linalg::{Field, Matrix, Scalar, SparseTensor3};
pub use structure::{Algebra, Bialgebra, Coalgebra, HopfAlgebra, LinearMap};
pub use verdict::{CheckResult, Verdict, Witness};
