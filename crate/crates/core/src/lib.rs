//! Exact computer algebra for Lie-Yamaguti algebras.
//!
//! A Lie-Yamaguti algebra is a vector space carrying a skew bilinear bracket
//! and a trilinear bracket (skew in its first two slots) tied together by four
//! compatibility axioms. This crate represents such algebras over ℚ by dense
//! structure-constant tensors and makes every defining identity an exactly
//! checkable predicate: algebra and representation axioms, the graded bracket
//! on the cochain complex, Maurer-Cartan conditions, relative Rota-Baxter
//! operators with their derived L∞ operations, the associated cohomology
//! complexes, and linear / higher-order deformation theory.
//!
//! All arithmetic is exact rational; no floating point is used anywhere.
//!
//! Degree bookkeeping: a cochain of graded degree `p ≥ 1` is a pair of
//! multilinear maps on `(∧²g)⊗p` and `(∧²g)⊗p ⊗ g`; a cochain of degree `0`
//! is a single linear map. The classical cochain *level* used by the
//! cohomology groups relates to the graded degree by `level = degree + 1`.
//! Public cohomology entry points speak levels, the cochain calculus speaks
//! degrees.

pub mod algebra;
pub mod assoc;
pub mod cochain;
pub mod deformation;
pub mod error;
pub mod fixtures;
pub mod limits;
pub mod linalg;
pub mod rb;
pub mod rb_cohomology;
pub mod report;
pub mod sampling;
pub mod scalar;
pub mod selftest;
pub mod wedge;
pub mod yamaguti;

pub use algebra::{LyAlgebra, Representation};
pub use assoc::AssocAlgebra;
pub use cochain::Cochain;
pub use error::LyError;
pub use limits::Limits;
pub use linalg::Mat;
pub use rb::RbContext;
pub use rb_cohomology::RbComplex;
pub use report::{Check, Report};
pub use scalar::Rat;
