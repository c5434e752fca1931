//! Exact symbolic computation of quaternionic current algebras on S³.
//!
//! Layers, bottom up: [`scalar`] (the coefficient field), [`laurent`] (Laurent-type
//! polynomials on ℂ² ∖ {0}), [`spinor`] (the quaternionic spinor algebra and its
//! eigenspinor basis), [`cocycle`], [`matquat`] (quaternionic matrices and sl(n,ℂ)
//! data) and [`current`] (the extended current algebras).

pub mod cocycle;
pub mod current;
pub mod error;
pub mod generate;
pub mod laurent;
pub mod linalg;
pub mod matquat;
pub mod parse;
pub mod sample;
pub mod scalar;
pub mod spinor;
pub mod suites;

pub use error::{MathError, ParseError};
pub use laurent::{LaurentPoly, Monomial, S3Poly, Var};
pub use scalar::Scalar;
