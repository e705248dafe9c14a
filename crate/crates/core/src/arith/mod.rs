//! Exact scalars, polynomials and dense rational linear algebra.

mod linear;
mod matrix;
mod monomial;
mod poly;
mod rational;

pub use linear::LinearForm;
pub use matrix::{RationalMatrix, Subspace};
pub use monomial::Monomial;
pub use poly::{PolyError, Polynomial};
pub use rational::{ParseRationalError, Rational};
