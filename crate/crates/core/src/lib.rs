//! Exact computation of the index of finite-dimensional Lie algebras over the
//! rationals, together with regular functionals and a catalog of nilpotent and
//! solvable families.

#![no_std]

extern crate alloc;

pub mod arith;
pub mod catalog;
pub mod error;
pub mod index;
pub mod lie;
pub mod regular;

pub use error::{Error, Result};
