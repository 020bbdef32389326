#![cfg_attr(not(test), no_std)]
//! Exact restricted and vector partition functions.
//!
//! The counting functions are assembled from Sylvester waves: finite sums of
//! higher-order Bernoulli polynomials multiplied by prime radical
//! circulators. Everything is exact; there is no floating point anywhere in
//! the public surface.

extern crate alloc;

pub mod error;
pub mod families;
pub mod numeric;
pub mod quasi;
pub mod scalar;
pub mod vector;
pub mod series;

pub use error::{Error, Result};
