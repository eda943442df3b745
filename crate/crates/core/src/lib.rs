//! Exact index and nullity of the orientable cubic focal manifolds
//! CP², HP², OP² in the round spheres S⁷, S¹³, S²⁵.
//!
//! The Jacobi operator on the normal bundle of each focal manifold
//! `G/K` reduces to a shifted Casimir operator of `G`. Its spectrum is
//! then a question about highest weights, Casimir eigenvalues and the
//! multiplicity of the slice representation in `V_λ|_K`. Every number
//! in the pipeline is an exact rational, so null modes are decided by
//! equality rather than by a floating-point tolerance.
//!
//! Modules, bottom-up:
//!
//! * [`root_data`]: the six root systems A1, A2, C2, C3, B4, F4.
//! * [`normalization`]: metric constants relating Killing forms, trace
//!   forms and the focal metrics.
//! * [`rep_core`]: Weyl dimension, Freudenthal multiplicities, Casimir
//!   eigenvalues, bounded dominant-weight enumeration.
//! * [`branching`]: restriction to `U(2)`, `Sp(2)·Sp(1)`, `Spin(9)`.
//! * [`clifford`]: explicit Clifford systems on ℝ⁴, ℝ⁸, ℝ¹⁶.
//! * [`jacobi`]: the spectrum report with index, nullity and Killing
//!   nullity.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod branching;
pub mod clifford;
mod error;
pub mod jacobi;
pub mod normalization;
pub mod rep_core;
pub mod root_data;
pub mod tables;

pub use error::{Error, Result};

/// Exact rational number used throughout the crate.
pub type Rational = num_rational::Ratio<i64>;

/// Shorthand for `p/q` as a [`Rational`].
#[inline]
pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(p, q)
}

/// Shorthand for an integer as a [`Rational`].
#[inline]
pub fn int(p: i64) -> Rational {
    Rational::from_integer(p)
}
