//! Hybrid solver for quadratically constrained quadratic programs (QCQPs).
//!
//! Decision variables are encoded in a simulated parameterized quantum state
//! (amplitudes for complex problems, measurement probabilities for
//! non-negative real problems) and the circuit angles are optimized together
//! with dual multipliers by a primal-dual interior-point method. A classical
//! baseline runs the same interior-point engine directly on the original
//! variables, and benchmark generators produce random Max-Cut and optimal
//! power flow instances.
//!
//! The crate is `no_std` + `alloc`; IO, file formats, and the command line
//! live in the companion `vqcqp-cli` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod baseline;
pub mod bench;
pub mod circuit;
pub mod estimator;
pub mod ipm;
pub mod model;

#[cfg(test)]
pub(crate) mod testutil;

pub use num_complex::Complex64;
