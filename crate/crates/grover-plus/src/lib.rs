//! Hamming-weight-aware quantum search.
//!
//! Implements amplitude amplification with a biased Hadamard rotation whose
//! polar angle is chosen by the Hamming weight of the search target, along
//! with Dicke state preparation and a working-registry Grover baseline. Every
//! simulated trajectory can be checked against a closed-form two-level
//! oscillation model.
//!
//! The crate is organized as a library first; see the runnable programs in
//! `examples/` for a tour of each capability, and the `grover-plus` binary
//! for a batch harness (`simulate`, `sweep`, `verify`, `table`).

pub mod analytic;
pub mod bitstring;
pub mod cli;
mod error;
pub mod gates;
pub mod search;
pub mod statevec;
pub mod verify;

pub use error::{Error, Result};
pub use gates::{PolarAngle, TargetSpec};
pub use statevec::StateVector;
