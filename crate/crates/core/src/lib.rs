//! Simulation and analysis library for fault-tolerant quantum computation with
//! hybrid cat-code / single-photon qubits.
//!
//! The crate is organized around one pipeline:
//!
//! - [`analytics`]: closed-form cat-state quantities, Bell-measurement outcome
//!   classification for the HA and SDR detector schemes, and per-parity fusion
//!   error rates computed by exact coherent-branch enumeration.
//! - [`loss`]: photon-loss channel coefficients of a hybrid qubit and the
//!   per-fusion error rates `P_X`, `P_Z(unloc)`, `P_Z(loc)` as functions of
//!   `(scheme, alpha, eta)`.
//! - [`fock`]: a truncated Fock-space simulator of the measurement circuits,
//!   used as an independent brute-force oracle for every closed form above.
//! - [`rhg`] and [`decoder`]: the RHG primal lattice, per-qubit error
//!   assignment, syndrome extraction and weighted minimum-weight
//!   perfect-matching decoding.
//! - [`montecarlo`]: logical error rate estimation, loss-threshold scans and
//!   optimal-amplitude search.
//! - [`steane`]: circuit-based comparison via telecorrection of the seven-qubit
//!   code with concatenation-level recursion.
//! - [`resources`]: offline state generation costs and total resource overhead.

pub mod analytics;
pub mod decoder;
pub mod error;
pub mod fock;
pub mod loss;
pub mod montecarlo;
pub mod resources;
pub mod rhg;
pub mod rng;
pub mod steane;

pub use error::{Error, Result};
