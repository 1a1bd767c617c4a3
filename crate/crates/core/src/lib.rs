//! Renormalized Casimir energy of a massless scalar field confined between two
//! concentric `D`-dimensional spheres with Dirichlet conditions on both.
//!
//! The crate is layered bottom-up:
//!
//! * [`specfun`]: Bessel `J`/`Y` on the half-integer order lattice, Gamma,
//!   Riemann zeta at integers, Bernoulli polynomials and Hurwitz zeta at
//!   non-positive integers.
//! * [`spectrum`]: the cross-product frequency equation, its roots, the
//!   evenly spaced large-frequency spectrum and the hyperspherical degeneracy.
//! * [`regsum`]: Abel-Plana summation and the per-mode regularized radial sum.
//! * [`energy`]: closed forms, the numeric regularized mode sum and the
//!   parallel-plate limit.
//! * [`cli`]: the `casimir` command-line front end.
//!
//! Units are `hbar = c = 1`; energies carry dimension 1/length.

pub mod cli;
pub mod energy;
mod error;
pub mod regsum;
pub mod specfun;
pub mod spectrum;

pub use error::{Error, Result};
