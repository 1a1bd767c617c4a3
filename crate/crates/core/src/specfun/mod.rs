//! Special-function kernel.
//!
//! Everything here is a pure function of its arguments. The Bessel routines
//! only accept orders on the half-integer lattice `{0, 1/2, 1, 3/2, ...}`,
//! which is all the spherical-shell spectrum ever needs.

mod bernoulli;
mod bessel;
mod gamma;
mod order;
mod zeta;

pub use bernoulli::{
    bernoulli_number, bernoulli_poly, bernoulli_poly_exact, hurwitz_zeta_neg,
    hurwitz_zeta_neg_exact,
};
pub use bessel::{bessel_j, bessel_jy, bessel_y};
pub use gamma::{gamma_fn, ln_gamma};
pub use order::{BesselOrder, ZetaArg};
pub use zeta::{riemann_zeta_int, zeta_eta_series};
