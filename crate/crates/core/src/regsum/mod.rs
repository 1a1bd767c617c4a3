//! Regularized summation: Abel-Plana formulas and the per-mode radial sum.

mod abel_plana;
mod quadrature;
mod radial;

pub use abel_plana::{
    abel_plana_half, abel_plana_integer, AnalyticFunction, FnPair, Growth, TailBound,
};
pub use quadrature::{integrate, Quadrature, QuadratureConfig};
pub use radial::{bose_integral, reg_radial_sum, RegularizedSummand};
