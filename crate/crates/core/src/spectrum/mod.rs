//! Eigenfrequencies of the Dirichlet annulus between two concentric spheres.

mod degeneracy;
mod geometry;
mod roots;

pub use degeneracy::{degeneracy, DegeneracyPolynomial};
pub use geometry::{Geometry, ModeIndex};
pub use roots::{
    asymptotic_omega, asymptotic_omega_for_order, find_roots, freq_eq, relative_residual,
    root_window,
};
