//! Special functions and the quadrature engines used throughout the crate.

pub mod bessel;
pub mod gauss;
pub mod hermite;
mod kronrod;
pub mod quadrature;
pub mod sum;

pub use bessel::{bessel, j0, k0, BesselKind};
pub use hermite::{hermite2, hermite2_sequence, MAX_HERMITE_ORDER};
pub use quadrature::{
    integrate_halfline, integrate_halfline_vec, integrate_interval, integrate_interval_vec,
    integrate_realline, integrate_realline_vec, Estimate, HalflineRule, QuadratureConfig,
    ReallineRule, VecIntegral,
};
