//! The free relativistic Schrödinger equation `i ∂_τ Ψ = √(1 − ∂_η²) Ψ`
//! in units of the reduced Compton wavelength: series and spectral
//! solutions, the smoothing operator `D̂`, and packet observables.

mod dhat;
mod observables;
mod series;

pub use dhat::{dhat_apply, iterated_series, phi_transform, DhatMethod, MAX_ITERATED_TERMS};
pub use observables::{
    commutator_xt_x0, f_function, linear_potential_trajectory, packet_width, r_function, ObservableInputs, Units,
};
pub use series::{
    f2k, series_solution, series_solution_grid, spectral_schrodinger, SeriesConfig, SeriesPoint, MAX_SERIES_TERMS,
};
