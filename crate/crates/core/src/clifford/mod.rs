//! Pauli and Clifford parametrizations of operator square roots: generator
//! matrices, closed-form exponentials, 2D and 4D Dirac propagators,
//! Zitterbewegung, Bloch precession and powers of `a·1 + b·σ₁`.

mod dirac;
mod generators;
mod matrix;
mod pauli;
mod power;

pub use dirac::{
    dirac4_evolution, dirac4_hamiltonian, kappa_parametrization, position_evolution, sqrt_symbol_check,
    KappaVariant, PositionParametrization,
};
pub use generators::{alpha, beta, delta, gamma, generators, kappa, sigma, Generator, GeneratorMatrix};
pub use matrix::{Mat2, Mat4, SquareMatrix};
pub use pauli::{
    bloch_axis, bloch_evolve, dirac2_evolution, dirac2_hamiltonian, exp_pauli, pauli_sqrt_identity,
    two_component_pseudoheat, PauliVector,
};
pub use power::{pauli_line_power, pauli_line_power_laplace};
