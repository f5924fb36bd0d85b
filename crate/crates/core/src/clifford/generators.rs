use num_complex::Complex64;

use super::matrix::{Mat2, Mat4};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);
const I: Complex64 = Complex64::new(0.0, 1.0);

/// Named Pauli and Clifford generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Generator {
    Sigma1,
    Sigma2,
    Sigma3,
    Alpha1,
    Alpha2,
    Alpha3,
    Beta,
    Gamma1,
    Gamma2,
    Gamma3,
    Kappa1,
    Kappa2,
    Kappa3,
    Delta,
    Identity2,
    Identity4,
}

/// A generator matrix; Pauli matrices are 2×2, everything else 4×4.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GeneratorMatrix {
    Two(Mat2),
    Four(Mat4),
}

impl GeneratorMatrix {
    pub fn as_mat2(&self) -> Option<Mat2> {
        match self {
            GeneratorMatrix::Two(m) => Some(*m),
            GeneratorMatrix::Four(_) => None,
        }
    }

    pub fn as_mat4(&self) -> Option<Mat4> {
        match self {
            GeneratorMatrix::Four(m) => Some(*m),
            GeneratorMatrix::Two(_) => None,
        }
    }
}

impl Generator {
    pub const ALL: [Generator; 16] = [
        Generator::Sigma1,
        Generator::Sigma2,
        Generator::Sigma3,
        Generator::Alpha1,
        Generator::Alpha2,
        Generator::Alpha3,
        Generator::Beta,
        Generator::Gamma1,
        Generator::Gamma2,
        Generator::Gamma3,
        Generator::Kappa1,
        Generator::Kappa2,
        Generator::Kappa3,
        Generator::Delta,
        Generator::Identity2,
        Generator::Identity4,
    ];

    pub fn matrix(self) -> GeneratorMatrix {
        use Generator::*;
        match self {
            Sigma1 => GeneratorMatrix::Two(sigma(1)),
            Sigma2 => GeneratorMatrix::Two(sigma(2)),
            Sigma3 => GeneratorMatrix::Two(sigma(3)),
            Identity2 => GeneratorMatrix::Two(Mat2::identity()),
            Alpha1 => GeneratorMatrix::Four(alpha(1)),
            Alpha2 => GeneratorMatrix::Four(alpha(2)),
            Alpha3 => GeneratorMatrix::Four(alpha(3)),
            Beta => GeneratorMatrix::Four(beta()),
            Gamma1 => GeneratorMatrix::Four(gamma(1)),
            Gamma2 => GeneratorMatrix::Four(gamma(2)),
            Gamma3 => GeneratorMatrix::Four(gamma(3)),
            Kappa1 => GeneratorMatrix::Four(kappa(1)),
            Kappa2 => GeneratorMatrix::Four(kappa(2)),
            Kappa3 => GeneratorMatrix::Four(kappa(3)),
            Delta => GeneratorMatrix::Four(delta()),
            Identity4 => GeneratorMatrix::Four(Mat4::identity()),
        }
    }
}

/// Shorthand for [`Generator::matrix`].
pub fn generators(kind: Generator) -> GeneratorMatrix {
    kind.matrix()
}

/// Pauli matrix `σ_k`, `k ∈ {1, 2, 3}`.
///
/// # Panics
/// If `k` is not 1, 2 or 3.
pub fn sigma(k: usize) -> Mat2 {
    match k {
        1 => Mat2::new([[ZERO, ONE], [ONE, ZERO]]),
        2 => Mat2::new([[ZERO, -I], [I, ZERO]]),
        3 => Mat2::new([[ONE, ZERO], [ZERO, -ONE]]),
        _ => panic!("Pauli index must be 1, 2 or 3, got {k}"),
    }
}

/// `α_k = σ₁ ⊗ σ_k`: off-diagonal blocks `σ_k`.
pub fn alpha(k: usize) -> Mat4 {
    sigma(1).kron(&sigma(k))
}

/// `β = σ₃ ⊗ 1 = diag(1, 1, −1, −1)`.
pub fn beta() -> Mat4 {
    sigma(3).kron(&Mat2::identity())
}

/// `γ_k = β α_k`.
pub fn gamma(k: usize) -> Mat4 {
    beta() * alpha(k)
}

/// `κ₁ = −α₃`, `κ₂ = α₁`, `κ₃ = β`.
pub fn kappa(k: usize) -> Mat4 {
    match k {
        1 => -alpha(3),
        2 => alpha(1),
        3 => beta(),
        _ => panic!("kappa index must be 1, 2 or 3, got {k}"),
    }
}

/// `δ = iσ₂ ⊗ 1`, real antisymmetric with `δ² = −1`.
pub fn delta() -> Mat4 {
    (sigma(2) * I).kron(&Mat2::identity())
}
