//! Four-component Dirac form of the relativistic Schrödinger operator.

use num_complex::Complex64;

use super::generators::{alpha, beta, delta, kappa};
use super::matrix::Mat4;

/// `H = α⃗·π⃗ + β`.
pub fn dirac4_hamiltonian(pi: [f64; 3]) -> Mat4 {
    (0..3).fold(beta(), |acc, k| acc + alpha(k + 1) * pi[k])
}

/// `e^{−iτH} = cos(Eτ)·1 − i sin(Eτ)/E · H`, valid because `H² = E²·1`.
fn propagator(h: Mat4, e: f64, tau: f64) -> Mat4 {
    let (s, c) = (e * tau).sin_cos();
    Mat4::identity() * c + h * Complex64::new(0.0, -s / e)
}

/// `U(τ) = cos(√(1+π²)τ)·1 − i sin(√(1+π²)τ)/√(1+π²) · (α⃗·π⃗ + β)`.
pub fn dirac4_evolution(pi: [f64; 3], tau: f64) -> Mat4 {
    let e = (1.0 + pi.iter().map(|p| p * p).sum::<f64>()).sqrt();
    propagator(dirac4_hamiltonian(pi), e, tau)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PositionParametrization {
    /// Standard Dirac matrices; includes the Zitterbewegung term.
    #[default]
    Dirac,
    /// Energy-diagonal form, pure linear drift `τβπ/√(1+π²)`.
    BetaDiagonal,
}

/// Displacement `η̂(τ) − η̂(0)` at momentum `π⃗ = (π, 0, 0)`.
///
/// The Dirac form is `τπH⁻¹ + (i/2)(α₁ − πH⁻¹)H⁻¹(e^{−2iτH} − 1)`, the
/// integral of the Heisenberg velocity `e^{iτH} α₁ e^{−iτH}`.
pub fn position_evolution(pi: f64, tau: f64, parametrization: PositionParametrization) -> Mat4 {
    let e2 = 1.0 + pi * pi;
    let e = e2.sqrt();
    match parametrization {
        PositionParametrization::BetaDiagonal => beta() * (tau * pi / e),
        PositionParametrization::Dirac => {
            let h = dirac4_hamiltonian([pi, 0.0, 0.0]);
            let h_inv = h * (1.0 / e2);
            let drift = h_inv * (tau * pi);
            let osc = propagator(h, e, 2.0 * tau) - Mat4::identity();
            let zb = (alpha(1) - h_inv * pi) * h_inv * osc * Complex64::new(0.0, 0.5);
            drift + zb
        }
    }
}

/// Fourier symbol of `i α⃗·d̂ + β` with `d̂_k = ∂_x/√3`:
/// `M(k) = −k(α₁ + α₂ + α₃)/√3 + β`, squaring to `(1 + k²)·1`.
pub fn sqrt_symbol_check(k: f64) -> Mat4 {
    let s = (alpha(1) + alpha(2) + alpha(3)) * (-k / 3f64.sqrt());
    s + beta()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum KappaVariant {
    /// `κ⃗·w⃗ + iδr`, squaring to `(w² + r²)·1`.
    #[default]
    IDelta,
    /// `κ⃗·w⃗ + δr`, squaring to `(w² − r²)·1`.
    PlainDelta,
}

pub fn kappa_parametrization(w: [f64; 3], r: f64, variant: KappaVariant) -> Mat4 {
    let n = (0..3).fold(Mat4::zero(), |acc, k| acc + kappa(k + 1) * w[k]);
    let coeff = match variant {
        KappaVariant::IDelta => Complex64::new(0.0, r),
        KappaVariant::PlainDelta => Complex64::new(r, 0.0),
    };
    n + delta() * coeff
}
