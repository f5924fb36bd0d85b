//! Two-component calculus: `σ⃗·v⃗`, its exponential, the 2D Dirac
//! propagator and the associated precession of the Pauli vector.

use num_complex::Complex64;

use super::generators::sigma;
use super::matrix::Mat2;
use crate::error::{Error, Result};

/// `c0·1 + σ⃗·v⃗` with complex coefficients.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PauliVector {
    pub c0: Complex64,
    pub v: [Complex64; 3],
}

impl PauliVector {
    pub fn new(c0: Complex64, v: [Complex64; 3]) -> Self {
        Self { c0, v }
    }

    pub fn from_real(c0: f64, v: [f64; 3]) -> Self {
        Self {
            c0: c0.into(),
            v: v.map(Complex64::from),
        }
    }

    pub fn is_finite(&self) -> bool {
        std::iter::once(&self.c0)
            .chain(self.v.iter())
            .all(|z| z.re.is_finite() && z.im.is_finite())
    }

    /// `v⃗·v⃗` (no conjugation).
    pub fn dot(&self) -> Complex64 {
        self.v.iter().map(|z| z * z).sum()
    }

    pub fn to_matrix(&self) -> Mat2 {
        pauli_sqrt_identity(self.v) + Mat2::identity() * self.c0
    }

    /// `e^{y(c0 + σ⃗·v⃗)} = e^{y c0} e^{y σ⃗·v⃗}`.
    pub fn exp(&self, y: Complex64) -> Mat2 {
        exp_pauli(y, self.v) * (y * self.c0).exp()
    }

    /// Product in the algebra: `(a + σ⃗·u)(b + σ⃗·w) = ab + u⃗·w⃗ + σ⃗·(a w⃗ + b u⃗ + i u⃗×w⃗)`.
    pub fn mul(&self, other: &PauliVector) -> PauliVector {
        let (u, w) = (self.v, other.v);
        let i = Complex64::i();
        let cross = [
            u[1] * w[2] - u[2] * w[1],
            u[2] * w[0] - u[0] * w[2],
            u[0] * w[1] - u[1] * w[0],
        ];
        let dot: Complex64 = u.iter().zip(w.iter()).map(|(a, b)| a * b).sum();
        let mut v = [Complex64::new(0.0, 0.0); 3];
        for k in 0..3 {
            v[k] = self.c0 * w[k] + other.c0 * u[k] + i * cross[k];
        }
        PauliVector {
            c0: self.c0 * other.c0 + dot,
            v,
        }
    }
}

/// `N = σ⃗·v⃗`, which squares to `(v⃗·v⃗)·1`.
pub fn pauli_sqrt_identity(v: [Complex64; 3]) -> Mat2 {
    (0..3).fold(Mat2::zero(), |acc, k| acc + sigma(k + 1) * v[k])
}

/// `cosh u` and `sinh u / u` as functions of `u²`, so the branch of the
/// square root never matters.
pub(crate) fn cosh_sinhc(u2: Complex64) -> (Complex64, Complex64) {
    if u2.norm() < 1e-2 {
        let mut term = Complex64::new(1.0, 0.0);
        let mut c = term;
        let mut s = term;
        for k in 1..10 {
            let n = 2 * k;
            term *= u2 / (n as f64 * (n - 1) as f64);
            c += term;
            s += term / (n + 1) as f64;
        }
        (c, s)
    } else {
        let u = u2.sqrt();
        (u.cosh(), u.sinh() / u)
    }
}

/// `e^{y σ⃗·v⃗} = cosh(yN)·1 + y sinh(yN)/(yN) · σ⃗·v⃗` with `N² = v⃗·v⃗`.
pub fn exp_pauli(y: Complex64, v: [Complex64; 3]) -> Mat2 {
    let n2: Complex64 = v.iter().map(|z| z * z).sum();
    let (c, s) = cosh_sinhc(y * y * n2);
    Mat2::identity() * c + pauli_sqrt_identity(v) * (y * s)
}

/// Fourier symbol of the two-component pseudoheat propagator,
/// `e^{−t(σ₃ + ikσ₁)}`; a preset of [`exp_pauli`].
pub fn two_component_pseudoheat(t: f64, k: f64) -> Mat2 {
    exp_pauli(
        Complex64::new(-t, 0.0),
        [Complex64::new(0.0, k), Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)],
    )
}

/// `H = σ₁π + σ₃`.
pub fn dirac2_hamiltonian(pi: f64) -> Mat2 {
    sigma(1) * pi + sigma(3)
}

/// `U(τ) = cos(Eτ)·1 − i sin(Eτ)/E · (σ₁π + σ₃)`, `E = √(1+π²)`.
pub fn dirac2_evolution(pi: f64, tau: f64) -> Mat2 {
    let e = pi.hypot(1.0);
    let (s, c) = (e * tau).sin_cos();
    Mat2::identity() * c + dirac2_hamiltonian(pi) * Complex64::new(0.0, -s / e)
}

fn cross(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn axpy(y: [f64; 3], a: f64, x: [f64; 3]) -> [f64; 3] {
    [y[0] + a * x[0], y[1] + a * x[1], y[2] + a * x[2]]
}

/// Precession axis `Ω⃗ = 2(π, 0, 1)`.
pub fn bloch_axis(pi: f64) -> [f64; 3] {
    [2.0 * pi, 0.0, 2.0]
}

/// Integrates `dσ⃗/dt = Ω⃗ × σ⃗` from 0 to `tau` with classical RK4.
///
/// The step is shrunk to `tau / ceil(|tau| / dt)` so the last step lands on
/// `tau` exactly. Negative `tau` integrates backwards.
pub fn bloch_evolve(sigma0: [f64; 3], pi: f64, tau: f64, dt: f64) -> Result<[f64; 3]> {
    if !(dt > 0.0) || !dt.is_finite() {
        return Err(Error::domain("bloch_evolve", format!("dt must be positive, got {dt}")));
    }
    if !tau.is_finite() || !pi.is_finite() || sigma0.iter().any(|x| !x.is_finite()) {
        return Err(Error::domain("bloch_evolve", "inputs must be finite"));
    }
    if sigma0.iter().all(|&x| x == 0.0) {
        return Err(Error::domain("bloch_evolve", "initial vector must be nonzero"));
    }
    if tau == 0.0 {
        return Ok(sigma0);
    }
    let omega = bloch_axis(pi);
    let steps = (tau.abs() / dt).ceil().max(1.0) as usize;
    let h = tau / steps as f64;
    let f = |s: [f64; 3]| cross(omega, s);
    let mut s = sigma0;
    for _ in 0..steps {
        let k1 = f(s);
        let k2 = f(axpy(s, 0.5 * h, k1));
        let k3 = f(axpy(s, 0.5 * h, k2));
        let k4 = f(axpy(s, h, k3));
        for j in 0..3 {
            s[j] += h / 6.0 * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
        }
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pythagorean_square() {
        let n = pauli_sqrt_identity([3.0.into(), 4.0.into(), 0.0.into()]);
        assert_eq!(n * n, Mat2::identity() * 25.0);
    }

    #[test]
    fn exp_of_zero_vector_is_identity() {
        let z = Complex64::new(0.0, 0.0);
        assert_eq!(exp_pauli(Complex64::new(2.0, 1.0), [z; 3]), Mat2::identity());
    }

    #[test]
    fn algebra_product_matches_matrices() {
        let a = PauliVector::new(
            Complex64::new(0.3, -1.0),
            [Complex64::new(1.0, 0.5), Complex64::new(-0.2, 0.0), Complex64::new(0.0, 2.0)],
        );
        let b = PauliVector::from_real(1.5, [0.4, -0.7, 1.1]);
        let diff = a.mul(&b).to_matrix() - a.to_matrix() * b.to_matrix();
        assert!(diff.max_abs() < 1e-14);
    }

    #[test]
    fn bloch_rejects_bad_step() {
        assert!(bloch_evolve([1.0, 0.0, 0.0], 0.5, 1.0, 0.0).is_err());
        assert!(bloch_evolve([0.0; 3], 0.5, 1.0, 0.1).is_err());
    }
}
