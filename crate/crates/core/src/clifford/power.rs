//! Real powers of `R = a·1 + b·σ₁`.

use num_complex::Complex64;
use statrs::function::gamma::gamma;

use super::generators::sigma;
use super::matrix::Mat2;
use crate::error::{Error, Result};
use crate::special::quadrature::{integrate_halfline_vec, QuadratureConfig};

fn check(a: f64, b: f64, p: f64) -> Result<()> {
    if !a.is_finite() || !b.is_finite() || !p.is_finite() {
        return Err(Error::domain("pauli_line_power", "arguments must be finite"));
    }
    if !(a > b.abs()) {
        return Err(Error::domain(
            "pauli_line_power",
            format!("R = {a}·1 + {b}·σ₁ is not positive definite"),
        ));
    }
    Ok(())
}

fn from_projections(lo: f64, hi: f64) -> Mat2 {
    // ½[lo(1 − σ₁) + hi(1 + σ₁)]
    Mat2::identity() * (0.5 * (lo + hi)) + sigma(1) * (0.5 * (hi - lo))
}

/// `R^p = ½[(a−b)^p (1 − σ₁) + (a+b)^p (1 + σ₁)]` for `a > |b|`.
pub fn pauli_line_power(a: f64, b: f64, p: f64) -> Result<Mat2> {
    check(a, b, p)?;
    Ok(from_projections((a - b).powf(p), (a + b).powf(p)))
}

/// `R^{−ν} = Γ(ν)⁻¹ ∫₀^∞ s^{ν−1} e^{−as} [cosh(bs)·1 − sinh(bs)·σ₁] ds`.
fn laplace_negative(a: f64, b: f64, nu: f64, cfg: &QuadratureConfig) -> Result<(Mat2, f64)> {
    let r = integrate_halfline_vec(
        |s, out| {
            if !(s > 0.0) {
                out.fill(Complex64::new(0.0, 0.0));
                return;
            }
            let w = s.powf(nu - 1.0);
            let lo = (-(a - b) * s).exp();
            let hi = (-(a + b) * s).exp();
            out[0] = Complex64::new(0.5 * w * (lo + hi), 0.0);
            out[1] = Complex64::new(0.5 * w * (hi - lo), 0.0);
        },
        2,
        cfg,
    )?;
    let g = gamma(nu);
    let m = Mat2::identity() * (r.values[0].re / g) + sigma(1) * (r.values[1].re / g);
    Ok((m, r.error / g))
}

/// [`pauli_line_power`] through the Laplace identity `x^{−ν} = Γ(ν)⁻¹∫ s^{ν−1}e^{−xs} ds`
/// applied to the matrix. Positive powers use `R^p = R^n R^{p−n}` with the
/// integer `n = ⌈p⌉` formed by repeated multiplication. Returns the matrix
/// and the quadrature error estimate.
pub fn pauli_line_power_laplace(a: f64, b: f64, p: f64, cfg: &QuadratureConfig) -> Result<(Mat2, f64)> {
    check(a, b, p)?;
    let r = Mat2::identity() * a + sigma(1) * b;
    let n = p.ceil().max(0.0);
    let mut int_part = Mat2::identity();
    for _ in 0..n as usize {
        int_part = int_part * r;
    }
    let frac = p - n;
    if frac == 0.0 {
        return Ok((int_part, 0.0));
    }
    let (m, err) = laplace_negative(a, b, -frac, cfg)?;
    Ok((int_part * m, err * int_part.max_abs()))
}
