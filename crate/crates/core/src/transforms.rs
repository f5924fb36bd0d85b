//! Operational identities: Doetsch subordination, the Gauss–Weierstrass
//! transform, Glaisher's Gaussian formula and the Laplace inverse-power
//! representation.

use num_complex::Complex64;
use statrs::function::gamma::gamma;

use crate::convolve::{product_stencil, trapezoid_stencil, Stencil};
use crate::error::{Error, Result};
use crate::field::{Field, FieldResult};
use crate::special::quadrature::{integrate_halfline, QuadratureConfig};

pub use crate::field::Warning;

/// `1/(2√π)`.
pub const INV_TWO_SQRT_PI: f64 = 0.282_094_791_773_878_14;

/// `1/√π`.
pub const INV_SQRT_PI: f64 = 0.564_189_583_547_756_3;

/// Kernels narrower than this many grid spacings use product integration
/// instead of the trapezoid rule.
const TRAPEZOID_MIN_WIDTH: f64 = 3.0;

// Gaussian kernels are cut at this many standard deviations.
const GAUSS_CUTOFF_SD: f64 = 12.0;

/// Subordination density `t^{−3/2} e^{−1/(4t)} / (2√π)`, which integrates to
/// one over `t > 0`.
pub fn doetsch_weight(t: f64) -> Result<f64> {
    if !(t > 0.0) || !t.is_finite() {
        return Err(Error::domain("doetsch_weight", format!("t must be positive, got {t}")));
    }
    Ok(doetsch_density(t))
}

#[inline]
pub(crate) fn doetsch_density(t: f64) -> f64 {
    if t <= 0.0 {
        return 0.0;
    }
    INV_TWO_SQRT_PI * t.powf(-1.5) * (-0.25 / t).exp()
}

/// Integration variable used to evaluate the subordination integral.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DoetschForm {
    /// `(1/(2√π)) ∫ t^{−3/2} e^{−1/(4t) − t x² y} dt`.
    TForm,
    /// After `t = 1/ξ²`: `(1/√π) ∫ e^{−ξ²/4 − x² y/ξ²} dξ`.
    XiForm,
}

/// Numerical value of `e^{−x√y}` through the subordination integral.
pub fn exp_sqrt_via_doetsch(x: f64, y: f64, form: DoetschForm, cfg: &QuadratureConfig) -> Result<f64> {
    if !(x >= 0.0 && y >= 0.0) || !x.is_finite() || !y.is_finite() {
        return Err(Error::domain(
            "exp_sqrt_via_doetsch",
            format!("x and y must be nonnegative and finite, got ({x}, {y})"),
        ));
    }
    let c = x * x * y;
    let est = match form {
        DoetschForm::TForm => integrate_halfline(
            |t| Complex64::new(doetsch_density(t) * (-t * c).exp(), 0.0),
            cfg,
        )?,
        DoetschForm::XiForm => integrate_halfline(
            |xi| {
                let v = if xi > 0.0 {
                    INV_SQRT_PI * (-0.25 * xi * xi - c / (xi * xi)).exp()
                } else if c == 0.0 {
                    INV_SQRT_PI
                } else {
                    0.0
                };
                Complex64::new(v, 0.0)
            },
            cfg,
        )?,
    };
    Ok(est.value.re)
}

/// `(1+4α)^{−1/2} exp(−x²/(1+4α))`, the heat flow `e^{α∂²}` of `e^{−x²}`.
pub fn glaisher(alpha: f64, x: f64) -> Result<f64> {
    let d = 1.0 + 4.0 * alpha;
    if !(d > 0.0) || !x.is_finite() {
        return Err(Error::domain("glaisher", format!("requires 1 + 4α > 0, got α = {alpha}")));
    }
    Ok((-x * x / d).exp() / d.sqrt())
}

/// Heat kernel `e^{−d²/(4α)} / (2√(πα))`.
#[inline]
pub(crate) fn heat_kernel(alpha: f64, d: f64) -> f64 {
    INV_TWO_SQRT_PI / alpha.sqrt() * (-d * d / (4.0 * alpha)).exp()
}

/// Convolution stencil realizing `e^{α∂²}` on a grid of `n` points with spacing `h`.
pub(crate) fn heat_stencil(alpha: f64, h: f64, n: usize, cfg: &QuadratureConfig) -> Result<Stencil> {
    let sd = (2.0 * alpha).sqrt();
    let reach = GAUSS_CUTOFF_SD * sd;
    if sd >= TRAPEZOID_MIN_WIDTH * h {
        Ok(trapezoid_stencil(|d| heat_kernel(alpha, d), h, n, -reach, reach))
    } else {
        product_stencil(|d| heat_kernel(alpha, d), h, n, -reach, reach, cfg)
    }
}

/// Gauss–Weierstrass transform `(1/(2√(πα))) ∫ e^{−(x−ξ)²/(4α)} f(ξ) dξ`
/// sampled on the grid of `f` (zero extension beyond the grid).
pub fn gauss_weierstrass(f: &Field, alpha: f64, cfg: &QuadratureConfig) -> Result<FieldResult> {
    if !(alpha > 0.0) || !alpha.is_finite() {
        return Err(Error::domain(
            "gauss_weierstrass",
            format!("alpha must be positive, got {alpha}"),
        ));
    }
    cfg.validate()?;
    let stencil = heat_stencil(alpha, f.spacing(), f.len(), cfg)?;
    let values = stencil.apply(f.values());
    let mut warnings = Vec::new();
    warnings.extend(f.leakage_warning());
    Ok(FieldResult {
        field: f.with_values(values)?,
        error_estimate: stencil.weight_error * f.max_abs(),
        warnings,
    })
}

/// `a^{−ν}` through `(1/Γ(ν)) ∫₀^∞ e^{−a s} s^{ν−1} ds`.
pub fn laplace_inv_power(nu: f64, a: f64, cfg: &QuadratureConfig) -> Result<f64> {
    if !(nu > 0.0 && a > 0.0) || !nu.is_finite() || !a.is_finite() {
        return Err(Error::domain(
            "laplace_inv_power",
            format!("requires ν > 0 and a > 0, got ({nu}, {a})"),
        ));
    }
    let est = integrate_halfline(|s| Complex64::new((-a * s).exp() * s.powf(nu - 1.0), 0.0), cfg)?;
    Ok(est.value.re / gamma(nu))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constants() {
        let sp = std::f64::consts::PI.sqrt();
        assert!((INV_TWO_SQRT_PI - 0.5 / sp).abs() < 1e-17);
        assert!((INV_SQRT_PI - 1.0 / sp).abs() < 1e-16);
    }

    #[test]
    fn doetsch_weight_domain() {
        assert!(doetsch_weight(0.0).is_err());
        assert!(doetsch_weight(-1.0).is_err());
        assert!(doetsch_weight(1e-4).unwrap() < 1e-100);
    }

    #[test]
    fn glaisher_values() {
        assert!((glaisher(0.0, 1.3).unwrap() - (-1.69f64).exp()).abs() < 1e-16);
        assert!((glaisher(2.0, 0.0).unwrap() - 1.0 / 3.0).abs() < 1e-16);
        assert!(glaisher(-0.25, 0.0).is_err());
    }

    #[test]
    fn narrow_and_wide_heat_stencils_conserve_mass() {
        let cfg = QuadratureConfig::default();
        for &alpha in &[1e-4, 1e-3, 0.05, 1.0] {
            let st = heat_stencil(alpha, 0.02, 4000, &cfg).unwrap();
            assert!((st.mass() - 1.0).abs() < 1e-11, "alpha={alpha}");
        }
    }
}
