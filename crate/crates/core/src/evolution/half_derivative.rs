//! `∂_τ F = −∂_x^{1/2} F` through the subordination integral
//! `F(x, τ) = ∫₀^∞ w(t) f(x − τ² t) dt`.

use num_complex::Complex64;

use crate::convolve::product_stencil;
use crate::error::{Error, Result};
use crate::field::{Field, FieldResult, Warning, LEAKAGE_THRESHOLD};
use crate::special::quadrature::{integrate_halfline, QuadratureConfig};
use crate::transforms::{doetsch_density, DoetschForm, INV_SQRT_PI};

/// Mass of the subordination density beyond `t`: `erf(1/(2√t))`.
fn doetsch_tail(t: f64) -> f64 {
    statrs::function::erf::erf(0.5 / t.sqrt())
}

/// Grid solution with cubic interpolation between samples and zero extension
/// to the left of the grid.
pub fn solve_half_derivative(f: &Field, tau: f64, cfg: &QuadratureConfig) -> Result<FieldResult> {
    if !(tau >= 0.0) || !tau.is_finite() {
        return Err(Error::domain("solve_half_derivative", format!("tau must be ≥ 0, got {tau}")));
    }
    if tau == 0.0 {
        return Ok(FieldResult::exact(f.clone()));
    }
    cfg.validate()?;
    let h = f.spacing();
    let n = f.len();
    let tau2 = tau * tau;
    let reach = (n + 1) as f64 * h;
    let stencil = product_stencil(|d| doetsch_density(d / tau2) / tau2, h, n, 0.0, reach, cfg)?;
    let values = stencil.apply(f.values());

    let mut warnings = Vec::new();
    let left = f.values()[0].norm() / f.max_abs().max(f64::MIN_POSITIVE);
    if left > LEAKAGE_THRESHOLD {
        // kernel mass that reaches past the left end from the right-most point
        let fraction = doetsch_tail((f.x_max() - f.x_min()) / tau2);
        warnings.push(Warning::DiscardedMass {
            fraction: fraction.max(doetsch_tail(h / tau2)),
        });
    }
    Ok(FieldResult {
        field: f.with_values(values)?,
        error_estimate: stencil.weight_error * f.max_abs(),
        warnings,
    })
}

/// Pointwise value of the solution for an analytically known `f`.
pub fn half_derivative_at<F>(f: F, x: f64, tau: f64, form: DoetschForm, cfg: &QuadratureConfig) -> Result<Complex64>
where
    F: Fn(f64) -> Complex64,
{
    if !(tau >= 0.0) || !tau.is_finite() {
        return Err(Error::domain("half_derivative_at", format!("tau must be ≥ 0, got {tau}")));
    }
    if tau == 0.0 {
        return Ok(f(x));
    }
    let tau2 = tau * tau;
    let est = match form {
        DoetschForm::TForm => integrate_halfline(|t| f(x - tau2 * t) * doetsch_density(t), cfg)?,
        DoetschForm::XiForm => integrate_halfline(
            |xi| {
                if xi > 0.0 {
                    f(x - tau2 / (xi * xi)) * (INV_SQRT_PI * (-0.25 * xi * xi).exp())
                } else {
                    Complex64::new(0.0, 0.0)
                }
            },
            cfg,
        )?,
    };
    Ok(est.value)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tail_mass() {
        // small t: almost all mass lies beyond
        assert!((doetsch_tail(1e-4) - 1.0).abs() < 1e-12);
        // P(T > t) ~ 1/√(πt) for large t
        let t = 1e6;
        assert!((doetsch_tail(t) * (std::f64::consts::PI * t).sqrt() - 1.0).abs() < 1e-6);
    }

    #[test]
    fn constant_is_preserved_pointwise() {
        let cfg = QuadratureConfig::default();
        for form in [DoetschForm::TForm, DoetschForm::XiForm] {
            let v = half_derivative_at(|_| Complex64::new(2.5, 0.0), 0.3, 0.8, form, &cfg).unwrap();
            assert!((v.re - 2.5).abs() < 1e-11, "{form:?}");
        }
    }

    #[test]
    fn exponential_eigenfunction() {
        // e^{λx} is an eigenfunction: e^{−τ√λ} e^{λx}
        let cfg = QuadratureConfig::default();
        let lambda = 0.7;
        let tau = 0.6;
        let x = -0.4;
        let got = half_derivative_at(|y| Complex64::new((lambda * y).exp(), 0.0), x, tau, DoetschForm::TForm, &cfg).unwrap();
        let want = (-tau * lambda.sqrt()).exp() * (lambda * x).exp();
        assert!((got.re - want).abs() < 1e-11);
    }
}
