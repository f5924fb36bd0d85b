//! `∂_τ F = −√(1 − ∂_x²) F` by subordination to the heat flow:
//! `F = ∫₀^∞ w(t) e^{−tτ²} e^{tτ²∂²} f dt`.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::field::{Field, FieldResult};
use crate::special::quadrature::{integrate_halfline, integrate_halfline_vec, QuadratureConfig};
use crate::transforms::{doetsch_density, glaisher, heat_stencil};

fn check_tau(op: &'static str, tau: f64) -> Result<()> {
    if tau >= 0.0 && tau.is_finite() {
        Ok(())
    } else {
        Err(Error::domain(op, format!("tau must be ≥ 0, got {tau}")))
    }
}

/// Double-integral solution on the grid of `f`; the inner heat flow is the
/// Gauss–Weierstrass transform with `α = tτ²`.
pub fn solve_pseudoheat(f: &Field, tau: f64, cfg: &QuadratureConfig) -> Result<FieldResult> {
    check_tau("solve_pseudoheat", tau)?;
    if tau == 0.0 {
        return Ok(FieldResult::exact(f.clone()));
    }
    cfg.validate()?;
    let h = f.spacing();
    let n = f.len();
    let tau2 = tau * tau;
    let inner_cfg = *cfg;
    let r = integrate_halfline_vec(
        |t, out| {
            let w = doetsch_density(t) * (-t * tau2).exp();
            if w == 0.0 || !w.is_finite() {
                out.fill(Complex64::new(0.0, 0.0));
                return;
            }
            match heat_stencil(t * tau2, h, n, &inner_cfg) {
                Ok(st) => {
                    for (o, z) in out.iter_mut().zip(st.apply(f.values())) {
                        *o = z * w;
                    }
                }
                // surfaces as a non-finite estimate in the outer rule
                Err(_) => out.fill(Complex64::new(f64::NAN, 0.0)),
            }
        },
        n,
        cfg,
    )
    .map_err(|e| match e {
        Error::Convergence { estimate, error_bound, .. } => Error::Convergence {
            op: "solve_pseudoheat",
            estimate,
            error_bound,
        },
        other => other,
    })?;
    let warnings = f.leakage_warning().into_iter().collect();
    Ok(FieldResult {
        field: f.with_values(r.values)?,
        error_estimate: r.error,
        warnings,
    })
}

/// Gaussian initial data `e^{−x²}`: the inner heat flow is Glaisher's closed
/// form, leaving a single half-line integral.
pub fn pseudoheat_gaussian(tau: f64, x: f64, cfg: &QuadratureConfig) -> Result<f64> {
    check_tau("pseudoheat_gaussian", tau)?;
    if tau == 0.0 {
        return Ok((-x * x).exp());
    }
    let tau2 = tau * tau;
    let est = integrate_halfline(
        |t| {
            let a = t * tau2;
            let v = doetsch_density(t) * (-a).exp() * glaisher(a, x).unwrap_or(0.0);
            Complex64::new(v, 0.0)
        },
        cfg,
    )?;
    Ok(est.value.re)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gaussian_closed_form_at_origin() {
        let cfg = QuadratureConfig::default();
        let v = pseudoheat_gaussian(1.0, 0.0, &cfg).unwrap();
        assert!((v - 0.235_235_971_611_547_47).abs() < 1e-10, "{v}");
        assert_eq!(pseudoheat_gaussian(0.0, 0.7, &cfg).unwrap(), (-0.49f64).exp());
    }

    #[test]
    fn rejects_negative_tau() {
        let cfg = QuadratureConfig::default();
        assert!(matches!(pseudoheat_gaussian(-0.1, 0.0, &cfg), Err(Error::Domain { .. })));
    }
}
