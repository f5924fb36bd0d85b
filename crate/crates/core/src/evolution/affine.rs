//! `∂_τ F = −√(x − c∂_x) F`.
//!
//! Subordination turns the square root into `e^{−tτ²(x − c∂_x)}`, which the
//! Weyl formula splits as `e^{−c t²τ⁴/2} e^{−tτ²x} e^{ctτ²∂_x}`:
//!
//! `F(x, τ) = ∫₀^∞ w(t) e^{−c t²τ⁴/2 − tτ²x} f(x + cτ²t) dt`.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::field::{Field, FieldResult};
use crate::special::quadrature::{integrate_halfline, integrate_interval_vec, QuadratureConfig};
use crate::transforms::doetsch_density;

// Beyond this the Gaussian factor e^{−c t²τ⁴/2} is below e^{−80}.
const GAUSS_FACTOR_CUT: f64 = 160.0;

/// Grid solution; `f` is interpolated by piecewise cubics and taken as zero
/// beyond the grid.
///
/// `c < 0`, and `c = 0` at points `x < 0`, make the integrand grow without
/// bound and are reported as [`Error::IntegrandDivergence`].
pub fn solve_affine_sqrt(f: &Field, tau: f64, c: f64, cfg: &QuadratureConfig) -> Result<FieldResult> {
    if !(tau >= 0.0) || !tau.is_finite() || !c.is_finite() {
        return Err(Error::domain(
            "solve_affine_sqrt",
            format!("need τ ≥ 0 and finite c, got τ = {tau}, c = {c}"),
        ));
    }
    if tau == 0.0 {
        return Ok(FieldResult::exact(f.clone()));
    }
    if c < 0.0 {
        return Err(Error::IntegrandDivergence {
            op: "solve_affine_sqrt",
            detail: format!("e^{{−c t²τ⁴/2}} grows for c = {c} < 0"),
        });
    }
    cfg.validate()?;
    let tau2 = tau * tau;
    let mut values = Vec::with_capacity(f.len());
    let mut err: f64 = 0.0;
    for (i, x) in f.xs().enumerate() {
        let (v, e) = if c == 0.0 {
            multiplier_point(f.values()[i], x, tau2, cfg)?
        } else {
            shifted_point(f, x, tau2, c, cfg)?
        };
        values.push(v);
        err = err.max(e);
    }
    Ok(FieldResult {
        field: f.with_values(values)?,
        error_estimate: err,
        warnings: f.leakage_warning().into_iter().collect(),
    })
}

// c = 0: multiplication by e^{−τ√x}, evaluated through the same integral.
fn multiplier_point(fx: Complex64, x: f64, tau2: f64, cfg: &QuadratureConfig) -> Result<(Complex64, f64)> {
    let divergence = || Error::IntegrandDivergence {
        op: "solve_affine_sqrt",
        detail: format!("e^{{−tτ²x}} grows without bound at x = {x}"),
    };
    if x < 0.0 {
        return Err(divergence());
    }
    let est = integrate_halfline(
        |t| Complex64::new(doetsch_density(t) * (-t * tau2 * x).exp(), 0.0),
        cfg,
    )
    .map_err(|e| match e {
        Error::Convergence { .. } => divergence(),
        other => other,
    })?;
    Ok((fx * est.value.re, est.error * fx.norm()))
}

fn shifted_point(f: &Field, x: f64, tau2: f64, c: f64, cfg: &QuadratureConfig) -> Result<(Complex64, f64)> {
    let speed = c * tau2;
    let t_grid = (f.x_max() + f.spacing() - x) / speed;
    let t_gauss = (GAUSS_FACTOR_CUT / (c * tau2 * tau2)).sqrt();
    let t_max = t_grid.min(t_gauss);
    if !(t_max > 0.0) {
        return Ok((Complex64::new(0.0, 0.0), 0.0));
    }
    // breakpoints where the shifted argument crosses grid nodes
    let h = f.spacing();
    let mut bps = vec![0.0];
    let first = ((x - f.x_min()) / h).floor() as isize + 1;
    let mut j = first.max(0);
    loop {
        let t = (f.x_min() + j as f64 * h - x) / speed;
        if t >= t_max {
            break;
        }
        if t > bps[bps.len() - 1] {
            bps.push(t);
        }
        j += 1;
    }
    bps.push(t_max);
    let r = integrate_interval_vec(
        |t, out| {
            let w = doetsch_density(t) * (-0.5 * c * tau2 * tau2 * t * t - t * tau2 * x).exp();
            out[0] = if w == 0.0 { Complex64::new(0.0, 0.0) } else { f.interpolate(x + speed * t) * w };
        },
        1,
        &bps,
        cfg,
    )?;
    Ok((r.values[0], r.error))
}
