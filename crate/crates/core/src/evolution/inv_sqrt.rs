//! Solution of `√(∂_x² + 1) f = g` as the history integral
//! `f(x) = ∫₀^∞ J0(t) g(x − t) dt`.
//!
//! When `g` has decayed at the left end of the grid the integral is taken
//! over the whole recorded history. Otherwise the slowly decaying oscillatory
//! kernel is Abel-summed with a smooth erfc window, which suppresses the
//! truncation error to the Fourier transform of a Gaussian at the beat
//! frequencies `1 ± k` of the data.

use statrs::function::erf::erfc;

use crate::convolve::{product_stencil, Stencil};
use crate::error::{Error, Result};
use crate::field::{Field, FieldResult, Warning};
use crate::special::bessel::j0;
use crate::special::quadrature::QuadratureConfig;

/// Left-boundary magnitude (relative to the peak) below which the history is
/// treated as complete.
pub const DECAYED_BOUNDARY: f64 = 1e-10;

/// Largest tolerated discrepancy between two window placements, relative to
/// `max |g|`.
pub const TAIL_TOLERANCE: f64 = 1e-5;

fn window(t: f64, center: f64, width: f64) -> f64 {
    0.5 * erfc((t - center) / width)
}

fn windowed_stencil(h: f64, n: usize, cut: f64, center: f64, width: f64, cfg: &QuadratureConfig) -> Result<Stencil> {
    product_stencil(|t| j0(t) * window(t, center, width), h, n, 0.0, cut, cfg)
}

/// Applies `(∂_x² + 1)^{−1/2}` to `g`.
///
/// On the windowed path only points at least `T_cut = (x_max − x_min)/2`
/// from the left end see their full window; values closer to the boundary
/// are returned but carry the boundary-leakage warning.
pub fn apply_inv_sqrt_shift(g: &Field, cfg: &QuadratureConfig) -> Result<FieldResult> {
    cfg.validate()?;
    let h = g.spacing();
    let n = g.len();
    let peak = g.max_abs();
    if peak == 0.0 {
        return Ok(FieldResult::exact(g.clone()));
    }
    let left = g.values()[0].norm() / peak;
    if left <= DECAYED_BOUNDARY {
        let reach = (n + 1) as f64 * h;
        let st = product_stencil(j0, h, n, 0.0, reach, cfg)?;
        return Ok(FieldResult {
            field: g.with_values(st.apply(g.values()))?,
            error_estimate: st.weight_error * peak,
            warnings: Vec::new(),
        });
    }

    let t_cut = 0.5 * (g.x_max() - g.x_min());
    let primary = windowed_stencil(h, n, t_cut, 0.5 * t_cut, t_cut / 12.0, cfg)?;
    let shifted = windowed_stencil(h, n, t_cut, 0.45 * t_cut, 0.9 * t_cut / 12.0, cfg)?;
    let a = primary.apply(g.values());
    let b = shifted.apply(g.values());
    let first_full = g.indices_within(g.x_min() + t_cut, g.x_max()).next().unwrap_or(n);
    let spread = a[first_full..]
        .iter()
        .zip(&b[first_full..])
        .map(|(p, q)| (p - q).norm())
        .fold(0.0, f64::max);
    if spread > TAIL_TOLERANCE * peak {
        return Err(Error::Convergence {
            op: "apply_inv_sqrt_shift",
            estimate: a.iter().map(|z| z.norm()).fold(0.0, f64::max),
            error_bound: spread,
        });
    }
    Ok(FieldResult {
        field: g.with_values(a)?,
        error_estimate: spread + primary.weight_error * peak,
        warnings: vec![Warning::BoundaryLeakage { ratio: left }],
    })
}
