//! The smoothing operator `D̂ = (1/√π) ∫₀^∞ e^{−s} s^{−1/2} e^{s∂²} ds`
//! with Fourier symbol `(1+k²)^{−1/2}`, and the series it generates.

use num_complex::Complex64;

use crate::convolve::{product_stencil, Stencil};
use crate::error::{Error, Result};
use crate::field::{Field, FieldResult};
use crate::special::bessel::k0;
use crate::special::quadrature::{integrate_halfline_vec, QuadratureConfig};
use crate::spectral::{apply_multiplier, second_derivative};
use crate::transforms::{heat_stencil, INV_SQRT_PI};

use super::series::SeriesConfig;

/// Largest order accepted by [`iterated_series`].
pub const MAX_ITERATED_TERMS: usize = 20;

// K0(40)/π is below 1e−18.
const K0_CUTOFF: f64 = 40.0;

/// How [`dhat_apply`] evaluates `D̂`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DhatMethod {
    /// Convolution with the closed-form kernel `K0(|x − ξ|)/π`.
    #[default]
    KernelK0,
    /// The half-line integral over `s` of the Gauss–Weierstrass transform.
    SIntegral,
    /// The multiplier `(1+k²)^{−1/2}`.
    Spectral,
}

fn k0_kernel(d: f64) -> f64 {
    // the logarithmic singularity sits on a cell boundary and is never sampled
    k0(d.abs()).map_or(0.0, |v| v / std::f64::consts::PI)
}

fn k0_stencil(f: &Field, cfg: &QuadratureConfig) -> Result<Stencil> {
    product_stencil(k0_kernel, f.spacing(), f.len(), -K0_CUTOFF, K0_CUTOFF, cfg)
}

/// Applies `D̂` to `f`.
pub fn dhat_apply(f: &Field, method: DhatMethod, cfg: &QuadratureConfig) -> Result<FieldResult> {
    cfg.validate()?;
    let warnings: Vec<_> = f.leakage_warning().into_iter().collect();
    match method {
        DhatMethod::KernelK0 => {
            let st = k0_stencil(f, cfg)?;
            Ok(FieldResult {
                field: f.with_values(st.apply(f.values()))?,
                error_estimate: st.weight_error * f.max_abs(),
                warnings,
            })
        }
        DhatMethod::SIntegral => {
            let h = f.spacing();
            let n = f.len();
            let inner = *cfg;
            let r = integrate_halfline_vec(
                |s, out| {
                    if !(s > 0.0) {
                        out.fill(Complex64::new(0.0, 0.0));
                        return;
                    }
                    let w = INV_SQRT_PI * (-s).exp() / s.sqrt();
                    if w == 0.0 || !w.is_finite() {
                        out.fill(Complex64::new(0.0, 0.0));
                        return;
                    }
                    match heat_stencil(s, h, n, &inner) {
                        Ok(st) => {
                            for (o, z) in out.iter_mut().zip(st.apply(f.values())) {
                                *o = z * w;
                            }
                        }
                        Err(_) => out.fill(Complex64::new(f64::NAN, 0.0)),
                    }
                },
                n,
                cfg,
            )
            .map_err(|e| match e {
                Error::Convergence { estimate, error_bound, .. } => Error::Convergence {
                    op: "dhat_apply",
                    estimate,
                    error_bound,
                },
                other => other,
            })?;
            Ok(FieldResult {
                field: f.with_values(r.values)?,
                error_estimate: r.error,
                warnings,
            })
        }
        DhatMethod::Spectral => apply_multiplier(f, |k| Complex64::new(1.0 / (1.0 + k * k).sqrt(), 0.0)),
    }
}

/// `Φ = D̂ ψ̄` with the closed-form kernel.
pub fn phi_transform(psi_bar: &Field, cfg: &QuadratureConfig) -> Result<FieldResult> {
    dhat_apply(psi_bar, DhatMethod::KernelK0, cfg)
}

/// `Ψ̄(τ) = Σ_n (iτ)ⁿ/n! Ψ̄_n` with `Ψ̄_n = ∂² D̂ Ψ̄_{n−1}`; `∂²` is spectral,
/// so the grid length must be a power of two. Orders above
/// [`MAX_ITERATED_TERMS`] are not summed.
pub fn iterated_series(psi0: &Field, tau: f64, cfg: &SeriesConfig, qcfg: &QuadratureConfig) -> Result<FieldResult> {
    cfg.validate()?;
    qcfg.validate()?;
    if !tau.is_finite() {
        return Err(Error::domain("iterated_series", "tau must be finite"));
    }
    let n_cap = cfg.n_max.min(MAX_ITERATED_TERMS);
    let mut warnings: Vec<_> = psi0.leakage_warning().into_iter().collect();
    if n_cap == 0 || tau == 0.0 {
        return Ok(FieldResult {
            field: psi0.clone(),
            error_estimate: 0.0,
            warnings,
        });
    }
    let st = k0_stencil(psi0, qcfg)?;
    let mut sum = psi0.values().to_vec();
    let mut current = psi0.clone();
    let mut coeff = Complex64::new(1.0, 0.0);
    let mut last = f64::INFINITY;
    for n in 1..=n_cap {
        let smoothed = current.with_values(st.apply(current.values()))?;
        let d2 = second_derivative(&smoothed)?;
        warnings.extend(d2.warnings);
        current = d2.field;
        coeff *= Complex64::new(0.0, tau / n as f64);
        last = 0.0;
        for (s, v) in sum.iter_mut().zip(current.values()) {
            let term = coeff * v;
            *s += term;
            last = f64::max(last, term.norm());
        }
        if last < cfg.tail_tol {
            warnings.dedup();
            return Ok(FieldResult {
                field: psi0.with_values(sum)?,
                error_estimate: last + st.weight_error * psi0.max_abs(),
                warnings,
            });
        }
    }
    Err(Error::Truncation {
        terms: n_cap,
        last_term: last,
        tolerance: cfg.tail_tol,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_has_unit_mass() {
        let f = Field::from_real_fn(-60.0, 60.0, 1201, |_| 1.0).unwrap();
        let st = k0_stencil(&f, &QuadratureConfig::default()).unwrap();
        assert!((st.mass() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn kernel_is_even() {
        assert_eq!(k0_kernel(1.3), k0_kernel(-1.3));
        assert_eq!(k0_kernel(0.0), 0.0);
    }
}
