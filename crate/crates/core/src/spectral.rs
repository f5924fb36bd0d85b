//! Fourier-multiplier application on zero-padded grids.
//!
//! The field is padded on the right to twice its length, transformed,
//! multiplied mode by mode, transformed back and cropped. Wavenumbers are
//! those of the padded periodic grid: `k_j = 2π j / (N h)` for
//! `j ∈ [−N/2, N/2)`.

use num_complex::Complex64;
use rustfft::FftPlanner;

use crate::error::{Error, Result};
use crate::field::{Field, FieldResult, Warning};

/// Padding factor applied before every transform.
pub const PAD_FACTOR: usize = 2;

/// Signed angular wavenumbers of a periodic grid with `len` points and spacing `h`,
/// in FFT order.
pub fn wavenumbers(len: usize, h: f64) -> Vec<f64> {
    let scale = 2.0 * std::f64::consts::PI / (len as f64 * h);
    (0..len)
        .map(|j| {
            let s = if j < len / 2 { j as isize } else { j as isize - len as isize };
            s as f64 * scale
        })
        .collect()
}

/// Apply `multiplier(k)` to `f`.
pub fn apply_multiplier<M>(f: &Field, multiplier: M) -> Result<FieldResult>
where
    M: Fn(f64) -> Complex64,
{
    let n = f.len();
    if !n.is_power_of_two() {
        return Err(Error::config(format!(
            "spectral solves need a power-of-two grid, got n = {n}"
        )));
    }
    let len = PAD_FACTOR * n;
    let mut buf = vec![Complex64::new(0.0, 0.0); len];
    buf[..n].copy_from_slice(f.values());

    let mut planner = FftPlanner::<f64>::new();
    planner.plan_fft_forward(len).process(&mut buf);
    for (z, k) in buf.iter_mut().zip(wavenumbers(len, f.spacing())) {
        *z *= multiplier(k);
    }
    planner.plan_fft_inverse(len).process(&mut buf);
    let scale = 1.0 / len as f64;
    let out: Vec<Complex64> = buf[..n].iter().map(|z| z * scale).collect();
    if out.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
        return Err(Error::Range {
            op: "apply_multiplier",
            detail: "multiplier overflows on this grid".into(),
        });
    }

    let mut warnings = Vec::new();
    let ratio = f.boundary_ratio();
    if ratio > crate::field::LEAKAGE_THRESHOLD {
        warnings.push(Warning::WrapAround { ratio });
    }
    let field = f.with_values(out)?;
    Ok(FieldResult {
        field,
        error_estimate: f64::EPSILON * (n as f64).log2() * f.max_abs(),
        warnings,
    })
}

/// Second derivative by the multiplier `−k²`.
pub fn second_derivative(f: &Field) -> Result<FieldResult> {
    apply_multiplier(f, |k| Complex64::new(-k * k, 0.0))
}
