//! Discrete convolution of grid samples against a real kernel.
//!
//! Product integration treats the samples as a piecewise-cubic Lagrange
//! interpolant (zero beyond the grid) and integrates the kernel exactly against
//! each cubic basis function, so kernels with integrable endpoint
//! singularities (log, jump) are handled without special casing. The result
//! is a Toeplitz stencil `F_i = Σ_j c[i−j] f_j`.

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::Result;
use crate::special::quadrature::{integrate_interval_vec, QuadratureConfig};
use crate::special::sum::ComplexSum;

/// Toeplitz weights `c[r]` for `r ∈ [r_min, r_min + len)`.
#[derive(Debug, Clone)]
pub struct Stencil {
    r_min: isize,
    coeffs: Vec<f64>,
    /// Summed quadrature error of the weights (multiply by `max |f|`).
    pub weight_error: f64,
}

impl Stencil {
    pub fn coeff(&self, r: isize) -> f64 {
        let k = r - self.r_min;
        if k < 0 || k as usize >= self.coeffs.len() {
            0.0
        } else {
            self.coeffs[k as usize]
        }
    }

    /// Total weight, i.e. the discrete kernel mass.
    pub fn mass(&self) -> f64 {
        crate::special::sum::sum(self.coeffs.iter().copied())
    }

    /// `F_i = Σ_j c[i−j] f_j` at one output index.
    pub fn apply_at(&self, values: &[Complex64], i: usize) -> Complex64 {
        let n = values.len() as isize;
        let i = i as isize;
        let r_max = self.r_min + self.coeffs.len() as isize - 1;
        // j = i − r
        let j_lo = (i - r_max).max(0);
        let j_hi = (i - self.r_min).min(n - 1);
        let mut acc = ComplexSum::new();
        let mut j = j_lo;
        while j <= j_hi {
            let c = self.coeffs[(i - j - self.r_min) as usize];
            if c != 0.0 {
                acc.add(values[j as usize] * c);
            }
            j += 1;
        }
        acc.value()
    }

    pub fn apply(&self, values: &[Complex64]) -> Vec<Complex64> {
        (0..values.len())
            .into_par_iter()
            .map(|i| self.apply_at(values, i))
            .collect()
    }

    /// Absolute kernel weight that would fall on zero-extended samples at
    /// output `i`, relative to the total absolute weight.
    pub fn outside_fraction(&self, n: usize, i: usize) -> f64 {
        let mut inside = 0.0;
        let mut total = 0.0;
        for (k, c) in self.coeffs.iter().enumerate() {
            let r = self.r_min + k as isize;
            let j = i as isize - r;
            total += c.abs();
            if j >= 0 && (j as usize) < n {
                inside += c.abs();
            }
        }
        if total == 0.0 {
            0.0
        } else {
            (total - inside) / total
        }
    }
}

// Cubic Lagrange basis on nodes −1, 0, 1, 2 at local coordinate s ∈ [0, 1].
#[inline]
fn lagrange(s: f64) -> [f64; 4] {
    [
        -s * (s - 1.0) * (s - 2.0) / 6.0,
        (s + 1.0) * (s - 1.0) * (s - 2.0) / 2.0,
        -(s + 1.0) * s * (s - 2.0) / 2.0,
        (s + 1.0) * s * (s - 1.0) / 6.0,
    ]
}

/// Product-integration stencil for `F(x_i) = ∫ K(x_i − ξ) f(ξ) dξ` on a grid
/// of `n` points with spacing `h`. The kernel is treated as zero outside
/// `[d_lo, d_hi]`.
pub fn product_stencil<K>(
    kernel: K,
    h: f64,
    n: usize,
    d_lo: f64,
    d_hi: f64,
    cfg: &QuadratureConfig,
) -> Result<Stencil>
where
    K: Fn(f64) -> f64 + Sync,
{
    let n_i = n as isize;
    // cell m spans d ∈ [(m−1)h, m h]
    let m_lo = ((d_lo / h).floor() as isize).max(-n_i);
    let m_hi = ((d_hi / h).ceil() as isize + 1).min(n_i + 1);
    if m_lo > m_hi {
        return Ok(Stencil {
            r_min: 0,
            coeffs: vec![0.0],
            weight_error: 0.0,
        });
    }
    let cell_cfg = QuadratureConfig {
        abs_tol: cfg.abs_tol * h,
        ..*cfg
    };
    let cells: Vec<Result<([f64; 4], f64)>> = (m_lo..=m_hi)
        .into_par_iter()
        .map(|m| {
            let a = (m - 1) as f64 * h;
            let b = m as f64 * h;
            if b <= d_lo || a >= d_hi {
                return Ok(([0.0; 4], 0.0));
            }
            // restrict to the part of the cell inside the support, in s
            let s_lo = ((m as f64 * h - d_hi) / h).max(0.0);
            let s_hi = ((m as f64 * h - d_lo) / h).min(1.0);
            if s_lo >= s_hi {
                return Ok(([0.0; 4], 0.0));
            }
            let r = integrate_interval_vec(
                |s, out| {
                    let k = kernel((m as f64 - s) * h);
                    let l = lagrange(s);
                    for q in 0..4 {
                        out[q] = Complex64::new(k * l[q], 0.0);
                    }
                },
                4,
                &[s_lo, s_hi],
                &cell_cfg,
            )?;
            Ok((
                [
                    h * r.values[0].re,
                    h * r.values[1].re,
                    h * r.values[2].re,
                    h * r.values[3].re,
                ],
                h * r.error,
            ))
        })
        .collect();
    let mut w = Vec::with_capacity(cells.len());
    let mut weight_error = 0.0;
    for c in cells {
        let (cell, err) = c?;
        w.push(cell);
        weight_error += 4.0 * err;
    }
    // c[r] = Σ_q W[r − 1 + q][q]
    let r_min = m_lo - 2;
    let r_max = m_hi + 1;
    let mut coeffs = vec![0.0; (r_max - r_min + 1) as usize];
    for (k, c) in coeffs.iter_mut().enumerate() {
        let r = r_min + k as isize;
        let mut acc = crate::special::sum::NeumaierSum::new();
        for q in 0..4 {
            let m = r - 1 + q as isize;
            if m >= m_lo && m <= m_hi {
                acc.add(w[(m - m_lo) as usize][q]);
            }
        }
        *c = acc.value();
    }
    Ok(Stencil {
        r_min,
        coeffs,
        weight_error,
    })
}

/// Trapezoid stencil `c[r] = h K(r h)` restricted to `[d_lo, d_hi]`.
pub fn trapezoid_stencil<K>(kernel: K, h: f64, n: usize, d_lo: f64, d_hi: f64) -> Stencil
where
    K: Fn(f64) -> f64,
{
    let n_i = n as isize;
    let r_min = ((d_lo / h).ceil() as isize).max(-(n_i - 1));
    let r_max = ((d_hi / h).floor() as isize).min(n_i - 1);
    if r_min > r_max {
        return Stencil {
            r_min: 0,
            coeffs: vec![0.0],
            weight_error: 0.0,
        };
    }
    let coeffs = (r_min..=r_max).map(|r| h * kernel(r as f64 * h)).collect();
    Stencil {
        r_min,
        coeffs,
        weight_error: 0.0,
    }
}
