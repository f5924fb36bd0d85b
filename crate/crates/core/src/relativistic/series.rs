//! Power-series solution in τ of `i ∂_τ Ψ = √(1 − ∂_η²) Ψ` for Gaussian
//! initial data, `Ψ = A e^{−η²} + i B`.

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::evolution::{solve_symbol_spectral, SymbolSpec};
use crate::field::{Field, FieldResult};
use crate::special::hermite::hermite2_sequence;
use crate::special::quadrature::{integrate_halfline_vec, QuadratureConfig};
use crate::special::sum::NeumaierSum;
use crate::transforms::INV_SQRT_PI;

/// Hard cap on the number of τ-orders summed by [`series_solution`].
pub const MAX_SERIES_TERMS: usize = 60;

/// Truncation control for the τ-power series.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesConfig {
    /// Highest order summed (capped at [`MAX_SERIES_TERMS`]). Zero keeps only
    /// the initial term.
    pub n_max: usize,
    /// The sum stops once two consecutive orders fall below this magnitude.
    pub tail_tol: f64,
}

impl Default for SeriesConfig {
    fn default() -> Self {
        Self {
            n_max: MAX_SERIES_TERMS,
            tail_tol: 1e-12,
        }
    }
}

impl SeriesConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.tail_tol > 0.0) || !self.tail_tol.is_finite() {
            return Err(Error::config(format!("tail_tol must be positive, got {}", self.tail_tol)));
        }
        Ok(())
    }
}

/// One evaluation of the series with its diagnostics.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesPoint {
    pub value: Complex64,
    /// Magnitude of the last order included.
    pub tail: f64,
    /// Number of τ-orders summed.
    pub terms: usize,
}

fn even_hermite(k_max: usize, x: f64, y: f64) -> Result<Vec<f64>> {
    let seq = hermite2_sequence(2 * k_max, x, y)?;
    Ok(seq.into_iter().step_by(2).collect())
}

/// `f_{2k}(η) = (1/√π) ∫₀^∞ e^{−s} [s(1+4s)]^{−1/2} H_{2k}(2η/(1+4s), −1/(1+4s)) e^{−η²/(1+4s)} ds`.
pub fn f2k(eta: f64, k: usize, cfg: &QuadratureConfig) -> Result<f64> {
    if !eta.is_finite() {
        return Err(Error::domain("f2k", "eta must be finite"));
    }
    // The second component integrates |integrand|, so the relative tolerance
    // is measured against ∫|·|: for large k the Hermite factor oscillates and
    // ∫· cancels below the round-off floor of its own magnitude.
    let est = integrate_halfline_vec(
        |s, out| {
            if !(s > 0.0) {
                out.fill(Complex64::new(0.0, 0.0));
                return;
            }
            let a = 1.0 / (1.0 + 4.0 * s);
            let w = (-s - eta * eta * a).exp() * (a / s).sqrt();
            if w == 0.0 {
                out.fill(Complex64::new(0.0, 0.0));
                return;
            }
            let h = match even_hermite(k, 2.0 * eta * a, -a) {
                Ok(v) => v[k],
                Err(_) => f64::NAN,
            };
            let v = INV_SQRT_PI * w * h;
            out[0] = Complex64::new(v, 0.0);
            out[1] = Complex64::new(v.abs(), 0.0);
        },
        2,
        cfg,
    )
    .map_err(|e| match e {
        Error::Convergence { estimate, error_bound, .. } => Error::Convergence {
            op: "f2k",
            estimate,
            error_bound,
        },
        other => other,
    })?;
    Ok(est.values[0].re)
}

/// `Σ_k (−1)^k C(n, k) v_k`.
fn alternating_binomial(n: usize, v: &[f64]) -> f64 {
    let mut acc = NeumaierSum::new();
    let mut c = 1.0;
    for (k, x) in v.iter().enumerate().take(n + 1) {
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        acc.add(sign * c * x);
        c = c * (n - k) as f64 / (k + 1) as f64;
    }
    acc.value()
}

/// `Ψ(η, τ)` for `Ψ(η, 0) = e^{−η²}` from the double sums for `A` and `B`.
pub fn series_solution(eta: f64, tau: f64, cfg: &SeriesConfig, qcfg: &QuadratureConfig) -> Result<SeriesPoint> {
    cfg.validate()?;
    if !eta.is_finite() || !tau.is_finite() {
        return Err(Error::domain("series_solution", "eta and tau must be finite"));
    }
    let g = (-eta * eta).exp();
    if tau == 0.0 || cfg.n_max == 0 {
        return Ok(SeriesPoint {
            value: Complex64::new(g, 0.0),
            tail: if tau == 0.0 { 0.0 } else { g },
            terms: 1,
        });
    }
    let n_cap = cfg.n_max.min(MAX_SERIES_TERMS);
    let h = even_hermite(n_cap, 2.0 * eta, -1.0)?;
    let mut f = vec![f2k(eta, 0, qcfg)?];

    let mut a = NeumaierSum::new();
    let mut b = NeumaierSum::new();
    // τ^{2n}/(2n)! and τ^{2n+1}/(2n+1)!
    let mut even = 1.0;
    let mut odd = tau;
    let mut prev = f64::INFINITY;
    let mut last = f64::INFINITY;
    for n in 0..=n_cap {
        if n > 0 {
            even = odd * tau / (2 * n) as f64;
        }
        odd = even * tau / (2 * n + 1) as f64;
        f.push(f2k(eta, n + 1, qcfg)?);
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        let a_n = sign * even * alternating_binomial(n, &h) * g;
        let b_n = -sign * odd * alternating_binomial(n + 1, &f);
        a.add(a_n);
        b.add(b_n);
        last = a_n.abs() + b_n.abs();
        if !last.is_finite() {
            return Err(Error::Range {
                op: "series_solution",
                detail: format!("order {n} overflows at η = {eta}, τ = {tau}"),
            });
        }
        if last < cfg.tail_tol && prev < cfg.tail_tol {
            return Ok(SeriesPoint {
                value: Complex64::new(a.value(), b.value()),
                tail: last,
                terms: n + 1,
            });
        }
        prev = last;
    }
    Err(Error::Truncation {
        terms: n_cap + 1,
        last_term: last,
        tolerance: cfg.tail_tol,
    })
}

/// [`series_solution`] at every point of the grid `[x_min, x_max]` with `n` samples.
pub fn series_solution_grid(
    x_min: f64,
    x_max: f64,
    n: usize,
    tau: f64,
    cfg: &SeriesConfig,
    qcfg: &QuadratureConfig,
) -> Result<FieldResult> {
    let grid = Field::from_real_fn(x_min, x_max, n, |_| 0.0)?;
    let points: Vec<SeriesPoint> = (0..n)
        .into_par_iter()
        .map(|j| series_solution(grid.x(j), tau, cfg, qcfg))
        .collect::<Result<_>>()?;
    let tail = points.iter().map(|p| p.tail).fold(0.0, f64::max);
    Ok(FieldResult {
        field: grid.with_values(points.iter().map(|p| p.value).collect())?,
        error_estimate: tail,
        warnings: Vec::new(),
    })
}

/// Spectral evolution with the multiplier `e^{−iτ√(1+k²)}`.
pub fn spectral_schrodinger(f: &Field, tau: f64) -> Result<FieldResult> {
    solve_symbol_spectral(f, tau, &SymbolSpec::schrodinger())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alternating_binomial_of_ones_vanishes() {
        let v = vec![1.0; 8];
        assert_eq!(alternating_binomial(0, &v), 1.0);
        for n in 1..7 {
            assert!(alternating_binomial(n, &v).abs() < 1e-14);
        }
    }

    #[test]
    fn tau_zero_returns_initial_gaussian() {
        let p = series_solution(0.7, 0.0, &SeriesConfig::default(), &QuadratureConfig::default()).unwrap();
        assert_eq!(p.value, Complex64::new((-0.49f64).exp(), 0.0));
    }

    #[test]
    fn f0_decays_with_eta() {
        let cfg = QuadratureConfig::default();
        assert!(f2k(0.0, 0, &cfg).unwrap() > 0.0);
        assert!(f2k(40.0, 0, &cfg).unwrap().abs() < 1e-15);
    }

    #[test]
    fn exhausted_series_reports_truncation() {
        let cfg = SeriesConfig {
            n_max: 2,
            tail_tol: 1e-14,
        };
        let r = series_solution(0.0, 1.0, &cfg, &QuadratureConfig::default());
        assert!(matches!(r, Err(Error::Truncation { terms: 3, .. })));
    }
}
