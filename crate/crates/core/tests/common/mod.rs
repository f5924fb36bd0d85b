//! Independent reference computations shared by the integration tests.
//!
//! Nothing here calls into the library's quadrature, special-function or
//! spectral code; each oracle is a direct, deliberately simple evaluation.
#![allow(dead_code)]

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

/// Composite trapezoid rule with `n` panels.
pub fn trapezoid(f: impl Fn(f64) -> f64, a: f64, b: f64, n: usize) -> f64 {
    let h = (b - a) / n as f64;
    let mut acc = 0.5 * (f(a) + f(b));
    for j in 1..n {
        acc += f(a + j as f64 * h);
    }
    acc * h
}

/// Composite Simpson rule with `n` (even) panels.
pub fn simpson(f: impl Fn(f64) -> f64, a: f64, b: f64, n: usize) -> f64 {
    assert!(n % 2 == 0);
    let h = (b - a) / n as f64;
    let mut acc = f(a) + f(b);
    for j in 1..n {
        let w = if j % 2 == 1 { 4.0 } else { 2.0 };
        acc += w * f(a + j as f64 * h);
    }
    acc * h / 3.0
}

/// `H_n(x, y)` straight from the factorial sum, with factorials as floats.
pub fn hermite2_brute(n: usize, x: f64, y: f64) -> f64 {
    let fact = |m: usize| (1..=m).fold(1.0, |p, k| p * k as f64);
    (0..=n / 2)
        .map(|k| fact(n) * x.powi((n - 2 * k) as i32) * y.powi(k as i32) / (fact(n - 2 * k) * fact(k)))
        .sum()
}

/// Power series for `J0`.
pub fn j0_series(x: f64) -> f64 {
    let mut term = 1.0;
    let mut acc = 1.0;
    for k in 1..120 {
        term *= -(x * x) / (4.0 * (k * k) as f64);
        acc += term;
    }
    acc
}

/// `∫₀^∞ e^{−x cosh t} dt` by the trapezoid rule on a truncated range; the
/// integrand is smooth and doubly-exponentially decaying.
pub fn k0_integral(x: f64) -> f64 {
    let t_max = (45.0 / x + 1.0).acosh();
    trapezoid(|t| (-x * t.cosh()).exp(), 0.0, t_max, 20_000)
}

/// Scaled-and-squared Taylor exponential of a complex square matrix.
pub fn expm_taylor(a: &DMatrix<Complex64>) -> DMatrix<Complex64> {
    let norm: f64 = a.iter().map(|z| z.norm()).sum();
    let mut squarings = 0;
    let mut scale = 1.0;
    while norm * scale > 0.5 {
        scale *= 0.5;
        squarings += 1;
    }
    let b = a * Complex64::new(scale, 0.0);
    let n = a.nrows();
    let mut term = DMatrix::<Complex64>::identity(n, n);
    let mut sum = term.clone();
    for k in 1..=60 {
        term = &term * &b * Complex64::new(1.0 / k as f64, 0.0);
        sum += &term;
    }
    for _ in 0..squarings {
        sum = &sum * &sum;
    }
    sum
}

/// Square root of an upper-triangular matrix with positive diagonal.
fn upper_triangular_sqrt(a: &DMatrix<f64>) -> DMatrix<f64> {
    let n = a.nrows();
    let mut s = DMatrix::<f64>::zeros(n, n);
    for i in 0..n {
        s[(i, i)] = a[(i, i)].sqrt();
    }
    for d in 1..n {
        for i in 0..n - d {
            let j = i + d;
            let mut acc = a[(i, j)];
            for k in i + 1..j {
                acc -= s[(i, k)] * s[(k, j)];
            }
            s[(i, j)] = acc / (s[(i, i)] + s[(j, j)]);
        }
    }
    s
}

/// `[e^{−τ√(x − c∂)} f](x_lo)` from the matrix function of a second-order
/// forward-difference discretization on `[x_lo, x_hi]` with `panels` cells
/// (zero beyond `x_hi`).
pub fn affine_matrix_value(tau: f64, c: f64, x_lo: f64, x_hi: f64, panels: usize, f: impl Fn(f64) -> f64) -> f64 {
    let n = panels + 1;
    let h = (x_hi - x_lo) / panels as f64;
    let mut a = DMatrix::<f64>::zeros(n, n);
    for i in 0..n {
        let x = x_lo + i as f64 * h;
        a[(i, i)] = x + c * 3.0 / (2.0 * h);
        if i + 1 < n {
            a[(i, i + 1)] = -c * 4.0 / (2.0 * h);
        }
        if i + 2 < n {
            a[(i, i + 2)] = c / (2.0 * h);
        }
    }
    let s = upper_triangular_sqrt(&a);
    let m = (s * (-tau)).exp();
    let v = DVector::from_fn(n, |i, _| f(x_lo + i as f64 * h));
    (m * v)[0]
}

/// Richardson-extrapolated [`affine_matrix_value`] from `panels` and `2·panels`.
pub fn affine_matrix_oracle(tau: f64, c: f64, x_lo: f64, x_hi: f64, panels: usize, f: impl Fn(f64) -> f64 + Copy) -> f64 {
    let coarse = affine_matrix_value(tau, c, x_lo, x_hi, panels, f);
    let fine = affine_matrix_value(tau, c, x_lo, x_hi, 2 * panels, f);
    (4.0 * fine - coarse) / 3.0
}

/// Expectation of `g(p)` over a Gaussian momentum density `N(0, sp²)` by the
/// trapezoid rule on `[−12 sp, 12 sp]`.
pub fn gaussian_momentum_average(g: impl Fn(f64) -> f64, sp: f64) -> f64 {
    let norm = 1.0 / ((2.0 * std::f64::consts::PI).sqrt() * sp);
    trapezoid(|p| norm * (-p * p / (2.0 * sp * sp)).exp() * g(p), -12.0 * sp, 12.0 * sp, 40_000)
}

pub fn max_abs_diff(a: &[Complex64], b: &[Complex64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}
