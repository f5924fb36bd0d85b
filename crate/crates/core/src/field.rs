//! Complex samples on a closed uniform grid.

use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::special::sum::{sum, ComplexSum};

/// Smallest admissible sample count.
pub const MIN_SAMPLES: usize = 8;

/// Boundary magnitude (relative to the peak) above which truncation is flagged.
pub const LEAKAGE_THRESHOLD: f64 = 1e-8;

/// A complex-valued function sampled at `x_j = x_min + j (x_max − x_min)/(n − 1)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Field {
    x_min: f64,
    x_max: f64,
    values: Vec<Complex64>,
}

impl Field {
    pub fn new(x_min: f64, x_max: f64, values: Vec<Complex64>) -> Result<Self> {
        if !(x_min.is_finite() && x_max.is_finite() && x_min < x_max) {
            return Err(Error::config(format!(
                "grid bounds must satisfy x_min < x_max, got [{x_min}, {x_max}]"
            )));
        }
        if values.len() < MIN_SAMPLES {
            return Err(Error::config(format!(
                "a field needs at least {MIN_SAMPLES} samples, got {}",
                values.len()
            )));
        }
        if let Some(j) = values.iter().position(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::config(format!("sample {j} is not finite")));
        }
        Ok(Self {
            x_min,
            x_max,
            values,
        })
    }

    pub fn from_fn(x_min: f64, x_max: f64, n: usize, f: impl Fn(f64) -> Complex64) -> Result<Self> {
        if n < MIN_SAMPLES {
            return Err(Error::config(format!(
                "a field needs at least {MIN_SAMPLES} samples, got {n}"
            )));
        }
        let h = (x_max - x_min) / (n - 1) as f64;
        Self::new(x_min, x_max, (0..n).map(|j| f(x_min + j as f64 * h)).collect())
    }

    pub fn from_real_fn(x_min: f64, x_max: f64, n: usize, f: impl Fn(f64) -> f64) -> Result<Self> {
        Self::from_fn(x_min, x_max, n, |x| Complex64::new(f(x), 0.0))
    }

    /// New samples on the same grid.
    pub fn with_values(&self, values: Vec<Complex64>) -> Result<Self> {
        if values.len() != self.values.len() {
            return Err(Error::config("replacement values have the wrong length"));
        }
        Self::new(self.x_min, self.x_max, values)
    }

    pub fn x_min(&self) -> f64 {
        self.x_min
    }

    pub fn x_max(&self) -> f64 {
        self.x_max
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn spacing(&self) -> f64 {
        (self.x_max - self.x_min) / (self.values.len() - 1) as f64
    }

    pub fn x(&self, j: usize) -> f64 {
        self.x_min + j as f64 * self.spacing()
    }

    pub fn xs(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.len()).map(move |j| self.x(j))
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<Complex64> {
        self.values
    }

    pub fn same_grid(&self, other: &Field) -> bool {
        self.x_min == other.x_min && self.x_max == other.x_max && self.len() == other.len()
    }

    /// Trapezoid-rule integral.
    pub fn integral(&self) -> Complex64 {
        let n = self.len();
        let mut acc = ComplexSum::new();
        for (j, v) in self.values.iter().enumerate() {
            let w = if j == 0 || j == n - 1 { 0.5 } else { 1.0 };
            acc.add(v * w);
        }
        acc.value() * self.spacing()
    }

    /// Discrete L² norm `sqrt(h Σ |f_j|²)`.
    pub fn l2_norm(&self) -> f64 {
        (self.spacing() * sum(self.values.iter().map(|z| z.norm_sqr()))).sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Second moment `∫ x² |f|² / ∫ |f|²` about the origin.
    pub fn second_moment(&self) -> f64 {
        let num = sum(self.xs().zip(&self.values).map(|(x, z)| x * x * z.norm_sqr()));
        let den = sum(self.values.iter().map(|z| z.norm_sqr()));
        num / den
    }

    /// Largest end-point magnitude relative to the peak.
    pub fn boundary_ratio(&self) -> f64 {
        let peak = self.max_abs();
        if peak == 0.0 {
            return 0.0;
        }
        let edge = self.values[0].norm().max(self.values[self.len() - 1].norm());
        edge / peak
    }

    /// A leakage warning when the field has not decayed at the grid ends.
    pub fn leakage_warning(&self) -> Option<Warning> {
        let ratio = self.boundary_ratio();
        (ratio > LEAKAGE_THRESHOLD).then_some(Warning::BoundaryLeakage { ratio })
    }

    /// Piecewise-cubic Lagrange interpolant through the four nearest samples,
    /// with samples beyond the grid taken as zero.
    pub fn interpolate(&self, x: f64) -> Complex64 {
        let n = self.len() as isize;
        let u = (x - self.x_min) / self.spacing();
        let l = u.floor();
        if !(l >= -2.0 && l <= n as f64) {
            return Complex64::new(0.0, 0.0);
        }
        let s = u - l;
        let l = l as isize;
        let basis = [
            -s * (s - 1.0) * (s - 2.0) / 6.0,
            (s + 1.0) * (s - 1.0) * (s - 2.0) / 2.0,
            -(s + 1.0) * s * (s - 2.0) / 2.0,
            (s + 1.0) * s * (s - 1.0) / 6.0,
        ];
        let mut acc = Complex64::new(0.0, 0.0);
        for (q, b) in basis.iter().enumerate() {
            let j = l - 1 + q as isize;
            if j >= 0 && j < n {
                acc += self.values[j as usize] * *b;
            }
        }
        acc
    }

    /// Indices whose abscissae lie in `[a, b]`.
    pub fn indices_within(&self, a: f64, b: f64) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(move |&j| {
            let x = self.x(j);
            x >= a - 1e-12 && x <= b + 1e-12
        })
    }
}

/// Non-fatal diagnostics attached to a computed field.
#[derive(Debug, Clone, PartialEq)]
pub enum Warning {
    /// Input does not decay at the grid boundary; truncation or zero extension
    /// affects the result.
    BoundaryLeakage { ratio: f64 },
    /// Periodic images overlap the physical window in a spectral solve.
    WrapAround { ratio: f64 },
    /// Part of a shift integral fell outside the grid and was zero-extended.
    DiscardedMass { fraction: f64 },
    /// A spectral preset outside its validated range.
    Experimental(&'static str),
}

impl fmt::Display for Warning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Warning::BoundaryLeakage { ratio } => {
                write!(f, "boundary leakage: edge/peak = {ratio:.3e}")
            }
            Warning::WrapAround { ratio } => {
                write!(f, "periodic wrap-around: edge/peak = {ratio:.3e}")
            }
            Warning::DiscardedMass { fraction } => {
                write!(f, "zero extension discarded {fraction:.3e} of the kernel mass")
            }
            Warning::Experimental(what) => write!(f, "experimental: {what}"),
        }
    }
}

/// A computed field together with its accuracy diagnostics.
#[derive(Debug, Clone, PartialEq)]
pub struct FieldResult {
    pub field: Field,
    /// Largest per-point quadrature error estimate.
    pub error_estimate: f64,
    pub warnings: Vec<Warning>,
}

impl FieldResult {
    pub fn exact(field: Field) -> Self {
        Self {
            field,
            error_estimate: 0.0,
            warnings: Vec::new(),
        }
    }
}
