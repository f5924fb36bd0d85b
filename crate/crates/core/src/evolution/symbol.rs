use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;

/// A Fourier symbol `k ↦ P(ik)`: the evolution `∂_τ F = P(∂_x) F` multiplies
/// mode `k` by `e^{τ P(ik)}`.
#[derive(Clone)]
pub struct SymbolSpec {
    name: String,
    eval: Arc<dyn Fn(f64) -> Complex64 + Send + Sync>,
    experimental: bool,
}

impl fmt::Debug for SymbolSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SymbolSpec").field("name", &self.name).finish()
    }
}

impl SymbolSpec {
    pub fn new(name: impl Into<String>, eval: impl Fn(f64) -> Complex64 + Send + Sync + 'static) -> Self {
        Self {
            name: name.into(),
            eval: Arc::new(eval),
            experimental: false,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn eval(&self, k: f64) -> Complex64 {
        (self.eval)(k)
    }

    /// Whether results from this symbol are outside the validated set.
    pub fn is_experimental(&self) -> bool {
        self.experimental
    }

    /// `−k²`: ordinary heat flow.
    pub fn heat() -> Self {
        Self::new("heat", |k| Complex64::new(-k * k, 0.0))
    }

    /// `−√(1+k²)`.
    pub fn pseudoheat() -> Self {
        Self::new("pseudoheat", |k| Complex64::new(-(1.0 + k * k).sqrt(), 0.0))
    }

    /// `−i√(1+k²)`: free relativistic Schrödinger evolution.
    pub fn schrodinger() -> Self {
        Self::new("schrodinger", |k| Complex64::new(0.0, -(1.0 + k * k).sqrt()))
    }

    /// `−√(ik)` on the principal branch. Experimental: the branch is not tied
    /// to the subordination solution for two-sided spectra.
    pub fn half_derivative() -> Self {
        let mut s = Self::new("half_derivative", |k| -Complex64::new(0.0, k).sqrt());
        s.experimental = true;
        s
    }

    /// Nonparaxial propagation `−i√(n²−k²)` for `|k| < n`; evanescent modes
    /// `|k| ≥ n` decay as `−√(k²−n²)`.
    pub fn optics(n: f64) -> Self {
        Self::new(format!("optics({n})"), move |k| {
            let d = n * n - k * k;
            if d > 0.0 {
                Complex64::new(0.0, -d.sqrt())
            } else {
                Complex64::new(-(-d).sqrt(), 0.0)
            }
        })
    }

    /// Preset lookup by name; `optics` takes its index as `optics(1.5)`.
    pub fn preset(name: &str) -> Option<Self> {
        match name {
            "heat" => Some(Self::heat()),
            "pseudoheat" => Some(Self::pseudoheat()),
            "schrodinger" => Some(Self::schrodinger()),
            "half_derivative" => Some(Self::half_derivative()),
            _ => {
                let inner = name.strip_prefix("optics(")?.strip_suffix(')')?;
                let n: f64 = inner.trim().parse().ok()?;
                (n > 0.0 && n.is_finite()).then(|| Self::optics(n))
            }
        }
    }
}
