//! Half-line and real-line integration front ends.
//!
//! Every rule is vector-valued: an integrand writes `dim` complex components
//! per abscissa and all components share one node set. The scalar entry
//! points are thin wrappers with `dim = 1`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_complex::Complex64;

use super::gauss::{gauss_hermite, gauss_laguerre, GaussRule, MAX_FIXED_ORDER};
use super::kronrod::{self, Tolerance, VecEstimate};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HalflineRule {
    /// Gauss–Laguerre with weights rescaled by `e^{s}`; order doubles until
    /// two successive orders agree.
    GaussLaguerre,
    /// Adaptive Gauss–Kronrod after `s = (u/(1−u))²`.
    AdaptiveSubdivision,
    /// `s = 1/ξ²` followed by the adaptive map; removes the essential
    /// singularity of `e^{−1/(4s)}`-type integrands.
    InverseSquareSubstitution,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReallineRule {
    /// Gauss–Hermite with weights rescaled by `e^{x²}`; order doubling.
    GaussHermite,
    /// Adaptive Gauss–Kronrod after `x = u/(1−u²)`.
    TruncatedAdaptive,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureConfig {
    pub halfline_rule: HalflineRule,
    pub halfline_order: usize,
    pub realline_rule: ReallineRule,
    pub realline_order: usize,
    pub abs_tol: f64,
    pub rel_tol: f64,
    /// Maximum number of subintervals held by an adaptive rule.
    pub max_refinements: usize,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        Self {
            halfline_rule: HalflineRule::AdaptiveSubdivision,
            halfline_order: 64,
            realline_rule: ReallineRule::TruncatedAdaptive,
            realline_order: 64,
            abs_tol: 1e-13,
            rel_tol: 1e-11,
            max_refinements: 2000,
        }
    }
}

impl QuadratureConfig {
    pub fn validate(&self) -> Result<()> {
        if self.halfline_order < 2 || self.realline_order < 2 {
            return Err(Error::config("quadrature orders must be at least 2"));
        }
        if self.halfline_order > MAX_FIXED_ORDER || self.realline_order > MAX_FIXED_ORDER {
            return Err(Error::config(format!(
                "quadrature orders are capped at {MAX_FIXED_ORDER}"
            )));
        }
        if !(self.abs_tol >= 0.0 && self.rel_tol >= 0.0) {
            return Err(Error::config("tolerances must be nonnegative"));
        }
        if self.abs_tol == 0.0 && self.rel_tol == 0.0 {
            return Err(Error::config("abs_tol and rel_tol cannot both be zero"));
        }
        if self.max_refinements == 0 {
            return Err(Error::config("max_refinements must be positive"));
        }
        Ok(())
    }

    pub fn with_tolerances(mut self, abs_tol: f64, rel_tol: f64) -> Self {
        self.abs_tol = abs_tol;
        self.rel_tol = rel_tol;
        self
    }

    pub fn with_halfline_rule(mut self, rule: HalflineRule) -> Self {
        self.halfline_rule = rule;
        self
    }

    pub fn with_realline_rule(mut self, rule: ReallineRule) -> Self {
        self.realline_rule = rule;
        self
    }

    fn tolerance(&self) -> Tolerance {
        Tolerance {
            abs: self.abs_tol,
            rel: self.rel_tol,
            max_intervals: self.max_refinements,
        }
    }
}

/// A scalar integral together with its achieved error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub value: Complex64,
    pub error: f64,
}

/// Vector-valued integral with a common error estimate (max over components).
#[derive(Debug, Clone, PartialEq)]
pub struct VecIntegral {
    pub values: Vec<Complex64>,
    pub error: f64,
}

fn finish(op: &'static str, est: VecEstimate) -> Result<VecIntegral> {
    if est.converged {
        Ok(VecIntegral {
            values: est.values,
            error: est.error,
        })
    } else {
        let magnitude = est.values.iter().map(|z| z.norm()).fold(0.0, f64::max);
        Err(Error::Convergence {
            op,
            estimate: if est.error.is_finite() {
                magnitude
            } else {
                f64::INFINITY
            },
            error_bound: est.error,
        })
    }
}

/// Adaptive integral over the finite partition `breakpoints` (strictly
/// increasing, at least two points).
pub fn integrate_interval_vec<F>(
    f: F,
    dim: usize,
    breakpoints: &[f64],
    cfg: &QuadratureConfig,
) -> Result<VecIntegral>
where
    F: Fn(f64, &mut [Complex64]),
{
    cfg.validate()?;
    if breakpoints.len() < 2 || breakpoints.windows(2).any(|w| !(w[0] < w[1])) {
        return Err(Error::config("breakpoints must be strictly increasing"));
    }
    finish("integrate_interval", kronrod::integrate(f, dim, breakpoints, cfg.tolerance()))
}

/// Scalar integral over `[a, b]`.
pub fn integrate_interval<F>(f: F, a: f64, b: f64, cfg: &QuadratureConfig) -> Result<Estimate>
where
    F: Fn(f64) -> Complex64,
{
    let r = integrate_interval_vec(|x, out| out[0] = f(x), 1, &[a, b], cfg)?;
    Ok(Estimate {
        value: r.values[0],
        error: r.error,
    })
}

// Zero where the Jacobian overflows: the integrand must already vanish there.
#[inline]
fn scale_into(out: &mut [Complex64], jac: f64) {
    for z in out.iter_mut() {
        *z = if jac.is_finite() { *z * jac } else { Complex64::new(0.0, 0.0) };
    }
}

/// Vector-valued `∫₀^∞ f(s) ds`.
pub fn integrate_halfline_vec<F>(f: F, dim: usize, cfg: &QuadratureConfig) -> Result<VecIntegral>
where
    F: Fn(f64, &mut [Complex64]),
{
    cfg.validate()?;
    let tol = cfg.tolerance();
    match cfg.halfline_rule {
        HalflineRule::AdaptiveSubdivision => {
            let g = |u: f64, out: &mut [Complex64]| {
                let r = u / (1.0 - u);
                let s = r * r;
                f(s, out);
                let d = 1.0 - u;
                scale_into(out, 2.0 * u / (d * d * d));
            };
            finish("integrate_halfline", kronrod::integrate(g, dim, &[0.0, 0.5, 1.0], tol))
        }
        HalflineRule::InverseSquareSubstitution => {
            let g = |u: f64, out: &mut [Complex64]| {
                let xi = u / (1.0 - u);
                let d = 1.0 - u;
                let s = 1.0 / (xi * xi);
                if s.is_finite() {
                    f(s, out);
                    scale_into(out, 2.0 / (xi * xi * xi) / (d * d));
                } else {
                    out.fill(Complex64::new(0.0, 0.0));
                }
            };
            finish("integrate_halfline", kronrod::integrate(g, dim, &[0.0, 0.5, 1.0], tol))
        }
        HalflineRule::GaussLaguerre => fixed_doubling(
            "integrate_halfline",
            &f,
            dim,
            cfg,
            cfg.halfline_order,
            laguerre_modified,
        ),
    }
}

/// Vector-valued `∫_{−∞}^{∞} f(x) dx`.
pub fn integrate_realline_vec<F>(f: F, dim: usize, cfg: &QuadratureConfig) -> Result<VecIntegral>
where
    F: Fn(f64, &mut [Complex64]),
{
    cfg.validate()?;
    match cfg.realline_rule {
        ReallineRule::TruncatedAdaptive => {
            let g = |u: f64, out: &mut [Complex64]| {
                let d = 1.0 - u * u;
                f(u / d, out);
                scale_into(out, (1.0 + u * u) / (d * d));
            };
            finish(
                "integrate_realline",
                kronrod::integrate(g, dim, &[-1.0, -0.5, 0.0, 0.5, 1.0], cfg.tolerance()),
            )
        }
        ReallineRule::GaussHermite => fixed_doubling(
            "integrate_realline",
            &f,
            dim,
            cfg,
            cfg.realline_order,
            hermite_modified,
        ),
    }
}

/// Scalar `∫₀^∞ f(s) ds`.
pub fn integrate_halfline<F>(f: F, cfg: &QuadratureConfig) -> Result<Estimate>
where
    F: Fn(f64) -> Complex64,
{
    let r = integrate_halfline_vec(|s, out| out[0] = f(s), 1, cfg)?;
    Ok(Estimate {
        value: r.values[0],
        error: r.error,
    })
}

/// Scalar `∫_{−∞}^{∞} f(x) dx`.
pub fn integrate_realline<F>(f: F, cfg: &QuadratureConfig) -> Result<Estimate>
where
    F: Fn(f64) -> Complex64,
{
    let r = integrate_realline_vec(|x, out| out[0] = f(x), 1, cfg)?;
    Ok(Estimate {
        value: r.values[0],
        error: r.error,
    })
}

type RuleCache = Mutex<HashMap<(u8, usize), Arc<GaussRule>>>;

fn cached(kind: u8, n: usize, build: impl FnOnce() -> GaussRule) -> Arc<GaussRule> {
    static CACHE: OnceLock<RuleCache> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(rule) = cache.lock().expect("rule cache poisoned").get(&(kind, n)) {
        return rule.clone();
    }
    let rule = Arc::new(build());
    cache
        .lock()
        .expect("rule cache poisoned")
        .entry((kind, n))
        .or_insert(rule)
        .clone()
}

// Weights multiplied by the inverse weight function so the rule integrates f
// itself. Nodes whose raw weight underflowed are dropped.
fn laguerre_modified(n: usize) -> Arc<GaussRule> {
    cached(0, n, || {
        let raw = gauss_laguerre(n, 0.0);
        rescale(raw, |x| x)
    })
}

fn hermite_modified(n: usize) -> Arc<GaussRule> {
    cached(1, n, || {
        let raw = gauss_hermite(n);
        rescale(raw, |x| x * x)
    })
}

fn rescale(raw: GaussRule, exponent: impl Fn(f64) -> f64) -> GaussRule {
    let mut nodes = Vec::with_capacity(raw.nodes.len());
    let mut weights = Vec::with_capacity(raw.nodes.len());
    for (x, w) in raw.nodes.into_iter().zip(raw.weights) {
        if w > 0.0 {
            let mw = (w.ln() + exponent(x)).exp();
            if mw.is_finite() {
                nodes.push(x);
                weights.push(mw);
            }
        }
    }
    GaussRule { nodes, weights }
}

fn apply_rule<F>(f: &F, dim: usize, rule: &GaussRule) -> Vec<Complex64>
where
    F: Fn(f64, &mut [Complex64]),
{
    let mut acc = vec![super::sum::ComplexSum::new(); dim];
    let mut buf = vec![Complex64::new(0.0, 0.0); dim];
    for (x, w) in rule.nodes.iter().zip(&rule.weights) {
        f(*x, &mut buf);
        for (a, v) in acc.iter_mut().zip(&buf) {
            a.add(*v * *w);
        }
    }
    acc.iter().map(|a| a.value()).collect()
}

fn fixed_doubling<F>(
    op: &'static str,
    f: &F,
    dim: usize,
    cfg: &QuadratureConfig,
    start: usize,
    rule: fn(usize) -> Arc<GaussRule>,
) -> Result<VecIntegral>
where
    F: Fn(f64, &mut [Complex64]),
{
    let mut n = start;
    let mut prev = apply_rule(f, dim, &rule(n));
    loop {
        let next_n = (2 * n).min(MAX_FIXED_ORDER);
        if next_n == n {
            let magnitude = prev.iter().map(|z| z.norm()).fold(0.0, f64::max);
            return Err(Error::Convergence {
                op,
                estimate: magnitude,
                error_bound: f64::NAN,
            });
        }
        let next = apply_rule(f, dim, &rule(next_n));
        let diff = next
            .iter()
            .zip(&prev)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max);
        let scale = next.iter().map(|z| z.norm()).fold(0.0, f64::max);
        if !diff.is_finite() {
            return Err(Error::Convergence {
                op,
                estimate: f64::INFINITY,
                error_bound: f64::INFINITY,
            });
        }
        if diff <= cfg.abs_tol.max(cfg.rel_tol * scale) {
            return Ok(VecIntegral {
                values: next,
                error: diff,
            });
        }
        if next_n == MAX_FIXED_ORDER {
            return Err(Error::Convergence {
                op,
                estimate: scale,
                error_bound: diff,
            });
        }
        prev = next;
        n = next_n;
    }
}
