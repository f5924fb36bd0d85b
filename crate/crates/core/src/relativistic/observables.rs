//! Heisenberg-picture observables of a free relativistic Gaussian packet and
//! the classical trajectory under a constant force.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::special::quadrature::{integrate_halfline, QuadratureConfig};

const TWO_SQRT_TWO: f64 = 2.0 * std::f64::consts::SQRT_2;

/// Unit system for [`ObservableInputs`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Units {
    /// `c = ƛc = 1`.
    Normalized,
    /// Explicit speed of light and reduced Compton wavelength.
    Physical { c: f64, lambda_c: f64 },
}

/// Packet width `σ`, ratio `a = ƛc/σ` and time `t`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ObservableInputs {
    sigma: f64,
    a: f64,
    t: f64,
    units: Units,
}

impl ObservableInputs {
    /// Normalized units: `σ = 1/a`.
    pub fn normalized(a: f64, t: f64) -> Result<Self> {
        if !(a > 0.0) || !a.is_finite() || !t.is_finite() {
            return Err(Error::domain(
                "ObservableInputs",
                format!("need a > 0 and finite t, got a = {a}, t = {t}"),
            ));
        }
        Ok(Self {
            sigma: 1.0 / a,
            a,
            t,
            units: Units::Normalized,
        })
    }

    /// Physical units; `a` is derived as `ƛc/σ`.
    pub fn physical(sigma: f64, lambda_c: f64, c: f64, t: f64) -> Result<Self> {
        let ok = [sigma, lambda_c, c].iter().all(|v| *v > 0.0 && v.is_finite()) && t.is_finite();
        if !ok {
            return Err(Error::domain(
                "ObservableInputs",
                format!("need σ, ƛc, c > 0 and finite t, got ({sigma}, {lambda_c}, {c}, {t})"),
            ));
        }
        Ok(Self {
            sigma,
            a: lambda_c / sigma,
            t,
            units: Units::Physical { c, lambda_c },
        })
    }

    pub fn sigma(&self) -> f64 {
        self.sigma
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn t(&self) -> f64 {
        self.t
    }

    pub fn units(&self) -> Units {
        self.units
    }

    fn c(&self) -> f64 {
        match self.units {
            Units::Normalized => 1.0,
            Units::Physical { c, .. } => c,
        }
    }

    fn lambda_c(&self) -> f64 {
        match self.units {
            Units::Normalized => 1.0,
            Units::Physical { lambda_c, .. } => lambda_c,
        }
    }
}

fn check_a(op: &'static str, a: f64) -> Result<()> {
    if a >= 0.0 && a.is_finite() {
        Ok(())
    } else {
        Err(Error::domain(op, format!("a must be ≥ 0, got {a}")))
    }
}

/// `R(a) = 2√2 ∫₀^∞ e^{−s} (2 + a²s)^{−3/2} ds`.
pub fn r_function(a: f64, cfg: &QuadratureConfig) -> Result<f64> {
    check_a("r_function", a)?;
    if a == 0.0 {
        return Ok(1.0);
    }
    let a2 = a * a;
    let est = integrate_halfline(|s| Complex64::new((-s).exp() * (2.0 + a2 * s).powf(-1.5), 0.0), cfg)?;
    Ok(TWO_SQRT_TWO * est.value.re)
}

/// `F(a) = (2√2/√π) ∫₀^∞ √s e^{−s} (2 + a²s)^{−1/2} ds`.
pub fn f_function(a: f64, cfg: &QuadratureConfig) -> Result<f64> {
    check_a("f_function", a)?;
    if a == 0.0 {
        return Ok(1.0);
    }
    let a2 = a * a;
    let est = integrate_halfline(
        |s| Complex64::new(s.sqrt() * (-s).exp() / (2.0 + a2 * s).sqrt(), 0.0),
        cfg,
    )?;
    Ok(TWO_SQRT_TWO / std::f64::consts::PI.sqrt() * est.value.re)
}

/// Squared packet width `σ²(t) = σ² [1 + ¼ (a/σ)² R(a) c² t²]`.
pub fn packet_width(inputs: &ObservableInputs, cfg: &QuadratureConfig) -> Result<f64> {
    let s2 = inputs.sigma * inputs.sigma;
    if inputs.t == 0.0 {
        return Ok(s2);
    }
    let r = r_function(inputs.a, cfg)?;
    let ct = inputs.c() * inputs.t;
    Ok(s2 + 0.25 * inputs.a * inputs.a * r * ct * ct)
}

/// `⟨[x̂(t), x̂(0)]⟩ = −i ƛc F(a) c t`.
pub fn commutator_xt_x0(inputs: &ObservableInputs, cfg: &QuadratureConfig) -> Result<Complex64> {
    if inputs.t == 0.0 {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let f = f_function(inputs.a, cfg)?;
    Ok(Complex64::new(0.0, -inputs.lambda_c() * f * inputs.c() * inputs.t))
}

/// `x(t) = x0 + (1/f)[√(1 + (tf + p0)²) − √(1 + p0²)]` in units `m = c = 1`,
/// written without the cancellation at small `f`; `f = 0` gives free motion.
pub fn linear_potential_trajectory(x0: f64, p0: f64, force: f64, t: f64) -> f64 {
    let p = t * force + p0;
    let e1 = p.hypot(1.0);
    let e0 = p0.hypot(1.0);
    x0 + t * (t * force + 2.0 * p0) / (e1 + e0)
}
