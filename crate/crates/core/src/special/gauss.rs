//! Node/weight generation for the fixed Gauss rules on infinite ranges.
//!
//! Both generators use Newton iteration on the three-term recurrence with
//! the classical asymptotic starting guesses; the weights follow from the
//! derivative at the converged node.

use statrs::function::gamma::ln_gamma;

const NEWTON_EPS: f64 = 3.0e-14;
const NEWTON_MAX_ITER: usize = 100;

/// Largest supported order for the fixed infinite-range rules.
pub const MAX_FIXED_ORDER: usize = 256;

#[derive(Debug, Clone)]
pub struct GaussRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

/// Generalised Gauss–Laguerre rule for `∫₀^∞ s^alpha e^{-s} g(s) ds`.
pub fn gauss_laguerre(n: usize, alpha: f64) -> GaussRule {
    assert!(n >= 1 && alpha > -1.0);
    let nf = n as f64;
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let norm = (ln_gamma(alpha + nf) - ln_gamma(nf)).exp();
    let mut z = 0.0;
    for i in 0..n {
        z = match i {
            0 => (1.0 + alpha) * (3.0 + 0.92 * alpha) / (1.0 + 2.4 * nf + 1.8 * alpha),
            1 => z + (15.0 + 6.25 * alpha) / (1.0 + 0.9 * alpha + 2.5 * nf),
            _ => {
                let ai = (i - 1) as f64;
                z + ((1.0 + 2.55 * ai) / (1.9 * ai) + 1.26 * ai * alpha / (1.0 + 3.5 * ai))
                    * (z - nodes[i - 2])
                    / (1.0 + 0.3 * alpha)
            }
        };
        let mut pp = 1.0;
        let mut p2 = 0.0;
        for _ in 0..NEWTON_MAX_ITER {
            let mut p1 = 1.0;
            p2 = 0.0;
            for j in 0..n {
                let p3 = p2;
                p2 = p1;
                let jf = j as f64;
                p1 = ((2.0 * jf + 1.0 + alpha - z) * p2 - (jf + alpha) * p3) / (jf + 1.0);
            }
            pp = (nf * p1 - (nf + alpha) * p2) / z;
            let z_prev = z;
            z = z_prev - p1 / pp;
            if (z - z_prev).abs() <= NEWTON_EPS * z.abs().max(1.0) {
                break;
            }
        }
        nodes[i] = z;
        weights[i] = -norm / (pp * nf * p2);
    }
    GaussRule { nodes, weights }
}

/// Gauss–Hermite rule for `∫ e^{-x²} g(x) dx`, nodes in ascending order.
pub fn gauss_hermite(n: usize) -> GaussRule {
    assert!(n >= 1);
    const PI_M4: f64 = 0.751_125_544_464_942_5; // π^{-1/4}
    let nf = n as f64;
    let m = n.div_ceil(2);
    let mut x = vec![0.0; n];
    let mut w = vec![0.0; n];
    let mut z = 0.0;
    for i in 0..m {
        z = match i {
            0 => (2.0 * nf + 1.0).sqrt() - 1.85575 * (2.0 * nf + 1.0).powf(-0.16667),
            1 => z - 1.14 * nf.powf(0.426) / z,
            2 => 1.86 * z - 0.86 * x[0],
            3 => 1.91 * z - 0.91 * x[1],
            _ => 2.0 * z - x[i - 2],
        };
        let mut pp = 1.0;
        for _ in 0..NEWTON_MAX_ITER {
            let mut p1 = PI_M4;
            let mut p2 = 0.0;
            for j in 0..n {
                let p3 = p2;
                p2 = p1;
                let jf = j as f64;
                p1 = z * (2.0 / (jf + 1.0)).sqrt() * p2 - (jf / (jf + 1.0)).sqrt() * p3;
            }
            pp = (2.0 * nf).sqrt() * p2;
            let z_prev = z;
            z = z_prev - p1 / pp;
            if (z - z_prev).abs() <= NEWTON_EPS * z.abs().max(1.0) {
                break;
            }
        }
        x[i] = z;
        x[n - 1 - i] = -z;
        w[i] = 2.0 / (pp * pp);
        w[n - 1 - i] = w[i];
    }
    // NR ordering is descending
    x.reverse();
    w.reverse();
    GaussRule {
        nodes: x,
        weights: w,
    }
}
