//! Two-variable Hermite polynomials
//! `H_n(x, y) = n! Σ_k x^{n−2k} y^k / ((n−2k)! k!)`.

use crate::error::{Error, Result};

/// Largest order accepted by [`hermite2`].
pub const MAX_HERMITE_ORDER: usize = 4096;

// Below this order the factorial sum is evaluated directly.
const DIRECT_SUM_MAX: usize = 20;

/// `H_n(x, y)`. Uses the defining sum for `n ≤ 20` and the recurrence
/// `H_{n+1} = x H_n + 2 y n H_{n−1}` above that.
pub fn hermite2(n: usize, x: f64, y: f64) -> Result<f64> {
    if !x.is_finite() || !y.is_finite() {
        return Err(Error::domain("hermite2", "arguments must be finite"));
    }
    if n > MAX_HERMITE_ORDER {
        return Err(Error::Range {
            op: "hermite2",
            detail: format!("order {n} exceeds {MAX_HERMITE_ORDER}"),
        });
    }
    let value = if n <= DIRECT_SUM_MAX {
        hermite2_sum(n, x, y)
    } else {
        *hermite2_sequence(n, x, y)?.last().expect("non-empty")
    };
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::Range {
            op: "hermite2",
            detail: format!("H_{n}({x}, {y}) overflows"),
        })
    }
}

/// `[H_0, …, H_n]` at `(x, y)` by the three-term recurrence.
pub fn hermite2_sequence(n: usize, x: f64, y: f64) -> Result<Vec<f64>> {
    if n > MAX_HERMITE_ORDER {
        return Err(Error::Range {
            op: "hermite2",
            detail: format!("order {n} exceeds {MAX_HERMITE_ORDER}"),
        });
    }
    let mut h = Vec::with_capacity(n + 1);
    h.push(1.0);
    if n >= 1 {
        h.push(x);
    }
    for m in 1..n {
        let next = x * h[m] + 2.0 * y * m as f64 * h[m - 1];
        h.push(next);
    }
    if h.iter().any(|v| !v.is_finite()) {
        return Err(Error::Range {
            op: "hermite2",
            detail: format!("H_n({x}, {y}) overflows below n = {n}"),
        });
    }
    Ok(h)
}

fn hermite2_sum(n: usize, x: f64, y: f64) -> f64 {
    // n!/((n−2k)! k!) built incrementally as an integer-valued float
    let mut coeff = 1.0;
    let mut acc = super::sum::NeumaierSum::new();
    for k in 0..=n / 2 {
        if k > 0 {
            let m = (n - 2 * k) as f64;
            coeff *= (m + 1.0) * (m + 2.0) / k as f64;
        }
        acc.add(coeff * x.powi((n - 2 * k) as i32) * y.powi(k as i32));
    }
    acc.value()
}
