//! Zeroth-order Bessel functions `J0` (all real arguments) and `K0` (`x > 0`).

use crate::error::{Error, Result};

const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BesselKind {
    J0,
    K0,
}

/// Dispatch on `kind`.
pub fn bessel(kind: BesselKind, x: f64) -> Result<f64> {
    match kind {
        BesselKind::J0 => {
            if x.is_finite() {
                Ok(j0(x))
            } else {
                Err(Error::domain("bessel", "J0 argument must be finite"))
            }
        }
        BesselKind::K0 => k0(x),
    }
}

/// `J0(x)`: power series for `|x| < 8`, Miller backward recurrence up to 25,
/// Hankel asymptotics beyond.
pub fn j0(x: f64) -> f64 {
    let ax = x.abs();
    if ax < 8.0 {
        j0_series(ax)
    } else if ax < 25.0 {
        j0_miller(ax)
    } else {
        j0_asymptotic(ax)
    }
}

fn j0_series(x: f64) -> f64 {
    let q = -0.25 * x * x;
    let mut term = 1.0;
    let mut acc = super::sum::NeumaierSum::new();
    acc.add(term);
    for k in 1..200 {
        let kf = k as f64;
        term *= q / (kf * kf);
        acc.add(term);
        if term.abs() < 1e-17 * acc.value().abs().max(1e-300) && kf > 0.5 * x {
            break;
        }
    }
    acc.value()
}

fn j0_miller(x: f64) -> f64 {
    // start well above x; even so the normalization sum picks up J_{2k}
    let mut m = (x as usize) + 40;
    if m % 2 == 1 {
        m += 1;
    }
    let mut j_next = 0.0;
    let mut j_cur = 1e-280;
    let mut norm = 0.0;
    let mut j0 = 0.0;
    for k in (1..=m).rev() {
        let j_prev = 2.0 * k as f64 / x * j_cur - j_next;
        j_next = j_cur;
        j_cur = j_prev;
        // j_cur is now J_{k-1}
        let idx = k - 1;
        if idx == 0 {
            j0 = j_cur;
        } else if idx % 2 == 0 {
            norm += 2.0 * j_cur;
        }
        if j_cur.abs() > 1e250 {
            j_cur *= 1e-250;
            j_next *= 1e-250;
            norm *= 1e-250;
        }
    }
    j0 / (norm + j0)
}

fn j0_asymptotic(x: f64) -> f64 {
    // P, Q asymptotic series; a_k = Π_{j≤k} (2j−1)² / (k! 8^k)
    let mut p = 1.0;
    let mut q = 0.0;
    let mut a = 1.0;
    let mut last = f64::INFINITY;
    for k in 1..60 {
        let kf = k as f64;
        let t = (2.0 * kf - 1.0) * (2.0 * kf - 1.0);
        a *= t / (kf * 8.0 * x);
        if a.abs() > last {
            break;
        }
        last = a.abs();
        // signs of the ν = 0 Hankel coefficients repeat with period 4
        match k % 4 {
            0 => p += a,
            1 => q -= a,
            2 => p -= a,
            _ => q += a,
        }
        if a.abs() < 1e-17 {
            break;
        }
    }
    let chi = x - std::f64::consts::FRAC_PI_4;
    (2.0 / (std::f64::consts::PI * x)).sqrt() * (p * chi.cos() - q * chi.sin())
}

/// `K0(x)` for `x > 0`.
pub fn k0(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::domain("bessel", format!("K0 requires 0 < x < ∞, got {x}")));
    }
    Ok(if x <= 2.0 { k0_series(x) } else { k0_steed(x) })
}

fn k0_series(x: f64) -> f64 {
    let q = 0.25 * x * x;
    let mut term = 1.0;
    let mut i0 = super::sum::NeumaierSum::new();
    let mut tail = super::sum::NeumaierSum::new();
    i0.add(1.0);
    let mut harmonic = 0.0;
    for k in 1..60 {
        let kf = k as f64;
        term *= q / (kf * kf);
        harmonic += 1.0 / kf;
        i0.add(term);
        tail.add(term * harmonic);
        if term < 1e-18 {
            break;
        }
    }
    -((0.5 * x).ln() + EULER_GAMMA) * i0.value() + tail.value()
}

// Steed's continued fraction for K_ν at ν = 0 (Temme/Thompson–Barnett form).
fn k0_steed(x: f64) -> f64 {
    let mut b = 2.0 * (1.0 + x);
    let mut d = 1.0 / b;
    let mut delh = d;
    let mut q1 = 0.0;
    let mut q2 = 1.0;
    let a1 = 0.25;
    let mut q = a1;
    let mut c = a1;
    let mut a = -a1;
    let mut s = 1.0 + q * delh;
    for i in 1..10_000 {
        let fi = i as f64;
        a -= 2.0 * fi;
        c = -a * c / (fi + 1.0);
        let qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        let dels = q * delh;
        s += dels;
        if (dels / s).abs() < 1e-17 {
            break;
        }
    }
    (std::f64::consts::PI / (2.0 * x)).sqrt() * (-x).exp() / s
}
