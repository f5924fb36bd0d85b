//! Globally adaptive 7/15-point Gauss–Kronrod integration of vector-valued
//! integrands over a finite interval.
//!
//! The interval with the largest error estimate is bisected until the summed
//! estimate meets the tolerance. Interval selection, bisection and the final
//! reduction are all performed in a fixed order, so identical inputs give
//! bit-identical outputs.

use num_complex::Complex64;

use super::sum::ComplexSum;

// Abscissae of the 15-point Kronrod rule; odd indices are the 7-point Gauss nodes.
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];

const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

/// Outcome of an adaptive integration.
#[derive(Debug, Clone)]
pub struct VecEstimate {
    pub values: Vec<Complex64>,
    pub error: f64,
    pub converged: bool,
}

#[derive(Debug, Clone, Copy)]
pub struct Tolerance {
    pub abs: f64,
    pub rel: f64,
    pub max_intervals: usize,
}

struct Segment {
    a: f64,
    b: f64,
    values: Vec<Complex64>,
    error: f64,
}

/// One 15-point Kronrod evaluation on `[a, b]`; returns the error estimate
/// (max over components) and writes the integral into `out`.
fn gk15<F>(f: &F, a: f64, b: f64, dim: usize, out: &mut [Complex64], scratch: &mut [Complex64]) -> f64
where
    F: Fn(f64, &mut [Complex64]),
{
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    // scratch layout: 15 rows of `dim` entries
    f(center, &mut scratch[..dim]);
    for j in 0..7 {
        let dx = half * XGK[j];
        let (lo, hi) = scratch[dim..].split_at_mut(dim * 7);
        f(center - dx, &mut lo[j * dim..(j + 1) * dim]);
        f(center + dx, &mut hi[j * dim..(j + 1) * dim]);
    }
    let row = |k: usize| -> &[Complex64] { &scratch[k * dim..(k + 1) * dim] };
    let mut worst = 0.0f64;
    for c in 0..dim {
        let fc = row(0)[c];
        let mut resk = fc * WGK[7];
        let mut resg = fc * WG[3];
        let mut resabs = fc.norm() * WGK[7];
        for j in 0..7 {
            let f1 = row(1 + j)[c];
            let f2 = row(8 + j)[c];
            resk += (f1 + f2) * WGK[j];
            resabs += (f1.norm() + f2.norm()) * WGK[j];
            if j % 2 == 1 {
                resg += (f1 + f2) * WG[j / 2];
            }
        }
        let reskh = resk * 0.5;
        let mut resasc = WGK[7] * (fc - reskh).norm();
        for j in 0..7 {
            resasc += WGK[j] * ((row(1 + j)[c] - reskh).norm() + (row(8 + j)[c] - reskh).norm());
        }
        let result = resk * half;
        let resabs = resabs * half.abs();
        let resasc = resasc * half.abs();
        let mut err = ((resk - resg) * half).norm();
        if resasc != 0.0 && err != 0.0 {
            err = resasc * (200.0 * err / resasc).powf(1.5).min(1.0);
        }
        if resabs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
            err = err.max(50.0 * f64::EPSILON * resabs);
        }
        out[c] = result;
        if !result.re.is_finite() || !result.im.is_finite() {
            err = f64::INFINITY;
        }
        worst = worst.max(err);
    }
    worst
}

/// Adaptive integration of `f` over the partition given by `breakpoints`
/// (sorted, at least two entries).
pub fn integrate<F>(f: F, dim: usize, breakpoints: &[f64], tol: Tolerance) -> VecEstimate
where
    F: Fn(f64, &mut [Complex64]),
{
    assert!(breakpoints.len() >= 2 && dim >= 1);
    let mut scratch = vec![Complex64::new(0.0, 0.0); 15 * dim];
    let mut segments: Vec<Segment> = Vec::with_capacity(breakpoints.len() + 64);
    for w in breakpoints.windows(2) {
        let mut values = vec![Complex64::new(0.0, 0.0); dim];
        let error = gk15(&f, w[0], w[1], dim, &mut values, &mut scratch);
        segments.push(Segment {
            a: w[0],
            b: w[1],
            values,
            error,
        });
    }
    let max_segments = tol.max_intervals.max(segments.len());

    loop {
        let (total, error) = reduce(&segments, dim);
        let scale = total.iter().map(|z| z.norm()).fold(0.0, f64::max);
        let target = tol.abs.max(tol.rel * scale);
        if error <= target {
            return VecEstimate {
                values: total,
                error,
                converged: true,
            };
        }
        if !error.is_finite() || segments.len() >= max_segments {
            return VecEstimate {
                values: total,
                error,
                converged: false,
            };
        }
        // first segment with the largest error (deterministic tie-break)
        let mut worst = 0;
        for (i, s) in segments.iter().enumerate() {
            if s.error > segments[worst].error {
                worst = i;
            }
        }
        let Segment { a, b, .. } = segments[worst];
        let mid = 0.5 * (a + b);
        if !(mid > a && mid < b) || (b - a).abs() <= 4.0 * f64::EPSILON * mid.abs().max(f64::MIN_POSITIVE) {
            return VecEstimate {
                values: total,
                error,
                converged: false,
            };
        }
        let mut left = vec![Complex64::new(0.0, 0.0); dim];
        let mut right = vec![Complex64::new(0.0, 0.0); dim];
        let el = gk15(&f, a, mid, dim, &mut left, &mut scratch);
        let er = gk15(&f, mid, b, dim, &mut right, &mut scratch);
        segments[worst] = Segment {
            a,
            b: mid,
            values: left,
            error: el,
        };
        segments.insert(
            worst + 1,
            Segment {
                a: mid,
                b,
                values: right,
                error: er,
            },
        );
    }
}

fn reduce(segments: &[Segment], dim: usize) -> (Vec<Complex64>, f64) {
    let mut acc = vec![ComplexSum::new(); dim];
    let mut err = super::sum::NeumaierSum::new();
    for s in segments {
        for (a, v) in acc.iter_mut().zip(&s.values) {
            a.add(*v);
        }
        err.add(s.error);
    }
    (acc.iter().map(|a| a.value()).collect(), err.value())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tol() -> Tolerance {
        Tolerance {
            abs: 1e-14,
            rel: 1e-13,
            max_intervals: 1000,
        }
    }

    #[test]
    fn kronrod_constants_integrate_polynomials_exactly() {
        // K15 is exact to degree 22, G7 to degree 13
        let mut scratch = vec![Complex64::new(0.0, 0.0); 15];
        for k in 0..=22 {
            let f = |x: f64, out: &mut [Complex64]| out[0] = Complex64::new(x.powi(k), 0.0);
            let mut out = [Complex64::new(0.0, 0.0)];
            gk15(&f, -1.0, 1.0, 1, &mut out, &mut scratch);
            let exact = if k % 2 == 1 { 0.0 } else { 2.0 / (k as f64 + 1.0) };
            assert!((out[0].re - exact).abs() < 1e-15, "degree {k}");
        }
        let gauss_sum: f64 = 2.0 * (WG[0] + WG[1] + WG[2]) + WG[3];
        assert!((gauss_sum - 2.0).abs() < 1e-15);
        let kronrod_sum: f64 = 2.0 * WGK[..7].iter().sum::<f64>() + WGK[7];
        assert!((kronrod_sum - 2.0).abs() < 1e-15);
    }

    #[test]
    fn log_endpoint_singularity_converges() {
        // ∫₀¹ ln x dx = -1
        let est = integrate(
            |x, out| out[0] = Complex64::new(x.ln(), 0.0),
            1,
            &[0.0, 1.0],
            tol(),
        );
        assert!(est.converged);
        assert!((est.values[0].re + 1.0).abs() < 1e-12);
    }

    #[test]
    fn vector_components_share_the_partition() {
        let est = integrate(
            |x, out| {
                out[0] = Complex64::new(x.sin(), 0.0);
                out[1] = Complex64::new(0.0, x.cos());
            },
            2,
            &[0.0, std::f64::consts::PI],
            tol(),
        );
        assert!((est.values[0].re - 2.0).abs() < 1e-13);
        assert!(est.values[1].im.abs() < 1e-13);
    }

    #[test]
    fn non_integrable_singularity_is_reported() {
        let est = integrate(
            |x, out| out[0] = Complex64::new(1.0 / x, 0.0),
            1,
            &[0.0, 1.0],
            Tolerance {
                abs: 1e-10,
                rel: 1e-10,
                max_intervals: 200,
            },
        );
        assert!(!est.converged);
    }
}
