mod common;

use num_complex::Complex64;
use proptest::prelude::*;
use pseudoflow::relativistic::*;
use pseudoflow::special::QuadratureConfig;
use pseudoflow::spectral::{apply_multiplier, second_derivative};
use pseudoflow::{Error, Field};

fn gaussian_field(x_min: f64, x_max: f64, n: usize) -> Field {
    Field::from_real_fn(x_min, x_max, n, |x| (-x * x).exp()).unwrap()
}

fn max_diff_within(a: &Field, b: &Field, lo: f64, hi: f64) -> f64 {
    a.indices_within(lo, hi)
        .map(|j| (a.values()[j] - b.values()[j]).norm())
        .fold(0.0, f64::max)
}

#[test]
fn series_matches_spectral_evolution() {
    let qcfg = QuadratureConfig::default();
    let cfg = SeriesConfig::default();
    let f = gaussian_field(-16.0, 16.0, 1024);
    for &tau in &[0.25, 0.5, 1.0] {
        let spectral = spectral_schrodinger(&f, tau).unwrap().field;
        let mut worst: f64 = 0.0;
        for j in f.indices_within(-4.0, 4.0).step_by(4) {
            let p = series_solution(f.x(j), tau, &cfg, &qcfg).unwrap();
            worst = worst.max((p.value - spectral.values()[j]).norm());
        }
        assert!(worst <= 1e-4, "τ={tau} worst {worst}");
    }
}

#[test]
fn series_grid_profile_spreads_with_time() {
    let qcfg = QuadratureConfig::default();
    let cfg = SeriesConfig::default();
    let profile = |tau| series_solution_grid(-4.0, 4.0, 81, tau, &cfg, &qcfg).unwrap().field;
    let (p0, p1, p2) = (profile(0.0), profile(0.5), profile(1.0));
    assert!(p0.max_abs() > p1.max_abs() && p1.max_abs() > p2.max_abs());
    let at = |f: &Field, x: f64| f.values()[f.indices_within(x, x).next().unwrap()].norm();
    assert!(at(&p0, 2.5) < at(&p1, 2.5) && at(&p1, 2.5) < at(&p2, 2.5));
}

#[test]
fn series_zero_order_keeps_initial_data() {
    let qcfg = QuadratureConfig::default();
    let cfg = SeriesConfig { n_max: 0, tail_tol: 1e-12 };
    let p = series_solution(0.3, 0.5, &cfg, &qcfg).unwrap();
    assert_eq!(p.value.re, (-0.09f64).exp());
    assert!(matches!(
        series_solution(0.0, 0.5, &SeriesConfig { n_max: 10, tail_tol: -1.0 }, &qcfg),
        Err(Error::Config(_))
    ));
}

#[test]
fn f0_at_origin_matches_direct_quadrature() {
    // s = u² removes the s^{−1/2} singularity
    let want = common::simpson(
        |u| 2.0 * (-u * u).exp() / (1.0 + 4.0 * u * u).sqrt(),
        0.0,
        8.0,
        20_000,
    ) / std::f64::consts::PI.sqrt();
    let got = f2k(0.0, 0, &QuadratureConfig::default()).unwrap();
    assert!((got - want).abs() <= 1e-12, "{got} {want}");
}

#[test]
fn spectral_evolution_properties() {
    let f = gaussian_field(-16.0, 16.0, 512);
    let same = spectral_schrodinger(&f, 0.0).unwrap().field;
    assert!(common::max_abs_diff(same.values(), f.values()) <= 1e-15);
    let out = spectral_schrodinger(&f, 1.3).unwrap().field;
    assert!((out.l2_norm() - f.l2_norm()).abs() <= 1e-10 * f.l2_norm());
    let w: Vec<f64> = out.values().iter().map(|z| z.norm_sqr()).collect();
    let centroid: f64 = out.xs().zip(&w).map(|(x, p)| x * p).sum::<f64>() / w.iter().sum::<f64>();
    assert!(centroid.abs() <= 1e-10);
}

#[test]
fn dhat_on_cosine() {
    let cfg = QuadratureConfig::default();
    let f = Field::from_real_fn(-60.0, 60.0, 2401, |x| x.cos()).unwrap();
    let out = dhat_apply(&f, DhatMethod::KernelK0, &cfg).unwrap();
    for j in f.indices_within(-10.0, 10.0) {
        let want = f.x(j).cos() / 2f64.sqrt();
        assert!((out.field.values()[j].re - want).abs() <= 1e-6, "x={}", f.x(j));
    }
    let ones = Field::from_real_fn(-60.0, 60.0, 1201, |_| 1.0).unwrap();
    let out = dhat_apply(&ones, DhatMethod::KernelK0, &cfg).unwrap();
    for j in ones.indices_within(-10.0, 10.0) {
        assert!((out.field.values()[j].re - 1.0).abs() <= 1e-10);
    }
}

#[test]
fn kernel_identity_for_k0() {
    // ∫₀^∞ s^{−1} e^{−s−Δ²/(4s)} ds = 2 K0(|Δ|), with s = e^u
    for &d in &[0.1, 0.5, 1.0, 3.0, 8.0] {
        let lhs = common::trapezoid(|u| (-u.exp() - d * d / (4.0 * u.exp())).exp(), -30.0, 6.0, 20_000);
        let rhs = 2.0 * common::k0_integral(d);
        assert!((lhs - rhs).abs() <= 1e-12 * rhs, "Δ={d}");
    }
}

#[test]
fn dhat_methods_agree() {
    let cfg = QuadratureConfig::default();
    let f = gaussian_field(-16.0, 16.0, 1024);
    let kernel = dhat_apply(&f, DhatMethod::KernelK0, &cfg).unwrap().field;
    let s_int = dhat_apply(&f, DhatMethod::SIntegral, &cfg).unwrap().field;
    let spectral = dhat_apply(&f, DhatMethod::Spectral, &cfg).unwrap().field;
    let pairs = [(&kernel, &s_int), (&kernel, &spectral), (&s_int, &spectral)];
    for (a, b) in pairs {
        let d = common::max_abs_diff(a.values(), b.values());
        assert!(d <= 1e-6, "{d}");
    }
    for out in [&kernel, &s_int, &spectral] {
        assert!(out.l2_norm() <= f.l2_norm() * (1.0 + 1e-12));
    }
}

#[test]
fn phi_transform_delocalizes() {
    let cfg = QuadratureConfig::default();
    let psi = Field::from_real_fn(-20.0, 20.0, 1024, |x| x * x * (-x * x).exp()).unwrap();
    let phi = phi_transform(&psi, &cfg).unwrap().field;
    assert!(phi.second_moment() > psi.second_moment());
    let direct = dhat_apply(&psi, DhatMethod::KernelK0, &cfg).unwrap().field;
    assert!(common::max_abs_diff(phi.values(), direct.values()) <= 1e-12);
    let (a, b) = (phi.integral().re, psi.integral().re);
    assert!((a - b).abs() <= 1e-8 * b.abs());
}

#[test]
fn first_iterate_matches_one_step_multiplier() {
    let cfg = QuadratureConfig::default();
    // D̂f decays only like e^{−|x|}, so the grid must reach far enough for ∂² to see no edge
    let f = gaussian_field(-40.0, 40.0, 4096);
    let d = dhat_apply(&f, DhatMethod::KernelK0, &cfg).unwrap().field;
    let first = second_derivative(&d).unwrap().field;
    let oracle = apply_multiplier(&f, |k| Complex64::new(-k * k / (1.0 + k * k).sqrt(), 0.0))
        .unwrap()
        .field;
    assert!(common::max_abs_diff(first.values(), oracle.values()) <= 1e-6);
}

#[test]
fn iterated_series_matches_closed_symbol() {
    let qcfg = QuadratureConfig::default();
    // finer grids resolve higher wavenumbers, whose round-off the series amplifies like (τk)ⁿ/n!
    let f = gaussian_field(-30.0, 30.0, 1024);
    let zero = iterated_series(&f, 0.3, &SeriesConfig { n_max: 0, tail_tol: 1e-9 }, &qcfg).unwrap();
    assert_eq!(zero.field, f);

    let cfg = SeriesConfig { n_max: 20, tail_tol: 1e-7 };
    let tau = 0.3;
    let out = iterated_series(&f, tau, &cfg, &qcfg).unwrap().field;
    let oracle = apply_multiplier(&f, |k| (Complex64::new(0.0, -tau * k * k / (1.0 + k * k).sqrt())).exp())
        .unwrap()
        .field;
    assert!(max_diff_within(&out, &oracle, -30.0, 30.0) <= 1e-5);
}

#[test]
fn observables_match_closed_forms_and_paper_values() {
    let cfg = QuadratureConfig::default();
    assert_eq!(r_function(0.0, &cfg).unwrap(), 1.0);
    assert_eq!(f_function(0.0, &cfg).unwrap(), 1.0);
    let r = r_function(0.1, &cfg).unwrap();
    assert!((r - 0.9925).abs() <= 1e-3);
    assert!((r - (1.0 - 0.75 * 0.01)).abs() <= 0.01 * 0.01 * 10.0);
    assert!(matches!(r_function(-1.0, &cfg), Err(Error::Domain { .. })));
}

#[test]
fn observables_match_momentum_space_oracles() {
    let cfg = QuadratureConfig::default();
    for &a in &[0.1, 0.5, 1.0, 1.5, 2.0, 5.0] {
        let sp = a / 2.0;
        let r_oracle = 4.0 / (a * a) * common::gaussian_momentum_average(|p| p * p / (1.0 + p * p), sp);
        let f_oracle = common::gaussian_momentum_average(|p| (1.0 + p * p).powf(-1.5), sp);
        let r = r_function(a, &cfg).unwrap();
        let f = f_function(a, &cfg).unwrap();
        assert!((r - r_oracle).abs() <= 1e-10 * r_oracle, "R({a}) {r} {r_oracle}");
        assert!((f - f_oracle).abs() <= 1e-10 * f_oracle, "F({a}) {f} {f_oracle}");
    }
}

#[test]
fn observables_are_bounded_and_decreasing() {
    let cfg = QuadratureConfig::default();
    let mut last = (f64::INFINITY, f64::INFINITY);
    for i in 0..=20 {
        let a = 0.25 * i as f64;
        let (r, f) = (r_function(a, &cfg).unwrap(), f_function(a, &cfg).unwrap());
        assert!(r > 0.0 && r <= 1.0 && f > 0.0 && f <= 1.0);
        assert!(r < last.0 && f < last.1, "a={a}");
        last = (r, f);
    }
}

#[test]
fn packet_width_against_direct_expectation() {
    let cfg = QuadratureConfig::default();
    let inp = ObservableInputs::normalized(1.0, 0.0).unwrap();
    assert_eq!(packet_width(&inp, &cfg).unwrap(), 1.0);

    let (a, t) = (1.0, 2.0);
    let inp = ObservableInputs::normalized(a, t).unwrap();
    let sigma = inp.sigma();
    let oracle = sigma * sigma + t * t * common::gaussian_momentum_average(|p| p * p / (1.0 + p * p), a / 2.0);
    let got = packet_width(&inp, &cfg).unwrap();
    assert!((got - oracle).abs() <= 1e-8 * oracle);

    // physical units reduce to normalized ones after scaling by ƛc
    let (lc, c) = (0.3, 2.0);
    let phys = ObservableInputs::physical(lc / a, lc, c, t * lc / c).unwrap();
    let w = packet_width(&phys, &cfg).unwrap() / (lc * lc);
    assert!((w - got).abs() <= 1e-12 * got);
}

#[test]
fn commutator_against_velocity_derivative() {
    let cfg = QuadratureConfig::default();
    let zero = ObservableInputs::normalized(1.5, 0.0).unwrap();
    assert_eq!(commutator_xt_x0(&zero, &cfg).unwrap(), Complex64::new(0.0, 0.0));
    let t = 1.7;
    let inp = ObservableInputs::normalized(1.5, t).unwrap();
    let oracle = -t * common::gaussian_momentum_average(|p| (1.0 + p * p).powf(-1.5), 0.75);
    let got = commutator_xt_x0(&inp, &cfg).unwrap();
    assert_eq!(got.re, 0.0);
    assert!((got.im - oracle).abs() <= 1e-8 * oracle.abs());

    let tiny = ObservableInputs::normalized(1e-9, t).unwrap();
    assert!((commutator_xt_x0(&tiny, &cfg).unwrap().im + t).abs() <= 1e-12);
}

#[test]
fn linear_potential_limits() {
    assert_eq!(linear_potential_trajectory(0.4, 1.0, 2.0, 0.0), 0.4);
    let (x0, p0, t): (f64, f64, f64) = (0.4, 0.7, 2.5);
    let free = x0 + t * p0 / (1.0 + p0 * p0).sqrt();
    assert!((linear_potential_trajectory(x0, p0, 1e-8, t) - free).abs() <= 1e-6);
    let fast = linear_potential_trajectory(x0, 100.0, 1.0, 1.0);
    assert!((fast - x0 - 1.0).abs() <= 0.01);
    // the textbook form at moderate force
    let f = 0.8;
    let naive = x0 + ((1.0 + (t * f + p0).powi(2)).sqrt() - (1.0 + p0 * p0).sqrt()) / f;
    assert!((linear_potential_trajectory(x0, p0, f, t) - naive).abs() <= 1e-14);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn packet_width_even_and_monotone(a in 0.05f64..4.0, t in 0.0f64..10.0, dt in 0.0f64..3.0) {
        let cfg = QuadratureConfig::default();
        let w = |t| packet_width(&ObservableInputs::normalized(a, t).unwrap(), &cfg).unwrap();
        prop_assert_eq!(w(t), w(-t));
        prop_assert!(w(t + dt) >= w(t));
    }

    #[test]
    fn trajectory_speed_below_light(x0 in -5.0f64..5.0, p0 in -50.0f64..50.0, f in -3.0f64..3.0, t in 0.0f64..20.0) {
        let x = linear_potential_trajectory(x0, p0, f, t);
        prop_assert!((x - x0).abs() <= t * (1.0 + 1e-12));
    }
}
