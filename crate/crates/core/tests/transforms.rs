mod common;

use proptest::prelude::*;
use pseudoflow::special::QuadratureConfig;
use pseudoflow::transforms::*;
use pseudoflow::{Error, Field};

#[test]
fn subordination_reproduces_exp_sqrt_in_both_forms() {
    let cfg = QuadratureConfig::default();
    for &x in &[0.0, 0.1, 0.5, 1.0, 2.0, 5.0] {
        for &y in &[0.0, 0.25, 1.0, 3.0, 10.0] {
            let want = (-x * f64::sqrt(y)).exp();
            for form in [DoetschForm::TForm, DoetschForm::XiForm] {
                let got = exp_sqrt_via_doetsch(x, y, form, &cfg).unwrap();
                assert!((got - want).abs() <= 1e-10, "{form:?} x={x} y={y} {got} {want}");
            }
        }
    }
}

#[test]
fn subordination_is_multiplicative() {
    let cfg = QuadratureConfig::default();
    let e = |x| exp_sqrt_via_doetsch(x, 2.0, DoetschForm::TForm, &cfg).unwrap();
    for &(a, b) in &[(0.3, 0.4), (1.0, 1.5), (0.05, 2.0)] {
        assert!((e(a) * e(b) - e(a + b)).abs() <= 1e-10);
    }
}

#[test]
fn subordination_domain_errors() {
    let cfg = QuadratureConfig::default();
    assert!(matches!(
        exp_sqrt_via_doetsch(-1.0, 1.0, DoetschForm::TForm, &cfg),
        Err(Error::Domain { .. })
    ));
    assert!(matches!(
        exp_sqrt_via_doetsch(1.0, -1.0, DoetschForm::XiForm, &cfg),
        Err(Error::Domain { .. })
    ));
    assert!(matches!(doetsch_weight(0.0), Err(Error::Domain { .. })));
    assert!(matches!(doetsch_weight(-2.0), Err(Error::Domain { .. })));
}

#[test]
fn doetsch_weight_is_a_probability_density() {
    // with t = 1/ξ² the density becomes e^{−ξ²/4}/√π on ξ > 0
    let mass = common::simpson(|xi| (-0.25 * xi * xi).exp(), 0.0, 20.0, 4000) * INV_SQRT_PI;
    assert!((mass - 1.0).abs() <= 1e-13);
    for &xi in &[0.3, 1.0, 2.5] {
        let t: f64 = 1.0 / (xi * xi);
        let direct = doetsch_weight(t).unwrap() * 2.0 / (xi * xi * xi);
        assert!((direct - INV_SQRT_PI * (-0.25 * xi * xi).exp()).abs() <= 1e-14);
    }
}

#[test]
fn doetsch_first_moment_diverges() {
    // ∫₀^T t w(t) dt grows like √T / √π
    let partial = |tmax: f64| {
        common::simpson(|t| if t > 0.0 { t * doetsch_weight(t).unwrap() } else { 0.0 }, 0.0, tmax, 200_000)
    };
    let (a, b) = (partial(1e4), partial(4e4));
    assert!((b - a) > 0.9 * (4e4f64.sqrt() - 1e4f64.sqrt()) * INV_SQRT_PI);
    let cfg = QuadratureConfig::default();
    let r = pseudoflow::special::integrate_halfline(
        |t| num_complex::Complex64::new(doetsch_weight(t).map_or(0.0, |w| t * w), 0.0),
        &cfg,
    );
    assert!(matches!(r, Err(Error::Convergence { .. })));
}

#[test]
fn gauss_weierstrass_matches_glaisher() {
    let cfg = QuadratureConfig::default();
    for (n, alpha) in [(801, 0.5), (801, 1e-4)] {
        // the second case exercises the narrow-kernel product-integration path
        let f = Field::from_real_fn(-10.0, 10.0, n, |x| (-x * x).exp()).unwrap();
        let out = gauss_weierstrass(&f, alpha, &cfg).unwrap();
        let tol = if alpha < 1e-3 { 1e-7 } else { 1e-12 };
        for (j, x) in f.xs().enumerate() {
            let want = glaisher(alpha, x).unwrap();
            assert!((out.field.values()[j].re - want).abs() <= tol, "α={alpha} x={x}");
        }
    }
}

#[test]
fn gauss_weierstrass_preserves_constants_and_mass() {
    let cfg = QuadratureConfig::default();
    let ones = Field::from_real_fn(-20.0, 20.0, 801, |_| 1.0).unwrap();
    let out = gauss_weierstrass(&ones, 0.7, &cfg).unwrap();
    assert!(!out.warnings.is_empty());
    for j in ones.indices_within(-5.0, 5.0) {
        assert!((out.field.values()[j].re - 1.0).abs() <= 1e-13);
    }

    let f = Field::from_real_fn(-20.0, 20.0, 801, |x| (-(x - 1.0) * (x - 1.0)).exp() * (1.0 + 0.3 * x)).unwrap();
    let out = gauss_weierstrass(&f, 0.7, &cfg).unwrap();
    assert!(out.warnings.is_empty());
    assert!((out.field.integral() - f.integral()).norm() <= 1e-12);
}

#[test]
fn gauss_weierstrass_semigroup() {
    let cfg = QuadratureConfig::default();
    let f = Field::from_real_fn(-15.0, 15.0, 1201, |x| 1.0 / (1.0 + x * x).powi(3)).unwrap();
    let a = gauss_weierstrass(&f, 0.3, &cfg).unwrap().field;
    let ab = gauss_weierstrass(&a, 0.5, &cfg).unwrap().field;
    let direct = gauss_weierstrass(&f, 0.8, &cfg).unwrap().field;
    for j in f.indices_within(-8.0, 8.0) {
        assert!((ab.values()[j] - direct.values()[j]).norm() <= 1e-10);
    }
}

#[test]
fn gauss_weierstrass_rejects_nonpositive_alpha() {
    let cfg = QuadratureConfig::default();
    let f = Field::from_real_fn(-1.0, 1.0, 16, |x| x).unwrap();
    assert!(matches!(gauss_weierstrass(&f, 0.0, &cfg), Err(Error::Domain { .. })));
    assert!(matches!(glaisher(-0.25, 0.0), Err(Error::Domain { .. })));
}

#[test]
fn laplace_inverse_power() {
    let cfg = QuadratureConfig::default();
    for &nu in &[0.5, 1.0, 1.5, 3.0] {
        for &a in &[0.2, 1.0, 7.0] {
            let got = laplace_inv_power(nu, a, &cfg).unwrap();
            let want = f64::powf(a, -nu);
            assert!((got - want).abs() <= 1e-10 * want, "ν={nu} a={a}");
        }
    }
    assert!(matches!(laplace_inv_power(0.0, 1.0, &cfg), Err(Error::Domain { .. })));
    assert!(matches!(laplace_inv_power(1.0, -1.0, &cfg), Err(Error::Domain { .. })));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn forms_agree_everywhere(x in 0.0f64..6.0, y in 0.0f64..8.0) {
        let cfg = QuadratureConfig::default();
        let t = exp_sqrt_via_doetsch(x, y, DoetschForm::TForm, &cfg).unwrap();
        let xi = exp_sqrt_via_doetsch(x, y, DoetschForm::XiForm, &cfg).unwrap();
        prop_assert!((t - xi).abs() <= 1e-10);
    }

    #[test]
    fn glaisher_is_a_heat_semigroup(a in 0.0f64..2.0, b in 0.0f64..2.0, x in -4.0f64..4.0) {
        // e^{b∂²} applied to glaisher(a, ·) by Simpson quadrature
        let sd = (2.0 * b).sqrt();
        let v = if sd == 0.0 {
            glaisher(a, x).unwrap()
        } else {
            common::simpson(
                |z| (-z * z / 2.0).exp() / (2.0 * std::f64::consts::PI).sqrt() * glaisher(a, x - sd * z).unwrap(),
                -12.0,
                12.0,
                4000,
            )
        };
        prop_assert!((v - glaisher(a + b, x).unwrap()).abs() <= 1e-12);
    }
}
