//! Property tests for functional equations and agreement between evaluation paths.

use proptest::prelude::*;
use std::f64::consts::{LN_2, PI};

use stieltjes::consts::LN_PI;
use stieltjes::repr::{gamma1_rep, kummer_log_gamma, zeta_prime_neg1_fourier, Path};
use stieltjes::report::fmt17;
use stieltjes::special::{bernoulli_poly, clausen_cl2, digamma, integrate_adaptive, log_gamma};
use stieltjes::zeta::{
    alt_zeta_deriv, barnes_log_g_product, hurwitz_zeta_deriv, riemann_zeta_deriv, stieltjes as gamma_n,
};
use stieltjes::EvalContext;

fn c() -> EvalContext {
    EvalContext::default()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn digamma_reflection(x in 0.02f64..0.98) {
        let lhs = digamma(1.0 - x, &c()).unwrap().value - digamma(x, &c()).unwrap().value;
        prop_assert!((lhs - PI / (PI * x).tan()).abs() < 1e-11 * (1.0 + lhs.abs()));
    }

    #[test]
    fn digamma_recurrence(x in 0.05f64..40.0) {
        let d = digamma(x + 1.0, &c()).unwrap().value - digamma(x, &c()).unwrap().value;
        prop_assert!((d - 1.0 / x).abs() < 1e-12 * (1.0 + 1.0 / x));
    }

    #[test]
    fn log_gamma_reflection(x in 0.02f64..0.98) {
        let lhs = log_gamma(x, &c()).unwrap().value + log_gamma(1.0 - x, &c()).unwrap().value;
        prop_assert!((lhs - (LN_PI - (PI * x).sin().ln())).abs() < 1e-12);
    }

    #[test]
    fn bernoulli_symmetry(n in 0usize..30, t in -2.0f64..3.0) {
        let a = bernoulli_poly(n, 1.0 - t).unwrap();
        let b = bernoulli_poly(n, t).unwrap();
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        let scale = (1.0 + t.abs()).powi(n as i32) * (1.0 + a.abs());
        prop_assert!((a - sign * b).abs() <= 1e-12 * scale);
    }

    #[test]
    fn clausen_odd_and_periodic(theta in 0.01f64..6.2) {
        let a = clausen_cl2(theta, &c()).unwrap().value;
        let b = clausen_cl2(-theta, &c()).unwrap().value;
        let p = clausen_cl2(theta + 2.0 * PI, &c()).unwrap().value;
        prop_assert!((a + b).abs() < 1e-13);
        prop_assert!((a - p).abs() < 1e-12);
    }

    #[test]
    fn quadrature_of_polynomials(a in -3.0f64..3.0, w in 0.1f64..4.0, k in 0i32..6) {
        let b = a + w;
        let v = integrate_adaptive(|x| x.powi(k), a, b, &c()).unwrap().value;
        let exact = (b.powi(k + 1) - a.powi(k + 1)) / (k + 1) as f64;
        prop_assert!((v - exact).abs() < 1e-11 * (1.0 + exact.abs()));
    }

    #[test]
    fn hurwitz_shift(s in -3.0f64..4.0, x in 0.05f64..5.0) {
        prop_assume!((s - 1.0).abs() > 1e-3);
        let d = hurwitz_zeta_deriv(0, s, x, &c()).unwrap().value - hurwitz_zeta_deriv(0, s, x + 1.0, &c()).unwrap().value;
        let want = x.powf(-s);
        prop_assert!((d - want).abs() < 1e-9 * (1.0 + want.abs()));
    }

    #[test]
    fn hurwitz_parity_split(s in -2.5f64..3.5, x in 0.1f64..3.0) {
        prop_assume!((s - 1.0).abs() > 1e-2);
        let z = |a: f64| hurwitz_zeta_deriv(0, s, a, &c()).unwrap().value;
        let rhs = 2f64.powf(-s) * (z(0.5 * x) + z(0.5 * (x + 1.0)));
        prop_assert!((z(x) - rhs).abs() < 1e-9 * (1.0 + rhs.abs()));
    }

    #[test]
    fn alternating_zeta_parity(s in -2.5f64..3.5) {
        prop_assume!((s - 1.0).abs() > 1e-2);
        let za = alt_zeta_deriv(0, s, &c()).unwrap().value;
        let want = (1.0 - 2f64.powf(1.0 - s)) * riemann_zeta_deriv(0, s, &c()).unwrap().value;
        prop_assert!((za - want).abs() < 1e-10 * (1.0 + want.abs()));
    }

    #[test]
    fn stieltjes_shift(x in 0.05f64..6.0) {
        let d = gamma_n(1, x, &c()).unwrap().value - gamma_n(1, x + 1.0, &c()).unwrap().value;
        prop_assert!((d - x.ln() / x).abs() < 1e-11 * (1.0 + d.abs()));
    }

    #[test]
    fn seventeen_digits_round_trip(v in any::<f64>().prop_filter("finite", |v| v.is_finite())) {
        prop_assert_eq!(fmt17(v).parse::<f64>().unwrap().to_bits(), v.to_bits());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn gamma1_paths_agree(x in 0.05f64..0.95) {
        let a = gamma1_rep(x, Path::StieltjesExpansion, &c()).unwrap().value;
        let b = gamma1_rep(x, Path::Abel, &c()).unwrap().value;
        let e = gamma_n(1, x, &c()).unwrap().value;
        prop_assert!((a - e).abs() < 1e-9 * (1.0 + e.abs()));
        prop_assert!((b - e).abs() < 1e-6);
    }

    #[test]
    fn kummer_matches_log_gamma(u in 0.05f64..0.95) {
        let k = kummer_log_gamma(u, &c()).unwrap().value;
        prop_assert!((k - log_gamma(u, &c()).unwrap().value).abs() < 1e-8);
    }

    #[test]
    fn barnes_fourier_and_vardi_agree(t in 0.02f64..0.98) {
        let lhs = barnes_log_g_product(t, &c()).unwrap().value - t * log_gamma(t, &c()).unwrap().value;
        let zp = riemann_zeta_deriv(1, -1.0, &c()).unwrap().value;
        let fourier = zeta_prime_neg1_fourier(t, &c()).unwrap().value;
        let engine = hurwitz_zeta_deriv(1, -1.0, t, &c()).unwrap().value;
        prop_assert!((lhs - (zp - fourier)).abs() < 1e-9);
        prop_assert!((fourier - engine).abs() < 1e-9);
    }
}

#[test]
fn log_two_constant_is_consistent() {
    // ζ'(0, ½) = −½ log 2
    let v = hurwitz_zeta_deriv(1, 0.0, 0.5, &c()).unwrap().value;
    assert!((v + 0.5 * LN_2).abs() < 1e-13);
}
