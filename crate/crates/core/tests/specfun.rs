mod common;

use mmwave_coverage::specfun::{
    eulerian, eulerian_over_factorial, falling_factorial, gamma_fn, gen_exp_integral, hyp2f1_neg, hyp3f2_j,
    lower_incomplete_gamma, sinc_power_integral, xi,
};
use proptest::prelude::*;

#[test]
fn expint_matches_integral_oracle() {
    for p in [-1.05, -0.05, 0.5, 0.95, 1.0, 1.5, 1.95, 2.0, 3.0] {
        for z in [1e-4, 0.01, 0.3, 1.0, 1.49, 1.51, 5.0, 30.0] {
            let got = gen_exp_integral(p, z).unwrap();
            let want = common::expint(p, z);
            assert!(common::rel_err(got, want) < 1e-9, "E_{p}({z}) = {got}, oracle {want}");
        }
    }
}

#[test]
fn expint_at_zero_and_domain() {
    assert!((gen_exp_integral(1.95, 0.0).unwrap() - 1.0 / 0.95).abs() < 1e-15);
    assert!(gen_exp_integral(1.0, 0.0).is_err());
    assert!(gen_exp_integral(0.5, 0.0).is_err());
    assert!(gen_exp_integral(2.0, -1.0).is_err());
}

#[test]
fn expint_derivative_lowers_order() {
    // d/dz E_p(z) = -E_{p-1}(z)
    let mut state = 12345u64;
    let mut next = || {
        state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        (state >> 11) as f64 / (1u64 << 53) as f64
    };
    for _ in 0..20 {
        let p = -1.0 + 4.0 * next();
        let z = 0.05 + 5.0 * next();
        let h = 1e-5 * z;
        let fd = (gen_exp_integral(p, z + h).unwrap() - gen_exp_integral(p, z - h).unwrap()) / (2.0 * h);
        let want = -gen_exp_integral(p - 1.0, z).unwrap();
        assert!(common::rel_err(fd, want) < 1e-5, "p={p} z={z}: {fd} vs {want}");
    }
}

#[test]
fn lower_gamma_matches_series() {
    for s in [0.3, 0.5, 1.0, 1.95, 2.05, 4.0, 7.5] {
        for x in [1e-3, 0.1, 1.0, 3.0, 10.0, 25.0] {
            let got = lower_incomplete_gamma(s, x).unwrap();
            let want = common::lower_gamma(s, x);
            assert!(common::rel_err(got, want) < 1e-9, "gamma({s}, {x}) = {got} vs {want}");
        }
    }
    // integer order closed form
    let x: f64 = 2.5;
    let closed = 1.0 - (-x).exp() * (1.0 + x + x * x / 2.0);
    assert!((lower_incomplete_gamma(3.0, x).unwrap() / 2.0 - closed).abs() < 1e-13);
    assert!(lower_incomplete_gamma(0.0, 1.0).is_err());
}

#[test]
fn eulerian_rows() {
    assert_eq!((0..4).map(|k| eulerian(4, k)).collect::<Vec<_>>(), vec![1, 11, 11, 1]);
    // rows sum to n!
    for n in 1..=20u32 {
        let sum: u128 = (0..i64::from(n)).map(|k| eulerian(n, k)).sum();
        let fact: u128 = (1..=u128::from(n)).product();
        assert_eq!(sum, fact, "n = {n}");
    }
    assert_eq!(eulerian(5, -1), 0);
    assert_eq!(eulerian(5, 5), 0);
    let r = eulerian_over_factorial(30, 14);
    assert!(r.is_finite() && r > 0.0);
}

#[test]
fn sinc_powers_match_quadrature() {
    for p in 1..=6 {
        let got = sinc_power_integral(p);
        let want = common::sinc_power_integral(p);
        assert!((got - want).abs() < 1e-6, "p = {p}: {got} vs {want}");
    }
}

#[test]
fn xi_limits() {
    // at alpha = 2 the integrand is sin^2 x / x^2
    assert!((xi(2.001).unwrap() - std::f64::consts::FRAC_PI_2).abs() < 1e-2);
    assert!(xi(2.0).is_err() && xi(3.0).is_err());
    // increasing in alpha: the exponent 4/alpha decreases
    assert!(xi(2.5).unwrap() < xi(2.9).unwrap());
}

#[test]
fn hyp2f1_matches_pfaff_series() {
    let delta = 2.0 / 2.1;
    for m in 1..=4 {
        for x in [-0.2, -0.9, -3.0, -40.0, -500.0] {
            let got = hyp2f1_neg(-delta, f64::from(m), 1.0 - delta, x).unwrap();
            let want = common::hyp2f1_nonpositive(-delta, f64::from(m), 1.0 - delta, x);
            assert!(common::rel_err(got, want) < 1e-9, "M={m} x={x}: {got} vs {want}");
        }
    }
}

#[test]
fn j_matches_direct_series() {
    for (alpha, m) in [(2.1, 1), (2.1, 3), (2.5, 2), (2.9, 5)] {
        let delta = 2.0 / alpha;
        for k in 0..m {
            for x in [-0.9, -0.5, -0.1, 0.0] {
                let kf = f64::from(k);
                let want = common::pfq_series(
                    &[kf + 0.5, kf - delta, kf + f64::from(m)],
                    &[kf + 1.0, kf + 1.0 - delta],
                    x,
                );
                let got = hyp3f2_j(k, m, delta, x).unwrap();
                assert!(common::rel_err(got, want) < 1e-7, "k={k} M={m} x={x}: {got} vs {want}");
            }
        }
    }
}

#[test]
fn j_continuation_matches_euler_oracle() {
    let delta = 2.0 / 2.1;
    for k in 0..3 {
        for x in [-1.5, -10.0, -100.0] {
            let got = hyp3f2_j(k, 3, delta, x).unwrap();
            let want = common::hyp3f2_j(k, 3, delta, x);
            assert!(common::rel_err(got, want) < 1e-7, "k={k} x={x}: {got} vs {want}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn expint_decreasing_in_z(p in -1.5f64..3.0, z in 0.01f64..20.0) {
        let a = gen_exp_integral(p, z).unwrap();
        let b = gen_exp_integral(p, z * 1.1).unwrap();
        prop_assert!(a > 0.0 && b < a);
    }

    #[test]
    fn expint_recurrence(p in 0.1f64..4.0, z in 0.05f64..20.0) {
        // p E_{p+1}(z) = e^{-z} - z E_p(z)
        let lhs = p * gen_exp_integral(p + 1.0, z).unwrap();
        let rhs = (-z).exp() - z * gen_exp_integral(p, z).unwrap();
        prop_assert!((lhs - rhs).abs() <= 1e-9 * lhs.abs().max((-z).exp()));
    }

    #[test]
    fn falling_factorial_is_gamma_ratio(x in 5.0f64..20.0, n in 0u32..5) {
        let want = gamma_fn(x + 1.0) / gamma_fn(x + 1.0 - f64::from(n));
        prop_assert!(common::rel_err(falling_factorial(x, n), want) < 1e-12);
    }

    #[test]
    fn j_is_bounded_on_negative_axis(k in 0u32..3, x in -200.0f64..0.0) {
        let j = hyp3f2_j(k, 3, 2.0 / 2.1, x).unwrap();
        prop_assert!(j.is_finite() && j > 0.0);
    }
}
