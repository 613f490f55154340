mod common;

use std::f64::consts::PI;

use mmwave_coverage::antenna::{Pattern, PatternKind};
use mmwave_coverage::cellular::{
    asymptotic_outage_cellular, coeffs_cellular_cos, coeffs_jensen, coverage_cellular, coverage_cellular_lower,
    CellularCoeffs,
};
use mmwave_coverage::config::{db_to_linear, CellularConfig};
use mmwave_coverage::kernel::{coeffs_general, coverage_from_coeffs, PatternGain};
use mmwave_coverage::montecarlo::{simulate_cellular, SimControl};

fn config(tau_db: f64) -> CellularConfig {
    CellularConfig {
        tau: db_to_linear(tau_db),
        ..CellularConfig::default()
    }
}

#[test]
fn closed_form_matches_general_quadrature() {
    for tau_db in [0.0, 10.0, 20.0] {
        let cfg = config(tau_db);
        let sys = &cfg.sys;
        let gd = PatternGain::new(Pattern::new(PatternKind::Cosine, sys.geometry()).unwrap(), sys.m).unwrap();
        for r0 in [5.0f64, 50.0, 120.0, 199.0] {
            let r = r0 * r0;
            let s = f64::from(sys.m) * cfg.tau * r0.powf(sys.alpha);
            let general = coeffs_general(&gd, s, r0, cfg.big_r, cfg.lambda_b, sys.sigma_n2(), sys.alpha, sys.m).unwrap();
            let closed = coeffs_cellular_cos(&cfg, r).unwrap();
            let scale = closed.c.iter().fold(0.0f64, |a, v| a.max(v.abs()));
            for (k, (a, b)) in closed.c.iter().zip(general.scaled(f64::from(sys.n_t)).c.iter()).enumerate() {
                assert!((a - b).abs() < 1e-5 * scale, "tau={tau_db} r0={r0} k={k}: {a} vs {b}");
            }
        }
    }
}

#[test]
fn averaged_coefficients_match_direct_average() {
    for lambda in [1e-5, 1e-4, 1e-3] {
        let cfg = CellularConfig {
            lambda_b: lambda,
            ..config(10.0)
        };
        let cc = CellularCoeffs::new(&cfg).unwrap();
        let pl = PI * lambda;
        let upper = (PI * lambda * cfg.big_r * cfg.big_r).min(60.0);
        let breaks: Vec<f64> = (0..=60).map(|i| upper * f64::from(i) / 60.0).collect();
        let d = coeffs_jensen(&cfg).unwrap();
        for (k, dk) in d.iter().enumerate() {
            let want = common::integrate_panels(|v| (-v).exp() * cc.at(v / pl).unwrap().c[k], &breaks, 20);
            assert!((dk - want).abs() < 1e-6 * want.abs().max(1.0), "lambda={lambda} k={k}: {dk} vs {want}");
        }
    }
}

#[test]
fn coverage_matches_direct_average() {
    let cfg = config(10.0);
    let cc = CellularCoeffs::new(&cfg).unwrap();
    let pl = PI * cfg.lambda_b;
    let t = 1.0 / f64::from(cfg.sys.n_t);
    let breaks: Vec<f64> = (0..=120).map(|i| 60.0 * f64::from(i) / 120.0).collect();
    let want = common::integrate_panels(
        |v| (-v).exp() * coverage_from_coeffs(&cc.at(v / pl).unwrap().scaled(t)).unwrap(),
        &breaks,
        20,
    );
    let got = coverage_cellular(&cfg).unwrap();
    assert!((got - want).abs() < 1e-6, "{got} vs {want}");
}

#[test]
fn single_antenna_fading_bound_holds() {
    // for M = 1 the coverage is convex in the coefficients, so averaging first bounds it from below
    for lambda in [1e-5, 1e-4, 1e-3, 1e-2] {
        for tau_db in [-5.0, 5.0, 15.0] {
            let mut cfg = CellularConfig {
                lambda_b: lambda,
                ..config(tau_db)
            };
            cfg.sys.m = 1;
            let p = coverage_cellular(&cfg).unwrap();
            let lower = coverage_cellular_lower(&cfg).unwrap();
            assert!(lower <= p + 1e-7, "lambda={lambda} tau={tau_db}: {lower} > {p}");
        }
    }
}

#[test]
fn sparse_networks_capped_by_los_probability() {
    for lambda in [1e-6, 1e-5] {
        let cfg = CellularConfig {
            lambda_b: lambda,
            ..config(-10.0)
        };
        let p = coverage_cellular(&cfg).unwrap();
        assert!(p <= cfg.los_probability() + 1e-9);
        assert!(p > 0.9 * cfg.los_probability());
    }
}

#[test]
fn large_array_asymptote() {
    let mut cfg = config(5.0);
    cfg.sys.n_t = 1024;
    let floor = (-PI * cfg.lambda_b * cfg.big_r * cfg.big_r).exp();
    let outage = 1.0 - coverage_cellular_lower(&cfg).unwrap();
    let predicted = asymptotic_outage_cellular(&cfg).unwrap();
    let ratio = (outage - floor) / (predicted - floor);
    assert!((0.9..=1.1).contains(&ratio), "{ratio}");
}

#[test]
fn agrees_with_simulated_cosine_pattern() {
    let mut cfg = config(5.0);
    cfg.sys.n_t = 64;
    let p = coverage_cellular(&cfg).unwrap();
    let est = simulate_cellular(&cfg, PatternKind::Cosine, &SimControl::new(40_000, 21)).unwrap();
    assert!((p - est.p_hat).abs() <= 4.0 * est.stderr + 1e-3, "analytic {p}, simulated {} +- {}", est.p_hat, est.stderr);
}
