use mmwave_coverage::adhoc::{
    asymptotic_outage_adhoc, coeffs_adhoc_sinc, coverage_adhoc, coverage_adhoc_with, series_ratio, SeriesControl,
};
use mmwave_coverage::antenna::PatternKind;
use mmwave_coverage::config::{db_to_linear, AdHocConfig};
use mmwave_coverage::montecarlo::{simulate_adhoc, SimControl};
use mmwave_coverage::Error;

#[test]
fn default_point_ratio() {
    let r = series_ratio(&AdHocConfig::default());
    // 10^{0.5} (25/200)^{2.1}
    assert!((r - 10f64.powf(0.5) * 0.125f64.powf(2.1)).abs() < 1e-15);
}

#[test]
fn series_has_converged() {
    for m in 1..=5 {
        let mut cfg = AdHocConfig::default();
        cfg.sys.m = m;
        // series ratio 0.13
        cfg.tau = db_to_linear(10.0);
        let short = SeriesControl {
            max_terms: 20,
            stop_rel: 1e-11,
        };
        let long = SeriesControl {
            max_terms: 40,
            stop_rel: 1e-14,
        };
        let a = coeffs_adhoc_sinc(&cfg, &short).unwrap();
        let b = coeffs_adhoc_sinc(&cfg, &long).unwrap();
        for (x, y) in a.c.iter().zip(&b.c) {
            assert!((x - y).abs() <= 1e-10 * y.abs(), "M={m}: {x} vs {y}");
        }
        assert!((coverage_adhoc_with(&cfg, &long).unwrap() - coverage_adhoc(&cfg).unwrap()).abs() < 1e-11);
    }
}

#[test]
fn coefficients_do_not_depend_on_array_size() {
    let mut cfg = AdHocConfig::default();
    let a = coeffs_adhoc_sinc(&cfg, &SeriesControl::default()).unwrap();
    cfg.sys.n_t = 512;
    let b = coeffs_adhoc_sinc(&cfg, &SeriesControl::default()).unwrap();
    assert_eq!(a.c, b.c);
}

#[test]
fn divergent_series_is_a_domain_error() {
    let cfg = AdHocConfig {
        tau: db_to_linear(25.0),
        ..AdHocConfig::default()
    };
    assert!(series_ratio(&cfg) > 1.0);
    match coverage_adhoc(&cfg) {
        Err(Error::Domain(msg)) => assert!(msg.contains("ratio") || msg.contains("diverges"), "{msg}"),
        other => panic!("expected a domain error, got {other:?}"),
    }
}

#[test]
fn monotone_in_threshold_and_array_size() {
    let mut cfg = AdHocConfig::default();
    let mut last = 1.0;
    for tau_db in -10..=15 {
        cfg.tau = db_to_linear(f64::from(tau_db));
        let p = coverage_adhoc(&cfg).unwrap();
        assert!(p <= last + 1e-15);
        last = p;
    }
    cfg.tau = db_to_linear(5.0);
    let mut last = 0.0;
    for n in [4u32, 8, 16, 32, 64, 128, 256, 512, 1024] {
        cfg.sys.n_t = n;
        let p = coverage_adhoc(&cfg).unwrap();
        assert!(p >= last);
        last = p;
    }
}

#[test]
fn large_array_asymptote() {
    let mut cfg = AdHocConfig::default();
    cfg.sys.n_t = 1024;
    let outage = 1.0 - coverage_adhoc(&cfg).unwrap();
    let ratio = outage / asymptotic_outage_adhoc(&cfg).unwrap();
    assert!((0.9..=1.1).contains(&ratio), "{ratio}");
}

#[test]
fn agrees_with_simulated_sinc_pattern() {
    let mut cfg = AdHocConfig::default();
    cfg.sys.m = 3;
    cfg.sys.n_t = 64;
    let p = coverage_adhoc(&cfg).unwrap();
    let est = simulate_adhoc(&cfg, PatternKind::Sinc, &SimControl::new(100_000, 11)).unwrap();
    assert!((p - est.p_hat).abs() <= 0.02, "analytic {p}, simulated {}", est.p_hat);
}
