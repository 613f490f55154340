mod common;

use mmwave_coverage::antenna::{
    actual_gain, cosine_gain, flat_top_params, sinc_gain, ArrayGeometry, Pattern, PatternKind,
};
use proptest::prelude::*;

#[test]
fn actual_is_the_normalized_array_factor() {
    for n in [1u32, 2, 7, 16, 64, 257] {
        for i in 0..=400 {
            let x = -1.0 + 2.0 * f64::from(i) / 400.0;
            let want = common::array_factor(n, x);
            let got = actual_gain(n, x);
            assert!((got - want).abs() < 1e-9, "N={n} x={x}: {got} vs {want}");
        }
    }
}

#[test]
fn sinc_tracks_actual_near_boresight() {
    let n = 256;
    for i in 0..=100 {
        let x = 4.0 / f64::from(n) * f64::from(i) / 100.0;
        assert!((sinc_gain(n, x) - actual_gain(n, x)).abs() < 1e-3, "x = {x}");
    }
}

#[test]
fn cosine_main_lobe_only() {
    let n = 32;
    assert_eq!(cosine_gain(n, 0.0), 1.0);
    assert!(cosine_gain(n, 1.0 / 32.0).abs() < 1e-30);
    assert_eq!(cosine_gain(n, 1.5 / 32.0), 0.0);
    assert!((cosine_gain(n, 0.5 / 32.0) - 0.5).abs() < 1e-15);
}

#[test]
fn flat_top_matches_half_power_and_side_lobe() {
    for n in [4u32, 16, 64, 256] {
        let geom = ArrayGeometry::new(n, 0.25).unwrap();
        let (hpbw, side) = flat_top_params(&geom).unwrap();
        assert!((actual_gain(n, hpbw / 2.0) - 0.5).abs() < 1e-9, "N = {n}");
        // dense scan of the first side lobe
        let peak = (0..=20_000)
            .map(|i| actual_gain(n, (1.0 + f64::from(i) / 20_000.0) / f64::from(n)))
            .fold(0.0, f64::max);
        assert!((side - peak).abs() < 1e-8, "N = {n}: {side} vs {peak}");
    }
    // large arrays approach the continuous aperture values
    let (hpbw, side) = flat_top_params(&ArrayGeometry::new(4096, 0.25).unwrap()).unwrap();
    assert!((hpbw * 4096.0 - 0.8859).abs() < 1e-3);
    assert!((side - 0.04719).abs() < 1e-4);
}

#[test]
fn half_wavelength_mean_gain_is_inverse_array_size() {
    // at d = lambda/2 the argument sweeps a full period of the array factor
    for n in [2u32, 8, 33, 128] {
        let p = Pattern::new(PatternKind::Actual, ArrayGeometry::new(n, 0.5).unwrap()).unwrap();
        let breaks: Vec<f64> = (0..=2 * n).map(|i| -1.0 + f64::from(i) / f64::from(n)).collect();
        let mean = common::integrate_panels(|u| p.sample_gain(u), &breaks, 24) / 2.0;
        assert!((mean - 1.0 / f64::from(n)).abs() < 1e-12, "N = {n}: {mean}");
    }
}

#[test]
fn invalid_geometry_rejected() {
    assert!(ArrayGeometry::new(0, 0.25).is_err());
    assert!(ArrayGeometry::new(8, 0.0).is_err());
    assert!(ArrayGeometry::new(8, f64::NAN).is_err());
}

#[test]
fn pattern_names_round_trip() {
    for k in PatternKind::ALL {
        assert_eq!(k.name().parse::<PatternKind>().unwrap(), k);
    }
    assert!("omni".parse::<PatternKind>().is_err());
}

proptest! {
    #[test]
    fn gains_are_even_and_bounded(n in 1u32..512, x in -0.5f64..0.5) {
        let geom = ArrayGeometry::new(n.max(2), 0.5).unwrap();
        for kind in PatternKind::ALL {
            let p = Pattern::new(kind, geom).unwrap();
            let (a, b) = (p.gain(x), p.gain(-x));
            prop_assert!((0.0..=1.0 + 1e-12).contains(&a));
            prop_assert!((a - b).abs() <= 1e-12);
        }
    }

    #[test]
    fn unit_gain_at_boresight(n in 1u32..512) {
        prop_assert_eq!(actual_gain(n, 0.0), 1.0);
        prop_assert_eq!(sinc_gain(n, 0.0), 1.0);
        prop_assert_eq!(cosine_gain(n, 0.0), 1.0);
    }
}
