//! Coefficients for an arbitrary interferer gain distribution, here the
//! exact array pattern averaged over orientation and fading.

use mmwave_coverage::adhoc::{coeffs_adhoc_sinc, SeriesControl};
use mmwave_coverage::antenna::{Pattern, PatternKind};
use mmwave_coverage::config::AdHocConfig;
use mmwave_coverage::kernel::{coeffs_general, coverage_from_coeffs, FixedGain, PatternGain};

fn main() -> mmwave_coverage::Result<()> {
    let cfg = AdHocConfig::default();
    let sys = &cfg.sys;
    let n_t = f64::from(sys.n_t);

    for kind in PatternKind::ALL {
        let gd = PatternGain::new(Pattern::new(kind, sys.geometry())?, sys.m)?;
        let cv = coeffs_general(&gd, cfg.s(), 0.0, cfg.big_r, cfg.lambda_b, sys.sigma_n2(), sys.alpha, sys.m)?;
        println!("{:>8}: coverage {:.6}, N_t c = {:.5?}", kind.name(), coverage_from_coeffs(&cv)?, cv.scaled(n_t).c);
    }

    let series = coeffs_adhoc_sinc(&cfg, &SeriesControl::default())?;
    println!("  series: coverage {:.6}, N_t c = {:.5?}", coverage_from_coeffs(&series.scaled(1.0 / n_t))?, series.c);

    // omnidirectional interferers with unit gain
    let cv = coeffs_general(&FixedGain(1.0), cfg.s(), 0.0, cfg.big_r, cfg.lambda_b, sys.sigma_n2(), sys.alpha, sys.m)?;
    println!("    omni: coverage {:.6}", coverage_from_coeffs(&cv)?);
    Ok(())
}
