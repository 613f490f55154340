//! Ad hoc coverage against the SINR threshold with the sinc-pattern series.

use mmwave_coverage::adhoc::{coeffs_adhoc_sinc, coverage_adhoc, series_ratio, SeriesControl};
use mmwave_coverage::config::{db_to_linear, AdHocConfig};

fn main() -> mmwave_coverage::Result<()> {
    let mut cfg = AdHocConfig::default();
    let cv = coeffs_adhoc_sinc(&cfg, &SeriesControl::default())?;
    println!("coefficients of N_t C_M at tau = 5 dB: {:.6?}", cv.c);
    println!("series ratio {:.4}", series_ratio(&cfg));

    println!("{:>8} {:>10} {:>10} {:>10}", "tau_dB", "M=1", "M=2", "M=3");
    for tau_db in (-10..=15).step_by(5) {
        cfg.tau = db_to_linear(f64::from(tau_db));
        print!("{tau_db:>8}");
        for m in 1..=3 {
            cfg.sys.m = m;
            print!(" {:>10.6}", coverage_adhoc(&cfg)?);
        }
        println!();
    }

    // past ratio 1 the series diverges and evaluation refuses
    cfg.tau = db_to_linear(25.0);
    match coverage_adhoc(&cfg) {
        Ok(p) => println!("unexpected value {p}"),
        Err(e) => println!("tau = 25 dB: {e}"),
    }
    Ok(())
}
