//! Cellular coverage with the cosine pattern and its averaged bound.

use mmwave_coverage::cellular::{coeffs_cellular_cos, coeffs_jensen, coverage_cellular, coverage_cellular_lower};
use mmwave_coverage::config::{db_to_linear, CellularConfig};

fn main() -> mmwave_coverage::Result<()> {
    let mut cfg = CellularConfig::default();
    for r0 in [10.0f64, 50.0, 150.0] {
        let cv = coeffs_cellular_cos(&cfg, r0 * r0)?;
        println!("serving distance {r0} m: {:.5?}", cv.c);
    }
    println!("averaged coefficients: {:.5?}", coeffs_jensen(&cfg)?);

    println!("{:>8} {:>10} {:>10}", "tau_dB", "coverage", "bound");
    for tau_db in (-10..=30).step_by(5) {
        cfg.tau = db_to_linear(f64::from(tau_db));
        println!("{tau_db:>8} {:>10.6} {:>10.6}", coverage_cellular(&cfg)?, coverage_cellular_lower(&cfg)?);
    }

    // sparse networks are limited by the chance of a LOS base station at all
    for lambda in [1e-5, 1e-4, 1e-3, 1e-2] {
        cfg.lambda_b = lambda;
        cfg.tau = db_to_linear(10.0);
        println!(
            "lambda_b = {lambda:e}: coverage {:.6}, LOS probability {:.6}",
            coverage_cellular(&cfg)?,
            cfg.los_probability()
        );
    }
    Ok(())
}
