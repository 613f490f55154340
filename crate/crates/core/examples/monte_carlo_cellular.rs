//! Simulated cellular coverage with and without the NLOS tier, for SINR,
//! SIR and SNR, across the base station density.

use mmwave_coverage::antenna::PatternKind;
use mmwave_coverage::cellular::coverage_cellular;
use mmwave_coverage::config::{db_to_linear, CellularConfig};
use mmwave_coverage::montecarlo::{simulate_all_metrics, Network, SimControl};

fn main() -> mmwave_coverage::Result<()> {
    let trials = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(20_000);
    let mut cfg = CellularConfig {
        tau: db_to_linear(10.0),
        ..CellularConfig::default()
    };
    cfg.sys.n_t = 64;
    println!("{:>8} {:>9} {:>9} {:>9} {:>9} {:>9}", "lambda_b", "analytic", "SINR", "SINR+NLOS", "SIR", "SNR");
    for lambda in [1e-5, 1e-4, 1e-3, 3e-3] {
        cfg.lambda_b = lambda;
        let net = Network::Cellular(cfg);
        let los_only = simulate_all_metrics(&net, PatternKind::Actual, &SimControl::new(trials, 3))?;
        let with_nlos = simulate_all_metrics(&net, PatternKind::Actual, &SimControl::new(trials, 3).with_nlos(true))?;
        println!(
            "{lambda:>8.0e} {:>9.4} {:>9.4} {:>9.4} {:>9.4} {:>9.4}",
            coverage_cellular(&cfg)?,
            los_only[0].p_hat,
            with_nlos[0].p_hat,
            los_only[1].p_hat,
            los_only[2].p_hat
        );
    }
    Ok(())
}
