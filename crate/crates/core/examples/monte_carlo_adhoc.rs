//! Simulated ad hoc coverage against the analytic value, per pattern.

use mmwave_coverage::adhoc::coverage_adhoc;
use mmwave_coverage::antenna::PatternKind;
use mmwave_coverage::config::AdHocConfig;
use mmwave_coverage::montecarlo::{simulate_adhoc, SimControl};

fn main() -> mmwave_coverage::Result<()> {
    let trials = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(100_000);
    let ctl = SimControl::new(trials, 7);
    let mut cfg = AdHocConfig::default();
    for n_t in [16u32, 64, 256] {
        cfg.sys.n_t = n_t;
        println!("N_t = {n_t}: analytic {:.4}", coverage_adhoc(&cfg)?);
        for kind in PatternKind::ALL {
            let est = simulate_adhoc(&cfg, kind, &ctl)?;
            println!("  {:>8}: {:.4} +- {:.4}", kind.name(), est.p_hat, est.stderr);
        }
    }
    Ok(())
}
