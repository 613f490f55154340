//! Monte Carlo simulation of the Poisson network.
//!
//! Each trial draws its own network from a ChaCha substream selected by the
//! trial index, so estimates depend only on `(seed, trials, config)` and not
//! on how rayon schedules the trials.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Exp1, Gamma, Poisson};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::antenna::{Pattern, PatternKind};
use crate::config::{db_to_linear, AdHocConfig, CellularConfig};
use crate::error::{Error, Result};

/// NLOS path-loss intercept in dB.
pub const DEFAULT_NLOS_BETA_DB: f64 = -72.0;
pub const DEFAULT_NLOS_ALPHA: f64 = 4.0;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SimControl {
    pub trials: u64,
    pub seed: u64,
    pub include_nlos: bool,
    pub nlos_alpha: f64,
    /// Linear NLOS intercept.
    pub nlos_beta: f64,
    /// Outer radius of the NLOS tier; `None` means four times the LOS radius.
    pub nlos_outer_radius: Option<f64>,
}

impl Default for SimControl {
    fn default() -> Self {
        SimControl {
            trials: 100_000,
            seed: 1,
            include_nlos: false,
            nlos_alpha: DEFAULT_NLOS_ALPHA,
            nlos_beta: db_to_linear(DEFAULT_NLOS_BETA_DB),
            nlos_outer_radius: None,
        }
    }
}

impl SimControl {
    pub fn new(trials: u64, seed: u64) -> Self {
        SimControl {
            trials,
            seed,
            ..SimControl::default()
        }
    }

    pub fn with_nlos(mut self, include: bool) -> Self {
        self.include_nlos = include;
        self
    }

    pub fn outer_radius(&self, big_r: f64) -> f64 {
        self.nlos_outer_radius.unwrap_or(4.0 * big_r)
    }

    pub fn validate(&self, big_r: f64) -> Result<()> {
        if self.trials < 1 {
            return Err(Error::Config("trials must be >= 1".into()));
        }
        if self.include_nlos {
            if !(self.outer_radius(big_r) > big_r) {
                return Err(Error::Config("NLOS outer radius must exceed R".into()));
            }
            if !(self.nlos_alpha > 2.0) || !(self.nlos_beta > 0.0) {
                return Err(Error::Config("NLOS path loss needs alpha > 2 and beta > 0".into()));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct McEstimate {
    pub p_hat: f64,
    pub stderr: f64,
    pub trials: u64,
    pub seed: u64,
}

impl McEstimate {
    fn from_count(successes: u64, trials: u64, seed: u64) -> Self {
        let p = successes as f64 / trials as f64;
        McEstimate {
            p_hat: p,
            stderr: (p * (1.0 - p) / trials as f64).sqrt(),
            trials,
            seed,
        }
    }
}

/// Which ratio is compared with the threshold.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Metric {
    Sinr,
    Sir,
    Snr,
}

impl std::str::FromStr for Metric {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "sinr" => Ok(Metric::Sinr),
            "sir" => Ok(Metric::Sir),
            "snr" => Ok(Metric::Snr),
            other => Err(Error::Config(format!("unknown metric '{other}'"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Network {
    AdHoc(AdHocConfig),
    Cellular(CellularConfig),
}

/// Radii of a PPP of density `lambda_b` restricted to the annulus `[r_min, r_max]`.
pub fn sample_ppp_annulus<R: Rng + ?Sized>(lambda_b: f64, r_min: f64, r_max: f64, rng: &mut R) -> Vec<f64> {
    let mut out = Vec::new();
    sample_ppp_annulus_into(lambda_b, r_min, r_max, rng, &mut out);
    out
}

fn sample_ppp_annulus_into<R: Rng + ?Sized>(lambda_b: f64, r_min: f64, r_max: f64, rng: &mut R, out: &mut Vec<f64>) {
    out.clear();
    let (a2, b2) = (r_min * r_min, r_max * r_max);
    let mean = lambda_b * std::f64::consts::PI * (b2 - a2);
    if !(mean > 0.0) {
        return;
    }
    let count = Poisson::new(mean).expect("positive Poisson mean").sample(rng) as usize;
    out.extend((0..count).map(|_| (a2 + rng.random::<f64>() * (b2 - a2)).sqrt()));
}

/// One draw of `Gamma(M, 1/M)`, the Nakagami-M power gain.
pub fn nakagami_power<R: Rng + ?Sized>(m: u32, rng: &mut R) -> f64 {
    let mf = f64::from(m.max(1));
    Gamma::new(mf, 1.0 / mf).expect("valid gamma parameters").sample(rng)
}

/// Signal, interference and noise of one trial; `None` when no serving link exists.
type Powers = Option<(f64, f64, f64)>;

fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

fn interferer_gain<R: Rng + ?Sized, D: Distribution<f64>>(fading: &D, pattern: &Pattern, rng: &mut R) -> f64 {
    let h = fading.sample(rng);
    h * pattern.sample_gain(rng.random_range(-1.0..=1.0))
}

/// `r^(-alpha)`, using integer powers when the exponent allows it.
fn path_gain(r: f64, alpha: f64) -> f64 {
    if alpha == alpha.trunc() && alpha.abs() < 16.0 {
        r.powi(-(alpha as i32))
    } else {
        r.powf(-alpha)
    }
}

fn adhoc_trial(cfg: &AdHocConfig, pattern: &Pattern, fading: &Gamma<f64>, rng: &mut ChaCha8Rng, radii: &mut Vec<f64>) -> Powers {
    let alpha = cfg.sys.alpha;
    let signal = fading.sample(rng) * cfg.r_0.powf(-alpha);
    sample_ppp_annulus_into(cfg.lambda_b, 0.0, cfg.big_r, rng, radii);
    let mut interference = 0.0;
    for &r in radii.iter() {
        interference += interferer_gain(fading, pattern, rng) * r.powf(-alpha);
    }
    Some((signal, interference, cfg.sys.sigma_n2()))
}

fn cellular_trial(
    cfg: &CellularConfig,
    pattern: &Pattern,
    fading: &Gamma<f64>,
    ctl: &SimControl,
    rng: &mut ChaCha8Rng,
    los: &mut Vec<f64>,
    nlos: &mut Vec<f64>,
) -> Powers {
    let alpha = cfg.sys.alpha;
    sample_ppp_annulus_into(cfg.lambda_b, 0.0, cfg.big_r, rng, los);
    if ctl.include_nlos {
        sample_ppp_annulus_into(cfg.lambda_b, cfg.big_r, ctl.outer_radius(cfg.big_r), rng, nlos);
    } else {
        nlos.clear();
    }
    // path loss relative to the LOS intercept
    let nlos_rel = ctl.nlos_beta / cfg.sys.beta_intercept;
    let los_best = los.iter().enumerate().min_by(|a, b| a.1.total_cmp(b.1)).map(|(i, &r)| (i, r.powf(-alpha)));
    let nlos_best = nlos
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.total_cmp(b.1))
        .map(|(i, &r)| (i, nlos_rel * path_gain(r, ctl.nlos_alpha)));
    let serving_los = match (los_best, nlos_best) {
        (None, None) => return None,
        (Some(l), Some(n)) => (l.1 >= n.1, if l.1 >= n.1 { l.0 } else { n.0 }),
        (Some(l), None) => (true, l.0),
        (None, Some(n)) => (false, n.0),
    };
    let mut signal = 0.0;
    let mut interference = 0.0;
    for (i, &r) in los.iter().enumerate() {
        if serving_los.0 && i == serving_los.1 {
            signal = fading.sample(rng) * r.powf(-alpha);
        } else {
            interference += interferer_gain(fading, pattern, rng) * r.powf(-alpha);
        }
    }
    for (i, &r) in nlos.iter().enumerate() {
        let pl = nlos_rel * path_gain(r, ctl.nlos_alpha);
        if !serving_los.0 && i == serving_los.1 {
            let h: f64 = Exp1.sample(rng);
            signal = h * pl;
        } else {
            interference += interferer_gain(&Exp1, pattern, rng) * pl;
        }
    }
    Some((signal, interference, cfg.sys.sigma_n2()))
}

fn covered(p: Powers, metric: Metric, tau: f64) -> bool {
    match p {
        None => false,
        Some((s, i, n)) => {
            let den = match metric {
                Metric::Sinr => n + i,
                Metric::Sir => i,
                Metric::Snr => n,
            };
            s > tau * den
        }
    }
}

/// Runs `trials` independent trials and counts, for every metric and
/// threshold, the trials that are covered.
fn run<F>(ctl: &SimControl, metrics: &[Metric], taus: &[f64], trial: F) -> Vec<u64>
where
    F: Fn(&mut ChaCha8Rng, &mut Vec<f64>, &mut Vec<f64>) -> Powers + Sync,
{
    let n = metrics.len() * taus.len();
    (0..ctl.trials)
        .into_par_iter()
        .fold(
            || (vec![0u64; n], Vec::new(), Vec::new()),
            |(mut counts, mut a, mut b), t| {
                let mut rng = trial_rng(ctl.seed, t);
                let p = trial(&mut rng, &mut a, &mut b);
                for (i, &m) in metrics.iter().enumerate() {
                    for (j, &tau) in taus.iter().enumerate() {
                        counts[i * taus.len() + j] += u64::from(covered(p, m, tau));
                    }
                }
                (counts, a, b)
            },
        )
        .map(|(counts, _, _)| counts)
        .reduce(|| vec![0; n], |x, y| x.iter().zip(&y).map(|(a, b)| a + b).collect())
}

/// Coverage estimates for each metric (outer index) and threshold (inner
/// index), all from the same realizations; the configured threshold is ignored.
pub fn simulate_grid(
    network: &Network,
    pattern: PatternKind,
    ctl: &SimControl,
    metrics: &[Metric],
    taus: &[f64],
) -> Result<Vec<Vec<McEstimate>>> {
    if let Some(t) = taus.iter().find(|t| !(**t >= 0.0 && t.is_finite())) {
        return Err(Error::Config(format!("threshold {t} must be finite and nonnegative")));
    }
    let counts = match network {
        Network::AdHoc(cfg) => {
            cfg.validate()?;
            ctl.validate(cfg.big_r)?;
            let pat = Pattern::new(pattern, cfg.sys.geometry())?;
            let fading = nakagami(cfg.sys.m)?;
            run(ctl, metrics, taus, |rng, radii, _| adhoc_trial(cfg, &pat, &fading, rng, radii))
        }
        Network::Cellular(cfg) => {
            cfg.validate()?;
            ctl.validate(cfg.big_r)?;
            let pat = Pattern::new(pattern, cfg.sys.geometry())?;
            let fading = nakagami(cfg.sys.m)?;
            run(ctl, metrics, taus, |rng, los, nlos| cellular_trial(cfg, &pat, &fading, ctl, rng, los, nlos))
        }
    };
    Ok(counts
        .chunks(taus.len().max(1))
        .take(metrics.len())
        .map(|row| row.iter().map(|&c| McEstimate::from_count(c, ctl.trials, ctl.seed)).collect())
        .collect())
}

fn nakagami(m: u32) -> Result<Gamma<f64>> {
    Gamma::new(f64::from(m), 1.0 / f64::from(m)).map_err(|e| Error::Config(e.to_string()))
}

/// SINR, SIR and SNR coverage estimates from the same realizations.
pub fn simulate_all_metrics(network: &Network, pattern: PatternKind, ctl: &SimControl) -> Result<[McEstimate; 3]> {
    let tau = match network {
        Network::AdHoc(c) => c.tau,
        Network::Cellular(c) => c.tau,
    };
    let grid = simulate_grid(network, pattern, ctl, &[Metric::Sinr, Metric::Sir, Metric::Snr], &[tau])?;
    Ok([grid[0][0], grid[1][0], grid[2][0]])
}

/// One metric at several thresholds, sharing realizations across thresholds.
pub fn simulate_thresholds(
    metric: Metric,
    network: &Network,
    pattern: PatternKind,
    ctl: &SimControl,
    taus: &[f64],
) -> Result<Vec<McEstimate>> {
    Ok(simulate_grid(network, pattern, ctl, &[metric], taus)?.remove(0))
}

pub fn simulate_metric(metric: Metric, network: &Network, pattern: PatternKind, ctl: &SimControl) -> Result<McEstimate> {
    let all = simulate_all_metrics(network, pattern, ctl)?;
    Ok(match metric {
        Metric::Sinr => all[0],
        Metric::Sir => all[1],
        Metric::Snr => all[2],
    })
}

/// SINR coverage of the typical dipole receiver.
pub fn simulate_adhoc(cfg: &AdHocConfig, pattern: PatternKind, ctl: &SimControl) -> Result<McEstimate> {
    simulate_metric(Metric::Sinr, &Network::AdHoc(*cfg), pattern, ctl)
}

/// SINR coverage of the typical user attached to its strongest base station.
pub fn simulate_cellular(cfg: &CellularConfig, pattern: PatternKind, ctl: &SimControl) -> Result<McEstimate> {
    simulate_metric(Metric::Sinr, &Network::Cellular(*cfg), pattern, ctl)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_annulus() {
        let mut rng = trial_rng(3, 0);
        assert!(sample_ppp_annulus(1.0, 5.0, 5.0, &mut rng).is_empty());
        assert!(sample_ppp_annulus(0.0, 0.0, 5.0, &mut rng).is_empty());
    }

    #[test]
    fn substreams_differ() {
        let a: f64 = trial_rng(9, 0).random();
        let b: f64 = trial_rng(9, 1).random();
        let c: f64 = trial_rng(9, 0).random();
        assert_ne!(a, b);
        assert_eq!(a, c);
    }

    #[test]
    fn trivial_network_always_covered() {
        let mut cfg = AdHocConfig {
            lambda_b: 0.0,
            ..AdHocConfig::default()
        };
        cfg.sys.sigma2 = 0.0;
        let est = simulate_adhoc(&cfg, PatternKind::Actual, &SimControl::new(2000, 4)).unwrap();
        assert_eq!(est.p_hat, 1.0);
        assert_eq!(est.stderr, 0.0);
    }

    #[test]
    fn zero_trials_rejected() {
        let err = simulate_adhoc(&AdHocConfig::default(), PatternKind::Sinc, &SimControl::new(0, 1));
        assert!(matches!(err, Err(Error::Config(_))));
    }
}
