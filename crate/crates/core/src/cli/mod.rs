//! Command-line front end: sweeps, presets and curve output.
//!
//! Exit codes: 0 on success, 2 for invalid arguments or configurations,
//! 3 for numerical or I/O failures.

mod curve;

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::json;

pub use curve::{
    emit_curve, emit_curves, format_g, format_g10, parse_csv, parse_json, CoverageCurve, CurveMeta, CurvePoint, Format,
    Method, CSV_HEADER, SWEEP_NAMES,
};

use crate::adhoc::{asymptotic_outage_adhoc, coverage_adhoc};
use crate::antenna::{ArrayGeometry, Pattern, PatternKind};
use crate::cellular::{asymptotic_outage_cellular, coverage_cellular, coverage_cellular_lower};
use crate::config::{db_to_linear, dbm_to_watts, linear_to_db, AdHocConfig, CellularConfig};
use crate::error::{Error, Result};
use crate::montecarlo::{simulate_metric, simulate_thresholds, Metric, Network, SimControl};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CONFIG: i32 = 2;
pub const EXIT_NUMERIC: i32 = 3;

/// Default trial count of `simulate` and the sweeps.
pub const DEFAULT_TRIALS: u64 = 100_000;
/// Default trial count of the presets.
pub const PRESET_TRIALS: u64 = 500_000;

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Config(_) => EXIT_CONFIG,
        _ => EXIT_NUMERIC,
    }
}

#[derive(Debug, Parser)]
#[command(name = "mmcov", version, about = "Coverage of millimeter-wave ad hoc and cellular networks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum NetworkKind {
    Adhoc,
    Cellular,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MetricArg {
    Sinr,
    Sir,
    Snr,
}

impl From<MetricArg> for Metric {
    fn from(m: MetricArg) -> Self {
        match m {
            MetricArg::Sinr => Metric::Sinr,
            MetricArg::Sir => Metric::Sir,
            MetricArg::Snr => Metric::Snr,
        }
    }
}

#[derive(Debug, Clone, Args)]
struct OutputArgs {
    /// Output format.
    #[arg(long, value_enum, default_value = "csv")]
    format: FormatArg,
    /// Write to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Physical parameters; unset values keep the network defaults.
#[derive(Debug, Clone, Default, Args)]
struct PhysArgs {
    /// Path-loss exponent, in (2, 3).
    #[arg(long)]
    alpha: Option<f64>,
    /// Nakagami parameter.
    #[arg(long)]
    m: Option<u32>,
    /// Transmit array size.
    #[arg(long = "n-t")]
    n_t: Option<u32>,
    /// Antenna spacing over wavelength.
    #[arg(long)]
    spacing: Option<f64>,
    /// LOS ball radius in meters.
    #[arg(long = "big-r")]
    big_r: Option<f64>,
    /// Transmitter density per square meter.
    #[arg(long = "lambda-b")]
    lambda_b: Option<f64>,
    /// Dipole distance in meters (ad hoc).
    #[arg(long)]
    r0: Option<f64>,
    /// Noise power in dBm.
    #[arg(long = "noise-dbm", allow_hyphen_values = true)]
    noise_dbm: Option<f64>,
    /// Transmit power in watts.
    #[arg(long = "pt")]
    p_t: Option<f64>,
    /// Path-loss intercept in dB.
    #[arg(long = "beta-db", allow_hyphen_values = true)]
    beta_db: Option<f64>,
}

#[derive(Debug, Clone, Args)]
struct SimArgs {
    /// Monte Carlo trials per point.
    #[arg(long)]
    trials: Option<u64>,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Add the NLOS tier to cellular simulations.
    #[arg(long)]
    nlos: bool,
    #[arg(long, value_enum, default_value = "sinr")]
    metric: MetricArg,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Ad hoc coverage against the SINR threshold.
    AdhocCurve {
        /// Threshold sweep in dB, `start:stop:step` or a comma list.
        /// The analytic series needs tau (r_0/R)^alpha < 1.
        #[arg(long = "tau-db", allow_hyphen_values = true, default_value = "-10:15:1")]
        tau_db: String,
        #[arg(long = "method")]
        methods: Vec<String>,
        #[command(flatten)]
        phys: PhysArgs,
        #[command(flatten)]
        sim: SimArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Cellular coverage against the SINR threshold.
    CellularCurve {
        #[arg(long = "tau-db", allow_hyphen_values = true, default_value = "-10:30:2")]
        tau_db: String,
        #[arg(long = "method")]
        methods: Vec<String>,
        #[command(flatten)]
        phys: PhysArgs,
        #[command(flatten)]
        sim: SimArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Monte Carlo coverage estimate.
    Simulate {
        #[arg(long, value_enum)]
        network: NetworkKind,
        #[arg(long, default_value = "actual")]
        pattern: String,
        #[arg(long = "tau-db", allow_hyphen_values = true, default_value = "5")]
        tau_db: String,
        #[command(flatten)]
        phys: PhysArgs,
        #[command(flatten)]
        sim: SimArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Samples of the antenna gain patterns.
    PatternDump {
        /// Patterns to dump; all four when omitted.
        #[arg(long = "pattern")]
        patterns: Vec<String>,
        #[arg(long = "n-t", default_value_t = 64)]
        n_t: u32,
        #[arg(long, default_value_t = 0.25)]
        spacing: f64,
        /// Samples over `x in [-d/lambda, d/lambda]`.
        #[arg(long, default_value_t = 1001)]
        points: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Coverage against the array size.
    NtSweep {
        #[arg(long, value_enum)]
        network: NetworkKind,
        /// Array sizes, a comma list or `start:stop:step`.
        #[arg(long = "n-t-list", default_value = "4,8,16,32,64,128,256,512,1024")]
        n_t_list: String,
        #[arg(long = "tau-db", allow_hyphen_values = true, default_value = "5")]
        tau_db: String,
        #[arg(long = "method")]
        methods: Vec<String>,
        #[command(flatten)]
        phys: PhysArgs,
        #[command(flatten)]
        sim: SimArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Coverage against the transmitter density.
    DensitySweep {
        #[arg(long, value_enum)]
        network: NetworkKind,
        /// Densities: a comma list, `start:stop:step`, or `log:start:stop:count`.
        #[arg(long = "lambda-list", default_value = "log:1e-6:1e-2:9")]
        lambda_list: String,
        #[arg(long = "tau-db", allow_hyphen_values = true, default_value = "10")]
        tau_db: String,
        #[arg(long = "method")]
        methods: Vec<String>,
        #[command(flatten)]
        phys: PhysArgs,
        #[command(flatten)]
        sim: SimArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Reproduce a standard experiment: fig1a, fig1b, fig3a, fig4b, fig5a, fig5b.
    Preset {
        name: String,
        #[arg(long = "method")]
        methods: Vec<String>,
        /// Override the Nakagami parameter.
        #[arg(long)]
        m: Option<u32>,
        #[arg(long)]
        trials: Option<u64>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[command(flatten)]
        output: OutputArgs,
    },
}

/// Parses `start:stop:step`, `log:start:stop:count`, a comma list, or a single value.
pub fn parse_sweep(spec: &str) -> Result<Vec<f64>> {
    let bad = || Error::Config(format!("cannot parse sweep '{spec}'"));
    let num = |s: &str| s.trim().parse::<f64>().map_err(|_| bad());
    let values: Vec<f64> = if let Some(rest) = spec.strip_prefix("log:") {
        let parts: Vec<&str> = rest.split(':').collect();
        if parts.len() != 3 {
            return Err(bad());
        }
        let (a, b) = (num(parts[0])?, num(parts[1])?);
        let n: usize = parts[2].trim().parse().map_err(|_| bad())?;
        if !(a > 0.0 && b > a) || n < 2 {
            return Err(bad());
        }
        let (la, lb) = (a.log10(), b.log10());
        (0..n)
            .map(|i| {
                let v = 10f64.powf(la + (lb - la) * i as f64 / (n - 1) as f64);
                // tidy decimal values such as 1e-4
                format!("{v:.12e}").parse().unwrap_or(v)
            })
            .collect()
    } else if spec.contains(':') {
        let parts: Vec<&str> = spec.split(':').collect();
        if parts.len() != 3 {
            return Err(bad());
        }
        let (a, b, step) = (num(parts[0])?, num(parts[1])?, num(parts[2])?);
        if !(step > 0.0) || b < a {
            return Err(bad());
        }
        let n = ((b - a) / step + 1e-9).floor() as usize;
        (0..=n).map(|i| a + step * i as f64).collect()
    } else {
        spec.split(',').map(num).collect::<Result<_>>()?
    };
    if values.is_empty() || values.iter().any(|v| !v.is_finite()) {
        return Err(bad());
    }
    if values.windows(2).any(|w| !(w[1] > w[0])) {
        return Err(Error::Config(format!("sweep '{spec}' must be strictly increasing")));
    }
    Ok(values)
}

fn single_value(spec: &str, what: &str) -> Result<f64> {
    let v = parse_sweep(spec)?;
    if v.len() != 1 {
        return Err(Error::Config(format!("{what} takes a single value here")));
    }
    Ok(v[0])
}

fn parse_methods(raw: &[String], defaults: &[Method]) -> Result<Vec<Method>> {
    if raw.is_empty() {
        return Ok(defaults.to_vec());
    }
    raw.iter().map(|s| s.parse()).collect()
}

fn adhoc_config(phys: &PhysArgs, tau_db: f64) -> AdHocConfig {
    let mut cfg = AdHocConfig::default();
    apply_sys(phys, &mut cfg.sys);
    if let Some(v) = phys.big_r {
        cfg.big_r = v;
    }
    if let Some(v) = phys.lambda_b {
        cfg.lambda_b = v;
    }
    if let Some(v) = phys.r0 {
        cfg.r_0 = v;
    }
    cfg.tau = db_to_linear(tau_db);
    cfg
}

fn cellular_config(phys: &PhysArgs, tau_db: f64) -> CellularConfig {
    let mut cfg = CellularConfig::default();
    apply_sys(phys, &mut cfg.sys);
    if let Some(v) = phys.big_r {
        cfg.big_r = v;
    }
    if let Some(v) = phys.lambda_b {
        cfg.lambda_b = v;
    }
    cfg.tau = db_to_linear(tau_db);
    cfg
}

fn apply_sys(phys: &PhysArgs, sys: &mut crate::config::SystemParams) {
    if let Some(v) = phys.alpha {
        sys.alpha = v;
    }
    if let Some(v) = phys.m {
        sys.m = v;
    }
    if let Some(v) = phys.n_t {
        sys.n_t = v;
    }
    if let Some(v) = phys.spacing {
        sys.spacing_ratio = v;
    }
    if let Some(v) = phys.noise_dbm {
        sys.sigma2 = dbm_to_watts(v);
    }
    if let Some(v) = phys.p_t {
        sys.p_t = v;
    }
    if let Some(v) = phys.beta_db {
        sys.beta_intercept = db_to_linear(v);
    }
}

fn validate_network(net: &Network) -> Result<()> {
    match net {
        Network::AdHoc(c) => c.validate(),
        Network::Cellular(c) => c.validate(),
    }
}

/// Monte Carlo settings shared by every point of a sweep.
#[derive(Debug, Clone, Copy)]
pub struct McSettings {
    pub trials: u64,
    pub seed: u64,
    pub nlos: bool,
    pub metric: Metric,
}

/// Coverage (and standard error for simulations) of one network by one method.
pub fn evaluate(method: Method, net: &Network, mc: &McSettings) -> Result<(f64, Option<f64>)> {
    let wrong = |what: &str| Err(Error::Config(format!("method {method} applies to {what} networks only")));
    match (method, net) {
        (Method::AnalyticProp1, Network::AdHoc(c)) => Ok((coverage_adhoc(c)?, None)),
        (Method::AnalyticProp1, _) => wrong("ad hoc"),
        (Method::AnalyticProp2, Network::Cellular(c)) => Ok((coverage_cellular(c)?, None)),
        (Method::AnalyticCor2, Network::Cellular(c)) => Ok((coverage_cellular_lower(c)?, None)),
        (Method::AnalyticProp2 | Method::AnalyticCor2, _) => wrong("cellular"),
        (Method::Asymptotic, Network::AdHoc(c)) => Ok(((1.0 - asymptotic_outage_adhoc(c)?).max(0.0), None)),
        (Method::Asymptotic, Network::Cellular(c)) => Ok(((1.0 - asymptotic_outage_cellular(c)?).max(0.0), None)),
        (_, _) => {
            let pattern = method.pattern().expect("remaining methods are simulations");
            let ctl = SimControl::new(mc.trials, mc.seed).with_nlos(mc.nlos);
            let est = simulate_metric(mc.metric, net, pattern, &ctl)?;
            Ok((est.p_hat, Some(est.stderr)))
        }
    }
}

/// Evaluates `methods` over the networks produced for each sweep value.
pub fn sweep_curves<F>(
    sweep_name: &str,
    xs: &[f64],
    build: F,
    methods: &[Method],
    mc: &McSettings,
    echo: serde_json::Value,
) -> Result<Vec<CoverageCurve>>
where
    F: Fn(f64) -> Network + Sync,
{
    let nets: Vec<Network> = xs.iter().map(|&x| build(x)).collect();
    for n in &nets {
        validate_network(n)?;
    }
    if mc.trials < 1 && methods.iter().any(|m| m.is_monte_carlo()) {
        return Err(Error::Config("trials must be >= 1".into()));
    }
    methods
        .iter()
        .map(|&method| {
            let points = match method.pattern() {
                // thresholds share one set of realizations
                Some(pattern) if sweep_name == "tau_db" && !xs.is_empty() => {
                    let taus: Vec<f64> = xs.iter().map(|&x| db_to_linear(x)).collect();
                    let ctl = SimControl::new(mc.trials, mc.seed).with_nlos(mc.nlos);
                    simulate_thresholds(mc.metric, &nets[0], pattern, &ctl, &taus)?
                        .into_iter()
                        .zip(xs)
                        .map(|(est, &x)| CurvePoint {
                            x,
                            p: est.p_hat,
                            stderr: Some(est.stderr),
                        })
                        .collect()
                }
                _ => xs
                    .par_iter()
                    .zip(nets.par_iter())
                    .map(|(&x, net)| {
                        let (p, stderr) = evaluate(method, net, mc)?;
                        Ok(CurvePoint { x, p, stderr })
                    })
                    .collect::<Result<Vec<_>>>()?,
            };
            let mut config = echo.clone();
            if method.is_monte_carlo() {
                config["trials"] = json!(mc.trials);
                config["metric"] = json!(mc.metric);
                config["nlos"] = json!(mc.nlos);
            }
            let curve = CoverageCurve {
                sweep_name: sweep_name.to_string(),
                points,
                meta: CurveMeta {
                    method,
                    seed: method.is_monte_carlo().then_some(mc.seed),
                    config,
                },
            };
            curve.validate()?;
            Ok(curve)
        })
        .collect()
}

fn network_echo(net: &Network) -> serde_json::Value {
    match net {
        Network::AdHoc(c) => json!({ "network": "adhoc", "params": c, "tau_db": linear_to_db(c.tau) }),
        Network::Cellular(c) => json!({ "network": "cellular", "params": c, "tau_db": linear_to_db(c.tau) }),
    }
}

fn mc_settings(sim: &SimArgs, default_trials: u64) -> McSettings {
    McSettings {
        trials: sim.trials.unwrap_or(default_trials),
        seed: sim.seed,
        nlos: sim.nlos,
        metric: sim.metric.into(),
    }
}

/// A named experiment with fixed parameters.
#[derive(Debug, Clone)]
pub struct Preset {
    pub name: &'static str,
    pub caption: &'static str,
    pub sweep_name: &'static str,
    pub xs: Vec<f64>,
    pub base: Network,
    pub methods: Vec<Method>,
    pub metric: Metric,
    pub nlos: bool,
}

pub const PRESET_NAMES: [&str; 6] = ["fig1a", "fig1b", "fig3a", "fig4b", "fig5a", "fig5b"];

pub fn preset(name: &str) -> Result<Preset> {
    let mut adhoc = AdHocConfig::default();
    let mut cell = CellularConfig::default();
    let p = match name {
        "fig1a" => {
            cell.sys.n_t = 64;
            cell.tau = db_to_linear(10.0);
            Preset {
                name: "fig1a",
                caption: "cellular, R = 200 m, N_t = 64, tau = 10 dB, M = 3, alpha = 2.1",
                sweep_name: "lambda_b",
                xs: parse_sweep("log:1e-6:1e-2:9")?,
                base: Network::Cellular(cell),
                methods: vec![Method::McActual],
                metric: Metric::Sinr,
                nlos: true,
            }
        }
        "fig1b" => {
            adhoc.big_r = 180.0;
            adhoc.sys.m = 5;
            adhoc.sys.alpha = 2.2;
            Preset {
                name: "fig1b",
                caption: "ad hoc, R = 180 m, N_t = 64, tau = 5 dB, M = 5, alpha = 2.2, r_0 = 25 m",
                sweep_name: "lambda_b",
                xs: parse_sweep("log:1e-6:1e-2:9")?,
                base: Network::AdHoc(adhoc),
                methods: vec![Method::McActual],
                metric: Metric::Sinr,
                nlos: false,
            }
        }
        "fig3a" => Preset {
            name: "fig3a",
            caption: "ad hoc, R = 200 m, N_t = 64, lambda_b = 1e-3 m^-2, M = 3, alpha = 2.1, r_0 = 25 m",
            sweep_name: "tau_db",
            xs: parse_sweep("-10:15:1")?,
            base: Network::AdHoc(adhoc),
            methods: vec![Method::AnalyticProp1, Method::McActual],
            metric: Metric::Sinr,
            nlos: false,
        },
        "fig4b" => Preset {
            name: "fig4b",
            caption: "cellular, R = 200 m, N_t = 128, lambda_b = 1e-3 m^-2, M = 3, alpha = 2.1",
            sweep_name: "tau_db",
            xs: parse_sweep("-10:30:2")?,
            base: Network::Cellular(cell),
            methods: vec![Method::AnalyticProp2, Method::AnalyticCor2, Method::McActual],
            metric: Metric::Sinr,
            nlos: false,
        },
        "fig5a" => Preset {
            name: "fig5a",
            caption: "ad hoc, R = 200 m, tau = 5 dB, lambda_b = 1e-3 m^-2, alpha = 2.1, r_0 = 25 m",
            sweep_name: "n_t",
            xs: parse_sweep("4,8,16,32,64,128,256")?,
            base: Network::AdHoc(adhoc),
            methods: vec![Method::AnalyticProp1, Method::McActual],
            metric: Metric::Sinr,
            nlos: false,
        },
        "fig5b" => Preset {
            name: "fig5b",
            caption: "cellular, R = 200 m, tau = 5 dB, lambda_b = 1e-3 m^-2, alpha = 2.1",
            sweep_name: "n_t",
            xs: parse_sweep("4,8,16,32,64,128,256")?,
            base: Network::Cellular(cell),
            methods: vec![Method::AnalyticCor2, Method::McActual],
            metric: Metric::Sinr,
            nlos: false,
        },
        other => {
            return Err(Error::Config(format!(
                "unknown preset '{other}', expected one of {}",
                PRESET_NAMES.join(", ")
            )))
        }
    };
    Ok(p)
}

/// The network of `base` with the sweep variable set to `x`.
pub fn with_sweep_value(base: &Network, sweep_name: &str, x: f64) -> Network {
    let mut net = *base;
    let (sys, lambda_b, tau) = match &mut net {
        Network::AdHoc(c) => (&mut c.sys, &mut c.lambda_b, &mut c.tau),
        Network::Cellular(c) => (&mut c.sys, &mut c.lambda_b, &mut c.tau),
    };
    match sweep_name {
        "tau_db" => *tau = db_to_linear(x),
        "n_t" => sys.n_t = x.round() as u32,
        "lambda_b" => *lambda_b = x,
        _ => {}
    }
    net
}

fn pattern_rows(patterns: &[PatternKind], n_t: u32, spacing: f64, points: usize) -> Result<Vec<(PatternKind, f64, f64)>> {
    if points < 2 {
        return Err(Error::Config("need at least two sample points".into()));
    }
    let geom = ArrayGeometry::new(n_t, spacing)?;
    let mut rows = Vec::with_capacity(patterns.len() * points);
    for &kind in patterns {
        let pat = Pattern::new(kind, geom)?;
        for i in 0..points {
            let x = -spacing + 2.0 * spacing * i as f64 / (points - 1) as f64;
            rows.push((kind, x, pat.gain(x)));
        }
    }
    Ok(rows)
}

fn write_pattern_rows(rows: &[(PatternKind, f64, f64)], format: Format, out: &mut dyn Write) -> Result<()> {
    match format {
        Format::Csv => {
            writeln!(out, "pattern,x,gain")?;
            for (k, x, g) in rows {
                writeln!(out, "{},{},{}", k.name(), format_g10(*x), format_g10(*g))?;
            }
        }
        Format::Json => {
            let v: Vec<_> = rows.iter().map(|(k, x, g)| json!({"pattern": k, "x": x, "gain": g})).collect();
            serde_json::to_writer_pretty(&mut *out, &v).map_err(|e| Error::Io(e.to_string()))?;
            writeln!(out)?;
        }
    }
    Ok(())
}

enum Output {
    Curves(Vec<CoverageCurve>),
    Pattern(Vec<(PatternKind, f64, f64)>),
}

fn execute(command: Command) -> Result<(Output, OutputArgs)> {
    match command {
        Command::AdhocCurve {
            tau_db,
            methods,
            phys,
            sim,
            output,
        } => {
            let xs = parse_sweep(&tau_db)?;
            let methods = parse_methods(&methods, &[Method::AnalyticProp1])?;
            let base = Network::AdHoc(adhoc_config(&phys, xs[0]));
            let curves = sweep_curves(
                "tau_db",
                &xs,
                |x| with_sweep_value(&base, "tau_db", x),
                &methods,
                &mc_settings(&sim, DEFAULT_TRIALS),
                network_echo(&base),
            )?;
            Ok((Output::Curves(curves), output))
        }
        Command::CellularCurve {
            tau_db,
            methods,
            phys,
            sim,
            output,
        } => {
            let xs = parse_sweep(&tau_db)?;
            let methods = parse_methods(&methods, &[Method::AnalyticProp2, Method::AnalyticCor2])?;
            let base = Network::Cellular(cellular_config(&phys, xs[0]));
            let curves = sweep_curves(
                "tau_db",
                &xs,
                |x| with_sweep_value(&base, "tau_db", x),
                &methods,
                &mc_settings(&sim, DEFAULT_TRIALS),
                network_echo(&base),
            )?;
            Ok((Output::Curves(curves), output))
        }
        Command::Simulate {
            network,
            pattern,
            tau_db,
            phys,
            sim,
            output,
        } => {
            let kind: PatternKind = pattern.parse()?;
            let method = Method::ALL
                .into_iter()
                .find(|m| m.pattern() == Some(kind))
                .expect("every pattern has a simulation method");
            let xs = parse_sweep(&tau_db)?;
            let base = match network {
                NetworkKind::Adhoc => Network::AdHoc(adhoc_config(&phys, xs[0])),
                NetworkKind::Cellular => Network::Cellular(cellular_config(&phys, xs[0])),
            };
            let curves = sweep_curves(
                "tau_db",
                &xs,
                |x| with_sweep_value(&base, "tau_db", x),
                &[method],
                &mc_settings(&sim, DEFAULT_TRIALS),
                network_echo(&base),
            )?;
            Ok((Output::Curves(curves), output))
        }
        Command::PatternDump {
            patterns,
            n_t,
            spacing,
            points,
            output,
        } => {
            let kinds: Vec<PatternKind> = if patterns.is_empty() {
                PatternKind::ALL.to_vec()
            } else {
                patterns.iter().map(|p| p.parse()).collect::<Result<_>>()?
            };
            Ok((Output::Pattern(pattern_rows(&kinds, n_t, spacing, points)?), output))
        }
        Command::NtSweep {
            network,
            n_t_list,
            tau_db,
            methods,
            phys,
            sim,
            output,
        } => {
            let xs = parse_sweep(&n_t_list)?;
            if xs.iter().any(|&x| x < 1.0 || x.fract() != 0.0) {
                return Err(Error::Config("array sizes must be positive integers".into()));
            }
            let tau = single_value(&tau_db, "--tau-db")?;
            let (base, defaults) = match network {
                NetworkKind::Adhoc => (Network::AdHoc(adhoc_config(&phys, tau)), Method::AnalyticProp1),
                NetworkKind::Cellular => (Network::Cellular(cellular_config(&phys, tau)), Method::AnalyticCor2),
            };
            let methods = parse_methods(&methods, &[defaults])?;
            let curves = sweep_curves(
                "n_t",
                &xs,
                |x| with_sweep_value(&base, "n_t", x),
                &methods,
                &mc_settings(&sim, DEFAULT_TRIALS),
                network_echo(&base),
            )?;
            Ok((Output::Curves(curves), output))
        }
        Command::DensitySweep {
            network,
            lambda_list,
            tau_db,
            methods,
            phys,
            sim,
            output,
        } => {
            let xs = parse_sweep(&lambda_list)?;
            if xs.iter().any(|&x| !(x > 0.0)) {
                return Err(Error::Config("densities must be positive".into()));
            }
            let tau = single_value(&tau_db, "--tau-db")?;
            let (base, defaults) = match network {
                NetworkKind::Adhoc => (Network::AdHoc(adhoc_config(&phys, tau)), Method::AnalyticProp1),
                NetworkKind::Cellular => (Network::Cellular(cellular_config(&phys, tau)), Method::AnalyticProp2),
            };
            let methods = parse_methods(&methods, &[defaults])?;
            let curves = sweep_curves(
                "lambda_b",
                &xs,
                |x| with_sweep_value(&base, "lambda_b", x),
                &methods,
                &mc_settings(&sim, DEFAULT_TRIALS),
                network_echo(&base),
            )?;
            Ok((Output::Curves(curves), output))
        }
        Command::Preset {
            name,
            methods,
            m,
            trials,
            seed,
            output,
        } => {
            let mut p = preset(&name)?;
            if let Some(m) = m {
                match &mut p.base {
                    Network::AdHoc(c) => c.sys.m = m,
                    Network::Cellular(c) => c.sys.m = m,
                }
            }
            let methods = parse_methods(&methods, &p.methods)?;
            let mc = McSettings {
                trials: trials.unwrap_or(PRESET_TRIALS),
                seed,
                nlos: p.nlos,
                metric: p.metric,
            };
            let mut echo = network_echo(&p.base);
            echo["preset"] = json!(p.name);
            echo["caption"] = json!(p.caption);
            let base = p.base;
            let sweep = p.sweep_name;
            let curves = sweep_curves(sweep, &p.xs, |x| with_sweep_value(&base, sweep, x), &methods, &mc, echo)?;
            Ok((Output::Curves(curves), output))
        }
    }
}

fn write_output(result: &Output, args: &OutputArgs, stdout: &mut dyn Write) -> Result<()> {
    let format = match args.format {
        FormatArg::Csv => Format::Csv,
        FormatArg::Json => Format::Json,
    };
    let mut file;
    let sink: &mut dyn Write = match &args.out {
        Some(path) => {
            file = BufWriter::new(File::create(path)?);
            &mut file
        }
        None => stdout,
    };
    match result {
        Output::Curves(c) => emit_curves(c, format, sink)?,
        Output::Pattern(rows) => write_pattern_rows(rows, format, sink)?,
    }
    sink.flush()?;
    Ok(())
}

/// Runs the command line `argv` (program name first), writing results to
/// `stdout` and diagnostics to `stderr`; returns the exit code.
pub fn run_with<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let _ = write!(stderr, "{}", e.render());
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_CONFIG,
            };
        }
    };
    let outcome = execute(cli.command).and_then(|(result, args)| write_output(&result, &args, stdout));
    match outcome {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            exit_code(&e)
        }
    }
}

/// [`run_with`] on the process streams.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}
