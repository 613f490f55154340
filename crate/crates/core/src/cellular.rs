//! Cellular networks with the cosine antenna pattern.
//!
//! The typical user attaches to the nearest base station inside the LOS
//! ball; with `r` the squared serving distance, its density on `[0, R^2]`
//! is `pi lambda_b e^{-pi lambda_b r}`, and the missing mass is the
//! probability that no LOS base station exists. As in the ad hoc module the
//! stored coefficients are those of `N_t C_M(r)`.

use std::f64::consts::PI;

use crate::config::CellularConfig;
use crate::error::{domain, Error, Result};
use crate::kernel::{coverage_from_coeffs, nilpotent_norm_coeffs, CoeffVector};
use crate::quad::{integrate_with_breaks, QuadratureSpec};
use crate::specfun::{hyp3f2_j, ln_gamma, lower_incomplete_gamma};

/// Tolerance of the integrals over the serving distance.
pub const OUTER_TOL: f64 = 1e-7;

/// Quantities of a cellular configuration that do not depend on `r`.
#[derive(Debug, Clone)]
pub struct CellularCoeffs {
    cfg: CellularConfig,
    /// `A_k`, the prefactor of the interference bracket of `c_k`.
    prefactor: Vec<f64>,
    /// `J_k(-tau)`.
    j_tau: Vec<f64>,
}

impl CellularCoeffs {
    pub fn new(cfg: &CellularConfig) -> Result<Self> {
        cfg.validate()?;
        let sys = &cfg.sys;
        if f64::from(sys.n_t) * sys.spacing_ratio < 1.0 {
            return domain(format!(
                "the cosine main lobe 1/N_t exceeds d/lambda = {}; need N_t >= {}",
                sys.spacing_ratio,
                (1.0 / sys.spacing_ratio).ceil()
            ));
        }
        let m = sys.m;
        let mf = f64::from(m);
        let delta = sys.delta();
        let mut prefactor = Vec::with_capacity(m as usize);
        let mut j_tau = Vec::with_capacity(m as usize);
        for k in 0..m {
            let kf = f64::from(k);
            let log_mag = ln_gamma(kf + 0.5) + ln_gamma(mf + kf) - ln_gamma(mf) - 2.0 * ln_gamma(kf + 1.0);
            let tau_k = if k == 0 { 1.0 } else { cfg.tau.powi(k as i32) };
            prefactor.push(
                2.0 * PI.sqrt() * cfg.lambda_b / sys.spacing_ratio * log_mag.exp() * tau_k / (sys.alpha * kf - 2.0),
            );
            j_tau.push(hyp3f2_j(k, m, delta, -cfg.tau)?);
        }
        Ok(CellularCoeffs {
            cfg: *cfg,
            prefactor,
            j_tau,
        })
    }

    pub fn config(&self) -> &CellularConfig {
        &self.cfg
    }

    /// Coefficients of `N_t C_M(r)` at squared serving distance `r`.
    pub fn at(&self, r: f64) -> Result<CoeffVector> {
        let cfg = &self.cfg;
        let big_r2 = cfg.big_r * cfg.big_r;
        if !(0.0..=big_r2 * (1.0 + 1e-12)).contains(&r) {
            return domain(format!("squared serving distance {r} outside [0, R^2]"));
        }
        let sys = &cfg.sys;
        let alpha = sys.alpha;
        let delta = sys.delta();
        let m = sys.m;
        // r^{1/delta} = r_0^alpha
        let r0_alpha = r.powf(1.0 / delta);
        let x_outer = -cfg.tau * r0_alpha / cfg.big_r.powf(alpha);
        let s = f64::from(m) * cfg.tau * r0_alpha;
        let noise = s * sys.noise_ratio();

        let mut c = Vec::with_capacity(m as usize);
        for k in 0..m {
            let kf = f64::from(k);
            let outer = if k == 0 || r > 0.0 {
                cfg.big_r.powf(2.0 - alpha * kf) * r.powf(kf / delta) * hyp3f2_j(k, m, delta, x_outer)?
            } else {
                0.0
            };
            let mut v = self.prefactor[k as usize] * (self.j_tau[k as usize] * r - outer);
            match k {
                // interference from the whole annulus r_0 < |x| < R
                0 => v += self.prefactor[0] * (big_r2 - r) - noise,
                1 => v += noise,
                _ => {}
            }
            c.push(v);
        }
        CoeffVector::new(c, s, m)
    }
}

/// Coefficients of `N_t C_M(r)` for a single `r`.
pub fn coeffs_cellular_cos(cfg: &CellularConfig, r: f64) -> Result<CoeffVector> {
    CellularCoeffs::new(cfg)?.at(r)
}

fn los_mass(cfg: &CellularConfig) -> f64 {
    PI * cfg.lambda_b * cfg.big_r * cfg.big_r
}

/// Integrates `h(v)` against `e^{-v}` over `v = pi lambda_b r in [0, pi lambda_b R^2]`.
fn outer_integral<H: Fn(f64) -> Result<f64>>(cfg: &CellularConfig, h: H) -> Result<f64> {
    let upper = los_mass(cfg);
    // past this point e^{-v} is below every tolerance in use
    let cut = upper.min(60.0);
    let mut breaks = vec![0.0];
    for b in [1.0, 4.0, 12.0, 30.0] {
        if b < cut {
            breaks.push(b);
        }
    }
    breaks.push(cut);
    let failure = std::cell::RefCell::new(None);
    let spec = QuadratureSpec::default().with_tol(OUTER_TOL * 1e-2, OUTER_TOL);
    let (v, _) = integrate_with_breaks(
        |v| match h(v) {
            Ok(y) => (-v).exp() * y,
            Err(e) => {
                failure.borrow_mut().get_or_insert(e);
                0.0
            }
        },
        &breaks,
        &spec,
    )?;
    if let Some(e) = failure.into_inner() {
        return Err(e);
    }
    Ok(v)
}

/// Coverage `pi lambda_b int_0^{R^2} e^{-pi lambda_b r} ||exp(C_M(r) / N_t)||_1 dr`.
pub fn coverage_cellular(cfg: &CellularConfig) -> Result<f64> {
    let cc = CellularCoeffs::new(cfg)?;
    let t = 1.0 / f64::from(cfg.sys.n_t);
    let scale = PI * cfg.lambda_b;
    let p = outer_integral(cfg, |v| {
        let r = (v / scale).min(cfg.big_r * cfg.big_r);
        coverage_from_coeffs(&cc.at(r)?.scaled(t))
    })?;
    Ok(p.clamp(0.0, 1.0))
}

/// `d_0..d_{M-1}`: the coefficients averaged over the serving distance.
pub fn coeffs_jensen(cfg: &CellularConfig) -> Result<Vec<f64>> {
    let cc = CellularCoeffs::new(cfg)?;
    let sys = &cfg.sys;
    let m = sys.m;
    let delta = sys.delta();
    let alpha = sys.alpha;
    let pl = PI * cfg.lambda_b;
    let x = los_mass(cfg);
    let ex = (-x).exp();
    let noise_avg = f64::from(m) * cfg.tau * sys.noise_ratio() / pl.powf(1.0 / delta)
        * lower_incomplete_gamma(1.0 + 1.0 / delta, x)?;

    let mut d = Vec::with_capacity(m as usize);
    for k in 0..m {
        let kf = f64::from(k);
        let mut y = cc.j_tau[k as usize] * (1.0 - ex * (1.0 + x));
        if k == 0 {
            y += x - 1.0 + ex;
        }
        // pi lambda_b int e^{-pi lambda_b r} r^{alpha k / 2} J_k(...) dr, over v = pi lambda_b r
        let tail = outer_integral(cfg, |v| {
            let r = (v / pl).min(cfg.big_r * cfg.big_r);
            let arg = -cfg.tau * r.powf(1.0 / delta) / cfg.big_r.powf(alpha);
            Ok(r.powf(alpha * kf / 2.0) * hyp3f2_j(k, m, delta, arg)?)
        })?;
        let mut v = cc.prefactor[k as usize] / pl * (y - pl * cfg.big_r.powf(2.0 - alpha * kf) * tail);
        match k {
            0 => v -= noise_avg,
            1 => v += noise_avg,
            _ => {}
        }
        d.push(v);
    }
    Ok(d)
}

/// The Jensen vector rescaled so that the bound reads
/// `(1 - e^{-pi lambda_b R^2}) ||exp(t D')||_1` with `t = 1/N_t`.
fn jensen_vector(cfg: &CellularConfig) -> Result<(CoeffVector, f64)> {
    let los = cfg.los_probability();
    let d = coeffs_jensen(cfg)?;
    let c: Vec<f64> = d.iter().map(|v| v / los).collect();
    Ok((CoeffVector::new(c, 0.0, cfg.sys.m)?, los))
}

/// Lower bound on [`coverage_cellular`] from Jensen's inequality over the serving distance.
pub fn coverage_cellular_lower(cfg: &CellularConfig) -> Result<f64> {
    let (dv, los) = jensen_vector(cfg)?;
    Ok(los * coverage_from_coeffs(&dv.scaled(1.0 / f64::from(cfg.sys.n_t)))?)
}

/// `(beta_0, beta_1..beta_{M-1})` with lower bound
/// `(1 - e^{-pi lambda_b R^2}) e^{beta_0 t} (1 + sum beta_n t^n)`.
pub fn cellular_poly_form(cfg: &CellularConfig) -> Result<(f64, Vec<f64>)> {
    let (dv, _) = jensen_vector(cfg)?;
    Ok((dv.c[0], nilpotent_norm_coeffs(&dv)))
}

/// Large-array outage `mu / N_t + e^{-pi lambda_b R^2}` with `mu = -sum d_n`.
pub fn asymptotic_outage_cellular(cfg: &CellularConfig) -> Result<f64> {
    let d = coeffs_jensen(cfg)?;
    let mu = -d.iter().sum::<f64>();
    if !(mu > 0.0) {
        return Err(Error::Validity(format!("outage slope mu = {mu} must be positive")));
    }
    Ok(mu / f64::from(cfg.sys.n_t) + (-los_mass(cfg)).exp())
}
