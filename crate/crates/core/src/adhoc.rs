//! Ad hoc networks with the sinc antenna pattern.
//!
//! Every interferer lies within the LOS ball of radius `R` around the typical
//! receiver, which sits at a fixed distance `r_0` from its own transmitter.
//! The coefficients below are those of `N_t C_M`: the Toeplitz exponent is
//! `C_M / N_t`, so the array size enters only through `t = 1/N_t`.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::config::AdHocConfig;
use crate::error::{Error, Result};
use crate::kernel::{coverage_from_coeffs, nilpotent_norm_coeffs, CoeffVector};
use crate::specfun::{eulerian_over_factorial, falling_factorial, gamma_fn, ln_gamma, xi};

/// Truncation of the power series in the coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SeriesControl {
    pub max_terms: usize,
    pub stop_rel: f64,
}

impl Default for SeriesControl {
    fn default() -> Self {
        SeriesControl {
            max_terms: 40,
            stop_rel: 1e-12,
        }
    }
}

impl SeriesControl {
    pub fn validate(&self) -> Result<()> {
        if self.max_terms < 5 {
            return Err(Error::Config(format!("max_terms must be >= 5, got {}", self.max_terms)));
        }
        if !(self.stop_rel > 0.0) {
            return Err(Error::Config("stop_rel must be positive".into()));
        }
        Ok(())
    }
}

/// `tau (r_0 / R)^alpha`, the ratio governing the series convergence.
pub fn series_ratio(cfg: &AdHocConfig) -> f64 {
    cfg.tau * (cfg.r_0 / cfg.big_r).powf(cfg.sys.alpha)
}

/// Coefficients of `N_t C_M` for the sinc pattern.
pub fn coeffs_adhoc_sinc(cfg: &AdHocConfig, ctl: &SeriesControl) -> Result<CoeffVector> {
    cfg.validate()?;
    ctl.validate()?;
    let sys = &cfg.sys;
    let m = sys.m;
    let mf = f64::from(m);
    let alpha = sys.alpha;
    let delta = sys.delta();
    let ratio = series_ratio(cfg);
    if ratio >= 1.0 {
        return Err(Error::Domain(format!(
            "series diverges: tau (r_0/R)^alpha = {ratio} must be < 1"
        )));
    }
    let inv_spacing = 1.0 / sys.spacing_ratio;
    let s = cfg.s();

    let series_pre = PI * cfg.big_r * cfg.big_r * cfg.lambda_b * inv_spacing / alpha;
    let xi_term = delta * cfg.lambda_b * inv_spacing
        * gamma_fn(-delta)
        * (ln_gamma(mf + delta) - ln_gamma(mf)).exp()
        * cfg.tau.powf(delta)
        * cfg.r_0
        * cfg.r_0
        * xi(alpha)?;
    let noise = s * sys.noise_ratio();
    let ln_ratio = ratio.ln();

    let mut c = Vec::with_capacity(m as usize);
    let mut k_fact = 1.0;
    for k in 0..m {
        if k > 0 {
            k_fact *= f64::from(k);
        }
        let mut sum = 0.0;
        let mut converged = ratio == 0.0;
        let start = k.max(1);
        for (n, p) in (start..).enumerate() {
            if converged || n >= ctl.max_terms {
                break;
            }
            let pf = f64::from(p);
            let magnitude = (pf * ln_ratio + ln_gamma(mf + pf) - ln_gamma(mf) - ln_gamma(pf - f64::from(k) + 1.0)).exp()
                * eulerian_over_factorial(2 * p - 1, i64::from(p) - 1)
                / (pf - delta);
            let term = if p % 2 == 0 { magnitude } else { -magnitude };
            sum += term;
            if n >= 2 && term.abs() <= ctl.stop_rel * sum.abs() {
                converged = true;
            }
        }
        if !converged {
            return Err(Error::Convergence(format!(
                "coefficient series for c_{k} did not converge within {} terms (ratio {ratio})",
                ctl.max_terms
            )));
        }
        let mut bracket = series_pre * sum - xi_term * falling_factorial(delta, k);
        if k <= 1 {
            bracket += noise;
        }
        let sign = if k % 2 == 0 { -1.0 } else { 1.0 };
        c.push(bracket * sign / k_fact);
    }
    CoeffVector::new(c, s, m)
}

/// Analytic coverage `||exp(C_M / N_t)||_1`, a tight lower bound for the sinc pattern.
pub fn coverage_adhoc(cfg: &AdHocConfig) -> Result<f64> {
    coverage_adhoc_with(cfg, &SeriesControl::default())
}

pub fn coverage_adhoc_with(cfg: &AdHocConfig, ctl: &SeriesControl) -> Result<f64> {
    let cv = coeffs_adhoc_sinc(cfg, ctl)?;
    coverage_from_coeffs(&cv.scaled(1.0 / f64::from(cfg.sys.n_t)))
}

/// `(c_0, beta_1..beta_{M-1})` with coverage `e^{c_0 t} (1 + sum beta_n t^n)`, `t = 1/N_t`.
pub fn coverage_poly_form(cfg: &AdHocConfig) -> Result<(f64, Vec<f64>)> {
    let cv = coeffs_adhoc_sinc(cfg, &SeriesControl::default())?;
    Ok((cv.c[0], nilpotent_norm_coeffs(&cv)))
}

/// Large-array outage `mu / N_t` with `mu = -sum c_n`.
pub fn asymptotic_outage_adhoc(cfg: &AdHocConfig) -> Result<f64> {
    let cv = coeffs_adhoc_sinc(cfg, &SeriesControl::default())?;
    let mu = cv.mu();
    if !(mu > 0.0) {
        return Err(Error::Validity(format!("outage slope mu = {mu} must be positive")));
    }
    Ok(mu / f64::from(cfg.sys.n_t))
}
