//! Network configurations and unit conversions.

use serde::{Deserialize, Serialize};

use crate::antenna::ArrayGeometry;
use crate::error::{Error, Result};

/// Linear value of a quantity given in dB.
pub fn db_to_linear(db: f64) -> f64 {
    10f64.powf(db / 10.0)
}

pub fn linear_to_db(x: f64) -> f64 {
    10.0 * x.log10()
}

/// Watts from dBm.
pub fn dbm_to_watts(dbm: f64) -> f64 {
    db_to_linear(dbm - 30.0)
}

/// LOS path-loss intercept, -61.4 dB.
pub const DEFAULT_BETA_DB: f64 = -61.4;
/// Thermal noise density in dBm/Hz at room temperature.
pub const THERMAL_NOISE_DBM_PER_HZ: f64 = -174.0;
pub const DEFAULT_BANDWIDTH_HZ: f64 = 1e9;
pub const DEFAULT_NOISE_FIGURE_DB: f64 = 10.0;

/// Noise power in watts over `bandwidth_hz` with receiver noise figure `nf_db`.
pub fn noise_power_watts(bandwidth_hz: f64, nf_db: f64) -> f64 {
    dbm_to_watts(THERMAL_NOISE_DBM_PER_HZ + 10.0 * bandwidth_hz.log10() + nf_db)
}

/// Physical-layer constants shared by ad hoc and cellular networks.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SystemParams {
    /// LOS path-loss exponent.
    pub alpha: f64,
    /// Path-loss intercept, linear.
    pub beta_intercept: f64,
    /// Nakagami parameter of every link.
    pub m: u32,
    /// Transmit array size.
    pub n_t: u32,
    /// Antenna spacing over wavelength.
    pub spacing_ratio: f64,
    /// Transmit power in watts.
    pub p_t: f64,
    /// Noise power in watts.
    pub sigma2: f64,
}

impl Default for SystemParams {
    fn default() -> Self {
        SystemParams {
            alpha: 2.1,
            beta_intercept: db_to_linear(DEFAULT_BETA_DB),
            m: 3,
            n_t: 64,
            spacing_ratio: 0.25,
            p_t: 1.0,
            sigma2: noise_power_watts(DEFAULT_BANDWIDTH_HZ, DEFAULT_NOISE_FIGURE_DB),
        }
    }
}

impl SystemParams {
    pub fn delta(&self) -> f64 {
        2.0 / self.alpha
    }

    pub fn geometry(&self) -> ArrayGeometry {
        ArrayGeometry {
            n_t: self.n_t,
            spacing_ratio: self.spacing_ratio,
        }
    }

    /// `sigma^2 / (beta P_t)`: noise relative to received power at unit distance,
    /// before the array gain.
    pub fn noise_ratio(&self) -> f64 {
        self.sigma2 / (self.beta_intercept * self.p_t)
    }

    /// Normalized noise `sigma^2 / (beta P_t N_t)`.
    pub fn sigma_n2(&self) -> f64 {
        self.noise_ratio() / f64::from(self.n_t)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.alpha > 2.0 && self.alpha < 3.0) {
            return Err(Error::Config(format!("alpha must lie in (2, 3), got {}", self.alpha)));
        }
        if self.m < 1 {
            return Err(Error::Config("Nakagami parameter M must be >= 1".into()));
        }
        if self.n_t < 1 {
            return Err(Error::Config("array size N_t must be >= 1".into()));
        }
        if !(self.spacing_ratio > 0.0 && self.spacing_ratio <= 0.5) {
            return Err(Error::Config(format!(
                "spacing ratio d/lambda must lie in (0, 0.5], got {}",
                self.spacing_ratio
            )));
        }
        for (name, v) in [("beta", self.beta_intercept), ("P_t", self.p_t)] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(Error::Config(format!("{name} must be positive, got {v}")));
            }
        }
        if !(self.sigma2 >= 0.0 && self.sigma2.is_finite()) {
            return Err(Error::Config(format!("noise power must be >= 0, got {}", self.sigma2)));
        }
        Ok(())
    }
}

/// Ad hoc (dipole) network: every transmitter has its receiver at distance `r_0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AdHocConfig {
    pub sys: SystemParams,
    /// Dipole distance in meters.
    pub r_0: f64,
    /// LOS ball radius in meters.
    pub big_r: f64,
    /// Transmitter density per square meter.
    pub lambda_b: f64,
    /// SINR threshold, linear.
    pub tau: f64,
}

impl Default for AdHocConfig {
    fn default() -> Self {
        AdHocConfig {
            sys: SystemParams::default(),
            r_0: 25.0,
            big_r: 200.0,
            lambda_b: 1e-3,
            tau: db_to_linear(5.0),
        }
    }
}

impl AdHocConfig {
    /// Laplace variable `s = M tau r_0^alpha`.
    pub fn s(&self) -> f64 {
        f64::from(self.sys.m) * self.tau * self.r_0.powf(self.sys.alpha)
    }

    pub fn validate(&self) -> Result<()> {
        self.sys.validate()?;
        for (name, v) in [("r_0", self.r_0), ("R", self.big_r)] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(Error::Config(format!("{name} must be positive, got {v}")));
            }
        }
        if self.r_0 > self.big_r {
            return Err(Error::Config(format!(
                "dipole distance r_0 = {} exceeds the LOS radius R = {}",
                self.r_0, self.big_r
            )));
        }
        if !(self.lambda_b >= 0.0 && self.lambda_b.is_finite()) {
            return Err(Error::Config(format!("density must be >= 0, got {}", self.lambda_b)));
        }
        if !(self.tau >= 0.0 && self.tau.is_finite()) {
            return Err(Error::Config(format!("threshold must be >= 0, got {}", self.tau)));
        }
        Ok(())
    }
}

/// Cellular network: the typical user attaches to its nearest LOS base station.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CellularConfig {
    pub sys: SystemParams,
    pub big_r: f64,
    pub lambda_b: f64,
    pub tau: f64,
}

impl Default for CellularConfig {
    fn default() -> Self {
        CellularConfig {
            sys: SystemParams {
                n_t: 128,
                ..SystemParams::default()
            },
            big_r: 200.0,
            lambda_b: 1e-3,
            tau: db_to_linear(5.0),
        }
    }
}

impl CellularConfig {
    /// Probability that at least one base station lies inside the LOS ball.
    pub fn los_probability(&self) -> f64 {
        -(-std::f64::consts::PI * self.lambda_b * self.big_r * self.big_r).exp_m1()
    }

    pub fn validate(&self) -> Result<()> {
        self.sys.validate()?;
        if !(self.big_r > 0.0 && self.big_r.is_finite()) {
            return Err(Error::Config(format!("R must be positive, got {}", self.big_r)));
        }
        if !(self.lambda_b > 0.0 && self.lambda_b.is_finite()) {
            return Err(Error::Config(format!("density must be positive, got {}", self.lambda_b)));
        }
        if !(self.tau >= 0.0 && self.tau.is_finite()) {
            return Err(Error::Config(format!("threshold must be >= 0, got {}", self.tau)));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn db_round_trip() {
        assert!((db_to_linear(DEFAULT_BETA_DB) - 10f64.powf(-6.14)).abs() < 1e-20);
        for &x in &[-61.4, -10.0, 0.0, 5.0, 20.0] {
            assert!((linear_to_db(db_to_linear(x)) - x).abs() < 1e-12);
        }
    }

    #[test]
    fn default_noise_is_minus_74_dbm() {
        let n = noise_power_watts(1e9, 10.0);
        assert!((n - 10f64.powf(-10.4)).abs() < 1e-24);
    }

    #[test]
    fn validation() {
        assert!(AdHocConfig::default().validate().is_ok());
        assert!(CellularConfig::default().validate().is_ok());
        let a = AdHocConfig {
            r_0: 300.0,
            ..AdHocConfig::default()
        };
        assert!(a.validate().is_err());
        let mut c = CellularConfig::default();
        c.sys.spacing_ratio = 0.6;
        assert!(c.validate().is_err());
        c.sys.spacing_ratio = 0.25;
        c.sys.alpha = 3.0;
        assert!(c.validate().is_err());
    }
}
