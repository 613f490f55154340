//! Uniform linear array gain patterns.
//!
//! With analog beamforming aligned to the intended receiver, the normalized
//! gain towards another receiver is the Fejér kernel `G_act(x)` evaluated at
//! the spatial-angle offset `x`. For uniformly distributed angles of
//! departure the offset is equal in distribution to `(d/lambda) u` with
//! `u ~ U[-1, 1]`, which is how interferer gains are drawn.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PatternKind {
    /// Fejér kernel `sin^2(pi N x) / (N^2 sin^2(pi x))`.
    Actual,
    /// Squared sinc `sin^2(pi N x) / (pi N x)^2`.
    Sinc,
    /// `cos^2(pi N x / 2)` on the main lobe `|x| <= 1/N`, zero elsewhere.
    Cosine,
    /// Unit gain inside the half-power beamwidth, first side-lobe level outside.
    FlatTop,
}

impl PatternKind {
    pub const ALL: [PatternKind; 4] = [
        PatternKind::Actual,
        PatternKind::Sinc,
        PatternKind::Cosine,
        PatternKind::FlatTop,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PatternKind::Actual => "actual",
            PatternKind::Sinc => "sinc",
            PatternKind::Cosine => "cos",
            PatternKind::FlatTop => "flattop",
        }
    }
}

impl std::str::FromStr for PatternKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "actual" | "fejer" => Ok(PatternKind::Actual),
            "sinc" => Ok(PatternKind::Sinc),
            "cos" | "cosine" => Ok(PatternKind::Cosine),
            "flattop" | "flat-top" | "flat_top" => Ok(PatternKind::FlatTop),
            other => Err(Error::Config(format!("unknown antenna pattern '{other}'"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ArrayGeometry {
    pub n_t: u32,
    /// Element spacing over wavelength, `d / lambda`.
    pub spacing_ratio: f64,
}

impl ArrayGeometry {
    pub fn new(n_t: u32, spacing_ratio: f64) -> Result<Self> {
        let g = ArrayGeometry { n_t, spacing_ratio };
        g.validate()?;
        Ok(g)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n_t < 1 {
            return Err(Error::Config("array size must be >= 1".into()));
        }
        // wider spacing produces grating lobes
        if !(self.spacing_ratio > 0.0 && self.spacing_ratio <= 0.5) {
            return Err(Error::Config(format!(
                "spacing ratio must lie in (0, 0.5], got {}",
                self.spacing_ratio
            )));
        }
        Ok(())
    }
}

/// Fejér-kernel array gain.
pub fn actual_gain(n_t: u32, x: f64) -> f64 {
    let den = (PI * x).sin();
    if den.abs() < 1e-9 {
        return 1.0;
    }
    let n = f64::from(n_t);
    let num = (PI * n * x).sin();
    (num * num) / (n * n * den * den)
}

pub fn sinc_gain(n_t: u32, x: f64) -> f64 {
    if x == 0.0 {
        return 1.0;
    }
    let arg = PI * f64::from(n_t) * x;
    let s = arg.sin() / arg;
    s * s
}

pub fn cosine_gain(n_t: u32, x: f64) -> f64 {
    let n = f64::from(n_t);
    if x.abs() <= 1.0 / n {
        (0.5 * PI * n * x).cos().powi(2)
    } else {
        0.0
    }
}

/// Half-power beamwidth (in `x` units) and first side-lobe level of the
/// Fejér pattern, the two parameters of the flat-top approximation.
pub fn flat_top_params(geometry: &ArrayGeometry) -> Result<(f64, f64)> {
    let n_t = geometry.n_t;
    if n_t < 2 {
        return Err(Error::Domain("flat-top parameters need N_t >= 2".into()));
    }
    let first_null = 1.0 / f64::from(n_t);

    // G_act decreases from 1 to 0 on (0, 1/N): bisect for the half-power point
    let (mut lo, mut hi) = (0.0, first_null);
    while hi - lo > 1e-12 * first_null.max(1e-300) && hi - lo > 1e-15 {
        let mid = 0.5 * (lo + hi);
        if actual_gain(n_t, mid) > 0.5 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let hpbw = lo + hi;

    // golden-section search for the first side-lobe peak on (1/N, 2/N)
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let (mut a, mut b) = (first_null, (2.0 * first_null).min(0.5));
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    while (b - a).abs() > 1e-13 {
        if actual_gain(n_t, c) > actual_gain(n_t, d) {
            b = d;
        } else {
            a = c;
        }
        c = b - inv_phi * (b - a);
        d = a + inv_phi * (b - a);
    }
    let side_level = actual_gain(n_t, 0.5 * (a + b));
    Ok((hpbw, side_level))
}

/// An antenna pattern bound to an array, with flat-top parameters resolved.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Pattern {
    pub kind: PatternKind,
    pub geometry: ArrayGeometry,
    flat_top: Option<(f64, f64)>,
}

impl Pattern {
    pub fn new(kind: PatternKind, geometry: ArrayGeometry) -> Result<Self> {
        geometry.validate()?;
        let flat_top = match kind {
            PatternKind::FlatTop => Some(flat_top_params(&geometry)?),
            _ => None,
        };
        Ok(Pattern {
            kind,
            geometry,
            flat_top,
        })
    }

    /// Gain at pattern argument `x` (spatial-angle offset).
    pub fn gain(&self, x: f64) -> f64 {
        let n = self.geometry.n_t;
        match self.kind {
            PatternKind::Actual => actual_gain(n, x),
            PatternKind::Sinc => sinc_gain(n, x),
            PatternKind::Cosine => cosine_gain(n, x),
            PatternKind::FlatTop => {
                let (hpbw, side) = self.flat_top.expect("flat-top parameters resolved at construction");
                if x.abs() <= 0.5 * hpbw {
                    1.0
                } else {
                    side
                }
            }
        }
    }

    /// Gain of an interferer whose uniform beam variate is `u in [-1, 1]`.
    pub fn sample_gain(&self, u: f64) -> f64 {
        self.gain(self.geometry.spacing_ratio * u)
    }

    /// Points in `[0, d/lambda]` where the pattern is not smooth (nulls,
    /// support or step edges), including both ends.
    pub fn breakpoints(&self) -> Vec<f64> {
        let upper = self.geometry.spacing_ratio;
        let n = f64::from(self.geometry.n_t);
        let mut pts = vec![0.0];
        match self.kind {
            PatternKind::Actual | PatternKind::Sinc => {
                let mut j = 1.0;
                while j / n < upper {
                    pts.push(j / n);
                    j += 1.0;
                }
            }
            PatternKind::Cosine => {
                if 1.0 / n < upper {
                    pts.push(1.0 / n);
                }
            }
            PatternKind::FlatTop => {
                let half = 0.5 * self.flat_top.map(|p| p.0).unwrap_or(0.0);
                if half < upper {
                    pts.push(half);
                }
            }
        }
        pts.push(upper);
        pts
    }
}

/// Gain of `kind` at pattern argument `x`.
pub fn gain(kind: PatternKind, geometry: &ArrayGeometry, x: f64) -> Result<f64> {
    Ok(Pattern::new(kind, *geometry)?.gain(x))
}

/// `gain(kind, geometry, (d/lambda) u)` for a caller-supplied `u ~ U[-1, 1]`.
pub fn sample_interferer_gain(kind: PatternKind, geometry: &ArrayGeometry, u: f64) -> Result<f64> {
    Ok(Pattern::new(kind, *geometry)?.sample_gain(u))
}
