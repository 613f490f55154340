//! Coverage through the lower-triangular Toeplitz matrix exponential.
//!
//! With gamma distributed signal power of integer shape `M`, the coverage
//! probability is the sum of the first `M` Taylor coefficients of
//! `exp(C(z))`, where `C(z) = sum c_k z^k` and
//! `c_k = (-s)^k / k! * eta^(k)(s)` are the scaled derivatives of the
//! log-Laplace transform of noise plus interference. Those coefficients form
//! the first column of `exp(C_M)` for the Toeplitz matrix `C_M` built from
//! `c_0..c_{M-1}`, and the coverage equals its induced l1-norm.

use std::cell::RefCell;

use crate::antenna::Pattern;
use crate::error::{domain, Error, Result};
use crate::quad::{integrate_with_breaks, GammaRule, QuadratureSpec};
use crate::specfun::{gen_exp_integral, ln_gamma};

/// Tolerance on the sign conditions of the coefficients.
pub const SIGN_TOL: f64 = 1e-9;
/// Overshoot above one that is silently clamped.
pub const CLAMP_TOL: f64 = 1e-8;
/// Overshoot above one that is reported as an error.
pub const OVERSHOOT_LIMIT: f64 = 1e-6;

/// First column `c_0..c_{M-1}` of the Toeplitz exponent together with the
/// Laplace variable it was evaluated at.
#[derive(Debug, Clone, PartialEq)]
pub struct CoeffVector {
    pub c: Vec<f64>,
    pub s: f64,
    pub m: u32,
}

impl CoeffVector {
    pub fn new(c: Vec<f64>, s: f64, m: u32) -> Result<Self> {
        let cv = CoeffVector { c, s, m };
        cv.validate()?;
        Ok(cv)
    }

    pub fn validate(&self) -> Result<()> {
        if self.m < 1 || self.c.len() != self.m as usize {
            return Err(Error::Validity(format!(
                "coefficient vector has {} entries for M = {}",
                self.c.len(),
                self.m
            )));
        }
        if self.c.iter().any(|v| !v.is_finite()) || !(self.s >= 0.0) {
            return Err(Error::Validity(format!("non-finite coefficients {:?}", self.c)));
        }
        let scale = self.c.iter().fold(1.0f64, |a, v| a.max(v.abs()));
        if self.c[0] > SIGN_TOL * scale {
            return Err(Error::Validity(format!("c_0 = {} must be <= 0", self.c[0])));
        }
        for (k, &v) in self.c.iter().enumerate().skip(1) {
            if v < -SIGN_TOL * scale {
                return Err(Error::Validity(format!("c_{k} = {v} must be >= 0")));
            }
        }
        Ok(())
    }

    /// The same vector multiplied by `t`, e.g. `t = 1/N_t`.
    pub fn scaled(&self, t: f64) -> CoeffVector {
        CoeffVector {
            c: self.c.iter().map(|v| v * t).collect(),
            s: self.s,
            m: self.m,
        }
    }

    /// `-sum c_n`, the slope of the outage at vanishing `t`.
    pub fn mu(&self) -> f64 {
        -self.c.iter().sum::<f64>()
    }
}

/// First column of `exp(C_M)` by the Taylor-coefficient recursion
/// `x_n = sum_{i<n} (n-i)/n c_{n-i} x_i`.
pub fn ltt_exp_first_column(cv: &CoeffVector) -> Vec<f64> {
    let c = &cv.c;
    let mut x = Vec::with_capacity(c.len());
    if c.is_empty() {
        return x;
    }
    x.push(c[0].exp());
    for n in 1..c.len() {
        let nf = n as f64;
        let v: f64 = (0..n).map(|i| (nf - i as f64) / nf * c[n - i] * x[i]).sum();
        x.push(v);
    }
    x
}

/// Coverage `||exp(C_M)||_1` and whether a small overshoot above one was clamped.
pub fn coverage_from_coeffs_flagged(cv: &CoeffVector) -> Result<(f64, bool)> {
    let p: f64 = ltt_exp_first_column(cv).iter().map(|v| v.abs()).sum();
    if !p.is_finite() {
        return Err(Error::Validity(format!("coverage is not finite for {:?}", cv.c)));
    }
    if p > 1.0 + OVERSHOOT_LIMIT {
        return Err(Error::Validity(format!(
            "coverage {p} exceeds one; the coefficient series is likely truncated too early"
        )));
    }
    if p > 1.0 {
        return Ok((1.0, p > 1.0 + CLAMP_TOL));
    }
    Ok((p, false))
}

pub fn coverage_from_coeffs(cv: &CoeffVector) -> Result<f64> {
    coverage_from_coeffs_flagged(cv).map(|(p, _)| p)
}

/// `beta_n = ||(C_M - c_0 I)^n||_1 / n!` for `n = 1..M-1`.
pub fn nilpotent_norm_coeffs(cv: &CoeffVector) -> Vec<f64> {
    let m = cv.c.len();
    let mut strict = cv.c.clone();
    if m == 0 {
        return Vec::new();
    }
    strict[0] = 0.0;
    let mut power = strict.clone();
    let mut betas = Vec::with_capacity(m.saturating_sub(1));
    let mut fact = 1.0;
    for n in 1..m {
        fact *= n as f64;
        betas.push(power.iter().map(|v| v.abs()).sum::<f64>() / fact);
        power = toeplitz_product(&power, &strict);
    }
    betas
}

/// First column of the product of two lower-triangular Toeplitz matrices.
fn toeplitz_product(a: &[f64], b: &[f64]) -> Vec<f64> {
    (0..a.len())
        .map(|n| (0..=n).map(|i| a[i] * b[n - i]).sum())
        .collect()
}

/// Evaluates `e^{c_0 t} (1 + sum beta_n t^n)`.
pub fn poly_form_value(c0: f64, betas: &[f64], t: f64) -> f64 {
    let poly: f64 = betas.iter().rev().fold(0.0, |acc, b| (acc + b) * t);
    (c0 * t).exp() * (1.0 + poly)
}

/// Expectations over the composite interferer gain `g`.
pub trait GainDistribution {
    /// `E[g^k E_q(a g)]`.
    fn mixed_moment(&self, k: u32, q: f64, a: f64) -> Result<f64>;
    /// `E[g^p]`.
    fn plain_moment(&self, p: f64) -> Result<f64>;
}

/// `g^k E_q(a g)` including its limits at `g = 0`.
fn mixed_term(g: f64, k: u32, q: f64, a: f64) -> Result<f64> {
    if g == 0.0 || a == 0.0 {
        if k == 0 {
            return gen_exp_integral(q, 0.0);
        }
        if g == 0.0 && k as f64 + q - 1.0 > 0.0 {
            return Ok(0.0);
        }
    }
    Ok(g.powi(k as i32) * gen_exp_integral(q, a * g)?)
}

/// A deterministic gain, mostly useful for checks.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FixedGain(pub f64);

impl GainDistribution for FixedGain {
    fn mixed_moment(&self, k: u32, q: f64, a: f64) -> Result<f64> {
        mixed_term(self.0, k, q, a)
    }

    fn plain_moment(&self, p: f64) -> Result<f64> {
        Ok(if p == 0.0 { 1.0 } else { self.0.powf(p) })
    }
}

/// `g = rho^2 G(pattern, (d/lambda) theta)` with `rho^2 ~ Gamma(M, 1/M)` and
/// `theta ~ U[-1, 1]`, integrated by a Gauss rule in the fading variable and
/// an adaptive rule over the angle split at the pattern nulls.
#[derive(Debug, Clone)]
pub struct PatternGain {
    pattern: Pattern,
    m: u32,
    rule: GammaRule,
    spec: QuadratureSpec,
}

pub const DEFAULT_GAMMA_ORDER: usize = 40;

impl PatternGain {
    pub fn new(pattern: Pattern, m: u32) -> Result<Self> {
        Self::with_options(pattern, m, DEFAULT_GAMMA_ORDER, QuadratureSpec::default().with_tol(1e-14, 1e-10))
    }

    pub fn with_options(pattern: Pattern, m: u32, order: usize, spec: QuadratureSpec) -> Result<Self> {
        if m < 1 {
            return domain("Nakagami parameter must be >= 1");
        }
        spec.validate()?;
        Ok(PatternGain {
            pattern,
            m,
            rule: GammaRule::new(order, f64::from(m))?,
            spec,
        })
    }

    /// Angle average of `h(G(x))` with `x` uniform on `[0, d/lambda]`.
    fn angle_average<H: Fn(f64) -> Result<f64>>(&self, h: H) -> Result<f64> {
        let failure: RefCell<Option<Error>> = RefCell::new(None);
        let breaks = self.pattern.breakpoints();
        let upper = self.pattern.geometry.spacing_ratio;
        let (v, _) = integrate_with_breaks(
            |x| match h(self.pattern.gain(x)) {
                Ok(v) => v,
                Err(e) => {
                    failure.borrow_mut().get_or_insert(e);
                    0.0
                }
            },
            &breaks,
            &self.spec,
        )?;
        if let Some(e) = failure.into_inner() {
            return Err(e);
        }
        Ok(v / upper)
    }
}

impl GainDistribution for PatternGain {
    fn mixed_moment(&self, k: u32, q: f64, a: f64) -> Result<f64> {
        let scale = 1.0 / f64::from(self.m);
        self.angle_average(|gain| {
            if gain == 0.0 {
                return mixed_term(0.0, k, q, a);
            }
            let mut acc = 0.0;
            for (&x, &w) in self.rule.nodes.iter().zip(&self.rule.weights) {
                acc += w * mixed_term(scale * x * gain, k, q, a)?;
            }
            Ok(acc)
        })
    }

    fn plain_moment(&self, p: f64) -> Result<f64> {
        if p == 0.0 {
            return Ok(1.0);
        }
        let m = f64::from(self.m);
        let fading = (ln_gamma(m + p) - ln_gamma(m) - p * m.ln()).exp();
        Ok(fading * self.angle_average(|gain| Ok(gain.powf(p)))?)
    }
}

/// Coefficients `c_0..c_{M-1}` for an arbitrary gain distribution, with
/// interferers in the annulus `kappa <= |x| <= R` and normalized noise `sigma_n2`.
#[allow(clippy::too_many_arguments)]
pub fn coeffs_general(
    gd: &dyn GainDistribution,
    s: f64,
    kappa: f64,
    big_r: f64,
    lambda_b: f64,
    sigma_n2: f64,
    alpha: f64,
    m: u32,
) -> Result<CoeffVector> {
    if !(alpha > 2.0 && alpha < 3.0) {
        return domain(format!("alpha must lie in (2, 3), got {alpha}"));
    }
    if !(kappa >= 0.0 && kappa < big_r) {
        return domain(format!("need 0 <= kappa < R, got kappa = {kappa}, R = {big_r}"));
    }
    if !(s >= 0.0) || !(lambda_b >= 0.0) || !(sigma_n2 >= 0.0) || m < 1 {
        return domain("s, density and noise must be nonnegative and M >= 1");
    }
    let delta = 2.0 / alpha;
    let pl = std::f64::consts::PI * lambda_b;
    let a_r = s * big_r.powf(-alpha);
    let a_k = if kappa > 0.0 { s * kappa.powf(-alpha) } else { 0.0 };

    let mut c = Vec::with_capacity(m as usize);
    // c_0 = eta(s)
    let outer = big_r * big_r * gd.mixed_moment(0, 1.0 + delta, a_r)?;
    let inner = if kappa > 0.0 {
        kappa * kappa * gd.mixed_moment(0, 1.0 + delta, a_k)?
    } else {
        0.0
    };
    c.push(-s * sigma_n2 - pl * (big_r * big_r - kappa * kappa + delta * inner - delta * outer));

    let mut log_fact = 0.0;
    for k in 1..m {
        let kf = f64::from(k);
        log_fact += kf.ln();
        let q = 1.0 + delta - kf;
        let outer = big_r.powf(2.0 - alpha * kf) * gd.mixed_moment(k, q, a_r)?;
        // the kappa term vanishes as kappa -> 0
        let inner = if kappa > 0.0 {
            kappa.powf(2.0 - alpha * kf) * gd.mixed_moment(k, q, a_k)?
        } else {
            0.0
        };
        let pre = delta * pl * (kf * s.ln() - log_fact).exp();
        let mut v = if s == 0.0 { 0.0 } else { pre * (outer - inner) };
        if k == 1 {
            v += s * sigma_n2;
        }
        c.push(v);
    }
    CoeffVector::new(c, s, m)
}
