//! Gauss and generalized hypergeometric functions on the non-positive real axis.
//!
//! `J_k(x) = 3F2(k+1/2, k-delta, k+M; k+1, k+1-delta; x)` is needed for
//! arguments far below -1, where its power series diverges. It is continued
//! through the Euler integral over the `(k+1/2, k+1)` parameter pair; with
//! `t = sin^2 phi` that integral becomes
//!
//! ```text
//! J_k(x) = 2 Gamma(k+1) / (Gamma(k+1/2) sqrt(pi))
//!          * int_0^{pi/2} sin^(2k) phi  2F1(k-delta, k+M; k+1-delta; x sin^2 phi) dphi
//! ```
//!
//! whose integrand is smooth. The inner `2F1` has a non-positive argument and
//! is mapped into `[0, 1)` by the Pfaff transformation.

use std::cell::RefCell;
use std::f64::consts::PI;

use statrs::function::gamma::{gamma, ln_gamma};

use crate::error::{domain, Error, Result};
use crate::quad::{integrate, QuadratureSpec};

const SERIES_TERM_BUDGET: usize = 200_000;
const SERIES_REL_TOL: f64 = 1e-16;
/// Above this transformed argument the `1 - w` connection formula is used.
const CONNECTION_THRESHOLD: f64 = 0.75;

fn is_nonpositive_integer(x: f64) -> bool {
    x <= 0.0 && x == x.round()
}

/// `1 / Gamma(x)`, zero at the poles.
fn rgamma(x: f64) -> f64 {
    if is_nonpositive_integer(x) {
        0.0
    } else if x > 170.0 {
        (-ln_gamma(x)).exp()
    } else {
        1.0 / gamma(x)
    }
}

/// Plain power series of `2F1(a, b; c; w)` for `0 <= w < 1`.
pub(crate) fn hyp2f1_series(a: f64, b: f64, c: f64, w: f64, budget: usize) -> Result<f64> {
    let mut sum = 1.0;
    let mut term = 1.0;
    let mut quiet = 0;
    for n in 0..budget {
        let fnn = n as f64;
        term *= (a + fnn) * (b + fnn) / ((c + fnn) * (fnn + 1.0)) * w;
        if term == 0.0 {
            return Ok(sum);
        }
        sum += term;
        if term.abs() <= SERIES_REL_TOL * sum.abs() {
            quiet += 1;
            if quiet >= 3 {
                return Ok(sum);
            }
        } else {
            quiet = 0;
        }
    }
    Err(Error::Convergence(format!(
        "2F1({a}, {b}; {c}; {w}) series did not converge in {budget} terms"
    )))
}

/// `2F1(a, b; c; w)` for `0 <= w < 1`.
fn hyp2f1_unit(a: f64, b: f64, c: f64, w: f64) -> Result<f64> {
    let gap = c - a - b;
    let gap_is_integral = (gap - gap.round()).abs() < 1e-8;
    if w <= CONNECTION_THRESHOLD || gap_is_integral {
        return hyp2f1_series(a, b, c, w, SERIES_TERM_BUDGET);
    }
    // connection to 1 - w
    let v = 1.0 - w;
    let gc = gamma(c);
    let first = gc * gamma(gap) * rgamma(c - a) * rgamma(c - b);
    let second = gc * gamma(-gap) * rgamma(a) * rgamma(b);
    let mut out = 0.0;
    if first != 0.0 {
        out += first * hyp2f1_series(a, b, 1.0 - gap, v, SERIES_TERM_BUDGET)?;
    }
    if second != 0.0 {
        out += second * v.powf(gap) * hyp2f1_series(c - a, c - b, 1.0 + gap, v, SERIES_TERM_BUDGET)?;
    }
    Ok(out)
}

/// Gauss hypergeometric `2F1(a, b; c; z)` for `z <= 0`.
///
/// Uses `2F1(a,b;c;z) = (1-z)^-b 2F1(c-a, b; c; z/(z-1))`.
pub fn hyp2f1_neg(a: f64, b: f64, c: f64, z: f64) -> Result<f64> {
    if !(z <= 0.0) {
        return domain(format!("hyp2f1_neg requires z <= 0, got {z}"));
    }
    if is_nonpositive_integer(c) {
        return domain(format!("2F1 undefined for c = {c}"));
    }
    if z == 0.0 {
        return Ok(1.0);
    }
    let w = z / (z - 1.0);
    let inner = hyp2f1_unit(c - a, b, c, w)?;
    Ok((1.0 - z).powf(-b) * inner)
}

/// `J_k(x) = 3F2(k+1/2, k-delta, k+M; k+1, k+1-delta; x)` for `x <= 0`.
pub fn hyp3f2_j(k: u32, m: u32, delta: f64, x: f64) -> Result<f64> {
    hyp3f2_j_with(k, m, delta, x, &QuadratureSpec::default().with_tol(1e-15, 1e-12))
}

pub fn hyp3f2_j_with(k: u32, m: u32, delta: f64, x: f64, spec: &QuadratureSpec) -> Result<f64> {
    if !(x <= 0.0) {
        return domain(format!("J_k requires x <= 0, got {x}"));
    }
    if m < 1 {
        return domain("J_k requires M >= 1");
    }
    if delta == delta.round() || !delta.is_finite() {
        return domain(format!("J_k requires non-integer delta, got {delta}"));
    }
    if x == 0.0 {
        return Ok(1.0);
    }
    let kf = f64::from(k);
    let a = kf - delta;
    let b = kf + f64::from(m);
    let c = kf + 1.0 - delta;
    let failure: RefCell<Option<Error>> = RefCell::new(None);
    let integrand = |phi: f64| {
        let s2 = phi.sin().powi(2);
        match hyp2f1_neg(a, b, c, x * s2) {
            Ok(v) => s2.powi(k as i32) * v,
            Err(e) => {
                failure.borrow_mut().get_or_insert(e);
                0.0
            }
        }
    };
    let (integral, _) = integrate(integrand, 0.0, 0.5 * PI, spec)?;
    if let Some(e) = failure.into_inner() {
        return Err(e);
    }
    let prefactor = 2.0 * (ln_gamma(kf + 1.0) - ln_gamma(kf + 0.5)).exp() / PI.sqrt();
    Ok(prefactor * integral)
}
