//! Generalized exponential integral `E_p(z) = int_1^inf t^-p e^-zt dt` for real order.

use statrs::function::gamma::gamma;

use crate::error::{domain, Result};
use crate::quad::{integrate_to_infinity, QuadratureSpec};

const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;
const SERIES_MAX_Z: f64 = 1.5;
const MAX_TERMS: usize = 10_000;

/// `E_p(z)` for any real `p` and `z >= 0`.
///
/// `z = 0` is only defined for `p > 1`, where the value is `1/(p-1)`.
pub fn gen_exp_integral(p: f64, z: f64) -> Result<f64> {
    if !(z >= 0.0) || !p.is_finite() {
        return domain(format!("E_p(z) requires z >= 0 and finite p (p={p}, z={z})"));
    }
    if z == 0.0 {
        if p > 1.0 {
            return Ok(1.0 / (p - 1.0));
        }
        return domain(format!("E_p(0) diverges for p <= 1 (p={p})"));
    }
    if z > 700.0 + p.abs() {
        return Ok(0.0);
    }
    let nearest = p.round();
    let frac = (p - nearest).abs();
    if frac < 1e-12 {
        return Ok(integer_order(nearest as i64, z));
    }
    if z > SERIES_MAX_Z {
        return Ok(continued_fraction(p, z));
    }
    if frac < 1e-3 {
        // Gamma(1-p) and the n = p-1 series term nearly cancel; go through the integral.
        return by_quadrature(p, z);
    }
    Ok(noninteger_series(p, z))
}

/// Direct adaptive quadrature of the defining integral.
pub(crate) fn by_quadrature(p: f64, z: f64) -> Result<f64> {
    let spec = QuadratureSpec::default().with_tol(1e-300, 1e-13);
    let scale = (-z).exp() / z;
    // t = 1 + u / z puts the exponential decay on a unit scale
    let (v, _) = integrate_to_infinity(|u| (1.0 + u / z).powf(-p) * (-u).exp(), 0.0, &spec)?;
    Ok(v * scale)
}

fn noninteger_series(p: f64, z: f64) -> f64 {
    // E_p(z) = Gamma(1-p) z^(p-1) - sum_n (-z)^n / (n! (n+1-p))
    let mut sum = 0.0;
    let mut term = 1.0;
    for n in 0..MAX_TERMS {
        let contrib = term / (n as f64 + 1.0 - p);
        sum += contrib;
        if n > 2 && contrib.abs() <= 1e-17 * sum.abs().max(1e-300) {
            break;
        }
        term *= -z / (n as f64 + 1.0);
    }
    gamma(1.0 - p) * z.powf(p - 1.0) - sum
}

fn continued_fraction(p: f64, z: f64) -> f64 {
    // modified Lentz evaluation of the Laplace continued fraction
    let tiny = 1e-300;
    let mut b = z + p;
    let mut c = 1.0 / tiny;
    let mut d = if b.abs() < tiny { 1.0 / tiny } else { 1.0 / b };
    let mut h = d;
    for i in 1..MAX_TERMS {
        let fi = i as f64;
        let an = -fi * (p - 1.0 + fi);
        b += 2.0;
        d = an * d + b;
        if d.abs() < tiny {
            d = tiny;
        }
        c = b + an / c;
        if c.abs() < tiny {
            c = tiny;
        }
        d = 1.0 / d;
        let del = c * d;
        h *= del;
        if (del - 1.0).abs() < 1e-16 {
            break;
        }
    }
    h * (-z).exp()
}

fn integer_order(n: i64, z: f64) -> f64 {
    if n <= 0 {
        // E_0 = e^-z / z and E_-m = (e^-z + m E_-(m-1)) / z
        let ez = (-z).exp();
        let mut e = ez / z;
        for m in 1..=(-n) {
            e = (ez + m as f64 * e) / z;
        }
        return e;
    }
    if z > SERIES_MAX_Z {
        return continued_fraction(n as f64, z);
    }
    let nm1 = n - 1;
    let mut ans = if nm1 != 0 {
        1.0 / nm1 as f64
    } else {
        -z.ln() - EULER_GAMMA
    };
    let mut fact = 1.0;
    for i in 1..MAX_TERMS as i64 {
        fact *= -z / i as f64;
        let del = if i != nm1 {
            -fact / (i - nm1) as f64
        } else {
            let psi = -EULER_GAMMA + (1..=nm1).map(|k| 1.0 / k as f64).sum::<f64>();
            fact * (-z.ln() + psi)
        };
        ans += del;
        if del.abs() < ans.abs() * 1e-17 {
            break;
        }
    }
    ans
}
