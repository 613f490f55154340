//! The constant `xi(alpha) = int_0^inf |sin x / x|^(4/alpha) dx`.
//!
//! The integrand decays only like `x^(-4/alpha)`, which for `alpha` near 3 is
//! barely integrable. The first `XI_PANELS` periods are integrated panel by
//! panel; the remaining periods are folded onto a single period, where the
//! sum `sum_{n >= N} (u + n pi)^-q` equals `pi^-q zeta(q, N + u/pi)` (Hurwitz
//! zeta), so the tail is itself a smooth one-period integral.

use std::collections::HashMap;
use std::f64::consts::PI;
use std::sync::{Mutex, OnceLock};

use crate::error::{domain, Result};
use crate::quad::{integrate, QuadratureSpec};

pub const XI_PANELS: usize = 64;

static XI_CACHE: OnceLock<Mutex<HashMap<u64, f64>>> = OnceLock::new();

/// `xi(alpha)` for `alpha in (2, 3)`, memoized per `alpha`.
pub fn xi(alpha: f64) -> Result<f64> {
    if !(alpha > 2.0 && alpha < 3.0) {
        return domain(format!("xi requires alpha in (2, 3), got {alpha}"));
    }
    let cache = XI_CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(&v) = cache.lock().expect("xi cache poisoned").get(&alpha.to_bits()) {
        return Ok(v);
    }
    let v = xi_uncached(alpha, XI_PANELS)?;
    cache
        .lock()
        .expect("xi cache poisoned")
        .insert(alpha.to_bits(), v);
    Ok(v)
}

pub(crate) fn xi_uncached(alpha: f64, panels: usize) -> Result<f64> {
    let q = 4.0 / alpha;
    let spec = QuadratureSpec::default().with_tol(1e-15, 1e-13);
    let mut head = 0.0;
    for n in 0..panels {
        let a = n as f64 * PI;
        let (v, _) = integrate(
            |x: f64| {
                if x == 0.0 {
                    1.0
                } else {
                    (x.sin() / x).abs().powf(q)
                }
            },
            a,
            a + PI,
            &spec,
        )?;
        head += v;
    }
    let start = panels as f64;
    let (tail, _) = integrate(
        |u: f64| u.sin().abs().powf(q) * hurwitz_zeta(q, start + u / PI),
        0.0,
        PI,
        &spec,
    )?;
    Ok(head + tail * PI.powf(-q))
}

/// Hurwitz zeta `zeta(s, a)` for `s > 1` and `a >= 10` by Euler-Maclaurin.
pub(crate) fn hurwitz_zeta(s: f64, a: f64) -> f64 {
    debug_assert!(s > 1.0 && a >= 10.0);
    // B_2j / (2j)!
    const B_OVER_FACT: [f64; 6] = [
        1.0 / 12.0,
        -1.0 / 720.0,
        1.0 / 30_240.0,
        -1.0 / 1_209_600.0,
        1.0 / 47_900_160.0,
        -691.0 / 1_307_674_368_000.0,
    ];
    let mut sum = a.powf(1.0 - s) / (s - 1.0) + 0.5 * a.powf(-s);
    // rising product s (s+1) ... (s+2j-2) times a^(-s-2j+1)
    let mut rising = s;
    let mut apow = a.powf(-s - 1.0);
    for (j, b) in B_OVER_FACT.iter().enumerate() {
        sum += b * rising * apow;
        let m = 2.0 * j as f64;
        rising *= (s + m + 1.0) * (s + m + 2.0);
        apow /= a * a;
    }
    sum
}
