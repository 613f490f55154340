//! Reference implementations used as oracles. They are deliberately written
//! from the defining integrals and series, independent of the library code.
#![allow(dead_code)]

use std::f64::consts::PI;

/// Gauss-Legendre nodes and weights on [-1, 1] by Newton iteration.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut x = vec![0.0; n];
    let mut w = vec![0.0; n];
    for i in 0..n {
        let mut z = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, z);
            for j in 2..=n {
                let p2 = ((2 * j - 1) as f64 * z * p1 - (j - 1) as f64 * p0) / j as f64;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (z * p1 - p0) / (z * z - 1.0);
            let dz = p1 / dp;
            z -= dz;
            if dz.abs() < 1e-16 {
                break;
            }
        }
        x[i] = z;
        w[i] = 2.0 / ((1.0 - z * z) * dp * dp);
    }
    (x, w)
}

/// Composite Gauss-Legendre over consecutive breakpoints.
pub fn integrate_panels<F: Fn(f64) -> f64>(f: F, breaks: &[f64], order: usize) -> f64 {
    let (x, w) = gauss_legendre(order);
    breaks
        .windows(2)
        .map(|ab| {
            let (a, b) = (ab[0], ab[1]);
            let h = 0.5 * (b - a);
            let c = 0.5 * (a + b);
            x.iter().zip(&w).map(|(xi, wi)| wi * f(c + h * xi)).sum::<f64>() * h
        })
        .sum()
}

/// Geometric breakpoints from `lo` to `hi` with `0` prepended.
pub fn geometric_breaks(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    let mut b = vec![0.0];
    let r = (hi / lo).powf(1.0 / n as f64);
    b.extend((0..=n).map(|i| lo * r.powi(i as i32)));
    b
}

/// `E_p(z) = e^{-z} / z * int_0^inf e^{-u} (1 + u/z)^{-p} du` for z > 0.
pub fn expint(p: f64, z: f64) -> f64 {
    let breaks = geometric_breaks(1e-12, 80.0, 120);
    (-z).exp() / z * integrate_panels(|u| (-u).exp() * (1.0 + u / z).powf(-p), &breaks, 20)
}

/// Lower incomplete gamma from `x^s e^{-x} sum x^n / (s (s+1) ... (s+n))`.
pub fn lower_gamma(s: f64, x: f64) -> f64 {
    let mut term = 1.0 / s;
    let mut sum = term;
    let mut n = 1.0;
    while term.abs() > 1e-18 * sum.abs() {
        term *= x / (s + n);
        sum += term;
        n += 1.0;
    }
    (s * x.ln() - x).exp() * sum
}

/// Direct `pFq` series for |x| < 1.
pub fn pfq_series(a: &[f64], b: &[f64], x: f64) -> f64 {
    let mut term = 1.0;
    let mut sum = 1.0;
    for n in 0..100_000 {
        let nf = n as f64;
        let num: f64 = a.iter().map(|ai| ai + nf).product();
        let den: f64 = b.iter().map(|bi| bi + nf).product();
        term *= num / den * x / (nf + 1.0);
        sum += term;
        if term.abs() < 1e-17 * sum.abs() && n > 5 {
            break;
        }
    }
    sum
}

/// `2F1(a, b; c; z)` for z <= 0 via the Pfaff transformation, which maps
/// the argument into [0, 1).
pub fn hyp2f1_nonpositive(a: f64, b: f64, c: f64, z: f64) -> f64 {
    let w = z / (z - 1.0);
    (1.0 - z).powf(-b) * pfq_series(&[c - a, b], &[c], w)
}

/// `J_k(x) = 3F2(k+1/2, k-delta, k+M; k+1, k+1-delta; x)` for x <= 0, from
/// the Euler integral over the pair (k-delta, k+1-delta):
/// `J = 1 + a int_0^1 t^{a-1} (F(x t) - 1) dt`, `a = k - delta`,
/// `F = 2F1(k+1/2, k+M; k+1; .)`. The substitution `t = u^{1/(a+1)}`
/// removes the endpoint singularity. For `a > 0` the subtraction is
/// skipped: `J = int_0^1 F(x u^{1/a}) du`, which keeps small values accurate.
pub fn hyp3f2_j(k: u32, m: u32, delta: f64, x: f64) -> f64 {
    let kf = f64::from(k);
    let a = kf - delta;
    let (a1, b1, c1) = (kf + 0.5, kf + f64::from(m), kf + 1.0);
    if a > 0.0 {
        let breaks = geometric_breaks(1e-10, 1.0, 80);
        return integrate_panels(|u| hyp2f1_nonpositive(a1, b1, c1, x * u.powf(1.0 / a)), &breaks, 20);
    }
    // F - 1, summed without cancellation near z = 0 where t^{a-1} is large
    let f_minus_one = |z: f64| {
        if z > -0.5 {
            let mut term = 1.0;
            let mut sum = 0.0;
            for n in 0..2000 {
                let nf = n as f64;
                term *= (a1 + nf) * (b1 + nf) / ((c1 + nf) * (nf + 1.0)) * z;
                sum += term;
                if term.abs() < 1e-18 * sum.abs() {
                    break;
                }
            }
            sum
        } else {
            hyp2f1_nonpositive(a1, b1, c1, z) - 1.0
        }
    };
    let p = 1.0 / (a + 1.0);
    let breaks = geometric_breaks(1e-8, 1.0, 60);
    let integral = integrate_panels(
        |u| {
            if u == 0.0 {
                return 0.0;
            }
            let t = u.powf(p);
            // t^{a-1} dt = p u^{p(a-1) + p - 1} du = p t^a / u du
            p * t.powf(a) / u * f_minus_one(x * t)
        },
        &breaks,
        20,
    );
    1.0 + a * integral
}

/// `int_0^inf (sin x / x)^{2p} dx` by panel quadrature over [0, K pi] plus
/// the mean-value tail.
pub fn sinc_power_integral(p: u32) -> f64 {
    let k = 2000;
    let breaks: Vec<f64> = (0..=k).map(|i| i as f64 * PI).collect();
    let body = integrate_panels(
        |x| if x == 0.0 { 1.0 } else { (x.sin() / x).powi(2 * p as i32) },
        &breaks,
        16,
    );
    let big_x = k as f64 * PI;
    // mean of sin^{2p} is C(2p, p) / 4^p
    let mut mean = 1.0;
    for j in 1..=p {
        mean *= (p + j) as f64 / j as f64 / 4.0;
    }
    body + mean / ((2 * p - 1) as f64 * big_x.powi(2 * p as i32 - 1))
}

/// `|sum_n e^{2 pi i n x}|^2 / N^2`: the array factor normalized to unit peak.
pub fn array_factor(n_t: u32, x: f64) -> f64 {
    let (mut re, mut im) = (0.0, 0.0);
    for n in 0..n_t {
        let ph = 2.0 * PI * f64::from(n) * x;
        re += ph.cos();
        im += ph.sin();
    }
    (re * re + im * im) / f64::from(n_t * n_t)
}

/// Dense `exp(C)` first column for the lower-triangular Toeplitz matrix with
/// first column `c`, by nalgebra's scaling-and-squaring Pade routine.
pub fn dense_toeplitz_exp_column(c: &[f64]) -> Vec<f64> {
    let m = c.len();
    let mat = nalgebra::DMatrix::from_fn(m, m, |i, j| if i >= j { c[i - j] } else { 0.0 });
    let e = mat.exp();
    (0..m).map(|i| e[(i, 0)]).collect()
}

pub fn rel_err(got: f64, want: f64) -> f64 {
    (got - want).abs() / want.abs().max(1e-300)
}
