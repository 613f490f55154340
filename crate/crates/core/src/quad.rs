//! Numerical integration used throughout the analytical formulas.
//!
//! Adaptive Gauss-Kronrod (7/15) bisection on finite intervals, a mapped
//! variant for `[a, inf)`, and fixed-order generalized Gauss-Laguerre rules
//! for expectations over gamma-distributed fading.

use std::collections::BinaryHeap;

use nalgebra::{DMatrix, SymmetricEigen};

use crate::error::{Error, Result};

/// Tolerances and subdivision budget for adaptive integration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSpec {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_subdivisions: usize,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        QuadratureSpec {
            abs_tol: 1e-10,
            rel_tol: 1e-8,
            max_subdivisions: 2000,
        }
    }
}

impl QuadratureSpec {
    pub fn new(abs_tol: f64, rel_tol: f64, max_subdivisions: usize) -> Result<Self> {
        let spec = QuadratureSpec {
            abs_tol,
            rel_tol,
            max_subdivisions,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.abs_tol > 0.0 && self.rel_tol > 0.0) {
            return Err(Error::Domain(format!(
                "quadrature tolerances must be positive (abs {}, rel {})",
                self.abs_tol, self.rel_tol
            )));
        }
        if self.max_subdivisions < 1 {
            return Err(Error::Domain("max_subdivisions must be >= 1".into()));
        }
        Ok(())
    }

    /// Same budget with different tolerances.
    pub fn with_tol(self, abs_tol: f64, rel_tol: f64) -> Self {
        QuadratureSpec {
            abs_tol,
            rel_tol,
            ..self
        }
    }
}

// Kronrod 15-point abscissae and weights, with the embedded 7-point Gauss weights.
const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.000_000_000_000_000_0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_8,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

#[derive(Debug, Clone, Copy)]
struct Segment {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Segment {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}
impl Eq for Segment {}
impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Segment {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.error.total_cmp(&other.error)
    }
}

fn gk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> Segment {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut fv = [(0.0, 0.0); 7];
    let mut kronrod = fc * WGK[7];
    let mut gauss = fc * WG[3];
    let mut res_abs = fc.abs() * WGK[7];
    for j in 0..7 {
        let dx = half * XGK[j];
        let (f1, f2) = (f(center - dx), f(center + dx));
        fv[j] = (f1, f2);
        kronrod += WGK[j] * (f1 + f2);
        res_abs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            gauss += WG[j / 2] * (f1 + f2);
        }
    }
    let mean = 0.5 * kronrod;
    let mut res_asc = WGK[7] * (fc - mean).abs();
    for j in 0..7 {
        res_asc += WGK[j] * ((fv[j].0 - mean).abs() + (fv[j].1 - mean).abs());
    }
    let value = kronrod * half;
    let error = rescale_error(
        ((kronrod - gauss) * half).abs(),
        res_abs * half.abs(),
        res_asc * half.abs(),
    );
    Segment { a, b, value, error }
}

// QUADPACK's pessimistic rescaling of the raw Kronrod-Gauss difference
fn rescale_error(err: f64, res_abs: f64, res_asc: f64) -> f64 {
    let mut scaled = err;
    if res_asc != 0.0 && scaled != 0.0 {
        let scale = (200.0 * scaled / res_asc).powf(1.5);
        scaled = if scale < 1.0 { res_asc * scale } else { res_asc };
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        let min_err = 50.0 * f64::EPSILON * res_abs;
        if min_err > scaled {
            scaled = min_err;
        }
    }
    scaled
}

/// Adaptive integral of `f` over `[a, b]`.
///
/// Returns the estimate and the accumulated error bound. Non-finite samples
/// abort with a quadrature error.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, spec: &QuadratureSpec) -> Result<(f64, f64)> {
    integrate_with_breaks(f, &[a, b], spec)
}

/// Adaptive integral over consecutive panels `[breaks[i], breaks[i+1]]`.
///
/// Break points are where the integrand is known to be non-smooth (pattern
/// nulls, support edges).
pub fn integrate_with_breaks<F: Fn(f64) -> f64>(
    f: F,
    breaks: &[f64],
    spec: &QuadratureSpec,
) -> Result<(f64, f64)> {
    if breaks.len() < 2 {
        return Err(Error::Domain("integration needs at least two break points".into()));
    }
    let mut heap = BinaryHeap::new();
    let mut total = 0.0;
    let mut err = 0.0;
    for w in breaks.windows(2) {
        if w[1] == w[0] {
            continue;
        }
        let seg = gk15(&f, w[0], w[1]);
        total += seg.value;
        err += seg.error;
        heap.push(seg);
    }
    if !total.is_finite() {
        return Err(Error::Quadrature("integrand produced a non-finite value".into()));
    }
    let mut splits = 0;
    while err > spec.abs_tol.max(spec.rel_tol * total.abs()) {
        if splits >= spec.max_subdivisions {
            return Err(Error::Quadrature(format!(
                "tolerance not met after {} subdivisions (estimate {total:e}, error {err:e})",
                spec.max_subdivisions
            )));
        }
        let worst = match heap.pop() {
            Some(s) => s,
            None => break,
        };
        let mid = 0.5 * (worst.a + worst.b);
        if mid <= worst.a || mid >= worst.b {
            // interval at floating-point resolution: accept its contribution as is
            heap.push(Segment { error: 0.0, ..worst });
            err -= worst.error;
            continue;
        }
        let left = gk15(&f, worst.a, mid);
        let right = gk15(&f, mid, worst.b);
        total += left.value + right.value - worst.value;
        err += left.error + right.error - worst.error;
        if !total.is_finite() {
            return Err(Error::Quadrature("integrand produced a non-finite value".into()));
        }
        heap.push(left);
        heap.push(right);
        splits += 1;
        // recompute the error sum periodically to avoid cancellation drift
        if splits % 64 == 0 {
            err = heap.iter().map(|s| s.error).sum();
        }
    }
    Ok((total, err))
}

/// Integral of `f` over `[a, inf)` via the map `x = a + u / (1 - u)`.
pub fn integrate_to_infinity<F: Fn(f64) -> f64>(f: F, a: f64, spec: &QuadratureSpec) -> Result<(f64, f64)> {
    let g = |u: f64| {
        if u >= 1.0 {
            return 0.0;
        }
        let one_minus = 1.0 - u;
        let x = a + u / one_minus;
        let v = f(x) / (one_minus * one_minus);
        if v.is_finite() {
            v
        } else {
            0.0
        }
    };
    integrate(g, 0.0, 1.0, spec)
}

/// Nodes and weights of an `n`-point Gauss rule for the weight
/// `x^(shape-1) e^(-x)` on `[0, inf)`, normalized so the weights sum to one.
///
/// Expectations over `Gamma(shape, scale)` follow as
/// `sum w_i f(scale * x_i)`. The rule is exact for polynomials of degree
/// up to `2n - 1`.
#[derive(Debug, Clone)]
pub struct GammaRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl GammaRule {
    pub fn new(order: usize, shape: f64) -> Result<Self> {
        if order == 0 {
            return Err(Error::Domain("gamma rule order must be >= 1".into()));
        }
        if !(shape > 0.0) {
            return Err(Error::Domain(format!("gamma shape must be positive, got {shape}")));
        }
        // Golub-Welsch on the Jacobi matrix of generalized Laguerre polynomials
        // with parameter shape - 1.
        let alpha = shape - 1.0;
        let mut jac = DMatrix::<f64>::zeros(order, order);
        for i in 0..order {
            let fi = i as f64;
            jac[(i, i)] = 2.0 * fi + alpha + 1.0;
            if i + 1 < order {
                let off = ((fi + 1.0) * (fi + 1.0 + alpha)).sqrt();
                jac[(i, i + 1)] = off;
                jac[(i + 1, i)] = off;
            }
        }
        let eig = SymmetricEigen::new(jac);
        let mut pairs: Vec<(f64, f64)> = (0..order)
            .map(|i| {
                let v0 = eig.eigenvectors[(0, i)];
                (eig.eigenvalues[i], v0 * v0)
            })
            .collect();
        pairs.sort_by(|a, b| a.0.total_cmp(&b.0));
        let norm: f64 = pairs.iter().map(|p| p.1).sum();
        Ok(GammaRule {
            nodes: pairs.iter().map(|p| p.0.max(0.0)).collect(),
            weights: pairs.iter().map(|p| p.1 / norm).collect(),
        })
    }

    /// `E[f(X)]` for `X ~ Gamma(shape, scale)` with the shape fixed at construction.
    pub fn expect<F: Fn(f64) -> f64>(&self, scale: f64, f: F) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(scale * x))
            .sum()
    }
}
