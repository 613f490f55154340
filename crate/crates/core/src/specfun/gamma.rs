use statrs::function::gamma::gamma_li;

use crate::error::{domain, Result};

/// Lower incomplete gamma `gamma(s, x) = int_0^x t^(s-1) e^-t dt`.
pub fn lower_incomplete_gamma(s: f64, x: f64) -> Result<f64> {
    if !(s > 0.0) || !(x >= 0.0) {
        return domain(format!("lower incomplete gamma needs s > 0, x >= 0 (s={s}, x={x})"));
    }
    if x == 0.0 {
        return Ok(0.0);
    }
    Ok(gamma_li(s, x))
}

/// Falling factorial `x (x-1) ... (x-n+1)`; one for `n = 0`.
pub fn falling_factorial(x: f64, n: u32) -> f64 {
    (0..n).fold(1.0, |acc, i| acc * (x - i as f64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use statrs::function::gamma::gamma;

    #[test]
    fn unit_shape_closed_form() {
        for &t in &[0.0, 0.1, 1.0, 3.7, 20.0] {
            let v = lower_incomplete_gamma(1.0, t).unwrap();
            assert!((v - (1.0 - (-t).exp())).abs() < 1e-14);
        }
    }

    #[test]
    fn empty_integral_and_errors() {
        assert_eq!(lower_incomplete_gamma(2.5, 0.0).unwrap(), 0.0);
        assert!(lower_incomplete_gamma(0.0, 1.0).is_err());
        assert!(lower_incomplete_gamma(-1.0, 1.0).is_err());
        assert!(lower_incomplete_gamma(1.0, -1.0).is_err());
    }

    #[test]
    fn saturates_at_complete_gamma() {
        for &s in &[0.5, 1.0, 2.5, 4.0, 7.3] {
            let v = lower_incomplete_gamma(s, 50.0 + 10.0 * s).unwrap() / gamma(s);
            assert!(v > 1.0 - 1e-9, "s={s}: {v}");
        }
    }

    #[test]
    fn falling_factorial_values() {
        assert_eq!(falling_factorial(0.7, 0), 1.0);
        assert_eq!(falling_factorial(3.0, 3), 6.0);
        assert!((falling_factorial(0.95, 2) - (-0.0475)).abs() < 1e-15);
        assert_eq!(falling_factorial(3.0, 4), 0.0);
    }
}
