//! Eulerian numbers and the closed-form even-power sinc integrals built on them.

use std::f64::consts::PI;

/// Eulerian number `<n, k>`: permutations of `n` elements with exactly `k` ascents.
///
/// Zero outside `0 <= k < n`, except `<0, 0> = 1`. Exact for `n <= 33`;
/// larger rows overflow `u128` and panic.
pub fn eulerian(n: u32, k: i64) -> u128 {
    if n == 0 {
        return u128::from(k == 0);
    }
    if k < 0 || k >= i64::from(n) {
        return 0;
    }
    let k = k as usize;
    // <m, j> = (j+1) <m-1, j> + (m-j) <m-1, j-1>
    let mut row = vec![1u128];
    for m in 2..=n as usize {
        let mut next = vec![0u128; m];
        for j in 0..m {
            let stay = if j < row.len() { row[j] } else { 0 };
            let from_prev = if j > 0 { row[j - 1] } else { 0 };
            next[j] = (j as u128 + 1)
                .checked_mul(stay)
                .and_then(|a| ((m - j) as u128).checked_mul(from_prev).and_then(|b| a.checked_add(b)))
                .expect("Eulerian number overflows u128");
        }
        row = next;
    }
    row[k]
}

/// `<n, k> / n!` in floating point, valid for any `n`.
pub fn eulerian_over_factorial(n: u32, k: i64) -> f64 {
    if n == 0 {
        return if k == 0 { 1.0 } else { 0.0 };
    }
    if k < 0 || k >= i64::from(n) {
        return 0.0;
    }
    let mut row = vec![1.0f64];
    for m in 2..=n as usize {
        let mut next = vec![0.0; m];
        for j in 0..m {
            let stay = if j < row.len() { row[j] } else { 0.0 };
            let from_prev = if j > 0 { row[j - 1] } else { 0.0 };
            next[j] = ((j as f64 + 1.0) * stay + (m - j) as f64 * from_prev) / m as f64;
        }
        row = next;
    }
    row[k as usize]
}

/// `int_0^inf (sin x / x)^(2p) dx = pi / (2 (2p-1)!) <2p-1, p-1>` for `p >= 1`.
pub fn sinc_power_integral(p: u32) -> f64 {
    assert!(p >= 1, "sinc power integral needs p >= 1");
    0.5 * PI * eulerian_over_factorial(2 * p - 1, i64::from(p) - 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binomial(n: u64, k: u64) -> i128 {
        (0..k).fold(1i128, |acc, i| acc * (n - i) as i128 / (i + 1) as i128)
    }

    // alternating-sum definition, independent of the recurrence
    fn eulerian_sum(n: u32, k: i64) -> i128 {
        (0..=k + 1)
            .map(|j| {
                let sign = if j % 2 == 0 { 1 } else { -1 };
                sign * binomial(u64::from(n) + 1, j as u64) * (k - j + 1).pow(n) as i128
            })
            .sum()
    }

    #[test]
    fn small_values() {
        assert_eq!(eulerian(0, 0), 1);
        assert_eq!(eulerian(1, 0), 1);
        assert_eq!(eulerian(3, 1), 4);
        assert_eq!(eulerian(5, 2), 66);
        assert_eq!(eulerian(3, 3), 0);
        assert_eq!(eulerian(3, -1), 0);
        assert_eq!(eulerian(0, 1), 0);
    }

    #[test]
    fn matches_alternating_sum() {
        for n in 1..=15u32 {
            for k in 0..i64::from(n) {
                assert_eq!(eulerian(n, k) as i128, eulerian_sum(n, k), "<{n},{k}>");
            }
        }
    }

    #[test]
    fn row_sums_and_symmetry() {
        let mut fact = 1u128;
        for n in 1..=10u32 {
            fact *= u128::from(n);
            let total: u128 = (0..i64::from(n)).map(|k| eulerian(n, k)).sum();
            assert_eq!(total, fact);
            for k in 0..i64::from(n) {
                assert_eq!(eulerian(n, k), eulerian(n, i64::from(n) - 1 - k));
            }
        }
    }

    #[test]
    fn ratio_matches_exact() {
        let mut fact = 1.0;
        for n in 1..=25u32 {
            fact *= f64::from(n);
            for k in 0..i64::from(n) {
                let exact = eulerian(n, k) as f64 / fact;
                let r = eulerian_over_factorial(n, k);
                assert!((r - exact).abs() <= 1e-14 * exact, "<{n},{k}>");
            }
        }
    }

    #[test]
    fn closed_forms() {
        assert!((sinc_power_integral(1) - PI / 2.0).abs() < 1e-15);
        assert!((sinc_power_integral(2) - PI / 3.0).abs() < 1e-15);
        assert!((sinc_power_integral(3) - 11.0 * PI / 40.0).abs() < 1e-15);
    }
}
