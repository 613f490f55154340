//! Coverage as the first-column sum of a Toeplitz matrix exponential.

use mmwave_coverage::kernel::{coverage_from_coeffs, ltt_exp_first_column, nilpotent_norm_coeffs, poly_form_value, CoeffVector};

fn main() -> mmwave_coverage::Result<()> {
    // any c_0 <= 0, c_k >= 0 defines a valid exponent
    let cv = CoeffVector::new(vec![-1.2, 0.5, 0.3, 0.1], 0.0, 4)?;
    let col = ltt_exp_first_column(&cv);
    println!("first column of exp(C): {col:.6?}");
    println!("coverage = {:.10}", coverage_from_coeffs(&cv)?);

    // e^{c_0 t} (1 + sum beta_n t^n) describes the same norm for every t
    let betas = nilpotent_norm_coeffs(&cv);
    println!("beta_n = {betas:.6?}");
    for t in [0.25, 0.5, 1.0, 2.0] {
        let direct = coverage_from_coeffs(&cv.scaled(t))?;
        println!("t = {t}: {direct:.10} vs {:.10}", poly_form_value(cv.c[0], &betas, t));
    }
    Ok(())
}
