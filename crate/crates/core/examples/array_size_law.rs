//! Coverage as a function of the array size: exact values, the polynomial
//! form in t = 1/N_t and the large-array outage asymptote.

use mmwave_coverage::adhoc::{asymptotic_outage_adhoc, coverage_adhoc, coverage_poly_form};
use mmwave_coverage::cellular::{asymptotic_outage_cellular, cellular_poly_form, coverage_cellular_lower};
use mmwave_coverage::config::{AdHocConfig, CellularConfig};
use mmwave_coverage::kernel::poly_form_value;

fn main() -> mmwave_coverage::Result<()> {
    let mut adhoc = AdHocConfig::default();
    let (c0, betas) = coverage_poly_form(&adhoc)?;
    println!("ad hoc: c_0 = {c0:.5}, beta = {betas:.5?}");
    println!("{:>6} {:>10} {:>10} {:>10}", "N_t", "coverage", "poly", "1-asym");
    for n in [4u32, 8, 16, 32, 64, 128, 256, 512, 1024] {
        adhoc.sys.n_t = n;
        let t = 1.0 / f64::from(n);
        println!(
            "{n:>6} {:>10.6} {:>10.6} {:>10.6}",
            coverage_adhoc(&adhoc)?,
            poly_form_value(c0, &betas, t),
            1.0 - asymptotic_outage_adhoc(&adhoc)?
        );
    }

    let mut cell = CellularConfig::default();
    let los = cell.los_probability();
    let (b0, betas) = cellular_poly_form(&cell)?;
    println!("cellular: beta_0 = {b0:.5}, beta = {betas:.5?}, LOS probability {los:.6}");
    println!("{:>6} {:>10} {:>10} {:>10}", "N_t", "bound", "poly", "1-asym");
    for n in [8u32, 16, 32, 64, 128, 256, 512, 1024] {
        cell.sys.n_t = n;
        let t = 1.0 / f64::from(n);
        println!(
            "{n:>6} {:>10.6} {:>10.6} {:>10.6}",
            coverage_cellular_lower(&cell)?,
            los * poly_form_value(b0, &betas, t),
            1.0 - asymptotic_outage_cellular(&cell)?
        );
    }
    Ok(())
}
