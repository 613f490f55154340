//! The special functions behind the closed forms.

use mmwave_coverage::specfun::{
    eulerian, gen_exp_integral, hyp2f1_neg, hyp3f2_j, lower_incomplete_gamma, sinc_power_integral, xi,
};

fn main() -> mmwave_coverage::Result<()> {
    println!("E_p(z)");
    for (p, z) in [(1.0, 0.5), (1.95, 0.01), (1.95, 2.0), (3.0, 10.0)] {
        println!("  E_{p}({z}) = {:.12e}", gen_exp_integral(p, z)?);
    }

    println!("lower incomplete gamma");
    for (s, x) in [(0.5, 1.0), (1.95, 3.0), (4.0, 20.0)] {
        println!("  gamma({s}, {x}) = {:.12}", lower_incomplete_gamma(s, x)?);
    }

    println!("Eulerian numbers A(5, k): {:?}", (0..5).map(|k| eulerian(5, k)).collect::<Vec<_>>());

    println!("int sinc^(2p)");
    for p in 1..=4 {
        println!("  p = {p}: {:.12}", sinc_power_integral(p));
    }

    for alpha in [2.05, 2.1, 2.5, 2.9] {
        println!("xi({alpha}) = {:.10}", xi(alpha)?);
    }

    let delta = 2.0 / 2.1;
    println!("2F1(-delta, 3; 1-delta; -4) = {:.12}", hyp2f1_neg(-delta, 3.0, 1.0 - delta, -4.0)?);
    for x in [-0.5, -3.16, -100.0] {
        println!("J_1({x}) with M = 3: {:.12}", hyp3f2_j(1, 3, delta, x)?);
    }
    Ok(())
}
