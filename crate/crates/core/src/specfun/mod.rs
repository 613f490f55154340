//! Special functions behind the closed-form coverage expressions.

mod combinatorics;
mod expint;
mod gamma;
mod hyper;
mod xi;

pub use combinatorics::{eulerian, eulerian_over_factorial, sinc_power_integral};
pub use expint::gen_exp_integral;
pub use gamma::{falling_factorial, lower_incomplete_gamma};
pub use hyper::{hyp2f1_neg, hyp3f2_j, hyp3f2_j_with};
pub use xi::{xi, XI_PANELS};

pub use statrs::function::gamma::{gamma as gamma_fn, ln_gamma};
