//! Coverage analysis for millimeter-wave ad hoc and cellular networks.
//!
//! The crate evaluates SINR coverage probabilities of Poisson networks with
//! Nakagami-M fading, a line-of-sight ball blockage model and analog
//! beamforming uniform linear arrays. Gamma-distributed signal power turns the
//! coverage probability into the first-column sum of the exponential of a
//! lower-triangular Toeplitz matrix; the modules below build the entries of
//! that matrix for the different antenna patterns and network types, and a
//! Monte Carlo simulator with the exact array pattern serves as ground truth.
//!
//! * [`specfun`]: exponential integrals, incomplete gamma, Eulerian numbers,
//!   hypergeometric functions.
//! * [`antenna`]: actual (Fejér), sinc, cosine and flat-top array patterns.
//! * [`kernel`]: Toeplitz exponential, coverage norm, general coefficients.
//! * [`adhoc`] and [`cellular`]: closed-form coverage and array-size laws.
//! * [`montecarlo`]: Poisson network simulator.
//! * [`cli`]: sweeps, presets and CSV/JSON output behind the `mmcov` binary.

// `!(x > 0.0)` is used on purpose so that NaN fails validation
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod adhoc;
pub mod antenna;
pub mod cellular;
pub mod cli;
pub mod config;
pub mod error;
pub mod kernel;
pub mod montecarlo;
pub mod quad;
pub mod specfun;

pub use error::{Error, Result};
