//! Maximum-entropy occupation ensembles for electron-sharing domains.
//!
//! A molecular domain that can donate or accept a fixed charge `q` has
//! three accessible electron populations: `N - q`, `N`, and `N + q`.
//! This crate provides the closed-form statistics of that three-state
//! ensemble under a charge bias, the inverse problem (which bias produces
//! a given net charge), a maximum-entropy solver over arbitrary
//! population ladders, and charge equilibration across several domains
//! sharing one bias.
//!
//! All numerics are generic over the scalar through the [`Real`] trait
//! (`f64` and `f32` out of the box); the `*64` / `*32` aliases below pin
//! the common concrete choices.
//!
//! # Quickstart
//!
//! ```
//! use nensemble::{gamma_from_nu, nu_from_gamma, weights_from_gamma, DomainSpec};
//!
//! // Weights of the three populations at unit bias.
//! let w = weights_from_gamma::<f64>(1, 1.0)?;
//! assert!(w.center() < 1.0 / 3.0);
//!
//! // The net charge they carry, and the bias recovered from it.
//! let nu = nu_from_gamma::<f64>(1, 1.0)?;
//! assert!((nu - w.charge_fraction()).abs() < 1e-12);
//! assert!((gamma_from_nu(1, nu)? - 1.0).abs() < 1e-9);
//!
//! // A full per-domain report.
//! let domain = DomainSpec::new("A", 7, 1)?;
//! let report = domain.report(1.0f64)?;
//! assert!((report.population - (7.0 + nu)).abs() < 1e-12);
//! # Ok::<(), nensemble::Error>(())
//! ```

pub mod maxent;
pub mod network;
pub mod three_state;

mod error;
mod real;

pub use error::{Error, Result};
pub use maxent::{
    brute_force_maxent, log_partition, solve_maxent, GeneralEnsemble, MaxEntSolution,
};
pub use network::{equilibrate, total_charge_at, DomainCharge, NetworkSolution};
pub use real::Real;
pub use three_state::{
    edge_weights_from_center, gamma_from_nu, nu_from_gamma, shannon_entropy, weights_from_gamma,
    DomainSpec, EnsembleReport, ThreeStateWeights,
};

/// Double-precision weight triple.
pub type Weights64 = ThreeStateWeights<f64>;
/// Single-precision weight triple.
pub type Weights32 = ThreeStateWeights<f32>;
/// Double-precision domain report.
pub type Report64 = EnsembleReport<f64>;
/// Single-precision domain report.
pub type Report32 = EnsembleReport<f32>;
/// Double-precision general ensemble.
pub type Ensemble64 = GeneralEnsemble<f64>;
/// Single-precision general ensemble.
pub type Ensemble32 = GeneralEnsemble<f32>;
/// Double-precision network solution.
pub type Network64 = NetworkSolution<f64>;
/// Single-precision network solution.
pub type Network32 = NetworkSolution<f32>;
