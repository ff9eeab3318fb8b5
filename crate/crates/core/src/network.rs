//! Charge equilibration across several domains sharing one bias.
//!
//! Each domain responds to a common multiplier gamma with the net charge
//! of its three-state ensemble; the network problem is to find the gamma
//! at which the responses sum to a prescribed total. The total response is
//! a strictly decreasing function of gamma confined to the open interval
//! `(-sum q_k, +sum q_k)`, so the root is unique whenever it exists.
//!
//! A single shared gamma is a modeling choice: it treats the domains as
//! freely exchanging charge with one reservoir rather than pairwise.

use crate::error::{Error, Result};
use crate::real::Real;
use crate::three_state::{nu_from_gamma, to_f64, weights_from_gamma, DomainSpec};

/// Net charge and resulting mean population of one domain at the
/// equilibrated bias.
#[derive(Debug, Clone, PartialEq)]
pub struct DomainCharge<F> {
    /// Label copied from the domain.
    pub label: String,
    /// Net charge nu_k at the shared bias.
    pub nu: F,
    /// Mean population `N_k + nu_k`.
    pub population: F,
}

/// Solution of the shared-bias charge balance.
#[derive(Debug, Clone, PartialEq)]
pub struct NetworkSolution<F> {
    /// Bias at which the domain charges sum to the target.
    pub gamma_star: F,
    /// Per-domain breakdown, in input order.
    pub per_domain: Vec<DomainCharge<F>>,
    /// The requested total charge.
    pub total_charge: F,
    /// `|sum nu_k - total_charge|` actually achieved.
    pub residual: F,
}

/// Sum of the domain net charges at a common bias.
pub fn total_charge_at<F: Real>(domains: &[DomainSpec], gamma: F) -> Result<F> {
    if domains.is_empty() {
        return Err(Error::EmptyNetwork);
    }
    let mut total = F::zero();
    for d in domains {
        total = total + nu_from_gamma(d.capacity(), gamma)?;
    }
    Ok(total)
}

/// Slope of the total charge in gamma, `-sum q_k^2 Var_k`; always
/// negative, vanishing only in the saturated tails.
fn total_slope<F: Real>(domains: &[DomainSpec], gamma: F) -> Result<F> {
    let mut slope = F::zero();
    for d in domains {
        let q = F::of(d.capacity());
        let w = weights_from_gamma(d.capacity(), gamma)?;
        let r = w.charge_fraction();
        let var = w.plus() + w.minus() - r * r;
        slope = slope - q * q * var;
    }
    Ok(slope)
}

/// Iteration budget; exhausting it is an internal failure, reported
/// distinctly from an out-of-range target.
const MAX_ITER: usize = 200;

/// Half-width of the initial bracket in units of `1 / min q_k`. Every
/// domain is saturated beyond machine resolution at `|q gamma| = 60`, so
/// the bracket spans every representable feasible target.
const BRACKET_SCALE: f64 = 60.0;

/// Finds the shared bias at which the network carries the target total
/// charge, which must lie strictly inside `(-sum q_k, +sum q_k)`.
///
/// Bisection on the bracket guarantees progress; Newton steps on the
/// total-charge slope take over once they land inside the shrinking
/// bracket, polishing the root to scalar precision.
pub fn equilibrate<F: Real>(domains: &[DomainSpec], total_charge: F) -> Result<NetworkSolution<F>> {
    if domains.is_empty() {
        return Err(Error::EmptyNetwork);
    }
    if !total_charge.is_finite() {
        return Err(Error::NonFinite {
            name: "total_charge",
            value: to_f64(total_charge),
        });
    }
    let bound: F = domains.iter().map(|d| F::of(d.capacity())).sum();
    if total_charge.abs() >= bound {
        return Err(Error::ChargeOutOfRange {
            target: to_f64(total_charge),
            bound: to_f64(bound),
        });
    }

    let min_q = domains
        .iter()
        .map(DomainSpec::capacity)
        .min()
        .expect("non-empty");
    let half_width = F::lit(BRACKET_SCALE) / F::of(min_q);
    let mut lo = -half_width;
    let mut hi = half_width;
    let mut gamma = (lo + hi) / F::lit(2.0);
    let tol = F::CONVERGENCE_TOL * (F::one() + total_charge.abs());

    for _ in 0..MAX_ITER {
        let g = total_charge_at(domains, gamma)? - total_charge;
        if g.abs() <= tol {
            return Ok(finish(domains, gamma, total_charge, g.abs()));
        }
        // total charge decreases with gamma.
        if g > F::zero() {
            lo = gamma;
        } else {
            hi = gamma;
        }
        let slope = total_slope(domains, gamma)?;
        let newton = gamma - g / slope;
        gamma = if newton.is_finite() && newton > lo && newton < hi {
            newton
        } else {
            (lo + hi) / F::lit(2.0)
        };
    }
    Err(Error::NoConvergence(MAX_ITER))
}

fn finish<F: Real>(
    domains: &[DomainSpec],
    gamma: F,
    total_charge: F,
    residual: F,
) -> NetworkSolution<F> {
    let per_domain = domains
        .iter()
        .map(|d| {
            let nu = nu_from_gamma(d.capacity(), gamma)
                .expect("gamma finite by construction");
            DomainCharge {
                label: d.label().to_owned(),
                nu,
                population: F::of(d.electrons()) + nu,
            }
        })
        .collect();
    NetworkSolution {
        gamma_star: gamma,
        per_domain,
        total_charge,
        residual,
    }
}
