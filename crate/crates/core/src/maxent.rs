//! Maximum-entropy ensembles over an arbitrary population ladder.
//!
//! Generalizes the three-state closed forms: given any strictly increasing
//! list of occupation numbers and a target mean population, the unique
//! entropy-maximizing distribution has weights exponential in a single
//! multiplier, found here by a bracketed Newton iteration on the mean.
//! A deliberately naive simplex scan ([`brute_force_maxent`]) is provided
//! as an independent cross-check on the solver.

use crate::error::{Error, Result};
use crate::real::Real;
use crate::three_state::{shannon_entropy, to_f64};

/// A normalized distribution over an increasing ladder of occupation
/// numbers. At least two states; one weight per state, each in [0, 1],
/// summing to one.
#[derive(Debug, Clone, PartialEq)]
pub struct GeneralEnsemble<F> {
    states: Vec<u32>,
    weights: Vec<F>,
}

impl<F: Real> GeneralEnsemble<F> {
    /// Validates and wraps a state ladder with its weights.
    pub fn new(states: Vec<u32>, weights: Vec<F>) -> Result<Self> {
        validate_states(&states)?;
        if states.len() != weights.len() {
            return Err(Error::WeightCountMismatch {
                states: states.len(),
                weights: weights.len(),
            });
        }
        let mut sum = F::zero();
        for &w in &weights {
            if !(w >= F::zero() && w <= F::one()) {
                return Err(Error::WeightOutOfRange(to_f64(w)));
            }
            sum = sum + w;
        }
        if (sum - F::one()).abs() > F::ENSEMBLE_TOL {
            return Err(Error::NotNormalized(to_f64(sum)));
        }
        Ok(GeneralEnsemble { states, weights })
    }

    /// The occupation ladder, strictly increasing.
    pub fn states(&self) -> &[u32] {
        &self.states
    }

    /// Weight of each state, aligned with [`Self::states`].
    pub fn weights(&self) -> &[F] {
        &self.weights
    }

    /// Mean occupation under the weights.
    pub fn mean(&self) -> F {
        self.states
            .iter()
            .zip(&self.weights)
            .map(|(&m, &w)| F::of(m) * w)
            .sum()
    }

    /// Shannon entropy of the weights.
    pub fn entropy(&self) -> F {
        shannon_entropy(&self.weights)
    }
}

/// Output of [`solve_maxent`]: the ensemble together with the multiplier
/// that produced it and the final constraint residual.
#[derive(Debug, Clone, PartialEq)]
pub struct MaxEntSolution<F> {
    /// The entropy-maximizing distribution.
    pub ensemble: GeneralEnsemble<F>,
    /// Multiplier gamma at the constrained optimum; weights are
    /// proportional to `exp(-gamma * M)`.
    pub gamma: F,
    /// `|mean - target|` actually achieved.
    pub residual: F,
}

fn validate_states(states: &[u32]) -> Result<()> {
    if states.len() < 2 || states.windows(2).any(|p| p[0] >= p[1]) {
        return Err(Error::InvalidStates);
    }
    Ok(())
}

fn check_finite<F: Real>(name: &'static str, value: F) -> Result<()> {
    if value.is_finite() {
        Ok(())
    } else {
        Err(Error::NonFinite {
            name,
            value: to_f64(value),
        })
    }
}

/// Occupation factors `exp(-gamma (M - M0))` and their sum, with the
/// origin `M0` chosen as the state minimizing `gamma * M` so that every
/// exponent is non-positive and nothing overflows.
fn shifted_factors<F: Real>(states: &[u32], gamma: F) -> (Vec<F>, F) {
    let origin = if gamma >= F::zero() {
        states[0]
    } else {
        *states.last().expect("validated: at least two states")
    };
    let origin = F::of(origin);
    let mut factors = Vec::with_capacity(states.len());
    let mut sum = F::zero();
    for &m in states {
        let f = (-gamma * (F::of(m) - origin)).exp();
        factors.push(f);
        sum = sum + f;
    }
    (factors, sum)
}

/// Log of the shifted partition sum, `ln sum_M exp(-gamma (M - M0))`.
///
/// The shift origin `M0` is the state minimizing `gamma * M`; the returned
/// value therefore always lies in `[0, ln K]` for K states, and recovers
/// any other centering through `ln Z(c) = log_partition + gamma * (c - M0)`.
pub fn log_partition<F: Real>(states: &[u32], gamma: F) -> Result<F> {
    validate_states(states)?;
    check_finite("gamma", gamma)?;
    let (_, sum) = shifted_factors(states, gamma);
    Ok(sum.ln())
}

/// Mean and variance of the occupation number at multiplier `gamma`.
fn moments<F: Real>(states: &[u32], gamma: F) -> (F, F) {
    let (factors, sum) = shifted_factors(states, gamma);
    let mut mean = F::zero();
    for (&m, &f) in states.iter().zip(&factors) {
        mean = mean + F::of(m) * (f / sum);
    }
    let mut var = F::zero();
    for (&m, &f) in states.iter().zip(&factors) {
        let d = F::of(m) - mean;
        var = var + d * d * (f / sum);
    }
    (mean, var)
}

/// Iteration budget for the dual root-find; running out is reported as
/// [`Error::NoConvergence`], never silently accepted.
const MAX_ITER: usize = 200;

/// Initial multiplier bracket. With integer states the mean saturates to
/// within less than one ulp of the hull edges by |gamma| = 50, so this
/// brackets every representable in-range target.
const BRACKET: f64 = 50.0;

/// Finds the maximum-entropy ensemble with the given mean occupation.
///
/// The mean is strictly decreasing in the multiplier, so a sign-keeping
/// bracket around the root always exists; Newton steps (the derivative of
/// the mean is minus the variance) are taken when they stay inside the
/// bracket and bisection otherwise. Converges when
/// `|mean - target| <= CONVERGENCE_TOL * (1 + |target|)`.
///
/// The target must lie strictly between the smallest and largest state.
pub fn solve_maxent<F: Real>(states: &[u32], target_mean: F) -> Result<MaxEntSolution<F>> {
    validate_states(states)?;
    check_finite("target_mean", target_mean)?;
    let lo_state = F::of(states[0]);
    let hi_state = F::of(*states.last().expect("validated"));
    if !(target_mean > lo_state && target_mean < hi_state) {
        return Err(Error::TargetOutOfRange {
            target: to_f64(target_mean),
            lo: to_f64(lo_state),
            hi: to_f64(hi_state),
        });
    }

    let tol = F::CONVERGENCE_TOL * (F::one() + target_mean.abs());
    let mut lo = F::lit(-BRACKET);
    let mut hi = F::lit(BRACKET);
    let mut gamma = (lo + hi) / F::lit(2.0);
    for _ in 0..MAX_ITER {
        let (mean, var) = moments(states, gamma);
        let g = mean - target_mean;
        if g.abs() <= tol {
            let (factors, sum) = shifted_factors(states, gamma);
            let weights = factors.into_iter().map(|f| f / sum).collect();
            return Ok(MaxEntSolution {
                ensemble: GeneralEnsemble::new(states.to_vec(), weights)?,
                gamma,
                residual: g.abs(),
            });
        }
        // mean decreases with gamma: a positive residual means the root
        // lies to the right of the current iterate.
        if g > F::zero() {
            lo = gamma;
        } else {
            hi = gamma;
        }
        let newton = gamma + g / var;
        gamma = if newton.is_finite() && newton > lo && newton < hi {
            newton
        } else {
            (lo + hi) / F::lit(2.0)
        };
    }
    Err(Error::NoConvergence(MAX_ITER))
}

/// Exhaustive scan of the weight simplex at a fixed resolution.
///
/// Visits every grid distribution (each weight a multiple of the step),
/// keeps those whose mean is within `constraint_tol` of the target, and
/// returns the one with the largest entropy. Scan order is fixed, so ties
/// resolve deterministically. Cost grows as `(1/grid_step)^(K-1)`; the
/// scan is restricted to three or four states to keep that honest.
///
/// This is a cross-check oracle for [`solve_maxent`], not a production
/// path: its entropy can exceed the solver's by at most the amount the
/// constraint slack allows, and falls short by at most the grid pitch.
pub fn brute_force_maxent<F: Real>(
    states: &[u32],
    target_mean: F,
    grid_step: F,
    constraint_tol: F,
) -> Result<GeneralEnsemble<F>> {
    validate_states(states)?;
    let k = states.len();
    if !(3..=4).contains(&k) {
        return Err(Error::ScanSizeUnsupported(k));
    }
    check_finite("target_mean", target_mean)?;
    check_finite("grid_step", grid_step)?;
    check_finite("constraint_tol", constraint_tol)?;
    if grid_step < F::lit(1e-4) || grid_step > F::lit(1e-2) {
        return Err(Error::GridStepOutOfRange(to_f64(grid_step)));
    }

    let ticks: u64 = num_traits::cast((F::one() / grid_step).round())
        .expect("grid step within [1e-4, 1e-2] gives a small tick count");
    let nf = F::from_u64(ticks).expect("tick count fits any Real");
    // Entropy contribution of a weight c/ticks, tabulated once.
    let plogp: Vec<F> = (0..=ticks)
        .map(|c| {
            if c == 0 {
                F::zero()
            } else {
                let w = F::from_u64(c).expect("fits") / nf;
                -(w * w.ln())
            }
        })
        .collect();

    let mut best: Option<(F, Vec<u64>)> = None;
    let mut consider = |counts: &[u64]| {
        // Mean as an exact integer dot product over grid ticks.
        let dot: u64 = counts
            .iter()
            .zip(states)
            .map(|(&c, &m)| c * u64::from(m))
            .sum();
        let mean = F::from_u64(dot).expect("fits") / nf;
        if (mean - target_mean).abs() > constraint_tol {
            return;
        }
        let entropy: F = counts.iter().map(|&c| plogp[c as usize]).sum();
        match &best {
            Some((s, _)) if *s >= entropy => {}
            _ => best = Some((entropy, counts.to_vec())),
        }
    };

    if k == 3 {
        for i in 0..=ticks {
            for j in 0..=(ticks - i) {
                consider(&[i, j, ticks - i - j]);
            }
        }
    } else {
        for i in 0..=ticks {
            for j in 0..=(ticks - i) {
                for l in 0..=(ticks - i - j) {
                    consider(&[i, j, l, ticks - i - j - l]);
                }
            }
        }
    }

    let (_, counts) = best.ok_or(Error::NoFeasiblePoint(to_f64(constraint_tol)))?;
    let weights = counts
        .into_iter()
        .map(|c| F::from_u64(c).expect("fits") / nf)
        .collect();
    GeneralEnsemble::new(states.to_vec(), weights)
}
