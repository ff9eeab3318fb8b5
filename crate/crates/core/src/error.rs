//! Error type shared by the ensemble, solver, and network modules.
//!
//! Payload values are carried as `f64` regardless of the working scalar so
//! the enum stays non-generic and cheap to pass around; the loss of
//! precision only affects diagnostics, never control flow.

use thiserror::Error;

/// Everything that can go wrong across the crate.
///
/// Infeasible inputs ([`Error::NuOutOfRange`], [`Error::TargetOutOfRange`],
/// [`Error::ChargeOutOfRange`], [`Error::NoFeasiblePoint`]) are kept
/// distinct from [`Error::NoConvergence`], which signals an internal
/// iteration budget blown on a problem that *was* feasible.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An input that must be finite was NaN or infinite.
    #[error("{name} must be finite, got {value}")]
    NonFinite {
        /// Which argument was bad.
        name: &'static str,
        /// The offending value.
        value: f64,
    },

    /// Charge capacity q below one.
    #[error("charge capacity q must be a positive integer")]
    ZeroCapacity,

    /// Domain would reach a negative electron count in its donor state.
    #[error("domain `{label}`: capacity q = {capacity} exceeds baseline electron count N = {electrons}")]
    CapacityExceedsBaseline {
        /// Label of the offending domain.
        label: String,
        /// Baseline electron count N.
        electrons: u32,
        /// Transferable charge q.
        capacity: u32,
    },

    /// A probability weight outside the unit interval.
    #[error("weight {0} lies outside [0, 1]")]
    WeightOutOfRange(f64),

    /// Weights that do not sum to one within the scalar's tolerance.
    #[error("weights sum to {0}, expected 1 within tolerance")]
    NotNormalized(f64),

    /// Requested net charge at or beyond the saturation edge.
    #[error("nu = {nu} must lie strictly inside (-{q}, {q})")]
    NuOutOfRange {
        /// Requested net charge.
        nu: f64,
        /// Charge capacity bounding it.
        q: u32,
    },

    /// Central weight too large for the requested net charge.
    #[error("center weight {w_center} exceeds 1 - |nu|/q = {limit}; an edge weight would turn negative")]
    InfeasibleCenterWeight {
        /// Supplied central weight.
        w_center: f64,
        /// Feasible maximum 1 - |nu|/q.
        limit: f64,
    },

    /// State list too short, or not strictly increasing.
    #[error("states must be at least two strictly increasing integers")]
    InvalidStates,

    /// Weight list does not align with the state list.
    #[error("got {weights} weights for {states} states")]
    WeightCountMismatch {
        /// Number of states supplied.
        states: usize,
        /// Number of weights supplied.
        weights: usize,
    },

    /// Constraint target outside the open hull of the states.
    #[error("target mean {target} must lie strictly inside ({lo}, {hi})")]
    TargetOutOfRange {
        /// Requested mean.
        target: f64,
        /// Smallest state.
        lo: f64,
        /// Largest state.
        hi: f64,
    },

    /// Simplex scan resolution outside the supported window.
    #[error("grid step {0} outside supported range [1e-4, 1e-2]")]
    GridStepOutOfRange(f64),

    /// Exhaustive scan only supports three or four states.
    #[error("exhaustive scan supports 3 or 4 states, got {0}")]
    ScanSizeUnsupported(usize),

    /// No simplex grid point met the mean constraint.
    #[error("no grid point satisfies |mean - target| <= {0}")]
    NoFeasiblePoint(f64),

    /// Iteration budget exhausted on a feasible problem; indicates a bug
    /// or a pathological scalar, not bad input.
    #[error("root search failed to converge within {0} iterations")]
    NoConvergence(usize),

    /// Network operations need at least one domain.
    #[error("domain list is empty")]
    EmptyNetwork,

    /// Network charge target at or beyond full saturation of every domain.
    #[error("total charge {target} must lie strictly inside (-{bound}, {bound})")]
    ChargeOutOfRange {
        /// Requested total charge.
        target: f64,
        /// Sum of domain capacities.
        bound: f64,
    },
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nu_out_of_range_names_the_open_interval() {
        let msg = Error::NuOutOfRange { nu: 1.5, q: 1 }.to_string();
        assert!(msg.contains("strictly inside (-1, 1)"), "got: {msg}");
    }

    #[test]
    fn infeasibility_and_exhaustion_are_distinct() {
        assert_ne!(
            Error::NoConvergence(200),
            Error::NoFeasiblePoint(1e-3),
        );
    }
}
