//! Scalar abstraction for the ensemble arithmetic.
//!
//! Everything downstream is generic over [`Real`] so the same closed forms
//! run in `f32` or `f64`. Tolerances live here as associated constants
//! because a meaningful tolerance depends on the scalar's precision, not on
//! the algorithm: demanding 1e-12 from `f32` arithmetic is noise.

use std::fmt::{Debug, Display, LowerExp};
use std::iter::Sum;

use num_traits::{Float, FromPrimitive};

/// Floating-point scalar the ensemble math is generic over.
pub trait Real: Float + FromPrimitive + Sum + Debug + Display + LowerExp + 'static {
    /// Slack for algebraic identities (weight normalization, moment
    /// consistency). Roughly 1e4 ulp at magnitude one: loose enough to
    /// absorb a handful of roundings, tight enough to catch a wrong sign
    /// or a dropped term.
    const ALGEBRAIC_TOL: Self;

    /// Slack for normalization of solver-produced ensembles, where the
    /// weights have been through an iterative root-find rather than a
    /// single closed form.
    const ENSEMBLE_TOL: Self;

    /// Relative convergence target for root-finding on the dual variable.
    const CONVERGENCE_TOL: Self;

    /// Convert a small integer exactly. Panics only if the scalar cannot
    /// hold it, which no admissible call site triggers.
    fn of(n: u32) -> Self {
        Self::from_u32(n).expect("small integer fits any Real")
    }

    /// Shorthand for embedding `f64` literals in generic code.
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("literal fits any Real")
    }
}

impl Real for f64 {
    const ALGEBRAIC_TOL: f64 = 1e-12;
    const ENSEMBLE_TOL: f64 = 1e-10;
    const CONVERGENCE_TOL: f64 = 1e-12;
}

impl Real for f32 {
    const ALGEBRAIC_TOL: f32 = 1e-5;
    const ENSEMBLE_TOL: f32 = 1e-4;
    const CONVERGENCE_TOL: f32 = 1e-6;
}
