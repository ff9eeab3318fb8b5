//! Closed forms for a domain whose electron count can sit at exactly three
//! values: a baseline N, a donor state N - q, and an acceptor state N + q.
//!
//! Under a bias gamma conjugate to the net charge, the maximum-entropy
//! weights are exponential in gamma with the central weight
//!
//! ```text
//! w_center = 1 / (1 + 2 cosh(q gamma))
//! ```
//!
//! and edge weights `exp(-+ q gamma) * w_center`. All formulas depend on
//! gamma only through the product `x = q * gamma`, which the implementation
//! exploits: everything is computed from exponentials shifted by `|x|` so
//! nothing overflows even for biases far beyond saturation.

use crate::error::{Error, Result};
use crate::real::Real;

/// One electron-sharing domain: a baseline electron count and the number
/// of electrons it can donate or accept in a single transfer.
///
/// The donor state must not reach a negative electron count, so `N >= q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DomainSpec {
    label: String,
    electrons: u32,
    capacity: u32,
}

impl DomainSpec {
    /// Builds a domain, rejecting `q = 0` and `N < q`.
    pub fn new(label: impl Into<String>, electrons: u32, capacity: u32) -> Result<Self> {
        let label = label.into();
        if capacity == 0 {
            return Err(Error::ZeroCapacity);
        }
        if electrons < capacity {
            return Err(Error::CapacityExceedsBaseline {
                label,
                electrons,
                capacity,
            });
        }
        Ok(DomainSpec {
            label,
            electrons,
            capacity,
        })
    }

    /// Name used in reports and network output.
    pub fn label(&self) -> &str {
        &self.label
    }

    /// Baseline electron count N.
    pub fn electrons(&self) -> u32 {
        self.electrons
    }

    /// Transferable charge q.
    pub fn capacity(&self) -> u32 {
        self.capacity
    }

    /// Full evaluation of the domain at a given bias: weights, net charge,
    /// mean population, entropy, and the sign-flipped bias.
    pub fn report<F: Real>(&self, gamma: F) -> Result<EnsembleReport<F>> {
        let weights = weights_from_gamma(self.capacity, gamma)?;
        let nu = nu_from_gamma(self.capacity, gamma)?;
        Ok(EnsembleReport {
            gamma,
            nu,
            population: F::of(self.electrons) + nu,
            entropy: weights.entropy(),
            chi: -gamma,
            weights,
        })
    }
}

/// Normalized weights of the three accessible populations.
///
/// `minus` is the donor state N - q, `plus` the acceptor state N + q.
/// Each weight lies in [0, 1] and the triple sums to one; the constructor
/// enforces both, so a value of this type is always a valid distribution.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThreeStateWeights<F> {
    minus: F,
    center: F,
    plus: F,
}

impl<F: Real> ThreeStateWeights<F> {
    /// Validates and wraps a weight triple.
    pub fn new(minus: F, center: F, plus: F) -> Result<Self> {
        for w in [minus, center, plus] {
            if !(w >= F::zero() && w <= F::one()) {
                return Err(Error::WeightOutOfRange(to_f64(w)));
            }
        }
        let sum = minus + center + plus;
        if (sum - F::one()).abs() > F::ALGEBRAIC_TOL {
            return Err(Error::NotNormalized(to_f64(sum)));
        }
        Ok(ThreeStateWeights {
            minus,
            center,
            plus,
        })
    }

    /// Weight of the donor state N - q.
    pub fn minus(&self) -> F {
        self.minus
    }

    /// Weight of the baseline state N.
    pub fn center(&self) -> F {
        self.center
    }

    /// Weight of the acceptor state N + q.
    pub fn plus(&self) -> F {
        self.plus
    }

    /// Net charge per unit capacity, `nu / q = w_plus - w_minus`.
    pub fn charge_fraction(&self) -> F {
        self.plus - self.minus
    }

    /// Shannon entropy of the triple; ranges over [0, ln 3].
    pub fn entropy(&self) -> F {
        shannon_entropy(&[self.minus, self.center, self.plus])
    }

    /// Constructs from components already known to satisfy the invariants
    /// (normalized output of the closed forms).
    fn trusted(minus: F, center: F, plus: F) -> Self {
        debug_assert!(((minus + center + plus) - F::one()).abs() <= F::ALGEBRAIC_TOL);
        ThreeStateWeights {
            minus,
            center,
            plus,
        }
    }
}

/// Everything the bias determines about one domain.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnsembleReport<F> {
    /// Bias the report was evaluated at.
    pub gamma: F,
    /// Net charge `nu = q (w_plus - w_minus)`; negative when the domain
    /// donates electrons.
    pub nu: F,
    /// Mean electron population `N + nu`.
    pub population: F,
    /// Shannon entropy of the weights.
    pub entropy: F,
    /// Sign-flipped bias, the electronegativity-like response variable.
    pub chi: F,
    /// The weight triple itself.
    pub weights: ThreeStateWeights<F>,
}

/// Shannon entropy `-sum w ln w` with the convention `0 ln 0 = 0`.
///
/// Zero weights arise legitimately: edge weights underflow at strong bias.
pub fn shannon_entropy<F: Real>(weights: &[F]) -> F {
    let mut s = F::zero();
    for &w in weights {
        if w > F::zero() {
            s = s - w * w.ln();
        }
    }
    s
}

/// The three unnormalized occupation factors shifted by `|x|`, plus their
/// sum. Shifting makes every factor at most one, so the largest bias a
/// scalar can represent still produces finite weights.
///
/// Negating `x` swaps the edge factors and fixes the central one, so with
/// the edges summed first the whole computation mirrors bit-exactly:
/// `nu(-gamma) = -nu(gamma)` holds as floating-point identity, not merely
/// within tolerance.
#[inline]
fn shifted_factors<F: Real>(x: F) -> (F, F, F, F) {
    let a = x.abs();
    let minus = (x - a).exp();
    let center = (-a).exp();
    let plus = (-x - a).exp();
    (minus, center, plus, (minus + plus) + center)
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

fn check_capacity(q: u32) -> Result<()> {
    if q == 0 {
        Err(Error::ZeroCapacity)
    } else {
        Ok(())
    }
}

pub(crate) fn to_f64<F: Real>(value: F) -> f64 {
    num_traits::cast(value).unwrap_or(f64::NAN)
}

/// Weights of the three populations at bias `gamma`.
///
/// At `gamma = 0` the triple is exactly uniform; as `q gamma -> -inf` the
/// acceptor state dominates and as `q gamma -> +inf` the donor state does.
/// The central weight never exceeds 1/3.
pub fn weights_from_gamma<F: Real>(q: u32, gamma: F) -> Result<ThreeStateWeights<F>> {
    check_capacity(q)?;
    check_finite("gamma", gamma)?;
    let x = F::of(q) * gamma;
    let (um, uc, up, sum) = shifted_factors(x);
    Ok(ThreeStateWeights::trusted(um / sum, uc / sum, up / sum))
}

/// Net charge `nu(gamma) = -2 q sinh(q gamma) / (1 + 2 cosh(q gamma))`.
///
/// Strictly decreasing in `gamma`, odd, and confined to the open interval
/// `(-q, q)`: the edges are approached exponentially but never reached.
pub fn nu_from_gamma<F: Real>(q: u32, gamma: F) -> Result<F> {
    check_capacity(q)?;
    check_finite("gamma", gamma)?;
    let x = F::of(q) * gamma;
    let (um, _, up, sum) = shifted_factors(x);
    Ok(F::of(q) * ((up - um) / sum))
}

/// Inverts `nu_from_gamma`: the bias that produces net charge `nu`.
///
/// Solving the charge equation for `u = exp(q gamma)` gives a quadratic
/// with one positive root,
///
/// ```text
/// u = (-r + sqrt(4 - 3 r^2)) / (2 (1 + r)),    r = nu / q,
/// ```
///
/// evaluated on the branch `r <= 0` where the numerator cannot cancel;
/// positive `r` is handled through the oddness of the charge curve.
/// Within one part in a million of saturation the quadratic's conditioning
/// degrades, so the root is found by bisection on the forward map instead.
pub fn gamma_from_nu<F: Real>(q: u32, nu: F) -> Result<F> {
    check_capacity(q)?;
    check_finite("nu", nu)?;
    let qf = F::of(q);
    let r = nu / qf;
    if r.abs() >= F::one() {
        return Err(Error::NuOutOfRange {
            nu: to_f64(nu),
            q,
        });
    }
    let magnitude = -r.abs();
    let x = if magnitude < F::lit(1e-6) - F::one() {
        bisect_saturated(magnitude)
    } else {
        quadratic_root(magnitude)
    };
    let signed = if r > F::zero() { -x } else { x };
    Ok(signed / qf)
}

/// Positive root of `(r+1) u^2 + r u + (r-1) = 0` for `r` in `(-1, 0]`,
/// returned as `x = ln u >= 0`.
fn quadratic_root<F: Real>(r: F) -> F {
    let disc = (F::lit(4.0) - F::lit(3.0) * r * r).sqrt();
    let u = (disc - r) / (F::lit(2.0) * (F::one() + r));
    u.ln()
}

/// Bisection on the forward charge fraction for `r` within 1e-6 of -1.
///
/// `1 + r ~= exp(-x)` there, which brackets the root inside one unit of
/// `-ln(1 + r)`; sixty halvings of that bracket reach scalar resolution.
fn bisect_saturated<F: Real>(r: F) -> F {
    let delta = F::one() + r;
    let guess = -delta.ln();
    let mut lo = guess - F::one();
    let mut hi = guess + F::one();
    let fraction = |x: F| {
        let (um, _, up, sum) = shifted_factors(x);
        (up - um) / sum
    };
    for _ in 0..120 {
        let mid = (lo + hi) / F::lit(2.0);
        if mid <= lo || mid >= hi {
            break;
        }
        // fraction is decreasing in x: too-negative value means overshoot.
        if fraction(mid) < r {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    (lo + hi) / F::lit(2.0)
}

/// Edge weights from the central weight and the net charge, via the linear
/// moment constraints alone:
///
/// ```text
/// w_-+ = (1 -+ nu/q - w_center) / 2
/// ```
///
/// Requires `w_center <= 1 - |nu|/q`, the point where an edge weight would
/// turn negative; the comparison carries the scalar's algebraic tolerance
/// so that triples computed at strong bias, where the margin is below
/// rounding, still pass. Results are clamped into [0, 1].
pub fn edge_weights_from_center<F: Real>(w_center: F, nu: F, q: u32) -> Result<(F, F)> {
    check_capacity(q)?;
    check_finite("w_center", w_center)?;
    check_finite("nu", nu)?;
    if !(w_center >= F::zero() && w_center <= F::one()) {
        return Err(Error::WeightOutOfRange(to_f64(w_center)));
    }
    let r = nu / F::of(q);
    let limit = F::one() - r.abs();
    if w_center - limit > F::ALGEBRAIC_TOL {
        return Err(Error::InfeasibleCenterWeight {
            w_center: to_f64(w_center),
            limit: to_f64(limit),
        });
    }
    let half = F::lit(0.5);
    let clamp = |w: F| w.max(F::zero()).min(F::one());
    let minus = clamp((F::one() - r - w_center) * half);
    let plus = clamp((F::one() + r - w_center) * half);
    Ok((minus, plus))
}
