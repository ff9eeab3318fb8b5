//! The README quick-start, kept compiling.

use nensemble::{gamma_from_nu, weights_from_gamma, DomainSpec};

fn main() -> Result<(), nensemble::Error> {
    // statistical weights of the three reachable states at bias 1
    let w = weights_from_gamma(1u32, 1.0)?;
    assert!(w.minus() > w.center() && w.center() > w.plus());

    // the bias that produces a given fractional charge
    let gamma: f64 = gamma_from_nu(1u32, -0.5)?;
    assert!(gamma > 0.0);

    // a full report for a domain with 8 electrons that can trade one
    let report = DomainSpec::new("amine", 8, 1)?.report::<f64>(0.25)?;
    assert!((report.population - (8.0 + report.nu)).abs() < 1e-12);
    Ok(())
}
