//! End-to-end walk through a small donor/acceptor story using only the
//! public API, the way downstream code would.

use nensemble::{equilibrate, solve_maxent, DomainSpec, Ensemble64, Network64};

#[test]
fn push_pull_dimer_redistributes_charge() {
    let donor = DomainSpec::new("amine", 8, 1).unwrap();
    let acceptor = DomainSpec::new("nitro", 12, 2).unwrap();

    // Pull one electron's worth of charge through the pair.
    let sol: Network64 = equilibrate(&[donor.clone(), acceptor.clone()], -1.0).unwrap();

    let amine = &sol.per_domain[0];
    let nitro = &sol.per_domain[1];
    assert_eq!(amine.label, "amine");

    // Both domains respond in the same direction under the shared bias,
    // and the wider acceptor absorbs the larger share.
    assert!(amine.nu < 0.0 && nitro.nu < 0.0);
    assert!(nitro.nu < amine.nu);
    assert!((amine.nu + nitro.nu + 1.0).abs() < 1e-9);

    // Populations are baselines shifted by the redistributed charge.
    assert!((amine.population - (8.0 + amine.nu)).abs() < 1e-12);
    assert!((nitro.population - (12.0 + nitro.nu)).abs() < 1e-12);

    // Each domain's detailed report at the equilibrated bias agrees with
    // the network's bookkeeping.
    let detail = donor.report::<f64>(sol.gamma_star).unwrap();
    assert!((detail.nu - amine.nu).abs() < 1e-12);
    assert!(detail.entropy > 0.0 && detail.entropy < 3f64.ln());
    assert_eq!(detail.chi, -sol.gamma_star);
}

#[test]
fn generic_ladder_reproduces_a_domain_report() {
    // A domain is just the three-state ladder {N-q, N, N+q}; the general
    // solver pointed at the same mean must land on the same ensemble.
    let domain = DomainSpec::new("carbonyl", 6, 2).unwrap();
    let report = domain.report::<f64>(0.75).unwrap();

    let sol = solve_maxent(&[4u32, 6, 8], report.population).unwrap();
    let general: &Ensemble64 = &sol.ensemble;

    assert!((sol.gamma - 0.75).abs() < 1e-9);
    assert!((general.weights()[0] - report.weights.minus()).abs() < 1e-10);
    assert!((general.weights()[1] - report.weights.center()).abs() < 1e-10);
    assert!((general.weights()[2] - report.weights.plus()).abs() < 1e-10);
    assert!((general.entropy() - report.entropy).abs() < 1e-10);
}
