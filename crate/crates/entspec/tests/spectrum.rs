//! Density, moment, and distribution checks across all three phases.

use entspec::phase::{solve, solve_separable, PhasePoint};
use entspec::special::KernelConfig;
use entspec::spectrum::DensityProfile;

fn cfg() -> KernelConfig {
    KernelConfig::default()
}

fn profile(point: &PhasePoint) -> DensityProfile {
    let sol = solve(point, &cfg()).unwrap();
    DensityProfile::new(&sol, &cfg()).unwrap()
}

#[test]
fn mass_and_mean_are_one_in_the_continuum_phases() {
    let points = [
        PhasePoint::new(1.5, 0.12102627116745345), // entangled, spectral rep
        PhasePoint::new(3.7, 0.088521556841894606), // entangled, larger q
        PhasePoint::new(1.0, 0.034039644443615611), // entangled, q = 1
        PhasePoint::new(2.0, 0.4),                  // typical, polynomial kernel
        PhasePoint::new(1.5, 0.46902600707576869),  // typical, panel kernel
        PhasePoint::new(0.75, 0.36268463392870576), // typical, q < 1
    ];
    for pt in &points {
        let p = profile(pt);
        let mass = p.moment(0.0).unwrap();
        let mean = p.moment(1.0).unwrap();
        assert!(
            (mass - 1.0).abs() < 1e-8,
            "mass = {mass:.12} at q = {}, u = {}",
            pt.q,
            pt.u
        );
        assert!(
            (mean - 1.0).abs() < 1e-8,
            "mean = {mean:.12} at q = {}, u = {}",
            pt.q,
            pt.u
        );
    }
}

#[test]
fn separable_sea_mass_and_mean() {
    let sol = solve_separable(&PhasePoint::with_n(2.0, 1.2, 64)).unwrap();
    let p = DensityProfile::new(&sol, &cfg()).unwrap();
    let mass = p.moment(0.0).unwrap();
    let mean = p.moment(1.0).unwrap();
    assert!((mass - 1.0).abs() < 1e-9, "mass = {mass:.12}");
    assert!((mean - 1.0).abs() < 1e-9, "mean = {mean:.12}");
    // The sea is a quarter-circle law whose higher moments are Catalan
    // multiples of powers of its own mean, m_p = C_p mean^p; the full
    // measure adds the evaporated eigenvalue with weight 1/N.
    let mu = sol.mu.unwrap();
    let sea_mean = (1.0 - mu) * 64.0 / 63.0;
    let m2 = p.moment(2.0).unwrap();
    let want2 = (63.0 / 64.0) * 2.0 * sea_mean.powi(2) + (64.0 * mu).powi(2) / 64.0;
    assert!((m2 - want2).abs() < 1e-8, "m2 = {m2}, want {want2}");
    let m5 = p.moment(5.0).unwrap();
    let want5 = (63.0 / 64.0) * 42.0 * sea_mean.powi(5) + (64.0 * mu).powi(5) / 64.0;
    assert!((m5 - want5).abs() / want5 < 2e-6, "m5 = {m5}, want {want5}");
}

#[test]
fn deficit_roundtrip_all_phases() {
    let cases = [
        (PhasePoint::new(1.5, 0.1), 1e-9),
        (PhasePoint::new(1.0, 0.034039644443615611), 1e-9),
        (PhasePoint::new(2.0, 0.1), 1e-9),
        (PhasePoint::new(2.0, 0.4), 1e-8),
        (PhasePoint::new(1.0, 0.3), 1e-8),
        (PhasePoint::new(0.75, 0.36), 1e-8),
        (PhasePoint::with_n(2.0, 1.2, 64), 1e-12),
        (PhasePoint::with_n(1.0, 1.0, 100), 1e-12),
    ];
    for (pt, tol) in &cases {
        let p = profile(pt);
        let u = p.deficit().unwrap();
        assert!(
            (u - pt.u).abs() < *tol,
            "deficit roundtrip {u:.12} vs {:.12} at q = {}",
            pt.u,
            pt.q
        );
    }
}

#[test]
fn q2_density_is_a_semicircle() {
    // At q = 2 the entangled density collapses to a semicircle:
    // sigma(l) = (2 / (pi delta)) sqrt(1 - x^2), x = l/delta - alpha.
    let pt = PhasePoint::new(2.0, 0.10536051565782630);
    let p = profile(&pt);
    let s = p.solution().support.clone();
    assert!((s.alpha - 1.5).abs() < 1e-9);
    for k in 1..20 {
        let l = s.a + (s.b - s.a) * k as f64 / 20.0;
        let x = l / s.delta - s.alpha;
        let want = 2.0 * (1.0 - x * x).sqrt() / (std::f64::consts::PI * s.delta);
        let got = p.density(l).unwrap();
        assert!(
            (got - want).abs() < 1e-9,
            "sigma({l}) = {got:.12}, want {want:.12}"
        );
    }
}

#[test]
fn cdf_matches_density_derivative() {
    // Central difference of the cumulative reproduces the density, on both
    // the closed-form (spectral) and tabulated (panel) code paths.
    for pt in [
        PhasePoint::new(1.5, 0.1),  // spectral closed form
        PhasePoint::new(1.5, 0.46), // panel table
    ] {
        let p = profile(&pt);
        let s = p.solution().support.clone();
        for k in 1..10 {
            let l = s.a + (s.b - s.a) * k as f64 / 10.0;
            let dl = 1e-5;
            let num = (p.cdf(l + dl).unwrap() - p.cdf(l - dl).unwrap()) / (2.0 * dl);
            let sig = p.density(l).unwrap();
            assert!(
                (num - sig).abs() < 2e-4 * (1.0 + sig),
                "dF/dl = {num:.8} vs sigma = {sig:.8} at l = {l:.4} (q={}, u={})",
                pt.q,
                pt.u
            );
        }
    }
}

#[test]
fn cdf_is_monotone_with_pinned_endpoints() {
    let p = profile(&PhasePoint::new(1.5, 0.46902600707576869));
    let s = p.solution().support.clone();
    let mut last = -1.0;
    for k in 0..=100 {
        let l = s.a + (s.b - s.a) * k as f64 / 100.0;
        let f = p.cdf(l).unwrap();
        assert!(f >= last);
        last = f;
    }
    assert_eq!(p.cdf(s.a).unwrap(), 0.0);
    assert_eq!(p.cdf(s.b).unwrap(), 1.0);
}

#[test]
fn exported_grid_integrates_to_the_mass() {
    // Trapezoid over the exported grid recovers unit mass and converges at
    // least quadratically in the grid size; clustering keeps the edge error
    // under control even for the diverging typical edge.
    let cases = [
        (PhasePoint::new(2.0, 0.4), 1e-4),
        (PhasePoint::new(1.5, 0.1), 1.5e-5),
    ];
    for (pt, tol) in cases {
        let p = profile(&pt);
        let err = |n: usize| {
            let g = p.grid(n).unwrap();
            let mut mass = 0.0;
            for i in 1..g.lambdas.len() {
                mass += 0.5 * (g.densities[i] + g.densities[i - 1])
                    * (g.lambdas[i] - g.lambdas[i - 1]);
            }
            (mass - 1.0).abs()
        };
        let coarse = err(128);
        let fine = err(512);
        assert!(
            fine < tol,
            "grid mass error = {fine:.3e} at n = 512 (q={}, u={})",
            pt.q,
            pt.u
        );
        assert!(
            fine < coarse / 8.0,
            "mass error fails to converge: {coarse:.3e} -> {fine:.3e}"
        );
    }
}

#[test]
fn grid_shape_invariants() {
    let p = profile(&PhasePoint::new(1.5, 0.1));
    let g = p.grid(64).unwrap();
    assert_eq!(g.lambdas.len(), 64);
    assert!(!g.left_edge_divergent);
    let s = p.solution().support.clone();
    assert_eq!(g.lambdas[0], s.a);
    assert_eq!(*g.lambdas.last().unwrap(), s.b);
    assert!(g.lambdas.windows(2).all(|w| w[1] > w[0]));
    assert_eq!(*g.densities.last().unwrap(), 0.0);
    assert!(p.grid(3).is_err());
    assert!(p.grid(4).is_ok());
}
