//! Randomized invariants over the phase diagram and kernel inputs.

use entspec::critical;
use entspec::phase::{self, Phase, PhasePoint};
use entspec::special::{g_kernel, KernelConfig};
use entspec::spectrum::DensityProfile;
use proptest::prelude::*;

fn config() -> KernelConfig {
    KernelConfig::default()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, ..ProptestConfig::default() })]

    /// g(alpha) is the weighted mean of an integrand increasing in alpha.
    #[test]
    fn edge_average_grows_with_alpha(q in 0.6f64..8.0, alpha in 1.0005f64..6.0) {
        let lo = g_kernel(alpha, q, &config()).unwrap();
        let hi = g_kernel(alpha * 1.07, q, &config()).unwrap();
        prop_assert!(hi > lo, "g fell: {lo} -> {hi}");
    }

    /// The Tricomi density solves a normalized problem: total mass 1 and
    /// mean 1 survive every phase and order.
    #[test]
    fn solutions_conserve_mass_and_mean(q in 0.6f64..8.0, t in 0.02f64..0.98) {
        // Map t to a deficit spanning entangled through typical.
        let ue = critical::u_e(q).unwrap();
        let u = t * ue;
        let point = PhasePoint::new(q, u);
        let sol = phase::solve(&point, &config()).unwrap();
        let profile = DensityProfile::new(&sol, &config()).unwrap();
        let mass = profile.moment(0.0).unwrap();
        let mean = profile.moment(1.0).unwrap();
        prop_assert!((mass - 1.0).abs() < 1e-6, "mass {mass} at ({q}, {u})");
        prop_assert!((mean - 1.0).abs() < 1e-6, "mean {mean} at ({q}, {u})");
    }

    /// Round trip: the deficit recomputed from the solved density returns
    /// the requested one.
    #[test]
    fn deficit_round_trips_through_the_density(q in 0.6f64..8.0, t in 0.05f64..0.95) {
        let ue = critical::u_e(q).unwrap();
        let u = t * ue;
        let sol = phase::solve(&PhasePoint::new(q, u), &config()).unwrap();
        let profile = DensityProfile::new(&sol, &config()).unwrap();
        let back = profile.deficit().unwrap();
        prop_assert!((back - u).abs() < 1e-6, "u {u} -> {back}");
    }

    /// classify() agrees with the critical lines it is defined by.
    #[test]
    fn classification_respects_the_critical_lines(q in 0.6f64..8.0, t in 0.02f64..2.0) {
        let uc = critical::u_c(q).unwrap();
        let ue = critical::u_e(q).unwrap();
        let u = t * uc;
        let point = if u > ue { PhasePoint::with_n(q, u.min(0.9 * 100f64.ln()), 100) }
                    else { PhasePoint::new(q, u) };
        let phase = phase::classify(&point).unwrap();
        let expected = if point.u < uc {
            Phase::Entangled
        } else if point.u <= ue {
            Phase::Typical
        } else {
            Phase::Separable
        };
        prop_assert_eq!(phase, expected);
    }

    /// The density is nonnegative on its support in every phase.
    #[test]
    fn densities_are_nonnegative(q in 0.6f64..8.0, t in 0.02f64..0.98, x in 0.001f64..0.999) {
        let ue = critical::u_e(q).unwrap();
        let sol = phase::solve(&PhasePoint::new(q, t * ue), &config()).unwrap();
        let l = sol.support.a + x * (sol.support.b - sol.support.a);
        let value = entspec::spectrum::density(&sol, l, &config()).unwrap();
        prop_assert!(value >= 0.0, "sigma({l}) = {value} at ({q}, {})", t * ue);
    }

    /// Multipliers: beta decreases in u and crosses zero at the evaporation
    /// line, where typical states sit at infinite temperature.
    #[test]
    fn inverse_temperature_decreases_toward_evaporation(q in 0.6f64..8.0, t in 0.10f64..0.85) {
        let ue = critical::u_e(q).unwrap();
        let (u1, u2) = (t * ue, (t + 0.1) * ue);
        let b1 = phase::multipliers(&phase::solve(&PhasePoint::new(q, u1), &config()).unwrap()).unwrap().0;
        let b2 = phase::multipliers(&phase::solve(&PhasePoint::new(q, u2), &config()).unwrap()).unwrap().0;
        prop_assert!(b2 < b1, "beta rose: {b1} -> {b2}");
        prop_assert!(b1 > -1e-9, "beta negative before u_E: {b1}");
    }
}
