use entspec::haar::{marchenko_pastur_ks, sample_spectrum, u_estimate};
use entspec::oracle::{compare, metropolis_sample, minimize_potential, OracleConfig, Target};
use entspec::phase::{self, PhasePoint};
use entspec::special::KernelConfig;
use std::f64::consts::LN_2;

fn main() -> Result<(), entspec::Error> {
    let kcfg = KernelConfig::default();

    for n in [32usize, 64] {
        let state = minimize_potential(&OracleConfig::new(n, 2.0, Target::Deficit(0.1)))?;
        let sol = phase::solve(&PhasePoint::new(2.0, 0.1), &kcfg)?;
        let dist = compare(&state, &sol)?;
        println!(
            "newton N={n}: residual={:.3e} w1={:.5} ks={:.5} u_gap={:.3e} beta={:.6} sol.beta={:.6}",
            state.residual, dist.wasserstein1, dist.ks, dist.u_gap, state.beta, sol.beta
        );
    }

    let mut cfg = OracleConfig::new(32, 1.0, Target::InverseTemperature(3.0));
    cfg.seed = 11;
    let run = metropolis_sample(&cfg, 3200)?;
    let mean_u = run.states.iter().map(|s| s.energy).sum::<f64>() / run.states.len() as f64;
    let anchor = (1.0 - 1.0 / 6.0f64).ln() + 1.0 / 3.0;
    println!(
        "metro: states={} acc={:.3} warn={:?} mean_u={:.6} anchor={:.6} rel={:.4}",
        run.states.len(),
        run.acceptance,
        run.warning,
        mean_u,
        anchor,
        (mean_u - anchor).abs() / anchor
    );

    let mut pooled = Vec::new();
    let mut mean_u2 = 0.0;
    let samples = 8;
    for k in 0..samples {
        let s = sample_spectrum(64, 1000 + k)?;
        mean_u2 += u_estimate(&s, 2.0)? / samples as f64;
        pooled.extend_from_slice(&s.scaled_eigenvalues);
    }
    pooled.sort_by(|a, b| a.total_cmp(b));
    println!(
        "haar: ks={:.5} mean_u2={:.5} ln2={:.5} gap={:+.5}",
        marchenko_pastur_ks(&pooled),
        mean_u2,
        LN_2,
        mean_u2 - LN_2
    );

    // Separable minimizer: does one eigenvalue detach?
    let n = 64usize;
    let state = minimize_potential(&OracleConfig::new(n, 2.0, Target::Deficit(1.0)))?;
    let sol = phase::solve(&PhasePoint::with_n(2.0, 1.0, n as u64), &kcfg)?;
    let evs = &state.eigenvalues;
    let top = evs[n - 1];
    let second = evs[n - 2];
    println!(
        "sep: top={:.5} second={:.5} mu={:?} top/mu={:?}",
        top,
        second,
        sol.mu,
        sol.mu.map(|m| top / m)
    );
    Ok(())
}
