//! `entspec verify`: built-in self-checks. The fast level exercises the
//! closed forms and solver consistency in a few seconds; the full level
//! adds the finite-N eigensolver, Metropolis thermometry, and Haar
//! sampling. The report goes to stdout as JSON; any failed check makes the
//! exit code nonzero.

use std::f64::consts::LN_2;

use entspec::critical::{critical_constants, u_c, u_c_minimum, u_e};
use entspec::haar::{marchenko_pastur_ks, sample_spectrum, u_estimate};
use entspec::oracle::{
    compare, metropolis_sample, minimize_potential, OracleConfig, Target,
};
use entspec::phase::{
    self, multipliers, solve_entangled, solve_entangled_general, typical_deficit, PhasePoint,
};
use entspec::special::KernelConfig;
use entspec::spectrum::DensityProfile;

use crate::json::{self, Value};
use crate::manifest::Manifest;
use crate::report::Failure;
use crate::{Level, VerifyArgs};

struct Check {
    name: &'static str,
    residual: f64,
    tolerance: f64,
}

impl Check {
    fn pass(&self) -> bool {
        self.residual.is_finite() && self.residual <= self.tolerance
    }
}

fn push(checks: &mut Vec<Check>, name: &'static str, residual: f64, tolerance: f64) {
    checks.push(Check {
        name,
        residual,
        tolerance,
    });
}

fn fast_checks(checks: &mut Vec<Check>) -> entspec::Result<()> {
    let cfg = KernelConfig::default();

    // Closed-form anchors of both critical curves.
    push(
        checks,
        "u_C anchor at order one",
        (u_c(1.0)? - (2.0 / 3.0 + (2.0f64 / 3.0).ln())).abs(),
        1e-12,
    );
    push(
        checks,
        "u_C anchor at order two",
        (u_c(2.0)? - (5.0f64 / 4.0).ln()).abs(),
        1e-12,
    );
    push(checks, "u_E anchor at order one", (u_e(1.0)? - 0.5).abs(), 1e-12);
    push(checks, "u_E anchor at order two", (u_e(2.0)? - LN_2).abs(), 1e-12);
    push(checks, "u_C at order ten", (u_c(10.0)? - 0.2275).abs(), 5e-3);
    push(checks, "u_E at order ten", (u_e(10.0)? - 1.0810).abs(), 5e-3);

    let (q_star, u_star) = u_c_minimum();
    push(checks, "u_C minimum location", (q_star - 3.733).abs(), 0.05);
    push(checks, "u_C minimum depth", (u_star - 0.214).abs(), 5e-3);

    // On the lower critical line of q = 1 the multipliers are exact:
    // beta = 3/2.
    let at_crit = phase::solve(&PhasePoint::new(1.0, u_c(1.0)?), &cfg)?;
    let (beta_c, _) = multipliers(&at_crit)?;
    push(
        checks,
        "inverse temperature on the order-one critical line",
        (beta_c - 1.5).abs(),
        1e-9,
    );

    // The order-two closed form against the general kernel solver.
    let point = PhasePoint::new(2.0, 0.1);
    let closed = solve_entangled(&point, &cfg)?;
    let general = solve_entangled_general(&point, &cfg)?;
    let gap = (closed.support.alpha - general.support.alpha)
        .abs()
        .max((closed.support.delta - general.support.delta).abs())
        .max((closed.a_coeff - general.a_coeff).abs())
        .max((closed.b_coeff - general.b_coeff).abs());
    push(checks, "closed form vs general solver at order two", gap, 1e-8);

    // Mass, mean, and the deficit round trip at one point per phase.
    let labelled: [(&'static str, PhasePoint, [&'static str; 3]); 3] = [
        (
            "entangled",
            PhasePoint::new(2.0, 0.1),
            [
                "mass at an entangled point",
                "mean at an entangled point",
                "deficit round trip at an entangled point",
            ],
        ),
        (
            "typical",
            PhasePoint::new(1.0, 0.3),
            [
                "mass at a typical point",
                "mean at a typical point",
                "deficit round trip at a typical point",
            ],
        ),
        (
            "separable",
            PhasePoint::with_n(2.0, 1.2, 64),
            [
                "mass at a separable point",
                "mean at a separable point",
                "deficit round trip at a separable point",
            ],
        ),
    ];
    for (_, point, names) in &labelled {
        let sol = phase::solve(point, &cfg)?;
        let profile = DensityProfile::new(&sol, &cfg)?;
        push(checks, names[0], (profile.moment(0.0)? - 1.0).abs(), 1e-6);
        push(checks, names[1], (profile.moment(1.0)? - 1.0).abs(), 1e-6);
        push(checks, names[2], (profile.deficit()? - point.u).abs(), 1e-6);
    }

    // The typical one-parameter family must land on both boundaries.
    let mut worst_c = 0.0f64;
    let mut worst_e = 0.0f64;
    for q in [0.8, 2.0, 10.0] {
        let cv = critical_constants(q)?;
        worst_c = worst_c.max((typical_deficit(cv.delta_c, q) - cv.u_c).abs());
        worst_e = worst_e.max((typical_deficit(2.0, q) - cv.u_e).abs());
    }
    push(checks, "typical family meets the lower critical line", worst_c, 1e-10);
    push(checks, "typical family meets the evaporation line", worst_e, 1e-10);
    Ok(())
}

fn full_checks(checks: &mut Vec<Check>, seed: u64) -> entspec::Result<()> {
    let cfg = KernelConfig::default();

    // Constrained Newton minimizer against the continuum density.
    let mut ocfg = OracleConfig::new(64, 2.0, Target::Deficit(0.1));
    ocfg.seed = seed;
    let state = minimize_potential(&ocfg)?;
    let sol = phase::solve(&PhasePoint::new(2.0, 0.1), &cfg)?;
    let dist = compare(&state, &sol)?;
    push(
        checks,
        "newton minimizer distance to the continuum at dimension 64",
        dist.wasserstein1,
        0.05,
    );

    // Thermometry: q = 1, beta = 3 has the closed form
    // u = ln(1 - 1/(2 beta)) + 1/beta.
    let anchor = (1.0 - 1.0 / 6.0f64).ln() + 1.0 / 3.0;
    let mut mcfg = OracleConfig::new(64, 1.0, Target::InverseTemperature(3.0));
    mcfg.seed = seed.wrapping_add(10);
    let run = metropolis_sample(&mcfg, 6400)?;
    let mean = run.states.iter().map(|s| s.energy).sum::<f64>() / run.states.len() as f64;
    push(
        checks,
        "chain thermometry at inverse temperature three",
        (mean - anchor).abs() / anchor,
        0.05,
    );

    // At infinite temperature the order-two deficit is ln 2.
    let mut zcfg = OracleConfig::new(64, 2.0, Target::InverseTemperature(0.0));
    zcfg.seed = seed.wrapping_add(11);
    let zrun = metropolis_sample(&zcfg, 6400)?;
    let zmean = zrun.states.iter().map(|s| s.energy).sum::<f64>() / zrun.states.len() as f64;
    push(
        checks,
        "infinite temperature chain at the typical deficit",
        (zmean - LN_2).abs() / LN_2,
        0.05,
    );

    // Haar ensemble: pooled law and the order-two mean deficit.
    let samples = 100;
    let n = 256;
    let mut pooled = Vec::with_capacity(samples * n);
    let mut mean_u2 = 0.0;
    for k in 0..samples {
        let s = sample_spectrum(n, seed.wrapping_add(9000 + k as u64))?;
        mean_u2 += u_estimate(&s, 2.0)?;
        pooled.extend_from_slice(&s.scaled_eigenvalues);
    }
    mean_u2 /= samples as f64;
    pooled.sort_by(|a, b| a.total_cmp(b));
    push(
        checks,
        "pooled Haar spectrum against the Marchenko-Pastur law",
        marchenko_pastur_ks(&pooled),
        0.05,
    );
    push(
        checks,
        "Haar mean deficit at order two",
        (mean_u2 - LN_2).abs(),
        0.02,
    );
    Ok(())
}

pub fn run(args: &VerifyArgs) -> Result<(), Failure> {
    let level_name = match args.level {
        Level::Fast => "fast",
        Level::Full => "full",
    };
    let mut checks = Vec::new();
    fast_checks(&mut checks)?;
    if args.level == Level::Full {
        full_checks(&mut checks, args.seed)?;
    }

    let failed = checks.iter().filter(|c| !c.pass()).count();
    let manifest = Manifest::new("verify")
        .param("level", json::str(level_name))
        .seed(args.seed);

    let mut rows = Vec::with_capacity(checks.len());
    for c in &checks {
        let mut row = Value::obj();
        row.push("name", json::str(c.name));
        row.push("residual", Value::Num(c.residual));
        row.push("tolerance", Value::Num(c.tolerance));
        row.push("pass", Value::Bool(c.pass()));
        rows.push(row);
    }
    let mut out = Value::obj();
    out.push("manifest", manifest.to_value());
    out.push("level", json::str(level_name));
    out.push("checks", json::arr(rows));
    out.push("passed", Value::UInt((checks.len() - failed) as u64));
    out.push("failed", Value::UInt(failed as u64));
    println!("{}", out.render());

    if failed > 0 {
        return Err(Failure::ChecksFailed(failed));
    }
    Ok(())
}
