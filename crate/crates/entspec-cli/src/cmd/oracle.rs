//! `entspec oracle`: the finite-N eigenvalue gas, either solved at fixed
//! deficit or sampled at fixed inverse temperature, with spectral distances
//! to the continuum solution alongside.

use entspec::oracle::{metropolis_sample, minimize_potential, OracleConfig, Target};
use entspec::phase::{self, PhasePoint, SpectrumSolution};
use entspec::special::KernelConfig;

use crate::cmd::spectrum::phase_name;
use crate::json::{self, Value};
use crate::manifest::Manifest;
use crate::report::{out_paths, write_file, Csv, Failure};
use crate::{Format, Method, OracleArgs};

/// Chain means are compared against the continuum at their own deficit,
/// clamped inside the open interval (0, ln N) the solvers accept.
const U_CLAMP: f64 = 1e-6;

fn comparison_block(
    sol: &SpectrumSolution,
    w1: f64,
    ks: f64,
    u_gap: f64,
    u_reference: f64,
) -> Value {
    let mut cmp = Value::obj();
    cmp.push("phase", json::str(phase_name(sol.phase)));
    cmp.push("u_reference", Value::Num(u_reference));
    cmp.push("wasserstein1", Value::Num(w1));
    cmp.push("ks", Value::Num(ks));
    cmp.push("u_gap", Value::Num(u_gap));
    cmp
}

fn eigenvalue_csv(values: &[f64]) -> String {
    let mut csv = Csv::new("index,lambda");
    for (i, &l) in values.iter().enumerate() {
        csv.row_indexed(i as u64, &[l]);
    }
    csv.finish()
}

pub fn run(args: &OracleArgs) -> Result<(), Failure> {
    let target = match (args.target.u, args.target.beta) {
        (Some(u), None) => Target::Deficit(u),
        (None, Some(b)) => Target::InverseTemperature(b),
        // clap's argument group guarantees exactly one.
        _ => unreachable!("target group admits exactly one flag"),
    };
    // Reword the target mismatch in flag terms before the library sees it.
    match (args.method, target) {
        (Method::Newton, Target::InverseTemperature(_)) => {
            return Err(Failure::Lib(entspec::Error::MissingParameter(
                "the newton method fixes the deficit; pass --u".into(),
            )))
        }
        (Method::Metropolis, Target::Deficit(_)) => {
            return Err(Failure::Lib(entspec::Error::MissingParameter(
                "the metropolis sampler fixes the temperature; pass --beta".into(),
            )))
        }
        _ => {}
    }
    let mut cfg = OracleConfig::new(args.n, args.q, target);
    cfg.seed = args.seed;
    let kcfg = KernelConfig::default();

    let mut manifest = Manifest::new("oracle")
        .param("N", Value::UInt(args.n as u64))
        .param("q", Value::Num(args.q));
    manifest = match target {
        Target::Deficit(u) => manifest.param("u", Value::Num(u)),
        Target::InverseTemperature(b) => manifest.param("beta", Value::Num(b)),
    };
    let method_name = match args.method {
        Method::Newton => "newton",
        Method::Metropolis => "metropolis",
    };
    manifest = manifest.param("method", json::str(method_name));

    let paths = out_paths(&args.out);
    match args.method {
        Method::Newton => {
            let manifest = manifest
                .param("format", json::str(format!("{:?}", args.format).to_lowercase()))
                .seed(args.seed);
            let state = minimize_potential(&cfg)?;
            let u = state.energy;
            let sol = phase::solve(&PhasePoint::with_n(args.q, u, args.n as u64), &kcfg)?;
            let dist = entspec::oracle::compare(&state, &sol)?;

            let mut out = Value::obj();
            out.push("manifest", manifest.to_value());
            out.push("method", json::str(method_name));
            out.push("beta", Value::Num(state.beta));
            out.push("xi", Value::Num(state.xi));
            out.push("energy", Value::Num(state.energy));
            out.push("residual", Value::Num(state.residual));
            out.push(
                "comparison",
                comparison_block(&sol, dist.wasserstein1, dist.ks, dist.u_gap, u),
            );
            match args.format {
                Format::Csv => {
                    write_file(&paths.csv, &eigenvalue_csv(&state.eigenvalues))?;
                }
                Format::Json => {
                    let mut data = Value::obj();
                    data.push("lambda", json::nums(state.eigenvalues.iter().copied()));
                    out.push("data", data);
                }
            }
            write_file(&paths.json, &out.render())
        }
        Method::Metropolis => {
            let sweeps = args.sweeps.unwrap_or(100 * args.n);
            let manifest = manifest
                .param("sweeps", Value::UInt(sweeps as u64))
                .param("format", json::str(format!("{:?}", args.format).to_lowercase()))
                .seed(args.seed);
            let run = metropolis_sample(&cfg, sweeps)?;
            let mean_u =
                run.states.iter().map(|s| s.energy).sum::<f64>() / run.states.len() as f64;
            let u_ref = mean_u.clamp(U_CLAMP, (args.n as f64).ln() - U_CLAMP);
            let sol = phase::solve(&PhasePoint::with_n(args.q, u_ref, args.n as u64), &kcfg)?;
            // Chain-averaged distances: single states carry sampling noise.
            let (mut w1, mut ks, mut u_gap) = (0.0, 0.0, 0.0);
            for s in &run.states {
                let d = entspec::oracle::compare(s, &sol)?;
                w1 += d.wasserstein1;
                ks += d.ks;
                u_gap += d.u_gap;
            }
            let m = run.states.len() as f64;
            let last = run.states.last().expect("a positive sweep budget records states");

            let mut out = Value::obj();
            out.push("manifest", manifest.to_value());
            out.push("method", json::str(method_name));
            out.push("states", Value::UInt(run.states.len() as u64));
            out.push("acceptance", Value::Num(run.acceptance));
            out.push("step", Value::Num(run.step));
            out.push("mean_u", Value::Num(mean_u));
            if let Some(w) = &run.warning {
                out.push("warning", json::str(w.clone()));
            }
            out.push(
                "comparison",
                comparison_block(&sol, w1 / m, ks / m, u_gap / m, u_ref),
            );
            match args.format {
                Format::Csv => {
                    write_file(&paths.csv, &eigenvalue_csv(&last.eigenvalues))?;
                }
                Format::Json => {
                    let mut data = Value::obj();
                    data.push("lambda", json::nums(last.eigenvalues.iter().copied()));
                    out.push("data", data);
                }
            }
            write_file(&paths.json, &out.render())
        }
    }
}
