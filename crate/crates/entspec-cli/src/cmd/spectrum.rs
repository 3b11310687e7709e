//! `entspec spectrum`: the continuum density at one phase point.

use entspec::phase::{self, Phase, PhasePoint};
use entspec::special::KernelConfig;
use entspec::spectrum::export_grid;

use crate::json::{self, Value};
use crate::manifest::Manifest;
use crate::report::{out_paths, write_file, Csv, Failure};
use crate::{Format, SpectrumArgs};

pub fn phase_name(phase: Phase) -> &'static str {
    match phase {
        Phase::Entangled => "entangled",
        Phase::Typical => "typical",
        Phase::Separable => "separable",
    }
}

pub fn run(args: &SpectrumArgs) -> Result<(), Failure> {
    let point = match args.n {
        Some(n) => PhasePoint::with_n(args.q, args.u, n),
        None => PhasePoint::new(args.q, args.u),
    };
    let cfg = KernelConfig::default();
    let sol = phase::solve(&point, &cfg)?;
    let grid = export_grid(&sol, args.grid_points, &cfg)?;

    let mut manifest = Manifest::new("spectrum")
        .param("q", Value::Num(args.q))
        .param("u", Value::Num(args.u));
    if let Some(n) = args.n {
        manifest = manifest.param("N", Value::UInt(n));
    }
    let manifest = manifest
        .param("grid_points", Value::UInt(args.grid_points as u64))
        .param("format", json::str(format!("{:?}", args.format).to_lowercase()));

    // The evaporated eigenvalue stays in the metadata; the grid holds only
    // the continuous sea.
    let mut meta = Value::obj();
    meta.push("manifest", manifest.to_value());
    meta.push("phase", json::str(phase_name(sol.phase)));
    meta.push("boundary", Value::Bool(sol.boundary));
    meta.push("a", Value::Num(sol.support.a));
    meta.push("b", Value::Num(sol.support.b));
    meta.push("alpha", Value::Num(sol.support.alpha));
    meta.push("delta", Value::Num(sol.support.delta));
    meta.push("A", Value::Num(sol.a_coeff));
    meta.push("B", Value::Num(sol.b_coeff));
    meta.push("beta", Value::Num(sol.beta));
    meta.push("xi", Value::Num(sol.xi));
    if let Some(mu) = sol.mu {
        meta.push("mu", Value::Num(mu));
    }

    let paths = out_paths(&args.out);
    match args.format {
        Format::Csv => {
            let mut csv = Csv::new("lambda,density");
            for (&l, &d) in grid.lambdas.iter().zip(&grid.densities) {
                csv.row(&[l, d]);
            }
            write_file(&paths.csv, &csv.finish())?;
        }
        Format::Json => {
            let mut data = Value::obj();
            data.push("lambda", json::nums(grid.lambdas.iter().copied()));
            data.push("density", json::nums(grid.densities.iter().copied()));
            meta.push("data", data);
        }
    }
    write_file(&paths.json, &meta.render())
}
