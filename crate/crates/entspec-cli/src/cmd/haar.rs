//! `entspec haar`: unconstrained Haar-random reduced spectra, their pooled
//! distance to the Marchenko-Pastur law, and per-sample deficit estimates.

use entspec::haar::{marchenko_pastur_ks, sample_spectrum, u_estimate};
use entspec::Error;

use crate::json::{self, Value};
use crate::manifest::Manifest;
use crate::report::{out_paths, write_file, Csv, Failure};
use crate::{Format, HaarArgs};

pub fn run(args: &HaarArgs) -> Result<(), Failure> {
    if args.samples == 0 {
        return Err(Failure::Lib(Error::Domain(
            "need at least one sample".into(),
        )));
    }
    if args.q_list.is_empty() {
        return Err(Failure::Lib(Error::Domain(
            "need at least one entropy order".into(),
        )));
    }

    let mut spectra = Vec::with_capacity(args.samples);
    for k in 0..args.samples {
        spectra.push(sample_spectrum(args.n, args.seed.wrapping_add(k as u64))?);
    }

    // Per-sample deficit estimates for every requested order.
    let mut estimates: Vec<Vec<f64>> = Vec::with_capacity(args.q_list.len());
    for &q in &args.q_list {
        let mut us = Vec::with_capacity(args.samples);
        for s in &spectra {
            us.push(u_estimate(s, q)?);
        }
        estimates.push(us);
    }

    let mut pooled: Vec<f64> = spectra
        .iter()
        .flat_map(|s| s.scaled_eigenvalues.iter().copied())
        .collect();
    pooled.sort_by(|a, b| a.total_cmp(b));
    let ks = marchenko_pastur_ks(&pooled);

    let manifest = Manifest::new("haar")
        .param("N", Value::UInt(args.n as u64))
        .param("samples", Value::UInt(args.samples as u64))
        .param("q", json::nums(args.q_list.iter().copied()))
        .param("format", json::str(format!("{:?}", args.format).to_lowercase()))
        .seed(args.seed);

    let mut orders = Vec::with_capacity(args.q_list.len());
    for (&q, us) in args.q_list.iter().zip(&estimates) {
        let m = us.len() as f64;
        let mean = us.iter().sum::<f64>() / m;
        let var = us.iter().map(|u| (u - mean) * (u - mean)).sum::<f64>() / m;
        let mut o = Value::obj();
        o.push("q", Value::Num(q));
        o.push("mean_u", Value::Num(mean));
        o.push("std_u", Value::Num(var.sqrt()));
        o.push("u_estimates", json::nums(us.iter().copied()));
        orders.push(o);
    }

    let mut out = Value::obj();
    out.push("manifest", manifest.to_value());
    out.push("ks_vs_MP", Value::Num(ks));
    out.push("orders", json::arr(orders));

    let paths = out_paths(&args.out);
    match args.format {
        Format::Csv => {
            let mut csv = Csv::new("sample,eigenvalue");
            for (k, s) in spectra.iter().enumerate() {
                for &l in &s.scaled_eigenvalues {
                    csv.row_indexed(k as u64, &[l]);
                }
            }
            write_file(&paths.csv, &csv.finish())?;
        }
        Format::Json => {
            let mut data = Value::obj();
            let mut sample_col = Vec::with_capacity(args.samples * args.n);
            for (k, s) in spectra.iter().enumerate() {
                sample_col.extend(std::iter::repeat(Value::UInt(k as u64)).take(s.n));
            }
            data.push("sample", Value::Arr(sample_col));
            data.push(
                "eigenvalue",
                json::nums(
                    spectra
                        .iter()
                        .flat_map(|s| s.scaled_eigenvalues.iter().copied()),
                ),
            );
            out.push("data", data);
        }
    }
    write_file(&paths.json, &out.render())
}
