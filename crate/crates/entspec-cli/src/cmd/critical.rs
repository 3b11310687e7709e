//! `entspec critical`: both phase boundaries tabulated over a range of
//! entropy orders, with the curve landmarks in the JSON summary.

use entspec::critical::{critical_constants, u_c_minimum};
use entspec::Error;

use crate::json::{self, Value};
use crate::manifest::Manifest;
use crate::report::{out_paths, write_file, Csv, Failure};
use crate::{CriticalArgs, Format};

pub fn run(args: &CriticalArgs) -> Result<(), Failure> {
    if !(args.q_min > 0.5 && args.q_max > args.q_min) {
        return Err(Failure::Lib(Error::Domain(format!(
            "need 1/2 < q_min < q_max, got q_min = {}, q_max = {}",
            args.q_min, args.q_max
        ))));
    }
    if args.steps < 2 {
        return Err(Failure::Lib(Error::Domain(format!(
            "need at least 2 tabulation steps, got {}",
            args.steps
        ))));
    }

    let mut rows = Vec::with_capacity(args.steps);
    for i in 0..args.steps {
        let t = i as f64 / (args.steps - 1) as f64;
        let q = args.q_min + (args.q_max - args.q_min) * t;
        rows.push(critical_constants(q)?);
    }

    let manifest = Manifest::new("critical")
        .param("q_min", Value::Num(args.q_min))
        .param("q_max", Value::Num(args.q_max))
        .param("steps", Value::UInt(args.steps as u64))
        .param("format", json::str(format!("{:?}", args.format).to_lowercase()));

    let (q_star, u_star) = u_c_minimum();
    let mut minimum = Value::obj();
    minimum.push("q", Value::Num(q_star));
    minimum.push("u", Value::Num(u_star));
    let mut asymptotes = Value::obj();
    asymptotes.push("u_C", Value::Num((4.0f64 / 3.0).ln()));
    asymptotes.push("u_E", Value::Num(2.0 * std::f64::consts::LN_2));

    let mut summary = Value::obj();
    summary.push("manifest", manifest.to_value());
    summary.push("u_C_min", minimum);
    summary.push("asymptotes", asymptotes);

    let paths = out_paths(&args.out);
    match args.format {
        Format::Csv => {
            let mut csv = Csv::new("q,u_C,u_E,delta_C,A_C,B_C");
            for r in &rows {
                csv.row(&[r.q, r.u_c, r.u_e, r.delta_c, r.a_c, r.b_c]);
            }
            write_file(&paths.csv, &csv.finish())?;
        }
        Format::Json => {
            let mut data = Value::obj();
            data.push("q", json::nums(rows.iter().map(|r| r.q)));
            data.push("u_C", json::nums(rows.iter().map(|r| r.u_c)));
            data.push("u_E", json::nums(rows.iter().map(|r| r.u_e)));
            data.push("delta_C", json::nums(rows.iter().map(|r| r.delta_c)));
            data.push("A_C", json::nums(rows.iter().map(|r| r.a_c)));
            data.push("B_C", json::nums(rows.iter().map(|r| r.b_c)));
            summary.push("data", data);
        }
    }
    write_file(&paths.json, &summary.render())
}
