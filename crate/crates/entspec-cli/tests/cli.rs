//! End-to-end tests of the `entspec` binary: file schemas, exit codes,
//! reproducibility, and the documented example invocations.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_entspec")
}

/// Fresh scratch directory per test so runs never collide.
fn scratch(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("entspec-cli-{tag}-{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn run(args: &[&str]) -> Output {
    Command::new(bin()).args(args).output().unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("process exited normally")
}

fn read(path: &Path) -> String {
    std::fs::read_to_string(path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

fn json_file(path: &Path) -> serde_json::Value {
    serde_json::from_str(&read(path)).unwrap()
}

fn csv_rows(text: &str) -> Vec<Vec<f64>> {
    text.lines()
        .skip(1)
        .map(|line| line.split(',').map(|c| c.parse().unwrap()).collect())
        .collect()
}

fn assert_timestamp_shape(ts: &str) {
    let b = ts.as_bytes();
    assert_eq!(b.len(), 20, "timestamp {ts}");
    for (i, c) in [(4, b'-'), (7, b'-'), (10, b'T'), (13, b':'), (16, b':'), (19, b'Z')] {
        assert_eq!(b[i], c, "timestamp {ts}");
    }
}

#[test]
fn spectrum_tabulates_an_entangled_density() {
    let dir = scratch("spec-ent");
    let out = dir.join("run");
    let res = run(&[
        "spectrum", "--q", "1", "--u", "0.2", "--grid-points", "256", "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code(&res), 0, "{}", String::from_utf8_lossy(&res.stderr));

    let csv = read(&dir.join("run.csv"));
    assert!(csv.starts_with("lambda,density\n"));
    let rows = csv_rows(&csv);
    assert_eq!(rows.len(), 256);
    // Trapezoid mass over the tabulated sea.
    let mass: f64 = rows
        .windows(2)
        .map(|w| 0.5 * (w[1][0] - w[0][0]) * (w[0][1] + w[1][1]))
        .sum();
    assert!((mass - 1.0).abs() < 5e-3, "mass {mass}");

    let meta = json_file(&dir.join("run.json"));
    assert_eq!(meta["phase"], "entangled");
    assert_eq!(meta["boundary"], false);
    for key in ["a", "b", "alpha", "delta", "A", "B", "beta", "xi"] {
        assert!(meta[key].is_number(), "missing {key}");
    }
    assert!(meta.get("mu").is_none(), "no evaporated eigenvalue here");
    let man = &meta["manifest"];
    assert_eq!(man["command"], "spectrum");
    assert_eq!(man["parameters"]["grid_points"], 256);
    assert_eq!(man["tool_version"].as_str().unwrap().split('.').count(), 3);
    assert_timestamp_shape(man["timestamp"].as_str().unwrap());
}

#[test]
fn spectrum_reports_the_evaporated_eigenvalue_in_metadata_only() {
    let dir = scratch("spec-sep");
    let out = dir.join("run");
    let res = run(&[
        "spectrum", "--q", "2", "--u", "1.0", "--N", "100", "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code(&res), 0);

    let meta = json_file(&dir.join("run.json"));
    assert_eq!(meta["phase"], "separable");
    // mu solves N mu^2 - mu + 1 = e^u at q = 2, N = 100.
    let target = std::f64::consts::E;
    let mu_expected = (1.0 + (1.0 + 400.0 * (target - 1.0)).sqrt()) / 200.0;
    let mu = meta["mu"].as_f64().unwrap();
    assert!((mu - mu_expected).abs() < 1e-12, "mu {mu} vs {mu_expected}");

    // The grid carries only the sea: every point sits far below N mu.
    let rows = csv_rows(&read(&dir.join("run.csv")));
    let top = rows.iter().map(|r| r[0]).fold(0.0f64, f64::max);
    assert!(top < 5.0, "sea edge {top}");
    assert!(100.0 * mu > 10.0);
}

#[test]
fn boundary_deficits_resolve_to_typical_with_a_flag() {
    let dir = scratch("spec-bnd");
    let out = dir.join("run");
    // u = u_C(2) = ln(5/4) exactly, printed to full precision.
    let res = run(&[
        "spectrum", "--q", "2", "--u", "0.22314355131420976", "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code(&res), 0);
    let meta = json_file(&dir.join("run.json"));
    assert_eq!(meta["phase"], "typical");
    assert_eq!(meta["boundary"], true);

    // An interior typical point carries no flag.
    let res = run(&["spectrum", "--q", "10", "--u", "0.5", "--out", out.to_str().unwrap()]);
    assert_eq!(code(&res), 0);
    let meta = json_file(&dir.join("run.json"));
    assert_eq!(meta["phase"], "typical");
    assert_eq!(meta["boundary"], false);
}

#[test]
fn critical_rows_match_the_closed_forms_where_the_grid_lands_on_two() {
    let dir = scratch("crit-two");
    let out = dir.join("curves");
    // Spacing 0.2 puts a row at q = 2 up to rounding.
    let res = run(&[
        "critical", "--q-min", "0.6", "--q-max", "20", "--steps", "98", "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code(&res), 0);
    let csv = read(&dir.join("curves.csv"));
    assert!(csv.starts_with("q,u_C,u_E,delta_C,A_C,B_C\n"));
    let rows = csv_rows(&csv);
    assert_eq!(rows.len(), 98);
    let row = rows
        .iter()
        .find(|r| (r[0] - 2.0).abs() < 1e-9)
        .expect("a row at q = 2");
    assert!((row[1] - 1.25f64.ln()).abs() < 1e-9, "u_C {}", row[1]);
    assert!((row[2] - std::f64::consts::LN_2).abs() < 1e-9, "u_E {}", row[2]);
    assert!((row[3] - 1.0).abs() < 1e-9, "delta_C {}", row[3]);
    assert!(row[4].abs() < 1e-9, "A_C {}", row[4]);
    assert!((row[5] - 2.0).abs() < 1e-9, "B_C {}", row[5]);
}

#[test]
fn critical_summary_locates_the_minimum_and_the_asymptotes() {
    let dir = scratch("crit-sum");
    let out = dir.join("curves");
    let res = run(&[
        "critical", "--q-min", "0.6", "--q-max", "20", "--steps", "200", "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code(&res), 0);
    assert_eq!(csv_rows(&read(&dir.join("curves.csv"))).len(), 200);

    let summary = json_file(&dir.join("curves.json"));
    let q_star = summary["u_C_min"]["q"].as_f64().unwrap();
    let u_star = summary["u_C_min"]["u"].as_f64().unwrap();
    assert!((q_star - 3.733).abs() < 0.005, "q* {q_star}");
    assert!((u_star - 0.214).abs() < 0.005, "u* {u_star}");
    let a = &summary["asymptotes"];
    assert!((a["u_C"].as_f64().unwrap() - (4.0f64 / 3.0).ln()).abs() < 1e-15);
    assert!((a["u_E"].as_f64().unwrap() - 2.0 * std::f64::consts::LN_2).abs() < 1e-15);
}

#[test]
fn a_narrow_critical_range_pins_the_evaporation_deficit_at_five() {
    let dir = scratch("crit-five");
    let out = dir.join("narrow");
    let res = run(&[
        "critical", "--q-min", "5", "--q-max", "5.0001", "--steps", "2", "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code(&res), 0);
    let rows = csv_rows(&read(&dir.join("narrow.csv")));
    assert_eq!(rows.len(), 2);
    assert!((rows[0][2] - entspec::critical::u_e(5.0).unwrap()).abs() < 1e-12);
    assert!((rows[0][2] - 0.9344).abs() < 1e-3, "u_E(5) {}", rows[0][2]);
}

#[test]
fn reruns_with_the_same_flags_are_byte_identical_apart_from_the_timestamp() {
    let dir = scratch("det");
    let (a, b) = (dir.join("a"), dir.join("b"));
    for out in [&a, &b] {
        let res = run(&[
            "spectrum", "--q", "1.7", "--u", "0.31", "--out", out.to_str().unwrap(),
        ]);
        assert_eq!(code(&res), 0);
    }
    assert_eq!(read(&dir.join("a.csv")), read(&dir.join("b.csv")));
    let mut ja = json_file(&dir.join("a.json"));
    let mut jb = json_file(&dir.join("b.json"));
    for j in [&mut ja, &mut jb] {
        j["manifest"]
            .as_object_mut()
            .unwrap()
            .remove("timestamp")
            .expect("manifest carries a timestamp");
    }
    assert_eq!(ja, jb);
}

#[test]
fn sampled_commands_are_keyed_by_their_seed() {
    let dir = scratch("seeds");
    let run_chain = |name: &str, seed: &str| {
        let out = dir.join(name);
        let res = run(&[
            "oracle", "--N", "16", "--q", "2", "--beta", "1.0", "--method", "metropolis",
            "--sweeps", "800", "--seed", seed, "--out", out.to_str().unwrap(),
        ]);
        assert_eq!(code(&res), 0, "{}", String::from_utf8_lossy(&res.stderr));
        read(&dir.join(format!("{name}.csv")))
    };
    let first = run_chain("s7a", "7");
    let again = run_chain("s7b", "7");
    let other = run_chain("s8", "8");
    assert_eq!(first, again, "same seed, same chain");
    assert_ne!(first, other, "different seed, different chain");
}

#[test]
fn newton_oracle_reports_its_distance_to_the_continuum() {
    let dir = scratch("newton");
    let out = dir.join("gas");
    let res = run(&[
        "oracle", "--N", "32", "--q", "2", "--u", "0.1", "--method", "newton", "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code(&res), 0);

    let csv = read(&dir.join("gas.csv"));
    assert!(csv.starts_with("index,lambda\n"));
    let rows = csv_rows(&csv);
    assert_eq!(rows.len(), 32);
    assert!(rows.windows(2).all(|w| w[0][1] <= w[1][1]), "sorted output");
    let total: f64 = rows.iter().map(|r| r[1]).sum();
    assert!((total - 1.0).abs() < 1e-9, "trace {total}");

    let meta = json_file(&dir.join("gas.json"));
    assert!(meta["residual"].as_f64().unwrap() < 1e-9);
    assert_eq!(meta["comparison"]["phase"], "entangled");
    assert!(meta["comparison"]["wasserstein1"].as_f64().unwrap() < 0.05);
    assert!(meta["comparison"]["u_gap"].as_f64().unwrap() < 1e-9);
}

#[test]
fn metropolis_oracle_reports_chain_diagnostics() {
    let dir = scratch("chain");
    let out = dir.join("gas");
    let res = run(&[
        "oracle", "--N", "32", "--q", "1", "--beta", "3.0", "--method", "metropolis",
        "--seed", "11", "--out", out.to_str().unwrap(),
    ]);
    assert_eq!(code(&res), 0);
    let meta = json_file(&dir.join("gas.json"));
    assert_eq!(meta["states"], 100);
    let acc = meta["acceptance"].as_f64().unwrap();
    assert!((0.1..=0.9).contains(&acc), "acceptance {acc}");
    let mean_u = meta["mean_u"].as_f64().unwrap();
    assert!((0.05..0.3).contains(&mean_u), "mean deficit {mean_u}");
    assert!(meta["comparison"]["ks"].as_f64().unwrap() < 0.2);
    assert_eq!(meta["manifest"]["parameters"]["sweeps"], 3200);
    assert_eq!(csv_rows(&read(&dir.join("gas.csv"))).len(), 32);
}

#[test]
fn haar_summary_estimates_the_known_deficits() {
    let dir = scratch("haar");
    let out = dir.join("draws");
    let res = run(&[
        "haar", "--N", "64", "--samples", "10", "--seed", "3", "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code(&res), 0);

    let csv = read(&dir.join("draws.csv"));
    assert!(csv.starts_with("sample,eigenvalue\n"));
    let rows = csv_rows(&csv);
    assert_eq!(rows.len(), 640);
    assert_eq!(rows.iter().map(|r| r[0] as u64).max(), Some(9));

    let meta = json_file(&dir.join("draws.json"));
    assert!(meta["ks_vs_MP"].as_f64().unwrap() < 0.05);
    let orders = meta["orders"].as_array().unwrap();
    let qs: Vec<f64> = orders.iter().map(|o| o["q"].as_f64().unwrap()).collect();
    assert_eq!(qs, [1.0, 2.0, 5.0], "default orders");
    assert!((orders[0]["mean_u"].as_f64().unwrap() - 0.5).abs() < 0.03);
    assert!((orders[1]["mean_u"].as_f64().unwrap() - std::f64::consts::LN_2).abs() < 0.03);
    for o in orders {
        assert_eq!(o["u_estimates"].as_array().unwrap().len(), 10);
        assert!(o["std_u"].as_f64().unwrap() < 0.05);
    }
}

#[test]
fn json_format_embeds_the_data_columns_instead_of_a_csv() {
    let dir = scratch("fmt");
    let out = dir.join("run");
    let res = run(&[
        "spectrum", "--q", "2", "--u", "0.1", "--grid-points", "32", "--format", "json",
        "--out", out.to_str().unwrap(),
    ]);
    assert_eq!(code(&res), 0);
    assert!(!dir.join("run.csv").exists(), "json format writes no csv");
    let meta = json_file(&dir.join("run.json"));
    assert_eq!(meta["data"]["lambda"].as_array().unwrap().len(), 32);
    assert_eq!(meta["data"]["density"].as_array().unwrap().len(), 32);
}

#[test]
fn out_flag_accepts_an_extension_spelling() {
    let dir = scratch("outext");
    let out = dir.join("table.csv");
    let res = run(&[
        "critical", "--q-min", "1", "--q-max", "2", "--steps", "3", "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code(&res), 0);
    assert!(dir.join("table.csv").exists());
    assert!(dir.join("table.json").exists());
}

#[test]
fn verify_fast_passes_and_reports_every_check() {
    let res = run(&["verify", "--level", "fast"]);
    assert_eq!(code(&res), 0, "{}", String::from_utf8_lossy(&res.stdout));
    let report: serde_json::Value =
        serde_json::from_slice(&res.stdout).expect("stdout is a JSON report");
    assert_eq!(report["failed"], 0);
    assert!(report["passed"].as_u64().unwrap() >= 20);
    let names: Vec<&str> = report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    assert!(names.contains(&"inverse temperature on the order-one critical line"));
    for c in report["checks"].as_array().unwrap() {
        assert_eq!(c["pass"], true, "{}", c["name"]);
    }
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(code(&run(&["spectrum", "--q", "2", "--frobnicate"])), 2);
    // Missing required flag.
    assert_eq!(code(&run(&["spectrum", "--q", "2"])), 2);
    // The two conjugate targets exclude each other.
    let res = run(&[
        "oracle", "--N", "64", "--q", "2", "--u", "0.1", "--beta", "3", "--method",
        "newton", "--out", "/tmp/never-written",
    ]);
    assert_eq!(code(&res), 2);
}

#[test]
fn input_errors_exit_three_with_machine_readable_stderr() {
    let dir = scratch("errs");
    let out = dir.join("x");
    let cases: [(&[&str], &str); 3] = [
        (
            &["spectrum", "--q", "0.2", "--u", "0.1", "--out", "x"],
            "domain",
        ),
        (
            &["spectrum", "--q", "2", "--u", "1.5", "--out", "x"],
            "missing-parameter",
        ),
        (
            &["critical", "--q-min", "3", "--q-max", "2", "--steps", "5", "--out", "x"],
            "domain",
        ),
    ];
    for (args, kind) in cases {
        let mut argv: Vec<&str> = args.to_vec();
        let pos = argv.len() - 1;
        let path = out.to_str().unwrap();
        argv[pos] = path;
        let res = run(&argv);
        assert_eq!(code(&res), 3, "{argv:?}");
        let err: serde_json::Value =
            serde_json::from_slice(&res.stderr).expect("stderr is JSON");
        assert_eq!(err["error"]["kind"], kind, "{argv:?}");
        assert!(err["error"]["message"].as_str().unwrap().len() > 10);
    }
}
