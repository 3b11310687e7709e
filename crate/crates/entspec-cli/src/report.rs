//! Output plumbing shared by the subcommands: the failure type with its
//! exit-code mapping, resolved output paths, and CSV assembly.

use std::path::{Path, PathBuf};

use crate::json;

/// Anything that ends a run unsuccessfully. Exit codes: 2 for flag parsing
/// (clap handles it before this type exists), 3 for domain and phase input
/// errors, 4 for numerical failures, 1 for io problems and failed
/// verification checks.
#[derive(Debug)]
pub enum Failure {
    Lib(entspec::Error),
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    ChecksFailed(usize),
}

impl From<entspec::Error> for Failure {
    fn from(e: entspec::Error) -> Failure {
        Failure::Lib(e)
    }
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Lib(e) if e.is_input_error() => 3,
            Failure::Lib(_) => 4,
            Failure::Io { .. } | Failure::ChecksFailed(_) => 1,
        }
    }

    pub fn kind(&self) -> &str {
        match self {
            Failure::Lib(e) => e.kind(),
            Failure::Io { .. } => "io",
            Failure::ChecksFailed(_) => "verification-failed",
        }
    }

    pub fn message(&self) -> String {
        match self {
            Failure::Lib(e) => e.to_string(),
            Failure::Io { path, source } => format!("{}: {source}", path.display()),
            Failure::ChecksFailed(n) => format!("{n} verification check(s) failed"),
        }
    }

    /// Machine-readable form printed to stderr on every failure.
    pub fn error_json(&self) -> String {
        let mut inner = json::Value::obj();
        inner.push("kind", json::str(self.kind()));
        inner.push("message", json::str(self.message()));
        let mut v = json::Value::obj();
        v.push("error", inner);
        v.render()
    }
}

/// Where a command writes. `--out base` resolves to `base.csv` plus
/// `base.json`; a trailing `.csv` or `.json` on the flag names the base.
pub struct OutPaths {
    pub csv: PathBuf,
    pub json: PathBuf,
}

pub fn out_paths(out: &Path) -> OutPaths {
    let base = match out.extension().and_then(|e| e.to_str()) {
        Some("csv") | Some("json") => out.with_extension(""),
        _ => out.to_path_buf(),
    };
    // Append rather than with_extension: a dotted stem like `v1.2` must
    // stay intact.
    let mut csv = base.clone().into_os_string();
    csv.push(".csv");
    let mut json = base.into_os_string();
    json.push(".json");
    OutPaths {
        csv: csv.into(),
        json: json.into(),
    }
}

pub fn write_file(path: &Path, contents: &str) -> Result<(), Failure> {
    std::fs::write(path, contents).map_err(|source| Failure::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// CSV with a single header row, comma separators, and `.` decimals; every
/// float goes through the same 17-significant-digit formatter as the JSON.
pub struct Csv {
    buf: String,
    columns: usize,
}

impl Csv {
    pub fn new(header: &str) -> Csv {
        let columns = header.split(',').count();
        let mut buf = String::with_capacity(4096);
        buf.push_str(header);
        buf.push('\n');
        Csv { buf, columns }
    }

    pub fn row(&mut self, cells: &[f64]) {
        debug_assert_eq!(cells.len(), self.columns);
        for (i, &x) in cells.iter().enumerate() {
            if i > 0 {
                self.buf.push(',');
            }
            self.buf.push_str(&json::num(x));
        }
        self.buf.push('\n');
    }

    /// Row whose first column is an integer label (an index or sample id).
    pub fn row_indexed(&mut self, index: u64, cells: &[f64]) {
        debug_assert_eq!(cells.len() + 1, self.columns);
        self.buf.push_str(&index.to_string());
        for &x in cells {
            self.buf.push(',');
            self.buf.push_str(&json::num(x));
        }
        self.buf.push('\n');
    }

    pub fn finish(self) -> String {
        self.buf
    }
}
