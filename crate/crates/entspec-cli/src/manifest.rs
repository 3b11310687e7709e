//! Run manifest recorded with every report: command, parameters, version,
//! seed, and a UTC timestamp. Two runs with the same manifest apart from
//! the timestamp produce byte-identical numeric output.

use std::time::{SystemTime, UNIX_EPOCH};

use crate::json::Value;

pub struct Manifest {
    command: &'static str,
    parameters: Vec<(&'static str, Value)>,
    seed: Option<u64>,
}

impl Manifest {
    pub fn new(command: &'static str) -> Manifest {
        Manifest {
            command,
            parameters: Vec::new(),
            seed: None,
        }
    }

    pub fn param(mut self, key: &'static str, value: Value) -> Manifest {
        self.parameters.push((key, value));
        self
    }

    pub fn seed(mut self, seed: u64) -> Manifest {
        self.seed = Some(seed);
        self
    }

    pub fn to_value(&self) -> Value {
        let mut params = Value::obj();
        for (key, value) in &self.parameters {
            params.push(key, value.clone());
        }
        let mut v = Value::obj();
        v.push("command", crate::json::str(self.command));
        v.push("parameters", params);
        v.push("tool_version", crate::json::str(env!("CARGO_PKG_VERSION")));
        if let Some(seed) = self.seed {
            v.push("seed", Value::UInt(seed));
        }
        v.push("timestamp", crate::json::str(utc_now()));
        v
    }
}

/// Current UTC time as ISO-8601 with second resolution.
pub fn utc_now() -> String {
    let secs = SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0);
    format_epoch(secs)
}

fn format_epoch(secs: u64) -> String {
    let (y, m, d) = civil_from_days((secs / 86_400) as i64);
    let tod = secs % 86_400;
    format!(
        "{y:04}-{m:02}-{d:02}T{:02}:{:02}:{:02}Z",
        tod / 3600,
        (tod % 3600) / 60,
        tod % 60
    )
}

/// Gregorian date from days since 1970-01-01, via the standard shift to an
/// era starting 0000-03-01 so leap days land at the end of the year.
fn civil_from_days(z: i64) -> (i64, u32, u32) {
    let z = z + 719_468;
    let era = z.div_euclid(146_097);
    let doe = z.rem_euclid(146_097);
    let yoe = (doe - doe / 1460 + doe / 36_524 - doe / 146_096) / 365;
    let doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    let mp = (5 * doy + 2) / 153;
    let d = (doy - (153 * mp + 2) / 5 + 1) as u32;
    let m = (if mp < 10 { mp + 3 } else { mp - 9 }) as u32;
    let y = yoe + era * 400 + i64::from(m <= 2);
    (y, m, d)
}
