//! Buffered CSV and JSON Lines emission. Everything is rendered into a
//! `String` first so parallel work never interleaves on stdout.

use std::fmt::Write as _;

use replica_entropy::record::format_float;
use replica_entropy::OutputRecord;
use serde::Serialize;

pub fn json_line<T: Serialize>(out: &mut String, value: &T) {
    // our record types hold only strings, maps and finite or non-finite floats
    out.push_str(&serde_json::to_string(value).expect("records serialize"));
    out.push('\n');
}

pub fn records(records: &[OutputRecord], json: bool) -> String {
    let mut out = String::new();
    if json {
        for r in records {
            json_line(&mut out, r);
        }
    } else {
        out.push_str(OutputRecord::CSV_HEADER);
        out.push('\n');
        for r in records {
            out.push_str(&r.csv_row());
            out.push('\n');
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SweepLine {
    pub ratio: f64,
    pub abs_alpha1: f64,
    pub entropy_nats: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_entropy: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub abs_diff: Option<f64>,
}

pub const SWEEP_HEADER: &str = "ratio,abs_alpha1,entropy_nats";
pub const SWEEP_ORACLE_COLUMNS: &str = ",oracle_entropy,abs_diff";

/// Sweep table; the oracle columns appear when `with_oracle` is set and are
/// left empty on rows the oracle skipped.
pub fn sweep_csv(rows: &[SweepLine], with_oracle: bool) -> String {
    let mut out = String::from(SWEEP_HEADER);
    if with_oracle {
        out.push_str(SWEEP_ORACLE_COLUMNS);
    }
    out.push('\n');
    for r in rows {
        let _ = write!(
            out,
            "{},{},{}",
            format_float(r.ratio),
            format_float(r.abs_alpha1),
            format_float(r.entropy_nats)
        );
        if with_oracle {
            for field in [r.oracle_entropy, r.abs_diff] {
                out.push(',');
                if let Some(x) = field {
                    out.push_str(&format_float(x));
                }
            }
        }
        out.push('\n');
    }
    out
}
