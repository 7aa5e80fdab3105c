//! Trace CSV and JSON artifacts.
//!
//! Trace columns: `k,res_primal,res_dual_y,res_dual_x,L_beta,delta_k,eta_k,merit`.
//! Row `k = 0` holds the start point. Reals are written with 17 significant
//! digits, so parsing a row gives back the exact doubles.

use std::fmt::Write as _;
use std::path::Path;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::solver::IterateRecord;

pub const TRACE_HEADER: &str = "k,res_primal,res_dual_y,res_dual_x,L_beta,delta_k,eta_k,merit";

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TraceRow {
    pub k: usize,
    pub res_primal: f64,
    pub res_dual_y: f64,
    pub res_dual_x: f64,
    pub l_beta: f64,
    pub delta_k: f64,
    pub eta_k: f64,
    pub merit: f64,
}

impl From<&IterateRecord> for TraceRow {
    fn from(r: &IterateRecord) -> Self {
        Self {
            k: r.k,
            res_primal: r.res_primal,
            res_dual_y: r.res_dual_y,
            res_dual_x: r.res_dual_x,
            l_beta: r.l_beta,
            delta_k: r.delta_k,
            eta_k: r.eta_k,
            merit: r.merit(),
        }
    }
}

/// `{:.16e}`: 17 significant digits.
pub fn fmt_real(x: f64) -> String {
    format!("{x:.16e}")
}

impl TraceRow {
    pub fn to_csv_line(&self) -> String {
        let mut s = self.k.to_string();
        for v in [
            self.res_primal,
            self.res_dual_y,
            self.res_dual_x,
            self.l_beta,
            self.delta_k,
            self.eta_k,
            self.merit,
        ] {
            s.push(',');
            s.push_str(&fmt_real(v));
        }
        s
    }

    pub fn parse(line: &str) -> Result<Self> {
        let fields: Vec<&str> = line.trim().split(',').collect();
        if fields.len() != 8 {
            return Err(Error::Config(format!("trace row needs 8 fields, got {}: '{line}'", fields.len())));
        }
        let k = fields[0]
            .parse()
            .map_err(|_| Error::Config(format!("bad iteration index '{}'", fields[0])))?;
        let mut v = [0.0; 7];
        for (slot, text) in v.iter_mut().zip(&fields[1..]) {
            *slot = text
                .parse()
                .map_err(|_| Error::Config(format!("bad real '{text}' in trace")))?;
        }
        Ok(Self {
            k,
            res_primal: v[0],
            res_dual_y: v[1],
            res_dual_x: v[2],
            l_beta: v[3],
            delta_k: v[4],
            eta_k: v[5],
            merit: v[6],
        })
    }
}

pub fn trace_csv(rows: &[TraceRow]) -> String {
    let mut out = String::with_capacity(160 * (rows.len() + 1));
    out.push_str(TRACE_HEADER);
    out.push('\n');
    for r in rows {
        let _ = writeln!(out, "{}", r.to_csv_line());
    }
    out
}

pub fn parse_trace_csv(text: &str) -> Result<Vec<TraceRow>> {
    let mut lines = text.lines();
    match lines.next() {
        Some(h) if h.trim() == TRACE_HEADER => {}
        other => {
            return Err(Error::Config(format!(
                "trace header must be '{TRACE_HEADER}', got '{}'",
                other.unwrap_or("")
            )))
        }
    }
    lines.filter(|l| !l.trim().is_empty()).map(TraceRow::parse).collect()
}

pub fn write_text(path: &Path, text: &str) -> Result<()> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    }
    std::fs::write(path, text).map_err(|e| Error::io(path, e))
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    write_text(path, &text)
}

pub fn read_trace(path: &Path) -> Result<Vec<TraceRow>> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_trace_csv(&text)
}
