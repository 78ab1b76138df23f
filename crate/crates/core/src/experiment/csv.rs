use std::fmt::Write as _;
use std::path::Path;

use super::report::{CurvePoint, ExperimentReport};
use crate::error::{Error, Result};

pub const CURVE_HEADER: &str = "illuminations,sampling_ratio,accuracy";

/// CSV text of the accuracy curve: header line, then one LF-terminated row
/// per count with ratio and accuracy at 4 decimals.
pub fn format_curve_csv(report: &ExperimentReport) -> Result<String> {
    if report.points.is_empty() {
        return Err(Error::Precondition(
            "cannot write an empty accuracy curve".into(),
        ));
    }
    let mut out = String::with_capacity(32 * (report.points.len() + 1));
    out.push_str(CURVE_HEADER);
    out.push('\n');
    for p in &report.points {
        writeln!(
            out,
            "{},{:.4},{:.4}",
            p.illuminations, p.sampling_ratio, p.accuracy
        )
        .expect("write to String");
    }
    Ok(out)
}

pub fn write_curve_csv(report: &ExperimentReport, path: impl AsRef<Path>) -> Result<()> {
    let text = format_curve_csv(report)?;
    std::fs::write(path.as_ref(), text).map_err(|e| Error::io(path, e))
}

/// Parses text produced by [`format_curve_csv`].
pub fn parse_curve_csv(text: &str) -> Result<Vec<CurvePoint>> {
    let mut lines = text.lines();
    match lines.next() {
        Some(CURVE_HEADER) => {}
        other => return Err(Error::Format(format!("unexpected CSV header {other:?}"))),
    }
    lines
        .enumerate()
        .map(|(i, line)| {
            let bad = || Error::Format(format!("malformed CSV row {}: {line:?}", i + 2));
            let mut fields = line.split(',');
            let (Some(n), Some(r), Some(a), None) =
                (fields.next(), fields.next(), fields.next(), fields.next())
            else {
                return Err(bad());
            };
            Ok(CurvePoint {
                illuminations: n.parse().map_err(|_| bad())?,
                sampling_ratio: r.parse().map_err(|_| bad())?,
                accuracy: a.parse().map_err(|_| bad())?,
            })
        })
        .collect()
}
