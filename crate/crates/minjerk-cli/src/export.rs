//! Plot-data serialization of trajectory samples as CSV or a single JSON
//! document.

use std::io::{self, Write};

use minjerk::{TrajectorySample, ViaSolution};
use serde::Serialize;

/// Exact CSV column order; one `TrajectorySample` flattened per row.
pub const CSV_HEADER: &str = "t,tau,x,y,vx,vy,ax,ay,jx,jy";

#[derive(Debug, Clone, Copy, Serialize)]
pub struct ExportRecord {
    pub t: f64,
    pub tau: f64,
    pub x: f64,
    pub y: f64,
    pub vx: f64,
    pub vy: f64,
    pub ax: f64,
    pub ay: f64,
    pub jx: f64,
    pub jy: f64,
}

impl From<&TrajectorySample> for ExportRecord {
    fn from(s: &TrajectorySample) -> Self {
        Self {
            t: s.t,
            tau: s.tau,
            x: s.position.x,
            y: s.position.y,
            vx: s.velocity.0,
            vy: s.velocity.1,
            ax: s.acceleration.0,
            ay: s.acceleration.1,
            jx: s.jerk.0,
            jy: s.jerk.1,
        }
    }
}

/// The planned movement echoed back, straight specs without via fields.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct SpecEcho {
    pub x0: f64,
    pub y0: f64,
    pub xf: f64,
    pub yf: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub x1: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub y1: Option<f64>,
    pub tf: f64,
}

/// JSON export: spec echo, solved passage time and constants (curved only),
/// then the sample records with the same ten keys as the CSV columns.
#[derive(Debug, Serialize)]
pub struct ExportDocument {
    pub spec: SpecEcho,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tau1: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c1: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c2: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pi1: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pi2: Option<f64>,
    pub samples: Vec<ExportRecord>,
}

impl ExportDocument {
    pub fn straight(spec: &minjerk::MotionSpec, samples: &[TrajectorySample]) -> Self {
        Self {
            spec: SpecEcho {
                x0: spec.start.x,
                y0: spec.start.y,
                xf: spec.end.x,
                yf: spec.end.y,
                x1: None,
                y1: None,
                tf: spec.duration,
            },
            tau1: None,
            c1: None,
            c2: None,
            pi1: None,
            pi2: None,
            samples: samples.iter().map(ExportRecord::from).collect(),
        }
    }

    pub fn curved(sol: &ViaSolution, samples: &[TrajectorySample]) -> Self {
        let base = &sol.spec.base;
        Self {
            spec: SpecEcho {
                x0: base.start.x,
                y0: base.start.y,
                xf: base.end.x,
                yf: base.end.y,
                x1: Some(sol.spec.via.x),
                y1: Some(sol.spec.via.y),
                tf: base.duration,
            },
            tau1: Some(sol.tau1),
            c1: Some(sol.c1),
            c2: Some(sol.c2),
            pi1: Some(sol.pi1),
            pi2: Some(sol.pi2),
            samples: samples.iter().map(ExportRecord::from).collect(),
        }
    }
}

fn require_samples(samples: &[TrajectorySample]) -> io::Result<()> {
    if samples.is_empty() {
        return Err(io::Error::new(
            io::ErrorKind::InvalidInput,
            "no samples to export",
        ));
    }
    Ok(())
}

/// 17 significant digits, enough to round-trip any f64 exactly.
fn fmt17(v: f64) -> String {
    format!("{v:.16e}")
}

/// Writes the header row followed by one record per line, floats rendered
/// with 17 significant digits, lines terminated by a single `\n`.
pub fn export_csv(samples: &[TrajectorySample], out: &mut dyn Write) -> io::Result<()> {
    require_samples(samples)?;
    writeln!(out, "{CSV_HEADER}")?;
    for s in samples {
        let r = ExportRecord::from(s);
        writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{}",
            fmt17(r.t),
            fmt17(r.tau),
            fmt17(r.x),
            fmt17(r.y),
            fmt17(r.vx),
            fmt17(r.vy),
            fmt17(r.ax),
            fmt17(r.ay),
            fmt17(r.jx),
            fmt17(r.jy),
        )?;
    }
    Ok(())
}

/// Writes the document as one JSON object, numbers in shortest round-trip
/// decimal form, followed by a newline.
pub fn export_json(doc: &ExportDocument, out: &mut dyn Write) -> io::Result<()> {
    require_samples_doc(doc)?;
    serde_json::to_writer(&mut *out, doc)?;
    writeln!(out)
}

fn require_samples_doc(doc: &ExportDocument) -> io::Result<()> {
    if doc.samples.is_empty() {
        return Err(io::Error::new(
            io::ErrorKind::InvalidInput,
            "no samples to export",
        ));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use minjerk::{sample_straight, MotionSpec, Point2};

    fn spec() -> MotionSpec {
        MotionSpec::new(Point2::new(0.0, 0.0), Point2::new(0.3, 0.0), 1.0)
    }

    #[test]
    fn csv_has_header_plus_one_line_per_sample() {
        let samples = sample_straight(&spec(), 2).unwrap();
        let mut buf = Vec::new();
        export_csv(&samples, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 3);
        assert_eq!(lines[0], CSV_HEADER);
        assert!(text.ends_with('\n'));
    }

    #[test]
    fn csv_first_row_carries_the_initial_jerk() {
        let samples = sample_straight(&spec(), 2).unwrap();
        let mut buf = Vec::new();
        export_csv(&samples, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let row: Vec<f64> = text
            .lines()
            .nth(1)
            .unwrap()
            .split(',')
            .map(|v| v.parse().unwrap())
            .collect();
        // t, tau, x, y, vx, vy, ax, ay all zero; jx = 60 * 0.3 = 18
        assert_eq!(&row[..8], &[0.0; 8]);
        assert_eq!(row[8], 18.0);
        assert_eq!(row[9], 0.0);
    }

    #[test]
    fn empty_sample_lists_are_rejected_before_writing() {
        let mut buf = Vec::new();
        let err = export_csv(&[], &mut buf).unwrap_err();
        assert_eq!(err.kind(), io::ErrorKind::InvalidInput);
        assert!(buf.is_empty());

        let doc = ExportDocument::straight(&spec(), &[]);
        let err = export_json(&doc, &mut buf).unwrap_err();
        assert_eq!(err.kind(), io::ErrorKind::InvalidInput);
        assert!(buf.is_empty());
    }

    #[test]
    fn straight_json_has_no_via_keys() {
        let samples = sample_straight(&spec(), 2).unwrap();
        let doc = ExportDocument::straight(&spec(), &samples);
        let mut buf = Vec::new();
        export_json(&doc, &mut buf).unwrap();
        let value: serde_json::Value = serde_json::from_slice(&buf).unwrap();
        let obj = value.as_object().unwrap();
        assert!(!obj.contains_key("tau1"));
        assert!(!obj["spec"].as_object().unwrap().contains_key("x1"));
        assert_eq!(obj["samples"].as_array().unwrap().len(), 2);
    }
}
