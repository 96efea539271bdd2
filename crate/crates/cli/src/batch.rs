use crate::{parse_curve, CliError, Result};
use ecq::{EcqError, EllipticCurveQ, TraceCache};
use galimage::{Classifier, ClassifyConfig, GalError};
use serde_json::json;
use std::fmt;
use std::io::Write;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BatchSummary {
    pub curves: usize,
    pub classified: usize,
    pub reported: usize,
}

impl fmt::Display for BatchSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} curves ({} classified, {} reported)", self.curves, self.classified, self.reported)
    }
}

fn status(e: &CliError) -> &'static str {
    match e {
        CliError::Cm(_) => "cm",
        CliError::Curve(EcqError::Singular) | CliError::Image(GalError::Curve(EcqError::Singular)) => "singular",
        CliError::Usage(_) | CliError::Curve(EcqError::Parse(_)) => "parse-error",
        _ => "error",
    }
}

/// Classifies each non-blank, non-comment line "label,a1,a2,a3,a4,a6" of `text`, writing one
/// JSON line per curve in input order. Bad lines are reported in place and do not stop the run.
pub fn run_batch(text: &str, cfg: ClassifyConfig, cache: &TraceCache, out: &mut dyn Write) -> Result<BatchSummary> {
    let lines: Vec<&str> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .filter(|l| !l.starts_with("label,"))
        .collect();
    let parsed: Vec<std::result::Result<(String, EllipticCurveQ), (String, CliError)>> = lines
        .iter()
        .map(|l| parse_curve(l).map_err(|e| (l.split(',').next().unwrap_or("").to_string(), e)))
        .collect();
    let good: Vec<(String, EllipticCurveQ)> = parsed.iter().filter_map(|r| r.as_ref().ok().cloned()).collect();
    let mut reports = Classifier::new(cfg, cache).report_batch(&good).into_iter();

    let mut summary = BatchSummary { curves: lines.len(), ..Default::default() };
    for p in parsed {
        let line = match p {
            Ok((label, _)) => match reports.next().expect("one report per parsed curve") {
                Ok(r) => {
                    summary.classified += 1;
                    let mut v = serde_json::to_value(&r).expect("serializable");
                    v["status"] = json!("ok");
                    v["type"] = json!(r.exceptional_type().map_err(GalError::from)?.to_string());
                    v
                }
                Err(e) => {
                    summary.reported += 1;
                    let e = CliError::from(e);
                    json!({ "label": label, "status": status(&e), "error": e.to_string() })
                }
            },
            Err((label, e)) => {
                summary.reported += 1;
                json!({ "label": label, "status": status(&e), "error": e.to_string() })
            }
        };
        writeln!(out, "{}", serde_json::to_string(&line).expect("serializable"))?;
    }
    Ok(summary)
}
