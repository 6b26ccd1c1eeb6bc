//! Long-format result records and their emission.
//!
//! One record per (replicate, metric); aggregates use replicate 0 with a
//! distinct metric name. Output is bit-stable: values are printed with a
//! fixed 10-significant-digit format and records are sorted before writing.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use crate::CliError;

/// A single long-format result row.
#[derive(Clone, Debug, PartialEq)]
pub struct ResultRecord {
    pub experiment: String,
    /// Canonical `key=value;key=value` parameter tuple.
    pub params: String,
    pub metric: String,
    pub value: f64,
    pub replicate: usize,
    pub seed: u64,
}

impl ResultRecord {
    pub fn new(
        experiment: &str,
        params: &str,
        metric: &str,
        value: f64,
        replicate: usize,
        seed: u64,
    ) -> Self {
        ResultRecord {
            experiment: experiment.to_string(),
            params: params.to_string(),
            metric: metric.to_string(),
            value,
            replicate,
            seed,
        }
    }
}

/// Output format of [`emit_results`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    JsonLines,
}

/// Fixed scientific formatting with 10 significant digits.
pub fn format_value(x: f64) -> String {
    format!("{x:.9e}")
}

/// Renders records (sorted by experiment, params, replicate, metric) in the
/// chosen format. Identical inputs produce byte-identical text.
pub fn render_results(records: &[ResultRecord], format: OutputFormat) -> String {
    let mut sorted: Vec<&ResultRecord> = records.iter().collect();
    sorted.sort_by(|a, b| {
        (&a.experiment, &a.params, a.replicate, &a.metric).cmp(&(
            &b.experiment,
            &b.params,
            b.replicate,
            &b.metric,
        ))
    });
    let mut out = String::new();
    match format {
        OutputFormat::Csv => {
            out.push_str("experiment,params,metric,value,replicate,seed\n");
            for r in sorted {
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},{}",
                    r.experiment,
                    r.params,
                    r.metric,
                    format_value(r.value),
                    r.replicate,
                    r.seed
                );
            }
        }
        OutputFormat::JsonLines => {
            for r in sorted {
                let _ = writeln!(
                    out,
                    "{{\"experiment\":\"{}\",\"params\":\"{}\",\"metric\":\"{}\",\"value\":{},\"replicate\":{},\"seed\":{}}}",
                    r.experiment,
                    r.params,
                    r.metric,
                    format_value(r.value),
                    r.replicate,
                    r.seed
                );
            }
        }
    }
    out
}

/// Writes records to `path` (see [`render_results`]).
pub fn emit_results(
    records: &[ResultRecord],
    path: &Path,
    format: OutputFormat,
) -> Result<(), CliError> {
    fs::write(path, render_results(records, format))
        .map_err(|e| CliError::Data(format!("writing {}: {e}", path.display())))
}
