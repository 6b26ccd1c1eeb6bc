//! Reading and writing binary data matrices and point lists.
//!
//! A binary matrix is delimiter-separated text (comma, semicolon, tab or
//! whitespace), one observation per row, entries 0/1, an optional header
//! line, and — when `labeled` — a final integer class column. A point list
//! holds one `x,y` pair per line.

use std::fs;
use std::path::Path;

use projstat::measures::{Point, Sample};
use projstat::tomo::PointSet;

use crate::records::format_value;
use crate::CliError;

fn split_row(line: &str, delim: Option<char>) -> Vec<String> {
    match delim {
        Some(c) => line.split(c).map(|t| t.trim().to_string()).collect(),
        None => line.split_whitespace().map(|t| t.to_string()).collect(),
    }
}

fn detect_delimiter(line: &str) -> Option<char> {
    [',', ';', '\t'].into_iter().find(|&c| line.contains(c))
}

/// Loads a binary data matrix; with `labeled`, the final column is read as
/// integer class labels. Malformed cells report their row and column
/// (1-based, counting data rows).
pub fn load_binary_matrix(path: &Path, labeled: bool) -> Result<Sample, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Data(format!("reading {}: {e}", path.display())))?;
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .peekable();

    let first = *lines
        .peek()
        .ok_or_else(|| CliError::Data(format!("{} is empty", path.display())))?;
    let delim = detect_delimiter(first);
    // A header is any first line with a token that does not parse as a number.
    let has_header = split_row(first, delim)
        .iter()
        .any(|t| t.parse::<f64>().is_err());
    if has_header {
        lines.next();
    }

    let mut rows: Vec<Point> = Vec::new();
    let mut labels: Vec<usize> = Vec::new();
    let mut width: Option<usize> = None;
    for (ri, line) in lines.enumerate() {
        let row_no = ri + 1;
        let tokens = split_row(line, delim);
        if let Some(w) = width {
            if tokens.len() != w {
                return Err(CliError::Data(format!(
                    "row {row_no}: expected {w} columns, found {}",
                    tokens.len()
                )));
            }
        } else {
            if labeled && tokens.len() < 2 {
                return Err(CliError::Data(
                    "labeled data needs at least two columns".into(),
                ));
            }
            width = Some(tokens.len());
        }
        let n_data = tokens.len() - usize::from(labeled);
        let mut coords = Vec::with_capacity(n_data);
        for (ci, tok) in tokens[..n_data].iter().enumerate() {
            match tok.as_str() {
                "0" => coords.push(0.0),
                "1" => coords.push(1.0),
                other => {
                    return Err(CliError::Data(format!(
                        "row {row_no}, column {}: entry {other:?} is not 0 or 1",
                        ci + 1
                    )))
                }
            }
        }
        rows.push(Point::new(coords));
        if labeled {
            let tok = &tokens[n_data];
            let label: usize = tok.parse().map_err(|_| {
                CliError::Data(format!(
                    "row {row_no}, column {}: label {tok:?} is not a nonnegative integer",
                    n_data + 1
                ))
            })?;
            labels.push(label);
        }
    }
    if rows.is_empty() {
        return Err(CliError::Data(format!(
            "{} has no data rows",
            path.display()
        )));
    }
    let sample = if labeled {
        Sample::with_labels(rows, labels)
    } else {
        Sample::new(rows)
    };
    sample.map_err(|e| CliError::Data(e.to_string()))
}

/// Writes a sample of binary rows as comma-separated 0/1 integers, with the
/// label as a final column when present.
pub fn write_binary_matrix(sample: &Sample, path: &Path) -> Result<(), CliError> {
    let mut out = String::new();
    for (i, row) in sample.rows().iter().enumerate() {
        let cells: Vec<String> = row
            .coords()
            .iter()
            .map(|&c| format!("{}", c as i64))
            .collect();
        out.push_str(&cells.join(","));
        if let Some(labels) = sample.labels() {
            out.push(',');
            out.push_str(&labels[i].to_string());
        }
        out.push('\n');
    }
    fs::write(path, out).map_err(|e| CliError::Data(format!("writing {}: {e}", path.display())))
}

/// Writes an image as `x,y` lines.
pub fn write_point_list(image: &PointSet, path: &Path) -> Result<(), CliError> {
    let mut out = String::new();
    for p in image.points() {
        out.push_str(&format_value(p[0]));
        out.push(',');
        out.push_str(&format_value(p[1]));
        out.push('\n');
    }
    fs::write(path, out).map_err(|e| CliError::Data(format!("writing {}: {e}", path.display())))
}
