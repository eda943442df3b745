//! Plain-text spectrum tables.

use std::fmt::Write;

use focal_core::jacobi::SpectrumReport;
use focal_core::tables::classify;

use crate::record::OutputRecord;

/// One row per contributing representation, then the totals. Every number
/// printed here is also in the JSON record.
pub fn text_report(report: &SpectrumReport) -> String {
    let rec = OutputRecord::from(report);
    let s = &report.space;
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{} = {}/{} in S^{}   d = {}   2d = {}",
        s.id,
        s.g_alg.algebra_name(),
        s.k_alg.semisimple.algebra_name(),
        s.n,
        s.d,
        2 * s.d
    );
    let _ = writeln!(out);

    let rows: Vec<[String; 6]> = report
        .entries
        .iter()
        .map(|e| {
            let family = match classify(s.id, &e.lambda) {
                Some((f, k)) => format!("{} (k={k})", f.name),
                None => "-".to_owned(),
            };
            [
                e.lambda.to_string(),
                family,
                e.casimir.to_string(),
                e.dim.to_string(),
                e.multiplicity.to_string(),
                e.classification.as_str().to_owned(),
            ]
        })
        .collect();
    let header = ["lambda", "family", "casimir", "dim", "m", "class"].map(String::from);
    let mut widths = header.clone().map(|h| h.chars().count());
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    for row in std::iter::once(&header).chain(&rows) {
        let line: Vec<String> = row
            .iter()
            .zip(widths)
            .enumerate()
            .map(|(i, (cell, w))| {
                let pad = w - cell.chars().count();
                // numbers right-aligned, text left-aligned
                if (2..5).contains(&i) {
                    format!("{}{cell}", " ".repeat(pad))
                } else {
                    format!("{cell}{}", " ".repeat(pad))
                }
            })
            .collect();
        let _ = writeln!(out, "  {}", line.join("  ").trim_end());
    }
    let _ = writeln!(out);
    let _ = writeln!(
        out,
        "index = {}   nullity = {}   killing nullity = {}",
        rec.index, rec.nullity, rec.killing_nullity
    );
    out
}
