//! Report rows for index sweeps, as JSON or versioned CSV.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::rigidity::{IndexReport, SearchResult};

/// Bumped whenever [`CSV_COLUMNS`] changes.
pub const SCHEMA_VERSION: u32 = 1;

pub const CSV_COLUMNS: [&str; 10] = [
    "schema_version",
    "group_spec",
    "genset",
    "genset_size",
    "full_aut_order",
    "colour_aut_order",
    "cayley_index",
    "colour_index",
    "exhaustive",
    "seed",
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRow {
    pub schema_version: u32,
    pub group_spec: String,
    pub genset: String,
    pub genset_size: usize,
    pub full_aut_order: u128,
    pub colour_aut_order: u128,
    pub cayley_index: u128,
    pub colour_index: u128,
    /// The row is the optimum of an exhaustive search over generating sets.
    pub exhaustive: bool,
    pub seed: Option<u64>,
}

impl ReportRow {
    /// A row for one user-chosen generating set.
    pub fn single(group_spec: &str, index: &IndexReport) -> Self {
        ReportRow {
            schema_version: SCHEMA_VERSION,
            group_spec: group_spec.to_string(),
            genset: index.genset.clone(),
            genset_size: index.genset_size,
            full_aut_order: index.full_aut_order,
            colour_aut_order: index.colour_aut_order,
            cayley_index: index.cayley_index,
            colour_index: index.colour_index,
            exhaustive: false,
            seed: None,
        }
    }

    /// A row for the witness of an index search.
    pub fn from_search(group_spec: &str, search: &SearchResult, witness: &IndexReport) -> Self {
        ReportRow {
            exhaustive: search.exhaustive,
            seed: search.seed,
            ..ReportRow::single(group_spec, witness)
        }
    }

    fn csv_record(&self) -> [String; 10] {
        [
            self.schema_version.to_string(),
            self.group_spec.clone(),
            self.genset.clone(),
            self.genset_size.to_string(),
            self.full_aut_order.to_string(),
            self.colour_aut_order.to_string(),
            self.cayley_index.to_string(),
            self.colour_index.to_string(),
            self.exhaustive.to_string(),
            self.seed.map(|s| s.to_string()).unwrap_or_default(),
        ]
    }
}

pub fn to_csv(rows: &[ReportRow]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| crate::error::Error::Io(e.to_string());
    w.write_record(CSV_COLUMNS).map_err(io)?;
    for row in rows {
        w.write_record(row.csv_record()).map_err(io)?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| crate::error::Error::Io(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

pub fn to_json(rows: &[ReportRow]) -> String {
    serde_json::to_string_pretty(rows).expect("report rows serialize")
}

/// Fixed-width text table for terminals.
pub fn to_table(rows: &[ReportRow]) -> String {
    let header = [
        "group", "genset", "|S|", "|Aut|", "|Xi_S|", "index", "colour", "exh",
    ];
    let body: Vec<[String; 8]> = rows
        .iter()
        .map(|r| {
            [
                r.group_spec.clone(),
                r.genset.clone(),
                r.genset_size.to_string(),
                r.full_aut_order.to_string(),
                r.colour_aut_order.to_string(),
                r.cayley_index.to_string(),
                r.colour_index.to_string(),
                if r.exhaustive { "yes" } else { "no" }.to_string(),
            ]
        })
        .collect();
    let mut widths = header.map(str::len);
    for row in &body {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        cells
            .iter()
            .zip(widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect::<Vec<_>>()
            .join("  ")
            .trim_end()
            .to_string()
    };
    let mut out = line(header.to_vec());
    out.push('\n');
    for row in &body {
        out.push_str(&line(row.iter().map(String::as_str).collect()));
        out.push('\n');
    }
    out
}
