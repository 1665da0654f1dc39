//! Deterministic rendering: aligned text tables, canonical JSON, and DOT
//! digraphs of specialization posets with strata as colored clusters.

use clap::ValueEnum;
use serde_json::Value;
use tambara::spectra::{TopologyVerdict, Verdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

/// Canonical JSON: pretty-printed with a trailing newline (object keys are
/// already sorted by the serializer).
pub fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values render");
    s.push('\n');
    s
}

/// An aligned text table; every column as wide as its widest cell.
pub fn table(headers: &[&str], rows: &[Vec<String>]) -> String {
    let cols = headers.len();
    let mut widths: Vec<usize> = headers.iter().map(|h| h.len()).collect();
    for row in rows {
        for (c, cell) in row.iter().enumerate() {
            widths[c] = widths[c].max(cell.len());
        }
    }
    let mut out = String::new();
    let emit = |out: &mut String, cells: &[String]| {
        let line: Vec<String> = cells
            .iter()
            .enumerate()
            .map(|(c, cell)| format!("{:<width$}", cell, width = widths[c]))
            .collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    };
    emit(&mut out, &headers.iter().map(|h| h.to_string()).collect::<Vec<_>>());
    emit(&mut out, &widths.iter().map(|w| "-".repeat(*w)).collect::<Vec<_>>());
    for row in rows {
        assert_eq!(row.len(), cols, "table rows must match the header");
        emit(&mut out, row);
    }
    out
}

pub fn verdict_str(v: Verdict) -> &'static str {
    match v {
        Verdict::Yes => "yes",
        Verdict::No => "no",
        Verdict::TruncationLimited => "truncation-limited",
    }
}

/// A witness pair rendered as a specialization `i < j`.
pub fn witness_str(w: Option<(usize, usize)>) -> String {
    match w {
        Some((i, j)) => format!("{i} < {j}"),
        None => "-".to_string(),
    }
}

pub fn verdict_cells(v: &TopologyVerdict) -> [String; 4] {
    [
        verdict_str(v.closed).to_string(),
        verdict_str(v.open).to_string(),
        witness_str(v.closed_witness),
        witness_str(v.open_witness),
    ]
}

/// Covering relations of the partial order `leq`: pairs `(i, j)` with
/// `i < j` and nothing strictly between.
pub fn covering_edges(leq: &[Vec<bool>]) -> Vec<(usize, usize)> {
    let n = leq.len();
    let lt = |a: usize, b: usize| leq[a][b] && !leq[b][a];
    let mut edges = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if lt(i, j) && !(0..n).any(|k| lt(i, k) && lt(k, j)) {
                edges.push((i, j));
            }
        }
    }
    edges
}

/// Human-readable covering relations, or a marker for an edgeless poset.
pub fn order_lines(leq: &[Vec<bool>]) -> String {
    let edges = covering_edges(leq);
    if edges.is_empty() {
        return "(no strict specializations)\n".to_string();
    }
    let parts: Vec<String> = edges.iter().map(|(i, j)| format!("{i} < {j}")).collect();
    format!("{}\n", parts.join(", "))
}

const CLUSTER_FILLS: [&str; 6] =
    ["lightblue", "lightyellow", "lightpink", "lightgrey", "palegreen", "lavender"];

/// A DOT digraph of the specialization order: one node per point, edges the
/// covering relations pointing from generic to special, and each named
/// cluster (a stratum) drawn as a filled subgraph.  Generic points sink to
/// the bottom rank.
pub fn poset_dot(
    title: &str,
    labels: &[String],
    leq: &[Vec<bool>],
    clusters: &[(String, Vec<usize>)],
) -> String {
    let mut out = String::new();
    out.push_str("digraph spectrum {\n");
    out.push_str(&format!("  label=\"{}\";\n", escape_dot(title)));
    out.push_str("  rankdir=BT;\n");
    out.push_str("  node [shape=box, style=filled, fillcolor=white];\n");
    let mut clustered = vec![false; labels.len()];
    for (c, (name, points)) in clusters.iter().enumerate() {
        out.push_str(&format!("  subgraph cluster_{c} {{\n"));
        out.push_str(&format!("    label=\"{}\";\n", escape_dot(name)));
        out.push_str(&format!(
            "    style=filled;\n    fillcolor={};\n",
            CLUSTER_FILLS[c % CLUSTER_FILLS.len()]
        ));
        for &p in points {
            out.push_str(&format!("    n{p};\n"));
            clustered[p] = true;
        }
        out.push_str("  }\n");
    }
    for (i, label) in labels.iter().enumerate() {
        out.push_str(&format!("  n{i} [label=\"{}\"];\n", escape_dot(label)));
    }
    for (i, j) in covering_edges(leq) {
        out.push_str(&format!("  n{i} -> n{j};\n"));
    }
    out.push_str("}\n");
    out
}

fn escape_dot(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}
