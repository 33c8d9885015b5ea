//! The `bpd v1` text format.
//!
//! ```text
//! # optional comment lines
//! p bpd <n> <m>
//! <u> <v> <r|b>      (m lines, 0-based ids)
//! ```

use std::fmt::Write as _;

use crate::error::{BpdError, Result};
use crate::graph::{Color, ColoredGraph};

pub fn parse_bpd(text: &str) -> Result<ColoredGraph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut seen = std::collections::HashSet::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |msg: String| BpdError::Parse { line: line_no, msg };
        let fields: Vec<&str> = line.split_whitespace().collect();
        match header {
            None => {
                if fields.len() != 4 || fields[0] != "p" || fields[1] != "bpd" {
                    return Err(err(format!("expected `p bpd <n> <m>`, got `{line}`")));
                }
                let n = fields[2]
                    .parse()
                    .map_err(|_| err(format!("bad vertex count `{}`", fields[2])))?;
                let m = fields[3]
                    .parse()
                    .map_err(|_| err(format!("bad edge count `{}`", fields[3])))?;
                header = Some((n, m));
            }
            Some((n, m)) => {
                if fields.len() != 3 {
                    return Err(err(format!("expected `<u> <v> <r|b>`, got `{line}`")));
                }
                let u: usize = fields[0]
                    .parse()
                    .map_err(|_| err(format!("bad vertex id `{}`", fields[0])))?;
                let v: usize = fields[1]
                    .parse()
                    .map_err(|_| err(format!("bad vertex id `{}`", fields[1])))?;
                let c = match fields[2] {
                    "r" => Color::Red,
                    "b" => Color::Blue,
                    other => return Err(err(format!("bad color `{other}`"))),
                };
                if u >= n || v >= n {
                    return Err(err(format!("vertex id out of range for n = {n}")));
                }
                if u == v {
                    return Err(err(format!("self-loop at {u}")));
                }
                if !seen.insert(crate::graph::normalize(u, v)) {
                    return Err(err(format!("duplicate edge {{{u}, {v}}}")));
                }
                if edges.len() == m {
                    return Err(err(format!("more than the declared {m} edges")));
                }
                edges.push((u, v, c));
            }
        }
    }

    let (n, m) = header.ok_or_else(|| BpdError::Parse {
        line: 0,
        msg: "missing `p bpd` header".into(),
    })?;
    if edges.len() != m {
        return Err(BpdError::Parse {
            line: 0,
            msg: format!("header declares {m} edges, found {}", edges.len()),
        });
    }
    ColoredGraph::from_edges(n, edges)
}

/// Canonical serialization: header, then edges sorted by `(u, v)`.
pub fn write_bpd(g: &ColoredGraph) -> String {
    let mut out = String::with_capacity(16 + 12 * g.m());
    writeln!(out, "p bpd {} {}", g.n(), g.m()).unwrap();
    for e in g.edges() {
        writeln!(out, "{} {} {}", e.u, e.v, e.color.code()).unwrap();
    }
    out
}

pub fn read_bpd_file(path: &std::path::Path) -> Result<ColoredGraph> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| BpdError::Io(format!("{}: {e}", path.display())))?;
    parse_bpd(&text)
}
