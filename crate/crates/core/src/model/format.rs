//! Text formats for sampled graphs.
//!
//! Edge list:
//!
//! ```text
//! # rig n=<n> m=<m> p=<p> seed=<seed>
//! # rig-lab <version>
//! 0 3
//! 1 2
//! ```
//!
//! one `i j` pair per line with `i < j`, ascending lexicographic. The
//! assignment format shares the header and lists one vertex per line as
//! `v: w1 w2 ...`. Lines starting with `#` after the first are comments.

use std::fmt::Write;

use super::{BipartiteAssignment, IntersectionGraph, ModelParams};
use crate::{Error, Result};

/// The `# rig ...` header line.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EdgeListHeader {
    pub params: ModelParams,
    pub seed: u64,
}

impl EdgeListHeader {
    fn render(&self) -> String {
        format!(
            "# rig n={} m={} p={} seed={}\n# rig-lab {}\n",
            self.params.n(),
            self.params.m(),
            self.params.p(),
            self.seed,
            crate::VERSION
        )
    }

    fn parse(line: &str) -> Result<Self> {
        let rest = line
            .strip_prefix("# rig ")
            .ok_or_else(|| Error::parse(format!("missing `# rig` header, got {line:?}")))?;
        let (mut n, mut m, mut p, mut seed) = (None, None, None, None);
        for field in rest.split_whitespace() {
            let (key, value) = field
                .split_once('=')
                .ok_or_else(|| Error::parse(format!("malformed header field {field:?}")))?;
            let bad = || Error::parse(format!("bad value in header field {field:?}"));
            match key {
                "n" => n = Some(value.parse::<usize>().map_err(|_| bad())?),
                "m" => m = Some(value.parse::<usize>().map_err(|_| bad())?),
                "p" => p = Some(value.parse::<f64>().map_err(|_| bad())?),
                "seed" => seed = Some(value.parse::<u64>().map_err(|_| bad())?),
                _ => return Err(Error::parse(format!("unknown header field {key:?}"))),
            }
        }
        match (n, m, p, seed) {
            (Some(n), Some(m), Some(p), Some(seed)) => Ok(EdgeListHeader {
                params: ModelParams::new(n, m, p)?,
                seed,
            }),
            _ => Err(Error::parse("header must carry n, m, p and seed")),
        }
    }
}

fn body_lines(text: &str) -> Result<(EdgeListHeader, impl Iterator<Item = (usize, &str)>)> {
    let mut lines = text.lines().enumerate();
    let (_, first) = lines.next().ok_or_else(|| Error::parse("empty input"))?;
    let header = EdgeListHeader::parse(first)?;
    let body = lines.filter(|(_, l)| !l.starts_with('#') && !l.trim().is_empty());
    Ok((header, body))
}

pub fn write_edge_list(graph: &IntersectionGraph, header: &EdgeListHeader) -> String {
    let mut out = header.render();
    for &(i, j) in graph.edges() {
        writeln!(out, "{i} {j}").unwrap();
    }
    out
}

pub fn parse_edge_list(text: &str) -> Result<(EdgeListHeader, IntersectionGraph)> {
    let (header, body) = body_lines(text)?;
    let mut edges = Vec::new();
    for (lineno, line) in body {
        let mut parts = line.split_whitespace().map(str::parse::<usize>);
        match (parts.next(), parts.next(), parts.next()) {
            (Some(Ok(i)), Some(Ok(j)), None) => edges.push((i, j)),
            _ => {
                return Err(Error::parse(format!(
                    "line {}: expected `i j`, got {line:?}",
                    lineno + 1
                )))
            }
        }
    }
    let graph = IntersectionGraph::from_edges(header.params.n(), edges)?;
    Ok((header, graph))
}

pub fn write_assignment(assignment: &BipartiteAssignment, seed: u64) -> String {
    let header = EdgeListHeader {
        params: *assignment.params(),
        seed,
    };
    let mut out = header.render();
    for (v, set) in assignment.sets().iter().enumerate() {
        write!(out, "{v}:").unwrap();
        for w in set {
            write!(out, " {w}").unwrap();
        }
        out.push('\n');
    }
    out
}

pub fn parse_assignment(text: &str) -> Result<(EdgeListHeader, BipartiteAssignment)> {
    let (header, body) = body_lines(text)?;
    let mut sets = vec![None; header.params.n()];
    for (lineno, line) in body {
        let err = || {
            Error::parse(format!(
                "line {}: malformed assignment {line:?}",
                lineno + 1
            ))
        };
        let (v, rest) = line.split_once(':').ok_or_else(err)?;
        let v: usize = v.trim().parse().map_err(|_| err())?;
        let set = rest
            .split_whitespace()
            .map(str::parse::<usize>)
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| err())?;
        let slot = sets.get_mut(v).ok_or_else(err)?;
        if slot.replace(set).is_some() {
            return Err(Error::parse(format!("vertex {v} listed twice")));
        }
    }
    let sets = sets
        .into_iter()
        .enumerate()
        .map(|(v, s)| s.ok_or_else(|| Error::parse(format!("vertex {v} missing"))))
        .collect::<Result<Vec<_>>>()?;
    let assignment = BipartiteAssignment::from_sets(header.params, sets)?;
    Ok((header, assignment))
}
