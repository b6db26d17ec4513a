//! Plain edge-list text: a header line `n m` followed by `m` lines `u v`.
//!
//! Vertex labels are normalized to dense ids. When every label is an integer
//! in `0..n` the labels are used as-is; otherwise labels are numbered in order
//! of first appearance. Blank lines and lines starting with `#` are skipped.

use std::collections::HashMap;
use std::fmt::Write as _;

use thiserror::Error;

use super::Graph;
use crate::error::GraphError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EdgeListError {
    #[error("line {line}: {reason}")]
    Syntax { line: usize, reason: String },
    #[error("header declares {declared} edges but {found} were listed")]
    EdgeCount { declared: usize, found: usize },
    #[error("{found} distinct vertex labels exceed the declared order {n}")]
    TooManyLabels { n: usize, found: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hline, header) = lines.next().ok_or(EdgeListError::Syntax {
        line: 1,
        reason: "missing `n m` header".into(),
    })?;
    let nums: Vec<&str> = header.split_whitespace().collect();
    let parse_count = |s: &str| {
        s.parse::<usize>().map_err(|_| EdgeListError::Syntax {
            line: hline,
            reason: format!("`{s}` is not a nonnegative integer"),
        })
    };
    if nums.len() != 2 {
        return Err(EdgeListError::Syntax { line: hline, reason: "header must be `n m`".into() });
    }
    let n = parse_count(nums[0])?;
    let m = parse_count(nums[1])?;

    let mut raw: Vec<(usize, &str, &str)> = Vec::with_capacity(m);
    for (line, l) in lines {
        let toks: Vec<&str> = l.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(EdgeListError::Syntax { line, reason: "edge line must be `u v`".into() });
        }
        raw.push((line, toks[0], toks[1]));
    }
    if raw.len() != m {
        return Err(EdgeListError::EdgeCount { declared: m, found: raw.len() });
    }

    let numeric = raw.iter().all(|(_, a, b)| {
        [a, b].iter().all(|t| t.parse::<usize>().map(|v| v < n).unwrap_or(false))
    });
    let edges: Vec<(usize, usize)> = if numeric {
        raw.iter().map(|(_, a, b)| (a.parse().unwrap(), b.parse().unwrap())).collect()
    } else {
        let mut ids: HashMap<&str, usize> = HashMap::new();
        let mut id_of = |t| {
            let next = ids.len();
            *ids.entry(t).or_insert(next)
        };
        let edges: Vec<_> = raw.iter().map(|&(_, a, b)| (id_of(a), id_of(b))).collect();
        if ids.len() > n {
            return Err(EdgeListError::TooManyLabels { n, found: ids.len() });
        }
        edges
    };
    Ok(Graph::new(n, &edges)?)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}
