//! Line graphs, molecular graphs, odd triangles and line-graph recognition.
//!
//! Recognition uses the forbidden-configuration characterization: a graph is
//! a line graph iff it has no induced claw `K_{1,3}` and any two odd
//! triangles sharing an edge induce a `K_4`.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line graph of an edgeless graph is not defined")]
pub struct EdgelessError;

/// `L(g)`: vertex `i` of the result is the `i`-th edge of `g` in
/// lexicographic `(u, v)`, `u < v` order; two vertices are adjacent iff the
/// edges share an endpoint.
pub fn line_graph(g: &Graph) -> Result<Graph, EdgelessError> {
    if g.size() == 0 {
        return Err(EdgelessError);
    }
    let edges: Vec<(Vertex, Vertex)> = g.edges().collect();
    // incident[v] = ids of edges at v, ascending
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); g.order()];
    for (id, &(u, v)) in edges.iter().enumerate() {
        incident[u].push(id);
        incident[v].push(id);
    }
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); edges.len()];
    for ids in &incident {
        for (k, &a) in ids.iter().enumerate() {
            for &b in &ids[k + 1..] {
                adj[a].push(b);
                adj[b].push(a);
            }
        }
    }
    // Two distinct simple edges share at most one endpoint, so no duplicates.
    for list in &mut adj {
        list.sort_unstable();
    }
    Ok(Graph::from_sorted_adjacency(adj))
}

/// Maximum degree at most 4.
pub fn is_molecular(g: &Graph) -> bool {
    g.max_degree() <= 4
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TriangleRecord {
    pub vertices: [Vertex; 3],
    pub is_odd: bool,
    /// A vertex adjacent to an odd number of the triangle's vertices.
    pub witness: Option<Vertex>,
}

fn triangle_witness(g: &Graph, t: [Vertex; 3]) -> Option<Vertex> {
    // Triangle vertices see exactly two of the three, so scanning every
    // vertex is equivalent to scanning only outside vertices.
    (0..g.order()).find(|&x| t.iter().filter(|&&v| g.has_edge(x, v)).count() % 2 == 1)
}

/// Every triangle `u < v < w` once, in lexicographic order, classified by
/// parity.
pub fn odd_triangles(g: &Graph) -> Vec<TriangleRecord> {
    let mut out = Vec::new();
    for u in 0..g.order() {
        let nu = g.neighbors(u);
        for (i, &v) in nu.iter().enumerate().filter(|(_, &v)| v > u) {
            for &w in &nu[i + 1..] {
                if g.has_edge(v, w) {
                    let t = [u, v, w];
                    let witness = triangle_witness(g, t);
                    out.push(TriangleRecord { vertices: t, is_odd: witness.is_some(), witness });
                }
            }
        }
    }
    out
}

/// Evidence that a graph is not a line graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum LineGraphViolation {
    /// Induced claw: `center` adjacent to three pairwise nonadjacent leaves.
    Claw { center: Vertex, leaves: [Vertex; 3] },
    /// Two odd triangles sharing an edge whose four vertices do not induce `K_4`.
    OddTrianglePair { first: [Vertex; 3], second: [Vertex; 3], vertices: [Vertex; 4] },
}

impl LineGraphViolation {
    /// The offending vertex set.
    pub fn vertices(&self) -> Vec<Vertex> {
        match self {
            LineGraphViolation::Claw { center, leaves } => {
                let mut v = vec![*center];
                v.extend_from_slice(leaves);
                v
            }
            LineGraphViolation::OddTrianglePair { vertices, .. } => vertices.to_vec(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LineGraphCheck {
    pub is_line_graph: bool,
    pub violation: Option<LineGraphViolation>,
}

pub fn find_induced_claw(g: &Graph) -> Option<LineGraphViolation> {
    for c in 0..g.order() {
        let nb = g.neighbors(c);
        for (i, &a) in nb.iter().enumerate() {
            for (j, &b) in nb.iter().enumerate().skip(i + 1) {
                if g.has_edge(a, b) {
                    continue;
                }
                for &d in &nb[j + 1..] {
                    if !g.has_edge(a, d) && !g.has_edge(b, d) {
                        return Some(LineGraphViolation::Claw { center: c, leaves: [a, b, d] });
                    }
                }
            }
        }
    }
    None
}

fn find_bad_odd_pair(g: &Graph) -> Option<LineGraphViolation> {
    let odd: Vec<[Vertex; 3]> = odd_triangles(g).into_iter().filter(|t| t.is_odd).map(|t| t.vertices).collect();
    for (i, s) in odd.iter().enumerate() {
        for t in &odd[i + 1..] {
            let shared = s.iter().filter(|v| t.contains(v)).count();
            if shared != 2 {
                continue;
            }
            let mut quad: Vec<Vertex> = s.iter().chain(t.iter()).copied().collect();
            quad.sort_unstable();
            quad.dedup();
            let complete = quad
                .iter()
                .enumerate()
                .all(|(k, &a)| quad[k + 1..].iter().all(|&b| g.has_edge(a, b)));
            if !complete {
                return Some(LineGraphViolation::OddTrianglePair {
                    first: *s,
                    second: *t,
                    vertices: [quad[0], quad[1], quad[2], quad[3]],
                });
            }
        }
    }
    None
}

pub fn is_line_graph(g: &Graph) -> LineGraphCheck {
    let violation = find_induced_claw(g).or_else(|| find_bad_odd_pair(g));
    LineGraphCheck { is_line_graph: violation.is_none(), violation }
}
