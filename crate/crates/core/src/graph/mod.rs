//! Simple undirected graphs on dense vertex ids `0..n`.
//!
//! A [`Graph`] is frozen at construction: adjacency lists are sorted, the
//! degree cache is filled once, and every edit produces a new value.

mod canon;
mod edgelist;
mod graph6;

use std::collections::{BTreeMap, VecDeque};

use serde::Serialize;

pub use canon::{canonical_form, canonical_form_with_limit, canonical_labeling, canonical_representative, CanonicalForm, DEFAULT_CANON_LIMIT};
pub use edgelist::{parse_edge_list, write_edge_list, EdgeListError};
pub use graph6::{graph6_decode, graph6_encode, Graph6Error, GRAPH6_MAX_ORDER};

use crate::error::GraphError;

pub type Vertex = usize;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    degrees: Vec<usize>,
    m: usize,
}

impl Graph {
    /// Builds a graph from an edge list, rejecting loops, repeated pairs and
    /// out-of-range endpoints.
    pub fn new(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self, GraphError> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop { v });
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                let (a, b) = (u.min(w[0]), u.max(w[0]));
                return Err(GraphError::DuplicateEdge { u: a, v: b });
            }
        }
        Ok(Graph::from_sorted_adjacency(adj))
    }

    /// Graph on `n` isolated vertices.
    pub fn empty(n: usize) -> Self {
        Graph::from_sorted_adjacency(vec![Vec::new(); n])
    }

    // Callers guarantee sorted, symmetric, loop-free lists.
    pub(crate) fn from_sorted_adjacency(adj: Vec<Vec<Vertex>>) -> Self {
        let degrees: Vec<usize> = adj.iter().map(Vec::len).collect();
        let m = degrees.iter().sum::<usize>() / 2;
        Graph { adj, degrees, m }
    }

    /// Builds a graph from an adjacency predicate over unordered pairs.
    pub fn from_fn(n: usize, mut adjacent: impl FnMut(Vertex, Vertex) -> bool) -> Self {
        let mut adj = vec![Vec::new(); n];
        for j in 1..n {
            for i in 0..j {
                if adjacent(i, j) {
                    adj[i].push(j);
                    adj[j].push(i);
                }
            }
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph::from_sorted_adjacency(adj)
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.m
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.degrees[v]
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.order() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn max_degree(&self) -> usize {
        self.degrees.iter().copied().max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.degrees.iter().copied().min().unwrap_or(0)
    }

    /// A single vertex (or no vertex at all).
    pub fn is_trivial(&self) -> bool {
        self.order() <= 1
    }

    pub fn is_connected(&self) -> bool {
        self.order() <= 1 || self.bfs_from(0).iter().all(|&seen| seen)
    }

    pub fn is_tree(&self) -> bool {
        self.order() >= 1 && self.m + 1 == self.order() && self.is_connected()
    }

    pub fn is_regular(&self) -> bool {
        self.max_degree() == self.min_degree()
    }

    fn bfs_from(&self, start: Vertex) -> Vec<bool> {
        let mut seen = vec![false; self.order()];
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        seen
    }

    /// Connected components as vertex lists, each sorted, ordered by their
    /// smallest vertex.
    pub fn component_vertices(&self) -> Vec<Vec<Vertex>> {
        let n = self.order();
        let mut label = vec![usize::MAX; n];
        let mut comps: Vec<Vec<Vertex>> = Vec::new();
        for s in 0..n {
            if label[s] != usize::MAX {
                continue;
            }
            let id = comps.len();
            let mut members = vec![s];
            label[s] = id;
            let mut head = 0;
            while head < members.len() {
                let u = members[head];
                head += 1;
                for &v in &self.adj[u] {
                    if label[v] == usize::MAX {
                        label[v] = id;
                        members.push(v);
                    }
                }
            }
            members.sort_unstable();
            comps.push(members);
        }
        comps
    }

    /// Subgraph induced by `vertices`, relabeled `0..k` in the given order.
    pub fn induced_subgraph(&self, vertices: &[Vertex]) -> Graph {
        let mut pos = vec![usize::MAX; self.order()];
        for (i, &v) in vertices.iter().enumerate() {
            pos[v] = i;
        }
        let adj = vertices
            .iter()
            .map(|&v| {
                let mut list: Vec<Vertex> = self.adj[v]
                    .iter()
                    .filter_map(|&w| (pos[w] != usize::MAX).then_some(pos[w]))
                    .collect();
                list.sort_unstable();
                list
            })
            .collect();
        Graph::from_sorted_adjacency(adj)
    }

    /// Relabels vertex `v` as `perm[v]`; `perm` must be a permutation of `0..n`.
    pub fn permuted(&self, perm: &[Vertex]) -> Graph {
        let n = self.order();
        assert_eq!(perm.len(), n, "permutation length mismatch");
        let mut adj = vec![Vec::new(); n];
        for (u, list) in self.adj.iter().enumerate() {
            let mut mapped: Vec<Vertex> = list.iter().map(|&v| perm[v]).collect();
            mapped.sort_unstable();
            adj[perm[u]] = mapped;
        }
        Graph::from_sorted_adjacency(adj)
    }

    /// Adds a new vertex `n` joined to every vertex in `neighbors`.
    pub(crate) fn with_extra_vertex(&self, neighbors: impl IntoIterator<Item = Vertex>) -> Graph {
        let n = self.order();
        let mut adj = self.adj.clone();
        let mut fresh = Vec::new();
        for v in neighbors {
            adj[v].push(n);
            fresh.push(v);
        }
        fresh.sort_unstable();
        adj.push(fresh);
        Graph::from_sorted_adjacency(adj)
    }

    /// Disjoint union; vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.order();
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|l| l.iter().map(|&v| v + off).collect()));
        Graph::from_sorted_adjacency(adj)
    }
}

/// Multiset of unordered endpoint-degree pairs `(a, b)` with `a >= b`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct EdgeDegreeCensus {
    counts: BTreeMap<(usize, usize), usize>,
}

impl EdgeDegreeCensus {
    pub fn from_pairs(pairs: impl IntoIterator<Item = ((usize, usize), usize)>) -> Self {
        let mut counts = BTreeMap::new();
        for ((a, b), c) in pairs {
            if c > 0 {
                *counts.entry((a.max(b), a.min(b))).or_insert(0) += c;
            }
        }
        EdgeDegreeCensus { counts }
    }

    /// `m_{a,b}`, order of arguments irrelevant.
    pub fn count(&self, a: usize, b: usize) -> usize {
        self.counts.get(&(a.max(b), a.min(b))).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), usize)> + '_ {
        self.counts.iter().map(|(&k, &v)| (k, v))
    }

    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// Merge another census into this one.
    pub fn merge(&mut self, other: &EdgeDegreeCensus) {
        for (k, v) in other.iter() {
            *self.counts.entry(k).or_insert(0) += v;
        }
    }
}

pub fn edge_degree_census(g: &Graph) -> EdgeDegreeCensus {
    let mut counts = BTreeMap::new();
    for (u, v) in g.edges() {
        let (a, b) = (g.degree(u), g.degree(v));
        *counts.entry((a.max(b), a.min(b))).or_insert(0) += 1;
    }
    EdgeDegreeCensus { counts }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeStats {
    pub delta_max: usize,
    pub delta_min: usize,
    /// Minimum degree over vertices of degree at least 2; `None` when every
    /// vertex has degree at most 1.
    pub delta_min_nonpendant: Option<usize>,
    pub pendant_count: usize,
}

pub fn degree_stats(g: &Graph) -> DegreeStats {
    let d = g.degrees();
    DegreeStats {
        delta_max: g.max_degree(),
        delta_min: g.min_degree(),
        delta_min_nonpendant: d.iter().copied().filter(|&x| x >= 2).min(),
        pendant_count: d.iter().filter(|&&x| x == 1).count(),
    }
}

/// Connectivity flag plus the components as relabeled graphs. Isolated
/// vertices come back as trivial one-vertex components.
pub fn connectivity(g: &Graph) -> (bool, Vec<Graph>) {
    let comps = g.component_vertices();
    let graphs: Vec<Graph> = comps.iter().map(|c| g.induced_subgraph(c)).collect();
    (graphs.len() <= 1, graphs)
}
