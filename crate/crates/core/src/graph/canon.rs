//! Canonical forms for isomorphism deduplication of small graphs.
//!
//! The search individualizes one vertex at a time and refines the ordered
//! partition to an equitable one after each step. Every discrete partition
//! reached is a labeling; the form is the lexicographically smallest
//! upper-triangle adjacency bit string (graph6 column order) over those
//! leaves. Refinement starts from the degree partition and only uses
//! label-free information, so isomorphic graphs explore the same set of
//! strings. Sibling branches whose vertices are twins are skipped because
//! swapping twins is an automorphism fixing everything individualized so far.

use super::Graph;
use crate::error::GraphError;

/// Default maximum order accepted by [`canonical_form`].
pub const DEFAULT_CANON_LIMIT: usize = 10;
const HARD_LIMIT: usize = 64;

/// Byte string equal for two graphs iff they are isomorphic: the order
/// followed by the packed canonical adjacency bits.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn order(&self) -> usize {
        self.0[0] as usize
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm, GraphError> {
    canonical_form_with_limit(g, DEFAULT_CANON_LIMIT)
}

pub fn canonical_form_with_limit(g: &Graph, limit: usize) -> Result<CanonicalForm, GraphError> {
    let (code, _) = search(g, limit)?;
    Ok(pack(g.order(), &code))
}

fn pack(n: usize, code: &[u64]) -> CanonicalForm {
    let nbytes = (n * n.saturating_sub(1) / 2).div_ceil(8);
    let mut bytes = Vec::with_capacity(1 + nbytes);
    bytes.push(n as u8);
    bytes.extend(code.iter().flat_map(|w| w.to_be_bytes()).take(nbytes));
    CanonicalForm(bytes)
}

/// The canonical form together with the canonically relabeled graph, from a
/// single search.
pub fn canonical_representative(g: &Graph, limit: usize) -> Result<(CanonicalForm, Graph), GraphError> {
    let (code, lab) = search(g, limit)?;
    let mut perm = vec![0; lab.len()];
    for (pos, &v) in lab.iter().enumerate() {
        perm[v] = pos;
    }
    Ok((pack(g.order(), &code), g.permuted(&perm)))
}

/// `perm[v]` is the canonical position of vertex `v`; `g.permuted(&perm)`
/// is the canonical representative of the isomorphism class.
pub fn canonical_labeling(g: &Graph, limit: usize) -> Result<Vec<usize>, GraphError> {
    let (_, lab) = search(g, limit)?;
    let mut perm = vec![0; lab.len()];
    for (pos, &v) in lab.iter().enumerate() {
        perm[v] = pos;
    }
    Ok(perm)
}

struct Searcher {
    n: usize,
    rows: Vec<u64>,
    best: Option<(Vec<u64>, Vec<usize>)>,
}

fn search(g: &Graph, limit: usize) -> Result<(Vec<u64>, Vec<usize>), GraphError> {
    let n = g.order();
    let limit = limit.min(HARD_LIMIT);
    if n > limit {
        return Err(GraphError::TooLarge { n, limit });
    }
    let rows = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u64, |acc, &w| acc | 1 << w))
        .collect();
    let mut s = Searcher { n, rows, best: None };
    if n == 0 {
        return Ok((Vec::new(), Vec::new()));
    }
    s.descend(vec![(0..n).collect()]);
    Ok(s.best.expect("search visits at least one leaf"))
}

impl Searcher {
    fn adjacent(&self, u: usize, v: usize) -> bool {
        self.rows[u] >> v & 1 == 1
    }

    fn twins(&self, u: usize, v: usize) -> bool {
        self.rows[u] & !(1 << v) == self.rows[v] & !(1 << u)
    }

    fn refine(&self, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
        loop {
            let masks: Vec<u64> = cells.iter().map(|c| c.iter().fold(0, |a, &v| a | 1 << v)).collect();
            let mut next = Vec::with_capacity(cells.len());
            for cell in &cells {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(Vec<u32>, usize)> = cell
                    .iter()
                    .map(|&v| (masks.iter().map(|m| (self.rows[v] & m).count_ones()).collect(), v))
                    .collect();
                keyed.sort();
                let mut start = 0;
                for i in 1..=keyed.len() {
                    if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                        next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                        start = i;
                    }
                }
            }
            if next.len() == cells.len() {
                return next;
            }
            cells = next;
        }
    }

    fn code(&self, lab: &[usize]) -> Vec<u64> {
        let bits = self.n * (self.n - 1) / 2;
        let mut words = vec![0u64; bits.div_ceil(64).max(1)];
        let mut k = 0;
        for j in 1..self.n {
            for i in 0..j {
                if self.adjacent(lab[i], lab[j]) {
                    words[k / 64] |= 1 << (63 - k % 64);
                }
                k += 1;
            }
        }
        words
    }

    fn descend(&mut self, cells: Vec<Vec<usize>>) {
        let cells = self.refine(cells);
        let Some(t) = cells.iter().position(|c| c.len() > 1) else {
            let lab: Vec<usize> = cells.iter().map(|c| c[0]).collect();
            let code = self.code(&lab);
            if self.best.as_ref().is_none_or(|(b, _)| code < *b) {
                self.best = Some((code, lab));
            }
            return;
        };
        let mut target = cells[t].clone();
        target.sort_unstable();
        let mut tried: Vec<usize> = Vec::new();
        for &v in &target {
            if tried.iter().any(|&u| self.twins(u, v)) {
                continue;
            }
            tried.push(v);
            let mut next = Vec::with_capacity(cells.len() + 1);
            next.extend_from_slice(&cells[..t]);
            next.push(vec![v]);
            next.push(target.iter().copied().filter(|&w| w != v).collect());
            next.extend_from_slice(&cells[t + 1..]);
            self.descend(next);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::new(n, &edges).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
        Graph::new(n, &edges).unwrap()
    }

    #[test]
    fn relabeled_path_is_equal() {
        let a = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let b = Graph::new(3, &[(1, 0), (0, 2)]).unwrap();
        assert_eq!(canonical_form(&a).unwrap(), canonical_form(&b).unwrap());
    }

    #[test]
    fn distinguishes_claw_from_path() {
        let claw = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_ne!(canonical_form(&claw).unwrap(), canonical_form(&path(4)).unwrap());
    }

    #[test]
    fn distinguishes_hexagon_from_two_triangles() {
        let two = cycle(3).disjoint_union(&cycle(3));
        assert_ne!(canonical_form(&cycle(6)).unwrap(), canonical_form(&two).unwrap());
    }

    #[test]
    fn refuses_large_graphs() {
        assert_eq!(
            canonical_form(&path(11)),
            Err(GraphError::TooLarge { n: 11, limit: 10 })
        );
        assert!(canonical_form_with_limit(&path(11), 12).is_ok());
    }

    #[test]
    fn labeling_produces_canonical_representative() {
        let g = Graph::new(5, &[(0, 3), (3, 4), (4, 1), (1, 2), (0, 4)]).unwrap();
        let perm = canonical_labeling(&g, 10).unwrap();
        let rep = g.permuted(&perm);
        let perm2 = canonical_labeling(&rep, 10).unwrap();
        assert_eq!(rep.permuted(&perm2), rep);
    }

    #[test]
    fn symmetric_graphs_stay_fast() {
        let star = Graph::new(16, &(1..16).map(|v| (0, v)).collect::<Vec<_>>()).unwrap();
        assert!(canonical_form_with_limit(&star, 16).is_ok());
        let k = Graph::from_fn(14, |_, _| true);
        assert!(canonical_form_with_limit(&k, 16).is_ok());
    }

    /// Brute force over all n! labelings.
    fn brute_min(g: &Graph) -> Vec<bool> {
        fn rec(g: &Graph, lab: &mut Vec<usize>, used: &mut Vec<bool>, best: &mut Option<Vec<bool>>) {
            let n = g.order();
            if lab.len() == n {
                let s: Vec<bool> = (1..n)
                    .flat_map(|j| (0..j).map(move |i| (i, j)))
                    .map(|(i, j)| g.has_edge(lab[i], lab[j]))
                    .collect();
                if best.as_ref().is_none_or(|b| s < *b) {
                    *best = Some(s);
                }
                return;
            }
            for v in 0..n {
                if !used[v] {
                    used[v] = true;
                    lab.push(v);
                    rec(g, lab, used, best);
                    lab.pop();
                    used[v] = false;
                }
            }
        }
        let mut best = None;
        rec(g, &mut Vec::new(), &mut vec![false; g.order()], &mut best);
        best.unwrap()
    }

    #[test]
    fn agrees_with_brute_force_on_all_five_vertex_graphs() {
        use std::collections::HashMap;
        let n = 5;
        let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        // brute-force class -> canonical form must be a bijection
        let mut fwd: HashMap<Vec<bool>, CanonicalForm> = HashMap::new();
        let mut back: HashMap<CanonicalForm, Vec<bool>> = HashMap::new();
        for mask in 0u32..(1 << pairs.len()) {
            let edges: Vec<_> = (0..pairs.len()).filter(|k| mask >> k & 1 == 1).map(|k| pairs[k]).collect();
            let g = Graph::new(n, &edges).unwrap();
            let b = brute_min(&g);
            let c = canonical_form(&g).unwrap();
            assert_eq!(fwd.entry(b.clone()).or_insert_with(|| c.clone()), &c);
            assert_eq!(back.entry(c).or_insert(b.clone()), &b);
        }
        assert_eq!(fwd.len(), 34);
    }

    proptest! {
        #[test]
        fn invariant_under_permutation(n in 1usize..=10, seed in any::<u64>(), shuffle in any::<u64>()) {
            use rand::{seq::SliceRandom, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let g = Graph::from_fn(n, |_, _| rand::Rng::gen_bool(&mut rng, 0.4));
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(shuffle));
            prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&g.permuted(&perm)).unwrap());
        }
    }
}
