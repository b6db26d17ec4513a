//! Exhaustive enumeration of small graphs and trees, conjecture scans, and
//! parameter sweeps over graph families.
//!
//! Graphs on `n` vertices are built by joining a new vertex to every subset
//! of every graph on `n - 1` vertices; trees by attaching a leaf to every
//! vertex of every tree on `n - 1` vertices. Duplicates are removed by
//! canonical form after each round, and the output lists canonical
//! representatives in canonical-form order.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use serde::Serialize;

use crate::error::{SearchError, TheoremError};
use crate::families::{generate, FamilyKind, FamilySpec};
use crate::graph::{canonical_representative, graph6_encode, CanonicalForm, Graph};
use crate::indices::{abs_gap_cmp, compare_ga_abc, CertifiedValue, Sign};
use crate::par::{self, Execution};
use crate::theorems::{verify_theorem, Clause, TheoremId, TheoremReport, TheoremStatus};

/// Largest order accepted by [`enumerate_connected`] and [`enumerate_all`].
pub const MAX_GRAPH_ORDER: usize = 7;
/// Largest order accepted by [`enumerate_trees`].
pub const MAX_TREE_ORDER: usize = 12;

fn check_order(n: usize, hi: usize, hint: &'static str) -> Result<(), SearchError> {
    if (1..=hi).contains(&n) {
        Ok(())
    } else {
        Err(SearchError::OrderOutOfRange { n, lo: 1, hi, hint })
    }
}

const GRAPH_HINT: &str = "supply larger graphs as a graph6 file";

fn dedup(candidates: Vec<Graph>, exec: Execution) -> Vec<Graph> {
    let limit = candidates.first().map_or(1, Graph::order);
    let reps = par::map(&candidates, exec, |g| canonical_representative(g, limit).expect("order within limit"));
    let classes: BTreeMap<CanonicalForm, Graph> = reps.into_iter().collect();
    classes.into_values().collect()
}

/// One representative per isomorphism class of simple graphs on `n`
/// vertices, connected or not.
pub fn enumerate_all(n: usize) -> Result<Vec<Graph>, SearchError> {
    enumerate_all_with(n, Execution::default())
}

pub fn enumerate_all_with(n: usize, exec: Execution) -> Result<Vec<Graph>, SearchError> {
    check_order(n, MAX_GRAPH_ORDER, GRAPH_HINT)?;
    let mut level = vec![Graph::empty(1)];
    for k in 1..n {
        let mut candidates = Vec::with_capacity(level.len() << k);
        for g in &level {
            for mask in 0u32..1 << k {
                candidates.push(g.with_extra_vertex((0..k).filter(|&v| mask >> v & 1 == 1)));
            }
        }
        level = dedup(candidates, exec);
    }
    Ok(level)
}

/// One representative per isomorphism class of connected simple graphs on
/// `n` vertices (`1 <= n <= 7`).
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>, SearchError> {
    enumerate_connected_with(n, Execution::default())
}

pub fn enumerate_connected_with(n: usize, exec: Execution) -> Result<Vec<Graph>, SearchError> {
    Ok(enumerate_all_with(n, exec)?.into_iter().filter(Graph::is_connected).collect())
}

/// One representative per isomorphism class of trees on `n` vertices
/// (`1 <= n <= 12`).
pub fn enumerate_trees(n: usize) -> Result<Vec<Graph>, SearchError> {
    enumerate_trees_with(n, Execution::default())
}

pub fn enumerate_trees_with(n: usize, exec: Execution) -> Result<Vec<Graph>, SearchError> {
    check_order(n, MAX_TREE_ORDER, "larger trees must come from a graph6 file")?;
    let mut level = vec![Graph::empty(1)];
    for k in 1..n {
        let candidates: Vec<Graph> = level.iter().flat_map(|t| (0..k).map(move |v| t.with_extra_vertex([v]))).collect();
        level = dedup(candidates, exec);
    }
    Ok(level)
}

/// Per-graph outcome of a conjecture scan.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanRow {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub sign: Sign,
    pub gap: CertifiedValue,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinGap {
    pub graph6: String,
    pub gap: CertifiedValue,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ScanResult {
    pub graphs_scanned: usize,
    /// Trivial or disconnected inputs, which the conjecture does not cover.
    pub graphs_skipped: usize,
    pub min_abs_gap: Option<MinGap>,
    /// graph6 strings whose gap enclosure still contained zero.
    pub indeterminates: Vec<String>,
    /// graph6 strings with a certified `GA = ABC`.
    pub violations: Vec<String>,
}

fn min_gap_cmp(a: &ScanRow, b: &ScanRow) -> Ordering {
    abs_gap_cmp(&a.gap, &b.gap).then_with(|| a.graph6.cmp(&b.graph6))
}

impl ScanResult {
    /// Deterministic reduction: the result does not depend on row order.
    pub fn from_rows(rows: &[ScanRow], skipped: usize) -> Self {
        let mut indeterminates: Vec<String> =
            rows.iter().filter(|r| r.sign == Sign::Indeterminate).map(|r| r.graph6.clone()).collect();
        let mut violations: Vec<String> =
            rows.iter().filter(|r| r.sign == Sign::Equal).map(|r| r.graph6.clone()).collect();
        indeterminates.sort();
        violations.sort();
        let min_abs_gap = rows
            .iter()
            .min_by(|a, b| min_gap_cmp(a, b))
            .map(|r| MinGap { graph6: r.graph6.clone(), gap: r.gap.clone() });
        ScanResult { graphs_scanned: rows.len(), graphs_skipped: skipped, min_abs_gap, indeterminates, violations }
    }

    pub fn is_clean(&self) -> bool {
        self.indeterminates.is_empty() && self.violations.is_empty()
    }
}

/// Certified comparison of every connected non-trivial graph in `graphs`,
/// in input order. The second value counts skipped inputs.
pub fn scan_rows(graphs: &[Graph], max_precision: u32, exec: Execution) -> (Vec<ScanRow>, usize) {
    let rows = par::map(graphs, exec, |g| {
        if g.is_trivial() || !g.is_connected() {
            return None;
        }
        let v = compare_ga_abc(g, max_precision);
        Some(ScanRow { graph6: graph6_encode(g), n: g.order(), m: g.size(), sign: v.sign, gap: v.gap })
    });
    let skipped = rows.iter().filter(|r| r.is_none()).count();
    (rows.into_iter().flatten().collect(), skipped)
}

/// Search `graphs` for a connected non-trivial graph with `GA = ABC`.
pub fn scan_conjecture(graphs: &[Graph], max_precision: u32) -> ScanResult {
    scan_conjecture_with(graphs, max_precision, Execution::default())
}

pub fn scan_conjecture_with(graphs: &[Graph], max_precision: u32, exec: Execution) -> ScanResult {
    let (rows, skipped) = scan_rows(graphs, max_precision, exec);
    ScanResult::from_rows(&rows, skipped)
}

/// `verify_theorem` on every graph, in input order. Precondition failures
/// stay on their own entries.
pub fn theorem_sweep(
    id: TheoremId,
    graphs: &[Graph],
    max_precision: u32,
    exec: Execution,
) -> Vec<Result<TheoremReport, TheoremError>> {
    par::map(graphs, exec, |g| verify_theorem(id, g, max_precision))
}

/// What each sweep instance is tested against.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Predicate {
    /// Plain certified sign of `GA - ABC`.
    Compare,
    Theorem(TheoremId),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepRow {
    pub family: String,
    pub params: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub graph6: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub clauses: Vec<Clause>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hypothesis_holds: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sign: Option<Sign>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gap: Option<CertifiedValue>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub status: Option<TheoremStatus>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl SweepRow {
    fn failed(spec: &FamilySpec, error: String) -> Self {
        SweepRow {
            family: spec.to_string(),
            params: spec.params.clone(),
            graph6: None,
            clauses: Vec::new(),
            hypothesis_holds: None,
            sign: None,
            gap: None,
            status: None,
            error: Some(error),
        }
    }

    /// True when a theorem predicate reported a certified violation.
    pub fn is_violation(&self) -> bool {
        self.status == Some(TheoremStatus::Violated)
    }
}

/// Instances of `kind` over the cartesian product of `ranges`, in
/// lexicographic parameter order. A single range for
/// [`FamilyKind::CompleteBipartite`] is read as the boundary family
/// `K_{d, (2d-1)^2 + d + 1}`.
pub fn sweep_specs(kind: FamilyKind, ranges: &[RangeInclusive<usize>]) -> Vec<FamilySpec> {
    let mut combos: Vec<Vec<usize>> = vec![Vec::new()];
    for r in ranges {
        combos = combos
            .into_iter()
            .flat_map(|prefix| {
                r.clone().map(move |v| {
                    let mut p = prefix.clone();
                    p.push(v);
                    p
                })
            })
            .collect();
    }
    if kind == FamilyKind::CompleteBipartite && ranges.len() == 1 {
        return combos
            .into_iter()
            .map(|p| {
                let d = p[0];
                FamilySpec::complete_bipartite(d, (2 * d).saturating_sub(1).pow(2) + d + 1)
            })
            .collect();
    }
    combos.into_iter().map(|p| FamilySpec::new(kind, p)).collect()
}

fn sweep_one(spec: &FamilySpec, predicate: Predicate, max_precision: u32) -> SweepRow {
    let g = match generate(spec) {
        Ok(g) => g,
        Err(e) => return SweepRow::failed(spec, e.to_string()),
    };
    let mut row = SweepRow::failed(spec, String::new());
    row.error = None;
    row.graph6 = Some(graph6_encode(&g));
    match predicate {
        Predicate::Compare => {
            let v = compare_ga_abc(&g, max_precision);
            row.sign = Some(v.sign);
            row.gap = Some(v.gap);
        }
        Predicate::Theorem(id) => match verify_theorem(id, &g, max_precision) {
            Ok(rep) => {
                row.hypothesis_holds = Some(rep.hypothesis_holds());
                row.status = Some(rep.status);
                row.sign = Some(rep.verdict.sign);
                row.gap = Some(rep.verdict.gap);
                row.clauses = rep.hypothesis.clauses;
            }
            Err(e) => row.error = Some(e.to_string()),
        },
    }
    row
}

/// One row per family instance. Generation and precondition errors are
/// recorded on their row and do not stop the sweep.
pub fn sweep_family(
    kind: FamilyKind,
    ranges: &[RangeInclusive<usize>],
    predicate: Predicate,
    max_precision: u32,
    exec: Execution,
) -> Vec<SweepRow> {
    let specs = sweep_specs(kind, ranges);
    par::map(&specs, exec, |s| sweep_one(s, predicate, max_precision))
}

/// `K_{d, (2d-1)^2 + d + 1}` for each `d` in `deltas`; convenience wrapper
/// over [`sweep_family`].
pub fn sweep_boundary_bipartite(deltas: RangeInclusive<usize>, max_precision: u32, exec: Execution) -> Vec<SweepRow> {
    sweep_family(FamilyKind::CompleteBipartite, &[deltas], Predicate::Compare, max_precision, exec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::canonical_form;

    #[test]
    fn small_counts() {
        let all: Vec<usize> = (1..=5).map(|n| enumerate_all(n).unwrap().len()).collect();
        assert_eq!(all, vec![1, 2, 4, 11, 34]);
        let conn: Vec<usize> = (1..=5).map(|n| enumerate_connected(n).unwrap().len()).collect();
        assert_eq!(conn, vec![1, 1, 2, 6, 21]);
        let trees: Vec<usize> = (1..=8).map(|n| enumerate_trees(n).unwrap().len()).collect();
        assert_eq!(trees, vec![1, 1, 1, 2, 3, 6, 11, 23]);
    }

    #[test]
    fn order_refusals() {
        assert!(matches!(enumerate_connected(8), Err(SearchError::OrderOutOfRange { n: 8, .. })));
        assert!(enumerate_connected(0).is_err());
        assert!(enumerate_trees(13).is_err());
    }

    #[test]
    fn three_vertex_graphs() {
        let g = enumerate_connected(3).unwrap();
        let path = generate(&FamilySpec::path(3)).unwrap();
        let tri = generate(&FamilySpec::cycle(3)).unwrap();
        let mut want = vec![canonical_form(&path).unwrap(), canonical_form(&tri).unwrap()];
        want.sort();
        let got: Vec<_> = g.iter().map(|x| canonical_form(x).unwrap()).collect();
        assert_eq!(got, want);
    }

    #[test]
    fn tstar_among_eight_vertex_trees() {
        let tstar = canonical_form(&generate(&FamilySpec::t_star()).unwrap()).unwrap();
        assert!(enumerate_trees(8).unwrap().iter().any(|t| canonical_form(t).unwrap() == tstar));
    }

    #[test]
    fn scan_examples() {
        let empty = scan_conjecture(&[], 256);
        assert_eq!(empty, ScanResult::default());
        let tstar = generate(&FamilySpec::t_star()).unwrap();
        let r = scan_conjecture(&[tstar.clone(), Graph::empty(1), Graph::empty(2)], 256);
        assert_eq!((r.graphs_scanned, r.graphs_skipped), (1, 2));
        let min = r.min_abs_gap.unwrap();
        assert_eq!(min.graph6, graph6_encode(&tstar));
        // 6 (4,1) edges and one (4,4) edge: 5.8 - (3 sqrt 3 + sqrt 6 / 4)
        let want = 5.8 - (3.0 * 3f64.sqrt() + 6f64.sqrt() / 4.0);
        assert!((min.gap.midpoint_f64() - want).abs() < 1e-12);
        assert!(min.gap.lower() > &crate::interval::Dyadic::from_f64(-0.009).unwrap());
        assert!(min.gap.upper() < &crate::interval::Dyadic::from_f64(-0.008).unwrap());
        assert!(r.indeterminates.is_empty() && r.violations.is_empty());
    }

    #[test]
    fn scan_is_order_independent() {
        let mut graphs = enumerate_connected(5).unwrap();
        let a = scan_conjecture_with(&graphs, 256, Execution::Sequential);
        graphs.reverse();
        let b = scan_conjecture_with(&graphs, 256, Execution::Parallel);
        assert_eq!(a, b);
    }

    #[test]
    fn sweeps() {
        let rows = sweep_family(FamilyKind::Wheel, &[4..=12], Predicate::Compare, 128, Execution::Parallel);
        assert_eq!(rows.len(), 9);
        assert!(rows.iter().all(|r| r.sign == Some(Sign::GaGreater)));
        assert_eq!(rows[0].params, vec![4]);

        let rows = sweep_boundary_bipartite(2..=6, 512, Execution::Parallel);
        assert_eq!(rows.iter().map(|r| r.params[1]).collect::<Vec<_>>(), vec![12, 29, 54, 87, 128]);
        assert!(rows.iter().all(|r| r.sign == Some(Sign::AbcGreater)));

        let rows = sweep_family(
            FamilyKind::CliqueBridge,
            &[12..=12, 3..=3],
            Predicate::Theorem(TheoremId::EdgewiseLocal),
            256,
            Execution::Sequential,
        );
        assert_eq!(rows[0].sign, Some(Sign::GaGreater));
        assert_eq!(rows[0].status, Some(TheoremStatus::Confirmed));

        // Unsorted starlike parameters fail on their own rows only.
        let rows = sweep_family(FamilyKind::Starlike, &[1..=2, 1..=2, 1..=1], Predicate::Compare, 128, Execution::Parallel);
        assert_eq!(rows.len(), 4);
        assert_eq!(rows.iter().filter(|r| r.error.is_some()).count(), 1);
        assert!(rows[1].error.is_some());
    }
}
