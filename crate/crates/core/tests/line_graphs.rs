use std::collections::BTreeSet;

use degix_core::graph::{canonical_form, CanonicalForm, Graph};
use degix_core::indices::{compare_ga_abc, Sign};
use degix_core::line_graph::{is_line_graph, is_molecular, line_graph, LineGraphViolation};
use degix_core::search::{enumerate_all, enumerate_connected};

/// Every line graph on at most `max` vertices, built from roots rather than
/// recognized: connected line graphs come from connected roots with at most
/// `max` edges, and a general line graph is a disjoint union of those.
fn constructed_line_graphs(max: usize) -> BTreeSet<CanonicalForm> {
    let mut connected: Vec<Vec<Graph>> = vec![vec![]; max + 1];
    let mut seen = BTreeSet::new();
    for n in 2..=max + 1 {
        for root in enumerate_connected(n).unwrap() {
            if root.size() == 0 || root.size() > max {
                continue;
            }
            let l = line_graph(&root).unwrap();
            if seen.insert(canonical_form(&l).unwrap()) {
                connected[l.order()].push(l);
            }
        }
    }
    // Unions of connected pieces with nondecreasing (order, index) to
    // avoid repeats; dedup by canonical form anyway.
    let mut out = BTreeSet::new();
    fn extend(
        acc: &Graph,
        min_piece: (usize, usize),
        room: usize,
        connected: &[Vec<Graph>],
        out: &mut BTreeSet<CanonicalForm>,
    ) {
        if acc.order() > 0 {
            out.insert(canonical_form(acc).unwrap());
        }
        for size in min_piece.0..=room {
            let start = if size == min_piece.0 { min_piece.1 } else { 0 };
            for (i, piece) in connected[size].iter().enumerate().skip(start) {
                extend(&acc.disjoint_union(piece), (size, i), room - size, connected, out);
            }
        }
    }
    extend(&Graph::empty(0), (1, 0), max, &connected, &mut out);
    out
}

#[test]
fn recognition_matches_construction_up_to_six() {
    let constructed = constructed_line_graphs(6);
    let mut recognized = 0;
    for n in 1..=6 {
        for g in enumerate_all(n).unwrap() {
            let check = is_line_graph(&g);
            let expected = constructed.contains(&canonical_form(&g).unwrap());
            assert_eq!(check.is_line_graph, expected, "{g:?}");
            recognized += usize::from(expected);
            match check.violation {
                None => assert!(check.is_line_graph),
                Some(v) => {
                    let mut vs = v.vertices();
                    vs.sort_unstable();
                    vs.dedup();
                    assert_eq!(vs.len(), 4);
                    if let LineGraphViolation::Claw { center, leaves } = v {
                        assert!(leaves.iter().all(|&l| g.has_edge(center, l)));
                        assert!(!g.has_edge(leaves[0], leaves[1]));
                        assert!(!g.has_edge(leaves[0], leaves[2]));
                        assert!(!g.has_edge(leaves[1], leaves[2]));
                    }
                }
            }
        }
    }
    assert_eq!(recognized, constructed.len());
}

#[test]
fn line_graphs_of_connected_graphs_are_recognized() {
    for n in 2..=7 {
        for m in enumerate_connected(n).unwrap() {
            let l = line_graph(&m).unwrap();
            assert!(is_line_graph(&l).is_line_graph, "L of {m:?}");
        }
    }
}

#[test]
fn molecular_line_graphs_have_ga_above_abc() {
    let mut count = 0;
    for n in 3..=7 {
        for m in enumerate_connected(n).unwrap().into_iter().filter(is_molecular) {
            let l = line_graph(&m).unwrap();
            assert!(l.max_degree() <= 6);
            assert_eq!(compare_ga_abc(&l, 256).sign, Sign::GaGreater, "M = {m:?}");
            count += 1;
        }
    }
    // Independent tally of roots with maximum degree at most 4.
    let expected: usize = (3..=7)
        .map(|n| {
            enumerate_connected(n)
                .unwrap()
                .iter()
                .filter(|g| {
                    let mut deg = vec![0; g.order()];
                    for (u, v) in g.edges() {
                        deg[u] += 1;
                        deg[v] += 1;
                    }
                    deg.into_iter().all(|d| d <= 4)
                })
                .count()
        })
        .sum();
    assert_eq!(count, expected);
    // Up to 5 vertices every connected graph is molecular.
    assert!(count >= 2 + 6 + 21);
}
