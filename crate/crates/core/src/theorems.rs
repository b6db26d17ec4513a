//! Hypothesis checkers and conclusion verifiers for the GA/ABC comparison
//! theorems, plus the polynomial side conditions behind them.
//!
//! Every theorem except [`TheoremId::Sandwich`] concludes `GA > ABC`; the
//! sandwich theorem bounds `ABC` between two multiples of `GA`.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{DomainError, TheoremError};
use crate::families::{generate, starlike_branches, FamilySpec};
use crate::graph::{canonical_form_with_limit, degree_stats, edge_degree_census, graph6_encode, Graph};
use crate::indices::{abc_index, certify_sign, compare_ga_abc, ga_index, CertifiedValue, ComparisonVerdict, Sign, GUARD_BITS};
use crate::interval::{Dyadic, Interval};
use crate::line_graph::{is_molecular, line_graph};
use crate::par::{self, Execution};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    /// `Delta - delta <= 3`, excluding `K_{1,4}` and `T*`.
    DtDelta3,
    /// Line graph of a connected molecular graph on at least 3 vertices.
    LineMolecular,
    /// `delta >= 2` and `Delta - delta <= (2 delta - 1)^2`.
    DeltaSquared,
    /// `delta >= 2` and `|d_i - d_j| <= (2 delta - 1)^2` on every edge.
    EdgewiseGlobal,
    /// `delta >= 2` and `|d_i - d_j| <= (2 min(d_i, d_j) - 1)^2` on every edge.
    EdgewiseLocal,
    /// `sqrt(2(n-2))/(n-1) GA <= ABC <= (n+1)/(4 sqrt(n-1)) GA` when `delta >= 2`.
    Sandwich,
    /// Trees with no pendant edge at a vertex of degree `>= 4` and
    /// `Delta - delta_1 <= (2 delta_1 - 1)^2`.
    TreePendant,
    /// Starlike, every branch of length at least 4.
    Starlike1,
    /// Starlike, every branch at least 2 and mean branch length at least 4.
    Starlike2,
    /// Starlike, mean branch length at least 8.
    Starlike3,
}

impl TheoremId {
    pub const ALL: [TheoremId; 10] = [
        TheoremId::DtDelta3,
        TheoremId::LineMolecular,
        TheoremId::DeltaSquared,
        TheoremId::EdgewiseGlobal,
        TheoremId::EdgewiseLocal,
        TheoremId::Sandwich,
        TheoremId::TreePendant,
        TheoremId::Starlike1,
        TheoremId::Starlike2,
        TheoremId::Starlike3,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::DtDelta3 => "DT_DELTA3",
            TheoremId::LineMolecular => "LINE_MOLECULAR",
            TheoremId::DeltaSquared => "DELTA_SQUARED",
            TheoremId::EdgewiseGlobal => "EDGEWISE_GLOBAL",
            TheoremId::EdgewiseLocal => "EDGEWISE_LOCAL",
            TheoremId::Sandwich => "SANDWICH",
            TheoremId::TreePendant => "TREE_PENDANT",
            TheoremId::Starlike1 => "STARLIKE_1",
            TheoremId::Starlike2 => "STARLIKE_2",
            TheoremId::Starlike3 => "STARLIKE_3",
        }
    }

    /// Theorems whose input must be a tree.
    pub fn requires_tree(self) -> bool {
        matches!(self, TheoremId::TreePendant | TheoremId::Starlike1 | TheoremId::Starlike2 | TheoremId::Starlike3)
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for TheoremId {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

/// Case-insensitive; `-` and `_` are interchangeable.
impl FromStr for TheoremId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let norm = s.trim().replace('-', "_").to_ascii_uppercase();
        TheoremId::ALL
            .into_iter()
            .find(|id| id.as_str() == norm)
            .ok_or_else(|| {
                let names: Vec<_> = TheoremId::ALL.iter().map(|id| id.as_str().to_ascii_lowercase()).collect();
                format!("unknown theorem `{s}` (expected one of: {})", names.join(", "))
            })
    }
}

/// One independently evaluated hypothesis clause.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Clause {
    pub name: &'static str,
    pub holds: bool,
    pub detail: String,
}

impl Clause {
    fn new(name: &'static str, holds: bool, detail: impl Into<String>) -> Self {
        Clause { name, holds, detail: detail.into() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HypothesisCheck {
    pub theorem: TheoremId,
    pub clauses: Vec<Clause>,
}

impl HypothesisCheck {
    pub fn holds(&self) -> bool {
        self.clauses.iter().all(|c| c.holds)
    }

    pub fn clause(&self, name: &str) -> Option<&Clause> {
        self.clauses.iter().find(|c| c.name == name)
    }
}

fn precondition(id: TheoremId, reason: impl Into<String>) -> TheoremError {
    TheoremError::Precondition { theorem: id.as_str().to_string(), reason: reason.into() }
}

/// Isomorphism test through canonical forms, with cheap invariant rejects.
fn isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.order() != b.order() || a.size() != b.size() {
        return false;
    }
    let (mut da, mut db) = (a.degrees().to_vec(), b.degrees().to_vec());
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return false;
    }
    match (canonical_form_with_limit(a, a.order()), canonical_form_with_limit(b, b.order())) {
        (Ok(x), Ok(y)) => x == y,
        _ => false,
    }
}

fn is_complete(g: &Graph) -> bool {
    // A simple graph with n(n-1)/2 edges is K_n; the canonical comparison is
    // a cross-check that stays exact for any order.
    let n = g.order();
    let full = g.size() == n * n.saturating_sub(1) / 2;
    if n <= 64 {
        full && isomorphic(g, &generate(&FamilySpec::complete(n.max(1))).expect("n >= 1"))
    } else {
        full
    }
}

fn is_c3(g: &Graph) -> bool {
    isomorphic(g, &generate(&FamilySpec::cycle(3)).expect("valid"))
}

fn square(k: usize) -> usize {
    (2 * k).saturating_sub(1).pow(2)
}

fn min_degree_clause(g: &Graph) -> Clause {
    let d = g.min_degree();
    Clause::new("min_degree_ge_2", d >= 2, format!("delta = {d}"))
}

fn edge_gap_clause(g: &Graph, name: &'static str, bound: impl Fn(usize, usize) -> usize) -> Clause {
    let bad = g.edges().find(|&(u, v)| {
        let (a, b) = (g.degree(u), g.degree(v));
        a.abs_diff(b) > bound(a, b)
    });
    match bad {
        None => Clause::new(name, true, "every edge satisfies the bound"),
        Some((u, v)) => {
            let (a, b) = (g.degree(u), g.degree(v));
            Clause::new(
                name,
                false,
                format!("edge ({u}, {v}) has |{a} - {b}| = {} > {}", a.abs_diff(b), bound(a, b)),
            )
        }
    }
}

/// Evaluate each hypothesis clause of `id` on `g` independently.
///
/// `g` must be connected and non-trivial. `LineMolecular` takes the root
/// graph `M` (at least 3 vertices); the tree theorems require a tree and the
/// starlike ones a starlike tree.
pub fn check_hypothesis(id: TheoremId, g: &Graph) -> Result<HypothesisCheck, TheoremError> {
    if g.order() < 2 {
        return Err(precondition(id, "graph is trivial"));
    }
    if !g.is_connected() {
        return Err(precondition(id, "graph is not connected"));
    }
    let st = degree_stats(g);
    let (dmax, dmin) = (st.delta_max, st.delta_min);
    let clauses = match id {
        TheoremId::DtDelta3 => {
            let k14 = generate(&FamilySpec::star(4)).expect("valid");
            let tstar = generate(&FamilySpec::t_star()).expect("valid");
            let is_k14 = isomorphic(g, &k14);
            let is_tstar = isomorphic(g, &tstar);
            vec![
                Clause::new("degree_spread_le_3", dmax - dmin <= 3, format!("Delta - delta = {}", dmax - dmin)),
                Clause::new("not_k1_4", !is_k14, if is_k14 { "graph is K1,4" } else { "" }),
                Clause::new("not_t_star", !is_tstar, if is_tstar { "graph is T*" } else { "" }),
            ]
        }
        TheoremId::LineMolecular => {
            if g.order() < 3 {
                return Err(precondition(id, format!("root graph has {} vertices, need at least 3", g.order())));
            }
            vec![Clause::new("molecular", is_molecular(g), format!("Delta = {dmax}"))]
        }
        TheoremId::DeltaSquared | TheoremId::Sandwich => {
            let mut c = vec![min_degree_clause(g)];
            if id == TheoremId::DeltaSquared {
                c.push(Clause::new(
                    "degree_spread_le_square",
                    dmax - dmin <= square(dmin),
                    format!("Delta - delta = {} vs (2 delta - 1)^2 = {}", dmax - dmin, square(dmin)),
                ));
            }
            c
        }
        TheoremId::EdgewiseGlobal => {
            vec![min_degree_clause(g), edge_gap_clause(g, "edge_gaps_le_square", |_, _| square(dmin))]
        }
        TheoremId::EdgewiseLocal => {
            vec![min_degree_clause(g), edge_gap_clause(g, "edge_gaps_le_local_square", |a, b| square(a.min(b)))]
        }
        TheoremId::TreePendant => {
            if !g.is_tree() {
                return Err(precondition(id, "graph is not a tree"));
            }
            let census = edge_degree_census(g);
            let heavy: Vec<usize> = census.iter().filter(|&((a, b), _)| b == 1 && a >= 4).map(|((a, _), _)| a).collect();
            let spread = match st.delta_min_nonpendant {
                Some(d1) => Clause::new(
                    "degree_spread_le_square_nonpendant",
                    dmax - d1 <= square(d1),
                    format!("Delta - delta_1 = {} vs (2 delta_1 - 1)^2 = {}", dmax - d1, square(d1)),
                ),
                None => Clause::new("degree_spread_le_square_nonpendant", false, "no vertex of degree at least 2"),
            };
            vec![
                Clause::new("order_ge_3", g.order() >= 3, format!("n = {}", g.order())),
                Clause::new(
                    "no_pendant_edge_at_degree_ge_4",
                    heavy.is_empty(),
                    if heavy.is_empty() { String::new() } else { format!("pendant edges at degrees {heavy:?}") },
                ),
                spread,
            ]
        }
        TheoremId::Starlike1 | TheoremId::Starlike2 | TheoremId::Starlike3 => {
            let r = starlike_branches(g).ok_or_else(|| precondition(id, "graph is not a starlike tree"))?;
            let (k, sum, min) = (r.len(), r.iter().sum::<usize>(), *r.last().expect("k > 2"));
            let mean = format!("mean branch length = {sum}/{k}");
            match id {
                TheoremId::Starlike1 => vec![Clause::new("branches_ge_4", min >= 4, format!("shortest branch = {min}"))],
                TheoremId::Starlike2 => vec![
                    Clause::new("branches_ge_2", min >= 2, format!("shortest branch = {min}")),
                    Clause::new("mean_branch_ge_4", sum >= 4 * k, mean),
                ],
                _ => vec![Clause::new("mean_branch_ge_8", sum >= 8 * k, mean)],
            }
        }
    };
    Ok(HypothesisCheck { theorem: id, clauses })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum BoundStatus {
    /// The margin is certified positive.
    Strict,
    /// The margin enclosure still contains zero at the maximum precision.
    Equal,
    /// The margin is certified negative: the bound fails.
    Violated,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SandwichCheck {
    pub left: BoundStatus,
    pub right: BoundStatus,
    /// `ABC - sqrt(2(n-2))/(n-1) GA`
    pub left_margin: CertifiedValue,
    /// `(n+1)/(4 sqrt(n-1)) GA - ABC`
    pub right_margin: CertifiedValue,
    pub is_complete: bool,
    pub is_c3: bool,
}

impl SandwichCheck {
    pub fn bounds_hold(&self) -> bool {
        self.left != BoundStatus::Violated && self.right != BoundStatus::Violated
    }

    /// Equality flags agree with the isomorphism classes that attain them.
    pub fn equality_cases_match(&self) -> bool {
        (self.left == BoundStatus::Equal) == self.is_complete && (self.right == BoundStatus::Equal) == self.is_c3
    }
}

fn bound_status(max_precision: u32, eval: impl Fn(u32) -> CertifiedValue) -> (BoundStatus, CertifiedValue) {
    let (sign, v) = certify_sign(max_precision, eval);
    let status = match sign {
        Sign::GaGreater => BoundStatus::Strict,
        Sign::AbcGreater => BoundStatus::Violated,
        Sign::Equal | Sign::Indeterminate => BoundStatus::Equal,
    };
    (status, v)
}

/// Certify both sandwich bounds for a connected graph with `delta >= 2`.
pub fn check_sandwich(g: &Graph, max_precision: u32) -> Result<SandwichCheck, TheoremError> {
    let id = TheoremId::Sandwich;
    if !g.is_connected() || g.order() < 2 {
        return Err(precondition(id, "graph must be connected and non-trivial"));
    }
    if g.min_degree() < 2 {
        return Err(precondition(id, format!("minimum degree is {}, need at least 2", g.min_degree())));
    }
    let n = g.order() as u128;
    let indices = |p: u32| (ga_index(g, p), abc_index(g, p), p + GUARD_BITS);
    let (left, left_margin) = bound_status(max_precision, |p| {
        let (ga, abc, wp) = indices(p);
        let coef = Interval::sqrt_of_int(2 * (n - 2), wp).div(&Interval::from_int(n - 1), wp);
        CertifiedValue::new(abc.enclosure().sub(&coef.mul(ga.enclosure(), wp), wp), p)
    });
    let (right, right_margin) = bound_status(max_precision, |p| {
        let (ga, abc, wp) = indices(p);
        let coef = Interval::from_int(n + 1).div(&Interval::sqrt_of_int(n - 1, wp).mul_int(4, wp), wp);
        CertifiedValue::new(coef.mul(ga.enclosure(), wp).sub(abc.enclosure(), wp), p)
    });
    Ok(SandwichCheck { left, right, left_margin, right_margin, is_complete: is_complete(g), is_c3: is_c3(g) })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum TheoremStatus {
    HypothesisFailed,
    Confirmed,
    /// The conclusion could not be certified either way.
    Indeterminate,
    /// The hypothesis holds and the conclusion is certified false.
    Violated,
}

impl TheoremStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            TheoremStatus::HypothesisFailed => "HYPOTHESIS_FAILED",
            TheoremStatus::Confirmed => "CONFIRMED",
            TheoremStatus::Indeterminate => "INDETERMINATE",
            TheoremStatus::Violated => "VIOLATED",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremReport {
    pub theorem: TheoremId,
    pub graph6: String,
    /// graph6 of the graph the conclusion was evaluated on, when it differs
    /// from the input (the line graph for `LineMolecular`).
    pub evaluated_graph6: Option<String>,
    pub hypothesis: HypothesisCheck,
    pub verdict: ComparisonVerdict,
    pub sandwich: Option<SandwichCheck>,
    pub status: TheoremStatus,
}

impl TheoremReport {
    pub fn hypothesis_holds(&self) -> bool {
        self.hypothesis.holds()
    }

    /// False only when the hypothesis holds and the conclusion is certified
    /// to fail.
    pub fn consistent(&self) -> bool {
        self.status != TheoremStatus::Violated
    }
}

impl Serialize for TheoremReport {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct View<'a> {
            theorem: TheoremId,
            graph6: &'a str,
            #[serde(skip_serializing_if = "Option::is_none")]
            evaluated_graph6: Option<&'a str>,
            clauses: &'a [Clause],
            hypothesis_holds: bool,
            verdict: Sign,
            gap_lo: f64,
            gap_hi: f64,
            precision: u32,
            status: TheoremStatus,
            consistent: bool,
            #[serde(skip_serializing_if = "Option::is_none")]
            sandwich: Option<&'a SandwichCheck>,
        }
        let (gap_lo, gap_hi) = self.verdict.gap.bounds_f64();
        View {
            theorem: self.theorem,
            graph6: &self.graph6,
            evaluated_graph6: self.evaluated_graph6.as_deref(),
            clauses: &self.hypothesis.clauses,
            hypothesis_holds: self.hypothesis_holds(),
            verdict: self.verdict.sign,
            gap_lo,
            gap_hi,
            precision: self.verdict.precision_used,
            status: self.status,
            consistent: self.consistent(),
            sandwich: self.sandwich.as_ref(),
        }
        .serialize(s)
    }
}

/// Check the hypothesis of `id` on `g` and certify its conclusion.
///
/// The comparison verdict is computed even when the hypothesis fails so
/// boundary examples can be inspected.
pub fn verify_theorem(id: TheoremId, g: &Graph, max_precision: u32) -> Result<TheoremReport, TheoremError> {
    let hypothesis = check_hypothesis(id, g)?;
    let (verdict, evaluated_graph6) = if id == TheoremId::LineMolecular {
        let l = line_graph(g).map_err(|e| precondition(id, e.to_string()))?;
        (compare_ga_abc(&l, max_precision), Some(graph6_encode(&l)))
    } else {
        (compare_ga_abc(g, max_precision), None)
    };
    let holds = hypothesis.holds();
    let sandwich = if id == TheoremId::Sandwich && holds { Some(check_sandwich(g, max_precision)?) } else { None };
    let status = if !holds {
        TheoremStatus::HypothesisFailed
    } else if let Some(sw) = &sandwich {
        let certified_mismatch = (sw.left == BoundStatus::Strict && sw.is_complete)
            || (sw.right == BoundStatus::Strict && sw.is_c3);
        if !sw.bounds_hold() || certified_mismatch {
            TheoremStatus::Violated
        } else if sw.equality_cases_match() {
            TheoremStatus::Confirmed
        } else {
            TheoremStatus::Indeterminate
        }
    } else {
        match verdict.sign {
            Sign::GaGreater => TheoremStatus::Confirmed,
            Sign::AbcGreater | Sign::Equal => TheoremStatus::Violated,
            Sign::Indeterminate => TheoremStatus::Indeterminate,
        }
    };
    Ok(TheoremReport { theorem: id, graph6: graph6_encode(g), evaluated_graph6, hypothesis, verdict, sandwich, status })
}

/// `f(x, y) = (x + y)^2 x^2 - (x + y/2)^2 (2x + y - 2)`, evaluated exactly.
pub fn lemma_f(x: &Dyadic, y: &Dyadic) -> CertifiedValue {
    let s = x.add(y);
    let first = s.mul(&s).mul(&x.mul(x));
    let h = x.add(&y.mul_pow2(-1));
    let second = h.mul(&h).mul(&x.mul_pow2(1).add(y).sub(&Dyadic::from_int(2)));
    CertifiedValue::exact(first.sub(&second))
}

/// `Gamma = a^2 b^2 - (a + b)^2 (a + b - 2) / 4`, evaluated exactly. For
/// `a + b > 2` its sign is the sign of `theta(a, b) - phi(a, b)`.
pub fn gamma(a: usize, b: usize) -> Result<CertifiedValue, DomainError> {
    if a == 0 || b == 0 {
        return Err(DomainError::NonPositiveDegree { a, b });
    }
    let (a, b) = (Dyadic::from_int(a as u64), Dyadic::from_int(b as u64));
    let s = a.add(&b);
    let value = a.mul(&a).mul(&b.mul(&b)).sub(&s.mul(&s).mul(&s.sub(&Dyadic::from_int(2))).mul_pow2(-2));
    Ok(CertifiedValue::exact(value))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PositivityScan {
    pub k: usize,
    pub grid_step: f64,
    pub integer_points: usize,
    pub grid_points: usize,
    /// Points where `f` is not positive, as `(x, y)`.
    pub failures: Vec<(f64, f64)>,
}

impl PositivityScan {
    pub fn all_positive(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Evaluate `f` on every integer point and every `grid_step` lattice point
/// of `[k, k + (2k-1)^2] x [0, (2k-1)^2]`.
pub fn lemma_positivity_scan(k: usize, grid_step: f64) -> Result<PositivityScan, DomainError> {
    if k < 2 {
        return Err(DomainError::Parameter(format!("k must be at least 2, got {k}")));
    }
    let step = Dyadic::from_f64(grid_step)
        .filter(|s| s.is_positive())
        .ok_or_else(|| DomainError::Parameter(format!("grid step must be positive and finite, got {grid_step}")))?;
    let span = Dyadic::from_int(square(k) as u64);
    let x0 = Dyadic::from_int(k as u64);
    let mut failures = Vec::new();
    let mut check = |x: &Dyadic, y: &Dyadic| {
        if !lemma_f(x, y).is_positive() {
            failures.push((x.to_f64(), y.to_f64()));
        }
    };
    let mut integer_points = 0;
    for i in 0..=square(k) {
        for j in 0..=square(k) {
            check(&Dyadic::from_int((k + i) as u64), &Dyadic::from_int(j as u64));
            integer_points += 1;
        }
    }
    let axis = |limit: &Dyadic| {
        let mut pts = vec![Dyadic::zero()];
        loop {
            let next = pts.last().expect("nonempty").add(&step);
            if next > *limit {
                return pts;
            }
            pts.push(next);
        }
    };
    let offsets = axis(&span);
    for dx in &offsets {
        let x = x0.add(dx);
        for y in &offsets {
            check(&x, y);
        }
    }
    let grid_points = offsets.len() * offsets.len();
    Ok(PositivityScan { k, grid_step, integer_points, grid_points, failures })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrossoverRow {
    pub n: usize,
    pub sign: Sign,
    pub gap: CertifiedValue,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrossoverScan {
    pub lo: usize,
    pub hi: usize,
    pub precision: u32,
    /// Smallest `n` in the range with `ABC(W_n) > GA(W_n)`.
    pub first_flip: Option<usize>,
    pub rows: Vec<CrossoverRow>,
}

/// Certified sign of `GA(W_n) - ABC(W_n)` for every wheel order in
/// `lo..=hi`.
pub fn crossover_scan(lo: usize, hi: usize, max_precision: u32) -> Result<CrossoverScan, TheoremError> {
    crossover_scan_with(lo, hi, max_precision, Execution::default())
}

pub fn crossover_scan_with(lo: usize, hi: usize, max_precision: u32, exec: Execution) -> Result<CrossoverScan, TheoremError> {
    if lo < 4 || lo >= hi {
        return Err(DomainError::Parameter(format!("wheel range needs 4 <= lo < hi, got {lo}..{hi}")).into());
    }
    let rows = par::map_range(lo..hi + 1, exec, |n| {
        let w = generate(&FamilySpec::wheel(n)).expect("n >= 4");
        let v = compare_ga_abc(&w, max_precision);
        CrossoverRow { n, sign: v.sign, gap: v.gap }
    });
    if let Some(bad) = rows.iter().find(|r| !r.sign.is_certified()) {
        return Err(TheoremError::IndeterminateCrossover { n: bad.n, precision: max_precision });
    }
    let first_flip = rows.iter().find(|r| r.sign == Sign::AbcGreater).map(|r| r.n);
    Ok(CrossoverScan { lo, hi, precision: max_precision, first_flip, rows })
}
