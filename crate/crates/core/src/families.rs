//! Named graph families and boundary examples, with the closed-form wheel
//! indices.
//!
//! Text syntax (used by the CLI): `path:N`, `cycle:N`, `star:N` (`K_{1,N}`),
//! `complete:N`, `kbip:R,S`, `wheel:N` (N vertices in total), `starlike:R1,..,RK`,
//! `tstar`, `bridge:P,Q`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{DomainError, FamilyError};
use crate::graph::{Graph, Vertex};
use crate::indices::CertifiedValue;
use crate::interval::Interval;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum FamilyKind {
    Path,
    Cycle,
    Star,
    Complete,
    CompleteBipartite,
    Wheel,
    Starlike,
    TStar,
    CliqueBridge,
}

impl FamilyKind {
    pub fn keyword(self) -> &'static str {
        match self {
            FamilyKind::Path => "path",
            FamilyKind::Cycle => "cycle",
            FamilyKind::Star => "star",
            FamilyKind::Complete => "complete",
            FamilyKind::CompleteBipartite => "kbip",
            FamilyKind::Wheel => "wheel",
            FamilyKind::Starlike => "starlike",
            FamilyKind::TStar => "tstar",
            FamilyKind::CliqueBridge => "bridge",
        }
    }

    pub fn from_keyword(s: &str) -> Option<Self> {
        Some(match s.to_ascii_lowercase().as_str() {
            "path" => FamilyKind::Path,
            "cycle" => FamilyKind::Cycle,
            "star" => FamilyKind::Star,
            "complete" => FamilyKind::Complete,
            "kbip" | "complete_bipartite" => FamilyKind::CompleteBipartite,
            "wheel" => FamilyKind::Wheel,
            "starlike" => FamilyKind::Starlike,
            "tstar" | "t_star" => FamilyKind::TStar,
            "bridge" | "clique_bridge" => FamilyKind::CliqueBridge,
            _ => return None,
        })
    }
}

/// A family member: kind plus integer parameters.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    pub params: Vec<usize>,
}

impl FamilySpec {
    pub fn new(kind: FamilyKind, params: Vec<usize>) -> Self {
        FamilySpec { kind, params }
    }

    pub fn path(n: usize) -> Self {
        FamilySpec::new(FamilyKind::Path, vec![n])
    }
    pub fn cycle(n: usize) -> Self {
        FamilySpec::new(FamilyKind::Cycle, vec![n])
    }
    pub fn star(n: usize) -> Self {
        FamilySpec::new(FamilyKind::Star, vec![n])
    }
    pub fn complete(n: usize) -> Self {
        FamilySpec::new(FamilyKind::Complete, vec![n])
    }
    pub fn complete_bipartite(r: usize, s: usize) -> Self {
        FamilySpec::new(FamilyKind::CompleteBipartite, vec![r, s])
    }
    pub fn wheel(n: usize) -> Self {
        FamilySpec::new(FamilyKind::Wheel, vec![n])
    }
    pub fn starlike(branches: &[usize]) -> Self {
        FamilySpec::new(FamilyKind::Starlike, branches.to_vec())
    }
    pub fn t_star() -> Self {
        FamilySpec::new(FamilyKind::TStar, vec![])
    }
    pub fn clique_bridge(p: usize, q: usize) -> Self {
        FamilySpec::new(FamilyKind::CliqueBridge, vec![p, q])
    }

    fn fail(&self, reason: impl Into<String>) -> FamilyError {
        FamilyError::new(self.to_string(), reason)
    }

    fn expect_params(&self, count: usize) -> Result<(), FamilyError> {
        if self.params.len() == count {
            Ok(())
        } else {
            Err(self.fail(format!("expected {count} parameter(s), got {}", self.params.len())))
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.kind.keyword())?;
        if !self.params.is_empty() {
            let ps: Vec<String> = self.params.iter().map(|p| p.to_string()).collect();
            write!(f, ":{}", ps.join(","))?;
        }
        Ok(())
    }
}

impl FromStr for FamilySpec {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let (head, tail) = s.split_once(':').unwrap_or((s, ""));
        let kind = FamilyKind::from_keyword(head)
            .ok_or_else(|| FamilyError::new(s, format!("unknown family `{head}`")))?;
        let params = if tail.trim().is_empty() {
            Vec::new()
        } else {
            tail.split(',')
                .map(|p| {
                    p.trim()
                        .parse::<usize>()
                        .map_err(|_| FamilyError::new(s, format!("`{p}` is not a nonnegative integer")))
                })
                .collect::<Result<_, _>>()?
        };
        Ok(FamilySpec { kind, params })
    }
}

impl Serialize for FamilySpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

fn complete_on(n: usize) -> Vec<(Vertex, Vertex)> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

fn built(edges: Vec<(Vertex, Vertex)>, n: usize) -> Graph {
    Graph::new(n, &edges).expect("family generators emit simple graphs")
}

/// Builds the graph described by `spec` after validating its parameters.
pub fn generate(spec: &FamilySpec) -> Result<Graph, FamilyError> {
    let p = &spec.params;
    let at_least = |v: usize, min: usize, what: &str| {
        if v < min {
            Err(spec.fail(format!("{what} must be at least {min}, got {v}")))
        } else {
            Ok(())
        }
    };
    match spec.kind {
        FamilyKind::Path => {
            spec.expect_params(1)?;
            at_least(p[0], 1, "n")?;
            Ok(built((1..p[0]).map(|v| (v - 1, v)).collect(), p[0]))
        }
        FamilyKind::Cycle => {
            spec.expect_params(1)?;
            at_least(p[0], 3, "n")?;
            Ok(built((0..p[0]).map(|v| (v, (v + 1) % p[0])).collect(), p[0]))
        }
        FamilyKind::Star => {
            spec.expect_params(1)?;
            at_least(p[0], 1, "n")?;
            Ok(built((1..=p[0]).map(|v| (0, v)).collect(), p[0] + 1))
        }
        FamilyKind::Complete => {
            spec.expect_params(1)?;
            at_least(p[0], 1, "n")?;
            Ok(built(complete_on(p[0]), p[0]))
        }
        FamilyKind::CompleteBipartite => {
            spec.expect_params(2)?;
            at_least(p[0], 1, "r")?;
            at_least(p[1], 1, "s")?;
            let (r, s) = (p[0], p[1]);
            Ok(built((0..r).flat_map(|i| (r..r + s).map(move |j| (i, j))).collect(), r + s))
        }
        FamilyKind::Wheel => {
            spec.expect_params(1)?;
            at_least(p[0], 4, "n")?;
            let rim = p[0] - 1;
            let mut edges: Vec<_> = (1..=rim).map(|v| (0, v)).collect();
            edges.extend((0..rim).map(|i| (1 + i, 1 + (i + 1) % rim)));
            Ok(built(edges, p[0]))
        }
        FamilyKind::Starlike => {
            if p.len() <= 2 {
                return Err(spec.fail(format!("needs more than 2 branches, got {}", p.len())));
            }
            if let Some(&r) = p.iter().find(|&&r| r == 0) {
                return Err(spec.fail(format!("branch lengths must be at least 1, got {r}")));
            }
            if p.windows(2).any(|w| w[0] < w[1]) {
                return Err(spec.fail("branch lengths must be listed in nonincreasing order"));
            }
            let mut edges = Vec::new();
            let mut next = 1;
            for &r in p {
                edges.push((0, next));
                for k in 1..r {
                    edges.push((next + k - 1, next + k));
                }
                next += r;
            }
            Ok(built(edges, next))
        }
        FamilyKind::TStar => {
            spec.expect_params(0)?;
            Ok(built(vec![(0, 1), (0, 2), (0, 3), (0, 4), (1, 5), (1, 6), (1, 7)], 8))
        }
        FamilyKind::CliqueBridge => {
            spec.expect_params(2)?;
            at_least(p[0], 3, "p")?;
            at_least(p[1], 3, "q")?;
            let (a, b) = (p[0], p[1]);
            let mut edges = complete_on(a);
            edges.extend(complete_on(b).into_iter().map(|(i, j)| (i + a, j + a)));
            edges.push((0, a));
            Ok(built(edges, a + b))
        }
    }
}

/// `K_{delta, (2 delta - 1)^2 + delta + 1}`: minimum degree `delta` and
/// `Delta - delta = (2 delta - 1)^2 + 1`.
pub fn boundary_bipartite(delta: usize) -> Result<Graph, DomainError> {
    if delta < 2 {
        return Err(DomainError::Parameter(format!("boundary_bipartite needs delta >= 2, got {delta}")));
    }
    let s = (2 * delta - 1).pow(2) + delta + 1;
    Ok(generate(&FamilySpec::complete_bipartite(delta, s)).expect("parameters validated"))
}

/// Closed-form enclosures of `GA(W_n)` and `ABC(W_n)` for the wheel on `n`
/// vertices:
///
/// * `GA  = (n-1) (1 + 2 sqrt(3(n-1)) / (n+2))`
/// * `ABC = (n-1) (2/3 + sqrt(n / (3(n-1))))`
pub fn wheel_closed_forms(n: usize, precision: u32) -> Result<(CertifiedValue, CertifiedValue), DomainError> {
    if n < 4 {
        return Err(DomainError::Parameter(format!("wheel order must be at least 4, got {n}")));
    }
    let wp = precision + crate::indices::GUARD_BITS;
    let rim = (n - 1) as u128;
    let spoke_ga = Interval::sqrt_of_int(3 * rim, wp)
        .mul_int(2, wp)
        .div(&Interval::from_int(n as u128 + 2), wp);
    let ga = spoke_ga.add(&Interval::from_int(1), wp).mul_int(rim, wp);
    // sqrt(n / (3(n-1))) = sqrt(3 n (n-1)) / (3 (n-1))
    let spoke_abc = Interval::sqrt_of_int(3 * n as u128 * rim, wp).div(&Interval::from_int(3 * rim), wp);
    let abc = spoke_abc
        .add(&Interval::from_ratio(2, 3, wp), wp)
        .mul_int(rim, wp);
    Ok((CertifiedValue::new(ga, precision), CertifiedValue::new(abc, precision)))
}

/// Branch lengths (nonincreasing) of a starlike tree, or `None` if `g` is not
/// a tree with exactly one vertex of degree greater than two.
pub fn starlike_branches(g: &Graph) -> Option<Vec<usize>> {
    if !g.is_tree() {
        return None;
    }
    let mut centers = (0..g.order()).filter(|&v| g.degree(v) > 2);
    let center = centers.next()?;
    if centers.next().is_some() {
        return None;
    }
    let mut lengths: Vec<usize> = g
        .neighbors(center)
        .iter()
        .map(|&start| {
            let (mut prev, mut cur, mut len) = (center, start, 1);
            while let Some(&nxt) = g.neighbors(cur).iter().find(|&&w| w != prev) {
                prev = cur;
                cur = nxt;
                len += 1;
            }
            len
        })
        .collect();
    lengths.sort_unstable_by(|a, b| b.cmp(a));
    Some(lengths)
}
