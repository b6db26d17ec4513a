//! Geometric-arithmetic (GA) and atom-bond connectivity (ABC) indices as
//! certified interval enclosures, and the certified sign of `GA - ABC`.
//!
//! Per-edge terms depend only on the endpoint degrees `(a, b)`:
//!
//! * `theta(a, b) = 2 sqrt(ab) / (a + b)`
//! * `phi(a, b)   = sqrt((a + b - 2) / (ab))`
//!
//! so both indices, and their difference, are computed from the
//! [`EdgeDegreeCensus`] as `sum m_{a,b} * term(a, b)`.

use std::cmp::Ordering;

use serde::{Serialize, Serializer};

use crate::error::DomainError;
use crate::graph::{edge_degree_census, EdgeDegreeCensus, Graph};
use crate::interval::{Dyadic, Interval};

/// Extra working bits carried internally beyond the requested precision.
pub const GUARD_BITS: u32 = 8;
/// Precision escalation ladder for sign decisions.
pub const PRECISION_LADDER: [u32; 4] = [64, 128, 256, 512];
pub const DEFAULT_MAX_PRECISION: u32 = 512;

/// An enclosure `[lower, upper]` of a real quantity, computed at `precision`
/// significant bits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertifiedValue {
    enclosure: Interval,
    precision: u32,
}

impl CertifiedValue {
    pub fn new(enclosure: Interval, precision: u32) -> Self {
        CertifiedValue { enclosure, precision }
    }

    pub fn exact(v: Dyadic) -> Self {
        CertifiedValue { enclosure: Interval::point(v), precision: 0 }
    }

    pub fn enclosure(&self) -> &Interval {
        &self.enclosure
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }

    pub fn lower(&self) -> &Dyadic {
        self.enclosure.lo()
    }

    pub fn upper(&self) -> &Dyadic {
        self.enclosure.hi()
    }

    /// Outward-rounded binary64 bounds.
    pub fn bounds_f64(&self) -> (f64, f64) {
        self.enclosure.to_f64_bounds()
    }

    pub fn midpoint_f64(&self) -> f64 {
        self.enclosure.midpoint().to_f64()
    }

    pub fn is_positive(&self) -> bool {
        self.enclosure.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.enclosure.is_negative()
    }

    pub fn contains_zero(&self) -> bool {
        self.enclosure.contains_zero()
    }

    /// Whether the enclosure is the single exact point zero.
    pub fn is_exact_zero(&self) -> bool {
        self.enclosure.is_point() && self.enclosure.lo().is_zero()
    }

    pub fn contains_f64(&self, v: f64) -> bool {
        Dyadic::from_f64(v).is_some_and(|d| self.enclosure.contains(&d))
    }
}

/// Round to 12 significant decimal digits for display.
pub fn display_digits(v: f64) -> f64 {
    if v == 0.0 || !v.is_finite() {
        return v;
    }
    format!("{v:.11e}").parse().unwrap_or(v)
}

impl Serialize for CertifiedValue {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct View {
            lo: f64,
            hi: f64,
            mid: f64,
            precision: u32,
        }
        let (lo, hi) = self.bounds_f64();
        View { lo, hi, mid: display_digits(self.midpoint_f64()), precision: self.precision }.serialize(s)
    }
}

fn check_degrees(a: usize, b: usize) -> Result<(), DomainError> {
    if a == 0 || b == 0 {
        Err(DomainError::NonPositiveDegree { a, b })
    } else {
        Ok(())
    }
}

fn working(precision: u32) -> u32 {
    precision + GUARD_BITS
}

fn theta_interval(a: usize, b: usize, wp: u32) -> Interval {
    if a == b {
        return Interval::from_int(1);
    }
    let (a, b) = (a as u128, b as u128);
    Interval::sqrt_of_int(a * b, wp)
        .mul_int(2, wp)
        .div(&Interval::from_int(a + b), wp)
}

fn phi_interval(a: usize, b: usize, wp: u32) -> Interval {
    let (a, b) = (a as u128, b as u128);
    // sqrt((a+b-2)/(ab)) = sqrt((a+b-2) ab) / (ab)
    let radicand = (a + b - 2) * a * b;
    Interval::sqrt_of_int(radicand, wp).div(&Interval::from_int(a * b), wp)
}

/// Enclosure of `theta(a, b) = 2 sqrt(ab) / (a + b)`.
pub fn theta_term(a: usize, b: usize, precision: u32) -> Result<CertifiedValue, DomainError> {
    check_degrees(a, b)?;
    Ok(CertifiedValue::new(theta_interval(a, b, working(precision)), precision))
}

/// Enclosure of `phi(a, b) = sqrt((a + b - 2) / (ab))`.
pub fn phi_term(a: usize, b: usize, precision: u32) -> Result<CertifiedValue, DomainError> {
    check_degrees(a, b)?;
    Ok(CertifiedValue::new(phi_interval(a, b, working(precision)), precision))
}

/// Enclosure of the per-edge difference `theta(a, b) - phi(a, b)`.
pub fn edge_gap_term(a: usize, b: usize, precision: u32) -> Result<CertifiedValue, DomainError> {
    check_degrees(a, b)?;
    let wp = working(precision);
    let gap = theta_interval(a, b, wp).sub(&phi_interval(a, b, wp), wp);
    Ok(CertifiedValue::new(gap, precision))
}

fn census_sum(census: &EdgeDegreeCensus, wp: u32, term: impl Fn(usize, usize, u32) -> Interval) -> Interval {
    census.iter().fold(Interval::zero(), |acc, ((a, b), m)| {
        acc.add(&term(a, b, wp).mul_int(m as u64, wp), wp)
    })
}

pub fn ga_from_census(census: &EdgeDegreeCensus, precision: u32) -> CertifiedValue {
    CertifiedValue::new(census_sum(census, working(precision), theta_interval), precision)
}

pub fn abc_from_census(census: &EdgeDegreeCensus, precision: u32) -> CertifiedValue {
    CertifiedValue::new(census_sum(census, working(precision), phi_interval), precision)
}

/// `GA - ABC`, summed term by term as `m_{a,b} (theta - phi)`.
pub fn gap_from_census(census: &EdgeDegreeCensus, precision: u32) -> CertifiedValue {
    let gap = census_sum(census, working(precision), |a, b, wp| {
        theta_interval(a, b, wp).sub(&phi_interval(a, b, wp), wp)
    });
    CertifiedValue::new(gap, precision)
}

pub fn ga_index(g: &Graph, precision: u32) -> CertifiedValue {
    ga_from_census(&edge_degree_census(g), precision)
}

pub fn abc_index(g: &Graph, precision: u32) -> CertifiedValue {
    abc_from_census(&edge_degree_census(g), precision)
}

/// The generic geometric-arithmetic functional
/// `sum over edges sqrt(Q_i Q_j) / ((Q_i + Q_j) / 2)` for positive vertex
/// quantities `q`. With `q = degrees` this is [`ga_index`].
pub fn ga_general(g: &Graph, q: &[f64], precision: u32) -> Result<CertifiedValue, DomainError> {
    if q.len() != g.order() {
        return Err(DomainError::QuantityCount { expected: g.order(), got: q.len() });
    }
    let qs = q
        .iter()
        .enumerate()
        .map(|(vertex, &value)| match Dyadic::from_f64(value) {
            Some(d) if d.is_positive() => Ok(d),
            _ => Err(DomainError::NonPositiveQuantity { vertex, value }),
        })
        .collect::<Result<Vec<_>, _>>()?;
    let wp = working(precision);
    let total = g.edges().fold(Interval::zero(), |acc, (i, j)| {
        let term = Interval::point(qs[i].mul(&qs[j]))
            .sqrt(wp)
            .mul_int(2, wp)
            .div(&Interval::point(qs[i].add(&qs[j])), wp);
        acc.add(&term, wp)
    });
    Ok(CertifiedValue::new(total, precision))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Sign {
    GaGreater,
    AbcGreater,
    /// The gap enclosure is the exact point zero.
    Equal,
    /// Zero remained inside the enclosure at the maximum precision.
    Indeterminate,
}

impl Sign {
    pub fn as_str(self) -> &'static str {
        match self {
            Sign::GaGreater => "GA_GREATER",
            Sign::AbcGreater => "ABC_GREATER",
            Sign::Equal => "EQUAL",
            Sign::Indeterminate => "INDETERMINATE",
        }
    }

    pub fn is_certified(self) -> bool {
        matches!(self, Sign::GaGreater | Sign::AbcGreater | Sign::Equal)
    }
}

impl std::fmt::Display for Sign {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComparisonVerdict {
    pub sign: Sign,
    pub gap: CertifiedValue,
    pub precision_used: u32,
}

/// Precisions tried for a sign decision capped at `max_precision`.
pub fn precision_ladder(max_precision: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut p = PRECISION_LADDER[0].min(max_precision.max(1));
    loop {
        out.push(p);
        if p >= max_precision {
            return out;
        }
        p = (p * 2).min(max_precision);
    }
}

/// Certify the sign of an enclosure produced by `eval` at increasing
/// precision. Returns the verdict sign and the last enclosure computed.
pub fn certify_sign(max_precision: u32, eval: impl Fn(u32) -> CertifiedValue) -> (Sign, CertifiedValue) {
    let ladder = precision_ladder(max_precision);
    let mut last = None;
    for p in ladder {
        let v = eval(p);
        let sign = if v.is_exact_zero() {
            Some(Sign::Equal)
        } else if v.is_positive() {
            Some(Sign::GaGreater)
        } else if v.is_negative() {
            Some(Sign::AbcGreater)
        } else {
            None
        };
        if let Some(s) = sign {
            return (s, v);
        }
        last = Some(v);
    }
    (Sign::Indeterminate, last.expect("ladder is never empty"))
}

pub fn compare_census(census: &EdgeDegreeCensus, max_precision: u32) -> ComparisonVerdict {
    let (sign, gap) = certify_sign(max_precision, |p| gap_from_census(census, p));
    let precision_used = gap.precision();
    ComparisonVerdict { sign, gap, precision_used }
}

/// Certified sign of `GA(g) - ABC(g)`, doubling precision from 64 bits up to
/// `max_precision` while zero stays inside the enclosure.
pub fn compare_ga_abc(g: &Graph, max_precision: u32) -> ComparisonVerdict {
    compare_census(&edge_degree_census(g), max_precision)
}

/// Total order on verdicts by `|gap|` midpoint, used for minimum-gap scans.
pub fn abs_gap_cmp(a: &CertifiedValue, b: &CertifiedValue) -> Ordering {
    a.enclosure().midpoint().abs().cmp(&b.enclosure().midpoint().abs())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn approx(v: &CertifiedValue, x: f64, tol: f64) -> bool {
        (v.midpoint_f64() - x).abs() <= tol
    }

    fn complete(n: usize) -> Graph {
        Graph::from_fn(n, |_, _| true)
    }

    fn path(n: usize) -> Graph {
        Graph::new(n, &(1..n).map(|v| (v - 1, v)).collect::<Vec<_>>()).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::new(n, &(0..n).map(|v| (v, (v + 1) % n)).collect::<Vec<_>>()).unwrap()
    }

    fn star(k: usize) -> Graph {
        Graph::new(k + 1, &(1..=k).map(|v| (0, v)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn theta_examples() {
        let t = theta_term(2, 2, 64).unwrap();
        assert!(t.enclosure().is_point() && t.lower() == &Dyadic::one());
        let t = theta_term(6, 5, 64).unwrap();
        assert!(approx(&t, 2.0 * 30f64.sqrt() / 11.0, 1e-15));
        assert!(approx(&t, 0.995859, 5e-7));
        for k in [1, 7, 1000] {
            let t = theta_term(k, k, 64).unwrap();
            assert!(t.enclosure().is_point() && t.lower() == &Dyadic::one());
        }
        assert_eq!(theta_term(0, 3, 64), Err(DomainError::NonPositiveDegree { a: 0, b: 3 }));
    }

    #[test]
    fn phi_examples() {
        assert!(phi_term(1, 1, 64).unwrap().is_exact_zero());
        assert!(approx(&phi_term(6, 1, 64).unwrap(), (5.0f64 / 6.0).sqrt(), 1e-15));
        assert!(approx(&phi_term(4, 4, 64).unwrap(), 0.5 * 1.5f64.sqrt(), 1e-15));
        assert!(phi_term(3, 0, 64).is_err());
    }

    #[test]
    fn theta_width_bound() {
        for p in [64u32, 128, 256] {
            for (a, b) in [(1, 2), (6, 5), (100, 3), (1, 1_000_000)] {
                let t = theta_term(a, b, p).unwrap();
                let bound = t.lower().mul_pow2(1 - p as i64);
                assert!(t.enclosure().width() <= bound, "({a},{b}) at {p}");
            }
        }
    }

    #[test]
    fn theta_never_exceeds_one() {
        for a in 1..40 {
            for b in 1..40 {
                let t = theta_term(a, b, 64).unwrap();
                assert!(t.upper() <= &Dyadic::one());
                if a != b {
                    assert!(t.upper() < &Dyadic::one());
                }
            }
        }
    }

    #[test]
    fn ga_examples() {
        for n in 1..8 {
            let v = ga_index(&complete(n), 64);
            assert!(v.enclosure().is_point());
            assert_eq!(v.lower(), &Dyadic::from_int(n * (n - 1) / 2));
        }
        assert!(approx(&ga_index(&star(4), 64), 3.2, 1e-15));
        let w4 = ga_index(&complete(4), 64);
        assert_eq!(w4.lower(), &Dyadic::from_int(6));
        assert!(ga_index(&Graph::empty(1), 64).is_exact_zero());
    }

    #[test]
    fn abc_examples() {
        assert!(abc_index(&path(2), 64).is_exact_zero());
        assert!(approx(&abc_index(&cycle(3), 64), 3.0 / 2f64.sqrt(), 1e-14));
        let k4 = abc_index(&complete(4), 64);
        // phi(3,3) = 2/3 exactly in the reals; six edges sum to 4.
        assert!(k4.contains_f64(4.0));
    }

    #[test]
    fn ga_regular_equals_size() {
        for n in 3..10 {
            let c = ga_index(&cycle(n), 64);
            assert_eq!(c.lower(), &Dyadic::from_int(n));
            let p = ga_index(&path(n), 64);
            assert!(p.upper() < &Dyadic::from_int(n - 1));
        }
    }

    #[test]
    fn ga_general_examples() {
        let g = cycle(5);
        let c = ga_general(&g, &[2.5; 5], 64).unwrap();
        assert!(c.enclosure().is_point());
        assert_eq!(c.lower(), &Dyadic::from_int(5));

        let k14 = star(4);
        let q: Vec<f64> = k14.degrees().iter().map(|&d| d as f64).collect();
        let general = ga_general(&k14, &q, 64).unwrap();
        let ga = ga_index(&k14, 64);
        assert!(general.enclosure().overlaps(ga.enclosure()));

        let p3 = path(3);
        let v = ga_general(&p3, &[1.0, 4.0, 1.0], 64).unwrap();
        assert!(approx(&v, 1.6, 1e-15));

        assert!(matches!(ga_general(&p3, &[1.0, 0.0, 1.0], 64), Err(DomainError::NonPositiveQuantity { vertex: 1, .. })));
        assert!(matches!(ga_general(&p3, &[1.0], 64), Err(DomainError::QuantityCount { .. })));
    }

    #[test]
    fn comparison_examples() {
        let v = compare_ga_abc(&path(2), 512);
        assert_eq!(v.sign, Sign::GaGreater);
        assert!(v.gap.enclosure().is_point());
        assert_eq!(v.gap.lower(), &Dyadic::one());

        let v = compare_ga_abc(&star(4), 512);
        assert_eq!(v.sign, Sign::AbcGreater);
        assert!(approx(&v.gap, 3.2 - 2.0 * 3f64.sqrt(), 1e-14));

        let t_star = Graph::new(8, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 5), (1, 6), (1, 7)]).unwrap();
        let v = compare_ga_abc(&t_star, 512);
        assert_eq!(v.sign, Sign::AbcGreater);
        // 5.8 - (3 sqrt 3 + sqrt 6 / 4)
        let expected = 5.8 - (3.0 * 3f64.sqrt() + 6f64.sqrt() / 4.0);
        assert!(approx(&v.gap, expected, 1e-14));
        assert_eq!(v.precision_used, 64);

        assert_eq!(compare_ga_abc(&Graph::empty(1), 512).sign, Sign::Equal);
    }

    #[test]
    fn ladder() {
        assert_eq!(precision_ladder(512), vec![64, 128, 256, 512]);
        assert_eq!(precision_ladder(128), vec![64, 128]);
        assert_eq!(precision_ladder(100), vec![64, 100]);
        assert_eq!(precision_ladder(32), vec![32]);
    }

    #[test]
    fn doubling_precision_nests() {
        let c = EdgeDegreeCensus::from_pairs([((4, 1), 6), ((4, 4), 1), ((7, 3), 5)]);
        for p in [64u32, 128, 256] {
            let a = gap_from_census(&c, p);
            let b = gap_from_census(&c, 2 * p);
            assert!(a.enclosure().encloses(b.enclosure()));
        }
    }

    #[test]
    fn serializes_bounds() {
        let v = serde_json::to_value(ga_index(&path(2), 64)).unwrap();
        assert_eq!(v["lo"], 1.0);
        assert_eq!(v["hi"], 1.0);
        assert_eq!(v["precision"], 64);
    }
}
