//! Arbitrary-precision dyadic interval arithmetic with outward rounding.
//!
//! Every value is an exact dyadic rational `mant · 2^exp`. Arithmetic on
//! [`Dyadic`] is exact; precision is only lost through explicit calls to
//! [`Dyadic::round`], [`Dyadic::div_round`] and [`Dyadic::sqrt_round`], each of
//! which rounds in a caller-chosen direction. [`Interval`] builds on these by
//! always rounding its lower endpoint down and its upper endpoint up, so the
//! enclosure of the true real value is never lost.
//!
//! Because a `p`-bit grid is contained in every finer grid, recomputing the
//! same expression at a higher precision yields a nested enclosure.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Rounding direction for inexact operations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rounding {
    /// Toward negative infinity.
    Down,
    /// Toward positive infinity.
    Up,
}

/// An exact dyadic rational `mant · 2^exp`, kept normalized so that the
/// mantissa is odd (or the value is zero with `exp == 0`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Dyadic {
    mant: BigInt,
    exp: i64,
}

fn pow2(k: u64) -> BigInt {
    BigInt::one() << k
}

fn shift_floor(x: &BigInt, k: u64) -> BigInt {
    x.div_floor(&pow2(k))
}

fn shift_ceil(x: &BigInt, k: u64) -> BigInt {
    -((-x).div_floor(&pow2(k)))
}

fn div_dir(num: &BigInt, den: &BigInt, dir: Rounding) -> BigInt {
    match dir {
        Rounding::Down => num.div_floor(den),
        Rounding::Up => -((-num).div_floor(den)),
    }
}

impl Dyadic {
    pub fn zero() -> Self {
        Dyadic { mant: BigInt::zero(), exp: 0 }
    }

    pub fn one() -> Self {
        Dyadic::from_int(1)
    }

    pub fn new(mant: BigInt, exp: i64) -> Self {
        Dyadic { mant, exp }.normalized()
    }

    pub fn from_int<T: Into<BigInt>>(v: T) -> Self {
        Dyadic::new(v.into(), 0)
    }

    /// Exact conversion of a finite binary64 value.
    pub fn from_f64(v: f64) -> Option<Self> {
        if !v.is_finite() {
            return None;
        }
        if v == 0.0 {
            return Some(Dyadic::zero());
        }
        let bits = v.to_bits();
        let sign = if bits >> 63 == 0 { 1i64 } else { -1i64 };
        let raw_exp = ((bits >> 52) & 0x7ff) as i64;
        let frac = bits & ((1u64 << 52) - 1);
        let (m, e) = if raw_exp == 0 {
            (frac, -1074)
        } else {
            (frac | (1u64 << 52), raw_exp - 1075)
        };
        Some(Dyadic::new(BigInt::from(m) * sign, e))
    }

    fn normalized(mut self) -> Self {
        if self.mant.is_zero() {
            self.exp = 0;
            return self;
        }
        if let Some(tz) = self.mant.trailing_zeros() {
            if tz > 0 {
                self.mant >>= tz;
                self.exp += tz as i64;
            }
        }
        self
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mant
    }

    pub fn exponent(&self) -> i64 {
        self.exp
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn signum(&self) -> Ordering {
        match self.mant.sign() {
            Sign::Minus => Ordering::Less,
            Sign::NoSign => Ordering::Equal,
            Sign::Plus => Ordering::Greater,
        }
    }

    pub fn is_positive(&self) -> bool {
        self.mant.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.mant.is_negative()
    }

    /// Number of significant mantissa bits.
    pub fn bits(&self) -> u64 {
        self.mant.bits()
    }

    pub fn neg(&self) -> Self {
        Dyadic { mant: -&self.mant, exp: self.exp }
    }

    pub fn abs(&self) -> Self {
        Dyadic { mant: self.mant.abs(), exp: self.exp }
    }

    pub fn add(&self, other: &Dyadic) -> Dyadic {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let e = self.exp.min(other.exp);
        let a = &self.mant << (self.exp - e) as u64;
        let b = &other.mant << (other.exp - e) as u64;
        Dyadic::new(a + b, e)
    }

    pub fn sub(&self, other: &Dyadic) -> Dyadic {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Dyadic) -> Dyadic {
        Dyadic::new(&self.mant * &other.mant, self.exp + other.exp)
    }

    /// Multiply by `2^k` exactly.
    pub fn mul_pow2(&self, k: i64) -> Dyadic {
        if self.is_zero() {
            return self.clone();
        }
        Dyadic { mant: self.mant.clone(), exp: self.exp + k }
    }

    /// Round to at most `prec` significant bits in direction `dir`.
    pub fn round(&self, prec: u32, dir: Rounding) -> Dyadic {
        let bits = self.bits();
        if bits <= prec as u64 {
            return self.clone();
        }
        let shift = bits - prec as u64;
        let m = match dir {
            Rounding::Down => shift_floor(&self.mant, shift),
            Rounding::Up => shift_ceil(&self.mant, shift),
        };
        Dyadic::new(m, self.exp + shift as i64)
    }

    /// `self / other` rounded to `prec` bits; `other` must be nonzero.
    pub fn div_round(&self, other: &Dyadic, prec: u32, dir: Rounding) -> Dyadic {
        assert!(!other.is_zero(), "division by zero");
        if self.is_zero() {
            return Dyadic::zero();
        }
        let (num, den) = if other.is_negative() {
            (self.neg(), other.neg())
        } else {
            (self.clone(), other.clone())
        };
        // Scale so the integer quotient carries at least prec + 2 bits.
        let want = prec as i64 + 2 + den.bits() as i64 - num.bits() as i64;
        let k = want.max(0) as u64;
        let q = div_dir(&(&num.mant << k), &den.mant, dir);
        Dyadic::new(q, num.exp - den.exp - k as i64).round(prec, dir)
    }

    /// Square root rounded to `prec` bits; `self` must be nonnegative.
    pub fn sqrt_round(&self, prec: u32, dir: Rounding) -> Dyadic {
        assert!(!self.is_negative(), "square root of a negative value");
        if self.is_zero() {
            return Dyadic::zero();
        }
        let target = 2 * (prec as i64 + 2);
        let mut s = target - self.bits() as i64;
        if (self.exp - s).rem_euclid(2) != 0 {
            s += 1;
        }
        let scaled = if s >= 0 {
            &self.mant << s as u64
        } else {
            match dir {
                Rounding::Down => shift_floor(&self.mant, (-s) as u64),
                Rounding::Up => shift_ceil(&self.mant, (-s) as u64),
            }
        };
        let mut r = scaled.sqrt();
        if dir == Rounding::Up && &r * &r < scaled {
            r += 1;
        }
        Dyadic::new(r, (self.exp - s) / 2).round(prec, dir)
    }

    /// Binary64 approximation rounded in direction `dir`.
    pub fn to_f64_dir(&self, dir: Rounding) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let r = self.round(53, dir);
        let m = r.mant.to_i64().expect("53-bit mantissa fits i64") as f64;
        ldexp(m, r.exp)
    }

    /// Nearest-ish binary64 approximation for display.
    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let r = self.round(60, Rounding::Down);
        let m = r.mant.to_f64().unwrap_or(f64::NAN);
        ldexp(m, r.exp)
    }
}

fn ldexp(m: f64, e: i64) -> f64 {
    let mut v = m;
    let mut e = e;
    while e > 1000 {
        v *= 2f64.powi(1000);
        e -= 1000;
    }
    while e < -1000 {
        v *= 2f64.powi(-1000);
        e += 1000;
    }
    v * 2f64.powi(e as i32)
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sub(other).signum()
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exp >= 0 {
            write!(f, "{}", &self.mant << self.exp as u64)
        } else {
            write!(f, "{}/2^{}", self.mant, -self.exp)
        }
    }
}

/// A closed interval `[lo, hi]` with dyadic endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    lo: Dyadic,
    hi: Dyadic,
}

impl Interval {
    pub fn new(lo: Dyadic, hi: Dyadic) -> Self {
        assert!(lo <= hi, "interval endpoints out of order");
        Interval { lo, hi }
    }

    pub fn point(v: Dyadic) -> Self {
        Interval { lo: v.clone(), hi: v }
    }

    pub fn zero() -> Self {
        Interval::point(Dyadic::zero())
    }

    pub fn from_int<T: Into<BigInt>>(v: T) -> Self {
        Interval::point(Dyadic::from_int(v))
    }

    /// Enclosure of `num / den`.
    pub fn from_ratio<T: Into<BigInt>, U: Into<BigInt>>(num: T, den: U, prec: u32) -> Self {
        Interval::from_int(num).div(&Interval::from_int(den), prec)
    }

    /// Enclosure of `sqrt(v)` for a nonnegative integer `v`.
    pub fn sqrt_of_int<T: Into<BigInt>>(v: T, prec: u32) -> Self {
        Interval::from_int(v).sqrt(prec)
    }

    pub fn lo(&self) -> &Dyadic {
        &self.lo
    }

    pub fn hi(&self) -> &Dyadic {
        &self.hi
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    /// Whether every point of the interval is strictly positive.
    pub fn is_positive(&self) -> bool {
        self.lo.is_positive()
    }

    /// Whether every point of the interval is strictly negative.
    pub fn is_negative(&self) -> bool {
        self.hi.is_negative()
    }

    pub fn contains(&self, v: &Dyadic) -> bool {
        &self.lo <= v && v <= &self.hi
    }

    /// Whether `other` lies entirely inside `self`.
    pub fn encloses(&self, other: &Interval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn overlaps(&self, other: &Interval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    pub fn width(&self) -> Dyadic {
        self.hi.sub(&self.lo)
    }

    pub fn midpoint(&self) -> Dyadic {
        self.lo.add(&self.hi).mul_pow2(-1)
    }

    /// Smallest absolute value over the interval.
    pub fn mig(&self) -> Dyadic {
        if self.contains_zero() {
            Dyadic::zero()
        } else if self.lo.is_positive() {
            self.lo.clone()
        } else {
            self.hi.abs()
        }
    }

    fn rounded(lo: Dyadic, hi: Dyadic, prec: u32) -> Self {
        Interval {
            lo: lo.round(prec, Rounding::Down),
            hi: hi.round(prec, Rounding::Up),
        }
    }

    pub fn neg(&self) -> Self {
        Interval { lo: self.hi.neg(), hi: self.lo.neg() }
    }

    pub fn add(&self, other: &Interval, prec: u32) -> Self {
        Interval::rounded(self.lo.add(&other.lo), self.hi.add(&other.hi), prec)
    }

    pub fn sub(&self, other: &Interval, prec: u32) -> Self {
        self.add(&other.neg(), prec)
    }

    pub fn mul(&self, other: &Interval, prec: u32) -> Self {
        let products = [
            self.lo.mul(&other.lo),
            self.lo.mul(&other.hi),
            self.hi.mul(&other.lo),
            self.hi.mul(&other.hi),
        ];
        let lo = products.iter().min().unwrap().clone();
        let hi = products.iter().max().unwrap().clone();
        Interval::rounded(lo, hi, prec)
    }

    pub fn mul_int<T: Into<BigInt>>(&self, k: T, prec: u32) -> Self {
        self.mul(&Interval::from_int(k), prec)
    }

    /// Interval quotient; `other` must not contain zero.
    pub fn div(&self, other: &Interval, prec: u32) -> Self {
        assert!(!other.contains_zero(), "interval division by an interval containing zero");
        let quot = |a: &Dyadic, b: &Dyadic, dir| a.div_round(b, prec, dir);
        let cands_lo = [
            quot(&self.lo, &other.lo, Rounding::Down),
            quot(&self.lo, &other.hi, Rounding::Down),
            quot(&self.hi, &other.lo, Rounding::Down),
            quot(&self.hi, &other.hi, Rounding::Down),
        ];
        let cands_hi = [
            quot(&self.lo, &other.lo, Rounding::Up),
            quot(&self.lo, &other.hi, Rounding::Up),
            quot(&self.hi, &other.lo, Rounding::Up),
            quot(&self.hi, &other.hi, Rounding::Up),
        ];
        Interval {
            lo: cands_lo.iter().min().unwrap().clone(),
            hi: cands_hi.iter().max().unwrap().clone(),
        }
    }

    /// Square root; negative parts of the interval are clamped to zero.
    ///
    /// Panics if the whole interval is negative.
    pub fn sqrt(&self, prec: u32) -> Self {
        assert!(!self.hi.is_negative(), "square root of a negative interval");
        let lo = if self.lo.is_negative() {
            Dyadic::zero()
        } else {
            self.lo.sqrt_round(prec, Rounding::Down)
        };
        Interval { lo, hi: self.hi.sqrt_round(prec, Rounding::Up) }
    }

    /// Sum of a sequence of intervals with outward rounding after each step.
    pub fn sum<'a, I: IntoIterator<Item = &'a Interval>>(items: I, prec: u32) -> Self {
        items
            .into_iter()
            .fold(Interval::zero(), |acc, x| acc.add(x, prec))
    }

    /// `(lo, hi)` as binary64 values rounded outward.
    pub fn to_f64_bounds(&self) -> (f64, f64) {
        (self.lo.to_f64_dir(Rounding::Down), self.hi.to_f64_dir(Rounding::Up))
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (lo, hi) = self.to_f64_bounds();
        write!(f, "[{lo:e}, {hi:e}]")
    }
}
