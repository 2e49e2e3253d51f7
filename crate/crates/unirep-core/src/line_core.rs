//! Points, segments and multisegments on a single cuspidal line.
//!
//! A point of the line is an exact element of (1/2)Z. A segment `[b, e]` is a
//! finite arithmetic progression `b, b+1, ..., e` with integral non-negative
//! length; a multisegment is a finite multiset of segments kept in a canonical
//! order. The line context carries the reducibility point `alpha >= 0` that
//! parameterizes the whole engine.
//!
//! All types are small, immutable values. Invariants are enforced at
//! construction, so downstream arithmetic never re-validates.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Errors from constructing line-level data.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LineError {
    /// `e - b` must be a non-negative integer.
    #[error("invalid segment [{b}, {e}]: end minus begin must be a non-negative integer")]
    InvalidSegment { b: HalfInt, e: HalfInt },
    /// The reducibility point must be non-negative.
    #[error("invalid line context: alpha = {alpha} is negative")]
    NegativeAlpha { alpha: HalfInt },
    /// Text that does not parse as a half-integer or segment.
    #[error("parse error: {0}")]
    Parse(String),
}

/// An exact element of (1/2)Z, stored as its doubled value.
///
/// `HalfInt { doubled: 3 }` is 3/2; `HalfInt { doubled: -4 }` is -2.
/// Ordering and equality are inherited from the doubled integer, so they are
/// the usual order on the line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct HalfInt {
    doubled: i64,
}

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt { doubled: 0 };
    pub const HALF: HalfInt = HalfInt { doubled: 1 };
    pub const ONE: HalfInt = HalfInt { doubled: 2 };

    /// The element with the given doubled value (`from_doubled(3)` is 3/2).
    pub const fn from_doubled(doubled: i64) -> Self {
        HalfInt { doubled }
    }

    /// The integer `n` as a half-integer.
    pub const fn from_int(n: i64) -> Self {
        HalfInt { doubled: 2 * n }
    }

    /// The doubled value; exact, no rounding.
    pub const fn doubled(self) -> i64 {
        self.doubled
    }

    /// True when the value lies in Z.
    pub const fn is_integer(self) -> bool {
        self.doubled % 2 == 0
    }

    /// The integer value, when integral.
    pub fn as_integer(self) -> Option<i64> {
        self.is_integer().then_some(self.doubled / 2)
    }

    pub fn abs(self) -> Self {
        HalfInt { doubled: self.doubled.abs() }
    }

    /// True when `self - other` lies in Z, i.e. both are on one integer coset.
    pub const fn same_coset(self, other: HalfInt) -> bool {
        (self.doubled - other.doubled) % 2 == 0
    }
}

impl std::ops::Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt { doubled: self.doubled + rhs.doubled }
    }
}

impl std::ops::Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt { doubled: self.doubled - rhs.doubled }
    }
}

impl std::ops::Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt { doubled: -self.doubled }
    }
}

/// Integer offsets along the line: `x + n` is `x` shifted by `n` steps.
impl std::ops::Add<i64> for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: i64) -> HalfInt {
        HalfInt { doubled: self.doubled + 2 * rhs }
    }
}

impl std::ops::Sub<i64> for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: i64) -> HalfInt {
        HalfInt { doubled: self.doubled - 2 * rhs }
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.doubled % 2 == 0 {
            write!(f, "{}", self.doubled / 2)
        } else {
            write!(f, "{}/2", self.doubled)
        }
    }
}

/// Parses `INT` or `INT/2` (e.g. `2`, `-3/2`).
impl FromStr for HalfInt {
    type Err = LineError;
    fn from_str(s: &str) -> Result<Self, LineError> {
        let s = s.trim();
        let (num, halved) = match s.strip_suffix("/2") {
            Some(head) => (head, true),
            None => (s, false),
        };
        let n: i64 = num
            .parse()
            .map_err(|_| LineError::Parse(format!("expected INT or INT/2, got {s:?}")))?;
        Ok(if halved { HalfInt::from_doubled(n) } else { HalfInt::from_int(n) })
    }
}

/// The line context: the reducibility point `alpha >= 0` in (1/2)Z.
///
/// `eta` is 0 when `alpha` is integral and 1 otherwise, so `eta + 1` is the
/// common parity of Jordan block entries on this line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct LineContext {
    alpha: HalfInt,
}

impl LineContext {
    pub fn new(alpha: HalfInt) -> Result<Self, LineError> {
        if alpha < HalfInt::ZERO {
            return Err(LineError::NegativeAlpha { alpha });
        }
        Ok(LineContext { alpha })
    }

    pub const fn alpha(self) -> HalfInt {
        self.alpha
    }

    /// 0 when alpha is integral, 1 otherwise.
    pub const fn eta(self) -> u8 {
        if self.alpha.is_integer() {
            0
        } else {
            1
        }
    }

    /// True when `x` lies on the coset `alpha + Z` where all the critical
    /// combinatorics happens.
    pub const fn on_lattice(self, x: HalfInt) -> bool {
        x.same_coset(self.alpha)
    }
}

impl fmt::Display for LineContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "alpha={}", self.alpha)
    }
}

/// A segment `[b, e]` on the line: the points `b, b+1, ..., e`.
///
/// Always non-empty; `e - b` is a non-negative integer. The empty segment is
/// represented by `Option<Segment>` at use sites, never by a degenerate pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Segment {
    b: HalfInt,
    e: HalfInt,
}

impl Segment {
    pub fn new(b: HalfInt, e: HalfInt) -> Result<Self, LineError> {
        let diff = e.doubled() - b.doubled();
        if diff < 0 || diff % 2 != 0 {
            return Err(LineError::InvalidSegment { b, e });
        }
        Ok(Segment { b, e })
    }

    /// The one-point segment `[x]`.
    pub fn singleton(x: HalfInt) -> Self {
        Segment { b: x, e: x }
    }

    /// `[b, e]` when `e - b` is a non-negative integer, `None` otherwise.
    /// Convenient for sum limits that walk past the empty end.
    pub fn try_new(b: HalfInt, e: HalfInt) -> Option<Self> {
        Segment::new(b, e).ok()
    }

    pub const fn b(self) -> HalfInt {
        self.b
    }

    pub const fn e(self) -> HalfInt {
        self.e
    }

    /// Number of points (at least 1).
    pub fn len(self) -> i64 {
        (self.e.doubled() - self.b.doubled()) / 2 + 1
    }

    /// The points `b, b+1, ..., e` in increasing order.
    pub fn support(self) -> Vec<HalfInt> {
        (0..self.len()).map(|k| self.b + k).collect()
    }

    pub fn contains(self, x: HalfInt) -> bool {
        self.b <= x && x <= self.e && self.b.same_coset(x)
    }

    /// Central exponent `(b + e) / 2`.
    pub fn exponent(self) -> HalfInt {
        let sum = self.b.doubled() + self.e.doubled();
        debug_assert!(sum % 2 == 0, "segment invariant guarantees even doubled sum");
        HalfInt::from_doubled(sum / 2)
    }

    /// The contragredient segment `[-e, -b]`.
    pub fn contragredient(self) -> Segment {
        Segment { b: -self.e, e: -self.b }
    }

    /// Shift every point by `t`.
    pub fn shift(self, t: HalfInt) -> Segment {
        Segment { b: self.b + t, e: self.e + t }
    }

    /// True when the union is a segment distinct from both operands.
    pub fn is_linked(self, other: Segment) -> bool {
        if !self.b.same_coset(other.b) {
            return false;
        }
        let lo = self.b.max(other.b);
        let hi = self.e.min(other.e);
        // Union is a segment iff the two ranges overlap or are adjacent.
        if lo.doubled() > hi.doubled() + 2 {
            return false;
        }
        let contains = |outer: Segment, inner: Segment| outer.b <= inner.b && inner.e <= outer.e;
        !(contains(self, other) || contains(other, self))
    }

    /// Linked with strictly smaller begin: `self` precedes `other`.
    pub fn precedes(self, other: Segment) -> bool {
        self.is_linked(other) && self.b < other.b
    }

    /// `[min(b), max(e)]` when linked or nested; `None` when the union is not
    /// a segment.
    pub fn union_with(self, other: Segment) -> Option<Segment> {
        if !self.b.same_coset(other.b) {
            return None;
        }
        let lo = self.b.max(other.b);
        let hi = self.e.min(other.e);
        if lo.doubled() > hi.doubled() + 2 {
            return None;
        }
        Some(Segment { b: self.b.min(other.b), e: self.e.max(other.e) })
    }

    /// The common part, `None` when disjoint.
    pub fn intersection(self, other: Segment) -> Option<Segment> {
        if !self.b.same_coset(other.b) {
            return None;
        }
        let lo = self.b.max(other.b);
        let hi = self.e.min(other.e);
        Segment::try_new(lo, hi)
    }
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b == self.e {
            write!(f, "[{}]", self.b)
        } else {
            write!(f, "[{},{}]", self.b, self.e)
        }
    }
}

/// Parses `[h]` or `[h1,h2]`.
impl FromStr for Segment {
    type Err = LineError;
    fn from_str(s: &str) -> Result<Self, LineError> {
        let s = s.trim();
        let inner = s
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| LineError::Parse(format!("expected [..], got {s:?}")))?;
        let parts: Vec<&str> = inner.split(',').collect();
        match parts.as_slice() {
            [one] => Ok(Segment::singleton(one.parse()?)),
            [lo, hi] => Segment::new(lo.parse()?, hi.parse()?),
            _ => Err(LineError::Parse(format!("expected one or two entries in {s:?}"))),
        }
    }
}

/// Segment ordering used for the canonical multisegment order: descending by
/// end, then descending by begin. Doubled values break coset ties exactly.
fn canonical_cmp(a: &Segment, b: &Segment) -> std::cmp::Ordering {
    b.e().cmp(&a.e()).then(b.b().cmp(&a.b()))
}

impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Segment {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        canonical_cmp(self, other)
    }
}

/// A finite multiset of segments in canonical order (descending by end, then
/// by begin). Two multisegments are equal iff they are equal as multisets.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
pub struct Multisegment {
    segs: Vec<Segment>,
}

impl Multisegment {
    pub fn new(mut segs: Vec<Segment>) -> Self {
        segs.sort_by(canonical_cmp);
        Multisegment { segs }
    }

    pub fn empty() -> Self {
        Multisegment { segs: Vec::new() }
    }

    /// The multisegment of a single segment.
    pub fn single(seg: Segment) -> Self {
        Multisegment { segs: vec![seg] }
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segs
    }

    pub fn is_empty(&self) -> bool {
        self.segs.is_empty()
    }

    /// Total number of points counted with multiplicity.
    pub fn size(&self) -> i64 {
        self.segs.iter().map(|s| s.len()).sum()
    }

    /// All points with multiplicity, sorted ascending.
    pub fn support(&self) -> Vec<HalfInt> {
        let mut pts: Vec<HalfInt> = self.segs.iter().flat_map(|s| s.support()).collect();
        pts.sort();
        pts
    }

    /// Central exponents in canonical segment order.
    pub fn exponents(&self) -> Vec<HalfInt> {
        self.segs.iter().map(|s| s.exponent()).collect()
    }

    pub fn contragredient(&self) -> Multisegment {
        Multisegment::new(self.segs.iter().map(|s| s.contragredient()).collect())
    }

    /// Multiset union.
    pub fn merged(&self, other: &Multisegment) -> Multisegment {
        let mut segs = self.segs.clone();
        segs.extend_from_slice(&other.segs);
        Multisegment::new(segs)
    }

    /// True when begins and ends both strictly decrease along the canonical
    /// order and all segments share one integer coset.
    pub fn is_ladder(&self) -> bool {
        self.segs.windows(2).all(|w| {
            w[0].b().same_coset(w[1].b()) && w[0].b() > w[1].b() && w[0].e() > w[1].e()
        })
    }
}

impl fmt::Display for Multisegment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.segs.is_empty() {
            return write!(f, "{{}}");
        }
        let parts: Vec<String> = self.segs.iter().map(|s| s.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Representative of the signed-permutation orbit of an exponent tuple:
/// absolute values sorted ascending. Idempotent.
pub fn signed_orbit_rep(xs: &[HalfInt]) -> Vec<HalfInt> {
    let mut out: Vec<HalfInt> = xs.iter().map(|x| x.abs()).collect();
    out.sort();
    out
}
