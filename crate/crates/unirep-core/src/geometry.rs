//! Exact region geometry for exponent points on one cuspidal line.
//!
//! The singular arrangement in exponent space is cut out by the hyperplanes
//! x_i = alpha and x_i +- x_j = 1. This module names every catalogued
//! connected region of unitarizable points: the chamber regions in corank
//! three, the single region present at alpha = 1/2, and the regions induced
//! on the slanted plane x_2 - x_1 = 1 and on the level plane x_3 = alpha.
//! `emit_figure` renders a plane's arrangement deterministically, with the
//! unitarizability verdict of every line segment and every crossing.
//!
//! All coordinates are exact rationals; nothing here rounds.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::line_core::{HalfInt, LineContext};
use crate::unitarity::{self, Verdict};

/// Errors from geometric queries and figure emission.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("expected a point with {expected} coordinates, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("unsupported figure plane `{0}`; use `sla`, `lev`, or `rk2`")]
    UnsupportedPlane(String),
    #[error("unsupported figure format `{0}`; use `svg` or `ascii`")]
    UnsupportedFormat(String),
    #[error("classification failed while rendering: {0}")]
    Classify(String),
}

/// An exact rational point in exponent space, dimension two or three.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point {
    coords: Vec<Rational64>,
}

impl Point {
    /// A point with two or three coordinates.
    pub fn new(coords: Vec<Rational64>) -> Result<Self, GeometryError> {
        match coords.len() {
            2 | 3 => Ok(Point { coords }),
            n => Err(GeometryError::Dimension { expected: 3, got: n }),
        }
    }

    pub fn pair(x: Rational64, y: Rational64) -> Self {
        Point { coords: vec![x, y] }
    }

    pub fn triple(x: Rational64, y: Rational64, z: Rational64) -> Self {
        Point { coords: vec![x, y, z] }
    }

    pub fn coords(&self) -> &[Rational64] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    fn three(&self) -> Result<[Rational64; 3], GeometryError> {
        match self.coords[..] {
            [a, b, c] => Ok([a, b, c]),
            _ => Err(GeometryError::Dimension {
                expected: 3,
                got: self.coords.len(),
            }),
        }
    }

    fn two(&self) -> Result<[Rational64; 2], GeometryError> {
        match self.coords[..] {
            [a, b] => Ok([a, b]),
            _ => Err(GeometryError::Dimension {
                expected: 2,
                got: self.coords.len(),
            }),
        }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Names for the catalogued connected regions of unitarizable points.
///
/// `Ca`..`Cd` and `X312` live in the open positive chamber of corank three;
/// `Sla*` tags live on the slanted plane x_2 - x_1 = 1 in the coordinates
/// (x, y) = (x_1 + 1/2, x_3); `Lev*` tags live on the level plane
/// x_3 = alpha in the coordinates (x_1, x_2). `SlaPrime` indices refine the
/// `Sla2*` regions once the finer slanted arrangement is cut in.
/// `NonUnitary` and `Singular` are reserved for reporting points that no
/// region covers; the region queries never return them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RegionId {
    Ca,
    Cb,
    Cc,
    Cd,
    X312,
    Sla21,
    Sla22,
    Sla23,
    SlaPrime(u8),
    Lev(u8),
    NonUnitary,
    Singular,
}

impl RegionId {
    /// Every tag in a fixed order, for exhaustive sweeps.
    pub fn all() -> Vec<RegionId> {
        let mut out = vec![
            RegionId::Ca,
            RegionId::Cb,
            RegionId::Cc,
            RegionId::Cd,
            RegionId::X312,
            RegionId::Sla21,
            RegionId::Sla22,
            RegionId::Sla23,
        ];
        out.extend((1..=8).map(RegionId::SlaPrime));
        out.extend((1..=5).map(RegionId::Lev));
        out.push(RegionId::NonUnitary);
        out.push(RegionId::Singular);
        out
    }

    /// The condition on alpha under which the region is nonempty.
    pub fn alpha_guard(self) -> &'static str {
        match self {
            RegionId::Ca | RegionId::Cc | RegionId::Sla21 => "alpha >= 1",
            RegionId::Cb => "alpha > 1",
            RegionId::Cd | RegionId::Sla23 => "alpha > 2",
            RegionId::X312 => "alpha = 1/2",
            RegionId::Sla22 => "alpha >= 2",
            RegionId::SlaPrime(i) => match i {
                1 | 3 | 5 => "alpha >= 1",
                2 | 4 => "alpha > 1",
                6 => "alpha >= 2",
                _ => "alpha > 2",
            },
            RegionId::Lev(i) => match i {
                1 => "alpha > 2",
                2 => "alpha > 1",
                3 => "alpha = 1",
                4 => "alpha = 1/2",
                _ => "alpha = 0",
            },
            RegionId::NonUnitary | RegionId::Singular => "any alpha",
        }
    }

    /// Whether the guard of this tag holds at the given context.
    pub fn guard_holds(self, ctx: LineContext) -> bool {
        let a = rational_of(ctx.alpha());
        let one = Rational64::one();
        let two = one + one;
        let half = Rational64::new(1, 2);
        match self {
            RegionId::Ca | RegionId::Cc | RegionId::Sla21 => a >= one,
            RegionId::Cb => a > one,
            RegionId::Cd | RegionId::Sla23 => a > two,
            RegionId::X312 => a == half,
            RegionId::Sla22 => a >= two,
            RegionId::SlaPrime(i) => match i {
                1 | 3 | 5 => a >= one,
                2 | 4 => a > one,
                6 => a >= two,
                _ => a > two,
            },
            RegionId::Lev(i) => match i {
                1 => a > two,
                2 => a > one,
                3 => a == one,
                4 => a == half,
                _ => a.is_zero(),
            },
            RegionId::NonUnitary | RegionId::Singular => true,
        }
    }
}

impl fmt::Display for RegionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RegionId::Ca => write!(f, "C_a"),
            RegionId::Cb => write!(f, "C_b"),
            RegionId::Cc => write!(f, "C_c"),
            RegionId::Cd => write!(f, "C_d"),
            RegionId::X312 => write!(f, "X312"),
            RegionId::Sla21 => write!(f, "Sla21"),
            RegionId::Sla22 => write!(f, "Sla22"),
            RegionId::Sla23 => write!(f, "Sla23"),
            RegionId::SlaPrime(i) => write!(f, "SlaPrime{i}"),
            RegionId::Lev(i) => write!(f, "Lev{i}"),
            RegionId::NonUnitary => write!(f, "NonUnitary"),
            RegionId::Singular => write!(f, "Singular"),
        }
    }
}

/// The exact rational value of a half-integer.
pub fn rational_of(x: HalfInt) -> Rational64 {
    Rational64::new(x.doubled(), 2)
}

/// The half-integer with the given rational value, when there is one.
pub fn halfint_of(r: Rational64) -> Option<HalfInt> {
    let twice = r * Rational64::from_integer(2);
    if twice.is_integer() {
        Some(HalfInt::from_doubled(twice.to_integer()))
    } else {
        None
    }
}

fn canon3(p: &Point) -> Result<[Rational64; 3], GeometryError> {
    let [a, b, c] = p.three()?;
    let mut v = [a.abs(), b.abs(), c.abs()];
    v.sort();
    Ok(v)
}

fn canon2(p: &Point) -> Result<[Rational64; 2], GeometryError> {
    let [a, b] = p.two()?;
    let mut v = [a.abs(), b.abs()];
    v.sort();
    Ok(v)
}

/// Whether a corank-three point avoids every singular hyperplane
/// x_i = +-alpha, x_i +- x_j = +-1.
pub fn is_regular(ctx: LineContext, p: &Point) -> Result<bool, GeometryError> {
    let a = rational_of(ctx.alpha());
    let one = Rational64::one();
    let x = p.three()?;
    for i in 0..3 {
        if x[i].abs() == a {
            return Ok(false);
        }
        for j in (i + 1)..3 {
            if (x[i] - x[j]).abs() == one || (x[i] + x[j]).abs() == one {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The chamber regions containing a corank-three point, open by default,
/// closures when `closed` is set.
///
/// The point is first moved to the canonical chamber 0 <= x_1 <= x_2 <= x_3
/// by signs and sorting, so membership is invariant under signed
/// permutations of the coordinates.
pub fn region_of_3d(
    ctx: LineContext,
    p: &Point,
    closed: bool,
) -> Result<BTreeSet<RegionId>, GeometryError> {
    let a = rational_of(ctx.alpha());
    let one = Rational64::one();
    let two = one + one;
    let half = Rational64::new(1, 2);
    let [x1, x2, x3] = canon3(p)?;
    let below = |u: Rational64, v: Rational64| if closed { u <= v } else { u < v };
    let mut out = BTreeSet::new();
    if a >= one {
        if below(x2 + x3, one) {
            out.insert(RegionId::Ca);
        }
        if a > one && below(x1 + x2, one) && below(one, x3 - x2) && below(x3, a) {
            out.insert(RegionId::Cb);
        }
        if below(x1 + x2, one) && below(one, x1 + x3) && below(x3 - x1, one) && below(x3, a) {
            out.insert(RegionId::Cc);
        }
        if a > two && below(one, x2 - x1) && below(one, x3 - x2) && below(x3, a) {
            out.insert(RegionId::Cd);
        }
    } else if a == half && below(x3, half) {
        out.insert(RegionId::X312);
    }
    Ok(out)
}

/// The regions on the slanted plane x_2 - x_1 = 1 containing the plane point
/// q = (x, y), where the plane is charted by (x, y) |-> (x - 1/2, x + 1/2, y).
///
/// With `very_regular` unset the three coarse regions are tested; set, the
/// eight refined regions of the finer slanted arrangement. Membership is
/// invariant under the sign changes (x, y) -> (+-x, +-y). Below alpha = 1
/// the slanted plane carries no unitarizable region and the result is empty.
pub fn region_of_slanted(
    ctx: LineContext,
    q: &Point,
    very_regular: bool,
) -> Result<BTreeSet<RegionId>, GeometryError> {
    let a = rational_of(ctx.alpha());
    let one = Rational64::one();
    let two = one + one;
    let half = Rational64::new(1, 2);
    let three_half = Rational64::new(3, 2);
    let [qx, qy] = q.two()?;
    let (x, y) = (qx.abs(), qy.abs());
    let mut out = BTreeSet::new();
    if a < one {
        return Ok(out);
    }
    if !very_regular {
        if x + y < three_half && x < a - half && y < a {
            out.insert(RegionId::Sla21);
        }
        if a >= two && y - x > three_half && y < a {
            out.insert(RegionId::Sla22);
        }
        if a > two && x - y > three_half && x <= a - half {
            out.insert(RegionId::Sla23);
        }
    } else {
        if x + y < half {
            out.insert(RegionId::SlaPrime(1));
        }
        if a > one && x + y < three_half && x - y > half && x < a - half {
            out.insert(RegionId::SlaPrime(2));
        }
        if half < x + y && x + y < three_half && y - x < half && x < half {
            out.insert(RegionId::SlaPrime(3));
        }
        if a > one && half < x + y && x + y < three_half && x - y < half && half < x && x < a - half
        {
            out.insert(RegionId::SlaPrime(4));
        }
        if x + y < three_half && y - x > half && y < a {
            out.insert(RegionId::SlaPrime(5));
        }
        if a >= two && y - x > three_half && y < a && x < half {
            out.insert(RegionId::SlaPrime(6));
        }
        if a > two && y - x > three_half && y < a && x > half {
            out.insert(RegionId::SlaPrime(7));
        }
        if a > two && x - y > three_half && x < a - half {
            out.insert(RegionId::SlaPrime(8));
        }
    }
    Ok(out)
}

/// The regions on the level plane x_3 = alpha containing the plane point
/// q = (x_1, x_2). Membership is invariant under signed permutations of the
/// two coordinates.
pub fn region_of_level(
    ctx: LineContext,
    q: &Point,
) -> Result<BTreeSet<RegionId>, GeometryError> {
    let a = rational_of(ctx.alpha());
    let one = Rational64::one();
    let two = one + one;
    let half = Rational64::new(1, 2);
    let [x, y] = canon2(q)?;
    let mut out = BTreeSet::new();
    if a > two && y - x > one && y < a - one {
        out.insert(RegionId::Lev(1));
    }
    if a > one && x + y < one && y < a - one {
        out.insert(RegionId::Lev(2));
    }
    if a == one && x + y < one {
        out.insert(RegionId::Lev(3));
    }
    if a == half && y < half {
        out.insert(RegionId::Lev(4));
    }
    if a.is_zero() && x + y < one {
        out.insert(RegionId::Lev(5));
    }
    Ok(out)
}

/// Whether a corank-three point lies in the closure of the catalogued
/// unitary locus: the closed chamber regions for alpha >= 1/2, or the face
/// x_1 = 0, x_2 + x_3 <= 1 at alpha = 0.
pub fn in_unitary_closure_3d(ctx: LineContext, p: &Point) -> Result<bool, GeometryError> {
    let a = rational_of(ctx.alpha());
    if a.is_zero() {
        let [x1, x2, x3] = canon3(p)?;
        return Ok(x1.is_zero() && x2 + x3 <= Rational64::one());
    }
    Ok(!region_of_3d(ctx, p, true)?.is_empty())
}

/// Whether a corank-two point lies in the closure of the catalogued unitary
/// locus: the band x_1 + 1 <= x_2 <= alpha (alpha > 1), the triangle
/// x_1 + x_2 <= 1 (alpha != 1/2), or the strip x_2 <= 1/2 (alpha = 1/2).
pub fn in_unitary_closure_rk2(ctx: LineContext, p: &Point) -> Result<bool, GeometryError> {
    let a = rational_of(ctx.alpha());
    let one = Rational64::one();
    let half = Rational64::new(1, 2);
    let [x1, x2] = canon2(p)?;
    if a > one && x1 + one <= x2 && x2 <= a {
        return Ok(true);
    }
    if a != half && x1 + x2 <= one {
        return Ok(true);
    }
    Ok(a == half && x2 <= half)
}

/// Whether a slanted-plane point avoids the lines excluded from the coarse
/// slanted arrangement: |x +- y| = 3/2, |y| = alpha, |x| = |alpha -+ 1/2|.
pub(crate) fn sla_point_regular(ctx: LineContext, x: Rational64, y: Rational64) -> bool {
    let a = rational_of(ctx.alpha());
    let half = Rational64::new(1, 2);
    let three_half = Rational64::new(3, 2);
    (x + y).abs() != three_half
        && (x - y).abs() != three_half
        && y.abs() != a
        && x.abs() != (a - half).abs()
        && x.abs() != a + half
}

/// Whether a level-plane point avoids the lines excluded from the level
/// arrangement: |x_1 +- x_2| = 1, |x_i| = alpha + 1, |x_i| = |alpha - 1|.
pub(crate) fn lev_point_regular(ctx: LineContext, x: Rational64, y: Rational64) -> bool {
    let a = rational_of(ctx.alpha());
    let one = Rational64::one();
    if (x + y).abs() == one || (x - y).abs() == one {
        return false;
    }
    for c in [x, y] {
        if c.abs() == a + one || c.abs() == (a - one).abs() {
            return false;
        }
    }
    true
}

/// The plane a figure is drawn on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FigurePlane {
    /// The slanted plane x_2 - x_1 = 1, charted by (x, y) = (x_1 + 1/2, x_3).
    Sla,
    /// The level plane x_3 = alpha, charted by (x_1, x_2).
    Lev,
    /// The corank-two exponent plane (x_1, x_2).
    Rk2,
}

impl fmt::Display for FigurePlane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FigurePlane::Sla => write!(f, "sla"),
            FigurePlane::Lev => write!(f, "lev"),
            FigurePlane::Rk2 => write!(f, "rk2"),
        }
    }
}

impl FromStr for FigurePlane {
    type Err = GeometryError;
    fn from_str(s: &str) -> Result<Self, GeometryError> {
        match s {
            "sla" => Ok(FigurePlane::Sla),
            "lev" => Ok(FigurePlane::Lev),
            "rk2" => Ok(FigurePlane::Rk2),
            other => Err(GeometryError::UnsupportedPlane(other.to_string())),
        }
    }
}

/// The output format of a figure.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FigureFormat {
    Svg,
    Ascii,
}

impl fmt::Display for FigureFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FigureFormat::Svg => write!(f, "svg"),
            FigureFormat::Ascii => write!(f, "ascii"),
        }
    }
}

impl FromStr for FigureFormat {
    type Err = GeometryError;
    fn from_str(s: &str) -> Result<Self, GeometryError> {
        match s {
            "svg" => Ok(FigureFormat::Svg),
            "ascii" => Ok(FigureFormat::Ascii),
            other => Err(GeometryError::UnsupportedFormat(other.to_string())),
        }
    }
}

/// Line orientations occurring in the arrangements: x = c, y = c,
/// x + y = c, x - y = c.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Orient {
    V,
    H,
    Sum,
    Diff,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
struct Ln {
    o: Orient,
    c: Rational64,
}

impl Ln {
    fn contains(&self, x: Rational64, y: Rational64) -> bool {
        match self.o {
            Orient::V => x == self.c,
            Orient::H => y == self.c,
            Orient::Sum => x + y == self.c,
            Orient::Diff => x - y == self.c,
        }
    }

    /// The coordinate used to order points along the line.
    fn param(&self, x: Rational64, y: Rational64) -> Rational64 {
        match self.o {
            Orient::V => y,
            _ => x,
        }
    }

    fn at(&self, t: Rational64) -> (Rational64, Rational64) {
        match self.o {
            Orient::V => (self.c, t),
            Orient::H => (t, self.c),
            Orient::Sum => (t, self.c - t),
            Orient::Diff => (t, t - self.c),
        }
    }

    /// The parameter interval where the line meets [0, l]^2, if any.
    fn clip(&self, l: Rational64) -> Option<(Rational64, Rational64)> {
        let zero = Rational64::zero();
        let (lo, hi) = match self.o {
            Orient::V | Orient::H => {
                if self.c < zero || self.c > l {
                    return None;
                }
                (zero, l)
            }
            Orient::Sum => ((self.c - l).max(zero), self.c.min(l)),
            Orient::Diff => (self.c.max(zero), (l + self.c).min(l)),
        };
        if lo < hi {
            Some((lo, hi))
        } else {
            None
        }
    }

    fn meet(&self, other: &Ln) -> Option<(Rational64, Rational64)> {
        let (p, q) = if self.o <= other.o {
            (self, other)
        } else {
            (other, self)
        };
        let two = Rational64::from_integer(2);
        match (p.o, q.o) {
            (Orient::V, Orient::H) => Some((p.c, q.c)),
            (Orient::V, Orient::Sum) => Some((p.c, q.c - p.c)),
            (Orient::V, Orient::Diff) => Some((p.c, p.c - q.c)),
            (Orient::H, Orient::Sum) => Some((q.c - p.c, p.c)),
            (Orient::H, Orient::Diff) => Some((q.c + p.c, p.c)),
            (Orient::Sum, Orient::Diff) => Some(((p.c + q.c) / two, (p.c - q.c) / two)),
            _ => None,
        }
    }
}

/// How a singular line segment is drawn, from the verdict at its midpoint.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum SegStyle {
    /// Every subquotient along the segment is unitarizable.
    Thick,
    /// Some are.
    Thin,
    /// None are.
    Dashed,
    /// The classifier could not certify the segment.
    Undetermined,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum VertColor {
    Black,
    Gray,
    White,
}

struct Figure {
    plane: FigurePlane,
    side: Rational64,
    /// Per line: the line, its sorted breakpoints, and one style per piece.
    lines: Vec<(Ln, Vec<Rational64>, Vec<SegStyle>)>,
    vertices: Vec<((Rational64, Rational64), VertColor)>,
}

fn plane_lines(ctx: LineContext, plane: FigurePlane) -> Vec<Ln> {
    let a = rational_of(ctx.alpha());
    let one = Rational64::one();
    let half = Rational64::new(1, 2);
    let three_half = Rational64::new(3, 2);
    let side = a + Rational64::from_integer(2);
    let raw = match plane {
        FigurePlane::Rk2 => vec![
            Ln { o: Orient::V, c: a },
            Ln { o: Orient::H, c: a },
            Ln { o: Orient::Sum, c: one },
            Ln { o: Orient::Diff, c: one },
            Ln { o: Orient::Diff, c: -one },
        ],
        FigurePlane::Sla => vec![
            Ln { o: Orient::Sum, c: three_half },
            Ln { o: Orient::Sum, c: half },
            Ln { o: Orient::Diff, c: three_half },
            Ln { o: Orient::Diff, c: -three_half },
            Ln { o: Orient::Diff, c: half },
            Ln { o: Orient::Diff, c: -half },
            Ln { o: Orient::H, c: a },
            Ln { o: Orient::V, c: (a - half).abs() },
            Ln { o: Orient::V, c: a + half },
            Ln { o: Orient::V, c: half },
        ],
        FigurePlane::Lev => vec![
            Ln { o: Orient::Sum, c: one },
            Ln { o: Orient::Diff, c: one },
            Ln { o: Orient::Diff, c: -one },
            Ln { o: Orient::V, c: (a - one).abs() },
            Ln { o: Orient::V, c: a + one },
            Ln { o: Orient::V, c: a },
            Ln { o: Orient::H, c: (a - one).abs() },
            Ln { o: Orient::H, c: a + one },
            Ln { o: Orient::H, c: a },
        ],
    };
    let mut lines: Vec<Ln> = raw
        .into_iter()
        .filter(|ln| ln.clip(side).is_some())
        .collect();
    lines.sort();
    lines.dedup();
    lines
}

fn verdict_at(
    ctx: LineContext,
    plane: FigurePlane,
    x: Rational64,
    y: Rational64,
) -> Result<Verdict, GeometryError> {
    let half = Rational64::new(1, 2);
    let a = rational_of(ctx.alpha());
    let res = match plane {
        FigurePlane::Rk2 => unitarity::classify_corank2(ctx, [x, y]),
        FigurePlane::Sla => unitarity::classify_corank3(ctx, [x - half, x + half, y]),
        FigurePlane::Lev => unitarity::classify_corank3(ctx, [x, y, a]),
    };
    res.map_err(|e| GeometryError::Classify(e.to_string()))
}

fn shaded_at(
    ctx: LineContext,
    plane: FigurePlane,
    x: Rational64,
    y: Rational64,
) -> Result<bool, GeometryError> {
    match plane {
        FigurePlane::Rk2 => in_unitary_closure_rk2(ctx, &Point::pair(x, y)),
        FigurePlane::Sla => Ok(!region_of_slanted(ctx, &Point::pair(x, y), false)?.is_empty()),
        FigurePlane::Lev => Ok(!region_of_level(ctx, &Point::pair(x, y))?.is_empty()),
    }
}

fn seg_style(v: &Verdict) -> SegStyle {
    if v.unknown {
        SegStyle::Undetermined
    } else if v.strongly_unitary {
        SegStyle::Thick
    } else if v.any_unitarizable() {
        SegStyle::Thin
    } else {
        SegStyle::Dashed
    }
}

fn vert_color(v: &Verdict) -> VertColor {
    if v.strongly_unitary {
        VertColor::Black
    } else if v.unknown || v.any_unitarizable() {
        VertColor::Gray
    } else {
        VertColor::White
    }
}

fn build_figure(ctx: LineContext, plane: FigurePlane) -> Result<Figure, GeometryError> {
    let side = rational_of(ctx.alpha()) + Rational64::from_integer(2);
    let zero = Rational64::zero();
    let two = Rational64::from_integer(2);
    let lines = plane_lines(ctx, plane);

    let mut crossings: BTreeSet<(Rational64, Rational64)> = BTreeSet::new();
    for (i, p) in lines.iter().enumerate() {
        for q in lines.iter().skip(i + 1) {
            if let Some((x, y)) = p.meet(q) {
                if x >= zero && x <= side && y >= zero && y <= side {
                    crossings.insert((x, y));
                }
            }
        }
    }

    let mut styled = Vec::with_capacity(lines.len());
    for ln in &lines {
        let (t0, t1) = ln.clip(side).expect("plane_lines keeps only visible lines");
        let mut breaks: Vec<Rational64> = vec![t0, t1];
        for &(x, y) in &crossings {
            if ln.contains(x, y) {
                let t = ln.param(x, y);
                if t > t0 && t < t1 {
                    breaks.push(t);
                }
            }
        }
        breaks.sort();
        breaks.dedup();
        let mut styles = Vec::with_capacity(breaks.len() - 1);
        for w in breaks.windows(2) {
            let (x, y) = ln.at((w[0] + w[1]) / two);
            styles.push(seg_style(&verdict_at(ctx, plane, x, y)?));
        }
        styled.push((*ln, breaks, styles));
    }

    let mut vertices = Vec::with_capacity(crossings.len());
    for (x, y) in crossings {
        let color = vert_color(&verdict_at(ctx, plane, x, y)?);
        vertices.push(((x, y), color));
    }

    Ok(Figure {
        plane,
        side,
        lines: styled,
        vertices,
    })
}

fn style_on_line(breaks: &[Rational64], styles: &[SegStyle], t: Rational64) -> SegStyle {
    if styles.is_empty() {
        return SegStyle::Dashed;
    }
    let idx = match breaks.binary_search(&t) {
        Ok(0) | Err(0) => 0,
        Ok(i) | Err(i) => (i - 1).min(styles.len() - 1),
    };
    styles[idx]
}

fn rat_f64(r: Rational64) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

const SVG_SCALE: f64 = 48.0;
const SVG_MARGIN: f64 = 40.0;

fn render_svg(ctx: LineContext, fig: &Figure) -> Result<String, GeometryError> {
    let side_px = rat_f64(fig.side) * SVG_SCALE;
    let width = 2.0 * SVG_MARGIN + side_px;
    let height = 2.0 * SVG_MARGIN + side_px + 72.0;
    let px = |x: Rational64| SVG_MARGIN + rat_f64(x) * SVG_SCALE;
    let py = |y: Rational64| SVG_MARGIN + (rat_f64(fig.side) - rat_f64(y)) * SVG_SCALE;

    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width:.2}\" height=\"{height:.2}\" \
         viewBox=\"0 0 {width:.2} {height:.2}\">\n"
    ));
    out.push_str(&format!(
        "<title>unitarizability regions: plane={} alpha={}</title>\n",
        fig.plane,
        ctx.alpha()
    ));
    out.push_str(&format!(
        "<rect x=\"0\" y=\"0\" width=\"{width:.2}\" height=\"{height:.2}\" fill=\"#ffffff\"/>\n"
    ));

    // Shaded quarter-cells, sampled at their centers.
    let cells = (fig.side * Rational64::from_integer(4)).to_integer();
    let cell_px = SVG_SCALE / 4.0;
    for j in 0..cells {
        for i in 0..cells {
            let cx = Rational64::new(2 * i + 1, 8);
            let cy = Rational64::new(2 * j + 1, 8);
            if shaded_at(ctx, fig.plane, cx, cy)? {
                let x0 = SVG_MARGIN + (i as f64) * cell_px;
                let y0 = SVG_MARGIN + side_px - ((j + 1) as f64) * cell_px;
                out.push_str(&format!(
                    "<rect x=\"{x0:.2}\" y=\"{y0:.2}\" width=\"{cell_px:.2}\" \
                     height=\"{cell_px:.2}\" fill=\"#9db8d2\" fill-opacity=\"0.50\"/>\n"
                ));
            }
        }
    }

    out.push_str(&format!(
        "<rect x=\"{m:.2}\" y=\"{m:.2}\" width=\"{side_px:.2}\" height=\"{side_px:.2}\" \
         fill=\"none\" stroke=\"#666666\" stroke-width=\"1\" stroke-dasharray=\"2 4\"/>\n",
        m = SVG_MARGIN
    ));
    if matches!(fig.plane, FigurePlane::Rk2 | FigurePlane::Lev) {
        // Dotted symmetry diagonal x = y.
        out.push_str(&format!(
            "<line x1=\"{x0:.2}\" y1=\"{y0:.2}\" x2=\"{x1:.2}\" y2=\"{y1:.2}\" \
             stroke=\"#999999\" stroke-width=\"0.8\" stroke-dasharray=\"1 4\"/>\n",
            x0 = px(Rational64::zero()),
            y0 = py(Rational64::zero()),
            x1 = px(fig.side),
            y1 = py(fig.side),
        ));
    }

    for (ln, breaks, styles) in &fig.lines {
        for (k, w) in breaks.windows(2).enumerate() {
            let (x0, y0) = ln.at(w[0]);
            let (x1, y1) = ln.at(w[1]);
            let attrs = match styles[k] {
                SegStyle::Thick => "stroke=\"#1a7f37\" stroke-width=\"3.5\"",
                SegStyle::Thin => "stroke=\"#333333\" stroke-width=\"1.4\"",
                SegStyle::Dashed => {
                    "stroke=\"#555555\" stroke-width=\"1.1\" stroke-dasharray=\"6 4\""
                }
                SegStyle::Undetermined => {
                    "stroke=\"#aa6600\" stroke-width=\"1.1\" stroke-dasharray=\"2 3\""
                }
            };
            out.push_str(&format!(
                "<line x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\" {attrs}/>\n",
                px(x0),
                py(y0),
                px(x1),
                py(y1)
            ));
        }
    }

    for ((x, y), color) in &fig.vertices {
        let fill = match color {
            VertColor::Black => "#000000",
            VertColor::Gray => "#b0b0b0",
            VertColor::White => "#ffffff",
        };
        out.push_str(&format!(
            "<circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"4.5\" fill=\"{fill}\" \
             stroke=\"#000000\" stroke-width=\"1\"/>\n",
            px(*x),
            py(*y)
        ));
    }

    let text_y = 2.0 * SVG_MARGIN + side_px - 14.0;
    let lines = [
        format!(
            "plane={} alpha={} viewport=[0,{}]^2",
            fig.plane,
            ctx.alpha(),
            fig.side
        ),
        "shading: every subquotient unitarizable".to_string(),
        "lines: thick = all unitarizable, solid = some, dashed = none".to_string(),
        "balls: black = all, gray = some, white = none".to_string(),
    ];
    for (k, line) in lines.iter().enumerate() {
        out.push_str(&format!(
            "<text x=\"{m:.2}\" y=\"{y:.2}\" font-family=\"monospace\" font-size=\"12\" \
             fill=\"#222222\">{line}</text>\n",
            m = SVG_MARGIN,
            y = text_y + 16.0 * (k as f64 + 1.0)
        ));
    }
    out.push_str("</svg>\n");
    Ok(out)
}

fn render_ascii(ctx: LineContext, fig: &Figure) -> Result<String, GeometryError> {
    let steps = (fig.side * Rational64::from_integer(4)).to_integer();
    let verts: BTreeMap<(Rational64, Rational64), VertColor> =
        fig.vertices.iter().cloned().collect();

    let mut out = String::new();
    out.push_str(&format!(
        "figure plane={} alpha={} viewport=[0,{}]^2 step=1/4\n",
        fig.plane,
        ctx.alpha(),
        fig.side
    ));
    out.push_str("region: '#' every subquotient unitarizable, '.' none\n");
    out.push_str("line:   '=' all unitarizable, '~' some, '-' '|' '/' '\\' none, '?' undetermined\n");
    out.push_str("ball:   '@' all unitarizable, '%' some, 'o' none\n");

    for j in (0..=steps).rev() {
        let y = Rational64::new(j, 4);
        let mut row = String::with_capacity(steps as usize + 1);
        for i in 0..=steps {
            let x = Rational64::new(i, 4);
            let ch = if let Some(color) = verts.get(&(x, y)) {
                match color {
                    VertColor::Black => '@',
                    VertColor::Gray => '%',
                    VertColor::White => 'o',
                }
            } else if let Some((ln, breaks, styles)) =
                fig.lines.iter().find(|(ln, _, _)| ln.contains(x, y))
            {
                match style_on_line(breaks, styles, ln.param(x, y)) {
                    SegStyle::Thick => '=',
                    SegStyle::Thin => '~',
                    SegStyle::Undetermined => '?',
                    SegStyle::Dashed => match ln.o {
                        Orient::V => '|',
                        Orient::H => '-',
                        Orient::Sum => '\\',
                        Orient::Diff => '/',
                    },
                }
            } else if shaded_at(ctx, fig.plane, x, y)? {
                '#'
            } else {
                '.'
            };
            row.push(ch);
        }
        out.push_str(&row);
        out.push('\n');
    }
    Ok(out)
}

/// Renders the singular arrangement of a plane over the viewport
/// [0, alpha + 2]^2 as a deterministic figure.
///
/// Line segments between crossings are styled by the unitarizability of the
/// subquotients carried there, crossings are colored balls styled the same
/// way, and the catalogued unitary regions are shaded. Identical inputs
/// produce byte-identical output.
pub fn emit_figure(
    ctx: LineContext,
    plane: FigurePlane,
    format: FigureFormat,
) -> Result<String, GeometryError> {
    let fig = build_figure(ctx, plane)?;
    match format {
        FigureFormat::Svg => render_svg(ctx, &fig),
        FigureFormat::Ascii => render_ascii(ctx, &fig),
    }
}
