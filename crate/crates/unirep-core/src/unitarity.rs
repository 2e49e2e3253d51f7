//! Unitarizability classification for exponent points of corank up to three
//! on one cuspidal line.
//!
//! The classifier runs a fixed pipeline. Critical points defer to the
//! composition-series catalogue, which knows every constituent and its flag.
//! Regular points reduce to membership in the open chamber regions. Wall
//! points are matched against the table of one-parameter families below:
//! corner walls carry several families at once, single walls transport to
//! the slanted or level plane, and anything still uncovered falls back to
//! the closure of the unitary locus or an explicit `unknown` verdict.
//! Verdicts never extrapolate: a flag is set only when a catalogued family,
//! region, or database entry certifies it.

use std::collections::BTreeSet;
use std::fmt;

use num_rational::Rational64;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::classical_reps::{ClassicalIrr, LabelError, Sign, TemperedLabel};
use crate::composition_db::{self, DbError};
use crate::geometry::{self, Point, RegionId};
use crate::gl_ring::FormalSum;
use crate::line_core::{signed_orbit_rep, HalfInt, LineContext, LineError, Multisegment, Segment};

/// Errors from classification and family lookup.
#[derive(Debug, Error)]
pub enum UnitarityError {
    #[error("composition catalogue: {0}")]
    Db(#[from] DbError),
    #[error("label: {0}")]
    Label(#[from] LabelError),
    #[error("line: {0}")]
    Line(#[from] LineError),
    #[error("geometry: {0}")]
    Geometry(#[from] geometry::GeometryError),
    #[error("no catalogued one-parameter family has base {0}")]
    UnsupportedLabel(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

/// How a point sits relative to the singular arrangement.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PointKind {
    /// Off every singular hyperplane; the induced representation is
    /// irreducible there.
    Regular,
    /// On a singular hyperplane but not a critical tuple.
    Wall,
    /// A critical tuple, catalogued with its full composition series.
    Critical,
}

impl fmt::Display for PointKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PointKind::Regular => write!(f, "regular"),
            PointKind::Wall => write!(f, "wall"),
            PointKind::Critical => write!(f, "critical"),
        }
    }
}

/// A constituent named in a verdict: an exact catalogue label at critical
/// points, a positional description elsewhere.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConstituentRef {
    Label(ClassicalIrr),
    Anonymous(String),
}

impl fmt::Display for ConstituentRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstituentRef::Label(l) => write!(f, "{l}"),
            ConstituentRef::Anonymous(s) => write!(f, "{s}"),
        }
    }
}

/// The unitarizability verdict at one exponent point.
#[derive(Debug, Clone)]
pub struct Verdict {
    pub point_kind: PointKind,
    /// Catalogued regions containing the point: open regions at regular
    /// points, closures elsewhere, plus any slanted- or level-plane regions
    /// the point transports to.
    pub regions: BTreeSet<RegionId>,
    /// The full composition series, known exactly at critical points.
    pub constituents: Option<FormalSum<ClassicalIrr>>,
    /// One unitarizability flag per constituent at the point.
    pub per_constituent: Vec<(ConstituentRef, bool)>,
    /// Whether every subquotient at the point is unitarizable.
    pub strongly_unitary: bool,
    /// Certified non-unitarizable subquotients, filled at a family's second
    /// reducibility point.
    pub witnesses: Vec<ClassicalIrr>,
    /// Set when no catalogued family covers the point; the other fields are
    /// then conservative defaults rather than assertions.
    pub unknown: bool,
}

impl Verdict {
    /// Whether at least one constituent at the point is unitarizable.
    pub fn any_unitarizable(&self) -> bool {
        self.per_constituent.iter().any(|(_, u)| *u)
    }
}

/// The combined verdict over several cuspidal lines.
#[derive(Debug, Clone)]
pub struct MixedVerdict {
    /// One verdict per input line, in input order.
    pub lines: Vec<Verdict>,
    /// Whether every line is strongly unitary; the point as a whole is
    /// unitarizable exactly then.
    pub strongly_unitary: bool,
}

/// The moving factor of a one-parameter family, determining the ambient
/// exponent triple as a function of the parameter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MovingShape {
    /// nu^x d([-1,1]): exponents (x - 1, x, x + 1).
    TripleSeg,
    /// nu^x d([-1/2,1/2]) next to a fixed exponent: (x - 1/2, x + 1/2, c).
    PairSeg { fixed: Rational64 },
    /// A single moving exponent next to two fixed ones: (x, c_1, c_2).
    Single { fixed: [Rational64; 2] },
}

impl MovingShape {
    /// The ambient exponent triple of the family member at parameter x.
    pub fn exponents_at(&self, x: Rational64) -> [Rational64; 3] {
        let one = Rational64::one();
        let half = Rational64::new(1, 2);
        match self {
            MovingShape::TripleSeg => [x - one, x, x + one],
            MovingShape::PairSeg { fixed } => [x - half, x + half, *fixed],
            MovingShape::Single { fixed } => [x, fixed[0], fixed[1]],
        }
    }
}

/// One catalogued one-parameter family Pi_x together with its dual family:
/// base representation, reducibility points of the parameter, and the
/// certified non-unitarizable subquotient at the second point.
#[derive(Debug, Clone)]
pub struct FamilyRecord {
    pub id: u8,
    /// The representation at the bottom of the family; Pi_x is the moving
    /// factor at parameter x induced over it.
    pub base: ClassicalIrr,
    /// The base of the dual family, which shares the same points.
    pub dual_base: ClassicalIrr,
    pub moving: MovingShape,
    /// Reducibility points for x >= 0, ascending and deduplicated.
    pub points: Vec<Rational64>,
    /// The first reducibility point. Irreducible members are unitarizable
    /// exactly for x below it; the subquotients at the point itself are
    /// unitarizable as well, so the closed interval [0, first] carries only
    /// unitarizable representations.
    pub unitarizable_up_to: Rational64,
    pub second_point: Option<Rational64>,
    /// A non-unitarizable subquotient at the second point, when one is
    /// catalogued.
    pub witness: Option<ClassicalIrr>,
    pub alpha_guard: &'static str,
}

impl FamilyRecord {
    /// The ambient exponent triple of the family member at parameter x.
    pub fn exponents_at(&self, x: Rational64) -> [Rational64; 3] {
        self.moving.exponents_at(x)
    }

    /// Whether the irreducible member at parameter x (off the reducibility
    /// points) is unitarizable.
    pub fn unitarizable_at(&self, x: Rational64) -> bool {
        x.abs() < self.unitarizable_up_to
    }
}

fn rat(h: HalfInt) -> Rational64 {
    geometry::rational_of(h)
}

fn halfint_req(r: Rational64) -> Result<HalfInt, UnitarityError> {
    geometry::halfint_of(r)
        .ok_or_else(|| UnitarityError::Internal(format!("{r} is not a half-integer")))
}

fn hseg(b: HalfInt, e: HalfInt) -> Result<Segment, UnitarityError> {
    Segment::new(b, e).map_err(UnitarityError::from)
}

fn ms1(s: Segment) -> Multisegment {
    Multisegment::new(vec![s])
}

fn sorted_points(mut pts: Vec<Rational64>) -> Vec<Rational64> {
    pts.sort();
    pts.dedup();
    pts
}

fn anon(s: String) -> ConstituentRef {
    ConstituentRef::Anonymous(s)
}

fn canon3r(xs: [Rational64; 3]) -> [Rational64; 3] {
    let mut v = [xs[0].abs(), xs[1].abs(), xs[2].abs()];
    v.sort();
    v
}

fn canon2r(xs: [Rational64; 2]) -> [Rational64; 2] {
    let mut v = [xs[0].abs(), xs[1].abs()];
    v.sort();
    v
}

fn as_halfints(xs: &[Rational64]) -> Option<Vec<HalfInt>> {
    xs.iter().map(|&x| geometry::halfint_of(x)).collect()
}

fn verdict(
    kind: PointKind,
    regions: BTreeSet<RegionId>,
    constituents: Option<FormalSum<ClassicalIrr>>,
    per: Vec<(ConstituentRef, bool)>,
    witnesses: Vec<ClassicalIrr>,
) -> Verdict {
    let strongly = !per.is_empty() && per.iter().all(|(_, u)| *u);
    Verdict {
        point_kind: kind,
        regions,
        constituents,
        per_constituent: per,
        strongly_unitary: strongly,
        witnesses,
        unknown: false,
    }
}

/// The catalogued one-parameter families alive at the given context, in
/// table order. Signed pairs of families share an id and differ by base.
pub fn family_rows(ctx: LineContext) -> Result<Vec<FamilyRecord>, UnitarityError> {
    let alpha = ctx.alpha();
    let a = rat(alpha);
    let zero = Rational64::zero();
    let one = Rational64::one();
    let two = one + one;
    let half = Rational64::new(1, 2);
    let three_half = Rational64::new(3, 2);
    let h0 = HalfInt::ZERO;
    let h1 = HalfInt::ONE;
    let h2 = h1 + h1;
    let hh = HalfInt::HALF;

    let sigma = ClassicalIrr::cusp(ctx);
    let mut rows = Vec::new();

    let push = |rows: &mut Vec<FamilyRecord>,
                id: u8,
                base: ClassicalIrr,
                dual_base: ClassicalIrr,
                moving: MovingShape,
                pts: Vec<Rational64>,
                witness: Option<ClassicalIrr>,
                guard: &'static str| {
        let points = sorted_points(pts);
        let first = points[0];
        let second = points.get(1).copied();
        rows.push(FamilyRecord {
            id,
            base,
            dual_base,
            moving,
            points,
            unitarizable_up_to: first,
            second_point: second,
            witness,
            alpha_guard: guard,
        });
    };

    // Family 1: nu^x d([-1,1]) |x sigma, dual nu^x Lgl([-1],[0],[1]) |x sigma.
    {
        let pts = sorted_points(vec![(a - one).abs(), a, a + one]);
        let x0 = halfint_req(pts[1])?;
        let witness = ClassicalIrr::new(ms1(hseg(x0 - h1, x0 + h1)?), TemperedLabel::Cusp, ctx)?;
        push(
            &mut rows,
            1,
            sigma.clone(),
            sigma.clone(),
            MovingShape::TripleSeg,
            vec![(a - one).abs(), a, a + one],
            Some(witness),
            "any alpha",
        );
    }

    if a > zero {
        let gst1 = ClassicalIrr::tempered(TemperedLabel::GenSteinberg(hseg(alpha, alpha)?), ctx)?;
        let lgl1 = ClassicalIrr::new(ms1(hseg(alpha, alpha)?), TemperedLabel::Cusp, ctx)?;

        // Family 2: nu^x d([-1/2,1/2]) |x delta([alpha];sigma).
        {
            let pts = sorted_points(vec![(a - three_half).abs(), a + three_half, a + half]);
            let x0 = halfint_req(pts[1])?;
            let witness = ClassicalIrr::new(
                ms1(hseg(x0 - hh, x0 + hh)?),
                TemperedLabel::GenSteinberg(hseg(alpha, alpha)?),
                ctx,
            )?;
            push(
                &mut rows,
                2,
                gst1.clone(),
                lgl1.clone(),
                MovingShape::PairSeg { fixed: a },
                vec![(a - three_half).abs(), a + three_half, a + half],
                Some(witness),
                "alpha != 0",
            );
        }

        // Family 3: nu^x d([-1/2,1/2]) |x L([alpha];sigma).
        {
            let pts = sorted_points(vec![(a - three_half).abs(), a + three_half, (a - half).abs()]);
            let x0 = halfint_req(pts[1])?;
            let witness = ClassicalIrr::new(
                Multisegment::new(vec![hseg(x0 - hh, x0 + hh)?, hseg(alpha, alpha)?]),
                TemperedLabel::Cusp,
                ctx,
            )?;
            push(
                &mut rows,
                3,
                lgl1.clone(),
                gst1.clone(),
                MovingShape::PairSeg { fixed: a },
                vec![(a - three_half).abs(), a + three_half, (a - half).abs()],
                Some(witness),
                "alpha != 0",
            );
        }

        // Family 5: [x] |x delta([alpha,alpha+1];sigma).
        {
            let gst2 =
                ClassicalIrr::tempered(TemperedLabel::GenSteinberg(hseg(alpha, alpha + h1)?), ctx)?;
            let dual = ClassicalIrr::new(
                Multisegment::new(vec![hseg(alpha, alpha)?, hseg(alpha + h1, alpha + h1)?]),
                TemperedLabel::Cusp,
                ctx,
            )?;
            let x0 = halfint_req(a + two)?;
            let witness = ClassicalIrr::new(
                ms1(hseg(x0, x0)?),
                TemperedLabel::GenSteinberg(hseg(alpha, alpha + h1)?),
                ctx,
            )?;
            push(
                &mut rows,
                5,
                gst2,
                dual,
                MovingShape::Single { fixed: [a, a + one] },
                vec![(a - one).abs(), a + two],
                Some(witness),
                "alpha != 0",
            );
        }
    } else {
        // Families 4+-: nu^x d([-1/2,1/2]) |x delta0(+-), dual over the
        // opposite sign.
        for sign in [Sign::Plus, Sign::Minus] {
            let base = ClassicalIrr::tempered(TemperedLabel::DeltaZeroSigned(sign), ctx)?;
            let dual =
                ClassicalIrr::tempered(TemperedLabel::DeltaZeroSigned(sign.flipped()), ctx)?;
            let witness = ClassicalIrr::new(
                ms1(hseg(h1, h2)?),
                TemperedLabel::DeltaZeroSigned(sign),
                ctx,
            )?;
            push(
                &mut rows,
                4,
                base,
                dual,
                MovingShape::PairSeg { fixed: a },
                vec![half, three_half],
                Some(witness),
                "alpha = 0",
            );
        }

        // Families 6+-: [x] |x delta([0,1],+-;sigma), dual [x] |x
        // L([1];delta0(-+)).
        for sign in [Sign::Plus, Sign::Minus] {
            let base =
                ClassicalIrr::tempered(TemperedLabel::SegSigned(hseg(h0, h1)?, sign), ctx)?;
            let dual = ClassicalIrr::new(
                ms1(hseg(h1, h1)?),
                TemperedLabel::DeltaZeroSigned(sign.flipped()),
                ctx,
            )?;
            let witness = ClassicalIrr::new(
                ms1(hseg(h2, h2)?),
                TemperedLabel::SegSigned(hseg(h0, h1)?, sign),
                ctx,
            )?;
            push(
                &mut rows,
                6,
                base,
                dual,
                MovingShape::Single { fixed: [zero, one] },
                vec![one, two],
                Some(witness),
                "alpha = 0",
            );
        }

        // Family 7: [x] |x L([0,1];sigma), self-dual.
        {
            let base = ClassicalIrr::new(ms1(hseg(h0, h1)?), TemperedLabel::Cusp, ctx)?;
            let witness = ClassicalIrr::new(
                Multisegment::new(vec![hseg(h2, h2)?, hseg(h0, h1)?]),
                TemperedLabel::Cusp,
                ctx,
            )?;
            push(
                &mut rows,
                7,
                base.clone(),
                base,
                MovingShape::Single { fixed: [zero, one] },
                vec![zero, two],
                Some(witness),
                "alpha = 0",
            );
        }

        // Family 14: [x] |x tind([0];delta0(+)), dual over delta0(-).
        {
            let base = ClassicalIrr::tempered(
                TemperedLabel::TemperedInd(
                    ms1(hseg(h0, h0)?),
                    Box::new(TemperedLabel::DeltaZeroSigned(Sign::Plus)),
                ),
                ctx,
            )?;
            let dual = ClassicalIrr::tempered(
                TemperedLabel::TemperedInd(
                    ms1(hseg(h0, h0)?),
                    Box::new(TemperedLabel::DeltaZeroSigned(Sign::Minus)),
                ),
                ctx,
            )?;
            push(
                &mut rows,
                14,
                base,
                dual,
                MovingShape::Single { fixed: [zero, zero] },
                vec![one],
                None,
                "alpha = 0",
            );
        }
    }

    if a > one {
        // Family 8: [x] |x sp([alpha-1],[alpha];sigma).
        let sp = ClassicalIrr::tempered(
            TemperedLabel::StronglyPositive(vec![
                hseg(alpha - h1, alpha - h1)?,
                hseg(alpha, alpha)?,
            ]),
            ctx,
        )?;
        let sp_dual = ClassicalIrr::new(ms1(hseg(alpha - h1, alpha)?), TemperedLabel::Cusp, ctx)?;
        let x0 = halfint_req(a + one)?;
        let witness8 = ClassicalIrr::new(
            ms1(hseg(x0, x0)?),
            TemperedLabel::StronglyPositive(vec![
                hseg(alpha - h1, alpha - h1)?,
                hseg(alpha, alpha)?,
            ]),
            ctx,
        )?;
        push(
            &mut rows,
            8,
            sp,
            sp_dual,
            MovingShape::Single { fixed: [a - one, a] },
            vec![(a - two).abs(), a + one],
            Some(witness8),
            "alpha > 1",
        );

        // Family 9: [x] |x L([alpha-1];delta([alpha];sigma)).
        let base9 = ClassicalIrr::new(
            ms1(hseg(alpha - h1, alpha - h1)?),
            TemperedLabel::GenSteinberg(hseg(alpha, alpha)?),
            ctx,
        )?;
        let dual9 = ClassicalIrr::new(
            Multisegment::new(vec![hseg(alpha - h1, alpha - h1)?, hseg(alpha, alpha)?]),
            TemperedLabel::Cusp,
            ctx,
        )?;
        let witness9 = ClassicalIrr::new(
            ms1(hseg(alpha - h1, alpha)?),
            TemperedLabel::GenSteinberg(hseg(alpha, alpha)?),
            ctx,
        )?;
        push(
            &mut rows,
            9,
            base9,
            dual9,
            MovingShape::Single { fixed: [a - one, a] },
            vec![(a - two).abs(), a, a + one],
            Some(witness9),
            "alpha > 1",
        );
    } else if a == one {
        // Families 10 and 11: [x] |x tau([0],+-;delta([1];sigma)).
        let inner = TemperedLabel::GenSteinberg(hseg(h1, h1)?);
        let tau_plus = ClassicalIrr::tempered(
            TemperedLabel::TauSigned(hseg(h0, h0)?, Sign::Plus, Box::new(inner.clone())),
            ctx,
        )?;
        let tau_minus = ClassicalIrr::tempered(
            TemperedLabel::TauSigned(hseg(h0, h0)?, Sign::Minus, Box::new(inner.clone())),
            ctx,
        )?;
        let dual10 = ClassicalIrr::new(
            ms1(hseg(h1, h1)?),
            TemperedLabel::TemperedInd(ms1(hseg(h0, h0)?), Box::new(TemperedLabel::Cusp)),
            ctx,
        )?;
        let dual11 = ClassicalIrr::new(ms1(hseg(h0, h1)?), TemperedLabel::Cusp, ctx)?;
        let witness10 = ClassicalIrr::new(
            ms1(hseg(h2, h2)?),
            TemperedLabel::TauSigned(hseg(h0, h0)?, Sign::Plus, Box::new(inner.clone())),
            ctx,
        )?;
        let witness11 = ClassicalIrr::new(
            ms1(hseg(h2, h2)?),
            TemperedLabel::TauSigned(hseg(h0, h0)?, Sign::Minus, Box::new(inner)),
            ctx,
        )?;
        push(
            &mut rows,
            10,
            tau_plus,
            dual10,
            MovingShape::Single { fixed: [zero, one] },
            vec![one, two],
            Some(witness10),
            "alpha = 1",
        );
        push(
            &mut rows,
            11,
            tau_minus,
            dual11,
            MovingShape::Single { fixed: [zero, one] },
            vec![one, two],
            Some(witness11),
            "alpha = 1",
        );
    } else if a == half {
        // Families 12 and 13: [x] |x delta([-1/2,1/2],+-;sigma).
        let seg_sym = hseg(-hh, hh)?;
        let d_plus =
            ClassicalIrr::tempered(TemperedLabel::SegSigned(seg_sym, Sign::Plus), ctx)?;
        let d_minus =
            ClassicalIrr::tempered(TemperedLabel::SegSigned(seg_sym, Sign::Minus), ctx)?;
        let dual12 = ClassicalIrr::new(
            Multisegment::new(vec![hseg(hh, hh)?, hseg(hh, hh)?]),
            TemperedLabel::Cusp,
            ctx,
        )?;
        let dual13 = ClassicalIrr::new(
            ms1(hseg(hh, hh)?),
            TemperedLabel::GenSteinberg(hseg(hh, hh)?),
            ctx,
        )?;
        let witness12 = ClassicalIrr::new(
            ms1(hseg(h1 + hh, h1 + hh)?),
            TemperedLabel::SegSigned(seg_sym, Sign::Plus),
            ctx,
        )?;
        push(
            &mut rows,
            12,
            d_plus,
            dual12,
            MovingShape::Single { fixed: [half, half] },
            vec![half, three_half],
            Some(witness12),
            "alpha = 1/2",
        );
        push(
            &mut rows,
            13,
            d_minus,
            dual13,
            MovingShape::Single { fixed: [half, half] },
            vec![three_half],
            None,
            "alpha = 1/2",
        );
    }

    Ok(rows)
}

/// The family record whose base (or, failing that, dual base) matches the
/// given representation.
pub fn family_lookup(
    ctx: LineContext,
    family_base: &ClassicalIrr,
) -> Result<FamilyRecord, UnitarityError> {
    let rows = family_rows(ctx)?;
    if let Some(r) = rows.iter().find(|r| r.base == *family_base) {
        return Ok(r.clone());
    }
    rows.into_iter()
        .find(|r| r.dual_base == *family_base)
        .ok_or_else(|| UnitarityError::UnsupportedLabel(family_base.to_string()))
}

fn row_of(rows: &[FamilyRecord], id: u8) -> Result<&FamilyRecord, UnitarityError> {
    rows.iter()
        .find(|r| r.id == id)
        .ok_or_else(|| UnitarityError::Internal(format!("family {id} missing at this alpha")))
}

fn rows_of(rows: &[FamilyRecord], id: u8) -> Vec<&FamilyRecord> {
    rows.iter().filter(|r| r.id == id).collect()
}

fn second_point_witnesses(rows: &[FamilyRecord], y: [Rational64; 3]) -> Vec<ClassicalIrr> {
    let mut out = Vec::new();
    for r in rows {
        if let (Some(x0), Some(w)) = (r.second_point, r.witness.as_ref()) {
            if canon3r(r.exponents_at(x0)) == y && !out.contains(w) {
                out.push(w.clone());
            }
        }
    }
    out
}

fn critical_verdict(ctx: LineContext, hs: &[HalfInt]) -> Result<Verdict, UnitarityError> {
    let canonical = signed_orbit_rep(hs);
    let entry = composition_db::entry(ctx, &canonical)?;
    let per: Vec<(ConstituentRef, bool)> = entry
        .constituents
        .iter()
        .map(|c| (ConstituentRef::Label(c.label.clone()), c.unitary))
        .collect();
    let mut regions = BTreeSet::new();
    let mut witnesses = Vec::new();
    if canonical.len() == 3 {
        let y = canon3r([rat(canonical[0]), rat(canonical[1]), rat(canonical[2])]);
        let pt = Point::triple(y[0], y[1], y[2]);
        regions = geometry::region_of_3d(ctx, &pt, true)?;
        witnesses = second_point_witnesses(&family_rows(ctx)?, y);
    }
    Ok(verdict(
        PointKind::Critical,
        regions,
        Some(entry.series()),
        per,
        witnesses,
    ))
}

/// Classifies a corank-one exponent point.
pub fn classify_corank1(ctx: LineContext, x: Rational64) -> Result<Verdict, UnitarityError> {
    let a = rat(ctx.alpha());
    let y = x.abs();
    if y == a {
        return critical_verdict(ctx, &[ctx.alpha()]);
    }
    let flag = y < a;
    Ok(verdict(
        PointKind::Regular,
        BTreeSet::new(),
        None,
        vec![(anon(format!("[{y}] |x sigma")), flag)],
        vec![],
    ))
}

/// Classifies a corank-two exponent point, invariant under signed
/// permutations of the coordinates.
pub fn classify_corank2(
    ctx: LineContext,
    xs: [Rational64; 2],
) -> Result<Verdict, UnitarityError> {
    let a = rat(ctx.alpha());
    let one = Rational64::one();
    let zero = Rational64::zero();
    let [y1, y2] = canon2r(xs);
    if let Some(hs) = as_halfints(&[y1, y2]) {
        if composition_db::critical(ctx, &hs) {
            return critical_verdict(ctx, &hs);
        }
    }
    let strong = geometry::in_unitary_closure_rk2(ctx, &Point::pair(y1, y2))?;
    let pair_diff = y2 - y1 == one;
    let pair_sum = y1 + y2 == one;
    if pair_diff || pair_sum {
        let (b, e) = if pair_diff { (y1, y2) } else { (-y1, y2) };
        let per = vec![
            (anon(format!("d([{b},{e}]) |x sigma")), strong),
            (anon(format!("Lgl([{b}],[{e}]) |x sigma")), strong),
        ];
        return Ok(verdict(PointKind::Wall, BTreeSet::new(), None, per, vec![]));
    }
    if y1 == a || y2 == a {
        let moving = if y2 == a { y1 } else { y2 };
        let per = if a > zero {
            vec![
                (
                    anon(format!("[{moving}] |x delta([{}];sigma)", ctx.alpha())),
                    strong,
                ),
                (
                    anon(format!("[{moving}] |x L([{}];sigma)", ctx.alpha())),
                    strong,
                ),
            ]
        } else {
            vec![
                (anon(format!("[{moving}] |x delta0(+)")), strong),
                (anon(format!("[{moving}] |x delta0(-)")), strong),
            ]
        };
        return Ok(verdict(PointKind::Wall, BTreeSet::new(), None, per, vec![]));
    }
    Ok(verdict(
        PointKind::Regular,
        BTreeSet::new(),
        None,
        vec![(anon(format!("[{y1}] x [{y2}] |x sigma")), strong)],
        vec![],
    ))
}

fn rest_of(y: [Rational64; 3], i: usize) -> [Rational64; 2] {
    let mut rest: Vec<Rational64> = (0..3).filter(|&j| j != i).map(|j| y[j]).collect();
    rest.sort();
    [rest[0], rest[1]]
}

fn wall_from_per(
    ctx: LineContext,
    y: [Rational64; 3],
    per: Vec<(ConstituentRef, bool)>,
    extra_regions: BTreeSet<RegionId>,
) -> Result<Verdict, UnitarityError> {
    let pt = Point::triple(y[0], y[1], y[2]);
    let mut regions = geometry::region_of_3d(ctx, &pt, true)?;
    regions.extend(extra_regions);
    let v = verdict(PointKind::Wall, regions, None, per, vec![]);
    let closure = geometry::in_unitary_closure_3d(ctx, &pt)?;
    if v.strongly_unitary != closure {
        return Err(UnitarityError::Internal(format!(
            "wall flags disagree with the unitary closure at ({},{},{})",
            y[0], y[1], y[2]
        )));
    }
    Ok(v)
}

/// Matches the corner wall shapes: a full length-three segment, a
/// length-two segment against the level, a moving exponent against
/// [alpha] x [alpha+1], against [alpha-1] x [alpha], or against [0] x [0].
fn corner_verdict(
    ctx: LineContext,
    y: [Rational64; 3],
    rows: &[FamilyRecord],
) -> Result<Option<Verdict>, UnitarityError> {
    let a = rat(ctx.alpha());
    let zero = Rational64::zero();
    let one = Rational64::one();
    let half = Rational64::new(1, 2);

    // Moving segment nu^x d([-1,1]): exponents {|x-1|, x, x+1}.
    for xc in y {
        let mut trip = [(xc - one).abs(), xc, xc + one];
        trip.sort();
        if trip == y {
            let r1 = row_of(rows, 1)?;
            let f1 = r1.unitarizable_at(xc);
            let siegel = a > one && xc < a - one;
            let per = vec![
                (anon(format!("nu^{xc} d([-1,1]) |x {}", r1.base)), f1),
                (
                    anon(format!("nu^{xc} Lgl([-1],[0],[1]) |x {}", r1.dual_base)),
                    f1,
                ),
                (
                    anon(format!(
                        "Lgl([{},{}],[{}]) |x sigma",
                        xc - one,
                        xc,
                        xc + one
                    )),
                    siegel,
                ),
                (
                    anon(format!(
                        "Lgl([{}],[{},{}]) |x sigma",
                        xc - one,
                        xc,
                        xc + one
                    )),
                    siegel,
                ),
            ];
            return wall_from_per(ctx, y, per, BTreeSet::new()).map(Some);
        }
    }

    // Moving pair nu^x d([-1/2,1/2]) at the level alpha.
    for i in 0..3 {
        if y[i] != a {
            continue;
        }
        let [p, q] = rest_of(y, i);
        if q - p == one || p + q == one {
            let x = q - half;
            let in_play = if a > zero {
                vec![row_of(rows, 2)?, row_of(rows, 3)?]
            } else {
                rows_of(rows, 4)
            };
            let mut per = Vec::new();
            for r in in_play {
                let f = r.unitarizable_at(x);
                per.push((anon(format!("nu^{x} d([-1/2,1/2]) |x {}", r.base)), f));
                per.push((
                    anon(format!("nu^{x} Lgl([-1/2],[1/2]) |x {}", r.dual_base)),
                    f,
                ));
            }
            return wall_from_per(ctx, y, per, BTreeSet::new()).map(Some);
        }
    }

    // Moving exponent against [alpha] x [alpha+1].
    for i in 0..3 {
        if rest_of(y, i) != [a, a + one] {
            continue;
        }
        let x = y[i];
        let mut per = Vec::new();
        if a > zero {
            let r5 = row_of(rows, 5)?;
            let f5 = r5.unitarizable_at(x);
            per.push((anon(format!("[{x}] |x {}", r5.base)), f5));
            per.push((anon(format!("[{x}] |x {}", r5.dual_base)), f5));
            let alpha = ctx.alpha();
            let l_pair = ClassicalIrr::new(
                ms1(hseg(alpha, alpha + HalfInt::ONE)?),
                TemperedLabel::Cusp,
                ctx,
            )?;
            let l_over = ClassicalIrr::new(
                ms1(hseg(alpha + HalfInt::ONE, alpha + HalfInt::ONE)?),
                TemperedLabel::GenSteinberg(hseg(alpha, alpha)?),
                ctx,
            )?;
            per.push((anon(format!("[{x}] |x {l_pair}")), false));
            per.push((anon(format!("[{x}] |x {l_over}")), false));
        } else {
            for r in rows_of(rows, 6) {
                let f = r.unitarizable_at(x);
                per.push((anon(format!("[{x}] |x {}", r.base)), f));
                per.push((anon(format!("[{x}] |x {}", r.dual_base)), f));
            }
            let r7 = row_of(rows, 7)?;
            per.push((
                anon(format!("[{x}] |x {}", r7.base)),
                r7.unitarizable_at(x),
            ));
        }
        return wall_from_per(ctx, y, per, BTreeSet::new()).map(Some);
    }

    // Moving exponent against [|alpha-1|] x [alpha], alpha > 0.
    if a > zero {
        let fixed = {
            let mut f = [(a - one).abs(), a];
            f.sort();
            f
        };
        for i in 0..3 {
            if rest_of(y, i) != fixed {
                continue;
            }
            let x = y[i];
            let ids: [u8; 2] = if a > one {
                [8, 9]
            } else if a == one {
                [10, 11]
            } else {
                [12, 13]
            };
            let mut per = Vec::new();
            for id in ids {
                let r = row_of(rows, id)?;
                let f = r.unitarizable_at(x);
                per.push((anon(format!("[{x}] |x {}", r.base)), f));
                per.push((anon(format!("[{x}] |x {}", r.dual_base)), f));
            }
            return wall_from_per(ctx, y, per, BTreeSet::new()).map(Some);
        }
    }

    // Moving exponent against [0] x [0], alpha = 0.
    if a.is_zero() {
        for i in 0..3 {
            if rest_of(y, i) != [zero, zero] {
                continue;
            }
            let x = y[i];
            let r14 = row_of(rows, 14)?;
            let f = r14.unitarizable_at(x);
            let per = vec![
                (anon(format!("[{x}] |x {}", r14.base)), f),
                (anon(format!("[{x}] |x {}", r14.dual_base)), f),
            ];
            return wall_from_per(ctx, y, per, BTreeSet::new()).map(Some);
        }
    }

    Ok(None)
}

const PERMS: [[usize; 3]; 6] = [
    [0, 1, 2],
    [0, 2, 1],
    [1, 0, 2],
    [1, 2, 0],
    [2, 0, 1],
    [2, 1, 0],
];

/// Transports a single-wall point to the slanted plane (some signed image
/// has x_2 - x_1 = 1) or the level plane (some signed image has x_3 = alpha)
/// and reads the verdict off the plane regions.
fn single_wall_verdict(
    ctx: LineContext,
    y: [Rational64; 3],
) -> Result<Option<Verdict>, UnitarityError> {
    let a = rat(ctx.alpha());
    let zero = Rational64::zero();
    let one = Rational64::one();
    let half = Rational64::new(1, 2);
    for perm in PERMS {
        for mask in 0..8u8 {
            let mut z = [zero; 3];
            for (slot, &src) in perm.iter().enumerate() {
                let s = if mask & (1 << slot) != 0 { -one } else { one };
                z[slot] = s * y[src];
            }
            if z[1] - z[0] == one && geometry::sla_point_regular(ctx, z[0] + half, z[2]) {
                let q = Point::pair(z[0] + half, z[2]);
                let regions = geometry::region_of_slanted(ctx, &q, false)?;
                let flag = !regions.is_empty();
                let (xd, yd) = ((z[0] + half).abs(), z[2].abs());
                let per = vec![
                    (
                        anon(format!("nu^{xd} d([-1/2,1/2]) x [{yd}] |x sigma")),
                        flag,
                    ),
                    (
                        anon(format!("nu^{xd} Lgl([-1/2],[1/2]) x [{yd}] |x sigma")),
                        flag,
                    ),
                ];
                return wall_from_per(ctx, y, per, regions).map(Some);
            }
            if z[2] == a && geometry::lev_point_regular(ctx, z[0], z[1]) {
                let q = Point::pair(z[0], z[1]);
                let regions = geometry::region_of_level(ctx, &q)?;
                let flag = !regions.is_empty();
                let mut c = [z[0].abs(), z[1].abs()];
                c.sort();
                let per = if a > zero {
                    vec![
                        (
                            anon(format!(
                                "[{}] x [{}] |x delta([{}];sigma)",
                                c[0],
                                c[1],
                                ctx.alpha()
                            )),
                            flag,
                        ),
                        (
                            anon(format!(
                                "[{}] x [{}] |x L([{}];sigma)",
                                c[0],
                                c[1],
                                ctx.alpha()
                            )),
                            flag,
                        ),
                    ]
                } else {
                    vec![
                        (anon(format!("[{}] x [{}] |x delta0(+)", c[0], c[1])), flag),
                        (anon(format!("[{}] x [{}] |x delta0(-)", c[0], c[1])), flag),
                    ]
                };
                return wall_from_per(ctx, y, per, regions).map(Some);
            }
        }
    }
    Ok(None)
}

/// Classifies a corank-three exponent point, invariant under signed
/// permutations of the coordinates.
pub fn classify_corank3(
    ctx: LineContext,
    xs: [Rational64; 3],
) -> Result<Verdict, UnitarityError> {
    let y = canon3r(xs);
    if let Some(hs) = as_halfints(&y) {
        if composition_db::critical(ctx, &hs) {
            return critical_verdict(ctx, &hs);
        }
    }
    let pt = Point::triple(y[0], y[1], y[2]);
    if geometry::is_regular(ctx, &pt)? {
        let regions = geometry::region_of_3d(ctx, &pt, false)?;
        let flag = !regions.is_empty();
        let per = vec![(
            anon(format!("[{}] x [{}] x [{}] |x sigma", y[0], y[1], y[2])),
            flag,
        )];
        return Ok(verdict(PointKind::Regular, regions, None, per, vec![]));
    }
    let rows = family_rows(ctx)?;
    if let Some(v) = corner_verdict(ctx, y, &rows)? {
        return Ok(v);
    }
    if let Some(v) = single_wall_verdict(ctx, y)? {
        return Ok(v);
    }
    if geometry::in_unitary_closure_3d(ctx, &pt)? {
        let regions = geometry::region_of_3d(ctx, &pt, true)?;
        let per = vec![(anon("every irreducible subquotient".to_string()), true)];
        return Ok(verdict(PointKind::Wall, regions, None, per, vec![]));
    }
    Ok(Verdict {
        point_kind: PointKind::Wall,
        regions: BTreeSet::new(),
        constituents: None,
        per_constituent: vec![],
        strongly_unitary: false,
        witnesses: vec![],
        unknown: true,
    })
}

/// Classifies a point with mixed cuspidal support: one context and exponent
/// tuple per line, total corank at most three. The point is unitarizable
/// exactly when every line's verdict is strongly unitary.
pub fn classify_mixed(
    lines: &[(LineContext, Vec<Rational64>)],
) -> Result<MixedVerdict, UnitarityError> {
    if lines.is_empty() {
        return Err(UnitarityError::InvalidInput(
            "at least one cuspidal line is required".to_string(),
        ));
    }
    let total: usize = lines.iter().map(|(_, xs)| xs.len()).sum();
    if total > 3 {
        return Err(UnitarityError::InvalidInput(format!(
            "total corank {total} exceeds 3"
        )));
    }
    let mut verdicts = Vec::with_capacity(lines.len());
    for (ctx, xs) in lines {
        let v = match xs[..] {
            [x] => classify_corank1(*ctx, x)?,
            [x, y] => classify_corank2(*ctx, [x, y])?,
            [x, y, z] => classify_corank3(*ctx, [x, y, z])?,
            _ => {
                return Err(UnitarityError::InvalidInput(format!(
                    "each line needs 1 to 3 exponents, got {}",
                    xs.len()
                )))
            }
        };
        verdicts.push(v);
    }
    let strongly = verdicts.iter().all(|v| v.strongly_unitary);
    Ok(MixedVerdict {
        lines: verdicts,
        strongly_unitary: strongly,
    })
}
