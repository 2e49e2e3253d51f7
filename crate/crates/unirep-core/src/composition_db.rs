//! Composition-series catalogue for the critical induced representations of
//! corank at most three.
//!
//! Each entry records the Jordan-Holder constituents of a full induced
//! `nu^{x1} rho x ... x nu^{xk} rho |x sigma` at a critical exponent tuple,
//! together with multiplicities, the duality pairing, unitarizability flags,
//! the catalogued partial decomposition identities, and enough restriction
//! data to reconstruct every constituent's general linear Jacquet column.
//!
//! Columns are reconstructed at entry-build time from one of six recipes:
//! a closed restriction formula, a stored restriction list, a stored column,
//! irreducibility of an induced from a lower-corank constituent, subtraction
//! of the known siblings inside a decomposition identity, or transport along
//! the duality involution. Identities consumed by the subtraction recipe are
//! flagged, so consistency checks can restrict to the independent ones.

use std::collections::BTreeSet;

use serde_json::{json, Value};
use thiserror::Error;

use crate::classical_reps::{ClassicalIrr, LabelError, Sign, TemperedLabel};
use crate::gl_ring::{FormalSum, GLTerm, GlError};
use crate::jacquet_engine::{
    cuspidal_chains, dual_transport_gl, mu_star, mu_star_induced_over, resolve_closed, s_gl,
    s_gl_induced, BiTerm, ClTerm, JacquetError,
};
use crate::line_core::{signed_orbit_rep, HalfInt, LineContext, Multisegment, Segment};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DbError {
    #[error("exponent tuple ({0}) is not critical")]
    NotCritical(String),
    #[error("label {0} is not in the catalogue")]
    UnsupportedLabel(String),
    #[error("no catalogued identity for {0}")]
    UnknownIdentity(String),
    #[error("restriction data is not catalogued for {0}")]
    UnsupportedRestriction(String),
    #[error(transparent)]
    Jacquet(#[from] JacquetError),
    #[error(transparent)]
    Label(#[from] LabelError),
    #[error(transparent)]
    Gl(#[from] GlError),
    #[error("catalogue inconsistency: {0}")]
    Internal(String),
}

/// One irreducible constituent of a catalogued induced representation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constituent {
    pub label: ClassicalIrr,
    /// Multiplicity in the full induced representation.
    pub mult: i64,
    pub unitary: bool,
    /// Index of the dual constituent within the same entry.
    pub dual: usize,
    /// Full catalogued restriction, when one is stored.
    pub mu: Option<FormalSum<BiTerm>>,
    /// Factors and base when the label is itself an irreducible induced
    /// representation; restriction data can then be rebuilt recursively.
    pub induced_from: Option<(Vec<GLTerm>, ClassicalIrr)>,
    /// The general linear Jacquet column, in the irreducible basis.
    pub sgl: FormalSum<GLTerm>,
}

/// A catalogued decomposition `f_1 x ... x f_m |x base = sum of parts`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Identity {
    pub name: String,
    pub factors: Vec<GLTerm>,
    /// Inducing label; the bare cuspidal for a from-scratch product.
    pub base: ClassicalIrr,
    /// (constituent index, multiplicity) pairs.
    pub parts: Vec<(usize, i64)>,
    /// Whether a sibling-subtraction recipe consumed this identity; the
    /// remaining identities are independent consistency checks.
    pub used_in_construction: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Entry {
    pub ctx: LineContext,
    /// Canonical (sorted, non-negative) exponent tuple.
    pub exponents: Vec<HalfInt>,
    /// Catalogue family tag, stable across runs.
    pub family: &'static str,
    /// Human-readable guard on alpha for this family.
    pub guard: &'static str,
    pub constituents: Vec<Constituent>,
    pub identities: Vec<Identity>,
}

impl Entry {
    pub fn constituent_index(&self, label: &ClassicalIrr) -> Option<usize> {
        self.constituents.iter().position(|c| &c.label == label)
    }

    /// The full composition series as a formal sum with multiplicities.
    pub fn series(&self) -> FormalSum<ClassicalIrr> {
        let mut out = FormalSum::zero();
        for c in &self.constituents {
            out.add_term(c.label.clone(), c.mult);
        }
        out
    }

    /// Total length counting multiplicities.
    pub fn length(&self) -> i64 {
        self.constituents.iter().map(|c| c.mult).sum()
    }
}

/// All exponents of the cuspidal support of a label, Langlands and tempered
/// parts included, as a canonical non-negative sorted tuple.
pub fn support_points(label: &ClassicalIrr) -> Vec<HalfInt> {
    let mut pts = Vec::new();
    for s in label.langlands_part().segments() {
        pts.extend(s.support());
    }
    tempered_support(label.tempered_part(), &mut pts);
    signed_orbit_rep(&pts)
}

fn tempered_support(t: &TemperedLabel, pts: &mut Vec<HalfInt>) {
    match t {
        TemperedLabel::Cusp => {}
        TemperedLabel::GenSteinberg(s) => pts.extend(s.support()),
        TemperedLabel::StronglyPositive(segs) => {
            for s in segs {
                pts.extend(s.support());
            }
        }
        TemperedLabel::SegSigned(s, _) => pts.extend(s.support()),
        TemperedLabel::DeltaZeroSigned(_) => pts.push(HalfInt::ZERO),
        TemperedLabel::TauSigned(s, _, inner) => {
            pts.extend(s.support());
            tempered_support(inner, pts);
        }
        TemperedLabel::TemperedInd(ms, inner) => {
            for s in ms.segments() {
                pts.extend(s.support());
            }
            tempered_support(inner, pts);
        }
    }
}

/// Whether a tuple is critical: non-empty, corank at most three, on the
/// lattice, and its distinct values form a run of consecutive integer steps
/// whose interval contains alpha. Values are canonicalized first.
pub fn critical(ctx: LineContext, xs: &[HalfInt]) -> bool {
    if xs.is_empty() || xs.len() > 3 {
        return false;
    }
    let t = signed_orbit_rep(xs);
    if t.iter().any(|&x| !ctx.on_lattice(x)) {
        return false;
    }
    let mut vals: Vec<HalfInt> = t.clone();
    vals.dedup();
    if vals.windows(2).any(|w| w[1] != w[0] + 1) {
        return false;
    }
    let a = ctx.alpha();
    vals[0] <= a && a <= vals[vals.len() - 1]
}

/// Every critical tuple of corank 1..=3 for the given line, canonicalized
/// and deduplicated.
pub fn critical_tuples(ctx: LineContext) -> Vec<Vec<HalfInt>> {
    let a = ctx.alpha();
    let shapes: [&[i64]; 12] = [
        &[0],
        &[0, 1],
        &[0, 0],
        &[-1, 0],
        &[0, 1, 2],
        &[0, 1, 1],
        &[0, 0, 1],
        &[0, 0, 0],
        &[-1, 0, 1],
        &[-1, 0, 0],
        &[-1, -1, 0],
        &[-2, -1, 0],
    ];
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for shape in shapes {
        let raw: Vec<HalfInt> = shape.iter().map(|&k| a + k).collect();
        let t = signed_orbit_rep(&raw);
        if critical(ctx, &t) && seen.insert(t.clone()) {
            out.push(t);
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Entry construction.

enum Recipe {
    /// The engine has a closed restriction formula for the label.
    Closed,
    /// The general linear column itself is catalogued.
    StoredGl(FormalSum<GLTerm>),
    /// Column of the stored full restriction list.
    FromMu,
    /// The label is the irreducible induced `factors |x base`; its column is
    /// the induced column of the base.
    FromInduced(Vec<GLTerm>, ClassicalIrr),
    /// Subtract the other parts of the flagged identity from its left side.
    MinusSiblings(usize),
    /// Transport the column of the dual constituent through the involution.
    Transport(usize),
}

struct Spec {
    label: ClassicalIrr,
    mult: i64,
    unitary: bool,
    dual: usize,
    mu: Option<FormalSum<BiTerm>>,
    recipe: Recipe,
}

struct IdSpec {
    factors: Vec<GLTerm>,
    base: ClassicalIrr,
    parts: Vec<(usize, i64)>,
    used: bool,
}

/// Label and term builders shared by the family constructors.
struct Cat {
    ctx: LineContext,
    a: HalfInt,
}

impl Cat {
    fn new(ctx: LineContext) -> Self {
        Cat { ctx, a: ctx.alpha() }
    }

    fn seg(&self, b: HalfInt, e: HalfInt) -> Result<Segment, DbError> {
        Segment::new(b, e).map_err(|e| DbError::Internal(e.to_string()))
    }

    fn pt(&self, x: HalfInt) -> Segment {
        Segment::singleton(x)
    }

    fn cusp(&self) -> ClassicalIrr {
        ClassicalIrr::cusp(self.ctx)
    }

    fn lan(&self, segs: Vec<Segment>, t: TemperedLabel) -> Result<ClassicalIrr, DbError> {
        Ok(ClassicalIrr::new(Multisegment::new(segs), t, self.ctx)?)
    }

    fn temp(&self, t: TemperedLabel) -> Result<ClassicalIrr, DbError> {
        Ok(ClassicalIrr::tempered(t, self.ctx)?)
    }

    fn gst(&self, b: HalfInt, e: HalfInt) -> Result<ClassicalIrr, DbError> {
        let s = self.seg(b, e)?;
        self.temp(TemperedLabel::GenSteinberg(s))
    }

    /// `L([x]; sigma)`, the irreducible induced from one exponent off the
    /// reducibility point.
    fn lpt(&self, x: HalfInt) -> Result<ClassicalIrr, DbError> {
        self.lan(vec![self.pt(x)], TemperedLabel::Cusp)
    }

    fn d(&self, b: HalfInt, e: HalfInt) -> Result<GLTerm, DbError> {
        Ok(GLTerm::delta(self.seg(b, e)?))
    }

    fn dp(&self, x: HalfInt) -> GLTerm {
        GLTerm::delta(self.pt(x))
    }

    fn ir(&self, segs: Vec<Segment>) -> GLTerm {
        GLTerm::irr(Multisegment::new(segs))
    }

    fn t(&self, gl: GLTerm, cl: &ClassicalIrr) -> BiTerm {
        BiTerm::new(gl, ClTerm::Irr(cl.clone()))
    }
}

fn identity_name(factors: &[GLTerm], base: &ClassicalIrr) -> String {
    let lhs: Vec<String> = factors.iter().map(|f| f.to_string()).collect();
    format!("{} |x {}", lhs.join(" x "), base)
}

/// The general linear column of a label: through the engine's closed
/// formulas when available, otherwise through its catalogue entry.
pub fn sgl_of(ctx: LineContext, label: &ClassicalIrr) -> Result<FormalSum<GLTerm>, DbError> {
    if label.degree() == 0 {
        return Ok(FormalSum::from_term(GLTerm::One));
    }
    if let Ok(m) = mu_star(label) {
        return Ok(s_gl(&m));
    }
    let tuple = support_points(label);
    let e = entry(ctx, &tuple)?;
    match e.constituent_index(label) {
        Some(i) => Ok(e.constituents[i].sgl.clone()),
        None => Err(DbError::UnsupportedLabel(label.to_string())),
    }
}

fn finish(
    ctx: LineContext,
    exponents: Vec<HalfInt>,
    family: &'static str,
    guard: &'static str,
    specs: Vec<Spec>,
    ids: Vec<IdSpec>,
) -> Result<Entry, DbError> {
    let n = specs.len();
    let k = exponents.len() as i64;
    let mut sgl: Vec<Option<FormalSum<GLTerm>>> = vec![None; n];
    loop {
        let mut progress = false;
        for i in 0..n {
            if sgl[i].is_some() {
                continue;
            }
            let computed = match &specs[i].recipe {
                Recipe::Closed => Some(s_gl(&mu_star(&specs[i].label)?)),
                Recipe::StoredGl(s) => Some(s.clone()),
                Recipe::FromMu => {
                    let m = specs[i].mu.as_ref().ok_or_else(|| {
                        DbError::Internal(format!(
                            "{} uses a stored restriction that is missing",
                            specs[i].label
                        ))
                    })?;
                    Some(s_gl(m))
                }
                Recipe::FromInduced(factors, base) => {
                    let base_sgl = sgl_of(ctx, base)?;
                    Some(s_gl_induced(factors, &base_sgl)?)
                }
                Recipe::MinusSiblings(idx) => {
                    let id = &ids[*idx];
                    let ready = id
                        .parts
                        .iter()
                        .all(|&(j, _)| j == i || sgl[j].is_some());
                    if !ready {
                        None
                    } else {
                        let self_mult = id
                            .parts
                            .iter()
                            .find(|&&(j, _)| j == i)
                            .map(|&(_, m)| m)
                            .ok_or_else(|| {
                                DbError::Internal(format!(
                                    "{} is not a part of its defining identity",
                                    specs[i].label
                                ))
                            })?;
                        if self_mult != 1 {
                            return Err(DbError::Internal(format!(
                                "{} has multiplicity {} in its defining identity",
                                specs[i].label, self_mult
                            )));
                        }
                        let base_sgl = sgl_of(ctx, &id.base)?;
                        let mut acc = s_gl_induced(&id.factors, &base_sgl)?;
                        for &(j, m) in &id.parts {
                            if j == i {
                                continue;
                            }
                            let sj = sgl[j].as_ref().expect("checked ready");
                            for (tm, c) in sj.iter() {
                                acc.add_term(tm.clone(), -m * c);
                            }
                        }
                        Some(acc)
                    }
                }
                Recipe::Transport(j) => match &sgl[*j] {
                    Some(s) => Some(dual_transport_gl(s)?),
                    None => None,
                },
            };
            if let Some(s) = computed {
                for (tm, c) in s.iter() {
                    if c <= 0 {
                        return Err(DbError::Internal(format!(
                            "column of {} has non-positive coefficient {c} at {tm}",
                            specs[i].label
                        )));
                    }
                    if tm.degree() != k {
                        return Err(DbError::Internal(format!(
                            "column of {} has a term {tm} of wrong degree",
                            specs[i].label
                        )));
                    }
                }
                sgl[i] = Some(s);
                progress = true;
            }
        }
        if sgl.iter().all(|s| s.is_some()) {
            break;
        }
        if !progress {
            return Err(DbError::Internal(format!(
                "circular column recipes in family {family}"
            )));
        }
    }

    let constituents: Vec<Constituent> = specs
        .into_iter()
        .zip(sgl)
        .map(|(s, g)| {
            let induced_from = match s.recipe {
                Recipe::FromInduced(f, b) => Some((f, b)),
                _ => None,
            };
            Constituent {
                label: s.label,
                mult: s.mult,
                unitary: s.unitary,
                dual: s.dual,
                mu: s.mu,
                induced_from,
                sgl: g.expect("resolved above"),
            }
        })
        .collect();

    for (i, c) in constituents.iter().enumerate() {
        if c.dual >= n || constituents[c.dual].dual != i {
            return Err(DbError::Internal(format!(
                "duality pairing of {family} is not an involution at {i}"
            )));
        }
        if constituents[c.dual].unitary != c.unitary {
            return Err(DbError::Internal(format!(
                "unitarizability differs across the dual pair {i} in {family}"
            )));
        }
        if constituents[c.dual].mult != c.mult {
            return Err(DbError::Internal(format!(
                "multiplicity differs across the dual pair {i} in {family}"
            )));
        }
    }
    for i in 0..n {
        for j in (i + 1)..n {
            if constituents[i].label == constituents[j].label {
                return Err(DbError::Internal(format!(
                    "duplicate label {} in {family}",
                    constituents[i].label
                )));
            }
        }
    }
    for c in &constituents {
        if let Some(m) = &c.mu {
            if m.coeff(&BiTerm::unit(c.label.clone())) != 1 {
                return Err(DbError::Internal(format!(
                    "stored restriction of {} lacks the unit term",
                    c.label
                )));
            }
            for (bt, cc) in m.iter() {
                if cc <= 0 {
                    return Err(DbError::Internal(format!(
                        "stored restriction of {} has a non-positive coefficient",
                        c.label
                    )));
                }
                let cl_for_degree = match &bt.cl {
                    ClTerm::Irr(p) => p,
                    ClTerm::Induced(..) => {
                        return Err(DbError::Internal(format!(
                            "stored restriction of {} has an unresolved term",
                            c.label
                        )))
                    }
                };
                let rest = support_points(cl_for_degree).len() as i64;
                if bt.gl.degree() + rest != k {
                    return Err(DbError::Internal(format!(
                        "stored restriction of {} breaks degree conservation at {bt}",
                        c.label
                    )));
                }
            }
        }
    }

    let identities: Vec<Identity> = ids
        .into_iter()
        .map(|i| Identity {
            name: identity_name(&i.factors, &i.base),
            factors: i.factors,
            base: i.base,
            parts: i.parts,
            used_in_construction: i.used,
        })
        .collect();
    for id in &identities {
        if id.parts.iter().any(|&(j, _)| j >= n) {
            return Err(DbError::Internal(format!(
                "identity {} refers to a missing constituent",
                id.name
            )));
        }
    }

    Ok(Entry { ctx, exponents, family, guard, constituents, identities })
}

/// Catalogue lookup: the entry at a critical tuple.
pub fn entry(ctx: LineContext, xs: &[HalfInt]) -> Result<Entry, DbError> {
    let t = signed_orbit_rep(xs);
    if !critical(ctx, &t) {
        let shown: Vec<String> = t.iter().map(|x| x.to_string()).collect();
        return Err(DbError::NotCritical(shown.join(", ")));
    }
    let a = ctx.alpha();
    let c = Cat::new(ctx);
    let z = HalfInt::ZERO;
    let h = HalfInt::HALF;
    let one = HalfInt::ONE;
    let th = HalfInt::from_doubled(3);
    let two = HalfInt::from_doubled(4);

    let (family, guard, specs, ids) = match t.len() {
        1 => {
            if a == z {
                ("corank1-zero", "alpha = 0", corank1_zero(&c)?, corank1_zero_ids(&c)?)
            } else {
                ("corank1", "alpha >= 1/2", corank1(&c)?, corank1_ids(&c)?)
            }
        }
        2 => {
            if a == z && t == [z, one] {
                let (s, i) = f2_up_zero(&c)?;
                ("corank2-up-zero", "alpha = 0", s, i)
            } else if a == z && t == [z, z] {
                let (s, i) = f2_eq_zero(&c)?;
                ("corank2-eq-zero", "alpha = 0", s, i)
            } else if a == h && t == [h, h] {
                let (s, i) = f2_eq_half(&c)?;
                ("corank2-eq-half", "alpha = 1/2", s, i)
            } else if a == one && t == [z, one] {
                let (s, i) = f2_down_one(&c)?;
                ("corank2-down-one", "alpha = 1", s, i)
            } else if t == [a, a + 1] && a >= h {
                let (s, i) = f2_up(&c)?;
                ("corank2-up", "alpha >= 1/2", s, i)
            } else if t == [a, a] && a >= one {
                let (s, i) = f2_eq(&c)?;
                ("corank2-eq", "alpha >= 1", s, i)
            } else if t == [a - 1, a] && a >= th {
                let (s, i) = f2_down(&c)?;
                ("corank2-down", "alpha >= 3/2", s, i)
            } else {
                return Err(DbError::Internal(format!(
                    "critical pair not matched at alpha = {a}"
                )));
            }
        }
        3 => {
            if a == two && t == [z, one, two] {
                let (s, i) = s1_run_down_two(&c)?;
                ("corank3-run-down-two", "alpha = 2", s, i)
            } else if a == one && t == [z, one, two] {
                let (s, i) = s2_run_centered_one(&c)?;
                ("corank3-run-centered-one", "alpha = 1", s, i)
            } else if a == one && t == [z, one, one] {
                let (s, i) = s3_down_eq_one(&c)?;
                ("corank3-down-eq-one", "alpha = 1", s, i)
            } else if a == one && t == [z, z, one] {
                let (s, i) = s4_eq_down_one(&c)?;
                ("corank3-eq-down-one", "alpha = 1", s, i)
            } else if a == th && t == [h, h, th] {
                let (s, i) = s5_run_down_threehalves(&c)?;
                ("corank3-run-down-threehalves", "alpha = 3/2", s, i)
            } else if a == h && t == [h, h, th] {
                let (s, i) = s6_eq_up_half(&c)?;
                ("corank3-eq-up-half", "alpha = 1/2", s, i)
            } else if a == h && t == [h, h, h] {
                let (s, i) = s7_triple_half(&c)?;
                ("corank3-triple-half", "alpha = 1/2", s, i)
            } else if a == z && t == [z, one, two] {
                let (s, i) = s8_run_up_zero(&c)?;
                ("corank3-run-up-zero", "alpha = 0", s, i)
            } else if a == z && t == [z, one, one] {
                let (s, i) = s9_up_eq_zero(&c)?;
                ("corank3-up-eq-zero", "alpha = 0", s, i)
            } else if a == z && t == [z, z, one] {
                let (s, i) = s10_eq_up_zero(&c)?;
                ("corank3-eq-up-zero", "alpha = 0", s, i)
            } else if a == z && t == [z, z, z] {
                let (s, i) = s11_triple_zero(&c)?;
                ("corank3-triple-zero", "alpha = 0", s, i)
            } else if t == [a, a + 1, a + 2] && a >= h {
                let (s, i) = g1_run_up(&c)?;
                ("corank3-run-up", "alpha >= 1/2", s, i)
            } else if t == [a, a + 1, a + 1] && a >= h {
                let (s, i) = g2_up_eq(&c)?;
                ("corank3-up-eq", "alpha >= 1/2", s, i)
            } else if t == [a, a, a + 1] && a >= one {
                let (s, i) = g3_eq_up(&c)?;
                ("corank3-eq-up", "alpha >= 1", s, i)
            } else if t == [a, a, a] && a >= one {
                let (s, i) = g4_triple_eq(&c)?;
                ("corank3-triple-eq", "alpha >= 1", s, i)
            } else if t == [a - 1, a, a + 1] && a > one {
                let (s, i) = g5_run_centered(&c)?;
                ("corank3-run-centered", "alpha > 1", s, i)
            } else if t == [a - 1, a, a] && a > one {
                let (s, i) = g6_down_eq(&c)?;
                ("corank3-down-eq", "alpha > 1", s, i)
            } else if t == [a - 1, a - 1, a] && a >= two {
                let (s, i) = g7_eq_down(&c)?;
                ("corank3-eq-down", "alpha >= 2", s, i)
            } else if t == [a - 2, a - 1, a] && a > two {
                let (s, i) = g8_run_down(&c)?;
                ("corank3-run-down", "alpha > 2", s, i)
            } else {
                return Err(DbError::Internal(format!(
                    "critical triple not matched at alpha = {a}"
                )));
            }
        }
        _ => unreachable!("critical() bounds the corank"),
    };
    finish(ctx, t, family, guard, specs, ids)
}

// ---------------------------------------------------------------------------
// Corank one.

fn corank1(c: &Cat) -> Result<Vec<Spec>, DbError> {
    let a = c.a;
    Ok(vec![
        Spec {
            label: c.lpt(a)?,
            mult: 1,
            unitary: true,
            dual: 1,
            mu: None,
            recipe: Recipe::Closed,
        },
        Spec {
            label: c.gst(a, a)?,
            mult: 1,
            unitary: true,
            dual: 0,
            mu: None,
            recipe: Recipe::Closed,
        },
    ])
}

fn corank1_ids(c: &Cat) -> Result<Vec<IdSpec>, DbError> {
    Ok(vec![IdSpec {
        factors: vec![c.dp(c.a)],
        base: c.cusp(),
        parts: vec![(0, 1), (1, 1)],
        used: false,
    }])
}

fn corank1_zero(c: &Cat) -> Result<Vec<Spec>, DbError> {
    Ok(vec![
        Spec {
            label: c.temp(TemperedLabel::DeltaZeroSigned(Sign::Plus))?,
            mult: 1,
            unitary: true,
            dual: 1,
            mu: None,
            recipe: Recipe::Closed,
        },
        Spec {
            label: c.temp(TemperedLabel::DeltaZeroSigned(Sign::Minus))?,
            mult: 1,
            unitary: true,
            dual: 0,
            mu: None,
            recipe: Recipe::Closed,
        },
    ])
}

fn corank1_zero_ids(c: &Cat) -> Result<Vec<IdSpec>, DbError> {
    Ok(vec![IdSpec {
        factors: vec![c.dp(HalfInt::ZERO)],
        base: c.cusp(),
        parts: vec![(0, 1), (1, 1)],
        used: false,
    }])
}

// ---------------------------------------------------------------------------
// Corank two.

fn f2_up(c: &Cat) -> Result<(Vec<Spec>, Vec<IdSpec>), DbError> {
    let a = c.a;
    let p1 = c.lan(vec![c.pt(a + 1), c.pt(a)], TemperedLabel::Cusp)?;
    let p2 = c.lan(vec![c.pt(a + 1)], TemperedLabel::GenSteinberg(c.pt(a)))?;
    let p3 = c.lan(vec![c.seg(a, a + 1)?], TemperedLabel::Cusp)?;
    let p4 = c.gst(a, a + 1)?;
    let mu2 = {
        let mut m = FormalSum::from_term(BiTerm::unit(p2.clone()));
        m.add_term(c.t(c.dp(-(a + 1)), &c.gst(a, a)?), 1);
        m.add_term(c.t(c.dp(a), &c.lpt(a + 1)?), 1);
        m.add_term(c.t(c.ir(vec![c.pt(a), c.pt(-(a + 1))]), &c.cusp()), 1);
        m.add_term(c.t(c.ir(vec![c.pt(a), c.pt(a + 1)]), &c.cusp()), 1);
        m
    };
    let specs = vec![
        Spec { label: p1, mult: 1, unitary: true, dual: 3, mu: None, recipe: Recipe::Closed },
        Spec { label: p2, mult: 1, unitary: false, dual: 2, mu: Some(mu2), recipe: Recipe::FromMu },
        Spec { label: p3, mult: 1, unitary: false, dual: 1, mu: None, recipe: Recipe::Closed },
        Spec { label: p4, mult: 1, unitary: true, dual: 0, mu: None, recipe: Recipe::Closed },
    ];
    let ids = vec![
        IdSpec {
            factors: vec![c.dp(a + 1), c.dp(a)],
            base: c.cusp(),
            parts: vec![(0, 1), (1, 1), (2, 1), (3, 1)],
            used: false,
        },
        IdSpec {
            factors: vec![c.dp(a + 1)],
            base: c.lpt(a)?,
            parts: vec![(0, 1), (2, 1)],
            used: false,
        },
        IdSpec {
            factors: vec![c.dp(a + 1)],
            base: c.gst(a, a)?,
            parts: vec![(1, 1), (3, 1)],
            used: false,
        },
        IdSpec {
            factors: vec![c.ir(vec![c.pt(a), c.pt(a + 1)])],
            base: c.cusp(),
            parts: vec![(0, 1), (1, 1)],
            used: false,
        },
        IdSpec {
            factors: vec![c.d(a, a + 1)?],
            base: c.cusp(),
            parts: vec![(2, 1), (3, 1)],
            used: false,
        },
    ];
    Ok((specs, ids))
}

fn f2_eq(c: &Cat) -> Result<(Vec<Spec>, Vec<IdSpec>), DbError> {
    let a = c.a;
    let p1 = c.lan(vec![c.pt(a)], TemperedLabel::GenSteinberg(c.pt(a)))?;
    let p2 = c.lan(vec![c.pt(a), c.pt(a)], TemperedLabel::Cusp)?;
    let specs = vec![
        Spec {
            label: p1,
            mult: 1,
            unitary: false,
            dual: 1,
            mu: None,
            recipe: Recipe::FromInduced(vec![c.dp(a)], c.gst(a, a)?),
        },
        Spec {
            label: p2,
            mult: 1,
            unitary: false,
            dual: 0,
            mu: None,
            recipe: Recipe::FromInduced(vec![c.dp(a)], c.lpt(a)?),
        },
    ];
    let ids = vec![
        IdSpec {
            factors: vec![c.dp(a), c.dp(a)],
            base: c.cusp(),
            parts: vec![(0, 1), (1, 1)],
            used: false,
        },
        IdSpec {
            factors: vec![c.dp(a)],
            base: c.gst(a, a)?,
            parts: vec![(0, 1)],
            used: false,
        },
        IdSpec {
            factors: vec![c.dp(a)],
            base: c.lpt(a)?,
            parts: vec![(1, 1)],
            used: false,
        },
    ];
    Ok((specs, ids))
}

fn f2_down(c: &Cat) -> Result<(Vec<Spec>, Vec<IdSpec>), DbError> {
    let a = c.a;
    let p1 = c.lan(vec![c.seg(a - 1, a)?], TemperedLabel::Cusp)?;
    let p2 = c.lan(vec![c.pt(a - 1)], TemperedLabel::GenSteinberg(c.pt(a)))?;
    let p3 = c.lan(vec![c.pt(a), c.pt(a - 1)], TemperedLabel::Cusp)?;
    let p4 = c.temp(TemperedLabel::StronglyPositive(vec![c.pt(a - 1), c.pt(a)]))?;
    let mu3 = {
        let mut m = FormalSum::from_term(BiTerm::unit(p3.clone()));
        m.add_term(c.t(c.dp(-a), &c.lpt(a - 1)?), 1);
        m.add_term(c.t(c.dp(a - 1), &c.lpt(a)?), 1);
        m.add_term(c.t(c.ir(vec![c.pt(a - 1), c.pt(-a)]), &c.cusp()), 1);
        m.add_term(c.t(c.ir(vec![c.pt(-a), c.pt(-a + 1)]), &c.cusp()), 1);
        m
    };
    let mu4 = {
        let mut m = FormalSum::from_term(BiTerm::unit(p4.clone()));
        m.add_term(c.t(c.dp(a - 1), &c.gst(a, a)?), 1);
        m.add_term(c.t(c.ir(vec![c.pt(a - 1), c.pt(a)]), &c.cusp()), 1);
        m
    };
    let specs = vec![
        Spec { label: p1, mult: 1, unitary: true, dual: 3, mu: None, recipe: Recipe::Closed },
        Spec { label: p2, mult: 1, unitary: true, dual: 2, mu: None, recipe: Recipe::Closed },
        Spec { label: p3, mult: 1, unitary: true, dual: 1, mu: Some(mu3), recipe: Recipe::FromMu },
        Spec { label: p4, mult: 1, unitary: true, dual: 0, mu: Some(mu4), recipe: Recipe::FromMu },
    ];
    let ids = vec![
        IdSpec {
            factors: vec![c.dp(a - 1), c.dp(a)],
            base: c.cusp(),
            parts: vec![(0, 1), (1, 1), (2, 1), (3, 1)],
            used: false,
        },
        IdSpec {
            factors: vec![c.dp(a - 1)],
            base: c.lpt(a)?,
            parts: vec![(0, 1), (2, 1)],
            used: false,
        },
        IdSpec {
            factors: vec![c.dp(a - 1)],
            base: c.gst(a, a)?,
            parts: vec![(1, 1), (3, 1)],
            used: false,
        },
        IdSpec {
            factors: vec![c.d(a - 1, a)?],
            base: c.cusp(),
            parts: vec![(0, 1), (1, 1)],
            used: false,
        },
        IdSpec {
            factors: vec![c.ir(vec![c.pt(a - 1), c.pt(a)])],
            base: c.cusp(),
            parts: vec![(2, 1), (3, 1)],
            used: false,
        },
    ];
    Ok((specs, ids))
}

fn f2_down_one(c: &Cat) -> Result<(Vec<Spec>, Vec<IdSpec>), DbError> {
    let z = HalfInt::ZERO;
    let one = HalfInt::ONE;
    let tind0 = c.temp(TemperedLabel::TemperedInd(
        Multisegment::new(vec![c.pt(z)]),
        Box::new(TemperedLabel::Cusp),
    ))?;
    let p1 = c.lan(
        vec![c.pt(one)],
        TemperedLabel::TemperedInd(Multisegment::new(vec![c.pt(z)]), Box::new(TemperedLabel::Cusp)),
    )?;
    let p2 = c.lan(vec![c.seg(z, one)?], TemperedLabel::Cusp)?;
    let p3p = c.temp(TemperedLabel::TauSigned(
        c.pt(z),
        Sign::Plus,
        Box::new(TemperedLabel::GenSteinberg(c.pt(one))),
    ))?;
    let p3m = c.temp(TemperedLabel::TauSigned(
        c.pt(z),
        Sign::Minus,
        Box::new(TemperedLabel::GenSteinberg(c.pt(one))),
    ))?;
    let mu1 = {
        let mut m = FormalSum::from_term(BiTerm::unit(p1.clone()));
        m.add_term(c.t(c.dp(-one), &tind0), 1);
        m.add_term(c.t(c.dp(z), &c.lpt(one)?), 1);
        m.add_term(c.t(c.ir(vec![c.pt(-one), c.pt(z)]), &c.cusp()), 2);
        m.add_term(c.t(c.d(-one, z)?, &c.cusp()), 1);
        m
    };
    let mu3m = {
        let mut m = FormalSum::from_term(BiTerm::unit(p3m.clone()));
        m.add_term(c.t(c.dp(z), &c.gst(one, one)?), 1);
        m.add_term(c.t(c.ir(vec![c.pt(z), c.pt(one)]), &c.cusp()), 1);
        m
    };
    let specs = vec![
        Spec { label: p1, mult: 1, unitary: true, dual: 2, mu: Some(mu1), recipe: Recipe::FromMu },
        Spec { label: p2, mult: 1, unitary: true, dual: 3, mu: None, recipe: Recipe::Closed },
        Spec { label: p3p, mult: 1, unitary: true, dual: 0, mu: None, recipe: Recipe::Closed },
        Spec {
            label: p3m,
            mult: 1,
            unitary: true,
            dual: 1,
            mu: Some(mu3m),
            recipe: Recipe::FromMu,
        },
    ];
    let ids = vec![
        IdSpec {
            factors: vec![c.dp(one), c.dp(z)],
            base: c.cusp(),
            parts: vec![(0, 1), (1, 1), (2, 1), (3, 1)],
            used: false,
        },
        IdSpec {
            factors: vec![c.dp(z)],
            base: c.lpt(one)?,
            parts: vec![(0, 1), (1, 1)],
            used: false,
        },
        IdSpec {
            factors: vec![c.dp(z)],
            base: c.gst(one, one)?,
            parts: vec![(2, 1), (3, 1)],
            used: false,
        },
        IdSpec {
            factors: vec![c.d(z, one)?],
            base: c.cusp(),
            parts: vec![(1, 1), (2, 1)],
            used: false,
        },
        IdSpec {
            factors: vec![c.ir(vec![c.pt(z), c.pt(one)])],
            base: c.cusp(),
            parts: vec![(0, 1), (3, 1)],
            used: false,
        },
    ];
    Ok((specs, ids))
}

fn f2_eq_half(c: &Cat) -> Result<(Vec<Spec>, Vec<IdSpec>), DbError> {
    let h = HalfInt::HALF;
    let p1 = c.temp(TemperedLabel::SegSigned(c.seg(-h, h)?, Sign::Plus))?;
    let p2 = c.temp(TemperedLabel::SegSigned(c.seg(-h, h)?, Sign::Minus))?;
    let p3 = c.lan(vec![c.pt(h), c.pt(h)], TemperedLabel::Cusp)?;
    let p4 = c.lan(vec![c.pt(h)], TemperedLabel::GenSteinberg(c.pt(h)))?;
    let mu3 = {
        let mut m = FormalSum::from_term(BiTerm::unit(p3.clone()));
        m.add_term(c.t(c.dp(-h), &c.gst(h, h)?), 1);
        m.add_term(c.t(c.dp(-h), &c.lpt(h)?), 2);
        m.add_term(c.t(c.ir(vec![c.pt(-h), c.pt(h)]), &c.cusp()), 1);
        m.add_term(c.t(c.ir(vec![c.pt(-h), c.pt(-h)]), &c.cusp()), 1);
        m
    };
    let mu4 = {
        let mut m = FormalSum::from_term(BiTerm::unit(p4.clone()));
        m.add_term(c.t(c.dp(-h), &c.gst(h, h)?), 1);
        m.add_term(c.t(c.ir(vec![c.pt(-h), c.pt(h)]), &c.cusp()), 1);
        m
    };
    let specs = vec![
        Spec { label: p1, mult: 1, unitary: true, dual: 2, mu: None, recipe: Recipe::Closed },
        Spec { label: p2, mult: 1, unitary: true, dual: 3, mu: None, recipe: Recipe::Closed },
        Spec { label: p3, mult: 1, unitary: true, dual: 0, mu: Some(mu3), recipe: Recipe::FromMu },
        Spec { label: p4, mult: 1, unitary: true, dual: 1, mu: Some(mu4), recipe: Recipe::FromMu },
    ];
    let ids = vec![
        IdSpec {
            factors: vec![c.dp(h), c.dp(h)],
            base: c.cusp(),
            parts: vec![(0, 1), (1, 1), (2, 1), (3, 1)],
            used: false,
        },
        IdSpec {
            factors: vec![c.d(-h, h)?],
            base: c.cusp(),
            parts: vec![(0, 1), (1, 1)],
            used: false,
        },
        IdSpec {
            factors: vec![c.ir(vec![c.pt(-h), c.pt(h)])],
            base: c.cusp(),
            parts: vec![(2, 1), (3, 1)],
            used: false,
        },
        IdSpec {
            factors: vec![c.dp(h)],
            base: c.gst(h, h)?,
            parts: vec![(0, 1), (3, 1)],
            used: false,
        },
        IdSpec {
            factors: vec![c.dp(h)],
            base: c.lpt(h)?,
            parts: vec![(1, 1), (2, 1)],
            used: false,
        },
    ];
    Ok((specs, ids))
}

fn f2_up_zero(c: &Cat) -> Result<(Vec<Spec>, Vec<IdSpec>), DbError> {
    let z = HalfInt::ZERO;
    let one = HalfInt::ONE;
    let dzp = c.temp(TemperedLabel::DeltaZeroSigned(Sign::Plus))?;
    let dzm = c.temp(TemperedLabel::DeltaZeroSigned(Sign::Minus))?;
    let p1p = c.lan(vec![c.pt(one)], TemperedLabel::DeltaZeroSigned(Sign::Plus))?;
    let p1m = c.lan(vec![c.pt(one)], TemperedLabel::DeltaZeroSigned(Sign::Minus))?;
    let p2 = c.lan(vec![c.seg(z, one)?], TemperedLabel::Cusp)?;
    let p3p = c.temp(TemperedLabel::SegSigned(c.seg(z, one)?, Sign::Plus))?;
    let p3m = c.temp(TemperedLabel::SegSigned(c.seg(z, one)?, Sign::Minus))?;
    let stored = |p: &ClassicalIrr, dz: &ClassicalIrr| {
        let mut m = FormalSum::from_term(BiTerm::unit(p.clone()));
        m.add_term(c.t(c.dp(-one), dz), 1);
        m.add_term(c.t(c.ir(vec![c.pt(-one), c.pt(z)]), &c.cusp()), 1);
        m
    };
    let mu1p = stored(&p1p, &dzp);
    let mu1m = stored(&p1m, &dzm);
    let specs = vec![
        Spec {
            label: p1p,
            mult: 1,
            unitary: true,
            dual: 4,
            mu: Some(mu1p),
            recipe: Recipe::FromMu,
        },
        Spec {
            label: p1m,
            mult: 1,
            unitary: true,
            dual: 3,
            mu: Some(mu1m),
            recipe: Recipe::FromMu,
        },
        Spec { label: p2, mult: 2, unitary: true, dual: 2, mu: None, recipe: Recipe::Closed },
        Spec { label: p3p, mult: 1, unitary: true, dual: 1, mu: None, recipe: Recipe::Closed },
        Spec { label: p3m, mult: 1, unitary: true, dual: 0, mu: None, recipe: Recipe::Closed },
    ];
    let ids = vec![
        IdSpec {
            factors: vec![c.dp(one), c.dp(z)],
            base: c.cusp(),
            parts: vec![(0, 1), (1, 1), (2, 2), (3, 1), (4, 1)],
            used: false,
        },
        IdSpec {
            factors: vec![c.dp(one)],
            base: dzp.clone(),
            parts: vec![(0, 1), (2, 1), (3, 1)],
            used: false,
        },
        IdSpec {
            factors: vec![c.dp(one)],
            base: dzm.clone(),
            parts: vec![(1, 1), (2, 1), (4, 1)],
            used: false,
        },
        IdSpec {
            factors: vec![c.d(z, one)?],
            base: c.cusp(),
            parts: vec![(2, 1), (3, 1), (4, 1)],
            used: false,
        },
        IdSpec {
            factors: vec![c.ir(vec![c.pt(z), c.pt(one)])],
            base: c.cusp(),
            parts: vec![(0, 1), (1, 1), (2, 1)],
            used: false,
        },
    ];
    Ok((specs, ids))
}

fn f2_eq_zero(c: &Cat) -> Result<(Vec<Spec>, Vec<IdSpec>), DbError> {
    let z = HalfInt::ZERO;
    let ms0 = Multisegment::new(vec![c.pt(z)]);
    let pp = c.temp(TemperedLabel::TemperedInd(
        ms0.clone(),
        Box::new(TemperedLabel::DeltaZeroSigned(Sign::Plus)),
    ))?;
    let pm = c.temp(TemperedLabel::TemperedInd(
        ms0,
        Box::new(TemperedLabel::DeltaZeroSigned(Sign::Minus)),
    ))?;
    let dzp = c.temp(TemperedLabel::DeltaZeroSigned(Sign::Plus))?;
    let dzm = c.temp(TemperedLabel::DeltaZeroSigned(Sign::Minus))?;
    let specs = vec![
        Spec { label: pp, mult: 1, unitary: true, dual: 1, mu: None, recipe: Recipe::Closed },
        Spec { label: pm, mult: 1, unitary: true, dual: 0, mu: None, recipe: Recipe::Closed },
    ];
    let ids = vec![
        IdSpec {
            factors: vec![c.dp(z), c.dp(z)],
            base: c.cusp(),
            parts: vec![(0, 1), (1, 1)],
            used: false,
        },
        IdSpec { factors: vec![c.dp(z)], base: dzp, parts: vec![(0, 1)], used: false },
        IdSpec { factors: vec![c.dp(z)], base: dzm, parts: vec![(1, 1)], used: false },
    ];
    Ok((specs, ids))
}

// ---------------------------------------------------------------------------
// Corank three, generic alpha.

fn g1_run_up(c: &Cat) -> Result<(Vec<Spec>, Vec<IdSpec>), DbError> {
    let a = c.a;
    let p1 = c.gst(a, a + 2)?;
    let p2 = c.lan(vec![c.pt(a + 2), c.pt(a + 1), c.pt(a)], TemperedLabel::Cusp)?;
    let p3 = c.lan(vec![c.pt(a + 2)], TemperedLabel::GenSteinberg(c.seg(a, a + 1)?))?;
    let p4 = c.lan(vec![c.seg(a + 1, a + 2)?, c.pt(a)], TemperedLabel::Cusp)?;
    let p5 = c.lan(vec![c.seg(a + 1, a + 2)?], TemperedLabel::GenSteinberg(c.pt(a)))?;
    let p6 = c.lan(vec![c.pt(a + 2), c.seg(a, a + 1)?], TemperedLabel::Cusp)?;
    let p7 = c.lan(vec![c.pt(a + 2), c.pt(a + 1)], TemperedLabel::GenSteinberg(c.pt(a)))?;
    let p8 = c.lan(vec![c.seg(a, a + 2)?], TemperedLabel::Cusp)?;
    let specs = vec![
        Spec { label: p1, mult: 1, unitary: true, dual: 1, mu: None, recipe: Recipe::Closed },
        Spec { label: p2, mult: 1, unitary: true, dual: 0, mu: None, recipe: Recipe::Closed },
        Spec {
            label: p3,
            mult: 1,
            unitary: false,
            dual: 3,
            mu: None,
            recipe: Recipe::MinusSiblings(0),
        },
        Spec { label: p4, mult: 1, unitary: false, dual: 2, mu: None, recipe: Recipe::Transport(2) },
        Spec { label: p5, mult: 1, unitary: false, dual: 5, mu: None, recipe: Recipe::Transport(5) },
        Spec {
            label: p6,
            mult: 1,
            unitary: false,
            dual: 4,
            mu: None,
            recipe: Recipe::MinusSiblings(1),
        },
        Spec { label: p7, mult: 1, unitary: false, dual: 7, mu: None, recipe: Recipe::Transport(7) },
        Spec { label: p8, mult: 1, unitary: false, dual: 6, mu: None, recipe: Recipe::Closed },
    ];
    let ids = vec![
        IdSpec {
            factors: vec![c.dp(a + 2)],
            base: c.gst(a, a + 1)?,
            parts: vec![(2, 1), (0, 1)],
            used: true,
        },
        IdSpec {
            factors: vec![c.dp(a + 2)],
            base: c.lan(vec![c.seg(a, a + 1)?], TemperedLabel::Cusp)?,
            parts: vec![(5, 1), (7, 1)],
            used: true,
        },
        IdSpec {
            factors: vec![c.dp(a + 2)],
            base: c.lan(vec![c.pt(a + 1), c.pt(a)], TemperedLabel::Cusp)?,
            parts: vec![(1, 1), (3, 1)],
            used: false,
        },
        IdSpec {
            factors: vec![c.dp(a + 2)],
            base: c.lan(vec![c.pt(a + 1)], TemperedLabel::GenSteinberg(c.pt(a)))?,
            parts: vec![(6, 1), (4, 1)],
            used: false,
        },
        IdSpec {
            factors: vec![c.dp(a + 2), c.dp(a + 1), c.dp(a)],
            base: c.cusp(),
            parts: (0..8).map(|i| (i, 1)).collect(),
            used: false,
        },
        IdSpec {
            factors: vec![c.d(a, a + 2)?],
            base: c.cusp(),
            parts: vec![(0, 1), (7, 1)],
            used: false,
        },
    ];
    Ok((specs, ids))
}

fn g2_up_eq(c: &Cat) -> Result<(Vec<Spec>, Vec<IdSpec>), DbError> {
    let a = c.a;
    let b1 = c.lan(vec![c.pt(a + 1), c.pt(a)], TemperedLabel::Cusp)?;
    let b2 = c.lan(vec![c.pt(a + 1)], TemperedLabel::GenSteinberg(c.pt(a)))?;
    let b3 = c.lan(vec![c.seg(a, a + 1)?], TemperedLabel::Cusp)?;
    let b4 = c.gst(a, a + 1)?;
    let p1 = c.lan(vec![c.pt(a + 1), c.pt(a + 1), c.pt(a)], TemperedLabel::Cusp)?;
    let p2 = c.lan(vec![c.pt(a + 1), c.pt(a + 1)], TemperedLabel::GenSteinberg(c.pt(a)))?;
    let p3 = c.lan(vec![c.pt(a + 1), c.seg(a, a + 1)?], TemperedLabel::Cusp)?;
    let p4 = c.lan(vec![c.pt(a + 1)], TemperedLabel::GenSteinberg(c.seg(a, a + 1)?))?;
    let specs = vec![
        Spec {
            label: p1,
            mult: 1,
            unitary: false,
            dual: 3,
            mu: None,
            recipe: Recipe::FromInduced(vec![c.dp(a + 1)], b1.clone()),
        },
        Spec {
            label: p2,
            mult: 1,
            unitary: false,
            dual: 2,
            mu: None,
            recipe: Recipe::FromInduced(vec![c.dp(a + 1)], b2.clone()),
        },
        Spec {
            label: p3,
            mult: 1,
            unitary: false,
            dual: 1,
            mu: None,
            recipe: Recipe::FromInduced(vec![c.dp(a + 1)], b3.clone()),
        },
        Spec {
            label: p4,
            mult: 1,
            unitary: false,
            dual: 0,
            mu: None,
            recipe: Recipe::FromInduced(vec![c.dp(a + 1)], b4.clone()),
        },
    ];
    let ids = vec![
        IdSpec {
            factors: vec![c.dp(a + 1), c.dp(a + 1), c.dp(a)],
            base: c.cusp(),
            parts: vec![(0, 1), (1, 1), (2, 1), (3, 1)],
            used: false,
        },
        IdSpec { factors: vec![c.dp(a + 1)], base: b1, parts: vec![(0, 1)], used: false },
        IdSpec { factors: vec![c.dp(a + 1)], base: b2, parts: vec![(1, 1)], used: false },
        IdSpec { factors: vec![c.dp(a + 1)], base: b3, parts: vec![(2, 1)], used: false },
        IdSpec { factors: vec![c.dp(a + 1)], base: b4, parts: vec![(3, 1)], used: false },
    ];
    Ok((specs, ids))
}

fn g3_eq_up(c: &Cat) -> Result<(Vec<Spec>, Vec<IdSpec>), DbError> {
    let a = c.a;
    let p1 = c.lan(vec![c.pt(a + 1), c.pt(a), c.pt(a)], TemperedLabel::Cusp)?;
    let p2 = c.lan(vec![c.pt(a)], TemperedLabel::GenSteinberg(c.seg(a, a + 1)?))?;
    let p3 = c.lan(vec![c.pt(a + 1), c.pt(a)], TemperedLabel::GenSteinberg(c.pt(a)))?;
    let p4 = c.lan(vec![c.seg(a, a + 1)?, c.pt(a)], TemperedLabel::Cusp)?;
    let p5 = c.lan(vec![c.seg(a, a + 1)?], TemperedLabel::GenSteinberg(c.pt(a)))?;
    let specs = vec![
        Spec {
            label: p1,
            mult: 1,
            unitary: false,
            dual: 1,
            mu: None,
            recipe: Recipe::FromInduced(
                vec![c.dp(a)],
                c.lan(vec![c.pt(a + 1), c.pt(a)], TemperedLabel::Cusp)?,
            ),
        },
        Spec {
            label: p2,
            mult: 1,
            unitary: false,
            dual: 0,
            mu: None,
            recipe: Recipe::FromInduced(vec![c.dp(a)], c.gst(a, a + 1)?),
        },
        Spec {
            label: p3,
            mult: 1,
            unitary: false,
            dual: 3,
            mu: None,
            recipe: Recipe::FromInduced(
                vec![c.ir(vec![c.pt(a), c.pt(a + 1)])],
                c.gst(a, a)?,
            ),
        },
        Spec {
            label: p4,
            mult: 1,
            unitary: false,
            dual: 2,
            mu: None,
            recipe: Recipe::FromInduced(vec![c.d(a, a + 1)?], c.lpt(a)?),
        },
        Spec {
            label: p5,
            mult: 2,
            unitary: false,
            dual: 4,
            mu: None,
            recipe: Recipe::MinusSiblings(0),
        },
    ];
    let ids = vec![
        IdSpec {
            factors: vec![c.d(a, a + 1)?],
            base: c.gst(a, a)?,
            parts: vec![(1, 1), (4, 1)],
            used: true,
        },
        IdSpec {
            factors: vec![c.ir(vec![c.pt(a), c.pt(a + 1)])],
            base: c.lpt(a)?,
            parts: vec![(0, 1), (4, 1)],
            used: false,
        },
        IdSpec {
            factors: vec![c.dp(a + 1), c.dp(a), c.dp(a)],
            base: c.cusp(),
            parts: vec![(0, 1), (1, 1), (2, 1), (3, 1), (4, 2)],
            used: false,
        },
        IdSpec {
            factors: vec![c.dp(a)],
            base: c.lan(vec![c.pt(a + 1), c.pt(a)], TemperedLabel::Cusp)?,
            parts: vec![(0, 1)],
            used: false,
        },
        IdSpec {
            factors: vec![c.dp(a)],
            base: c.gst(a, a + 1)?,
            parts: vec![(1, 1)],
            used: false,
        },
        IdSpec {
            factors: vec![c.ir(vec![c.pt(a), c.pt(a + 1)])],
            base: c.gst(a, a)?,
            parts: vec![(2, 1)],
            used: false,
        },
        IdSpec {
            factors: vec![c.d(a, a + 1)?],
            base: c.lpt(a)?,
            parts: vec![(3, 1)],
            used: false,
        },
    ];
    Ok((specs, ids))
}

fn g4_triple_eq(c: &Cat) -> Result<(Vec<Spec>, Vec<IdSpec>), DbError> {
    let a = c.a;
    let b1 = c.lan(vec![c.pt(a)], TemperedLabel::GenSteinberg(c.pt(a)))?;
    let b2 = c.lan(vec![c.pt(a), c.pt(a)], TemperedLabel::Cusp)?;
    let p1 = c.lan(vec![c.pt(a), c.pt(a), c.pt(a)], TemperedLabel::Cusp)?;
    let p2 = c.lan(vec![c.pt(a), c.pt(a)], TemperedLabel::GenSteinberg(c.pt(a)))?;
    let specs = vec![
        Spec {
            label: p1,
            mult: 1,
            unitary: false,
            dual: 1,
            mu: None,
            recipe: Recipe::FromInduced(vec![c.dp(a)], b2.clone()),
        },
        Spec {
            label: p2,
            mult: 1,
            unitary: false,
            dual: 0,
            mu: None,
            recipe: Recipe::FromInduced(vec![c.dp(a)], b1.clone()),
        },
    ];
    let ids = vec![
        IdSpec {
            factors: vec![c.dp(a), c.dp(a), c.dp(a)],
            base: c.cusp(),
            parts: vec![(0, 1), (1, 1)],
            used: false,
        },
        IdSpec { factors: vec![c.dp(a)], base: b2, parts: vec![(0, 1)], used: false },
        IdSpec { factors: vec![c.dp(a)], base: b1, parts: vec![(1, 1)], used: false },
    ];
    Ok((specs, ids))
}

fn g5_run_centered(c: &Cat) -> Result<(Vec<Spec>, Vec<IdSpec>), DbError> {
    let a = c.a;
    let p1 = c.temp(TemperedLabel::StronglyPositive(vec![c.pt(a - 1), c.seg(a, a + 1)?]))?;
    let p2 = c.lan(vec![c.pt(a + 1), c.seg(a - 1, a)?], TemperedLabel::Cusp)?;
    let p3 = c.lan(vec![c.pt(a - 1)], TemperedLabel::GenSteinberg(c.seg(a, a + 1)?))?;
    let p4 = c.lan(vec![c.pt(a + 1), c.pt(a), c.pt(a - 1)], TemperedLabel::Cusp)?;
    let p5 = c.lan(
        vec![c.pt(a + 1)],
        TemperedLabel::StronglyPositive(vec![c.pt(a - 1), c.pt(a)]),
    )?;
    let p6 = c.lan(vec![c.seg(a - 1, a + 1)?], TemperedLabel::Cusp)?;
    let p7 = c.lan(vec![c.pt(a + 1), c.pt(a - 1)], TemperedLabel::GenSteinberg(c.pt(a)))?;
    let p8 = c.lan(vec![c.seg(a, a + 1)?, c.pt(a - 1)], TemperedLabel::Cusp)?;
    let specs = vec![
        Spec {
            label: p1,
            mult: 1,
            unitary: true,
            dual: 1,
            mu: None,
            recipe: Recipe::MinusSiblings(0),
        },
        Spec { label: p2, mult: 1, unitary: true, dual: 0, mu: None, recipe: Recipe::Transport(0) },
        Spec { label: p3, mult: 1, unitary: true, dual: 3, mu: None, recipe: Recipe::Closed },
        Spec { label: p4, mult: 1, unitary: true, dual: 2, mu: None, recipe: Recipe::Transport(2) },
        Spec {
            label: p5,
            mult: 1,
            unitary: false,
            dual: 5,
            mu: None,
            recipe: Recipe::MinusSiblings(2),
        },
        Spec { label: p6, mult: 1, unitary: false, dual: 4, mu: None, recipe: Recipe::Closed },
        Spec { label: p7, mult: 1, unitary: false, dual: 7, mu: None, recipe: Recipe::Transport(7) },
        Spec {
            label: p8,
            mult: 1,
            unitary: false,
            dual: 6,
            mu: None,
            recipe: Recipe::MinusSiblings(1),
        },
    ];
    let ids = vec![
        IdSpec {
            factors: vec![c.dp(a - 1)],
            base: c.gst(a, a + 1)?,
            parts: vec![(2, 1), (0, 1)],
            used: true,
        },
        IdSpec {
            factors: vec![c.dp(a - 1)],
            base: c.lan(vec![c.seg(a, a + 1)?], TemperedLabel::Cusp)?,
            parts: vec![(7, 1), (5, 1)],
            used: true,
        },
        IdSpec {
            factors: vec![c.dp(a - 1)],
            base: c.lan(vec![c.pt(a + 1)], TemperedLabel::GenSteinberg(c.pt(a)))?,
            parts: vec![(6, 1), (4, 1)],
            used: true,
        },
        IdSpec {
            factors: vec![c.dp(a - 1)],
            base: c.lan(vec![c.pt(a + 1), c.pt(a)], TemperedLabel::Cusp)?,
            parts: vec![(3, 1), (1, 1)],
            used: false,
        },
        IdSpec {
            factors: vec![c.d(a - 1, a + 1)?],
            base: c.cusp(),
            parts: vec![(5, 1), (2, 1)],
            used: false,
        },
        IdSpec {
            factors: vec![c.dp(a + 1), c.dp(a), c.dp(a - 1)],
            base: c.cusp(),
            parts: (0..8).map(|i| (i, 1)).collect(),
            used: false,
        },
    ];
    Ok((specs, ids))
}

fn g6_down_eq(c: &Cat) -> Result<(Vec<Spec>, Vec<IdSpec>), DbError> {
    let a = c.a;
    let p0 = c.lan(vec![c.pt(a), c.pt(a - 1)], TemperedLabel::GenSteinberg(c.pt(a)))?;
    let sp = c.temp(TemperedLabel::StronglyPositive(vec![c.pt(a - 1), c.pt(a)]))?;
    let p1 = c.lan(
        vec![c.pt(a)],
        TemperedLabel::StronglyPositive(vec![c.pt(a - 1), c.pt(a)]),
    )?;
    let p2 = c.lan(vec![c.pt(a), c.seg(a - 1, a)?], TemperedLabel::Cusp)?;
    let p3 = c.lan(vec![c.seg(a - 1, a)?], TemperedLabel::GenSteinberg(c.pt(a)))?;
    let p4 = c.lan(vec![c.pt(a), c.pt(a), c.pt(a - 1)], TemperedLabel::Cusp)?;
    let mu0 = {
        let mut m = FormalSum::from_term(BiTerm::unit(p0.clone()));
        m.add_term(
            c.t(
                c.dp(-a),
                &c.lan(vec![c.pt(a - 1)], TemperedLabel::GenSteinberg(c.pt(a)))?,
            ),
            1,
        );
        m.add_term(
            c.t(c.dp(a), &c.lan(vec![c.pt(a), c.pt(a - 1)], TemperedLabel::Cusp)?),
            1,
        );
        m.add_term(c.t(c.ir(vec![c.pt(-a), c.pt(a)]), &c.lpt(a - 1)?), 1);
        m.add_term(c.t(c.ir(vec![c.pt(-a), c.pt(-a + 1)]), &c.gst(a, a)?), 1);
        m.add_term(c.t(c.d(a - 1, a)?, &c.lpt(a)?), 1);
        m.add_term(c.t(c.ir(vec![c.pt(-a), c.pt(-a + 1), c.pt(a)]), &c.cusp()), 1);
        m.add_term(c.t(c.ir(vec![c.pt(-a), c.seg(a - 1, a)?]), &c.cusp()), 1);
        m
    };
    let specs = vec![
        Spec { label: p0, mult: 2, unitary: true, dual: 0, mu: Some(mu0), recipe: Recipe::FromMu },
        Spec {
            label: p1,
            mult: 1,
            unitary: false,
            dual: 2,
            mu: None,
            recipe: Recipe::FromInduced(vec![c.dp(a)], sp.clone()),
        },
        Spec {
            label: p2,
            mult: 1,
            unitary: false,
            dual: 1,
            mu: None,
            recipe: Recipe::FromInduced(
                vec![c.dp(a)],
                c.lan(vec![c.seg(a - 1, a)?], TemperedLabel::Cusp)?,
            ),
        },
        Spec {
            label: p3,
            mult: 1,
            unitary: false,
            dual: 4,
            mu: None,
            recipe: Recipe::FromInduced(vec![c.d(a - 1, a)?], c.gst(a, a)?),
        },
        Spec {
            label: p4,
            mult: 1,
            unitary: false,
            dual: 3,
            mu: None,
            recipe: Recipe::FromInduced(vec![c.ir(vec![c.pt(a - 1), c.pt(a)])], c.lpt(a)?),
        },
    ];
    let ids = vec![
        IdSpec {
            factors: vec![c.d(a - 1, a)?],
            base: c.lpt(a)?,
            parts: vec![(2, 1), (0, 1)],
            used: false,
        },
        IdSpec {
            factors: vec![c.ir(vec![c.pt(a - 1), c.pt(a)])],
            base: c.gst(a, a)?,
            parts: vec![(1, 1), (0, 1)],
            used: false,
        },
        IdSpec {
            factors: vec![c.dp(a)],
            base: c.lan(vec![c.pt(a - 1)], TemperedLabel::GenSteinberg(c.pt(a)))?,
            parts: vec![(0, 1), (3, 1)],
            used: false,
        },
        IdSpec {
            factors: vec![c.dp(a)],
            base: c.lan(vec![c.pt(a), c.pt(a - 1)], TemperedLabel::Cusp)?,
            parts: vec![(0, 1), (4, 1)],
            used: false,
        },
        IdSpec {
            factors: vec![c.dp(a), c.dp(a), c.dp(a - 1)],
            base: c.cusp(),
            parts: vec![(0, 2), (1, 1), (2, 1), (3, 1), (4, 1)],
            used: false,
        },
    ];
    Ok((specs, ids))
}

fn g7_eq_down(c: &Cat) -> Result<(Vec<Spec>, Vec<IdSpec>), DbError> {
    let a = c.a;
    let b1 = c.lan(vec![c.pt(a), c.pt(a - 1)], TemperedLabel::Cusp)?;
    let b2 = c.lan(vec![c.seg(a - 1, a)?], TemperedLabel::Cusp)?;
    let b3 = c.lan(vec![c.pt(a - 1)], TemperedLabel::GenSteinberg(c.pt(a)))?;
    let b4 = c.temp(TemperedLabel::StronglyPositive(vec![c.pt(a - 1), c.pt(a)]))?;
    let p1 = c.lan(vec![c.pt(a), c.pt(a - 1), c.pt(a - 1)], TemperedLabel::Cusp)?;
    let p2 = c.lan(vec![c.seg(a - 1, a)?, c.pt(a - 1)], TemperedLabel::Cusp)?;
    let p3 = c.lan(vec![c.pt(a - 1), c.pt(a - 1)], TemperedLabel::GenSteinberg(c.pt(a)))?;
    let p4 = c.lan(
        vec![c.pt(a - 1)],
        TemperedLabel::StronglyPositive(vec![c.pt(a - 1), c.pt(a)]),
    )?;
    let specs = vec![
        Spec {
            label: p1,
            mult: 1,
            unitary: false,
            dual: 2,
            mu: None,
            recipe: Recipe::FromInduced(vec![c.dp(a - 1)], b1.clone()),
        },
        Spec {
            label: p2,
            mult: 1,
            unitary: false,
            dual: 3,
            mu: None,
            recipe: Recipe::FromInduced(vec![c.dp(a - 1)], b2.clone()),
        },
        Spec {
            label: p3,
            mult: 1,
            unitary: false,
            dual: 0,
            mu: None,
            recipe: Recipe::FromInduced(vec![c.dp(a - 1)], b3.clone()),
        },
        Spec {
            label: p4,
            mult: 1,
            unitary: false,
            dual: 1,
            mu: None,
            recipe: Recipe::FromInduced(vec![c.dp(a - 1)], b4.clone()),
        },
    ];
    let ids = vec![
        IdSpec {
            factors: vec![c.dp(a - 1), c.dp(a - 1)],
            base: c.lpt(a)?,
            parts: vec![(0, 1), (1, 1)],
            used: false,
        },
        IdSpec {
            factors: vec![c.dp(a - 1), c.dp(a - 1)],
            base: c.gst(a, a)?,
            parts: vec![(2, 1), (3, 1)],
            used: false,
        },
        IdSpec {
            factors: vec![c.dp(a), c.dp(a - 1), c.dp(a - 1)],
            base: c.cusp(),
            parts: vec![(0, 1), (1, 1), (2, 1), (3, 1)],
            used: false,
        },
        IdSpec { factors: vec![c.dp(a - 1)], base: b1, parts: vec![(0, 1)], used: false },
        IdSpec { factors: vec![c.dp(a - 1)], base: b4, parts: vec![(3, 1)], used: false },
    ];
    Ok((specs, ids))
}

fn g8_run_down(c: &Cat) -> Result<(Vec<Spec>, Vec<IdSpec>), DbError> {
    let a = c.a;
    let p1 = c.temp(TemperedLabel::StronglyPositive(vec![
        c.pt(a - 2),
        c.pt(a - 1),
        c.pt(a),
    ]))?;
    let p2 = c.lan(
        vec![c.pt(a - 2)],
        TemperedLabel::StronglyPositive(vec![c.pt(a - 1), c.pt(a)]),
    )?;
    let p3 = c.lan(vec![c.pt(a - 1), c.pt(a - 2)], TemperedLabel::GenSteinberg(c.pt(a)))?;
    let p4 = c.lan(vec![c.seg(a - 2, a - 1)?], TemperedLabel::GenSteinberg(c.pt(a)))?;
    let p5 = c.lan(vec![c.pt(a), c.pt(a - 1), c.pt(a - 2)], TemperedLabel::Cusp)?;
    let p6 = c.lan(vec![c.pt(a), c.seg(a - 2, a - 1)?], TemperedLabel::Cusp)?;
    let p7 = c.lan(vec![c.seg(a - 1, a)?, c.pt(a - 2)], TemperedLabel::Cusp)?;
    let p8 = c.lan(vec![c.seg(a - 2, a)?], TemperedLabel::Cusp)?;
    let specs = vec![
        Spec { label: p1, mult: 1, unitary: true, dual: 7, mu: None, recipe: Recipe::Transport(7) },
        Spec {
            label: p2,
            mult: 1,
            unitary: true,
            dual: 6,
            mu: None,
            recipe: Recipe::MinusSiblings(0),
        },
        Spec {
            label: p3,
            mult: 1,
            unitary: true,
            dual: 5,
            mu: None,
            recipe: Recipe::MinusSiblings(1),
        },
        Spec { label: p4, mult: 1, unitary: true, dual: 4, mu: None, recipe: Recipe::Closed },
        Spec { label: p5, mult: 1, unitary: true, dual: 3, mu: None, recipe: Recipe::Transport(3) },
        Spec { label: p6, mult: 1, unitary: true, dual: 2, mu: None, recipe: Recipe::Transport(2) },
        Spec { label: p7, mult: 1, unitary: true, dual: 1, mu: None, recipe: Recipe::Transport(1) },
        Spec { label: p8, mult: 1, unitary: true, dual: 0, mu: None, recipe: Recipe::Closed },
    ];
    let ids = vec![
        IdSpec {
            factors: vec![c.dp(a - 2)],
            base: c.temp(TemperedLabel::StronglyPositive(vec![c.pt(a - 1), c.pt(a)]))?,
            parts: vec![(0, 1), (1, 1)],
            used: true,
        },
        IdSpec {
            factors: vec![c.dp(a - 2)],
            base: c.lan(vec![c.pt(a - 1)], TemperedLabel::GenSteinberg(c.pt(a)))?,
            parts: vec![(2, 1), (3, 1)],
            used: true,
        },
        IdSpec {
            factors: vec![c.dp(a - 2)],
            base: c.lan(vec![c.seg(a - 1, a)?], TemperedLabel::Cusp)?,
            parts: vec![(6, 1), (7, 1)],
            used: false,
        },
        IdSpec {
            factors: vec![c.dp(a - 2)],
            base: c.lan(vec![c.pt(a), c.pt(a - 1)], TemperedLabel::Cusp)?,
            parts: vec![(4, 1), (5, 1)],
            used: false,
        },
        IdSpec {
            factors: vec![c.dp(a), c.dp(a - 1), c.dp(a - 2)],
            base: c.cusp(),
            parts: (0..8).map(|i| (i, 1)).collect(),
            used: false,
        },
    ];
    Ok((specs, ids))
}

// ---------------------------------------------------------------------------
// Corank three, special alpha.

fn s1_run_down_two(c: &Cat) -> Result<(Vec<Spec>, Vec<IdSpec>), DbError> {
    let z = HalfInt::ZERO;
    let one = HalfInt::ONE;
    let two = HalfInt::from_doubled(4);
    let tind0 = TemperedLabel::TemperedInd(
        Multisegment::new(vec![c.pt(z)]),
        Box::new(TemperedLabel::Cusp),
    );
    let sp12 = TemperedLabel::StronglyPositive(vec![c.pt(one), c.pt(two)]);
    let p1 = c.lan(vec![c.seg(one, two)?], tind0.clone())?;
    let p2 = c.temp(TemperedLabel::TauSigned(c.pt(z), Sign::Plus, Box::new(sp12.clone())))?;
    let p3 = c.lan(vec![c.seg(z, two)?], TemperedLabel::Cusp)?;
    let p4 = c.temp(TemperedLabel::TauSigned(c.pt(z), Sign::Minus, Box::new(sp12.clone())))?;
    let p5 = c.lan(
        vec![c.pt(one)],
        TemperedLabel::TemperedInd(
            Multisegment::new(vec![c.pt(z)]),
            Box::new(TemperedLabel::GenSteinberg(c.pt(two))),
        ),
    )?;
    let p6 = c.lan(vec![c.pt(two), c.seg(z, one)?], TemperedLabel::Cusp)?;
    let p7 = c.lan(vec![c.seg(z, one)?], TemperedLabel::GenSteinberg(c.pt(two)))?;
    let p8 = c.lan(vec![c.pt(two), c.pt(one)], tind0)?;
    let sgl2 = {
        let mut s = FormalSum::zero();
        s.add_term(c.ir(vec![c.seg(z, one)?, c.pt(two)]), 2);
        s.add_term(c.ir(vec![c.pt(z), c.pt(one), c.pt(two)]), 1);
        s
    };
    let sgl4 = FormalSum::from_term(c.ir(vec![c.pt(z), c.pt(one), c.pt(two)]));
    let sgl7 = {
        let mut s = FormalSum::zero();
        s.add_term(c.ir(vec![c.seg(z, two)?]), 2);
        s.add_term(c.ir(vec![c.pt(z), c.seg(one, two)?]), 1);
        s.add_term(c.ir(vec![c.seg(-one, z)?, c.pt(two)]), 1);
        s
    };
    let specs = vec![
        Spec {
            label: p1,
            mult: 1,
            unitary: true,
            dual: 1,
            mu: None,
            recipe: Recipe::MinusSiblings(0),
        },
        Spec {
            label: p2,
            mult: 1,
            unitary: true,
            dual: 0,
            mu: None,
            recipe: Recipe::StoredGl(sgl2),
        },
        Spec { label: p3, mult: 1, unitary: true, dual: 3, mu: None, recipe: Recipe::Closed },
        Spec {
            label: p4,
            mult: 1,
            unitary: true,
            dual: 2,
            mu: None,
            recipe: Recipe::StoredGl(sgl4),
        },
        Spec {
            label: p5,
            mult: 1,
            unitary: true,
            dual: 5,
            mu: None,
            recipe: Recipe::MinusSiblings(1),
        },
        Spec { label: p6, mult: 1, unitary: true, dual: 4, mu: None, recipe: Recipe::Transport(4) },
        Spec {
            label: p7,
            mult: 1,
            unitary: true,
            dual: 7,
            mu: None,
            recipe: Recipe::StoredGl(sgl7),
        },
        Spec { label: p8, mult: 1, unitary: true, dual: 6, mu: None, recipe: Recipe::Transport(6) },
    ];
    let ids = vec![
        IdSpec {
            factors: vec![c.dp(z)],
            base: c.lan(vec![c.seg(one, two)?], TemperedLabel::Cusp)?,
            parts: vec![(0, 1), (2, 1)],
            used: true,
        },
        IdSpec {
            factors: vec![c.dp(z)],
            base: c.lan(vec![c.pt(one)], TemperedLabel::GenSteinberg(c.pt(two)))?,
            parts: vec![(4, 1), (6, 1)],
            used: true,
        },
        IdSpec {
            factors: vec![c.dp(z)],
            base: c.lan(vec![c.pt(two), c.pt(one)], TemperedLabel::Cusp)?,
            parts: vec![(7, 1), (5, 1)],
            used: false,
        },
        IdSpec {
            factors: vec![c.dp(z)],
            base: c.temp(TemperedLabel::StronglyPositive(vec![c.pt(one), c.pt(two)]))?,
            parts: vec![(1, 1), (3, 1)],
            used: false,
        },
        IdSpec {
            factors: vec![c.dp(two), c.dp(one), c.dp(z)],
            base: c.cusp(),
            parts: (0..8).map(|i| (i, 1)).collect(),
            used: false,
        },
    ];
    Ok((specs, ids))
}

fn s2_run_centered_one(c: &Cat) -> Result<(Vec<Spec>, Vec<IdSpec>), DbError> {
    let z = HalfInt::ZERO;
    let one = HalfInt::ONE;
    let two = HalfInt::from_doubled(4);
    let tind0 = TemperedLabel::TemperedInd(
        Multisegment::new(vec![c.pt(z)]),
        Box::new(TemperedLabel::Cusp),
    );
    let p1 = c.lan(vec![c.pt(two), c.pt(one)], tind0.clone())?;
    let p2 = c.temp(TemperedLabel::TauSigned(
        c.pt(z),
        Sign::Plus,
        Box::new(TemperedLabel::GenSteinberg(c.seg(one, two)?)),
    ))?;
    let p3 = c.lan(vec![c.pt(two), c.seg(z, one)?], TemperedLabel::Cusp)?;
    let p4 = c.temp(TemperedLabel::TauSigned(
        c.pt(z),
        Sign::Minus,
        Box::new(TemperedLabel::GenSteinberg(c.seg(one, two)?)),
    ))?;
    let p5 = c.lan(vec![c.seg(z, two)?], TemperedLabel::Cusp)?;
    let p6 = c.lan(
        vec![c.pt(two)],
        TemperedLabel::TauSigned(c.pt(z), Sign::Minus, Box::new(TemperedLabel::GenSteinberg(c.pt(one)))),
    )?;
    let p7 = c.lan(vec![c.seg(one, two)?], tind0)?;
    let p8 = c.lan(
        vec![c.pt(two)],
        TemperedLabel::TauSigned(c.pt(z), Sign::Plus, Box::new(TemperedLabel::GenSteinberg(c.pt(one)))),
    )?;
    let specs = vec![
        Spec { label: p1, mult: 1, unitary: true, dual: 1, mu: None, recipe: Recipe::Transport(1) },
        Spec { label: p2, mult: 1, unitary: true, dual: 0, mu: None, recipe: Recipe::Closed },
        Spec {
            label: p3,
            mult: 1,
            unitary: true,
            dual: 3,
            mu: None,
            recipe: Recipe::MinusSiblings(1),
        },
        Spec {
            label: p4,
            mult: 1,
            unitary: true,
            dual: 2,
            mu: None,
            recipe: Recipe::MinusSiblings(0),
        },
        Spec { label: p5, mult: 1, unitary: false, dual: 5, mu: None, recipe: Recipe::Closed },
        Spec { label: p6, mult: 1, unitary: false, dual: 4, mu: None, recipe: Recipe::Transport(4) },
        Spec {
            label: p7,
            mult: 1,
            unitary: false,
            dual: 7,
            mu: None,
            recipe: Recipe::MinusSiblings(2),
        },
        Spec { label: p8, mult: 1, unitary: false, dual: 6, mu: None, recipe: Recipe::Transport(6) },
    ];
    let ids = vec![
        IdSpec {
            factors: vec![c.dp(z)],
            base: c.gst(one, two)?,
            parts: vec![(1, 1), (3, 1)],
            used: true,
        },
        IdSpec {
            factors: vec![c.dp(z)],
            base: c.lan(vec![c.pt(two), c.pt(one)], TemperedLabel::Cusp)?,
            parts: vec![(0, 1), (2, 1)],
            used: true,
        },
        IdSpec {
            factors: vec![c.dp(z)],
            base: c.lan(vec![c.seg(one, two)?], TemperedLabel::Cusp)?,
            parts: vec![(6, 1), (4, 1)],
            used: true,
        },
        IdSpec {
            factors: vec![c.dp(z)],
            base: c.lan(vec![c.pt(two)], TemperedLabel::GenSteinberg(c.pt(one)))?,
            parts: vec![(7, 1), (5, 1)],
            used: false,
        },
        IdSpec {
            factors: vec![c.d(z, two)?],
            base: c.cusp(),
            parts: vec![(4, 1), (1, 1)],
            used: false,
        },
        IdSpec {
            factors: vec![c.dp(two), c.dp(one), c.dp(z)],
            base: c.cusp(),
            parts: (0..8).map(|i| (i, 1)).collect(),
            used: false,
        },
    ];
    Ok((specs, ids))
}

fn s3_down_eq_one(c: &Cat) -> Result<(Vec<Spec>, Vec<IdSpec>), DbError> {
    let z = HalfInt::ZERO;
    let one = HalfInt::ONE;
    let tau = |sign: Sign| {
        TemperedLabel::TauSigned(
            c.pt(z),
            sign,
            Box::new(TemperedLabel::GenSteinberg(c.pt(one))),
        )
    };
    let tind0 = TemperedLabel::TemperedInd(
        Multisegment::new(vec![c.pt(z)]),
        Box::new(TemperedLabel::Cusp),
    );
    let p1 = c.lan(vec![c.seg(z, one)?, c.pt(one)], TemperedLabel::Cusp)?;
    let p2 = c.lan(vec![c.pt(one), c.pt(one)], tind0.clone())?;
    let p3 = c.lan(vec![c.seg(z, one)?], TemperedLabel::GenSteinberg(c.pt(one)))?;
    let p4p = c.lan(vec![c.pt(one)], tau(Sign::Plus))?;
    let p4m = c.lan(vec![c.pt(one)], tau(Sign::Minus))?;
    let p5p = c.temp(TemperedLabel::SegSigned(c.seg(-one, one)?, Sign::Plus))?;
    let p5m = c.temp(TemperedLabel::SegSigned(c.seg(-one, one)?, Sign::Minus))?;
    let specs = vec![
        Spec {
            label: p1,
            mult: 2,
            unitary: true,
            dual: 2,
            mu: None,
            recipe: Recipe::MinusSiblings(0),
        },
        Spec {
            label: p2,
            mult: 1,
            unitary: true,
            dual: 5,
            mu: None,
            recipe: Recipe::MinusSiblings(1),
        },
        Spec { label: p3, mult: 2, unitary: true, dual: 0, mu: None, recipe: Recipe::Transport(0) },
        Spec {
            label: p4p,
            mult: 2,
            unitary: true,
            dual: 3,
            mu: None,
            recipe: Recipe::MinusSiblings(3),
        },
        Spec {
            label: p4m,
            mult: 1,
            unitary: true,
            dual: 6,
            mu: None,
            recipe: Recipe::MinusSiblings(2),
        },
        Spec { label: p5p, mult: 1, unitary: true, dual: 1, mu: None, recipe: Recipe::Closed },
        Spec { label: p5m, mult: 1, unitary: true, dual: 4, mu: None, recipe: Recipe::Closed },
    ];
    let ids = vec![
        IdSpec {
            factors: vec![c.dp(one)],
            base: c.lan(vec![c.seg(z, one)?], TemperedLabel::Cusp)?,
            parts: vec![(6, 1), (0, 1)],
            used: true,
        },
        IdSpec {
            factors: vec![c.ir(vec![c.pt(-one), c.pt(z), c.pt(one)])],
            base: c.cusp(),
            parts: vec![(1, 1), (4, 1)],
            used: true,
        },
        IdSpec {
            factors: vec![c.dp(one)],
            base: c.temp(tau(Sign::Minus))?,
            parts: vec![(4, 1), (2, 1)],
            used: true,
        },
        IdSpec {
            factors: vec![c.dp(one)],
            base: c.temp(tau(Sign::Plus))?,
            parts: vec![(3, 1), (2, 1), (5, 1)],
            used: true,
        },
        IdSpec {
            factors: vec![c.d(-one, one)?],
            base: c.cusp(),
            parts: vec![(5, 1), (6, 1)],
            used: false,
        },
        IdSpec {
            factors: vec![c.ir(vec![c.seg(z, one)?, c.pt(-one)])],
            base: c.cusp(),
            parts: vec![(0, 1), (2, 1), (3, 1)],
            used: false,
        },
        IdSpec {
            factors: vec![c.dp(one)],
            base: c.lan(vec![c.pt(one)], tind0)?,
            parts: vec![(3, 1), (0, 1), (1, 1)],
            used: false,
        },
        IdSpec {
            factors: vec![c.dp(one), c.dp(one), c.dp(z)],
            base: c.cusp(),
            parts: vec![(0, 2), (1, 1), (2, 2), (3, 2), (4, 1), (5, 1), (6, 1)],
            used: false,
        },
    ];
    Ok((specs, ids))
}

fn s4_eq_down_one(c: &Cat) -> Result<(Vec<Spec>, Vec<IdSpec>), DbError> {
    let z = HalfInt::ZERO;
    let one = HalfInt::ONE;
    let ms0 = Multisegment::new(vec![c.pt(z)]);
    let ms00 = Multisegment::new(vec![c.pt(z), c.pt(z)]);
    let tau = |sign: Sign| {
        TemperedLabel::TauSigned(
            c.pt(z),
            sign,
            Box::new(TemperedLabel::GenSteinberg(c.pt(one))),
        )
    };
    let b_a = c.lan(vec![c.seg(z, one)?], TemperedLabel::Cusp)?;
    let b_b = c.lan(
        vec![c.pt(one)],
        TemperedLabel::TemperedInd(ms0.clone(), Box::new(TemperedLabel::Cusp)),
    )?;
    let b_cp = c.temp(tau(Sign::Plus))?;
    let b_cm = c.temp(tau(Sign::Minus))?;
    let pa = c.lan(
        vec![c.seg(z, one)?],
        TemperedLabel::TemperedInd(ms0.clone(), Box::new(TemperedLabel::Cusp)),
    )?;
    let pb = c.lan(
        vec![c.pt(one)],
        TemperedLabel::TemperedInd(ms00, Box::new(TemperedLabel::Cusp)),
    )?;
    let pc = c.temp(TemperedLabel::TemperedInd(ms0.clone(), Box::new(tau(Sign::Plus))))?;
    let pd = c.temp(TemperedLabel::TemperedInd(ms0, Box::new(tau(Sign::Minus))))?;
    let specs = vec![
        Spec {
            label: pa,
            mult: 1,
            unitary: true,
            dual: 3,
            mu: None,
            recipe: Recipe::FromInduced(vec![c.dp(z)], b_a.clone()),
        },
        Spec {
            label: pb,
            mult: 1,
            unitary: true,
            dual: 2,
            mu: None,
            recipe: Recipe::FromInduced(vec![c.dp(z)], b_b.clone()),
        },
        Spec { label: pc, mult: 1, unitary: true, dual: 1, mu: None, recipe: Recipe::Closed },
        Spec {
            label: pd,
            mult: 1,
            unitary: true,
            dual: 0,
            mu: None,
            recipe: Recipe::FromInduced(vec![c.dp(z)], b_cm.clone()),
        },
    ];
    let ids = vec![
        IdSpec {
            factors: vec![c.dp(one), c.dp(z), c.dp(z)],
            base: c.cusp(),
            parts: vec![(0, 1), (1, 1), (2, 1), (3, 1)],
            used: false,
        },
        IdSpec { factors: vec![c.dp(z)], base: b_a, parts: vec![(0, 1)], used: false },
        IdSpec { factors: vec![c.dp(z)], base: b_b, parts: vec![(1, 1)], used: false },
        IdSpec { factors: vec![c.dp(z)], base: b_cp, parts: vec![(2, 1)], used: false },
        IdSpec { factors: vec![c.dp(z)], base: b_cm, parts: vec![(3, 1)], used: false },
    ];
    Ok((specs, ids))
}

fn s5_run_down_threehalves(c: &Cat) -> Result<(Vec<Spec>, Vec<IdSpec>), DbError> {
    let h = HalfInt::HALF;
    let th = HalfInt::from_doubled(3);
    let p1 = c.lan(vec![c.pt(th), c.pt(h), c.pt(h)], TemperedLabel::Cusp)?;
    let p2 = c.temp(TemperedLabel::TauSigned(
        c.seg(-h, h)?,
        Sign::Plus,
        Box::new(TemperedLabel::GenSteinberg(c.pt(th))),
    ))?;
    let p3 = c.lan(vec![c.seg(h, th)?, c.pt(h)], TemperedLabel::Cusp)?;
    let p4 = c.temp(TemperedLabel::TauSigned(
        c.seg(-h, h)?,
        Sign::Minus,
        Box::new(TemperedLabel::GenSteinberg(c.pt(th))),
    ))?;
    let p5 = c.lan(
        vec![c.pt(th)],
        TemperedLabel::TemperedInd(
            Multisegment::new(vec![c.seg(-h, h)?]),
            Box::new(TemperedLabel::Cusp),
        ),
    )?;
    let p6 = c.lan(vec![c.pt(h), c.pt(h)], TemperedLabel::GenSteinberg(c.pt(th)))?;
    let p7 = c.lan(vec![c.seg(-h, th)?], TemperedLabel::Cusp)?;
    let p8 = c.lan(
        vec![c.pt(h)],
        TemperedLabel::StronglyPositive(vec![c.pt(h), c.pt(th)]),
    )?;
    let specs = vec![
        Spec {
            label: p1,
            mult: 1,
            unitary: true,
            dual: 1,
            mu: None,
            recipe: Recipe::MinusSiblings(2),
        },
        Spec { label: p2, mult: 1, unitary: true, dual: 0, mu: None, recipe: Recipe::Closed },
        Spec { label: p3, mult: 1, unitary: true, dual: 3, mu: None, recipe: Recipe::Transport(3) },
        Spec {
            label: p4,
            mult: 1,
            unitary: true,
            dual: 2,
            mu: None,
            recipe: Recipe::MinusSiblings(0),
        },
        Spec { label: p5, mult: 1, unitary: true, dual: 5, mu: None, recipe: Recipe::Transport(5) },
        Spec {
            label: p6,
            mult: 1,
            unitary: true,
            dual: 4,
            mu: None,
            recipe: Recipe::MinusSiblings(1),
        },
        Spec { label: p7, mult: 1, unitary: true, dual: 7, mu: None, recipe: Recipe::Closed },
        Spec { label: p8, mult: 1, unitary: true, dual: 6, mu: None, recipe: Recipe::Transport(6) },
    ];
    let ids = vec![
        IdSpec {
            factors: vec![c.d(-h, h)?],
            base: c.gst(th, th)?,
            parts: vec![(1, 1), (3, 1)],
            used: true,
        },
        IdSpec {
            factors: vec![c.ir(vec![c.pt(-h), c.pt(h)])],
            base: c.gst(th, th)?,
            parts: vec![(7, 1), (5, 1)],
            used: true,
        },
        IdSpec {
            factors: vec![c.ir(vec![c.pt(-h), c.pt(h)])],
            base: c.lpt(th)?,
            parts: vec![(0, 1), (2, 1)],
            used: true,
        },
        IdSpec {
            factors: vec![c.d(-h, h)?],
            base: c.lpt(th)?,
            parts: vec![(4, 1), (6, 1)],
            used: false,
        },
        IdSpec {
            factors: vec![c.dp(th), c.dp(h), c.dp(h)],
            base: c.cusp(),
            parts: (0..8).map(|i| (i, 1)).collect(),
            used: false,
        },
    ];
    Ok((specs, ids))
}

fn s6_eq_up_half(c: &Cat) -> Result<(Vec<Spec>, Vec<IdSpec>), DbError> {
    let h = HalfInt::HALF;
    let th = HalfInt::from_doubled(3);
    let p1 = c.lan(vec![c.pt(th), c.pt(h), c.pt(h)], TemperedLabel::Cusp)?;
    let p2 = c.temp(TemperedLabel::SegSigned(c.seg(-h, th)?, Sign::Plus))?;
    let p3 = c.lan(vec![c.seg(-h, th)?], TemperedLabel::Cusp)?;
    let p4 = c.lan(vec![c.seg(h, th)?], TemperedLabel::GenSteinberg(c.pt(h)))?;
    let p5 = c.lan(vec![c.pt(th), c.pt(h)], TemperedLabel::GenSteinberg(c.pt(h)))?;
    let p6 = c.temp(TemperedLabel::SegSigned(c.seg(-h, th)?, Sign::Minus))?;
    let p7 = c.lan(vec![c.pt(h)], TemperedLabel::GenSteinberg(c.seg(h, th)?))?;
    let p8 = c.lan(vec![c.pt(th)], TemperedLabel::SegSigned(c.seg(-h, h)?, Sign::Minus))?;
    let p9 = c.lan(vec![c.seg(h, th)?, c.pt(h)], TemperedLabel::Cusp)?;
    let p10 = c.lan(vec![c.pt(th)], TemperedLabel::SegSigned(c.seg(-h, h)?, Sign::Plus))?;
    let mu9 = {
        let mut m = FormalSum::from_term(BiTerm::unit(p9.clone()));
        m.add_term(
            c.t(c.dp(-h), &c.lan(vec![c.pt(th), c.pt(h)], TemperedLabel::Cusp)?),
            1,
        );
        m.add_term(
            c.t(c.dp(-h), &c.lan(vec![c.seg(h, th)?], TemperedLabel::Cusp)?),
            2,
        );
        m.add_term(
            c.t(c.dp(th), &c.lan(vec![c.pt(h), c.pt(h)], TemperedLabel::Cusp)?),
            1,
        );
        m.add_term(c.t(c.dp(-h), &c.gst(h, th)?), 1);
        m.add_term(c.t(c.ir(vec![c.pt(-h), c.pt(th)]), &c.lpt(h)?), 2);
        m.add_term(c.t(c.d(-th, -h)?, &c.lpt(h)?), 1);
        m.add_term(c.t(c.ir(vec![c.pt(-h), c.pt(-h)]), &c.lpt(th)?), 1);
        m.add_term(c.t(c.ir(vec![c.pt(-h), c.pt(th)]), &c.gst(h, h)?), 1);
        m.add_term(c.t(c.ir(vec![c.pt(-h), c.seg(h, th)?]), &c.cusp()), 1);
        m.add_term(c.t(c.ir(vec![c.pt(-h), c.pt(-h), c.pt(th)]), &c.cusp()), 1);
        m.add_term(c.t(c.ir(vec![c.pt(-h), c.seg(-th, -h)?]), &c.cusp()), 1);
        m
    };
    let specs = vec![
        Spec {
            label: p1,
            mult: 1,
            unitary: true,
            dual: 1,
            mu: None,
            recipe: Recipe::MinusSiblings(1),
        },
        Spec { label: p2, mult: 1, unitary: true, dual: 0, mu: None, recipe: Recipe::Closed },
        Spec { label: p3, mult: 2, unitary: true, dual: 3, mu: None, recipe: Recipe::Closed },
        Spec { label: p4, mult: 2, unitary: true, dual: 2, mu: None, recipe: Recipe::Transport(2) },
        Spec {
            label: p5,
            mult: 1,
            unitary: true,
            dual: 5,
            mu: None,
            recipe: Recipe::MinusSiblings(2),
        },
        Spec { label: p6, mult: 1, unitary: true, dual: 4, mu: None, recipe: Recipe::Closed },
        Spec {
            label: p7,
            mult: 1,
            unitary: true,
            dual: 7,
            mu: None,
            recipe: Recipe::MinusSiblings(0),
        },
        Spec { label: p8, mult: 1, unitary: true, dual: 6, mu: None, recipe: Recipe::Transport(6) },
        Spec { label: p9, mult: 1, unitary: false, dual: 9, mu: Some(mu9), recipe: Recipe::FromMu },
        Spec {
            label: p10,
            mult: 1,
            unitary: false,
            dual: 8,
            mu: None,
            recipe: Recipe::Transport(8),
        },
    ];
    let ids = vec![
        IdSpec {
            factors: vec![c.dp(h)],
            base: c.gst(h, th)?,
            parts: vec![(6, 1), (1, 1)],
            used: true,
        },
        IdSpec {
            factors: vec![c.dp(h)],
            base: c.lan(vec![c.pt(th), c.pt(h)], TemperedLabel::Cusp)?,
            parts: vec![(7, 1), (0, 1)],
            used: true,
        },
        IdSpec {
            factors: vec![c.dp(th), c.dp(h), c.dp(h)],
            base: c.cusp(),
            parts: vec![
                (0, 1),
                (1, 1),
                (2, 2),
                (3, 2),
                (4, 1),
                (5, 1),
                (6, 1),
                (7, 1),
                (8, 1),
                (9, 1),
            ],
            used: true,
        },
        IdSpec {
            factors: vec![c.d(-h, th)?],
            base: c.cusp(),
            parts: vec![(1, 1), (5, 1), (2, 1)],
            used: false,
        },
        IdSpec {
            factors: vec![c.d(h, th)?],
            base: c.lpt(h)?,
            parts: vec![(8, 1), (5, 1)],
            used: false,
        },
        IdSpec {
            factors: vec![c.ir(vec![c.seg(-h, h)?, c.pt(th)])],
            base: c.cusp(),
            parts: vec![(7, 1), (9, 1), (2, 1)],
            used: false,
        },
        IdSpec {
            factors: vec![c.ir(vec![c.pt(-h), c.seg(h, th)?])],
            base: c.cusp(),
            parts: vec![(3, 1), (6, 1), (8, 1)],
            used: false,
        },
        IdSpec {
            factors: vec![c.dp(th), c.d(-h, h)?],
            base: c.cusp(),
            parts: vec![(1, 1), (2, 2), (5, 1), (7, 1), (9, 1)],
            used: false,
        },
    ];
    Ok((specs, ids))
}

fn s7_triple_half(c: &Cat) -> Result<(Vec<Spec>, Vec<IdSpec>), DbError> {
    let h = HalfInt::HALF;
    let segsym = c.seg(-h, h)?;
    let p1 = c.temp(TemperedLabel::TemperedInd(
        Multisegment::new(vec![segsym]),
        Box::new(TemperedLabel::GenSteinberg(c.pt(h))),
    ))?;
    let p2 = c.lan(vec![c.pt(h)], TemperedLabel::SegSigned(segsym, Sign::Minus))?;
    let p3 = c.lan(vec![c.pt(h), c.pt(h)], TemperedLabel::GenSteinberg(c.pt(h)))?;
    let p4 = c.lan(vec![c.pt(h), c.pt(h), c.pt(h)], TemperedLabel::Cusp)?;
    let p5 = c.lan(vec![c.pt(h)], TemperedLabel::SegSigned(segsym, Sign::Plus))?;
    let sseg_m = c.temp(TemperedLabel::SegSigned(segsym, Sign::Minus))?;
    let sseg_p = c.temp(TemperedLabel::SegSigned(segsym, Sign::Plus))?;
    let l_half_gst = c.lan(vec![c.pt(h)], TemperedLabel::GenSteinberg(c.pt(h)))?;
    let l_half_half = c.lan(vec![c.pt(h), c.pt(h)], TemperedLabel::Cusp)?;
    let specs = vec![
        Spec { label: p1, mult: 1, unitary: true, dual: 3, mu: None, recipe: Recipe::Closed },
        Spec {
            label: p2,
            mult: 1,
            unitary: true,
            dual: 2,
            mu: None,
            recipe: Recipe::FromInduced(vec![c.dp(h)], sseg_m.clone()),
        },
        Spec {
            label: p3,
            mult: 1,
            unitary: true,
            dual: 1,
            mu: None,
            recipe: Recipe::FromInduced(vec![c.dp(h)], c.lan(vec![c.pt(h)], TemperedLabel::GenSteinberg(c.pt(h)))?),
        },
        Spec {
            label: p4,
            mult: 1,
            unitary: true,
            dual: 0,
            mu: None,
            recipe: Recipe::FromInduced(vec![c.ir(vec![c.pt(-h), c.pt(h)])], c.lpt(h)?),
        },
        Spec {
            label: p5,
            mult: 2,
            unitary: true,
            dual: 4,
            mu: None,
            recipe: Recipe::MinusSiblings(0),
        },
    ];
    let ids = vec![
        IdSpec {
            factors: vec![c.dp(h)],
            base: sseg_p,
            parts: vec![(4, 1), (0, 1)],
            used: true,
        },
        IdSpec {
            factors: vec![c.dp(h)],
            base: l_half_half,
            parts: vec![(3, 1), (4, 1)],
            used: false,
        },
        IdSpec {
            factors: vec![c.dp(h), c.dp(h), c.dp(h)],
            base: c.cusp(),
            parts: vec![(0, 1), (1, 1), (2, 1), (3, 1), (4, 2)],
            used: false,
        },
        IdSpec { factors: vec![c.dp(h)], base: sseg_m, parts: vec![(1, 1)], used: false },
        IdSpec { factors: vec![c.dp(h)], base: l_half_gst, parts: vec![(2, 1)], used: false },
    ];
    Ok((specs, ids))
}

fn s8_run_up_zero(c: &Cat) -> Result<(Vec<Spec>, Vec<IdSpec>), DbError> {
    let z = HalfInt::ZERO;
    let one = HalfInt::ONE;
    let two = HalfInt::from_doubled(4);
    let dzp = c.temp(TemperedLabel::DeltaZeroSigned(Sign::Plus))?;
    let dzm = c.temp(TemperedLabel::DeltaZeroSigned(Sign::Minus))?;
    let p1p = c.temp(TemperedLabel::SegSigned(c.seg(z, two)?, Sign::Plus))?;
    let p1m = c.temp(TemperedLabel::SegSigned(c.seg(z, two)?, Sign::Minus))?;
    let p2p = c.lan(vec![c.pt(two), c.pt(one)], TemperedLabel::DeltaZeroSigned(Sign::Plus))?;
    let p2m = c.lan(vec![c.pt(two), c.pt(one)], TemperedLabel::DeltaZeroSigned(Sign::Minus))?;
    let p3p = c.lan(vec![c.pt(two)], TemperedLabel::SegSigned(c.seg(z, one)?, Sign::Plus))?;
    let p3m = c.lan(vec![c.pt(two)], TemperedLabel::SegSigned(c.seg(z, one)?, Sign::Minus))?;
    let p4p = c.lan(vec![c.seg(one, two)?], TemperedLabel::DeltaZeroSigned(Sign::Plus))?;
    let p4m = c.lan(vec![c.seg(one, two)?], TemperedLabel::DeltaZeroSigned(Sign::Minus))?;
    let p5 = c.lan(vec![c.pt(two), c.seg(z, one)?], TemperedLabel::Cusp)?;
    let p6 = c.lan(vec![c.seg(z, two)?], TemperedLabel::Cusp)?;
    let l2dz = |s: Sign| c.lan(vec![c.pt(two)], TemperedLabel::DeltaZeroSigned(s));
    let l1dz = |s: Sign| c.lan(vec![c.pt(one)], TemperedLabel::DeltaZeroSigned(s));
    let segsgn01 = |s: Sign| c.temp(TemperedLabel::SegSigned(c.seg(z, one).unwrap(), s));
    let mu3 = |p: &ClassicalIrr, s: Sign, dz: &ClassicalIrr| -> Result<FormalSum<BiTerm>, DbError> {
        let mut m = FormalSum::from_term(BiTerm::unit(p.clone()));
        m.add_term(c.t(c.dp(-two), &segsgn01(s)?), 1);
        m.add_term(c.t(c.dp(one), &l2dz(s)?), 1);
        m.add_term(c.t(c.ir(vec![c.pt(one), c.pt(two)]), dz), 1);
        m.add_term(c.t(c.ir(vec![c.pt(-two), c.pt(one)]), dz), 1);
        m.add_term(c.t(c.d(z, one)?, &c.lpt(two)?), 1);
        m.add_term(c.t(c.ir(vec![c.seg(z, one)?, c.pt(two)]), &c.cusp()), 1);
        m.add_term(c.t(c.ir(vec![c.pt(-two), c.seg(z, one)?]), &c.cusp()), 1);
        Ok(m)
    };
    let mu4 = |p: &ClassicalIrr, s: Sign, dz: &ClassicalIrr| -> Result<FormalSum<BiTerm>, DbError> {
        let mut m = FormalSum::from_term(BiTerm::unit(p.clone()));
        m.add_term(c.t(c.dp(two), &l1dz(s)?), 1);
        m.add_term(c.t(c.dp(-one), &l2dz(s)?), 1);
        m.add_term(c.t(c.d(-two, -one)?, dz), 1);
        m.add_term(c.t(c.ir(vec![c.pt(two), c.pt(-one)]), dz), 1);
        m.add_term(c.t(c.ir(vec![c.pt(-one), c.pt(z)]), &c.lpt(two)?), 1);
        m.add_term(c.t(c.ir(vec![c.seg(-two, -one)?, c.pt(z)]), &c.cusp()), 1);
        m.add_term(c.t(c.ir(vec![c.pt(-one), c.pt(z), c.pt(two)]), &c.cusp()), 1);
        Ok(m)
    };
    let mu3p = mu3(&p3p, Sign::Plus, &dzp)?;
    let mu3m = mu3(&p3m, Sign::Minus, &dzm)?;
    let mu4p = mu4(&p4p, Sign::Plus, &dzp)?;
    let mu4m = mu4(&p4m, Sign::Minus, &dzm)?;
    let specs = vec![
        Spec { label: p1p, mult: 1, unitary: true, dual: 3, mu: None, recipe: Recipe::Closed },
        Spec { label: p1m, mult: 1, unitary: true, dual: 2, mu: None, recipe: Recipe::Closed },
        Spec {
            label: p2p,
            mult: 1,
            unitary: true,
            dual: 1,
            mu: None,
            recipe: Recipe::MinusSiblings(0),
        },
        Spec {
            label: p2m,
            mult: 1,
            unitary: true,
            dual: 0,
            mu: None,
            recipe: Recipe::MinusSiblings(1),
        },
        Spec {
            label: p3p,
            mult: 1,
            unitary: false,
            dual: 7,
            mu: Some(mu3p),
            recipe: Recipe::FromMu,
        },
        Spec {
            label: p3m,
            mult: 1,
            unitary: false,
            dual: 6,
            mu: Some(mu3m),
            recipe: Recipe::FromMu,
        },
        Spec {
            label: p4p,
            mult: 1,
            unitary: false,
            dual: 5,
            mu: Some(mu4p),
            recipe: Recipe::FromMu,
        },
        Spec {
            label: p4m,
            mult: 1,
            unitary: false,
            dual: 4,
            mu: Some(mu4m),
            recipe: Recipe::FromMu,
        },
        Spec {
            label: p5,
            mult: 2,
            unitary: false,
            dual: 9,
            mu: None,
            recipe: Recipe::MinusSiblings(2),
        },
        Spec { label: p6, mult: 2, unitary: false, dual: 8, mu: None, recipe: Recipe::Closed },
    ];
    let ids = vec![
        IdSpec {
            factors: vec![c.dp(two)],
            base: l1dz(Sign::Plus)?,
            parts: vec![(6, 1), (2, 1)],
            used: true,
        },
        IdSpec {
            factors: vec![c.dp(two)],
            base: l1dz(Sign::Minus)?,
            parts: vec![(7, 1), (3, 1)],
            used: true,
        },
        IdSpec {
            factors: vec![c.dp(two)],
            base: c.lan(vec![c.seg(z, one)?], TemperedLabel::Cusp)?,
            parts: vec![(8, 1), (9, 1)],
            used: true,
        },
        IdSpec {
            factors: vec![c.dp(two)],
            base: segsgn01(Sign::Plus)?,
            parts: vec![(4, 1), (0, 1)],
            used: false,
        },
        IdSpec {
            factors: vec![c.dp(two)],
            base: segsgn01(Sign::Minus)?,
            parts: vec![(5, 1), (1, 1)],
            used: false,
        },
        IdSpec {
            factors: vec![c.d(z, two)?],
            base: c.cusp(),
            parts: vec![(9, 1), (0, 1), (1, 1)],
            used: false,
        },
        IdSpec {
            factors: vec![c.d(one, two)?],
            base: dzp.clone(),
            parts: vec![(6, 1), (9, 1), (0, 1)],
            used: false,
        },
        IdSpec {
            factors: vec![c.d(one, two)?],
            base: dzm.clone(),
            parts: vec![(7, 1), (9, 1), (1, 1)],
            used: false,
        },
        IdSpec {
            factors: vec![c.ir(vec![c.pt(one), c.pt(two)])],
            base: dzp,
            parts: vec![(4, 1), (8, 1), (2, 1)],
            used: false,
        },
        IdSpec {
            factors: vec![c.ir(vec![c.pt(one), c.pt(two)])],
            base: dzm,
            parts: vec![(5, 1), (8, 1), (3, 1)],
            used: false,
        },
        IdSpec {
            factors: vec![c.d(one, two)?, c.dp(z)],
            base: c.cusp(),
            parts: vec![(0, 1), (1, 1), (6, 1), (7, 1), (9, 2)],
            used: false,
        },
        IdSpec {
            factors: vec![c.dp(two), c.dp(one), c.dp(z)],
            base: c.cusp(),
            parts: vec![
                (0, 1),
                (1, 1),
                (2, 1),
                (3, 1),
                (4, 1),
                (5, 1),
                (6, 1),
                (7, 1),
                (8, 2),
                (9, 2),
            ],
            used: false,
        },
    ];
    Ok((specs, ids))
}

fn s9_up_eq_zero(c: &Cat) -> Result<(Vec<Spec>, Vec<IdSpec>), DbError> {
    let z = HalfInt::ZERO;
    let one = HalfInt::ONE;
    let p1p = c.lan(vec![c.pt(one), c.pt(one)], TemperedLabel::DeltaZeroSigned(Sign::Plus))?;
    let p1m = c.lan(vec![c.pt(one), c.pt(one)], TemperedLabel::DeltaZeroSigned(Sign::Minus))?;
    let p2p = c.temp(TemperedLabel::SegSigned(c.seg(-one, one)?, Sign::Plus))?;
    let p2m = c.temp(TemperedLabel::SegSigned(c.seg(-one, one)?, Sign::Minus))?;
    let p3p = c.lan(vec![c.pt(one)], TemperedLabel::SegSigned(c.seg(z, one)?, Sign::Plus))?;
    let p3m = c.lan(vec![c.pt(one)], TemperedLabel::SegSigned(c.seg(z, one)?, Sign::Minus))?;
    let p4 = c.lan(vec![c.pt(one), c.seg(z, one)?], TemperedLabel::Cusp)?;
    let l1dz = |s: Sign| c.lan(vec![c.pt(one)], TemperedLabel::DeltaZeroSigned(s));
    let segsgn01 = |s: Sign| c.temp(TemperedLabel::SegSigned(c.seg(z, one).unwrap(), s));
    let specs = vec![
        Spec {
            label: p1p,
            mult: 1,
            unitary: true,
            dual: 3,
            mu: None,
            recipe: Recipe::MinusSiblings(2),
        },
        Spec {
            label: p1m,
            mult: 1,
            unitary: true,
            dual: 2,
            mu: None,
            recipe: Recipe::MinusSiblings(3),
        },
        Spec { label: p2p, mult: 1, unitary: true, dual: 1, mu: None, recipe: Recipe::Closed },
        Spec { label: p2m, mult: 1, unitary: true, dual: 0, mu: None, recipe: Recipe::Closed },
        Spec {
            label: p3p,
            mult: 2,
            unitary: true,
            dual: 5,
            mu: None,
            recipe: Recipe::MinusSiblings(0),
        },
        Spec {
            label: p3m,
            mult: 2,
            unitary: true,
            dual: 4,
            mu: None,
            recipe: Recipe::MinusSiblings(1),
        },
        Spec {
            label: p4,
            mult: 2,
            unitary: false,
            dual: 6,
            mu: None,
            recipe: Recipe::FromInduced(
                vec![c.dp(one)],
                c.lan(vec![c.seg(z, one)?], TemperedLabel::Cusp)?,
            ),
        },
    ];
    let ids = vec![
        IdSpec {
            factors: vec![c.dp(one)],
            base: segsgn01(Sign::Plus)?,
            parts: vec![(2, 1), (4, 1)],
            used: true,
        },
        IdSpec {
            factors: vec![c.dp(one)],
            base: segsgn01(Sign::Minus)?,
            parts: vec![(3, 1), (5, 1)],
            used: true,
        },
        IdSpec {
            factors: vec![c.dp(one)],
            base: l1dz(Sign::Plus)?,
            parts: vec![(0, 1), (4, 1)],
            used: true,
        },
        IdSpec {
            factors: vec![c.dp(one)],
            base: l1dz(Sign::Minus)?,
            parts: vec![(1, 1), (5, 1)],
            used: true,
        },
        IdSpec {
            factors: vec![c.d(-one, one)?],
            base: c.cusp(),
            parts: vec![(2, 1), (3, 1)],
            used: false,
        },
        IdSpec {
            factors: vec![c.ir(vec![c.pt(-one), c.pt(z), c.pt(one)])],
            base: c.cusp(),
            parts: vec![(0, 1), (1, 1)],
            used: false,
        },
        IdSpec {
            factors: vec![c.dp(one)],
            base: c.lan(vec![c.seg(z, one)?], TemperedLabel::Cusp)?,
            parts: vec![(6, 1)],
            used: false,
        },
        IdSpec {
            factors: vec![c.dp(one), c.dp(one), c.dp(z)],
            base: c.cusp(),
            parts: vec![(0, 1), (1, 1), (2, 1), (3, 1), (4, 2), (5, 2), (6, 2)],
            used: false,
        },
    ];
    Ok((specs, ids))
}

fn s10_eq_up_zero(c: &Cat) -> Result<(Vec<Spec>, Vec<IdSpec>), DbError> {
    let z = HalfInt::ZERO;
    let one = HalfInt::ONE;
    let ms0 = Multisegment::new(vec![c.pt(z)]);
    let dzp = c.temp(TemperedLabel::DeltaZeroSigned(Sign::Plus))?;
    let dzm = c.temp(TemperedLabel::DeltaZeroSigned(Sign::Minus))?;
    let l1dz = |s: Sign| c.lan(vec![c.pt(one)], TemperedLabel::DeltaZeroSigned(s));
    let p1p = c.lan(
        vec![c.pt(one)],
        TemperedLabel::TemperedInd(ms0.clone(), Box::new(TemperedLabel::DeltaZeroSigned(Sign::Plus))),
    )?;
    let p1m = c.lan(
        vec![c.pt(one)],
        TemperedLabel::TemperedInd(ms0.clone(), Box::new(TemperedLabel::DeltaZeroSigned(Sign::Minus))),
    )?;
    let p2p = c.lan(vec![c.seg(z, one)?], TemperedLabel::DeltaZeroSigned(Sign::Plus))?;
    let p2m = c.lan(vec![c.seg(z, one)?], TemperedLabel::DeltaZeroSigned(Sign::Minus))?;
    let p3p = c.temp(TemperedLabel::TemperedInd(
        ms0.clone(),
        Box::new(TemperedLabel::SegSigned(c.seg(z, one)?, Sign::Plus)),
    ))?;
    let p3m = c.temp(TemperedLabel::TemperedInd(
        ms0,
        Box::new(TemperedLabel::SegSigned(c.seg(z, one)?, Sign::Minus)),
    ))?;
    let specs = vec![
        Spec {
            label: p1p,
            mult: 1,
            unitary: true,
            dual: 5,
            mu: None,
            recipe: Recipe::FromInduced(vec![c.dp(z)], l1dz(Sign::Plus)?),
        },
        Spec {
            label: p1m,
            mult: 1,
            unitary: true,
            dual: 4,
            mu: None,
            recipe: Recipe::FromInduced(vec![c.dp(z)], l1dz(Sign::Minus)?),
        },
        Spec {
            label: p2p,
            mult: 2,
            unitary: true,
            dual: 3,
            mu: None,
            recipe: Recipe::MinusSiblings(0),
        },
        Spec {
            label: p2m,
            mult: 2,
            unitary: true,
            dual: 2,
            mu: None,
            recipe: Recipe::MinusSiblings(1),
        },
        Spec { label: p3p, mult: 1, unitary: true, dual: 1, mu: None, recipe: Recipe::Closed },
        Spec { label: p3m, mult: 1, unitary: true, dual: 0, mu: None, recipe: Recipe::Closed },
    ];
    let ids = vec![
        IdSpec {
            factors: vec![c.d(z, one)?],
            base: dzp.clone(),
            parts: vec![(2, 1), (4, 1)],
            used: true,
        },
        IdSpec {
            factors: vec![c.d(z, one)?],
            base: dzm.clone(),
            parts: vec![(3, 1), (5, 1)],
            used: true,
        },
        IdSpec {
            factors: vec![c.ir(vec![c.pt(z), c.pt(one)])],
            base: dzp.clone(),
            parts: vec![(3, 1), (0, 1)],
            used: false,
        },
        IdSpec {
            factors: vec![c.ir(vec![c.pt(z), c.pt(one)])],
            base: dzm.clone(),
            parts: vec![(2, 1), (1, 1)],
            used: false,
        },
        IdSpec {
            factors: vec![c.dp(z)],
            base: c.lan(vec![c.seg(z, one)?], TemperedLabel::Cusp)?,
            parts: vec![(2, 1), (3, 1)],
            used: false,
        },
        IdSpec {
            factors: vec![c.dp(z)],
            base: c.temp(TemperedLabel::SegSigned(c.seg(z, one)?, Sign::Plus))?,
            parts: vec![(4, 1)],
            used: false,
        },
        IdSpec {
            factors: vec![c.dp(z)],
            base: c.temp(TemperedLabel::SegSigned(c.seg(z, one)?, Sign::Minus))?,
            parts: vec![(5, 1)],
            used: false,
        },
        IdSpec {
            factors: vec![c.dp(z), c.dp(one)],
            base: dzp,
            parts: vec![(0, 1), (2, 1), (3, 1), (4, 1)],
            used: false,
        },
        IdSpec {
            factors: vec![c.dp(z), c.dp(one)],
            base: dzm,
            parts: vec![(1, 1), (2, 1), (3, 1), (5, 1)],
            used: false,
        },
        IdSpec {
            factors: vec![c.dp(one), c.dp(z), c.dp(z)],
            base: c.cusp(),
            parts: vec![(0, 1), (1, 1), (2, 2), (3, 2), (4, 1), (5, 1)],
            used: false,
        },
    ];
    Ok((specs, ids))
}

fn s11_triple_zero(c: &Cat) -> Result<(Vec<Spec>, Vec<IdSpec>), DbError> {
    let z = HalfInt::ZERO;
    let ms00 = Multisegment::new(vec![c.pt(z), c.pt(z)]);
    let ms0 = Multisegment::new(vec![c.pt(z)]);
    let pp = c.temp(TemperedLabel::TemperedInd(
        ms00.clone(),
        Box::new(TemperedLabel::DeltaZeroSigned(Sign::Plus)),
    ))?;
    let pm = c.temp(TemperedLabel::TemperedInd(
        ms00,
        Box::new(TemperedLabel::DeltaZeroSigned(Sign::Minus)),
    ))?;
    let tp = c.temp(TemperedLabel::TemperedInd(
        ms0.clone(),
        Box::new(TemperedLabel::DeltaZeroSigned(Sign::Plus)),
    ))?;
    let tm = c.temp(TemperedLabel::TemperedInd(
        ms0,
        Box::new(TemperedLabel::DeltaZeroSigned(Sign::Minus)),
    ))?;
    let dzp = c.temp(TemperedLabel::DeltaZeroSigned(Sign::Plus))?;
    let dzm = c.temp(TemperedLabel::DeltaZeroSigned(Sign::Minus))?;
    let specs = vec![
        Spec { label: pp, mult: 1, unitary: true, dual: 1, mu: None, recipe: Recipe::Closed },
        Spec { label: pm, mult: 1, unitary: true, dual: 0, mu: None, recipe: Recipe::Closed },
    ];
    let ids = vec![
        IdSpec {
            factors: vec![c.dp(z), c.dp(z), c.dp(z)],
            base: c.cusp(),
            parts: vec![(0, 1), (1, 1)],
            used: false,
        },
        IdSpec { factors: vec![c.dp(z)], base: tp, parts: vec![(0, 1)], used: false },
        IdSpec { factors: vec![c.dp(z)], base: tm, parts: vec![(1, 1)], used: false },
        IdSpec { factors: vec![c.dp(z), c.dp(z)], base: dzp, parts: vec![(0, 1)], used: false },
        IdSpec { factors: vec![c.dp(z), c.dp(z)], base: dzm, parts: vec![(1, 1)], used: false },
    ];
    Ok((specs, ids))
}

// ---------------------------------------------------------------------------
// Lookups over the catalogue.

/// The composition series at a critical tuple.
pub fn comp_series(ctx: LineContext, xs: &[HalfInt]) -> Result<FormalSum<ClassicalIrr>, DbError> {
    Ok(entry(ctx, xs)?.series())
}

/// The catalogued decomposition of `factors |x base`, matched up to
/// expansion of the factors in the irreducible basis.
pub fn sub_identity(
    ctx: LineContext,
    factors: &[GLTerm],
    base: &ClassicalIrr,
) -> Result<FormalSum<ClassicalIrr>, DbError> {
    let mut pts: Vec<HalfInt> = Vec::new();
    for f in factors {
        pts.extend(f.support());
    }
    pts.extend(support_points(base));
    let tuple = signed_orbit_rep(&pts);
    let e = entry(ctx, &tuple)?;
    let want = crate::gl_ring::expand_product(factors)?;
    for id in &e.identities {
        if &id.base != base {
            continue;
        }
        let have = crate::gl_ring::expand_product(&id.factors)?;
        if have == want {
            let mut out = FormalSum::zero();
            for &(i, m) in &id.parts {
                out.add_term(e.constituents[i].label.clone(), m);
            }
            return Ok(out);
        }
    }
    // Constituents realized as irreducible induced representations carry
    // implicit singleton identities.
    for cc in &e.constituents {
        if let Some((f, b)) = &cc.induced_from {
            if b == base && crate::gl_ring::expand_product(f)? == want {
                return Ok(FormalSum::from_term(cc.label.clone()));
            }
        }
    }
    Err(DbError::UnknownIdentity(identity_name(factors, base)))
}

/// Unitarizability of a catalogued label.
pub fn unitary_flag(ctx: LineContext, label: &ClassicalIrr) -> Result<bool, DbError> {
    if label.degree() == 0 {
        return Ok(true);
    }
    let e = entry(ctx, &support_points(label))?;
    match e.constituent_index(label) {
        Some(i) => Ok(e.constituents[i].unitary),
        None => Err(DbError::UnsupportedLabel(label.to_string())),
    }
}

/// The dual of a catalogued label under the involution.
pub fn dual_of(ctx: LineContext, label: &ClassicalIrr) -> Result<ClassicalIrr, DbError> {
    if label.degree() == 0 {
        return Ok(label.clone());
    }
    let e = entry(ctx, &support_points(label))?;
    match e.constituent_index(label) {
        Some(i) => Ok(e.constituents[e.constituents[i].dual].label.clone()),
        None => Err(DbError::UnsupportedLabel(label.to_string())),
    }
}

/// Best-effort resolution of composite induced terms in a restriction,
/// through the engine's segment formulas and the catalogued identities.
pub fn resolve_with_db(ctx: LineContext, sum: &FormalSum<BiTerm>) -> FormalSum<BiTerm> {
    let engine = resolve_closed(sum).unwrap_or_else(|_| sum.clone());
    let mut out = FormalSum::zero();
    for (bt, c) in engine.iter() {
        match &bt.cl {
            ClTerm::Induced(ms, pi) => {
                let factors: Vec<GLTerm> =
                    ms.segments().iter().map(|s| GLTerm::delta(*s)).collect();
                match sub_identity(ctx, &factors, pi) {
                    Ok(parts) => {
                        for (lbl, m) in parts.iter() {
                            out.add_term(
                                BiTerm::new(bt.gl.clone(), ClTerm::Irr(lbl.clone())),
                                c * m,
                            );
                        }
                    }
                    Err(_) => out.add_term(bt.clone(), c),
                }
            }
            ClTerm::Irr(_) => out.add_term(bt.clone(), c),
        }
    }
    out
}

/// The full restriction of a catalogued label: the engine's closed formulas,
/// a stored list, or the induced formula for constituents realized as
/// irreducible induced representations. Labels recovered only by sibling
/// subtraction or transport have no catalogued restriction.
pub fn db_mu(ctx: LineContext, label: &ClassicalIrr) -> Result<FormalSum<BiTerm>, DbError> {
    if label.degree() == 0 {
        return Ok(FormalSum::from_term(BiTerm::unit(label.clone())));
    }
    if let Ok(m) = mu_star(label) {
        return ensure_decomposed(label, resolve_with_db(ctx, &m));
    }
    let e = entry(ctx, &support_points(label))?;
    let i = e
        .constituent_index(label)
        .ok_or_else(|| DbError::UnsupportedLabel(label.to_string()))?;
    if let Some(m) = &e.constituents[i].mu {
        return Ok(m.clone());
    }
    // Rebuild the restriction of an induced-irreducible constituent. The
    // full-degree slot of the raw product restriction sums to the label
    // itself, so it is replaced by the unit term.
    let (factors, base) = match &e.constituents[i].induced_from {
        Some((f, b)) => (f.clone(), b.clone()),
        None => return Err(DbError::UnsupportedRestriction(label.to_string())),
    };
    let base_mu = db_mu(ctx, &base)?;
    let raw = mu_star_induced_over(&factors, &base_mu)?;
    let mut out = FormalSum::zero();
    for (bt, cc) in raw.iter() {
        if bt.gl.degree() == 0 {
            continue;
        }
        out.add_term(bt.clone(), cc);
    }
    out.add_term(BiTerm::unit(label.clone()), 1);
    ensure_decomposed(label, resolve_with_db(ctx, &out))
}

/// Accepts a restriction only when every classical leg is an irreducible
/// label with positive multiplicity; partial resolutions are not reported.
fn ensure_decomposed(
    label: &ClassicalIrr,
    sum: FormalSum<BiTerm>,
) -> Result<FormalSum<BiTerm>, DbError> {
    for (bt, cc) in sum.iter() {
        let irr = matches!(bt.cl, ClTerm::Irr(_));
        if !irr || cc <= 0 {
            return Err(DbError::UnsupportedRestriction(label.to_string()));
        }
    }
    Ok(sum)
}

/// The general linear column of `factors |x base` through the catalogue.
pub fn sgl_induced_of(
    ctx: LineContext,
    factors: &[GLTerm],
    base: &ClassicalIrr,
) -> Result<FormalSum<GLTerm>, DbError> {
    let base_sgl = sgl_of(ctx, base)?;
    Ok(s_gl_induced(factors, &base_sgl)?)
}

/// Iterated restriction of a catalogued label to cuspidal chains.
pub fn full_jacquet(
    ctx: LineContext,
    label: &ClassicalIrr,
) -> Result<FormalSum<Vec<HalfInt>>, DbError> {
    let mu = |l: &ClassicalIrr| -> Result<FormalSum<BiTerm>, JacquetError> {
        db_mu(ctx, l).map_err(|e| JacquetError::Unsupported(e.to_string()))
    };
    Ok(cuspidal_chains(label, &mu)?)
}

/// Whether the exponent occurs in the support of the general linear column.
pub fn factor_test(ctx: LineContext, x: HalfInt, label: &ClassicalIrr) -> Result<bool, DbError> {
    let s = sgl_of(ctx, label)?;
    let hit = s.iter().any(|(t, _)| t.support().contains(&x));
    Ok(hit)
}

/// Every entry at the line's critical tuples of corank 1..=3.
pub fn all_entries(ctx: LineContext) -> Result<Vec<Entry>, DbError> {
    critical_tuples(ctx).iter().map(|t| entry(ctx, t)).collect()
}

// ---------------------------------------------------------------------------
// JSON export and import.

/// The documented JSON form of an entry. Numbers encoding half-integers are
/// doubled integers.
pub fn entry_json(e: &Entry) -> Value {
    json!({
        "alpha": e.ctx.alpha().doubled(),
        "alpha_guard": e.guard,
        "provenance": e.family,
        "exponents": e.exponents.iter().map(|x| x.doubled()).collect::<Vec<i64>>(),
        "constituents": e.constituents.iter().map(|c| c.label.to_string()).collect::<Vec<String>>(),
        "multiplicities": e.constituents.iter().map(|c| c.mult).collect::<Vec<i64>>(),
        "duals": e.constituents.iter().map(|c| c.dual).collect::<Vec<usize>>(),
        "unitary": e.constituents.iter().map(|c| c.unitary).collect::<Vec<bool>>(),
    })
}

/// Rebuilds the catalogue entry named by an exported JSON value and checks
/// that the stored fields match the catalogue.
pub fn entry_from_json(v: &Value) -> Result<Entry, DbError> {
    let bad = |what: &str| DbError::Internal(format!("entry JSON missing or malformed: {what}"));
    let alpha = v.get("alpha").and_then(Value::as_i64).ok_or_else(|| bad("alpha"))?;
    let ctx = LineContext::new(HalfInt::from_doubled(alpha))
        .map_err(|e| DbError::Internal(e.to_string()))?;
    let exps: Vec<HalfInt> = v
        .get("exponents")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("exponents"))?
        .iter()
        .map(|x| x.as_i64().map(HalfInt::from_doubled))
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| bad("exponents"))?;
    let e = entry(ctx, &exps)?;
    let names: Vec<String> = v
        .get("constituents")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("constituents"))?
        .iter()
        .map(|x| x.as_str().map(str::to_owned))
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| bad("constituents"))?;
    let found: Vec<String> = e.constituents.iter().map(|c| c.label.to_string()).collect();
    if names != found {
        return Err(DbError::Internal(
            "entry JSON constituents do not match the catalogue".into(),
        ));
    }
    Ok(e)
}
