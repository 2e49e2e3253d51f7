//! Labels for irreducible representations of the classical tower on one
//! cuspidal line.
//!
//! An irreducible is written `L(d; tau)`: a Langlands multisegment `d` with
//! all central exponents positive, over an irreducible tempered label `tau`.
//! Tempered labels are built from a small fixed vocabulary: the base cuspidal,
//! generalized Steinberg segments, strongly positive chains, signed segment
//! pieces, the two summands of `[0] x sigma`, signed tempered pieces
//! `tau(D_pm; theta)`, and irreducible tempered full-induced classes.
//!
//! The module also carries Jordan blocks with their partial epsilon data, the
//! twist-reducibility rules they encode, the ladder reducibility criterion,
//! and the dominance order used to locate Langlands quotients.

use std::fmt;

use thiserror::Error;

use crate::gl_ring::expand_product;
use crate::gl_ring::GLTerm;
use crate::line_core::{HalfInt, LineContext, Multisegment, Segment};

/// Errors from label construction and label-level queries.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabelError {
    #[error("invalid tempered label: {0}")]
    InvalidTempered(String),
    #[error("invalid Langlands data: {0}")]
    InvalidLanglands(String),
    #[error("no Jordan blocks: {0}")]
    NotSquareIntegrable(String),
    #[error("dual not catalogued for label {0}")]
    UnknownDual(String),
    #[error("zero-exponent factor {0} induces reducibly; no single label exists")]
    ReducibleFold(String),
}

/// Three-valued answer for reducibility questions whose data may be absent.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Reducibility {
    Reducible,
    Irreducible,
    Unknown,
}

/// The sign tag distinguishing the two pieces of an even split.
///
/// Tags are opaque bookkeeping; where a characterization of "+" is known it is
/// returned by [`sign_characterization`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flipped(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_str())
    }
}

/// An irreducible tempered representation on the line, by label.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TemperedLabel {
    /// The base cuspidal `sigma`.
    Cusp,
    /// Generalized Steinberg `delta([alpha, d]; sigma)`, the square-integrable
    /// piece of the segment starting exactly at `alpha > 0`.
    GenSteinberg(Segment),
    /// Strongly positive chain `delta_sp(seg_1, ..., seg_k; sigma)`, begins
    /// and ends strictly increasing, all exponents positive, k >= 2.
    StronglyPositive(Vec<Segment>),
    /// Signed segment piece `delta([-c,d]_pm; sigma)` in the even-split range
    /// `alpha <= c <= d` (both signs exist there).
    SegSigned(Segment, Sign),
    /// One of the two summands of `[0] x sigma` at `alpha = 0`.
    DeltaZeroSigned(Sign),
    /// Signed tempered piece `tau(D_pm; theta)` for a symmetric segment `D`
    /// with `delta(D) x theta` splitting in two.
    TauSigned(Segment, Sign, Box<TemperedLabel>),
    /// An irreducible tempered full induced: all exponents zero over `theta`.
    TemperedInd(Multisegment, Box<TemperedLabel>),
}

impl TemperedLabel {
    /// Checks the structural invariants of the label under `ctx`.
    pub fn validate(&self, ctx: LineContext) -> Result<(), LabelError> {
        let alpha = ctx.alpha();
        match self {
            TemperedLabel::Cusp => Ok(()),
            TemperedLabel::GenSteinberg(seg) => {
                if seg.b() != alpha || alpha <= HalfInt::ZERO {
                    return Err(LabelError::InvalidTempered(format!(
                        "generalized Steinberg needs a segment starting at alpha > 0, got {seg} at {ctx}"
                    )));
                }
                Ok(())
            }
            TemperedLabel::StronglyPositive(segs) => {
                if segs.len() < 2 {
                    return Err(LabelError::InvalidTempered(
                        "strongly positive chains need at least two segments".into(),
                    ));
                }
                for w in segs.windows(2) {
                    if !(w[0].b() < w[1].b() && w[0].e() < w[1].e()) {
                        return Err(LabelError::InvalidTempered(format!(
                            "strongly positive chain must strictly increase: {} vs {}",
                            w[0], w[1]
                        )));
                    }
                }
                if segs.iter().any(|s| s.b() <= HalfInt::ZERO || !ctx.on_lattice(s.b())) {
                    return Err(LabelError::InvalidTempered(
                        "strongly positive segments must be positive and on the lattice".into(),
                    ));
                }
                Ok(())
            }
            TemperedLabel::SegSigned(seg, _) => {
                let (c, d) = (-seg.b(), seg.e());
                if !ctx.on_lattice(seg.b()) {
                    return Err(LabelError::InvalidTempered(format!(
                        "segment {seg} is off the lattice of {ctx}"
                    )));
                }
                if c > d || alpha > c {
                    return Err(LabelError::InvalidTempered(format!(
                        "signed segment label needs alpha <= c <= d in [-c,d], got {seg} at {ctx}"
                    )));
                }
                if c == HalfInt::ZERO && d == HalfInt::ZERO {
                    return Err(LabelError::InvalidTempered(
                        "the point segment at zero is written delta0(sign)".into(),
                    ));
                }
                Ok(())
            }
            TemperedLabel::DeltaZeroSigned(_) => {
                if alpha != HalfInt::ZERO {
                    return Err(LabelError::InvalidTempered(format!(
                        "delta0 labels exist only at alpha = 0, not {ctx}"
                    )));
                }
                Ok(())
            }
            TemperedLabel::TauSigned(seg, _, inner) => {
                if seg.b() != -seg.e() {
                    return Err(LabelError::InvalidTempered(format!(
                        "tau labels need a symmetric segment, got {seg}"
                    )));
                }
                inner.validate(ctx)
            }
            TemperedLabel::TemperedInd(ms, inner) => {
                if ms.is_empty() {
                    return Err(LabelError::InvalidTempered(
                        "tempered induced labels need at least one factor".into(),
                    ));
                }
                if ms.segments().iter().any(|s| s.exponent() != HalfInt::ZERO) {
                    return Err(LabelError::InvalidTempered(format!(
                        "tempered induced factors must have exponent zero, got {ms}"
                    )));
                }
                if matches!(**inner, TemperedLabel::TemperedInd(..)) {
                    return Err(LabelError::InvalidTempered(
                        "nested tempered induced labels must be flattened".into(),
                    ));
                }
                inner.validate(ctx)
            }
        }
    }

    /// Total number of line points the label consumes above the base.
    pub fn degree(&self) -> i64 {
        match self {
            TemperedLabel::Cusp => 0,
            TemperedLabel::GenSteinberg(seg) => seg.len(),
            TemperedLabel::StronglyPositive(segs) => segs.iter().map(|s| s.len()).sum(),
            TemperedLabel::SegSigned(seg, _) => seg.len(),
            TemperedLabel::DeltaZeroSigned(_) => 1,
            TemperedLabel::TauSigned(seg, _, inner) => seg.len() + inner.degree(),
            TemperedLabel::TemperedInd(ms, inner) => ms.size() + inner.degree(),
        }
    }

    /// True for the labels with Jordan blocks (square-integrable ones).
    pub fn is_square_integrable(&self) -> bool {
        match self {
            TemperedLabel::Cusp | TemperedLabel::GenSteinberg(_) => true,
            TemperedLabel::StronglyPositive(_) => true,
            // A symmetric signed segment [-c,c] is a tempered limit, not
            // square-integrable; c < d gives the square-integrable range.
            TemperedLabel::SegSigned(seg, _) => -seg.b() != seg.e(),
            TemperedLabel::DeltaZeroSigned(_)
            | TemperedLabel::TauSigned(..)
            | TemperedLabel::TemperedInd(..) => false,
        }
    }
}

impl fmt::Display for TemperedLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TemperedLabel::Cusp => write!(f, "sigma"),
            TemperedLabel::GenSteinberg(seg) => write!(f, "delta({seg};sigma)"),
            TemperedLabel::StronglyPositive(segs) => {
                let parts: Vec<String> = segs.iter().map(|s| s.to_string()).collect();
                write!(f, "sp({};sigma)", parts.join(","))
            }
            TemperedLabel::SegSigned(seg, sign) => write!(f, "delta({seg},{sign};sigma)"),
            TemperedLabel::DeltaZeroSigned(sign) => write!(f, "delta0({sign})"),
            TemperedLabel::TauSigned(seg, sign, inner) => {
                write!(f, "tau({seg},{sign};{inner})")
            }
            TemperedLabel::TemperedInd(ms, inner) => write!(f, "tind({ms};{inner})"),
        }
    }
}

/// An irreducible representation of the classical tower: Langlands data over
/// a tempered label, tied to the line context it lives on.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ClassicalIrr {
    langlands: Multisegment,
    tempered: TemperedLabel,
    ctx: LineContext,
}

impl ClassicalIrr {
    /// A Langlands label `L(d; tau)`; every exponent of `d` must be positive.
    pub fn new(
        langlands: Multisegment,
        tempered: TemperedLabel,
        ctx: LineContext,
    ) -> Result<Self, LabelError> {
        if let Some(bad) = langlands
            .segments()
            .iter()
            .find(|s| s.exponent() <= HalfInt::ZERO)
        {
            return Err(LabelError::InvalidLanglands(format!(
                "Langlands factor {bad} has non-positive exponent {}",
                bad.exponent()
            )));
        }
        tempered.validate(ctx)?;
        Ok(ClassicalIrr { langlands, tempered, ctx })
    }

    /// The tempered label itself, with empty Langlands part.
    pub fn tempered(tempered: TemperedLabel, ctx: LineContext) -> Result<Self, LabelError> {
        ClassicalIrr::new(Multisegment::empty(), tempered, ctx)
    }

    /// The base cuspidal.
    pub fn cusp(ctx: LineContext) -> Self {
        ClassicalIrr {
            langlands: Multisegment::empty(),
            tempered: TemperedLabel::Cusp,
            ctx,
        }
    }

    pub fn langlands_part(&self) -> &Multisegment {
        &self.langlands
    }

    pub fn tempered_part(&self) -> &TemperedLabel {
        &self.tempered
    }

    pub fn ctx(&self) -> LineContext {
        self.ctx
    }

    pub fn is_tempered(&self) -> bool {
        self.langlands.is_empty()
    }

    /// Total number of line points above the base cuspidal.
    pub fn degree(&self) -> i64 {
        self.langlands.size() + self.tempered.degree()
    }

    /// The exponent tuple of the Langlands part, one entry per segment; used
    /// for orbit bookkeeping, not for dominance.
    pub fn exponents(&self) -> Vec<HalfInt> {
        self.langlands.exponents()
    }
}

impl fmt::Display for ClassicalIrr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.langlands.is_empty() {
            write!(f, "{}", self.tempered)
        } else {
            write!(f, "L({};{})", self.langlands, self.tempered)
        }
    }
}

/// Normalizes arbitrary-exponent Langlands data over a tempered label to a
/// canonical irreducible label.
///
/// Negative-exponent segments are replaced by their contragredients; zero
/// exponent segments are folded into the tempered part as an irreducible
/// tempered full induced. Folding is refused when the induced tempered piece
/// is positively known to split (a symmetric segment meeting the reducibility
/// point over the base cuspidal), because then no single label exists.
pub fn normalize_langlands(
    data: &Multisegment,
    tempered: TemperedLabel,
    ctx: LineContext,
) -> Result<ClassicalIrr, LabelError> {
    let mut positive: Vec<Segment> = Vec::new();
    let mut zero: Vec<Segment> = Vec::new();
    for seg in data.segments() {
        let e = seg.exponent();
        debug_assert!(
            (seg.b().doubled() + seg.e().doubled()) % 2 == 0,
            "segment invariant keeps exponents in half-integers"
        );
        if e > HalfInt::ZERO {
            positive.push(*seg);
        } else if e < HalfInt::ZERO {
            positive.push(seg.contragredient());
        } else {
            zero.push(*seg);
        }
    }
    let tempered = if zero.is_empty() {
        tempered
    } else {
        if tempered == TemperedLabel::Cusp {
            for seg in &zero {
                // [-c,c] over the cuspidal splits exactly when alpha <= c.
                if ctx.on_lattice(seg.b()) && ctx.alpha() <= seg.e() {
                    return Err(LabelError::ReducibleFold(seg.to_string()));
                }
            }
        }
        match tempered {
            TemperedLabel::TemperedInd(ms, inner) => {
                TemperedLabel::TemperedInd(ms.merged(&Multisegment::new(zero)), inner)
            }
            other => TemperedLabel::TemperedInd(Multisegment::new(zero), Box::new(other)),
        }
    };
    ClassicalIrr::new(Multisegment::new(positive), tempered, ctx)
}

/// Jordan blocks of a square-integrable label: a sorted set of distinct
/// positive integers of one parity.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct JordanSet {
    blocks: Vec<i64>,
}

impl JordanSet {
    pub fn new(mut blocks: Vec<i64>) -> Self {
        blocks.sort_unstable();
        blocks.dedup();
        JordanSet { blocks }
    }

    pub fn blocks(&self) -> &[i64] {
        &self.blocks
    }

    pub fn contains(&self, a: i64) -> bool {
        self.blocks.binary_search(&a).is_ok()
    }

    pub fn max(&self) -> Option<i64> {
        self.blocks.last().copied()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }
}

impl fmt::Display for JordanSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.blocks.iter().map(|a| a.to_string()).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// The base chain `{eta+1, eta+3, ..., 2 alpha - 1}` of the cuspidal.
fn base_chain(ctx: LineContext) -> Vec<i64> {
    let top = ctx.alpha().doubled() - 1;
    let mut a = i64::from(ctx.eta()) + 1;
    let mut out = Vec::new();
    while a <= top {
        out.push(a);
        a += 2;
    }
    out
}

/// The doubled-end block `2e + 1` attached to a segment ending at `e`.
fn block_of_end(e: HalfInt) -> i64 {
    e.doubled() + 1
}

/// Jordan blocks of a tempered square-integrable label.
///
/// Base case: the cuspidal has the chain `{eta+1, ..., 2 alpha - 1}`. Each
/// positive segment `[b, e]` replaces the block `2b - 1` by `2e + 1`; a
/// symmetric-start segment `[-c, d]` with `alpha <= c < d` adds the two new
/// blocks `2c + 1` and `2d + 1`.
pub fn jord(pi: &ClassicalIrr) -> Result<JordanSet, LabelError> {
    if !pi.is_tempered() {
        return Err(LabelError::NotSquareIntegrable(format!(
            "{pi} has nontrivial Langlands data"
        )));
    }
    let ctx = pi.ctx();
    match pi.tempered_part() {
        TemperedLabel::Cusp => Ok(JordanSet::new(base_chain(ctx))),
        TemperedLabel::GenSteinberg(seg) => {
            let mut blocks = base_chain(ctx);
            let removed = block_of_end(ctx.alpha() - 1);
            blocks.retain(|&a| a != removed);
            blocks.push(block_of_end(seg.e()));
            Ok(JordanSet::new(blocks))
        }
        TemperedLabel::StronglyPositive(segs) => {
            let mut blocks = base_chain(ctx);
            // Largest segment first, so each replacement target is present.
            // A step starting at one half targets the virtual block 0, which
            // is never present; that removal is vacuous.
            for seg in segs.iter().rev() {
                let removed = block_of_end(seg.b() - 1);
                if removed >= 1 {
                    let pos = blocks.iter().position(|&a| a == removed).ok_or_else(|| {
                        LabelError::InvalidTempered(format!(
                            "strongly positive chain step {seg} has no block {removed} to replace"
                        ))
                    })?;
                    blocks.remove(pos);
                }
                blocks.push(block_of_end(seg.e()));
            }
            Ok(JordanSet::new(blocks))
        }
        TemperedLabel::SegSigned(seg, _) => {
            if !pi.tempered_part().is_square_integrable() {
                return Err(LabelError::NotSquareIntegrable(format!(
                    "{pi} is a tempered limit"
                )));
            }
            let mut blocks = base_chain(ctx);
            blocks.push(block_of_end(-seg.b()));
            blocks.push(block_of_end(seg.e()));
            Ok(JordanSet::new(blocks))
        }
        other => Err(LabelError::NotSquareIntegrable(format!(
            "{other} is tempered but not square-integrable"
        ))),
    }
}

/// Recovers alpha from the Jordan blocks of the base cuspidal: half of one
/// more than the largest block, with the empty set split by parity.
pub fn alpha_from_jord(j: &JordanSet, eta: u8) -> HalfInt {
    match j.max() {
        Some(m) => HalfInt::from_doubled(m + 1),
        None => {
            if eta == 0 {
                HalfInt::ZERO
            } else {
                HalfInt::HALF
            }
        }
    }
}

/// Whether the epsilon values at two adjacent blocks `a < a + 2` agree.
///
/// Stored only where the catalogue fixes it: chains inherited from the
/// cuspidal alternate (forced by irreducibility of the interior twists at
/// corank one), strongly positive tops alternate, and the signed segment
/// `[0,1]` at alpha = 0 has equal values on {1, 3}.
pub fn epsilon_same(pi: &ClassicalIrr, a: i64) -> Option<bool> {
    if !pi.is_tempered() {
        return None;
    }
    let ctx = pi.ctx();
    let chain_top = ctx.alpha().doubled() - 1;
    let in_base = |x: i64| x >= i64::from(ctx.eta()) + 1 && x <= chain_top;
    match pi.tempered_part() {
        TemperedLabel::Cusp => Some(false),
        TemperedLabel::GenSteinberg(_) => {
            // Retained base blocks keep the cuspidal's alternating pattern.
            if in_base(a) && in_base(a + 2) {
                Some(false)
            } else {
                None
            }
        }
        TemperedLabel::StronglyPositive(_) => Some(false),
        TemperedLabel::SegSigned(seg, _) => {
            let (c, d) = (-seg.b(), seg.e());
            if ctx.alpha() == HalfInt::ZERO
                && c == HalfInt::ZERO
                && d == HalfInt::ONE
                && a == 1
            {
                return Some(true);
            }
            if in_base(a) && in_base(a + 2) {
                return Some(false);
            }
            None
        }
        _ => None,
    }
}

/// The epsilon value at the block 2 (needed by the half-twist rule), when
/// known: `Some(false)` is -1, `Some(true)` is +1.
pub fn epsilon_at_two(pi: &ClassicalIrr) -> Option<bool> {
    if !pi.is_tempered() || pi.ctx().eta() != 1 {
        return None;
    }
    let ctx = pi.ctx();
    match pi.tempered_part() {
        // Forced to -1 by irreducibility of the half twist below alpha.
        TemperedLabel::Cusp => Some(false),
        TemperedLabel::GenSteinberg(seg) => {
            if ctx.alpha() == HalfInt::HALF && seg.e() == HalfInt::HALF {
                // Jord = {2}; the half twist is reducible there, forcing +1.
                Some(true)
            } else if ctx.alpha().doubled() - 3 >= 2 {
                Some(false)
            } else {
                None
            }
        }
        TemperedLabel::StronglyPositive(segs) => {
            let lowest = segs[0].b().doubled() - 1;
            if lowest - 2 >= 2 {
                // Block 2 is inherited from the cuspidal chain.
                Some(false)
            } else if segs.len() == 2 && segs[0].b() == HalfInt::HALF && segs[0].len() == 1 {
                // Block 2 is the bottom of the added pair; the twist tables
                // make the half twist reducible there, forcing +1.
                Some(true)
            } else {
                None
            }
        }
        _ => None,
    }
}

/// Reducibility of `nu^x rho x pi` for a square-integrable label `pi`, by the
/// block rules: off-lattice twists are irreducible; the zero twist reduces
/// exactly for odd parity without the block 1; the half twist is irreducible
/// exactly when the block 2 carries -1; otherwise `a = 2x - 1` decides via
/// membership of `a`, `a + 2` and their epsilon relation.
pub fn is_reducible_twist(pi: &ClassicalIrr, x: HalfInt) -> Reducibility {
    let ctx = pi.ctx();
    let x = x.abs();
    let j = match jord(pi) {
        Ok(j) => j,
        Err(_) => return Reducibility::Unknown,
    };
    if !ctx.on_lattice(x) {
        return Reducibility::Irreducible;
    }
    if x == HalfInt::ZERO {
        // Integral lattice only; parity is odd exactly when eta = 0.
        return if ctx.eta() == 0 && !j.contains(1) {
            Reducibility::Reducible
        } else {
            Reducibility::Irreducible
        };
    }
    if x == HalfInt::HALF {
        if !j.contains(2) {
            return Reducibility::Reducible;
        }
        return match epsilon_at_two(pi) {
            Some(false) => Reducibility::Irreducible,
            Some(true) => Reducibility::Reducible,
            None => Reducibility::Unknown,
        };
    }
    let a = x.doubled() - 1;
    if !j.contains(a) {
        return Reducibility::Irreducible;
    }
    if !j.contains(a + 2) {
        return Reducibility::Reducible;
    }
    match epsilon_same(pi, a) {
        Some(true) => Reducibility::Reducible,
        Some(false) => Reducibility::Irreducible,
        None => Reducibility::Unknown,
    }
}

/// Reducibility of `L(d) x sigma` by the ladder criterion.
///
/// If the support meets `{-alpha, alpha}` the induced is reducible. Otherwise,
/// when `d` is a ladder, or alpha <= 1 with the whole support on the lattice,
/// the induced reduces exactly when the general-linear product
/// `L(d_pos) x L(d_neg)~` does, which is decided exactly by expansion in the
/// small-support range. Anything else is out of range.
pub fn ladder_reducibility(ctx: LineContext, d: &Multisegment) -> Reducibility {
    let alpha = ctx.alpha();
    let on_lattice: Vec<bool> = d
        .segments()
        .iter()
        .map(|s| ctx.on_lattice(s.b()))
        .collect();
    if on_lattice.iter().all(|&b| !b) && !d.is_empty() {
        return Reducibility::Irreducible;
    }
    if !on_lattice.iter().all(|&b| b) {
        return Reducibility::Unknown;
    }
    if d.segments()
        .iter()
        .any(|s| s.contains(alpha) || s.contains(-alpha))
    {
        return Reducibility::Reducible;
    }
    if !(d.is_ladder() || alpha <= HalfInt::ONE) {
        return Reducibility::Unknown;
    }
    let pos: Vec<Segment> = d
        .segments()
        .iter()
        .copied()
        .filter(|s| s.exponent() > HalfInt::ZERO)
        .collect();
    let neg: Vec<Segment> = d
        .segments()
        .iter()
        .filter(|s| s.exponent() < HalfInt::ZERO)
        .map(|s| s.contragredient())
        .collect();
    let left = GLTerm::irr(Multisegment::new(pos));
    let right = GLTerm::irr(Multisegment::new(neg));
    match expand_product(&[left, right]) {
        Ok(sum) => {
            if sum.term_count() == 1 && sum.total_multiplicity() == 1 {
                Reducibility::Irreducible
            } else {
                Reducibility::Reducible
            }
        }
        Err(_) => Reducibility::Unknown,
    }
}

/// The dominance vector of a Langlands datum at total rank `n`: each segment
/// contributes its exponent once per point, sorted descending, zero-padded.
pub fn e_star(pi: &ClassicalIrr, n: usize) -> Vec<HalfInt> {
    let mut out: Vec<HalfInt> = Vec::with_capacity(n);
    for seg in pi.langlands_part().segments() {
        for _ in 0..seg.len() {
            out.push(seg.exponent());
        }
    }
    out.sort_by(|a, b| b.cmp(a));
    while out.len() < n {
        out.push(HalfInt::ZERO);
    }
    out
}

/// Partial-sum dominance: `a <= b` when every prefix sum of `a` is at most the
/// matching prefix sum of `b`. Both sides must have equal length.
pub fn dominance_leq(a: &[HalfInt], b: &[HalfInt]) -> bool {
    debug_assert_eq!(a.len(), b.len(), "dominance compares equal-length vectors");
    let mut sa = 0i64;
    let mut sb = 0i64;
    for (x, y) in a.iter().zip(b.iter()) {
        sa += x.doubled();
        sb += y.doubled();
        if sa > sb {
            return false;
        }
    }
    true
}

/// Printed characterization of the "+" tag where one is catalogued.
pub fn sign_characterization(label: &TemperedLabel, ctx: LineContext) -> Option<&'static str> {
    match label {
        TemperedLabel::SegSigned(..) => {
            if ctx.alpha() > HalfInt::ZERO {
                Some(
                    "the + piece is the constituent whose general-linear Jacquet column \
                     contains the term with all exponents non-negative",
                )
            } else {
                Some(
                    "at alpha = 0 the two signs are exchanged by the outer symmetry; \
                     the tags are fixed by the catalogue, not by a Jacquet term",
                )
            }
        }
        TemperedLabel::DeltaZeroSigned(_) => Some(
            "the two summands of [0] x sigma; the duality involution exchanges them",
        ),
        TemperedLabel::TauSigned(..) => Some(
            "the two tempered summands of the symmetric segment induction; where a \
             distinguishing Jacquet term is catalogued the + piece carries it",
        ),
        _ => None,
    }
}

/// Closed-form duals: labels whose involution image follows from the duality
/// of the generalized Steinberg family, the exchange of the two zero pieces,
/// or commutation with an irreducible full induction. Catalogued duals for
/// the remaining labels live in the composition-series database.
pub fn dual_closed(pi: &ClassicalIrr) -> Option<ClassicalIrr> {
    let ctx = pi.ctx();
    if !pi.is_tempered() {
        // L([alpha], ..., [alpha+n]; sigma) is the dual of the generalized
        // Steinberg on [alpha, alpha+n]; other Langlands labels are handled
        // by the database.
        let segs = pi.langlands_part().segments();
        if *pi.tempered_part() == TemperedLabel::Cusp
            && ctx.alpha() > HalfInt::ZERO
            && segs.iter().all(|s| s.len() == 1)
        {
            let mut pts: Vec<HalfInt> = segs.iter().map(|s| s.b()).collect();
            pts.sort();
            pts.dedup();
            let consecutive = pts.len() == segs.len()
                && pts.windows(2).all(|w| w[1] == w[0] + 1)
                && pts[0] == ctx.alpha();
            if consecutive {
                let seg = Segment::new(pts[0], *pts.last().expect("nonempty"))
                    .expect("consecutive run is a segment");
                return Some(
                    ClassicalIrr::tempered(TemperedLabel::GenSteinberg(seg), ctx)
                        .expect("generalized Steinberg at alpha is valid"),
                );
            }
        }
        return None;
    }
    match pi.tempered_part() {
        TemperedLabel::Cusp => Some(pi.clone()),
        TemperedLabel::DeltaZeroSigned(s) => Some(
            ClassicalIrr::tempered(TemperedLabel::DeltaZeroSigned(s.flipped()), ctx)
                .expect("flipped zero piece stays valid"),
        ),
        TemperedLabel::GenSteinberg(seg) => {
            let singles: Vec<Segment> =
                seg.support().into_iter().map(Segment::singleton).collect();
            Some(
                ClassicalIrr::new(Multisegment::new(singles), TemperedLabel::Cusp, ctx)
                    .expect("singleton exponents are positive"),
            )
        }
        _ => None,
    }
}
