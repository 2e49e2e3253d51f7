//! The twisted Jacquet machinery of the classical tower.
//!
//! Terms of a Jacquet restriction live in a two-sided picture: a general
//! linear part tensored with a classical part. The classical part is either a
//! resolved irreducible label or an unresolved induced piece
//! `d(m) x pi` kept as data. The central entry point [`mu_star`] computes the
//! full restriction of a label through closed formulas:
//!
//! * the cuspidal, the zero pieces, generalized Steinberg segments,
//! * signed segment pieces and the positive split labels of a reducible
//!   segment induction, through the signed segment formula [`jm_seg_ds`],
//! * the Langlands piece of a reducible segment induction, through
//!   [`jm_seg_q`],
//! * descending spreads `L([alpha+n], ..., [alpha]; sigma)`,
//! * irreducible full-induced labels, through multiplicativity.
//!
//! Labels outside these families return [`JacquetError::Unsupported`]; the
//! composition database layers catalogued restriction lists on top.

use std::fmt;

use thiserror::Error;

use crate::classical_reps::{ClassicalIrr, LabelError, TemperedLabel};
use crate::gl_ring::{
    expand_product, irr_to_std, twisted_mstar_std, FormalSum, GLTerm, GlError,
};
use crate::line_core::{HalfInt, LineContext, Multisegment, Segment};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum JacquetError {
    #[error("no closed restriction formula for {0}")]
    Unsupported(String),
    #[error(transparent)]
    Gl(#[from] GlError),
    #[error(transparent)]
    Label(#[from] LabelError),
}

/// Classical part of a Jacquet term: a resolved irreducible, or an induced
/// piece `d(m) x pi` kept unresolved.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum ClTerm {
    Irr(ClassicalIrr),
    Induced(Multisegment, ClassicalIrr),
}

impl ClTerm {
    /// Canonical induced piece: factors are flipped to non-negative exponent
    /// (the induced class is insensitive to the flip) and an empty factor
    /// list collapses to the resolved label.
    pub fn induced(ms: &Multisegment, pi: ClassicalIrr) -> ClTerm {
        if ms.is_empty() {
            return ClTerm::Irr(pi);
        }
        let segs: Vec<Segment> = ms
            .segments()
            .iter()
            .map(|s| {
                if s.exponent() < HalfInt::ZERO {
                    s.contragredient()
                } else {
                    *s
                }
            })
            .collect();
        ClTerm::Induced(Multisegment::new(segs), pi)
    }
}

impl fmt::Display for ClTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClTerm::Irr(pi) => write!(f, "{pi}"),
            ClTerm::Induced(ms, pi) => write!(f, "d({ms}) x {pi}"),
        }
    }
}

/// One term of a twisted Jacquet restriction.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct BiTerm {
    pub gl: GLTerm,
    pub cl: ClTerm,
}

impl BiTerm {
    pub fn new(gl: GLTerm, cl: ClTerm) -> Self {
        BiTerm { gl, cl }
    }

    /// The resolved term `1 (x) pi`.
    pub fn unit(pi: ClassicalIrr) -> Self {
        BiTerm { gl: GLTerm::One, cl: ClTerm::Irr(pi) }
    }
}

impl fmt::Display for BiTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (x) {}", self.gl, self.cl)
    }
}

/// Flips a segment to non-negative central exponent (the induced class and
/// its pieces are insensitive to the flip, with matching signs).
pub fn sym_normalize(seg: Segment) -> Segment {
    if seg.exponent() < HalfInt::ZERO {
        seg.contragredient()
    } else {
        seg
    }
}

/// Whether `d(seg) x sigma` is reducible: the symmetrized segment `[-c,d]`
/// meets `{-alpha, alpha}`, that is `alpha <= c` or `-c <= alpha <= d`.
/// Assumes the segment sits on the lattice of `ctx`.
pub fn segment_reducible(ctx: LineContext, seg: Segment) -> bool {
    let seg = sym_normalize(seg);
    let (c, d) = (-seg.b(), seg.e());
    let alpha = ctx.alpha();
    alpha <= c || (-c <= alpha && alpha <= d)
}

/// The full induced label of an irreducible `d(seg) x sigma`: a Langlands
/// label for positive exponent, a tempered induced one for exponent zero.
fn full_induced_label(ctx: LineContext, seg: Segment) -> Result<ClassicalIrr, JacquetError> {
    let seg = sym_normalize(seg);
    Ok(crate::classical_reps::normalize_langlands(
        &Multisegment::single(seg),
        TemperedLabel::Cusp,
        ctx,
    )?)
}

/// The signed piece `d(seg_sign; sigma)` of the segment induction, when it is
/// nonzero: the canonical label for each range of the symmetrized `[-c,d]`.
///
/// Reducible ranges: `-c = alpha` gives the generalized Steinberg for "+"
/// and nothing for "-"; `alpha <= c` gives the two signed segment labels;
/// in between only "+" survives, as a signed tempered piece over the
/// generalized Steinberg when `c = alpha - 1` and as a Langlands label over
/// it when `c < alpha - 1`. For an irreducible induction the "+" piece is the
/// whole induced exactly when the segment is interior (`d <= alpha - 1`).
pub fn delta_piece(
    ctx: LineContext,
    seg: Segment,
    sign: crate::classical_reps::Sign,
) -> Result<Option<ClassicalIrr>, JacquetError> {
    use crate::classical_reps::Sign;
    let seg = sym_normalize(seg);
    let (c, d) = (-seg.b(), seg.e());
    let alpha = ctx.alpha();
    if !segment_reducible(ctx, seg) {
        if sign == Sign::Minus || d > alpha - 1 {
            return Ok(None);
        }
        return Ok(Some(full_induced_label(ctx, seg)?));
    }
    if alpha <= c {
        let label = if c == HalfInt::ZERO && d == HalfInt::ZERO {
            TemperedLabel::DeltaZeroSigned(sign)
        } else {
            TemperedLabel::SegSigned(seg, sign)
        };
        return Ok(Some(ClassicalIrr::tempered(label, ctx)?));
    }
    if sign == Sign::Minus {
        return Ok(None);
    }
    if -c == alpha {
        return Ok(Some(ClassicalIrr::tempered(
            TemperedLabel::GenSteinberg(seg),
            ctx,
        )?));
    }
    // Here -c < alpha <= d and c < alpha: the "+" piece sits over the
    // generalized Steinberg on [alpha, d].
    let upper = Segment::new(alpha, d).expect("alpha <= d");
    let steinberg = TemperedLabel::GenSteinberg(upper);
    if c == alpha - 1 {
        let sym = Segment::new(-c, c).expect("symmetric segment");
        return Ok(Some(ClassicalIrr::tempered(
            TemperedLabel::TauSigned(sym, Sign::Plus, Box::new(steinberg)),
            ctx,
        )?));
    }
    let low = Segment::new(-c, alpha - 1).expect("-c < alpha - 1 on the lattice");
    Ok(Some(ClassicalIrr::new(
        Multisegment::single(low),
        steinberg,
        ctx,
    )?))
}

/// The Langlands-type piece `L_alpha(seg; sigma)` of the segment induction,
/// when it is nonzero: for a reducible non-symmetric segment it is the
/// Langlands label on the segment; for an irreducible non-interior one it is
/// the whole induced. Interior irreducible segments put the whole induced in
/// the "+" piece instead, so the Langlands piece vanishes there.
pub fn l_piece(ctx: LineContext, seg: Segment) -> Result<Option<ClassicalIrr>, JacquetError> {
    let seg = sym_normalize(seg);
    let (c, d) = (-seg.b(), seg.e());
    let alpha = ctx.alpha();
    if !segment_reducible(ctx, seg) {
        if d <= alpha - 1 {
            return Ok(None);
        }
        return Ok(Some(full_induced_label(ctx, seg)?));
    }
    if c == d {
        return Ok(None);
    }
    Ok(Some(ClassicalIrr::new(
        Multisegment::single(seg),
        TemperedLabel::Cusp,
        ctx,
    )?))
}

/// Pushes a standard product of up to two optional segments into the
/// irreducible basis, as a sum of general linear terms.
fn gl_pair(a: Option<Segment>, b: Option<Segment>) -> Result<FormalSum<GLTerm>, JacquetError> {
    Ok(expand_product(&[GLTerm::delta_opt(a), GLTerm::delta_opt(b)])?)
}

/// The full decomposition of `d(seg) x sigma` into irreducibles.
pub fn resolve_segment_cusp(
    ctx: LineContext,
    seg: Segment,
) -> Result<FormalSum<ClassicalIrr>, JacquetError> {
    use crate::classical_reps::Sign;
    let seg = sym_normalize(seg);
    let mut out = FormalSum::zero();
    if !ctx.on_lattice(seg.b()) || !segment_reducible(ctx, seg) {
        out.add_term(full_induced_label(ctx, seg)?, 1);
        return Ok(out);
    }
    for sign in [Sign::Plus, Sign::Minus] {
        if let Some(lbl) = delta_piece(ctx, seg, sign)? {
            out.add_term(lbl, 1);
        }
    }
    if let Some(lbl) = l_piece(ctx, seg)? {
        out.add_term(lbl, 1);
    }
    Ok(out)
}

/// Restriction of a signed segment piece `d([-c,d]_sign; sigma)`, including
/// every positive split label of a reducible segment induction.
///
/// Three families of terms, over the symmetrized segment:
/// * `sum_{i=-c-1}^{s alpha - 1} d([-i,c]) d([i+1,d]) (x) sigma` where `s`
///   is the sign,
/// * `sum_{i=-c-1}^{d-1} sum_{j=i+1}^{d} d([-i,c]) d([j+1,d]) (x)
///   d([i+1,j]_sign; sigma)` keeping the nonzero signed pieces,
/// * `sum d([-i,c]) d([j+1,d]) (x) L_alpha([i+1,j]; sigma)` over
///   `-c-1 <= i <= c-1`, `i+1 <= j <= c`, `i + j < -1`.
///
/// The "-" instance exists only in the even-split range `alpha <= c`.
pub fn jm_seg_ds(
    ctx: LineContext,
    seg: Segment,
    sign: crate::classical_reps::Sign,
) -> Result<FormalSum<BiTerm>, JacquetError> {
    use crate::classical_reps::Sign;
    let seg = sym_normalize(seg);
    let (c, d) = (-seg.b(), seg.e());
    let alpha = ctx.alpha();
    if !segment_reducible(ctx, seg) {
        return Err(JacquetError::Unsupported(format!(
            "signed piece formula needs a reducible segment, got {seg} at {ctx}"
        )));
    }
    if sign == Sign::Minus && !(alpha <= c) {
        return Err(JacquetError::Unsupported(format!(
            "the - piece of {seg} does not exist at {ctx}"
        )));
    }
    let cusp = ClassicalIrr::cusp(ctx);
    let mut out = FormalSum::zero();

    let top = match sign {
        Sign::Plus => alpha - 1,
        Sign::Minus => -alpha - 1,
    };
    let mut i = -c - 1;
    while i <= top {
        for (g, m) in gl_pair(Segment::try_new(-i, c), Segment::try_new(i + 1, d))? {
            out.add_term(BiTerm::new(g, ClTerm::Irr(cusp.clone())), m);
        }
        i = i + 1;
    }

    let mut i = -c - 1;
    while i <= d - 1 {
        let mut j = i + 1;
        while j <= d {
            let leg = Segment::new(i + 1, j).expect("i + 1 <= j");
            if let Some(lbl) = delta_piece(ctx, leg, sign)? {
                for (g, m) in gl_pair(Segment::try_new(-i, c), Segment::try_new(j + 1, d))? {
                    out.add_term(BiTerm::new(g, ClTerm::Irr(lbl.clone())), m);
                }
            }
            j = j + 1;
        }
        i = i + 1;
    }

    let mut i = -c - 1;
    while i <= c - 1 {
        let mut j = i + 1;
        while j <= c {
            if i.doubled() + j.doubled() < -2 {
                let leg = Segment::new(i + 1, j).expect("i + 1 <= j");
                if let Some(lbl) = l_piece(ctx, leg)? {
                    for (g, m) in
                        gl_pair(Segment::try_new(-i, c), Segment::try_new(j + 1, d))?
                    {
                        out.add_term(BiTerm::new(g, ClTerm::Irr(lbl.clone())), m);
                    }
                }
            }
            j = j + 1;
        }
        i = i + 1;
    }
    Ok(out)
}

/// Restriction of the Langlands piece `L([-c,d]; sigma)` of a reducible
/// segment induction with `c < d`:
///
/// * `sum_{i=alpha}^{d} L({[-i,c], [i+1,d]}) (x) sigma`,
/// * `sum_{i=-c-1}^{d-1} sum_{j=i+1, i+j>=0}^{d} L({[-i,c], [j+1,d]}) (x)
///   L_alpha([i+1,j]; sigma)` keeping the nonzero pieces.
///
/// General linear legs are Langlands classes on the listed segments, not
/// products.
pub fn jm_seg_q(ctx: LineContext, seg: Segment) -> Result<FormalSum<BiTerm>, JacquetError> {
    let seg = sym_normalize(seg);
    let (c, d) = (-seg.b(), seg.e());
    let alpha = ctx.alpha();
    if !segment_reducible(ctx, seg) || c >= d {
        return Err(JacquetError::Unsupported(format!(
            "Langlands piece formula needs a reducible segment with c < d, got {seg} at {ctx}"
        )));
    }
    let cusp = ClassicalIrr::cusp(ctx);
    let gl_of = |i: HalfInt, j: HalfInt| -> GLTerm {
        let mut segs = Vec::new();
        if let Some(s) = Segment::try_new(-i, c) {
            segs.push(s);
        }
        if let Some(s) = Segment::try_new(j + 1, d) {
            segs.push(s);
        }
        GLTerm::irr(Multisegment::new(segs))
    };
    let mut out = FormalSum::zero();

    let mut i = alpha;
    while i <= d {
        out.add_term(BiTerm::new(gl_of(i, i), ClTerm::Irr(cusp.clone())), 1);
        i = i + 1;
    }

    let mut i = -c - 1;
    while i <= d - 1 {
        let mut j = i + 1;
        while j <= d {
            if i.doubled() + j.doubled() >= 0 {
                let leg = Segment::new(i + 1, j).expect("i + 1 <= j");
                if let Some(lbl) = l_piece(ctx, leg)? {
                    out.add_term(BiTerm::new(gl_of(i, j), ClTerm::Irr(lbl)), 1);
                }
            }
            j = j + 1;
        }
        i = i + 1;
    }
    Ok(out)
}

/// Restriction of the generalized Steinberg `delta([alpha, alpha+n]; sigma)`:
/// exactly `n + 2` terms `d([alpha+k+1, alpha+n]) (x) delta([alpha,
/// alpha+k]; sigma)` for `k = -1, ..., n`.
pub fn mu_star_gen_steinberg(
    ctx: LineContext,
    seg: Segment,
) -> Result<FormalSum<BiTerm>, JacquetError> {
    let alpha = ctx.alpha();
    if seg.b() != alpha || alpha <= HalfInt::ZERO {
        return Err(JacquetError::Unsupported(format!(
            "generalized Steinberg formula needs a segment starting at alpha > 0, got {seg}"
        )));
    }
    let mut out = FormalSum::zero();
    let mut k = -1i64;
    while alpha + k <= seg.e() {
        let gl = GLTerm::delta_opt(Segment::try_new(alpha + k + 1, seg.e()));
        let cl = match Segment::try_new(alpha, alpha + k) {
            None => ClassicalIrr::cusp(ctx),
            Some(low) => ClassicalIrr::tempered(TemperedLabel::GenSteinberg(low), ctx)?,
        };
        out.add_term(BiTerm::new(gl, ClTerm::Irr(cl)), 1);
        k += 1;
    }
    Ok(out)
}

/// Restriction of the descending spread `L([alpha+n], ..., [alpha]; sigma)`,
/// the dual of the generalized Steinberg: `n + 2` terms
/// `L({[-(alpha+n)], ..., [-(alpha+k+1)]}) (x) L([alpha+k], ..., [alpha];
/// sigma)` for `k = -1, ..., n`.
pub fn mu_star_steinberg_spread(
    ctx: LineContext,
    n: i64,
) -> Result<FormalSum<BiTerm>, JacquetError> {
    let alpha = ctx.alpha();
    if alpha <= HalfInt::ZERO || n < 0 {
        return Err(JacquetError::Unsupported(
            "descending spreads start at alpha > 0".into(),
        ));
    }
    let spread_label = |upto: i64| -> Result<ClassicalIrr, JacquetError> {
        let segs: Vec<Segment> = (0..=upto)
            .map(|t| Segment::singleton(alpha + t))
            .collect();
        Ok(ClassicalIrr::new(
            Multisegment::new(segs),
            TemperedLabel::Cusp,
            ctx,
        )?)
    };
    let mut out = FormalSum::zero();
    for k in -1..=n {
        let gl_segs: Vec<Segment> = ((k + 1)..=n)
            .map(|t| Segment::singleton(-(alpha + t)))
            .collect();
        let gl = GLTerm::irr(Multisegment::new(gl_segs));
        let cl = if k < 0 {
            ClassicalIrr::cusp(ctx)
        } else {
            spread_label(k)?
        };
        out.add_term(BiTerm::new(gl, ClTerm::Irr(cl)), 1);
    }
    Ok(out)
}

/// Writes a list of ring elements as a sum of standard products with
/// integer coefficients.
fn factors_to_std(factors: &[GLTerm]) -> Result<FormalSum<Multisegment>, JacquetError> {
    let mut acc = FormalSum::from_term(Multisegment::empty());
    for f in factors {
        let fs: FormalSum<Multisegment> = match f {
            GLTerm::One => FormalSum::from_term(Multisegment::empty()),
            GLTerm::StdDelta(ms) => FormalSum::from_term(ms.clone()),
            GLTerm::Irr(ms) => irr_to_std(ms)?,
            GLTerm::IrrProd(a, b) => {
                let fa = irr_to_std(a)?;
                let fb = irr_to_std(b)?;
                let mut prod = FormalSum::zero();
                for (ma, ca) in fa.iter() {
                    for (mb, cb) in fb.iter() {
                        prod.add_term(ma.merged(mb), ca * cb);
                    }
                }
                prod
            }
        };
        let mut next = FormalSum::zero();
        for (ma, ca) in acc.iter() {
            for (mb, cb) in fs.iter() {
                next.add_term(ma.merged(mb), ca * cb);
            }
        }
        acc = next;
    }
    Ok(acc)
}

/// Restriction of an induced `f_1 x ... x f_k x base` through
/// multiplicativity: the twisted comultiplication of the product against the
/// restriction of the base. Classical parts that do not resolve on the nose
/// stay as unresolved induced pieces; [`resolve_closed`] handles the pieces
/// with closed decompositions.
pub fn mu_star_induced(
    factors: &[GLTerm],
    base: &ClassicalIrr,
) -> Result<FormalSum<BiTerm>, JacquetError> {
    let base_mu = mu_star(base)?;
    mu_star_induced_over(factors, &base_mu)
}

/// Same as [`mu_star_induced`], with the restriction of the base supplied by
/// the caller (used by the database layer for catalogued bases).
pub fn mu_star_induced_over(
    factors: &[GLTerm],
    base_mu: &FormalSum<BiTerm>,
) -> Result<FormalSum<BiTerm>, JacquetError> {
    let std_forms = factors_to_std(factors)?;
    let mut out = FormalSum::zero();
    for (ms, c0) in std_forms.iter() {
        for (t, c1) in twisted_mstar_std(ms).iter() {
            for (bt, c2) in base_mu.iter() {
                let gl_products = expand_product(&[t.left.clone(), bt.gl.clone()])?;
                let cl = attach_right(&t.right, &bt.cl);
                for (g, m) in gl_products {
                    out.add_term(BiTerm::new(g, cl.clone()), c0 * c1 * c2 * m);
                }
            }
        }
    }
    Ok(out)
}

/// Prepends a general linear right leg to a classical part, as an unresolved
/// induced piece.
fn attach_right(right: &GLTerm, cl: &ClTerm) -> ClTerm {
    let add = match right {
        GLTerm::One => return cl.clone(),
        GLTerm::StdDelta(ms) => ms.clone(),
        // Right legs of the twisted comultiplication stay in the standard
        // basis by construction.
        GLTerm::Irr(ms) => ms.clone(),
        GLTerm::IrrProd(a, b) => a.merged(b),
    };
    match cl {
        ClTerm::Irr(pi) => ClTerm::induced(&add, pi.clone()),
        ClTerm::Induced(ms, pi) => ClTerm::induced(&add.merged(ms), pi.clone()),
    }
}

/// Resolves the induced classical parts with closed decompositions: a single
/// segment over the cuspidal splits by the segment rules; everything else is
/// kept as is.
pub fn resolve_closed(sum: &FormalSum<BiTerm>) -> Result<FormalSum<BiTerm>, JacquetError> {
    let mut out = FormalSum::zero();
    for (bt, c) in sum.iter() {
        match &bt.cl {
            ClTerm::Induced(ms, pi)
                if ms.segments().len() == 1
                    && pi.is_tempered()
                    && *pi.tempered_part() == TemperedLabel::Cusp =>
            {
                let pieces = resolve_segment_cusp(pi.ctx(), ms.segments()[0])?;
                for (lbl, m) in pieces.iter() {
                    out.add_term(BiTerm::new(bt.gl.clone(), ClTerm::Irr(lbl.clone())), c * m);
                }
            }
            _ => out.add_term(bt.clone(), c),
        }
    }
    Ok(out)
}

/// The twisted Jacquet restriction of an irreducible label, through the
/// closed formulas catalogued in this module.
pub fn mu_star(pi: &ClassicalIrr) -> Result<FormalSum<BiTerm>, JacquetError> {
    use crate::classical_reps::Sign;
    let ctx = pi.ctx();
    let alpha = ctx.alpha();
    if pi.is_tempered() {
        match pi.tempered_part() {
            TemperedLabel::Cusp => {
                return Ok(FormalSum::from_term(BiTerm::unit(pi.clone())));
            }
            TemperedLabel::DeltaZeroSigned(_) => {
                let mut out = FormalSum::from_term(BiTerm::unit(pi.clone()));
                out.add_term(
                    BiTerm::new(
                        GLTerm::delta(Segment::singleton(HalfInt::ZERO)),
                        ClTerm::Irr(ClassicalIrr::cusp(ctx)),
                    ),
                    1,
                );
                return Ok(out);
            }
            TemperedLabel::GenSteinberg(seg) => {
                return jm_seg_ds(ctx, *seg, Sign::Plus);
            }
            TemperedLabel::SegSigned(seg, sign) => {
                return jm_seg_ds(ctx, *seg, *sign);
            }
            TemperedLabel::TauSigned(sym, sign, inner) => {
                // The "+" piece over a generalized Steinberg on [alpha, d]
                // with symmetric part [-c,c], c = alpha - 1, is the positive
                // split of the segment [-c, d].
                if let TemperedLabel::GenSteinberg(upper) = &**inner {
                    if *sign == Sign::Plus && sym.e() == alpha - 1 {
                        let whole = Segment::new(sym.b(), upper.e())
                            .expect("symmetric part sits below the Steinberg");
                        return jm_seg_ds(ctx, whole, Sign::Plus);
                    }
                }
                return Err(JacquetError::Unsupported(pi.to_string()));
            }
            TemperedLabel::TemperedInd(ms, inner) => {
                let inner_label = ClassicalIrr::tempered((**inner).clone(), ctx)?;
                let factors: Vec<GLTerm> = ms
                    .segments()
                    .iter()
                    .map(|s| GLTerm::delta(*s))
                    .collect();
                let raw = mu_star_induced(&factors, &inner_label)?;
                // The full-degree induced term is the label itself.
                let self_cl = ClTerm::induced(ms, inner_label);
                let mut replaced = FormalSum::zero();
                for (bt, c) in raw.iter() {
                    if bt.cl == self_cl {
                        replaced.add_term(
                            BiTerm::new(bt.gl.clone(), ClTerm::Irr(pi.clone())),
                            c,
                        );
                    } else {
                        replaced.add_term(bt.clone(), c);
                    }
                }
                return resolve_closed(&replaced);
            }
            TemperedLabel::StronglyPositive(_) => {
                return Err(JacquetError::Unsupported(pi.to_string()));
            }
        }
    }
    let d = pi.langlands_part();
    match pi.tempered_part() {
        TemperedLabel::Cusp => {
            if d.segments().len() == 1 {
                let seg = d.segments()[0];
                if ctx.on_lattice(seg.b()) && segment_reducible(ctx, seg) {
                    return jm_seg_q(ctx, seg);
                }
                let raw = mu_star_induced(&[GLTerm::delta(seg)], &ClassicalIrr::cusp(ctx))?;
                return resolve_closed(&raw);
            }
            // Descending spreads L([alpha+n], ..., [alpha]; sigma).
            if alpha > HalfInt::ZERO && d.segments().iter().all(|s| s.len() == 1) {
                let mut pts: Vec<HalfInt> = d.segments().iter().map(|s| s.b()).collect();
                pts.sort();
                let consecutive = pts.windows(2).all(|w| w[1] == w[0] + 1)
                    && pts[0] == alpha
                    && pts.len() == d.segments().len();
                if consecutive {
                    return mu_star_steinberg_spread(ctx, (pts.len() - 1) as i64);
                }
            }
            Err(JacquetError::Unsupported(pi.to_string()))
        }
        TemperedLabel::GenSteinberg(upper) => {
            // L([-c, alpha-1]; delta([alpha,d]; sigma)) with c < alpha - 1 is
            // the positive split of the segment [-c, d].
            if d.segments().len() == 1 && upper.b() == alpha {
                let low = d.segments()[0];
                if low.e() == alpha - 1 && -low.b() < alpha - 1 {
                    let whole = Segment::new(low.b(), upper.e())
                        .expect("low part sits below the Steinberg");
                    return jm_seg_ds(ctx, whole, crate::classical_reps::Sign::Plus);
                }
            }
            Err(JacquetError::Unsupported(pi.to_string()))
        }
        _ => Err(JacquetError::Unsupported(pi.to_string())),
    }
}

/// The general linear column of a restriction: the terms over the bare
/// cuspidal, as a plain sum in the general linear ring.
pub fn s_gl(sum: &FormalSum<BiTerm>) -> FormalSum<GLTerm> {
    let mut out = FormalSum::zero();
    for (bt, c) in sum.iter() {
        if let ClTerm::Irr(pi) = &bt.cl {
            if pi.is_tempered() && *pi.tempered_part() == TemperedLabel::Cusp {
                out.add_term(bt.gl.clone(), c);
            }
        }
    }
    out
}

/// The terms of a restriction whose general linear part has the given degree.
pub fn s_level(sum: &FormalSum<BiTerm>, level: i64) -> FormalSum<BiTerm> {
    sum.filter(|bt| bt.gl.degree() == level)
}

/// The general linear column of an induced `f_1 x ... x f_k x tau`: the
/// unit-right part of the twisted comultiplication of the product, times the
/// column of the inducing label, in the irreducible basis.
pub fn s_gl_induced(
    factors: &[GLTerm],
    base_sgl: &FormalSum<GLTerm>,
) -> Result<FormalSum<GLTerm>, JacquetError> {
    let std_forms = factors_to_std(factors)?;
    let mut tw = FormalSum::zero();
    for (ms, c) in std_forms.iter() {
        for (t, m) in crate::gl_ring::twisted_mstar_gl_std(ms).iter() {
            tw.add_term(t.clone(), c * m);
        }
    }
    Ok(crate::gl_ring::mul_expand(&tw, base_sgl)?)
}

/// Transport of a general linear column along the duality involution: each
/// irreducible class maps to the co-dual of its contragredient.
pub fn dual_transport_gl(sum: &FormalSum<GLTerm>) -> Result<FormalSum<GLTerm>, JacquetError> {
    let mut out = FormalSum::zero();
    for (t, c) in sum.iter() {
        let mapped = match t {
            GLTerm::One => GLTerm::One,
            GLTerm::StdDelta(ms) | GLTerm::Irr(ms) => {
                if matches!(t, GLTerm::StdDelta(_)) && ms.segments().len() > 1 {
                    return Err(JacquetError::Unsupported(format!(
                        "cannot transport the standard product {t}"
                    )));
                }
                GLTerm::irr(crate::gl_ring::zelevinsky_involution(&ms.contragredient()))
            }
            GLTerm::IrrProd(..) => {
                return Err(JacquetError::Unsupported(format!(
                    "cannot transport the formal product {t}"
                )));
            }
        };
        out.add_term(mapped, c);
    }
    Ok(out)
}

/// Iterated cuspidal chains of a label: the degree-one terms of the
/// restriction, recursed through their classical parts. Each chain lists the
/// general linear points peeled off in order.
pub fn cuspidal_chains(
    pi: &ClassicalIrr,
    mu: &dyn Fn(&ClassicalIrr) -> Result<FormalSum<BiTerm>, JacquetError>,
) -> Result<FormalSum<Vec<HalfInt>>, JacquetError> {
    if pi.degree() == 0 {
        return Ok(FormalSum::from_term(Vec::new()));
    }
    let m = mu(pi)?;
    let mut out = FormalSum::zero();
    for (bt, c) in s_level(&m, 1).iter() {
        let point = bt.gl.support()[0];
        let tail = match &bt.cl {
            ClTerm::Irr(t) => t,
            ClTerm::Induced(..) => {
                return Err(JacquetError::Unsupported(format!(
                    "unresolved induced piece {} in a chain computation",
                    bt.cl
                )))
            }
        };
        for (chain, c2) in cuspidal_chains(tail, mu)?.iter() {
            let mut full = Vec::with_capacity(chain.len() + 1);
            full.push(point);
            full.extend_from_slice(chain);
            out.add_term(full, c * c2);
        }
    }
    Ok(out)
}
