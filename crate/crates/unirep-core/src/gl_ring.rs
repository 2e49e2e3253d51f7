//! The Grothendieck ring of the general linear groups on one cuspidal line.
//!
//! Basis terms are [`GLTerm`]s: standard modules (products of segment
//! representations `d(seg)`), irreducible Langlands classes `Lgl(...)`, and the
//! ring unit. Virtual representations are [`FormalSum`]s over such terms.
//!
//! The module implements the two comultiplications `m*` (sub and quotient
//! filtration of a segment representation), the twisted comultiplication `M*`
//! compatible with induction to the classical groups, its general-linear part
//! on ladder classes, the Zelevinsky involution via the greedy chain
//! algorithm, and the standard-to-irreducible basis change for total support
//! up to three points, which is the exact range in which products are
//! expanded.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::line_core::{HalfInt, Multisegment, Segment};

/// Errors from ring computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GlError {
    /// Products are expanded only when the total support has at most three
    /// points; larger products have no closed basis-change here.
    #[error("unsupported expansion: total support size {size} exceeds 3")]
    UnsupportedExpansion { size: i64 },
    /// The ladder formula applies to ladders only.
    #[error("multisegment {ms} is not a ladder")]
    NotLadder { ms: Multisegment },
}

/// A finitely supported integer combination of basis terms.
///
/// No zero coefficients are ever stored, so structural equality is equality of
/// virtual representations in the chosen basis.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct FormalSum<T: Ord> {
    terms: BTreeMap<T, i64>,
}

impl<T: Ord> Default for FormalSum<T> {
    fn default() -> Self {
        FormalSum { terms: BTreeMap::new() }
    }
}

impl<T: Ord> FormalSum<T> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_term(t: T) -> Self {
        let mut s = Self::zero();
        s.add_term(t, 1);
        s
    }

    pub fn add_term(&mut self, t: T, c: i64) {
        if c == 0 {
            return;
        }
        match self.terms.entry(t) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if *o.get() == 0 {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of distinct basis terms.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Sum of absolute coefficients (length counted with multiplicity).
    pub fn total_multiplicity(&self) -> i64 {
        self.terms.values().map(|c| c.abs()).sum()
    }

    pub fn coeff(&self, t: &T) -> i64 {
        self.terms.get(t).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&T, i64)> {
        self.terms.iter().map(|(t, c)| (t, *c))
    }

    pub fn scaled(mut self, k: i64) -> Self {
        if k == 0 {
            return Self::zero();
        }
        for v in self.terms.values_mut() {
            *v *= k;
        }
        self
    }

    pub fn map<U: Ord>(&self, mut f: impl FnMut(&T) -> U) -> FormalSum<U>
    where
        T: Clone,
    {
        let mut out = FormalSum::zero();
        for (t, c) in self.iter() {
            out.add_term(f(t), c);
        }
        out
    }

    pub fn filter(&self, mut keep: impl FnMut(&T) -> bool) -> Self
    where
        T: Clone,
    {
        let mut out = Self::zero();
        for (t, c) in self.iter() {
            if keep(t) {
                out.add_term(t.clone(), c);
            }
        }
        out
    }
}

impl<T: Ord> FromIterator<(T, i64)> for FormalSum<T> {
    fn from_iter<I: IntoIterator<Item = (T, i64)>>(iter: I) -> Self {
        let mut s = Self::zero();
        for (t, c) in iter {
            s.add_term(t, c);
        }
        s
    }
}

impl<T: Ord> IntoIterator for FormalSum<T> {
    type Item = (T, i64);
    type IntoIter = std::collections::btree_map::IntoIter<T, i64>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.into_iter()
    }
}

impl<T: Ord + Clone> std::ops::Add for FormalSum<T> {
    type Output = FormalSum<T>;
    fn add(mut self, rhs: FormalSum<T>) -> FormalSum<T> {
        for (t, c) in rhs {
            self.add_term(t, c);
        }
        self
    }
}

impl<T: Ord + Clone> std::ops::Sub for FormalSum<T> {
    type Output = FormalSum<T>;
    fn sub(mut self, rhs: FormalSum<T>) -> FormalSum<T> {
        for (t, c) in rhs {
            self.add_term(t, -c);
        }
        self
    }
}

impl<T: Ord + fmt::Display> fmt::Display for FormalSum<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (t, c)) in self.terms.iter().enumerate() {
            if k == 0 {
                if *c < 0 {
                    write!(f, "-")?;
                }
            } else if *c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            if a != 1 {
                write!(f, "{a}*")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

/// A basis term of the general-linear Grothendieck ring.
///
/// `StdDelta` is a product of segment representations (a standard module up to
/// reordering); `Irr` is an irreducible Langlands class `L(a)`; `IrrProd` is a
/// formal unexpanded product of two irreducible classes, used only where the
/// total support exceeds the expansion range.
///
/// Normalizations kept by the constructors: the empty product is `One`, and an
/// irreducible class with a single segment is stored as `StdDelta` since the
/// two coincide there.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum GLTerm {
    One,
    StdDelta(Multisegment),
    Irr(Multisegment),
    IrrProd(Multisegment, Multisegment),
}

impl GLTerm {
    pub fn one() -> Self {
        GLTerm::One
    }

    /// A product of segment representations.
    pub fn std(ms: Multisegment) -> Self {
        if ms.is_empty() {
            GLTerm::One
        } else {
            GLTerm::StdDelta(ms)
        }
    }

    /// A single segment representation `d(seg)`.
    pub fn delta(seg: Segment) -> Self {
        GLTerm::StdDelta(Multisegment::single(seg))
    }

    /// `d(seg)` when present, the unit otherwise.
    pub fn delta_opt(seg: Option<Segment>) -> Self {
        match seg {
            Some(s) => GLTerm::delta(s),
            None => GLTerm::One,
        }
    }

    /// An irreducible Langlands class `Lgl(a)`.
    pub fn irr(ms: Multisegment) -> Self {
        if ms.is_empty() {
            GLTerm::One
        } else if ms.segments().len() == 1 {
            GLTerm::StdDelta(ms)
        } else {
            GLTerm::Irr(ms)
        }
    }

    /// The co-segment class: the irreducible with all-singleton Langlands
    /// data on the support of `seg`.
    pub fn zel(seg: Segment) -> Self {
        let singles: Vec<Segment> = seg.support().into_iter().map(Segment::singleton).collect();
        GLTerm::irr(Multisegment::new(singles))
    }

    /// `zel` when present, the unit otherwise.
    pub fn zel_opt(seg: Option<Segment>) -> Self {
        match seg {
            Some(s) => GLTerm::zel(s),
            None => GLTerm::One,
        }
    }

    /// A formal product of two irreducible classes.
    pub fn irr_prod(a: Multisegment, b: Multisegment) -> Self {
        if a.is_empty() {
            GLTerm::irr(b)
        } else if b.is_empty() {
            GLTerm::irr(a)
        } else {
            GLTerm::IrrProd(a, b)
        }
    }

    /// Total support size.
    pub fn degree(&self) -> i64 {
        match self {
            GLTerm::One => 0,
            GLTerm::StdDelta(ms) | GLTerm::Irr(ms) => ms.size(),
            GLTerm::IrrProd(a, b) => a.size() + b.size(),
        }
    }

    /// All support points with multiplicity, sorted.
    pub fn support(&self) -> Vec<HalfInt> {
        match self {
            GLTerm::One => Vec::new(),
            GLTerm::StdDelta(ms) | GLTerm::Irr(ms) => ms.support(),
            GLTerm::IrrProd(a, b) => {
                let mut pts = a.support();
                pts.extend(b.support());
                pts.sort();
                pts
            }
        }
    }

    /// Product of two standard-basis terms (products of segment
    /// representations); `None` when either side is already irreducible-basis.
    pub fn std_mul(&self, other: &GLTerm) -> Option<GLTerm> {
        let to_ms = |t: &GLTerm| -> Option<Multisegment> {
            match t {
                GLTerm::One => Some(Multisegment::empty()),
                GLTerm::StdDelta(ms) => Some(ms.clone()),
                _ => None,
            }
        };
        let a = to_ms(self)?;
        let b = to_ms(other)?;
        Some(GLTerm::std(a.merged(&b)))
    }
}

impl fmt::Display for GLTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GLTerm::One => write!(f, "1"),
            GLTerm::StdDelta(ms) => {
                let parts: Vec<String> =
                    ms.segments().iter().map(|s| format!("d({s})")).collect();
                write!(f, "{}", parts.join("*"))
            }
            GLTerm::Irr(ms) => write!(f, "Lgl({ms})"),
            GLTerm::IrrProd(a, b) => write!(f, "Lgl({a})*Lgl({b})"),
        }
    }
}

/// An elementary tensor in the two-sided Jacquet picture of the ring.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct TensorGL {
    pub left: GLTerm,
    pub right: GLTerm,
}

impl TensorGL {
    pub fn new(left: GLTerm, right: GLTerm) -> Self {
        TensorGL { left, right }
    }
}

impl fmt::Display for TensorGL {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (x) {}", self.left, self.right)
    }
}

/// `m*` of a segment representation: the sum of `d([i+1,e]) (x) d([b,i])` for
/// `i = b-1, ..., e`, with empty segments contributing the unit. Exactly
/// `len + 1` terms.
pub fn mstar_delta(d: Segment) -> FormalSum<TensorGL> {
    let (b, e) = (d.b(), d.e());
    let mut out = FormalSum::zero();
    for k in -1..d.len() {
        let i = b + k;
        let left = GLTerm::delta_opt(Segment::try_new(i + 1, e));
        let right = GLTerm::delta_opt(Segment::try_new(b, i));
        out.add_term(TensorGL::new(left, right), 1);
    }
    out
}

/// `m*` of a co-segment class: the sum of `zel([b,i]) (x) zel([i+1,e])`.
pub fn mstar_zel(d: Segment) -> FormalSum<TensorGL> {
    let (b, e) = (d.b(), d.e());
    let mut out = FormalSum::zero();
    for k in -1..d.len() {
        let i = b + k;
        let left = GLTerm::zel_opt(Segment::try_new(b, i));
        let right = GLTerm::zel_opt(Segment::try_new(i + 1, e));
        out.add_term(TensorGL::new(left, right), 1);
    }
    out
}

/// The twisted comultiplication `M*` of a segment representation:
/// the double sum of `d([-i,-b]) * d([j+1,e]) (x) d([i+1,j])` over
/// `b-1 <= i <= e`, `i <= j <= e`. Exactly `(len+1)(len+2)/2` terms.
pub fn twisted_mstar_delta(d: Segment) -> FormalSum<TensorGL> {
    let (b, e) = (d.b(), d.e());
    let mut out = FormalSum::zero();
    for ki in -1..d.len() {
        let i = b + ki;
        for kj in ki..d.len() {
            let j = b + kj;
            let l1 = Segment::try_new(-i, -b);
            let l2 = Segment::try_new(j + 1, e);
            let left = GLTerm::delta_opt(l1)
                .std_mul(&GLTerm::delta_opt(l2))
                .expect("segment factors stay in the standard basis");
            let right = GLTerm::delta_opt(Segment::try_new(i + 1, j));
            out.add_term(TensorGL::new(left, right), 1);
        }
    }
    out
}

/// `M*` of a product of segment representations, via multiplicativity:
/// `M*(d1 x d2) = M*(d1) M*(d2)` with componentwise tensor products.
pub fn twisted_mstar_std(ms: &Multisegment) -> FormalSum<TensorGL> {
    let mut acc = FormalSum::from_term(TensorGL::new(GLTerm::One, GLTerm::One));
    for seg in ms.segments() {
        let step = twisted_mstar_delta(*seg);
        let mut next = FormalSum::zero();
        for (t1, c1) in acc.iter() {
            for (t2, c2) in step.iter() {
                let left = t1.left.std_mul(&t2.left).expect("standard-basis factors");
                let right = t1.right.std_mul(&t2.right).expect("standard-basis factors");
                next.add_term(TensorGL::new(left, right), c1 * c2);
            }
        }
        acc = next;
    }
    acc
}

/// General-linear part of `M*` on a product of segment representations: the
/// terms whose right leg is the unit, as a plain sum in the ring.
pub fn twisted_mstar_gl_std(ms: &Multisegment) -> FormalSum<GLTerm> {
    let mut out = FormalSum::zero();
    for (t, c) in twisted_mstar_std(ms).iter() {
        if t.right == GLTerm::One {
            out.add_term(t.left.clone(), c);
        }
    }
    out
}

/// General-linear part of `M*` on a ladder class `L(a)`:
/// the sum over choices `a_i - 1 <= x_i <= b_i` with `x_k < ... < x_1` of
/// `L(([-x_i,-a_i])_i) x L(([x_i+1,b_i])_i)`.
///
/// When the total support has at most three points each product is expanded
/// into the irreducible basis; beyond that the factors stay as a formal pair.
pub fn twisted_mstar_gl_ladder(a: &Multisegment) -> Result<FormalSum<GLTerm>, GlError> {
    if !a.is_ladder() {
        return Err(GlError::NotLadder { ms: a.clone() });
    }
    let segs = a.segments();
    let k = segs.len();
    let expand = a.size() <= 3;
    let mut out = FormalSum::zero();
    // Choices walk the canonical order (largest segment first), so the strict
    // inequality chain is x_prev > x_cur at each step.
    let mut choice: Vec<HalfInt> = Vec::with_capacity(k);
    fn rec(
        segs: &[Segment],
        choice: &mut Vec<HalfInt>,
        expand: bool,
        out: &mut FormalSum<GLTerm>,
    ) -> Result<(), GlError> {
        let i = choice.len();
        if i == segs.len() {
            let mut neg: Vec<Segment> = Vec::new();
            let mut pos: Vec<Segment> = Vec::new();
            for (s, &x) in segs.iter().zip(choice.iter()) {
                if let Some(seg) = Segment::try_new(-x, -s.b()) {
                    neg.push(seg);
                }
                if let Some(seg) = Segment::try_new(x + 1, s.e()) {
                    pos.push(seg);
                }
            }
            let left = Multisegment::new(neg);
            let right = Multisegment::new(pos);
            if expand {
                let product = expand_product(&[GLTerm::irr(left), GLTerm::irr(right)])?;
                for (t, c) in product {
                    out.add_term(t, c);
                }
            } else {
                out.add_term(GLTerm::irr_prod(left, right), 1);
            }
            return Ok(());
        }
        let s = segs[i];
        let mut x = s.b() - 1;
        while x <= s.e() {
            if i == 0 || x < choice[i - 1] {
                choice.push(x);
                rec(segs, choice, expand, out)?;
                choice.pop();
            }
            x = x + 1;
        }
        Ok(())
    }
    rec(segs, &mut choice, expand, &mut out)?;
    Ok(out)
}

/// The Zelevinsky involution on Langlands data, by the greedy chain
/// algorithm: repeatedly take, from the maximal end downwards, a maximal
/// chain of segments with ends `e, e-1, ...` and strictly decreasing begins
/// (choosing the largest available begin at each step), record the segment
/// `[e - len + 1, e]`, and shorten every chain member by its last point.
///
/// Involutive, support-preserving, and a ring homomorphism against the
/// expanded products; all three are checked property-style in the tests.
pub fn zelevinsky_involution(a: &Multisegment) -> Multisegment {
    let mut rows: Vec<Segment> = a.segments().to_vec();
    let mut dual: Vec<Segment> = Vec::new();
    while !rows.is_empty() {
        // Work on the coset of the maximal end so chains never cross cosets.
        let e_max = rows.iter().map(|s| s.e()).max().expect("nonempty");
        let mut chain: Vec<usize> = Vec::new();
        let mut cur_end = e_max;
        let mut cur_begin: Option<HalfInt> = None;
        loop {
            let mut best: Option<usize> = None;
            for (idx, s) in rows.iter().enumerate() {
                if chain.contains(&idx) || s.e() != cur_end {
                    continue;
                }
                if let Some(cb) = cur_begin {
                    if s.b() >= cb {
                        continue;
                    }
                }
                if best.map_or(true, |b| s.b() > rows[b].b()) {
                    best = Some(idx);
                }
            }
            match best {
                Some(idx) => {
                    cur_begin = Some(rows[idx].b());
                    chain.push(idx);
                    cur_end = cur_end - 1;
                }
                None => break,
            }
        }
        let len = chain.len() as i64;
        debug_assert!(len > 0, "maximal end always starts a chain");
        let dual_seg = Segment::new(e_max - (len - 1), e_max).expect("chain length is positive");
        dual.push(dual_seg);
        // Shorten chain members by their final point; drop emptied segments.
        let mut next_rows: Vec<Segment> = Vec::new();
        for (idx, s) in rows.iter().enumerate() {
            if chain.contains(&idx) {
                if let Some(shorter) = Segment::try_new(s.b(), s.e() - 1) {
                    next_rows.push(shorter);
                }
            } else {
                next_rows.push(*s);
            }
        }
        rows = next_rows;
    }
    Multisegment::new(dual)
}

/// Multiplicity of each irreducible class in the standard module of `a`,
/// for total support size at most three.
///
/// Within that range the multiplicities are all zero or one and are given by
/// the two-segment exchange rule together with the three-point chain case;
/// independent clusters (groups of segments with no points at linking
/// distance) contribute multiplicatively.
pub fn std_to_irr(a: &Multisegment) -> Result<FormalSum<Multisegment>, GlError> {
    let size = a.size();
    if size > 3 {
        return Err(GlError::UnsupportedExpansion { size });
    }
    let clusters = split_clusters(a);
    let mut acc: FormalSum<Multisegment> = FormalSum::from_term(Multisegment::empty());
    for cluster in clusters {
        let part = std_to_irr_cluster(&cluster);
        let mut next = FormalSum::zero();
        for (m1, c1) in acc.iter() {
            for (m2, c2) in part.iter() {
                next.add_term(m1.merged(m2), c1 * c2);
            }
        }
        acc = next;
    }
    Ok(acc)
}

/// Groups segments into clusters that can interact: two segments belong
/// together when some points of theirs are within one step on a common coset.
fn split_clusters(a: &Multisegment) -> Vec<Multisegment> {
    let segs = a.segments();
    let n = segs.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, i: usize) -> usize {
        if parent[i] != i {
            let r = find(parent, parent[i]);
            parent[i] = r;
        }
        parent[i]
    }
    let near = |s: Segment, t: Segment| -> bool {
        s.b().same_coset(t.b())
            && s.b().max(t.b()).doubled() <= s.e().min(t.e()).doubled() + 2
    };
    for i in 0..n {
        for j in (i + 1)..n {
            if near(segs[i], segs[j]) {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                if ri != rj {
                    parent[ri] = rj;
                }
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<Segment>> = BTreeMap::new();
    for i in 0..n {
        let r = find(&mut parent, i);
        groups.entry(r).or_default().push(segs[i]);
    }
    groups.into_values().map(Multisegment::new).collect()
}

fn std_to_irr_cluster(a: &Multisegment) -> FormalSum<Multisegment> {
    let segs = a.segments();
    match segs.len() {
        0 | 1 => FormalSum::from_term(a.clone()),
        2 => {
            let (d1, d2) = (segs[0], segs[1]);
            let mut out = FormalSum::from_term(a.clone());
            if d1.is_linked(d2) {
                let union = d1.union_with(d2).expect("linked segments have a segment union");
                let mut pieces = vec![union];
                if let Some(meet) = d1.intersection(d2) {
                    pieces.push(meet);
                }
                out.add_term(Multisegment::new(pieces), 1);
            }
            out
        }
        3 => {
            // Total size three forces three singletons in one cluster.
            let mut pts: Vec<HalfInt> = segs.iter().map(|s| s.b()).collect();
            pts.sort();
            let (x, y, z) = (pts[0], pts[1], pts[2]);
            debug_assert!(segs.iter().all(|s| s.len() == 1));
            let seg2 = |lo: HalfInt, hi: HalfInt| Segment::new(lo, hi).expect("adjacent points");
            let mut out = FormalSum::from_term(a.clone());
            if y == x + 1 && z == y + 1 {
                out.add_term(
                    Multisegment::new(vec![seg2(x, y), Segment::singleton(z)]),
                    1,
                );
                out.add_term(
                    Multisegment::new(vec![Segment::singleton(x), seg2(y, z)]),
                    1,
                );
                out.add_term(Multisegment::single(seg2(x, z)), 1);
            } else if x == y && z == y + 1 {
                out.add_term(
                    Multisegment::new(vec![seg2(y, z), Segment::singleton(x)]),
                    1,
                );
            } else if y == x + 1 && y == z {
                out.add_term(
                    Multisegment::new(vec![seg2(x, y), Segment::singleton(z)]),
                    1,
                );
            } else {
                // x = y = z: the triple power of one cuspidal is irreducible.
                debug_assert!(x == y && y == z);
            }
            out
        }
        _ => unreachable!("clusters of total size <= 3 have at most 3 segments"),
    }
}

/// Expansion of an irreducible class into the standard basis, inverse to
/// [`std_to_irr`] by triangularity. Total support size at most three.
pub fn irr_to_std(a: &Multisegment) -> Result<FormalSum<Multisegment>, GlError> {
    let size = a.size();
    if size > 3 {
        return Err(GlError::UnsupportedExpansion { size });
    }
    let mut out = FormalSum::from_term(a.clone());
    let expansion = std_to_irr(a)?;
    for (b, m) in expansion.iter() {
        if b == a {
            continue;
        }
        // Off-diagonal terms have strictly fewer segments, so this recursion
        // descends and terminates.
        let sub = irr_to_std(b)?;
        for (s, c) in sub {
            out.add_term(s, -m * c);
        }
    }
    Ok(out)
}

/// Expands a product of ring terms into the irreducible basis.
///
/// Only defined when the total support has at most three points; the result is
/// independent of the factor order, which the property tests pin down.
pub fn expand_product(factors: &[GLTerm]) -> Result<FormalSum<GLTerm>, GlError> {
    let size: i64 = factors.iter().map(|f| f.degree()).sum();
    if size > 3 {
        return Err(GlError::UnsupportedExpansion { size });
    }
    // Convert every factor to the standard basis and multiply there, where the
    // product is plain multiset union.
    let mut acc: FormalSum<Multisegment> = FormalSum::from_term(Multisegment::empty());
    for f in factors {
        let std_form: FormalSum<Multisegment> = match f {
            GLTerm::One => FormalSum::from_term(Multisegment::empty()),
            GLTerm::StdDelta(ms) => FormalSum::from_term(ms.clone()),
            GLTerm::Irr(ms) => irr_to_std(ms)?,
            GLTerm::IrrProd(a, b) => {
                let sa = irr_to_std(a)?;
                let sb = irr_to_std(b)?;
                let mut prod = FormalSum::zero();
                for (ma, ca) in sa.iter() {
                    for (mb, cb) in sb.iter() {
                        prod.add_term(ma.merged(mb), ca * cb);
                    }
                }
                prod
            }
        };
        let mut next = FormalSum::zero();
        for (m1, c1) in acc.iter() {
            for (m2, c2) in std_form.iter() {
                next.add_term(m1.merged(m2), c1 * c2);
            }
        }
        acc = next;
    }
    // Back to the irreducible basis.
    let mut out = FormalSum::zero();
    for (ms, c) in acc {
        for (b, m) in std_to_irr(&ms)? {
            out.add_term(GLTerm::irr(b), c * m);
        }
    }
    Ok(out)
}

/// Expands a whole sum into the irreducible basis term by term.
pub fn normalize_to_irr(sum: &FormalSum<GLTerm>) -> Result<FormalSum<GLTerm>, GlError> {
    let mut out = FormalSum::zero();
    for (t, c) in sum.iter() {
        for (u, m) in expand_product(std::slice::from_ref(t))? {
            out.add_term(u, c * m);
        }
    }
    Ok(out)
}

/// Product of two sums already in (or reducible to) the irreducible basis,
/// expanded back into the irreducible basis.
pub fn mul_expand(
    a: &FormalSum<GLTerm>,
    b: &FormalSum<GLTerm>,
) -> Result<FormalSum<GLTerm>, GlError> {
    let mut out = FormalSum::zero();
    for (ta, ca) in a.iter() {
        for (tb, cb) in b.iter() {
            for (u, m) in expand_product(&[ta.clone(), tb.clone()])? {
                out.add_term(u, ca * cb * m);
            }
        }
    }
    Ok(out)
}
