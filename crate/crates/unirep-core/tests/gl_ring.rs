//! Ring-level checks: comultiplication shapes, basis change, involution.

use proptest::prelude::*;

use unirep_core::gl_ring::{
    expand_product, irr_to_std, mstar_delta, mstar_zel, mul_expand, normalize_to_irr, std_to_irr,
    twisted_mstar_delta, twisted_mstar_gl_ladder, twisted_mstar_gl_std, twisted_mstar_std,
    zelevinsky_involution, FormalSum, GLTerm, GlError, TensorGL,
};
use unirep_core::line_core::{HalfInt, Multisegment, Segment};

fn h(doubled: i64) -> HalfInt {
    HalfInt::from_doubled(doubled)
}

fn seg(b: i64, e: i64) -> Segment {
    Segment::new(HalfInt::from_int(b), HalfInt::from_int(e)).unwrap()
}

fn seg2(bd: i64, ed: i64) -> Segment {
    Segment::new(h(bd), h(ed)).unwrap()
}

fn ms(segs: Vec<Segment>) -> Multisegment {
    Multisegment::new(segs)
}

#[test]
fn mstar_delta_on_two_point_segment() {
    let d = seg(0, 1);
    let got = mstar_delta(d);
    let mut want = FormalSum::zero();
    want.add_term(TensorGL::new(GLTerm::delta(seg(0, 1)), GLTerm::One), 1);
    want.add_term(TensorGL::new(GLTerm::delta(seg(1, 1)), GLTerm::delta(seg(0, 0))), 1);
    want.add_term(TensorGL::new(GLTerm::One, GLTerm::delta(seg(0, 1))), 1);
    assert_eq!(got, want);
}

#[test]
fn mstar_zel_on_two_point_segment() {
    let d = seg(0, 1);
    let got = mstar_zel(d);
    let mut want = FormalSum::zero();
    want.add_term(TensorGL::new(GLTerm::One, GLTerm::zel(seg(0, 1))), 1);
    want.add_term(TensorGL::new(GLTerm::delta(seg(0, 0)), GLTerm::delta(seg(1, 1))), 1);
    want.add_term(TensorGL::new(GLTerm::zel(seg(0, 1)), GLTerm::One), 1);
    assert_eq!(got, want);
    // The co-segment class on two points is the two-singleton irreducible.
    assert_eq!(
        GLTerm::zel(seg(0, 1)),
        GLTerm::irr(ms(vec![seg(0, 0), seg(1, 1)]))
    );
}

#[test]
fn twisted_mstar_on_singleton() {
    // [a] at a = 3/2: the three terms [a] (x) 1, 1 (x) [a], [-a] (x) 1.
    let a = seg2(3, 3);
    let got = twisted_mstar_delta(a);
    let mut want = FormalSum::zero();
    want.add_term(TensorGL::new(GLTerm::delta(seg2(3, 3)), GLTerm::One), 1);
    want.add_term(TensorGL::new(GLTerm::One, GLTerm::delta(seg2(3, 3))), 1);
    want.add_term(TensorGL::new(GLTerm::delta(seg2(-3, -3)), GLTerm::One), 1);
    assert_eq!(got, want);
}

#[test]
fn twisted_mstar_gl_on_two_point_segment() {
    let got = twisted_mstar_gl_std(&ms(vec![seg(0, 1)]));
    let mut want = FormalSum::zero();
    want.add_term(GLTerm::delta(seg(0, 1)), 1);
    want.add_term(GLTerm::std(ms(vec![seg(0, 0), seg(1, 1)])), 1);
    want.add_term(GLTerm::delta(seg(-1, 0)), 1);
    assert_eq!(got, want);
}

#[test]
fn twisted_mstar_term_count_on_three_point_segment() {
    // (len+1)(len+2)/2 distinct terms for a single segment.
    let d = seg(0, 2);
    assert_eq!(twisted_mstar_delta(d).term_count(), 10);
    assert_eq!(twisted_mstar_delta(d).total_multiplicity(), 10);
}

#[test]
fn unit_tensor_part_is_the_whole_class() {
    // The 1 (x) - part of the twisted comultiplication of d1 x d2 is exactly
    // 1 (x) d1 x d2.
    let m = ms(vec![seg(0, 1), seg2(1, 3)]);
    let full = twisted_mstar_std(&m);
    let unit_left = full.filter(|t| t.left == GLTerm::One);
    let mut want = FormalSum::zero();
    want.add_term(TensorGL::new(GLTerm::One, GLTerm::std(m.clone())), 1);
    assert_eq!(unit_left, want);
}

#[test]
fn ladder_formula_matches_std_expansion_on_one_segment() {
    // On a single segment the ladder class is the segment representation, so
    // both routes to the general-linear part must agree after expansion.
    for d in [seg(0, 1), seg2(1, 5), seg(-1, 1)] {
        let via_ladder = twisted_mstar_gl_ladder(&ms(vec![d])).unwrap();
        let via_std = normalize_to_irr(&twisted_mstar_gl_std(&ms(vec![d]))).unwrap();
        assert_eq!(via_ladder, via_std, "segment {d}");
    }
}

#[test]
fn ladder_formula_on_two_singleton_ladder() {
    // L([1],[0]): three admissible choices (x1,x2) in {(0,-1),(1,-1),(1,0)}
    // give L([0],[1]), then L([-1]) x L([0]) expanded, then L([-1],[0]).
    let lad = ms(vec![seg(0, 0), seg(1, 1)]);
    assert!(lad.is_ladder());
    let got = twisted_mstar_gl_ladder(&lad).unwrap();
    let mut want = FormalSum::zero();
    want.add_term(GLTerm::irr(ms(vec![seg(0, 0), seg(1, 1)])), 1);
    want.add_term(GLTerm::irr(ms(vec![seg(-1, -1), seg(0, 0)])), 2);
    want.add_term(GLTerm::delta(seg(-1, 0)), 1);
    assert_eq!(got, want);
}

#[test]
fn ladder_formula_agrees_with_multiplicative_route() {
    // L([1],[0]) = d([0]) x d([1]) - d([0,1]) in the ring, and the
    // general-linear part of the twisted comultiplication is a ring
    // homomorphism, so the ladder formula must match the difference of the
    // product route and the segment route.
    let lad = ms(vec![seg(0, 0), seg(1, 1)]);
    let via_ladder = twisted_mstar_gl_ladder(&lad).unwrap();
    let prod = mul_expand(
        &normalize_to_irr(&twisted_mstar_gl_std(&ms(vec![seg(0, 0)]))).unwrap(),
        &normalize_to_irr(&twisted_mstar_gl_std(&ms(vec![seg(1, 1)]))).unwrap(),
    )
    .unwrap();
    let seg_part = normalize_to_irr(&twisted_mstar_gl_std(&ms(vec![seg(0, 1)]))).unwrap();
    assert_eq!(via_ladder, prod - seg_part);
}

#[test]
fn expansion_of_three_adjacent_singletons() {
    let got = expand_product(&[
        GLTerm::delta(seg(0, 0)),
        GLTerm::delta(seg(1, 1)),
        GLTerm::delta(seg(2, 2)),
    ])
    .unwrap();
    let mut want = FormalSum::zero();
    want.add_term(GLTerm::irr(ms(vec![seg(0, 0), seg(1, 1), seg(2, 2)])), 1);
    want.add_term(GLTerm::irr(ms(vec![seg(0, 1), seg(2, 2)])), 1);
    want.add_term(GLTerm::irr(ms(vec![seg(0, 0), seg(1, 2)])), 1);
    want.add_term(GLTerm::delta(seg(0, 2)), 1);
    assert_eq!(got, want);
}

#[test]
fn expansion_with_repeated_point() {
    let got = expand_product(&[
        GLTerm::delta(seg(0, 0)),
        GLTerm::delta(seg(0, 0)),
        GLTerm::delta(seg(1, 1)),
    ])
    .unwrap();
    let mut want = FormalSum::zero();
    want.add_term(
        GLTerm::irr(ms(vec![seg(0, 0), seg(0, 0), seg(1, 1)])),
        1,
    );
    want.add_term(GLTerm::irr(ms(vec![seg(0, 1), seg(0, 0)])), 1);
    assert_eq!(got, want);
}

#[test]
fn expansion_of_unlinked_and_cross_coset_products() {
    // Non-adjacent points commute freely into one irreducible class.
    let got = expand_product(&[GLTerm::delta(seg(0, 0)), GLTerm::delta(seg(2, 2))]).unwrap();
    assert_eq!(got.term_count(), 1);
    assert_eq!(got.coeff(&GLTerm::irr(ms(vec![seg(0, 0), seg(2, 2)]))), 1);
    // Distinct cosets never interact.
    let got = expand_product(&[GLTerm::delta(seg(0, 0)), GLTerm::delta(seg2(1, 1))]).unwrap();
    assert_eq!(got.term_count(), 1);
}

#[test]
fn expansion_rejects_large_supports() {
    let err = expand_product(&[
        GLTerm::delta(seg(0, 1)),
        GLTerm::delta(seg(0, 1)),
    ])
    .unwrap_err();
    assert_eq!(err, GlError::UnsupportedExpansion { size: 4 });
}

#[test]
fn involution_on_frozen_pairs() {
    let pairs = vec![
        (ms(vec![seg(0, 0), seg(1, 1)]), ms(vec![seg(0, 1)])),
        (
            ms(vec![seg(0, 1), seg(1, 1)]),
            ms(vec![seg(0, 0), seg(1, 1), seg(1, 1)]),
        ),
        (
            ms(vec![seg(0, 1), seg(0, 1)]),
            ms(vec![seg(0, 0), seg(0, 0), seg(1, 1), seg(1, 1)]),
        ),
        (
            ms(vec![seg(0, 2), seg(1, 1)]),
            ms(vec![seg(0, 0), seg(1, 1), seg(1, 1), seg(2, 2)]),
        ),
        (
            ms(vec![seg(0, 1), seg(0, 0)]),
            ms(vec![seg(0, 0), seg(0, 0), seg(1, 1)]),
        ),
        (
            ms(vec![seg(0, 2)]),
            ms(vec![seg(0, 0), seg(1, 1), seg(2, 2)]),
        ),
    ];
    for (a, b) in pairs {
        assert_eq!(zelevinsky_involution(&a), b, "dual of {a}");
        assert_eq!(zelevinsky_involution(&b), a, "dual of {b}");
    }
    let self_dual = ms(vec![seg(0, 0), seg(0, 1), seg(1, 1)]);
    assert_eq!(zelevinsky_involution(&self_dual), self_dual);
}

#[test]
fn basis_change_round_trip_on_small_cases() {
    let cases = vec![
        ms(vec![seg(0, 0), seg(1, 1)]),
        ms(vec![seg(0, 0), seg(1, 1), seg(2, 2)]),
        ms(vec![seg(0, 1), seg(2, 2)]),
        ms(vec![seg(0, 1), seg(1, 1)]),
        ms(vec![seg(0, 0), seg(0, 0), seg(1, 1)]),
        ms(vec![seg2(1, 3), seg2(1, 1)]),
        ms(vec![seg(0, 2)]),
    ];
    for a in cases {
        // Express the standard module in irreducibles, then re-expand every
        // irreducible in standard modules: the composite is the identity.
        let irr = std_to_irr(&a).unwrap();
        let mut back = FormalSum::zero();
        for (b, m) in irr.iter() {
            for (s, c) in irr_to_std(b).unwrap() {
                back.add_term(s, m * c);
            }
        }
        assert_eq!(back, FormalSum::from_term(a.clone()), "round trip of {a}");
    }
}

#[test]
fn mul_expand_is_bilinear_glue() {
    let a = expand_product(&[GLTerm::delta(seg(0, 0)), GLTerm::delta(seg(1, 1))]).unwrap();
    let b = FormalSum::from_term(GLTerm::delta(seg2(7, 7)));
    let prod = mul_expand(&a, &b).unwrap();
    assert_eq!(prod.term_count(), 2);
    assert_eq!(prod.total_multiplicity(), 2);
}

fn arb_segment() -> impl Strategy<Value = Segment> {
    ((-6i64..=6), (0i64..=2)).prop_map(|(d, k)| {
        let b = h(d);
        Segment::new(b, b + k).unwrap()
    })
}

fn arb_multisegment(max_segs: usize) -> impl Strategy<Value = Multisegment> {
    prop::collection::vec(arb_segment(), 0..=max_segs).prop_map(Multisegment::new)
}

fn small_multisegment_pair() -> impl Strategy<Value = (Multisegment, Multisegment)> {
    (arb_multisegment(2), arb_multisegment(2))
        .prop_filter("total support fits the expansion range", |(a, b)| {
            a.size() + b.size() <= 3
        })
}

fn invol_term(t: &GLTerm) -> GLTerm {
    match t {
        GLTerm::One => GLTerm::One,
        GLTerm::StdDelta(m) | GLTerm::Irr(m) => GLTerm::irr(zelevinsky_involution(m)),
        GLTerm::IrrProd(..) => panic!("expansion outputs never keep formal products"),
    }
}

proptest! {
    #[test]
    fn involution_is_involutive(a in arb_multisegment(4)) {
        let t = zelevinsky_involution(&a);
        prop_assert_eq!(zelevinsky_involution(&t), a);
    }

    #[test]
    fn involution_preserves_support(a in arb_multisegment(4)) {
        let t = zelevinsky_involution(&a);
        prop_assert_eq!(t.support(), a.support());
    }

    #[test]
    fn involution_is_multiplicative_on_expansions((a, b) in small_multisegment_pair()) {
        let lhs = expand_product(&[GLTerm::irr(a.clone()), GLTerm::irr(b.clone())])
            .unwrap()
            .map(invol_term);
        let rhs = expand_product(&[
            GLTerm::irr(zelevinsky_involution(&a)),
            GLTerm::irr(zelevinsky_involution(&b)),
        ])
        .unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn expansion_is_order_independent(
        factors in prop::collection::vec(arb_segment(), 1..=3)
            .prop_filter("fits", |v| v.iter().map(|s| s.len()).sum::<i64>() <= 3)
    ) {
        let terms: Vec<GLTerm> = factors.iter().map(|s| GLTerm::delta(*s)).collect();
        let forward = expand_product(&terms).unwrap();
        let mut reversed = terms.clone();
        reversed.reverse();
        prop_assert_eq!(&forward, &expand_product(&reversed).unwrap());
        let mut rotated = terms.clone();
        rotated.rotate_left(1);
        prop_assert_eq!(&forward, &expand_product(&rotated).unwrap());
    }

    #[test]
    fn comultiplication_term_counts(s in arb_segment()) {
        let n = s.len();
        prop_assert_eq!(mstar_delta(s).term_count() as i64, n + 1);
        prop_assert_eq!(mstar_zel(s).term_count() as i64, n + 1);
        // Index pairs can merge only on self-contragredient segments, so the
        // count with multiplicity is the stable invariant.
        prop_assert_eq!(
            twisted_mstar_delta(s).total_multiplicity(),
            (n + 1) * (n + 2) / 2
        );
    }

    #[test]
    fn comultiplications_preserve_degree(s in arb_segment()) {
        for (t, _) in mstar_delta(s).iter() {
            prop_assert_eq!(t.left.degree() + t.right.degree(), s.len());
        }
        for (t, _) in twisted_mstar_delta(s).iter() {
            prop_assert_eq!(t.left.degree() + t.right.degree(), s.len());
        }
    }

    #[test]
    fn plain_comultiplication_is_coassociative(s in arb_segment()) {
        // Both refinements of m* land in the triple sum over
        // b-1 <= i <= j <= e, so comparing multisets of triples suffices.
        let apply_left = |t: &TensorGL| -> Vec<(GLTerm, GLTerm, GLTerm)> {
            let inner = match &t.left {
                GLTerm::One => mstar_delta_unit(),
                GLTerm::StdDelta(m) => {
                    assert_eq!(m.segments().len(), 1);
                    mstar_delta(m.segments()[0])
                }
                _ => unreachable!(),
            };
            inner
                .iter()
                .map(|(u, _)| (u.left.clone(), u.right.clone(), t.right.clone()))
                .collect()
        };
        let apply_right = |t: &TensorGL| -> Vec<(GLTerm, GLTerm, GLTerm)> {
            let inner = match &t.right {
                GLTerm::One => mstar_delta_unit(),
                GLTerm::StdDelta(m) => {
                    assert_eq!(m.segments().len(), 1);
                    mstar_delta(m.segments()[0])
                }
                _ => unreachable!(),
            };
            inner
                .iter()
                .map(|(u, _)| (t.left.clone(), u.left.clone(), u.right.clone()))
                .collect()
        };
        let mut lhs: FormalSum<(GLTerm, GLTerm, GLTerm)> = FormalSum::zero();
        for (t, c) in mstar_delta(s).iter() {
            for triple in apply_left(t) {
                lhs.add_term(triple, c);
            }
        }
        let mut rhs: FormalSum<(GLTerm, GLTerm, GLTerm)> = FormalSum::zero();
        for (t, c) in mstar_delta(s).iter() {
            for triple in apply_right(t) {
                rhs.add_term(triple, c);
            }
        }
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn ladder_general_linear_part_expands_consistently(
        (b, k, gap) in ((-4i64..=4), (0i64..=1), (2i64..=3))
    ) {
        // Rows at distance two or more are unlinked, so the ladder class is
        // the standard module itself and the ladder formula must agree with
        // multiplicativity through the standard basis.
        let lo = h(b);
        let d1 = Segment::new(lo, lo + k).unwrap();
        let start2 = lo + (k + gap);
        let d2 = Segment::new(start2, start2).unwrap();
        let lad = Multisegment::new(vec![d1, d2]);
        prop_assert!(lad.is_ladder());
        prop_assert!(lad.size() <= 3);
        let via_ladder = twisted_mstar_gl_ladder(&lad).unwrap();
        let via_std = normalize_to_irr(&twisted_mstar_gl_std(&lad)).unwrap();
        prop_assert_eq!(via_ladder, via_std);
    }
}

fn mstar_delta_unit() -> FormalSum<TensorGL> {
    FormalSum::from_term(TensorGL::new(GLTerm::One, GLTerm::One))
}
