use unirep_core::classical_reps::{ClassicalIrr, Sign, TemperedLabel};
use unirep_core::gl_ring::{FormalSum, GLTerm};
use unirep_core::jacquet_engine::{
    cuspidal_chains, jm_seg_ds, jm_seg_q, mu_star, mu_star_gen_steinberg, mu_star_induced,
    mu_star_steinberg_spread, resolve_closed, resolve_segment_cusp, s_gl, s_gl_induced, s_level,
    BiTerm, ClTerm, JacquetError,
};
use unirep_core::line_core::{HalfInt, LineContext, Multisegment, Segment};

fn h(doubled: i64) -> HalfInt {
    HalfInt::from_doubled(doubled)
}

fn ctx(doubled_alpha: i64) -> LineContext {
    LineContext::new(h(doubled_alpha)).unwrap()
}

fn sg(b2: i64, e2: i64) -> Segment {
    Segment::new(h(b2), h(e2)).unwrap()
}

fn ms(segs: Vec<Segment>) -> Multisegment {
    Multisegment::new(segs)
}

fn cusp(c: LineContext) -> ClassicalIrr {
    ClassicalIrr::cusp(c)
}

fn gen_st(c: LineContext, b2: i64, e2: i64) -> ClassicalIrr {
    ClassicalIrr::tempered(TemperedLabel::GenSteinberg(sg(b2, e2)), c).unwrap()
}

fn lbl(c: LineContext, segs: Vec<Segment>, t: TemperedLabel) -> ClassicalIrr {
    ClassicalIrr::new(ms(segs), t, c).unwrap()
}

fn gl_seg(b2: i64, e2: i64) -> GLTerm {
    GLTerm::delta(sg(b2, e2))
}

fn gl_irr(segs: Vec<Segment>) -> GLTerm {
    GLTerm::irr(ms(segs))
}

fn expect(terms: Vec<(GLTerm, ClassicalIrr, i64)>) -> FormalSum<BiTerm> {
    let mut out = FormalSum::zero();
    for (g, pi, c) in terms {
        out.add_term(BiTerm::new(g, ClTerm::Irr(pi)), c);
    }
    out
}

#[test]
fn generalized_steinberg_restrictions_have_two_more_terms_than_the_length() {
    for a2 in [1, 2, 3, 4, 6] {
        let c = ctx(a2);
        let alpha = h(a2);
        for n in 0..=2i64 {
            let seg = Segment::new(alpha, alpha + n).unwrap();
            let closed = mu_star_gen_steinberg(c, seg).unwrap();
            assert_eq!(closed.term_count() as i64, n + 2);
            assert_eq!(closed.total_multiplicity(), n + 2);
            let split = jm_seg_ds(c, seg, Sign::Plus).unwrap();
            assert_eq!(closed, split, "alpha {alpha}, length {}", n + 1);
            let label = ClassicalIrr::tempered(TemperedLabel::GenSteinberg(seg), c).unwrap();
            assert_eq!(mu_star(&label).unwrap(), closed);
            assert_eq!(closed.coeff(&BiTerm::unit(label)), 1);
            assert_eq!(
                closed.coeff(&BiTerm::new(GLTerm::delta(seg), ClTerm::Irr(cusp(c)))),
                1
            );
        }
    }
}

#[test]
fn descending_spread_restrictions_mirror_the_steinberg_ones() {
    for a2 in [2, 3, 4] {
        let c = ctx(a2);
        let alpha = h(a2);
        for n in 0..=2i64 {
            let spread = mu_star_steinberg_spread(c, n).unwrap();
            assert_eq!(spread.term_count() as i64, n + 2);
            assert_eq!(spread.total_multiplicity(), n + 2);
            let singles: Vec<Segment> =
                (0..=n).map(|t| Segment::singleton(alpha + t)).collect();
            let label = lbl(c, singles, TemperedLabel::Cusp);
            assert_eq!(mu_star(&label).unwrap(), spread);
            assert_eq!(spread.coeff(&BiTerm::unit(label)), 1);
        }
        // Corank one: both restriction routes agree on L([alpha]; sigma).
        let single = lbl(c, vec![Segment::singleton(alpha)], TemperedLabel::Cusp);
        let via_q = jm_seg_q(c, Segment::singleton(alpha)).unwrap();
        assert_eq!(mu_star(&single).unwrap(), via_q);
        assert_eq!(via_q, mu_star_steinberg_spread(c, 0).unwrap());
        let expected = expect(vec![
            (GLTerm::one(), single, 1),
            (GLTerm::delta(Segment::singleton(-alpha)), cusp(c), 1),
        ]);
        assert_eq!(via_q, expected);
    }
}

#[test]
fn spread_of_length_two_matches_the_catalogued_list() {
    // L([alpha+1], [alpha]; sigma) restricts to itself, a point over
    // L([alpha]; sigma), and the two-singleton class over the cuspidal.
    for a2 in [1, 2, 3, 4] {
        let c = ctx(a2);
        let alpha = h(a2);
        let pi1 = lbl(
            c,
            vec![Segment::singleton(alpha), Segment::singleton(alpha + 1)],
            TemperedLabel::Cusp,
        );
        let l_alpha = lbl(c, vec![Segment::singleton(alpha)], TemperedLabel::Cusp);
        let expected = expect(vec![
            (GLTerm::one(), pi1.clone(), 1),
            (GLTerm::delta(Segment::singleton(-alpha - 1)), l_alpha, 1),
            (
                gl_irr(vec![
                    Segment::singleton(-alpha - 1),
                    Segment::singleton(-alpha),
                ]),
                cusp(c),
                1,
            ),
        ]);
        assert_eq!(mu_star(&pi1).unwrap(), expected);
    }
}

#[test]
fn positive_split_of_a_barely_one_sided_segment_matches_the_catalogued_list() {
    // The positive piece of [-(alpha-1), alpha] x sigma for alpha >= 3/2 is
    // L([alpha-1]; delta([alpha]; sigma)); five catalogued terms.
    for a2 in [3, 4, 6] {
        let c = ctx(a2);
        let alpha = h(a2);
        let seg = Segment::new(alpha - 1, alpha).unwrap();
        let pi2 = lbl(
            c,
            vec![Segment::singleton(alpha - 1)],
            TemperedLabel::GenSteinberg(Segment::singleton(alpha)),
        );
        let st = gen_st(c, a2, a2);
        let l_low = lbl(c, vec![Segment::singleton(alpha - 1)], TemperedLabel::Cusp);
        let expected = expect(vec![
            (GLTerm::one(), pi2.clone(), 1),
            (GLTerm::delta(Segment::singleton(alpha)), l_low, 1),
            (GLTerm::delta(Segment::singleton(-alpha + 1)), st, 1),
            (
                gl_irr(vec![
                    Segment::singleton(-alpha + 1),
                    Segment::singleton(alpha),
                ]),
                cusp(c),
                1,
            ),
            (GLTerm::delta(seg), cusp(c), 1),
        ]);
        let split = jm_seg_ds(c, seg, Sign::Plus).unwrap();
        assert_eq!(split, expected);
        assert_eq!(mu_star(&pi2).unwrap(), expected);
    }
}

#[test]
fn tau_plus_piece_at_the_integer_edge_matches_the_catalogued_list() {
    // tau([0]_+; delta([1]; sigma)) at alpha = 1: five classes, the full
    // segment over the cuspidal twice.
    let c = ctx(2);
    let tau_plus = ClassicalIrr::tempered(
        TemperedLabel::TauSigned(
            sg(0, 0),
            Sign::Plus,
            Box::new(TemperedLabel::GenSteinberg(sg(2, 2))),
        ),
        c,
    )
    .unwrap();
    let zero_ind = ClassicalIrr::tempered(
        TemperedLabel::TemperedInd(ms(vec![sg(0, 0)]), Box::new(TemperedLabel::Cusp)),
        c,
    )
    .unwrap();
    let expected = expect(vec![
        (GLTerm::one(), tau_plus.clone(), 1),
        (gl_seg(2, 2), zero_ind, 1),
        (gl_seg(0, 0), gen_st(c, 2, 2), 1),
        (gl_seg(0, 2), cusp(c), 2),
        (gl_irr(vec![sg(0, 0), sg(2, 2)]), cusp(c), 1),
    ]);
    let split = jm_seg_ds(c, sg(0, 2), Sign::Plus).unwrap();
    assert_eq!(split, expected);
    assert_eq!(mu_star(&tau_plus).unwrap(), expected);
}

#[test]
fn signed_zero_one_pieces_at_alpha_zero_match_the_catalogued_lists() {
    let c = ctx(0);
    for sign in [Sign::Plus, Sign::Minus] {
        let piece =
            ClassicalIrr::tempered(TemperedLabel::SegSigned(sg(0, 2), sign), c).unwrap();
        let zero = ClassicalIrr::tempered(TemperedLabel::DeltaZeroSigned(sign), c).unwrap();
        let expected = expect(vec![
            (GLTerm::one(), piece.clone(), 1),
            (gl_seg(2, 2), zero, 1),
            (gl_seg(0, 2), cusp(c), 1),
        ]);
        assert_eq!(jm_seg_ds(c, sg(0, 2), sign).unwrap(), expected);
        assert_eq!(mu_star(&piece).unwrap(), expected);
    }
}

#[test]
fn even_split_pieces_at_one_half_match_the_catalogued_lists() {
    // delta([-1/2,1/2]_pm; sigma) at alpha = 1/2.
    let c = ctx(1);
    let st = gen_st(c, 1, 1);
    let l_half = lbl(c, vec![sg(1, 1)], TemperedLabel::Cusp);

    let plus = ClassicalIrr::tempered(TemperedLabel::SegSigned(sg(-1, 1), Sign::Plus), c).unwrap();
    let expected_plus = expect(vec![
        (GLTerm::one(), plus.clone(), 1),
        (gl_seg(-1, 1), cusp(c), 1),
        (gl_irr(vec![sg(1, 1), sg(1, 1)]), cusp(c), 1),
        (gl_seg(1, 1), st.clone(), 2),
        (gl_seg(1, 1), l_half.clone(), 1),
    ]);
    assert_eq!(jm_seg_ds(c, sg(-1, 1), Sign::Plus).unwrap(), expected_plus);
    assert_eq!(mu_star(&plus).unwrap(), expected_plus);

    let minus =
        ClassicalIrr::tempered(TemperedLabel::SegSigned(sg(-1, 1), Sign::Minus), c).unwrap();
    let expected_minus = expect(vec![
        (GLTerm::one(), minus.clone(), 1),
        (gl_seg(-1, 1), cusp(c), 1),
        (gl_seg(1, 1), l_half, 1),
    ]);
    assert_eq!(jm_seg_ds(c, sg(-1, 1), Sign::Minus).unwrap(), expected_minus);
    assert_eq!(mu_star(&minus).unwrap(), expected_minus);
}

#[test]
fn langlands_piece_restrictions_match_the_catalogued_lists() {
    // L([alpha-1, alpha]; sigma) for alpha >= 3/2: three terms.
    for a2 in [3, 4, 6] {
        let c = ctx(a2);
        let alpha = h(a2);
        let seg = Segment::new(alpha - 1, alpha).unwrap();
        let pi1 = lbl(c, vec![seg], TemperedLabel::Cusp);
        let l_alpha = lbl(c, vec![Segment::singleton(alpha)], TemperedLabel::Cusp);
        let expected = expect(vec![
            (GLTerm::one(), pi1.clone(), 1),
            (GLTerm::delta(Segment::singleton(-alpha + 1)), l_alpha, 1),
            (
                GLTerm::delta(Segment::new(-alpha, -alpha + 1).unwrap()),
                cusp(c),
                1,
            ),
        ]);
        assert_eq!(jm_seg_q(c, seg).unwrap(), expected);
        assert_eq!(mu_star(&pi1).unwrap(), expected);
    }

    // L([0,1]; sigma) at alpha = 1: three terms.
    let c1 = ctx(2);
    let pi2 = lbl(c1, vec![sg(0, 2)], TemperedLabel::Cusp);
    let l_one = lbl(c1, vec![sg(2, 2)], TemperedLabel::Cusp);
    let expected = expect(vec![
        (GLTerm::one(), pi2.clone(), 1),
        (gl_seg(0, 0), l_one, 1),
        (gl_seg(-2, 0), cusp(c1), 1),
    ]);
    assert_eq!(jm_seg_q(c1, sg(0, 2)).unwrap(), expected);
    assert_eq!(mu_star(&pi2).unwrap(), expected);

    // L([0,1]; sigma) at alpha = 0: four terms.
    let c0 = ctx(0);
    let pi2 = lbl(c0, vec![sg(0, 2)], TemperedLabel::Cusp);
    let l_one = lbl(c0, vec![sg(2, 2)], TemperedLabel::Cusp);
    let expected = expect(vec![
        (GLTerm::one(), pi2.clone(), 1),
        (gl_seg(0, 0), l_one, 1),
        (gl_seg(-2, 0), cusp(c0), 1),
        (gl_irr(vec![sg(0, 0), sg(2, 2)]), cusp(c0), 1),
    ]);
    assert_eq!(jm_seg_q(c0, sg(0, 2)).unwrap(), expected);
    assert_eq!(mu_star(&pi2).unwrap(), expected);
}

#[test]
fn langlands_piece_of_the_zero_two_segment_matches_the_catalogued_list() {
    // L([0,2]; sigma) at alpha = 0: eight terms.
    let c = ctx(0);
    let pi6 = lbl(c, vec![sg(0, 4)], TemperedLabel::Cusp);
    let l01 = lbl(c, vec![sg(0, 2)], TemperedLabel::Cusp);
    let l12 = lbl(c, vec![sg(2, 4)], TemperedLabel::Cusp);
    let l1 = lbl(c, vec![sg(2, 2)], TemperedLabel::Cusp);
    let l2 = lbl(c, vec![sg(4, 4)], TemperedLabel::Cusp);
    let expected = expect(vec![
        (GLTerm::one(), pi6.clone(), 1),
        (gl_seg(4, 4), l01, 1),
        (gl_seg(0, 0), l12, 1),
        (gl_irr(vec![sg(0, 0), sg(4, 4)]), l1, 1),
        (gl_seg(-2, 0), l2, 1),
        (gl_irr(vec![sg(0, 0), sg(2, 4)]), cusp(c), 1),
        (gl_irr(vec![sg(-2, 0), sg(4, 4)]), cusp(c), 1),
        (gl_seg(-4, 0), cusp(c), 1),
    ]);
    assert_eq!(jm_seg_q(c, sg(0, 4)).unwrap(), expected);
    assert_eq!(mu_star(&pi6).unwrap(), expected);
}

#[test]
fn segment_induction_pieces_sum_to_the_full_restriction() {
    // Every reducible segment induction of small support: the split pieces'
    // restrictions add up to the twisted comultiplication of the induced.
    let cases: Vec<(i64, Segment)> = vec![
        (0, sg(0, 0)),
        (0, sg(0, 2)),
        (0, sg(0, 4)),
        (0, sg(-2, 2)),
        (2, sg(0, 2)),
        (2, sg(2, 2)),
        (2, sg(-2, 2)),
        (2, sg(2, 4)),
        (1, sg(1, 1)),
        (1, sg(-1, 1)),
        (1, sg(1, 3)),
        (1, sg(-1, 3)),
        (1, sg(1, 5)),
        (3, sg(1, 3)),
        (3, sg(-1, 3)),
        (3, sg(3, 3)),
        (3, sg(3, 7)),
        (4, sg(4, 4)),
        (4, sg(2, 4)),
        (4, sg(0, 4)),
        (6, sg(6, 6)),
        (6, sg(4, 6)),
        (6, sg(2, 6)),
    ];
    for (a2, seg) in cases {
        let c = ctx(a2);
        let pieces = resolve_segment_cusp(c, seg).unwrap();
        let mut lhs = FormalSum::zero();
        for (piece, m) in pieces.iter() {
            for (bt, k) in mu_star(piece).unwrap().iter() {
                lhs.add_term(bt.clone(), m * k);
            }
        }
        let rhs =
            resolve_closed(&mu_star_induced(&[GLTerm::delta(seg)], &cusp(c)).unwrap()).unwrap();
        assert_eq!(lhs, rhs, "segment {seg} at alpha {}", h(a2));
    }
}

#[test]
fn tempered_inductions_restrict_multiplicatively() {
    // [0] x sigma at alpha = 1 is irreducible: itself plus twice the point.
    let c1 = ctx(2);
    let zero_ind = ClassicalIrr::tempered(
        TemperedLabel::TemperedInd(ms(vec![sg(0, 0)]), Box::new(TemperedLabel::Cusp)),
        c1,
    )
    .unwrap();
    let expected = expect(vec![
        (GLTerm::one(), zero_ind.clone(), 1),
        (gl_seg(0, 0), cusp(c1), 2),
    ]);
    assert_eq!(mu_star(&zero_ind).unwrap(), expected);

    // [0] x delta([0]_+; sigma) at alpha = 0: the asymmetric split of the
    // point terms follows from multiplicativity.
    let c0 = ctx(0);
    let plus = ClassicalIrr::tempered(TemperedLabel::DeltaZeroSigned(Sign::Plus), c0).unwrap();
    let minus = ClassicalIrr::tempered(TemperedLabel::DeltaZeroSigned(Sign::Minus), c0).unwrap();
    let ind = ClassicalIrr::tempered(
        TemperedLabel::TemperedInd(
            ms(vec![sg(0, 0)]),
            Box::new(TemperedLabel::DeltaZeroSigned(Sign::Plus)),
        ),
        c0,
    )
    .unwrap();
    let expected = expect(vec![
        (GLTerm::one(), ind.clone(), 1),
        (gl_seg(0, 0), plus, 3),
        (gl_seg(0, 0), minus, 1),
        (gl_irr(vec![sg(0, 0), sg(0, 0)]), cusp(c0), 2),
    ]);
    assert_eq!(mu_star(&ind).unwrap(), expected);
    assert_eq!(s_gl(&mu_star(&ind).unwrap()).total_multiplicity(), 2);
}

#[test]
fn unit_part_of_every_supported_restriction_is_the_label_itself() {
    let c0 = ctx(0);
    let c1 = ctx(2);
    let c32 = ctx(3);
    let labels: Vec<ClassicalIrr> = vec![
        cusp(c0),
        ClassicalIrr::tempered(TemperedLabel::DeltaZeroSigned(Sign::Plus), c0).unwrap(),
        ClassicalIrr::tempered(TemperedLabel::DeltaZeroSigned(Sign::Minus), c0).unwrap(),
        gen_st(c1, 2, 2),
        gen_st(c1, 2, 4),
        gen_st(c32, 3, 7),
        ClassicalIrr::tempered(TemperedLabel::SegSigned(sg(-2, 2), Sign::Plus), c1).unwrap(),
        ClassicalIrr::tempered(TemperedLabel::SegSigned(sg(0, 2), Sign::Minus), c0).unwrap(),
        ClassicalIrr::tempered(
            TemperedLabel::TauSigned(
                sg(0, 0),
                Sign::Plus,
                Box::new(TemperedLabel::GenSteinberg(sg(2, 2))),
            ),
            c1,
        )
        .unwrap(),
        ClassicalIrr::tempered(
            TemperedLabel::TemperedInd(ms(vec![sg(0, 0)]), Box::new(TemperedLabel::Cusp)),
            c1,
        )
        .unwrap(),
        lbl(c1, vec![sg(2, 2)], TemperedLabel::Cusp),
        lbl(c1, vec![sg(0, 2)], TemperedLabel::Cusp),
        lbl(c0, vec![sg(0, 4)], TemperedLabel::Cusp),
        lbl(c1, vec![sg(2, 2), sg(4, 4)], TemperedLabel::Cusp),
        lbl(
            c32,
            vec![sg(1, 1)],
            TemperedLabel::GenSteinberg(sg(3, 3)),
        ),
    ];
    for pi in labels {
        let m = mu_star(&pi).unwrap();
        let unit_terms = s_level(&m, 0);
        assert_eq!(
            unit_terms,
            FormalSum::from_term(BiTerm::unit(pi.clone())),
            "unit part of {pi}"
        );
        assert!(m.iter().all(|(_, c)| c > 0));
    }
}

#[test]
fn cuspidal_chains_of_low_corank_labels() {
    let closed = |pi: &ClassicalIrr| mu_star(pi);

    let c32 = ctx(3);
    let st = gen_st(c32, 3, 3);
    let chains = cuspidal_chains(&st, &closed).unwrap();
    assert_eq!(chains, FormalSum::from_term(vec![h(3)]));

    let l = lbl(c32, vec![sg(3, 3)], TemperedLabel::Cusp);
    let chains = cuspidal_chains(&l, &closed).unwrap();
    assert_eq!(chains, FormalSum::from_term(vec![h(-3)]));

    let c1 = ctx(2);
    let st12 = gen_st(c1, 2, 4);
    let chains = cuspidal_chains(&st12, &closed).unwrap();
    assert_eq!(chains, FormalSum::from_term(vec![h(4), h(2)]));

    let spread = lbl(c1, vec![sg(2, 2), sg(4, 4)], TemperedLabel::Cusp);
    let chains = cuspidal_chains(&spread, &closed).unwrap();
    assert_eq!(chains, FormalSum::from_term(vec![h(-4), h(-2)]));

    let tau_plus = ClassicalIrr::tempered(
        TemperedLabel::TauSigned(
            sg(0, 0),
            Sign::Plus,
            Box::new(TemperedLabel::GenSteinberg(sg(2, 2))),
        ),
        c1,
    )
    .unwrap();
    let chains = cuspidal_chains(&tau_plus, &closed).unwrap();
    let mut expected = FormalSum::zero();
    expected.add_term(vec![h(2), h(0)], 2);
    expected.add_term(vec![h(0), h(2)], 1);
    assert_eq!(chains, expected);
}

#[test]
fn induced_sigma_column_matches_the_sum_over_split_pieces() {
    // delta([0,1]) x sigma at alpha = 1 splits into the Langlands piece and
    // the tau piece; their columns add up to the comultiplication column.
    let c = ctx(2);
    let pieces = resolve_segment_cusp(c, sg(0, 2)).unwrap();
    assert_eq!(pieces.term_count(), 2);
    let mut columns = FormalSum::zero();
    for (piece, m) in pieces.iter() {
        for (t, k) in s_gl(&mu_star(piece).unwrap()).iter() {
            columns.add_term(t.clone(), m * k);
        }
    }
    let direct = s_gl_induced(
        &[GLTerm::delta(sg(0, 2))],
        &FormalSum::from_term(GLTerm::one()),
    )
    .unwrap();
    assert_eq!(columns, direct);

    let mut expected = FormalSum::zero();
    expected.add_term(gl_seg(0, 2), 2);
    expected.add_term(gl_irr(vec![sg(0, 0), sg(2, 2)]), 1);
    expected.add_term(gl_seg(-2, 0), 1);
    assert_eq!(direct, expected);
}

#[test]
fn guards_reject_labels_without_closed_formulas() {
    let c1 = ctx(2);
    // Irreducible segment: no split piece formula.
    assert!(matches!(
        jm_seg_ds(c1, sg(4, 6), Sign::Plus),
        Err(JacquetError::Unsupported(_))
    ));
    // The negative piece needs the even-split range.
    assert!(matches!(
        jm_seg_ds(c1, sg(0, 2), Sign::Minus),
        Err(JacquetError::Unsupported(_))
    ));
    // Langlands piece formula needs a non-symmetric segment.
    assert!(matches!(
        jm_seg_q(c1, sg(-2, 2)),
        Err(JacquetError::Unsupported(_))
    ));
    assert!(matches!(
        jm_seg_q(c1, sg(4, 6)),
        Err(JacquetError::Unsupported(_))
    ));
    // Strongly positive labels have no closed formula here.
    let c2 = ctx(4);
    let sp = ClassicalIrr::tempered(
        TemperedLabel::StronglyPositive(vec![sg(2, 2), sg(4, 4)]),
        c2,
    )
    .unwrap();
    assert!(matches!(
        mu_star(&sp),
        Err(JacquetError::Unsupported(_))
    ));
    // A Langlands exponent not reaching down to alpha - 1 is not a split
    // piece alias.
    let off = lbl(c1, vec![sg(4, 4)], TemperedLabel::GenSteinberg(sg(2, 2)));
    assert!(matches!(
        mu_star(&off),
        Err(JacquetError::Unsupported(_))
    ));
}
