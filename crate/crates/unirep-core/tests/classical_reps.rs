//! Label-level behavior: Jordan blocks and their closed forms, twist
//! reducibility, the ladder criterion, normalization of Langlands data,
//! dominance, and closed-form duals.
//!
//! Coordinates in these tests are doubled half-integers: `hi(3)` is 3/2.

use unirep_core::classical_reps::{
    alpha_from_jord, dominance_leq, dual_closed, e_star, epsilon_at_two, epsilon_same,
    is_reducible_twist, jord, ladder_reducibility, normalize_langlands, ClassicalIrr,
    LabelError, Reducibility, Sign, TemperedLabel,
};
use unirep_core::line_core::{HalfInt, LineContext, Multisegment, Segment};

fn hi(doubled: i64) -> HalfInt {
    HalfInt::from_doubled(doubled)
}

fn ctx(doubled_alpha: i64) -> LineContext {
    LineContext::new(hi(doubled_alpha)).expect("alpha >= 0")
}

fn sg(doubled_b: i64, doubled_e: i64) -> Segment {
    Segment::new(hi(doubled_b), hi(doubled_e)).expect("valid segment")
}

fn ms(segs: &[Segment]) -> Multisegment {
    Multisegment::new(segs.to_vec())
}

fn cusp(c: LineContext) -> ClassicalIrr {
    ClassicalIrr::cusp(c)
}

fn gen_st(c: LineContext, seg: Segment) -> ClassicalIrr {
    ClassicalIrr::tempered(TemperedLabel::GenSteinberg(seg), c).expect("valid label")
}

fn sp(c: LineContext, segs: &[Segment]) -> ClassicalIrr {
    ClassicalIrr::tempered(TemperedLabel::StronglyPositive(segs.to_vec()), c)
        .expect("valid label")
}

fn seg_signed(c: LineContext, seg: Segment, s: Sign) -> ClassicalIrr {
    ClassicalIrr::tempered(TemperedLabel::SegSigned(seg, s), c).expect("valid label")
}

#[test]
fn jordan_blocks_of_the_cuspidal_follow_the_base_chain() {
    let cases = [
        (0, vec![]),
        (1, vec![]),
        (2, vec![1]),
        (3, vec![2]),
        (4, vec![1, 3]),
        (5, vec![2, 4]),
        (6, vec![1, 3, 5]),
        (7, vec![2, 4, 6]),
    ];
    for (da, blocks) in cases {
        let c = ctx(da);
        let j = jord(&cusp(c)).expect("cuspidal is square-integrable");
        assert_eq!(j.blocks(), blocks.as_slice(), "alpha doubled = {da}");
        assert_eq!(alpha_from_jord(&j, c.eta()), c.alpha());
    }
}

#[test]
fn jordan_blocks_of_generalized_steinberg_swap_the_top_block() {
    // delta([alpha, alpha+n]; sigma): {eta+1, ..., 2 alpha - 3, 2(alpha+n)+1}.
    for da in [1, 2, 3, 4, 6] {
        for n in 0..=2 {
            let c = ctx(da);
            let seg = Segment::new(c.alpha(), c.alpha() + n).unwrap();
            let j = jord(&gen_st(c, seg)).expect("square-integrable");
            let mut expect: Vec<i64> = Vec::new();
            let mut a = i64::from(c.eta()) + 1;
            while a <= da - 3 {
                expect.push(a);
                a += 2;
            }
            expect.push(da + 2 * n + 1);
            assert_eq!(j.blocks(), expect.as_slice(), "alpha doubled {da}, n {n}");
        }
    }
    // The alpha = 5/2 singleton: {2, 6}.
    let c = ctx(5);
    let j = jord(&gen_st(c, sg(5, 5))).unwrap();
    assert_eq!(j.blocks(), &[2, 6]);
}

#[test]
fn jordan_blocks_of_strongly_positive_chains() {
    // sp([alpha-1], [alpha]): {eta+1, ..., 2 alpha - 5, 2 alpha - 1, 2 alpha + 1}.
    for da in [3, 4, 5, 6, 7] {
        let c = ctx(da);
        let a = c.alpha();
        let j = jord(&sp(c, &[Segment::singleton(a - 1), Segment::singleton(a)])).unwrap();
        let mut expect: Vec<i64> = Vec::new();
        let mut blk = i64::from(c.eta()) + 1;
        while blk <= da - 5 {
            expect.push(blk);
            blk += 2;
        }
        expect.push(da - 1);
        expect.push(da + 1);
        assert_eq!(j.blocks(), expect.as_slice(), "alpha doubled {da}");
    }
    // sp([alpha-2], [alpha-1], [alpha]): {eta+1, .., 2a-7, 2a-3, 2a-1, 2a+1}.
    for da in [5, 6, 7] {
        let c = ctx(da);
        let a = c.alpha();
        let j = jord(&sp(
            c,
            &[
                Segment::singleton(a - 2),
                Segment::singleton(a - 1),
                Segment::singleton(a),
            ],
        ))
        .unwrap();
        let mut expect: Vec<i64> = Vec::new();
        let mut blk = i64::from(c.eta()) + 1;
        while blk <= da - 7 {
            expect.push(blk);
            blk += 2;
        }
        expect.extend([da - 3, da - 1, da + 1]);
        assert_eq!(j.blocks(), expect.as_slice(), "alpha doubled {da}");
    }
    // sp([alpha-1], [alpha, alpha+1]): {eta+1, ..., 2a-5, 2a-1, 2a+3}.
    for da in [3, 4, 5, 6, 7] {
        let c = ctx(da);
        let a = c.alpha();
        let j = jord(&sp(
            c,
            &[
                Segment::singleton(a - 1),
                Segment::new(a, a + 1).unwrap(),
            ],
        ))
        .unwrap();
        let mut expect: Vec<i64> = Vec::new();
        let mut blk = i64::from(c.eta()) + 1;
        while blk <= da - 5 {
            expect.push(blk);
            blk += 2;
        }
        expect.extend([da - 1, da + 3]);
        assert_eq!(j.blocks(), expect.as_slice(), "alpha doubled {da}");
    }
}

#[test]
fn jordan_blocks_of_signed_segments_add_both_ends() {
    let j = jord(&seg_signed(ctx(0), sg(0, 2), Sign::Plus)).unwrap();
    assert_eq!(j.blocks(), &[1, 3]);
    let j = jord(&seg_signed(ctx(0), sg(0, 4), Sign::Minus)).unwrap();
    assert_eq!(j.blocks(), &[1, 5]);
    let j = jord(&seg_signed(ctx(2), sg(-2, 4), Sign::Plus)).unwrap();
    assert_eq!(j.blocks(), &[1, 3, 5]);
    let j = jord(&seg_signed(ctx(1), sg(-1, 3), Sign::Plus)).unwrap();
    assert_eq!(j.blocks(), &[2, 4]);
}

#[test]
fn tempered_limits_and_langlands_labels_have_no_jordan_blocks() {
    let c = ctx(2);
    let limit = seg_signed(c, sg(-2, 2), Sign::Plus);
    assert!(matches!(jord(&limit), Err(LabelError::NotSquareIntegrable(_))));
    let zero = ClassicalIrr::tempered(TemperedLabel::DeltaZeroSigned(Sign::Plus), ctx(0)).unwrap();
    assert!(matches!(jord(&zero), Err(LabelError::NotSquareIntegrable(_))));
    let lang = ClassicalIrr::new(
        ms(&[sg(2, 2)]),
        TemperedLabel::Cusp,
        c,
    )
    .unwrap();
    assert!(matches!(jord(&lang), Err(LabelError::NotSquareIntegrable(_))));
}

#[test]
fn twist_reducibility_on_the_cuspidal_is_exactly_at_alpha() {
    for da in [0, 1, 2, 3, 4, 6] {
        let c = ctx(da);
        let pi = cusp(c);
        assert_eq!(is_reducible_twist(&pi, c.alpha()), Reducibility::Reducible);
        assert_eq!(
            is_reducible_twist(&pi, c.alpha() + 1),
            Reducibility::Irreducible
        );
        let mut x = HalfInt::ZERO;
        if !c.on_lattice(x) {
            x = HalfInt::HALF;
        }
        while x < c.alpha() {
            assert_eq!(
                is_reducible_twist(&pi, x),
                Reducibility::Irreducible,
                "alpha doubled {da}, x {x}"
            );
            x = x + 1;
        }
        // Off-lattice twists are irreducible.
        let off = if c.eta() == 0 { HalfInt::HALF } else { HalfInt::ZERO };
        assert_eq!(is_reducible_twist(&pi, off), Reducibility::Irreducible);
    }
}

#[test]
fn twist_reducibility_on_generalized_steinberg_hits_both_neighbors() {
    for da in [2, 3, 4, 6] {
        let c = ctx(da);
        let pi = gen_st(c, Segment::singleton(c.alpha()));
        assert_eq!(
            is_reducible_twist(&pi, c.alpha() + 1),
            Reducibility::Reducible,
            "alpha doubled {da}: twist above"
        );
        assert_eq!(
            is_reducible_twist(&pi, c.alpha() - 1),
            Reducibility::Reducible,
            "alpha doubled {da}: twist below"
        );
        assert_eq!(is_reducible_twist(&pi, c.alpha()), Reducibility::Irreducible);
    }
}

#[test]
fn twist_reducibility_on_strongly_positive_pairs() {
    for da in [4, 5, 6, 7] {
        let c = ctx(da);
        let a = c.alpha();
        let pi = sp(c, &[Segment::singleton(a - 1), Segment::singleton(a)]);
        // The top pair carries opposite signs, so the twist at alpha stays
        // irreducible while alpha + 1 and alpha - 2 reduce.
        assert_eq!(is_reducible_twist(&pi, a), Reducibility::Irreducible);
        assert_eq!(is_reducible_twist(&pi, a + 1), Reducibility::Reducible);
        assert_eq!(is_reducible_twist(&pi, a - 2), Reducibility::Reducible);
    }
}

#[test]
fn twist_reducibility_on_signed_segments() {
    // [0,1] at alpha = 0 carries equal signs on {1, 3}.
    let pi = seg_signed(ctx(0), sg(0, 2), Sign::Plus);
    assert_eq!(is_reducible_twist(&pi, hi(2)), Reducibility::Reducible);
    assert_eq!(is_reducible_twist(&pi, hi(4)), Reducibility::Reducible);
    assert_eq!(is_reducible_twist(&pi, hi(0)), Reducibility::Irreducible);
    // [-1,2] at alpha = 1: the pair {3, 5} has no recorded relation.
    let pi = seg_signed(ctx(2), sg(-2, 4), Sign::Plus);
    assert_eq!(is_reducible_twist(&pi, hi(4)), Reducibility::Unknown);
    assert_eq!(is_reducible_twist(&pi, hi(6)), Reducibility::Reducible);
}

#[test]
fn half_twist_uses_the_block_two_value() {
    // On the cuspidal at eta = 1 the half twist is irreducible below alpha.
    for da in [3, 5, 7] {
        assert_eq!(
            is_reducible_twist(&cusp(ctx(da)), HalfInt::HALF),
            Reducibility::Irreducible
        );
        assert_eq!(epsilon_at_two(&cusp(ctx(da))), Some(false));
    }
    // delta([1/2]; sigma) at alpha = 1/2 has Jord = {2} with value +1.
    let pi = gen_st(ctx(1), sg(1, 1));
    assert_eq!(epsilon_at_two(&pi), Some(true));
    assert_eq!(is_reducible_twist(&pi, HalfInt::HALF), Reducibility::Reducible);
    assert_eq!(
        is_reducible_twist(&pi, hi(3)),
        Reducibility::Reducible,
        "twist one step above the segment end"
    );
    // delta([3/2]; sigma) at alpha = 3/2 has Jord = {4}: block 2 absent.
    let pi = gen_st(ctx(3), sg(3, 3));
    assert_eq!(is_reducible_twist(&pi, HalfInt::HALF), Reducibility::Reducible);
}

#[test]
fn epsilon_relations_alternate_on_inherited_chains() {
    assert_eq!(epsilon_same(&cusp(ctx(6)), 1), Some(false));
    assert_eq!(epsilon_same(&cusp(ctx(7)), 2), Some(false));
    let pi = seg_signed(ctx(0), sg(0, 2), Sign::Minus);
    assert_eq!(epsilon_same(&pi, 1), Some(true));
    let pi = seg_signed(ctx(2), sg(-2, 4), Sign::Plus);
    assert_eq!(epsilon_same(&pi, 3), None);
}

#[test]
fn ladder_reducibility_matches_the_segment_rule() {
    // A single segment reduces exactly when it meets {-alpha, alpha}.
    let c = ctx(4);
    assert_eq!(
        ladder_reducibility(c, &ms(&[sg(-2, 2)])),
        Reducibility::Irreducible,
        "[-1,1] at alpha 2 misses the walls"
    );
    assert_eq!(
        ladder_reducibility(c, &ms(&[sg(-2, 4)])),
        Reducibility::Reducible
    );
    assert_eq!(
        ladder_reducibility(c, &ms(&[sg(4, 6)])),
        Reducibility::Reducible
    );
    assert_eq!(
        ladder_reducibility(ctx(6), &ms(&[sg(0, 2)])),
        Reducibility::Irreducible
    );
}

#[test]
fn ladder_reducibility_multisegment_cases() {
    // {[1], [2]} at alpha 3: no wall, no cross link.
    assert_eq!(
        ladder_reducibility(ctx(6), &ms(&[sg(2, 2), sg(4, 4)])),
        Reducibility::Irreducible
    );
    // {[1], [-1,1]} at alpha 2: ladder fails, alpha > 1, mixed data out of range.
    assert_eq!(
        ladder_reducibility(ctx(4), &ms(&[sg(2, 2), sg(-2, 2)])),
        Reducibility::Unknown
    );
    // Lattice mismatch in one factor.
    assert_eq!(
        ladder_reducibility(ctx(0), &ms(&[sg(0, 0), sg(1, 1)])),
        Reducibility::Unknown
    );
    // Entirely off the lattice.
    assert_eq!(
        ladder_reducibility(ctx(2), &ms(&[sg(1, 1), sg(3, 3)])),
        Reducibility::Irreducible
    );
    // Support meeting alpha reduces regardless of shape.
    assert_eq!(
        ladder_reducibility(ctx(2), &ms(&[sg(2, 2), sg(2, 2)])),
        Reducibility::Reducible
    );
    // At alpha = 1 the low rule applies without the ladder shape.
    assert_eq!(
        ladder_reducibility(ctx(2), &ms(&[sg(0, 0), sg(0, 0)])),
        Reducibility::Irreducible
    );
}

#[test]
fn langlands_normalization_flips_and_folds() {
    let c = ctx(2);
    // Negative exponents are replaced by contragredients.
    let pi = normalize_langlands(&ms(&[sg(-4, -4), sg(2, 2)]), TemperedLabel::Cusp, c).unwrap();
    assert_eq!(pi.langlands_part(), &ms(&[sg(2, 2), sg(4, 4)]));
    // Zero exponents fold into an irreducible tempered induced.
    let pi = normalize_langlands(&ms(&[sg(0, 0), sg(2, 2)]), TemperedLabel::Cusp, c).unwrap();
    assert_eq!(pi.langlands_part(), &ms(&[sg(2, 2)]));
    assert_eq!(
        pi.tempered_part(),
        &TemperedLabel::TemperedInd(ms(&[sg(0, 0)]), Box::new(TemperedLabel::Cusp))
    );
    // A symmetric zero factor that meets the reducibility point refuses to fold.
    let err = normalize_langlands(&ms(&[sg(-2, 2)]), TemperedLabel::Cusp, c);
    assert!(matches!(err, Err(LabelError::ReducibleFold(_))));
    let err = normalize_langlands(&ms(&[sg(0, 0)]), TemperedLabel::Cusp, ctx(0));
    assert!(matches!(err, Err(LabelError::ReducibleFold(_))));
    // Folding over a non-cuspidal base stacks into one induced layer.
    let base = TemperedLabel::TemperedInd(ms(&[sg(0, 0)]), Box::new(TemperedLabel::Cusp));
    let pi = normalize_langlands(&ms(&[sg(0, 0)]), base, c).unwrap();
    assert_eq!(
        pi.tempered_part(),
        &TemperedLabel::TemperedInd(
            ms(&[sg(0, 0), sg(0, 0)]),
            Box::new(TemperedLabel::Cusp)
        )
    );
}

#[test]
fn dominance_vectors_and_partial_sums() {
    let c = ctx(4);
    let pi = ClassicalIrr::new(ms(&[sg(2, 2), sg(4, 4)]), TemperedLabel::Cusp, c).unwrap();
    assert_eq!(e_star(&pi, 3), vec![hi(4), hi(2), hi(0)]);
    let seg_pi = ClassicalIrr::new(ms(&[sg(2, 4)]), TemperedLabel::Cusp, c).unwrap();
    assert_eq!(e_star(&seg_pi, 3), vec![hi(3), hi(3), hi(0)]);
    // The segment label sits strictly below the split one.
    assert!(dominance_leq(&e_star(&seg_pi, 3), &e_star(&pi, 3)));
    assert!(!dominance_leq(&e_star(&pi, 3), &e_star(&seg_pi, 3)));
    assert!(dominance_leq(&e_star(&pi, 3), &e_star(&pi, 3)));
}

#[test]
fn closed_duals_exchange_steinberg_with_its_langlands_spread() {
    let c = ctx(4);
    let st = gen_st(c, sg(4, 8));
    let spread = dual_closed(&st).expect("closed dual");
    assert_eq!(
        spread.langlands_part(),
        &ms(&[sg(4, 4), sg(6, 6), sg(8, 8)])
    );
    assert!(spread.is_tempered() == false);
    assert_eq!(dual_closed(&spread).as_ref(), Some(&st));
    // The zero pieces swap.
    let plus = ClassicalIrr::tempered(TemperedLabel::DeltaZeroSigned(Sign::Plus), ctx(0)).unwrap();
    let minus = dual_closed(&plus).unwrap();
    assert_eq!(
        minus.tempered_part(),
        &TemperedLabel::DeltaZeroSigned(Sign::Minus)
    );
    assert_eq!(dual_closed(&cusp(c)), Some(cusp(c)));
    // Non-consecutive spreads are not the closed case.
    let other = ClassicalIrr::new(ms(&[sg(4, 4), sg(8, 8)]), TemperedLabel::Cusp, c).unwrap();
    assert_eq!(dual_closed(&other), None);
}

#[test]
fn label_display_matches_the_grammar() {
    let c = ctx(5);
    assert_eq!(gen_st(c, sg(5, 5)).to_string(), "delta([5/2];sigma)");
    assert_eq!(
        sp(ctx(4), &[sg(2, 2), sg(4, 4)]).to_string(),
        "sp([1],[2];sigma)"
    );
    assert_eq!(
        seg_signed(ctx(2), sg(-2, 4), Sign::Plus).to_string(),
        "delta([-1,2],+;sigma)"
    );
    assert_eq!(
        ClassicalIrr::tempered(TemperedLabel::DeltaZeroSigned(Sign::Minus), ctx(0))
            .unwrap()
            .to_string(),
        "delta0(-)"
    );
    let tau = TemperedLabel::TauSigned(
        sg(0, 0),
        Sign::Plus,
        Box::new(TemperedLabel::GenSteinberg(sg(2, 2))),
    );
    assert_eq!(
        ClassicalIrr::tempered(tau, ctx(2)).unwrap().to_string(),
        "tau([0],+;delta([1];sigma))"
    );
    let tind = TemperedLabel::TemperedInd(ms(&[sg(0, 0)]), Box::new(TemperedLabel::Cusp));
    assert_eq!(
        ClassicalIrr::tempered(tind, ctx(2)).unwrap().to_string(),
        "tind([0];sigma)"
    );
    // Langlands factors print in the canonical end-descending order.
    let lab = ClassicalIrr::new(ms(&[sg(2, 2), sg(4, 4)]), TemperedLabel::Cusp, ctx(2)).unwrap();
    assert_eq!(lab.to_string(), "L([2],[1];sigma)");
}

#[test]
fn invalid_labels_are_rejected() {
    let c = ctx(2);
    assert!(ClassicalIrr::tempered(TemperedLabel::GenSteinberg(sg(4, 6)), c).is_err());
    assert!(ClassicalIrr::tempered(TemperedLabel::GenSteinberg(sg(0, 2)), ctx(0)).is_err());
    assert!(ClassicalIrr::tempered(TemperedLabel::SegSigned(sg(-2, 4), Sign::Plus), ctx(4))
        .is_err());
    assert!(ClassicalIrr::tempered(TemperedLabel::SegSigned(sg(0, 0), Sign::Plus), ctx(0))
        .is_err());
    assert!(ClassicalIrr::tempered(TemperedLabel::DeltaZeroSigned(Sign::Plus), c).is_err());
    assert!(ClassicalIrr::tempered(
        TemperedLabel::TauSigned(sg(0, 2), Sign::Plus, Box::new(TemperedLabel::Cusp)),
        c
    )
    .is_err());
    assert!(ClassicalIrr::tempered(
        TemperedLabel::StronglyPositive(vec![sg(2, 2)]),
        c
    )
    .is_err());
    assert!(ClassicalIrr::tempered(
        TemperedLabel::TemperedInd(ms(&[sg(2, 2)]), Box::new(TemperedLabel::Cusp)),
        c
    )
    .is_err());
    assert!(ClassicalIrr::new(ms(&[sg(0, 0)]), TemperedLabel::Cusp, c).is_err());
    assert!(ClassicalIrr::new(ms(&[sg(-2, -2)]), TemperedLabel::Cusp, c).is_err());
}
