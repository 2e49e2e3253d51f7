//! Catalogue-wide consistency checks and pinned decomposition data.
//!
//! The blanket tests cross-check independently derived columns: every
//! catalogued identity must be additive in the general linear Jacquet
//! columns of its parts, and the involution must transport each column
//! onto the column of the dual constituent.

use unirep_core::classical_reps::{ClassicalIrr, Sign, TemperedLabel};
use unirep_core::composition_db as db;
use unirep_core::gl_ring::{FormalSum, GLTerm};
use unirep_core::jacquet_engine::{dual_transport_gl, s_gl, s_level, BiTerm, ClTerm};
use unirep_core::line_core::{HalfInt, LineContext, Multisegment, Segment};

/// Doubled alpha values 0, 1/2, 1, 3/2, 2, 3.
const ALPHAS: [i64; 6] = [0, 1, 2, 3, 4, 6];

fn ctx(doubled: i64) -> LineContext {
    LineContext::new(HalfInt::from_doubled(doubled)).unwrap()
}

fn hi(doubled: i64) -> HalfInt {
    HalfInt::from_doubled(doubled)
}

fn seg(b: i64, e: i64) -> Segment {
    Segment::new(hi(b), hi(e)).unwrap()
}

fn pt(x: i64) -> Segment {
    Segment::singleton(hi(x))
}

fn lan(cx: LineContext, segs: Vec<Segment>, t: TemperedLabel) -> ClassicalIrr {
    ClassicalIrr::new(Multisegment::new(segs), t, cx).unwrap()
}

fn temp(cx: LineContext, t: TemperedLabel) -> ClassicalIrr {
    ClassicalIrr::tempered(t, cx).unwrap()
}

fn gst(b: i64, e: i64) -> TemperedLabel {
    TemperedLabel::GenSteinberg(seg(b, e))
}

fn dpt(x: i64) -> GLTerm {
    GLTerm::delta(pt(x))
}

#[test]
fn catalogue_builds_with_expected_entry_counts() {
    let expected: [usize; 6] = [7, 7, 11, 11, 12, 12];
    let mut independent = 0usize;
    for (k, &ad) in ALPHAS.iter().enumerate() {
        let cx = ctx(ad);
        let tuples = db::critical_tuples(cx);
        let entries = db::all_entries(cx).unwrap();
        assert_eq!(entries.len(), tuples.len());
        assert_eq!(entries.len(), expected[k], "alpha doubled {ad}");
        for (t, e) in tuples.iter().zip(&entries) {
            assert!(db::critical(cx, t));
            assert_eq!(&e.exponents, t);
        }
        independent += entries
            .iter()
            .flat_map(|e| &e.identities)
            .filter(|id| !id.used_in_construction)
            .count();
    }
    assert!(independent >= 30, "independent identities: {independent}");
}

#[test]
fn identity_additivity_catalogue_wide() {
    let mut checked = 0usize;
    for &ad in &ALPHAS {
        let cx = ctx(ad);
        for e in db::all_entries(cx).unwrap() {
            for id in &e.identities {
                let lhs = db::sgl_induced_of(cx, &id.factors, &id.base)
                    .unwrap_or_else(|err| panic!("{} at alpha {}: {err}", id.name, cx.alpha()));
                let mut rhs = FormalSum::zero();
                for &(i, m) in &id.parts {
                    for (t, c) in e.constituents[i].sgl.iter() {
                        rhs.add_term(t.clone(), m * c);
                    }
                }
                assert_eq!(lhs, rhs, "{} at alpha {}", id.name, cx.alpha());
                checked += 1;
            }
        }
    }
    assert!(checked >= 30, "identities checked: {checked}");
}

#[test]
fn dual_transport_catalogue_wide() {
    for &ad in &ALPHAS {
        let cx = ctx(ad);
        for e in db::all_entries(cx).unwrap() {
            for (i, c) in e.constituents.iter().enumerate() {
                let d = &e.constituents[c.dual];
                assert_eq!(d.dual, i, "{} at alpha {}", c.label, cx.alpha());
                assert_eq!(d.mult, c.mult, "{} at alpha {}", c.label, cx.alpha());
                assert_eq!(d.unitary, c.unitary, "{} at alpha {}", c.label, cx.alpha());
                let t = dual_transport_gl(&c.sgl)
                    .unwrap_or_else(|err| panic!("{} at alpha {}: {err}", c.label, cx.alpha()));
                assert_eq!(t, d.sgl, "{} at alpha {}", c.label, cx.alpha());
            }
        }
    }
}

#[test]
fn dual_of_is_involutive_and_matches_pairing() {
    for &ad in &ALPHAS {
        let cx = ctx(ad);
        for e in db::all_entries(cx).unwrap() {
            for c in &e.constituents {
                let d = db::dual_of(cx, &c.label).unwrap();
                assert_eq!(d, e.constituents[c.dual].label);
                let back = db::dual_of(cx, &d).unwrap();
                assert_eq!(back, c.label);
                assert_eq!(
                    db::unitary_flag(cx, &c.label).unwrap(),
                    db::unitary_flag(cx, &d).unwrap()
                );
            }
        }
    }
}

#[test]
fn restrictions_decompose_consistently() {
    let mut resolved = 0usize;
    for &ad in &ALPHAS {
        let cx = ctx(ad);
        for e in db::all_entries(cx).unwrap() {
            for c in &e.constituents {
                let mu = match db::db_mu(cx, &c.label) {
                    Ok(m) => m,
                    Err(db::DbError::UnsupportedRestriction(_)) => continue,
                    Err(err) => panic!("{} at alpha {}: {err}", c.label, cx.alpha()),
                };
                assert_eq!(mu.coeff(&BiTerm::unit(c.label.clone())), 1, "{}", c.label);
                for (bt, cc) in mu.iter() {
                    assert!(cc >= 1, "{} term {bt}", c.label);
                    let cl_deg = match &bt.cl {
                        ClTerm::Irr(pi) => pi.degree(),
                        ClTerm::Induced(..) => panic!("unresolved term in {}", c.label),
                    };
                    assert_eq!(bt.gl.degree() + cl_deg, c.label.degree(), "{}", c.label);
                }
                assert_eq!(s_gl(&mu), c.sgl, "{} at alpha {}", c.label, cx.alpha());
                resolved += 1;
            }
        }
    }
    assert!(resolved >= 100, "resolved restrictions: {resolved}");
}

#[test]
fn series_lengths_match_catalogued_counts() {
    // Centered run at alpha > 1: eight constituents, all multiplicity one.
    for &ad in &[4i64, 6] {
        let cx = ctx(ad);
        let a = ad / 2;
        let e = db::entry(cx, &[hi(ad - 2), hi(ad), hi(ad + 2)]).unwrap();
        assert_eq!(e.family, "corank3-run-centered", "alpha {a}");
        assert_eq!(e.constituents.len(), 8);
        assert_eq!(e.length(), 8);
        assert!(e.constituents.iter().all(|c| c.mult == 1));
    }
    // Repeated low exponent at alpha >= 1: length six with one double.
    for &ad in &[2i64, 4, 6] {
        let cx = ctx(ad);
        let e = db::entry(cx, &[hi(ad), hi(ad), hi(ad + 2)]).unwrap();
        assert_eq!(e.family, "corank3-eq-up");
        assert_eq!(e.length(), 6);
        let doubles: Vec<_> = e.constituents.iter().filter(|c| c.mult == 2).collect();
        assert_eq!(doubles.len(), 1);
    }
    // Full run at alpha = 0: ten labels, length twelve.
    {
        let cx = ctx(0);
        let e = db::entry(cx, &[hi(0), hi(2), hi(4)]).unwrap();
        assert_eq!(e.family, "corank3-run-up-zero");
        assert_eq!(e.constituents.len(), 10);
        assert_eq!(e.length(), 12);
    }
    // Repeated 1/2 at alpha = 1/2: ten labels, length twelve, two doubles.
    {
        let cx = ctx(1);
        let e = db::entry(cx, &[hi(1), hi(1), hi(3)]).unwrap();
        assert_eq!(e.family, "corank3-eq-up-half");
        assert_eq!(e.constituents.len(), 10);
        assert_eq!(e.length(), 12);
        let doubles: Vec<usize> = e
            .constituents
            .iter()
            .enumerate()
            .filter(|(_, c)| c.mult == 2)
            .map(|(i, _)| i)
            .collect();
        assert_eq!(doubles, vec![2, 3]);
    }
}

#[test]
fn entry_lookup_canonicalizes_signed_orbits() {
    let cx = ctx(2);
    let a = db::entry(cx, &[hi(-2), hi(0), hi(2)]).unwrap();
    let b = db::entry(cx, &[hi(0), hi(2), hi(2)]).unwrap();
    assert_eq!(a, b);
    assert_eq!(a.family, "corank3-down-eq-one");

    let cx = ctx(3);
    let e = db::entry(cx, &[hi(-1), hi(1), hi(3)]).unwrap();
    assert_eq!(e.family, "corank3-run-down-threehalves");
    assert_eq!(e.exponents, vec![hi(1), hi(1), hi(3)]);
}

#[test]
fn comp_series_eq_up_has_one_double() {
    for &ad in &[2i64, 4] {
        let cx = ctx(ad);
        let s = db::comp_series(cx, &[hi(ad), hi(ad), hi(ad + 2)]).unwrap();
        assert_eq!(s.term_count(), 5);
        assert_eq!(s.total_multiplicity(), 6);
        let e = db::entry(cx, &[hi(ad), hi(ad), hi(ad + 2)]).unwrap();
        let a = ad / 2;
        let double = lan(
            cx,
            vec![seg(ad, ad + 2).clone()],
            TemperedLabel::GenSteinberg(pt(ad)),
        );
        assert_eq!(s.coeff(&double), 2, "alpha {a}");
        assert_eq!(s, e.series());
    }
}

#[test]
fn sub_identity_segment_cases() {
    // d([a, a+1]) |x sigma at alpha = 2: the two segment-type constituents.
    let cx = ctx(4);
    let got = db::sub_identity(
        cx,
        &[GLTerm::delta(seg(4, 6))],
        &ClassicalIrr::cusp(cx),
    )
    .unwrap();
    let mut want = FormalSum::zero();
    want.add_term(lan(cx, vec![seg(4, 6)], TemperedLabel::Cusp), 1);
    want.add_term(temp(cx, gst(4, 6)), 1);
    assert_eq!(got, want);

    // d([-1/2, 1/2]) |x sigma at alpha = 1/2: the two signed halves.
    let cx = ctx(1);
    let got = db::sub_identity(
        cx,
        &[GLTerm::delta(seg(-1, 1))],
        &ClassicalIrr::cusp(cx),
    )
    .unwrap();
    let mut want = FormalSum::zero();
    want.add_term(
        temp(cx, TemperedLabel::SegSigned(seg(-1, 1), Sign::Plus)),
        1,
    );
    want.add_term(
        temp(cx, TemperedLabel::SegSigned(seg(-1, 1), Sign::Minus)),
        1,
    );
    assert_eq!(got, want);

    // d([1, 2]) |x delta([0],+;sigma) at alpha = 0: three pieces.
    let cx = ctx(0);
    let dzp = temp(cx, TemperedLabel::DeltaZeroSigned(Sign::Plus));
    let got = db::sub_identity(cx, &[GLTerm::delta(seg(2, 4))], &dzp).unwrap();
    let mut want = FormalSum::zero();
    want.add_term(
        lan(
            cx,
            vec![seg(2, 4)],
            TemperedLabel::DeltaZeroSigned(Sign::Plus),
        ),
        1,
    );
    want.add_term(lan(cx, vec![seg(0, 4)], TemperedLabel::Cusp), 1);
    want.add_term(temp(cx, TemperedLabel::SegSigned(seg(0, 4), Sign::Plus)), 1);
    assert_eq!(got, want);
}

#[test]
fn sub_identity_errors() {
    // Non-critical support tuple.
    let cx = ctx(2);
    match db::comp_series(cx, &[hi(2), hi(6)]) {
        Err(db::DbError::NotCritical(_)) => {}
        other => panic!("expected NotCritical, got {other:?}"),
    }
    // Critical tuple, but no catalogued identity for this inducing pair.
    let cx = ctx(1);
    let base = lan(cx, vec![pt(3)], TemperedLabel::Cusp);
    match db::sub_identity(cx, &[dpt(1)], &base) {
        Err(db::DbError::UnknownIdentity(_)) => {}
        other => panic!("expected UnknownIdentity, got {other:?}"),
    }
}

#[test]
fn unitary_flags_pinned_cases() {
    let cx = ctx(4);
    assert!(db::unitary_flag(cx, &temp(cx, gst(4, 8))).unwrap());
    assert!(!db::unitary_flag(cx, &lan(cx, vec![seg(4, 6)], gst(4, 4))).unwrap());
    assert!(db::unitary_flag(cx, &lan(cx, vec![pt(4), pt(2)], gst(4, 4))).unwrap());
    // Corank one at every catalogued alpha with a nonzero point.
    for &ad in &[1i64, 2, 3, 4, 6] {
        let cx = ctx(ad);
        assert!(db::unitary_flag(cx, &lan(cx, vec![pt(ad)], TemperedLabel::Cusp)).unwrap());
        assert!(db::unitary_flag(cx, &temp(cx, gst(ad, ad))).unwrap());
    }
}

#[test]
fn factor_test_pinned_cases() {
    let cx = ctx(4);
    let d2 = temp(cx, gst(4, 4));
    assert!(db::factor_test(cx, hi(4), &d2).unwrap());
    assert!(!db::factor_test(cx, hi(-4), &d2).unwrap());
    // The segment label keeps only the fully negative column, so the
    // positive exponent alpha - 1 never occurs in it.
    let l12 = lan(cx, vec![seg(2, 4)], TemperedLabel::Cusp);
    assert!(!db::factor_test(cx, hi(2), &l12).unwrap());
    assert!(db::factor_test(cx, hi(-2), &l12).unwrap());
    // Both signs of alpha - 1 occur in L([alpha-1];delta([alpha];sigma)).
    let l1d2 = lan(cx, vec![pt(2)], gst(4, 4));
    assert!(db::factor_test(cx, hi(2), &l1d2).unwrap());
    assert!(db::factor_test(cx, hi(-2), &l1d2).unwrap());
    assert!(!db::factor_test(cx, hi(0), &l1d2).unwrap());
}

#[test]
fn dual_pairs_pinned_cases() {
    let cx = ctx(4);
    // The generalized Steinberg pairs with the full Langlands point label.
    let d = db::dual_of(cx, &temp(cx, gst(4, 6))).unwrap();
    assert_eq!(d, lan(cx, vec![pt(6), pt(4)], TemperedLabel::Cusp));
    // Self-dual double constituent.
    let p0 = lan(cx, vec![pt(4), pt(2)], gst(4, 4));
    assert_eq!(db::dual_of(cx, &p0).unwrap(), p0);
}

#[test]
fn stored_restriction_term_counts() {
    // L([a],[a-1];delta([a];sigma)) at alpha = 2: eight resolved terms.
    let cx = ctx(4);
    let p0 = lan(cx, vec![pt(4), pt(2)], gst(4, 4));
    let mu = db::db_mu(cx, &p0).unwrap();
    assert_eq!(mu.term_count(), 8);
    assert_eq!(mu.total_multiplicity(), 8);

    // L([1/2,3/2],[1/2];sigma) at alpha = 1/2: twelve terms, total fourteen.
    let cx = ctx(1);
    let p9 = lan(cx, vec![seg(1, 3), pt(1)], TemperedLabel::Cusp);
    let mu = db::db_mu(cx, &p9).unwrap();
    assert_eq!(mu.term_count(), 12);
    assert_eq!(mu.total_multiplicity(), 14);

    // The four signed labels with catalogued restrictions at alpha = 0.
    let cx = ctx(0);
    for sign in [Sign::Plus, Sign::Minus] {
        let p3 = lan(cx, vec![pt(4)], TemperedLabel::SegSigned(seg(0, 2), sign));
        assert_eq!(db::db_mu(cx, &p3).unwrap().term_count(), 8, "{sign:?}");
        let p4 = lan(cx, vec![seg(2, 4)], TemperedLabel::DeltaZeroSigned(sign));
        assert_eq!(db::db_mu(cx, &p4).unwrap().term_count(), 8, "{sign:?}");
    }
}

#[test]
fn full_jacquet_six_chains() {
    for &ad in &[3i64, 4, 6] {
        let cx = ctx(ad);
        let p0 = lan(cx, vec![pt(ad), pt(ad - 2)], gst(ad, ad));
        let chains = db::full_jacquet(cx, &p0).unwrap();
        let mut want = FormalSum::zero();
        for ch in [
            [ad, ad - 2, -ad],
            [ad, -ad, ad - 2],
            [ad, -ad, -ad + 2],
            [-ad, ad, ad - 2],
            [-ad, ad, -ad + 2],
            [-ad, -ad + 2, ad],
        ] {
            want.add_term(ch.iter().map(|&d| hi(d)).collect::<Vec<_>>(), 1);
        }
        assert_eq!(chains, want, "alpha doubled {ad}");

        let mu = db::db_mu(cx, &p0).unwrap();
        let level1 = s_level(&mu, 1);
        let mut want1 = FormalSum::zero();
        want1.add_term(
            BiTerm::new(dpt(-ad), ClTerm::Irr(lan(cx, vec![pt(ad - 2)], gst(ad, ad)))),
            1,
        );
        want1.add_term(
            BiTerm::new(
                dpt(ad),
                ClTerm::Irr(lan(cx, vec![pt(ad), pt(ad - 2)], TemperedLabel::Cusp)),
            ),
            1,
        );
        assert_eq!(level1, want1, "alpha doubled {ad}");
    }
}

#[test]
fn json_round_trip_every_entry() {
    for &ad in &ALPHAS {
        let cx = ctx(ad);
        for e in db::all_entries(cx).unwrap() {
            let v = db::entry_json(&e);
            let back = db::entry_from_json(&v)
                .unwrap_or_else(|err| panic!("{} at alpha {}: {err}", e.family, cx.alpha()));
            assert_eq!(back, e);
        }
    }
}
