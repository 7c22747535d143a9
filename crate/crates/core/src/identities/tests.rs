use super::*;
use crate::catalog;
use crate::linear::Rational;
use crate::structures::{associated_akivis, AkivisAlgebra, BiHomAkivisAlgebra};

fn ex1(lambda: i64) -> Structure {
    Structure::BiHom(catalog::make_ex1(&Rational::int(lambda)).unwrap())
}

fn octonions() -> Structure {
    Structure::BiHom(catalog::make_octonions())
}

#[test]
fn ex1_is_not_bihom_associative() {
    let r = check(&ex1(1), IdentityId::BiHomAssociative);
    assert_eq!(r.verdict, Verdict::Fail);
    assert_eq!(r.witness, Some(vec![0, 1, 1]));
    assert_eq!(r.residual, Some(Vector::from_ints(&[4, 0])));
    assert_eq!(r.code.as_deref(), Some("I2"));
}

#[test]
fn octonions_are_alternative() {
    for id in [IdentityId::LeftAlternative, IdentityId::RightAlternative, IdentityId::Flexible] {
        assert_eq!(check(&octonions(), id).verdict, Verdict::Pass, "{id}");
    }
    assert_eq!(check(&octonions(), IdentityId::BiHomAssociative).verdict, Verdict::Fail);
}

#[test]
fn associated_akivis_of_ex1_passes_bihom_akivis() {
    let a = catalog::make_ex1(&Rational::int(1)).unwrap();
    let k = Structure::BiHomAkivis(associated_akivis(&a).unwrap());
    assert_eq!(check(&k, IdentityId::BiHomAkivis).verdict, Verdict::Pass);
}

#[test]
fn rotated_cross_product_is_bihom_lie() {
    let r = catalog::make_rot_z();
    let s = Structure::BiHom(crate::structures::yau_twist(&catalog::cross3_product(), &r, &r.inverse().unwrap()).unwrap());
    assert_eq!(check(&s, IdentityId::SkewSymmetry).verdict, Verdict::Pass);
    assert_eq!(check(&s, IdentityId::Jacobi).verdict, Verdict::Pass);
}

#[test]
fn not_applicable_names_missing_requirement() {
    let r = check(&ex1(1), IdentityId::BiHomAkivis);
    assert_eq!(r.verdict, Verdict::NotApplicable);
    assert_eq!(r.notes, vec!["requires has-triple".to_string()]);
    assert!(r.witness.is_none());
    let k = Structure::Akivis(catalog::make_akivis2d());
    assert_eq!(check(&k, IdentityId::BiHomAssociative).verdict, Verdict::NotApplicable);
}

#[test]
fn non_regular_structure_skips_inverse_identities() {
    let s = Structure::BiHom(
        crate::structures::BiHomAlgebra::new(catalog::ex1_base_mu(), LinearMap::zero(2), LinearMap::identity(2)).unwrap(),
    );
    let r = check(&s, IdentityId::EqF1);
    assert_eq!(r.verdict, Verdict::NotApplicable);
    assert_eq!(r.notes, vec!["requires regular".to_string()]);
    assert_ne!(check(&s, IdentityId::EqF2).verdict, Verdict::NotApplicable);
}

#[test]
fn names_and_codes_resolve() {
    assert_eq!(IdentityId::from_name("I9").unwrap(), IdentityId::BiHomAkivis);
    assert_eq!(IdentityId::from_name("i21b").unwrap(), IdentityId::ShortRightAlternative);
    assert_eq!("bihom-malcev".parse::<IdentityId>().unwrap(), IdentityId::Malcev);
    assert!(matches!(IdentityId::from_name("I99"), Err(Error::UnknownIdentity(_))));
    let mut names: Vec<_> = IdentityId::ALL.iter().map(|i| i.name()).collect();
    names.sort();
    names.dedup();
    assert_eq!(names.len(), IdentityId::ALL.len());
}

#[test]
fn skew_bracket_is_alternating() {
    let r = check_alternating(&catalog::cross3_product(), &[]).unwrap();
    assert_eq!(r.verdict, Verdict::Pass);
}

#[test]
fn composite_alternating_on_octonions_but_not_ex1() {
    let o = catalog::make_octonions();
    let assoc = crate::structures::bihom_associator(&o);
    let id = LinearMap::identity(8);
    assert_eq!(check_alternating(&assoc, &[&id, &id, &id]).unwrap().verdict, Verdict::Pass);

    let a = catalog::make_ex1(&Rational::int(1)).unwrap();
    let assoc = crate::structures::bihom_associator(&a);
    let b2 = a.beta().pow(2).unwrap();
    let ab = a.alpha().compose(a.beta()).unwrap();
    let a2 = a.alpha().pow(2).unwrap();
    let r = check_alternating(&assoc, &[&b2, &ab, &a2]).unwrap();
    assert_eq!(r.verdict, Verdict::Fail);
    assert_eq!(r.witness, Some(vec![0, 1, 1]));
    assert_eq!(check(&Structure::BiHom(a), IdentityId::AlternatingComposite).witness, r.witness);
}

#[test]
fn alternating_rejects_wrong_map_count() {
    let id = LinearMap::identity(3);
    assert!(check_alternating(&catalog::cross3_product(), &[&id]).is_err());
}

#[test]
fn morphism_checks() {
    let k = Structure::Akivis(catalog::make_akivis2d());
    let r1 = catalog::make_r_map(&Rational::int(1));
    assert_eq!(check_morphism(&r1, &k, &k).unwrap().verdict, Verdict::Pass);
    assert_eq!(check_morphism(&LinearMap::identity(2), &k, &k).unwrap().verdict, Verdict::Pass);
    let swap = LinearMap::from_int_columns(&[&[0, 1], &[1, 0]]).unwrap();
    let r = check_morphism(&swap, &k, &k).unwrap();
    assert_eq!(r.verdict, Verdict::Fail);
    assert!(r.notes[0].contains("binary"));

    let o = octonions();
    let phi = catalog::make_octonion_involution();
    assert_eq!(check_morphism(&phi, &o, &o).unwrap().verdict, Verdict::Pass);
    assert!(matches!(check_morphism(&r1, &o, &o), Err(Error::DimensionMismatch { .. })));
    assert!(matches!(check_morphism(&r1, &k, &ex1(1)), Err(Error::KindMismatch(_, _))));
}

#[test]
fn morphism_checks_twisting_maps() {
    let a = catalog::make_ex1(&Rational::int(1)).unwrap();
    let k = Structure::BiHomAkivis(associated_akivis(&a).unwrap());
    let alpha = a.alpha().clone();
    assert_eq!(check_morphism(&alpha, &k, &k).unwrap().verdict, Verdict::Pass);
    let scaled = LinearMap::scalar(2, &Rational::int(2));
    let r = check_morphism(&scaled, &k, &k).unwrap();
    assert_eq!(r.verdict, Verdict::Fail);
}

#[test]
fn bihom_akivis_matches_classical_akivis_when_untwisted() {
    let k = catalog::make_akivis2d();
    let s = Structure::Akivis(k.clone());
    assert_eq!(check(&s, IdentityId::Akivis).verdict, check(&s, IdentityId::BiHomAkivis).verdict);
    let b = Structure::BiHomAkivis(BiHomAkivisAlgebra::from_akivis(&k));
    assert_eq!(check(&b, IdentityId::Akivis).verdict, Verdict::Pass);
    let t = catalog::make_octonions();
    let ko = Structure::BiHomAkivis(associated_akivis(&t).unwrap());
    assert_eq!(check(&ko, IdentityId::Akivis).verdict, Verdict::Pass);
    assert_eq!(check(&ko, IdentityId::BiHomAkivis).verdict, Verdict::Pass);
}

#[test]
fn opposite_sign_convention_fails_on_octonions() {
    // J = ⟳[x,y,z] - ⟳[y,x,z] does not hold for the commutator-associator
    // algebra of the octonions; the registry uses the opposite sign.
    let k = Structure::BiHomAkivis(associated_akivis(&catalog::make_octonions()).unwrap());
    let ctx = Context::new(&k);
    let (x, y, z) = (Vector::basis(8, 1), Vector::basis(8, 2), Vector::basis(8, 4));
    let cyc = |f: &dyn Fn(&Vector, &Vector, &Vector) -> Vector| f(&x, &y, &z) + f(&y, &z, &x) + f(&z, &x, &y);
    let forward = cyc(&|a, b, c| ctx.tri(a, b, c));
    let swapped = cyc(&|a, b, c| ctx.tri(b, a, c));
    let j = ctx.jac(&x, &y, &z);
    assert!(!(j.clone() - (forward.clone() - swapped.clone())).is_zero());
    assert!((j.clone() - (swapped - forward)).is_zero());
    assert_eq!(j, ctx.tri(&x, &y, &z).scale(&Rational::int(-6)));
}

#[test]
fn akivis_constructor_uses_registry() {
    let bracket = crate::linear::MultilinearMap::zero(3, 2).unwrap();
    let triple =
        crate::linear::MultilinearMap::from_entries(3, 3, [(vec![0, 1, 2], 0, Rational::one())]).unwrap();
    assert!(matches!(AkivisAlgebra::new(bracket, triple), Err(Error::AkivisIdentityFails { .. })));
}

#[test]
fn classify_zero_algebra_passes_everything() {
    let z = Structure::BiHom(catalog::make_zero(2).unwrap());
    let c = classify(&z);
    assert!(c.reports.iter().all(|r| r.verdict != Verdict::Fail));
    assert!(c.flags.bihom_associative && c.flags.bihom_lie && c.flags.bihom_alternative);
    assert!(!c.flags.bihom_akivis);
}

#[test]
fn classify_flags_follow_reports() {
    let c = classify(&octonions());
    assert!(c.flags.bihom_alternative && c.flags.bihom_flexible);
    assert!(!c.flags.bihom_associative && !c.flags.bihom_lie);
    assert_eq!(c.reports.len(), IdentityId::ALL.len());
    assert!(c.regular && c.multiplicative);
}

#[test]
fn classify_subset_keeps_registry_order() {
    let c = classify_with(&ex1(1), &[IdentityId::Jacobi, IdentityId::BiHomAssociative, IdentityId::Jacobi]);
    let ids: Vec<_> = c.reports.iter().map(|r| r.id.as_str()).collect();
    assert_eq!(ids, vec!["bihom-associative", "bihom-jacobi"]);
    assert_eq!(c.verdict(IdentityId::Flexible), Verdict::NotApplicable);
}

#[test]
fn audit_reports_r4_on_inconsistent_classification() {
    let s = ex1(1);
    let mut c = classify(&s);
    assert!(audit(&c, &s).is_empty());
    c.set_verdict(IdentityId::BiHomAssociative, Verdict::Pass);
    let v = audit(&c, &s);
    assert!(!v.is_empty());
    assert!(v.iter().all(|v| v.rule == "R4"), "{v:?}");
}

#[test]
fn audit_reports_r5_when_composite_contradicted() {
    let s = octonions();
    let mut c = classify(&s);
    c.set_verdict(IdentityId::AlternatingComposite, Verdict::Fail);
    let rules: Vec<_> = audit(&c, &s).into_iter().map(|v| v.rule).collect();
    assert_eq!(rules, vec!["R5"]);
}

#[test]
fn audit_treats_not_applicable_as_unproven() {
    let s = octonions();
    let mut c = classify(&s);
    c.set_verdict(IdentityId::BkAlternating, Verdict::NotApplicable);
    let rules: Vec<_> = audit(&c, &s).into_iter().map(|v| v.rule).collect();
    assert_eq!(rules, vec!["R9"]);
}

#[test]
fn polarization_sums_over_occurrences() {
    // Short right alternativity on ex1 at (e0, e1, e1): both orders coincide.
    let s = ex1(1);
    let ctx = Context::new(&s);
    let clause = &IdentityId::ShortRightAlternative.clauses(&ctx)[0];
    let p = polarized_residual(clause, 2, &[0, 1, 1]);
    let raw = clause.eval_raw(&[Vector::basis(2, 0), Vector::basis(2, 1)]);
    assert_eq!(p, raw.scale(&Rational::int(2)));
}

#[test]
fn report_summary_mentions_witness() {
    let r = check(&ex1(1), IdentityId::BiHomAssociative);
    let s = r.summary();
    assert!(s.starts_with("I2 bihom-associative: fail at [0, 1, 1]"), "{s}");
}
