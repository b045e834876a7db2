use super::*;
use crate::cotorsion::build_localization_triple;
use crate::fixtures::{d2_category, d2_frobenius, n2_category, n2_frobenius, n2_projective, trivial_triple};
use crate::module::socle;

fn assert_passed(r: &Report) {
    assert!(r.passed(), "{}: {:?}", r.command, r.first_failure());
}

#[test]
fn weak_equivalences_on_d2() {
    let (cat, d) = d2_category();
    let (t, _) = build_localization_triple(&cat, &d2_frobenius(&cat, &d)).unwrap();
    let zero = cat.zero_object();
    assert!(is_weak_equivalence(&cat, &t, &Morphism::zero(&d.a, &zero)).unwrap());
    let inc = Morphism::new(d.s.clone(), d.a.clone(), socle(&d.a).map.maps().to_vec()).unwrap();
    assert!(!is_weak_equivalence(&cat, &t, &inc).unwrap());
    assert!(is_weak_equivalence(&cat, &t, &Morphism::identity(&d.s)).unwrap());
    for a in cat.registry() {
        assert!(is_weak_equivalence(&cat, &t, &t.r_map(&cat, a).unwrap()).unwrap());
    }
}

#[test]
fn ho_hom_dimensions() {
    let (cat, d) = d2_category();
    let (t, _) = build_localization_triple(&cat, &d2_frobenius(&cat, &d)).unwrap();
    let ho = HomotopyCategory::new(&cat, &t);
    assert_eq!(ho.ho_hom(&d.s, &d.s).unwrap().dim(), 1);
    for b in cat.registry() {
        assert_eq!(ho.ho_hom(&d.a, b).unwrap().dim(), 0);
    }

    let tt = trivial_triple(&cat);
    let (t, _) = build_localization_triple(&cat, &tt).unwrap();
    let ho = HomotopyCategory::new(&cat, &t);
    for a in cat.registry() {
        for b in cat.registry() {
            assert_eq!(ho.ho_hom(a, b).unwrap().dim(), 0);
        }
    }
}

#[test]
fn gamma_is_functorial_and_kills_the_ideal() {
    let (cat, d) = d2_category();
    let (t, _) = build_localization_triple(&cat, &d2_frobenius(&cat, &d)).unwrap();
    let ho = HomotopyCategory::new(&cat, &t);
    let id = ho.gamma(&Morphism::identity(&d.s)).unwrap();
    assert!(ho.equal(&id, &ho.identity(&d.s).unwrap()).unwrap());
    let ideal = cat.ideal_subspace(&t.x, &d.s, &d.s).unwrap();
    for v in &ideal.basis {
        assert!(ho.equal(&ho.gamma(v).unwrap(), &ho.zero(&d.s, &d.s).unwrap()).unwrap());
    }
    let m = direct_sum_s_a(&d);
    let ideal = cat.ideal_subspace(&t.x, &m, &m).unwrap();
    assert_eq!(ideal.dim(), 4);
    for v in &ideal.basis {
        assert!(ho.gamma(v).unwrap().core.is_zero());
    }
}

fn direct_sum_s_a(d: &crate::fixtures::DualNumbers) -> Module {
    crate::module::direct_sum(&d.algebra, &[d.s.clone(), d.a.clone()]).unwrap().object
}

#[test]
fn zigzag_forms_recompose() {
    let (cat, d) = d2_category();
    let (t, _) = build_localization_triple(&cat, &d2_frobenius(&cat, &d)).unwrap();
    let ho = HomotopyCategory::new(&cat, &t);
    let z = ho.zigzag_form(&ho.identity(&d.s).unwrap()).unwrap();
    assert!(z.recomposes);
    for m in [&z.r_source, &z.j_source, &z.core, &z.j_target, &z.r_target] {
        assert_eq!(m, &Morphism::identity(&d.s));
    }
    let b = ho.basis(&d.s, &d.s).unwrap();
    assert_eq!(b.len(), 1);
    let z = ho.zigzag_form(&b[0]).unwrap();
    assert!(z.recomposes);
    assert_eq!(z.r_source, Morphism::identity(&d.s));

    let (cat, c) = n2_category();
    let (t, _) = build_localization_triple(&cat, &n2_projective(&cat, &c)).unwrap();
    let ho = HomotopyCategory::new(&cat, &t);
    assert_eq!(t.q_obj(&cat, &c.s1).unwrap().dims(), c.p1.dims());
    for a in cat.registry() {
        for b in cat.registry() {
            let m = ho.zero(a, b).unwrap();
            assert!(ho.zigzag_form(&m).unwrap().recomposes);
        }
    }
}

#[test]
fn homotopy_checks_on_fixtures() {
    let b = Budget::full();
    let (cat, d) = d2_category();
    for h in [d2_frobenius(&cat, &d), trivial_triple(&cat)] {
        let (t, _) = build_localization_triple(&cat, &h).unwrap();
        assert_passed(&check_homotopy(&HomotopyCategory::new(&cat, &t), &b).unwrap());
    }
    let (cat, c) = n2_category();
    for h in [n2_frobenius(&cat, &c), n2_projective(&cat, &c), trivial_triple(&cat)] {
        let (t, _) = build_localization_triple(&cat, &h).unwrap();
        assert_passed(&check_homotopy(&HomotopyCategory::new(&cat, &t), &b).unwrap());
    }
}

#[test]
fn embedding_comparisons_are_nontrivial_for_projective_triple() {
    let (cat, c) = n2_category();
    let (t, _) = build_localization_triple(&cat, &n2_projective(&cat, &c)).unwrap();
    let ho = HomotopyCategory::new(&cat, &t);
    let r = check_equivalence_embedding(&ho).unwrap();
    assert_passed(&r);
    assert_ne!(t.r_map(&cat, &c.s1).unwrap(), Morphism::identity(&c.s1));
}

#[test]
fn universal_factorization_of_gamma_is_the_identity() {
    let b = Budget::full();
    let (cat, d) = d2_category();
    let (t, _) = build_localization_triple(&cat, &d2_frobenius(&cat, &d)).unwrap();
    let ho = HomotopyCategory::new(&cat, &t);
    let u = universal_factorization(&ho, &GammaFunctor { ho: &ho }, &b).unwrap();
    assert_passed(&u.report);
    for e in &u.entries {
        assert!(cat.factor_equal(&t.x, &e.value, &e.ho.core).unwrap());
    }
}

#[test]
fn universal_factorization_of_the_quotient() {
    let b = Budget::full();
    let (cat, d) = d2_category();
    let (t, _) = build_localization_triple(&cat, &d2_frobenius(&cat, &d)).unwrap();
    let ho = HomotopyCategory::new(&cat, &t);
    let q = QuotientFunctor { cat: &cat, x: t.x.clone() };
    let u = universal_factorization(&ho, &q, &b).unwrap();
    assert_passed(&u.report);
    assert_eq!(u.entries.len(), 1);

    let bad = Overridden { inner: QuotientFunctor { cat: &cat, x: t.x.clone() }, overrides: vec![(t.r_map(&cat, &d.s).unwrap(), Morphism::zero(&d.s, &d.s))] };
    let err = universal_factorization(&ho, &bad, &b).unwrap_err();
    assert!(matches!(err, Error::FDoesNotInvertS(_)), "{err}");
}

#[test]
fn quotient_does_not_factor_through_the_projective_triple() {
    let (cat, c) = n2_category();
    let (t, _) = build_localization_triple(&cat, &n2_projective(&cat, &c)).unwrap();
    let ho = HomotopyCategory::new(&cat, &t);
    let q = QuotientFunctor { cat: &cat, x: t.x.clone() };
    let err = universal_factorization(&ho, &q, &Budget::default()).unwrap_err();
    assert!(matches!(err, Error::FDoesNotInvertS(_)), "{err}");
}

#[test]
fn triangles_transport_to_ho() {
    let b = Budget::full();
    let (cat, d) = d2_category();
    let s = TriangleStructure::new(&cat, &d2_frobenius(&cat, &d)).unwrap();
    assert_passed(&check_triangle_transport(&s, &b).unwrap());
    let (cat, c) = n2_category();
    let s = TriangleStructure::new(&cat, &n2_frobenius(&cat, &c)).unwrap();
    assert_passed(&check_triangle_transport(&s, &b).unwrap());
}
