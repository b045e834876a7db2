use super::*;
use crate::fixtures::{d2_category, d2_frobenius, n2_category, n2_frobenius, n2_projective};
use crate::module::socle;
use crate::report::Status;

fn assert_passed(r: &crate::report::Report) {
    assert!(r.passed(), "{}: {:?}", r.command, r.first_failure());
}

#[test]
fn fixed_triangles_on_d2() {
    let (cat, d) = d2_category();
    let h = d2_frobenius(&cat, &d);
    let s = TriangleStructure::new(&cat, &h).unwrap();
    let t = s.fixed_right(&d.s).unwrap();
    assert_eq!(t.x_obj().dims(), d.a.dims());
    assert!(cat.is_in_add(&h.x, t.x_obj()).unwrap());
    assert_eq!(t.u_obj().dims(), d.s.dims());
    let t2 = s.fixed_right(&d.s).unwrap();
    assert_eq!(t.i, t2.i);
    let ta = s.fixed_right(&d.a).unwrap();
    assert!(ta.u_obj().is_zero());
    let l = s.fixed_left(&d.s).unwrap();
    assert_eq!(l.x_obj().dims(), d.a.dims());
    assert_eq!(l.u_obj().dims(), d.s.dims());
}

#[test]
fn shift_on_two_cycle() {
    let (cat, c) = n2_category();
    let h = n2_frobenius(&cat, &c);
    let s = TriangleStructure::new(&cat, &h).unwrap();
    assert_eq!(s.sigma_obj(&c.s1).unwrap(), c.s2);
    assert_eq!(s.sigma_obj(&c.s2).unwrap(), c.s1);
    assert_eq!(s.omega_obj(&c.s1).unwrap(), c.s2);
    let k = s.sigma_map(&Morphism::identity(&c.s1)).unwrap();
    assert!(cat.is_factor_iso(&h.x, &k).unwrap().is_some());
}

#[test]
fn sigma_is_well_defined_on_cosets() {
    let (cat, d) = d2_category();
    let h = d2_frobenius(&cat, &d);
    let s = TriangleStructure::new(&cat, &h).unwrap();
    let m = direct_sum(cat.algebra(), &[d.s.clone(), d.a.clone()]).unwrap().object.with_name("S+A");
    let hom = cat.hom(&m, &m).unwrap();
    let ideal = cat.ideal_subspace(&h.x, &m, &m).unwrap();
    assert_eq!(hom.dim(), 5);
    assert_eq!(ideal.dim(), 4);
    for f in hom.basis() {
        let k = s.sigma_map(f).unwrap();
        for v in &ideal.basis {
            let perturbed = f.add(v).unwrap();
            assert!(cat.factor_equal(&h.x, &s.sigma_map(&perturbed).unwrap(), &k).unwrap());
        }
    }
    let id = s.sigma_map(&Morphism::identity(&m)).unwrap();
    assert!(cat.is_factor_iso(&h.x, &id).unwrap().is_some());
}

#[test]
fn standard_triangle_on_socle_inclusion() {
    let (cat, d) = d2_category();
    let h = d2_frobenius(&cat, &d);
    let s = TriangleStructure::new(&cat, &h).unwrap();
    let inc = socle(&d.a).map;
    let f = Morphism::new(d.s.clone(), d.a.clone(), inc.maps().to_vec()).unwrap();
    let cone = s.cone(&f).unwrap();
    assert_eq!(cone.triangle.c().dims(), &[3]);
    let rf = RightFactor::new(&s, FactorKind::Subfactor);
    let b = Budget::full();
    assert!(rf.is_distinguished(&cone.triangle, &b).unwrap().is_some());
    assert!(rf.is_distinguished(&rf.standard(&Morphism::identity(&d.s)).unwrap(), &b).unwrap().is_some());
    let zero_s = Morphism::zero(&d.s, &d.s);
    let t0 = rf.standard(&zero_s).unwrap();
    let killed = RightTriangle::new(t0.f.clone(), t0.g.clone(), Morphism::zero(t0.c(), t0.shift())).unwrap();
    assert!(rf.is_distinguished(&killed, &b).unwrap().is_none());
}

#[test]
fn rt_and_lt_axioms_on_frobenius_fixtures() {
    let b = Budget::full();
    let (cat, d) = d2_category();
    let h = d2_frobenius(&cat, &d);
    let s = TriangleStructure::new(&cat, &h).unwrap();
    for kind in [FactorKind::Subfactor, FactorKind::Stable] {
        let r = verify_rt_axioms(&RightFactor::new(&s, kind), &b).unwrap();
        assert_passed(&r);
        assert_eq!(r.check_named("RT4 octahedral axiom").unwrap().status, Status::Pass);
        assert_passed(&verify_lt_axioms(&LeftFactor::new(&s, kind), &b).unwrap());
    }
    let (cat, c) = n2_category();
    let h = n2_frobenius(&cat, &c);
    let s = TriangleStructure::new(&cat, &h).unwrap();
    let r = verify_rt_axioms(&RightFactor::new(&s, FactorKind::Subfactor), &b).unwrap();
    assert_passed(&r);
    assert_eq!(r.fact_value("Sigma(S1)"), Some(s.sigma_obj(&c.s1).unwrap().label().as_str()));
    assert_passed(&verify_lt_axioms(&LeftFactor::new(&s, FactorKind::Subfactor), &b).unwrap());
}

#[test]
fn prt_axioms() {
    let b = Budget::default();
    let (cat, d) = d2_category();
    let s = TriangleStructure::new(&cat, &d2_frobenius(&cat, &d)).unwrap();
    assert_passed(&verify_prt_axioms(&s, &b).unwrap());
    let (cat, c) = n2_category();
    for h in [n2_frobenius(&cat, &c), n2_projective(&cat, &c)] {
        let s = TriangleStructure::new(&cat, &h).unwrap();
        assert_passed(&verify_prt_axioms(&s, &b).unwrap());
    }
}

#[test]
fn stabilizing_subcategories() {
    let b = Budget::full();
    let (cat, c) = n2_category();
    for h in [n2_frobenius(&cat, &c), n2_projective(&cat, &c)] {
        let s = TriangleStructure::new(&cat, &h).unwrap();
        for side in [Side::Right, Side::Left] {
            for target in [StabilizingTarget::Whole, StabilizingTarget::Intersection] {
                assert_passed(&check_stabilizing(&s, side, target, &b).unwrap());
            }
        }
    }
}

#[test]
fn pre_partial_both_modes() {
    let b = Budget::default();
    let (cat, d) = d2_category();
    let s = TriangleStructure::new(&cat, &d2_frobenius(&cat, &d)).unwrap();
    for mode in [PrePartialMode::Direct, PrePartialMode::SideFlip] {
        let r = check_pre_partial_conditions(&s, mode, &b).unwrap();
        assert_passed(&r);
    }
    let r = check_pre_partial_conditions(&s, PrePartialMode::SideFlip, &b).unwrap();
    assert_eq!(r.check_named("(g) left triangles with ends in C∩F are right triangles").unwrap().status, Status::Pass);
    let (cat, c) = n2_category();
    let s = TriangleStructure::new(&cat, &n2_projective(&cat, &c)).unwrap();
    assert_passed(&check_pre_partial_conditions(&s, PrePartialMode::Direct, &b).unwrap());
}

#[test]
fn adjunction_on_fixtures() {
    let b = Budget::full();
    let (cat, d) = d2_category();
    let s = TriangleStructure::new(&cat, &d2_frobenius(&cat, &d)).unwrap();
    let data = adjunction_phi(&s, &d.s, &d.s).unwrap();
    assert_eq!(data.source.dim(), 1);
    assert_eq!(data.target.dim(), 1);
    assert!(data.bijective);
    let into_x = adjunction_phi(&s, &d.s, &d.a).unwrap();
    assert_eq!(into_x.source.dim(), 0);
    assert!(into_x.bijective);
    assert_passed(&check_adjunction(&s, &b).unwrap());
    let (cat, c) = n2_category();
    let s = TriangleStructure::new(&cat, &n2_frobenius(&cat, &c)).unwrap();
    assert_passed(&check_adjunction(&s, &b).unwrap());
}

#[test]
fn pretriangulated_on_fixtures() {
    let b = Budget::full();
    let (cat, d) = d2_category();
    let s = TriangleStructure::new(&cat, &d2_frobenius(&cat, &d)).unwrap();
    assert_passed(&verify_pretriangulated(&s, &b).unwrap());
    let (cat, c) = n2_category();
    for h in [n2_frobenius(&cat, &c), n2_projective(&cat, &c)] {
        let s = TriangleStructure::new(&cat, &h).unwrap();
        assert_passed(&verify_pretriangulated(&s, &b).unwrap());
    }
}
