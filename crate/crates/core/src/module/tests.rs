use super::*;
use crate::fixtures::{dual_numbers, two_cycle};
use crate::linalg::{Matrix, Scalar};

/// Every GF(2) vertex-map tuple between two modules, intertwining or not.
fn all_gf2_maps(m: &Module, n: &Module) -> Vec<Morphism> {
    let len: usize = m.dims().iter().zip(n.dims()).map(|(a, b)| a * b).sum();
    (0..1u64 << len)
        .map(|bits| {
            let v: Vec<Scalar> = (0..len).map(|i| Scalar::Mod(((bits >> i) & 1) as u32)).collect();
            Morphism::from_vector(m, n, &v).unwrap()
        })
        .collect()
}

fn brute_intertwiners(m: &Module, n: &Module) -> usize {
    all_gf2_maps(m, n).into_iter().filter(|f| Morphism::new(m.clone(), n.clone(), f.maps().to_vec()).is_ok()).count()
}

#[test]
fn hom_dimensions_match_brute_force() {
    let d = dual_numbers();
    let c = two_cycle();
    let d2 = [d.s.clone(), d.a.clone()];
    let n2 = [c.s1.clone(), c.s2.clone(), c.p1.clone(), c.p2.clone()];
    for family in [&d2[..], &n2[..]] {
        for m in family {
            for n in family {
                let h = hom_basis(m, n).unwrap();
                assert_eq!(1usize << h.dim(), brute_intertwiners(m, n), "{} -> {}", m.label(), n.label());
            }
        }
    }
    assert_eq!(hom_basis(&d.a, &d.a).unwrap().dim(), 2);
    assert_eq!(hom_basis(&d.s, &d.a).unwrap().dim(), 1);
    assert_eq!(hom_basis(&d.a, &Module::zero(d.algebra.clone())).unwrap().dim(), 0);
}

#[test]
fn hom_rejects_other_algebra() {
    let d = dual_numbers();
    let c = two_cycle();
    assert!(matches!(hom_basis(&d.s, &c.s1), Err(crate::Error::AlgebraMismatch(_))));
}

#[test]
fn coordinates_round_trip() {
    let d = dual_numbers();
    let h = hom_basis(&d.a, &d.a).unwrap();
    for b in h.basis() {
        assert_eq!(&h.combine(&h.coordinates(b)), b);
    }
}

#[test]
fn socle_then_top_composes_to_zero() {
    let d = dual_numbers();
    let inc = socle(&d.a).map;
    let proj = top(&d.a).map;
    assert_eq!(inc.source(), &d.s);
    assert_eq!(proj.target(), &d.s);
    assert!(compose(&proj, &inc).unwrap().is_zero());
    let zero = Morphism::zero(&d.a, &d.s);
    assert!(compose(&zero, &inc).unwrap().is_zero());
    let id = Morphism::identity(&d.a);
    assert_eq!(compose(&id, &inc).unwrap(), inc);
    assert!(compose(&inc, &inc).is_err());
}

#[test]
fn kernels_and_cokernels() {
    let d = dual_numbers();
    let c = two_cycle();
    let k = Morphism::identity(&d.a).kernel();
    assert!(k.object.is_zero());
    let proj = top(&d.a).map;
    let k = proj.kernel();
    assert_eq!(k.object, d.s);
    assert!(compose(&proj, &k.map).unwrap().is_zero());
    let p1_top = top(&c.p1).map;
    assert_eq!(p1_top.target(), &c.s1);
    assert_eq!(p1_top.kernel().object, c.s2);
    let inc = socle(&d.a).map;
    assert_eq!(inc.cokernel().object, d.s);
}

#[test]
fn direct_sums() {
    let d = dual_numbers();
    let empty = direct_sum(&d.algebra, &[]).unwrap();
    assert!(empty.object.is_zero());
    let ss = direct_sum(&d.algebra, &[d.s.clone(), d.s.clone()]).unwrap();
    assert_eq!(ss.object.dims(), &[2]);
    assert!(ss.object.action(0).is_zero());
    let sa = direct_sum(&d.algebra, &[d.s.clone(), d.a.clone()]).unwrap();
    assert_eq!(sa.object.dims(), &[3]);
    for (j, p) in sa.projections.iter().enumerate() {
        for (k, i) in sa.injections.iter().enumerate() {
            let pi = compose(p, i).unwrap();
            if j == k {
                assert_eq!(pi, Morphism::identity(p.target()));
            } else {
                assert!(pi.is_zero());
            }
        }
    }
    let hs = hom_basis(&sa.object, &d.a).unwrap().dim();
    assert_eq!(hs, hom_basis(&d.s, &d.a).unwrap().dim() + hom_basis(&d.a, &d.a).unwrap().dim());
}

#[test]
fn radical_socle_top() {
    let d = dual_numbers();
    let c = two_cycle();
    assert!(radical(&d.s).object.is_zero());
    assert_eq!(radical(&d.a).object, d.s);
    assert_eq!(socle(&d.a).object, d.s);
    assert_eq!(top(&c.p1).object, c.s1);
}

#[test]
fn projectives_and_injectives() {
    let d = dual_numbers();
    let c = two_cycle();
    assert_eq!(Module::projective(d.algebra.clone(), 0), d.a);
    assert_eq!(Module::projective(c.algebra.clone(), 0), c.p1);
    assert_eq!(Module::projective(c.algebra.clone(), 1), c.p2);
    assert_eq!(Module::injective(c.algebra.clone(), 0), c.p2);
    assert_eq!(Module::injective(c.algebra.clone(), 1), c.p1);
    let cover = projective_cover(&d.s);
    assert_eq!(cover.source(), &d.a);
    assert!(cover.is_surjective());
    let env = injective_envelope(&c.s1);
    assert_eq!(env.target(), &c.p2);
    assert!(env.is_injective());
    let z = Module::zero(d.algebra.clone());
    assert!(projective_cover(&z).source().is_zero());
    assert!(is_projective(&d.a) && is_injective(&d.a));
    assert!(!is_projective(&d.s));
}

#[test]
fn split_tests() {
    let d = dual_numbers();
    let id = Morphism::identity(&d.a);
    assert_eq!(is_split_epi(&id).unwrap(), Some(id.clone()));
    assert!(is_split_epi(&top(&d.a).map).unwrap().is_none());
    let sa = direct_sum(&d.algebra, &[d.a.clone(), d.s.clone()]).unwrap();
    let sec = is_split_epi(&sa.projections[1]).unwrap().unwrap();
    assert_eq!(compose(&sa.projections[1], &sec).unwrap(), Morphism::identity(&d.s));
    assert!(is_split_mono(&sa.injections[0]).unwrap().is_some());
    assert!(is_split_mono(&socle(&d.a).map).unwrap().is_none());
}

#[test]
fn module_validation() {
    let d = dual_numbers();
    let f = d.algebra.field();
    let bad = Module::new(d.algebra.clone(), vec![1], vec![Matrix::from_rows(f, &[vec![1]]).unwrap()]);
    assert!(matches!(bad, Err(crate::Error::InvalidModule(_))));
    let shape = Module::new(d.algebra.clone(), vec![2], vec![Matrix::zeros(f, 1, 1)]);
    assert!(shape.is_err());
    let not_hom = Morphism::new(d.s.clone(), d.a.clone(), vec![Matrix::from_rows(f, &[vec![1], vec![0]]).unwrap()]);
    assert!(not_hom.is_err());
}

#[test]
fn identity_ignores_names() {
    let d = dual_numbers();
    assert_eq!(d.a.id(), d.a.with_name("other").id());
    let reg = Module::projective(d.algebra.clone(), 0);
    assert_eq!(reg.id(), d.a.id());
}
