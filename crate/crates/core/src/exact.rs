//! Conflations of the abelian exact structure, pushouts and pullbacks along
//! them, Ext¹ from projective presentations, and the exactness axioms.

use std::fmt;

use crate::additive::{Category, HomSolver};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::linalg::{solve_linear, Matrix, Subspace, Vector};
use crate::module::{column_map, compose, direct_sum, projective_cover, row_map, Module, Morphism};
use crate::report::Report;

/// A short exact sequence `A ↣ B ↠ C`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Conflation {
    pub i: Morphism,
    pub d: Morphism,
}

impl Conflation {
    /// Validates exactness.
    pub fn new(i: Morphism, d: Morphism) -> Result<Self> {
        if !is_conflation(&i, &d) {
            return Err(Error::InvalidMorphism(format!("not a conflation: {} then {}", i, d)));
        }
        Ok(Conflation { i, d })
    }

    /// `i` followed by its cokernel.
    pub fn from_inflation(i: Morphism) -> Result<Self> {
        let d = i.cokernel().map;
        Conflation::new(i, d)
    }

    /// The kernel of `d` followed by `d`.
    pub fn from_deflation(d: Morphism) -> Result<Self> {
        let i = d.kernel().map;
        Conflation::new(i, d)
    }

    pub fn left(&self) -> &Module {
        self.i.source()
    }

    pub fn middle(&self) -> &Module {
        self.i.target()
    }

    pub fn right(&self) -> &Module {
        self.d.target()
    }
}

impl fmt::Display for Conflation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} >-> {} ->> {} [i: {}; d: {}]", self.left().label(), self.middle().label(), self.right().label(), self.i, self.d)
    }
}

/// Exactness of `0 → A → B → C → 0`: `i` injective, `d` surjective, `d∘i = 0`
/// and dimensions adding up at every vertex.
pub fn is_conflation(i: &Morphism, d: &Morphism) -> bool {
    if i.target() != d.source() {
        return false;
    }
    let Ok(c) = compose(d, i) else { return false };
    if !c.is_zero() || !i.is_injective() || !d.is_surjective() {
        return false;
    }
    let (a, b, cc) = (i.source(), i.target(), d.target());
    (0..b.dims().len()).all(|v| b.dim_at(v) == a.dim_at(v) + cc.dim_at(v))
}

/// `A → A⊕C → C` with the canonical injection and projection.
pub fn split_conflation(a: &Module, c: &Module) -> Result<Conflation> {
    let sum = direct_sum(a.algebra(), &[a.clone(), c.clone()])?;
    let object = sum.object.with_name(format!("{}+{}", a.label(), c.label()));
    let i = Morphism::new(a.clone(), object.clone(), sum.injections[0].maps().to_vec())?;
    let d = Morphism::new(object, c.clone(), sum.projections[1].maps().to_vec())?;
    Conflation::new(i, d)
}

/// Solves `x ∘ q = h` for a surjection `q` and an `h` vanishing on its kernel.
pub fn factor_through_epi(q: &Morphism, h: &Morphism) -> Result<Morphism> {
    let f = q.field();
    let mut maps = Vec::new();
    for v in 0..q.source().dims().len() {
        let (qt, ht) = (q.at(v).transpose(), h.at(v).transpose());
        let mut x = Matrix::zeros(f, h.target().dim_at(v), q.target().dim_at(v));
        for r in 0..h.target().dim_at(v) {
            let sol = solve_linear(&qt, &ht.column(r))?;
            let row = sol.particular.ok_or_else(|| Error::LiftUnsolvable(format!("{} does not factor through {}", h, q)))?;
            for (c, s) in row.into_iter().enumerate() {
                x.set(r, c, s);
            }
        }
        maps.push(x);
    }
    Morphism::new(q.target().clone(), h.target().clone(), maps)
}

/// Solves `k ∘ x = h` for an injection `k` whose image contains that of `h`.
pub fn factor_through_mono(k: &Morphism, h: &Morphism) -> Result<Morphism> {
    let sub = crate::module::Embedded { object: k.source().clone(), map: k.clone() };
    let x = h.corestrict(&sub)?;
    Morphism::new(x.source().clone(), x.target().clone(), x.maps().to_vec())
}

/// The pushout square of a conflation along `g: A → A'`.
#[derive(Clone, Debug)]
pub struct Pushout {
    pub conflation: Conflation,
    /// `B → E` completing the square.
    pub middle: Morphism,
}

/// The pullback square of a conflation along `f: C' → C`.
#[derive(Clone, Debug)]
pub struct Pullback {
    pub conflation: Conflation,
    /// `E → B` completing the square.
    pub middle: Morphism,
}

/// Pushout along `g`: `E = coker (i, −g)ᵗ : A → B⊕A'`.
pub fn pushout(c: &Conflation, g: &Morphism) -> Result<Pushout> {
    if g.source() != c.left() {
        return Err(Error::ComposabilityMismatch(format!("pushout along {} of {}", g, c)));
    }
    let (b, a2) = (c.middle(), g.target());
    let sum = direct_sum(b.algebra(), &[b.clone(), a2.clone()])?;
    let col = column_map(c.left(), &sum, &[c.i.clone(), g.neg()])?;
    let coker = col.cokernel();
    let e = coker.object.with_name(format!("PO({})", c.middle().label()));
    let q = Morphism::new(sum.object.clone(), e.clone(), coker.map.maps().to_vec())?;
    let i2 = compose(&q, &sum.injections[1])?;
    let dz = row_map(&sum, c.right(), &[c.d.clone(), Morphism::zero(a2, c.right())])?;
    let d2 = factor_through_epi(&q, &dz)?;
    let middle = compose(&q, &sum.injections[0])?;
    Ok(Pushout { conflation: Conflation::new(i2, d2)?, middle })
}

/// Pullback along `f`: `E = ker (d, −f) : B⊕C' → C`.
pub fn pullback(c: &Conflation, f: &Morphism) -> Result<Pullback> {
    if f.target() != c.right() {
        return Err(Error::ComposabilityMismatch(format!("pullback along {} of {}", f, c)));
    }
    let (b, c2) = (c.middle(), f.source());
    let sum = direct_sum(b.algebra(), &[b.clone(), c2.clone()])?;
    let row = row_map(&sum, c.right(), &[c.d.clone(), f.neg()])?;
    let ker = row.kernel();
    let e = ker.object.with_name(format!("PB({})", c.middle().label()));
    let k = Morphism::new(e.clone(), sum.object.clone(), ker.map.maps().to_vec())?;
    let d2 = compose(&sum.projections[1], &k)?;
    let iz = column_map(c.left(), &sum, &[c.i.clone(), Morphism::zero(c.left(), c2)])?;
    let i2 = factor_through_mono(&k, &iz)?;
    let middle = compose(&sum.projections[0], &k)?;
    Ok(Pullback { conflation: Conflation::new(i2, d2)?, middle })
}

/// A middle isomorphism `φ` with `φ∘i₁ = i₂` and `d₂∘φ = d₁`, when the
/// conflations share their ends and are equivalent.
pub fn conflation_equivalent(cat: &Category, c1: &Conflation, c2: &Conflation) -> Result<Option<Morphism>> {
    if c1.left() != c2.left() || c1.right() != c2.right() {
        return Ok(None);
    }
    let mut sys = HomSolver::new(cat, &[(c1.middle(), c2.middle())])?;
    sys.constrain(vec![(0, Box::new(|p: &Morphism| compose(p, &c1.i)))], &c2.i, None)?;
    sys.constrain(vec![(0, Box::new(|p: &Morphism| compose(&c2.d, p)))], &c1.d, None)?;
    Ok(sys.solve()?.map(|s| s.particular[0].clone()).filter(Morphism::is_iso))
}

/// `Ext¹(C, A)` with one pushout representative per basis class.
#[derive(Clone, Debug)]
pub struct Ext1Space {
    pub arg_c: Module,
    pub arg_a: Module,
    pub dim: usize,
    pub representatives: Vec<Conflation>,
}

/// Ext¹ computed from the projective cover of `C`.
pub fn ext1(cat: &Category, c: &Module, a: &Module) -> Result<Ext1Space> {
    ext1_via(cat, c, a, &projective_cover(c))
}

/// Ext¹ computed from a surjection `pi: P → C` out of a projective:
/// the cokernel of `Hom(P, A) → Hom(ΩC, A)` with `ΩC = ker pi`.
pub fn ext1_via(cat: &Category, c: &Module, a: &Module, pi: &Morphism) -> Result<Ext1Space> {
    if pi.target() != c || !pi.is_surjective() {
        return Err(Error::InvalidMorphism(format!("{} is not a presentation of {}", pi, c.label())));
    }
    let syz = Conflation::from_deflation(pi.clone())?;
    let omega = syz.left().with_name(format!("Omega({})", c.label()));
    let k = Morphism::new(omega.clone(), syz.middle().clone(), syz.i.maps().to_vec())?;
    let syz = Conflation { i: k.clone(), d: syz.d };
    let h_omega = cat.hom(&omega, a)?;
    let images: Vec<Vector> = cat
        .hom(syz.middle(), a)?
        .basis()
        .iter()
        .map(|u| compose(u, &k).map(|x| h_omega.coordinates(&x)))
        .collect::<Result<_>>()?;
    let restricted = Subspace::span(cat.field(), h_omega.dim(), &images);
    let mut representatives = Vec::new();
    for idx in restricted.complement_indices() {
        representatives.push(pushout(&syz, &h_omega.basis()[idx])?.conflation);
    }
    Ok(Ext1Space { arg_c: c.clone(), arg_a: a.clone(), dim: restricted.codim(), representatives })
}

/// Instance checks of the exact-category axioms on the given conflations and
/// the registry, plus weak idempotent completeness.
pub fn exactness_suite(cat: &Category, conflations: &[Conflation], budget: &Budget) -> Result<Report> {
    let mut report = Report::new("exactness");
    let zero = cat.zero_object();
    let z = Morphism::identity(&zero);
    report.check("Ex0: identity of 0 is a deflation", is_conflation(&z, &z), || "0 -> 0 -> 0".into());
    let mut fails = Vec::new();
    for m in cat.registry() {
        let id = Morphism::identity(m);
        if !is_conflation(&Morphism::zero(&zero, m), &id) || !is_conflation(&id, &Morphism::zero(m, &zero)) {
            fails.push(m.label());
        }
    }
    report.tally("Ex0: identities are inflations and deflations", cat.registry().len(), fails);

    let mut all = conflations.to_vec();
    for a in cat.registry() {
        for c in cat.registry() {
            all.push(split_conflation(a, c)?);
        }
    }

    let (pairs, sampled) = budget.sample(
        all.iter().flat_map(|x| all.iter().map(move |y| (x.clone(), y.clone()))).collect::<Vec<_>>(),
    );
    let (mut checked, mut fails) = (0, Vec::new());
    for (x, y) in &pairs {
        if x.right() == y.middle() {
            checked += 1;
            let d = compose(&y.d, &x.d)?;
            if Conflation::from_deflation(d.clone()).is_err() {
                fails.push(format!("{}", d));
            }
        }
    }
    let rec = report.tally("Ex1: deflations compose", checked, fails);
    if sampled {
        rec.caveats.push("composable pairs sampled by seed".into());
    }
    let (mut checked, mut fails) = (0, Vec::new());
    for (x, y) in &pairs {
        if x.middle() == y.left() {
            checked += 1;
            let i = compose(&y.i, &x.i)?;
            if Conflation::from_inflation(i.clone()).is_err() {
                fails.push(format!("{}", i));
            }
        }
    }
    report.tally("Ex1op: inflations compose", checked, fails);

    let (mut checked, mut fails) = (0, Vec::new());
    for c in &all {
        for t in cat.test_objects(&[]) {
            for f in cat.hom(&t, c.right())?.basis() {
                checked += 1;
                match pullback(c, f) {
                    Ok(pb) => {
                        let sq = compose(&c.d, &pb.middle)?.sub(&compose(f, &pb.conflation.d)?)?;
                        if !sq.is_zero() || compose(&pb.middle, &pb.conflation.i)? != c.i {
                            fails.push(format!("pullback square fails for {} along {}", c, f));
                        }
                    }
                    Err(e) => fails.push(format!("{} along {}: {}", c, f, e)),
                }
            }
        }
    }
    report.tally("Ex2: pullbacks of deflations", checked, fails);

    let (mut checked, mut fails) = (0, Vec::new());
    for c in &all {
        for t in cat.test_objects(&[]) {
            for g in cat.hom(c.left(), &t)?.basis() {
                checked += 1;
                match pushout(c, g) {
                    Ok(po) => {
                        let sq = compose(&po.middle, &c.i)?.sub(&compose(&po.conflation.i, g)?)?;
                        if !sq.is_zero() || compose(&po.conflation.d, &po.middle)? != c.d {
                            fails.push(format!("pushout square fails for {} along {}", c, g));
                        }
                    }
                    Err(e) => fails.push(format!("{} along {}: {}", c, g, e)),
                }
            }
        }
    }
    report.tally("Ex2op: pushouts of inflations", checked, fails);

    let (mut checked, mut fails) = (0, Vec::new());
    for a in cat.registry() {
        for b in cat.registry() {
            let sum = direct_sum(cat.algebra(), &[a.clone(), b.clone()])?;
            checked += 1;
            if Conflation::from_inflation(sum.injections[0].clone()).is_err() {
                fails.push(format!("{} -> {}+{}", a.label(), a.label(), b.label()));
            }
        }
    }
    report.tally("weakly idempotent complete: split monomorphisms are inflations", checked, fails);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{dual_numbers, two_cycle};
    use crate::module::{socle, top};

    #[test]
    fn d2_conflations() {
        let d = dual_numbers();
        let inc = socle(&d.a).map;
        let proj = top(&d.a).map;
        assert!(is_conflation(&inc, &proj));
        assert!(!is_conflation(&Morphism::zero(&d.s, &d.a), &proj));
        let sp = split_conflation(&d.s, &d.a).unwrap();
        assert_eq!(sp.middle().dims(), &[3]);
    }

    #[test]
    fn ext1_fixtures() {
        let d = dual_numbers();
        let cat = Category::new(d.algebra.clone(), vec![d.s.clone(), d.a.clone()]);
        let e = ext1(&cat, &d.s, &d.s).unwrap();
        assert_eq!(e.dim, 1);
        let nonsplit = Conflation::new(socle(&d.a).map, top(&d.a).map).unwrap();
        assert!(conflation_equivalent(&cat, &e.representatives[0], &nonsplit).unwrap().is_some());
        let sp = split_conflation(&d.s, &d.s).unwrap();
        assert!(conflation_equivalent(&cat, &sp, &nonsplit).unwrap().is_none());
        assert_eq!(ext1(&cat, &d.a, &d.s).unwrap().dim, 0);
        assert_eq!(ext1(&cat, &d.s, &d.a).unwrap().dim, 0);

        let c = two_cycle();
        let cat = Category::new(c.algebra.clone(), vec![c.s1.clone(), c.s2.clone(), c.p1.clone(), c.p2.clone()]);
        let e = ext1(&cat, &c.s1, &c.s2).unwrap();
        assert_eq!(e.dim, 1);
        assert_eq!(e.representatives[0].middle(), &c.p1);
        assert_eq!(ext1(&cat, &c.s1, &c.s1).unwrap().dim, 0);
    }

    #[test]
    fn ext1_is_presentation_independent() {
        let c = two_cycle();
        let cat = Category::new(c.algebra.clone(), vec![]);
        for m in [&c.s1, &c.s2, &c.p1] {
            for a in [&c.s1, &c.s2, &c.p2] {
                let cover = projective_cover(m);
                let extra = direct_sum(cat.algebra(), &[cover.source().clone(), c.p2.clone()]).unwrap();
                let pi = row_map(&extra, m, &[cover.clone(), Morphism::zero(&c.p2, m)]).unwrap();
                assert_eq!(ext1(&cat, m, a).unwrap().dim, ext1_via(&cat, m, a, &pi).unwrap().dim);
            }
        }
    }

    #[test]
    fn pushouts_and_pullbacks() {
        let d = dual_numbers();
        let cat = Category::new(d.algebra.clone(), vec![d.s.clone(), d.a.clone()]);
        let c = Conflation::new(socle(&d.a).map, top(&d.a).map).unwrap();
        let po = pushout(&c, &Morphism::identity(&d.s)).unwrap();
        assert!(conflation_equivalent(&cat, &po.conflation, &c).unwrap().is_some());
        let zero = cat.zero_object();
        let po0 = pushout(&c, &Morphism::zero(&d.s, &zero)).unwrap();
        assert_eq!(po0.conflation.middle().dims(), &[1]);
        assert!(po0.conflation.d.is_iso());
        let pb = pullback(&c, &Morphism::identity(&d.s)).unwrap();
        assert!(conflation_equivalent(&cat, &pb.conflation, &c).unwrap().is_some());
        let pb0 = pullback(&c, &Morphism::zero(&zero, &d.s)).unwrap();
        assert!(pb0.conflation.i.is_iso());
        let zs = Morphism::zero(&d.s, &d.s);
        assert!(cat.split_epi(&pushout(&c, &zs).unwrap().conflation.d).unwrap().is_some());
    }

    #[test]
    fn suite_passes_on_d2() {
        let d = dual_numbers();
        let cat = Category::new(d.algebra.clone(), vec![d.s.clone(), d.a.clone()]);
        let c = Conflation::new(socle(&d.a).map, top(&d.a).map).unwrap();
        let r = exactness_suite(&cat, &[c], &Budget::default()).unwrap();
        assert!(r.passed(), "{:?}", r.first_failure());
        let empty = Category::new(d.algebra.clone(), vec![]);
        let r = exactness_suite(&empty, &[], &Budget::default()).unwrap();
        assert!(r.passed());
        assert_eq!(r.checks[0].status, crate::report::Status::Pass);
    }
}
