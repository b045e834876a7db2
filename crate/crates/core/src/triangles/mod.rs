//! Right and left triangulated structures induced on factor categories by a
//! Hovey triple, with `Σ = Ω = 0` on the ambient abelian category.
//!
//! Right triangles of the ambient category are conflations `A ↣ B ↠ C` with
//! `C ∈ C`; left triangles are conflations with `A ∈ F`. Every object of `C`
//! gets a fixed right triangle `A ↣ X^A ↠ U^A` and every object of `F` a fixed
//! left triangle `U_A ↣ X_A ↠ A`, from which `Σ^X` on `C/X` and `Ω_X` on `F/X`
//! are built.

mod adjunction;
mod axioms;
mod factor;
mod partial;
mod prepartial;
mod pretriangulated;
mod stabilizing;

use std::collections::HashMap;
use std::fmt;
use std::sync::RwLock;

pub use adjunction::{adjunction_phi, check_adjunction, Adjunction, AdjunctionData};
pub use axioms::{verify_lt_axioms, verify_rt_axioms};
pub use factor::{FactorKind, LeftFactor, RightFactor};
pub use partial::{left_probes, right_probes, verify_prt_axioms};
pub use prepartial::{check_pre_partial_conditions, PrePartialMode};
pub use pretriangulated::verify_pretriangulated;
pub use stabilizing::{check_stabilizing, Side, StabilizingTarget};

use crate::additive::{Category, HomSolution, HomSolver, Subcategory};
use crate::budget::Budget;
use crate::cotorsion::{HoveyTriple, LocalizationTriple};
use crate::error::{Error, Result};
use crate::linalg::Subspace;
use crate::exact::{factor_through_epi, factor_through_mono, Conflation};
use crate::module::{column_map, compose, direct_sum, row_map, DirectSum, Module, ModuleId, Morphism};

/// `A → B → C → Σ(A)` given by representatives.
#[derive(Clone, Debug)]
pub struct RightTriangle {
    pub f: Morphism,
    pub g: Morphism,
    pub h: Morphism,
}

impl RightTriangle {
    pub fn new(f: Morphism, g: Morphism, h: Morphism) -> Result<Self> {
        if f.target() != g.source() || g.target() != h.source() {
            return Err(Error::ComposabilityMismatch(format!("right triangle legs {} / {} / {}", f, g, h)));
        }
        Ok(RightTriangle { f, g, h })
    }

    pub fn a(&self) -> &Module {
        self.f.source()
    }

    pub fn b(&self) -> &Module {
        self.f.target()
    }

    pub fn c(&self) -> &Module {
        self.g.target()
    }

    pub fn shift(&self) -> &Module {
        self.h.target()
    }
}

impl fmt::Display for RightTriangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {} -> {} -> {} [f: {}; g: {}; h: {}]", self.a().label(), self.b().label(), self.c().label(), self.shift().label(), self.f, self.g, self.h)
    }
}

/// `Ω(C) → A → B → C` given by representatives.
#[derive(Clone, Debug)]
pub struct LeftTriangle {
    pub h: Morphism,
    pub f: Morphism,
    pub g: Morphism,
}

impl LeftTriangle {
    pub fn new(h: Morphism, f: Morphism, g: Morphism) -> Result<Self> {
        if h.target() != f.source() || f.target() != g.source() {
            return Err(Error::ComposabilityMismatch(format!("left triangle legs {} / {} / {}", h, f, g)));
        }
        Ok(LeftTriangle { h, f, g })
    }

    pub fn shift(&self) -> &Module {
        self.h.source()
    }

    pub fn a(&self) -> &Module {
        self.f.source()
    }

    pub fn b(&self) -> &Module {
        self.f.target()
    }

    pub fn c(&self) -> &Module {
        self.g.target()
    }
}

impl fmt::Display for LeftTriangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {} -> {} -> {} [h: {}; f: {}; g: {}]", self.shift().label(), self.a().label(), self.b().label(), self.c().label(), self.h, self.f, self.g)
    }
}

/// `A ↣ X^A ↠ U^A` with `X^A ∈ X`, `U^A ∈ C` and `i` an X-preenvelope.
#[derive(Clone, Debug)]
pub struct FixedRight {
    pub base: Module,
    pub i: Morphism,
    pub p: Morphism,
}

impl FixedRight {
    pub fn x_obj(&self) -> &Module {
        self.i.target()
    }

    pub fn u_obj(&self) -> &Module {
        self.p.target()
    }

    pub fn conflation(&self) -> Result<Conflation> {
        Conflation::new(self.i.clone(), self.p.clone())
    }
}

/// `U_A ↣ X_A ↠ A` with `X_A ∈ X`, `U_A ∈ F` and `π` an X-precover.
#[derive(Clone, Debug)]
pub struct FixedLeft {
    pub base: Module,
    pub iota: Morphism,
    pub pi: Morphism,
}

impl FixedLeft {
    pub fn x_obj(&self) -> &Module {
        self.pi.source()
    }

    pub fn u_obj(&self) -> &Module {
        self.iota.source()
    }

    pub fn conflation(&self) -> Result<Conflation> {
        Conflation::new(self.iota.clone(), self.pi.clone())
    }
}

/// Lift of `f: A → B` to the fixed triangles: `σ: X^A → X^B` and `κ: U^A → U^B`
/// (right), or `σ: X_A → X_B` and `κ: U_A → U_B` (left).
#[derive(Clone, Debug)]
pub struct ShiftLift {
    pub sigma: Morphism,
    pub kappa: Morphism,
}

/// `A ↣ X^A ⊕ B ↠ N` built from `(i^A, f)ᵗ`, and the standard right triangle
/// `A → B → N → U^A` it induces.
#[derive(Clone, Debug)]
pub struct Cone {
    pub sum: DirectSum,
    pub inflation: Morphism,
    pub q: Morphism,
    pub triangle: RightTriangle,
}

/// `K ↣ X_N ⊕ M ↠ N` built from `(π_N, e)`, and the standard left triangle
/// `U_N → K → M → N` it induces.
#[derive(Clone, Debug)]
pub struct Fiber {
    pub sum: DirectSum,
    pub k: Morphism,
    pub deflation: Morphism,
    pub triangle: LeftTriangle,
}

/// The data a Hovey triple induces: classes, fixed triangles and the
/// localization triple `(C, X, F)` supplying `Q` and `R`.
#[derive(Debug)]
pub struct TriangleStructure<'c> {
    cat: &'c Category,
    hovey: HoveyTriple,
    triple: LocalizationTriple,
    cf: Subcategory,
    right: RwLock<HashMap<ModuleId, FixedRight>>,
    left: RwLock<HashMap<ModuleId, FixedLeft>>,
}

impl<'c> TriangleStructure<'c> {
    pub fn new(cat: &'c Category, hovey: &HoveyTriple) -> Result<Self> {
        Self::with_triple(cat, hovey, LocalizationTriple::from_hovey(hovey))
    }

    /// Uses a prepared localization triple, e.g. one with overridden tables.
    pub fn with_triple(cat: &'c Category, hovey: &HoveyTriple, triple: LocalizationTriple) -> Result<Self> {
        let cf = hovey.c_and_f(cat)?;
        Ok(TriangleStructure {
            cat,
            hovey: hovey.clone(),
            triple,
            cf,
            right: RwLock::new(HashMap::new()),
            left: RwLock::new(HashMap::new()),
        })
    }

    pub fn cat(&self) -> &'c Category {
        self.cat
    }

    pub fn hovey(&self) -> &HoveyTriple {
        &self.hovey
    }

    pub fn triple(&self) -> &LocalizationTriple {
        &self.triple
    }

    pub fn c(&self) -> &Subcategory {
        &self.hovey.c
    }

    pub fn f(&self) -> &Subcategory {
        &self.hovey.f
    }

    pub fn x(&self) -> &Subcategory {
        &self.hovey.x
    }

    pub fn cf(&self) -> &Subcategory {
        &self.cf
    }

    /// Registry objects lying in `sub`.
    pub fn registry_in(&self, sub: &Subcategory) -> Result<Vec<Module>> {
        let mut out = Vec::new();
        for m in self.cat.registry() {
            if self.cat.is_in_add(sub, m)? {
                out.push(m.clone());
            }
        }
        Ok(out)
    }

    pub fn fixed_right(&self, a: &Module) -> Result<FixedRight> {
        if let Some(t) = self.right.read().expect("fixed right table poisoned").get(&a.id()) {
            return Ok(t.clone());
        }
        let cat = self.cat;
        if !cat.is_in_add(self.c(), a)? {
            return Err(Error::NotInClass(format!("{} is not in {}", a.label(), self.c().name())));
        }
        let t = if cat.is_in_add(self.x(), a)? {
            FixedRight { base: a.clone(), i: Morphism::identity(a), p: Morphism::zero(a, &cat.zero_object()) }
        } else {
            let c = self.hovey.pair1.inj_witness(cat, a)?;
            FixedRight { base: a.clone(), i: c.i, p: c.d }
        };
        if !cat.is_in_add(self.x(), t.x_obj())? || !cat.is_in_add(self.c(), t.u_obj())? {
            return Err(Error::PreenvelopeCheckFailed(format!("fixed right triangle of {}: {} -> {}", a.label(), t.x_obj().label(), t.u_obj().label())));
        }
        if !cat.is_relative_monic(&t.i, self.x())? {
            return Err(Error::PreenvelopeCheckFailed(format!("i^{} is not an X-preenvelope", a.label())));
        }
        let mut table = self.right.write().expect("fixed right table poisoned");
        Ok(table.entry(a.id()).or_insert(t).clone())
    }

    pub fn fixed_left(&self, a: &Module) -> Result<FixedLeft> {
        if let Some(t) = self.left.read().expect("fixed left table poisoned").get(&a.id()) {
            return Ok(t.clone());
        }
        let cat = self.cat;
        if !cat.is_in_add(self.f(), a)? {
            return Err(Error::NotInClass(format!("{} is not in {}", a.label(), self.f().name())));
        }
        let t = if cat.is_in_add(self.x(), a)? {
            FixedLeft { base: a.clone(), iota: Morphism::zero(&cat.zero_object(), a), pi: Morphism::identity(a) }
        } else {
            let c = self.hovey.pair2.proj_witness(cat, a)?;
            FixedLeft { base: a.clone(), iota: c.i, pi: c.d }
        };
        if !cat.is_in_add(self.x(), t.x_obj())? || !cat.is_in_add(self.f(), t.u_obj())? {
            return Err(Error::PrecoverCheckFailed(format!("fixed left triangle of {}: {} -> {}", a.label(), t.u_obj().label(), t.x_obj().label())));
        }
        if !cat.is_relative_epic(&t.pi, self.x())? {
            return Err(Error::PrecoverCheckFailed(format!("pi_{} is not an X-precover", a.label())));
        }
        let mut table = self.left.write().expect("fixed left table poisoned");
        Ok(table.entry(a.id()).or_insert(t).clone())
    }

    /// `U^A`, the value of `Σ^X` on an object of `C`.
    pub fn sigma_obj(&self, a: &Module) -> Result<Module> {
        Ok(self.fixed_right(a)?.u_obj().clone())
    }

    /// `U_A`, the value of `Ω_X` on an object of `F`.
    pub fn omega_obj(&self, a: &Module) -> Result<Module> {
        Ok(self.fixed_left(a)?.u_obj().clone())
    }

    /// `σ` with `σ∘i^A = i^B∘f`, and `κ^f` induced on cokernels.
    pub fn sigma_lift(&self, f: &Morphism) -> Result<ShiftLift> {
        let (ta, tb) = (self.fixed_right(f.source())?, self.fixed_right(f.target())?);
        let want = compose(&tb.i, f)?;
        let mut sys = HomSolver::new(self.cat, &[(ta.x_obj(), tb.x_obj())])?;
        sys.constrain(vec![(0, Box::new(|s: &Morphism| compose(s, &ta.i)))], &want, None)?;
        let sol = sys.solve()?.ok_or_else(|| Error::KappaUnsolvable(format!("no sigma with sigma i^A = i^B f for {}", f)))?;
        let sigma = sol.particular[0].clone();
        let kappa = factor_through_epi(&ta.p, &compose(&tb.p, &sigma)?)?;
        Ok(ShiftLift { sigma, kappa })
    }

    /// `κ^f : U^A → U^B` representing `Σ^X(f)`.
    pub fn sigma_map(&self, f: &Morphism) -> Result<Morphism> {
        Ok(self.sigma_lift(f)?.kappa)
    }

    /// `σ` with `π_B∘σ = f∘π_A`, and `κ` with `ι_B∘κ = σ∘ι_A`.
    pub fn omega_lift(&self, f: &Morphism) -> Result<ShiftLift> {
        let (ta, tb) = (self.fixed_left(f.source())?, self.fixed_left(f.target())?);
        let want = compose(f, &ta.pi)?;
        let mut sys = HomSolver::new(self.cat, &[(ta.x_obj(), tb.x_obj())])?;
        sys.constrain(vec![(0, Box::new(|s: &Morphism| compose(&tb.pi, s)))], &want, None)?;
        let sol = sys.solve()?.ok_or_else(|| Error::KappaUnsolvable(format!("no sigma with pi_B sigma = f pi_A for {}", f)))?;
        let sigma = sol.particular[0].clone();
        let kappa = factor_through_mono(&tb.iota, &compose(&sigma, &ta.iota)?)?;
        Ok(ShiftLift { sigma, kappa })
    }

    /// `U_A → U_B` representing `Ω_X(f)`.
    pub fn omega_map(&self, f: &Morphism) -> Result<Morphism> {
        Ok(self.omega_lift(f)?.kappa)
    }

    /// Standard right triangle on `f: A → B` in `C/X`.
    pub fn cone(&self, f: &Morphism) -> Result<Cone> {
        let (a, b) = (f.source(), f.target());
        if !self.cat.is_in_add(self.c(), b)? {
            return Err(Error::NotInClass(format!("{} is not in {}", b.label(), self.c().name())));
        }
        let t = self.fixed_right(a)?;
        let sum = direct_sum(self.cat.algebra(), &[t.x_obj().clone(), b.clone()])?;
        let inflation = column_map(a, &sum, &[t.i.clone(), f.clone()])?;
        let coker = inflation.cokernel();
        let n = coker.object.with_name(format!("N({}->{})", a.label(), b.label()));
        let q = Morphism::new(sum.object.clone(), n, coker.map.maps().to_vec())?;
        let g = compose(&q, &sum.injections[1])?;
        let h = factor_through_epi(&q, &compose(&t.p, &sum.projections[0])?)?;
        let triangle = RightTriangle::new(f.clone(), g, h)?;
        Ok(Cone { sum, inflation, q, triangle })
    }

    /// Standard left triangle on `e: M → N` in `F/X`.
    pub fn fiber(&self, e: &Morphism) -> Result<Fiber> {
        let (m, n) = (e.source(), e.target());
        if !self.cat.is_in_add(self.f(), m)? {
            return Err(Error::NotInClass(format!("{} is not in {}", m.label(), self.f().name())));
        }
        let t = self.fixed_left(n)?;
        let sum = direct_sum(self.cat.algebra(), &[t.x_obj().clone(), m.clone()])?;
        let deflation = row_map(&sum, n, &[t.pi.clone(), e.clone()])?;
        let ker = deflation.kernel();
        let kobj = ker.object.with_name(format!("K({}->{})", m.label(), n.label()));
        let k = Morphism::new(kobj, sum.object.clone(), ker.map.maps().to_vec())?;
        let mm = compose(&sum.projections[1], &k)?;
        let xi = factor_through_mono(&k, &compose(&sum.injections[0], &t.iota)?)?;
        let triangle = LeftTriangle::new(xi, mm, e.clone())?;
        Ok(Fiber { sum, k, deflation, triangle })
    }
}

/// Values of unknown `idx` across the solutions of `sol`: the particular
/// solution first, then combinations of the homogeneous directions reduced
/// modulo `x`, enumerated within `budget`.
pub(crate) fn solution_values(cat: &Category, x: &Subcategory, sol: &HomSolution, idx: usize, budget: &Budget) -> Result<Vec<Morphism>> {
    let base = &sol.particular[idx];
    let fh = cat.factor_hom(x, base.source(), base.target())?;
    let field = cat.field();
    let classes: Vec<_> = sol.kernel.iter().map(|k| fh.class_of(&k[idx])).collect();
    let basis = Subspace::span(field, fh.dim(), &classes).basis_vectors();
    let (coeffs, _) = budget.vectors(field, basis.len());
    let mut out = vec![base.clone()];
    for c in coeffs.iter().skip(1) {
        let mut v = vec![field.zero(); fh.dim()];
        for (s, b) in c.iter().zip(&basis) {
            for (vi, bi) in v.iter_mut().zip(b) {
                *vi = field.add(vi, &field.mul(s, bi));
            }
        }
        out.push(base.add(&fh.representative(&v))?);
    }
    Ok(out)
}

/// First solution value of unknown `idx` satisfying `accept`, searching the
/// solution space modulo `x` in full up to the dimension cap.
pub(crate) fn search_solutions(
    cat: &Category,
    x: &Subcategory,
    sol: &HomSolution,
    idx: usize,
    budget: &Budget,
    mut accept: impl FnMut(&Morphism) -> Result<bool>,
) -> Result<Option<Morphism>> {
    if accept(&sol.particular[idx])? {
        return Ok(Some(sol.particular[idx].clone()));
    }
    let full = Budget { full: true, ..*budget };
    for cand in solution_values(cat, x, sol, idx, &full)?.into_iter().skip(1) {
        if accept(&cand)? {
            return Ok(Some(cand));
        }
    }
    Ok(None)
}

/// Coset representatives of `Hom(a, b)/X(a, b)` for all pairs of `objects`,
/// within `budget`. The flag reports a fallback from full enumeration.
pub(crate) fn factor_morphisms(cat: &Category, x: &Subcategory, objects: &[Module], budget: &Budget) -> Result<(Vec<Morphism>, bool)> {
    let mut out = Vec::new();
    let mut fell = false;
    for a in objects {
        for b in objects {
            let fh = cat.factor_hom(x, a, b)?;
            let (vs, f) = budget.vectors(cat.field(), fh.dim());
            fell |= f;
            out.extend(vs.iter().map(|v| fh.representative(v)));
        }
    }
    Ok((out, fell))
}

/// Morphisms `a → b` given by all vectors of the hom space within `budget`.
pub(crate) fn ambient_morphisms(cat: &Category, a: &Module, b: &Module, budget: &Budget) -> Result<(Vec<Morphism>, bool)> {
    let hom = cat.hom(a, b)?;
    let (vs, fell) = budget.vectors(cat.field(), hom.dim());
    Ok((vs.iter().map(|v| hom.combine(v)).collect(), fell))
}

/// `(f_1 ⊕ ... ⊕ f_k)` between two sums with matching summand counts.
pub(crate) fn diag_map(src: &DirectSum, tgt: &DirectSum, parts: &[Morphism]) -> Result<Morphism> {
    let mut acc = Morphism::zero(&src.object, &tgt.object);
    for ((p, inj), proj) in parts.iter().zip(&tgt.injections).zip(&src.projections) {
        acc = acc.add(&compose(inj, &compose(p, proj)?)?)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests;
