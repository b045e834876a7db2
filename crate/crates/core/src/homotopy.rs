//! The homotopy category `Ho(C, X, D)` of a localization triple. Objects are
//! those of the ambient category, `Hom_Ho(A, B) = Hom_{(C∩D)/X}(RQ A, RQ B)`
//! and `γ(f) = RQ(f)`.

use std::collections::HashMap;
use std::fmt;
use std::sync::RwLock;

use crate::additive::{Category, FactorHom, Subcategory};
use crate::budget::Budget;
use crate::cotorsion::LocalizationTriple;
use crate::error::{Error, Result};
use crate::module::{compose, Module, ModuleId, Morphism};
use crate::report::Report;
use crate::triangles::{FactorKind, LeftFactor, LeftTriangle, RightFactor, RightTriangle, TriangleStructure};

/// A morphism `A → B` of `Ho`, stored as a coset representative `RQ A → RQ B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HoMorphism {
    pub source: Module,
    pub target: Module,
    pub core: Morphism,
}

impl fmt::Display for HoMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} => {} via {}", self.source.label(), self.target.label(), self.core)
    }
}

/// `γ(r_B) γ(j^{Q(B)})⁻¹ γ(f′) γ(j^{Q(A)}) γ(r_A)⁻¹` for a morphism `A → B` of `Ho`.
#[derive(Clone, Debug)]
pub struct ZigzagForm {
    /// `r_A : Q(A) → A`.
    pub r_source: Morphism,
    /// `j^{Q(A)} : Q(A) → RQ(A)`.
    pub j_source: Morphism,
    /// `f′ : RQ(A) → RQ(B)`.
    pub core: Morphism,
    /// `j^{Q(B)} : Q(B) → RQ(B)`.
    pub j_target: Morphism,
    /// `r_B : Q(B) → B`.
    pub r_target: Morphism,
    /// Whether the five factors compose back to the morphism in `Ho`.
    pub recomposes: bool,
}

#[derive(Debug)]
pub struct HomotopyCategory<'a> {
    cat: &'a Category,
    triple: &'a LocalizationTriple,
    objects: Vec<Module>,
    cache: RwLock<HashMap<(ModuleId, ModuleId), FactorHom>>,
}

impl<'a> HomotopyCategory<'a> {
    /// `Ho` over the registry of `cat`.
    pub fn new(cat: &'a Category, triple: &'a LocalizationTriple) -> Self {
        HomotopyCategory { cat, triple, objects: cat.registry().to_vec(), cache: RwLock::new(HashMap::new()) }
    }

    pub fn cat(&self) -> &'a Category {
        self.cat
    }

    pub fn triple(&self) -> &'a LocalizationTriple {
        self.triple
    }

    pub fn x(&self) -> &Subcategory {
        &self.triple.x
    }

    pub fn objects(&self) -> &[Module] {
        &self.objects
    }

    pub fn rq_obj(&self, a: &Module) -> Result<Module> {
        self.triple.rq_obj(self.cat, a)
    }

    /// `RQ(f)` as the canonical representative of its coset.
    pub fn rq_map(&self, f: &Morphism) -> Result<Morphism> {
        let q = self.triple.lift_through_precover(self.cat, f)?.map;
        let r = self.triple.lift_through_preenvelope(self.cat, &q)?.map;
        Ok(self.cat.factor_hom(self.x(), r.source(), r.target())?.normalize(&r))
    }

    /// `Hom_{(C∩D)/X}(RQ A, RQ B)`.
    pub fn ho_hom(&self, a: &Module, b: &Module) -> Result<FactorHom> {
        if let Some(h) = self.cache.read().expect("ho cache poisoned").get(&(a.id(), b.id())) {
            return Ok(h.clone());
        }
        let fh = self.cat.factor_hom(self.x(), &self.rq_obj(a)?, &self.rq_obj(b)?)?;
        let mut cache = self.cache.write().expect("ho cache poisoned");
        Ok(cache.entry((a.id(), b.id())).or_insert(fh).clone())
    }

    /// Wraps a representative `RQ A → RQ B`, normalized.
    pub fn from_core(&self, a: &Module, b: &Module, core: &Morphism) -> Result<HoMorphism> {
        let fh = self.ho_hom(a, b)?;
        if core.source() != fh.source() || core.target() != fh.target() {
            return Err(Error::ComposabilityMismatch(format!("{} is not a map {} -> {}", core, fh.source().label(), fh.target().label())));
        }
        Ok(HoMorphism { source: a.clone(), target: b.clone(), core: fh.normalize(core) })
    }

    pub fn gamma(&self, f: &Morphism) -> Result<HoMorphism> {
        Ok(HoMorphism { source: f.source().clone(), target: f.target().clone(), core: self.rq_map(f)? })
    }

    pub fn identity(&self, a: &Module) -> Result<HoMorphism> {
        self.from_core(a, a, &Morphism::identity(&self.rq_obj(a)?))
    }

    pub fn zero(&self, a: &Module, b: &Module) -> Result<HoMorphism> {
        self.from_core(a, b, &Morphism::zero(&self.rq_obj(a)?, &self.rq_obj(b)?))
    }

    /// `g ∘ f`.
    pub fn compose(&self, g: &HoMorphism, f: &HoMorphism) -> Result<HoMorphism> {
        if f.target != g.source {
            return Err(Error::ComposabilityMismatch(format!("{} then {}", f, g)));
        }
        self.from_core(&f.source, &g.target, &compose(&g.core, &f.core)?)
    }

    pub fn add(&self, f: &HoMorphism, g: &HoMorphism) -> Result<HoMorphism> {
        self.from_core(&f.source, &f.target, &f.core.add(&g.core)?)
    }

    pub fn equal(&self, f: &HoMorphism, g: &HoMorphism) -> Result<bool> {
        Ok(f.source == g.source && f.target == g.target && self.cat.factor_equal(self.x(), &f.core, &g.core)?)
    }

    pub fn inverse(&self, f: &HoMorphism) -> Result<Option<HoMorphism>> {
        match self.cat.is_factor_iso(self.x(), &f.core)? {
            Some(inv) => Ok(Some(self.from_core(&f.target, &f.source, &inv)?)),
            None => Ok(None),
        }
    }

    /// Coset basis of `Hom_Ho(A, B)`.
    pub fn basis(&self, a: &Module, b: &Module) -> Result<Vec<HoMorphism>> {
        self.ho_hom(a, b)?.coset_basis().iter().map(|c| self.from_core(a, b, c)).collect()
    }

    /// The five-factor decomposition of `m` and its recomposition test.
    pub fn zigzag_form(&self, m: &HoMorphism) -> Result<ZigzagForm> {
        let (cat, t) = (self.cat, self.triple);
        let (a, b) = (&m.source, &m.target);
        let r_source = t.r_map(cat, a)?;
        let r_target = t.r_map(cat, b)?;
        let j_source = t.j_map(cat, r_source.source())?;
        let j_target = t.j_map(cat, r_target.source())?;
        let inv = |f: &Morphism| -> Result<HoMorphism> {
            self.inverse(&self.gamma(f)?)?.ok_or_else(|| Error::FDoesNotInvertS(format!("gamma({}) is not invertible", f)))
        };
        let parts = [
            inv(&r_source)?,
            self.gamma(&j_source)?,
            self.gamma(&m.core)?,
            inv(&j_target)?,
            self.gamma(&r_target)?,
        ];
        let mut acc = parts[0].clone();
        for p in &parts[1..] {
            acc = self.compose(p, &acc)?;
        }
        let recomposes = self.equal(&acc, m)?;
        Ok(ZigzagForm { r_source, j_source, core: m.core.clone(), j_target, r_target, recomposes })
    }

    /// `γ(j^{Q(A)}) γ(r_A)⁻¹ : A → RQ(A)`.
    pub fn comparison(&self, a: &Module) -> Result<HoMorphism> {
        let (cat, t) = (self.cat, self.triple);
        let r = t.r_map(cat, a)?;
        let j = t.j_map(cat, r.source())?;
        let r_inv = self.inverse(&self.gamma(&r)?)?.ok_or_else(|| Error::FDoesNotInvertS(format!("gamma(r_{}) is not invertible", a.label())))?;
        self.compose(&self.gamma(&j)?, &r_inv)
    }
}

/// Whether `RQ(f)` is an isomorphism in `(C∩D)/X`.
pub fn is_weak_equivalence(cat: &Category, t: &LocalizationTriple, f: &Morphism) -> Result<bool> {
    let q = t.lift_through_precover(cat, f)?.map;
    let r = t.lift_through_preenvelope(cat, &q)?.map;
    Ok(cat.is_factor_iso(&t.x, &r)?.is_some())
}

/// Every morphism between registry objects, per ordered pair, within `budget`.
fn registry_morphisms(cat: &Category, budget: &Budget) -> Result<(Vec<Morphism>, bool)> {
    let mut out = Vec::new();
    let mut fell = false;
    for a in cat.registry() {
        for b in cat.registry() {
            let hom = cat.hom(a, b)?;
            let (vs, f) = budget.vectors(cat.field(), hom.dim());
            fell |= f;
            out.extend(vs.iter().map(|v| hom.combine(v)));
        }
    }
    Ok((out, fell))
}

fn note(rec: &mut crate::report::CheckRecord, fell: bool, sampled: bool, seed: u64) {
    if fell {
        rec.caveats.push("spaces above the dimension cap enumerated by zero and basis vectors only".into());
    }
    if sampled {
        rec.caveats.push(format!("sampled with seed {}", seed));
    }
}

/// `E : (C∩D)/X → Ho` is an equivalence: comparisons `A → RQ(A)` are
/// invertible and `γ` is bijective on homs between objects of `C∩D`.
pub fn check_equivalence_embedding(ho: &HomotopyCategory<'_>) -> Result<Report> {
    let cat = ho.cat();
    let x = ho.x();
    let mut report = Report::new("check-embedding");
    let cd = ho.triple().c_and_d(cat)?;
    let mut fails = Vec::new();
    for a in ho.objects() {
        report.fact(format!("RQ({})", a.label()), ho.rq_obj(a)?.label());
        let c = ho.comparison(a)?;
        if ho.inverse(&c)?.is_none() {
            fails.push(format!("comparison {} is not invertible", c));
        }
    }
    report.tally("comparison A -> RQ(A) invertible in Ho", ho.objects().len(), fails);

    let mut inside = Vec::new();
    for a in ho.objects() {
        if cat.is_in_add(&cd, a)? {
            inside.push(a.clone());
        }
    }
    let mut fails = Vec::new();
    for a in &inside {
        for b in &inside {
            let fh = cat.factor_hom(x, a, b)?;
            let target = ho.ho_hom(a, b)?;
            let cols: Vec<_> = fh.coset_basis().iter().map(|f| ho.gamma(f).map(|g| target.class_of(&g.core))).collect::<Result<_>>()?;
            let rank = crate::linalg::Matrix::from_columns(cat.field(), target.dim(), &cols).rank();
            if fh.dim() != target.dim() || rank != fh.dim() {
                fails.push(format!("gamma on ({}, {}): {} -> {} with rank {}", a.label(), b.label(), fh.dim(), target.dim(), rank));
            }
        }
    }
    report.tally("E full and faithful on C∩D", inside.len() * inside.len(), fails);

    let mut fails = Vec::new();
    for a in ho.objects() {
        let rqa = ho.rq_obj(a)?;
        for b in ho.objects() {
            let (d1, d2) = (ho.ho_hom(a, b)?.dim(), ho.ho_hom(&rqa, b)?.dim());
            if d1 != d2 {
                fails.push(format!("Hom_Ho({}, {}) = {} but Hom_Ho(RQ({}), {}) = {}", a.label(), b.label(), d1, a.label(), b.label(), d2));
            }
        }
    }
    report.tally("Hom_Ho(A, B) unchanged by A -> RQ(A)", ho.objects().len() * ho.objects().len(), fails);
    Ok(report)
}

/// Hom formula, `γ` inverting the fixed approximations, functoriality,
/// additivity, two-out-of-three for `S`, and the equivalence with `(C∩D)/X`.
pub fn check_homotopy(ho: &HomotopyCategory<'_>, budget: &Budget) -> Result<Report> {
    let cat = ho.cat();
    let x = ho.x();
    let t = ho.triple();
    let mut report = Report::new("ho-hom");
    let cd = t.c_and_d(cat)?;
    let objs = ho.objects().to_vec();

    let mut fails = Vec::new();
    for a in &objs {
        for b in &objs {
            let h = ho.ho_hom(a, b)?;
            report.fact(format!("Hom_Ho({}, {})", a.label(), b.label()), h.dim());
            let direct = cat.factor_hom(x, &t.rq_obj(cat, a)?, &t.rq_obj(cat, b)?)?;
            if direct.dim() != h.dim() || !cat.is_in_add(&cd, h.source())? || !cat.is_in_add(&cd, h.target())? {
                fails.push(format!("Hom_Ho({}, {}) has dimension {} but the factor hom of RQ images has {}", a.label(), b.label(), h.dim(), direct.dim()));
            }
        }
    }
    report.tally("Hom_Ho(A, B) = Hom_(C∩D)/X(RQ A, RQ B)", objs.len() * objs.len(), fails);

    let mut fails = Vec::new();
    for a in &objs {
        let r = t.r_map(cat, a)?;
        let j = t.j_map(cat, r.source())?;
        for (name, m) in [(format!("r_{}", a.label()), r), (format!("j^Q({})", a.label()), j)] {
            if ho.inverse(&ho.gamma(&m)?)?.is_none() {
                fails.push(format!("gamma({}) = {} is not invertible", name, m));
            }
        }
    }
    report.tally("gamma inverts r_A and j^Q(A)", 2 * objs.len(), fails);

    let (morphs, fell) = registry_morphisms(cat, budget)?;
    let mut fails = Vec::new();
    for f in &morphs {
        if cat.in_ideal(x, f)? && !ho.equal(&ho.gamma(f)?, &ho.zero(f.source(), f.target())?)? {
            fails.push(format!("gamma({}) is nonzero though the map factors through X", f));
        }
    }
    note(report.tally("gamma kills maps factoring through X", morphs.len(), fails), fell, false, budget.seed);

    let mut fails = Vec::new();
    for a in &objs {
        if !ho.equal(&ho.gamma(&Morphism::identity(a))?, &ho.identity(a)?)? {
            fails.push(format!("gamma(1_{}) is not the identity", a.label()));
        }
    }
    report.tally("gamma preserves identities", objs.len(), fails);

    let mut pairs = Vec::new();
    for f in &morphs {
        for g in &morphs {
            if f.target() == g.source() {
                pairs.push((f.clone(), g.clone()));
            }
        }
    }
    let (pairs, sampled) = budget.sample(pairs);
    let mut fails = Vec::new();
    for (f, g) in &pairs {
        let lhs = ho.gamma(&compose(g, f)?)?;
        if !ho.equal(&lhs, &ho.compose(&ho.gamma(g)?, &ho.gamma(f)?)?)? {
            fails.push(format!("gamma(g f) != gamma(g) gamma(f) for f = {}, g = {}", f, g));
        }
    }
    note(report.tally("gamma preserves composition", pairs.len(), fails), fell, sampled, budget.seed);

    let mut sums = Vec::new();
    for f in &morphs {
        for g in &morphs {
            if f.source() == g.source() && f.target() == g.target() {
                sums.push((f.clone(), g.clone()));
            }
        }
    }
    let (sums, sampled_sums) = budget.sample(sums);
    let mut fails = Vec::new();
    for (f, g) in &sums {
        if !ho.equal(&ho.gamma(&f.add(g)?)?, &ho.add(&ho.gamma(f)?, &ho.gamma(g)?)?)? {
            fails.push(format!("gamma(f + g) != gamma(f) + gamma(g) for f = {}, g = {}", f, g));
        }
    }
    note(report.tally("gamma additive", sums.len(), fails), fell, sampled_sums, budget.seed);

    let mut weq: HashMap<usize, bool> = HashMap::new();
    for (i, f) in morphs.iter().enumerate() {
        weq.insert(i, is_weak_equivalence(cat, t, f)?);
    }
    let index: Vec<(usize, usize)> = (0..morphs.len())
        .flat_map(|i| (0..morphs.len()).map(move |k| (i, k)))
        .filter(|(i, k)| morphs[*i].target() == morphs[*k].source())
        .collect();
    let (index, sampled) = budget.sample(index);
    let mut fails = Vec::new();
    for (i, k) in &index {
        let (f, g) = (&morphs[*i], &morphs[*k]);
        let gf = is_weak_equivalence(cat, t, &compose(g, f)?)?;
        let count = [weq[i], weq[k], gf].iter().filter(|b| **b).count();
        if count == 2 {
            fails.push(format!("two of f = {}, g = {}, g f in S but not the third (f: {}, g: {}, gf: {})", f, g, weq[i], weq[k], gf));
        }
    }
    note(report.tally("S satisfies two out of three", index.len(), fails), fell, sampled, budget.seed);

    report.absorb("embedding", check_equivalence_embedding(ho)?);
    Ok(report)
}

/// An additive functor out of the ambient category into a factor category
/// `T/Y`, given by its values on objects and morphisms.
pub trait StableFunctor {
    fn label(&self) -> String;
    fn target_category(&self) -> &Category;
    /// The ideal `Y` the target is taken modulo.
    fn target_ideal(&self) -> &Subcategory;
    fn obj(&self, a: &Module) -> Result<Module>;
    fn map(&self, f: &Morphism) -> Result<Morphism>;
}

/// The canonical functor `A → A/X`.
pub struct QuotientFunctor<'a> {
    pub cat: &'a Category,
    pub x: Subcategory,
}

impl StableFunctor for QuotientFunctor<'_> {
    fn label(&self) -> String {
        format!("quotient by {}", self.x.name())
    }

    fn target_category(&self) -> &Category {
        self.cat
    }

    fn target_ideal(&self) -> &Subcategory {
        &self.x
    }

    fn obj(&self, a: &Module) -> Result<Module> {
        Ok(a.clone())
    }

    fn map(&self, f: &Morphism) -> Result<Morphism> {
        Ok(f.clone())
    }
}

/// `γ` itself, landing in `(C∩D)/X` through `RQ`.
pub struct GammaFunctor<'h, 'a> {
    pub ho: &'h HomotopyCategory<'a>,
}

impl StableFunctor for GammaFunctor<'_, '_> {
    fn label(&self) -> String {
        "gamma".into()
    }

    fn target_category(&self) -> &Category {
        self.ho.cat()
    }

    fn target_ideal(&self) -> &Subcategory {
        self.ho.x()
    }

    fn obj(&self, a: &Module) -> Result<Module> {
        self.ho.rq_obj(a)
    }

    fn map(&self, f: &Morphism) -> Result<Morphism> {
        self.ho.rq_map(f)
    }
}

/// `inner` with some morphism values replaced.
pub struct Overridden<F> {
    pub inner: F,
    pub overrides: Vec<(Morphism, Morphism)>,
}

impl<F: StableFunctor> StableFunctor for Overridden<F> {
    fn label(&self) -> String {
        format!("{} with {} overridden values", self.inner.label(), self.overrides.len())
    }

    fn target_category(&self) -> &Category {
        self.inner.target_category()
    }

    fn target_ideal(&self) -> &Subcategory {
        self.inner.target_ideal()
    }

    fn obj(&self, a: &Module) -> Result<Module> {
        self.inner.obj(a)
    }

    fn map(&self, f: &Morphism) -> Result<Morphism> {
        match self.overrides.iter().find(|(k, _)| k == f) {
            Some((_, v)) => Ok(v.clone()),
            None => self.inner.map(f),
        }
    }
}

/// One value of `F′` on a coset basis element of `Hom_Ho`.
#[derive(Clone, Debug)]
pub struct UniversalEntry {
    pub ho: HoMorphism,
    pub value: Morphism,
}

/// `F′ : Ho → T/Y` with `F′∘γ = F`, tabulated on coset bases, and its checks.
#[derive(Clone, Debug)]
pub struct UniversalFactorization {
    pub entries: Vec<UniversalEntry>,
    pub report: Report,
}

struct FPrime<'h, 'a, F> {
    ho: &'h HomotopyCategory<'a>,
    func: &'h F,
    r_inv: HashMap<ModuleId, Morphism>,
    j_inv: HashMap<ModuleId, Morphism>,
}

impl<F: StableFunctor> FPrime<'_, '_, F> {
    fn apply(&self, m: &HoMorphism) -> Result<Morphism> {
        let (cat, t) = (self.ho.cat(), self.ho.triple());
        let (a, b) = (&m.source, &m.target);
        let ra = t.r_map(cat, a)?;
        let rb = t.r_map(cat, b)?;
        let ja = t.j_map(cat, ra.source())?;
        let parts = [
            self.r_inv[&a.id()].clone(),
            self.func.map(&ja)?,
            self.func.map(&m.core)?,
            self.j_inv[&b.id()].clone(),
            self.func.map(&rb)?,
        ];
        let mut acc = parts[0].clone();
        for p in &parts[1..] {
            acc = compose(p, &acc)?;
        }
        Ok(acc)
    }
}

/// `F′(f) = F(r_B) F(j^{Q(B)})⁻¹ F(f′) F(j^{Q(A)}) F(r_A)⁻¹`, after checking
/// that `F` inverts `S` and identifies maps congruent modulo `X`.
pub fn universal_factorization<F: StableFunctor>(ho: &HomotopyCategory<'_>, func: &F, budget: &Budget) -> Result<UniversalFactorization> {
    let (cat, t, x) = (ho.cat(), ho.triple(), ho.x());
    let (tc, ty) = (func.target_category(), func.target_ideal());
    let invert = |m: &Morphism, name: &str| -> Result<Morphism> {
        let v = func.map(m)?;
        tc.is_factor_iso(ty, &v)?.ok_or_else(|| Error::FDoesNotInvertS(format!("{}({}) = {} is not invertible", func.label(), name, v)))
    };
    let mut r_inv = HashMap::new();
    let mut j_inv = HashMap::new();
    for a in ho.objects() {
        let r = t.r_map(cat, a)?;
        let j = t.j_map(cat, r.source())?;
        r_inv.insert(a.id(), invert(&r, &format!("r_{}", a.label()))?);
        j_inv.insert(a.id(), invert(&j, &format!("j^Q({})", a.label()))?);
    }
    let (morphs, fell) = registry_morphisms(cat, budget)?;
    for f in &morphs {
        if is_weak_equivalence(cat, t, f)? {
            invert(f, &f.to_string())?;
        }
    }
    for a in ho.objects() {
        for b in ho.objects() {
            let hom = cat.hom(a, b)?;
            let ideal = cat.ideal_subspace(x, a, b)?;
            let zero = Morphism::zero(a, b);
            for f in std::iter::once(&zero).chain(hom.basis()) {
                let base = func.map(f)?;
                for v in &ideal.basis {
                    if !tc.factor_equal(ty, &func.map(&f.add(v)?)?, &base)? {
                        return Err(Error::FNotStableInvariant(format!("{}: {} and {} differ by {} through X but have different images", func.label(), f, f.add(v)?, v)));
                    }
                }
            }
        }
    }

    let fp = FPrime { ho, func, r_inv, j_inv };
    let mut report = Report::new("universal");
    report.fact("functor", func.label());
    let mut entries = Vec::new();
    for a in ho.objects() {
        for b in ho.objects() {
            for m in ho.basis(a, b)? {
                let value = fp.apply(&m)?;
                entries.push(UniversalEntry { ho: m, value });
            }
        }
    }
    report.fact("table entries", entries.len());

    let mut fails = Vec::new();
    for f in &morphs {
        let lhs = fp.apply(&ho.gamma(f)?)?;
        if !tc.factor_equal(ty, &lhs, &func.map(f)?)? {
            fails.push(format!("F'(gamma({})) = {} but F = {}", f, lhs, func.map(f)?));
        }
    }
    note(report.tally("F' gamma = F on registered morphisms", morphs.len(), fails), fell, false, budget.seed);

    let mut fails = Vec::new();
    for a in ho.objects() {
        let v = fp.apply(&ho.identity(a)?)?;
        if !tc.factor_equal(ty, &v, &Morphism::identity(&func.obj(a)?))? {
            fails.push(format!("F'(1_{}) = {}", a.label(), v));
        }
    }
    report.tally("F' preserves identities", ho.objects().len(), fails);

    let mut triples = Vec::new();
    for e1 in &entries {
        for e2 in &entries {
            if e1.ho.target == e2.ho.source {
                triples.push((e1.clone(), e2.clone()));
            }
        }
    }
    let (triples, sampled) = budget.sample(triples);
    let mut fails = Vec::new();
    for (e1, e2) in &triples {
        let lhs = fp.apply(&ho.compose(&e2.ho, &e1.ho)?)?;
        if !tc.factor_equal(ty, &lhs, &compose(&e2.value, &e1.value)?)? {
            fails.push(format!("F'(g f) != F'(g) F'(f) for f = {}, g = {}", e1.ho, e2.ho));
        }
    }
    note(report.tally("F' preserves composition", triples.len(), fails), false, sampled, budget.seed);
    Ok(UniversalFactorization { entries, report })
}

fn conjugate(ho: &HomotopyCategory<'_>, u: &Morphism) -> Result<Option<Morphism>> {
    let (a, b) = (u.source(), u.target());
    let ca = ho.comparison(a)?;
    let Some(cb_inv) = ho.inverse(&ho.comparison(b)?)? else {
        return Ok(None);
    };
    let m = ho.compose(&cb_inv, &ho.compose(&ho.gamma(u)?, &ca)?)?;
    if m.core.source() != a || m.core.target() != b {
        return Ok(None);
    }
    Ok(Some(m.core))
}

/// Standard triangles of `(C∩F)/X`, sent through `γ` and conjugated back by
/// the comparisons `A → RQ(A)`, remain distinguished.
pub fn check_triangle_transport(s: &TriangleStructure<'_>, budget: &Budget) -> Result<Report> {
    let cat = s.cat();
    let ho = HomotopyCategory::new(cat, s.triple());
    let mut report = Report::new("triangle-transport");
    let objects = s.registry_in(s.cf())?;
    let mut morphs = Vec::new();
    let mut fell = false;
    for a in &objects {
        for b in &objects {
            let fh = cat.factor_hom(s.x(), a, b)?;
            let (vs, f) = budget.vectors(cat.field(), fh.dim());
            fell |= f;
            morphs.extend(vs.iter().map(|v| fh.representative(v)));
        }
    }
    let (morphs, sampled) = budget.sample(morphs);
    let rf = RightFactor::new(s, FactorKind::Stable);
    let lf = LeftFactor::new(s, FactorKind::Stable);
    let (mut rfails, mut lfails) = (Vec::new(), Vec::new());
    for f in &morphs {
        let t = rf.standard(f)?;
        let legs = [conjugate(&ho, &t.f)?, conjugate(&ho, &t.g)?, conjugate(&ho, &t.h)?];
        match legs {
            [Some(a), Some(b), Some(c)] => {
                let moved = RightTriangle::new(a, b, c)?;
                if rf.is_distinguished(&moved, budget)?.is_none() {
                    rfails.push(format!("transported [{}] is not distinguished", moved));
                }
            }
            _ => rfails.push(format!("a leg of [{}] does not transport", t)),
        }
        let t = lf.standard(f)?;
        let legs = [conjugate(&ho, &t.h)?, conjugate(&ho, &t.f)?, conjugate(&ho, &t.g)?];
        match legs {
            [Some(a), Some(b), Some(c)] => {
                let moved = LeftTriangle::new(a, b, c)?;
                if lf.is_distinguished(&moved, budget)?.is_none() {
                    lfails.push(format!("transported [{}] is not distinguished", moved));
                }
            }
            _ => lfails.push(format!("a leg of [{}] does not transport", t)),
        }
    }
    note(report.tally("right triangles transport along the comparisons", morphs.len(), rfails), fell, sampled, budget.seed);
    note(report.tally("left triangles transport along the comparisons", morphs.len(), lfails), fell, sampled, budget.seed);
    Ok(report)
}

#[cfg(test)]
mod tests;
