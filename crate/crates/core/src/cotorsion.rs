//! Cotorsion pairs with completeness witnesses, Hovey triples, and the
//! localization triples `(C, X, D)` with their fixed approximation sequences.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use crate::additive::{Category, FactorHom, HomSolver, Subcategory};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::exact::{ext1, split_conflation, Conflation};
use crate::module::{compose, injective_envelope, is_injective, projective_cover, Module, ModuleId, Morphism};
use crate::report::Report;

/// Explicit witness conflations keyed by the object they approximate.
#[derive(Clone, Debug, Default)]
pub struct WitnessTable {
    pub proj: HashMap<ModuleId, Conflation>,
    pub inj: HashMap<ModuleId, Conflation>,
}

/// Source of completeness witnesses for a cotorsion pair `(L, R)`: a projective
/// witness `R' ↣ L' ↠ A` and an injective witness `A ↣ R' ↠ L'` per object.
#[derive(Clone, Debug)]
pub enum WitnessProvider {
    /// Identity sequences; valid when the relevant class contains the object.
    TrivialAll,
    /// Projective covers and injective envelopes over a self-injective algebra.
    Frobenius,
    Table(Arc<WitnessTable>),
}

impl WitnessProvider {
    pub fn kind(&self) -> &'static str {
        match self {
            WitnessProvider::TrivialAll => "trivial-all",
            WitnessProvider::Frobenius => "frobenius",
            WitnessProvider::Table(_) => "user-table",
        }
    }
}

#[derive(Clone, Debug)]
pub struct CotorsionPair {
    pub left: Subcategory,
    pub right: Subcategory,
    pub witnesses: WitnessProvider,
}

fn identity_left(a: &Module, zero: &Module) -> Result<Conflation> {
    Conflation::new(Morphism::zero(zero, a), Morphism::identity(a))
}

fn identity_right(a: &Module, zero: &Module) -> Result<Conflation> {
    Conflation::new(Morphism::identity(a), Morphism::zero(a, zero))
}

impl CotorsionPair {
    pub fn new(left: Subcategory, right: Subcategory, witnesses: WitnessProvider) -> Self {
        CotorsionPair { left, right, witnesses }
    }

    /// `F ↣ C ↠ A` with `C` in the left class and `F` in the right class.
    pub fn proj_witness(&self, cat: &Category, a: &Module) -> Result<Conflation> {
        if let WitnessProvider::Table(t) = &self.witnesses {
            if let Some(c) = t.proj.get(&a.id()) {
                return Ok(c.clone());
            }
        }
        if cat.is_in_add(&self.left, a)? {
            return identity_left(a, &cat.zero_object());
        }
        match &self.witnesses {
            WitnessProvider::Frobenius => {
                let cover = projective_cover(a);
                let k = cover.kernel();
                let omega = k.object.with_name(format!("Omega({})", a.label()));
                let i = Morphism::new(omega, cover.source().clone(), k.map.maps().to_vec())?;
                Conflation::new(i, cover)
            }
            _ => Err(Error::WitnessMissing(format!("projective witness for {} in ({}, {})", a.label(), self.left.name(), self.right.name()))),
        }
    }

    /// `A ↣ F ↠ C` with `F` in the right class and `C` in the left class.
    pub fn inj_witness(&self, cat: &Category, a: &Module) -> Result<Conflation> {
        if let WitnessProvider::Table(t) = &self.witnesses {
            if let Some(c) = t.inj.get(&a.id()) {
                return Ok(c.clone());
            }
        }
        if cat.is_in_add(&self.right, a)? {
            return identity_right(a, &cat.zero_object());
        }
        match &self.witnesses {
            WitnessProvider::Frobenius => {
                let env = injective_envelope(a);
                let c = env.cokernel();
                let cosyz = c.object.with_name(format!("Sigma({})", a.label()));
                let d = Morphism::new(env.target().clone(), cosyz, c.map.maps().to_vec())?;
                Conflation::new(env, d)
            }
            _ => Err(Error::WitnessMissing(format!("injective witness for {} in ({}, {})", a.label(), self.left.name(), self.right.name()))),
        }
    }
}

/// Objects standing for `sub` in quantified checks, including extras that belong to it.
pub fn members(cat: &Category, sub: &Subcategory, extra: &[&Module]) -> Result<Vec<Module>> {
    if !sub.is_all() {
        return Ok(sub.generators().to_vec());
    }
    Ok(cat.test_objects(extra))
}

fn registry_caveat(cat: &Category) -> String {
    format!("checked over {} registry objects", cat.registry().len())
}

/// Ext-orthogonality over generators plus completeness witnesses on the registry.
pub fn check_cotorsion_pair(cat: &Category, pair: &CotorsionPair) -> Result<Report> {
    let mut report = Report::new("check-cotorsion");
    report.fact("pair", format!("({}, {})", pair.left.describe(), pair.right.describe()));
    report.fact("witnesses", pair.witnesses.kind());

    let lefts = members(cat, &pair.left, &[])?;
    let rights = members(cat, &pair.right, &[])?;
    let mut fails = Vec::new();
    let mut checked = 0;
    for g in &lefts {
        for h in &rights {
            checked += 1;
            let e = ext1(cat, g, h)?;
            if e.dim != 0 {
                fails.push(format!("Ext1({}, {}) has dimension {}; class {}", g.label(), h.label(), e.dim, e.representatives[0]));
            }
        }
    }
    let rec = report.tally("Ext1(left, right) = 0", checked, fails);
    if pair.left.is_all() || pair.right.is_all() {
        rec.caveats.push(registry_caveat(cat));
    }

    if matches!(pair.witnesses, WitnessProvider::Frobenius) {
        let alg = cat.algebra();
        let bad: Vec<String> = (0..alg.vertex_count())
            .filter(|&v| !is_injective(&Module::projective(alg.clone(), v)))
            .map(|v| format!("P({}) is not injective", alg.vertices()[v]))
            .collect();
        report.tally("self-injective algebra", alg.vertex_count(), bad);
    }

    let (mut pf, mut jf) = (Vec::new(), Vec::new());
    for a in cat.registry() {
        match pair.proj_witness(cat, a) {
            Ok(c) => {
                let ok = c.right() == a && cat.is_in_add(&pair.left, c.middle())? && cat.is_in_add(&pair.right, c.left())?;
                if !ok {
                    pf.push(format!("bad projective witness {}", c));
                }
            }
            Err(e) => pf.push(e.to_string()),
        }
        match pair.inj_witness(cat, a) {
            Ok(c) => {
                let ok = c.left() == a && cat.is_in_add(&pair.right, c.middle())? && cat.is_in_add(&pair.left, c.right())?;
                if !ok {
                    jf.push(format!("bad injective witness {}", c));
                }
            }
            Err(e) => jf.push(e.to_string()),
        }
    }
    let n = cat.registry().len();
    report.tally("enough projectives: witnesses R' >-> L' ->> A", n, pf).caveats.push(registry_caveat(cat));
    report.tally("enough injectives: witnesses A >-> R' ->> L'", n, jf).caveats.push(registry_caveat(cat));
    if let Some(r) = report.checks.first_mut() {
        r.caveats.push("maximality of the orthogonal classes is not checked".into());
    }
    Ok(report)
}

/// `(C, W, F)` with its two cotorsion pairs and `X = C∩W∩F`.
#[derive(Clone, Debug)]
pub struct HoveyTriple {
    pub name: String,
    pub c: Subcategory,
    pub w: Subcategory,
    pub f: Subcategory,
    pub pair1: CotorsionPair,
    pub pair2: CotorsionPair,
    pub x: Subcategory,
}

impl HoveyTriple {
    /// Builds the intersections by membership filtering.
    pub fn new(
        cat: &Category,
        name: impl Into<String>,
        c: Subcategory,
        w: Subcategory,
        f: Subcategory,
        witnesses: WitnessProvider,
    ) -> Result<Self> {
        let wf = cat.intersect("W∩F", &[&w, &f])?;
        let cw = cat.intersect("C∩W", &[&c, &w])?;
        let x = cat.intersect("X", &[&c, &w, &f])?;
        Ok(HoveyTriple {
            name: name.into(),
            pair1: CotorsionPair::new(c.clone(), wf, witnesses.clone()),
            pair2: CotorsionPair::new(cw, f.clone(), witnesses),
            c,
            w,
            f,
            x,
        })
    }

    pub fn c_and_f(&self, cat: &Category) -> Result<Subcategory> {
        cat.intersect("C∩F", &[&self.c, &self.f])
    }
}

/// Conflations used to probe thickness of `W`: witnesses, Ext¹ classes and split sequences.
pub fn probe_conflations(cat: &Category, h: &HoveyTriple) -> Result<Vec<Conflation>> {
    let mut out = Vec::new();
    for a in cat.registry() {
        for p in [&h.pair1, &h.pair2] {
            if let Ok(c) = p.proj_witness(cat, a) {
                out.push(c);
            }
            if let Ok(c) = p.inj_witness(cat, a) {
                out.push(c);
            }
        }
        for b in cat.registry() {
            out.extend(ext1(cat, a, b)?.representatives);
            out.push(split_conflation(b, a)?);
        }
    }
    Ok(out)
}

pub fn check_hovey_triple(cat: &Category, h: &HoveyTriple, budget: &Budget) -> Result<Report> {
    let mut report = Report::new("check-hovey");
    report.fact("triple", &h.name);
    report.fact("C", h.c.describe());
    report.fact("W", h.w.describe());
    report.fact("F", h.f.describe());
    report.fact("X", h.x.describe());
    report.absorb("pair (C, W∩F)", check_cotorsion_pair(cat, &h.pair1)?);
    report.absorb("pair (C∩W, F)", check_cotorsion_pair(cat, &h.pair2)?);

    let (probes, sampled) = budget.sample(probe_conflations(cat, h)?);
    let mut fails = Vec::new();
    for c in &probes {
        let inw = [
            cat.is_in_add(&h.w, c.left())?,
            cat.is_in_add(&h.w, c.middle())?,
            cat.is_in_add(&h.w, c.right())?,
        ];
        if inw.iter().filter(|b| **b).count() == 2 {
            fails.push(format!("two of three terms in W but not the third: {}", c));
        }
    }
    let rec = report.tally("W thick: two out of three", probes.len(), fails);
    rec.caveats.push(format!("checked on {} registry conflations", probes.len()));
    if sampled {
        rec.caveats.push(format!("sampled with seed {}", budget.seed));
    }
    Ok(report)
}

/// `W_A →ω Q(A) →r A` or `A →j R(A) →τ W^A`.
#[derive(Clone, Debug)]
pub struct ApproxSequence {
    pub first: Morphism,
    pub second: Morphism,
}

impl ApproxSequence {
    pub fn from_conflation(c: &Conflation) -> Self {
        ApproxSequence { first: c.i.clone(), second: c.d.clone() }
    }

    pub fn middle(&self) -> &Module {
        self.first.target()
    }
}

/// Where the fixed sequences of a localization triple come from.
#[derive(Clone, Debug)]
pub enum TripleSource {
    Hovey(HoveyTriple),
    /// `(A, X, A)` with identity sequences.
    Identity,
}

/// `(C, X, D)` with lazily populated `Q` and `R` tables.
#[derive(Debug)]
pub struct LocalizationTriple {
    pub c: Subcategory,
    pub x: Subcategory,
    pub d: Subcategory,
    pub source: TripleSource,
    q_table: RwLock<HashMap<ModuleId, ApproxSequence>>,
    r_table: RwLock<HashMap<ModuleId, ApproxSequence>>,
}

/// A solved lift with its uniqueness certificate.
#[derive(Clone, Debug)]
pub struct Lift {
    pub map: Morphism,
    /// Whether every other solution differs from `map` by a morphism factoring through `X`.
    pub unique_mod_x: bool,
}

impl LocalizationTriple {
    pub fn from_hovey(h: &HoveyTriple) -> Self {
        LocalizationTriple {
            c: h.c.clone(),
            x: h.x.clone(),
            d: h.f.clone(),
            source: TripleSource::Hovey(h.clone()),
            q_table: RwLock::new(HashMap::new()),
            r_table: RwLock::new(HashMap::new()),
        }
    }

    pub fn stable(x: Subcategory) -> Self {
        LocalizationTriple {
            c: Subcategory::all("A"),
            x,
            d: Subcategory::all("A"),
            source: TripleSource::Identity,
            q_table: RwLock::new(HashMap::new()),
            r_table: RwLock::new(HashMap::new()),
        }
    }

    /// Replaces the `Q` entry of an object.
    pub fn override_q(&self, a: &Module, seq: ApproxSequence) {
        self.q_table.write().expect("q table poisoned").insert(a.id(), seq);
    }

    /// Replaces the `R` entry of an object.
    pub fn override_r(&self, a: &Module, seq: ApproxSequence) {
        self.r_table.write().expect("r table poisoned").insert(a.id(), seq);
    }

    pub fn q_seq(&self, cat: &Category, a: &Module) -> Result<ApproxSequence> {
        if let Some(s) = self.q_table.read().expect("q table poisoned").get(&a.id()) {
            return Ok(s.clone());
        }
        let seq = match &self.source {
            TripleSource::Identity => ApproxSequence::from_conflation(&identity_left(a, &cat.zero_object())?),
            TripleSource::Hovey(h) => ApproxSequence::from_conflation(&h.pair1.proj_witness(cat, a)?),
        };
        let mut t = self.q_table.write().expect("q table poisoned");
        Ok(t.entry(a.id()).or_insert(seq).clone())
    }

    pub fn r_seq(&self, cat: &Category, a: &Module) -> Result<ApproxSequence> {
        if let Some(s) = self.r_table.read().expect("r table poisoned").get(&a.id()) {
            return Ok(s.clone());
        }
        let seq = match &self.source {
            TripleSource::Identity => ApproxSequence::from_conflation(&identity_right(a, &cat.zero_object())?),
            TripleSource::Hovey(h) => ApproxSequence::from_conflation(&h.pair2.inj_witness(cat, a)?),
        };
        let mut t = self.r_table.write().expect("r table poisoned");
        Ok(t.entry(a.id()).or_insert(seq).clone())
    }

    pub fn q_obj(&self, cat: &Category, a: &Module) -> Result<Module> {
        Ok(self.q_seq(cat, a)?.middle().clone())
    }

    pub fn r_obj(&self, cat: &Category, a: &Module) -> Result<Module> {
        Ok(self.r_seq(cat, a)?.middle().clone())
    }

    pub fn rq_obj(&self, cat: &Category, a: &Module) -> Result<Module> {
        let q = self.q_obj(cat, a)?;
        self.r_obj(cat, &q)
    }

    /// `r_A : Q(A) → A`.
    pub fn r_map(&self, cat: &Category, a: &Module) -> Result<Morphism> {
        Ok(self.q_seq(cat, a)?.second)
    }

    /// `j^A : A → R(A)`.
    pub fn j_map(&self, cat: &Category, a: &Module) -> Result<Morphism> {
        Ok(self.r_seq(cat, a)?.first)
    }

    /// `f̌ : Q(A) → Q(B)` with `r_B ∘ f̌ = f ∘ r_A`.
    pub fn lift_through_precover(&self, cat: &Category, f: &Morphism) -> Result<Lift> {
        let ra = self.r_map(cat, f.source())?;
        let rb = self.r_map(cat, f.target())?;
        let want = compose(f, &ra)?;
        let mut sys = HomSolver::new(cat, &[(ra.source(), rb.source())])?;
        sys.constrain(vec![(0, Box::new(|x: &Morphism| compose(&rb, x)))], &want, None)?;
        let sol = sys.solve()?.ok_or_else(|| Error::LiftUnsolvable(format!("{} through r_{}", f, f.target().label())))?;
        let mut unique = true;
        for k in &sol.kernel {
            unique &= cat.in_ideal(&self.x, &k[0])?;
        }
        Ok(Lift { map: sol.particular[0].clone(), unique_mod_x: unique })
    }

    /// `f̂ : R(A) → R(B)` with `f̂ ∘ j^A = j^B ∘ f`.
    pub fn lift_through_preenvelope(&self, cat: &Category, f: &Morphism) -> Result<Lift> {
        let ja = self.j_map(cat, f.source())?;
        let jb = self.j_map(cat, f.target())?;
        let want = compose(&jb, f)?;
        let mut sys = HomSolver::new(cat, &[(ja.target(), jb.target())])?;
        sys.constrain(vec![(0, Box::new(|x: &Morphism| compose(x, &ja)))], &want, None)?;
        let sol = sys.solve()?.ok_or_else(|| Error::LiftUnsolvable(format!("{} through j^{}", f, f.source().label())))?;
        let mut unique = true;
        for k in &sol.kernel {
            unique &= cat.in_ideal(&self.x, &k[0])?;
        }
        Ok(Lift { map: sol.particular[0].clone(), unique_mod_x: unique })
    }

    /// `Q(f̄)` as the canonical representative of its coset.
    pub fn q_functor(&self, cat: &Category, f: &Morphism) -> Result<Morphism> {
        let l = self.lift_through_precover(cat, f)?;
        Ok(cat.factor_hom(&self.x, l.map.source(), l.map.target())?.normalize(&l.map))
    }

    /// `R(f̄)` as the canonical representative of its coset.
    pub fn r_functor(&self, cat: &Category, f: &Morphism) -> Result<Morphism> {
        let l = self.lift_through_preenvelope(cat, f)?;
        Ok(cat.factor_hom(&self.x, l.map.source(), l.map.target())?.normalize(&l.map))
    }

    pub fn c_and_d(&self, cat: &Category) -> Result<Subcategory> {
        cat.intersect("C∩D", &[&self.c, &self.d])
    }
}

/// Builds the triple from a Hovey triple and populates its tables over the registry.
pub fn build_localization_triple(cat: &Category, h: &HoveyTriple) -> Result<(LocalizationTriple, Report)> {
    let t = LocalizationTriple::from_hovey(h);
    let mut report = Report::new("build-localization");
    report.fact("C", t.c.describe());
    report.fact("X", t.x.describe());
    report.fact("D", t.d.describe());
    for a in cat.registry() {
        let q = t.q_seq(cat, a)?;
        let r = t.r_seq(cat, a)?;
        report.fact(
            format!("Q({})", a.label()),
            format!("{} -> {} -> {}", q.first.source().label(), q.middle().label(), a.label()),
        );
        report.fact(
            format!("R({})", a.label()),
            format!("{} -> {} -> {}", a.label(), r.middle().label(), r.second.target().label()),
        );
    }
    let checks = check_localization_triple(cat, &t)?;
    for c in checks.checks {
        report.checks.push(c);
    }
    Ok((t, report))
}

fn nonzero_factor(fh: &FactorHom) -> Option<String> {
    (fh.dim() > 0).then(|| format!("{} -> {} has stable dimension {}: {}", fh.source().label(), fh.target().label(), fh.dim(), fh.coset_basis()[0]))
}

/// Conditions (a), (b), (c) of a localization triple on every registry entry.
pub fn check_localization_triple(cat: &Category, t: &LocalizationTriple) -> Result<Report> {
    let mut report = Report::new("check-localization");
    let n = cat.registry().len();
    let (mut a1, mut a2, mut a3) = (Vec::new(), Vec::new(), Vec::new());
    let (mut b1, mut b2, mut b3) = (Vec::new(), Vec::new(), Vec::new());
    let (mut c1, mut c2) = (Vec::new(), Vec::new());
    let cd = t.c_and_d(cat)?;
    for a in cat.registry() {
        let q = t.q_seq(cat, a)?;
        let (w, qa) = (q.first.source(), q.middle());
        if q.second.target() != a || !cat.is_in_add(&t.c, qa)? || !cat.is_relative_epic(&q.second, &t.c)? {
            a1.push(format!("r_{} = {} is not a C-precover", a.label(), q.second));
        }
        match cat.weak_kernel_failures(&q.first, &q.second) {
            Ok(bad) if bad.is_empty() => {}
            Ok(bad) => a2.push(format!("omega_{} is not a weak kernel; test objects {:?}", a.label(), bad.iter().map(Module::label).collect::<Vec<_>>())),
            Err(e) => a2.push(format!("{}: {}", a.label(), e)),
        }
        for g in members(cat, &t.c, &[qa, w])? {
            if cat.is_in_add(&t.c, &g)? {
                if let Some(msg) = nonzero_factor(&cat.factor_hom(&t.x, &g, w)?) {
                    a3.push(format!("W_{} = {} not in C-perp: {}", a.label(), w.label(), msg));
                }
            }
        }

        let r = t.r_seq(cat, a)?;
        let (ra, wu) = (r.middle(), r.second.target());
        if r.first.source() != a || !cat.is_in_add(&t.d, ra)? || !cat.is_relative_monic(&r.first, &t.d)? {
            b1.push(format!("j^{} = {} is not a D-preenvelope", a.label(), r.first));
        }
        match cat.weak_cokernel_failures(&r.first, &r.second) {
            Ok(bad) if bad.is_empty() => {}
            Ok(bad) => b2.push(format!("tau^{} is not a weak cokernel; test objects {:?}", a.label(), bad.iter().map(Module::label).collect::<Vec<_>>())),
            Err(e) => b2.push(format!("{}: {}", a.label(), e)),
        }
        for g in members(cat, &t.d, &[ra, wu])? {
            if cat.is_in_add(&t.d, &g)? {
                if let Some(msg) = nonzero_factor(&cat.factor_hom(&t.x, wu, &g)?) {
                    b3.push(format!("W^{} = {} not in perp-D: {}", a.label(), wu.label(), msg));
                }
            }
        }

        if cat.is_in_add(&t.d, a)? && !cat.is_in_add(&cd, qa)? {
            c1.push(format!("{} in D but Q = {} not in C∩D", a.label(), qa.label()));
        }
        if cat.is_in_add(&t.c, a)? && !cat.is_in_add(&cd, ra)? {
            c2.push(format!("{} in C but R = {} not in C∩D", a.label(), ra.label()));
        }
    }
    let caveat = registry_caveat(cat);
    for (name, fails) in [
        ("(a) r_A is a C-precover", a1),
        ("(a) omega_A is a weak kernel of r_A", a2),
        ("(a) W_A in C-perp modulo X", a3),
        ("(b) j^A is a D-preenvelope", b1),
        ("(b) tau^A is a weak cokernel of j^A", b2),
        ("(b) W^A in perp-D modulo X", b3),
        ("(c) A in D implies Q(A) in C∩D", c1),
        ("(c) A in C implies R(A) in C∩D", c2),
    ] {
        report.tally(name, n, fails).caveats.push(caveat.clone());
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{dual_numbers, semisimple, two_cycle};
    use crate::module::{socle, top};
    use crate::report::Status;

    fn d2() -> (Category, crate::fixtures::DualNumbers) {
        let d = dual_numbers();
        (Category::new(d.algebra.clone(), vec![d.s.clone(), d.a.clone()]), d)
    }

    fn ft(cat: &Category, a: &Module) -> HoveyTriple {
        let all = Subcategory::all("A");
        HoveyTriple::new(cat, "FT", all.clone(), Subcategory::generated("W", vec![a.clone()]), all, WitnessProvider::Frobenius).unwrap()
    }

    #[test]
    fn frobenius_pairs() {
        let (cat, d) = d2();
        let pair = CotorsionPair::new(Subcategory::all("A"), Subcategory::generated("I", vec![d.a.clone()]), WitnessProvider::Frobenius);
        let r = check_cotorsion_pair(&cat, &pair).unwrap();
        assert!(r.passed(), "{:?}", r.first_failure());
        let bad = CotorsionPair::new(Subcategory::all("A"), Subcategory::generated("S", vec![d.s.clone()]), WitnessProvider::Frobenius);
        let r = check_cotorsion_pair(&cat, &bad).unwrap();
        let f = r.first_failure().unwrap();
        assert!(f.witnesses[0].contains("Ext1(S, S)"));
    }

    #[test]
    fn trivial_pair_on_semisimple() {
        let (alg, k) = semisimple();
        let cat = Category::new(alg, vec![k]);
        let all = Subcategory::all("A");
        let r = check_cotorsion_pair(&cat, &CotorsionPair::new(all.clone(), all, WitnessProvider::TrivialAll)).unwrap();
        assert!(r.passed());
    }

    #[test]
    fn hovey_fixtures() {
        let (cat, d) = d2();
        let h = ft(&cat, &d.a);
        assert_eq!(h.x.generators(), &[d.a.clone()]);
        let r = check_hovey_triple(&cat, &h, &Budget::default()).unwrap();
        assert!(r.passed(), "{:?}", r.first_failure());

        let c = two_cycle();
        let cat = Category::new(c.algebra.clone(), vec![c.s1.clone(), c.s2.clone(), c.p1.clone(), c.p2.clone()]);
        let all = Subcategory::all("A");
        let p = Subcategory::generated("P", vec![c.p1.clone(), c.p2.clone()]);
        let pt = HoveyTriple::new(&cat, "PT", p.clone(), all.clone(), all.clone(), WitnessProvider::Frobenius).unwrap();
        let r = check_hovey_triple(&cat, &pt, &Budget::default()).unwrap();
        assert!(r.passed(), "{:?}", r.first_failure());
        let bad_w = Subcategory::generated("W", vec![c.p1.clone(), c.p2.clone(), c.s1.clone()]);
        let bad = HoveyTriple::new(&cat, "bad", all.clone(), bad_w, all, WitnessProvider::Frobenius).unwrap();
        let r = check_hovey_triple(&cat, &bad, &Budget::default()).unwrap();
        assert!(!r.passed());
        assert!(!r.first_failure().unwrap().witnesses.is_empty());
    }

    #[test]
    fn localization_from_ft() {
        let (cat, d) = d2();
        let h = ft(&cat, &d.a);
        let (t, r) = build_localization_triple(&cat, &h).unwrap();
        assert!(r.passed(), "{:?}", r.first_failure());
        assert_eq!(t.q_obj(&cat, &d.s).unwrap(), d.s);
        assert_eq!(t.r_obj(&cat, &d.a).unwrap(), d.a);

        t.override_q(&d.s, ApproxSequence { first: socle(&d.a).map, second: top(&d.a).map });
        let r = check_localization_triple(&cat, &t).unwrap();
        assert_eq!(r.check_named("(a) W_A in C-perp modulo X").unwrap().status, Status::Fail);
    }

    #[test]
    fn pt_q_table_uses_covers() {
        let c = two_cycle();
        let cat = Category::new(c.algebra.clone(), vec![c.s1.clone(), c.s2.clone(), c.p1.clone(), c.p2.clone()]);
        let all = Subcategory::all("A");
        let p = Subcategory::generated("P", vec![c.p1.clone(), c.p2.clone()]);
        let pt = HoveyTriple::new(&cat, "PT", p, all.clone(), all, WitnessProvider::Frobenius).unwrap();
        let (t, r) = build_localization_triple(&cat, &pt).unwrap();
        assert!(r.passed(), "{:?}", r.first_failure());
        let q = t.q_seq(&cat, &c.s1).unwrap();
        assert_eq!(q.middle(), &c.p1);
        assert_eq!(q.first.source(), &c.s2);
        let zero = cat.zero_object();
        assert!(t.q_obj(&cat, &zero).unwrap().is_zero());
        let lift = t.lift_through_precover(&cat, &q.second).unwrap();
        assert!(lift.unique_mod_x);
        assert!(cat.factor_equal(&t.x, &lift.map, &Morphism::identity(&c.p1)).unwrap());
    }

    #[test]
    fn stable_triple_with_identity_sequences() {
        let (cat, d) = d2();
        let t = LocalizationTriple::stable(Subcategory::generated("X", vec![d.a.clone()]));
        assert!(check_localization_triple(&cat, &t).unwrap().passed());
        let empty = Category::new(d.algebra.clone(), vec![]);
        let r = check_localization_triple(&empty, &t).unwrap();
        assert!(r.checks.iter().all(|c| c.status == Status::Vacuous));
    }
}
