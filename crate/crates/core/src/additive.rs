//! Subcategories presented by generators, the ideal of morphisms factoring
//! through them, factor categories, approximations and relative monics.

use std::collections::hash_map::DefaultHasher;
use std::collections::HashMap;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, RwLock};

use crate::error::{Error, Result};
use crate::linalg::{solve_affine_membership, AffineConstraint, FieldSpec, Matrix, Scalar, Subspace, Vector};
use crate::module::{compose, direct_sum, Algebra, HomCache, HomSpace, Module, ModuleId, Morphism};

/// A full subcategory: either everything, or `add` of a generator list (finite
/// direct sums of generators and their summands).
#[derive(Clone, Debug)]
pub struct Subcategory {
    name: String,
    generators: Vec<Module>,
    all: bool,
}

impl Subcategory {
    pub fn all(name: impl Into<String>) -> Self {
        Subcategory { name: name.into(), generators: Vec::new(), all: true }
    }

    /// `add(generators)`; duplicates by identity are dropped, zero modules skipped.
    pub fn generated(name: impl Into<String>, generators: Vec<Module>) -> Self {
        let mut seen = Vec::new();
        let mut gens = Vec::new();
        for g in generators {
            if !g.is_zero() && !seen.contains(&g.id()) {
                seen.push(g.id());
                gens.push(g);
            }
        }
        Subcategory { name: name.into(), generators: gens, all: false }
    }

    /// The subcategory of zero objects.
    pub fn zero(name: impl Into<String>) -> Self {
        Subcategory { name: name.into(), generators: Vec::new(), all: false }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn renamed(&self, name: impl Into<String>) -> Self {
        Subcategory { name: name.into(), ..self.clone() }
    }

    pub fn generators(&self) -> &[Module] {
        &self.generators
    }

    pub fn is_all(&self) -> bool {
        self.all
    }

    pub fn is_zero(&self) -> bool {
        !self.all && self.generators.is_empty()
    }

    fn key(&self) -> u64 {
        let mut h = DefaultHasher::new();
        self.all.hash(&mut h);
        for g in &self.generators {
            g.id().hash(&mut h);
        }
        h.finish()
    }

    pub fn describe(&self) -> String {
        if self.all {
            format!("{} = all", self.name)
        } else if self.generators.is_empty() {
            format!("{} = 0", self.name)
        } else {
            let gens: Vec<String> = self.generators.iter().map(Module::label).collect();
            format!("{} = add({})", self.name, gens.join(", "))
        }
    }
}

/// `X(A,B)` as morphisms and as a subspace of hom coordinates.
#[derive(Clone, Debug)]
pub struct IdealSubspace {
    pub source: Module,
    pub target: Module,
    pub basis: Vec<Morphism>,
    pub coords: Arc<Subspace>,
}

impl IdealSubspace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// `Hom(A,B) / X(A,B)` with coset representatives taken from the hom basis.
#[derive(Clone, Debug)]
pub struct FactorHom {
    pub hom: Arc<HomSpace>,
    pub ideal: Arc<Subspace>,
}

impl FactorHom {
    pub fn dim(&self) -> usize {
        self.ideal.codim()
    }

    pub fn source(&self) -> &Module {
        self.hom.source()
    }

    pub fn target(&self) -> &Module {
        self.hom.target()
    }

    /// One representative per coset basis vector: the hom basis elements at the
    /// complement coordinates of the ideal.
    pub fn coset_basis(&self) -> Vec<Morphism> {
        self.ideal.complement_indices().into_iter().map(|i| self.hom.basis()[i].clone()).collect()
    }

    /// Coordinates of the coset of `f` in the coset basis.
    pub fn class_of(&self, f: &Morphism) -> Vector {
        self.ideal.quotient_coords(&self.hom.coordinates(f))
    }

    pub fn is_zero_class(&self, f: &Morphism) -> bool {
        self.ideal.contains(&self.hom.coordinates(f))
    }

    /// Canonical representative of the coset with the given coordinates.
    pub fn representative(&self, coeffs: &[Scalar]) -> Morphism {
        let f = self.hom.source().field();
        let mut full = vec![f.zero(); self.hom.dim()];
        for (c, i) in coeffs.iter().zip(self.ideal.complement_indices()) {
            full[i] = c.clone();
        }
        self.hom.combine(&full)
    }

    /// Canonical representative of the coset of `f`.
    pub fn normalize(&self, f: &Morphism) -> Morphism {
        self.representative(&self.class_of(f))
    }
}

/// An approximation `⊕ G_i^{n_i} → A` (precover) or `A → ⊕ G_i^{n_i}` (preenvelope).
#[derive(Clone, Debug)]
pub struct Approximation {
    pub object: Module,
    pub map: Morphism,
}

/// Ambient category of modules over one algebra, with memoized hom spaces and
/// ideals and a registry of test objects for universally quantified checks.
#[derive(Debug)]
pub struct Category {
    algebra: Arc<Algebra>,
    homs: HomCache,
    ideals: RwLock<HashMap<(u64, ModuleId, ModuleId), Arc<Subspace>>>,
    membership: RwLock<HashMap<(u64, ModuleId), bool>>,
    registry: Vec<Module>,
}

impl Category {
    pub fn new(algebra: Arc<Algebra>, registry: Vec<Module>) -> Self {
        let mut seen = Vec::new();
        let registry = registry
            .into_iter()
            .filter(|m| {
                let fresh = !seen.contains(&m.id());
                seen.push(m.id());
                fresh
            })
            .collect();
        Category {
            algebra,
            homs: HomCache::new(),
            ideals: RwLock::new(HashMap::new()),
            membership: RwLock::new(HashMap::new()),
            registry,
        }
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn field(&self) -> FieldSpec {
        self.algebra.field()
    }

    pub fn registry(&self) -> &[Module] {
        &self.registry
    }

    pub fn zero_object(&self) -> Module {
        Module::zero(self.algebra.clone()).with_name("0")
    }

    pub fn hom(&self, a: &Module, b: &Module) -> Result<Arc<HomSpace>> {
        self.homs.get(a, b)
    }

    /// Registry followed by any extra objects not already present.
    pub fn test_objects(&self, extra: &[&Module]) -> Vec<Module> {
        let mut out = self.registry.clone();
        for m in extra {
            if !out.iter().any(|o| o.id() == m.id()) {
                out.push((*m).clone());
            }
        }
        out
    }

    /// Objects standing for a subcategory in quantified checks: the generators,
    /// or the registry when the subcategory is everything.
    pub fn objects_of(&self, sub: &Subcategory) -> Vec<Module> {
        if sub.is_all() {
            self.registry.clone()
        } else {
            sub.generators().to_vec()
        }
    }

    pub fn ideal(&self, x: &Subcategory, a: &Module, b: &Module) -> Result<Arc<Subspace>> {
        let key = (x.key(), a.id(), b.id());
        if let Some(s) = self.ideals.read().expect("ideal cache poisoned").get(&key) {
            return Ok(s.clone());
        }
        let hom = self.hom(a, b)?;
        let f = self.field();
        let space = if x.is_all() {
            Subspace::full(f, hom.dim())
        } else {
            let mut vectors = Vec::new();
            for g in x.generators() {
                let into = self.hom(a, g)?;
                let out = self.hom(g, b)?;
                for u in into.basis() {
                    for v in out.basis() {
                        vectors.push(hom.coordinates(&compose(v, u)?));
                    }
                }
            }
            Subspace::span(f, hom.dim(), &vectors)
        };
        let space = Arc::new(space);
        let mut table = self.ideals.write().expect("ideal cache poisoned");
        Ok(table.entry(key).or_insert(space).clone())
    }

    pub fn ideal_subspace(&self, x: &Subcategory, a: &Module, b: &Module) -> Result<IdealSubspace> {
        let hom = self.hom(a, b)?;
        let coords = self.ideal(x, a, b)?;
        let basis = coords.basis_vectors().iter().map(|v| hom.combine(v)).collect();
        Ok(IdealSubspace { source: a.clone(), target: b.clone(), basis, coords })
    }

    pub fn factor_hom(&self, x: &Subcategory, a: &Module, b: &Module) -> Result<FactorHom> {
        Ok(FactorHom { hom: self.hom(a, b)?, ideal: self.ideal(x, a, b)? })
    }

    /// Whether `f` factors through an object of `add(x)`.
    pub fn in_ideal(&self, x: &Subcategory, f: &Morphism) -> Result<bool> {
        let hom = self.hom(f.source(), f.target())?;
        Ok(self.ideal(x, f.source(), f.target())?.contains(&hom.coordinates(f)))
    }

    pub fn factor_equal(&self, x: &Subcategory, f: &Morphism, g: &Morphism) -> Result<bool> {
        self.in_ideal(x, &f.sub(g)?)
    }

    /// An inverse of `f` modulo `x`, when `f` becomes an isomorphism in the factor category.
    pub fn is_factor_iso(&self, x: &Subcategory, f: &Morphism) -> Result<Option<Morphism>> {
        let (a, b) = (f.source(), f.target());
        let mut sys = HomSolver::new(self, &[(b, a)])?;
        sys.constrain(vec![(0, Box::new(|g: &Morphism| compose(g, f)))], &Morphism::identity(a), Some(x))?;
        sys.constrain(vec![(0, Box::new(|g: &Morphism| compose(f, g)))], &Morphism::identity(b), Some(x))?;
        Ok(sys.solve()?.map(|s| s.particular[0].clone()))
    }

    /// `⊕ G_i^{dim Hom(G_i, A)} → A` assembled from hom bases. For `all`, the identity.
    pub fn precover(&self, g: &Subcategory, a: &Module) -> Result<Approximation> {
        if g.is_all() {
            return Ok(Approximation { object: a.clone(), map: Morphism::identity(a) });
        }
        let mut summands = Vec::new();
        let mut parts = Vec::new();
        for gen in g.generators() {
            for b in self.hom(gen, a)?.basis() {
                summands.push(gen.clone());
                parts.push(b.clone());
            }
        }
        let sum = direct_sum(&self.algebra, &summands)?;
        let object = sum_name(&sum.object, &summands);
        let mut map = Morphism::zero(&sum.object, a);
        for (p, proj) in parts.iter().zip(&sum.projections) {
            map = map.add(&compose(p, proj)?)?;
        }
        let map = Morphism::new(object.clone(), a.clone(), map.maps().to_vec())?;
        Ok(Approximation { object, map })
    }

    /// `A → ⊕ G_i^{dim Hom(A, G_i)}` assembled from hom bases. For `all`, the identity.
    pub fn preenvelope(&self, g: &Subcategory, a: &Module) -> Result<Approximation> {
        if g.is_all() {
            return Ok(Approximation { object: a.clone(), map: Morphism::identity(a) });
        }
        let mut summands = Vec::new();
        let mut parts = Vec::new();
        for gen in g.generators() {
            for b in self.hom(a, gen)?.basis() {
                summands.push(gen.clone());
                parts.push(b.clone());
            }
        }
        let sum = direct_sum(&self.algebra, &summands)?;
        let object = sum_name(&sum.object, &summands);
        let mut map = Morphism::zero(a, &sum.object);
        for (p, inj) in parts.iter().zip(&sum.injections) {
            map = map.add(&compose(inj, p)?)?;
        }
        let map = Morphism::new(a.clone(), object.clone(), map.maps().to_vec())?;
        Ok(Approximation { object, map })
    }

    pub fn split_epi(&self, f: &Morphism) -> Result<Option<Morphism>> {
        let mut sys = HomSolver::new(self, &[(f.target(), f.source())])?;
        sys.constrain(vec![(0, Box::new(|g: &Morphism| compose(f, g)))], &Morphism::identity(f.target()), None)?;
        Ok(sys.solve()?.map(|s| s.particular[0].clone()))
    }

    pub fn split_mono(&self, f: &Morphism) -> Result<Option<Morphism>> {
        let mut sys = HomSolver::new(self, &[(f.target(), f.source())])?;
        sys.constrain(vec![(0, Box::new(|g: &Morphism| compose(g, f)))], &Morphism::identity(f.source()), None)?;
        Ok(sys.solve()?.map(|s| s.particular[0].clone()))
    }

    /// Membership in `add(G)`: the canonical precover splits.
    pub fn is_in_add(&self, g: &Subcategory, m: &Module) -> Result<bool> {
        if g.is_all() || m.is_zero() {
            return Ok(true);
        }
        let key = (g.key(), m.id());
        if let Some(&b) = self.membership.read().expect("membership cache poisoned").get(&key) {
            return Ok(b);
        }
        let p = self.precover(g, m)?;
        let member = self.split_epi(&p.map)?.is_some();
        self.membership.write().expect("membership cache poisoned").insert(key, member);
        Ok(member)
    }

    /// `Hom(f, X)` surjective for every generator; for `all`, `f` must split.
    pub fn is_relative_monic(&self, f: &Morphism, x: &Subcategory) -> Result<bool> {
        if x.is_all() {
            return Ok(self.split_mono(f)?.is_some());
        }
        for g in x.generators() {
            let into_a = self.hom(f.source(), g)?;
            let cols: Vec<Vector> = self
                .hom(f.target(), g)?
                .basis()
                .iter()
                .map(|b| compose(b, f).map(|c| into_a.coordinates(&c)))
                .collect::<Result<_>>()?;
            if Matrix::from_columns(self.field(), into_a.dim(), &cols).rank() < into_a.dim() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `Hom(X, f)` surjective for every generator; for `all`, `f` must split.
    pub fn is_relative_epic(&self, f: &Morphism, x: &Subcategory) -> Result<bool> {
        if x.is_all() {
            return Ok(self.split_epi(f)?.is_some());
        }
        for g in x.generators() {
            let into_b = self.hom(g, f.target())?;
            let cols: Vec<Vector> = self
                .hom(g, f.source())?
                .basis()
                .iter()
                .map(|b| compose(f, b).map(|c| into_b.coordinates(&c)))
                .collect::<Result<_>>()?;
            if Matrix::from_columns(self.field(), into_b.dim(), &cols).rank() < into_b.dim() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Rank of `Hom(T, h) : Hom(T, P) → Hom(T, Q)` and the dimension of its source.
    fn covariant_rank(&self, t: &Module, h: &Morphism) -> Result<(usize, usize)> {
        let dom = self.hom(t, h.source())?;
        let cod = self.hom(t, h.target())?;
        let cols: Vec<Vector> =
            dom.basis().iter().map(|b| compose(h, b).map(|c| cod.coordinates(&c))).collect::<Result<_>>()?;
        Ok((Matrix::from_columns(self.field(), cod.dim(), &cols).rank(), dom.dim()))
    }

    /// Rank of `Hom(h, T) : Hom(Q, T) → Hom(P, T)` and the dimension of its source.
    fn contravariant_rank(&self, h: &Morphism, t: &Module) -> Result<(usize, usize)> {
        let dom = self.hom(h.target(), t)?;
        let cod = self.hom(h.source(), t)?;
        let cols: Vec<Vector> =
            dom.basis().iter().map(|b| compose(b, h).map(|c| cod.coordinates(&c))).collect::<Result<_>>()?;
        Ok((Matrix::from_columns(self.field(), cod.dim(), &cols).rank(), dom.dim()))
    }

    /// Test objects on which `Hom(C,T) → Hom(B,T) → Hom(A,T)` fails to be exact.
    pub fn weak_cokernel_failures(&self, f: &Morphism, g: &Morphism) -> Result<Vec<Module>> {
        if !compose(g, f)?.is_zero() {
            return Err(Error::CompositeNonzero(format!("{} then {}", f, g)));
        }
        let mut bad = Vec::new();
        for t in self.test_objects(&[f.source(), f.target(), g.target()]) {
            let (rank_f, dim_b) = self.contravariant_rank(f, &t)?;
            let (rank_g, _) = self.contravariant_rank(g, &t)?;
            if rank_g != dim_b - rank_f {
                bad.push(t);
            }
        }
        Ok(bad)
    }

    pub fn weak_cokernel_check(&self, f: &Morphism, g: &Morphism) -> Result<bool> {
        Ok(self.weak_cokernel_failures(f, g)?.is_empty())
    }

    /// Test objects on which `Hom(T,A) → Hom(T,B) → Hom(T,C)` fails to be exact.
    pub fn weak_kernel_failures(&self, f: &Morphism, g: &Morphism) -> Result<Vec<Module>> {
        if !compose(g, f)?.is_zero() {
            return Err(Error::CompositeNonzero(format!("{} then {}", f, g)));
        }
        let mut bad = Vec::new();
        for t in self.test_objects(&[f.source(), f.target(), g.target()]) {
            let (rank_f, _) = self.covariant_rank(&t, f)?;
            let (rank_g, dim_b) = self.covariant_rank(&t, g)?;
            if rank_f != dim_b - rank_g {
                bad.push(t);
            }
        }
        Ok(bad)
    }

    pub fn weak_kernel_check(&self, f: &Morphism, g: &Morphism) -> Result<bool> {
        Ok(self.weak_kernel_failures(f, g)?.is_empty())
    }

    /// `A ∩ B` realized by filtering candidate objects through both memberships.
    pub fn intersect(&self, name: &str, parts: &[&Subcategory]) -> Result<Subcategory> {
        if parts.iter().all(|s| s.is_all()) {
            return Ok(Subcategory::all(name));
        }
        let mut candidates: Vec<Module> = Vec::new();
        for s in parts {
            candidates.extend(s.generators().iter().cloned());
        }
        candidates.extend(self.registry.iter().cloned());
        let mut kept = Vec::new();
        for c in candidates {
            let mut member = true;
            for s in parts {
                if !self.is_in_add(s, &c)? {
                    member = false;
                    break;
                }
            }
            if member {
                kept.push(c);
            }
        }
        Ok(Subcategory::generated(name, kept))
    }
}

fn sum_name(object: &Module, summands: &[Module]) -> Module {
    if summands.is_empty() {
        return object.with_name("0");
    }
    let names: Vec<String> = summands.iter().map(Module::label).collect();
    object.with_name(names.join("+"))
}

/// A linear map from one unknown morphism into the constraint's hom space.
pub type Term<'a> = (usize, Box<dyn Fn(&Morphism) -> Result<Morphism> + 'a>);

/// Solution set of a [`HomSolver`] system.
#[derive(Clone, Debug)]
pub struct HomSolution {
    /// One value per unknown.
    pub particular: Vec<Morphism>,
    /// Basis of the homogeneous solutions, each a tuple of morphisms.
    pub kernel: Vec<Vec<Morphism>>,
}

/// Linear systems whose unknowns are morphisms: each constraint demands
/// `Σ term_i(x_i) − rhs` be zero, or lie in the ideal of a subcategory.
pub struct HomSolver<'c> {
    cat: &'c Category,
    spaces: Vec<Arc<HomSpace>>,
    offsets: Vec<usize>,
    total: usize,
    constraints: Vec<AffineConstraint>,
}

impl<'c> HomSolver<'c> {
    pub fn new(cat: &'c Category, unknowns: &[(&Module, &Module)]) -> Result<Self> {
        let spaces: Vec<Arc<HomSpace>> = unknowns.iter().map(|(s, t)| cat.hom(s, t)).collect::<Result<_>>()?;
        let mut offsets = Vec::new();
        let mut total = 0;
        for s in &spaces {
            offsets.push(total);
            total += s.dim();
        }
        Ok(HomSolver { cat, spaces, offsets, total, constraints: Vec::new() })
    }

    pub fn constrain(&mut self, terms: Vec<Term<'_>>, rhs: &Morphism, modulo: Option<&Subcategory>) -> Result<()> {
        let target = self.cat.hom(rhs.source(), rhs.target())?;
        let f = self.cat.field();
        let mut linear = Matrix::zeros(f, target.dim(), self.total);
        for (u, term) in &terms {
            for (k, b) in self.spaces[*u].basis().iter().enumerate() {
                let image = term(b)?;
                if image.source() != rhs.source() || image.target() != rhs.target() {
                    return Err(Error::ComposabilityMismatch("constraint term lands in the wrong hom space".into()));
                }
                for (r, c) in target.coordinates(&image).into_iter().enumerate() {
                    let cur = linear.get(r, self.offsets[*u] + k).clone();
                    linear.set(r, self.offsets[*u] + k, f.add(&cur, &c));
                }
            }
        }
        let subspace = match modulo {
            Some(x) => self.cat.ideal(x, rhs.source(), rhs.target())?.basis_vectors(),
            None => Vec::new(),
        };
        self.constraints.push(AffineConstraint { linear, offset: target.coordinates(rhs), subspace });
        Ok(())
    }

    fn split(&self, v: &[Scalar]) -> Vec<Morphism> {
        self.spaces
            .iter()
            .zip(&self.offsets)
            .map(|(s, &o)| s.combine(&v[o..o + s.dim()]))
            .collect()
    }

    pub fn solve(&self) -> Result<Option<HomSolution>> {
        let sol = solve_affine_membership(self.cat.field(), self.total, &self.constraints)?;
        Ok(sol.particular.map(|p| HomSolution {
            particular: self.split(&p),
            kernel: sol.kernel_basis.iter().map(|k| self.split(k)).collect(),
        }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{dual_numbers, two_cycle};
    use crate::module::{socle, top};

    fn d2_cat() -> (Category, crate::fixtures::DualNumbers) {
        let d = dual_numbers();
        (Category::new(d.algebra.clone(), vec![d.s.clone(), d.a.clone()]), d)
    }

    #[test]
    fn ideal_dimensions() {
        let (cat, d) = d2_cat();
        let x = Subcategory::generated("X", vec![d.a.clone()]);
        assert_eq!(cat.ideal(&x, &d.s, &d.s).unwrap().dim(), 0);
        assert_eq!(cat.ideal(&x, &d.a, &d.a).unwrap().dim(), 2);
        let z = Subcategory::zero("0");
        assert_eq!(cat.ideal(&z, &d.a, &d.a).unwrap().dim(), 0);
    }

    #[test]
    fn factor_homs() {
        let (cat, d) = d2_cat();
        let x = Subcategory::generated("X", vec![d.a.clone()]);
        assert_eq!(cat.factor_hom(&x, &d.s, &d.s).unwrap().dim(), 1);
        assert_eq!(cat.factor_hom(&x, &d.a, &d.s).unwrap().dim(), 0);
        assert_eq!(cat.factor_hom(&x, &d.a, &d.a).unwrap().dim(), 0);
        let z = Subcategory::zero("0");
        assert_eq!(cat.factor_hom(&z, &d.a, &d.a).unwrap().dim(), 2);
    }

    #[test]
    fn factor_isos() {
        let (cat, d) = d2_cat();
        let x = Subcategory::generated("X", vec![d.a.clone()]);
        assert!(cat.is_factor_iso(&x, &Morphism::identity(&d.s)).unwrap().is_some());
        let zero = cat.zero_object();
        assert!(cat.is_factor_iso(&x, &Morphism::zero(&d.a, &zero)).unwrap().is_some());
        assert!(cat.is_factor_iso(&x, &socle(&d.a).map).unwrap().is_none());
    }

    #[test]
    fn approximations() {
        let (cat, d) = d2_cat();
        let x = Subcategory::generated("X", vec![d.a.clone()]);
        let p = cat.precover(&x, &d.s).unwrap();
        assert_eq!(p.object, d.a);
        assert!(p.map.is_surjective());
        let z = Subcategory::zero("0");
        assert!(cat.precover(&z, &d.a).unwrap().object.is_zero());
        assert!(cat.is_in_add(&x, &d.a).unwrap());
        assert!(!cat.is_in_add(&x, &d.s).unwrap());
        assert!(cat.is_in_add(&x, &cat.zero_object()).unwrap());
        let aa = direct_sum(cat.algebra(), &[d.a.clone(), d.a.clone()]).unwrap().object;
        assert!(cat.is_in_add(&x, &aa).unwrap());
    }

    #[test]
    fn relative_monics() {
        let (cat, d) = d2_cat();
        let x = Subcategory::generated("X", vec![d.a.clone()]);
        assert!(cat.is_relative_monic(&socle(&d.a).map, &x).unwrap());
        assert!(cat.is_relative_monic(&Morphism::zero(&cat.zero_object(), &d.a), &x).unwrap());
        assert!(!cat.is_relative_monic(&socle(&d.a).map, &Subcategory::all("A")).unwrap());
        assert!(cat.is_relative_epic(&top(&d.a).map, &x).unwrap());
    }

    #[test]
    fn weak_cokernels() {
        let (cat, d) = d2_cat();
        let inc = socle(&d.a).map;
        let proj = top(&d.a).map;
        assert!(cat.weak_cokernel_check(&inc, &proj).unwrap());
        assert!(cat.weak_kernel_check(&inc, &proj).unwrap());
        let id = Morphism::identity(&d.s);
        assert!(cat.weak_cokernel_check(&id, &Morphism::zero(&d.s, &d.s)).unwrap());
        assert!(cat.weak_cokernel_check(&inc, &inc.cokernel().map).unwrap());
        assert!(matches!(cat.weak_cokernel_check(&id, &id), Err(Error::CompositeNonzero(_))));
        // S → A → S is not exact when the second map is zero.
        assert!(!cat.weak_cokernel_check(&inc, &Morphism::zero(&d.a, &d.s)).unwrap());
    }

    #[test]
    fn intersections() {
        let c = two_cycle();
        let cat = Category::new(c.algebra.clone(), vec![c.s1.clone(), c.s2.clone(), c.p1.clone(), c.p2.clone()]);
        let proj = Subcategory::generated("P", vec![c.p1.clone(), c.p2.clone()]);
        let all = Subcategory::all("A");
        let both = cat.intersect("X", &[&proj, &all]).unwrap();
        assert_eq!(both.generators().len(), 2);
        let s1 = Subcategory::generated("S1", vec![c.s1.clone()]);
        assert!(cat.intersect("Z", &[&proj, &s1]).unwrap().is_zero());
        assert!(cat.intersect("T", &[&all, &all]).unwrap().is_all());
    }
}
