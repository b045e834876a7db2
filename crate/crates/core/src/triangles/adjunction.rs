use super::axioms::note_budget;
use super::{factor_morphisms, TriangleStructure};
use crate::additive::{FactorHom, HomSolver};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::exact::factor_through_mono;
use crate::linalg::Matrix;
use crate::module::{compose, Module, Morphism};
use crate::report::Report;

/// The pair `G^X = R∘Σ^X` and `H_X = Q∘Ω_X` on `(C∩F)/X` with the bijections
/// `φ_{A,B}: Hom(G^X A, B) → Hom(A, H_X B)`.
pub struct Adjunction<'s, 'c> {
    pub s: &'s TriangleStructure<'c>,
}

/// `φ_{A,B}` on coset bases.
#[derive(Clone, Debug)]
pub struct AdjunctionData {
    pub a: Module,
    pub b: Module,
    pub source: FactorHom,
    pub target: FactorHom,
    /// `φ` of each coset basis element of the source, as canonical representatives.
    pub images: Vec<Morphism>,
    /// Columns are target coordinates of the images.
    pub matrix: Matrix,
    /// Ideal elements of the source whose image is not in the ideal.
    pub ill_defined: Vec<Morphism>,
    pub bijective: bool,
}

impl<'s, 'c> Adjunction<'s, 'c> {
    pub fn new(s: &'s TriangleStructure<'c>) -> Self {
        Adjunction { s }
    }

    /// `G^X(A) = R(U^A)`.
    pub fn g_obj(&self, a: &Module) -> Result<Module> {
        self.s.triple().r_obj(self.s.cat(), &self.s.sigma_obj(a)?)
    }

    pub fn g_map(&self, u: &Morphism) -> Result<Morphism> {
        Ok(self.s.triple().lift_through_preenvelope(self.s.cat(), &self.s.sigma_map(u)?)?.map)
    }

    /// `H_X(B) = Q(U_B)`.
    pub fn h_obj(&self, b: &Module) -> Result<Module> {
        self.s.triple().q_obj(self.s.cat(), &self.s.omega_obj(b)?)
    }

    pub fn h_map(&self, v: &Morphism) -> Result<Morphism> {
        Ok(self.s.triple().lift_through_precover(self.s.cat(), &self.s.omega_map(v)?)?.map)
    }

    /// `φ(x)` for `x: G^X(A) → B`: with `f = x∘j^{U^A}`, solve `π_B σ = f p^A`, take
    /// `κ` with `ι_B κ = σ i^A`, and lift `−κ` through `r_{U_B}`.
    pub fn phi(&self, a: &Module, b: &Module, x: &Morphism) -> Result<Morphism> {
        let (cat, t) = (self.s.cat(), self.s.triple());
        let tr = self.s.fixed_right(a)?;
        let tl = self.s.fixed_left(b)?;
        let ju = t.j_map(cat, tr.u_obj())?;
        let f = compose(x, &ju)?;
        let want = compose(&f, &tr.p)?;
        let mut sys = HomSolver::new(cat, &[(tr.x_obj(), tl.x_obj())])?;
        sys.constrain(vec![(0, Box::new(|s: &Morphism| compose(&tl.pi, s)))], &want, None)?;
        let sol = sys.solve()?.ok_or_else(|| Error::KappaUnsolvable(format!("no sigma with pi_B sigma = f p^A for {}", x)))?;
        let kappa = factor_through_mono(&tl.iota, &compose(&sol.particular[0], &tr.i)?)?;
        let r = t.r_map(cat, tl.u_obj())?;
        let target = kappa.neg();
        let mut sys = HomSolver::new(cat, &[(a, r.source())])?;
        sys.constrain(vec![(0, Box::new(|y: &Morphism| compose(&r, y)))], &target, Some(self.s.x()))?;
        let sol = sys.solve()?.ok_or_else(|| Error::LiftUnsolvable(format!("-kappa = {} through r_U", target)))?;
        let y = &sol.particular[0];
        Ok(cat.factor_hom(self.s.x(), y.source(), y.target())?.normalize(y))
    }

    pub fn data(&self, a: &Module, b: &Module) -> Result<AdjunctionData> {
        let cat = self.s.cat();
        let x = self.s.x();
        let ga = self.g_obj(a)?;
        let hb = self.h_obj(b)?;
        let source = cat.factor_hom(x, &ga, b)?;
        let target = cat.factor_hom(x, a, &hb)?;
        let images: Vec<Morphism> = source.coset_basis().iter().map(|m| self.phi(a, b, m)).collect::<Result<_>>()?;
        let cols: Vec<_> = images.iter().map(|m| target.class_of(m)).collect();
        let matrix = Matrix::from_columns(cat.field(), target.dim(), &cols);
        let mut ill_defined = Vec::new();
        for k in &source.hom.basis().to_vec() {
            if cat.in_ideal(x, k)? && !cat.in_ideal(x, &self.phi(a, b, k)?)? {
                ill_defined.push(k.clone());
            }
        }
        let bijective = source.dim() == target.dim() && matrix.rank() == source.dim();
        Ok(AdjunctionData { a: a.clone(), b: b.clone(), source, target, images, matrix, ill_defined, bijective })
    }

    /// `φ⁻¹(y)` for `y: A → H_X(B)`.
    pub fn phi_inverse(&self, a: &Module, b: &Module, y: &Morphism) -> Result<Morphism> {
        let d = self.data(a, b)?;
        if !d.bijective {
            return Err(Error::KappaUnsolvable(format!("phi on ({}, {}) is not bijective", a.label(), b.label())));
        }
        let inv = d.matrix.inverse().ok_or_else(|| Error::KappaUnsolvable("phi matrix is singular".into()))?;
        let coeffs = inv.mul_vec(&d.target.class_of(y))?;
        Ok(d.source.representative(&coeffs))
    }

    /// `η_A = φ(1_{G^X A}): A → H_X G^X A`.
    pub fn unit(&self, a: &Module) -> Result<Morphism> {
        let ga = self.g_obj(a)?;
        self.phi(a, &ga, &Morphism::identity(&ga))
    }

    /// `ε_B = φ⁻¹(1_{H_X B}): G^X H_X B → B`.
    pub fn counit(&self, b: &Module) -> Result<Morphism> {
        let hb = self.h_obj(b)?;
        self.phi_inverse(&hb, b, &Morphism::identity(&hb))
    }
}

/// `φ_{A,B}` for one pair of objects of `C∩F`.
pub fn adjunction_phi(s: &TriangleStructure<'_>, a: &Module, b: &Module) -> Result<AdjunctionData> {
    Adjunction::new(s).data(a, b)
}

/// Well-definedness, bijectivity, naturality and the triangle identities of
/// `(G^X, H_X)` over registry objects of `C∩F`.
pub fn check_adjunction(s: &TriangleStructure<'_>, budget: &Budget) -> Result<Report> {
    let cat = s.cat();
    let x = s.x();
    let adj = Adjunction::new(s);
    let mut report = Report::new("check-adjunction");
    let objects = s.registry_in(s.cf())?;
    for a in &objects {
        report.fact(format!("G({})", a.label()), adj.g_obj(a)?.label());
        report.fact(format!("H({})", a.label()), adj.h_obj(a)?.label());
    }
    let (mut wd, mut bij) = (Vec::new(), Vec::new());
    let mut tables = Vec::new();
    for a in &objects {
        for b in &objects {
            let d = adj.data(a, b)?;
            report.fact(format!("phi({}, {})", a.label(), b.label()), format!("{} -> {}", d.source.dim(), d.target.dim()));
            if let Some(k) = d.ill_defined.first() {
                wd.push(format!("phi({}, {}) moves ideal element {} out of the ideal", a.label(), b.label(), k));
            }
            if !d.bijective {
                bij.push(format!("phi({}, {}) is not bijective: dims {} -> {}, rank {}", a.label(), b.label(), d.source.dim(), d.target.dim(), d.matrix.rank()));
            }
            tables.push(d);
        }
    }
    let pairs = objects.len() * objects.len();
    report.tally("phi well defined on cosets", pairs, wd);
    report.tally("phi bijective", pairs, bij);

    let (morphs, fell) = factor_morphisms(cat, x, &objects, budget)?;
    let (morphs, sampled) = budget.sample(morphs);
    let (mut n, mut fails) = (0, Vec::new());
    for u in &morphs {
        for d in tables.iter().filter(|d| &d.a == u.target()) {
            let gu = adj.g_map(u)?;
            for (xm, img) in d.source.coset_basis().iter().zip(&d.images) {
                n += 1;
                let lhs = adj.phi(u.source(), &d.b, &compose(xm, &gu)?)?;
                if !cat.factor_equal(x, &lhs, &compose(img, u)?)? {
                    fails.push(format!("phi(x G(u)) != phi(x) u for u = {}, x = {}", u, xm));
                }
            }
        }
    }
    note_budget(report.tally("phi natural in the first argument", n, fails), fell, sampled);
    let (mut n, mut fails) = (0, Vec::new());
    for v in &morphs {
        for d in tables.iter().filter(|d| &d.b == v.source()) {
            let hv = adj.h_map(v)?;
            for (xm, img) in d.source.coset_basis().iter().zip(&d.images) {
                n += 1;
                let lhs = adj.phi(&d.a, v.target(), &compose(v, xm)?)?;
                if !cat.factor_equal(x, &lhs, &compose(&hv, img)?)? {
                    fails.push(format!("phi(v x) != H(v) phi(x) for v = {}, x = {}", v, xm));
                }
            }
        }
    }
    note_budget(report.tally("phi natural in the second argument", n, fails), fell, sampled);

    let mut fails = Vec::new();
    for a in &objects {
        let ga = adj.g_obj(a)?;
        let lhs = compose(&adj.counit(&ga)?, &adj.g_map(&adj.unit(a)?)?)?;
        if !cat.factor_equal(x, &lhs, &Morphism::identity(&ga))? {
            fails.push(format!("epsilon_G(A) G(eta_A) != 1 for A = {}: {}", a.label(), lhs));
        }
    }
    report.tally("triangle identity epsilon G . G eta = 1", objects.len(), fails);
    let mut fails = Vec::new();
    for b in &objects {
        let hb = adj.h_obj(b)?;
        let lhs = compose(&adj.h_map(&adj.counit(b)?)?, &adj.unit(&hb)?)?;
        if !cat.factor_equal(x, &lhs, &Morphism::identity(&hb))? {
            fails.push(format!("H(epsilon_B) eta_H(B) != 1 for B = {}: {}", b.label(), lhs));
        }
    }
    report.tally("triangle identity H epsilon . eta H = 1", objects.len(), fails);
    Ok(report)
}
