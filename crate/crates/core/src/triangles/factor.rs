use super::{search_solutions, LeftTriangle, RightTriangle, TriangleStructure};
use crate::additive::{HomSolver, Subcategory};
use crate::budget::Budget;
use crate::error::Result;
use crate::module::{compose, Module, Morphism};

/// Which factor category a triangulation lives on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FactorKind {
    /// `C/X` (right) or `F/X` (left).
    Subfactor,
    /// `(C∩F)/X`, reached through `R` (right) or `Q` (left).
    Stable,
}

/// The right triangulated category `C/X` with `Σ^X`, or `(C∩F)/X` with `G^X = R∘Σ^X`.
pub struct RightFactor<'s, 'c> {
    pub s: &'s TriangleStructure<'c>,
    pub kind: FactorKind,
}

/// Octahedral data for `f: A → B`, `g: B → C`: the standard triangles on `f`, `gf`
/// and `g` with the comparison maps `r: N_f → N_gf` and `s: N_gf → N_g`.
#[derive(Clone, Debug)]
pub struct Octahedron {
    pub on_f: RightTriangle,
    pub on_gf: RightTriangle,
    pub on_g: RightTriangle,
    pub r: Morphism,
    pub s: Morphism,
}

impl<'s, 'c> RightFactor<'s, 'c> {
    pub fn new(s: &'s TriangleStructure<'c>, kind: FactorKind) -> Self {
        RightFactor { s, kind }
    }

    pub fn label(&self) -> &'static str {
        match self.kind {
            FactorKind::Subfactor => "C/X",
            FactorKind::Stable => "(C∩F)/X",
        }
    }

    pub fn class(&self) -> &Subcategory {
        match self.kind {
            FactorKind::Subfactor => self.s.c(),
            FactorKind::Stable => self.s.cf(),
        }
    }

    pub fn x(&self) -> &Subcategory {
        self.s.x()
    }

    pub fn objects(&self) -> Result<Vec<Module>> {
        self.s.registry_in(self.class())
    }

    fn reflect_obj(&self, m: &Module) -> Result<Module> {
        match self.kind {
            FactorKind::Subfactor => Ok(m.clone()),
            FactorKind::Stable => self.s.triple().r_obj(self.s.cat(), m),
        }
    }

    fn reflect_map(&self, f: &Morphism) -> Result<Morphism> {
        match self.kind {
            FactorKind::Subfactor => Ok(f.clone()),
            FactorKind::Stable => Ok(self.s.triple().lift_through_preenvelope(self.s.cat(), f)?.map),
        }
    }

    fn unit(&self, m: &Module) -> Result<Morphism> {
        match self.kind {
            FactorKind::Subfactor => Ok(Morphism::identity(m)),
            FactorKind::Stable => self.s.triple().j_map(self.s.cat(), m),
        }
    }

    pub fn shift(&self, a: &Module) -> Result<Module> {
        self.reflect_obj(&self.s.sigma_obj(a)?)
    }

    pub fn shift_map(&self, f: &Morphism) -> Result<Morphism> {
        self.reflect_map(&self.s.sigma_map(f)?)
    }

    pub fn standard(&self, f: &Morphism) -> Result<RightTriangle> {
        let t = self.s.cone(f)?.triangle;
        match self.kind {
            FactorKind::Subfactor => Ok(t),
            FactorKind::Stable => {
                let g = compose(&self.unit(t.c())?, &t.g)?;
                RightTriangle::new(t.f, g, self.reflect_map(&t.h)?)
            }
        }
    }

    /// `0 → A → A → Σ(0)`.
    pub fn identity_triangle(&self, a: &Module) -> Result<RightTriangle> {
        let zero = self.s.cat().zero_object();
        let shift = self.shift(&zero)?;
        RightTriangle::new(Morphism::zero(&zero, a), Morphism::identity(a), Morphism::zero(a, &shift))
    }

    /// `(B, C, ΣA, ΣB; g, h, −Σ(f))`.
    pub fn rotate(&self, t: &RightTriangle) -> Result<RightTriangle> {
        RightTriangle::new(t.g.clone(), t.h.clone(), self.shift_map(&t.f)?.neg())
    }

    pub fn octahedron(&self, f: &Morphism, g: &Morphism) -> Result<Octahedron> {
        let s = self.s;
        let gf = compose(g, f)?;
        let (cf, cgf, cg) = (s.cone(f)?, s.cone(&gf)?, s.cone(g)?);
        let sigma = s.sigma_lift(f)?.sigma;
        let one_x = Morphism::identity(s.fixed_right(f.source())?.x_obj());
        let across = super::diag_map(&cf.sum, &cgf.sum, &[one_x, g.clone()])?;
        let r = crate::exact::factor_through_epi(&cf.q, &compose(&cgf.q, &across)?)?;
        let down = super::diag_map(&cgf.sum, &cg.sum, &[sigma, Morphism::identity(g.target())])?;
        let sm = crate::exact::factor_through_epi(&cgf.q, &compose(&cg.q, &down)?)?;
        match self.kind {
            FactorKind::Subfactor => Ok(Octahedron { on_f: cf.triangle, on_gf: cgf.triangle, on_g: cg.triangle, r, s: sm }),
            FactorKind::Stable => Ok(Octahedron {
                on_f: self.standard(f)?,
                on_gf: self.standard(&gf)?,
                on_g: self.standard(g)?,
                r: self.reflect_map(&r)?,
                s: self.reflect_map(&sm)?,
            }),
        }
    }

    /// A factor-iso `c: C → C'` completing `(1, 1, c)` from `t` to the standard
    /// triangle on `t.f`, if `t` is distinguished.
    pub fn is_distinguished(&self, t: &RightTriangle, budget: &Budget) -> Result<Option<Morphism>> {
        let std = self.standard(&t.f)?;
        if t.shift() != std.shift() {
            return Ok(None);
        }
        let cat = self.s.cat();
        let x = self.x();
        let mut sys = HomSolver::new(cat, &[(t.c(), std.c())])?;
        sys.constrain(vec![(0, Box::new(|c: &Morphism| compose(c, &t.g)))], &std.g, Some(x))?;
        sys.constrain(vec![(0, Box::new(|c: &Morphism| compose(&std.h, c)))], &t.h, Some(x))?;
        let Some(sol) = sys.solve()? else { return Ok(None) };
        search_solutions(cat, x, &sol, 0, budget, |c| Ok(cat.is_factor_iso(x, c)?.is_some()))
    }
}

/// The left triangulated category `F/X` with `Ω_X`, or `(C∩F)/X` with `H_X = Q∘Ω_X`.
pub struct LeftFactor<'s, 'c> {
    pub s: &'s TriangleStructure<'c>,
    pub kind: FactorKind,
}

/// Dual octahedral data for `f: A → B`, `g: B → C`: standard left triangles on
/// `g`, `gf`, `f` with `s′: K_gf → K_g` and `r′: K_f → K_gf`.
#[derive(Clone, Debug)]
pub struct CoOctahedron {
    pub on_g: LeftTriangle,
    pub on_gf: LeftTriangle,
    pub on_f: LeftTriangle,
    pub s: Morphism,
    pub r: Morphism,
}

impl<'s, 'c> LeftFactor<'s, 'c> {
    pub fn new(s: &'s TriangleStructure<'c>, kind: FactorKind) -> Self {
        LeftFactor { s, kind }
    }

    pub fn label(&self) -> &'static str {
        match self.kind {
            FactorKind::Subfactor => "F/X",
            FactorKind::Stable => "(C∩F)/X",
        }
    }

    pub fn class(&self) -> &Subcategory {
        match self.kind {
            FactorKind::Subfactor => self.s.f(),
            FactorKind::Stable => self.s.cf(),
        }
    }

    pub fn x(&self) -> &Subcategory {
        self.s.x()
    }

    pub fn objects(&self) -> Result<Vec<Module>> {
        self.s.registry_in(self.class())
    }

    fn coreflect_obj(&self, m: &Module) -> Result<Module> {
        match self.kind {
            FactorKind::Subfactor => Ok(m.clone()),
            FactorKind::Stable => self.s.triple().q_obj(self.s.cat(), m),
        }
    }

    fn coreflect_map(&self, f: &Morphism) -> Result<Morphism> {
        match self.kind {
            FactorKind::Subfactor => Ok(f.clone()),
            FactorKind::Stable => Ok(self.s.triple().lift_through_precover(self.s.cat(), f)?.map),
        }
    }

    fn counit(&self, m: &Module) -> Result<Morphism> {
        match self.kind {
            FactorKind::Subfactor => Ok(Morphism::identity(m)),
            FactorKind::Stable => self.s.triple().r_map(self.s.cat(), m),
        }
    }

    pub fn shift(&self, a: &Module) -> Result<Module> {
        self.coreflect_obj(&self.s.omega_obj(a)?)
    }

    pub fn shift_map(&self, f: &Morphism) -> Result<Morphism> {
        self.coreflect_map(&self.s.omega_map(f)?)
    }

    /// Standard left triangle on `e: M → N`.
    pub fn standard(&self, e: &Morphism) -> Result<LeftTriangle> {
        let t = self.s.fiber(e)?.triangle;
        match self.kind {
            FactorKind::Subfactor => Ok(t),
            FactorKind::Stable => {
                let f = compose(&t.f, &self.counit(t.a())?)?;
                LeftTriangle::new(self.coreflect_map(&t.h)?, f, t.g)
            }
        }
    }

    /// `Ω(0) → A → A → 0`.
    pub fn identity_triangle(&self, a: &Module) -> Result<LeftTriangle> {
        let zero = self.s.cat().zero_object();
        let shift = self.shift(&zero)?;
        LeftTriangle::new(Morphism::zero(&shift, a), Morphism::identity(a), Morphism::zero(a, &zero))
    }

    /// `(ΩB, ΩC, A, B; −Ω(g), h, f)`.
    pub fn rotate(&self, t: &LeftTriangle) -> Result<LeftTriangle> {
        LeftTriangle::new(self.shift_map(&t.g)?.neg(), t.h.clone(), t.f.clone())
    }

    pub fn co_octahedron(&self, f: &Morphism, g: &Morphism) -> Result<CoOctahedron> {
        let s = self.s;
        let gf = compose(g, f)?;
        let (kg, kgf, kf) = (s.fiber(g)?, s.fiber(&gf)?, s.fiber(f)?);
        let one_x = Morphism::identity(s.fixed_left(g.target())?.x_obj());
        let across = super::diag_map(&kgf.sum, &kg.sum, &[one_x, f.clone()])?;
        let sm = crate::exact::factor_through_mono(&kg.k, &compose(&across, &kgf.k)?)?;
        let sigma = s.omega_lift(g)?.sigma;
        let down = super::diag_map(&kf.sum, &kgf.sum, &[sigma, Morphism::identity(f.source())])?;
        let r = crate::exact::factor_through_mono(&kgf.k, &compose(&down, &kf.k)?)?;
        match self.kind {
            FactorKind::Subfactor => Ok(CoOctahedron { on_g: kg.triangle, on_gf: kgf.triangle, on_f: kf.triangle, s: sm, r }),
            FactorKind::Stable => Ok(CoOctahedron {
                on_g: self.standard(g)?,
                on_gf: self.standard(&gf)?,
                on_f: self.standard(f)?,
                s: self.coreflect_map(&sm)?,
                r: self.coreflect_map(&r)?,
            }),
        }
    }

    /// A factor-iso `c: A → K` completing `(c, 1, 1)` from `t` to the standard
    /// left triangle on `t.g`, if `t` is distinguished.
    pub fn is_distinguished(&self, t: &LeftTriangle, budget: &Budget) -> Result<Option<Morphism>> {
        let std = self.standard(&t.g)?;
        if t.shift() != std.shift() {
            return Ok(None);
        }
        let cat = self.s.cat();
        let x = self.x();
        let mut sys = HomSolver::new(cat, &[(t.a(), std.a())])?;
        sys.constrain(vec![(0, Box::new(|c: &Morphism| compose(&std.f, c)))], &t.f, Some(x))?;
        sys.constrain(vec![(0, Box::new(|c: &Morphism| compose(c, &t.h)))], &std.h, Some(x))?;
        let Some(sol) = sys.solve()? else { return Ok(None) };
        search_solutions(cat, x, &sol, 0, budget, |c| Ok(cat.is_factor_iso(x, c)?.is_some()))
    }
}
