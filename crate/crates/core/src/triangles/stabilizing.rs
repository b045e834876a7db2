use super::axioms::note_budget;
use super::{ambient_morphisms, search_solutions, TriangleStructure};
use crate::additive::HomSolver;
use crate::budget::Budget;
use crate::error::Result;
use crate::module::{compose, Morphism};
use crate::report::Report;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Right,
    Left,
}

/// The stabilizing subcategory under test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StabilizingTarget {
    /// `G = C` (right) or `G = F` (left), with identity approximations.
    Whole,
    /// `G = C∩F`, approximated through `R` (right) or `Q` (left).
    Intersection,
}

impl StabilizingTarget {
    fn label(&self, side: Side) -> &'static str {
        match (self, side) {
            (StabilizingTarget::Whole, Side::Right) => "C",
            (StabilizingTarget::Whole, Side::Left) => "F",
            (StabilizingTarget::Intersection, _) => "C∩F",
        }
    }
}

/// For every morphism `f` between registry objects of the class, compares the
/// standard triangle on `f` with the one on its approximation and searches for
/// a comparison map that becomes invertible after approximating.
pub fn check_stabilizing(s: &TriangleStructure<'_>, side: Side, target: StabilizingTarget, budget: &Budget) -> Result<Report> {
    let mut report = Report::new("check-stabilizing");
    report.fact("side", format!("{:?}", side).to_lowercase());
    report.fact("G", target.label(side));
    let class = match side {
        Side::Right => s.c(),
        Side::Left => s.f(),
    };
    let objects = s.registry_in(class)?;
    let mut morphs = Vec::new();
    let mut fell = false;
    for a in &objects {
        for b in &objects {
            let (fs, fb) = ambient_morphisms(s.cat(), a, b, budget)?;
            fell |= fb;
            morphs.extend(fs);
        }
    }
    let (morphs, sampled) = budget.sample(morphs);
    let mut fails = Vec::new();
    for f in &morphs {
        let outcome = match side {
            Side::Right => right_instance(s, f, target, budget)?,
            Side::Left => left_instance(s, f, target, budget)?,
        };
        if let Some(msg) = outcome {
            fails.push(msg);
        }
    }
    let name = match side {
        Side::Right => format!("{} is stabilizing: R(t) invertible", target.label(side)),
        Side::Left => format!("{} is stabilizing: Q(s) invertible", target.label(side)),
    };
    note_budget(report.tally(name, morphs.len(), fails), fell, sampled);
    Ok(report)
}

fn right_instance(s: &TriangleStructure<'_>, f: &Morphism, target: StabilizingTarget, budget: &Budget) -> Result<Option<String>> {
    let (cat, x, t) = (s.cat(), s.x(), s.triple());
    let (a, b) = (f.source(), f.target());
    let (ja, jb, fhat) = match target {
        StabilizingTarget::Whole => (Morphism::identity(a), Morphism::identity(b), f.clone()),
        StabilizingTarget::Intersection => (t.j_map(cat, a)?, t.j_map(cat, b)?, t.lift_through_preenvelope(cat, f)?.map),
    };
    let top = s.cone(f)?.triangle;
    let bottom = s.cone(&fhat)?.triangle;
    let shifted = compose(&s.sigma_map(&ja)?, &top.h)?;
    let want = compose(&bottom.g, &jb)?;
    let mut sys = HomSolver::new(cat, &[(top.c(), bottom.c())])?;
    sys.constrain(vec![(0, Box::new(|m: &Morphism| compose(m, &top.g)))], &want, Some(x))?;
    sys.constrain(vec![(0, Box::new(|m: &Morphism| compose(&bottom.h, m)))], &shifted, Some(x))?;
    let Some(sol) = sys.solve()? else {
        return Ok(Some(format!("no comparison t for f = {}", f)));
    };
    let found = search_solutions(cat, x, &sol, 0, budget, |m| {
        let approx = match target {
            StabilizingTarget::Whole => m.clone(),
            StabilizingTarget::Intersection => t.lift_through_preenvelope(cat, m)?.map,
        };
        Ok(cat.is_factor_iso(x, &approx)?.is_some())
    })?;
    Ok(found.is_none().then(|| format!("no comparison t with R(t) invertible for f = {}", f)))
}

fn left_instance(s: &TriangleStructure<'_>, f: &Morphism, target: StabilizingTarget, budget: &Budget) -> Result<Option<String>> {
    let (cat, x, t) = (s.cat(), s.x(), s.triple());
    let (a, b) = (f.source(), f.target());
    let (ra, rb, fcheck) = match target {
        StabilizingTarget::Whole => (Morphism::identity(a), Morphism::identity(b), f.clone()),
        StabilizingTarget::Intersection => (t.r_map(cat, a)?, t.r_map(cat, b)?, t.lift_through_precover(cat, f)?.map),
    };
    let top = s.fiber(&fcheck)?.triangle;
    let bottom = s.fiber(f)?.triangle;
    let shifted = compose(&bottom.h, &s.omega_map(&rb)?)?;
    let want = compose(&ra, &top.f)?;
    let mut sys = HomSolver::new(cat, &[(top.a(), bottom.a())])?;
    sys.constrain(vec![(0, Box::new(|m: &Morphism| compose(&bottom.f, m)))], &want, Some(x))?;
    sys.constrain(vec![(0, Box::new(|m: &Morphism| compose(m, &top.h)))], &shifted, Some(x))?;
    let Some(sol) = sys.solve()? else {
        return Ok(Some(format!("no comparison s for f = {}", f)));
    };
    let found = search_solutions(cat, x, &sol, 0, budget, |m| {
        let approx = match target {
            StabilizingTarget::Whole => m.clone(),
            StabilizingTarget::Intersection => t.lift_through_precover(cat, m)?.map,
        };
        Ok(cat.is_factor_iso(x, &approx)?.is_some())
    })?;
    Ok(found.is_none().then(|| format!("no comparison s with Q(s) invertible for f = {}", f)))
}
