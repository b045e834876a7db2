use super::adjunction::{check_adjunction, Adjunction};
use super::axioms::{note_budget, verify_lt_axioms, verify_rt_axioms};
use super::factor::{FactorKind, LeftFactor, RightFactor};
use super::{factor_morphisms, TriangleStructure};
use crate::additive::HomSolver;
use crate::budget::Budget;
use crate::error::Result;
use crate::module::{compose, Morphism};
use crate::report::Report;

/// `(C∩F)/X` as a pretriangulated category: right and left triangulated,
/// `(G^X, H_X)` adjoint, and the comparison fillers (b′), (c′) between
/// standard right and left triangles built from the unit and counit.
pub fn verify_pretriangulated(s: &TriangleStructure<'_>, budget: &Budget) -> Result<Report> {
    let cat = s.cat();
    let x = s.x();
    let mut report = Report::new("check-pretriangulated");
    let rf = RightFactor::new(s, FactorKind::Stable);
    let lf = LeftFactor::new(s, FactorKind::Stable);
    report.absorb("right", verify_rt_axioms(&rf, budget)?);
    report.absorb("left", verify_lt_axioms(&lf, budget)?);
    report.absorb("adjunction", check_adjunction(s, budget)?);
    let adj = Adjunction::new(s);
    let objects = s.registry_in(s.cf())?;
    let (morphs, fell) = factor_morphisms(cat, x, &objects, budget)?;
    let (morphs, sampled) = budget.sample(morphs);

    let mut fails = Vec::new();
    for f in &morphs {
        let upper = rf.standard(f)?;
        let lower = lf.standard(&upper.h)?;
        let eta = adj.unit(f.source())?;
        let want = compose(&lower.h, &eta)?;
        let mut sys = HomSolver::new(cat, &[(upper.b(), lower.a())])?;
        sys.constrain(vec![(0, Box::new(|g: &Morphism| compose(g, &upper.f)))], &want, Some(x))?;
        sys.constrain(vec![(0, Box::new(|g: &Morphism| compose(&lower.f, g)))], &upper.g, Some(x))?;
        if sys.solve()?.is_none() {
            fails.push(format!("(c') no filler from [{}] to [{}]", upper, lower));
        }
    }
    note_budget(report.tally("(c') right triangle maps to the left triangle on its third map", morphs.len(), fails), fell, sampled);

    let mut fails = Vec::new();
    for e in &morphs {
        let lower = lf.standard(e)?;
        let upper = rf.standard(&lower.h)?;
        let eps = adj.counit(e.target())?;
        let want = compose(&eps, &upper.h)?;
        let mut sys = HomSolver::new(cat, &[(upper.c(), lower.b())])?;
        sys.constrain(vec![(0, Box::new(|g: &Morphism| compose(g, &upper.g)))], &lower.f, Some(x))?;
        sys.constrain(vec![(0, Box::new(|g: &Morphism| compose(&lower.g, g)))], &want, Some(x))?;
        if sys.solve()?.is_none() {
            fails.push(format!("(b') no filler from [{}] to [{}]", upper, lower));
        }
    }
    note_budget(report.tally("(b') right triangle on the first map maps to the left triangle", morphs.len(), fails), fell, sampled);
    Ok(report)
}
