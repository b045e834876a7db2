use super::axioms::note_budget;
use super::{ambient_morphisms, diag_map, solution_values, TriangleStructure};
use crate::additive::{HomSolver, Subcategory};
use crate::budget::Budget;
use crate::error::Result;
use crate::exact::{ext1, factor_through_epi, is_conflation, split_conflation, Conflation};
use crate::module::{column_map, compose, direct_sum, row_map, Module, Morphism};
use crate::report::Report;

/// `A ↣ A⊕B ↠ B` given by `(1, f)ᵗ` and `(f, −1)`.
pub fn graph_conflation(f: &Morphism) -> Result<Conflation> {
    let (a, b) = (f.source(), f.target());
    let sum = direct_sum(a.algebra(), &[a.clone(), b.clone()])?;
    let obj = sum.object.with_name(format!("{}+{}", a.label(), b.label()));
    let i = column_map(a, &sum, &[Morphism::identity(a), f.clone()])?;
    let d = row_map(&sum, b, &[f.clone(), Morphism::identity(b).neg()])?;
    let i = Morphism::new(a.clone(), obj.clone(), i.maps().to_vec())?;
    let d = Morphism::new(obj, b.clone(), d.maps().to_vec())?;
    Conflation::new(i, d)
}

/// Right triangles `A ↣ B ↠ C` with `C ∈ C` probing the ambient structure:
/// fixed triangles, graph and cone conflations of morphisms between registry
/// objects of `C`, Ext¹ classes and split sequences ending in `C`.
pub fn right_probes(s: &TriangleStructure<'_>, budget: &Budget) -> Result<Vec<Conflation>> {
    let cat = s.cat();
    let cs = s.registry_in(s.c())?;
    let mut out = Vec::new();
    for a in &cs {
        out.push(s.fixed_right(a)?.conflation()?);
    }
    for a in &cs {
        for b in &cs {
            for f in ambient_morphisms(cat, a, b, budget)?.0 {
                out.push(graph_conflation(&f)?);
                let cone = s.cone(&f)?;
                out.push(Conflation::new(cone.inflation.clone(), cone.q.clone())?);
            }
        }
    }
    for c in &cs {
        for a in cat.registry() {
            out.extend(ext1(cat, c, a)?.representatives);
            out.push(split_conflation(a, c)?);
        }
    }
    Ok(out)
}

/// Left triangles `A ↣ B ↠ C` with `A ∈ F`, dual to [`right_probes`].
pub fn left_probes(s: &TriangleStructure<'_>, budget: &Budget) -> Result<Vec<Conflation>> {
    let cat = s.cat();
    let fs = s.registry_in(s.f())?;
    let mut out = Vec::new();
    for a in &fs {
        out.push(s.fixed_left(a)?.conflation()?);
    }
    for m in &fs {
        for n in &fs {
            for e in ambient_morphisms(cat, m, n, budget)?.0 {
                out.push(graph_conflation(&e)?);
                let fiber = s.fiber(&e)?;
                out.push(Conflation::new(fiber.k.clone(), fiber.deflation.clone())?);
            }
        }
    }
    for a in &fs {
        for c in cat.registry() {
            out.extend(ext1(cat, c, a)?.representatives);
            out.push(split_conflation(a, c)?);
        }
    }
    Ok(out)
}

/// Componentwise direct sum of two conflations.
pub(crate) fn sum_conflation(c1: &Conflation, c2: &Conflation) -> Result<Conflation> {
    let alg = c1.left().algebra();
    let l = direct_sum(alg, &[c1.left().clone(), c2.left().clone()])?;
    let m = direct_sum(alg, &[c1.middle().clone(), c2.middle().clone()])?;
    let r = direct_sum(alg, &[c1.right().clone(), c2.right().clone()])?;
    Conflation::new(diag_map(&l, &m, &[c1.i.clone(), c2.i.clone()])?, diag_map(&m, &r, &[c1.d.clone(), c2.d.clone()])?)
}

/// Whether `target = y ∘ f` for some `y`.
pub(crate) fn factors_through_source(s: &TriangleStructure<'_>, target: &Morphism, f: &Morphism) -> Result<bool> {
    let mut sys = HomSolver::new(s.cat(), &[(f.target(), target.target())])?;
    sys.constrain(vec![(0, Box::new(|y: &Morphism| compose(y, f)))], target, None)?;
    Ok(sys.solve()?.is_some())
}

/// Whether `target = f ∘ y` for some `y`.
pub(crate) fn factors_through_target(s: &TriangleStructure<'_>, target: &Morphism, f: &Morphism) -> Result<bool> {
    let mut sys = HomSolver::new(s.cat(), &[(target.source(), f.source())])?;
    sys.constrain(vec![(0, Box::new(|y: &Morphism| compose(f, y)))], target, None)?;
    Ok(sys.solve()?.is_some())
}

/// All `β` with `β∘f = rhs`, within `budget`.
pub(crate) fn exact_fillers(s: &TriangleStructure<'_>, f: &Morphism, target: &Module, rhs: &Morphism, budget: &Budget) -> Result<Vec<Morphism>> {
    let mut sys = HomSolver::new(s.cat(), &[(f.target(), target)])?;
    sys.constrain(vec![(0, Box::new(|b: &Morphism| compose(b, f)))], rhs, None)?;
    match sys.solve()? {
        Some(sol) => solution_values(s.cat(), &Subcategory::zero("0"), &sol, 0, budget),
        None => Ok(Vec::new()),
    }
}

/// PRT1–PRT4 for the right triangles of the ambient category.
pub fn verify_prt_axioms(s: &TriangleStructure<'_>, budget: &Budget) -> Result<Report> {
    let cat = s.cat();
    let (c, x) = (s.c(), s.x());
    let mut report = Report::new("check-prt");
    let cs = s.registry_in(c)?;

    let mut fails = Vec::new();
    for a in &cs {
        match s.fixed_right(a) {
            Ok(t) => {
                report.fact(format!("fixed({})", a.label()), format!("{} -> {} -> {}", a.label(), t.x_obj().label(), t.u_obj().label()));
                if !is_conflation(&t.i, &t.p) {
                    fails.push(format!("fixed triangle of {} is not a conflation", a.label()));
                }
            }
            Err(e) => fails.push(format!("{}: {}", a.label(), e)),
        }
    }
    report.tally("PRT1(i) fixed triangles with X-preenvelopes", cs.len(), fails);

    let mut morphs = Vec::new();
    let mut fell = false;
    for a in &cs {
        for b in &cs {
            let (fs, fb) = ambient_morphisms(cat, a, b, budget)?;
            fell |= fb;
            morphs.extend(fs);
        }
    }
    let (morphs, sampled) = budget.sample(morphs);
    let mut fails = Vec::new();
    for f in &morphs {
        let g = graph_conflation(f)?;
        if !is_conflation(&g.i, &g.d) || !cat.is_in_add(c, g.right())? {
            fails.push(format!("graph sequence of {} is not a right C-triangle", f));
        }
    }
    note_budget(report.tally("PRT1(ii) (1,f) and (f,-1) triangles", morphs.len(), fails), fell, sampled);

    let mut fails = Vec::new();
    for f in &morphs {
        let cone = s.cone(f)?;
        if !is_conflation(&cone.inflation, &cone.q) || !cat.is_in_add(c, cone.q.target())? || !cat.is_relative_monic(&cone.inflation, x)? {
            fails.push(format!("cone sequence of {} is not a right C-triangle with X-monic first map", f));
        }
    }
    note_budget(report.tally("PRT1(iii) (i,f) triangles", morphs.len(), fails), fell, sampled);

    let probes = right_probes(s, budget)?;
    report.fact("right probes", probes.len());
    let mut pairs = Vec::new();
    for i in 0..probes.len() {
        for k in i..probes.len() {
            pairs.push((i, k));
        }
    }
    let (pairs, sampled_sum) = budget.sample(pairs);
    let mut fails = Vec::new();
    for (i, k) in &pairs {
        let sum = sum_conflation(&probes[*i], &probes[*k])?;
        if !is_conflation(&sum.i, &sum.d) || !cat.is_in_add(c, sum.right())? {
            fails.push(format!("sum of [{}] and [{}] leaves the class", probes[*i], probes[*k]));
        }
    }
    note_budget(report.tally("PRT1 closed under direct sums", pairs.len(), fails), false, sampled_sum);

    let mut instances = Vec::new();
    for (i, t) in probes.iter().enumerate() {
        for a2 in &cs {
            for alpha in ambient_morphisms(cat, t.left(), a2, budget)?.0 {
                instances.push((i, alpha));
            }
        }
    }
    let (instances, sampled2) = budget.sample(instances);
    let (mut checked, mut fails) = (0, Vec::new());
    for (i, alpha) in &instances {
        let t = &probes[*i];
        let bottom = s.fixed_right(alpha.target())?;
        let want = compose(&bottom.i, alpha)?;
        let alpha_factors = factors_through_source(s, alpha, &t.i)?;
        for beta in exact_fillers(s, &t.i, bottom.x_obj(), &want, budget)? {
            checked += 1;
            let gamma = factor_through_epi(&t.d, &compose(&bottom.p, &beta)?)?;
            if alpha_factors && !factors_through_target(s, &gamma, &bottom.p)? {
                fails.push(format!("alpha {} factors through f of [{}] but gamma {} does not factor through p", alpha, t, gamma));
            }
        }
    }
    note_budget(report.tally("PRT2 alpha through f implies gamma through p", checked, fails), fell, sampled2);

    let mut instances = Vec::new();
    for i in 0..probes.len() {
        for k in 0..probes.len() {
            for alpha in ambient_morphisms(cat, probes[i].left(), probes[k].left(), budget)?.0 {
                instances.push((i, k, alpha));
            }
        }
    }
    let (instances, sampled3) = budget.sample(instances);
    let (mut checked, mut fails) = (0, Vec::new());
    for (i, k, alpha) in &instances {
        let (t, t2) = (&probes[*i], &probes[*k]);
        let want = compose(&t2.i, alpha)?;
        for beta in exact_fillers(s, &t.i, t2.middle(), &want, budget)? {
            checked += 1;
            if let Err(e) = factor_through_epi(&t.d, &compose(&t2.d, &beta)?) {
                fails.push(format!("no gamma from [{}] to [{}]: {}", t, t2, e));
            }
        }
    }
    note_budget(report.tally("PRT3 morphisms of triangles complete", checked, fails), fell, sampled3);

    let mut firsts = Vec::new();
    for t in &probes {
        if cat.is_relative_monic(&t.i, x)? {
            firsts.push(t.clone());
        }
    }
    let mut composable = Vec::new();
    for (i, t) in firsts.iter().enumerate() {
        for g in second_inflations(s, t.middle(), budget)? {
            composable.push((i, g));
        }
    }
    let (composable, sampled4) = budget.sample(composable);
    let (mut checked, mut fails) = (0, Vec::new());
    for (i, g) in &composable {
        let t = &firsts[*i];
        if !cat.is_relative_monic(g, x)? {
            continue;
        }
        checked += 1;
        match prt4_instance(s, t, g) {
            Ok(None) => {}
            Ok(Some(msg)) => fails.push(msg),
            Err(e) => fails.push(format!("f = {}, g = {}: {}", t.i, g, e)),
        }
    }
    note_budget(report.tally("PRT4 octahedral braid with X-monic r", checked, fails), fell, sampled4);
    Ok(report)
}

/// X-monic inflations out of `b` whose cokernel lies in `C`.
fn second_inflations(s: &TriangleStructure<'_>, b: &Module, budget: &Budget) -> Result<Vec<Morphism>> {
    let cat = s.cat();
    let mut out = Vec::new();
    if !cat.is_in_add(s.c(), b)? {
        return Ok(out);
    }
    out.push(s.fixed_right(b)?.i);
    out.push(Morphism::identity(b));
    for t in s.registry_in(s.c())? {
        out.push(split_conflation(b, &t)?.i);
        for h in ambient_morphisms(cat, b, &t, budget)?.0 {
            out.push(s.cone(&h)?.inflation);
        }
    }
    Ok(out)
}

fn prt4_instance(s: &TriangleStructure<'_>, top: &Conflation, g: &Morphism) -> Result<Option<String>> {
    let cat = s.cat();
    let f = &top.i;
    let gf = compose(g, f)?;
    let cg = Conflation::from_inflation(g.clone())?;
    let cgf = Conflation::from_inflation(gf.clone())?;
    for (name, conf) in [("g", &cg), ("gf", &cgf)] {
        if !cat.is_in_add(s.c(), conf.right())? {
            return Ok(Some(format!("cokernel of {} = {} is not in C", name, conf.right().label())));
        }
    }
    let r = factor_through_epi(&top.d, &compose(&cgf.d, g)?)?;
    let sm = factor_through_epi(&cgf.d, &cg.d)?;
    if !is_conflation(&r, &sm) {
        return Ok(Some(format!("column {} -> {} -> {} is not a conflation for f = {}, g = {}", r.source().label(), r.target().label(), sm.target().label(), f, g)));
    }
    if !cat.is_relative_monic(&r, s.x())? {
        return Ok(Some(format!("r = {} is not X-monic", r)));
    }
    if compose(&r, &top.d)? != compose(&cgf.d, g)? || compose(&sm, &cgf.d)? != cg.d {
        return Ok(Some(format!("braid squares fail for f = {}, g = {}", f, g)));
    }
    Ok(None)
}
