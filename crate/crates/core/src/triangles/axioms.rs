use super::factor::{LeftFactor, RightFactor};
use super::{factor_morphisms, solution_values, LeftTriangle, RightTriangle};
use crate::additive::{HomSolver, Subcategory};
use crate::budget::Budget;
use crate::error::Result;
use crate::module::{compose, direct_sum, Module, Morphism};
use crate::report::{CheckRecord, Report};

pub(crate) fn note_budget(rec: &mut CheckRecord, fell_back: bool, sampled: bool) {
    if fell_back {
        rec.caveats.push("some spaces exceeded the dimension cap; basis vectors only".into());
    }
    if sampled {
        rec.caveats.push("instances sampled to the instance cap".into());
    }
}

fn first_x_object(x: &Subcategory, fallback: &Module) -> Module {
    x.generators().first().cloned().unwrap_or_else(|| fallback.clone())
}

/// RT1–RT4 on triangles built from morphisms between registry objects of the class.
pub fn verify_rt_axioms(rf: &RightFactor<'_, '_>, budget: &Budget) -> Result<Report> {
    let cat = rf.s.cat();
    let x = rf.x();
    let mut report = Report::new("check-rt");
    report.fact("category", rf.label());
    let objects = rf.objects()?;
    for a in &objects {
        report.fact(format!("Sigma({})", a.label()), rf.shift(a)?.label());
    }
    let (morphs, fell) = factor_morphisms(cat, x, &objects, budget)?;
    let (morphs, sampled) = budget.sample(morphs);
    let stds: Vec<RightTriangle> = morphs.iter().map(|f| rf.standard(f)).collect::<Result<_>>()?;

    let mut fails = Vec::new();
    for a in &objects {
        if rf.is_distinguished(&rf.identity_triangle(a)?, budget)?.is_none() {
            fails.push(format!("identity triangle on {} is not distinguished", a.label()));
        }
    }
    report.tally("RT1 identity triangles", objects.len(), fails);

    let mut fails = Vec::new();
    for t in &stds {
        if rf.is_distinguished(t, budget)?.is_none() {
            fails.push(format!("standard triangle not distinguished: {}", t));
        }
    }
    note_budget(report.tally("RT1 standard triangles exist and are distinguished", stds.len(), fails), fell, sampled);

    let mut fails = Vec::new();
    for t in &stds {
        let x0 = first_x_object(x, &cat.zero_object());
        let sum = direct_sum(cat.algebra(), &[t.c().clone(), x0.clone()])?;
        let obj = sum.object.with_name(format!("{}+{}", t.c().label(), x0.label()));
        let inj = Morphism::new(t.c().clone(), obj.clone(), sum.injections[0].maps().to_vec())?;
        let proj = Morphism::new(obj, t.c().clone(), sum.projections[0].maps().to_vec())?;
        let padded = RightTriangle::new(t.f.clone(), compose(&inj, &t.g)?, compose(&t.h, &proj)?)?;
        if rf.is_distinguished(&padded, budget)?.is_none() {
            fails.push(format!("triangle isomorphic to a standard one rejected: {}", padded));
        }
    }
    note_budget(report.tally("RT1 closed under isomorphisms", stds.len(), fails), fell, sampled);

    let mut fails = Vec::new();
    for t in &stds {
        let rot = rf.rotate(t)?;
        if rf.is_distinguished(&rot, budget)?.is_none() {
            fails.push(format!("rotation not distinguished: {}", rot));
        }
    }
    note_budget(report.tally("RT2 rotation with -Sigma(f)", stds.len(), fails), fell, sampled);

    let mut instances = Vec::new();
    for (i, t) in stds.iter().enumerate() {
        for (k, t2) in stds.iter().enumerate() {
            let fh = cat.factor_hom(x, t.a(), t2.a())?;
            for v in budget.vectors(cat.field(), fh.dim()).0 {
                instances.push((i, k, fh.representative(&v)));
            }
        }
    }
    let (instances, sampled3) = budget.sample(instances);
    let (mut checked, mut fails) = (0, Vec::new());
    for (i, k, alpha) in &instances {
        let (t, t2) = (&stds[*i], &stds[*k]);
        let want = compose(&t2.f, alpha)?;
        let mut sys = HomSolver::new(cat, &[(t.b(), t2.b())])?;
        sys.constrain(vec![(0, Box::new(|b: &Morphism| compose(b, &t.f)))], &want, Some(x))?;
        let Some(sol) = sys.solve()? else { continue };
        let shifted = compose(&rf.shift_map(alpha)?, &t.h)?;
        for beta in solution_values(cat, x, &sol, 0, budget)? {
            checked += 1;
            let want_g = compose(&t2.g, &beta)?;
            let mut sys = HomSolver::new(cat, &[(t.c(), t2.c())])?;
            sys.constrain(vec![(0, Box::new(|c: &Morphism| compose(c, &t.g)))], &want_g, Some(x))?;
            sys.constrain(vec![(0, Box::new(|c: &Morphism| compose(&t2.h, c)))], &shifted, Some(x))?;
            if sys.solve()?.is_none() {
                fails.push(format!("no filler gamma from [{}] to [{}] with alpha {} and beta {}", t, t2, alpha, beta));
            }
        }
    }
    note_budget(report.tally("RT3 morphisms of triangles complete", checked, fails), fell, sampled || sampled3);

    let mut pairs = Vec::new();
    for (i, f) in morphs.iter().enumerate() {
        for (k, g) in morphs.iter().enumerate() {
            if f.target() == g.source() {
                pairs.push((i, k));
            }
        }
    }
    let (pairs, sampled4) = budget.sample(pairs);
    let mut fails = Vec::new();
    for (i, k) in &pairs {
        let (f, g) = (&morphs[*i], &morphs[*k]);
        let o = rf.octahedron(f, g)?;
        let squares = [
            ("r l = u g", compose(&o.r, &o.on_f.g)?, compose(&o.on_gf.g, g)?),
            ("v r = m", compose(&o.on_gf.h, &o.r)?, o.on_f.h.clone()),
            ("s u = h", compose(&o.s, &o.on_gf.g)?, o.on_g.g.clone()),
            ("j s = Sigma(f) v", compose(&o.on_g.h, &o.s)?, compose(&rf.shift_map(f)?, &o.on_gf.h)?),
        ];
        for (name, lhs, rhs) in squares {
            if !cat.factor_equal(x, &lhs, &rhs)? {
                fails.push(format!("octahedron square {} fails for f = {}, g = {}", name, f, g));
            }
        }
        let column = RightTriangle::new(o.r.clone(), o.s.clone(), compose(&rf.shift_map(&o.on_f.g)?, &o.on_g.h)?)?;
        if rf.is_distinguished(&column, budget)?.is_none() {
            fails.push(format!("octahedral column not distinguished: {}", column));
        }
    }
    note_budget(report.tally("RT4 octahedral axiom", pairs.len(), fails), fell, sampled || sampled4);
    Ok(report)
}

/// LT1–LT4, dual to [`verify_rt_axioms`].
pub fn verify_lt_axioms(lf: &LeftFactor<'_, '_>, budget: &Budget) -> Result<Report> {
    let cat = lf.s.cat();
    let x = lf.x();
    let mut report = Report::new("check-lt");
    report.fact("category", lf.label());
    let objects = lf.objects()?;
    for a in &objects {
        report.fact(format!("Omega({})", a.label()), lf.shift(a)?.label());
    }
    let (morphs, fell) = factor_morphisms(cat, x, &objects, budget)?;
    let (morphs, sampled) = budget.sample(morphs);
    let stds: Vec<LeftTriangle> = morphs.iter().map(|e| lf.standard(e)).collect::<Result<_>>()?;

    let mut fails = Vec::new();
    for a in &objects {
        if lf.is_distinguished(&lf.identity_triangle(a)?, budget)?.is_none() {
            fails.push(format!("identity triangle on {} is not distinguished", a.label()));
        }
    }
    report.tally("LT1 identity triangles", objects.len(), fails);

    let mut fails = Vec::new();
    for t in &stds {
        if lf.is_distinguished(t, budget)?.is_none() {
            fails.push(format!("standard triangle not distinguished: {}", t));
        }
    }
    note_budget(report.tally("LT1 standard triangles exist and are distinguished", stds.len(), fails), fell, sampled);

    let mut fails = Vec::new();
    for t in &stds {
        let x0 = first_x_object(x, &cat.zero_object());
        let sum = direct_sum(cat.algebra(), &[t.a().clone(), x0.clone()])?;
        let obj = sum.object.with_name(format!("{}+{}", t.a().label(), x0.label()));
        let inj = Morphism::new(t.a().clone(), obj.clone(), sum.injections[0].maps().to_vec())?;
        let proj = Morphism::new(obj, t.a().clone(), sum.projections[0].maps().to_vec())?;
        let padded = LeftTriangle::new(compose(&inj, &t.h)?, compose(&t.f, &proj)?, t.g.clone())?;
        if lf.is_distinguished(&padded, budget)?.is_none() {
            fails.push(format!("triangle isomorphic to a standard one rejected: {}", padded));
        }
    }
    note_budget(report.tally("LT1 closed under isomorphisms", stds.len(), fails), fell, sampled);

    let mut fails = Vec::new();
    for t in &stds {
        let rot = lf.rotate(t)?;
        if lf.is_distinguished(&rot, budget)?.is_none() {
            fails.push(format!("rotation not distinguished: {}", rot));
        }
    }
    note_budget(report.tally("LT2 rotation with -Omega(g)", stds.len(), fails), fell, sampled);

    let mut instances = Vec::new();
    for (i, t) in stds.iter().enumerate() {
        for (k, t2) in stds.iter().enumerate() {
            let fh = cat.factor_hom(x, t.c(), t2.c())?;
            for v in budget.vectors(cat.field(), fh.dim()).0 {
                instances.push((i, k, fh.representative(&v)));
            }
        }
    }
    let (instances, sampled3) = budget.sample(instances);
    let (mut checked, mut fails) = (0, Vec::new());
    for (i, k, gamma) in &instances {
        let (t, t2) = (&stds[*i], &stds[*k]);
        let want = compose(gamma, &t.g)?;
        let mut sys = HomSolver::new(cat, &[(t.b(), t2.b())])?;
        sys.constrain(vec![(0, Box::new(|b: &Morphism| compose(&t2.g, b)))], &want, Some(x))?;
        let Some(sol) = sys.solve()? else { continue };
        let shifted = compose(&t2.h, &lf.shift_map(gamma)?)?;
        for beta in solution_values(cat, x, &sol, 0, budget)? {
            checked += 1;
            let want_f = compose(&beta, &t.f)?;
            let mut sys = HomSolver::new(cat, &[(t.a(), t2.a())])?;
            sys.constrain(vec![(0, Box::new(|a: &Morphism| compose(&t2.f, a)))], &want_f, Some(x))?;
            sys.constrain(vec![(0, Box::new(|a: &Morphism| compose(a, &t.h)))], &shifted, Some(x))?;
            if sys.solve()?.is_none() {
                fails.push(format!("no filler alpha from [{}] to [{}] with beta {} and gamma {}", t, t2, beta, gamma));
            }
        }
    }
    note_budget(report.tally("LT3 morphisms of triangles complete", checked, fails), fell, sampled || sampled3);

    let mut pairs = Vec::new();
    for (i, f) in morphs.iter().enumerate() {
        for (k, g) in morphs.iter().enumerate() {
            if f.target() == g.source() {
                pairs.push((i, k));
            }
        }
    }
    let (pairs, sampled4) = budget.sample(pairs);
    let mut fails = Vec::new();
    for (i, k) in &pairs {
        let (f, g) = (&morphs[*i], &morphs[*k]);
        let o = lf.co_octahedron(f, g)?;
        let squares = [
            ("m_g s = f m_gf", compose(&o.on_g.f, &o.s)?, compose(f, &o.on_gf.f)?),
            ("s xi_gf = xi_g", compose(&o.s, &o.on_gf.h)?, o.on_g.h.clone()),
            ("m_gf r = m_f", compose(&o.on_gf.f, &o.r)?, o.on_f.f.clone()),
            ("r xi_f = xi_gf Omega(g)", compose(&o.r, &o.on_f.h)?, compose(&o.on_gf.h, &lf.shift_map(g)?)?),
        ];
        for (name, lhs, rhs) in squares {
            if !cat.factor_equal(x, &lhs, &rhs)? {
                fails.push(format!("octahedron square {} fails for f = {}, g = {}", name, f, g));
            }
        }
        let column = LeftTriangle::new(compose(&o.on_f.h, &lf.shift_map(&o.on_g.f)?)?, o.r.clone(), o.s.clone())?;
        if lf.is_distinguished(&column, budget)?.is_none() {
            fails.push(format!("octahedral column not distinguished: {}", column));
        }
    }
    note_budget(report.tally("LT4 octahedral axiom", pairs.len(), fails), fell, sampled || sampled4);
    Ok(report)
}
