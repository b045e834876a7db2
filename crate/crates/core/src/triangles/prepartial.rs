use super::axioms::note_budget;
use super::partial::{exact_fillers, factors_through_source, factors_through_target, left_probes, right_probes};
use super::stabilizing::{check_stabilizing, Side, StabilizingTarget};
use super::{ambient_morphisms, TriangleStructure};
use crate::budget::Budget;
use crate::error::Result;
use crate::exact::{factor_through_epi, Conflation};
use crate::module::compose;
use crate::report::Report;

/// How conditions (c)–(e) are established.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PrePartialMode {
    /// Solve (c)(i), (c)(ii) and test the (d), (e) implications on diagrams.
    Direct,
    /// Check that conflations with both ends in `C∩F` lie in both classes.
    SideFlip,
}

/// Conditions (a)–(e) for the pre-partial triangulated structure with `G = C∩F`.
pub fn check_pre_partial_conditions(s: &TriangleStructure<'_>, mode: PrePartialMode, budget: &Budget) -> Result<Report> {
    let mut report = Report::new("check-prepartial");
    report.fact("mode", match mode {
        PrePartialMode::Direct => "direct",
        PrePartialMode::SideFlip => "side-flip",
    });
    report.pass("(a) psi relating Sigma and Omega").caveats.push("Sigma = Omega = 0, so psi and its side conditions vanish".into());
    report.absorb("(b) right", check_stabilizing(s, Side::Right, StabilizingTarget::Intersection, budget)?);
    report.absorb("(b) left", check_stabilizing(s, Side::Left, StabilizingTarget::Intersection, budget)?);
    let cat = s.cat();
    let x = s.x();
    let mut rights = Vec::new();
    for t in right_probes(s, budget)? {
        if cat.is_relative_monic(&t.i, x)? {
            rights.push(t);
        }
    }
    let mut lefts = Vec::new();
    for t in left_probes(s, budget)? {
        if cat.is_relative_epic(&t.d, x)? {
            lefts.push(t);
        }
    }
    report.fact("right triangles with X-monic f", rights.len());
    report.fact("left triangles with X-epic w", lefts.len());
    match mode {
        PrePartialMode::Direct => {
            condition_c(s, &rights, &lefts, budget, &mut report)?;
            condition_d(s, &lefts, budget, &mut report)?;
            condition_e(s, &rights, budget, &mut report)?;
        }
        PrePartialMode::SideFlip => side_flip(s, &rights, &lefts, &mut report)?,
    }
    Ok(report)
}

fn condition_c(s: &TriangleStructure<'_>, rights: &[Conflation], lefts: &[Conflation], budget: &Budget, report: &mut Report) -> Result<()> {
    let cat = s.cat();
    let mut instances = Vec::new();
    let mut fell = false;
    for (i, top) in rights.iter().enumerate() {
        for (k, bottom) in lefts.iter().enumerate() {
            let (bs, fb) = ambient_morphisms(cat, top.middle(), bottom.middle(), budget)?;
            fell |= fb;
            instances.extend(bs.into_iter().map(|beta| (i, k, beta)));
        }
    }
    let (instances, sampled) = budget.sample(instances);
    let (mut n1, mut n2, mut f1, mut f2) = (0, 0, Vec::new(), Vec::new());
    for (i, k, beta) in &instances {
        let (top, bottom) = (&rights[*i], &lefts[*k]);
        let has_gamma = factors_through_source(s, &compose(&bottom.d, beta)?, &top.d)?;
        let has_alpha = factors_through_target(s, &compose(beta, &top.i)?, &bottom.i)?;
        if has_gamma {
            n1 += 1;
            if !has_alpha {
                f1.push(format!("gamma exists but no alpha: top [{}], bottom [{}], beta {}", top, bottom, beta));
            }
        }
        if has_alpha {
            n2 += 1;
            if !has_gamma {
                f2.push(format!("alpha exists but no gamma: top [{}], bottom [{}], beta {}", top, bottom, beta));
            }
        }
    }
    note_budget(report.tally("(c)(i) gamma g = w beta yields alpha with v alpha = beta f", n1, f1), fell, sampled);
    note_budget(report.tally("(c)(ii) v alpha = beta f yields gamma with gamma g = w beta", n2, f2), fell, sampled);
    Ok(())
}

fn condition_d(s: &TriangleStructure<'_>, lefts: &[Conflation], budget: &Budget, report: &mut Report) -> Result<()> {
    let cat = s.cat();
    let mut instances = Vec::new();
    let mut fell = false;
    for a in s.registry_in(s.cf())? {
        for (k, bottom) in lefts.iter().enumerate() {
            let (als, fb) = ambient_morphisms(cat, &a, bottom.left(), budget)?;
            fell |= fb;
            instances.extend(als.into_iter().map(|alpha| (k, alpha)));
        }
    }
    let (instances, sampled) = budget.sample(instances);
    let (mut checked, mut fails) = (0, Vec::new());
    for (k, alpha) in &instances {
        let bottom = &lefts[*k];
        let top = s.fixed_right(alpha.source())?;
        let alpha_factors = factors_through_source(s, alpha, &top.i)?;
        let want = compose(&bottom.i, alpha)?;
        for beta in exact_fillers(s, &top.i, bottom.middle(), &want, budget)? {
            let gamma = factor_through_epi(&top.p, &compose(&bottom.d, &beta)?)?;
            if factors_through_target(s, &gamma, &bottom.d)? {
                checked += 1;
                if !alpha_factors {
                    fails.push(format!("gamma {} factors through w of [{}] but alpha {} does not factor through i^A", gamma, bottom, alpha));
                }
            }
        }
    }
    note_budget(report.tally("(d) gamma through w implies alpha through i^A", checked, fails), fell, sampled);
    Ok(())
}

fn condition_e(s: &TriangleStructure<'_>, rights: &[Conflation], budget: &Budget, report: &mut Report) -> Result<()> {
    let cat = s.cat();
    let mut instances = Vec::new();
    let mut fell = false;
    for d in s.registry_in(s.cf())? {
        let bottom = s.fixed_left(&d)?;
        for (i, top) in rights.iter().enumerate() {
            let (als, fb) = ambient_morphisms(cat, top.left(), bottom.u_obj(), budget)?;
            fell |= fb;
            instances.extend(als.into_iter().map(|alpha| (i, d.clone(), alpha)));
        }
    }
    let (instances, sampled) = budget.sample(instances);
    let (mut checked, mut fails) = (0, Vec::new());
    for (i, d, alpha) in &instances {
        let top = &rights[*i];
        let bottom = s.fixed_left(d)?;
        if !factors_through_source(s, alpha, &top.i)? {
            continue;
        }
        let want = compose(&bottom.iota, alpha)?;
        for beta in exact_fillers(s, &top.i, bottom.x_obj(), &want, budget)? {
            checked += 1;
            let gamma = factor_through_epi(&top.d, &compose(&bottom.pi, &beta)?)?;
            if !factors_through_target(s, &gamma, &bottom.pi)? {
                fails.push(format!("alpha {} factors through f of [{}] but gamma {} does not factor through pi_{}", alpha, top, gamma, d.label()));
            }
        }
    }
    note_budget(report.tally("(e) alpha through f implies gamma through pi_D", checked, fails), fell, sampled);
    Ok(())
}

fn side_flip(s: &TriangleStructure<'_>, rights: &[Conflation], lefts: &[Conflation], report: &mut Report) -> Result<()> {
    let cat = s.cat();
    let cf = s.cf();
    let ends_in_cf = |t: &Conflation| -> Result<bool> { Ok(cat.is_in_add(cf, t.left())? && cat.is_in_add(cf, t.right())?) };
    let (mut checked, mut fails) = (0, Vec::new());
    for t in lefts {
        if ends_in_cf(t)? {
            checked += 1;
            if !cat.is_in_add(s.c(), t.right())? {
                fails.push(format!("left triangle [{}] is not a right triangle", t));
            }
        }
    }
    report.tally("(g) left triangles with ends in C∩F are right triangles", checked, fails);
    let (mut checked, mut fails) = (0, Vec::new());
    for t in rights {
        if ends_in_cf(t)? {
            checked += 1;
            if !cat.is_in_add(s.f(), t.left())? {
                fails.push(format!("right triangle [{}] is not a left triangle", t));
            }
        }
    }
    report.tally("(h) right triangles with ends in C∩F are left triangles", checked, fails);
    Ok(())
}
