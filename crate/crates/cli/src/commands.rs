//! Command dispatch: each command maps onto one core operation and yields a [`Report`].

use stabcat::cotorsion::check_cotorsion_pair;
use stabcat::exact::ext1;
use stabcat::homotopy::{check_equivalence_embedding, check_homotopy, check_triangle_transport, is_weak_equivalence, universal_factorization, GammaFunctor, Overridden, QuotientFunctor, StableFunctor};
use stabcat::triangles::{
    check_adjunction, check_pre_partial_conditions, check_stabilizing, verify_lt_axioms, verify_pretriangulated, verify_prt_axioms, verify_rt_axioms, FactorKind, LeftFactor, PrePartialMode, RightFactor, Side,
    StabilizingTarget,
};
use stabcat::{build_localization_triple, check_hovey_triple, check_localization_triple, Budget, HomotopyCategory, HoveyTriple, Morphism, Report, Scalar, TriangleStructure};

use crate::error::{CliError, CliResult};
use crate::workspace::Workspace;

pub const COMMANDS: [&str; 25] = [
    "hom",
    "stable-hom",
    "ext1",
    "precover",
    "preenvelope",
    "check-cotorsion",
    "check-hovey",
    "build-localization",
    "check-localization",
    "fix-triangles",
    "check-rt",
    "check-lt",
    "check-prt",
    "check-stabilizing",
    "check-prepartial",
    "check-pretriangulated",
    "check-adjunction",
    "ho-hom",
    "weq",
    "universal",
    "check-embedding",
    "check-transport",
    "report-all",
    "modules",
    "help",
];

/// Settings shared by every command.
#[derive(Clone, Debug, Default)]
pub struct Options {
    pub budget: Budget,
    /// The Hovey triple to use; the first declared one when absent.
    pub triple: Option<String>,
}

/// Positional arguments and `--flag value` pairs of one command.
struct Args {
    positional: Vec<String>,
    flags: Vec<(String, String)>,
}

impl Args {
    fn parse(cmd: &str, raw: &[String], allowed: &[&str]) -> CliResult<Self> {
        let mut positional = Vec::new();
        let mut flags = Vec::new();
        let mut it = raw.iter();
        while let Some(a) = it.next() {
            if let Some(name) = a.strip_prefix("--") {
                if !allowed.contains(&name) {
                    return Err(CliError::Argument(format!("{cmd} does not take --{name}")));
                }
                let v = it.next().ok_or_else(|| CliError::Argument(format!("--{name} needs a value")))?;
                flags.push((name.to_string(), v.clone()));
            } else {
                positional.push(a.clone());
            }
        }
        Ok(Args { positional, flags })
    }

    fn flag(&self, name: &str) -> Option<&str> {
        self.flags.iter().rev().find(|(n, _)| n == name).map(|(_, v)| v.as_str())
    }

    fn exactly<const N: usize>(&self, cmd: &str, usage: &str) -> CliResult<[&str; N]> {
        if self.positional.len() != N {
            return Err(CliError::Argument(format!("usage: {cmd} {usage}")));
        }
        Ok(std::array::from_fn(|i| self.positional[i].as_str()))
    }
}

fn choice<T: Copy>(flag: &str, value: Option<&str>, default: T, options: &[(&str, T)]) -> CliResult<T> {
    let Some(v) = value else { return Ok(default) };
    options.iter().find(|(k, _)| *k == v).map(|(_, t)| *t).ok_or_else(|| {
        let names: Vec<&str> = options.iter().map(|(k, _)| *k).collect();
        CliError::Argument(format!("--{flag} expects one of {}", names.join(", ")))
    })
}

fn listed(items: impl IntoIterator<Item = String>) -> String {
    items.into_iter().collect::<Vec<_>>().join(", ")
}

/// Runs one command against a loaded workspace.
pub fn run_command(ws: &Workspace, cmd: &str, raw: &[String], opts: &Options) -> CliResult<Report> {
    let budget = &opts.budget;
    let cat = &ws.category;
    let triple = || ws.triple(opts.triple.as_deref());
    match cmd {
        "help" => {
            let mut r = Report::new("help");
            r.fact("commands", COMMANDS.join(" "));
            Ok(r)
        }
        "modules" => {
            Args::parse(cmd, raw, &[])?.exactly::<0>(cmd, "")?;
            let mut r = Report::new("modules");
            for (name, m) in &ws.modules {
                r.fact(name, m);
            }
            r.fact("registry", listed(ws.registry().iter().map(|m| m.label())));
            Ok(r)
        }
        "hom" => {
            let args = Args::parse(cmd, raw, &[])?;
            let [a, b] = args.exactly::<2>(cmd, "A B")?;
            let h = cat.hom(ws.module(a)?, ws.module(b)?)?;
            let mut r = Report::new("hom");
            r.fact(format!("dim Hom({a}, {b})"), h.dim());
            for (i, f) in h.basis().iter().enumerate() {
                r.fact(format!("basis[{i}]"), f);
            }
            Ok(r)
        }
        "stable-hom" => {
            let args = Args::parse(cmd, raw, &["modulo"])?;
            let [a, b] = args.exactly::<2>(cmd, "A B [--modulo X]")?;
            let x = match args.flag("modulo") {
                Some(n) => ws.subcategory(n)?,
                None => triple()?.x.clone(),
            };
            let fh = cat.factor_hom(&x, ws.module(a)?, ws.module(b)?)?;
            let mut r = Report::new("stable-hom");
            r.fact("modulo", x.describe());
            r.fact(format!("dim Hom({a}, {b})/{}", x.name()), fh.dim());
            for (i, f) in fh.coset_basis().iter().enumerate() {
                r.fact(format!("coset[{i}]"), f);
            }
            Ok(r)
        }
        "ext1" => {
            let args = Args::parse(cmd, raw, &[])?;
            let [c, a] = args.exactly::<2>(cmd, "C A")?;
            let e = ext1(cat, ws.module(c)?, ws.module(a)?)?;
            let mut r = Report::new("ext1");
            r.fact(format!("dim Ext1({c}, {a})"), e.dim);
            for (i, rep) in e.representatives.iter().enumerate() {
                r.fact(format!("class[{i}]"), rep);
            }
            Ok(r)
        }
        "precover" | "preenvelope" => {
            let args = Args::parse(cmd, raw, &[])?;
            let [g, a] = args.exactly::<2>(cmd, "G A")?;
            let (g, a) = (ws.subcategory(g)?, ws.module(a)?);
            let ap = if cmd == "precover" { cat.precover(&g, a)? } else { cat.preenvelope(&g, a)? };
            let mut r = Report::new(cmd);
            r.fact("object", &ap.object);
            r.fact("map", &ap.map);
            Ok(r)
        }
        "check-cotorsion" => {
            let args = Args::parse(cmd, raw, &["pair"])?;
            args.exactly::<0>(cmd, "[--pair 1|2]")?;
            let h = triple()?;
            let pairs: Vec<(&str, &stabcat::CotorsionPair)> = match args.flag("pair") {
                None => vec![("pair1", &h.pair1), ("pair2", &h.pair2)],
                Some("1") => vec![("pair1", &h.pair1)],
                Some("2") => vec![("pair2", &h.pair2)],
                Some(_) => return Err(CliError::Argument("--pair expects 1 or 2".into())),
            };
            let mut r = Report::new("check-cotorsion");
            for (label, p) in pairs {
                r.absorb(label, check_cotorsion_pair(cat, p)?);
            }
            Ok(r)
        }
        "check-hovey" => {
            Args::parse(cmd, raw, &[])?.exactly::<0>(cmd, "")?;
            Ok(check_hovey_triple(cat, triple()?, budget)?)
        }
        "build-localization" => {
            Args::parse(cmd, raw, &[])?.exactly::<0>(cmd, "")?;
            let (t, mut r) = build_localization_triple(cat, triple()?)?;
            for a in ws.registry() {
                let q = t.q_seq(cat, a)?;
                let rr = t.r_seq(cat, a)?;
                r.fact(format!("Q({})", a.label()), q.middle().label());
                r.fact(format!("r_{}", a.label()), &q.second);
                r.fact(format!("R({})", a.label()), rr.middle().label());
                r.fact(format!("j^{}", a.label()), &rr.first);
            }
            Ok(r)
        }
        "check-localization" => {
            Args::parse(cmd, raw, &[])?.exactly::<0>(cmd, "")?;
            let (t, _) = build_localization_triple(cat, triple()?)?;
            Ok(check_localization_triple(cat, &t)?)
        }
        "fix-triangles" => {
            Args::parse(cmd, raw, &[])?.exactly::<0>(cmd, "")?;
            let s = TriangleStructure::new(cat, triple()?)?;
            fix_triangles(&s)
        }
        "check-rt" | "check-lt" => {
            let args = Args::parse(cmd, raw, &["kind"])?;
            args.exactly::<0>(cmd, "[--kind subfactor|stable]")?;
            let kind = choice("kind", args.flag("kind"), FactorKind::Subfactor, &[("subfactor", FactorKind::Subfactor), ("stable", FactorKind::Stable)])?;
            let s = TriangleStructure::new(cat, triple()?)?;
            let mut r = if cmd == "check-rt" { verify_rt_axioms(&RightFactor::new(&s, kind), budget)? } else { verify_lt_axioms(&LeftFactor::new(&s, kind), budget)? };
            r.command = cmd.into();
            Ok(r)
        }
        "check-prt" => {
            Args::parse(cmd, raw, &[])?.exactly::<0>(cmd, "")?;
            let s = TriangleStructure::new(cat, triple()?)?;
            Ok(verify_prt_axioms(&s, budget)?)
        }
        "check-stabilizing" => {
            let args = Args::parse(cmd, raw, &["side", "target"])?;
            args.exactly::<0>(cmd, "[--side right|left] [--target whole|intersection]")?;
            let side = choice("side", args.flag("side"), Side::Right, &[("right", Side::Right), ("left", Side::Left)])?;
            let target = choice("target", args.flag("target"), StabilizingTarget::Whole, &[("whole", StabilizingTarget::Whole), ("intersection", StabilizingTarget::Intersection)])?;
            let s = TriangleStructure::new(cat, triple()?)?;
            Ok(check_stabilizing(&s, side, target, budget)?)
        }
        "check-prepartial" => {
            let args = Args::parse(cmd, raw, &["mode"])?;
            args.exactly::<0>(cmd, "[--mode direct|side-flip]")?;
            let mode = choice("mode", args.flag("mode"), PrePartialMode::Direct, &[("direct", PrePartialMode::Direct), ("side-flip", PrePartialMode::SideFlip)])?;
            let s = TriangleStructure::new(cat, triple()?)?;
            Ok(check_pre_partial_conditions(&s, mode, budget)?)
        }
        "check-pretriangulated" => {
            Args::parse(cmd, raw, &[])?.exactly::<0>(cmd, "")?;
            let s = TriangleStructure::new(cat, triple()?)?;
            Ok(verify_pretriangulated(&s, budget)?)
        }
        "check-adjunction" => {
            Args::parse(cmd, raw, &[])?.exactly::<0>(cmd, "")?;
            let s = TriangleStructure::new(cat, triple()?)?;
            Ok(check_adjunction(&s, budget)?)
        }
        "ho-hom" => {
            let args = Args::parse(cmd, raw, &[])?;
            let (t, _) = build_localization_triple(cat, triple()?)?;
            let ho = HomotopyCategory::new(cat, &t);
            match args.positional.as_slice() {
                [] => {
                    let mut r = check_homotopy(&ho, budget)?;
                    r.command = "ho-hom".into();
                    Ok(r)
                }
                [a, b] => {
                    let (a, b) = (ws.module(a)?, ws.module(b)?);
                    let mut r = Report::new("ho-hom");
                    r.fact(format!("RQ({})", a.label()), ho.rq_obj(a)?.label());
                    r.fact(format!("RQ({})", b.label()), ho.rq_obj(b)?.label());
                    let basis = ho.basis(a, b)?;
                    r.fact(format!("dim Hom_Ho({}, {})", a.label(), b.label()), basis.len());
                    for (i, m) in basis.iter().enumerate() {
                        r.fact(format!("basis[{i}]"), m);
                    }
                    Ok(r)
                }
                _ => Err(CliError::Argument("usage: ho-hom [A B]".into())),
            }
        }
        "weq" => {
            let args = Args::parse(cmd, raw, &["coeffs"])?;
            let (src, tgt) = match args.positional.as_slice() {
                [one] => split_arrow(one).ok_or_else(|| CliError::Argument("usage: weq SRC TGT or weq SRC->TGT".into()))?,
                [a, b] => (a.clone(), b.clone()),
                _ => return Err(CliError::Argument("usage: weq SRC TGT or weq SRC->TGT".into())),
            };
            let (a, b) = (ws.module(&src)?, ws.module(&tgt)?);
            let f = pick_morphism(ws, a, b, args.flag("coeffs"))?;
            let (t, _) = build_localization_triple(cat, triple()?)?;
            let mut r = Report::new("weq");
            r.fact("morphism", &f);
            r.fact("weak equivalence", is_weak_equivalence(cat, &t, &f)?);
            Ok(r)
        }
        "universal" => {
            let args = Args::parse(cmd, raw, &["functor", "break-r"])?;
            args.exactly::<0>(cmd, "[--functor gamma|quotient] [--break-r A]")?;
            let (t, _) = build_localization_triple(cat, triple()?)?;
            let ho = HomotopyCategory::new(cat, &t);
            let mut overrides = Vec::new();
            if let Some(name) = args.flag("break-r") {
                let r = t.r_map(cat, ws.module(name)?)?;
                overrides.push((r.clone(), Morphism::zero(r.source(), r.target())));
            }
            match args.flag("functor").unwrap_or("gamma") {
                "gamma" => universal(&ho, Overridden { inner: GammaFunctor { ho: &ho }, overrides }, budget),
                "quotient" => universal(&ho, Overridden { inner: QuotientFunctor { cat, x: t.x.clone() }, overrides }, budget),
                _ => Err(CliError::Argument("--functor expects gamma or quotient".into())),
            }
        }
        "check-embedding" => {
            Args::parse(cmd, raw, &[])?.exactly::<0>(cmd, "")?;
            let (t, _) = build_localization_triple(cat, triple()?)?;
            Ok(check_equivalence_embedding(&HomotopyCategory::new(cat, &t))?)
        }
        "check-transport" => {
            Args::parse(cmd, raw, &[])?.exactly::<0>(cmd, "")?;
            let s = TriangleStructure::new(cat, triple()?)?;
            Ok(check_triangle_transport(&s, budget)?)
        }
        "report-all" => {
            Args::parse(cmd, raw, &[])?.exactly::<0>(cmd, "")?;
            report_all(ws, opts)
        }
        other => Err(CliError::UnknownCommand(other.to_string())),
    }
}

fn split_arrow(s: &str) -> Option<(String, String)> {
    let (a, b) = s.split_once("->").or_else(|| s.split_once('→'))?;
    (!a.is_empty() && !b.is_empty()).then(|| (a.to_string(), b.to_string()))
}

/// The combination of the hom basis given by `coeffs`, or the first basis vector.
fn pick_morphism(ws: &Workspace, a: &stabcat::Module, b: &stabcat::Module, coeffs: Option<&str>) -> CliResult<Morphism> {
    let h = ws.category.hom(a, b)?;
    let field = ws.field;
    let values: Vec<Scalar> = match coeffs {
        Some(list) => {
            let parsed = list.split(',').map(|c| c.trim().parse::<i64>().map(|v| field.from_i64(v))).collect::<Result<Vec<_>, _>>();
            parsed.map_err(|_| CliError::Argument(format!("--coeffs expects comma separated integers, got '{list}'")))?
        }
        None if h.dim() == 0 => Vec::new(),
        None => (0..h.dim()).map(|i| field.from_i64(i64::from(i == 0))).collect(),
    };
    if values.len() != h.dim() {
        return Err(CliError::Argument(format!("Hom({}, {}) has dimension {}, got {} coefficients", a.label(), b.label(), h.dim(), values.len())));
    }
    Ok(h.combine(&values))
}

fn universal<F: StableFunctor>(ho: &HomotopyCategory<'_>, func: F, budget: &Budget) -> CliResult<Report> {
    let u = universal_factorization(ho, &func, budget)?;
    let mut r = u.report;
    for e in &u.entries {
        r.fact(format!("F'({})", e.ho), &e.value);
    }
    Ok(r)
}

fn fix_triangles(s: &TriangleStructure<'_>) -> CliResult<Report> {
    let mut r = Report::new("fix-triangles");
    for a in s.registry_in(s.c())? {
        let t = s.fixed_right(&a)?;
        r.fact(format!("right {}", a.label()), t.conflation()?);
        r.fact(format!("Sigma({})", a.label()), t.u_obj());
    }
    for a in s.registry_in(s.f())? {
        let t = s.fixed_left(&a)?;
        r.fact(format!("left {}", a.label()), t.conflation()?);
        r.fact(format!("Omega({})", a.label()), t.u_obj());
    }
    Ok(r)
}

/// One pipeline stage; an error becomes a failed check carrying the message.
fn stage(all: &mut Report, prefix: &str, result: CliResult<Report>) {
    match result {
        Ok(r) => all.absorb(prefix, r),
        Err(e) => {
            all.fail(prefix, e.to_string());
        }
    }
}

fn triple_pipeline(ws: &Workspace, h: &HoveyTriple, budget: &Budget, all: &mut Report) {
    let cat = &ws.category;
    let p = |s: &str| format!("{}/{}", h.name, s);
    stage(all, &p("check-cotorsion/pair1"), check_cotorsion_pair(cat, &h.pair1).map_err(Into::into));
    stage(all, &p("check-cotorsion/pair2"), check_cotorsion_pair(cat, &h.pair2).map_err(Into::into));
    stage(all, &p("check-hovey"), check_hovey_triple(cat, h, budget).map_err(Into::into));
    let (t, built) = match build_localization_triple(cat, h) {
        Ok(v) => v,
        Err(e) => {
            all.fail(p("build-localization"), e.to_string());
            return;
        }
    };
    all.absorb(&p("build-localization"), built);
    stage(all, &p("check-localization"), check_localization_triple(cat, &t).map_err(Into::into));
    let s = match TriangleStructure::new(cat, h) {
        Ok(s) => s,
        Err(e) => {
            all.fail(p("fix-triangles"), e.to_string());
            return;
        }
    };
    stage(all, &p("fix-triangles"), fix_triangles(&s));
    for (label, kind) in [("subfactor", FactorKind::Subfactor), ("stable", FactorKind::Stable)] {
        stage(all, &p(&format!("check-rt/{label}")), verify_rt_axioms(&RightFactor::new(&s, kind), budget).map_err(Into::into));
        stage(all, &p(&format!("check-lt/{label}")), verify_lt_axioms(&LeftFactor::new(&s, kind), budget).map_err(Into::into));
    }
    stage(all, &p("check-prt"), verify_prt_axioms(&s, budget).map_err(Into::into));
    for (sl, side) in [("right", Side::Right), ("left", Side::Left)] {
        for (tl, target) in [("whole", StabilizingTarget::Whole), ("intersection", StabilizingTarget::Intersection)] {
            stage(all, &p(&format!("check-stabilizing/{sl}/{tl}")), check_stabilizing(&s, side, target, budget).map_err(Into::into));
        }
    }
    stage(all, &p("check-prepartial/direct"), check_pre_partial_conditions(&s, PrePartialMode::Direct, budget).map_err(Into::into));
    stage(all, &p("check-prepartial/side-flip"), check_pre_partial_conditions(&s, PrePartialMode::SideFlip, budget).map_err(Into::into));
    stage(all, &p("check-pretriangulated"), verify_pretriangulated(&s, budget).map_err(Into::into));
    stage(all, &p("check-adjunction"), check_adjunction(&s, budget).map_err(Into::into));
    let ho = HomotopyCategory::new(cat, &t);
    stage(all, &p("ho-hom"), check_homotopy(&ho, budget).map_err(Into::into));
    stage(all, &p("universal"), universal(&ho, GammaFunctor { ho: &ho }, budget));
    stage(all, &p("check-transport"), check_triangle_transport(&s, budget).map_err(Into::into));
}

/// Every stage for the selected triple, or for each declared triple.
pub fn report_all(ws: &Workspace, opts: &Options) -> CliResult<Report> {
    let mut all = Report::new("report-all");
    all.fact("workspace", &ws.source);
    all.fact("registry", listed(ws.registry().iter().map(|m| m.label())));
    let triples: Vec<&HoveyTriple> = match &opts.triple {
        Some(n) => vec![ws.triple(Some(n))?],
        None => ws.triples.iter().collect(),
    };
    if triples.is_empty() {
        return Err(CliError::Unresolved("the workspace declares no hovey triple".into()));
    }
    for h in triples {
        all.fact(format!("{}/X", h.name), h.x.describe());
        triple_pipeline(ws, h, &opts.budget, &mut all);
    }
    Ok(all)
}
