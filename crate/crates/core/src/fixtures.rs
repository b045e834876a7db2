//! Small self-injective algebras used throughout the tests and benchmarks.

use std::sync::Arc;

use crate::additive::{Category, Subcategory};
use crate::cotorsion::{HoveyTriple, WitnessProvider};
use crate::linalg::{FieldSpec, Matrix};
use crate::module::{parse_relation, Algebra, Arrow, Module};

/// `k[x]/(x²)` over GF(2) with its simple `S` and regular module `A`.
pub struct DualNumbers {
    pub algebra: Arc<Algebra>,
    pub s: Module,
    pub a: Module,
}

pub fn dual_numbers() -> DualNumbers {
    let f = FieldSpec::Prime(2);
    let arrows = vec![Arrow { label: "x".into(), source: 0, target: 0 }];
    let rel = parse_relation(f, &arrows, "x*x").expect("valid relation");
    let algebra = Arc::new(Algebra::build(f, vec!["v".into()], arrows, vec![rel], 4).expect("finite"));
    let s = Module::new(algebra.clone(), vec![1], vec![Matrix::from_rows(f, &[vec![0]]).unwrap()])
        .expect("valid")
        .with_name("S");
    let a = Module::new(algebra.clone(), vec![2], vec![Matrix::from_rows(f, &[vec![0, 0], vec![1, 0]]).unwrap()])
        .expect("valid")
        .with_name("A");
    DualNumbers { algebra, s, a }
}

/// The two-cycle `1 ⇄ 2` with all length-two paths zero, over GF(2).
pub struct TwoCycle {
    pub algebra: Arc<Algebra>,
    pub s1: Module,
    pub s2: Module,
    pub p1: Module,
    pub p2: Module,
}

pub fn two_cycle() -> TwoCycle {
    let f = FieldSpec::Prime(2);
    let arrows = vec![
        Arrow { label: "a".into(), source: 0, target: 1 },
        Arrow { label: "b".into(), source: 1, target: 0 },
    ];
    let rels = vec![
        parse_relation(f, &arrows, "a*b").expect("valid"),
        parse_relation(f, &arrows, "b*a").expect("valid"),
    ];
    let algebra = Arc::new(Algebra::build(f, vec!["1".into(), "2".into()], arrows, rels, 4).expect("finite"));
    let m = |dims: Vec<usize>, a: Vec<Vec<i64>>, b: Vec<Vec<i64>>, name: &str| {
        let am = if a.is_empty() { Matrix::zeros(f, dims[1], dims[0]) } else { Matrix::from_rows(f, &a).unwrap() };
        let bm = if b.is_empty() { Matrix::zeros(f, dims[0], dims[1]) } else { Matrix::from_rows(f, &b).unwrap() };
        Module::new(algebra.clone(), dims, vec![am, bm]).expect("valid").with_name(name)
    };
    TwoCycle {
        s1: m(vec![1, 0], vec![], vec![], "S1"),
        s2: m(vec![0, 1], vec![], vec![], "S2"),
        p1: m(vec![1, 1], vec![vec![1]], vec![vec![0]], "P1"),
        p2: m(vec![1, 1], vec![vec![0]], vec![vec![1]], "P2"),
        algebra: algebra.clone(),
    }
}

/// The ground field GF(2) as a one-vertex algebra without arrows.
pub fn semisimple() -> (Arc<Algebra>, Module) {
    let f = FieldSpec::Prime(2);
    let algebra = Arc::new(Algebra::build(f, vec!["v".into()], vec![], vec![], 1).expect("finite"));
    let k = Module::simple(algebra.clone(), 0).with_name("K");
    (algebra, k)
}

/// `D2` with registry `S, A`.
pub fn d2_category() -> (Category, DualNumbers) {
    let d = dual_numbers();
    (Category::new(d.algebra.clone(), vec![d.s.clone(), d.a.clone()]), d)
}

/// The two-cycle with registry `S1, S2, P1, P2`.
pub fn n2_category() -> (Category, TwoCycle) {
    let c = two_cycle();
    let registry = vec![c.s1.clone(), c.s2.clone(), c.p1.clone(), c.p2.clone()];
    (Category::new(c.algebra.clone(), registry), c)
}

/// `(all, add(A), all)` on `D2`.
pub fn d2_frobenius(cat: &Category, d: &DualNumbers) -> HoveyTriple {
    let all = Subcategory::all("A");
    HoveyTriple::new(cat, "FT", all.clone(), Subcategory::generated("W", vec![d.a.clone()]), all, WitnessProvider::Frobenius)
        .expect("membership tests succeed")
}

/// `(all, add(P1⊕P2), all)` on the two-cycle.
pub fn n2_frobenius(cat: &Category, c: &TwoCycle) -> HoveyTriple {
    let all = Subcategory::all("A");
    let p = Subcategory::generated("W", vec![c.p1.clone(), c.p2.clone()]);
    HoveyTriple::new(cat, "N2F", all.clone(), p, all, WitnessProvider::Frobenius).expect("membership tests succeed")
}

/// `(add(P1⊕P2), all, all)` on the two-cycle.
pub fn n2_projective(cat: &Category, c: &TwoCycle) -> HoveyTriple {
    let all = Subcategory::all("A");
    let p = Subcategory::generated("C", vec![c.p1.clone(), c.p2.clone()]);
    HoveyTriple::new(cat, "PT", p, all.clone(), all, WitnessProvider::Frobenius).expect("membership tests succeed")
}

/// `(all, all, all)`, whose homotopy category is zero.
pub fn trivial_triple(cat: &Category) -> HoveyTriple {
    let all = Subcategory::all("A");
    HoveyTriple::new(cat, "TT", all.clone(), all.clone(), all, WitnessProvider::TrivialAll).expect("membership tests succeed")
}
