use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use stabcat::homotopy::check_homotopy;
use stabcat::module::direct_sum;
use stabcat::triangles::{verify_rt_axioms, FactorKind, RightFactor};
use stabcat::{build_localization_triple, check_hovey_triple, Budget, HomotopyCategory, TriangleStructure};
use stabcat_bench::fixture;
use stabcat_cli::{report_all, Options};

fn bench_hom(c: &mut Criterion) {
    let ws = fixture("n2.ws");
    let parts: Vec<_> = ["P1", "P2", "S1"].iter().map(|n| ws.module(n).unwrap().clone()).collect();
    let big = direct_sum(&ws.algebra, &parts).unwrap().object;
    c.bench_function("hom_basis P1+P2+S1", |b| b.iter(|| stabcat::module::hom_basis(black_box(&big), black_box(&big)).unwrap()));
    let x = ws.subcategory("P").unwrap();
    c.bench_function("factor_hom P1+P2+S1 modulo P", |b| {
        b.iter(|| {
            let cat = stabcat::Category::new(ws.algebra.clone(), ws.registry().to_vec());
            cat.factor_hom(&x, black_box(&big), black_box(&big)).unwrap()
        })
    });
}

fn bench_checks(c: &mut Criterion) {
    let ws = fixture("n2.ws");
    let h = ws.triple(Some("N2F")).unwrap();
    let full = Budget::full();
    c.bench_function("check_hovey_triple N2F", |b| b.iter(|| check_hovey_triple(&ws.category, h, &Budget::default()).unwrap()));
    c.bench_function("verify_rt_axioms N2F full", |b| {
        b.iter(|| {
            let s = TriangleStructure::new(&ws.category, h).unwrap();
            verify_rt_axioms(&RightFactor::new(&s, FactorKind::Subfactor), &full).unwrap()
        })
    });
    c.bench_function("check_homotopy N2F full", |b| {
        b.iter(|| {
            let (t, _) = build_localization_triple(&ws.category, h).unwrap();
            check_homotopy(&HomotopyCategory::new(&ws.category, &t), &full).unwrap()
        })
    });
}

fn bench_report_all(c: &mut Criterion) {
    let mut group = c.benchmark_group("report-all");
    group.sample_size(10);
    for name in ["d2.ws", "n2.ws", "tt.ws"] {
        let ws = fixture(name);
        group.bench_function(name, |b| b.iter(|| report_all(&ws, &Options::default()).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, bench_hom, bench_checks, bench_report_all);
criterion_main!(benches);
