use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use infcone::cones::{compute_cone, ConeKind};
use infcone::fixtures;
use infcone::ideal::{groebner_basis, Budget};
use infcone::projections::{sheet_count, LinearSubspace, DEFAULT_RETRIES};
use infcone::{parse_polynomial, MonomialOrder, VariableContext};

fn groebner(c: &mut Criterion) {
    let ctx = VariableContext::new(&["x", "y", "z", "w"]).unwrap();
    let cyclic: Vec<_> = [
        "x + y + z + w",
        "x*y + y*z + z*w + w*x",
        "x*y*z + y*z*w + z*w*x + w*x*y",
        "x*y*z*w - 1",
    ]
    .iter()
    .map(|s| parse_polynomial(s, &ctx).unwrap())
    .collect();
    let mut group = c.benchmark_group("groebner");
    for (name, order) in [
        ("grevlex", MonomialOrder::GrevLex),
        ("lex", MonomialOrder::Lex),
    ] {
        group.bench_with_input(BenchmarkId::new("cyclic4", name), &order, |b, order| {
            b.iter(|| groebner_basis(&cyclic, &ctx, order, &Budget::default()).unwrap())
        });
    }
    group.finish();
}

fn cones(c: &mut Criterion) {
    let budget = Budget::default();
    let mut group = c.benchmark_group("cones");
    group.sample_size(20);
    for f in [fixtures::PARABOLA, fixtures::CUSP, fixtures::TWISTED] {
        let x = f.variety(&budget).unwrap();
        for kind in [ConeKind::C3, ConeKind::C4, ConeKind::C5] {
            group.bench_function(BenchmarkId::new(f.name, kind), |b| {
                b.iter(|| compute_cone(kind, &x, &Budget::default()).unwrap())
            });
        }
    }
    group.finish();
}

fn sheets(c: &mut Criterion) {
    let budget = Budget::default();
    let x = fixtures::TWISTED.variety(&budget).unwrap();
    let w = LinearSubspace::coordinate(3, &[0, 1]).unwrap();
    c.bench_function("sheets/twisted", |b| {
        b.iter(|| sheet_count(&x, &w, 1, 3, DEFAULT_RETRIES, &Budget::default()).unwrap())
    });
}

criterion_group!(benches, groebner, cones, sheets);
criterion_main!(benches);
