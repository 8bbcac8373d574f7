use criterion::{black_box, criterion_group, criterion_main, Criterion};
use tribound_bench::{class_graphs, named_graphs};
use tribound_core::canon::canonical_form;
use tribound_core::decomposition::gallai_edmonds;
use tribound_core::solvers::{chromatic_number, independence_number, matching_number};

fn named(c: &mut Criterion) {
    for (name, g) in named_graphs() {
        c.bench_function(&format!("matching/{name}"), |b| b.iter(|| matching_number(black_box(&g))));
        c.bench_function(&format!("alpha/{name}"), |b| b.iter(|| independence_number(black_box(&g))));
        if g.order() <= 16 {
            c.bench_function(&format!("canonical/{name}"), |b| {
                b.iter(|| canonical_form(black_box(&g)))
            });
            c.bench_function(&format!("chi/{name}"), |b| b.iter(|| chromatic_number(black_box(&g))));
        }
    }
}

fn class_sweeps(c: &mut Criterion) {
    let graphs = class_graphs(9);
    let mut group = c.benchmark_group("class9");
    group.sample_size(10);
    group.bench_function("alpha", |b| {
        b.iter(|| graphs.iter().map(|g| independence_number(g).value).sum::<usize>())
    });
    group.bench_function("matching", |b| {
        b.iter(|| graphs.iter().map(matching_number).sum::<usize>())
    });
    group.bench_function("gallai_edmonds", |b| {
        b.iter(|| graphs.iter().map(|g| gallai_edmonds(g).deficiency).sum::<i64>())
    });
    group.bench_function("canonical", |b| {
        b.iter(|| graphs.iter().map(|g| canonical_form(g).unwrap()).collect::<Vec<_>>())
    });
    group.finish();
}

criterion_group!(benches, named, class_sweeps);
criterion_main!(benches);
