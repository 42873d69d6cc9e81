use criterion::{criterion_group, criterion_main, Criterion};
use snarklab_core::construction::{apply_recipe, random_recipe};
use snarklab_core::cycle_cover::{cover_for_recipe, exact_scc};
use snarklab_core::defect::colouring_defect;
use snarklab_core::families;
use snarklab_core::pm_cover::{find_4cover, perfect_matching_index};

fn defect_bench(c: &mut Criterion) {
    let pg = families::petersen();
    c.bench_function("colouring_defect/petersen", |b| {
        b.iter(|| colouring_defect(std::hint::black_box(&pg)).unwrap())
    });
}

fn pmi_bench(c: &mut Criterion) {
    let pg = families::petersen();
    let j5 = families::flower(5);
    c.bench_function("pmi/petersen", |b| {
        b.iter(|| perfect_matching_index(std::hint::black_box(&pg), 5).unwrap())
    });
    c.bench_function("4cover_refutation/flower5", |b| {
        b.iter(|| find_4cover(std::hint::black_box(&j5)).unwrap())
    });
}

fn generator_bench(c: &mut Criterion) {
    let pool = [families::k4(), families::k33(), families::prism3(), families::cube()];
    let recipe = random_recipe(1, 3, &pool).unwrap();
    c.bench_function("apply_recipe/3ops", |b| {
        b.iter(|| apply_recipe(std::hint::black_box(&recipe)).unwrap())
    });
    let applied = apply_recipe(&recipe).unwrap();
    c.bench_function("cover_for_recipe/3ops", |b| {
        b.iter(|| cover_for_recipe(std::hint::black_box(&applied.graph), &recipe).unwrap())
    });
}

fn exact_scc_bench(c: &mut Criterion) {
    let pg = families::petersen();
    c.bench_function("exact_scc/petersen", |b| {
        b.iter(|| exact_scc(std::hint::black_box(&pg), 14).unwrap())
    });
}

criterion_group!(benches, defect_bench, pmi_bench, generator_bench, exact_scc_bench);
criterion_main!(benches);
