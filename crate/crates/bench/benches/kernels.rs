//! Benchmarks for the exact kernels: the 2-matching DP, symbolic minors,
//! critical-ideal generation, Groebner verification of path bases, and
//! integer Smith normal form.

use criterion::{black_box, criterion_group, criterion_main, Criterion};

use critideals::intalg::{laplacian_matrix, smith_normal_form};
use critideals::laplacian::{generalized_laplacian_tree, MinorCache};
use critideals::matching::nu2;
use critideals::poly::Var;
use critideals::tree::{caterpillar, random_tree, regular_tree, wired_regular};
use critideals::{critical_ideal, groebner_check_paths};

fn bench_nu2(c: &mut Criterion) {
    let big = regular_tree(4, 6).unwrap();
    c.bench_function("nu2 regular_tree(4,6)", |b| {
        b.iter(|| black_box(nu2(black_box(&big))))
    });
}

fn bench_minor(c: &mut Criterion) {
    let t = caterpillar();
    let lap = generalized_laplacian_tree(&t);
    let all: Vec<Var> = t.vertices().collect();
    c.bench_function("full symbolic determinant, 9-vertex caterpillar", |b| {
        b.iter(|| {
            let mut cache = MinorCache::new(&lap).unwrap();
            black_box(cache.minor(&all, &all).unwrap())
        })
    });
}

fn bench_critical_ideal(c: &mut Criterion) {
    let t = critideals::tree::j_tree(5, 4, 3).unwrap();
    c.bench_function("critical_ideal J(5,4,3) at j=9", |b| {
        b.iter(|| black_box(critical_ideal(black_box(&t), 9).unwrap()))
    });
}

fn bench_groebner_paths(c: &mut Criterion) {
    let t = random_tree(12, 42).unwrap();
    c.bench_function("groebner_check_paths random 12-vertex tree", |b| {
        b.iter(|| black_box(groebner_check_paths(black_box(&t)).unwrap()))
    });
}

fn bench_snf(c: &mut Criterion) {
    let wired = wired_regular(5, 3).unwrap();
    let lap = laplacian_matrix(&wired);
    c.bench_function("smith_normal_form 27x27 wired Laplacian", |b| {
        b.iter(|| black_box(smith_normal_form(black_box(&lap), false)))
    });
}

criterion_group!(
    benches,
    bench_nu2,
    bench_minor,
    bench_critical_ideal,
    bench_groebner_paths,
    bench_snf
);
criterion_main!(benches);
