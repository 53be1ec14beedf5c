use criterion::{criterion_group, criterion_main, BatchSize, Criterion};

use qng_core::enumeration::{enumerate_forms, scan, ScanFilter, ScanOptions};
use qng_core::spectra::{char_poly_exact, q_matrix, q_spectrum};
use qng_core::theorems::{proof_check_thm12, proof_check_thm15, Checker};
use qng_core::Graph;

fn spectra(c: &mut Criterion) {
    let petersen = Graph::petersen();
    c.bench_function("q_spectrum petersen", |b| b.iter(|| q_spectrum(&petersen)));
    c.bench_function("exact charpoly petersen", |b| b.iter(|| char_poly_exact(q_matrix(&petersen))));
    c.bench_function("exact spectrum petersen", |b| {
        b.iter_batched(|| char_poly_exact(q_matrix(&petersen)), |p| p.spectrum(), BatchSize::SmallInput)
    });
}

fn enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumeration");
    group.sample_size(10);
    group.bench_function("classes n=7", |b| b.iter(|| enumerate_forms(7).unwrap()));
    let pred = "thm 1.2".parse().unwrap();
    group.bench_function("lower bound census n=7", |b| {
        b.iter(|| scan(7, ScanFilter::ALL, &pred, ScanOptions { jobs: 1, checker: Checker::default() }).unwrap())
    });
    group.finish();
}

fn proofs(c: &mut Criterion) {
    let mut group = c.benchmark_group("proof replay");
    group.sample_size(10);
    group.bench_function("lower bound n=50 all d2", |b| {
        b.iter(|| (1..=48).map(|d2| proof_check_thm12(50, d2).unwrap()).collect::<Vec<_>>())
    });
    group.bench_function("bipartite bound n=8..=50", |b| {
        b.iter(|| (8..=50).map(|n| proof_check_thm15(n).unwrap()).collect::<Vec<_>>())
    });
    group.finish();
}

criterion_group!(benches, spectra, enumeration, proofs);
criterion_main!(benches);
