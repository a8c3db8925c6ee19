use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use sieve_lab::cspverify::{verify, CspInstance, InstanceOptions, Statement};
use sieve_lab::qseries::{eval_at_unity_root, q_binomial};
use sieve_lab::{enumerate_multidissections, Family};
use sieve_lab_bench::SIEVING_CELLS;

fn enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate");
    for family in [Family::A, Family::C, Family::D] {
        for (n, k) in SIEVING_CELLS {
            let n = if family == Family::A { n } else { n / 2 };
            group.bench_with_input(BenchmarkId::new(family.to_string(), format!("{n}-{k}")), &(n, k), |b, &(n, k)| {
                b.iter(|| enumerate_multidissections(family, black_box(n), black_box(k)).unwrap().len())
            });
        }
    }
    group.finish();
}

fn csp(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify");
    group.sample_size(10);
    for (n, k) in SIEVING_CELLS {
        group.bench_with_input(BenchmarkId::new("type-a", format!("{n}-{k}")), &(n, k), |b, &(n, k)| {
            b.iter(|| {
                let inst = CspInstance::for_statement(Statement::TypeA, n, k, InstanceOptions::default()).unwrap();
                verify(inst).unwrap().csp_holds
            })
        });
    }
    group.finish();
}

fn root_evaluation(c: &mut Criterion) {
    let p = q_binomial(24, 12);
    c.bench_function("eval_at_unity_root/binomial-24-12", |b| {
        b.iter(|| (1..=12).map(|d| eval_at_unity_root(black_box(&p), 12, d)).collect::<Vec<_>>())
    });
}

criterion_group!(benches, enumeration, csp, root_evaluation);
criterion_main!(benches);
