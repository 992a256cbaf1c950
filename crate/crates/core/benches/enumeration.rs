//! Sequential against rayon-parallel execution of the enumeration oracle.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use motzkin_core::bijection::phi3;
use motzkin_core::oracle::{distribution_with, path_distribution, DistOptions, StatSpec};
use motzkin_core::perm::ClassId;
use motzkin_core::qpoly::MultiPoly;
use motzkin_core::Exec;

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn distributions(c: &mut Criterion) {
    let mut group = c.benchmark_group("distribution");
    group.sample_size(10);
    for (class, n) in [(ClassId::S321B3142, 8), (ClassId::I4321, 11)] {
        for (label, exec) in MODES {
            let options = DistOptions { exec, allow_large: false };
            group.bench_with_input(BenchmarkId::new(format!("{class}/{label}"), n), &n, |b, &n| {
                b.iter(|| distribution_with(class, n, StatSpec::JointFpExcCrsNes, options).unwrap())
            });
        }
    }
    group.finish();
}

fn transport(c: &mut Criterion) {
    let mut group = c.benchmark_group("transport-phi3");
    group.sample_size(10);
    let n = 12;
    for (label, exec) in MODES {
        group.bench_with_input(BenchmarkId::new(label, n), &n, |b, &n| {
            b.iter(|| {
                path_distribution(n, MultiPoly::YQ, exec, |p| {
                    let sigma = phi3(p);
                    vec![sigma.excedances().len() as u32, sigma.crossings() as u32]
                })
            })
        });
    }
    group.finish();
}

criterion_group!(benches, distributions, transport);
criterion_main!(benches);
