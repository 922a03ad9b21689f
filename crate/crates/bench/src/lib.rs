//! Fixtures and benchmark groups for intlin-core.

use criterion::{BenchmarkId, Criterion};
use intlin_core::generate::{generate, generate_rhs, MatrixClass};
use intlin_core::rational::ratio;
use intlin_core::regularity::{is_regular_exact, regularity_sufficient};
use intlin_core::systems::{enclosure, hull_exact};
use intlin_core::{EnclosureOptions, IntervalMatrix, IntervalVector, Method};

/// A seeded `n x n` system whose matrix is proven regular by condition 1.
pub fn regular_system(n: usize) -> (IntervalMatrix, IntervalVector) {
    (0u64..)
        .map(|s| (generate(n, n, s, &ratio(1, 8), MatrixClass::General).unwrap(), s))
        .find(|(a, _)| regularity_sufficient(a, 1).unwrap().is_proven())
        .map(|(a, s)| (a, generate_rhs(n, s, &ratio(1, 4))))
        .unwrap()
}

pub fn m_matrix_system(n: usize) -> (IntervalMatrix, IntervalVector) {
    let a = generate(n, n, 7, &ratio(1, 2), MatrixClass::MMatrix).unwrap();
    (a, generate_rhs(n, 7, &ratio(1, 2)))
}

pub fn hull(c: &mut Criterion) {
    let mut g = c.benchmark_group("hull_exact");
    for n in [2, 3, 4, 5] {
        let (a, b) = regular_system(n);
        g.bench_with_input(BenchmarkId::from_parameter(n), &(a, b), |bench, (a, b)| {
            bench.iter(|| hull_exact(a, b).unwrap())
        });
    }
    g.finish();
}

pub fn enclosures(c: &mut Criterion) {
    let opts = EnclosureOptions::default();
    let mut g = c.benchmark_group("enclosure");
    for n in [3, 6] {
        let (a, b) = m_matrix_system(n);
        for m in Method::ALL {
            g.bench_with_input(BenchmarkId::new(m.name(), n), &(&a, &b), |bench, (a, b)| {
                bench.iter(|| enclosure(a, b, m, &opts).unwrap())
            });
        }
    }
    g.finish();
}

pub fn regularity(c: &mut Criterion) {
    let mut g = c.benchmark_group("regularity");
    for n in [3, 5, 7] {
        let (a, _) = regular_system(n);
        g.bench_with_input(BenchmarkId::new("exact", n), &a, |bench, a| {
            bench.iter(|| is_regular_exact(a).unwrap())
        });
        g.bench_with_input(BenchmarkId::new("cond1", n), &a, |bench, a| {
            bench.iter(|| regularity_sufficient(a, 1).unwrap())
        });
    }
    g.finish();
}

pub fn inverse(c: &mut Criterion) {
    let mut g = c.benchmark_group("inverse_exact");
    g.sample_size(10);
    for n in [2, 3, 4] {
        let (a, _) = regular_system(n);
        g.bench_with_input(BenchmarkId::from_parameter(n), &a, |bench, a| {
            bench.iter(|| intlin_core::inverse::inverse_exact(a).unwrap())
        });
    }
    g.finish();
}
