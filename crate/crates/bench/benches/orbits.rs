use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use tenrec::equivalence::compare_with_oracle;
use tenrec::{iterate, stability, GeneralSolution, Rational};
use tenrec_bench::{constant, period_two, seeds};

fn bench_iterate(c: &mut Criterion) {
    let ics = seeds();
    let mut group = c.benchmark_group("iterate");
    for horizon in [100usize, 300] {
        let coeffs = constant((3, 2), (1, 5));
        group.bench_with_input(BenchmarkId::new("constant", horizon), &horizon, |b, &h| {
            b.iter(|| iterate(black_box(&ics), black_box(&coeffs), h).unwrap())
        });
    }
    group.finish();
}

fn bench_closed_form(c: &mut Criterion) {
    let ics = seeds();
    let coeffs = period_two();
    c.bench_function("general_solution_sweep_200", |b| {
        b.iter(|| {
            let mut sol = GeneralSolution::new(&ics, &coeffs);
            for i in 0..200 {
                black_box(sol.at_index(i).unwrap());
            }
        })
    });
    let coeffs = constant((-1, 1), (2, 7));
    c.bench_function("compare_with_oracle_300", |b| {
        b.iter(|| compare_with_oracle(black_box(&ics), black_box(&coeffs), 300).unwrap())
    });
}

fn bench_stability(c: &mut Criterion) {
    let a = Rational::new(7, 3);
    let b = Rational::new(-2, 5);
    c.bench_function("stability", |bch| {
        bch.iter(|| stability(black_box(&a), black_box(&b)).unwrap())
    });
}

criterion_group!(benches, bench_iterate, bench_closed_form, bench_stability);
criterion_main!(benches);
