use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use arcsmc::arc::{count_noncrossing_subsets, enumerate_arcs};
use arcsmc::checks::{self, Suite};
use arcsmc::mutation::hasse;
use arcsmc::Exec;

const MODES: [(&str, Exec); 2] = [
    ("sequential", Exec::Sequential),
    ("parallel", Exec::Parallel),
];

fn nad_count(c: &mut Criterion) {
    let mut group = c.benchmark_group("nad_count");
    for n in [6, 7] {
        let pool = enumerate_arcs(n).unwrap();
        for (name, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(name, n), &pool, |b, pool| {
                b.iter(|| count_noncrossing_subsets(black_box(pool), exec))
            });
        }
    }
    group.finish();
}

fn hasse_build(c: &mut Criterion) {
    let mut group = c.benchmark_group("hasse");
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::new(name, 5), |b| {
            b.iter(|| hasse(black_box(5), exec))
        });
    }
    group.finish();
}

fn hom_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("check_homs");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::new(name, 4), |b| {
            b.iter(|| checks::run(Suite::Homs, black_box(4), exec).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, nad_count, hasse_build, hom_sweep);
criterion_main!(benches);
