use std::hint::black_box;

use coxorbit::checks;
use coxorbit::weyl::{enumerate_group, DEFAULT_CAP};
use coxorbit::{build_root_system, Family, GroupTable, IJKDatum};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn bruhat_leq(c: &mut Criterion) {
    let mut group = c.benchmark_group("bruhat_leq");
    for (f, n) in [(Family::A, 5), (Family::B, 4), (Family::D, 5)] {
        let sys = build_root_system(f, n).unwrap();
        let elements = enumerate_group(&sys, DEFAULT_CAP).unwrap();
        let pairs: Vec<_> = elements.iter().step_by(37).flat_map(|u| elements.iter().step_by(41).map(move |w| (u, w))).collect();
        group.bench_with_input(BenchmarkId::new("element", format!("{f}{n}")), &pairs, |b, pairs| {
            b.iter(|| pairs.iter().filter(|(u, w)| u.bruhat_leq(w).unwrap()).count())
        });
        let table = GroupTable::new(&sys, DEFAULT_CAP).unwrap();
        let idx: Vec<(usize, usize)> =
            pairs.iter().map(|(u, w)| (table.index_of(u).unwrap(), table.index_of(w).unwrap())).collect();
        group.bench_with_input(BenchmarkId::new("table", format!("{f}{n}")), &idx, |b, idx| {
            b.iter(|| idx.iter().filter(|&&(u, w)| table.bruhat_leq(u, w)).count())
        });
    }
    group.finish();
}

fn build_poset(c: &mut Criterion) {
    let mut group = c.benchmark_group("build_poset");
    group.sample_size(10);
    for (n, r) in [(5, 2), (6, 2), (6, 3)] {
        let datum = IJKDatum::type_a(n, r).unwrap();
        group.bench_function(format!("A{}({n},{r})", n - 1), |b| b.iter(|| black_box(datum.build_poset(DEFAULT_CAP).unwrap())));
    }
    group.finish();
}

fn prop_equiv(c: &mut Criterion) {
    let mut group = c.benchmark_group("prop_equiv");
    group.sample_size(10);
    for (n, r) in [(4, 2), (5, 2)] {
        group.bench_function(format!("({n},{r})"), |b| b.iter(|| checks::prop_equiv(n, r).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, bruhat_leq, build_poset, prop_equiv);
criterion_main!(benches);
