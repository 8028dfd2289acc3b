use std::hint::black_box;

use criterion::{BenchmarkId, Criterion};

use hsdepth_cli::analyze_text;
use hsdepth_cli::corpus::{curated_instances, run_corpus};
use hsdepth_core::graded::{GradedIdeal, GradedRing};
use hsdepth_core::groebner::buchberger;
use hsdepth_core::hilbert::hilbert_table;
use hsdepth_core::ideal::LocalIdeal;
use hsdepth_core::semigroup::{NumericalSemigroup, SemigroupIdeal, SemigroupRing};
use hsdepth_core::PrimeField;

fn semigroup_powers(c: &mut Criterion) {
    let mut group = c.benchmark_group("semigroup_table");
    for gens in [&[3u32, 4, 5][..], &[4, 5, 11], &[7, 9, 11, 13]] {
        let ring = SemigroupRing::new(NumericalSemigroup::new(gens).unwrap(), PrimeField::default());
        let m = SemigroupIdeal::maximal(&ring);
        group.bench_with_input(BenchmarkId::from_parameter(format!("{gens:?}")), &m, |b, m| {
            b.iter(|| hilbert_table(black_box(m), 12).unwrap())
        });
    }
    group.finish();
}

fn graded_powers(c: &mut Criterion) {
    let ring = GradedRing::new(PrimeField::default(), vec!["x".into(), "y".into(), "z".into()]).unwrap();
    let m = GradedIdeal::maximal(&ring);
    let mut group = c.benchmark_group("graded");
    for k in [2u32, 3, 4] {
        let mk = m.power(k).unwrap();
        group.bench_with_input(BenchmarkId::new("colength_of_power", k), &mk, |b, mk| {
            b.iter(|| mk.power(2).unwrap().colength().unwrap())
        });
    }
    let p = ring.poly();
    let gens: Vec<_> = (0..3)
        .map(|i| {
            let v = p.var(i);
            let w = p.var((i + 1) % 3);
            p.add(&p.pow(&v, 3), &p.mul(&p.mul(&v, &w), &w))
        })
        .collect();
    group.bench_function("buchberger_cubics", |b| b.iter(|| buchberger(p, black_box(&gens))));
    group.finish();
}

fn pipeline(c: &mut Criterion) {
    let mut group = c.benchmark_group("analyze");
    group.sample_size(10);
    for inst in curated_instances().into_iter().filter(|i| ["01-", "02-", "12-", "13-"].iter().any(|p| i.name.starts_with(p))) {
        group.bench_function(inst.name.as_str(), |b| b.iter(|| analyze_text(black_box(&inst.request), false).unwrap()));
    }
    group.bench_function("curated_corpus", |b| b.iter(|| run_corpus(&curated_instances(), 1)));
    group.finish();
}

pub fn benchmarks(c: &mut Criterion) {
    semigroup_powers(c);
    graded_powers(c);
    pipeline(c);
}
