use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use qpart_bench::sample_systems;
use qpart_core::vpf::{vpf_oracle_table, CayleyGrid};
use qpart_core::{
    gauss_oracle, max_coeff, partition_dp, poly_part_max, ClosedForm, GaussEngine, GeneratorSet,
    Parity,
};

fn partitions(c: &mut Criterion) {
    let mut group = c.benchmark_group("partition");
    let d = GeneratorSet::ladder(6);
    for s_max in [200usize, 2000] {
        group.bench_with_input(BenchmarkId::new("dp", s_max), &s_max, |b, &s| {
            b.iter(|| partition_dp(black_box(&d), s).unwrap())
        });
    }
    group.bench_function("quasipolynomial_w6", |b| b.iter(|| ClosedForm::W6.quasipolynomial()));
    let qp = ClosedForm::W6.quasipolynomial();
    group.bench_function("evaluate_w6", |b| b.iter(|| qp.evaluate(black_box(1_000_000))));
    group.finish();
}

fn gauss(c: &mut Criterion) {
    let mut group = c.benchmark_group("gauss");
    for (m, n) in [(6u32, 12u32), (8, 20)] {
        let id = format!("{m}x{n}");
        group.bench_with_input(BenchmarkId::new("oracle_row", &id), &(m, n), |b, &(m, n)| {
            b.iter(|| gauss_oracle(m, n))
        });
        group.bench_with_input(BenchmarkId::new("chamber_row", &id), &(m, n), |b, &(m, n)| {
            b.iter(|| GaussEngine::new(m, n).row())
        });
        group.bench_with_input(BenchmarkId::new("max_coeff", &id), &(m, n), |b, &(m, n)| {
            b.iter(|| max_coeff(m, n).unwrap())
        });
    }
    group.bench_function("poly_part_max_8", |b| b.iter(|| poly_part_max(8, Parity::Even).unwrap()));
    group.finish();
}

fn vpf(c: &mut Criterion) {
    let mut group = c.benchmark_group("vpf");
    for (i, sys) in sample_systems().iter().enumerate() {
        group.bench_with_input(BenchmarkId::new("oracle_grid_40", i), sys, |b, sys| {
            b.iter(|| vpf_oracle_table(sys, 40, 40))
        });
        group.bench_with_input(BenchmarkId::new("reduction_grid_40", i), sys, |b, sys| {
            b.iter(|| {
                let grid = CayleyGrid::new(sys, 40, 40).unwrap();
                (0..=40).map(|r| grid.count(r, 40 - r)).collect::<Vec<_>>()
            })
        });
    }
    group.finish();
}

criterion_group!(benches, partitions, gauss, vpf);
criterion_main!(benches);
