use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use instanton_bench::{field, member};
use instanton_core::families::sample_instanton;
use instanton_core::geometry::{splitting_order, LineSpec};
use instanton_core::monad::{coh_table, gamma_kernel, sigma_kernel};
use instanton_core::nondeg::{classify, NondegBudget};
use instanton_core::verify::{find_xi, smoothness_certificate};

fn linear_algebra(c: &mut Criterion) {
    let mut g = c.benchmark_group("rank");
    for n in [2usize, 3, 4, 5] {
        let w = member(n, 2);
        g.bench_with_input(BenchmarkId::from_parameter(n), &w, |b, w| b.iter(|| black_box(w.rank())));
    }
    g.finish();
}

fn cohomology(c: &mut Criterion) {
    let w = member(5, 2);
    c.bench_function("coh_table (5,2) dmax 3", |b| b.iter(|| coh_table(black_box(&w), 3).unwrap()));
    c.bench_function("sigma_kernel (5,2)", |b| b.iter(|| sigma_kernel(black_box(&w)).dim()));
    c.bench_function("gamma_kernel (5,2)", |b| b.iter(|| gamma_kernel(black_box(&w)).dim()));
}

fn nondegeneracy(c: &mut Criterion) {
    let w = member(5, 2);
    let budget = NondegBudget::default();
    c.bench_function("classify (5,2)", |b| b.iter(|| classify(black_box(&w), &budget)));
}

fn sampling(c: &mut Criterion) {
    let f = field();
    let mut g = c.benchmark_group("sample_instanton");
    g.sample_size(20);
    for (n, r) in [(3usize, 4usize), (4, 2), (5, 2)] {
        g.bench_function(format!("({n},{r})"), |b| {
            let mut seed = 0u64;
            b.iter(|| {
                seed += 1;
                sample_instanton(&f, n, r, seed).unwrap()
            })
        });
    }
    g.finish();
}

fn induction(c: &mut Criterion) {
    let w = member(5, 2);
    let mut g = c.benchmark_group("induction");
    g.sample_size(20);
    g.bench_function("find_xi (5,2)", |b| b.iter(|| find_xi(black_box(&w), 50, 0).unwrap()));
    g.bench_function("certificate (5,2)", |b| b.iter(|| smoothness_certificate(black_box(&w), Some(0), None).unwrap()));
    g.finish();
}

fn lines(c: &mut Criterion) {
    let f = field();
    let w = member(5, 2);
    let l = LineSpec::through(&f, &[1, 2, 3, 4], &[5, 6, 7, 9]).unwrap();
    c.bench_function("splitting_order (5,2)", |b| b.iter(|| splitting_order(black_box(&w), &l).unwrap()));
}

criterion_group!(benches, linear_algebra, cohomology, nondegeneracy, sampling, induction, lines);
criterion_main!(benches);
