use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use unproj_bench::{scroll, test_f, CELLS};
use unproj_core::rees::build_rees;
use unproj_core::{build_unprojection, Budget, GroebnerBasis};

fn scroll_groebner(c: &mut Criterion) {
    let mut group = c.benchmark_group("scroll_gb");
    for (m, n) in CELLS {
        let s = scroll(m, n);
        group.bench_with_input(
            BenchmarkId::from_parameter(format!("F({m},{n})")),
            &s,
            |b, s| {
                b.iter(|| {
                    GroebnerBasis::compute(
                        s.ring(),
                        black_box(s.q().generators()),
                        &Budget::default(),
                    )
                    .unwrap()
                })
            },
        );
    }
    group.finish();
}

fn presentation_equality(c: &mut Criterion) {
    let mut group = c.benchmark_group("unprojection_equality");
    for (m, n) in CELLS {
        let s = scroll(m, n);
        for k in [1, 3] {
            let f = test_f(&s, k);
            group.bench_function(BenchmarkId::new(format!("F({m},{n})"), k), |b| {
                b.iter(|| {
                    build_unprojection(&s, black_box(&f))
                        .unwrap()
                        .presentations_equal()
                        .unwrap()
                })
            });
        }
    }
    group.finish();
}

fn rees_elimination(c: &mut Criterion) {
    let mut group = c.benchmark_group("rees_elimination");
    group.sample_size(20);
    for (m, n) in [(1, 2), (2, 3)] {
        let s = scroll(m, n);
        let f = test_f(&s, 2);
        group.bench_function(format!("F({m},{n}) k=2"), |b| {
            b.iter(|| {
                build_rees(&s, black_box(&f))
                    .unwrap()
                    .eliminate_to_unprojection()
                    .unwrap()
            })
        });
    }
    group.finish();
}

criterion_group!(
    benches,
    scroll_groebner,
    presentation_equality,
    rees_elimination
);
criterion_main!(benches);
