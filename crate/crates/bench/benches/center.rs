use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use hecke_center::hecke::JucysMurphy;
use hecke_center::{Center, Partition, Universal};

fn part(s: &str) -> Partition {
    s.parse().expect("partition literal")
}

fn gamma_basis(c: &mut Criterion) {
    let mut g = c.benchmark_group("gamma_basis");
    for n in [5, 6] {
        g.bench_function(format!("n{n}_up_to_3"), |b| {
            b.iter(|| Center::new(black_box(n)).unwrap().basis(3).unwrap())
        });
    }
    g.finish();
}

fn m_sym(c: &mut Criterion) {
    c.bench_function("m_sym_2_1_n6", |b| {
        b.iter(|| {
            JucysMurphy::new(6)
                .unwrap()
                .m_sym(black_box(&part("2,1")))
                .unwrap()
        })
    });
}

fn products(c: &mut Criterion) {
    let center = Center::new(5).unwrap();
    center.basis(4).unwrap();
    let mut g = c.benchmark_group("structure_constants_n5");
    for (a, b) in [("1", "1"), ("1", "3"), ("2", "2")] {
        let (a, b) = (part(a), part(b));
        g.bench_function(format!("{a}x{b}"), |bench| {
            bench.iter(|| {
                center
                    .structure_constants(black_box(&a), black_box(&b))
                    .unwrap()
            })
        });
    }
    g.finish();
}

fn d_matrix(c: &mut Criterion) {
    let mut g = c.benchmark_group("universal");
    g.sample_size(10);
    g.bench_function("d_matrix_3", |b| {
        b.iter(|| Universal::new().d_matrix(black_box(3)).unwrap())
    });
    g.finish();
}

criterion_group!(benches, gamma_basis, m_sym, products, d_matrix);
criterion_main!(benches);
