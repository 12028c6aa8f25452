//! Sequential versus parallel execution of the main kernels.
//!
//! Run with `cargo bench -p kas3-core`. Without the `parallel` feature both
//! variants take the sequential path.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use kas3::algebra::{weight_enumerator, BinaryCode};
use kas3::complex::{perfect_matching_polynomial, TriangularConfiguration, Weighting};
use kas3::gadgets::tripartite_reduction;
use kas3::kasteleyn_construct::{build_t, SquareMatrix};
use kas3::lattice::{cubic_lattice, dimer_polynomial_direct, EdgeWeights};
use kas3::tensor3::{determinant3, permanent3};
use kas3::Exec;

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn per_det3(c: &mut Criterion) {
    let rows: Vec<Vec<i64>> = (0..4).map(|i| (0..4).map(|j| ((i * 3 + j) % 4) as i64 - 1).collect()).collect();
    let tc = build_t(&SquareMatrix::from_i64(&rows).unwrap()).unwrap();
    let mut g = c.benchmark_group("kasteleyn_4x4");
    for (name, exec) in MODES {
        g.bench_with_input(BenchmarkId::new("permanent3", name), &exec, |b, &e| {
            b.iter(|| permanent3(black_box(tc.tensor()), e))
        });
        g.bench_with_input(BenchmarkId::new("determinant3", name), &exec, |b, &e| {
            b.iter(|| determinant3(black_box(tc.tensor()), e))
        });
    }
    g.finish();
}

fn matchings(c: &mut Criterion) {
    // Two tetrahedra glued along a face plus a fan, then reduced.
    let faces = [
        ("a", ["0", "1", "2"]),
        ("b", ["0", "1", "3"]),
        ("c", ["0", "2", "3"]),
        ("d", ["1", "2", "3"]),
        ("e", ["1", "2", "4"]),
        ("f", ["0", "3", "4"]),
    ];
    let cfg = TriangularConfiguration::from_faces(&faces);
    let w: Weighting = faces.iter().enumerate().map(|(i, (id, _))| (id.to_string(), i as u64)).collect();
    let r = tripartite_reduction(&cfg, &w, Exec::Sequential).unwrap();
    let mut g = c.benchmark_group("reduced_matching_polynomial");
    for (name, exec) in MODES {
        g.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &e| {
            b.iter(|| perfect_matching_polynomial(black_box(&r.config), &r.weights, e).unwrap())
        });
    }
    g.finish();
}

fn lattice(c: &mut Criterion) {
    let q = cubic_lattice(4, 3, 2);
    let w = EdgeWeights::new();
    let mut g = c.benchmark_group("dimers_4x3x2");
    for (name, exec) in MODES {
        g.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &e| {
            b.iter(|| dimer_polynomial_direct(black_box(&q), &w, e).unwrap())
        });
    }
    g.finish();
}

fn codes(c: &mut Criterion) {
    let (k, n) = (16, 24);
    let rows: Vec<Vec<u8>> =
        (0..k).map(|i| (0..n).map(|j| u8::from(j == i || (j >= k && (i * 7 + j) % 3 == 0))).collect()).collect();
    let code = BinaryCode::new(n, rows).unwrap();
    let mut g = c.benchmark_group("weight_enumerator_k16");
    for (name, exec) in MODES {
        g.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &e| {
            b.iter(|| weight_enumerator(black_box(&code), e).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, per_det3, matchings, lattice, codes);
criterion_main!(benches);
