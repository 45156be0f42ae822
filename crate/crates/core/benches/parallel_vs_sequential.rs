use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use indpoly::commands::{cmd_search, random_graph, Property, SearchKind, SearchOptions};
use indpoly::par::{self, Exec};
use indpoly::{independence_poly, trees};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn tree_enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("all_trees_8");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| trees::all_trees_with(black_box(8), exec).unwrap())
        });
    }
    group.finish();
}

fn engine_batch(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let graphs: Vec<_> = (0..64).map(|_| random_graph(28, &mut rng)).collect();
    let mut group = c.benchmark_group("engine_batch_64x28");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| par::map_with(exec, &graphs, |g| independence_poly(g).unwrap()))
        });
    }
    group.finish();
}

fn star_tree_search(c: &mut Criterion) {
    let mut group = c.benchmark_group("search_star_trees_7");
    group.sample_size(10);
    for (name, exec) in MODES {
        let opts = SearchOptions {
            kind: SearchKind::StarTrees,
            n_max: 7,
            property: Property::LogConcave,
            exec,
            ..SearchOptions::default()
        };
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| cmd_search(black_box(&opts)).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, tree_enumeration, engine_batch, star_tree_search);
criterion_main!(benches);
