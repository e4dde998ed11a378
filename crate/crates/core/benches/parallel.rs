use agaian::catalog;
use agaian::equivalence::{standard_equivalent_with, SearchOptions};
use agaian::invariants::{charpoly_exact_with, haagerup_set_with};
use agaian::Exec;
use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn charpoly(c: &mut Criterion) {
    let b = catalog::get("A1").unwrap();
    let mut g = c.benchmark_group("charpoly_A1");
    for (label, exec) in MODES {
        g.bench_function(label, |bch| {
            bch.iter(|| charpoly_exact_with(black_box(&b), exec).unwrap())
        });
    }
    g.finish();
}

fn haagerup(c: &mut Criterion) {
    let b = catalog::get("F6").unwrap();
    let mut g = c.benchmark_group("haagerup_F6");
    for (label, exec) in MODES {
        g.bench_function(label, |bch| bch.iter(|| haagerup_set_with(black_box(&b), exec)));
    }
    g.finish();
}

fn search(c: &mut Criterion) {
    // A1/F6 runs unfiltered so the search is exhaustive
    let pairs = [("M6", "M61", true), ("A1", "A3", true), ("A1", "F6", false)];
    let mut g = c.benchmark_group("standard_search");
    g.sample_size(10);
    for (x, y, filter) in pairs {
        let (b1, b2) = (catalog::get(x).unwrap(), catalog::get(y).unwrap());
        for (label, exec) in MODES {
            let opts = SearchOptions {
                haagerup_filter: filter,
                exec,
            };
            g.bench_with_input(BenchmarkId::new(label, format!("{x}-{y}")), &opts, |bch, o| {
                bch.iter(|| standard_equivalent_with(black_box(&b1), black_box(&b2), *o).unwrap())
            });
        }
    }
    g.finish();
}

criterion_group!(benches, charpoly, haagerup, search);
criterion_main!(benches);
