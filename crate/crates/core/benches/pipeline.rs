use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use sl21::diagram::{invariant, parse_braid, ColoredLink, EvalMode};
use sl21::exec::Execution;
use sl21::qweyl::{builtin, search_recurrence, FunctionTable};
use sl21::ribbon::{braiding, RibbonData};
use sl21::superalg::{TypicalColor, TypicalModule};

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn trefoil(a1: u32) -> ColoredLink {
    ColoredLink::uniform(parse_braid("2: s1 s1 s1").unwrap(), a1)
}

fn matrix_mul(c: &mut Criterion) {
    let m = TypicalModule::new(TypicalColor::new(2, 1));
    let b = braiding(&m, &m);
    let mut g = c.benchmark_group("matrix_mul");
    for (name, exec) in MODES {
        g.bench_function(name, |bench| bench.iter(|| b.mul_with(&b, exec)));
    }
    g.finish();
}

fn ribbon_data(c: &mut Criterion) {
    let colors = [TypicalColor::new(2, 1)];
    let mut g = c.benchmark_group("ribbon_data");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_function(name, |bench| bench.iter(|| RibbonData::new(&colors, exec)));
    }
    g.finish();
}

fn trefoil_invariant(c: &mut Criterion) {
    let mut g = c.benchmark_group("trefoil_invariant");
    g.sample_size(10);
    for a1 in [1u32, 3] {
        let link = trefoil(a1);
        let ribbon = RibbonData::new(&link.colors, Execution::default());
        for (name, exec) in MODES {
            g.bench_with_input(BenchmarkId::new(name, a1), &link, |bench, link| {
                bench.iter(|| invariant(link, 0, 0, &ribbon, EvalMode::HighestWeight, exec).unwrap())
            });
        }
    }
    g.finish();
}

fn sweep(c: &mut Criterion) {
    let mut g = c.benchmark_group("trefoil_sweep_0_to_3");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_function(name, |bench| {
            bench.iter(|| {
                FunctionTable::from_fn_with(
                    vec![0],
                    vec![3],
                    |p| {
                        let link = trefoil(p[0] as u32);
                        let ribbon = RibbonData::new(&link.colors, Execution::Sequential);
                        invariant(&link, 0, 0, &ribbon, EvalMode::HighestWeight, Execution::Sequential)
                            .unwrap()
                            .value
                    },
                    exec,
                )
            })
        });
    }
    g.finish();
}

fn recurrence_search(c: &mut Criterion) {
    let f = builtin("qsquare").unwrap().default_table(20);
    let mut g = c.benchmark_group("recurrence_search");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_function(name, |bench| bench.iter(|| search_recurrence(&f, 0, 2, 3, exec).unwrap()));
    }
    g.finish();
}

criterion_group!(benches, matrix_mul, ribbon_data, trefoil_invariant, sweep, recurrence_search);
criterion_main!(benches);
