use criterion::{criterion_group, criterion_main, BatchSize, Criterion};
use fusiondim::bisets::{characteristic_idempotent, minimal_characteristic_biset, BisetAlgebra, BisetElement};
use fusiondim::context::FusionContext;
use fusiondim::fusion::presets;
use fusiondim::realize::{enumerate_functions, lattice_equality_check, MonotoneOptions, MonotoneSolver};

fn context(name: &str) -> FusionContext {
    FusionContext::new(presets::fusion(name).unwrap()).unwrap()
}

fn build(c: &mut Criterion) {
    let mut g = c.benchmark_group("build");
    for name in ["S4", "SL2(3)", "PGL3(3)"] {
        g.bench_function(name, |b| b.iter(|| context(name)));
    }
    g.finish();
}

fn lattices(c: &mut Criterion) {
    let mut g = c.benchmark_group("lattice-equality");
    for name in ["C5-semidirect-C4", "S4", "PGL3(3)"] {
        g.bench_function(name, |b| b.iter_batched(|| context(name), |ctx| lattice_equality_check(&ctx).unwrap(), BatchSize::SmallInput));
    }
    g.finish();
}

fn bisets(c: &mut Criterion) {
    let mut g = c.benchmark_group("bisets");
    let d8 = fusiondim::group::presets::group("D8").unwrap();
    g.bench_function("D8 all basis products", |b| {
        b.iter_batched(
            || BisetAlgebra::new(&d8, 2).unwrap(),
            |alg| {
                let basis = alg.right_free_basis();
                for &x in &basis {
                    for &y in &basis {
                        BisetElement::basis(x).compose(&alg, &BisetElement::basis(y));
                    }
                }
            },
            BatchSize::SmallInput,
        )
    });
    for name in ["S4", "PGL3(3)"] {
        let fs = presets::fusion(name).unwrap();
        g.bench_function(format!("omega {name}"), |b| {
            b.iter_batched(|| BisetAlgebra::for_fusion(&fs), |alg| characteristic_idempotent(&fs, &alg).unwrap(), BatchSize::SmallInput)
        });
        g.bench_function(format!("omega-min {name}"), |b| {
            b.iter_batched(|| BisetAlgebra::for_fusion(&fs), |alg| minimal_characteristic_biset(&fs, &alg).unwrap(), BatchSize::SmallInput)
        });
    }
    g.finish();
}

fn monotone(c: &mut Criterion) {
    let ctx = context("S4");
    let functions = enumerate_functions(&ctx.cb(), 12, true);
    c.bench_function("monotone solver S4 f(1)<=12", |b| {
        b.iter(|| {
            let solver = MonotoneSolver::new(&ctx, MonotoneOptions::default()).unwrap();
            for f in &functions {
                solver.solve(f).unwrap();
            }
        })
    });
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = build, lattices, bisets, monotone
}
criterion_main!(benches);
