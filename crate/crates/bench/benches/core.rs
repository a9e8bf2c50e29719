use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use ambitoric_bench::{betas, example, unstable};
use ambitoric_core::ambitoric::{condition_report, Side};
use ambitoric_core::catalog::{bachflat_search, wpp_from_beta};
use ambitoric_core::exactmath::frac;
use ambitoric_core::numcheck::{fd_closedness, fd_scalar_curvature, interior_points, FDConfig};
use ambitoric_core::polytope::{build_polytope, moments};
use ambitoric_core::stability::{futaki_crease, stability_verdict, Crease};

fn exact(c: &mut Criterion) {
    let d = example();
    let u = unstable();
    c.bench_function("condition_report", |b| b.iter(|| condition_report(black_box(&d))));
    c.bench_function("polytope_moments", |b| b.iter(|| moments(&build_polytope(black_box(&d)).unwrap()).unwrap()));
    c.bench_function("stability_verdict/polystable", |b| b.iter(|| stability_verdict(black_box(&d)).unwrap()));
    c.bench_function("stability_verdict/unstable", |b| b.iter(|| stability_verdict(black_box(&u)).unwrap()));
    let crease = Crease::X { x0: frac(5, 2) };
    c.bench_function("futaki_crease", |b| b.iter(|| futaki_crease(black_box(&d), &crease).unwrap()));
    c.bench_function("wpp_from_beta", |b| b.iter(|| wpp_from_beta(black_box(betas([1, 2, 3, 4]))).unwrap()));
    c.bench_function("bachflat_search", |b| b.iter(|| bachflat_search(betas([1, 2, 3, 4]), [frac(21, 10), frac(29, 10)]).unwrap()));
}

fn numeric(c: &mut Criterion) {
    let d = example();
    let pts = interior_points(&d, 200, 1, 0.02);
    let cfg = FDConfig::new(1e-5, false, 1e-7).unwrap();
    c.bench_function("fd_closedness/200", |b| b.iter(|| fd_closedness(&d, Side::Plus, black_box(&pts), &cfg).unwrap()));
    let cfg = FDConfig::new(1e-3, true, 1e-3).unwrap();
    c.bench_function("fd_scalar_curvature", |b| b.iter(|| fd_scalar_curvature(&d, black_box(2.5), 0.5, Side::Plus, &cfg).unwrap()));
}

criterion_group!(benches, exact, numeric);
criterion_main!(benches);
