use rayon::prelude::*;
use serde::Serialize;

use ambitoric_core::ambitoric::{momentum_of, scalar_curvature_f64, validate_data};
use ambitoric_core::exactmath::frac;
use ambitoric_core::numcheck::{
    abreu_fd_with, boundary_conditions_check, fd_closedness, fd_scalar_curvature, h_of_mu, interior_points, BoundaryReport, FDConfig, ResidualReport,
};
use ambitoric_core::polytope::build_polytope;
use ambitoric_core::{AmbitoricData, Error as CoreError, Quartic, Side};

use crate::report::{load, CliError, Context, EXIT_OK, EXIT_VERIFY};
use crate::{Format, VerifyArgs};

const CLOSED_TOL: f64 = 1e-7;
const CURVATURE_TOL: f64 = 1e-3;
const BOUNDARY_TOL: f64 = 1e-6;

#[derive(Serialize)]
struct GridRow {
    x: f64,
    y: f64,
    side: Side,
    curvature_closed: f64,
    curvature_fd: f64,
    curvature_err: f64,
    abreu_fd: f64,
    abreu_err: f64,
}

#[derive(Serialize)]
struct GridSummary {
    points: usize,
    skipped: usize,
    max_curvature_err: f64,
    max_abreu_err: f64,
    worst_curvature: Option<[f64; 2]>,
    worst_abreu: Option<[f64; 2]>,
}

#[derive(Serialize)]
struct VerifyReport {
    passed: bool,
    inject_error: bool,
    tolerances: Tolerances,
    closedness_plus: ResidualReport,
    closedness_minus: ResidualReport,
    grid: GridSummary,
    boundary: Vec<BoundaryReport>,
    failures: Vec<String>,
}

#[derive(Serialize)]
struct Tolerances {
    closedness: f64,
    curvature_rel: f64,
    boundary: f64,
}

/// The datum the oracles see: `A` with its `z^2` coefficient shifted by 1/10 when injecting.
fn probe(d: &AmbitoricData, inject: bool) -> AmbitoricData {
    if !inject {
        return d.clone();
    }
    let mut c = d.a.coeffs().clone();
    c[2] += frac(1, 10);
    AmbitoricData { a: Quartic::new(c), ..d.clone() }
}

/// Error relative to the closed form, absolute where it is below 1.
fn err(fd: f64, want: f64) -> f64 {
    (fd - want).abs() / want.abs().max(1.0)
}

fn grid_points(d: &AmbitoricData, n: u32) -> Vec<[f64; 2]> {
    let ([a1, a2], [b1, b2]) = (d.alpha_f64(), d.beta_f64());
    let n = n as usize;
    let at = |lo: f64, hi: f64, i: usize| lo + (hi - lo) * (i as f64 + 0.5) / n as f64;
    (0..n).flat_map(|i| (0..n).map(move |j| [at(a1, a2, i), at(b1, b2, j)])).collect()
}

fn grid_row(d: &AmbitoricData, probe: &AmbitoricData, [x, y]: [f64; 2], side: Side) -> Result<GridRow, CoreError> {
    let curv_cfg = FDConfig::new(1e-3, true, CURVATURE_TOL)?;
    let abreu_cfg = FDConfig::new(1e-4, true, CURVATURE_TOL)?;
    let want = scalar_curvature_f64(d, x, y, side)?;
    let fd = fd_scalar_curvature(probe, x, y, side, &curv_cfg)?;
    let mu = momentum_of(d.kind, side, x, y)?;
    let abreu = abreu_fd_with(&h_of_mu(probe, side), mu, &abreu_cfg)?;
    Ok(GridRow { x, y, side, curvature_closed: want, curvature_fd: fd, curvature_err: err(fd, want), abreu_fd: abreu, abreu_err: err(abreu, want) })
}

pub fn run(ctx: &Context, args: &VerifyArgs) -> Result<u8, CliError> {
    let d = load(&args.file)?;
    validate_data(&d).map_err(CoreError::Invalid)?;
    let p = probe(&d, args.inject_error);
    let mut failures = Vec::new();

    let cfg = FDConfig::new(1e-5, false, CLOSED_TOL)?;
    let pts = interior_points(&p, args.points as usize, ctx.seed, 0.02);
    let closed = [Side::Plus, Side::Minus].map(|s| fd_closedness(&p, s, &pts, &cfg));
    let [cp, cm] = closed;
    let (cp, cm) = (cp?, cm?);
    for (name, r) in [("closedness_plus", &cp), ("closedness_minus", &cm)] {
        if !r.within(CLOSED_TOL) {
            failures.push(format!("{name}: max |d omega| = {:e} at {:?} ({} samples)", r.max_abs, r.worst_point, r.samples));
        }
    }

    let jobs: Vec<([f64; 2], Side)> = grid_points(&d, args.grid).into_iter().flat_map(|q| [(q, Side::Plus), (q, Side::Minus)]).collect();
    let rows: Vec<Result<GridRow, CoreError>> = jobs.par_iter().map(|&(q, s)| grid_row(&d, &p, q, s)).collect();
    let skipped = rows.iter().filter(|r| r.is_err()).count();
    let rows: Vec<GridRow> = rows.into_iter().filter_map(Result::ok).collect();
    let worst = |f: fn(&GridRow) -> f64| rows.iter().max_by(|a, b| f(a).total_cmp(&f(b))).map(|r| (f(r), [r.x, r.y]));
    let (wc, wa) = (worst(|r| r.curvature_err), worst(|r| r.abreu_err));
    let grid = GridSummary {
        points: rows.len(),
        skipped,
        max_curvature_err: wc.map_or(0.0, |w| w.0),
        max_abreu_err: wa.map_or(0.0, |w| w.0),
        worst_curvature: wc.map(|w| w.1),
        worst_abreu: wa.map(|w| w.1),
    };
    if rows.is_empty() {
        failures.push("curvature grid: no usable points".into());
    }
    if grid.max_curvature_err >= CURVATURE_TOL {
        failures.push(format!("scalar curvature: error {:e} at {:?}", grid.max_curvature_err, grid.worst_curvature.unwrap_or_default()));
    }
    if grid.max_abreu_err >= CURVATURE_TOL {
        failures.push(format!("Abreu formula: error {:e} at {:?}", grid.max_abreu_err, grid.worst_abreu.unwrap_or_default()));
    }

    let bcfg = FDConfig::new(1e-4, true, BOUNDARY_TOL)?;
    let mut boundary = Vec::new();
    for f in &build_polytope(&d)?.facets {
        let r = boundary_conditions_check(&d, f, args.samples as usize, &bcfg)?;
        if !r.exact_zero || !r.dh.within(BOUNDARY_TOL) {
            failures.push(format!("facet {}: H(u, .) exact zero {}, |dH(u, u) - 2u| = {:e} at {:?}", r.label, r.exact_zero, r.dh.max_abs, r.dh.worst_point));
        }
        boundary.push(r);
    }

    for f in &failures {
        eprintln!("verify: {f}");
    }
    let passed = failures.is_empty();
    if ctx.format == Format::Csv {
        ctx.emit_csv(&rows)?;
    } else {
        let r = VerifyReport {
            passed,
            inject_error: args.inject_error,
            tolerances: Tolerances { closedness: CLOSED_TOL, curvature_rel: CURVATURE_TOL, boundary: BOUNDARY_TOL },
            closedness_plus: cp,
            closedness_minus: cm,
            grid,
            boundary,
            failures,
        };
        ctx.emit("verify", Some(&d), &r)?;
    }
    Ok(if passed { EXIT_OK } else { EXIT_VERIFY })
}
