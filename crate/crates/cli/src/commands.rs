use std::path::Path;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use ambitoric_core::ambitoric::{boundary_data, condition_report, validate_data, BoundaryData, ConditionReport, Violation};
use ambitoric_core::catalog::{bachflat_search, bisect_toward_seed, extremal_search, random_extremal, wpp_from_beta, FamilyResult};
use ambitoric_core::exactmath::rational::format;
use ambitoric_core::polytope::{build_polytope, lattice_check, moments, LabelledPolytope, LatticeInfo, Moments};
use ambitoric_core::stability::{extremal_field, futaki_crease, stability_verdict, Crease, ExtremalField, FutakiValue, StabilityReport};
use ambitoric_core::{AffineFn, AmbitoricData, AmbitoricType, Error as CoreError, Rational};

use crate::report::{load, CliError, Context, EXIT_INVALID, EXIT_OK};
use crate::{CreaseArg, FamilyArgs, Format};

#[derive(Serialize)]
struct CheckReport {
    valid: bool,
    violations: Vec<Violation>,
    #[serde(skip_serializing_if = "Option::is_none")]
    boundary_data: Option<BoundaryData>,
    conditions: ConditionReport,
}

pub fn check(ctx: &Context, file: &Path) -> Result<u8, CliError> {
    ctx.require_json("check")?;
    let d = load(file)?;
    let violations = validate_data(&d).err().unwrap_or_default();
    let r = CheckReport { valid: violations.is_empty(), violations, boundary_data: boundary_data(&d).ok(), conditions: condition_report(&d) };
    ctx.emit("check", Some(&d), &r)?;
    Ok(if r.valid { EXIT_OK } else { EXIT_INVALID })
}

#[derive(Serialize)]
struct PolytopeReport {
    polytope: LabelledPolytope,
    moments: Moments,
    extremal_field: ExtremalField,
    scalar_affine: AffineFn,
    lattice: LatticeInfo,
}

/// One CSV line per facet and per vertex.
#[derive(Serialize)]
struct PolytopeRow {
    item: &'static str,
    index: usize,
    label: String,
    u1: String,
    u2: String,
    lambda: String,
    mu1: String,
    mu2: String,
}

pub fn polytope(ctx: &Context, file: &Path) -> Result<u8, CliError> {
    let d = load(file)?;
    let p = build_polytope(&d)?;
    if ctx.format == Format::Csv {
        let facets = p.facets.iter().enumerate().map(|(i, f)| PolytopeRow {
            item: "facet",
            index: i,
            label: f.label.clone(),
            u1: format(&f.u[0]),
            u2: format(&f.u[1]),
            lambda: format(&f.lambda),
            mu1: String::new(),
            mu2: String::new(),
        });
        let vertices = p.vertices.iter().enumerate().map(|(i, v)| PolytopeRow {
            item: "vertex",
            index: i,
            label: String::new(),
            u1: String::new(),
            u2: String::new(),
            lambda: String::new(),
            mu1: format(&v[0]),
            mu2: format(&v[1]),
        });
        let rows: Vec<PolytopeRow> = facets.chain(vertices).collect();
        ctx.emit_csv(&rows)?;
        return Ok(EXIT_OK);
    }
    let m = moments(&p)?;
    let ef = extremal_field(&m)?;
    let r = PolytopeReport { scalar_affine: ef.scalar_affine(), lattice: lattice_check(&p)?, polytope: p, moments: m, extremal_field: ef };
    ctx.emit("polytope", Some(&d), &r)?;
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct StabilityOut {
    #[serde(flatten)]
    report: StabilityReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    crease: Option<CreaseOut>,
}

#[derive(Serialize)]
struct CreaseOut {
    crease: Crease,
    futaki: FutakiValue,
}

pub fn stability(ctx: &Context, file: &Path, crease: Option<CreaseArg>) -> Result<u8, CliError> {
    ctx.require_json("stability")?;
    let d = load(file)?;
    let report = stability_verdict(&d)?;
    let crease = crease
        .map(|c| {
            let c = match c {
                CreaseArg::X(x0) => Crease::X { x0 },
                CreaseArg::Y(y0) => Crease::Y { y0 },
            };
            futaki_crease(&d, &c).map(|futaki| CreaseOut { crease: c, futaki })
        })
        .transpose()?;
    ctx.emit("stability", Some(&d), &StabilityOut { report, crease })?;
    Ok(EXIT_OK)
}

fn four(v: &[Rational]) -> Result<[Rational; 4], CliError> {
    v.to_vec().try_into().map_err(|v: Vec<Rational>| CliError::Usage(format!("--beta takes exactly 4 values, got {}", v.len())))
}

fn two(v: &[Rational]) -> Result<[Rational; 2], CliError> {
    v.to_vec().try_into().map_err(|v: Vec<Rational>| CliError::Usage(format!("--alpha takes exactly 2 values, got {}", v.len())))
}

pub fn wpp(ctx: &Context, beta: &[Rational]) -> Result<u8, CliError> {
    ctx.require_json("catalog wpp")?;
    let w = wpp_from_beta(four(beta)?)?;
    ctx.emit("catalog wpp", None, &w)?;
    Ok(EXIT_OK)
}

pub fn family(ctx: &Context, args: &FamilyArgs, bach_flat: bool) -> Result<u8, CliError> {
    let name = if bach_flat { "catalog bachflat" } else { "catalog extremal" };
    ctx.require_json(name)?;
    let search = if bach_flat { bachflat_search } else { extremal_search };
    let (betas, alpha) = (four(&args.beta)?, two(&args.alpha)?);
    let r: FamilyResult = if args.bisect { bisect_toward_seed(search, betas, alpha)? } else { search(betas, alpha)? };
    ctx.emit(name, None, &r)?;
    Ok(if r.success { EXIT_OK } else { EXIT_INVALID })
}

pub fn random(ctx: &Context, kind: AmbitoricType, interior: bool, tries: usize) -> Result<u8, CliError> {
    ctx.require_json("catalog random")?;
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed);
    let d: AmbitoricData = random_extremal(&mut rng, kind, interior, tries)
        .ok_or_else(|| CoreError::Precondition(format!("no {kind} datum found in {tries} tries")))?;
    ctx.emit("catalog random", None, &d)?;
    Ok(EXIT_OK)
}
