//! First-order boundary behaviour of `H` along a facet: `H(u, .) = 0` exactly
//! and `d(H(u, u)) = 2u` by one-sided differences in the momenta.

use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::ambitoric::{h_from_values, momentum_of, AmbitoricData, Side};
use crate::error::{Error, Result};
use crate::exactmath::rational::to_f64;
use crate::exactmath::{frac, Rational};
use crate::polytope::{build_polytope, facet_by_label, Facet};

use super::{h_of_mu, FDConfig, ResidualReport};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundaryReport {
    pub label: String,
    /// `H(u, .)` vanished identically at every rational sample.
    pub exact_zero: bool,
    /// Largest `|H(u, .)|` seen, as a float.
    pub max_hu: f64,
    /// `|grad H(u, u) - 2u|` over the samples.
    pub dh: ResidualReport,
}

/// Same line with the same orientation, up to a positive multiple.
fn same_line(f: &Facet, g: &Facet) -> bool {
    let cross = &f.u[0] * &g.u[1] - &f.u[1] * &g.u[0];
    let dot = &f.u[0] * &g.u[0] + &f.u[1] * &g.u[1];
    cross.is_zero() && dot.is_positive() && (&f.lambda * &g.u[0] - &g.lambda * &f.u[0]).is_zero() && (&f.lambda * &g.u[1] - &g.lambda * &f.u[1]).is_zero()
}

/// `(x, y)` of the `k`-th of `n` samples interior to the facet.
fn sample(d: &AmbitoricData, label: &str, k: usize, n: usize) -> Result<(Rational, Rational)> {
    let t = frac(k as i64, n as i64 + 1);
    let along = |lo: &Rational, hi: &Rational| lo + (hi - lo) * &t;
    Ok(match label {
        "x=alpha1" => (d.alpha[0].clone(), along(&d.beta[0], &d.beta[1])),
        "x=alpha2" => (d.alpha[1].clone(), along(&d.beta[0], &d.beta[1])),
        "y=beta1" => (along(&d.alpha[0], &d.alpha[1]), d.beta[0].clone()),
        "y=beta2" => (along(&d.alpha[0], &d.alpha[1]), d.beta[1].clone()),
        _ => return Err(Error::Precondition(format!("unknown facet label {label:?}"))),
    })
}

/// Checks the facet of `build_polytope(d)` carrying `facet.label`, using the
/// normal and offset of `facet` (which may be a rescaling of the true one).
pub fn boundary_conditions_check(d: &AmbitoricData, facet: &Facet, samples: usize, cfg: &FDConfig) -> Result<BoundaryReport> {
    cfg.check()?;
    let p = build_polytope(d)?;
    let truth = facet_by_label(&p, &facet.label).ok_or_else(|| Error::Precondition(format!("unknown facet label {:?}", facet.label)))?;
    if !same_line(facet, truth) {
        return Err(Error::Precondition(format!("facet mislabeled: {:?} is not the line of {}", facet.u, facet.label)));
    }
    let u = facet.u.clone();
    let uf = [to_f64(&u[0]), to_f64(&u[1])];
    let mut exact_zero = true;
    let mut max_hu: f64 = 0.0;
    let mut pts = Vec::with_capacity(samples);
    for k in 1..=samples {
        let (x, y) = sample(d, &facet.label, k, samples)?;
        let h = h_from_values(d.kind, Side::Plus, x.clone(), y.clone(), d.a.eval(&x), d.b.eval(&y))?;
        for row in &h {
            let v = &row[0] * &u[0] + &row[1] * &u[1];
            exact_zero &= v.is_zero();
            max_hu = max_hu.max(to_f64(&v).abs());
        }
        let mu = momentum_of(d.kind, Side::Plus, x, y)?;
        pts.push([to_f64(&mu[0]), to_f64(&mu[1])]);
    }

    let hf = h_of_mu(d, Side::Plus);
    let norm = uf[0].hypot(uf[1]);
    let nu = [uf[0] / norm, uf[1] / norm];
    let tan = [-nu[1], nu[0]];
    let phi = |m: [f64; 2]| -> Result<f64> {
        let h = hf(m)?;
        Ok((0..2).map(|i| (0..2).map(|j| uf[i] * h[i][j] * uf[j]).sum::<f64>()).sum())
    };
    let grad = |m: [f64; 2], h: f64| -> Result<Vec<f64>> {
        let at = |e: [f64; 2], s: f64| phi([m[0] + s * e[0], m[1] + s * e[1]]);
        let dt = (at(tan, h)? - at(tan, -h)?) / (2.0 * h);
        let dn = (-3.0 * at(nu, 0.0)? + 4.0 * at(nu, h)? - at(nu, 2.0 * h)?) / (2.0 * h);
        Ok(vec![dt * tan[0] + dn * nu[0], dt * tan[1] + dn * nu[1]])
    };
    let target = [2.0 * uf[0], 2.0 * uf[1]];
    let tscale = target[0].abs().max(target[1].abs());
    let items = pts
        .par_iter()
        .map(|&m| {
            let g = cfg.extrapolate(|h| grad(m, h)).ok()?;
            let a = (g[0] - target[0]).abs().max((g[1] - target[1]).abs());
            Some((a, a / tscale, m))
        })
        .collect();
    Ok(BoundaryReport { label: facet.label.clone(), exact_zero, max_hu, dh: ResidualReport::collect(items) })
}
