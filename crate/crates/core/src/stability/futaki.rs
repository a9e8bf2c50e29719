//! The relative Futaki invariant on piecewise-linear functions and on creases.

use std::cell::RefCell;

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::ambitoric::{h_matrix_f64, invert_momentum_f64, momentum_of, AmbitoricData, AmbitoricType, Side};
use crate::error::{Error, Result};
use crate::exactmath::rational::{qser, to_f64};
use crate::exactmath::{int, AffineFn, Rational};
use crate::polytope::moments::edge_measure;
use crate::polytope::{build_polytope, clip_halfplane, clip_segment, normal_direction, polygon_integrals, LabelledPolytope, Point};

use super::ExtremalField;

/// Maximum of finitely many affine functions; convex, so `F >= 0` on every
/// such function characterizes stability.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PLFunction {
    pieces: Vec<AffineFn>,
}

impl PLFunction {
    /// Drops repeated pieces; fails on an empty list.
    pub fn new(pieces: Vec<AffineFn>) -> Result<Self> {
        let mut out: Vec<AffineFn> = Vec::with_capacity(pieces.len());
        for p in pieces {
            if !out.contains(&p) {
                out.push(p);
            }
        }
        if out.is_empty() {
            return Err(Error::Precondition("a piecewise-linear function needs at least one piece".into()));
        }
        Ok(PLFunction { pieces: out })
    }

    pub fn affine(f: AffineFn) -> Self {
        PLFunction { pieces: vec![f] }
    }

    /// `max(0, <u, mu> + c)`
    pub fn simple(u: [Rational; 2], c: Rational) -> Self {
        let z = Rational::zero;
        PLFunction::new(vec![AffineFn::new([z(), z()], z()), AffineFn::new(u, c)]).expect("two pieces")
    }

    pub fn pieces(&self) -> &[AffineFn] {
        &self.pieces
    }

    pub fn eval(&self, mu: &Point) -> Rational {
        self.pieces.iter().map(|p| p.eval(mu)).max().expect("nonempty")
    }

    /// Pointwise sum: pieces are all pairwise sums.
    pub fn add(&self, o: &PLFunction) -> PLFunction {
        let mut v = Vec::with_capacity(self.pieces.len() * o.pieces.len());
        for p in &self.pieces {
            for q in &o.pieces {
                v.push(AffineFn::new([&p.a[0] + &q.a[0], &p.a[1] + &q.a[1]], &p.b + &q.b));
            }
        }
        PLFunction::new(v).expect("nonempty")
    }

    /// Multiplication by `s >= 0`.
    pub fn scale(&self, s: &Rational) -> PLFunction {
        assert!(!s.is_negative(), "negative scaling breaks convexity");
        PLFunction::new(self.pieces.iter().map(|p| p.scale(s)).collect()).expect("nonempty")
    }
}

fn diff(p: &AffineFn, q: &AffineFn) -> ([Rational; 2], Rational) {
    ([&p.a[0] - &q.a[0], &p.a[1] - &q.a[1]], &p.b - &q.b)
}

/// `F(f) = int_{dDelta} f dnu + 1/2 int_Delta (<A, mu> + B) f dv`, exactly.
pub fn futaki_pl(p: &LabelledPolytope, ef: &ExtremalField, f: &PLFunction) -> Rational {
    let pcs = f.pieces();
    let mut total = Rational::zero();
    for (i, li) in pcs.iter().enumerate() {
        let mut cell = p.vertices.clone();
        for (j, lj) in pcs.iter().enumerate() {
            if j != i && cell.len() >= 3 {
                let (a, b) = diff(li, lj);
                cell = clip_halfplane(&cell, &a, &b);
            }
        }
        if cell.len() >= 3 {
            total += polygon_integrals(&cell).affine_product(&ef.a, &ef.b, &li.a, &li.b) / int(2);
        }
        for k in 0..p.vertices.len() {
            let (v, w) = p.edge(k);
            let mut range = Some((Rational::zero(), Rational::one()));
            for (j, lj) in pcs.iter().enumerate() {
                let Some(r) = range.take() else { break };
                if j == i {
                    range = Some(r);
                    continue;
                }
                let (a, b) = diff(li, lj);
                let on = |q: &Point| &a[0] * &q[0] + &a[1] * &q[1] + &b;
                if j < i && on(v).is_zero() && on(w).is_zero() {
                    // tie along the whole edge: the lower index owns it
                    break;
                }
                range = clip_segment(v, w, &a, &b, r);
            }
            if let Some((t0, t1)) = range {
                let tm = (&t0 + &t1) / int(2);
                let mid = [&v[0] + (&w[0] - &v[0]) * &tm, &v[1] + (&w[1] - &v[1]) * &tm];
                total += edge_measure(p, k) * (t1 - t0) * li.eval(&mid);
            }
        }
    }
    total
}

/// The non-smooth locus of a simple PL function `max(0, <u, mu> + c)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Crease {
    /// Image of `x = x0`.
    X {
        #[serde(with = "qser")]
        x0: Rational,
    },
    /// Image of `y = y0`.
    Y {
        #[serde(with = "qser")]
        y0: Rational,
    },
    General {
        #[serde(with = "qser::arr2")]
        u: [Rational; 2],
        #[serde(with = "qser")]
        c: Rational,
    },
}

impl Crease {
    /// The line `<u, mu> + c = 0` in momentum coordinates.
    pub fn line(&self, kind: AmbitoricType) -> Result<([Rational; 2], Rational)> {
        let through = |u: [Rational; 2], x: &Rational, y: &Rational| -> Result<_> {
            let m = momentum_of(kind, Side::Plus, x.clone(), y.clone())?;
            let c = -(&u[0] * &m[0] + &u[1] * &m[1]);
            Ok((u, c))
        };
        match self {
            // any point of the coordinate line off the singular loci will do
            Crease::X { x0 } => {
                let u = || normal_direction(kind, x0);
                through(u(), x0, &(x0 - int(1))).or_else(|_| through(u(), x0, &(x0 - int(2))))
            }
            Crease::Y { y0 } => {
                let u = || normal_direction(kind, y0);
                through(u(), &(y0 + int(1)), y0).or_else(|_| through(u(), &(y0 + int(2)), y0))
            }
            Crease::General { u, c } => Ok((u.clone(), c.clone())),
        }
    }

    pub fn pl_function(&self, kind: AmbitoricType) -> Result<PLFunction> {
        let (u, c) = self.line(kind)?;
        Ok(PLFunction::simple(u, c))
    }
}

/// Futaki value of a crease; `exact` is set for coordinate creases.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FutakiValue {
    pub value: f64,
    #[serde(with = "qser::opt", default, skip_serializing_if = "Option::is_none")]
    pub exact: Option<Rational>,
}

impl FutakiValue {
    fn exact(q: Rational) -> Self {
        FutakiValue { value: to_f64(&q), exact: Some(q) }
    }
}

/// `int_{lo}^{hi} (x0 - y) / N(x0, y)^3 dy / 2` up to the type constant, i.e. the
/// positive weight with `F = A(x0) * weight` for an `x0`-crease.
fn crease_weight(kind: AmbitoricType, z0: &Rational, lo: &Rational, hi: &Rational, along_x: bool) -> Rational {
    let two = int(2);
    let prim = |t: &Rational| -> Rational {
        match (kind, along_x) {
            // variable y, fixed x = z0
            (AmbitoricType::Parabolic, false) => (z0 * t - t * t / &two) / &two,
            (AmbitoricType::Hyperbolic, false) => {
                let s = z0 + t;
                (-z0 / (&s * &s) + Rational::one() / &s) / &two
            }
            (AmbitoricType::Elliptic, false) => {
                if z0.is_zero() {
                    return -(t * t) / &two;
                }
                let s = Rational::one() + z0 * t;
                let k = z0 * z0 + int(1);
                (-k / (&two * &s * &s) + Rational::one() / &s) / (z0 * z0)
            }
            // variable x, fixed y = z0
            (AmbitoricType::Parabolic, true) => (t * t / &two - z0 * t) / &two,
            (AmbitoricType::Hyperbolic, true) => {
                let s = t + z0;
                (-Rational::one() / &s + z0 / (&s * &s)) / &two
            }
            (AmbitoricType::Elliptic, true) => {
                if z0.is_zero() {
                    return t * t / &two;
                }
                let s = Rational::one() + t * z0;
                let k = z0 * z0 + int(1);
                (-Rational::one() / &s + k / (&two * &s * &s)) / (z0 * z0)
            }
        }
    };
    prim(hi) - prim(lo)
}

/// Endpoints of the chord cut from `p` by `<u, mu> + c = 0`, when it crosses the interior.
pub fn crease_chord(p: &LabelledPolytope, u: &[Rational; 2], c: &Rational) -> Result<(Point, Point)> {
    let on = |q: &Point| &u[0] * &q[0] + &u[1] * &q[1] + c;
    let vals: Vec<Rational> = p.vertices.iter().map(on).collect();
    if !(vals.iter().any(|v| v.is_positive()) && vals.iter().any(|v| v.is_negative())) {
        return Err(Error::CreaseMissesPolytope);
    }
    let n = vals.len();
    let mut pts: Vec<Point> = Vec::with_capacity(2);
    for i in 0..n {
        let (a, b) = (&vals[i], &vals[(i + 1) % n]);
        if a.is_zero() {
            pts.push(p.vertices[i].clone());
        } else if (a.is_positive() && b.is_negative()) || (a.is_negative() && b.is_positive()) {
            let t = a / (a - b);
            let (v, w) = p.edge(i);
            pts.push([&v[0] + (&w[0] - &v[0]) * &t, &v[1] + (&w[1] - &v[1]) * &t]);
        }
    }
    pts.dedup();
    match pts.as_slice() {
        [a, b] => Ok((a.clone(), b.clone())),
        _ => Err(Error::CreaseMissesPolytope),
    }
}

/// `F(max(0, <u, mu> + c)) = 1/2 int_S H(u, u) dnu_S` with `u ^ dnu_S = dv`.
/// Coordinate creases are integrated exactly; general ones by quadrature (tol 1e-9).
pub fn futaki_crease(d: &AmbitoricData, crease: &Crease) -> Result<FutakiValue> {
    let inside = |z: &Rational, r: &[Rational; 2]| z > &r[0] && z < &r[1];
    match crease {
        Crease::X { x0 } => {
            if !inside(x0, &d.alpha) {
                return Err(Error::CreaseMissesPolytope);
            }
            let w = crease_weight(d.kind, x0, &d.beta[0], &d.beta[1], false);
            Ok(FutakiValue::exact(d.a.eval(x0) * w))
        }
        Crease::Y { y0 } => {
            if !inside(y0, &d.beta) {
                return Err(Error::CreaseMissesPolytope);
            }
            let w = crease_weight(d.kind, y0, &d.alpha[0], &d.alpha[1], true);
            Ok(FutakiValue::exact(d.b.eval(y0) * w))
        }
        Crease::General { u, c } => {
            let p = build_polytope(d)?;
            let (a, b) = crease_chord(&p, u, c)?;
            let uf = u.clone().map(|v| to_f64(&v));
            let (af, bf) = (a.clone().map(|v| to_f64(&v)), b.clone().map(|v| to_f64(&v)));
            let len = ((bf[0] - af[0]).powi(2) + (bf[1] - af[1]).powi(2)).sqrt();
            let unorm = (uf[0] * uf[0] + uf[1] * uf[1]).sqrt();
            let failure: RefCell<Option<Error>> = RefCell::new(None);
            let integrand = |t: f64| -> f64 {
                let mu = [af[0] + (bf[0] - af[0]) * t, af[1] + (bf[1] - af[1]) * t];
                let h = invert_momentum_f64(d, mu, Side::Plus).and_then(|(x, y)| h_matrix_f64(d, x, y, Side::Plus));
                match h {
                    Ok(h) => uf[0] * uf[0] * h[0][0] + 2.0 * uf[0] * uf[1] * h[0][1] + uf[1] * uf[1] * h[1][1],
                    Err(e) => {
                        failure.borrow_mut().get_or_insert(e);
                        0.0
                    }
                }
            };
            // H vanishes to first order at the chord ends, so the endpoints are never sampled exactly
            let out = quadrature::integrate(integrand, 0.0, 1.0, 1e-9);
            if let Some(e) = failure.into_inner() {
                return Err(e);
            }
            Ok(FutakiValue { value: 0.5 * out.integral * len / unorm, exact: None })
        }
    }
}

/// Futaki values of the `x0`-creases at the given points, in parallel.
pub fn crease_scan(d: &AmbitoricData, xs: &[Rational]) -> Vec<Result<FutakiValue>> {
    xs.par_iter().map(|x0| futaki_crease(d, &Crease::X { x0: x0.clone() })).collect()
}
