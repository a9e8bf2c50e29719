use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::rational::qser;
use crate::exactmath::{int, Rational};

use super::{det, sub, LabelledPolytope, Point};

/// `int 1`, `int mu_r` and `int mu_r mu_s` over a polygon.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolygonIntegrals {
    pub area: Rational,
    pub m: [Rational; 2],
    pub mm: [[Rational; 2]; 2],
}

impl PolygonIntegrals {
    pub fn zero() -> Self {
        let z = Rational::zero;
        PolygonIntegrals { area: z(), m: [z(), z()], mm: [[z(), z()], [z(), z()]] }
    }

    /// `int (<a, mu> + b)(<c, mu> + e)`
    pub fn affine_product(&self, a: &[Rational; 2], b: &Rational, c: &[Rational; 2], e: &Rational) -> Rational {
        let mut s = b * e * &self.area;
        for r in 0..2 {
            s += (&a[r] * e + &c[r] * b) * &self.m[r];
            for t in 0..2 {
                s += &a[r] * &c[t] * &self.mm[r][t];
            }
        }
        s
    }

    /// `int (<a, mu> + b)`
    pub fn affine(&self, a: &[Rational; 2], b: &Rational) -> Rational {
        b * &self.area + &a[0] * &self.m[0] + &a[1] * &self.m[1]
    }
}

/// Exact integrals over a CCW polygon, by fan triangulation from the vertex average.
pub fn polygon_integrals(vs: &[Point]) -> PolygonIntegrals {
    let n = vs.len();
    let mut out = PolygonIntegrals::zero();
    if n < 3 {
        return out;
    }
    let nr = int(n as i64);
    let c: Point = [vs.iter().map(|v| v[0].clone()).sum::<Rational>() / &nr, vs.iter().map(|v| v[1].clone()).sum::<Rational>() / &nr];
    for i in 0..n {
        let tri = [&c, &vs[i], &vs[(i + 1) % n]];
        let j = det(&sub(tri[1], tri[0]), &sub(tri[2], tri[0]));
        if j.is_zero() {
            continue;
        }
        let s: [Rational; 2] = std::array::from_fn(|r| tri.iter().map(|v| v[r].clone()).sum());
        out.area += &j / int(2);
        for r in 0..2 {
            out.m[r] += &j * &s[r] / int(6);
            for t in 0..2 {
                let diag: Rational = tri.iter().map(|v| &v[r] * &v[t]).sum();
                out.mm[r][t] += &j * (diag + &s[r] * &s[t]) / int(24);
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Moments {
    #[serde(with = "qser")]
    pub alpha: Rational,
    #[serde(with = "qser::arr2")]
    pub alpha_r: [Rational; 2],
    #[serde(with = "qser::mat2")]
    pub alpha_rs: [[Rational; 2]; 2],
    #[serde(with = "qser")]
    pub beta: Rational,
    #[serde(with = "qser::arr2")]
    pub beta_r: [Rational; 2],
}

pub fn interior_moments(p: &LabelledPolytope) -> Result<(Rational, [Rational; 2], [[Rational; 2]; 2])> {
    let pi = polygon_integrals(&p.vertices);
    if !pi.area.is_positive() {
        return Err(Error::DegeneratePolytope("zero area".into()));
    }
    Ok((pi.area, pi.m, pi.mm))
}

/// Measure of edge `i`: `dnu` with `u ^ dnu = -dv`, i.e. `|e| / |u|`.
pub fn edge_measure(p: &LabelledPolytope, i: usize) -> Rational {
    let (a, b) = p.edge(i);
    let u = &p.facets[i].u;
    let e = sub(b, a);
    -det(u, &e) / (&u[0] * &u[0] + &u[1] * &u[1])
}

pub fn boundary_moments(p: &LabelledPolytope) -> (Rational, [Rational; 2]) {
    let mut beta = Rational::zero();
    let mut beta_r = [Rational::zero(), Rational::zero()];
    for i in 0..p.vertices.len() {
        let m = edge_measure(p, i);
        let (a, b) = p.edge(i);
        for r in 0..2 {
            beta_r[r] += &m * (&a[r] + &b[r]) / int(2);
        }
        beta += m;
    }
    (beta, beta_r)
}

pub fn moments(p: &LabelledPolytope) -> Result<Moments> {
    let (alpha, alpha_r, alpha_rs) = interior_moments(p)?;
    let (beta, beta_r) = boundary_moments(p);
    Ok(Moments { alpha, alpha_r, alpha_rs, beta, beta_r })
}
