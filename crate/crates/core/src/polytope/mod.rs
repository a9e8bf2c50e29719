//! Rational Delzant polytopes of compactifiable ambitoric data.

pub mod clip;
pub mod lattice;
pub mod moments;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::ambitoric::{boundary_data, momentum_of, structural_violations, AmbitoricData, AmbitoricType, Side};
use crate::error::{Error, Result};
use crate::exactmath::rational::qser;
use crate::exactmath::{frac, int, Rational};

pub use clip::{clip_halfplane, clip_segment};
pub use lattice::{lattice_check, LatticeInfo};
pub use moments::{boundary_moments, interior_moments, moments, polygon_integrals, Moments, PolygonIntegrals};

pub type Point = [Rational; 2];

/// `{mu : <u, mu> + lambda >= 0}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Facet {
    #[serde(with = "qser::arr2")]
    pub u: [Rational; 2],
    #[serde(rename = "lambda", with = "qser")]
    pub lambda: Rational,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub label: String,
}

impl Facet {
    pub fn new(u: [Rational; 2], lambda: Rational) -> Self {
        Facet { u, lambda, label: String::new() }
    }

    pub fn eval(&self, p: &Point) -> Rational {
        &self.u[0] * &p[0] + &self.u[1] * &p[1] + &self.lambda
    }
}

/// Convex polygon with CCW vertices; edge `i` runs from `vertices[i]` to
/// `vertices[i + 1]` and lies on `facets[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelledPolytope {
    pub facets: Vec<Facet>,
    #[serde(with = "qser::vec_arr2")]
    pub vertices: Vec<Point>,
}

pub fn det(a: &Point, b: &Point) -> Rational {
    &a[0] * &b[1] - &a[1] * &b[0]
}

pub fn sub(a: &Point, b: &Point) -> Point {
    [&a[0] - &b[0], &a[1] - &b[1]]
}

pub fn shoelace(vs: &[Point]) -> Rational {
    let n = vs.len();
    (0..n).map(|i| det(&vs[i], &vs[(i + 1) % n])).sum::<Rational>() / int(2)
}

impl LabelledPolytope {
    /// Polygon cut out by facets listed in boundary order; vertex `i` is the
    /// intersection of facets `i - 1` and `i`.
    pub fn from_facets(facets: Vec<Facet>) -> Result<Self> {
        let n = facets.len();
        if n < 3 {
            return Err(Error::DegeneratePolytope(format!("{n} facets")));
        }
        let mut vertices = Vec::with_capacity(n);
        for i in 0..n {
            let (f, g) = (&facets[(i + n - 1) % n], &facets[i]);
            let dd = det(&f.u, &g.u);
            if dd.is_zero() {
                return Err(Error::DegeneratePolytope(format!("facets {} and {i} are parallel", (i + n - 1) % n)));
            }
            // solve <f.u, v> = -f.lambda, <g.u, v> = -g.lambda
            let v0 = (-&f.lambda * &g.u[1] + &g.lambda * &f.u[1]) / &dd;
            let v1 = (-&g.lambda * &f.u[0] + &f.lambda * &g.u[0]) / &dd;
            vertices.push([v0, v1]);
        }
        let p = LabelledPolytope { facets, vertices };
        p.check()?;
        Ok(p)
    }

    /// Convex, CCW, each vertex on its two facets and strictly inside the rest.
    pub fn check(&self) -> Result<()> {
        let n = self.vertices.len();
        if n != self.facets.len() || n < 3 {
            return Err(Error::DegeneratePolytope("facet and vertex counts differ".into()));
        }
        if !shoelace(&self.vertices).is_positive() {
            return Err(Error::DegeneratePolytope("vertices are not counterclockwise".into()));
        }
        for (i, v) in self.vertices.iter().enumerate() {
            for (j, f) in self.facets.iter().enumerate() {
                let val = f.eval(v);
                let on = j == i || j == (i + n - 1) % n;
                if on && !val.is_zero() {
                    return Err(Error::DegeneratePolytope(format!("vertex {i} is off facet {j}")));
                }
                if !on && !val.is_positive() {
                    return Err(Error::Orientation(format!("vertex {i} violates facet {j} ({val})")));
                }
            }
        }
        Ok(())
    }

    pub fn area(&self) -> Rational {
        shoelace(&self.vertices)
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.facets.iter().all(|f| !f.eval(p).is_negative())
    }

    pub fn contains_interior(&self, p: &Point) -> bool {
        self.facets.iter().all(|f| f.eval(p).is_positive())
    }

    pub fn edge(&self, i: usize) -> (&Point, &Point) {
        (&self.vertices[i], &self.vertices[(i + 1) % self.vertices.len()])
    }
}

/// Inward normal direction at `x = z` or `y = z` before scaling by `c_j`.
pub fn normal_direction(kind: AmbitoricType, z: &Rational) -> [Rational; 2] {
    match kind {
        AmbitoricType::Parabolic => [z.clone(), int(-1)],
        AmbitoricType::Hyperbolic => [z * z, int(-1)],
        AmbitoricType::Elliptic => [(z * z - int(1)) * frac(1, 2), -z.clone()],
    }
}

/// The polytope `mu_+(rectangle)` with its labelled normals.
pub fn build_polytope(d: &AmbitoricData) -> Result<LabelledPolytope> {
    let v = structural_violations(d);
    if !v.is_empty() {
        return Err(Error::Invalid(v));
    }
    let bd = boundary_data(d)?;
    let corners = d.corners();
    let mut imgs = Vec::with_capacity(4);
    for [x, y] in &corners {
        imgs.push(momentum_of(d.kind, Side::Plus, x.clone(), y.clone())?);
    }
    let un = |c: &Rational, z: &Rational| normal_direction(d.kind, z).map(|t| t * c);
    // edge order for the corner sequence (a1,b1), (a2,b1), (a2,b2), (a1,b2)
    let specs = [
        (un(&bd.c_beta[0], &d.beta[0]), 0usize, "y=beta1"),
        (un(&bd.c_alpha[1], &d.alpha[1]), 1, "x=alpha2"),
        (un(&bd.c_beta[1], &d.beta[1]), 2, "y=beta2"),
        (un(&bd.c_alpha[0], &d.alpha[0]), 3, "x=alpha1"),
    ];
    let mut facets: Vec<Facet> = specs
        .into_iter()
        .map(|(u, i, label)| {
            let v = &imgs[i];
            let lambda = -(&u[0] * &v[0] + &u[1] * &v[1]);
            Facet { u, lambda, label: label.to_string() }
        })
        .collect();
    let mut vertices = imgs;
    if shoelace(&vertices).is_negative() {
        vertices = vec![vertices[0].clone(), vertices[3].clone(), vertices[2].clone(), vertices[1].clone()];
        facets = vec![facets[3].clone(), facets[2].clone(), facets[1].clone(), facets[0].clone()];
    }
    let p = LabelledPolytope { facets, vertices };
    p.check()?;
    Ok(p)
}

/// Facet carrying `label` (`x=alpha1`, `y=beta2`, ...).
pub fn facet_by_label<'a>(p: &'a LabelledPolytope, label: &str) -> Option<&'a Facet> {
    p.facets.iter().find(|f| f.label == label)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::Quartic;

    #[test]
    fn example_polytope() {
        let p = build_polytope(&AmbitoricData::bach_flat_example()).unwrap();
        let want_u = [
            ("x=alpha1", [frac(4, 3), frac(-1, 3)]),
            ("x=alpha2", [frac(-3, 2), frac(1, 6)]),
            ("y=beta1", [int(0), frac(1, 2)]),
            ("y=beta2", [frac(1, 4), frac(-1, 4)]),
        ];
        for (l, u) in want_u {
            assert_eq!(facet_by_label(&p, l).unwrap().u, u, "{l}");
        }
        let mut vs = p.vertices.clone();
        vs.sort();
        let mut want = vec![[frac(-1, 2), int(0)], [frac(-1, 3), int(0)], [frac(-1, 3), frac(2, 3)], [frac(-1, 4), frac(3, 4)]];
        want.sort();
        assert_eq!(vs, want);
        // the elliptic-style explicit offsets agree with the hyperbolic display
        assert_eq!(facet_by_label(&p, "y=beta1").unwrap().lambda, int(0));
    }

    #[test]
    fn parabolic_toy_and_round_trip() {
        // A = (z-1)(2-z)(z^2+1), B = (z+1)(-z)(z^2+1) on [1,2] x [-1,0]
        let a = Quartic::from_ints([-1, 3, -3, 3, -2]);
        let b = Quartic::from_ints([-1, -1, -1, -1, 0]);
        let d = AmbitoricData::new(AmbitoricType::Parabolic, a, b, [int(1), int(2)], [int(-1), int(0)]);
        let p = build_polytope(&d).unwrap();
        // u at x = alpha1 is c1 (alpha1, -1) with c1 = 2/A'(1) = 1
        assert_eq!(facet_by_label(&p, "x=alpha1").unwrap().u, [int(1), int(-1)]);
        let q = LabelledPolytope::from_facets(p.facets.clone()).unwrap();
        assert_eq!(q.vertices, p.vertices);
        let js = serde_json::to_string(&p).unwrap();
        assert_eq!(serde_json::from_str::<LabelledPolytope>(&js).unwrap(), p);
    }

    #[test]
    fn parallel_facets_rejected() {
        let f = |u: [i64; 2], l: i64| Facet::new(u.map(int), int(l));
        assert!(LabelledPolytope::from_facets(vec![f([1, 0], 0), f([-1, 0], 1), f([1, 0], 2)]).is_err());
    }
}
