//! Explicit families: Bochner-flat weighted projective planes, extremal and
//! Bach-flat perturbations of them, and sign regions of `s_+`.

pub mod families;
pub mod generate;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::ambitoric::{condition_report, extremal_affine_coeffs, AmbitoricData, Side};
use crate::error::{Error, Result};
use crate::exactmath::rational::qser;
use crate::exactmath::{int, AffineFn, Poly, Quartic, Rational};
use crate::polytope::{build_polytope, Facet, LabelledPolytope, Point};

pub use families::{bachflat_search, bisect_toward_seed, extremal_search, FamilyResult, Provenance, SearchKind};
pub use generate::{extremal_with_roots, normalize, random_extremal};

/// `lead * prod (z - r)` for at most four roots.
pub fn quartic_from_roots(lead: &Rational, roots: &[Rational]) -> Quartic {
    let p = roots.iter().fold(Poly::constant(lead.clone()), |acc, r| acc.mul(&Poly::linear_root(r)));
    Quartic::from_poly(&p)
}

/// `B = -(z - b1)(z - b2)(z - b3)(z - b4)`.
pub fn seed_b(betas: &[Rational; 4]) -> Quartic {
    quartic_from_roots(&-Rational::one(), betas)
}

fn check_increasing(betas: &[Rational], positive: bool) -> Result<()> {
    if positive && !betas[0].is_positive() {
        return Err(Error::Precondition(format!("beta1 = {} must be positive", betas[0])));
    }
    for w in betas.windows(2) {
        if w[0] >= w[1] {
            return Err(Error::Precondition(format!("betas must increase strictly: {} >= {}", w[0], w[1])));
        }
    }
    Ok(())
}

/// Bochner-flat weighted projective plane from `0 < b1 < b2 < b3 < b4`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WPPData {
    #[serde(with = "qser::vec")]
    pub betas: Vec<Rational>,
    /// Coprime, increasing.
    pub weights: [u64; 3],
    #[serde(with = "qser")]
    pub s_min: Rational,
    #[serde(with = "qser")]
    pub s_max: Rational,
    #[serde(with = "qser")]
    pub s_avg: Rational,
    pub simplex: LabelledPolytope,
}

/// Coprime positive integers proportional to the given positive rationals.
pub fn reduce_weights(p: &[Rational; 3]) -> [u64; 3] {
    use num_bigint::BigInt;
    let l = p.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let ints: Vec<BigInt> = p.iter().map(|q| (q * Rational::from_integer(l.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, n| acc.gcd(n));
    let mut w: Vec<u64> = ints.iter().map(|n| u64::try_from(n / &g).expect("weight fits in u64")).collect();
    w.sort_unstable();
    [w[0], w[1], w[2]]
}

/// Hyperbolic facet through the image of `x = z` or `y = z`: `c (z^2, -1)`, offset `c z`.
fn hyperbolic_facet(z: &Rational, c: &Rational, label: &str) -> Facet {
    Facet { u: [c * z * z, -c.clone()], lambda: c * z, label: label.to_string() }
}

pub fn wpp_from_beta(betas: [Rational; 4]) -> Result<WPPData> {
    check_increasing(&betas, true)?;
    let [b1, b2, b3, b4] = &betas;
    let p = [(b4 - b3) * (b1 + b2), (b4 - b2) * (b1 + b3), (b4 - b1) * (b2 + b3)];
    let six = int(6);
    let two = int(2);
    let s_min = &six * (b1 * b4 - b2 * b3);
    let s_max = &six * (b3 * b4 - b1 * b2);
    let s_avg = &two * b4 * (b1 + b2 + b3) - &two * (b1 * b2 + b2 * b3 + b3 * b1);
    // with A = -B the labels are 2/A'(b3), -2/B'(b1), -2/B'(b2)
    let bd = seed_b(&betas).derivative();
    let c_a2 = &two / -bd.eval(b3);
    let c_b1 = -&two / bd.eval(b1);
    let c_b2 = -&two / bd.eval(b2);
    let facets = vec![
        hyperbolic_facet(b1, &c_b1, "y=beta1"),
        hyperbolic_facet(b3, &c_a2, "x=alpha2"),
        hyperbolic_facet(b2, &c_b2, "y=beta2"),
    ];
    let simplex = LabelledPolytope::from_facets(facets.clone()).or_else(|_| {
        let mut r = facets;
        r.reverse();
        LabelledPolytope::from_facets(r)
    })?;
    Ok(WPPData { betas: betas.to_vec(), weights: reduce_weights(&p), s_min, s_max, s_avg, simplex })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "class", rename_all = "snake_case")]
pub enum EinsteinRegion {
    PositiveEverywhere,
    NegativeEverywhere,
    /// `s_+` vanishes along `zero_line` inside the polytope.
    MixedSign {
        #[serde(with = "qser::vec_arr2")]
        negative_vertices: Vec<Point>,
        zero_line: AffineFn,
    },
}

/// Sign of the affine `s_+` over the polytope, from its vertex values.
/// Returns the classification with the vertex values in polytope order.
pub fn einstein_region(d: &AmbitoricData) -> Result<(EinsteinRegion, Vec<Rational>)> {
    let r = condition_report(d);
    if !(r.extremal && r.bach_flat) {
        return Err(Error::Precondition("einstein_region needs extremal, Bach-flat data".into()));
    }
    let s = extremal_affine_coeffs(d, Side::Plus)?;
    let p = build_polytope(d)?;
    let vals: Vec<Rational> = p.vertices.iter().map(|v| s.eval(v)).collect();
    let region = if vals.iter().all(|v| v.is_positive()) {
        EinsteinRegion::PositiveEverywhere
    } else if vals.iter().all(|v| v.is_negative()) {
        EinsteinRegion::NegativeEverywhere
    } else {
        let negative_vertices = p.vertices.iter().zip(&vals).filter(|(_, v)| v.is_negative()).map(|(p, _)| p.clone()).collect();
        EinsteinRegion::MixedSign { negative_vertices, zero_line: s }
    };
    Ok((region, vals))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::frac;
    use crate::exactmath::linalg::nullspace;
    use crate::polytope::moments;
    use crate::stability::extremal_field;

    fn betas(v: [i64; 4]) -> [Rational; 4] {
        v.map(int)
    }

    #[test]
    fn wpp_1234() {
        let w = wpp_from_beta(betas([1, 2, 3, 4])).unwrap();
        assert_eq!(w.weights, [3, 8, 15]);
        assert_eq!((w.s_min.clone(), w.s_max.clone(), w.s_avg.clone()), (int(-12), int(60), int(26)));
        assert_eq!(w.simplex.vertices.len(), 3);
        let big = wpp_from_beta(betas([1, 2, 3, 100])).unwrap();
        assert_eq!(big.s_min, int(564));
        assert!(wpp_from_beta(betas([2, 1, 3, 4])).is_err());
        assert!(wpp_from_beta(betas([0, 1, 3, 4])).is_err());
    }

    #[test]
    fn weights_from_normals() {
        // the labelled normals satisfy sum p_i u_i = 0
        for b in [[1, 2, 3, 4], [1, 3, 4, 9], [2, 3, 7, 8]] {
            let w = wpp_from_beta(betas(b)).unwrap();
            let m: Vec<Vec<Rational>> = (0..2).map(|r| w.simplex.facets.iter().map(|f| f.u[r].clone()).collect()).collect();
            let ns = nullspace(&m);
            assert_eq!(ns.len(), 1);
            let k = &ns[0];
            let sgn = if k[0].is_negative() { int(-1) } else { int(1) };
            let k: Vec<Rational> = k.iter().map(|x| x * &sgn).collect();
            assert!(k.iter().all(|x| x.is_positive()));
            assert_eq!(reduce_weights(&[k[0].clone(), k[1].clone(), k[2].clone()]), w.weights, "{b:?}");
        }
    }

    #[test]
    fn curvature_extremes_match_moment_field() {
        // the printed values are half the Riemannian scalar curvature extremes
        let w = wpp_from_beta(betas([1, 2, 3, 4])).unwrap();
        let ef = extremal_field(&moments(&w.simplex).unwrap()).unwrap();
        let s = ef.scalar_affine();
        let vals: Vec<Rational> = w.simplex.vertices.iter().map(|v| s.eval(v)).collect();
        let min = vals.iter().min().unwrap().clone();
        let max = vals.iter().max().unwrap().clone();
        assert_eq!(min, w.s_min.clone() * int(2));
        assert_eq!(max, w.s_max.clone() * int(2));
        let pi = crate::polytope::polygon_integrals(&w.simplex.vertices);
        assert_eq!(pi.affine(&s.a, &s.b) / pi.area, w.s_avg.clone() * int(2));
    }

    #[test]
    fn weights_scale_invariant() {
        for t in [frac(1, 3), int(5), frac(7, 2)] {
            let b = betas([1, 2, 3, 4]).map(|x| x * &t);
            assert_eq!(wpp_from_beta(b).unwrap().weights, [3, 8, 15]);
        }
    }

    #[test]
    fn bach_flat_example_region() {
        let (r, vals) = einstein_region(&AmbitoricData::bach_flat_example()).unwrap();
        assert_eq!(r, EinsteinRegion::PositiveEverywhere);
        let mut vals = vals;
        vals.sort();
        assert_eq!(vals, vec![int(20), int(30), int(60), int(60)]);
    }

    #[test]
    fn region_needs_bach_flat() {
        let d = crate::stability::tests::sample_data()[2].clone();
        assert!(matches!(einstein_region(&d), Err(Error::Precondition(_))));
    }
}
