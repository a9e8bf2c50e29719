use num_bigint::BigInt;
use num_integer::{ExtendedGcd, Integer};
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::rational::qser;
use crate::exactmath::Rational;

use super::{det, LabelledPolytope};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeInfo {
    pub is_lattice: bool,
    /// Rows `(a, b)/L` and `(0, d)/L` of the Hermite normal form.
    #[serde(with = "qser::mat2")]
    pub basis: [[Rational; 2]; 2],
    #[serde(with = "qser")]
    pub covolume: Rational,
    /// Adjacent normals form a basis of Q^2 at every vertex.
    pub vertex_condition: bool,
}

/// Row Hermite normal form `[[a, b], [0, d]]`, `a, d > 0`, `0 <= b < d`, of
/// the lattice spanned by integer vectors; `None` if they do not span a rank-2 lattice.
pub fn hnf2(vs: &[[BigInt; 2]]) -> Option<[[BigInt; 2]; 2]> {
    let mut r1: Option<[BigInt; 2]> = None;
    let mut d = BigInt::zero();
    for v in vs {
        match r1.take() {
            None if v[0].is_zero() => {
                d = d.gcd(&v[1]);
            }
            None => r1 = Some(v.clone()),
            Some(r) => {
                if v[0].is_zero() {
                    d = d.gcd(&v[1]);
                    r1 = Some(r);
                    continue;
                }
                let ExtendedGcd { gcd: g, x: s, y: t, .. } = r[0].extended_gcd(&v[0]);
                let combined = [&s * &r[0] + &t * &v[0], &s * &r[1] + &t * &v[1]];
                let (p, q) = (&v[0] / &g, &r[0] / &g);
                let killed = &p * &r[1] - &q * &v[1];
                d = d.gcd(&killed);
                r1 = Some(combined);
            }
        }
    }
    let mut r = r1?;
    if d.is_zero() {
        return None;
    }
    if r[0].is_negative() {
        r = [-&r[0], -&r[1]];
    }
    let b = r[1].mod_floor(&d);
    Some([[r[0].clone(), b], [BigInt::zero(), d]])
}

pub fn lattice_check(p: &LabelledPolytope) -> Result<LatticeInfo> {
    if p.facets.iter().any(|f| f.u.iter().all(Zero::is_zero)) {
        return Err(Error::Malformed("zero facet normal".into()));
    }
    let l = p
        .facets
        .iter()
        .flat_map(|f| f.u.iter().map(|c| c.denom().clone()))
        .fold(BigInt::one(), |acc, d| acc.lcm(&d));
    let lr = Rational::from_integer(l.clone());
    let ints: Vec<[BigInt; 2]> = p
        .facets
        .iter()
        .map(|f| f.u.clone().map(|c| (c * &lr).to_integer()))
        .collect();
    let n = p.facets.len();
    let vertex_condition = (0..n).all(|i| !det(&p.facets[(i + n - 1) % n].u, &p.facets[i].u).is_zero());
    match hnf2(&ints) {
        Some(h) => {
            let basis = h.clone().map(|row| row.map(|c| Rational::new(c, l.clone())));
            let covolume = Rational::new(&h[0][0] * &h[1][1], &l * &l);
            Ok(LatticeInfo { is_lattice: true, basis, covolume, vertex_condition })
        }
        None => Ok(LatticeInfo {
            is_lattice: false,
            basis: [[Rational::zero(), Rational::zero()], [Rational::zero(), Rational::zero()]],
            covolume: Rational::zero(),
            vertex_condition,
        }),
    }
}
