use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::poly::Poly;
use super::quartic::Quartic;
use super::rational::{frac, int, Rational};

/// `q(z) = q0 z^2 + 2 q1 z + q2`. Note the factor 2 on the middle term:
/// `q(z) = z` is `(0, 1/2, 0)`. Use [`Quadratic::from_plain`] when starting
/// from ordinary coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Quadratic {
    #[serde(with = "super::rational::qser")]
    pub q0: Rational,
    #[serde(with = "super::rational::qser")]
    pub q1: Rational,
    #[serde(with = "super::rational::qser")]
    pub q2: Rational,
}

impl Quadratic {
    pub fn new(q0: Rational, q1: Rational, q2: Rational) -> Self {
        Quadratic { q0, q1, q2 }
    }

    pub fn zero() -> Self {
        Quadratic::new(int(0), int(0), int(0))
    }

    /// From plain coefficients `c2 z^2 + c1 z + c0`.
    pub fn from_plain(c2: Rational, c1: Rational, c0: Rational) -> Self {
        Quadratic::new(c2, c1 / int(2), c0)
    }

    /// Plain coefficients `[c2, c1, c0]`.
    pub fn to_plain(&self) -> [Rational; 3] {
        [self.q0.clone(), &self.q1 * int(2), self.q2.clone()]
    }

    /// q = 1
    pub fn one() -> Self {
        Quadratic::new(int(0), int(0), int(1))
    }

    /// q = z
    pub fn z() -> Self {
        Quadratic::new(int(0), frac(1, 2), int(0))
    }

    /// q = 1 + z^2
    pub fn one_plus_z2() -> Self {
        Quadratic::new(int(1), int(0), int(1))
    }

    pub fn is_zero(&self) -> bool {
        self.q0.is_zero() && self.q1.is_zero() && self.q2.is_zero()
    }

    pub fn eval(&self, z: &Rational) -> Rational {
        &self.q0 * z * z + &self.q1 * z * int(2) + &self.q2
    }

    pub fn polarize(&self, x: &Rational, y: &Rational) -> Rational {
        &self.q0 * x * y + &self.q1 * (x + y) + &self.q2
    }

    /// `Q(q) = q1^2 - q0 q2`
    pub fn disc(&self) -> Rational {
        &self.q1 * &self.q1 - &self.q0 * &self.q2
    }

    pub fn inner(&self, p: &Quadratic) -> Rational {
        &self.q1 * &p.q1 - (&self.q2 * &p.q0 + &self.q0 * &p.q2) / int(2)
    }

    pub fn bracket(&self, w: &Quadratic) -> Quadratic {
        let two = int(2);
        Quadratic::new(
            &two * (&self.q0 * &w.q1 - &self.q1 * &w.q0),
            &self.q0 * &w.q2 - &self.q2 * &w.q0,
            &two * (&self.q1 * &w.q2 - &self.q2 * &w.q1),
        )
    }

    pub fn scale(&self, s: &Rational) -> Quadratic {
        Quadratic::new(&self.q0 * s, &self.q1 * s, &self.q2 * s)
    }

    pub fn to_poly(&self) -> Poly {
        let [c2, c1, c0] = self.to_plain();
        Poly::new(vec![c0, c1, c2])
    }

    /// Panics when `p` has degree above 2.
    pub fn from_poly(p: &Poly) -> Self {
        let c = p.coeffs();
        assert!(c.len() <= 3, "polynomial of degree {} is not quadratic", c.len() - 1);
        let get = |k: usize| c.get(k).cloned().unwrap_or_else(Rational::zero);
        Quadratic::from_plain(get(2), get(1), get(0))
    }

    /// The 2x2 minors of the coefficient triples of `self` and `o`; all zero iff linearly dependent.
    pub fn minors(&self, o: &Quadratic) -> [Rational; 3] {
        [
            &self.q0 * &o.q1 - &self.q1 * &o.q0,
            &self.q0 * &o.q2 - &self.q2 * &o.q0,
            &self.q1 * &o.q2 - &self.q2 * &o.q1,
        ]
    }

    pub fn is_parallel(&self, o: &Quadratic) -> bool {
        self.minors(o).iter().all(Zero::is_zero)
    }
}

impl fmt::Display for Quadratic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})z^2 + 2({})z + ({})", self.q0, self.q1, self.q2)
    }
}

pub fn polarize(q: &Quadratic, x: &Rational, y: &Rational) -> Rational {
    q.polarize(x, y)
}

/// `{q,w} = q' w - w' q`
pub fn poisson_bracket(q: &Quadratic, w: &Quadratic) -> Quadratic {
    q.bracket(w)
}

/// `(Q(q), <q,p>)`
pub fn quadratic_invariants(q: &Quadratic, p: &Quadratic) -> (Rational, Rational) {
    (q.disc(), q.inner(p))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transvectant {
    pub qp: Quadratic,
    pub wronskian: Quadratic,
}

/// `q.P = q P'' - 3 q' P' + 6 q'' P` together with `{q, q.P}`.
pub fn transvect(q: &Quadratic, p: &Quartic) -> Transvectant {
    let qq = q.to_poly();
    let pp = p.to_poly();
    let raw = qq
        .mul(&pp.derivative().derivative())
        .sub(&qq.derivative().mul(&pp.derivative()).scale(&int(3)))
        .add(&qq.derivative().derivative().mul(&pp).scale(&int(6)));
    assert!(raw.degree().is_none_or(|d| d <= 2), "transvectant kept a cubic or quartic term");
    let qp = Quadratic::from_poly(&raw);
    let wronskian = q.bracket(&qp);
    Transvectant { qp, wronskian }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rational::{frac, int};
    use proptest::prelude::*;

    fn qd(a: i64, b: (i64, i64), c: i64) -> Quadratic {
        Quadratic::new(int(a), frac(b.0, b.1), int(c))
    }

    #[test]
    fn polarize_examples() {
        assert_eq!(polarize(&Quadratic::z(), &int(2), &int(3)), frac(5, 2));
        assert_eq!(polarize(&Quadratic::one_plus_z2(), &int(2), &int(2)), int(5));
        assert_eq!(polarize(&Quadratic::one(), &frac(7, 3), &int(-4)), int(1));
    }

    #[test]
    fn bracket_examples() {
        let z2 = qd(1, (0, 1), 0);
        assert_eq!(poisson_bracket(&Quadratic::z(), &z2), qd(-1, (0, 1), 0));
        assert_eq!(poisson_bracket(&z2, &z2), Quadratic::zero());
        assert_eq!(poisson_bracket(&Quadratic::one(), &z2), qd(0, (-1, 1), 0));
    }

    #[test]
    fn bracket_matches_derivative_definition() {
        let q = Quadratic::new(frac(3, 2), frac(-1, 3), int(5));
        let w = Quadratic::new(int(-2), frac(7, 4), frac(1, 5));
        let (qp, wp) = (q.to_poly(), w.to_poly());
        let direct = qp.derivative().mul(&wp).sub(&wp.derivative().mul(&qp));
        assert_eq!(Quadratic::from_poly(&direct), q.bracket(&w));
    }

    #[test]
    fn invariants_examples() {
        let (qq, _) = quadratic_invariants(&Quadratic::one_plus_z2(), &Quadratic::one());
        assert_eq!(qq, int(-1));
        let (qz, inner) = quadratic_invariants(&Quadratic::z(), &Quadratic::z());
        assert_eq!(qz, frac(1, 4));
        assert_eq!(inner, qz);
    }

    #[test]
    fn transvectant_examples() {
        let z4 = Quartic::from_ints([1, 0, 0, 0, 0]);
        assert_eq!(transvect(&Quadratic::one(), &z4).qp, qd(12, (0, 1), 0));
        assert_eq!(transvect(&Quadratic::z(), &z4).qp, Quadratic::zero());
        let t = transvect(&Quadratic::one_plus_z2(), &Quartic::zero());
        assert_eq!((t.qp, t.wronskian), (Quadratic::zero(), Quadratic::zero()));
    }

    #[test]
    fn plain_round_trip() {
        let q = Quadratic::from_plain(int(3), int(5), int(-1));
        assert_eq!(q.q1, frac(5, 2));
        assert_eq!(q.to_plain(), [int(3), int(5), int(-1)]);
        assert_eq!(q.eval(&int(2)), int(21));
    }

    fn small_q() -> impl Strategy<Value = Rational> {
        (-40i64..40, 1i64..12).prop_map(|(n, d)| frac(n, d))
    }

    fn quad() -> impl Strategy<Value = Quadratic> {
        (small_q(), small_q(), small_q()).prop_map(|(a, b, c)| Quadratic::new(a, b, c))
    }

    fn quart() -> impl Strategy<Value = Quartic> {
        proptest::array::uniform5(small_q()).prop_map(Quartic::new)
    }

    proptest! {
        #[test]
        fn q_identity(p in quad(), pt in quad()) {
            let lhs = p.bracket(&pt).disc();
            let ip = p.inner(&pt);
            let rhs = int(4) * (&ip * &ip - p.disc() * pt.disc());
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn bracket_antisymmetric_and_orthogonal(q in quad(), w in quad()) {
            let b = q.bracket(&w);
            prop_assert_eq!(b.clone(), w.bracket(&q).scale(&int(-1)));
            prop_assert!(q.inner(&b).is_zero());
            prop_assert!(w.inner(&b).is_zero());
        }

        #[test]
        fn wronskian_orthogonal(q in quad(), p in quart()) {
            let t = transvect(&q, &p);
            prop_assert!(q.inner(&t.wronskian).is_zero());
        }

        #[test]
        fn polarization_symmetric_and_diagonal(q in quad(), x in small_q(), y in small_q()) {
            prop_assert_eq!(q.polarize(&x, &y), q.polarize(&y, &x));
            prop_assert_eq!(q.polarize(&x, &x), q.eval(&x));
        }

        #[test]
        fn inner_is_polarized_disc(q in quad()) {
            prop_assert_eq!(q.inner(&q), q.disc());
        }
    }
}
