use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::{transvect, Quadratic, Quartic, Rational};

/// `A = q pi + P`, `B = q pi - P`; requires `<pi, q> = 0`.
pub fn build_extremal_family(q: &Quadratic, pi: &Quadratic, p: &Quartic) -> Result<(Quartic, Quartic)> {
    let ip = q.inner(pi);
    if !ip.is_zero() {
        return Err(Error::Precondition(format!("<pi, q> = {ip}, expected 0")));
    }
    let qpi = Quartic::product(q, pi);
    Ok((qpi.add(p), qpi.sub(p)))
}

/// Bach-flatness of the family member: `pi` and `{q, q.P}` linearly dependent.
pub fn family_bach_flat(q: &Quadratic, pi: &Quadratic, p: &Quartic) -> bool {
    pi.is_parallel(&transvect(q, p).wronskian)
}

/// The three 2x2 minors behind [`family_bach_flat`].
pub fn family_minors(q: &Quadratic, pi: &Quadratic, p: &Quartic) -> [Rational; 3] {
    pi.minors(&transvect(q, p).wronskian)
}

/// Calabi-type coefficient tests for `V` against curvature `k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CalabiReport {
    pub extremal: bool,
    pub bach_flat: bool,
    pub csc: bool,
    pub kahler_einstein: bool,
}

pub fn calabi_check(v: &Quartic, k: &Rational) -> CalabiReport {
    let a = |i: usize| v.a(i).clone();
    let extremal = &a(2) == k;
    let bach = (Rational::from_integer(4.into()) * a(0) * a(4) - a(1) * a(3)).is_zero();
    let csc = extremal && a(0).is_zero();
    CalabiReport {
        extremal,
        bach_flat: extremal && bach,
        csc,
        kahler_einstein: csc && a(3).is_zero(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ambitoric::{condition_report, AmbitoricData, AmbitoricType};
    use crate::exactmath::{frac, int};
    use proptest::prelude::*;

    fn datum(kind: AmbitoricType, a: Quartic, b: Quartic) -> AmbitoricData {
        AmbitoricData::new(kind, a, b, [int(2), int(3)], [int(0), int(1)])
    }

    #[test]
    fn examples() {
        let z4 = Quartic::from_ints([1, 0, 0, 0, 0]);
        let (a, b) = build_extremal_family(&Quadratic::one(), &Quadratic::z(), &z4).unwrap();
        assert_eq!(a, Quartic::from_ints([1, 0, 0, 1, 0]));
        assert_eq!(b, Quartic::from_ints([-1, 0, 0, 1, 0]));
        assert!(condition_report(&datum(AmbitoricType::Parabolic, a, b)).extremal);

        let p = Quartic::from_ints([3, -1, 2, 5, 1]);
        let (a, b) = build_extremal_family(&Quadratic::z(), &Quadratic::zero(), &p).unwrap();
        assert_eq!(b, a.neg());

        let pi = Quadratic::new(int(1), int(0), int(-1));
        assert!(build_extremal_family(&Quadratic::one_plus_z2(), &pi, &p).is_ok());
        assert!(build_extremal_family(&Quadratic::one_plus_z2(), &Quadratic::one(), &p).is_err());
    }

    #[test]
    fn calabi_examples() {
        let k = frac(3, 2);
        let v = Quartic::new([int(1), int(1), k.clone(), int(4), int(1)]);
        let r = calabi_check(&v, &k);
        assert!(r.extremal && r.bach_flat && !r.csc && !r.kahler_einstein);
        let r = calabi_check(&Quartic::new([int(0), int(0), k.clone(), int(0), int(0)]), &k);
        assert!(r.extremal && r.bach_flat && r.csc && r.kahler_einstein);
        assert!(!calabi_check(&v, &int(0)).extremal);
    }

    fn small() -> impl Strategy<Value = Rational> {
        (-6i64..=6, 1i64..4).prop_map(|(n, d)| frac(n, d))
    }

    /// A `pi` orthogonal to the type's `q`, from two free parameters.
    fn orth_pi(kind: AmbitoricType, s: Rational, t: Rational) -> Quadratic {
        match kind {
            // <pi, 1> = -pi0/2
            AmbitoricType::Parabolic => Quadratic::new(int(0), s, t),
            // <pi, z> = pi1/2
            AmbitoricType::Hyperbolic => Quadratic::new(s, int(0), t),
            // <pi, 1+z^2> = -(pi0+pi2)/2
            AmbitoricType::Elliptic => Quadratic::new(s.clone(), t, -s),
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]
        #[test]
        fn family_is_extremal(k in 0usize..3, s in small(), t in small(), p in proptest::array::uniform5(small())) {
            let kind = AmbitoricType::ALL[k];
            let pi = orth_pi(kind, s, t);
            let (a, b) = build_extremal_family(&kind.q(), &pi, &Quartic::new(p)).unwrap();
            prop_assert!(condition_report(&datum(kind, a, b)).extremal);
        }

        #[test]
        fn bach_flat_iff_minors_vanish(
            k in 0usize..3, s in small(), t in small(), p in proptest::array::uniform5(small()), force in any::<bool>()
        ) {
            let kind = AmbitoricType::ALL[k];
            let q = kind.q();
            let mut p = Quartic::new(p);
            let mut pi = orth_pi(kind, s, t);
            if force {
                // pick pi along the wronskian to land on the Bach-flat locus
                let w = transvect(&q, &p).wronskian;
                if !w.is_zero() {
                    pi = w;
                } else {
                    p = Quartic::zero();
                }
            }
            let (a, b) = build_extremal_family(&q, &pi, &p).unwrap();
            let rep = condition_report(&datum(kind, a, b));
            prop_assert_eq!(rep.bach_flat, family_bach_flat(&q, &pi, &p));
        }
    }
}
