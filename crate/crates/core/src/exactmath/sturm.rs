//! Exact sign analysis on intervals via Sturm sequences.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::poly::Poly;
use super::quartic::Quartic;
use super::rational::{int, midpoint, qser, sign, Rational};
use super::MathError;

/// An interval `[lo, hi]` known to contain a root; `lo == hi` when the root is exact.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootInterval {
    #[serde(with = "qser")]
    pub lo: Rational,
    #[serde(with = "qser")]
    pub hi: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "class", rename_all = "snake_case")]
pub enum Positivity {
    Positive,
    NonNegativeWithRoot { root: RootInterval },
    /// `witness` is a rational point with `P(witness) <= 0` (strictly negative unless `P == 0`).
    ChangesSign {
        #[serde(with = "qser")]
        witness: Rational,
    },
}

impl Positivity {
    pub fn is_positive(&self) -> bool {
        matches!(self, Positivity::Positive)
    }
}

struct Sturm {
    seq: Vec<Poly>,
}

impl Sturm {
    fn new(p: &Poly) -> Self {
        let mut seq = vec![p.clone(), p.derivative()];
        while !seq.last().expect("nonempty").is_zero() {
            let n = seq.len();
            let (_, r) = seq[n - 2].div_rem(&seq[n - 1]);
            seq.push(r.scale(&int(-1)));
        }
        seq.pop();
        Sturm { seq }
    }

    fn variations(&self, z: &Rational) -> usize {
        let mut last = 0;
        let mut v = 0;
        for p in &self.seq {
            let s = p.sign_at(z);
            if s != 0 {
                if last != 0 && s != last {
                    v += 1;
                }
                last = s;
            }
        }
        v
    }

    /// Distinct roots in `(lo, hi]`.
    fn count(&self, lo: &Rational, hi: &Rational) -> usize {
        self.variations(lo) - self.variations(hi)
    }
}

/// Isolating intervals for the roots of a squarefree `s` in `(lo, hi)`, where
/// neither endpoint is a root. Each returned interval has non-root endpoints
/// and contains exactly one root; intervals are disjoint and sorted.
fn isolate(s: &Poly, st: &Sturm, lo: Rational, hi: Rational, n: usize, out: &mut Vec<(Rational, Rational, Option<Rational>)>) {
    if n == 0 {
        return;
    }
    if n == 1 {
        out.push((lo, hi, None));
        return;
    }
    let m = midpoint(&lo, &hi);
    if s.sign_at(&m) == 0 {
        let mut d = (&hi - &lo) / int(4);
        loop {
            let (l, r) = (&m - &d, &m + &d);
            if s.sign_at(&l) != 0 && s.sign_at(&r) != 0 && st.count(&l, &r) == 1 {
                let nl = st.count(&lo, &l);
                let nr = st.count(&r, &hi);
                isolate(s, st, lo, l.clone(), nl, out);
                out.push((l, r.clone(), Some(m)));
                isolate(s, st, r, hi, nr, out);
                return;
            }
            d /= int(2);
        }
    }
    let nl = st.count(&lo, &m);
    isolate(s, st, lo, m.clone(), nl, out);
    isolate(s, st, m, hi, n - nl, out);
}

/// A non-root point strictly between `a` and the single root in `(a, hi)`
/// (`toward_hi = false`), or between that root and `hi` (`toward_hi = true`).
fn point_beside(s: &Poly, st: &Sturm, mut lo: Rational, mut hi: Rational, toward_hi: bool) -> Rational {
    loop {
        let m = midpoint(&lo, &hi);
        if s.sign_at(&m) == 0 {
            return if toward_hi { midpoint(&m, &hi) } else { midpoint(&lo, &m) };
        }
        let left_has_root = st.count(&lo, &m) == 1;
        match (toward_hi, left_has_root) {
            (false, true) => hi = m,
            (false, false) => return m,
            (true, true) => return m,
            (true, false) => lo = m,
        }
    }
}

/// Exact sign classification of `p` on `(a, b)`; with `strict = false` the
/// endpoints are included and an endpoint zero demotes `Positive`.
pub fn positivity(p: &Poly, a: &Rational, b: &Rational, strict: bool) -> Result<Positivity, MathError> {
    if a >= b {
        return Err(MathError::EmptyInterval { a: a.to_string(), b: b.to_string() });
    }
    if p.is_zero() {
        return Ok(Positivity::ChangesSign { witness: midpoint(a, b) });
    }
    let s = p.squarefree().deflate(a).deflate(b);
    let st = Sturm::new(&s);
    let n = st.count(a, b);
    let mut iso = Vec::new();
    isolate(&s, &st, a.clone(), b.clone(), n, &mut iso);

    let mut probes = Vec::new();
    if iso.is_empty() {
        probes.push(midpoint(a, b));
    } else {
        let first = &iso[0];
        probes.push(if &first.0 > a { first.0.clone() } else { point_beside(&s, &st, a.clone(), first.1.clone(), false) });
        for w in iso.windows(2) {
            probes.push(w[0].1.clone());
        }
        let last = iso.last().expect("nonempty");
        probes.push(if &last.1 < b { last.1.clone() } else { point_beside(&s, &st, last.0.clone(), b.clone(), true) });
    }
    if let Some(w) = probes.iter().find(|z| sign(&p.eval(z)) < 0) {
        return Ok(Positivity::ChangesSign { witness: w.clone() });
    }
    if let Some((lo, hi, exact)) = iso.into_iter().next() {
        let root = match exact {
            Some(r) => RootInterval { lo: r.clone(), hi: r },
            None => RootInterval { lo, hi },
        };
        return Ok(Positivity::NonNegativeWithRoot { root });
    }
    if !strict {
        for e in [a, b] {
            if p.eval(e).is_zero() {
                return Ok(Positivity::NonNegativeWithRoot { root: RootInterval { lo: e.clone(), hi: e.clone() } });
            }
        }
    }
    Ok(Positivity::Positive)
}

pub fn sturm_positive_on(p: &Quartic, a: &Rational, b: &Rational, strict: bool) -> Result<Positivity, MathError> {
    positivity(&p.to_poly(), a, b, strict)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rational::{frac, to_f64};
    use proptest::prelude::*;

    fn example_a() -> Quartic {
        Quartic::from_ints([-1, 4, -1, -6, 0])
    }

    #[test]
    fn examples() {
        assert_eq!(sturm_positive_on(&example_a(), &int(2), &int(3), true).unwrap(), Positivity::Positive);
        match sturm_positive_on(&example_a(), &int(0), &int(2), true).unwrap() {
            Positivity::ChangesSign { witness } => assert!(example_a().eval(&witness) < int(0)),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            sturm_positive_on(&Quartic::zero(), &int(0), &int(1), true).unwrap(),
            Positivity::ChangesSign { .. }
        ));
        assert!(sturm_positive_on(&example_a(), &int(3), &int(2), true).is_err());
    }

    #[test]
    fn endpoint_roots_and_strictness() {
        // closed interval: A(2) = 0
        assert_eq!(
            sturm_positive_on(&example_a(), &int(2), &int(3), false).unwrap(),
            Positivity::NonNegativeWithRoot { root: RootInterval { lo: int(2), hi: int(2) } }
        );
    }

    #[test]
    fn interior_double_root() {
        // -(z-1)(z-3)(z-2)^2 on (1,3)
        let p = Poly::new(vec![int(-1), int(3)]).mul(&Poly::new(vec![int(-3), int(1)]));
        let p = p.mul(&Poly::new(vec![int(4), int(-4), int(1)])).scale(&int(-1));
        let q = Quartic::from_poly(&p);
        match sturm_positive_on(&q, &int(1), &int(3), true).unwrap() {
            Positivity::NonNegativeWithRoot { root } => {
                assert!(root.lo <= int(2) && int(2) <= root.hi);
            }
            other => panic!("{other:?}"),
        }
        // irrational double root: (z^2-2)^2 on (0,2)
        let q = Quartic::from_ints([1, 0, -4, 0, 4]);
        match sturm_positive_on(&q, &int(0), &int(2), true).unwrap() {
            Positivity::NonNegativeWithRoot { root } => {
                assert!(to_f64(&root.lo) <= 2f64.sqrt() && 2f64.sqrt() <= to_f64(&root.hi));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn sign_change_between_close_roots() {
        // (z - 1/1000)(z - 2/1000)(z^2 + 1) dips below zero on a tiny window
        let p = Poly::linear_root(&frac(1, 1000)).mul(&Poly::linear_root(&frac(2, 1000))).mul(&Poly::new(vec![int(1), int(0), int(1)]));
        let q = Quartic::from_poly(&p);
        match sturm_positive_on(&q, &int(-1), &int(1), true).unwrap() {
            Positivity::ChangesSign { witness } => assert!(q.eval(&witness) < int(0)),
            other => panic!("{other:?}"),
        }
    }

    fn coef() -> impl Strategy<Value = Rational> {
        (-6i64..=6, 1i64..4).prop_map(|(n, d)| frac(n, d))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]
        #[test]
        fn agrees_with_dense_sampling(
            roots in proptest::collection::vec(coef(), 0..4),
            lead in prop_oneof![Just(1i64), Just(-1i64)],
            extra in coef(),
            lo in -3i64..2,
            len in 1i64..4,
        ) {
            let mut p = Poly::constant(int(lead));
            for r in &roots {
                p = p.mul(&Poly::linear_root(r));
            }
            if roots.len() < 4 {
                p = p.add(&Poly::constant(extra.clone()));
            }
            let q = Quartic::from_poly(&p);
            let (a, b) = (int(lo), int(lo + len));
            let verdict = sturm_positive_on(&q, &a, &b, true).unwrap();
            let mut min = None::<Rational>;
            for k in 1..1000i64 {
                let z = &a + (&b - &a) * frac(k, 1000);
                let v = q.eval(&z);
                if min.as_ref().is_none_or(|m| &v < m) {
                    min = Some(v);
                }
            }
            let min = min.unwrap();
            match verdict {
                Positivity::Positive => prop_assert!(min > int(0)),
                Positivity::NonNegativeWithRoot { .. } => prop_assert!(min >= int(0)),
                Positivity::ChangesSign { witness } => {
                    prop_assert!(q.eval(&witness) < int(0) || q.is_zero());
                    prop_assert!(witness > a && witness < b);
                }
            }
            if min < int(0) {
                let is_changes = matches!(sturm_positive_on(&q, &a, &b, true).unwrap(), Positivity::ChangesSign { .. });
                prop_assert!(is_changes);
            }
        }
    }
}
