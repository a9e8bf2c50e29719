use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::poly::Poly;
use super::quadratic::Quadratic;
use super::rational::{int, to_f64, Q, Rational};
use super::MathError;

/// `c4 z^4 + c3 z^3 + c2 z^2 + c1 z + c0`, stored descending.
///
/// Coefficient names used throughout the crate:
///
/// | index | power | name |
/// |-------|-------|------|
/// | 0     | z^4   | a0 / b0 |
/// | 1     | z^3   | a1 / b1 |
/// | 2     | z^2   | a2 / b2 |
/// | 3     | z     | a3 / b3 |
/// | 4     | 1     | a4 / b4 |
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quartic {
    c: [Rational; 5],
}

impl Quartic {
    /// Descending coefficients `[c4, c3, c2, c1, c0]`.
    pub fn new(c: [Rational; 5]) -> Self {
        Quartic { c }
    }

    pub fn from_ints(c: [i64; 5]) -> Self {
        Quartic::new(c.map(int))
    }

    pub fn zero() -> Self {
        Quartic::from_ints([0; 5])
    }

    pub fn coeffs(&self) -> &[Rational; 5] {
        &self.c
    }

    /// Coefficient by name: `a(0)` multiplies z^4, `a(4)` is the constant term.
    pub fn a(&self, i: usize) -> &Rational {
        &self.c[i]
    }

    /// Coefficient of `z^k`.
    pub fn coeff(&self, k: usize) -> &Rational {
        &self.c[4 - k]
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    pub fn eval(&self, z: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for a in &self.c {
            acc = acc * z + a;
        }
        acc
    }

    pub fn eval_f64(&self, z: f64) -> f64 {
        self.c.iter().fold(0.0, |acc, a| acc * z + to_f64(a))
    }

    /// `k`-th derivative evaluated in floating point.
    pub fn eval_deriv_f64(&self, z: f64, k: usize) -> f64 {
        let mut coef: Vec<f64> = self.c.iter().map(to_f64).collect();
        for _ in 0..k {
            let n = coef.len();
            if n <= 1 {
                return 0.0;
            }
            coef = coef[..n - 1].iter().enumerate().map(|(i, a)| a * (n - 1 - i) as f64).collect();
        }
        coef.iter().fold(0.0, |acc, a| acc * z + a)
    }

    pub fn derivative(&self) -> Quartic {
        let c = &self.c;
        Quartic::new([
            int(0),
            &c[0] * int(4),
            &c[1] * int(3),
            &c[2] * int(2),
            c[3].clone(),
        ])
    }

    pub fn to_poly(&self) -> Poly {
        Poly::new(self.c.iter().rev().cloned().collect())
    }

    /// Panics above degree 4.
    pub fn from_poly(p: &Poly) -> Quartic {
        let c = p.coeffs();
        assert!(c.len() <= 5, "polynomial of degree {} is not quartic", c.len() - 1);
        let get = |k: usize| c.get(k).cloned().unwrap_or_else(Rational::zero);
        Quartic::new([get(4), get(3), get(2), get(1), get(0)])
    }

    pub fn from_quadratic(q: &Quadratic) -> Quartic {
        Quartic::from_poly(&q.to_poly())
    }

    /// Product of two quadratics.
    pub fn product(p: &Quadratic, q: &Quadratic) -> Quartic {
        Quartic::from_poly(&p.to_poly().mul(&q.to_poly()))
    }

    pub fn add(&self, o: &Quartic) -> Quartic {
        Quartic::new(std::array::from_fn(|i| &self.c[i] + &o.c[i]))
    }

    pub fn sub(&self, o: &Quartic) -> Quartic {
        Quartic::new(std::array::from_fn(|i| &self.c[i] - &o.c[i]))
    }

    pub fn scale(&self, s: &Rational) -> Quartic {
        Quartic::new(std::array::from_fn(|i| &self.c[i] * s))
    }

    pub fn neg(&self) -> Quartic {
        self.scale(&int(-1))
    }

    pub fn degree(&self) -> Option<usize> {
        self.c.iter().position(|a| !a.is_zero()).map(|i| 4 - i)
    }
}

impl fmt::Display for Quartic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let k = 4 - i;
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{a}")?,
                1 => write!(f, "({a})z")?,
                _ => write!(f, "({a})z^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl Serialize for Quartic {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<Q> = self.c.iter().cloned().map(Q).collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Quartic {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v: Vec<Q> = Vec::deserialize(d)?;
        if v.is_empty() || v.len() > 5 {
            return Err(serde::de::Error::custom(format!(
                "expected 1 to 5 coefficients (descending degree), got {}",
                v.len()
            )));
        }
        // shorter lists are lower degree: pad on the high side
        let mut c: Vec<Rational> = vec![Rational::zero(); 5 - v.len()];
        c.extend(v.into_iter().map(|q| q.0));
        Ok(Quartic::new(c.try_into().expect("five coefficients")))
    }
}

/// Exact value of `P`, `P'` or `P''` at `z`.
pub fn poly_eval_derive(p: &Quartic, z: &Rational, order: u8) -> Result<Rational, MathError> {
    match order {
        0 => Ok(p.eval(z)),
        1 => Ok(p.derivative().eval(z)),
        2 => Ok(p.derivative().derivative().eval(z)),
        k => Err(MathError::Order(k)),
    }
}
