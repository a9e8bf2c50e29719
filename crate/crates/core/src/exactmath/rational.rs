use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::MathError;

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n/d`, reduced. Panics on `d == 0`.
pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn half() -> Rational {
    frac(1, 2)
}

pub fn midpoint(a: &Rational, b: &Rational) -> Rational {
    (a + b) / int(2)
}

pub fn to_f64(q: &Rational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

/// Exact binary value of a finite double.
pub fn from_f64(x: f64) -> Option<Rational> {
    Rational::from_float(x)
}

/// `"p/q"` or `"p"`.
pub fn format(q: &Rational) -> String {
    q.to_string()
}

/// Accepts `p`, `p/q` and plain decimals such as `-2.125` (parsed exactly).
pub fn parse(s: &str) -> Result<Rational, MathError> {
    let t = s.trim();
    let bad = || MathError::Parse(s.to_string());
    if t.is_empty() {
        return Err(bad());
    }
    if let Some((n, d)) = t.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        return Ok(Rational::new(n, d));
    }
    if let Some((ip, fp)) = t.split_once('.') {
        let neg = ip.starts_with('-');
        let digits = ip.trim_start_matches(['-', '+']);
        if !fp.chars().all(|c| c.is_ascii_digit()) || !digits.chars().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        if digits.is_empty() && fp.is_empty() {
            return Err(bad());
        }
        let whole: BigInt = if digits.is_empty() { BigInt::zero() } else { digits.parse().map_err(|_| bad())? };
        let frac_part: BigInt = if fp.is_empty() { BigInt::zero() } else { fp.parse().map_err(|_| bad())? };
        let scale = num_traits::pow(BigInt::from(10), fp.len());
        let v = Rational::new(whole * &scale + frac_part, scale);
        return Ok(if neg { -v } else { v });
    }
    let n: BigInt = t.parse().map_err(|_| bad())?;
    Ok(Rational::from_integer(n))
}

/// Square root when both numerator and denominator are perfect squares.
pub fn sqrt_exact(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    if &(&n * &n) == q.numer() && &(&d * &d) == q.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

/// -1, 0 or 1.
pub fn sign(q: &Rational) -> i32 {
    if q.is_zero() {
        0
    } else if q.is_positive() {
        1
    } else {
        -1
    }
}

pub fn is_one(q: &Rational) -> bool {
    q.is_one()
}

/// String-serialized rational for JSON payloads.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Q(pub Rational);

impl Serialize for Q {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format(&self.0))
    }
}

impl<'de> Deserialize<'de> for Q {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        parse(&s).map(Q).map_err(serde::de::Error::custom)
    }
}

/// `#[serde(with = "qser")]` helpers for rational fields.
pub mod qser {
    use super::{Q, Rational};
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(v: &Rational, s: S) -> Result<S::Ok, S::Error> {
        Q(v.clone()).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        Q::deserialize(d).map(|q| q.0)
    }

    pub mod arr2 {
        use super::*;

        pub fn serialize<S: Serializer>(v: &[Rational; 2], s: S) -> Result<S::Ok, S::Error> {
            [Q(v[0].clone()), Q(v[1].clone())].serialize(s)
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<[Rational; 2], D::Error> {
            let [a, b]: [Q; 2] = Deserialize::deserialize(d)?;
            Ok([a.0, b.0])
        }
    }

    pub mod mat2 {
        use super::*;

        pub fn serialize<S: Serializer>(v: &[[Rational; 2]; 2], s: S) -> Result<S::Ok, S::Error> {
            let rows: Vec<[Q; 2]> = v.iter().map(|r| [Q(r[0].clone()), Q(r[1].clone())]).collect();
            rows.serialize(s)
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<[[Rational; 2]; 2], D::Error> {
            let [[a, b], [c, e]]: [[Q; 2]; 2] = Deserialize::deserialize(d)?;
            Ok([[a.0, b.0], [c.0, e.0]])
        }
    }

    pub mod vec {
        use super::*;

        pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
            let w: Vec<Q> = v.iter().cloned().map(Q).collect();
            w.serialize(s)
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
            let w: Vec<Q> = Deserialize::deserialize(d)?;
            Ok(w.into_iter().map(|q| q.0).collect())
        }
    }

    pub mod vec_arr2 {
        use super::*;

        pub fn serialize<S: Serializer>(v: &[[Rational; 2]], s: S) -> Result<S::Ok, S::Error> {
            let w: Vec<[Q; 2]> = v.iter().map(|p| [Q(p[0].clone()), Q(p[1].clone())]).collect();
            w.serialize(s)
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<[Rational; 2]>, D::Error> {
            let w: Vec<[Q; 2]> = Deserialize::deserialize(d)?;
            Ok(w.into_iter().map(|[a, b]| [a.0, b.0]).collect())
        }
    }

    pub mod opt {
        use super::*;

        pub fn serialize<S: Serializer>(v: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
            v.clone().map(Q).serialize(s)
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Rational>, D::Error> {
            let w: Option<Q> = Deserialize::deserialize(d)?;
            Ok(w.map(|q| q.0))
        }
    }
}
