use std::fmt::Debug;
use std::ops::Neg;

use num_traits::Num;

use super::rational::{self, Rational};

/// Field elements the geometric formulas are evaluated over: exact rationals or doubles.
pub trait Scalar: Clone + Debug + Num + Neg<Output = Self> + Send + Sync {
    fn from_q(q: &Rational) -> Self;
    fn from_int(n: i64) -> Self;
    fn to_f64(&self) -> f64;
}

impl Scalar for f64 {
    fn from_q(q: &Rational) -> Self {
        rational::to_f64(q)
    }

    fn from_int(n: i64) -> Self {
        n as f64
    }

    fn to_f64(&self) -> f64 {
        *self
    }
}

impl Scalar for Rational {
    fn from_q(q: &Rational) -> Self {
        q.clone()
    }

    fn from_int(n: i64) -> Self {
        rational::int(n)
    }

    fn to_f64(&self) -> f64 {
        rational::to_f64(self)
    }
}
