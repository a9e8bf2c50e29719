use std::fmt;

use serde::{Deserialize, Serialize};

use super::rational::{qser, to_f64, Rational};

/// `<a, mu> + b`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AffineFn {
    #[serde(with = "qser::arr2")]
    pub a: [Rational; 2],
    #[serde(with = "qser")]
    pub b: Rational,
}

impl AffineFn {
    pub fn new(a: [Rational; 2], b: Rational) -> Self {
        AffineFn { a, b }
    }

    pub fn eval(&self, mu: &[Rational; 2]) -> Rational {
        &self.a[0] * &mu[0] + &self.a[1] * &mu[1] + &self.b
    }

    pub fn eval_f64(&self, mu: [f64; 2]) -> f64 {
        to_f64(&self.a[0]) * mu[0] + to_f64(&self.a[1]) * mu[1] + to_f64(&self.b)
    }

    pub fn neg(&self) -> AffineFn {
        AffineFn::new([-self.a[0].clone(), -self.a[1].clone()], -self.b.clone())
    }

    pub fn scale(&self, s: &Rational) -> AffineFn {
        AffineFn::new([&self.a[0] * s, &self.a[1] * s], &self.b * s)
    }
}

impl fmt::Display for AffineFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})mu1 + ({})mu2 + ({})", self.a[0], self.a[1], self.b)
    }
}
