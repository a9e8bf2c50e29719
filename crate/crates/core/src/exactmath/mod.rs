//! Exact rational arithmetic on low-degree polynomials and the quadratic-form algebra.

pub mod affine;
pub mod linalg;
pub mod poly;
pub mod quadratic;
pub mod quartic;
pub mod rational;
pub mod scalar;
pub mod sturm;

use thiserror::Error;

pub use affine::AffineFn;
pub use poly::Poly;
pub use quadratic::{poisson_bracket, polarize, quadratic_invariants, transvect, Quadratic, Transvectant};
pub use quartic::{poly_eval_derive, Quartic};
pub use rational::{frac, int, Rational, Q};
pub use scalar::Scalar;
pub use sturm::{sturm_positive_on, Positivity, RootInterval};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MathError {
    #[error("cannot parse rational from {0:?}")]
    Parse(String),
    #[error("empty interval: need a < b, got [{a}, {b}]")]
    EmptyInterval { a: String, b: String },
    #[error("derivative order {0} not supported (0, 1 or 2)")]
    Order(u8),
    #[error("singular linear system")]
    Singular,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
}
