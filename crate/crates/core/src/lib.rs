//! Ambitoric Kähler structures in four dimensions: exact coefficient conditions,
//! rational Delzant polytopes, Futaki invariants and finite-difference oracles.

pub mod ambitoric;
pub mod catalog;
pub mod error;
pub mod exactmath;
pub mod numcheck;
pub mod polytope;
pub mod stability;

pub use ambitoric::{AmbitoricData, AmbitoricType, Side};
pub use error::{Error, Result};
pub use exactmath::{AffineFn, Quadratic, Quartic, Rational};
