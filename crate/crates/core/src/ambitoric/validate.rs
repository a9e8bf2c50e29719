use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::rational::qser;
use crate::exactmath::{int, sturm_positive_on, Positivity, Rational};

use super::types::{AmbitoricData, AmbitoricType};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub code: String,
    pub detail: String,
}

impl Violation {
    fn new(code: &str, detail: impl Into<String>) -> Self {
        Violation { code: code.to_string(), detail: detail.into() }
    }
}

/// `(c1_alpha, c2_alpha, c1_beta, c2_beta)` with `A'(alpha_j) = 2/c_j^alpha`
/// and `B'(beta_j) = -2/c_j^beta`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundaryData {
    #[serde(with = "qser::arr2")]
    pub c_alpha: [Rational; 2],
    #[serde(with = "qser::arr2")]
    pub c_beta: [Rational; 2],
}

impl BoundaryData {
    pub fn as_tuple(&self) -> (Rational, Rational, Rational, Rational) {
        (self.c_alpha[0].clone(), self.c_alpha[1].clone(), self.c_beta[0].clone(), self.c_beta[1].clone())
    }
}

pub fn boundary_data(d: &AmbitoricData) -> Result<BoundaryData> {
    let ad = d.a.derivative();
    let bd = d.b.derivative();
    let mut c_alpha = Vec::new();
    let mut c_beta = Vec::new();
    for (j, z) in d.alpha.iter().enumerate() {
        if !d.a.eval(z).is_zero() {
            return Err(Error::Precondition(format!("A(alpha{}) = {} is not zero", j + 1, d.a.eval(z))));
        }
        let v = ad.eval(z);
        if v.is_zero() {
            return Err(Error::DegenerateFacet(format!("x = alpha{} = {z}", j + 1)));
        }
        c_alpha.push(int(2) / v);
    }
    for (j, z) in d.beta.iter().enumerate() {
        if !d.b.eval(z).is_zero() {
            return Err(Error::Precondition(format!("B(beta{}) = {} is not zero", j + 1, d.b.eval(z))));
        }
        let v = bd.eval(z);
        if v.is_zero() {
            return Err(Error::DegenerateFacet(format!("y = beta{} = {z}", j + 1)));
        }
        c_beta.push(int(-2) / v);
    }
    let zero = Rational::zero();
    if !(c_alpha[0] > zero && c_alpha[1] < zero && c_beta[0] < zero && c_beta[1] > zero) {
        return Err(Error::Orientation(format!(
            "need c1a > 0 > c2a and c1b < 0 < c2b, got ({}, {}, {}, {})",
            c_alpha[0], c_alpha[1], c_beta[0], c_beta[1]
        )));
    }
    Ok(BoundaryData { c_alpha: [c_alpha[0].clone(), c_alpha[1].clone()], c_beta: [c_beta[0].clone(), c_beta[1].clone()] })
}

/// Ordering, type-specific strictness, endpoint zeros and the boundary sign
/// pattern. Positivity of `A` and `B` is not examined.
pub fn structural_violations(d: &AmbitoricData) -> Vec<Violation> {
    let mut out = Vec::new();
    let [a1, a2] = &d.alpha;
    let [b1, b2] = &d.beta;
    if b1 >= b2 {
        out.push(Violation::new("order_beta", format!("beta1 < beta2 fails: {b1} >= {b2}")));
    }
    if b2 >= a1 {
        out.push(Violation::new("order_beta2_alpha1", format!("beta2 < alpha1 fails: {b2} >= {a1}")));
    }
    if a1 >= a2 {
        out.push(Violation::new("order_alpha", format!("alpha1 < alpha2 fails: {a1} >= {a2}")));
    }
    match d.kind {
        AmbitoricType::Hyperbolic if a1 + b1 <= Rational::zero() => {
            out.push(Violation::new("strict_hyperbolic", format!("alpha1 + beta1 > 0 fails: {}", a1 + b1)));
        }
        AmbitoricType::Elliptic => {
            for (i, b) in d.beta.iter().enumerate() {
                for (j, a) in d.alpha.iter().enumerate() {
                    if a * b <= int(-1) {
                        out.push(Violation::new(
                            "strict_elliptic",
                            format!("alpha{} beta{} > -1 fails: {}", j + 1, i + 1, a * b),
                        ));
                    }
                }
            }
        }
        _ => {}
    }
    let mut zeros_ok = true;
    for (j, z) in d.alpha.iter().enumerate() {
        let v = d.a.eval(z);
        if !v.is_zero() {
            zeros_ok = false;
            out.push(Violation::new("endpoint_zero_a", format!("A(alpha{}) = {v}, expected 0", j + 1)));
        }
    }
    for (j, z) in d.beta.iter().enumerate() {
        let v = d.b.eval(z);
        if !v.is_zero() {
            zeros_ok = false;
            out.push(Violation::new("endpoint_zero_b", format!("B(beta{}) = {v}, expected 0", j + 1)));
        }
    }
    if zeros_ok {
        match boundary_data(d) {
            Ok(_) => {}
            Err(Error::DegenerateFacet(m)) => out.push(Violation::new("degenerate_facet", m)),
            Err(e) => out.push(Violation::new("boundary_orientation", e.to_string())),
        }
    }
    out
}

/// Positivity of `A` on `(alpha1, alpha2)` and `B` on `(beta1, beta2)`.
pub fn positivity_violations(d: &AmbitoricData) -> Vec<Violation> {
    let mut out = Vec::new();
    for (name, p, [lo, hi]) in [("A", &d.a, &d.alpha), ("B", &d.b, &d.beta)] {
        if lo >= hi {
            continue;
        }
        let code = if name == "A" { "positivity_a" } else { "positivity_b" };
        match sturm_positive_on(p, lo, hi, true) {
            Ok(Positivity::Positive) => {}
            Ok(Positivity::NonNegativeWithRoot { root }) => out.push(Violation::new(
                code,
                format!("{name} has a root in [{}, {}] inside ({lo}, {hi})", root.lo, root.hi),
            )),
            Ok(Positivity::ChangesSign { witness }) => out.push(Violation::new(
                code,
                format!("{name}({witness}) = {} <= 0 inside ({lo}, {hi})", p.eval(&witness)),
            )),
            Err(e) => out.push(Violation::new(code, e.to_string())),
        }
    }
    out
}

/// Every invariant of the datum; an empty list means valid.
pub fn validate_data(d: &AmbitoricData) -> std::result::Result<(), Vec<Violation>> {
    let mut v = structural_violations(d);
    v.extend(positivity_violations(d));
    if v.is_empty() {
        Ok(())
    } else {
        Err(v)
    }
}
