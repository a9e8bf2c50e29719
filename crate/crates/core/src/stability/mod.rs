//! Extremal affine function of a labelled polytope, the relative Futaki
//! invariant and the K-polystability verdict for ambitoric data.

pub mod futaki;

use serde::{Deserialize, Serialize};

use crate::ambitoric::conditions::extremality_residuals;
use crate::ambitoric::{structural_violations, AmbitoricData};
use crate::error::{Error, Result};
use crate::exactmath::linalg::solve;
use crate::exactmath::rational::qser;
use crate::exactmath::{int, sturm_positive_on, AffineFn, MathError, Positivity, Rational};
use crate::polytope::{build_polytope, moments, Moments};

pub use futaki::{crease_chord, crease_scan, futaki_crease, futaki_pl, Crease, FutakiValue, PLFunction};

/// `(A, B)` with `1/2 (<A, mu> + B)` balancing the boundary measure against
/// every affine function; the scalar curvature it predicts is `-<A, mu> - B`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremalField {
    #[serde(rename = "A", with = "qser::arr2")]
    pub a: [Rational; 2],
    #[serde(rename = "B", with = "qser")]
    pub b: Rational,
}

impl ExtremalField {
    pub fn scalar_affine(&self) -> AffineFn {
        AffineFn::new(self.a.clone(), self.b.clone()).neg()
    }
}

pub fn extremal_field(m: &Moments) -> Result<ExtremalField> {
    let (al, ar, ars) = (&m.alpha, &m.alpha_r, &m.alpha_rs);
    let sys = vec![
        vec![ar[0].clone(), ar[1].clone(), al.clone()],
        vec![ars[0][0].clone(), ars[0][1].clone(), ar[0].clone()],
        vec![ars[1][0].clone(), ars[1][1].clone(), ar[1].clone()],
    ];
    let two = int(-2);
    let rhs = [&two * &m.beta, &two * &m.beta_r[0], &two * &m.beta_r[1]];
    let x = solve(&sys, &rhs).map_err(|e| match e {
        MathError::Singular => Error::DegeneratePolytope("singular moment matrix".into()),
        e => e.into(),
    })?;
    let [a1, a2, b]: [Rational; 3] = x.try_into().expect("three unknowns");
    Ok(ExtremalField { a: [a1, a2], b })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Polystable,
    SemistableBoundary,
    Unstable,
}

/// Destabilizing crease with its Futaki value.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    pub crease: Crease,
    #[serde(with = "qser::arr2")]
    pub u: [Rational; 2],
    #[serde(with = "qser")]
    pub c: Rational,
    pub futaki: FutakiValue,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StabilityReport {
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    pub positivity_a: Positivity,
    pub positivity_b: Positivity,
    pub extremal_field: ExtremalField,
    pub scalar_affine: AffineFn,
    pub notes: Vec<String>,
}

fn witness(d: &AmbitoricData, crease: Crease) -> Result<Witness> {
    let (u, c) = crease.line(d.kind)?;
    let futaki = futaki_crease(d, &crease)?;
    Ok(Witness { crease, u, c, futaki })
}

/// Polystable iff `A > 0` on `(alpha1, alpha2)` and `B > 0` on `(beta1, beta2)`.
/// Positivity itself is not required of the input, only the boundary
/// conditions and extremality.
pub fn stability_verdict(d: &AmbitoricData) -> Result<StabilityReport> {
    let v = structural_violations(d);
    if !v.is_empty() {
        return Err(Error::Invalid(v));
    }
    let fails = extremality_residuals(d);
    if !fails.is_empty() {
        return Err(Error::NotExtremal(fails.into_iter().map(|(n, v)| format!("{n} = {v}")).collect()));
    }
    let p = build_polytope(d)?;
    let ef = extremal_field(&moments(&p)?)?;
    let pa = sturm_positive_on(&d.a, &d.alpha[0], &d.alpha[1], true)?;
    let pb = sturm_positive_on(&d.b, &d.beta[0], &d.beta[1], true)?;
    let mut notes = Vec::new();
    let (verdict, wit) = match (&pa, &pb) {
        (Positivity::Positive, Positivity::Positive) => {
            notes.push("A > 0 on (alpha1, alpha2) and B > 0 on (beta1, beta2): the extremal metric exists".into());
            (Verdict::Polystable, None)
        }
        (Positivity::ChangesSign { witness: w }, _) => {
            notes.push(format!("A({w}) <= 0: the x = {w} crease has nonpositive Futaki invariant"));
            (Verdict::Unstable, Some(witness(d, Crease::X { x0: w.clone() })?))
        }
        (_, Positivity::ChangesSign { witness: w }) => {
            notes.push(format!("B({w}) <= 0: the y = {w} crease has nonpositive Futaki invariant"));
            (Verdict::Unstable, Some(witness(d, Crease::Y { y0: w.clone() })?))
        }
        _ => {
            notes.push(
                "an interior root of even multiplicity: the crease through it has zero Futaki invariant; \
                 with fully rational data this case cannot come from a polystable polytope, so it is kept apart"
                    .into(),
            );
            (Verdict::SemistableBoundary, None)
        }
    };
    if verdict == Verdict::Unstable {
        notes.push("the labelled polytope and all its small rational perturbations do not admit extremal Kähler metric".into());
    }
    Ok(StabilityReport {
        verdict,
        witness: wit,
        positivity_a: pa,
        positivity_b: pb,
        scalar_affine: ef.scalar_affine(),
        extremal_field: ef,
        notes,
    })
}
