//! Extremal and Bach-flat hyperbolic families obtained by moving `(alpha1, alpha2)`
//! away from the weighted projective seed `(beta2, beta3)`.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::ambitoric::{condition_report, validate_data, AmbitoricData, AmbitoricType, Violation};
use crate::error::{Error, Result};
use crate::exactmath::linalg::solve;
use crate::exactmath::rational::qser;
use crate::exactmath::{frac, int, MathError, Quartic, Rational};

use super::seed_b;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchKind {
    Extremal,
    BachFlat,
}

/// Where a catalog datum came from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub family: SearchKind,
    #[serde(with = "qser::vec")]
    pub seed_betas: Vec<Rational>,
    #[serde(with = "qser::arr2")]
    pub alpha: [Rational; 2],
    /// `(gamma, delta)` of the Bach-flat family.
    #[serde(with = "qser::vec", default, skip_serializing_if = "Vec::is_empty")]
    pub parameters: Vec<Rational>,
    /// Fraction `t` of the offset from the seed that was kept by bisection.
    #[serde(with = "qser::opt", default, skip_serializing_if = "Option::is_none")]
    pub bisection_t: Option<Rational>,
}

/// A catalog datum with the reasons it fails validation (empty on success).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyResult {
    #[serde(flatten)]
    pub data: AmbitoricData,
    pub success: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub violations: Vec<Violation>,
    pub provenance: Provenance,
}

impl FamilyResult {
    fn new(data: AmbitoricData, provenance: Provenance) -> Self {
        let violations = validate_data(&data).err().unwrap_or_default();
        FamilyResult { success: violations.is_empty(), data, violations, provenance }
    }
}

fn singular(e: MathError, what: &str) -> Error {
    match e {
        MathError::Singular => Error::Singular(what.to_string()),
        e => e.into(),
    }
}

fn check_alpha(alpha: &[Rational; 2]) -> Result<()> {
    if alpha[0] == alpha[1] {
        return Err(Error::Singular("alpha1 = alpha2".into()));
    }
    Ok(())
}

/// `A = z^4 + a3 z^3 - b2 z^2 + a1 z - b0` against `B = -z^4 + b3 z^3 + b2 z^2 + b1 z + b0`
/// with `a3`, `a1` fixed by `A(alpha_j) = 0`.
pub fn extremal_search(betas: [Rational; 4], alpha: [Rational; 2]) -> Result<FamilyResult> {
    check_alpha(&alpha)?;
    let b = seed_b(&betas);
    let (b2, b0) = (b.coeff(2).clone(), b.coeff(0).clone());
    let m: Vec<Vec<Rational>> = alpha.iter().map(|a| vec![a * a * a, a.clone()]).collect();
    let rhs: Vec<Rational> = alpha.iter().map(|a| -(a * a * a * a - &b2 * a * a - &b0)).collect();
    let x = solve(&m, &rhs).map_err(|e| singular(e, "alpha1 alpha2 (alpha1^2 - alpha2^2) = 0"))?;
    let a = Quartic::new([Rational::one(), x[0].clone(), -b2, x[1].clone(), -b0]);
    let d = AmbitoricData::new(AmbitoricType::Hyperbolic, a, b, alpha.clone(), [betas[0].clone(), betas[1].clone()]);
    let prov = Provenance { family: SearchKind::Extremal, seed_betas: betas.to_vec(), alpha, parameters: vec![], bisection_t: None };
    Ok(FamilyResult::new(d, prov))
}

/// The two-parameter family `B_{g,d} = -z^4 + d b3 z^3 + b2(g,d) z^2 + g b1 z + b0(g,d)`,
/// `A_{g,d} = z^4 - g b3 z^3 - b2(g,d) z^2 - d b1 z - b0(g,d)` with all four endpoint
/// conditions imposed. `(A, B)` and `(-A, -B)` define the same data up to
/// orientation, so the sign is chosen to give the inward boundary pattern when possible.
pub fn bachflat_search(betas: [Rational; 4], alpha: [Rational; 2]) -> Result<FamilyResult> {
    check_alpha(&alpha)?;
    let s = seed_b(&betas);
    let (b3, b1) = (s.coeff(3).clone(), s.coeff(1).clone());
    // unknowns (gamma, delta, b2, b0)
    let mut m = Vec::with_capacity(4);
    let mut rhs = Vec::with_capacity(4);
    for y in &betas[..2] {
        let (y2, y3) = (y * y, y * y * y);
        m.push(vec![&b1 * y, &b3 * &y3, y2.clone(), Rational::one()]);
        rhs.push(&y2 * &y2);
    }
    for x in &alpha {
        let (x2, x3) = (x * x, x * x * x);
        m.push(vec![-(&b3 * &x3), -(&b1 * x), -x2.clone(), -Rational::one()]);
        rhs.push(-(&x2 * &x2));
    }
    let v = solve(&m, &rhs).map_err(|e| singular(e, "Bach-flat family endpoint system"))?;
    let [g, dl, c2, c0]: [Rational; 4] = v.try_into().expect("four unknowns");
    let bq = Quartic::new([-Rational::one(), &dl * &b3, c2.clone(), &g * &b1, c0.clone()]);
    let aq = Quartic::new([Rational::one(), -(&g * &b3), -c2, -(&dl * &b1), -c0]);
    let mut d = AmbitoricData::new(AmbitoricType::Hyperbolic, aq, bq, alpha.clone(), [betas[0].clone(), betas[1].clone()]);
    let r = condition_report(&d);
    debug_assert!(r.extremal && r.bach_flat, "family identity broken: {:?}", r.residuals);
    let reversed = d.a.derivative().eval(&d.alpha[0]) < Rational::zero() && d.b.derivative().eval(&d.beta[0]) < Rational::zero();
    if reversed {
        d.a = d.a.neg();
        d.b = d.b.neg();
    }
    let prov = Provenance { family: SearchKind::BachFlat, seed_betas: betas.to_vec(), alpha, parameters: vec![g, dl], bisection_t: None };
    Ok(FamilyResult::new(d, prov))
}

/// Moves `alpha` toward the seed `(beta2, beta3)` by halving the offset until the
/// search succeeds, down to `t = 1/2^16`; returns the last attempt on failure.
pub fn bisect_toward_seed(
    search: fn([Rational; 4], [Rational; 2]) -> Result<FamilyResult>,
    betas: [Rational; 4],
    alpha: [Rational; 2],
) -> Result<FamilyResult> {
    let seed = [betas[1].clone(), betas[2].clone()];
    let floor = frac(1, 1 << 16);
    let mut t = Rational::one();
    let mut last = None;
    while t >= floor {
        let a = [&seed[0] + (&alpha[0] - &seed[0]) * &t, &seed[1] + (&alpha[1] - &seed[1]) * &t];
        match search(betas.clone(), a) {
            Ok(mut r) => {
                r.provenance.bisection_t = Some(t.clone());
                if r.success {
                    return Ok(r);
                }
                last = Some(Ok(r));
            }
            Err(e) => last = Some(Err(e)),
        }
        t /= int(2);
    }
    last.expect("at least one attempt")
}
