use crate::error::{Error, Result};
use crate::exactmath::{frac, int, AffineFn, Quadratic, Rational, Scalar};

use super::conditions::extremality_residuals;
use super::types::{AmbitoricData, AmbitoricType, Geometry, Side};

/// Scalar curvature of `g_+-` for the general form with quadratic `q`, from
/// `[A, A', A'']` at `x` and `[B, B', B'']` at `y`.
pub fn scalar_curvature_general<T: Scalar>(q: &Quadratic, side: Side, x: T, y: T, a: [T; 3], b: [T; 3]) -> Result<T> {
    let (q0, q1, q2) = (T::from_q(&q.q0), T::from_q(&q.q1), T::from_q(&q.q2));
    let qxy = q0.clone() * x.clone() * y.clone() + q1.clone() * (x.clone() + y.clone()) + q2;
    let d = x.clone() - y.clone();
    let den = d.clone() * qxy.clone();
    if den.is_zero() {
        return Err(Error::Singular("(x - y) q(x, y) = 0".into()));
    }
    let [a0, a1, a2] = a;
    let [b0, b1, b2] = b;
    let six = T::from_int(6);
    let twelve = T::from_int(12);
    let num = match side {
        Side::Plus => {
            let ly = q0.clone() * y + q1.clone();
            let lx = q0 * x + q1;
            -(qxy.clone() * qxy.clone()) * (a2 + b2)
                + six * qxy * (ly.clone() * a1 + lx.clone() * b1)
                - twelve * (ly.clone() * ly * a0 + lx.clone() * lx * b0)
        }
        Side::Minus => {
            -(d.clone() * d.clone()) * (a2 + b2) + six * d * (a1 - b1) - twelve * (a0 + b0)
        }
    };
    Ok(num / den)
}

/// Constant relating the normal form to the general form with the same `q`.
fn normal_constant(kind: AmbitoricType, side: Side) -> Rational {
    match (kind, side) {
        (AmbitoricType::Hyperbolic, Side::Plus) => int(2),
        (AmbitoricType::Hyperbolic, Side::Minus) => frac(1, 2),
        _ => int(1),
    }
}

/// Normal-form scalar curvature from values and derivatives of `A`, `B`.
pub fn scalar_curvature_values<T: Scalar>(kind: AmbitoricType, side: Side, x: T, y: T, a: [T; 3], b: [T; 3]) -> Result<T> {
    let s = scalar_curvature_general(&kind.q(), side, x, y, a, b)?;
    Ok(s * T::from_q(&normal_constant(kind, side)))
}

/// Exact scalar curvature of `g_+` or `g_-` at a rational point with `x != y`.
pub fn scalar_curvature_at(d: &AmbitoricData, x: &Rational, y: &Rational, side: Side) -> Result<Rational> {
    let ad = d.a.derivative();
    let bd = d.b.derivative();
    let a = [d.a.eval(x), ad.eval(x), ad.derivative().eval(x)];
    let b = [d.b.eval(y), bd.eval(y), bd.derivative().eval(y)];
    scalar_curvature_values(d.kind, side, x.clone(), y.clone(), a, b)
}

pub fn scalar_curvature_f64<G: Geometry + ?Sized>(g: &G, x: f64, y: f64, side: Side) -> Result<f64> {
    let a = [g.a_at(x, 0), g.a_at(x, 1), g.a_at(x, 2)];
    let b = [g.b_at(y, 0), g.b_at(y, 1), g.b_at(y, 2)];
    scalar_curvature_values(g.kind(), side, x, y, a, b)
}

/// Affine expression of the scalar curvature in the momenta `mu_+-` for
/// extremal data.
pub fn extremal_affine_coeffs(d: &AmbitoricData, side: Side) -> Result<AffineFn> {
    let fails = extremality_residuals(d);
    if !fails.is_empty() {
        return Err(Error::NotExtremal(fails.into_iter().map(|(n, v)| format!("{n} = {v}")).collect()));
    }
    Ok(affine_form(d, side))
}

/// The affine form without checking extremality.
pub(crate) fn affine_form(d: &AmbitoricData, side: Side) -> AffineFn {
    let a = |i: usize| d.a.a(i).clone();
    let b = |i: usize| d.b.a(i).clone();
    let (six, twelve) = (int(6), int(12));
    let zero = int(0);
    let (c1, c2, c0) = match (d.kind, side) {
        (AmbitoricType::Parabolic, Side::Plus) => (-&twelve * a(0), zero.clone(), -&six * a(1)),
        (AmbitoricType::Parabolic, Side::Minus) => (&twelve * (a(4) + b(4)), &twelve * (a(3) + b(3)), zero),
        (AmbitoricType::Hyperbolic, Side::Plus) => (&six * (a(3) - b(3)), &six * (a(1) - b(1)), zero),
        (AmbitoricType::Hyperbolic, Side::Minus) => (&six * (a(3) + b(3)), &six * (a(1) + b(1)), zero),
        (AmbitoricType::Elliptic, Side::Plus) => (&six * (a(3) - b(1)), -&twelve * (a(4) + b(0)), zero),
        (AmbitoricType::Elliptic, Side::Minus) => (&six * (a(3) + b(3)), -&twelve * (a(4) + b(4)), zero),
    };
    AffineFn::new([c1, c2], c0)
}
