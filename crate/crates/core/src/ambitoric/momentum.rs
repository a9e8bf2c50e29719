use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactmath::rational::{sqrt_exact, to_f64};
use crate::exactmath::{Rational, Scalar};

use super::types::{AmbitoricData, AmbitoricType, Side};

fn nz<T: Scalar>(v: T, what: &str) -> Result<T> {
    if v.is_zero() {
        Err(Error::Singular(what.to_string()))
    } else {
        Ok(v)
    }
}

/// Momenta of the torus generators for `omega_+` or `omega_-` at `(x, y)`.
pub fn momentum_of<T: Scalar>(kind: AmbitoricType, side: Side, x: T, y: T) -> Result<[T; 2]> {
    let one = T::one();
    let two = T::from_int(2);
    let s = x.clone() + y.clone();
    let p = x.clone() * y.clone();
    let d = x.clone() - y.clone();
    Ok(match (kind, side) {
        (AmbitoricType::Parabolic, Side::Plus) => [s, p],
        (AmbitoricType::Hyperbolic, Side::Plus) => {
            let s = nz(s, "x + y = 0")?;
            [-one / s.clone(), p / s]
        }
        (AmbitoricType::Elliptic, Side::Plus) => {
            let n = nz(one.clone() + p.clone(), "1 + xy = 0")?;
            [-(one - p) / n.clone(), -s / n]
        }
        (AmbitoricType::Parabolic, Side::Minus) => {
            let d = nz(d, "x = y")?;
            [-one / d.clone(), -s / (two * d)]
        }
        (AmbitoricType::Hyperbolic, Side::Minus) => {
            let d = nz(d, "x = y")?;
            [-one / d.clone(), -p / d]
        }
        (AmbitoricType::Elliptic, Side::Minus) => {
            let d = nz(d, "x = y")?;
            [-s / d.clone(), (one - p) / d]
        }
    })
}

/// Exact momenta at a rational point of the closed domain.
pub fn momentum(d: &AmbitoricData, x: &Rational, y: &Rational, side: Side) -> Result<[Rational; 2]> {
    if !d.in_closed(x, y) {
        return Err(Error::Domain(format!("({x}, {y}) lies outside the domain rectangle")));
    }
    momentum_of(d.kind, side, x.clone(), y.clone())
}

/// Square roots used by inversion: exact for rationals with rational roots.
pub trait Sqrt: Scalar + PartialOrd {
    /// `Err(())` when negative, `Ok(None)` when the root exists but is not representable.
    fn try_sqrt(&self) -> std::result::Result<Option<Self>, ()>;
}

impl Sqrt for f64 {
    fn try_sqrt(&self) -> std::result::Result<Option<Self>, ()> {
        // tolerate round-off on the diagonal-free boundary
        if *self >= 0.0 {
            Ok(Some(self.sqrt()))
        } else if *self > -1e-12 {
            Ok(Some(0.0))
        } else {
            Err(())
        }
    }
}

impl Sqrt for Rational {
    fn try_sqrt(&self) -> std::result::Result<Option<Self>, ()> {
        if *self < Rational::zero() {
            Err(())
        } else {
            Ok(sqrt_exact(self))
        }
    }
}

enum Cands<T> {
    Points(Vec<(T, T)>),
    NeedFloat,
}

fn fmt_mu<T: Scalar>(mu: &[T; 2]) -> String {
    format!("{}, {}", mu[0].to_f64(), mu[1].to_f64())
}

/// Both roots of `t^2 - s t + p`, larger first.
fn roots_sp<T: Sqrt>(s: T, p: T, mu: &[T; 2]) -> Result<Option<(T, T)>> {
    let two = T::from_int(2);
    let disc = s.clone() * s.clone() - T::from_int(4) * p;
    match disc.try_sqrt() {
        Err(()) => Err(Error::OutOfImage(fmt_mu(mu))),
        Ok(None) => Ok(None),
        Ok(Some(r)) => Ok(Some(((s.clone() + r.clone()) / two.clone(), (s - r) / two))),
    }
}

fn candidates<T: Sqrt>(kind: AmbitoricType, side: Side, mu: &[T; 2]) -> Result<Cands<T>> {
    let [m1, m2] = mu.clone();
    let one = T::one();
    let two = T::from_int(2);
    let four = T::from_int(4);
    let out = |e: &str| Error::OutOfImage(format!("{} ({e})", fmt_mu(mu)));
    let pair = |r: Option<(T, T)>| match r {
        Some((a, b)) => Cands::Points(vec![(a, b)]),
        None => Cands::NeedFloat,
    };
    Ok(match (kind, side) {
        (AmbitoricType::Parabolic, Side::Plus) => pair(roots_sp(m1, m2, mu)?),
        (AmbitoricType::Parabolic, Side::Minus) => {
            if m1.is_zero() {
                return Err(out("mu1 = 0"));
            }
            let d = -one / m1.clone();
            let s = two.clone() * m2 / m1;
            Cands::Points(vec![((s.clone() + d.clone()) / two.clone(), (s - d) / two)])
        }
        (AmbitoricType::Hyperbolic, Side::Plus) => {
            if m1.is_zero() {
                return Err(out("mu1 = 0"));
            }
            let s = -one / m1.clone();
            let p = -m2 / m1;
            pair(roots_sp(s, p, mu)?)
        }
        (AmbitoricType::Hyperbolic, Side::Minus) => {
            if m1.is_zero() {
                return Err(out("mu1 = 0"));
            }
            let d = -one / m1.clone();
            let p = m2 / m1;
            // x and -y are the roots of t^2 - d t - p
            match roots_sp(d, -p, mu)? {
                Some((r1, r2)) => Cands::Points(vec![(r1.clone(), -r2.clone()), (r2, -r1)]),
                None => Cands::NeedFloat,
            }
        }
        (AmbitoricType::Elliptic, Side::Plus) => {
            let den = one.clone() - m1.clone();
            if den.is_zero() {
                return Err(out("mu1 = 1"));
            }
            let p = (one + m1) / den.clone();
            let s = -two * m2 / den;
            pair(roots_sp(s, p, mu)?)
        }
        (AmbitoricType::Elliptic, Side::Minus) => {
            // (mu1^2 - 1) D^2 + 4 mu2 D - 4 = 0 with D = x - y > 0
            let a = m1.clone() * m1.clone() - one.clone();
            let ds: Vec<T> = if a.is_zero() {
                if m2.is_zero() {
                    return Err(out("no solution"));
                }
                vec![one.clone() / m2.clone()]
            } else {
                let disc = T::from_int(16) * m2.clone() * m2.clone() + T::from_int(16) * a.clone();
                match disc.try_sqrt() {
                    Err(()) => return Err(out("negative discriminant")),
                    Ok(None) => return Ok(Cands::NeedFloat),
                    Ok(Some(r)) => {
                        let den = two.clone() * a;
                        vec![(-four.clone() * m2.clone() + r.clone()) / den.clone(), (-four * m2.clone() - r) / den]
                    }
                }
            };
            let pts = ds
                .into_iter()
                .filter(|d| *d > T::zero())
                .map(|d| {
                    let s = -m1.clone() * d.clone();
                    ((s.clone() + d.clone()) / two.clone(), (s - d) / two.clone())
                })
                .collect();
            Cands::Points(pts)
        }
    })
}

/// Result of inverting the momentum map.
#[derive(Clone, Debug, PartialEq)]
pub struct Preimage {
    pub x: f64,
    pub y: f64,
    /// Present when the inversion was carried out exactly.
    pub exact: Option<(Rational, Rational)>,
}

/// Inverse of [`momentum`] on the domain rectangle. Exact when the square
/// roots involved are rational, floating point otherwise.
pub fn invert_momentum(d: &AmbitoricData, mu1: &Rational, mu2: &Rational, side: Side) -> Result<Preimage> {
    let mu = [mu1.clone(), mu2.clone()];
    match candidates(d.kind, side, &mu)? {
        Cands::Points(pts) => {
            for (x, y) in pts {
                if x > y && d.in_closed(&x, &y) {
                    return Ok(Preimage { x: to_f64(&x), y: to_f64(&y), exact: Some((x, y)) });
                }
            }
            Err(Error::OutOfImage(fmt_mu(&mu)))
        }
        Cands::NeedFloat => {
            let (x, y) = invert_momentum_f64(d, [to_f64(mu1), to_f64(mu2)], side)?;
            Ok(Preimage { x, y, exact: None })
        }
    }
}

/// Floating-point inversion onto the rectangle of `g` (with a small tolerance).
pub fn invert_momentum_f64<G: super::Geometry + ?Sized>(g: &G, mu: [f64; 2], side: Side) -> Result<(f64, f64)> {
    let [a1, a2] = g.alpha();
    let [b1, b2] = g.beta();
    let tol = 1e-9 * (1.0 + a2.abs().max(b1.abs()));
    let inside = |x: f64, y: f64| x > y && x >= a1 - tol && x <= a2 + tol && y >= b1 - tol && y <= b2 + tol;
    match candidates(g.kind(), side, &mu)? {
        Cands::Points(pts) => pts
            .into_iter()
            .find(|&(x, y)| inside(x, y))
            .ok_or_else(|| Error::OutOfImage(fmt_mu(&mu))),
        Cands::NeedFloat => unreachable!("floating point square roots always exist"),
    }
}
