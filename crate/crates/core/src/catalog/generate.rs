//! Random extremal data with prescribed roots of `A`, for sweeps and oracles.

use num_traits::One;
use rand::Rng;

use crate::ambitoric::{positivity_violations, structural_violations, AmbitoricData, AmbitoricType};
use crate::error::{Error, Result};
use crate::exactmath::linalg::solve;
use crate::exactmath::{frac, int, Quartic, Rational};

use super::quartic_from_roots;

/// The two-dimensional freedom `B + A` allowed by the extremality relations.
fn extremal_freedom(kind: AmbitoricType) -> [Quartic; 2] {
    match kind {
        AmbitoricType::Parabolic => [Quartic::from_ints([0, 0, 0, 1, 0]), Quartic::from_ints([0, 0, 0, 0, 1])],
        AmbitoricType::Hyperbolic => [Quartic::from_ints([0, 1, 0, 0, 0]), Quartic::from_ints([0, 0, 0, 1, 0])],
        AmbitoricType::Elliptic => [Quartic::from_ints([1, 0, 0, 0, -1]), Quartic::from_ints([0, 1, 0, 1, 0])],
    }
}

/// `A = -(z - alpha1)(z - r1)(z - r2)(z - alpha2)` and the extremal partner `B`
/// vanishing at `beta1`, `beta2`. Boundary signs are not checked.
pub fn extremal_with_roots(kind: AmbitoricType, alpha: [Rational; 2], beta: [Rational; 2], roots: [Rational; 2]) -> Result<AmbitoricData> {
    let a = quartic_from_roots(&-Rational::one(), &[alpha[0].clone(), roots[0].clone(), roots[1].clone(), alpha[1].clone()]);
    let [f, g] = extremal_freedom(kind);
    let m: Vec<Vec<Rational>> = beta.iter().map(|y| vec![f.eval(y), g.eval(y)]).collect();
    let rhs: Vec<Rational> = beta.iter().map(|y| a.eval(y)).collect();
    let st = solve(&m, &rhs).map_err(|_| Error::Singular("extremal partner is not determined by beta".into()))?;
    let b = a.neg().add(&f.scale(&st[0])).add(&g.scale(&st[1]));
    Ok(AmbitoricData::new(kind, a, b, alpha, beta))
}

fn small<R: Rng + ?Sized>(rng: &mut R, lo: i64, hi: i64) -> Rational {
    let d = rng.gen_range(1..=4i64);
    frac(rng.gen_range(lo * d..=hi * d), d)
}

/// Random extremal data satisfying the boundary conditions. With `interior`
/// the two free roots of `A` lie in `(alpha1, alpha2)`, so `A` changes sign
/// (or has a double root); otherwise `A` and `B` are positive.
/// Returns `None` after `tries` rejected samples.
pub fn random_extremal<R: Rng + ?Sized>(rng: &mut R, kind: AmbitoricType, interior: bool, tries: usize) -> Option<AmbitoricData> {
    for _ in 0..tries {
        let b1 = small(rng, -3, 3);
        let b2 = &b1 + small(rng, 1, 3);
        let a1 = &b2 + small(rng, 0, 3) + frac(1, 4);
        let a2 = &a1 + small(rng, 1, 6);
        let roots = if interior {
            let w = &a2 - &a1;
            [&a1 + &w * frac(rng.gen_range(1..10), 10), &a1 + &w * frac(rng.gen_range(1..10), 10)]
        } else {
            [small(rng, -8, 12), small(rng, -8, 12)]
        };
        if !interior && roots.iter().any(|r| r > &a1 && r < &a2) {
            continue;
        }
        let Ok(d) = extremal_with_roots(kind, [a1, a2], [b1, b2], roots) else { continue };
        if !structural_violations(&d).is_empty() {
            continue;
        }
        if !interior && !positivity_violations(&d).is_empty() {
            continue;
        }
        return Some(d);
    }
    None
}

/// Scales the pair so that the largest coefficient is 1 in absolute value.
pub fn normalize(d: &AmbitoricData) -> AmbitoricData {
    let m = d.a.coeffs().iter().chain(d.b.coeffs()).map(|c| if c < &int(0) { -c.clone() } else { c.clone() }).max().unwrap_or_else(Rational::one);
    let s = Rational::one() / m;
    AmbitoricData::new(d.kind, d.a.scale(&s), d.b.scale(&s), d.alpha.clone(), d.beta.clone())
}
