use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::exactmath::rational::qser;
use crate::exactmath::{int, Rational};

use super::types::{AmbitoricData, AmbitoricType};

/// A named exact quantity that should vanish but does not.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Residual {
    pub name: String,
    #[serde(with = "qser")]
    pub value: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionReport {
    pub extremal: bool,
    pub bach_flat: bool,
    pub csc_plus: bool,
    pub kahler_einstein_plus: bool,
    /// `s_- = 0` identically.
    pub selfdual: bool,
    /// `s_+ = 0` identically.
    pub antiselfdual: bool,
    /// Every relation that failed, grouped by the flag it belongs to.
    pub residuals: Vec<(String, Vec<Residual>)>,
}

type Rel = (&'static str, Rational);

fn nonzero(rels: Vec<Rel>) -> Vec<Residual> {
    rels.into_iter()
        .filter(|(_, v)| !v.is_zero())
        .map(|(n, v)| Residual { name: n.to_string(), value: v })
        .collect()
}

/// Failing linear extremality relations as `(expression, value)` pairs.
pub fn extremality_residuals(d: &AmbitoricData) -> Vec<(String, Rational)> {
    nonzero(extremal_rels(d)).into_iter().map(|r| (r.name, r.value)).collect()
}

fn extremal_rels(d: &AmbitoricData) -> Vec<Rel> {
    let a = |i: usize| d.a.a(i).clone();
    let b = |i: usize| d.b.a(i).clone();
    match d.kind {
        AmbitoricType::Parabolic => vec![("a0+b0", a(0) + b(0)), ("a1+b1", a(1) + b(1)), ("a2+b2", a(2) + b(2))],
        AmbitoricType::Hyperbolic => vec![("a0+b0", a(0) + b(0)), ("a2+b2", a(2) + b(2)), ("a4+b4", a(4) + b(4))],
        AmbitoricType::Elliptic => vec![
            ("a2+b2", a(2) + b(2)),
            ("a0+b0+a4+b4", a(0) + b(0) + a(4) + b(4)),
            ("a1+b1-a3-b3", a(1) + b(1) - a(3) - b(3)),
        ],
    }
}

fn bach_rels(d: &AmbitoricData) -> Vec<Rel> {
    let a = |i: usize| d.a.a(i).clone();
    let b = |i: usize| d.b.a(i).clone();
    match d.kind {
        AmbitoricType::Parabolic => vec![("a1(a3+b3)-4a0(a4+b4)", a(1) * (a(3) + b(3)) - int(4) * a(0) * (a(4) + b(4)))],
        AmbitoricType::Hyperbolic => vec![(
            "(a3-b3)(a1+b1)+(a3+b3)(a1-b1)",
            (a(3) - b(3)) * (a(1) + b(1)) + (a(3) + b(3)) * (a(1) - b(1)),
        )],
        AmbitoricType::Elliptic => vec![(
            "(a3-b1)(a3+b3)+4(a4+b4)(a4+b0)",
            (a(3) - b(1)) * (a(3) + b(3)) + int(4) * (a(4) + b(4)) * (a(4) + b(0)),
        )],
    }
}

fn splus_zero_rels(d: &AmbitoricData) -> Vec<Rel> {
    let a = |i: usize| d.a.a(i).clone();
    let b = |i: usize| d.b.a(i).clone();
    match d.kind {
        AmbitoricType::Parabolic => vec![("a0", a(0)), ("a1", a(1))],
        AmbitoricType::Hyperbolic => vec![("a1-b1", a(1) - b(1)), ("a3-b3", a(3) - b(3))],
        AmbitoricType::Elliptic => vec![("a3-b1", a(3) - b(1)), ("a4+b0", a(4) + b(0))],
    }
}

fn sminus_zero_rels(d: &AmbitoricData) -> Vec<Rel> {
    let a = |i: usize| d.a.a(i).clone();
    let b = |i: usize| d.b.a(i).clone();
    match d.kind {
        AmbitoricType::Parabolic | AmbitoricType::Elliptic => vec![("a3+b3", a(3) + b(3)), ("a4+b4", a(4) + b(4))],
        AmbitoricType::Hyperbolic => vec![("a1+b1", a(1) + b(1)), ("a3+b3", a(3) + b(3))],
    }
}

/// Exact evaluation of the extremal, Bach-flat, constant scalar curvature,
/// Kähler-Einstein and half-conformally-flat coefficient conditions.
pub fn condition_report(d: &AmbitoricData) -> ConditionReport {
    let ext = nonzero(extremal_rels(d));
    let bach = nonzero(bach_rels(d));
    let sp0 = nonzero(splus_zero_rels(d));
    let sm0 = nonzero(sminus_zero_rels(d));
    let extremal = ext.is_empty();

    let csc_rels = match d.kind {
        AmbitoricType::Parabolic => nonzero(vec![("a0", d.a.a(0).clone())]),
        _ => sp0.clone(),
    };
    let ke_rels = match d.kind {
        AmbitoricType::Parabolic => {
            let mut r = csc_rels.clone();
            r.extend(nonzero(vec![("a3+b3", d.a.a(3) + d.b.a(3))]));
            r
        }
        _ => vec![Residual { name: "not parabolic".into(), value: int(1) }],
    };

    let csc_plus = extremal && csc_rels.is_empty();
    let kahler_einstein_plus = extremal && ke_rels.is_empty();
    let mut residuals = Vec::new();
    let mut push = |k: &str, v: Vec<Residual>| {
        if !v.is_empty() {
            residuals.push((k.to_string(), v));
        }
    };
    push("extremal", ext.clone());
    push("bach_flat", bach.clone());
    push("csc_plus", csc_rels);
    push("kahler_einstein_plus", ke_rels);
    push("selfdual", sm0.clone());
    push("antiselfdual", sp0.clone());
    ConditionReport {
        extremal,
        bach_flat: extremal && bach.is_empty(),
        csc_plus,
        kahler_einstein_plus,
        selfdual: extremal && sm0.is_empty(),
        antiselfdual: extremal && sp0.is_empty(),
        residuals,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ambitoric::curvature::affine_form;
    use crate::ambitoric::Side;
    use crate::exactmath::{Quartic, Rational};
    use num_traits::Zero;

    #[test]
    fn bach_flat_example_is_extremal_and_bach_flat() {
        let r = condition_report(&AmbitoricData::bach_flat_example());
        assert!(r.extremal && r.bach_flat);
        assert!(!r.selfdual && !r.antiselfdual && !r.csc_plus && !r.kahler_einstein_plus);
        // the Bach relation evaluates as (-10)(-2) + (-2)(10)
        let d = AmbitoricData::bach_flat_example();
        let (a, b) = (|i| d.a.a(i).clone(), |i| d.b.a(i).clone());
        assert_eq!((a(3) - b(3), a(1) + b(1), a(3) + b(3), a(1) - b(1)), (int(-10), int(-2), int(-2), int(10)));
    }

    #[test]
    fn selfdual_when_b_is_minus_a() {
        let a = Quartic::from_ints([-1, 4, -1, -6, 0]);
        let d = AmbitoricData::new(AmbitoricType::Hyperbolic, a.clone(), a.neg(), [int(2), int(3)], [int(0), int(1)]);
        let r = condition_report(&d);
        assert!(r.extremal && r.selfdual && r.bach_flat);
    }

    #[test]
    fn non_extremal_reports_residual() {
        let d = AmbitoricData::new(AmbitoricType::Hyperbolic, Quartic::from_ints([1, 0, 0, 0, 0]), Quartic::from_ints([1, 0, 0, 0, 0]), [int(2), int(3)], [int(0), int(1)]);
        let r = condition_report(&d);
        assert!(!r.extremal && !r.bach_flat);
        let ext = &r.residuals.iter().find(|(k, _)| k == "extremal").unwrap().1;
        assert_eq!(ext[0], Residual { name: "a0+b0".into(), value: int(2) });
    }

    #[test]
    fn vanishing_conditions_match_affine_forms() {
        // the s = 0 relations are exactly the vanishing of the affine coefficients
        let kinds = AmbitoricType::ALL;
        let samples: [[i64; 5]; 3] = [[2, 3, 1, -5, 1], [1, -1, 2, 3, 0], [0, 2, -3, 1, 4]];
        for kind in kinds {
            for a in samples {
                for b in samples {
                    let d = AmbitoricData::new(kind, Quartic::from_ints(a), Quartic::from_ints(b), [int(2), int(3)], [int(0), int(1)]);
                    let sp = affine_form(&d, Side::Plus);
                    let sm = affine_form(&d, Side::Minus);
                    let zero = |f: &crate::exactmath::AffineFn| f.a.iter().chain([&f.b]).all(Rational::is_zero);
                    assert_eq!(nonzero(splus_zero_rels(&d)).is_empty(), zero(&sp));
                    assert_eq!(nonzero(sminus_zero_rels(&d)).is_empty(), zero(&sm));
                }
            }
        }
    }
}
