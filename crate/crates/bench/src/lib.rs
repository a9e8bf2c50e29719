//! Fixtures shared by the benchmarks.

use ambitoric_core::exactmath::{frac, Quartic, Rational};
use ambitoric_core::{AmbitoricData, AmbitoricType};

fn q5(c: [(i64, i64); 5]) -> Quartic {
    Quartic::new(c.map(|(n, d)| frac(n, d)))
}

pub fn example() -> AmbitoricData {
    AmbitoricData::bach_flat_example()
}

/// Extremal hyperbolic datum with `A` changing sign inside `(alpha1, alpha2)`.
pub fn unstable() -> AmbitoricData {
    AmbitoricData::new(
        AmbitoricType::Hyperbolic,
        q5([(-1, 1), (17, 1), (-403, 4), (1005, 4), (-225, 1)]),
        q5([(1, 1), (-805, 2), (403, 4), (4809, 8), (225, 1)]),
        [frac(5, 2), frac(15, 2)],
        [frac(-1, 2), frac(3, 2)],
    )
}

pub fn betas(b: [i64; 4]) -> [Rational; 4] {
    b.map(|v| frac(v, 1))
}
