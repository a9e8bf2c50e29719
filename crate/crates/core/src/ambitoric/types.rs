use std::fmt;

use serde::{Deserialize, Serialize};

use crate::exactmath::rational::{to_f64, Q};
use crate::exactmath::{Quadratic, Quartic, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AmbitoricType {
    Parabolic,
    Hyperbolic,
    Elliptic,
}

impl AmbitoricType {
    pub const ALL: [AmbitoricType; 3] = [AmbitoricType::Parabolic, AmbitoricType::Hyperbolic, AmbitoricType::Elliptic];

    /// 1, z and 1 + z^2 respectively.
    pub fn q(self) -> Quadratic {
        match self {
            AmbitoricType::Parabolic => Quadratic::one(),
            AmbitoricType::Hyperbolic => Quadratic::z(),
            AmbitoricType::Elliptic => Quadratic::one_plus_z2(),
        }
    }

    pub fn from_q(q: &Quadratic) -> Option<AmbitoricType> {
        AmbitoricType::ALL.into_iter().find(|k| &k.q() == q)
    }

    pub fn name(self) -> &'static str {
        match self {
            AmbitoricType::Parabolic => "parabolic",
            AmbitoricType::Hyperbolic => "hyperbolic",
            AmbitoricType::Elliptic => "elliptic",
        }
    }
}

impl fmt::Display for AmbitoricType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Plus,
    Minus,
}

impl Side {
    pub const BOTH: [Side; 2] = [Side::Plus, Side::Minus];

    pub fn sign(self) -> i64 {
        match self {
            Side::Plus => 1,
            Side::Minus => -1,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Plus => "+",
            Side::Minus => "-",
        })
    }
}

/// The local datum `(type, A, B, [alpha1, alpha2], [beta1, beta2])`.
/// `x` ranges over `[alpha1, alpha2]` with `A(x)`, `y` over `[beta1, beta2]` with `B(y)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(from = "DataJson", into = "DataJson")]
pub struct AmbitoricData {
    pub kind: AmbitoricType,
    pub a: Quartic,
    pub b: Quartic,
    pub alpha: [Rational; 2],
    pub beta: [Rational; 2],
}

/// Wire form; extra keys such as a catalog provenance block are ignored.
#[derive(Serialize, Deserialize)]
struct DataJson {
    #[serde(rename = "type")]
    kind: AmbitoricType,
    #[serde(rename = "A")]
    a: Quartic,
    #[serde(rename = "B")]
    b: Quartic,
    alpha: [Q; 2],
    beta: [Q; 2],
}

impl From<DataJson> for AmbitoricData {
    fn from(j: DataJson) -> Self {
        let [a1, a2] = j.alpha;
        let [b1, b2] = j.beta;
        AmbitoricData { kind: j.kind, a: j.a, b: j.b, alpha: [a1.0, a2.0], beta: [b1.0, b2.0] }
    }
}

impl From<AmbitoricData> for DataJson {
    fn from(d: AmbitoricData) -> Self {
        let [a1, a2] = d.alpha;
        let [b1, b2] = d.beta;
        DataJson { kind: d.kind, a: d.a, b: d.b, alpha: [Q(a1), Q(a2)], beta: [Q(b1), Q(b2)] }
    }
}

impl AmbitoricData {
    pub fn new(kind: AmbitoricType, a: Quartic, b: Quartic, alpha: [Rational; 2], beta: [Rational; 2]) -> Self {
        AmbitoricData { kind, a, b, alpha, beta }
    }

    /// The hyperbolic Bach-flat example with `A = -z^4 + 4z^3 - z^2 - 6z`,
    /// `B = z^4 - 6z^3 + z^2 + 4z` on `[2, 3] x [0, 1]`.
    pub fn bach_flat_example() -> Self {
        use crate::exactmath::int;
        AmbitoricData::new(
            AmbitoricType::Hyperbolic,
            Quartic::from_ints([-1, 4, -1, -6, 0]),
            Quartic::from_ints([1, -6, 1, 4, 0]),
            [int(2), int(3)],
            [int(0), int(1)],
        )
    }

    pub fn alpha_f64(&self) -> [f64; 2] {
        [to_f64(&self.alpha[0]), to_f64(&self.alpha[1])]
    }

    pub fn beta_f64(&self) -> [f64; 2] {
        [to_f64(&self.beta[0]), to_f64(&self.beta[1])]
    }

    /// Strictly inside the rectangle.
    pub fn is_interior(&self, x: &Rational, y: &Rational) -> bool {
        &self.alpha[0] < x && x < &self.alpha[1] && &self.beta[0] < y && y < &self.beta[1]
    }

    pub fn in_closed(&self, x: &Rational, y: &Rational) -> bool {
        &self.alpha[0] <= x && x <= &self.alpha[1] && &self.beta[0] <= y && y <= &self.beta[1]
    }

    /// Rectangle corners in the order `(a1,b1), (a2,b1), (a2,b2), (a1,b2)`.
    pub fn corners(&self) -> [[Rational; 2]; 4] {
        let [a1, a2] = &self.alpha;
        let [b1, b2] = &self.beta;
        [
            [a1.clone(), b1.clone()],
            [a2.clone(), b1.clone()],
            [a2.clone(), b2.clone()],
            [a1.clone(), b2.clone()],
        ]
    }
}

/// Coefficient data supplied as smooth functions rather than quartics;
/// everything that depends on exact coefficients is unavailable for it.
pub trait Geometry: Send + Sync {
    fn kind(&self) -> AmbitoricType;
    /// `k`-th derivative of `A` at `x`, `k <= 2`.
    fn a_at(&self, x: f64, k: usize) -> f64;
    fn b_at(&self, y: f64, k: usize) -> f64;
    fn alpha(&self) -> [f64; 2];
    fn beta(&self) -> [f64; 2];
    fn exact(&self) -> Option<&AmbitoricData> {
        None
    }
}

impl Geometry for AmbitoricData {
    fn kind(&self) -> AmbitoricType {
        self.kind
    }

    fn a_at(&self, x: f64, k: usize) -> f64 {
        self.a.eval_deriv_f64(x, k)
    }

    fn b_at(&self, y: f64, k: usize) -> f64 {
        self.b.eval_deriv_f64(y, k)
    }

    fn alpha(&self) -> [f64; 2] {
        self.alpha_f64()
    }

    fn beta(&self) -> [f64; 2] {
        self.beta_f64()
    }

    fn exact(&self) -> Option<&AmbitoricData> {
        Some(self)
    }
}

type Profile = Box<dyn Fn(f64, usize) -> f64 + Send + Sync>;

/// `A` and `B` as arbitrary smooth callables `(z, derivative order) -> value`.
pub struct SmoothData {
    pub kind: AmbitoricType,
    pub a: Profile,
    pub b: Profile,
    pub alpha: [f64; 2],
    pub beta: [f64; 2],
}

impl Geometry for SmoothData {
    fn kind(&self) -> AmbitoricType {
        self.kind
    }

    fn a_at(&self, x: f64, k: usize) -> f64 {
        (self.a)(x, k)
    }

    fn b_at(&self, y: f64, k: usize) -> f64 {
        (self.b)(y, k)
    }

    fn alpha(&self) -> [f64; 2] {
        self.alpha
    }

    fn beta(&self) -> [f64; 2] {
        self.beta
    }
}
