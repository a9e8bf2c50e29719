//! When is `h = (x - y) q(x, y) / p(x, y)^2` separable, i.e. `h_xy = 0`?
//! Decided by exact expansion of the numerator of `h_xy`.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::{int, Quadratic, Rational};

/// Dense polynomial in `x`, `y`: `c[i][j] x^i y^j`.
#[derive(Clone, Debug, PartialEq)]
struct BiPoly {
    c: Vec<Vec<Rational>>,
}

impl BiPoly {
    fn zero(nx: usize, ny: usize) -> Self {
        BiPoly { c: vec![vec![Rational::zero(); ny]; nx] }
    }

    fn from_terms(terms: &[(usize, usize, Rational)]) -> Self {
        let nx = terms.iter().map(|t| t.0 + 1).max().unwrap_or(1);
        let ny = terms.iter().map(|t| t.1 + 1).max().unwrap_or(1);
        let mut p = BiPoly::zero(nx, ny);
        for (i, j, v) in terms {
            p.c[*i][*j] += v;
        }
        p
    }

    fn dims(&self) -> (usize, usize) {
        (self.c.len(), self.c.first().map_or(0, Vec::len))
    }

    fn add(&self, o: &BiPoly) -> BiPoly {
        let (ax, ay) = self.dims();
        let (bx, by) = o.dims();
        let mut r = BiPoly::zero(ax.max(bx), ay.max(by));
        for (i, row) in self.c.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                r.c[i][j] += v;
            }
        }
        for (i, row) in o.c.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                r.c[i][j] += v;
            }
        }
        r
    }

    fn scale(&self, s: &Rational) -> BiPoly {
        BiPoly { c: self.c.iter().map(|r| r.iter().map(|v| v * s).collect()).collect() }
    }

    fn sub(&self, o: &BiPoly) -> BiPoly {
        self.add(&o.scale(&int(-1)))
    }

    fn mul(&self, o: &BiPoly) -> BiPoly {
        let (ax, ay) = self.dims();
        let (bx, by) = o.dims();
        let mut r = BiPoly::zero(ax + bx - 1, ay + by - 1);
        for (i, ra) in self.c.iter().enumerate() {
            for (j, a) in ra.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (k, rb) in o.c.iter().enumerate() {
                    for (l, b) in rb.iter().enumerate() {
                        r.c[i + k][j + l] += a * b;
                    }
                }
            }
        }
        r
    }

    fn dx(&self) -> BiPoly {
        let (nx, ny) = self.dims();
        if nx <= 1 {
            return BiPoly::zero(1, ny);
        }
        BiPoly { c: (1..nx).map(|i| self.c[i].iter().map(|v| v * int(i as i64)).collect()).collect() }
    }

    fn dy(&self) -> BiPoly {
        let (_, ny) = self.dims();
        if ny <= 1 {
            return BiPoly::zero(self.c.len(), 1);
        }
        BiPoly { c: self.c.iter().map(|r| (1..ny).map(|j| &r[j] * int(j as i64)).collect()).collect() }
    }

    fn is_zero(&self) -> bool {
        self.c.iter().flatten().all(Zero::is_zero)
    }
}

/// `q(x, y) = q0 x y + q1 (x + y) + q2`
fn polar(q: &Quadratic) -> BiPoly {
    BiPoly::from_terms(&[(1, 1, q.q0.clone()), (1, 0, q.q1.clone()), (0, 1, q.q1.clone()), (0, 0, q.q2.clone())])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeparabilityCheck {
    pub h_xy_zero: bool,
    #[serde(rename = "Q_p_zero")]
    pub q_p_zero: bool,
}

/// Requires `<q, p> = 0` and `p != 0`.
pub fn ricci_separability_check(q: &Quadratic, p: &Quadratic) -> Result<SeparabilityCheck> {
    if !q.inner(p).is_zero() {
        return Err(Error::Precondition(format!("<q, p> = {} is not zero", q.inner(p))));
    }
    if p.is_zero() {
        return Err(Error::Precondition("p = 0".into()));
    }
    let n = BiPoly::from_terms(&[(1, 0, int(1)), (0, 1, int(-1))]).mul(&polar(q));
    let pp = polar(p);
    let (nx, ny, nxy) = (n.dx(), n.dy(), n.dx().dy());
    let (px, py, pxy) = (pp.dx(), pp.dy(), pp.dx().dy());
    // h_xy = num / p^4
    let two = int(2);
    let inner = nxy.mul(&pp).add(&nx.mul(&py)).sub(&ny.mul(&px).scale(&two)).sub(&n.mul(&pxy).scale(&two));
    let hx_num = nx.mul(&pp).sub(&n.mul(&px).scale(&two));
    let num = inner.mul(&pp).sub(&py.mul(&hx_num).scale(&int(3)));
    Ok(SeparabilityCheck { h_xy_zero: num.is_zero(), q_p_zero: p.disc().is_zero() })
}
