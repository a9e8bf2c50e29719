use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactmath::{int, Quadratic, Quartic, Rational};

use super::frame::Mat4;

/// General-form metric and Kähler forms in coordinates `(x, y, tau_i, tau_j)`
/// where `kept = [i, j]` are the two tau-coordinates left after eliminating one
/// through `2 q1 dtau1 = q0 dtau2 + q2 dtau0`.
#[derive(Clone, Debug, PartialEq)]
pub struct GeneralFrame {
    pub kept: [usize; 2],
    pub g0: Mat4<Rational>,
    pub gplus: Mat4<Rational>,
    pub gminus: Mat4<Rational>,
    pub omega_plus: Mat4<Rational>,
    pub omega_minus: Mat4<Rational>,
    /// `q(x,y) / (x - y)`
    pub f: Rational,
}

/// Coefficients of `z^2 dtau0 + 2z dtau1 + dtau2` on the kept coordinates.
fn v_of(q: &Quadratic, z: &Rational) -> ([usize; 2], [Rational; 2]) {
    if !q.q1.is_zero() {
        ([0, 2], [z * z + z * &q.q2 / &q.q1, int(1) + z * &q.q0 / &q.q1])
    } else if !q.q2.is_zero() {
        ([1, 2], [int(2) * z, int(1) - z * z * &q.q0 / &q.q2])
    } else {
        ([0, 1], [z * z, int(2) * z])
    }
}

fn zeros() -> Mat4<Rational> {
    std::array::from_fn(|_| std::array::from_fn(|_| int(0)))
}

pub fn general_q_frame(q: &Quadratic, a: &Quartic, b: &Quartic, x: &Rational, y: &Rational) -> Result<GeneralFrame> {
    if q.is_zero() {
        return Err(Error::Precondition("q = 0".into()));
    }
    let qxy = q.polarize(x, y);
    if qxy.is_zero() {
        return Err(Error::Singular("q(x, y) = 0".into()));
    }
    let d = x - y;
    if d.is_zero() {
        return Err(Error::Singular("x = y".into()));
    }
    let (ax, by) = (a.eval(x), b.eval(y));
    if ax.is_zero() || by.is_zero() {
        return Err(Error::Singular("A(x) or B(y) vanishes".into()));
    }
    let (kept, vy) = v_of(q, y);
    let (_, vx) = v_of(q, x);
    let den = {
        let t = int(2) * &d * &qxy;
        &t * &t
    };
    let mut g0 = zeros();
    g0[0][0] = int(1) / &ax;
    g0[1][1] = int(1) / &by;
    for i in 0..2 {
        for j in 0..2 {
            g0[2 + i][2 + j] = (&ax * &vy[i] * &vy[j] + &by * &vx[i] * &vx[j]) / &den;
        }
    }
    let (q2, d2) = (&qxy * &qxy, &d * &d);
    let mut wp = zeros();
    let mut wm = zeros();
    for i in 0..2 {
        let set = |w: &mut Mat4<Rational>, r: usize, v: Rational| {
            w[r][2 + i] = v.clone();
            w[2 + i][r] = -v;
        };
        set(&mut wp, 0, &vy[i] / &q2);
        set(&mut wp, 1, &vx[i] / &q2);
        set(&mut wm, 0, &vy[i] / &d2);
        set(&mut wm, 1, -&vx[i] / &d2);
    }
    let f = &qxy / &d;
    let inv = int(1) / &f;
    let gplus = std::array::from_fn(|i| std::array::from_fn(|j| &g0[i][j] * &inv));
    let gminus = std::array::from_fn(|i| std::array::from_fn(|j| &g0[i][j] * &f));
    Ok(GeneralFrame { kept, g0, gplus, gminus, omega_plus: wp, omega_minus: wm, f })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ambitoric::{frame_from_values, AmbitoricType};
    use crate::exactmath::frac;

    /// Re-express a form given in `(x, y, t1, t2)` under the linear substitution
    /// `t = M tau` of the torus coordinates: components transform by `M^T w M`.
    fn pull(w: &Mat4<Rational>, m: [[Rational; 2]; 2]) -> Mat4<Rational> {
        let mut full = zeros();
        full[0][0] = int(1);
        full[1][1] = int(1);
        for i in 0..2 {
            for j in 0..2 {
                full[2 + i][2 + j] = m[i][j].clone();
            }
        }
        std::array::from_fn(|i| {
            std::array::from_fn(|j| {
                let mut s = int(0);
                for k in 0..4 {
                    for l in 0..4 {
                        s += &full[k][i] * &w[k][l] * &full[l][j];
                    }
                }
                s
            })
        })
    }

    fn scaled(w: &Mat4<Rational>, s: &Rational) -> Mat4<Rational> {
        std::array::from_fn(|i| std::array::from_fn(|j| &w[i][j] * s))
    }

    #[test]
    fn q_one_reproduces_parabolic() {
        let a = Quartic::from_ints([1, -2, 3, 1, 5]);
        let b = Quartic::from_ints([-1, 2, -3, 4, 2]);
        let (x, y) = (frac(5, 2), frac(1, 3));
        let g = general_q_frame(&Quadratic::one(), &a, &b, &x, &y).unwrap();
        assert_eq!(g.kept, [1, 2]);
        let n = frame_from_values(AmbitoricType::Parabolic, x.clone(), y.clone(), a.eval(&x), b.eval(&y)).unwrap();
        // kept (tau1, tau2); t1 = tau2, t2 = 2 tau1
        let m = [[int(0), int(1)], [int(2), int(0)]];
        assert_eq!(g.omega_plus, pull(&n.omega_plus, m.clone()));
        assert_eq!(g.omega_minus, pull(&n.omega_minus, m.clone()));
        let mut expect = pull(&n.g0, m);
        for row in expect.iter_mut().skip(2) {
            for v in row.iter_mut().skip(2) {
                *v /= int(4);
            }
        }
        assert_eq!(g.g0, expect);
        assert_eq!(g.f, n.f);
    }

    #[test]
    fn q_z_matches_hyperbolic_up_to_constants() {
        let a = Quartic::from_ints([-1, 4, -1, -6, 0]);
        let b = Quartic::from_ints([1, -6, 1, 4, 0]);
        let (x, y) = (frac(5, 2), frac(1, 2));
        let g = general_q_frame(&Quadratic::z(), &a, &b, &x, &y).unwrap();
        assert_eq!(g.kept, [0, 2]);
        let n = frame_from_values(AmbitoricType::Hyperbolic, x.clone(), y.clone(), a.eval(&x), b.eval(&y)).unwrap();
        // kept (tau0, tau2); t1 = tau2, t2 = tau0
        let m = [[int(0), int(1)], [int(1), int(0)]];
        assert_eq!(g.omega_plus, scaled(&pull(&n.omega_plus, m.clone()), &int(4)));
        assert_eq!(g.omega_minus, pull(&n.omega_minus, m.clone()));
        assert_eq!(g.g0, pull(&n.g0, m));
        assert_eq!(g.f * int(2), n.f);
    }

    #[test]
    fn singular_polarization() {
        let a = Quartic::from_ints([0, 0, 0, 0, 1]);
        // q = z: q(1, -1) = 0
        assert!(general_q_frame(&Quadratic::z(), &a, &a, &int(1), &int(-1)).is_err());
        assert!(general_q_frame(&Quadratic::zero(), &a, &a, &int(1), &int(0)).is_err());
    }
}
