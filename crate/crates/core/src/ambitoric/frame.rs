use crate::error::{Error, Result};
use crate::exactmath::{Rational, Scalar};

use super::types::{AmbitoricData, AmbitoricType, Geometry, Side};

pub type Mat4<T> = [[T; 4]; 4];
pub type Mat2<T> = [[T; 2]; 2];

/// Metric and Kähler form components in coordinates `(x, y, t1, t2)`.
#[derive(Clone, Debug, PartialEq)]
pub struct MetricFrame<T> {
    pub point: [T; 2],
    pub g0: Mat4<T>,
    pub gplus: Mat4<T>,
    pub gminus: Mat4<T>,
    pub omega_plus: Mat4<T>,
    pub omega_minus: Mat4<T>,
    /// Conformal factor: `g0 = f g_+ = g_- / f`.
    pub f: T,
}

/// `(c1(z), c2(z))` with `theta_z = c1 dt1 + c2 dt2`.
pub(crate) fn c_of<T: Scalar>(kind: AmbitoricType, z: &T) -> [T; 2] {
    match kind {
        AmbitoricType::Parabolic => [T::one(), z.clone()],
        AmbitoricType::Hyperbolic => [T::one(), z.clone() * z.clone()],
        AmbitoricType::Elliptic => [T::from_int(2) * z.clone(), z.clone() * z.clone() - T::one()],
    }
}

/// `N(x, y)`: 1, x + y, 1 + xy.
pub(crate) fn n_of<T: Scalar>(kind: AmbitoricType, x: &T, y: &T) -> T {
    match kind {
        AmbitoricType::Parabolic => T::one(),
        AmbitoricType::Hyperbolic => x.clone() + y.clone(),
        AmbitoricType::Elliptic => T::one() + x.clone() * y.clone(),
    }
}

/// Conformal factor `F = N / (x - y)`.
pub fn conformal_factor<T: Scalar>(kind: AmbitoricType, x: &T, y: &T) -> Result<T> {
    let d = x.clone() - y.clone();
    if d.is_zero() {
        return Err(Error::Singular("x = y".into()));
    }
    Ok(n_of(kind, x, y) / d)
}

fn zeros4<T: Scalar>() -> Mat4<T> {
    std::array::from_fn(|_| std::array::from_fn(|_| T::zero()))
}

fn scaled<T: Scalar>(m: &Mat4<T>, s: &T) -> Mat4<T> {
    std::array::from_fn(|i| std::array::from_fn(|j| m[i][j].clone() * s.clone()))
}

fn check_denoms<T: Scalar>(kind: AmbitoricType, x: &T, y: &T) -> Result<T> {
    let n = n_of(kind, x, y);
    if n.is_zero() {
        return Err(Error::Singular(match kind {
            AmbitoricType::Hyperbolic => "x + y = 0".into(),
            _ => "1 + xy = 0".into(),
        }));
    }
    if (x.clone() - y.clone()).is_zero() {
        return Err(Error::Singular("x = y".into()));
    }
    Ok(n)
}

/// Frame from the values `A(x)`, `B(y)` alone.
pub fn frame_from_values<T: Scalar>(kind: AmbitoricType, x: T, y: T, ax: T, by: T) -> Result<MetricFrame<T>> {
    if ax.is_zero() || by.is_zero() {
        return Err(Error::Singular("A(x) or B(y) vanishes: boundary point".into()));
    }
    let n = check_denoms(kind, &x, &y)?;
    let xy = x.clone() - y.clone();
    let dd = xy.clone() * n.clone();
    let dd2 = dd.clone() * dd;
    let cy = c_of(kind, &y);
    let cx = c_of(kind, &x);

    let mut g0 = zeros4::<T>();
    g0[0][0] = T::one() / ax.clone();
    g0[1][1] = T::one() / by.clone();
    for i in 0..2 {
        for j in 0..2 {
            g0[2 + i][2 + j] = (ax.clone() * cy[i].clone() * cy[j].clone() + by.clone() * cx[i].clone() * cx[j].clone()) / dd2.clone();
        }
    }
    let n2 = n.clone() * n.clone();
    let xy2 = xy.clone() * xy.clone();
    let mut wp = zeros4::<T>();
    let mut wm = zeros4::<T>();
    for i in 0..2 {
        let (px, py) = (cy[i].clone() / n2.clone(), cx[i].clone() / n2.clone());
        let (mx, my) = (cy[i].clone() / xy2.clone(), -cx[i].clone() / xy2.clone());
        wp[0][2 + i] = px.clone();
        wp[2 + i][0] = -px;
        wp[1][2 + i] = py.clone();
        wp[2 + i][1] = -py;
        wm[0][2 + i] = mx.clone();
        wm[2 + i][0] = -mx;
        wm[1][2 + i] = my.clone();
        wm[2 + i][1] = -my;
    }
    let f = n / xy;
    let gplus = scaled(&g0, &(T::one() / f.clone()));
    let gminus = scaled(&g0, &f);
    Ok(MetricFrame { point: [x, y], g0, gplus, gminus, omega_plus: wp, omega_minus: wm, f })
}

/// Exact frame at an interior rational point.
pub fn metric_frame_at(d: &AmbitoricData, x: &Rational, y: &Rational) -> Result<MetricFrame<Rational>> {
    if !d.is_interior(x, y) {
        return Err(Error::NotInterior(format!("({x}, {y})")));
    }
    frame_from_values(d.kind, x.clone(), y.clone(), d.a.eval(x), d.b.eval(y))
}

pub fn metric_frame_f64<G: Geometry + ?Sized>(g: &G, x: f64, y: f64) -> Result<MetricFrame<f64>> {
    frame_from_values(g.kind(), x, y, g.a_at(x, 0), g.b_at(y, 0))
}

/// `H_ij = g_{+-}(K_i, K_j)` from the values `A(x)`, `B(y)`; zero values are allowed.
pub fn h_from_values<T: Scalar>(kind: AmbitoricType, side: Side, x: T, y: T, ax: T, by: T) -> Result<Mat2<T>> {
    let n = check_denoms(kind, &x, &y)?;
    let xy = x.clone() - y.clone();
    let den = xy.clone() * n.clone() * n.clone() * n.clone();
    let cy = c_of(kind, &y);
    let cx = c_of(kind, &x);
    let scale = match side {
        Side::Plus => T::one(),
        Side::Minus => n.clone() * n / (xy.clone() * xy),
    };
    Ok(std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            (ax.clone() * cy[i].clone() * cy[j].clone() + by.clone() * cx[i].clone() * cx[j].clone()) / den.clone() * scale.clone()
        })
    }))
}

/// Exact `H` for `g_+` on the closed domain.
pub fn h_matrix_at(d: &AmbitoricData, x: &Rational, y: &Rational) -> Result<Mat2<Rational>> {
    h_matrix_side(d, x, y, Side::Plus)
}

pub fn h_matrix_side(d: &AmbitoricData, x: &Rational, y: &Rational, side: Side) -> Result<Mat2<Rational>> {
    if !d.in_closed(x, y) {
        return Err(Error::Domain(format!("({x}, {y}) lies outside the domain rectangle")));
    }
    h_from_values(d.kind, side, x.clone(), y.clone(), d.a.eval(x), d.b.eval(y))
}

pub fn h_matrix_f64<G: Geometry + ?Sized>(g: &G, x: f64, y: f64, side: Side) -> Result<Mat2<f64>> {
    h_from_values(g.kind(), side, x, y, g.a_at(x, 0), g.b_at(y, 0))
}

/// `det H_+ / (A(x) B(y))`: 1, (x+y)^-4, 4 (1+xy)^-4.
pub fn det_h_factor<T: Scalar>(kind: AmbitoricType, x: &T, y: &T) -> T {
    let n = n_of(kind, x, y);
    let n4 = n.clone() * n.clone() * n.clone() * n;
    match kind {
        AmbitoricType::Parabolic => T::one(),
        AmbitoricType::Hyperbolic => T::one() / n4,
        AmbitoricType::Elliptic => T::from_int(4) / n4,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{frac, int, Quartic};
    use proptest::prelude::*;

    #[test]
    fn bach_flat_example_h() {
        let d = AmbitoricData::bach_flat_example();
        let h = h_matrix_at(&d, &frac(5, 2), &frac(1, 2)).unwrap();
        assert_eq!(h[0][0], frac(5, 72));
        let det = &h[0][0] * &h[1][1] - &h[0][1] * &h[1][0];
        assert!(det > int(0));
        assert_eq!(det, d.a.eval(&frac(5, 2)) * d.b.eval(&frac(1, 2)) / int(81));
    }

    #[test]
    fn h_kills_facet_normal() {
        let d = AmbitoricData::bach_flat_example();
        // u at x = alpha1 is proportional to (alpha1^2, -1)
        let h = h_matrix_at(&d, &int(2), &frac(1, 3)).unwrap();
        for row in &h {
            assert_eq!(&row[0] * int(4) - &row[1], int(0));
        }
    }

    #[test]
    fn frame_example_point() {
        let d = AmbitoricData::bach_flat_example();
        let fr = metric_frame_at(&d, &frac(5, 2), &frac(1, 2)).unwrap();
        let m = nalgebra::Matrix4::from_fn(|i, j| crate::exactmath::rational::to_f64(&fr.g0[i][j]));
        assert!(m.symmetric_eigenvalues().iter().all(|&e| e > 0.0));
        assert!(metric_frame_at(&d, &int(2), &frac(1, 2)).is_err());
    }

    #[test]
    fn parabolic_constant_ab() {
        let d = AmbitoricData::new(AmbitoricType::Parabolic, Quartic::from_ints([0, 0, 0, 0, 1]), Quartic::from_ints([0, 0, 0, 0, 1]), [frac(1, 2), int(2)], [int(-1), frac(1, 2)]);
        let fr = metric_frame_at(&d, &int(1), &int(0)).unwrap();
        // theta_y = dt1, theta_x = dt1 + dt2, x - y = 1
        assert_eq!(fr.g0[0][0], int(1));
        assert_eq!(fr.g0[2][2], int(2));
        assert_eq!(fr.g0[2][3], int(1));
        assert_eq!(fr.g0[3][3], int(1));
        assert_eq!(fr.f, int(1));
    }

    fn pt() -> impl Strategy<Value = (Rational, Rational)> {
        (1i64..99, 1i64..99).prop_map(|(i, j)| (int(2) + frac(i, 100), frac(j, 100)))
    }

    proptest! {
        #[test]
        fn conformal_relations((x, y) in pt(), k in 0usize..3) {
            let kind = AmbitoricType::ALL[k];
            let fr = frame_from_values(kind, x.clone(), y.clone(), frac(7, 3) + &x, frac(5, 2) - &y).unwrap();
            let f2 = &fr.f * &fr.f;
            for i in 0..4 {
                for j in 0..4 {
                    prop_assert_eq!(&fr.gplus[i][j] * &f2, fr.gminus[i][j].clone());
                    prop_assert_eq!(&fr.gplus[i][j] * &fr.f, fr.g0[i][j].clone());
                    prop_assert_eq!(fr.g0[i][j].clone(), fr.g0[j][i].clone());
                    prop_assert_eq!(fr.omega_plus[i][j].clone(), -fr.omega_plus[j][i].clone());
                }
            }
            // H_+ is the Gram matrix of the t-block of g_+
            let h = h_from_values(kind, Side::Plus, x.clone(), y.clone(), frac(7, 3) + &x, frac(5, 2) - &y).unwrap();
            for i in 0..2 {
                for j in 0..2 {
                    prop_assert_eq!(h[i][j].clone(), fr.gplus[2 + i][2 + j].clone());
                }
            }
        }

        #[test]
        fn det_factor_exact((x, y) in pt(), k in 0usize..3) {
            let kind = AmbitoricType::ALL[k];
            let (ax, by) = (frac(7, 3) + &x, frac(5, 2) - &y);
            let h = h_from_values(kind, Side::Plus, x.clone(), y.clone(), ax.clone(), by.clone()).unwrap();
            let det = &h[0][0] * &h[1][1] - &h[0][1] * &h[1][0];
            prop_assert_eq!(det / (ax * by), det_h_factor(kind, &x, &y));
        }
    }
}
