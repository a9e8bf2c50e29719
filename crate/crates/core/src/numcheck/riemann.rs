//! Levi-Civita assembly for metrics on `(x, y, t1, t2)` whose components
//! depend on `(x, y)` only, from finite-difference jets.

use nalgebra::Matrix4;

use crate::error::{Error, Result};

pub type M4 = Matrix4<f64>;

/// `Gamma[k][i][j]`
pub type Christoffel = [[[f64; 4]; 4]; 4];

pub fn to_m4(m: &[[f64; 4]; 4]) -> M4 {
    M4::from_fn(|i, j| m[i][j])
}

/// Value, first and second derivatives in `x`, `y`.
pub struct Jet {
    pub g: M4,
    pub d: [M4; 2],
    pub dd: [[M4; 2]; 2],
}

/// Central 9-point stencil with step `h`.
pub fn jet(f: &dyn Fn(f64, f64) -> Result<M4>, x: f64, y: f64, h: f64) -> Result<Jet> {
    let mut s = [[M4::zeros(); 3]; 3];
    for (i, row) in s.iter_mut().enumerate() {
        for (j, v) in row.iter_mut().enumerate() {
            *v = f(x + (i as f64 - 1.0) * h, y + (j as f64 - 1.0) * h)?;
        }
    }
    let g = s[1][1];
    let dx = (s[2][1] - s[0][1]) / (2.0 * h);
    let dy = (s[1][2] - s[1][0]) / (2.0 * h);
    let dxx = (s[2][1] - 2.0 * g + s[0][1]) / (h * h);
    let dyy = (s[1][2] - 2.0 * g + s[1][0]) / (h * h);
    let dxy = (s[2][2] - s[2][0] - s[0][2] + s[0][0]) / (4.0 * h * h);
    Ok(Jet { g, d: [dx, dy], dd: [[dxx, dxy], [dxy, dyy]] })
}

pub fn inverse(g: &M4) -> Result<M4> {
    g.try_inverse().ok_or_else(|| Error::Singular("degenerate metric".into()))
}

fn dg(d: &[M4; 2], i: usize) -> Option<&M4> {
    d.get(i)
}

/// `d_i g_jl + d_j g_il - d_l g_ij`
fn first_kind(d: &[M4; 2], l: usize, i: usize, j: usize) -> f64 {
    let p = |a: usize, b: usize, c: usize| dg(d, a).map_or(0.0, |m| m[(b, c)]);
    p(i, j, l) + p(j, i, l) - p(l, i, j)
}

pub fn christoffel(gi: &M4, d: &[M4; 2]) -> Christoffel {
    let mut c = [[[0.0; 4]; 4]; 4];
    for (k, ck) in c.iter_mut().enumerate() {
        for (i, row) in ck.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                *v = 0.5 * (0..4).map(|l| gi[(k, l)] * first_kind(d, l, i, j)).sum::<f64>();
            }
        }
    }
    c
}

/// Ricci scalar from a jet.
pub fn scalar_curvature(jt: &Jet) -> Result<f64> {
    let gi = inverse(&jt.g)?;
    let gam = christoffel(&gi, &jt.d);
    // derivatives of Gamma in x and y
    let mut dgam = [[[[0.0; 4]; 4]; 4]; 2];
    for (m, dm) in dgam.iter_mut().enumerate() {
        let dgi = -gi * jt.d[m] * gi;
        let dd = &jt.dd[m];
        let second = |l: usize, i: usize, j: usize| {
            let p = |a: usize, b: usize, c: usize| dd.get(a).map_or(0.0, |mm| mm[(b, c)]);
            p(i, j, l) + p(j, i, l) - p(l, i, j)
        };
        for (k, dk) in dm.iter_mut().enumerate() {
            for (i, row) in dk.iter_mut().enumerate() {
                for (j, v) in row.iter_mut().enumerate() {
                    *v = 0.5
                        * (0..4)
                            .map(|l| dgi[(k, l)] * first_kind(&jt.d, l, i, j) + gi[(k, l)] * second(l, i, j))
                            .sum::<f64>();
                }
            }
        }
    }
    let dg_ = |m: usize, k: usize, i: usize, j: usize| if m < 2 { dgam[m][k][i][j] } else { 0.0 };
    let mut s = 0.0;
    for i in 0..4 {
        for j in 0..4 {
            let mut r = 0.0;
            for k in 0..4 {
                r += dg_(k, k, i, j) - dg_(j, k, i, k);
                for l in 0..4 {
                    r += gam[k][k][l] * gam[l][i][j] - gam[k][j][l] * gam[l][i][k];
                }
            }
            s += gi[(i, j)] * r;
        }
    }
    Ok(s)
}
