//! Killing tensor equation `nabla_(a S_bc) = 0` for the separable conformal
//! rescalings `g = (F(x) - G(y)) g0`.

use rayon::prelude::*;

use crate::ambitoric::frame::{c_of, n_of};
use crate::ambitoric::Geometry;
use crate::error::{Error, Result};

use super::riemann::{christoffel, inverse, M4};
use super::{stencil_inside, FDConfig, MatField, ResidualReport};

/// Symmetrized covariant derivative components, `a <= b <= c`.
fn sym_nabla(g: &MatField, s: &MatField, x: f64, y: f64, h: f64) -> Result<Vec<f64>> {
    let d = |f: &MatField| -> Result<[M4; 2]> {
        Ok([(f(x + h, y)? - f(x - h, y)?) / (2.0 * h), (f(x, y + h)? - f(x, y - h)?) / (2.0 * h)])
    };
    let gm = g(x, y)?;
    let sv = s(x, y)?;
    let gam = christoffel(&inverse(&gm)?, &d(g)?);
    let ds = d(s)?;
    let nab = |a: usize, b: usize, c: usize| {
        let mut v = if a < 2 { ds[a][(b, c)] } else { 0.0 };
        for e in 0..4 {
            v -= gam[e][a][b] * sv[(e, c)] + gam[e][a][c] * sv[(b, e)];
        }
        v
    };
    let mut out = Vec::with_capacity(20);
    for a in 0..4 {
        for b in a..4 {
            for c in b..4 {
                out.push((nab(a, b, c) + nab(b, c, a) + nab(c, a, b)) / 3.0);
            }
        }
    }
    Ok(out)
}

/// Residual of the Killing equation for a symmetric tensor field `s` of the metric `g`.
pub fn killing_residual_with(g: &MatField, s: &MatField, points: &[[f64; 2]], cfg: &FDConfig) -> Result<ResidualReport> {
    cfg.check()?;
    let items = points
        .par_iter()
        .map(|&[x, y]| {
            let v = cfg.extrapolate(|h| sym_nabla(g, s, x, y, h)).ok()?;
            let a = v.iter().fold(0.0, |m: f64, c| m.max(c.abs()));
            let scale = s(x, y).ok()?.amax();
            Some((a, a / scale.max(f64::MIN_POSITIVE), [x, y]))
        })
        .collect();
    Ok(ResidualReport::collect(items))
}

/// The blocks of `g0` on `span(dx, theta_y)` and `span(dy, theta_x)`.
fn g0_blocks<G: Geometry + ?Sized>(geo: &G, x: f64, y: f64) -> Result<[M4; 2]> {
    let k = geo.kind();
    let dd = (x - y) * n_of(k, &x, &y);
    if dd == 0.0 {
        return Err(Error::Singular("(x - y) N = 0".into()));
    }
    let (ax, by) = (geo.a_at(x, 0), geo.b_at(y, 0));
    let (cx, cy) = (c_of(k, &x), c_of(k, &y));
    let mut gx = M4::zeros();
    let mut gy = M4::zeros();
    gx[(0, 0)] = 1.0 / ax;
    gy[(1, 1)] = 1.0 / by;
    for i in 0..2 {
        for j in 0..2 {
            gx[(2 + i, 2 + j)] = ax * cy[i] * cy[j] / (dd * dd);
            gy[(2 + i, 2 + j)] = by * cx[i] * cx[j] / (dd * dd);
        }
    }
    Ok([gx, gy])
}

type Profile<'a> = &'a (dyn Fn(f64) -> f64 + Sync);

/// `g = (F(x) - G(y)) g0` with `S = (F + G) g + (F - G) g(I., .)`, where `I` is
/// `-1` on `span(dx, theta_y)` and `+1` on `span(dy, theta_x)`; equivalently
/// `S = 2G g_x + 2F g_y`. Errors when `F - G <= 0` at a sample point.
pub fn killing_residual<G: Geometry + ?Sized>(geo: &G, f: Profile, gf: Profile, points: &[[f64; 2]], cfg: &FDConfig) -> Result<ResidualReport> {
    if let Some([x, y]) = points.iter().find(|&&[x, y]| f(x) - gf(y) <= 0.0) {
        return Err(Error::Domain(format!("F(x) - G(y) = {} <= 0 at ({x}, {y})", f(*x) - gf(*y))));
    }
    let metric = |x: f64, y: f64| -> Result<M4> {
        let [gx, gy] = g0_blocks(geo, x, y)?;
        Ok((gx + gy) * (f(x) - gf(y)))
    };
    let tensor = |x: f64, y: f64| -> Result<M4> {
        let [gx, gy] = g0_blocks(geo, x, y)?;
        let h = f(x) - gf(y);
        Ok((gx * (2.0 * gf(y)) + gy * (2.0 * f(x))) * h)
    };
    let inside: Vec<[f64; 2]> = points.iter().copied().filter(|&[x, y]| stencil_inside(geo, x, y, cfg.h)).collect();
    let mut r = killing_residual_with(&metric, &tensor, &inside, cfg)?;
    r.skipped += points.len() - inside.len();
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ambitoric::AmbitoricData;
    use crate::numcheck::interior_points;

    fn plain(h: f64) -> FDConfig {
        FDConfig::new(h, false, 1e-5).unwrap()
    }

    #[test]
    fn separable_families_are_killing() {
        let d = AmbitoricData::bach_flat_example();
        let pts = interior_points(&d, 20, 7, 0.05);
        let one = |_: f64| 1.0;
        let zero = |_: f64| 0.0;
        let id = |z: f64| z;
        let sq = |z: f64| z * z;
        let cases: [(Profile, Profile); 3] = [(&one, &zero), (&id, &id), (&sq, &id)];
        for (i, (f, g)) in cases.into_iter().enumerate() {
            let r = killing_residual(&d, f, g, &pts, &FDConfig::new(1e-4, true, 1e-5).unwrap()).unwrap();
            assert_eq!(r.samples, 20);
            assert!(r.max_abs < 1e-5, "case {i}: {r:?}");
        }
    }

    #[test]
    fn other_types_too() {
        for d in crate::stability::tests::sample_data().into_iter().skip(2) {
            let pts = interior_points(&d, 10, 8, 0.05);
            let shift = d.alpha_f64()[0] - d.beta_f64()[1] + 1.0;
            let f = move |x: f64| x + shift;
            let g = |y: f64| y;
            let r = killing_residual(&d, &f, &g, &pts, &FDConfig::default()).unwrap();
            assert!(r.max_rel < 1e-6, "{}: {r:?}", d.kind);
        }
    }

    #[test]
    fn swapped_eigenvalues_fail() {
        let d = AmbitoricData::bach_flat_example();
        let pts = interior_points(&d, 5, 9, 0.05);
        let g = |x: f64, y: f64| -> Result<M4> {
            let [gx, gy] = g0_blocks(&d, x, y)?;
            Ok((gx + gy) * (x - y))
        };
        let bad = |x: f64, y: f64| -> Result<M4> {
            let [gx, gy] = g0_blocks(&d, x, y)?;
            Ok((gx * (2.0 * x) + gy * (2.0 * y)) * (x - y))
        };
        let r = killing_residual_with(&g, &bad, &pts, &plain(1e-4)).unwrap();
        assert!(r.max_abs > 1e-3, "{r:?}");
    }

    #[test]
    fn nonpositive_conformal_factor() {
        let d = AmbitoricData::bach_flat_example();
        let neg = |_: f64| -1.0;
        let zero = |_: f64| 0.0;
        assert!(matches!(killing_residual(&d, &neg, &zero, &[[2.5, 0.5]], &plain(1e-4)), Err(Error::Domain(_))));
    }

    #[test]
    fn second_order_convergence() {
        let d = AmbitoricData::bach_flat_example();
        let pts = [[2.5, 0.5], [2.3, 0.8]];
        let sq = |z: f64| z * z;
        let id = |z: f64| z;
        let r1 = killing_residual(&d, &sq, &id, &pts, &plain(2e-3)).unwrap();
        let r2 = killing_residual(&d, &sq, &id, &pts, &plain(1e-3)).unwrap();
        let ratio = r1.max_abs / r2.max_abs;
        assert!((3.5..4.5).contains(&ratio), "{ratio}: {} {}", r1.max_abs, r2.max_abs);
    }
}
