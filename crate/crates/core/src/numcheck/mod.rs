//! Floating-point oracles built from finite differences, independent of the
//! closed-form expressions they check.

pub mod boundary;
pub mod killing;
pub mod riemann;
pub mod separability;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::ambitoric::{h_matrix_f64, invert_momentum_f64, metric_frame_f64, scalar_curvature_f64, Geometry, Mat2, Side};
use crate::error::{Error, Result};

pub use boundary::{boundary_conditions_check, BoundaryReport};
pub use killing::{killing_residual, killing_residual_with};
pub use riemann::M4;
pub use separability::{ricci_separability_check, SeparabilityCheck};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct FDConfig {
    pub h: f64,
    /// Combine steps `h` and `h/2` to cancel the `h^2` term.
    pub richardson: bool,
    pub tolerance: f64,
}

impl Default for FDConfig {
    fn default() -> Self {
        FDConfig { h: 1e-4, richardson: true, tolerance: 1e-6 }
    }
}

impl FDConfig {
    pub fn new(h: f64, richardson: bool, tolerance: f64) -> Result<Self> {
        let c = FDConfig { h, richardson, tolerance };
        c.check()?;
        Ok(c)
    }

    pub fn check(&self) -> Result<()> {
        if !(self.h > 0.0 && self.tolerance > 0.0) {
            return Err(Error::Precondition(format!("step {} and tolerance {} must be positive", self.h, self.tolerance)));
        }
        Ok(())
    }

    /// Evaluates `f` at `h` (and `h/2`) and extrapolates componentwise.
    fn extrapolate(&self, f: impl Fn(f64) -> Result<Vec<f64>>) -> Result<Vec<f64>> {
        let a = f(self.h)?;
        if !self.richardson {
            return Ok(a);
        }
        let b = f(self.h / 2.0)?;
        Ok(a.iter().zip(&b).map(|(a, b)| (4.0 * b - a) / 3.0).collect())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResidualReport {
    pub max_abs: f64,
    pub max_rel: f64,
    pub worst_point: [f64; 2],
    pub samples: usize,
    /// Points dropped because the stencil left the domain.
    pub skipped: usize,
}

impl ResidualReport {
    pub fn within(&self, tol: f64) -> bool {
        self.samples > 0 && self.max_abs < tol
    }

    /// `(abs, rel, point)` per sample; `None` marks a skipped point.
    pub(crate) fn collect(items: Vec<Option<(f64, f64, [f64; 2])>>) -> Self {
        let mut r = ResidualReport { max_abs: 0.0, max_rel: 0.0, worst_point: [f64::NAN; 2], samples: 0, skipped: 0 };
        for it in items {
            match it {
                None => r.skipped += 1,
                Some((a, rel, p)) => {
                    r.samples += 1;
                    if a >= r.max_abs || r.worst_point[0].is_nan() {
                        r.max_abs = a;
                        r.worst_point = p;
                    }
                    r.max_rel = r.max_rel.max(rel);
                }
            }
        }
        if r.skipped > 0 {
            log_skips(r.skipped);
        }
        r
    }
}

fn log_skips(n: usize) {
    eprintln!("warning: {n} sample point(s) skipped: stencil leaves the domain");
}

/// Uniform random points of the open rectangle, kept `margin` (relative) away
/// from its sides and from the singular loci of the frame.
pub fn interior_points<G: Geometry + ?Sized>(g: &G, n: usize, seed: u64, margin: f64) -> Vec<[f64; 2]> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let [a1, a2] = g.alpha();
    let [b1, b2] = g.beta();
    let (mx, my) = ((a2 - a1) * margin, (b2 - b1) * margin);
    let mut out = Vec::with_capacity(n);
    let mut guard = 0;
    while out.len() < n && guard < 100 * n + 100 {
        guard += 1;
        let x = rng.gen_range(a1 + mx..a2 - mx);
        let y = rng.gen_range(b1 + my..b2 - my);
        if metric_frame_f64(g, x, y).is_ok() {
            out.push([x, y]);
        }
    }
    out
}

/// Whether the `[-2h, 2h]` square around `(x, y)` stays in the open rectangle.
pub fn stencil_inside<G: Geometry + ?Sized>(g: &G, x: f64, y: f64, h: f64) -> bool {
    let [a1, a2] = g.alpha();
    let [b1, b2] = g.beta();
    x - 2.0 * h > a1 && x + 2.0 * h < a2 && y - 2.0 * h > b1 && y + 2.0 * h < b2
}

type MatField<'a> = dyn Fn(f64, f64) -> Result<M4> + Sync + 'a;

fn omega_field<G: Geometry + ?Sized>(g: &G, side: Side) -> impl Fn(f64, f64) -> Result<M4> + Sync + '_ {
    move |x, y| {
        let f = metric_frame_f64(g, x, y)?;
        Ok(riemann::to_m4(match side {
            Side::Plus => &f.omega_plus,
            Side::Minus => &f.omega_minus,
        }))
    }
}

fn metric_field<G: Geometry + ?Sized>(g: &G, side: Side) -> impl Fn(f64, f64) -> Result<M4> + Sync + '_ {
    move |x, y| {
        let f = metric_frame_f64(g, x, y)?;
        Ok(riemann::to_m4(match side {
            Side::Plus => &f.gplus,
            Side::Minus => &f.gminus,
        }))
    }
}

/// Components `(d omega)_{abc}`, `a < b < c`, at step `h`.
fn d_omega(w: &MatField, x: f64, y: f64, h: f64) -> Result<(Vec<f64>, f64)> {
    let dx = (w(x + h, y)? - w(x - h, y)?) / (2.0 * h);
    let dy = (w(x, y + h)? - w(x, y - h)?) / (2.0 * h);
    let d = |a: usize, i: usize, j: usize| match a {
        0 => dx[(i, j)],
        1 => dy[(i, j)],
        _ => 0.0,
    };
    let mut out = Vec::with_capacity(4);
    let mut scale: f64 = 0.0;
    for a in 0..4 {
        for b in a + 1..4 {
            for c in b + 1..4 {
                let t = [d(a, b, c), d(b, c, a), d(c, a, b)];
                scale = scale.max(t.iter().fold(0.0, |m: f64, v| m.max(v.abs())));
                out.push(t.iter().sum());
            }
        }
    }
    Ok((out, scale))
}

/// Closedness of an arbitrary 2-form field given by its component matrix.
pub fn fd_closedness_with(omega: &MatField, points: &[[f64; 2]], cfg: &FDConfig) -> Result<ResidualReport> {
    cfg.check()?;
    let items = points
        .par_iter()
        .map(|&[x, y]| {
            let scale = d_omega(omega, x, y, cfg.h).ok()?.1;
            let v = cfg.extrapolate(|h| d_omega(omega, x, y, h).map(|r| r.0)).ok()?;
            let a = v.iter().fold(0.0, |m: f64, c| m.max(c.abs()));
            Some((a, a / scale.max(f64::MIN_POSITIVE), [x, y]))
        })
        .collect();
    Ok(ResidualReport::collect(items))
}

/// `d omega_+-` at the given interior points. Points whose stencil leaves the
/// rectangle are skipped.
pub fn fd_closedness<G: Geometry + ?Sized>(g: &G, side: Side, points: &[[f64; 2]], cfg: &FDConfig) -> Result<ResidualReport> {
    let w = omega_field(g, side);
    let inside: Vec<[f64; 2]> = points.iter().copied().filter(|&[x, y]| stencil_inside(g, x, y, cfg.h)).collect();
    let mut r = fd_closedness_with(&w, &inside, cfg)?;
    if inside.len() < points.len() {
        r.skipped += points.len() - inside.len();
        log_skips(points.len() - inside.len());
    }
    Ok(r)
}

/// Scalar curvature of the metric field `g` at `(x, y)` by full Levi-Civita assembly.
pub fn fd_scalar_curvature_with(g: &MatField, x: f64, y: f64, cfg: &FDConfig) -> Result<f64> {
    cfg.check()?;
    let v = cfg.extrapolate(|h| Ok(vec![riemann::scalar_curvature(&riemann::jet(g, x, y, h)?)?]))?;
    Ok(v[0])
}

pub fn fd_scalar_curvature<G: Geometry + ?Sized>(g: &G, x: f64, y: f64, side: Side, cfg: &FDConfig) -> Result<f64> {
    if !stencil_inside(g, x, y, cfg.h) {
        return Err(Error::NotInterior(format!("({x}, {y}): stencil of step {} leaves the domain", cfg.h)));
    }
    fd_scalar_curvature_with(&metric_field(g, side), x, y, cfg)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AbreuCheck {
    /// `-sum d^2 H_rs / dmu_r dmu_s` by differences in the momenta.
    pub fd: f64,
    pub closed_form: f64,
    pub rel_err: f64,
    pub point: [f64; 2],
}

type HField<'a> = dyn Fn([f64; 2]) -> Result<Mat2<f64>> + Sync + 'a;

/// `-sum_rs d^2 H_rs / dmu_r dmu_s` for a field `H(mu)`.
pub fn abreu_fd_with(hf: &HField, mu: [f64; 2], cfg: &FDConfig) -> Result<f64> {
    cfg.check()?;
    let at = |h: f64| -> Result<Vec<f64>> {
        let mut s = [[[[0.0; 2]; 2]; 3]; 3];
        for (i, row) in s.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                *v = hf([mu[0] + (i as f64 - 1.0) * h, mu[1] + (j as f64 - 1.0) * h])?;
            }
        }
        let h11 = (s[2][1][0][0] - 2.0 * s[1][1][0][0] + s[0][1][0][0]) / (h * h);
        let h22 = (s[1][2][1][1] - 2.0 * s[1][1][1][1] + s[1][0][1][1]) / (h * h);
        let h12 = (s[2][2][0][1] - s[2][0][0][1] - s[0][2][0][1] + s[0][0][0][1]) / (4.0 * h * h);
        Ok(vec![-(h11 + 2.0 * h12 + h22)])
    };
    Ok(cfg.extrapolate(at)?[0])
}

/// `H` as a function of the momenta on the side given.
pub fn h_of_mu<G: Geometry + ?Sized>(g: &G, side: Side) -> impl Fn([f64; 2]) -> Result<Mat2<f64>> + Sync + '_ {
    move |mu| {
        let (x, y) = invert_momentum_f64(g, mu, side)?;
        h_matrix_f64(g, x, y, side)
    }
}

pub fn abreu_cross_check<G: Geometry + ?Sized>(g: &G, mu: [f64; 2], side: Side, cfg: &FDConfig) -> Result<AbreuCheck> {
    let (x, y) = invert_momentum_f64(g, mu, side)?;
    let fd = abreu_fd_with(&h_of_mu(g, side), mu, cfg)?;
    let closed_form = scalar_curvature_f64(g, x, y, side)?;
    let rel_err = (fd - closed_form).abs() / closed_form.abs().max(1e-300);
    Ok(AbreuCheck { fd, closed_form, rel_err, point: [x, y] })
}
