//! Exact clipping of convex polygons and segments by half-planes.

use num_traits::{Signed, Zero};

use crate::exactmath::Rational;

use super::Point;

fn lin(a: &[Rational; 2], b: &Rational, p: &Point) -> Rational {
    &a[0] * &p[0] + &a[1] * &p[1] + b
}

fn lerp(p: &Point, q: &Point, t: &Rational) -> Point {
    [&p[0] + (&q[0] - &p[0]) * t, &p[1] + (&q[1] - &p[1]) * t]
}

/// Part of the convex polygon `poly` where `<a, mu> + b >= 0` (Sutherland-Hodgman).
pub fn clip_halfplane(poly: &[Point], a: &[Rational; 2], b: &Rational) -> Vec<Point> {
    let n = poly.len();
    let mut out: Vec<Point> = Vec::with_capacity(n + 1);
    for i in 0..n {
        let (p, q) = (&poly[i], &poly[(i + 1) % n]);
        let (lp, lq) = (lin(a, b, p), lin(a, b, q));
        if !lp.is_negative() {
            out.push(p.clone());
        }
        if (lp.is_positive() && lq.is_negative()) || (lp.is_negative() && lq.is_positive()) {
            let t = &lp / (&lp - &lq);
            out.push(lerp(p, q, &t));
        }
    }
    out.dedup();
    while out.len() > 1 && out.first() == out.last() {
        out.pop();
    }
    out
}

/// Parameter range `[t0, t1] ⊂ [0, 1]` of the segment `p -> q` where
/// `<a, mu> + b >= 0`, or `None` when empty or a single point.
pub fn clip_segment(p: &Point, q: &Point, a: &[Rational; 2], b: &Rational, range: (Rational, Rational)) -> Option<(Rational, Rational)> {
    let (lp, lq) = (lin(a, b, p), lin(a, b, q));
    let (mut t0, mut t1) = range;
    let slope = &lq - &lp;
    if slope.is_zero() {
        return if lp.is_negative() { None } else { Some((t0, t1)) };
    }
    let root = -&lp / &slope;
    if slope.is_positive() {
        if root > t0 {
            t0 = root;
        }
    } else if root < t1 {
        t1 = root;
    }
    if t0 < t1 {
        Some((t0, t1))
    } else {
        None
    }
}
