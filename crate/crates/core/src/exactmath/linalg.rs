//! Small dense exact linear algebra.

use num_traits::{One, Zero};

use super::rational::Rational;
use super::MathError;

/// Solves `m x = rhs` for square nonsingular `m`.
pub fn solve(m: &[Vec<Rational>], rhs: &[Rational]) -> Result<Vec<Rational>, MathError> {
    let n = m.len();
    if rhs.len() != n || m.iter().any(|r| r.len() != n) {
        return Err(MathError::Dimension(format!("{n}x? system with rhs of length {}", rhs.len())));
    }
    let mut a: Vec<Vec<Rational>> = m.iter().zip(rhs).map(|(r, b)| {
        let mut r = r.clone();
        r.push(b.clone());
        r
    }).collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero()).ok_or(MathError::Singular)?;
        a.swap(col, piv);
        let inv = Rational::one() / &a[col][col];
        for v in a[col].iter_mut() {
            *v *= &inv;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in col..=n {
                    let t = &f * &a[col][c];
                    a[r][c] -= t;
                }
            }
        }
    }
    Ok(a.into_iter().map(|mut r| r.pop().expect("augmented")).collect())
}

/// Reduced row echelon form; returns pivot columns.
pub fn rref(a: &mut [Vec<Rational>]) -> Vec<usize> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        let inv = Rational::one() / &a[r][c];
        for v in a[r].iter_mut() {
            *v *= &inv;
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for k in c..cols {
                    let t = &f * &a[r][k];
                    a[i][k] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Basis of `{x : m x = 0}`.
pub fn nullspace(m: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let mut a = m.to_vec();
    let cols = a.first().map_or(0, Vec::len);
    let pivots = rref(&mut a);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); cols];
            v[f] = Rational::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -a[row][f].clone();
            }
            v
        })
        .collect()
}

pub fn det2(a: &Rational, b: &Rational, c: &Rational, d: &Rational) -> Rational {
    a * d - b * c
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rational::{frac, int};

    #[test]
    fn solves_3x3() {
        let m = vec![
            vec![int(2), int(1), int(-1)],
            vec![int(-3), int(-1), int(2)],
            vec![int(-2), int(1), int(2)],
        ];
        let x = solve(&m, &[int(8), int(-11), int(-3)]).unwrap();
        assert_eq!(x, vec![int(2), int(3), int(-1)]);
        let sing = vec![vec![int(1), int(2)], vec![int(2), int(4)]];
        assert_eq!(solve(&sing, &[int(1), int(1)]), Err(MathError::Singular));
    }

    #[test]
    fn nullspace_is_annihilated() {
        let m = vec![
            vec![int(1), int(2), int(3), int(4)],
            vec![int(2), int(4), frac(1, 2), int(0)],
        ];
        let ns = nullspace(&m);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            for row in &m {
                let dot: Rational = row.iter().zip(v).map(|(a, b)| a * b).sum();
                assert!(dot.is_zero());
            }
        }
    }
}
