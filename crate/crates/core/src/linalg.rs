//! Small exact linear algebra over `i128` and [`Rational`].

use alloc::vec::Vec;

use num_integer::Integer;
use num_traits::Zero;

use crate::Rational;

/// Determinant of a square integer matrix by fraction-free (Bareiss)
/// elimination. The matrix is consumed as scratch space.
pub fn det_i128(mut m: Vec<Vec<i128>>) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&r| m[r][k] != 0) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

/// Rank of an integer matrix given by rows.
pub fn rank_i128(rows: &[Vec<i128>]) -> usize {
    let mut m: Vec<Vec<i128>> = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..m.len()).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, p);
        for r in rank + 1..m.len() {
            if m[r][col] == 0 {
                continue;
            }
            let a = m[rank][col];
            let b = m[r][col];
            let g = a.gcd(&b);
            let (fa, fb) = (a / g, b / g);
            for c in col..ncols {
                m[r][c] = m[r][c] * fa - m[rank][c] * fb;
            }
            let row_gcd = m[r].iter().fold(0i128, |acc, x| acc.gcd(x));
            if row_gcd > 1 {
                m[r].iter_mut().for_each(|x| *x /= row_gcd);
            }
        }
        rank += 1;
    }
    rank
}

/// Dimension of the affine hull of a finite point set; `None` when empty.
pub fn affine_dimension(points: &[Vec<i128>]) -> Option<usize> {
    let (first, rest) = points.split_first()?;
    let diffs: Vec<Vec<i128>> = rest
        .iter()
        .map(|p| p.iter().zip(first).map(|(a, b)| a - b).collect())
        .collect();
    Some(rank_i128(&diffs))
}

/// Integer normal of the hyperplane spanned by `n - 1` vectors in `n`
/// dimensions (generalized cross product). All-zero iff the vectors are
/// linearly dependent.
pub fn cofactor_normal(rows: &[Vec<i128>]) -> Vec<i128> {
    let n = rows.len() + 1;
    (0..n)
        .map(|skip| {
            let minor: Vec<Vec<i128>> = rows
                .iter()
                .map(|r| {
                    r.iter()
                        .enumerate()
                        .filter(|&(c, _)| c != skip)
                        .map(|(_, &x)| x)
                        .collect()
                })
                .collect();
            let d = det_i128(minor);
            if skip % 2 == 0 {
                d
            } else {
                -d
            }
        })
        .collect()
}

/// Solves `m x = rhs` for a nonsingular square rational matrix.
pub fn solve(m: &[Vec<Rational>], rhs: &[Rational]) -> Option<Vec<Rational>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(*b);
            r
        })
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, p);
        let pivot = a[col][col];
        for x in a[col].iter_mut() {
            *x /= pivot;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col];
                for c in col..=n {
                    let v = a[col][c];
                    a[r][c] -= f * v;
                }
            }
        }
    }
    Some(a.into_iter().map(|row| row[n]).collect())
}

/// Divides an integer vector (and an extra trailing value) by the gcd of all
/// entries. Zero vectors are returned unchanged.
pub fn primitive(v: &mut [i128]) {
    let g = v.iter().fold(0i128, |acc, x| acc.gcd(x));
    if g > 1 {
        v.iter_mut().for_each(|x| *x /= g);
    }
}

/// Least common multiple of the denominators of a family of rationals.
pub fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Rational>) -> i128 {
    values
        .into_iter()
        .fold(1i128, |acc, q| acc.lcm(q.denom()))
}

/// Clears denominators of rational points by a single global factor.
pub fn integerize(points: &[Vec<Rational>]) -> Vec<Vec<i128>> {
    let d = common_denominator(points.iter().flatten());
    let scale = Rational::from_integer(d);
    points
        .iter()
        .map(|p| p.iter().map(|q| (q * scale).to_integer()).collect())
        .collect()
}
