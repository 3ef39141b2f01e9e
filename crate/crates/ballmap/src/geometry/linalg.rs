//! Exact dense linear algebra over arbitrary-precision rationals.
//!
//! Small routines backing vertex enumeration, facet construction,
//! affine-independence checks and barycentric coordinates. Everything works
//! on row-major `Vec<Vec<Rat>>` matrices and is written for the tiny systems
//! that arise from low-dimensional polytopes, where exactness matters far
//! more than asymptotic speed.

use crate::polycore::{rat_int, Rat};
use num_traits::Zero;

/// Solve the square system `a · x = b` exactly.
///
/// Returns `None` when the matrix is singular.
pub fn solve_square(a: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let n = a.len();
    debug_assert!(a.iter().all(|row| row.len() == n));
    debug_assert_eq!(b.len(), n);
    let mut m: Vec<Vec<Rat>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&i| !m[i][col].is_zero())?;
        m.swap(col, piv);
        let p = m[col][col].clone();
        for j in col..=n {
            m[col][j] = &m[col][j] / &p;
        }
        for i in 0..n {
            if i != col && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                for j in col..=n {
                    let d = &f * &m[col][j];
                    m[i][j] = &m[i][j] - &d;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[n].clone()).collect())
}

/// Rank of an arbitrary rational matrix (empty matrix has rank 0).
pub fn rank(a: &[Vec<Rat>]) -> usize {
    if a.is_empty() || a[0].is_empty() {
        return 0;
    }
    let mut m: Vec<Vec<Rat>> = a.to_vec();
    let rows = m.len();
    let cols = m[0].len();
    let mut r = 0usize;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(piv) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, piv);
        let p = m[r][c].clone();
        for j in c..cols {
            m[r][j] = &m[r][j] / &p;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..cols {
                    let d = &f * &m[r][j];
                    m[i][j] = &m[i][j] - &d;
                }
            }
        }
        r += 1;
    }
    r
}

/// Basis of the right null space of `a` (a matrix with `ncols` columns).
///
/// The basis vectors are produced from the reduced row echelon form, one per
/// free column, in increasing free-column order (deterministic).
pub fn nullspace(a: &[Vec<Rat>], ncols: usize) -> Vec<Vec<Rat>> {
    let mut m: Vec<Vec<Rat>> = a.to_vec();
    let rows = m.len();
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0usize;
    for c in 0..ncols {
        if r == rows {
            break;
        }
        let Some(piv) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, piv);
        let p = m[r][c].clone();
        for j in c..ncols {
            m[r][j] = &m[r][j] / &p;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..ncols {
                    let d = &f * &m[r][j];
                    m[i][j] = &m[i][j] - &d;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let mut basis = Vec::new();
    for fc in 0..ncols {
        if pivots.contains(&fc) {
            continue;
        }
        let mut v = vec![rat_int(0); ncols];
        v[fc] = rat_int(1);
        for (ri, &pc) in pivots.iter().enumerate() {
            v[pc] = -m[ri][fc].clone();
        }
        basis.push(v);
    }
    basis
}

/// Affine rank of a point set: the dimension of its affine hull.
pub fn affine_rank(points: &[Vec<Rat>]) -> usize {
    if points.len() <= 1 {
        return 0;
    }
    let p0 = &points[0];
    let diffs: Vec<Vec<Rat>> = points[1..]
        .iter()
        .map(|p| p.iter().zip(p0).map(|(a, b)| a - b).collect())
        .collect();
    rank(&diffs)
}

/// Dot product of two equal-length rational vectors.
pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = rat_int(0);
    for (x, y) in a.iter().zip(b) {
        acc += x * y;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::rat;

    #[test]
    fn solve_square_exact() {
        // 2x + y = 5, x - y = 1  =>  x = 2, y = 1
        let a = vec![vec![rat_int(2), rat_int(1)], vec![rat_int(1), rat_int(-1)]];
        let b = vec![rat_int(5), rat_int(1)];
        let x = solve_square(&a, &b).unwrap();
        assert_eq!(x, vec![rat_int(2), rat_int(1)]);
    }

    #[test]
    fn solve_square_singular() {
        let a = vec![vec![rat_int(1), rat_int(2)], vec![rat_int(2), rat_int(4)]];
        let b = vec![rat_int(1), rat_int(2)];
        assert!(solve_square(&a, &b).is_none());
    }

    #[test]
    fn rank_and_nullspace() {
        let a = vec![
            vec![rat_int(1), rat_int(2), rat_int(3)],
            vec![rat_int(2), rat_int(4), rat_int(6)],
        ];
        assert_eq!(rank(&a), 1);
        let ns = nullspace(&a, 3);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(dot(&a[0], v).is_zero());
        }
    }

    #[test]
    fn affine_rank_of_triangle() {
        let pts = vec![
            vec![rat_int(0), rat_int(0)],
            vec![rat_int(1), rat_int(0)],
            vec![rat_int(0), rat_int(1)],
        ];
        assert_eq!(affine_rank(&pts), 2);
        let collinear = vec![
            vec![rat_int(0), rat_int(0)],
            vec![rat_int(1), rat_int(1)],
            vec![rat(1, 2), rat(1, 2)],
        ];
        assert_eq!(affine_rank(&collinear), 1);
    }
}
