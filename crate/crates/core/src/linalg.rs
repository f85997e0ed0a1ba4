//! Small dense exact linear algebra over any field implementing [`num_traits::Num`].
//!
//! Used for the Cartan inverse, the commutant computations of the Clifford
//! module and span membership tests. Matrices here are at most a few hundred
//! entries, so plain row reduction is enough.

use std::ops::Neg;

use num_traits::Num;

/// Row-reduces `rows` in place to reduced echelon form. Returns the pivot columns.
pub fn row_reduce<T>(rows: &mut [Vec<T>]) -> Vec<usize>
where
    T: Num + Clone + Neg<Output = T>,
{
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = T::one() / rows[r][c].clone();
        for x in rows[r].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for j in 0..ncols {
                    let d = f.clone() * rows[r][j].clone();
                    rows[i][j] = rows[i][j].clone() - d;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<T>(rows: &[Vec<T>]) -> usize
where
    T: Num + Clone + Neg<Output = T>,
{
    let mut m = rows.to_vec();
    row_reduce(&mut m).len()
}

/// Basis of the right null space `{x : A x = 0}`.
pub fn nullspace<T>(rows: &[Vec<T>], ncols: usize) -> Vec<Vec<T>>
where
    T: Num + Clone + Neg<Output = T>,
{
    let mut m = rows.to_vec();
    let pivots = row_reduce(&mut m);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![T::zero(); ncols];
            v[f] = T::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -m[r][f].clone();
            }
            v
        })
        .collect()
}

/// Solves `A x = b` for square or overdetermined consistent systems.
/// Returns `None` when the system is inconsistent; free variables are set to zero.
pub fn solve<T>(a: &[Vec<T>], b: &[T]) -> Option<Vec<T>>
where
    T: Num + Clone + Neg<Output = T>,
{
    let ncols = a.first().map_or(0, Vec::len);
    let mut aug: Vec<Vec<T>> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let pivots = row_reduce(&mut aug);
    if pivots.contains(&ncols) {
        return None;
    }
    let mut x = vec![T::zero(); ncols];
    for (r, &p) in pivots.iter().enumerate() {
        x[p] = aug[r][ncols].clone();
    }
    Some(x)
}

/// Inverse of a square matrix, `None` if singular.
pub fn inverse<T>(a: &[Vec<T>]) -> Option<Vec<Vec<T>>>
where
    T: Num + Clone + Neg<Output = T>,
{
    let n = a.len();
    let mut aug: Vec<Vec<T>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { T::one() } else { T::zero() }));
            r
        })
        .collect();
    let pivots = row_reduce(&mut aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}
