use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{IntMatrix, RatMatrix};
use crate::error::{Error, Result};

/// The unique rational `Q` with `Q · x = y`.
///
/// `x` is `n x m` of full row rank and `y` is `k x m`. Solved as
/// `x^T Q^T = y^T` by Gauss-Jordan elimination over the rationals.
pub fn solve_right(x: &IntMatrix, y: &IntMatrix) -> Result<RatMatrix> {
    if x.cols() != y.cols() {
        return Err(Error::Shape(format!(
            "solve_right: x is {}x{} but y is {}x{}",
            x.rows(),
            x.cols(),
            y.rows(),
            y.cols()
        )));
    }
    let (n, m, k) = (x.rows(), x.cols(), y.rows());
    // augmented [x^T | y^T], m rows
    let mut a: Vec<Vec<BigRational>> = (0..m)
        .map(|r| {
            (0..n)
                .map(|c| BigRational::from_integer(x.get(c, r).clone()))
                .chain((0..k).map(|c| BigRational::from_integer(y.get(c, r).clone())))
                .collect()
        })
        .collect();
    let mut rank = 0;
    for col in 0..n {
        let Some(p) = (rank..m).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let inv = a[rank][col].recip();
        if !inv.is_one() {
            for v in a[rank].iter_mut().skip(col) {
                *v *= &inv;
            }
        }
        let pivot_row = a[rank].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r == rank || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (v, pv) in row.iter_mut().zip(&pivot_row).skip(col) {
                if !pv.is_zero() {
                    *v -= &f * pv;
                }
            }
        }
        rank += 1;
    }
    if rank < n {
        return Err(Error::NoUniqueSolution { rank, needed: n });
    }
    if a[n..].iter().any(|row| row[n..].iter().any(|v| !v.is_zero())) {
        return Err(Error::Inconsistent);
    }
    // row i of the reduced system is row i of Q^T
    Ok(RatMatrix::from_fn(k, n, |i, j| a[j][n + i].clone()))
}
