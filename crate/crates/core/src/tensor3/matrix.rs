use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::Ring;
use crate::error::{guard, Error, Result};

pub const MAX_RYSER_SIDE: usize = 20;

fn square_side<R>(m: &[Vec<R>]) -> Result<usize> {
    let n = m.len();
    if let Some(row) = m.iter().find(|r| r.len() != n) {
        return Err(Error::Dimension(format!("row of length {} in a {n}-row matrix", row.len())));
    }
    Ok(n)
}

/// Ryser's formula `(-1)^n Σ_{S ⊆ cols} (-1)^{|S|} Π_i Σ_{j ∈ S} m[i][j]`,
/// visiting subsets in Gray-code order so each step updates one column.
pub fn permanent2<R: Ring>(m: &[Vec<R>]) -> Result<R> {
    let n = square_side(m)?;
    guard("Ryser matrix side", n as u128, MAX_RYSER_SIDE as u128)?;
    if n == 0 {
        return Ok(R::one());
    }
    let mut row_sums = vec![R::zero(); n];
    let mut in_set = vec![false; n];
    let mut total = R::zero();
    for g in 1u64..(1 << n) {
        let col = g.trailing_zeros() as usize;
        let adding = !in_set[col];
        in_set[col] = adding;
        for (s, row) in row_sums.iter_mut().zip(m) {
            let cur = std::mem::replace(s, R::zero());
            *s = if adding { cur + row[col].clone() } else { cur - row[col].clone() };
        }
        let prod = row_sums.iter().fold(R::one(), |p, s| p * s.clone());
        let size = in_set.iter().filter(|&&b| b).count();
        total = if (n - size) % 2 == 0 { total + prod } else { total - prod };
    }
    Ok(total)
}

/// Fraction-free (Bareiss) elimination.
pub fn determinant2(m: &[Vec<BigInt>]) -> Result<BigInt> {
    let n = square_side(m)?;
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return Ok(BigInt::zero());
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    Ok(if n == 0 { sign } else { sign * &a[n - 1][n - 1] })
}
