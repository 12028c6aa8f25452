//! Linear algebra over prime fields GF(p).

use crate::error::{Error, Result};

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    (a as u128 * b as u128 % p as u128) as u64
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // Fermat; p is prime and a != 0.
    let mut result = 1u128;
    let mut base = a as u128 % p as u128;
    let mut exp = p - 2;
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * base % p as u128;
        }
        base = base * base % p as u128;
        exp >>= 1;
    }
    result as u64
}

/// Reduced row echelon form in place; returns pivot columns in order.
/// Pivots are taken left to right, the pivot row is the first candidate row.
pub fn rref(rows: &mut [Vec<u64>], ncols: usize, p: u64) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(pr) = (r..rows.len()).find(|&i| !rows[i][c].is_multiple_of(p)) else {
            continue;
        };
        rows.swap(r, pr);
        let inv = inv_mod(rows[r][c], p);
        for v in rows[r].iter_mut() {
            *v = mul_mod(*v, inv, p);
        }
        let pivot = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row[c] != 0 {
                let f = row[c];
                for (x, &y) in row.iter_mut().zip(&pivot).take(ncols) {
                    let sub = mul_mod(f, y, p);
                    *x = ((*x as u128 + p as u128 - sub as u128) % p as u128) as u64;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(matrix: &[Vec<u64>], ncols: usize, p: u64) -> Result<usize> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let mut rows: Vec<Vec<u64>> = matrix.iter().map(|r| r.iter().map(|v| v % p).collect()).collect();
    Ok(rref(&mut rows, ncols, p).len())
}

/// Basis of `{x : A x = 0}` over GF(p), one vector per free column in
/// ascending order; each basis vector has a 1 at its free column and 0 at the
/// other free columns.
pub fn nullspace(matrix: &[Vec<u64>], ncols: usize, p: u64) -> Result<Vec<Vec<u64>>> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if let Some(row) = matrix.iter().find(|r| r.len() != ncols) {
        return Err(Error::Dimension(format!(
            "row of length {} in a matrix with {ncols} columns",
            row.len()
        )));
    }
    let mut rows: Vec<Vec<u64>> = matrix.iter().map(|r| r.iter().map(|v| v % p).collect()).collect();
    let pivots = rref(&mut rows, ncols, p);
    let mut is_pivot = vec![false; ncols];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![0u64; ncols];
        v[free] = 1;
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = (p - rows[r][free]) % p;
        }
        basis.push(v);
    }
    Ok(basis)
}
