//! Binary linear codes, weight enumerators of GF(p) spans, and the residue fold.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::gf;
use super::poly::Polynomial;
use crate::error::{guard, Error, Result};
use crate::exec::Exec;

pub const MAX_CODE_DIMENSION: usize = 24;
/// Upper bound on the number of vectors a span enumeration may visit.
pub const MAX_SPAN_SIZE: u128 = 1 << 24;

/// Number of leading basis vectors fixed per parallel task.
const SPLIT_BITS: usize = 6;

/// A binary linear code given by a full-rank generator matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "CodeJson", into = "CodeJson")]
pub struct BinaryCode {
    n: usize,
    rows: Vec<Vec<u8>>,
}

#[derive(Serialize, Deserialize)]
struct CodeJson {
    k: usize,
    n: usize,
    rows: Vec<Vec<u8>>,
}

impl TryFrom<CodeJson> for BinaryCode {
    type Error = Error;
    fn try_from(j: CodeJson) -> Result<Self> {
        if j.k != j.rows.len() {
            return Err(Error::Parse(format!("k = {} but {} rows given", j.k, j.rows.len())));
        }
        BinaryCode::new(j.n, j.rows)
    }
}

impl From<BinaryCode> for CodeJson {
    fn from(c: BinaryCode) -> Self {
        CodeJson {
            k: c.rows.len(),
            n: c.n,
            rows: c.rows,
        }
    }
}

impl BinaryCode {
    pub fn new(n: usize, rows: Vec<Vec<u8>>) -> Result<Self> {
        for row in &rows {
            if row.len() != n {
                return Err(Error::Dimension(format!("generator row of length {} for n = {n}", row.len())));
            }
            if row.iter().any(|&b| b > 1) {
                return Err(Error::Parse("generator entries must be 0 or 1".into()));
            }
        }
        let as_u64: Vec<Vec<u64>> = rows.iter().map(|r| r.iter().map(|&b| b as u64).collect()).collect();
        if gf::rank(&as_u64, n, 2)? != rows.len() {
            return Err(Error::DependentRows);
        }
        Ok(BinaryCode { n, rows })
    }

    pub fn length(&self) -> usize {
        self.n
    }

    pub fn dimension(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    /// Generator matrix of the dual code (a basis of the GF(2) nullspace).
    pub fn dual(&self) -> Result<BinaryCode> {
        let as_u64: Vec<Vec<u64>> =
            self.rows.iter().map(|r| r.iter().map(|&b| b as u64).collect()).collect();
        let basis = gf::nullspace(&as_u64, self.n, 2)?;
        BinaryCode::new(self.n, basis.into_iter().map(|v| v.into_iter().map(|b| b as u8).collect()).collect())
    }
}

/// Σ over all 2^k codewords of `x^weight`.
pub fn weight_enumerator(code: &BinaryCode, exec: Exec) -> Result<Polynomial> {
    guard("code dimension", code.dimension() as u128, MAX_CODE_DIMENSION as u128)?;
    let basis: Vec<Vec<u64>> = code.rows.iter().map(|r| r.iter().map(|&b| b as u64).collect()).collect();
    span_weight_enumerator(&basis, code.n, 2, exec)
}

/// Weight enumerator of the GF(p) span of `basis` (assumed independent), by
/// visiting all `p^d` combinations.
pub fn span_weight_enumerator(basis: &[Vec<u64>], n: usize, p: u64, exec: Exec) -> Result<Polynomial> {
    if !gf::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let d = basis.len();
    guard("span dimension", d as u128, MAX_CODE_DIMENSION as u128)?;
    let size = (p as u128).checked_pow(d as u32).unwrap_or(u128::MAX);
    guard("span size", size, MAX_SPAN_SIZE)?;
    let counts = if p == 2 {
        binary_weight_counts(basis, n, exec)
    } else {
        prime_weight_counts(basis, n, p, exec)
    };
    Ok(Polynomial::from_terms(
        counts.into_iter().enumerate().map(|(w, c)| (w as u64, BigInt::from(c))),
    ))
}

fn pack(v: &[u64]) -> Vec<u64> {
    let mut words = vec![0u64; v.len().div_ceil(64).max(1)];
    for (i, &b) in v.iter().enumerate() {
        if b & 1 == 1 {
            words[i / 64] |= 1 << (i % 64);
        }
    }
    words
}

fn binary_weight_counts(basis: &[Vec<u64>], n: usize, exec: Exec) -> Vec<u64> {
    let packed: Vec<Vec<u64>> = basis.iter().map(|v| pack(v)).collect();
    let words = n.div_ceil(64).max(1);
    let d = packed.len();
    let split = d.min(SPLIT_BITS);
    let (fixed, free) = packed.split_at(split);
    let tasks: Vec<u64> = (0..1u64 << split).collect();
    let parts = exec.map(tasks, |mask| {
        let mut acc = vec![0u64; words];
        for (b, row) in fixed.iter().enumerate() {
            if mask >> b & 1 == 1 {
                for (a, r) in acc.iter_mut().zip(row) {
                    *a ^= r;
                }
            }
        }
        let mut counts = vec![0u64; n + 1];
        let weight = |acc: &[u64]| acc.iter().map(|w| w.count_ones() as usize).sum::<usize>();
        counts[weight(&acc)] += 1;
        // Gray code over the free rows: step i flips row trailing_zeros(i).
        for i in 1u64..(1u64 << free.len()) {
            let row = &free[i.trailing_zeros() as usize];
            for (a, r) in acc.iter_mut().zip(row) {
                *a ^= r;
            }
            counts[weight(&acc)] += 1;
        }
        counts
    });
    let mut total = vec![0u64; n + 1];
    for part in parts {
        for (t, c) in total.iter_mut().zip(part) {
            *t += c;
        }
    }
    total
}

fn prime_weight_counts(basis: &[Vec<u64>], n: usize, p: u64, exec: Exec) -> Vec<u64> {
    let d = basis.len();
    let tasks: Vec<u64> = if d == 0 { vec![0] } else { (0..p).collect() };
    let parts = exec.map(tasks, |first| {
        let mut counts = vec![0u64; n + 1];
        let mut coeffs = vec![0u64; d];
        if d > 0 {
            coeffs[0] = first;
        }
        loop {
            let mut w = 0;
            for j in 0..n {
                let v = basis
                    .iter()
                    .zip(&coeffs)
                    .fold(0u64, |s, (b, &c)| (s + b[j] % p * c) % p);
                if v != 0 {
                    w += 1;
                }
            }
            counts[w] += 1;
            // Odometer over coeffs[1..].
            let mut pos = 1;
            while pos < d {
                coeffs[pos] += 1;
                if coeffs[pos] < p {
                    break;
                }
                coeffs[pos] = 0;
                pos += 1;
            }
            if pos >= d {
                break;
            }
        }
        counts
    });
    let mut total = vec![0u64; n + 1];
    for part in parts {
        for (t, c) in total.iter_mut().zip(part) {
            *t += c;
        }
    }
    total
}

/// Σ aᵢ x^{(i mod e)/2}. Fails on the first exponent whose residue is odd.
pub fn fold_enumerator(p: &Polynomial, e: u64) -> Result<Polynomial> {
    if e == 0 {
        return Err(Error::Parse("fold modulus must be positive".into()));
    }
    let mut out = Polynomial::default();
    for (i, a) in p.terms() {
        let residue = i % e;
        if residue % 2 == 1 {
            return Err(Error::OddResidue {
                exponent: i,
                residue,
                modulus: e,
            });
        }
        out.add_term(residue / 2, a.clone());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn code(n: usize, rows: &[&[u8]]) -> BinaryCode {
        BinaryCode::new(n, rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn poly(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    #[test]
    fn small_codes() {
        let rep = code(3, &[&[1, 1, 1]]);
        assert_eq!(weight_enumerator(&rep, Exec::Sequential).unwrap(), poly("1 + x^3"));
        let even = code(3, &[&[1, 1, 0], &[0, 1, 1]]);
        assert_eq!(weight_enumerator(&even, Exec::Parallel).unwrap(), poly("1 + 3x^2"));
        let zero = code(4, &[]);
        assert_eq!(weight_enumerator(&zero, Exec::Sequential).unwrap(), poly("1"));
    }

    #[test]
    fn dependent_rows_rejected() {
        let err = BinaryCode::new(3, vec![vec![1, 1, 0], vec![1, 1, 0]]).unwrap_err();
        assert_eq!(err, Error::DependentRows);
    }

    #[test]
    fn dimension_guard() {
        let rows: Vec<Vec<u8>> = (0..25)
            .map(|i| (0..25).map(|j| (i == j) as u8).collect())
            .collect();
        let c = BinaryCode::new(25, rows).unwrap();
        assert!(matches!(weight_enumerator(&c, Exec::Sequential), Err(Error::Guard { .. })));
    }

    #[test]
    fn fold_examples() {
        assert_eq!(fold_enumerator(&poly("1 + x^6"), 4).unwrap(), poly("1 + x"));
        assert_eq!(
            fold_enumerator(&poly("x^2 + x^5"), 4),
            Err(Error::OddResidue {
                exponent: 5,
                residue: 1,
                modulus: 4
            })
        );
        assert_eq!(fold_enumerator(&poly("1 + x^4"), 8).unwrap(), poly("1 + x^2"));
    }

    #[test]
    fn gf3_span_enumerator() {
        // Span of (1,1,0) and (0,1,2) over GF(3): 9 vectors.
        let basis = vec![vec![1, 1, 0], vec![0, 1, 2]];
        let p = span_weight_enumerator(&basis, 3, 3, Exec::Parallel).unwrap();
        let mut brute = vec![0i64; 4];
        for a in 0..3u64 {
            for b in 0..3u64 {
                let v = [a % 3, (a + b) % 3, (2 * b) % 3];
                brute[v.iter().filter(|&&x| x != 0).count()] += 1;
            }
        }
        let expected = Polynomial::from_terms(brute.into_iter().enumerate().map(|(w, c)| (w as u64, c)));
        assert_eq!(p, expected);
        assert_eq!(p.eval_one(), BigInt::from(9));
    }
}
