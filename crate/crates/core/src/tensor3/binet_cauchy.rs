use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::{determinant2, permanent2, Tensor3};
use crate::error::{guard, Error, Result};
use crate::json::BigIntValue;

const MAX_SUBSETS: u128 = 100_000;

/// Three `r × n` integer matrices with `r ≤ n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RectMatrixTriple {
    r: usize,
    n: usize,
    mats: [Vec<Vec<BigInt>>; 3],
}

impl RectMatrixTriple {
    pub fn new(a1: Vec<Vec<BigInt>>, a2: Vec<Vec<BigInt>>, a3: Vec<Vec<BigInt>>) -> Result<Self> {
        let r = a1.len();
        let n = a1.first().map_or(0, Vec::len);
        for m in [&a1, &a2, &a3] {
            if m.len() != r || m.iter().any(|row| row.len() != n) {
                return Err(Error::Dimension("the three matrices must share one r × n shape".into()));
            }
        }
        if r > n {
            return Err(Error::Dimension(format!("r = {r} exceeds n = {n}")));
        }
        Ok(RectMatrixTriple { r, n, mats: [a1, a2, a3] })
    }

    pub fn from_i64(rows: [&[Vec<i64>]; 3]) -> Result<Self> {
        let conv = |m: &[Vec<i64>]| -> Vec<Vec<BigInt>> {
            m.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect()
        };
        Self::new(conv(rows[0]), conv(rows[1]), conv(rows[2]))
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.r, self.n)
    }

    pub fn matrices(&self) -> &[Vec<Vec<BigInt>>; 3] {
        &self.mats
    }

    fn columns(&self, s: usize, cols: &[usize]) -> Vec<Vec<BigInt>> {
        self.mats[s]
            .iter()
            .map(|row| cols.iter().map(|&c| row[c].clone()).collect())
            .collect()
    }
}

#[derive(Serialize, Deserialize)]
struct TripleJson {
    a1: Vec<Vec<BigIntValue>>,
    a2: Vec<Vec<BigIntValue>>,
    a3: Vec<Vec<BigIntValue>>,
}

impl Serialize for RectMatrixTriple {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let wrap = |m: &Vec<Vec<BigInt>>| -> Vec<Vec<BigIntValue>> {
            m.iter().map(|r| r.iter().cloned().map(BigIntValue).collect()).collect()
        };
        TripleJson {
            a1: wrap(&self.mats[0]),
            a2: wrap(&self.mats[1]),
            a3: wrap(&self.mats[2]),
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for RectMatrixTriple {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let raw = TripleJson::deserialize(de)?;
        let un = |m: Vec<Vec<BigIntValue>>| -> Vec<Vec<BigInt>> {
            m.into_iter().map(|r| r.into_iter().map(|v| v.0).collect()).collect()
        };
        RectMatrixTriple::new(un(raw.a1), un(raw.a2), un(raw.a3)).map_err(serde::de::Error::custom)
    }
}

/// `C[i1][i2][i3] = Σ_j A1[i1][j] A2[i2][j] A3[i3][j]`.
pub fn binet_cauchy_c(t: &RectMatrixTriple) -> Tensor3<BigInt> {
    let r = t.r;
    let [a1, a2, a3] = &t.mats;
    let mut c = Tensor3::cube(r);
    for (i1, r1) in a1.iter().enumerate() {
        for (i2, r2) in a2.iter().enumerate() {
            for (i3, r3) in a3.iter().enumerate() {
                let v: BigInt = r1.iter().zip(r2).zip(r3).map(|((x, y), z)| x * y * z).sum();
                c.set([i1, i2, i3], v).expect("indices within r");
            }
        }
    }
    c
}

fn binomial(n: usize, k: usize) -> u128 {
    let mut b: u128 = 1;
    for i in 0..k as u128 {
        b = b * (n as u128 - i) / (i + 1);
    }
    b
}

/// `Σ_I Per(A1_I) det(A2_I) det(A3_I)` over `r`-subsets `I` of the columns.
pub fn binet_cauchy_rhs(t: &RectMatrixTriple) -> Result<BigInt> {
    guard("column subsets", binomial(t.n, t.r), MAX_SUBSETS)?;
    let mut total = BigInt::zero();
    let mut cols: Vec<usize> = (0..t.r).collect();
    loop {
        let d2 = determinant2(&t.columns(1, &cols))?;
        if !d2.is_zero() {
            let d3 = determinant2(&t.columns(2, &cols))?;
            if !d3.is_zero() {
                total += permanent2(&t.columns(0, &cols))? * d2 * d3;
            }
        }
        // Next subset in lexicographic order.
        let Some(i) = (0..t.r).rev().find(|&i| cols[i] != i + t.n - t.r) else {
            break;
        };
        cols[i] += 1;
        for j in i + 1..t.r {
            cols[j] = cols[j - 1] + 1;
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exec::Exec;
    use crate::tensor3::determinant3;

    #[test]
    fn shapes_checked() {
        assert!(RectMatrixTriple::from_i64([&[vec![1, 2]], &[vec![1]], &[vec![1, 2]]]).is_err());
        assert!(RectMatrixTriple::from_i64([&[vec![1], vec![2]], &[vec![1], vec![2]], &[vec![1], vec![2]]]).is_err());
    }

    #[test]
    fn small_identities() {
        let t = RectMatrixTriple::from_i64([&[vec![2]], &[vec![3]], &[vec![5]]]).unwrap();
        assert_eq!(binet_cauchy_c(&t).get([0, 0, 0]), BigInt::from(30));
        assert_eq!(binet_cauchy_rhs(&t).unwrap(), BigInt::from(30));
        let ones = RectMatrixTriple::from_i64([&[vec![1, 1]], &[vec![1, 1]], &[vec![1, 1]]]).unwrap();
        assert_eq!(binet_cauchy_c(&ones).get([0, 0, 0]), BigInt::from(2));
        let m = [vec![1, -2, 0, 3], vec![2, 1, -1, 0]];
        let k = [vec![0, 1, 1, -1], vec![3, 0, 2, 1]];
        let l = [vec![1, 1, -3, 2], vec![0, 2, 1, 1]];
        let t = RectMatrixTriple::from_i64([&m, &k, &l]).unwrap();
        assert_eq!(
            determinant3(&binet_cauchy_c(&t), Exec::Sequential),
            binet_cauchy_rhs(&t).unwrap()
        );
    }

    #[test]
    fn subset_count() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(4, 0), 1);
    }
}
