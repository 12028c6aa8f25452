use super::{Ring, Tensor3};
use crate::error::{guard, Result};
use crate::exec::Exec;
use crate::search::CoverProblem;

/// Largest side accepted by the double-loop oracles.
pub const MAX_DENSE_SIDE: usize = 4;

/// One contributing term: `σ1`, `σ2` with `a[i][σ1(i)][σ2(i)] ≠ 0` for all `i`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, serde::Serialize, serde::Deserialize)]
pub struct PermPair {
    pub sigma1: Vec<usize>,
    pub sigma2: Vec<usize>,
}

impl PermPair {
    /// `sign(σ1) · sign(σ2)`.
    pub fn sign(&self) -> i8 {
        if (inversions(&self.sigma1) + inversions(&self.sigma2)).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

fn inversions(p: &[usize]) -> usize {
    let mut n = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                n += 1;
            }
        }
    }
    n
}

/// Items are the indices of all three axes; each nonzero entry is an option
/// covering one index per axis.
fn cover_problem<R: Ring>(a: &Tensor3<R>) -> (CoverProblem, Vec<([usize; 3], R)>) {
    let n = a.dims()[0];
    let entries: Vec<([usize; 3], R)> = a.entries().map(|(i, v)| (*i, v.clone())).collect();
    let options = entries.iter().map(|([i, j, k], _)| vec![*i, n + j, 2 * n + k]).collect();
    (CoverProblem::new(3 * n, options, vec![true; 3 * n]), entries)
}

fn pair_of(entries: &[([usize; 3], impl Sized)], chosen: &[usize], n: usize) -> PermPair {
    let mut sigma1 = vec![0; n];
    let mut sigma2 = vec![0; n];
    for &o in chosen {
        let [i, j, k] = entries[o].0;
        sigma1[i] = j;
        sigma2[i] = k;
    }
    PermPair { sigma1, sigma2 }
}

fn sparse<R: Ring>(a: &Tensor3<R>, signed: bool, exec: Exec) -> R {
    let a = a.padded();
    let n = a.dims()[0];
    let (problem, entries) = cover_problem(&a);
    problem.fold(
        exec,
        R::zero,
        |acc, chosen| {
            let prod = chosen.iter().fold(R::one(), |p, &o| p * entries[o].1.clone());
            let negative = signed && pair_of(&entries, chosen, n).sign() < 0;
            let cur = std::mem::replace(acc, R::zero());
            *acc = if negative { cur - prod } else { cur + prod };
        },
        |x, y| x + y,
    )
}

/// `Σ_{σ1,σ2} Π_i a[i][σ1(i)][σ2(i)]`, by exact-cover backtracking over the
/// nonzero entries. Non-cubic tensors are zero-padded first.
pub fn permanent3<R: Ring>(a: &Tensor3<R>, exec: Exec) -> R {
    sparse(a, false, exec)
}

/// As [`permanent3`] with each term weighted by `sign(σ1) sign(σ2)`.
pub fn determinant3<R: Ring>(a: &Tensor3<R>, exec: Exec) -> R {
    sparse(a, true, exec)
}

/// Every contributing permutation pair, sorted.
pub fn permutation_pairs<R: Ring>(a: &Tensor3<R>, exec: Exec) -> Vec<PermPair> {
    let a = a.padded();
    let n = a.dims()[0];
    let (problem, entries) = cover_problem(&a);
    let mut out: Vec<PermPair> = problem
        .solutions(exec)
        .iter()
        .map(|s| pair_of(&entries, s, n))
        .collect();
    out.sort();
    out
}

/// All permutations of `0..n` with their signs, in lexicographic order.
fn permutations(n: usize) -> Vec<(Vec<usize>, bool)> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                rec(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out.into_iter()
        .map(|p| {
            let odd = inversions(&p) % 2 == 1;
            (p, odd)
        })
        .collect()
}

fn dense<R: Ring>(a: &Tensor3<R>, signed: bool) -> Result<R> {
    let a = a.padded();
    let n = a.dims()[0];
    guard("dense 3-matrix side", n as u128, MAX_DENSE_SIDE as u128)?;
    let perms = permutations(n);
    let mut total = R::zero();
    for (s1, odd1) in &perms {
        for (s2, odd2) in &perms {
            let term = (0..n).fold(R::one(), |p, i| p * a.get([i, s1[i], s2[i]]));
            total = if signed && (odd1 ^ odd2) { total - term } else { total + term };
        }
    }
    Ok(total)
}

/// Double loop over `S_n × S_n`; `n ≤ MAX_DENSE_SIDE`.
pub fn permanent3_dense<R: Ring>(a: &Tensor3<R>) -> Result<R> {
    dense(a, false)
}

pub fn determinant3_dense<R: Ring>(a: &Tensor3<R>) -> Result<R> {
    dense(a, true)
}
