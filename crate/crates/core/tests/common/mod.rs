//! Brute-force oracles shared by the integration tests. None of them call the
//! search engine or the sparse kernels under test.
#![allow(dead_code)]

use std::collections::BTreeSet;

use kas3::algebra::Polynomial;
use kas3::complex::{TriangularConfiguration, Weighting};
use kas3::tensor3::Tensor3;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

pub fn sign(p: &[usize]) -> i64 {
    let inversions = (0..p.len())
        .flat_map(|i| (i + 1..p.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| p[i] > p[j])
        .count();
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

pub fn naive_per2(m: &[Vec<BigInt>]) -> BigInt {
    permutations(m.len())
        .iter()
        .map(|p| (0..m.len()).map(|i| m[i][p[i]].clone()).product::<BigInt>())
        .sum()
}

pub fn naive_det2(m: &[Vec<BigInt>]) -> BigInt {
    permutations(m.len())
        .iter()
        .map(|p| (0..m.len()).map(|i| m[i][p[i]].clone()).product::<BigInt>() * sign(p))
        .sum()
}

/// `(Per, det)` of a cube by the double sum over `(σ1, σ2)`.
pub fn naive_per_det3(t: &Tensor3<BigInt>) -> (BigInt, BigInt) {
    let n = t.dims()[0];
    let perms = permutations(n);
    let mut per = BigInt::zero();
    let mut det = BigInt::zero();
    for s1 in &perms {
        for s2 in &perms {
            let prod: BigInt = (0..n).map(|i| t.get([i, s1[i], s2[i]])).product();
            if !prod.is_zero() {
                det += &prod * (sign(s1) * sign(s2));
                per += prod;
            }
        }
    }
    (per, det)
}

/// `Σ x^{w(M)}` over triangle subsets covering every edge exactly once.
pub fn brute_force_polynomial(cfg: &TriangularConfiguration, w: &Weighting) -> Polynomial {
    let tris: Vec<(&str, &[String; 3])> = cfg.triangles().collect();
    let all: BTreeSet<&str> = cfg.edge_ids().collect();
    assert!(tris.len() <= 16, "brute force limited to 16 triangles");
    let mut p = Polynomial::default();
    for mask in 0u32..1 << tris.len() {
        let mut covered = BTreeSet::new();
        let mut ok = true;
        let mut weight = 0;
        for (i, (id, es)) in tris.iter().enumerate() {
            if mask >> i & 1 == 1 {
                weight += w.get(id);
                for e in es.iter() {
                    ok &= covered.insert(e.as_str());
                }
            }
        }
        if ok && covered == all {
            p += Polynomial::x_pow(weight);
        }
    }
    p
}

/// The ten vertex triples of `{0..5}`.
pub fn triples_of_five() -> Vec<[String; 3]> {
    let mut out = Vec::new();
    for a in 0..5 {
        for b in a + 1..5 {
            for c in b + 1..5 {
                out.push([a, b, c].map(|v| format!("v{v}")));
            }
        }
    }
    out
}

pub fn config_from_picks(picks: &BTreeSet<usize>) -> TriangularConfiguration {
    let triples = triples_of_five();
    let faces: Vec<(String, [String; 3])> = picks.iter().map(|&i| (format!("t{i}"), triples[i].clone())).collect();
    TriangularConfiguration::from_faces(&faces)
}

/// A configuration of 1 to `max` faces on five vertices with weights in
/// `[0, 5]`.
pub fn small_weighted_config(max: usize) -> impl Strategy<Value = (TriangularConfiguration, Weighting)> {
    (prop::collection::btree_set(0usize..10, 1..=max), prop::collection::vec(0u64..=5, 10)).prop_map(
        |(picks, ws)| {
            let cfg = config_from_picks(&picks);
            let w = picks.iter().map(|&i| (format!("t{i}"), ws[i])).collect();
            (cfg, w)
        },
    )
}

pub fn int_tensor(n: usize, lo: i64, hi: i64) -> impl Strategy<Value = Tensor3<BigInt>> {
    prop::collection::vec(lo..=hi, n * n * n).prop_map(move |vals| {
        Tensor3::from_entries(
            [n, n, n],
            vals.into_iter().enumerate().map(|(k, v)| ([k / (n * n), k / n % n, k % n], BigInt::from(v))),
        )
        .unwrap()
    })
}

pub fn one() -> BigInt {
    BigInt::one()
}
