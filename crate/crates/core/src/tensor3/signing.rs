use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{determinant2, determinant3, permanent2, permanent3, Ring, Tensor3};
use crate::error::{guard, Error, Result};
use crate::exec::Exec;

/// Free edges (outside a spanning forest) the signing search may flip; the
/// search visits `2^free` signings.
pub const MAX_SIGNING_CYCLE_RANK: usize = 20;

/// Bipartite graph on `left × right` index sets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BipartiteGraph {
    pub left: usize,
    pub right: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl BipartiteGraph {
    pub fn new(left: usize, right: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let edges: BTreeSet<(usize, usize)> = edges.into_iter().collect();
        if let Some(&(a, b)) = edges.iter().find(|&&(a, b)| a >= left || b >= right) {
            return Err(Error::Dimension(format!("edge ({a}, {b}) outside {left} × {right}")));
        }
        Ok(BipartiteGraph { left, right, edges })
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&(a, b))
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    /// 0/1 biadjacency matrix, `left` rows by `right` columns.
    pub fn biadjacency(&self) -> Vec<Vec<BigInt>> {
        let mut m = vec![vec![BigInt::zero(); self.right]; self.left];
        for &(a, b) in &self.edges {
            m[a][b] = BigInt::one();
        }
        m
    }

    fn signed_biadjacency(&self, s: &EdgeSigning) -> Vec<Vec<BigInt>> {
        let mut m = vec![vec![BigInt::zero(); self.right]; self.left];
        for &(a, b) in &self.edges {
            m[a][b] = BigInt::from(s.get(a, b).unwrap_or(1));
        }
        m
    }
}

/// `±1` per bipartite edge.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EdgeSigning {
    signs: BTreeMap<(usize, usize), i8>,
}

impl EdgeSigning {
    pub fn all_plus(g: &BipartiteGraph) -> Self {
        EdgeSigning {
            signs: g.edges().map(|e| (e, 1)).collect(),
        }
    }

    pub fn get(&self, a: usize, b: usize) -> Option<i8> {
        self.signs.get(&(a, b)).copied()
    }

    /// Panics unless `s` is `1` or `-1`.
    pub fn set(&mut self, a: usize, b: usize, s: i8) {
        assert!(s == 1 || s == -1, "sign must be ±1");
        self.signs.insert((a, b), s);
    }

    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), i8)> + '_ {
        self.signs.iter().map(|(k, v)| (*k, *v))
    }

    pub fn negatives(&self) -> usize {
        self.signs.values().filter(|&&s| s < 0).count()
    }
}

impl Serialize for EdgeSigning {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let triples: Vec<(usize, usize, i8)> = self.iter().map(|((a, b), s)| (a, b, s)).collect();
        triples.serialize(ser)
    }
}

impl<'de> Deserialize<'de> for EdgeSigning {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let triples: Vec<(usize, usize, i8)> = Vec::deserialize(de)?;
        let mut s = EdgeSigning::default();
        for (a, b, v) in triples {
            if v != 1 && v != -1 {
                return Err(serde::de::Error::custom(format!("sign {v} is not ±1")));
            }
            s.set(a, b, v);
        }
        Ok(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProjectionGraphs {
    /// Supports of the first and second axes.
    pub g1: BipartiteGraph,
    /// Supports of the first and third axes.
    pub g2: BipartiteGraph,
}

pub fn projection_graphs<R: Ring>(a: &Tensor3<R>) -> ProjectionGraphs {
    let [n0, n1, n2] = a.dims();
    let e1: Vec<(usize, usize)> = a.entries().map(|([i, j, _], _)| (*i, *j)).collect();
    let e2: Vec<(usize, usize)> = a.entries().map(|([i, _, k], _)| (*i, *k)).collect();
    ProjectionGraphs {
        g1: BipartiteGraph::new(n0, n1, e1).expect("tensor indices are in range"),
        g2: BipartiteGraph::new(n0, n2, e2).expect("tensor indices are in range"),
    }
}

/// `A'[a][b][c] = s1(a,b) · s2(a,c) · A[a][b][c]`.
pub fn apply_signing<R: Ring>(a: &Tensor3<R>, s1: &EdgeSigning, s2: &EdgeSigning) -> Result<Tensor3<R>> {
    let mut out = Tensor3::new(a.dims());
    for (&[i, j, k], v) in a.entries() {
        let x = s1.get(i, j).ok_or(Error::MissingSign(i, j))?;
        let y = s2.get(i, k).ok_or(Error::MissingSign(i, k))?;
        out.set([i, j, k], if x * y < 0 { -v.clone() } else { v.clone() })?;
    }
    Ok(out)
}

fn spanning_forest(g: &BipartiteGraph) -> Vec<bool> {
    let mut parent: Vec<usize> = (0..g.left + g.right).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    g.edges()
        .map(|(a, b)| {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, g.left + b));
            if ra == rb {
                false
            } else {
                parent[ra] = rb;
                true
            }
        })
        .collect()
}

/// Flips every edge at one vertex (a row when `row`, else a column).
fn switch(g: &BipartiteGraph, s: &EdgeSigning, row: bool, v: usize) -> EdgeSigning {
    let mut out = s.clone();
    for (a, b) in g.edges() {
        if (row && a == v) || (!row && b == v) {
            out.set(a, b, -s.get(a, b).unwrap_or(1));
        }
    }
    out
}

/// A signing whose signed biadjacency determinant equals the permanent of the
/// 0/1 biadjacency matrix, or `None`.
///
/// Switching all edges at a vertex only flips the determinant's sign, so
/// edges of a spanning forest are fixed to `+1` and the search runs over the
/// remaining (cycle-space) edges, all-`+1` first. A signing reaching `-per` is
/// repaired by one vertex switch, the one leaving the fewest negative edges.
pub fn find_pfaffian_signing(g: &BipartiteGraph) -> Result<Option<EdgeSigning>> {
    let all_plus = EdgeSigning::all_plus(g);
    if g.left != g.right {
        // No perfect matchings, no square determinant: nothing to sign.
        return Ok(Some(all_plus));
    }
    let per = permanent2(&g.biadjacency())?;
    if per.is_zero() || determinant2(&g.signed_biadjacency(&all_plus))? == per {
        return Ok(Some(all_plus));
    }
    let forest = spanning_forest(g);
    let free: Vec<(usize, usize)> = g.edges().zip(&forest).filter(|(_, f)| !**f).map(|(e, _)| e).collect();
    guard("signing search cycle rank", free.len() as u128, MAX_SIGNING_CYCLE_RANK as u128)?;
    for mask in 0u64..(1u64 << free.len()) {
        let mut s = all_plus.clone();
        for (bit, &(a, b)) in free.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                s.set(a, b, -1);
            }
        }
        let det = determinant2(&g.signed_biadjacency(&s))?;
        if det == per {
            return Ok(Some(s));
        }
        if det == -per.clone() {
            let best = (0..g.left)
                .map(|v| switch(g, &s, true, v))
                .chain((0..g.right).map(|v| switch(g, &s, false, v)))
                .min_by_key(EdgeSigning::negatives)
                .expect("square graph with a perfect matching has vertices");
            return Ok(Some(best));
        }
    }
    Ok(None)
}

#[derive(Clone, Debug, PartialEq)]
pub struct K1Signing<R> {
    pub signed: Tensor3<R>,
    pub s1: EdgeSigning,
    pub s2: EdgeSigning,
    /// The common value `det(A') = Per(A)`.
    pub value: R,
}

/// Signs `A` from Pfaffian signings of both projection graphs and verifies
/// `det(A') = Per(A)`. `None` means no certificate was found, which says
/// nothing about whether `A` is Kasteleyn.
pub fn kasteleyn_sign_via_k1<R: Ring>(a: &Tensor3<R>, exec: Exec) -> Result<Option<K1Signing<R>>> {
    let a = a.padded();
    let pg = projection_graphs(&a);
    let (Some(s1), Some(s2)) = (find_pfaffian_signing(&pg.g1)?, find_pfaffian_signing(&pg.g2)?) else {
        return Ok(None);
    };
    let signed = apply_signing(&a, &s1, &s2)?;
    let per = permanent3(&a, exec);
    let det = determinant3(&signed, exec);
    if det != per {
        return Err(Error::Certification(format!(
            "signed determinant {det:?} differs from permanent {per:?}"
        )));
    }
    Ok(Some(K1Signing {
        signed,
        s1,
        s2,
        value: per,
    }))
}
