//! From a square matrix `M`, the triangular configuration `T(G)` on the
//! support graph `G` of `M`, whose vertex-adjacency 3-matrix `A` satisfies
//! `Per(M) = Per(A) = det(A)`.
//!
//! Vertex ids are chosen so that within each class they sort into aligned
//! blocks. Writing `e` for an edge index and `j` for a row/column index:
//!
//! | class | block a       | block b         | block c         |
//! |-------|---------------|-----------------|-----------------|
//! | W0    | `w(0,e)`      | `w(0,1,j)`      | `w(0,2,j)`      |
//! | W1    | `w(1,e)`      | `v(1,j)`        | `v'(1,j)`       |
//! | W2    | `w(2,e)`      | `v'(2,j)`       | `v(2,j)`        |
//!
//! With this order, every contributing pair `(σ1, σ2)` has `σ1` and `σ2`
//! products of the same number of disjoint transpositions, hence sign product
//! `+1`.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::complex::{enumerate_perfect_strong_matchings, Matching, TriangularConfiguration, VertexTripartition};
use crate::error::{guard, Error, Result};
use crate::exec::Exec;
use crate::json::BigIntValue;
use crate::search::CoverProblem;
use crate::tensor3::{permutation_pairs, vertex_adjacency, PermPair, Ring, Tensor3};

/// Largest tensor side the certification enumerations accept.
pub const MAX_CERTIFY_SIDE: usize = 128;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareMatrix {
    rows: Vec<Vec<BigInt>>,
}

impl SquareMatrix {
    pub fn new(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let n = rows.len();
        if let Some(r) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::Dimension(format!("row of length {} in a {n}-row matrix", r.len())));
        }
        Ok(SquareMatrix { rows })
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Result<Self> {
        Self::new(rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect())
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.rows[i][j]
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MatrixJson {
    n: usize,
    rows: Vec<Vec<BigIntValue>>,
}

impl Serialize for SquareMatrix {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        MatrixJson {
            n: self.n(),
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().cloned().map(BigIntValue).collect())
                .collect(),
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for SquareMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let raw = MatrixJson::deserialize(de)?;
        if raw.rows.len() != raw.n {
            return Err(serde::de::Error::custom(format!("n = {} but {} rows", raw.n, raw.rows.len())));
        }
        SquareMatrix::new(raw.rows.into_iter().map(|r| r.into_iter().map(|v| v.0).collect()).collect())
            .map_err(serde::de::Error::custom)
    }
}

pub fn w0e(e: usize) -> String {
    format!("0a:w(0,e{e:04})")
}
pub fn w01(j: usize) -> String {
    format!("0b:w(0,1,{j:04})")
}
pub fn w02(j: usize) -> String {
    format!("0c:w(0,2,{j:04})")
}
pub fn w1e(e: usize) -> String {
    format!("1a:w(1,e{e:04})")
}
pub fn v1(j: usize) -> String {
    format!("1b:v(1,{j:04})")
}
pub fn v1p(j: usize) -> String {
    format!("1c:v'(1,{j:04})")
}
pub fn w2e(e: usize) -> String {
    format!("2a:w(2,e{e:04})")
}
pub fn v2p(j: usize) -> String {
    format!("2b:v'(2,{j:04})")
}
pub fn v2(j: usize) -> String {
    format!("2c:v(2,{j:04})")
}

fn t_edge(e: usize) -> String {
    format!("t1:e{e:04}")
}
fn t_hub(e: usize) -> String {
    format!("t2:e{e:04}")
}
fn t_row(j: usize, e: usize) -> String {
    format!("t3:{j:04}:e{e:04}")
}
fn t_col(j: usize, e: usize) -> String {
    format!("t4:{j:04}:e{e:04}")
}

#[derive(Clone, Debug, PartialEq)]
pub struct TConstruction {
    matrix: SquareMatrix,
    edges: Vec<(usize, usize)>,
    config: TriangularConfiguration,
    classes: VertexTripartition,
    values: BTreeMap<String, BigInt>,
    tensor: Tensor3<BigInt>,
}

impl TConstruction {
    pub fn matrix(&self) -> &SquareMatrix {
        &self.matrix
    }

    /// Support edges `(row, col)` in row-major order; edge `e` is `edges[e]`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn config(&self) -> &TriangularConfiguration {
        &self.config
    }

    /// `W0 → 1`, `W1 → 2`, `W2 → 3`.
    pub fn classes(&self) -> &VertexTripartition {
        &self.classes
    }

    /// Tensor entry per triangle id.
    pub fn values(&self) -> &BTreeMap<String, BigInt> {
        &self.values
    }

    pub fn tensor(&self) -> &Tensor3<BigInt> {
        &self.tensor
    }

    /// Side `m = 2n + |E|`.
    pub fn side(&self) -> usize {
        2 * self.matrix.n() + self.edges.len()
    }

    /// The adjacency tensor of the same configuration with edge `e`'s
    /// triangle carrying `edge_value(e)` in place of its matrix entry.
    pub fn tensor_with<R: Ring>(&self, edge_value: impl Fn(usize) -> R) -> Result<Tensor3<R>> {
        let mut values: BTreeMap<String, R> = self.values.keys().map(|t| (t.clone(), R::one())).collect();
        for e in 0..self.edges.len() {
            values.insert(t_edge(e), edge_value(e));
        }
        vertex_adjacency(&self.config, &self.classes, &values)
    }

    /// `P(T) ∪ S1 ∪ S2 ∪ S3` for a perfect matching `P` of `G`, given as
    /// edge indices.
    pub fn extend_matching(&self, p: &[usize]) -> Matching {
        let in_p: BTreeSet<usize> = p.iter().copied().collect();
        let mut ids = Vec::new();
        for (e, &(a, b)) in self.edges.iter().enumerate() {
            if in_p.contains(&e) {
                ids.push(t_edge(e));
                ids.push(t_row(a, e));
                ids.push(t_col(b, e));
            } else {
                ids.push(t_hub(e));
            }
        }
        ids.into_iter().collect()
    }
}

pub fn build_t(m: &SquareMatrix) -> Result<TConstruction> {
    let n = m.n();
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| !m.get(i, j).is_zero())
        .collect();
    let mut config = TriangularConfiguration::new();
    let mut values = BTreeMap::new();
    let mut classes = VertexTripartition::new();
    let mut face = |id: String, vs: [String; 3], v: BigInt| {
        config.add_face(&id, [&vs[0], &vs[1], &vs[2]]);
        values.insert(id, v);
    };
    for (e, &(a, b)) in edges.iter().enumerate() {
        face(t_edge(e), [v1(a), v2(b), w0e(e)], m.get(a, b).clone());
        face(t_hub(e), [w0e(e), w1e(e), w2e(e)], BigInt::one());
        face(t_row(a, e), [w01(a), v2p(a), w1e(e)], BigInt::one());
        face(t_col(b, e), [w02(b), v1p(b), w2e(e)], BigInt::one());
    }
    for j in 0..n {
        for (v, c) in [
            (w01(j), 1),
            (w02(j), 1),
            (v1(j), 2),
            (v1p(j), 2),
            (v2p(j), 3),
            (v2(j), 3),
        ] {
            config.add_vertex(v.clone());
            classes.set(v, c);
        }
    }
    for e in 0..edges.len() {
        classes.set(w0e(e), 1);
        classes.set(w1e(e), 2);
        classes.set(w2e(e), 3);
    }
    let tensor = vertex_adjacency(&config, &classes, &values)?;
    Ok(TConstruction {
        matrix: m.clone(),
        edges,
        config,
        classes,
        values,
        tensor,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SigningReport {
    pub passed: bool,
    /// Number of `(σ1, σ2)` pairs with a nonzero product.
    pub contributing: usize,
    /// First pair, in sorted order, with sign product `-1`.
    pub witness: Option<PermPair>,
}

/// Checks that every contributing pair of `a` has sign product `+1`.
pub fn trivial_signing_report(a: &Tensor3<BigInt>, exec: Exec) -> Result<SigningReport> {
    let side = *a.dims().iter().max().expect("three dims");
    guard("certification tensor side", side as u128, MAX_CERTIFY_SIDE as u128)?;
    let pairs = permutation_pairs(a, exec);
    let witness = pairs.iter().find(|p| p.sign() < 0).cloned();
    Ok(SigningReport {
        passed: witness.is_none(),
        contributing: pairs.len(),
        witness,
    })
}

pub fn certify_trivial_signing(tc: &TConstruction, exec: Exec) -> Result<SigningReport> {
    trivial_signing_report(&tc.tensor, exec)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BijectionReport {
    pub passed: bool,
    pub graph_matchings: usize,
    pub strong_matchings: usize,
    pub detail: String,
}

/// Perfect matchings of `G` as sorted lists of edge indices.
pub fn support_perfect_matchings(tc: &TConstruction, exec: Exec) -> Vec<Vec<usize>> {
    let n = tc.matrix.n();
    let options = tc.edges.iter().map(|&(a, b)| vec![a, n + b]).collect();
    CoverProblem::new(2 * n, options, vec![true; 2 * n]).solutions(exec)
}

pub fn strong_matching_bijection_check(tc: &TConstruction, exec: Exec) -> Result<BijectionReport> {
    guard("certification tensor side", tc.side() as u128, MAX_CERTIFY_SIDE as u128)?;
    let ps = support_perfect_matchings(tc, exec);
    let strong = enumerate_perfect_strong_matchings(&tc.config, exec)?;
    let mut images: Vec<Matching> = ps.iter().map(|p| tc.extend_matching(p)).collect();
    let report = |passed: bool, detail: String| BijectionReport {
        passed,
        graph_matchings: ps.len(),
        strong_matchings: strong.len(),
        detail,
    };
    for (p, q) in ps.iter().zip(&images) {
        let want: BigInt = p.iter().map(|&e| tc.matrix.get(tc.edges[e].0, tc.edges[e].1).clone()).product();
        let got: BigInt = q.triangles().map(|t| tc.values[t].clone()).product();
        if want != got {
            return Ok(report(false, format!("matching {p:?}: entry product {got} differs from {want}")));
        }
    }
    images.sort();
    let distinct = images.windows(2).all(|w| w[0] != w[1]);
    if !distinct {
        return Ok(report(false, "two matchings of G extend to the same strong matching".into()));
    }
    if images != strong {
        return Ok(report(
            false,
            format!("{} images versus {} strong matchings", images.len(), strong.len()),
        ));
    }
    Ok(report(true, format!("{} ↔ {}", ps.len(), strong.len())))
}
