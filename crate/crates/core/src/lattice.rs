//! Cubic `a × b × c` boxes, their dimer generating functions, and a 3D
//! realization of `T(Q)`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use num_bigint::BigInt;
use serde::Serialize;

use crate::algebra::Polynomial;
use crate::complex::TriangularConfiguration;
use crate::error::{guard, Error, Result};
use crate::exec::Exec;
use crate::kasteleyn_construct::{self as kc, build_t, SquareMatrix, TConstruction};
use crate::search::CoverProblem;
use crate::tensor3::{permanent3, BipartiteGraph};

/// Largest vertex count accepted by the dimer pipelines.
pub const MAX_DIMER_VERTICES: usize = 36;

/// Coordinates are integers over this denominator.
pub const COORD_DENOM: i64 = 64;

pub type Point = [i64; 3];

/// Box of grid points with open boundary. Even-parity points are the left
/// side of `graph`, odd-parity points the right, each in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubicLattice {
    dims: [usize; 3],
    even: Vec<Point>,
    odd: Vec<Point>,
    graph: BipartiteGraph,
}

impl CubicLattice {
    pub fn dims(&self) -> [usize; 3] {
        self.dims
    }

    pub fn n_vertices(&self) -> usize {
        self.even.len() + self.odd.len()
    }

    pub fn graph(&self) -> &BipartiteGraph {
        &self.graph
    }

    pub fn even(&self) -> &[Point] {
        &self.even
    }

    pub fn odd(&self) -> &[Point] {
        &self.odd
    }
}

/// Panics if a dimension is zero.
pub fn cubic_lattice(a: usize, b: usize, c: usize) -> CubicLattice {
    assert!(a >= 1 && b >= 1 && c >= 1, "lattice dimensions must be positive");
    let mut even = Vec::new();
    let mut odd = Vec::new();
    for x in 0..a as i64 {
        for y in 0..b as i64 {
            for z in 0..c as i64 {
                if (x + y + z) % 2 == 0 {
                    even.push([x, y, z]);
                } else {
                    odd.push([x, y, z]);
                }
            }
        }
    }
    let odd_pos: BTreeMap<Point, usize> = odd.iter().enumerate().map(|(i, p)| (*p, i)).collect();
    let mut edges = Vec::new();
    for (i, p) in even.iter().enumerate() {
        for axis in 0..3 {
            for step in [-1, 1] {
                let mut q = *p;
                q[axis] += step;
                if let Some(&j) = odd_pos.get(&q) {
                    edges.push((i, j));
                }
            }
        }
    }
    let graph = BipartiteGraph::new(even.len(), odd.len(), edges).expect("indices in range");
    CubicLattice {
        dims: [a, b, c],
        even,
        odd,
        graph,
    }
}

/// Exponent per edge `(even index, odd index)`; missing edges weigh 0.
pub type EdgeWeights = BTreeMap<(usize, usize), u64>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimerPolynomial {
    pub dims: [usize; 3],
    /// Odd vertex count: no perfect matching exists.
    pub odd: bool,
    pub polynomial: Polynomial,
}

impl DimerPolynomial {
    pub fn count(&self) -> BigInt {
        self.polynomial.eval_one()
    }
}

/// `Σ_P x^{w(P)}` over perfect matchings, by exact cover on `Q`.
pub fn dimer_polynomial_direct(q: &CubicLattice, w: &EdgeWeights, exec: Exec) -> Result<Polynomial> {
    guard("lattice vertices", q.n_vertices() as u128, MAX_DIMER_VERTICES as u128)?;
    if q.n_vertices() % 2 == 1 {
        return Ok(Polynomial::default());
    }
    let edges: Vec<(usize, usize)> = q.graph.edges().collect();
    let nl = q.even.len();
    let options = edges.iter().map(|&(a, b)| vec![a, nl + b]).collect();
    let n_items = nl + q.odd.len();
    let weight = |s: &Vec<usize>| s.iter().map(|&o| w.get(&edges[o]).copied().unwrap_or(0)).sum::<u64>();
    Ok(CoverProblem::new(n_items, options, vec![true; n_items])
        .solutions(exec)
        .iter()
        .map(|s| Polynomial::x_pow(weight(s)))
        .sum())
}

/// The same generating function as `permanent3` of `T` built on the
/// biadjacency matrix of `Q`.
pub fn dimer_polynomial_tensor(q: &CubicLattice, w: &EdgeWeights, exec: Exec) -> Result<Polynomial> {
    guard("lattice vertices", q.n_vertices() as u128, MAX_DIMER_VERTICES as u128)?;
    if q.even.len() != q.odd.len() {
        return Ok(Polynomial::default());
    }
    let tc = lattice_t(q)?;
    let tensor = tc.tensor_with(|e| Polynomial::x_pow(w.get(&tc.edges()[e]).copied().unwrap_or(0)))?;
    Ok(permanent3(&tensor, exec))
}

/// Both pipelines; errors with `Certification` if they disagree.
pub fn dimer_polynomial(q: &CubicLattice, w: Option<&EdgeWeights>, exec: Exec) -> Result<DimerPolynomial> {
    let empty = EdgeWeights::new();
    let w = w.unwrap_or(&empty);
    let direct = dimer_polynomial_direct(q, w, exec)?;
    let tensor = dimer_polynomial_tensor(q, w, exec)?;
    if direct != tensor {
        return Err(Error::Certification(format!(
            "dimer pipelines disagree: direct {direct}, tensor {tensor}"
        )));
    }
    Ok(DimerPolynomial {
        dims: q.dims,
        odd: q.n_vertices() % 2 == 1,
        polynomial: direct,
    })
}

/// `T(Q)` for a balanced lattice.
pub fn lattice_t(q: &CubicLattice) -> Result<TConstruction> {
    if q.even.len() != q.odd.len() {
        return Err(Error::Dimension(format!(
            "{} even versus {} odd vertices",
            q.even.len(),
            q.odd.len()
        )));
    }
    build_t(&SquareMatrix::new(q.graph.biadjacency())?)
}

/// A configuration with exact dyadic coordinates. `anchors` records the
/// lattice vertex or edge midpoint governing each vertex.
#[derive(Clone, Debug, PartialEq)]
pub struct EmbeddedComplex {
    pub config: TriangularConfiguration,
    pub coords: BTreeMap<String, Point>,
    pub anchors: BTreeMap<String, Point>,
}

fn add(p: Point, d: Point) -> Point {
    [p[0] + d[0], p[1] + d[1], p[2] + d[2]]
}

fn sub(p: Point, q: Point) -> Point {
    [p[0] - q[0], p[1] - q[1], p[2] - q[2]]
}

fn scaled(p: Point) -> Point {
    p.map(|c| c * COORD_DENOM)
}

// Offsets in units of 1/64, all of length below 16 (a quarter).
const OFF_W0: Point = [2, 3, 5];
const OFF_W1: Point = [-3, 4, -2];
const OFF_W2: Point = [4, -2, 3];
const OFF_HUB: Point = [3, 5, -4];
const OFF_PRIME: Point = [-5, 2, 3];

/// Lattice vertices stay at their grid points; the edge gadget
/// `w(0,e), w(1,e), w(2,e)` sits near the midpoint of `e`, and the pair
/// `w(0,·,j), v'(·,j)` near its lattice vertex.
pub fn embed_t(q: &CubicLattice) -> Result<EmbeddedComplex> {
    let tc = lattice_t(q)?;
    let mut coords = BTreeMap::new();
    let mut anchors = BTreeMap::new();
    let mut place = |v: String, anchor: Point, off: Point| {
        coords.insert(v.clone(), add(anchor, off));
        anchors.insert(v, anchor);
    };
    for (j, p) in q.even.iter().enumerate() {
        let at = scaled(*p);
        place(kc::v1(j), at, [0; 3]);
        place(kc::w01(j), at, OFF_HUB);
        place(kc::v2p(j), at, OFF_PRIME);
    }
    for (j, p) in q.odd.iter().enumerate() {
        let at = scaled(*p);
        place(kc::v2(j), at, [0; 3]);
        place(kc::w02(j), at, OFF_HUB);
        place(kc::v1p(j), at, OFF_PRIME);
    }
    for (e, &(a, b)) in tc.edges().iter().enumerate() {
        let mid = add(scaled(q.even[a]), scaled(q.odd[b])).map(|c| c / 2);
        place(kc::w0e(e), mid, OFF_W0);
        place(kc::w1e(e), mid, OFF_W1);
        place(kc::w2e(e), mid, OFF_W2);
    }
    let emb = EmbeddedComplex {
        config: tc.config().clone(),
        coords,
        anchors,
    };
    emb.audit()?;
    Ok(emb)
}

impl EmbeddedComplex {
    /// Distinct coordinates, non-degenerate triangles, and every vertex
    /// within distance `< 1/4` of its anchor.
    pub fn audit(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidConfiguration(m));
        let mut seen = BTreeSet::new();
        for (v, p) in &self.coords {
            if !seen.insert(*p) {
                return bad(format!("vertex {v} coincides with another"));
            }
            let d = sub(*p, self.anchors[v]);
            let quarter = COORD_DENOM / 4;
            if d.iter().map(|c| c * c).sum::<i64>() >= quarter * quarter {
                return bad(format!("vertex {v} is not within 1/4 of its anchor"));
            }
        }
        for id in self.config.triangle_ids() {
            let vs = self
                .config
                .triangle_vertices(id)
                .ok_or_else(|| Error::InvalidConfiguration(format!("triangle {id} has no vertices")))?;
            let [p, q, r] = vs.map(|v| self.coords[&v]);
            let (u, w) = (sub(q, p), sub(r, p));
            let cross = [
                u[1] * w[2] - u[2] * w[1],
                u[2] * w[0] - u[0] * w[2],
                u[0] * w[1] - u[1] * w[0],
            ];
            if cross == [0; 3] {
                return bad(format!("triangle {id} is degenerate"));
            }
        }
        Ok(())
    }

    /// OFF text: vertices in id order, then triangles in id order.
    pub fn to_off(&self) -> String {
        let index: BTreeMap<&str, usize> = self.coords.keys().enumerate().map(|(i, v)| (v.as_str(), i)).collect();
        let mut out = format!("OFF\n{} {} 0\n", self.coords.len(), self.config.n_triangles());
        for p in self.coords.values() {
            let cs: Vec<String> = p.iter().map(|&c| dyadic_decimal(c)).collect();
            writeln!(out, "{}", cs.join(" ")).expect("write to string");
        }
        for id in self.config.triangle_ids() {
            let vs = self.config.triangle_vertices(id).expect("audited");
            writeln!(out, "3 {} {} {}", index[vs[0].as_str()], index[vs[1].as_str()], index[vs[2].as_str()])
                .expect("write to string");
        }
        out
    }
}

/// Exact decimal form of `c / 64`.
fn dyadic_decimal(c: i64) -> String {
    // 1/64 = 0.015625
    let micro = c.unsigned_abs() * 15625;
    let (int, frac) = (micro / 1_000_000, micro % 1_000_000);
    let sign = if c < 0 { "-" } else { "" };
    if frac == 0 {
        return format!("{sign}{int}");
    }
    let digits = format!("{frac:06}");
    format!("{sign}{int}.{}", digits.trim_end_matches('0'))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_shapes() {
        let q = cubic_lattice(2, 1, 1);
        assert_eq!((q.n_vertices(), q.graph().n_edges()), (2, 1));
        let q = cubic_lattice(2, 2, 1);
        assert_eq!((q.n_vertices(), q.graph().n_edges()), (4, 4));
        let q = cubic_lattice(2, 2, 2);
        assert_eq!((q.n_vertices(), q.graph().n_edges()), (8, 12));
    }

    #[test]
    fn dimer_counts() {
        for (dims, want) in [([2, 1, 1], 1), ([2, 2, 1], 2), ([2, 2, 2], 9), ([3, 1, 1], 0)] {
            let q = cubic_lattice(dims[0], dims[1], dims[2]);
            let d = dimer_polynomial(&q, None, Exec::Sequential).unwrap();
            assert_eq!(d.count(), BigInt::from(want), "{dims:?}");
            assert_eq!(d.odd, dims == [3, 1, 1]);
        }
    }

    #[test]
    fn weighted_square() {
        let q = cubic_lattice(2, 2, 1);
        let w: EdgeWeights = q.graph().edges().enumerate().map(|(i, e)| (e, 1u64 << i)).collect();
        let d = dimer_polynomial(&q, Some(&w), Exec::Parallel).unwrap();
        let direct = dimer_polynomial_direct(&q, &w, Exec::Sequential).unwrap();
        assert_eq!(d.polynomial, direct);
        assert_eq!(d.polynomial.len(), 2);
    }

    #[test]
    fn guard_applies() {
        let q = cubic_lattice(7, 3, 2);
        assert!(matches!(
            dimer_polynomial(&q, None, Exec::Sequential),
            Err(Error::Guard { .. })
        ));
    }

    #[test]
    fn embedding_locality() {
        let e = embed_t(&cubic_lattice(2, 1, 1)).unwrap();
        assert_eq!(e.coords[&kc::v1(0)], [0, 0, 0]);
        assert_eq!(e.coords[&kc::v2(0)], [64, 0, 0]);
        let e = embed_t(&cubic_lattice(2, 2, 1)).unwrap();
        for (v, p) in &e.coords {
            if v.starts_with("0a:") {
                let mid = e.anchors[v];
                assert!(mid.iter().any(|c| c % 64 == 32), "{v} anchored at {mid:?}");
                let d = sub(*p, mid);
                assert!(d.iter().map(|c| c * c).sum::<i64>() < 16 * 16);
            }
        }
    }

    #[test]
    fn off_export() {
        let e = embed_t(&cubic_lattice(2, 1, 1)).unwrap();
        let off = e.to_off();
        let mut lines = off.lines();
        assert_eq!(lines.next(), Some("OFF"));
        assert_eq!(lines.next(), Some("9 4 0"));
        assert_eq!(dyadic_decimal(-3), "-0.046875");
        assert_eq!(dyadic_decimal(96), "1.5");
        assert_eq!(dyadic_decimal(0), "0");
    }
}
