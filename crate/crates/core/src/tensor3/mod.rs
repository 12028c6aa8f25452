//! Sparse 3-dimensional matrices over exact rings: permanents, determinants,
//! adjacency builders, projection graphs and signings, and the Binet–Cauchy
//! identity for 3-matrix determinants.

mod adjacency;
mod binet_cauchy;
mod json;
mod matrix;
mod perdet;
mod signing;

use std::collections::BTreeMap;
use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

pub use adjacency::{triadjacency, vertex_adjacency};
pub use binet_cauchy::{binet_cauchy_c, binet_cauchy_rhs, RectMatrixTriple};
pub use json::{AnyTensor, JsonValue};
pub use matrix::{determinant2, permanent2, MAX_RYSER_SIDE};
pub use perdet::{
    determinant3, determinant3_dense, permanent3, permanent3_dense, permutation_pairs, PermPair, MAX_DENSE_SIDE,
};
pub use signing::{
    apply_signing, find_pfaffian_signing, kasteleyn_sign_via_k1, projection_graphs, BipartiteGraph, EdgeSigning,
    K1Signing, ProjectionGraphs, MAX_SIGNING_CYCLE_RANK,
};

use crate::error::{Error, Result};

/// Exact commutative ring values.
pub trait Ring:
    Clone
    + Debug
    + PartialEq
    + Send
    + Sync
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
}

impl<T> Ring for T where
    T: Clone
        + Debug
        + PartialEq
        + Send
        + Sync
        + Zero
        + One
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Neg<Output = T>
{
}

/// Sparse `n1 × n2 × n3` array; absent entries are zero and zeros are never
/// stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor3<R> {
    dims: [usize; 3],
    entries: BTreeMap<[usize; 3], R>,
}

impl<R: Ring> Tensor3<R> {
    pub fn new(dims: [usize; 3]) -> Self {
        Tensor3 {
            dims,
            entries: BTreeMap::new(),
        }
    }

    pub fn cube(n: usize) -> Self {
        Self::new([n, n, n])
    }

    pub fn from_entries(dims: [usize; 3], entries: impl IntoIterator<Item = ([usize; 3], R)>) -> Result<Self> {
        let mut t = Self::new(dims);
        for (idx, v) in entries {
            t.set(idx, v)?;
        }
        Ok(t)
    }

    /// Sets an entry; a zero value removes it.
    pub fn set(&mut self, idx: [usize; 3], v: R) -> Result<()> {
        if (0..3).any(|a| idx[a] >= self.dims[a]) {
            return Err(Error::Dimension(format!("index {idx:?} outside dims {:?}", self.dims)));
        }
        if v.is_zero() {
            self.entries.remove(&idx);
        } else {
            self.entries.insert(idx, v);
        }
        Ok(())
    }

    pub fn get(&self, idx: [usize; 3]) -> R {
        self.entries.get(&idx).cloned().unwrap_or_else(R::zero)
    }

    pub fn dims(&self) -> [usize; 3] {
        self.dims
    }

    pub fn is_cube(&self) -> bool {
        self.dims[0] == self.dims[1] && self.dims[1] == self.dims[2]
    }

    /// Nonzero entries in lexicographic index order.
    pub fn entries(&self) -> impl Iterator<Item = (&[usize; 3], &R)> {
        self.entries.iter()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    /// Zero-padded to a cube of side `max(dims)`.
    pub fn padded(&self) -> Self {
        let n = *self.dims.iter().max().expect("three dims");
        Tensor3 {
            dims: [n, n, n],
            entries: self.entries.clone(),
        }
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Tensor3<S> {
        let mut out = Tensor3::new(self.dims);
        for (idx, v) in &self.entries {
            let w = f(v);
            if !w.is_zero() {
                out.entries.insert(*idx, w);
            }
        }
        out
    }

    /// Relabels indices along `axis`: old index `i` becomes `perm[i]`.
    pub fn permute_axis(&self, axis: usize, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.dims[axis] {
            return Err(Error::Dimension(format!(
                "permutation of length {} for axis of size {}",
                perm.len(),
                self.dims[axis]
            )));
        }
        let mut seen = vec![false; perm.len()];
        for &p in perm {
            if p >= perm.len() || std::mem::replace(&mut seen[p], true) {
                return Err(Error::Dimension("not a permutation".into()));
            }
        }
        let mut out = Tensor3::new(self.dims);
        for (idx, v) in &self.entries {
            let mut j = *idx;
            j[axis] = perm[idx[axis]];
            out.entries.insert(j, v.clone());
        }
        Ok(out)
    }
}
