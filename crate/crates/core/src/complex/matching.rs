use std::collections::BTreeSet;

use num_bigint::BigInt;

use super::{Indexed, TriangularConfiguration, Weighting};
use crate::algebra::Polynomial;
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::search::CoverProblem;

/// A set of triangle ids. Ordered lexicographically by its sorted ids.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Matching(BTreeSet<String>);

impl Matching {
    pub fn new<I, S>(ids: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Matching(ids.into_iter().map(Into::into).collect())
    }

    pub fn triangles(&self) -> impl Iterator<Item = &str> {
        self.0.iter().map(String::as_str)
    }

    pub fn contains(&self, id: &str) -> bool {
        self.0.contains(id)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self, w: &Weighting) -> u64 {
        self.triangles().map(|t| w.get(t)).sum()
    }

    fn from_indices(idx: &Indexed<'_>, sol: &[usize]) -> Self {
        Matching(sol.iter().map(|&t| idx.tri_ids[t].to_string()).collect())
    }
}

impl FromIterator<String> for Matching {
    fn from_iter<I: IntoIterator<Item = String>>(iter: I) -> Self {
        Matching(iter.into_iter().collect())
    }
}

/// Edges of `cfg` covered by no triangle of `m`.
pub fn defect(cfg: &TriangularConfiguration, m: &Matching) -> Result<BTreeSet<String>> {
    let mut covered_by: std::collections::BTreeMap<&str, &str> = Default::default();
    for t in m.triangles() {
        let es = cfg.triangle_edges(t).ok_or_else(|| Error::UnknownId(t.to_string()))?;
        for e in es {
            if let Some(other) = covered_by.insert(e.as_str(), t) {
                return Err(Error::NotAMatching(other.to_string(), t.to_string(), e.clone()));
            }
        }
    }
    Ok(cfg
        .edge_ids()
        .filter(|e| !covered_by.contains_key(e))
        .map(str::to_string)
        .collect())
}

fn edge_cover_problem(idx: &Indexed<'_>, allowed: &[bool]) -> CoverProblem {
    let options = idx.tri_edges.iter().map(|es| es.to_vec()).collect();
    let required = allowed.iter().map(|a| !a).collect();
    CoverProblem::new(idx.edge_ids.len(), options, required)
}

fn allowed_mask(idx: &Indexed<'_>, allowed: &BTreeSet<String>) -> Result<Vec<bool>> {
    let mut mask = vec![false; idx.edge_ids.len()];
    for e in allowed {
        let &i = idx.edge_pos.get(e.as_str()).ok_or_else(|| Error::UnknownId(e.clone()))?;
        mask[i] = true;
    }
    Ok(mask)
}

/// Every matching whose defect is contained in `allowed`, canonically sorted.
/// `allowed = ∅` gives the perfect matchings.
pub fn enumerate_matchings_with_defect_within(
    cfg: &TriangularConfiguration,
    allowed: &BTreeSet<String>,
    exec: Exec,
) -> Result<Vec<Matching>> {
    let idx = cfg.index()?;
    let mask = allowed_mask(&idx, allowed)?;
    let problem = edge_cover_problem(&idx, &mask);
    let mut out: Vec<Matching> = problem
        .solutions(exec)
        .iter()
        .map(|s| Matching::from_indices(&idx, s))
        .collect();
    out.sort();
    Ok(out)
}

/// `Σ_P x^{w(P)}` over perfect matchings `P`.
pub fn perfect_matching_polynomial(
    cfg: &TriangularConfiguration,
    weights: &Weighting,
    exec: Exec,
) -> Result<Polynomial> {
    let idx = cfg.index()?;
    let tri_w: Vec<u64> = idx.tri_ids.iter().map(|t| weights.get(t)).collect();
    let problem = edge_cover_problem(&idx, &vec![false; idx.edge_ids.len()]);
    Ok(problem.fold(
        exec,
        Polynomial::default,
        |acc, chosen| {
            let w = chosen.iter().map(|&t| tri_w[t]).sum();
            acc.add_term(w, BigInt::from(1));
        },
        |a, b| a + b,
    ))
}

pub fn perfect_matching_count(cfg: &TriangularConfiguration, exec: Exec) -> Result<u128> {
    let idx = cfg.index()?;
    Ok(edge_cover_problem(&idx, &vec![false; idx.edge_ids.len()]).count(exec))
}

/// Sets of pairwise vertex-disjoint triangles covering every vertex.
pub fn enumerate_perfect_strong_matchings(cfg: &TriangularConfiguration, exec: Exec) -> Result<Vec<Matching>> {
    if !cfg.has_vertex_data() {
        return Err(Error::MissingVertexData);
    }
    let idx = cfg.index()?;
    let options: Vec<Vec<usize>> = idx
        .tri_vertices
        .iter()
        .map(|vs| vs.expect("valid configuration with vertex data").to_vec())
        .collect();
    let n = idx.vertex_ids.len();
    let problem = CoverProblem::new(n, options, vec![true; n]);
    let mut out: Vec<Matching> = problem
        .solutions(exec)
        .iter()
        .map(|s| Matching::from_indices(&idx, s))
        .collect();
    out.sort();
    Ok(out)
}
