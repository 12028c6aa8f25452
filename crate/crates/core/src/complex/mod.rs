//! Triangular configurations: 2-dimensional simplicial complexes whose maximal
//! simplices are triangles or edges, with matchings, defects, tripartitions and
//! cycle spaces.
//!
//! Edges are first-class ids. Vertex data is optional: an edge may carry its
//! pair of end vertices, and the simplicial conditions on vertices are only
//! checked where that data is present.

mod compose;
mod cycle;
mod document;
mod matching;
mod tripartition;
mod validate;

use std::collections::{BTreeMap, BTreeSet, HashMap};

pub use compose::compose;
pub use cycle::{cycle_space_weight_enumerator, incidence_matrix};
pub use document::ConfigDocument;
pub use matching::{
    defect, enumerate_matchings_with_defect_within, enumerate_perfect_strong_matchings, perfect_matching_count,
    perfect_matching_polynomial, Matching,
};
pub use tripartition::{
    check_edge_tripartition, check_vertex_tripartition, find_edge_tripartition, find_vertex_tripartition,
    EdgeTripartition, Tripartition, VertexTripartition,
};
pub use validate::{ValidationReport, Violation};

use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TriangularConfiguration {
    vertices: BTreeSet<String>,
    edges: BTreeMap<String, Option<[String; 2]>>,
    triangles: BTreeMap<String, [String; 3]>,
}

fn sorted2(a: &str, b: &str) -> [String; 2] {
    if a <= b {
        [a.to_string(), b.to_string()]
    } else {
        [b.to_string(), a.to_string()]
    }
}

fn sorted3(mut t: [String; 3]) -> [String; 3] {
    t.sort();
    t
}

/// Canonical edge id for the edge between two vertex ids.
pub fn edge_id(u: &str, v: &str) -> String {
    let [a, b] = sorted2(u, v);
    format!("{a}|{b}")
}

impl TriangularConfiguration {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a configuration from triangles given by vertex triples; edges are
    /// created on demand and named by [`edge_id`].
    pub fn from_faces<S: AsRef<str>>(faces: &[(S, [S; 3])]) -> Self {
        let mut cfg = Self::new();
        for (id, [a, b, c]) in faces {
            cfg.add_face(id.as_ref(), [a.as_ref(), b.as_ref(), c.as_ref()]);
        }
        cfg
    }

    pub fn add_vertex(&mut self, id: impl Into<String>) {
        self.vertices.insert(id.into());
    }

    /// Adds (or replaces) an edge. Ends, when given, are added as vertices.
    pub fn add_edge(&mut self, id: impl Into<String>, ends: Option<(&str, &str)>) {
        let ends = ends.map(|(u, v)| {
            self.vertices.insert(u.to_string());
            self.vertices.insert(v.to_string());
            sorted2(u, v)
        });
        self.edges.insert(id.into(), ends);
    }

    /// Adds (or replaces) a triangle by its three edge ids. The edges are not
    /// created; dangling references are reported by [`Self::validate`].
    pub fn add_triangle(&mut self, id: impl Into<String>, edges: [&str; 3]) {
        self.triangles
            .insert(id.into(), sorted3(edges.map(|e| e.to_string())));
    }

    /// Adds a triangle on three vertices together with its (canonically named)
    /// edges. Returns the edge ids.
    pub fn add_face(&mut self, id: &str, [a, b, c]: [&str; 3]) -> [String; 3] {
        let es = [edge_id(a, b), edge_id(b, c), edge_id(a, c)];
        self.add_edge(es[0].clone(), Some((a, b)));
        self.add_edge(es[1].clone(), Some((b, c)));
        self.add_edge(es[2].clone(), Some((a, c)));
        self.add_triangle(id, [&es[0], &es[1], &es[2]]);
        es
    }

    pub fn vertices(&self) -> impl Iterator<Item = &str> {
        self.vertices.iter().map(String::as_str)
    }

    pub fn edges(&self) -> impl Iterator<Item = (&str, Option<&[String; 2]>)> {
        self.edges.iter().map(|(id, ends)| (id.as_str(), ends.as_ref()))
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = &str> {
        self.edges.keys().map(String::as_str)
    }

    pub fn triangles(&self) -> impl Iterator<Item = (&str, &[String; 3])> {
        self.triangles.iter().map(|(id, es)| (id.as_str(), es))
    }

    pub fn triangle_ids(&self) -> impl Iterator<Item = &str> {
        self.triangles.keys().map(String::as_str)
    }

    pub fn n_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn n_triangles(&self) -> usize {
        self.triangles.len()
    }

    pub fn has_edge(&self, id: &str) -> bool {
        self.edges.contains_key(id)
    }

    pub fn has_triangle(&self, id: &str) -> bool {
        self.triangles.contains_key(id)
    }

    pub fn edge_ends(&self, id: &str) -> Option<&[String; 2]> {
        self.edges.get(id).and_then(Option::as_ref)
    }

    pub fn triangle_edges(&self, id: &str) -> Option<&[String; 3]> {
        self.triangles.get(id)
    }

    /// True when every edge carries its end vertices.
    pub fn has_vertex_data(&self) -> bool {
        self.edges.values().all(Option::is_some)
    }

    /// The three vertices of a triangle, sorted, when vertex data allows.
    pub fn triangle_vertices(&self, id: &str) -> Option<[String; 3]> {
        let es = self.triangles.get(id)?;
        let mut vs: BTreeSet<&String> = BTreeSet::new();
        for e in es {
            let [u, v] = self.edges.get(e)?.as_ref()?;
            vs.insert(u);
            vs.insert(v);
        }
        if vs.len() != 3 {
            return None;
        }
        let mut it = vs.into_iter().cloned();
        Some([it.next()?, it.next()?, it.next()?])
    }

    pub fn validate(&self) -> ValidationReport {
        validate::validate(self)
    }

    /// Copy with every vertex, edge and triangle id prefixed.
    pub fn prefixed(&self, prefix: &str) -> Self {
        let p = |s: &String| format!("{prefix}{s}");
        TriangularConfiguration {
            vertices: self.vertices.iter().map(p).collect(),
            edges: self
                .edges
                .iter()
                .map(|(id, ends)| (p(id), ends.as_ref().map(|[u, v]| [p(u), p(v)])))
                .collect(),
            triangles: self
                .triangles
                .iter()
                .map(|(id, es)| (p(id), es.clone().map(|e| p(&e))))
                .collect(),
        }
    }

    /// Copy without the given triangles; edges and vertices are kept.
    pub fn without_triangles<'a>(&self, ids: impl IntoIterator<Item = &'a str>) -> Self {
        let mut out = self.clone();
        for id in ids {
            out.triangles.remove(id);
        }
        out
    }

    /// Copy with all vertex data dropped.
    pub fn without_vertex_data(&self) -> Self {
        TriangularConfiguration {
            vertices: BTreeSet::new(),
            edges: self.edges.keys().map(|k| (k.clone(), None)).collect(),
            triangles: self.triangles.clone(),
        }
    }

    pub(crate) fn index(&self) -> Result<Indexed<'_>> {
        let report = self.validate();
        if let Some(v) = report.violations.first() {
            return Err(Error::InvalidConfiguration(v.to_string()));
        }
        Ok(Indexed::new(self))
    }
}

/// Dense index view of a valid configuration. Indices follow canonical (sorted)
/// id order.
pub(crate) struct Indexed<'a> {
    pub vertex_ids: Vec<&'a str>,
    pub edge_ids: Vec<&'a str>,
    pub tri_ids: Vec<&'a str>,
    pub edge_pos: HashMap<&'a str, usize>,
    pub tri_edges: Vec<[usize; 3]>,
    /// Vertex triple per triangle when every edge of it has ends.
    pub tri_vertices: Vec<Option<[usize; 3]>>,
}

impl<'a> Indexed<'a> {
    fn new(cfg: &'a TriangularConfiguration) -> Self {
        let vertex_ids: Vec<&str> = cfg.vertices.iter().map(String::as_str).collect();
        let edge_ids: Vec<&str> = cfg.edges.keys().map(String::as_str).collect();
        let tri_ids: Vec<&str> = cfg.triangles.keys().map(String::as_str).collect();
        let vertex_pos: HashMap<&str, usize> = vertex_ids.iter().enumerate().map(|(i, v)| (*v, i)).collect();
        let edge_pos: HashMap<&str, usize> = edge_ids.iter().enumerate().map(|(i, e)| (*e, i)).collect();
        let tri_edges = cfg
            .triangles
            .values()
            .map(|es| es.clone().map(|e| edge_pos[e.as_str()]))
            .collect();
        let tri_vertices = cfg
            .triangles
            .keys()
            .map(|t| {
                cfg.triangle_vertices(t)
                    .map(|vs| vs.map(|v| vertex_pos[v.as_str()]))
            })
            .collect();
        Indexed {
            vertex_ids,
            edge_ids,
            tri_ids,
            edge_pos,
            tri_edges,
            tri_vertices,
        }
    }
}

/// Integer weights on triangles; missing entries weigh 1.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Weighting {
    weights: BTreeMap<String, u64>,
}

impl Weighting {
    pub fn unit() -> Self {
        Self::default()
    }

    pub fn get(&self, triangle: &str) -> u64 {
        self.weights.get(triangle).copied().unwrap_or(1)
    }

    pub fn set(&mut self, triangle: impl Into<String>, w: u64) {
        self.weights.insert(triangle.into(), w);
    }

    pub fn explicit(&self) -> &BTreeMap<String, u64> {
        &self.weights
    }

    /// Explicit weights for every triangle of `cfg`, defaults filled in.
    pub fn total_over(&self, cfg: &TriangularConfiguration) -> BTreeMap<String, u64> {
        cfg.triangle_ids().map(|t| (t.to_string(), self.get(t))).collect()
    }
}

impl FromIterator<(String, u64)> for Weighting {
    fn from_iter<I: IntoIterator<Item = (String, u64)>>(iter: I) -> Self {
        Weighting {
            weights: iter.into_iter().collect(),
        }
    }
}
