use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::TriangularConfiguration;
use crate::error::{Error, Result};

/// Assignment of ids to classes 1, 2, 3.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Tripartition {
    classes: BTreeMap<String, u8>,
}

/// Classes on edges; every triangle has one edge per class.
pub type EdgeTripartition = Tripartition;
/// Classes on vertices; every triangle has one vertex per class.
pub type VertexTripartition = Tripartition;

impl Tripartition {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, id: &str) -> Option<u8> {
        self.classes.get(id).copied()
    }

    /// Panics unless `class` is 1, 2 or 3.
    pub fn set(&mut self, id: impl Into<String>, class: u8) {
        assert!((1..=3).contains(&class), "class label {class} outside 1..=3");
        self.classes.insert(id.into(), class);
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, u8)> {
        self.classes.iter().map(|(k, v)| (k.as_str(), *v))
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Members of a class in canonical order.
    pub fn members(&self, class: u8) -> Vec<&str> {
        self.classes
            .iter()
            .filter(|(_, c)| **c == class)
            .map(|(k, _)| k.as_str())
            .collect()
    }

    pub fn sizes(&self) -> [usize; 3] {
        let mut s = [0; 3];
        for c in self.classes.values() {
            s[(*c - 1) as usize] += 1;
        }
        s
    }

    /// Relabels classes: `perm[k-1]` is the new label of class `k`.
    pub fn relabeled(&self, perm: [u8; 3]) -> Self {
        Tripartition {
            classes: self
                .classes
                .iter()
                .map(|(k, c)| (k.clone(), perm[(*c - 1) as usize]))
                .collect(),
        }
    }
}

impl FromIterator<(String, u8)> for Tripartition {
    fn from_iter<I: IntoIterator<Item = (String, u8)>>(iter: I) -> Self {
        let mut t = Tripartition::new();
        for (k, c) in iter {
            t.set(k, c);
        }
        t
    }
}

fn check(
    label: &str,
    ids: &[&str],
    triples: &[(&str, [&str; 3])],
    t: &Tripartition,
) -> Result<()> {
    for id in ids {
        match t.get(id) {
            None => return Err(Error::InvalidTripartition(format!("{label} {id} has no class"))),
            Some(c) if !(1..=3).contains(&c) => {
                return Err(Error::InvalidTripartition(format!("{label} {id} has class {c}")))
            }
            _ => {}
        }
    }
    let known: std::collections::BTreeSet<&str> = ids.iter().copied().collect();
    if let Some((id, _)) = t.iter().find(|(id, _)| !known.contains(id)) {
        return Err(Error::InvalidTripartition(format!("{id} is not a {label} of the configuration")));
    }
    for (tri, members) in triples {
        let mut seen = [false; 3];
        for m in members {
            let c = t.get(m).ok_or_else(|| Error::InvalidTripartition(format!("{label} {m} has no class")))?;
            seen[(c - 1) as usize] = true;
        }
        if !seen.iter().all(|&s| s) {
            return Err(Error::InvalidTripartition(format!("triangle {tri} is not rainbow")));
        }
    }
    Ok(())
}

pub fn check_edge_tripartition(cfg: &TriangularConfiguration, t: &EdgeTripartition) -> Result<()> {
    let ids: Vec<&str> = cfg.edge_ids().collect();
    let triples: Vec<(&str, [&str; 3])> = cfg
        .triangles()
        .map(|(id, es)| (id, [es[0].as_str(), es[1].as_str(), es[2].as_str()]))
        .collect();
    check("edge", &ids, &triples, t)
}

pub fn check_vertex_tripartition(cfg: &TriangularConfiguration, t: &VertexTripartition) -> Result<()> {
    if !cfg.has_vertex_data() {
        return Err(Error::MissingVertexData);
    }
    let ids: Vec<&str> = cfg.vertices().collect();
    let verts: Vec<(&str, [String; 3])> = cfg
        .triangle_ids()
        .map(|id| {
            cfg.triangle_vertices(id)
                .map(|vs| (id, vs))
                .ok_or_else(|| Error::InvalidConfiguration(format!("triangle {id} has no vertex triple")))
        })
        .collect::<Result<_>>()?;
    let triples: Vec<(&str, [&str; 3])> = verts
        .iter()
        .map(|(id, vs)| (*id, [vs[0].as_str(), vs[1].as_str(), vs[2].as_str()]))
        .collect();
    check("vertex", &ids, &triples, t)
}

/// Exhaustive rainbow-labeling search. Branches on the unassigned element with
/// the fewest admissible classes (ties by index) and tries classes ascending.
struct Solver<'a> {
    triples: &'a [[usize; 3]],
    incident: Vec<Vec<usize>>,
    labels: Vec<u8>,
}

impl Solver<'_> {
    fn domain(&self, el: usize) -> u8 {
        let mut mask = 0b111u8;
        for &t in &self.incident[el] {
            for &other in &self.triples[t] {
                if other != el && self.labels[other] != 0 {
                    mask &= !(1 << (self.labels[other] - 1));
                }
            }
        }
        mask
    }

    fn solve(&mut self) -> bool {
        let mut best: Option<(usize, u8)> = None;
        for el in 0..self.labels.len() {
            if self.labels[el] != 0 {
                continue;
            }
            let d = self.domain(el);
            if d == 0 {
                return false;
            }
            if best.is_none_or(|(_, bd)| d.count_ones() < bd.count_ones()) {
                best = Some((el, d));
                if d.count_ones() == 1 {
                    break;
                }
            }
        }
        let Some((el, dom)) = best else {
            return true;
        };
        for class in 1..=3u8 {
            if dom & (1 << (class - 1)) == 0 {
                continue;
            }
            self.labels[el] = class;
            if self.solve() {
                return true;
            }
        }
        self.labels[el] = 0;
        false
    }
}

fn search(
    ids: &[&str],
    triples: &[[usize; 3]],
    pins: &Tripartition,
) -> Result<Option<Tripartition>> {
    let pos: BTreeMap<&str, usize> = ids.iter().enumerate().map(|(i, s)| (*s, i)).collect();
    let mut labels = vec![0u8; ids.len()];
    for (id, c) in pins.iter() {
        let &i = pos.get(id).ok_or_else(|| Error::UnknownId(id.to_string()))?;
        labels[i] = c;
    }
    for tr in triples {
        for a in 0..3 {
            for b in a + 1..3 {
                let (la, lb) = (labels[tr[a]], labels[tr[b]]);
                if la != 0 && la == lb {
                    return Err(Error::InconsistentPins(format!(
                        "{} and {} share a triangle and are both pinned to class {la}",
                        ids[tr[a]], ids[tr[b]]
                    )));
                }
            }
        }
    }
    let mut incident = vec![Vec::new(); ids.len()];
    for (t, tr) in triples.iter().enumerate() {
        for &el in tr {
            incident[el].push(t);
        }
    }
    let mut solver = Solver {
        triples,
        incident,
        labels,
    };
    if !solver.solve() {
        return Ok(None);
    }
    Ok(Some(
        ids.iter()
            .zip(&solver.labels)
            .map(|(id, &c)| (id.to_string(), c))
            .collect(),
    ))
}

/// An edge tripartition extending `pins`, or `None` when none exists.
pub fn find_edge_tripartition(
    cfg: &TriangularConfiguration,
    pins: &EdgeTripartition,
) -> Result<Option<EdgeTripartition>> {
    let idx = cfg.index()?;
    search(&idx.edge_ids, &idx.tri_edges, pins)
}

/// A vertex tripartition extending `pins`, or `None` when none exists.
pub fn find_vertex_tripartition(
    cfg: &TriangularConfiguration,
    pins: &VertexTripartition,
) -> Result<Option<VertexTripartition>> {
    if !cfg.has_vertex_data() {
        return Err(Error::MissingVertexData);
    }
    let idx = cfg.index()?;
    let triples: Vec<[usize; 3]> = idx
        .tri_vertices
        .iter()
        .map(|vs| vs.expect("valid configuration with vertex data"))
        .collect();
    search(&idx.vertex_ids, &triples, pins)
}
