use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use super::TriangularConfiguration;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    DanglingEdge { triangle: String, edge: String },
    RepeatedEdge { triangle: String, edge: String },
    DuplicateTriangle { first: String, second: String },
    /// Two distinct triangles sharing two edges cannot both be simplices.
    TrianglesShareTwoEdges { first: String, second: String },
    DanglingVertex { edge: String, vertex: String },
    DegenerateEdge { edge: String },
    ParallelEdges { first: String, second: String },
    /// The triangle's edges do not pairwise meet in three distinct vertices.
    NotATriangle { triangle: String },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::DanglingEdge { triangle, edge } => {
                write!(f, "dangling edge: triangle {triangle} references missing edge {edge}")
            }
            Violation::RepeatedEdge { triangle, edge } => {
                write!(f, "repeated edge: triangle {triangle} uses edge {edge} more than once")
            }
            Violation::DuplicateTriangle { first, second } => {
                write!(f, "duplicate triangle: {first} and {second} have the same edges")
            }
            Violation::TrianglesShareTwoEdges { first, second } => {
                write!(f, "triangles {first} and {second} share two edges")
            }
            Violation::DanglingVertex { edge, vertex } => {
                write!(f, "dangling vertex: edge {edge} ends at missing vertex {vertex}")
            }
            Violation::DegenerateEdge { edge } => write!(f, "degenerate edge: {edge} is a loop"),
            Violation::ParallelEdges { first, second } => {
                write!(f, "parallel edges: {first} and {second} have the same ends")
            }
            Violation::NotATriangle { triangle } => {
                write!(f, "triangle {triangle}: edges do not bound a triangle")
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

pub(super) fn validate(cfg: &TriangularConfiguration) -> ValidationReport {
    let mut out = Vec::new();

    let mut by_ends: BTreeMap<&[String; 2], &str> = BTreeMap::new();
    for (id, ends) in &cfg.edges {
        let Some(ends) = ends else { continue };
        if ends[0] == ends[1] {
            out.push(Violation::DegenerateEdge { edge: id.clone() });
        }
        for v in ends {
            if !cfg.vertices.contains(v) {
                out.push(Violation::DanglingVertex {
                    edge: id.clone(),
                    vertex: v.clone(),
                });
            }
        }
        if let Some(first) = by_ends.insert(ends, id) {
            out.push(Violation::ParallelEdges {
                first: first.to_string(),
                second: id.clone(),
            });
        }
    }

    let mut by_edges: BTreeMap<&[String; 3], &str> = BTreeMap::new();
    let mut incident: BTreeMap<&str, Vec<&str>> = BTreeMap::new();
    for (id, es) in &cfg.triangles {
        let mut structurally_ok = true;
        for e in es {
            if !cfg.edges.contains_key(e) {
                out.push(Violation::DanglingEdge {
                    triangle: id.clone(),
                    edge: e.clone(),
                });
                structurally_ok = false;
            }
        }
        // Edges are stored sorted, so repeats are adjacent.
        for w in es.windows(2) {
            if w[0] == w[1] {
                out.push(Violation::RepeatedEdge {
                    triangle: id.clone(),
                    edge: w[0].clone(),
                });
                structurally_ok = false;
            }
        }
        if let Some(first) = by_edges.insert(es, id) {
            out.push(Violation::DuplicateTriangle {
                first: first.to_string(),
                second: id.clone(),
            });
            continue;
        }
        if structurally_ok && !vertices_form_triangle(cfg, es) {
            out.push(Violation::NotATriangle { triangle: id.clone() });
        }
        for e in es {
            incident.entry(e.as_str()).or_default().push(id.as_str());
        }
    }

    // Pairs of distinct triangles sharing two edges.
    let mut seen: BTreeSet<(&str, &str)> = BTreeSet::new();
    for tris in incident.values() {
        for (i, &a) in tris.iter().enumerate() {
            for &b in &tris[i + 1..] {
                if a == b || !seen.insert((a, b)) {
                    continue;
                }
                let ea: BTreeSet<&String> = cfg.triangles[a].iter().collect();
                let shared = cfg.triangles[b].iter().filter(|e| ea.contains(e)).count();
                if shared >= 2 && cfg.triangles[a] != cfg.triangles[b] {
                    out.push(Violation::TrianglesShareTwoEdges {
                        first: a.to_string(),
                        second: b.to_string(),
                    });
                }
            }
        }
    }

    ValidationReport { violations: out }
}

/// With vertex data on all three edges: pairwise exactly one shared vertex,
/// and the three shared vertices distinct. Without it the check passes.
fn vertices_form_triangle(cfg: &TriangularConfiguration, es: &[String; 3]) -> bool {
    let ends: Vec<&[String; 2]> = es.iter().filter_map(|e| cfg.edges.get(e)?.as_ref()).collect();
    if ends.len() < 3 {
        return true;
    }
    let shared = |a: &[String; 2], b: &[String; 2]| -> Option<String> {
        let common: Vec<&String> = a.iter().filter(|v| b.contains(v)).collect();
        (common.len() == 1).then(|| common[0].clone())
    };
    let (Some(x), Some(y), Some(z)) = (
        shared(ends[0], ends[1]),
        shared(ends[1], ends[2]),
        shared(ends[0], ends[2]),
    ) else {
        return false;
    };
    x != y && y != z && x != z
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;

    #[test]
    fn single_triangle_is_valid() {
        assert!(single_triangle().validate().is_valid());
        assert!(tetrahedron().validate().is_valid());
    }

    #[test]
    fn dangling_edge_reported_once() {
        let mut c = TriangularConfiguration::new();
        c.add_edge("a", None);
        c.add_edge("b", None);
        c.add_triangle("t", ["a", "b", "zz"]);
        let r = c.validate();
        assert_eq!(
            r.violations,
            vec![Violation::DanglingEdge {
                triangle: "t".into(),
                edge: "zz".into()
            }]
        );
    }

    #[test]
    fn duplicate_triangle_reported_once() {
        let mut c = single_triangle();
        c.add_triangle("u", ["c", "a", "b"]);
        let r = c.validate();
        assert_eq!(
            r.violations,
            vec![Violation::DuplicateTriangle {
                first: "t".into(),
                second: "u".into()
            }]
        );
    }

    #[test]
    fn two_shared_edges_rejected() {
        let mut c = single_triangle();
        c.add_edge("d", None);
        c.add_triangle("u", ["a", "b", "d"]);
        let r = c.validate();
        assert_eq!(r.violations.len(), 1);
        assert!(matches!(r.violations[0], Violation::TrianglesShareTwoEdges { .. }));
    }

    #[test]
    fn vertex_inconsistency_detected() {
        let mut c = TriangularConfiguration::new();
        c.add_edge("a", Some(("0", "1")));
        c.add_edge("b", Some(("2", "3")));
        c.add_edge("c", Some(("0", "2")));
        c.add_triangle("t", ["a", "b", "c"]);
        assert_eq!(
            c.validate().violations,
            vec![Violation::NotATriangle { triangle: "t".into() }]
        );
    }

    #[test]
    fn repeated_edge_detected() {
        let mut c = single_triangle();
        c.add_triangle("u", ["a", "a", "b"]);
        assert!(c
            .validate()
            .violations
            .iter()
            .any(|v| matches!(v, Violation::RepeatedEdge { .. })));
    }
}
