use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::{Tripartition, TriangularConfiguration, Weighting};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeEntry {
    pub id: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ends: Option<[String; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TriangleEntry {
    pub id: String,
    pub edges: [String; 3],
}

/// JSON form of a configuration with its optional annotations. Parsing then
/// serializing yields canonical (sorted) output, so a second round trip is
/// byte-identical.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigDocument {
    #[serde(default)]
    pub vertices: Vec<String>,
    #[serde(default)]
    pub edges: Vec<EdgeEntry>,
    #[serde(default)]
    pub triangles: Vec<TriangleEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<BTreeMap<String, u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edge_classes: Option<Tripartition>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertex_classes: Option<Tripartition>,
    /// Labeled end triples of a gadget.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ends: Option<Vec<[String; 3]>>,
}

impl ConfigDocument {
    pub fn from_config(cfg: &TriangularConfiguration) -> Self {
        ConfigDocument {
            vertices: cfg.vertices().map(str::to_string).collect(),
            edges: cfg
                .edges()
                .map(|(id, ends)| EdgeEntry {
                    id: id.to_string(),
                    ends: ends.cloned(),
                })
                .collect(),
            triangles: cfg
                .triangles()
                .map(|(id, es)| TriangleEntry {
                    id: id.to_string(),
                    edges: es.clone(),
                })
                .collect(),
            ..Default::default()
        }
    }

    pub fn with_weights(mut self, w: &Weighting) -> Self {
        self.weights = Some(w.explicit().clone());
        self
    }

    pub fn with_edge_classes(mut self, t: &Tripartition) -> Self {
        self.edge_classes = Some(t.clone());
        self
    }

    pub fn with_vertex_classes(mut self, t: &Tripartition) -> Self {
        self.vertex_classes = Some(t.clone());
        self
    }

    pub fn with_ends(mut self, ends: Vec<[String; 3]>) -> Self {
        self.ends = Some(ends);
        self
    }

    /// The configuration described; not validated.
    pub fn to_config(&self) -> Result<TriangularConfiguration> {
        let mut cfg = TriangularConfiguration::new();
        for v in &self.vertices {
            cfg.add_vertex(v.clone());
        }
        let mut seen = BTreeSet::new();
        for e in &self.edges {
            if !seen.insert(e.id.as_str()) {
                return Err(Error::Parse(format!("edge id {} listed twice", e.id)));
            }
            cfg.add_edge(e.id.clone(), e.ends.as_ref().map(|[u, v]| (u.as_str(), v.as_str())));
        }
        let mut seen = BTreeSet::new();
        for t in &self.triangles {
            if !seen.insert(t.id.as_str()) {
                return Err(Error::Parse(format!("triangle id {} listed twice", t.id)));
            }
            let [a, b, c] = &t.edges;
            cfg.add_triangle(t.id.clone(), [a, b, c]);
        }
        Ok(cfg)
    }

    pub fn weighting(&self) -> Weighting {
        self.weights
            .iter()
            .flatten()
            .map(|(k, v)| (k.clone(), *v))
            .collect()
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: ConfigDocument = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        for classes in [&doc.edge_classes, &doc.vertex_classes].into_iter().flatten() {
            if let Some((id, c)) = classes.iter().find(|(_, c)| !(1..=3).contains(c)) {
                return Err(Error::Parse(format!("class of {id} is {c}, expected 1, 2 or 3")));
            }
        }
        doc.to_config()?;
        Ok(doc.canonical())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.canonical()).expect("document serializes")
    }

    /// Sorted lists and sorted inner tuples.
    pub fn canonical(&self) -> Self {
        let mut d = self.clone();
        d.vertices.sort();
        d.vertices.dedup();
        for e in &mut d.edges {
            if let Some(ends) = &mut e.ends {
                ends.sort();
            }
        }
        d.edges.sort_by(|a, b| a.id.cmp(&b.id));
        for t in &mut d.triangles {
            t.edges.sort();
        }
        d.triangles.sort_by(|a, b| a.id.cmp(&b.id));
        if let Some(ends) = &mut d.ends {
            for e in ends.iter_mut() {
                e.sort();
            }
        }
        d
    }
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;

    #[test]
    fn round_trip_is_byte_stable() {
        let text = r#"{"triangles":[{"id":"t","edges":["c","a","b"]}],
            "edges":[{"id":"c"},{"id":"b"},{"id":"a"}],"weights":{"t":4},
            "edge_classes":{"a":1,"b":2,"c":3}}"#;
        let once = ConfigDocument::from_json(text).unwrap().to_json();
        let twice = ConfigDocument::from_json(&once).unwrap().to_json();
        assert_eq!(once, twice);
        let doc = ConfigDocument::from_json(&once).unwrap();
        assert_eq!(doc.to_config().unwrap(), single_triangle());
        assert_eq!(doc.weighting().get("t"), 4);
    }

    #[test]
    fn config_survives_serialization() {
        let t = tetrahedron();
        let doc = ConfigDocument::from_config(&t);
        let back = ConfigDocument::from_json(&doc.to_json()).unwrap();
        assert_eq!(back.to_config().unwrap(), t);
    }

    #[test]
    fn schema_errors() {
        for bad in [
            r#"{"edges":[{"id":"a"},{"id":"a"}]}"#,
            r#"{"edges":[{"id":"a"}],"edge_classes":{"a":4}}"#,
            r#"{"triangles":[{"id":"t","edges":["a","b"]}]}"#,
            r#"{"weights":{"t":-1}}"#,
            r#"{"colour":"red"}"#,
        ] {
            assert!(matches!(ConfigDocument::from_json(bad), Err(Error::Parse(_))), "{bad}");
        }
    }
}
