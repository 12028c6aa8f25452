//! Gadgets: small configurations with labeled ending empty triangles whose
//! matching behaviour is certified by exhaustive enumeration, and the
//! tripartite reduction built from them.

mod reduction;
mod reference;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

pub use reduction::{link_by_mtt, tripartite_reduction, Block, ReductionResult};
pub use reference::{make_matching_triangular_triangle, make_s5, make_tunnel};

use crate::complex::{ConfigDocument, EdgeTripartition, Matching, TriangularConfiguration};
use crate::error::{Error, Result};
use crate::exec::Exec;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GadgetKind {
    Tunnel,
    S5,
    MatchingTriangularTriangle,
}

impl fmt::Display for GadgetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GadgetKind::Tunnel => "tunnel",
            GadgetKind::S5 => "s5",
            GadgetKind::MatchingTriangularTriangle => "mtt",
        })
    }
}

/// An ending empty triangle: three edges bounding no filled triangle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct End {
    pub label: String,
    pub edges: [String; 3],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn from_result(name: &str, r: std::result::Result<String, String>) -> Self {
        let (passed, detail) = match r {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        Check {
            name: name.to_string(),
            passed,
            detail,
        }
    }
}

/// Named checks, each recomputed from scratch on the gadget instance.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Certificate {
    pub checks: Vec<Check>,
}

impl Certificate {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gadget {
    kind: GadgetKind,
    config: TriangularConfiguration,
    ends: Vec<End>,
    tripartition: EdgeTripartition,
    named: BTreeMap<String, Matching>,
    certificate: Certificate,
}

impl Gadget {
    /// Searches a tripartition extending `pins`, then certifies. Fails unless
    /// every check passes.
    fn certified(
        kind: GadgetKind,
        config: TriangularConfiguration,
        ends: Vec<End>,
        named: BTreeMap<String, Matching>,
        pins: &EdgeTripartition,
        exec: Exec,
    ) -> Result<Self> {
        let tripartition = crate::complex::find_edge_tripartition(&config, pins)?
            .ok_or_else(|| Error::Certification(format!("{kind}: no edge tripartition extends the end pins")))?;
        let mut g = Gadget {
            kind,
            config,
            ends,
            tripartition,
            named,
            certificate: Certificate::default(),
        };
        g.certificate = g.certify(exec);
        if !g.certificate.all_passed() {
            let names: Vec<&str> = g.certificate.failures().iter().map(|c| c.name.as_str()).collect();
            return Err(Error::Certification(format!("{kind}: failed {}", names.join(", "))));
        }
        Ok(g)
    }

    pub fn kind(&self) -> GadgetKind {
        self.kind
    }

    pub fn config(&self) -> &TriangularConfiguration {
        &self.config
    }

    pub fn ends(&self) -> &[End] {
        &self.ends
    }

    pub fn end(&self, label: &str) -> Option<&End> {
        self.ends.iter().find(|e| e.label == label)
    }

    /// Union of all end edges.
    pub fn end_edges(&self) -> BTreeSet<String> {
        self.ends.iter().flat_map(|e| e.edges.iter().cloned()).collect()
    }

    /// The certified edge tripartition, with each end monochromatic.
    pub fn tripartition(&self) -> &EdgeTripartition {
        &self.tripartition
    }

    /// Distinguished matchings: `M^L`, `M^R` for a tunnel and `M^1`, `M^0`
    /// otherwise.
    pub fn matching(&self, name: &str) -> Option<&Matching> {
        self.named.get(name)
    }

    pub fn named_matchings(&self) -> &BTreeMap<String, Matching> {
        &self.named
    }

    pub fn certificate(&self) -> &Certificate {
        &self.certificate
    }

    /// Regenerates the certificate from scratch.
    pub fn certify(&self, exec: Exec) -> Certificate {
        reference::run_suite(self, exec)
    }

    pub fn to_document(&self) -> ConfigDocument {
        ConfigDocument::from_config(&self.config)
            .with_edge_classes(&self.tripartition)
            .with_ends(self.ends.iter().map(|e| e.edges.clone()).collect())
    }

    /// Copy with every id prefixed.
    pub fn prefixed(&self, prefix: &str) -> Self {
        let p = |s: &str| format!("{prefix}{s}");
        Gadget {
            kind: self.kind,
            config: self.config.prefixed(prefix),
            ends: self
                .ends
                .iter()
                .map(|e| End {
                    label: e.label.clone(),
                    edges: e.edges.clone().map(|x| p(&x)),
                })
                .collect(),
            tripartition: self.tripartition.iter().map(|(k, c)| (p(k), c)).collect(),
            named: self
                .named
                .iter()
                .map(|(k, m)| (k.clone(), m.triangles().map(p).collect()))
                .collect(),
            certificate: self.certificate.clone(),
        }
    }

    /// Copy with vertex data dropped; the certificate is regenerated.
    pub fn without_vertex_data(&self, exec: Exec) -> Self {
        let mut g = self.clone();
        g.config = g.config.without_vertex_data();
        g.certificate = g.certify(exec);
        g
    }
}
