//! Reference constructions and their property suites.
//!
//! Tunnel: the octahedron on top `u1 u2 u3` and bottom `v1 v2 v3` (with `ui`
//! opposite `vi`) minus its top and bottom faces. The three "up" faces hold one
//! top edge each and the three "down" faces one bottom edge each, while the six
//! cross edges form a hexagon alternating between up and down faces. Hence the
//! only matchings with defect inside the ends are all-down (`M^L`, defect =
//! top) and all-up (`M^R`, defect = bottom).
//!
//! S5: the same octahedron with the top, the three faces `ui u(i+1) vi` and the
//! bottom filled; the other three faces are the ends.
//!
//! MTT: S5 with a tunnel glued by its top onto each S5 end.

use std::collections::{BTreeMap, BTreeSet};

use super::{Certificate, Check, End, Gadget, GadgetKind};
use crate::complex::{
    check_edge_tripartition, defect, edge_id, enumerate_matchings_with_defect_within, find_edge_tripartition,
    EdgeTripartition, Matching, TriangularConfiguration,
};
use crate::error::Result;
use crate::exec::Exec;
use crate::complex::compose;

const TUNNEL_UP: [(&str, [&str; 3]); 3] = [
    ("up1", ["u1", "u2", "v3"]),
    ("up2", ["u2", "u3", "v1"]),
    ("up3", ["u3", "u1", "v2"]),
];
const TUNNEL_DOWN: [(&str, [&str; 3]); 3] = [
    ("dn1", ["u1", "v2", "v3"]),
    ("dn2", ["u2", "v3", "v1"]),
    ("dn3", ["u3", "v1", "v2"]),
];

const S5_FACES: [(&str, [&str; 3]); 5] = [
    ("t1", ["u1", "u2", "v1"]),
    ("t2", ["u2", "u3", "v2"]),
    ("t3", ["u1", "u2", "u3"]),
    ("t4", ["u3", "u1", "v3"]),
    ("t5", ["v1", "v2", "v3"]),
];
const S5_ENDS: [(&str, [&str; 3]); 3] = [
    ("e1", ["u2", "v1", "v2"]),
    ("e2", ["u3", "v2", "v3"]),
    ("e3", ["u1", "v3", "v1"]),
];

/// Labels of the three outer ends of the matching triangular triangle.
pub(super) const MTT_END_LABELS: [&str; 3] = ["abc", "123", "greek"];

fn face_end(label: &str, [a, b, c]: [&str; 3]) -> End {
    let mut edges = [edge_id(a, b), edge_id(b, c), edge_id(a, c)];
    edges.sort();
    End {
        label: label.to_string(),
        edges,
    }
}

fn pin_ends(ends: &[End], classes: &[u8]) -> EdgeTripartition {
    ends.iter()
        .zip(classes)
        .flat_map(|(e, &c)| e.edges.iter().map(move |x| (x.clone(), c)))
        .collect()
}

pub fn make_tunnel(exec: Exec) -> Result<Gadget> {
    let faces: Vec<(&str, [&str; 3])> = TUNNEL_UP.iter().chain(&TUNNEL_DOWN).copied().collect();
    let config = TriangularConfiguration::from_faces(&faces);
    let ends = vec![face_end("inner", ["u1", "u2", "u3"]), face_end("outer", ["v1", "v2", "v3"])];
    let named = BTreeMap::from([
        ("M^L".to_string(), Matching::new(TUNNEL_DOWN.map(|f| f.0))),
        ("M^R".to_string(), Matching::new(TUNNEL_UP.map(|f| f.0))),
    ]);
    let pins = pin_ends(&ends, &[1, 1]);
    Gadget::certified(GadgetKind::Tunnel, config, ends, named, &pins, exec)
}

pub fn make_s5(exec: Exec) -> Result<Gadget> {
    let config = TriangularConfiguration::from_faces(&S5_FACES);
    let ends: Vec<End> = S5_ENDS.iter().map(|(l, f)| face_end(l, *f)).collect();
    let named = BTreeMap::from([
        ("M^1".to_string(), Matching::new(["t1", "t2", "t4", "t5"])),
        ("M^0".to_string(), Matching::new(["t3"])),
    ]);
    let pins = pin_ends(&ends, &[1, 2, 3]);
    Gadget::certified(GadgetKind::S5, config, ends, named, &pins, exec)
}

pub fn make_matching_triangular_triangle(exec: Exec) -> Result<Gadget> {
    let s5 = make_s5(exec)?.prefixed("s5/");
    let tunnel = make_tunnel(exec)?;
    let tunnels: Vec<Gadget> = (1..=3).map(|i| tunnel.prefixed(&format!("t{i}/"))).collect();

    let mut ids = Vec::new();
    for (s5_end, t) in s5.ends().iter().zip(&tunnels) {
        let inner = t.end("inner").expect("tunnel has an inner end");
        for (a, b) in s5_end.edges.iter().zip(&inner.edges) {
            ids.push((a.clone(), b.clone()));
        }
    }
    let mut parts = vec![s5.config().clone()];
    parts.extend(tunnels.iter().map(|t| t.config().clone()));
    let config = compose(&parts, &ids)?;

    let ends: Vec<End> = tunnels
        .iter()
        .zip(MTT_END_LABELS)
        .map(|(t, label)| End {
            label: label.to_string(),
            edges: t.end("outer").expect("tunnel has an outer end").edges.clone(),
        })
        .collect();
    let union = |base: &Matching, tunnel_part: &str| -> Matching {
        base.triangles()
            .chain(tunnels.iter().flat_map(|t| t.matching(tunnel_part).expect("named").triangles()))
            .map(str::to_string)
            .collect()
    };
    let named = BTreeMap::from([
        ("M^1".to_string(), union(s5.matching("M^1").expect("named"), "M^L")),
        ("M^0".to_string(), union(s5.matching("M^0").expect("named"), "M^R")),
    ]);
    let pins = pin_ends(&ends, &[1, 2, 3]);
    Gadget::certified(GadgetKind::MatchingTriangularTriangle, config, ends, named, &pins, exec)
}

fn set_str(s: &BTreeSet<String>) -> String {
    format!("{{{}}}", s.iter().cloned().collect::<Vec<_>>().join(","))
}

fn matching_str(m: &Matching) -> String {
    format!("{{{}}}", m.triangles().collect::<Vec<_>>().join(","))
}

fn check_valid(g: &Gadget) -> Check {
    let r = g.config().validate();
    Check::from_result(
        "valid_configuration",
        if r.is_valid() {
            Ok(format!(
                "{} vertices, {} edges, {} triangles",
                g.config().n_vertices(),
                g.config().n_edges(),
                g.config().n_triangles()
            ))
        } else {
            Err(r.violations.iter().map(ToString::to_string).collect::<Vec<_>>().join("; "))
        },
    )
}

fn check_ends(g: &Gadget) -> Check {
    let cfg = g.config();
    let run = || -> std::result::Result<String, String> {
        let mut seen = BTreeSet::new();
        for end in g.ends() {
            for e in &end.edges {
                if !cfg.has_edge(e) {
                    return Err(format!("end {} names missing edge {e}", end.label));
                }
                if !seen.insert(e.clone()) {
                    return Err(format!("edge {e} is in two ends"));
                }
            }
            if cfg.triangles().any(|(_, es)| *es == end.edges) {
                return Err(format!("end {} is a filled triangle", end.label));
            }
            let ends: Vec<&[String; 2]> = end.edges.iter().filter_map(|e| cfg.edge_ends(e)).collect();
            if ends.len() == 3 {
                let vs: BTreeSet<&String> = ends.iter().flat_map(|p| p.iter()).collect();
                if vs.len() != 3 {
                    return Err(format!("end {} does not bound a triangle", end.label));
                }
            }
        }
        Ok(format!("{} pairwise edge-disjoint empty triangles", g.ends().len()))
    };
    Check::from_result("ends_are_empty_triangles", run())
}

fn named(g: &Gadget, name: &str) -> std::result::Result<Matching, String> {
    g.matching(name).cloned().ok_or_else(|| format!("no matching named {name}"))
}

fn check_defect(g: &Gadget, name: &str, expected: &BTreeSet<String>) -> Check {
    let run = || -> std::result::Result<String, String> {
        let m = named(g, name)?;
        let d = defect(g.config(), &m).map_err(|e| e.to_string())?;
        if &d == expected {
            Ok(format!("{name} = {} has defect {}", matching_str(&m), set_str(&d)))
        } else {
            Err(format!("{name} has defect {}, expected {}", set_str(&d), set_str(expected)))
        }
    };
    Check::from_result(&format!("defect_of_{name}"), run())
}

/// Enumerates matchings with defect inside `allowed` and compares with the
/// exact expected set.
fn check_exact_set(
    g: &Gadget,
    name: &str,
    allowed: &BTreeSet<String>,
    expected: &[&str],
    exec: Exec,
) -> Check {
    let run = || -> std::result::Result<String, String> {
        let found = enumerate_matchings_with_defect_within(g.config(), allowed, exec).map_err(|e| e.to_string())?;
        let mut want = expected.iter().map(|n| named(g, n)).collect::<std::result::Result<Vec<_>, _>>()?;
        want.sort();
        if found == want {
            Ok(format!("exactly {} matchings: {}", found.len(), expected.join(", ")))
        } else {
            Err(format!(
                "found {} matchings [{}], expected [{}]",
                found.len(),
                found.iter().map(matching_str).collect::<Vec<_>>().join(" "),
                want.iter().map(matching_str).collect::<Vec<_>>().join(" ")
            ))
        }
    };
    Check::from_result(name, run())
}

/// Re-searches a tripartition under the end pins and checks the stored one.
fn check_tripartition(g: &Gadget, classes: &[u8], sizes: Option<[usize; 3]>) -> Check {
    let run = || -> std::result::Result<String, String> {
        let stored = g.tripartition();
        check_edge_tripartition(g.config(), stored).map_err(|e| e.to_string())?;
        for (end, &c) in g.ends().iter().zip(classes) {
            if end.edges.iter().any(|e| stored.get(e) != Some(c)) {
                return Err(format!("end {} is not monochromatic in class {c}", end.label));
            }
        }
        let found = find_edge_tripartition(g.config(), &pin_ends(g.ends(), classes))
            .map_err(|e| e.to_string())?
            .ok_or("search finds no tripartition under the end pins")?;
        check_edge_tripartition(g.config(), &found).map_err(|e| e.to_string())?;
        let s = stored.sizes();
        if let Some(want) = sizes {
            if s != want {
                return Err(format!("class sizes {s:?}, expected {want:?}"));
            }
        }
        Ok(format!("class sizes {s:?}, end classes {classes:?}"))
    };
    Check::from_result("edge_tripartite", run())
}

pub(super) fn run_suite(g: &Gadget, exec: Exec) -> Certificate {
    let mut checks = vec![check_valid(g), check_ends(g)];
    let all_ends = g.end_edges();
    let end_set = |i: usize| -> BTreeSet<String> { g.ends()[i].edges.iter().cloned().collect() };
    match g.kind() {
        GadgetKind::Tunnel => {
            checks.push(check_exact_set(g, "matchings_within_ends", &all_ends, &["M^L", "M^R"], exec));
            checks.push(check_defect(g, "M^L", &end_set(0)));
            checks.push(check_defect(g, "M^R", &end_set(1)));
            checks.push(check_tripartition(g, &[1, 1], Some([6, 3, 3])));
        }
        GadgetKind::S5 => {
            checks.push(check_exact_set(g, "unique_perfect_matching", &BTreeSet::new(), &["M^1"], exec));
            checks.push(check_size(g, "M^1", 4));
            checks.push(check_all_ends_defect_unique(g, &all_ends, exec));
            checks.push(check_size(g, "M^0", 1));
            checks.push(check_tripartition(g, &[1, 2, 3], None));
        }
        GadgetKind::MatchingTriangularTriangle => {
            checks.push(check_exact_set(
                g,
                "matchings_within_outer_ends",
                &all_ends,
                &["M^0", "M^1"],
                exec,
            ));
            checks.push(check_defect(g, "M^1", &BTreeSet::new()));
            checks.push(check_defect(g, "M^0", &all_ends));
            checks.push(check_tripartition(g, &[1, 2, 3], None));
        }
    }
    Certificate { checks }
}

fn check_size(g: &Gadget, name: &str, size: usize) -> Check {
    let run = || -> std::result::Result<String, String> {
        let m = named(g, name)?;
        if m.len() == size {
            Ok(format!("|{name}| = {size}"))
        } else {
            Err(format!("|{name}| = {}, expected {size}", m.len()))
        }
    };
    Check::from_result(&format!("size_of_{name}"), run())
}

fn check_all_ends_defect_unique(g: &Gadget, all_ends: &BTreeSet<String>, exec: Exec) -> Check {
    let run = || -> std::result::Result<String, String> {
        let found = enumerate_matchings_with_defect_within(g.config(), all_ends, exec).map_err(|e| e.to_string())?;
        let full: Vec<&Matching> = found
            .iter()
            .filter(|m| defect(g.config(), m).map(|d| &d == all_ends).unwrap_or(false))
            .collect();
        let m0 = named(g, "M^0")?;
        if full == [&m0] {
            Ok(format!("{} is the only matching with defect = all end edges", matching_str(&m0)))
        } else {
            Err(format!("{} matchings have defect = all end edges", full.len()))
        }
    };
    Check::from_result("unique_all_ends_defect_matching", run())
}
