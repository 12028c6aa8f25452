//! Disjoint union followed by a quotient on identified edges.
//!
//! Edge classes are the equivalence closure of the identification pairs. A
//! class is represented by its member from the earliest component (smallest
//! id within it), and likewise for vertex classes. Vertex pairs of identified
//! edges are unified in three passes: corners shared by the same two edge
//! classes are merged; pairings are then propagated to a fixed point, with any
//! still-undetermined pairing defaulting to sorted end order; finally every
//! class is checked to map onto one consistent vertex pair.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use super::TriangularConfiguration;
use crate::error::{Error, Result};

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Keeps the smaller index as root. Returns whether two classes merged.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }
}

fn check_disjoint<'a>(kind: &str, ids: impl Iterator<Item = (usize, &'a str)>) -> Result<HashMap<&'a str, usize>> {
    let mut pos = HashMap::new();
    for (i, (comp, id)) in ids.enumerate() {
        if pos.insert(id, i).is_some() {
            return Err(Error::Composition(format!(
                "{kind} id {id} occurs in more than one component (component {comp})"
            )));
        }
    }
    Ok(pos)
}

pub fn compose(configs: &[TriangularConfiguration], identifications: &[(String, String)]) -> Result<TriangularConfiguration> {
    // Global indices follow (component, id) order, so union-find roots are
    // the canonical representatives.
    let vertex_list: Vec<(usize, &str)> = configs
        .iter()
        .enumerate()
        .flat_map(|(c, cfg)| cfg.vertices().map(move |v| (c, v)))
        .collect();
    let edge_list: Vec<(usize, &str)> = configs
        .iter()
        .enumerate()
        .flat_map(|(c, cfg)| cfg.edge_ids().map(move |e| (c, e)))
        .collect();
    let vpos = check_disjoint("vertex", vertex_list.iter().copied())?;
    let epos = check_disjoint("edge", edge_list.iter().copied())?;
    check_disjoint(
        "triangle",
        configs
            .iter()
            .enumerate()
            .flat_map(|(c, cfg)| cfg.triangle_ids().map(move |t| (c, t))),
    )?;

    let mut edges_uf = UnionFind::new(edge_list.len());
    for (a, b) in identifications {
        let &ia = epos.get(a.as_str()).ok_or_else(|| Error::UnknownId(a.clone()))?;
        let &ib = epos.get(b.as_str()).ok_or_else(|| Error::UnknownId(b.clone()))?;
        edges_uf.union(ia, ib);
    }
    let edge_class: Vec<usize> = (0..edge_list.len()).map(|e| edges_uf.find(e)).collect();

    let ends: Vec<Option<[usize; 2]>> = edge_list
        .iter()
        .map(|&(c, e)| {
            configs[c]
                .edge_ends(e)
                .map(|[u, v]| [vpos[u.as_str()], vpos[v.as_str()]])
        })
        .collect();

    let mut verts_uf = UnionFind::new(vertex_list.len());

    // Corners shared by the same pair of edge classes.
    let mut corners: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    let mut incident: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); vertex_list.len()];
    for (e, ends) in ends.iter().enumerate() {
        if let Some(ends) = ends {
            for &v in ends {
                incident[v].insert(edge_class[e]);
            }
        }
    }
    for (v, classes) in incident.iter().enumerate() {
        let cs: Vec<usize> = classes.iter().copied().collect();
        for i in 0..cs.len() {
            for j in i + 1..cs.len() {
                corners.entry((cs[i], cs[j])).or_default().push(v);
            }
        }
    }
    for vs in corners.values() {
        for w in vs.windows(2) {
            verts_uf.union(w[0], w[1]);
        }
    }

    // Members with vertex data, grouped by class, in global order.
    let mut classes: BTreeMap<usize, Vec<[usize; 2]>> = BTreeMap::new();
    for (e, ends) in ends.iter().enumerate() {
        if let Some(ends) = ends {
            classes.entry(edge_class[e]).or_default().push(*ends);
        }
    }

    loop {
        let mut changed = true;
        while changed {
            changed = false;
            for members in classes.values() {
                let [a, b] = members[0];
                for &[c, d] in &members[1..] {
                    let (fa, fb, fc, fd) = (verts_uf.find(a), verts_uf.find(b), verts_uf.find(c), verts_uf.find(d));
                    changed |= if fa == fc {
                        verts_uf.union(b, d)
                    } else if fa == fd {
                        verts_uf.union(b, c)
                    } else if fb == fc {
                        verts_uf.union(a, d)
                    } else if fb == fd {
                        verts_uf.union(a, c)
                    } else {
                        false
                    };
                }
            }
        }
        let undetermined = classes.values().find_map(|members| {
            let [a, b] = members[0];
            members[1..].iter().find_map(|&[c, d]| {
                let (fa, fb) = (verts_uf.find(a), verts_uf.find(b));
                let touching = [verts_uf.find(c), verts_uf.find(d)];
                (!touching.contains(&fa) && !touching.contains(&fb)).then_some(([a, b], [c, d]))
            })
        });
        match undetermined {
            Some(([a, b], [c, d])) => {
                verts_uf.union(a, c);
                verts_uf.union(b, d);
            }
            None => break,
        }
    }

    let mut merged_ends: BTreeMap<usize, [usize; 2]> = BTreeMap::new();
    for (&class, members) in &classes {
        let mut pair = None;
        for &[u, v] in members {
            let mut p = [verts_uf.find(u), verts_uf.find(v)];
            p.sort_unstable();
            if p[0] == p[1] {
                return Err(Error::Composition(format!(
                    "edge {} collapses to a loop",
                    edge_list[class].1
                )));
            }
            match pair {
                None => pair = Some(p),
                Some(q) if q != p => {
                    return Err(Error::Composition(format!(
                        "identified edges of class {} have inconsistent vertex pairs",
                        edge_list[class].1
                    )))
                }
                _ => {}
            }
        }
        merged_ends.insert(class, pair.expect("class has members"));
    }

    let mut out = TriangularConfiguration::new();
    for v in 0..vertex_list.len() {
        let r = verts_uf.find(v);
        out.add_vertex(vertex_list[r].1);
    }
    for e in 0..edge_list.len() {
        if edge_class[e] != e {
            continue;
        }
        let ends = merged_ends
            .get(&e)
            .map(|[u, v]| (vertex_list[*u].1, vertex_list[*v].1));
        out.add_edge(edge_list[e].1, ends);
    }
    for cfg in configs {
        for (t, es) in cfg.triangles() {
            let mapped: Vec<&str> = es
                .iter()
                .map(|e| match epos.get(e.as_str()) {
                    Some(&i) => edge_list[edge_class[i]].1,
                    None => e.as_str(),
                })
                .collect();
            if mapped[0] == mapped[1] || mapped[1] == mapped[2] || mapped[0] == mapped[2] {
                return Err(Error::Composition(format!(
                    "triangle {t} would contain a repeated edge"
                )));
            }
            out.add_triangle(t, [mapped[0], mapped[1], mapped[2]]);
        }
    }
    if let Some(v) = out.validate().violations.first() {
        return Err(Error::Composition(v.to_string()));
    }
    Ok(out)
}
