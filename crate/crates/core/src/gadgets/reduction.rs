use std::collections::{BTreeMap, BTreeSet};

use super::{make_matching_triangular_triangle, Gadget};
use crate::complex::{compose, EdgeTripartition, Matching, TriangularConfiguration, Weighting};
use crate::error::{Error, Result};
use crate::exec::Exec;

/// The matching triangular triangle `T_t` placed for one triangle `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub prefix: String,
    pub triangles: Vec<String>,
    pub m1: Matching,
    pub m0: Matching,
    /// The triangle of `m1` carrying the weight of `t`.
    pub designated: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionResult {
    pub config: TriangularConfiguration,
    pub weights: Weighting,
    pub tripartition: EdgeTripartition,
    /// One block per triangle of the source configuration.
    pub blocks: BTreeMap<String, Block>,
}

impl ReductionResult {
    /// `f(S)`: `M^1(T_t)` for `t ∈ S` and `M^0(T_t)` for the other triangles.
    pub fn forward(&self, s: &Matching) -> Result<Matching> {
        if let Some(t) = s.triangles().find(|t| !self.blocks.contains_key(*t)) {
            return Err(Error::UnknownId(t.to_string()));
        }
        Ok(self
            .blocks
            .iter()
            .flat_map(|(t, b)| if s.contains(t) { &b.m1 } else { &b.m0 }.triangles())
            .map(str::to_string)
            .collect())
    }
}

fn sorted_triangle_edges<'a>(cfg: &'a TriangularConfiguration, t: &str) -> Result<&'a [String; 3]> {
    cfg.triangle_edges(t).ok_or_else(|| Error::UnknownId(t.to_string()))
}

fn link_with(cfg: &TriangularConfiguration, targets: [&str; 3], mtt: &Gadget) -> Result<TriangularConfiguration> {
    let edges = targets.map(|t| sorted_triangle_edges(cfg, t));
    let [a, b, c] = [edges[0].clone()?, edges[1].clone()?, edges[2].clone()?];
    let mut seen = BTreeSet::new();
    for (t, es) in targets.iter().zip([a, b, c]) {
        for e in es {
            if !seen.insert(e) {
                return Err(Error::Composition(format!(
                    "link targets are not edge-disjoint: {t} shares edge {e}"
                )));
            }
        }
    }
    let mut ids = Vec::new();
    for (end, es) in mtt.ends().iter().zip([a, b, c]) {
        for (x, y) in es.iter().zip(&end.edges) {
            ids.push((x.clone(), y.clone()));
        }
    }
    compose(&[cfg.clone(), mtt.config().clone()], &ids)
}

fn base_mtt(with_vertices: bool, exec: Exec) -> Result<Gadget> {
    let g = make_matching_triangular_triangle(exec)?;
    Ok(if with_vertices { g } else { g.without_vertex_data(exec) })
}

/// `config ∪ T` for a fresh matching triangular triangle `T` whose ids carry
/// `prefix`, its three ends identified with the edges of `targets` (sorted
/// edge order on both sides). The targets stay in the result. Without full
/// vertex data on `config` the gadget is glued without vertex data too.
pub fn link_by_mtt(
    cfg: &TriangularConfiguration,
    targets: [&str; 3],
    prefix: &str,
    exec: Exec,
) -> Result<TriangularConfiguration> {
    let mtt = base_mtt(cfg.has_vertex_data(), exec)?.prefixed(prefix);
    link_with(cfg, targets, &mtt)
}

/// Three disjoint copies `d1/`, `d2/`, `d3/` of `cfg`; each triangle `t` has
/// its copies linked by a gadget under `mtt[t]/` and then removed.
pub fn tripartite_reduction(cfg: &TriangularConfiguration, w: &Weighting, exec: Exec) -> Result<ReductionResult> {
    let with_vertices = cfg.has_vertex_data();
    let source = if with_vertices {
        cfg.clone()
    } else {
        cfg.without_vertex_data()
    };
    source.index()?;
    let base = base_mtt(with_vertices, exec)?;
    let copies: Vec<TriangularConfiguration> = (1..=3).map(|i| source.prefixed(&format!("d{i}/"))).collect();
    let mut current = compose(&copies, &[])?;

    let mut tripartition = EdgeTripartition::new();
    for (i, copy) in copies.iter().enumerate() {
        for e in copy.edge_ids() {
            tripartition.set(e, i as u8 + 1);
        }
    }
    let mut weights = Weighting::unit();
    let mut blocks = BTreeMap::new();
    let mut removed = Vec::new();
    for t in source.triangle_ids() {
        let prefix = format!("mtt[{t}]/");
        let mtt = base.prefixed(&prefix);
        let targets = [format!("d1/{t}"), format!("d2/{t}"), format!("d3/{t}")];
        current = link_with(&current, [&targets[0], &targets[1], &targets[2]], &mtt)?;
        removed.extend(targets);

        let end_edges = mtt.end_edges();
        for (e, c) in mtt.tripartition().iter() {
            if !end_edges.contains(e) {
                tripartition.set(e, c);
            }
        }
        let m1 = mtt.matching("M^1").expect("named").clone();
        let m0 = mtt.matching("M^0").expect("named").clone();
        let designated = m1.triangles().next().expect("M^1 is nonempty").to_string();
        for tri in mtt.config().triangle_ids() {
            weights.set(tri, if tri == designated { w.get(t) } else { 0 });
        }
        blocks.insert(
            t.to_string(),
            Block {
                prefix,
                triangles: mtt.config().triangle_ids().map(str::to_string).collect(),
                m1,
                m0,
                designated,
            },
        );
    }
    let config = current.without_triangles(removed.iter().map(String::as_str));
    Ok(ReductionResult {
        config,
        weights,
        tripartition,
        blocks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Polynomial;
    use crate::complex::{check_edge_tripartition, perfect_matching_polynomial};

    fn reduce_and_compare(cfg: &TriangularConfiguration, w: &Weighting) -> (Polynomial, ReductionResult) {
        let p = perfect_matching_polynomial(cfg, w, Exec::Sequential).unwrap();
        let r = tripartite_reduction(cfg, w, Exec::Parallel).unwrap();
        check_edge_tripartition(&r.config, &r.tripartition).unwrap();
        let q = perfect_matching_polynomial(&r.config, &r.weights, Exec::Parallel).unwrap();
        assert_eq!(p, q);
        (p, r)
    }

    #[test]
    fn single_triangle() {
        let cfg = TriangularConfiguration::from_faces(&[("t", ["0", "1", "2"])]);
        let w: Weighting = [("t".to_string(), 3)].into_iter().collect();
        let (p, r) = reduce_and_compare(&cfg, &w);
        assert_eq!(p, Polynomial::x_pow(3));
        assert_eq!(r.config.n_triangles(), 23);
        assert_eq!(r.config.n_edges(), 3 * 3 + 30);
        let fm = r.forward(&Matching::new(["t"])).unwrap();
        assert_eq!(fm.weight(&r.weights), 3);
    }

    #[test]
    fn shared_edge_and_disjoint_pairs() {
        let bowtie = TriangularConfiguration::from_faces(&[("s", ["0", "1", "2"]), ("t", ["1", "2", "3"])]);
        assert!(reduce_and_compare(&bowtie, &Weighting::unit()).0.is_empty());
        let two = TriangularConfiguration::from_faces(&[("s", ["0", "1", "2"]), ("t", ["3", "4", "5"])]);
        assert_eq!(reduce_and_compare(&two, &Weighting::unit()).0, Polynomial::x_pow(2));
    }

    #[test]
    fn without_vertex_data() {
        let mut cfg = TriangularConfiguration::new();
        for e in ["a", "b", "c"] {
            cfg.add_edge(e, None);
        }
        cfg.add_triangle("t", ["a", "b", "c"]);
        let (_, r) = reduce_and_compare(&cfg, &Weighting::unit());
        assert!(r.config.vertices().next().is_none());
    }

    #[test]
    fn one_block_is_one_link() {
        let cfg = TriangularConfiguration::from_faces(&[("t", ["0", "1", "2"])]);
        let r = tripartite_reduction(&cfg, &Weighting::unit(), Exec::Sequential).unwrap();
        let copies: Vec<_> = (1..=3).map(|i| cfg.prefixed(&format!("d{i}/"))).collect();
        let union = compose(&copies, &[]).unwrap();
        let linked = link_by_mtt(&union, ["d1/t", "d2/t", "d3/t"], "mtt[t]/", Exec::Sequential).unwrap();
        assert_eq!(linked.n_triangles(), 3 + 23);
        assert_eq!(linked.n_edges(), union.n_edges() + 39 - 9);
        assert_eq!(linked.without_triangles(["d1/t", "d2/t", "d3/t"]), r.config);
    }

    #[test]
    fn link_rejects_overlapping_targets() {
        let cfg = TriangularConfiguration::from_faces(&[
            ("r", ["0", "1", "2"]),
            ("s", ["3", "4", "5"]),
            ("t", ["6", "7", "8"]),
        ]);
        assert!(matches!(
            link_by_mtt(&cfg, ["r", "r", "t"], "m/", Exec::Sequential),
            Err(Error::Composition(_))
        ));
        assert!(matches!(
            link_by_mtt(&cfg, ["r", "s", "x"], "m/", Exec::Sequential),
            Err(Error::UnknownId(_))
        ));
    }
}
