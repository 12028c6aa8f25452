use std::collections::{BTreeMap, HashMap};

use super::{Ring, Tensor3};
use crate::algebra::Polynomial;
use crate::complex::{
    check_edge_tripartition, check_vertex_tripartition, EdgeTripartition, TriangularConfiguration, VertexTripartition,
    Weighting,
};
use crate::error::{Error, Result};

/// Axis positions per class: members of class `k` in canonical order.
fn axes(t: &crate::complex::Tripartition) -> HashMap<&str, (usize, usize)> {
    let mut pos = HashMap::new();
    for class in 1..=3u8 {
        for (i, id) in t.members(class).into_iter().enumerate() {
            pos.insert(id, ((class - 1) as usize, i));
        }
    }
    pos
}

fn place<'a>(
    pos: &HashMap<&str, (usize, usize)>,
    members: impl Iterator<Item = &'a String>,
) -> [usize; 3] {
    let mut idx = [0; 3];
    for m in members {
        let (axis, i) = pos[m.as_str()];
        idx[axis] = i;
    }
    idx
}

/// Entry `x^{w(t)}` at the class positions of the three edges of each
/// triangle `t`; zero-padded to a cube.
pub fn triadjacency(
    cfg: &TriangularConfiguration,
    trip: &EdgeTripartition,
    w: &Weighting,
) -> Result<Tensor3<Polynomial>> {
    cfg.index()?;
    check_edge_tripartition(cfg, trip)?;
    let side = *trip.sizes().iter().max().expect("three classes");
    let pos = axes(trip);
    let mut t = Tensor3::cube(side);
    for (id, es) in cfg.triangles() {
        t.set(place(&pos, es.iter()), Polynomial::x_pow(w.get(id)))?;
    }
    Ok(t)
}

/// Entry `values[t]` at the class positions of the three vertices of each
/// triangle `t`; zero-padded to a cube.
pub fn vertex_adjacency<R: Ring>(
    cfg: &TriangularConfiguration,
    trip: &VertexTripartition,
    values: &BTreeMap<String, R>,
) -> Result<Tensor3<R>> {
    cfg.index()?;
    check_vertex_tripartition(cfg, trip)?;
    let side = *trip.sizes().iter().max().expect("three classes");
    let pos = axes(trip);
    let mut t = Tensor3::cube(side);
    for id in cfg.triangle_ids() {
        let vs = cfg.triangle_vertices(id).expect("validated vertex data");
        let v = values.get(id).ok_or_else(|| Error::MissingValue(id.to_string()))?;
        t.set(place(&pos, vs.iter()), v.clone())?;
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::find_edge_tripartition;
    use crate::complex::Tripartition;
    use num_bigint::BigInt;

    #[test]
    fn single_triangle() {
        let mut cfg = TriangularConfiguration::new();
        for e in ["a", "b", "c"] {
            cfg.add_edge(e, None);
        }
        cfg.add_triangle("t", ["a", "b", "c"]);
        let trip = find_edge_tripartition(&cfg, &Tripartition::new()).unwrap().unwrap();
        let w: Weighting = [("t".to_string(), 2)].into_iter().collect();
        let a = triadjacency(&cfg, &trip, &w).unwrap();
        assert_eq!(a.dims(), [1, 1, 1]);
        assert_eq!(a.get([0, 0, 0]), Polynomial::x_pow(2));
    }

    #[test]
    fn unequal_classes_pad() {
        // Two triangles sharing edge "s": classes of sizes 1, 2, 2.
        let mut cfg = TriangularConfiguration::new();
        for e in ["s", "a", "b", "c", "d"] {
            cfg.add_edge(e, None);
        }
        cfg.add_triangle("t", ["s", "a", "b"]);
        cfg.add_triangle("u", ["s", "c", "d"]);
        let pins: Tripartition = [("s".to_string(), 1)].into_iter().collect();
        let trip = find_edge_tripartition(&cfg, &pins).unwrap().unwrap();
        let a = triadjacency(&cfg, &trip, &Weighting::unit()).unwrap();
        assert_eq!(a.dims(), [2, 2, 2]);
        assert!(super::super::permanent3(&a, crate::exec::Exec::Sequential).is_empty());
    }

    #[test]
    fn vertex_level() {
        let cfg = TriangularConfiguration::from_faces(&[("t", ["x", "y", "z"])]);
        let trip: Tripartition = [("x".to_string(), 1), ("y".to_string(), 2), ("z".to_string(), 3)]
            .into_iter()
            .collect();
        let vals = BTreeMap::from([("t".to_string(), BigInt::from(9))]);
        assert_eq!(vertex_adjacency(&cfg, &trip, &vals).unwrap().get([0, 0, 0]), BigInt::from(9));
        let bad: Tripartition = [("x".to_string(), 1), ("y".to_string(), 1), ("z".to_string(), 3)]
            .into_iter()
            .collect();
        assert!(matches!(
            vertex_adjacency(&cfg, &bad, &vals),
            Err(Error::InvalidTripartition(_))
        ));
        assert!(matches!(
            vertex_adjacency::<BigInt>(&cfg, &trip, &BTreeMap::new()),
            Err(Error::MissingValue(_))
        ));
    }
}
