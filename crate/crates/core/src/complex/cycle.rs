use super::TriangularConfiguration;
use crate::algebra::{gf_p_nullspace, span_weight_enumerator, Polynomial};
use crate::error::Result;
use crate::exec::Exec;

/// Edge-by-triangle 0/1 incidence matrix, rows and columns in canonical id
/// order.
pub fn incidence_matrix(cfg: &TriangularConfiguration) -> Result<Vec<Vec<u64>>> {
    let idx = cfg.index()?;
    let mut m = vec![vec![0u64; idx.tri_ids.len()]; idx.edge_ids.len()];
    for (t, es) in idx.tri_edges.iter().enumerate() {
        for &e in es {
            m[e][t] = 1;
        }
    }
    Ok(m)
}

/// Weight enumerator of the kernel of the incidence matrix over GF(p), with
/// weights counted on triangles.
pub fn cycle_space_weight_enumerator(cfg: &TriangularConfiguration, p: u64, exec: Exec) -> Result<Polynomial> {
    let m = incidence_matrix(cfg)?;
    let n = cfg.n_triangles();
    let basis = gf_p_nullspace(&m, n, p)?;
    span_weight_enumerator(&basis, n, p, exec)
}
