//! Exact polynomial arithmetic, GF(p) linear algebra and binary-code weight
//! enumerators.

pub mod code;
pub mod gf;
pub mod poly;

pub use code::{fold_enumerator, span_weight_enumerator, weight_enumerator, BinaryCode};
pub use gf::{nullspace as gf_p_nullspace, rank as gf_p_rank};
pub use poly::Polynomial;
