pub mod algebra;
pub mod complex;
pub mod error;
pub mod exec;
pub mod gadgets;
pub mod json;
pub mod kasteleyn_construct;
pub mod lattice;
pub mod search;
pub mod tensor3;

pub use error::{Error, Result};
pub use exec::Exec;
