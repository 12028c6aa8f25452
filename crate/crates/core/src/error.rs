use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid configuration: {0}")]
    InvalidConfiguration(String),

    #[error("not a matching: triangles {0} and {1} share edge {2}")]
    NotAMatching(String, String, String),

    #[error("unknown id: {0}")]
    UnknownId(String),

    #[error("configuration has no vertex data")]
    MissingVertexData,

    #[error("inconsistent pins: {0}")]
    InconsistentPins(String),

    #[error("composition failed: {0}")]
    Composition(String),

    #[error("gadget failed certification: {0}")]
    Certification(String),

    #[error("{what} exceeds guard: {value} > {limit}")]
    Guard {
        what: &'static str,
        value: u128,
        limit: u128,
    },

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("invalid tripartition: {0}")]
    InvalidTripartition(String),

    #[error("no value supplied for triangle {0}")]
    MissingValue(String),

    #[error("missing sign for projection edge ({0}, {1})")]
    MissingSign(usize, usize),

    #[error("fold: exponent {exponent} has odd residue {residue} modulo {modulus}")]
    OddResidue {
        exponent: u64,
        residue: u64,
        modulus: u64,
    },

    #[error("linearly dependent generator rows")]
    DependentRows,

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Stable snake_case name of the variant, for machine-readable reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidConfiguration(_) => "invalid_configuration",
            Error::NotAMatching(..) => "not_a_matching",
            Error::UnknownId(_) => "unknown_id",
            Error::MissingVertexData => "missing_vertex_data",
            Error::InconsistentPins(_) => "inconsistent_pins",
            Error::Composition(_) => "composition",
            Error::Certification(_) => "certification",
            Error::Guard { .. } => "guard",
            Error::Dimension(_) => "dimension",
            Error::InvalidTripartition(_) => "invalid_tripartition",
            Error::MissingValue(_) => "missing_value",
            Error::MissingSign(..) => "missing_sign",
            Error::OddResidue { .. } => "odd_residue",
            Error::DependentRows => "dependent_rows",
            Error::NotPrime(_) => "not_prime",
            Error::Parse(_) => "parse",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn guard(what: &'static str, value: u128, limit: u128) -> Result<()> {
    if value > limit {
        Err(Error::Guard { what, value, limit })
    } else {
        Ok(())
    }
}
