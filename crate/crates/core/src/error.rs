use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("graph is not chordal; chordless cycle {}", .witness.join(" - "))]
    NotChordal { witness: Vec<String> },

    #[error("vertex order is not a perfect elimination ordering (vertex {vertex} fails)")]
    NotPeo { vertex: String },

    #[error("{what}: size limit {cap} exceeded")]
    SizeLimitExceeded { what: &'static str, cap: usize },

    #[error("{what}: cap {cap} exceeded")]
    CapExceeded { what: &'static str, cap: usize },

    #[error("too many variables ({0}); at most 128 are supported")]
    TooManyVariables(usize),

    #[error("polynomial refers to a variable outside the variable table")]
    VarTableMismatch,

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("genus must be at least 1 for projective curves")]
    GenusZeroUnsupported,

    #[error("ideal has no quadratic Gröbner basis; minimal irreducible degree {0}")]
    NotQuadratic(u32),

    #[error("presentation has non-quadratic relations; reduce to a quadratic basis first")]
    NotQuadraticInput,

    #[error("Hilbert series identity fails in degree {0}")]
    HilbertIdentityFails(usize),

    #[error("dual relations are not antisymmetric; input algebra is not graded-commutative")]
    NotAntisymmetric,

    #[error("malformed quadratic-linear algebra: {0}")]
    MalformedQla(String),

    #[error("invariant `{name}` violated: {detail}")]
    Invariant { name: String, detail: String },
}

impl Error {
    pub(crate) fn invariant(name: &str, detail: impl Into<String>) -> Self {
        Error::Invariant { name: name.to_string(), detail: detail.into() }
    }
}
