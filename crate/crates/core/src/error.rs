use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("relation table needs at least 2 points, got {0}")]
    TooFewPoints(usize),

    #[error("row {row} has {len} entries, expected {n}")]
    RaggedTable { row: usize, len: usize, n: usize },

    #[error("entry ({x},{y}) = {value} exceeds class {d}")]
    RelationOutOfRange { x: usize, y: usize, value: usize, d: usize },

    #[error("axiom 1 fails at ({x},{y}): relation 0 must be exactly the diagonal")]
    BadDiagonal { x: usize, y: usize },

    #[error("relation is not symmetric at ({x},{y})")]
    NotSymmetric { x: usize, y: usize },

    #[error("relation {0} is empty")]
    EmptyRelation(usize),

    #[error(
        "not an association scheme: p_{{{i},{j}}}^{k} is {first_count} at {first:?} but {second_count} at {second:?}"
    )]
    NotAScheme {
        i: usize,
        j: usize,
        k: usize,
        first: (usize, usize),
        first_count: usize,
        second: (usize, usize),
        second_count: usize,
    },

    #[error("adjacency matrix is invalid: {0}")]
    BadAdjacency(String),

    #[error("graph is disconnected: no path from {0} to {1}")]
    Disconnected(usize, usize),

    #[error("no seed within {attempts} attempts split the algebra into {expected} eigenspaces (last: {found})")]
    DegenerateSplit { expected: usize, found: usize, attempts: u32 },

    #[error("Krein parameter q_{{{i},{j}}}^{k} = {value:e} is negative beyond tolerance")]
    KreinViolation { i: usize, j: usize, k: usize, value: f64 },

    #[error("class d = {0} is too small; d >= 2 is required")]
    ClassTooSmall(usize),

    #[error("index {index} out of range 1..={d}")]
    IndexOutOfRange { index: usize, d: usize },

    #[error("nodes {0} and {1} coincide within tolerance")]
    DegenerateNodes(usize, usize),

    #[error("exponent {j} must be below the node count {s}")]
    ExponentTooLarge { j: usize, s: usize },

    #[error("values at positions {0} and {1} are not distinct within tolerance")]
    NotDistinct(usize, usize),

    #[error("witness index is ambiguous: both {0} and {1} match")]
    AmbiguousWitness(usize, usize),

    #[error("scheme would have {size} points, above the cap of {cap}")]
    TooLarge { size: usize, cap: usize },

    #[error("invalid catalog parameters: {0}")]
    BadParameters(String),

    #[error("unknown catalog entry `{0}`")]
    UnknownName(String),

    #[error("parse error at line {line}, field `{field}`: {message}")]
    Parse { line: usize, field: String, message: String },

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
