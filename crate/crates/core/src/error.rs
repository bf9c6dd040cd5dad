use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("syntax error on line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("cycle detected at edge ({0}, {1})")]
    Cycle(usize, usize),
    #[error("vertex label {label} out of range for {vertex_count} vertices")]
    LabelOutOfRange { label: usize, vertex_count: usize },
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("forests with more than {max} vertices are not supported (got {got})")]
    TooLarge { got: usize, max: usize },
    #[error("invalid forest family: {0}")]
    InvalidFamily(String),
    #[error("not a permutation of 0..{0}")]
    NotAPermutation(usize),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("subspace is not contained in the ambient subspace")]
    NotASubspace,
    #[error("chain at ({q}, {e}) is not D-closed")]
    NotClosed { q: usize, e: usize },
    #[error("page index must be at least 1")]
    InvalidPage,
    #[error("Δ(1)={0}: link, comparison not defined")]
    Link(i64),
    #[error("partial sums of Δ leave {{0,1}} at degree {0}: not an algebraic-knot polynomial")]
    NotAlgebraic(usize),
    #[error("Δ_g has coefficient {coefficient} at q^{q} t^{t}; expected ±1")]
    RecipeViolation { q: u32, t: u32, coefficient: i64 },
    #[error("forest is disconnected; comparison is only defined for trees")]
    Disconnected,
    #[error("invalid configuration: {0}")]
    InvalidConfiguration(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error("integer overflow in exact arithmetic")]
    Overflow,
}

pub type Result<T> = std::result::Result<T, Error>;
