//! Crate-wide error type.

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("qubit capacity exceeded: {requested} qubits (limit {limit})")]
    CapacityExceeded { requested: usize, limit: usize },

    #[error("empty bitstring")]
    EmptyBitstring,

    #[error("bit value {value} at position {position} is not 0 or 1")]
    InvalidBit { position: usize, value: u8 },

    #[error("amplitude vector of length {len} is not a power of two")]
    InvalidAmplitudeCount { len: usize },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("permutation {0:?} is not a bijection on the qubit indices")]
    InvalidPermutation(Vec<usize>),

    #[error("direction ({0}, {1}, {2}) is not a unit vector")]
    NonUnitDirection(f64, f64, f64),

    #[error("non-finite component in spacetime label")]
    NonFiniteLabel,

    #[error("projector set incomplete: deviation from identity {deviation:.3e}")]
    IncompleteProjectors { deviation: f64 },

    #[error("projectors {i} and {j} are not orthogonal: overlap {overlap:.3e}")]
    NonOrthogonalProjectors { i: usize, j: usize, overlap: f64 },

    #[error("cannot normalize a zero state")]
    ZeroState,

    #[error("pair indices {outer:?}/{inner:?} do not partition the four qubits")]
    NotAPartition { outer: (usize, usize), inner: (usize, usize) },

    #[error("postselection label occurs with probability {probability:.3e}; nothing to keep")]
    EmptyPostselection { probability: f64 },

    #[error("timeline event {index}: {reason}")]
    MalformedTimeline { index: usize, reason: String },

    #[error("action on unprepared particle {particle}")]
    UnpreparedParticle { particle: usize },

    #[error("scenario {settings_a}x{settings_b} exceeds the desk-scale limit ({limit})")]
    ScenarioTooLarge { settings_a: usize, settings_b: usize, limit: usize },

    #[error("hull enumeration supports dimension <= {limit}, got {dim}")]
    HullDimensionTooLarge { dim: usize, limit: usize },

    #[error("degenerate vertex set: affine dimension 0")]
    DegenerateVertexSet,

    #[error("functional has {functional} coefficients but the scenario has {scenario} correlators")]
    FunctionalMismatch { functional: usize, scenario: usize },

    #[error("expected {expected} spacetime labels (one per measurement slot), got {got}")]
    LabelCountMismatch { expected: usize, got: usize },

    #[error("correlation matrix is rank-deficient below 2; rotation fit is ambiguous")]
    AmbiguousFit,

    #[error("observers {a} and {b} coincide")]
    CoincidentObservers { a: String, b: String },

    #[error("unknown observer id {0}")]
    UnknownObserver(String),

    #[error("world is {dimension}-dimensional but observer {id} has out-of-plane position")]
    DimensionViolation { dimension: u8, id: String },

    #[error("observers must have distinct positions (ids {a}, {b})")]
    DuplicatePosition { a: String, b: String },

    #[error("event at t={time} is unreachable by a round trip started at t>=0 (needs emission at t={required})")]
    UnreachableEvent { time: f64, required: f64 },

    #[error("audit needs at least {minimum} samples per cell, got {got}")]
    TooFewSamples { got: u64, minimum: u64 },

    #[error("scenario file error: {0}")]
    Scenario(String),

    #[error("report failed schema validation: {0}")]
    SchemaViolation(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
