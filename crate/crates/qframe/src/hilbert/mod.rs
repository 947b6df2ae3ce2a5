//! Exact complex state-vector algebra for up to [`MAX_QUBITS`] qubits.
//!
//! Conventions, fixed globally:
//! - Qubit ordering is big-endian: the leftmost ket symbol is the most
//!   significant amplitude index, so `|01⟩` is index 1 of 4.
//! - Bell states are unit-normalized (prefactor `1/√2`); see [`bell`] for the
//!   phase conventions.
//! - Exact-math checks use tolerance `1e-12`, composed operations `1e-10`.
//!
//! All values are immutable after construction and operations are pure, so
//! everything here is safe to call from many threads.

mod bell;
mod direction;
mod measure;
mod operator;
mod state;

pub use bell::{bell_state, BellKind, BellLabel, PhaseConvention};
pub use direction::{singlet_correlation, Direction};
pub use measure::{
    bell_projectors, born_probabilities, computational_projectors, measure_projective,
    qubit_projectors, spin_projectors, MeasurementOutcome,
};
pub use operator::Operator;
pub use state::{basis_ket, tensor, StateVector, MAX_QUBITS};

/// Tolerance for exact-math checks at dimension ≤ 256.
pub const EXACT_TOL: f64 = 1e-12;
/// Tolerance for composed operations (products of several exact steps).
pub const COMPOSED_TOL: f64 = 1e-10;
