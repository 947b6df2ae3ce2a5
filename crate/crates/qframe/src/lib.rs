//! Quantum correlations as operational resources for building space-time
//! frames.
//!
//! The crate bundles four related toolkits plus the plumbing to drive them
//! reproducibly:
//!
//! - [`hilbert`] — exact complex state-vector algebra for up to eight qubits:
//!   basis kets, tensor products, the Bell basis (standard and magic phase
//!   conventions), subsystem permutation, projective measurement, and singlet
//!   spin-correlation expectations.
//! - [`swap`] — four-qubit products of Bell pairs expanded in the outer/inner
//!   pair bases, verification of the decomposition identities, Bell-state
//!   measurement with postselection, and timeline-driven (delayed-choice)
//!   swapping runs.
//! - [`polytope`] — classical correlation polytopes for bipartite ±1-outcome
//!   scenarios: exact vertex enumeration, facet computation by integer hull,
//!   classical bounds, and quantum maximization of correlation functionals
//!   over singlet measurement settings.
//! - [`frame`] — recovery of the relative orientation of two observers'
//!   measurement triads purely from singlet correlation statistics.
//! - [`sync`] — a deterministic discrete-event simulator for radar
//!   (round-trip) coordinates, pluggable bipartite correlation boxes, a
//!   no-signaling audit, and channel-capacity estimates for signaling
//!   attempts through correlation resources.
//!
//! Everything stochastic takes an explicit seed ([`rng::Seed`]) and is
//! bit-reproducible. The primary interface is the `examples/` directory (one
//! runnable example per capability); the thin `qframe` binary exposes the
//! same pipelines as subcommands emitting JSON/CSV reports (see [`report`]).

pub mod error;
pub mod rng;

pub mod hilbert;
pub mod spacetime;

pub mod polytope;
pub mod swap;

pub use error::{Error, Result};
