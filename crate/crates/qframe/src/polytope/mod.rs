//! Classical correlation polytopes for bipartite two-outcome scenarios, and
//! quantum values of correlation functionals over singlet measurements.
//!
//! Vertices are the correlator vectors of deterministic ±1 assignments;
//! their convex hull is computed exactly (integer arithmetic throughout), so
//! facet classification never rests on floating-point sign decisions. The
//! quantum side maximizes `Σ c_ij E(a_i, b_j)` over measurement directions
//! with the shared state fixed to the singlet.

mod hull;
mod quantum;
mod scenario;
mod vertices;

pub use hull::{
    enumerate_vertices_from_facets, hull_facets, hull_facets_of_points, FacetInequality,
    Rational,
};
pub use quantum::{
    classical_bound, quantum_ceiling, quantum_maximize, OptimizerConfig, QuantumMaximum,
    RestartTrace,
};
pub use scenario::{relabel_temporal, AnnotatedScenario, CorrelationFunctional, Scenario};
pub use vertices::{enumerate_vertices, CorrelationVertex};
