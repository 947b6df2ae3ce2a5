use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::polytope::scenario::Scenario;

/// The correlator vector of one deterministic ±1 assignment.
///
/// Entry `(i, j)` is the product of party A's assignment for setting `i`
/// and party B's for setting `j`, so the entries always carry a rank-1 sign
/// structure.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CorrelationVertex {
    correlators: Vec<i8>,
}

impl CorrelationVertex {
    pub fn correlators(&self) -> &[i8] {
        &self.correlators
    }

    pub fn as_i64(&self) -> Vec<i64> {
        self.correlators.iter().map(|&c| i64::from(c)).collect()
    }
}

/// All distinct correlator vectors over the `2^(settings_a + settings_b)`
/// deterministic assignments. The global sign flip of both parties leaves
/// every product unchanged, so assignments collapse pairwise.
pub fn enumerate_vertices(scenario: &Scenario) -> Vec<CorrelationVertex> {
    let sa = scenario.settings_a();
    let sb = scenario.settings_b();
    let mut distinct = BTreeSet::new();
    for assignment in 0..(1u32 << (sa + sb)) {
        let sign = |bit: usize| -> i8 {
            if assignment >> bit & 1 == 1 {
                -1
            } else {
                1
            }
        };
        let mut correlators = Vec::with_capacity(sa * sb);
        for i in 0..sa {
            for j in 0..sb {
                correlators.push(sign(i) * sign(sa + j));
            }
        }
        distinct.insert(CorrelationVertex { correlators });
    }
    distinct.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_correlator_scenario() {
        let vertices = enumerate_vertices(&Scenario::new(1, 1).unwrap());
        assert_eq!(vertices.len(), 2);
        assert_eq!(vertices[0].correlators(), &[-1]);
        assert_eq!(vertices[1].correlators(), &[1]);
    }

    #[test]
    fn chsh_scenario_has_eight_vertices() {
        let vertices = enumerate_vertices(&Scenario::chsh());
        assert_eq!(vertices.len(), 8);
    }

    #[test]
    fn chsh_vertices_have_even_sign_parity() {
        for vertex in enumerate_vertices(&Scenario::chsh()) {
            let product: i64 = vertex.as_i64().iter().product();
            assert_eq!(product, 1, "vertex {:?}", vertex.correlators());
        }
    }

    #[test]
    fn rank_one_sign_structure() {
        // Every vertex of a 2x3 scenario factors as an outer product of sign
        // vectors.
        let scenario = Scenario::new(2, 3).unwrap();
        for vertex in enumerate_vertices(&scenario) {
            let v = vertex.correlators();
            // Normalize by the first row to recover party B's signs, then
            // check every row is ± that row.
            for i in 0..2 {
                let ratio = v[scenario.index(i, 0)] * v[scenario.index(0, 0)];
                for j in 0..3 {
                    assert_eq!(
                        v[scenario.index(i, j)],
                        ratio * v[scenario.index(0, j)]
                    );
                }
            }
        }
    }
}
