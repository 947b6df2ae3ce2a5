use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::spacetime::SpacetimeLabel;

/// Desk-scale cap on `settings_a × settings_b` for exhaustive enumeration.
pub const DESK_LIMIT: usize = 16;

/// A bipartite measurement scenario: `settings_a`/`settings_b` choices per
/// party, two outcomes (±1) each. Correlators are indexed row-major:
/// `E(i, j)` sits at `i * settings_b + j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawScenario", into = "RawScenario")]
pub struct Scenario {
    settings_a: usize,
    settings_b: usize,
}

#[derive(Serialize, Deserialize)]
struct RawScenario {
    settings_a: usize,
    settings_b: usize,
}

impl TryFrom<RawScenario> for Scenario {
    type Error = Error;
    fn try_from(raw: RawScenario) -> Result<Self> {
        Scenario::new(raw.settings_a, raw.settings_b)
    }
}

impl From<Scenario> for RawScenario {
    fn from(s: Scenario) -> Self {
        RawScenario {
            settings_a: s.settings_a,
            settings_b: s.settings_b,
        }
    }
}

impl Scenario {
    pub fn new(settings_a: usize, settings_b: usize) -> Result<Self> {
        if settings_a == 0 || settings_b == 0 || settings_a * settings_b > DESK_LIMIT {
            return Err(Error::ScenarioTooLarge {
                settings_a,
                settings_b,
                limit: DESK_LIMIT,
            });
        }
        Ok(Scenario {
            settings_a,
            settings_b,
        })
    }

    pub fn chsh() -> Self {
        Scenario {
            settings_a: 2,
            settings_b: 2,
        }
    }

    pub fn settings_a(&self) -> usize {
        self.settings_a
    }

    pub fn settings_b(&self) -> usize {
        self.settings_b
    }

    /// Number of correlators, i.e. the ambient dimension of the polytope.
    pub fn dim(&self) -> usize {
        self.settings_a * self.settings_b
    }

    /// Number of measurement slots across both parties.
    pub fn slots(&self) -> usize {
        self.settings_a + self.settings_b
    }

    pub fn index(&self, a: usize, b: usize) -> usize {
        a * self.settings_b + b
    }
}

/// A linear functional over correlators, e.g. CHSH = `E11+E12+E21−E22`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CorrelationFunctional {
    pub coefficients: Vec<f64>,
}

impl CorrelationFunctional {
    pub fn new(coefficients: Vec<f64>) -> Self {
        CorrelationFunctional { coefficients }
    }

    /// The CHSH functional on the 2×2 scenario.
    pub fn chsh() -> Self {
        CorrelationFunctional {
            coefficients: vec![1.0, 1.0, 1.0, -1.0],
        }
    }

    pub fn dim(&self) -> usize {
        self.coefficients.len()
    }

    pub fn matches(&self, scenario: &Scenario) -> Result<()> {
        if self.dim() != scenario.dim() {
            return Err(Error::FunctionalMismatch {
                functional: self.dim(),
                scenario: scenario.dim(),
            });
        }
        Ok(())
    }
}

/// A scenario whose measurement slots carry spacetime labels. All polytope
/// and bound computations ignore the labels; settings separated in time
/// behave exactly like settings separated in space.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AnnotatedScenario {
    pub scenario: Scenario,
    /// One label per slot: the `settings_a` labels of party A first, then
    /// the `settings_b` labels of party B.
    pub labels: Vec<SpacetimeLabel>,
}

/// Attach spacetime labels to the measurement slots of a scenario.
pub fn relabel_temporal(
    scenario: Scenario,
    labels: Vec<SpacetimeLabel>,
) -> Result<AnnotatedScenario> {
    if labels.len() != scenario.slots() {
        return Err(Error::LabelCountMismatch {
            expected: scenario.slots(),
            got: labels.len(),
        });
    }
    Ok(AnnotatedScenario { scenario, labels })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_oversized_scenarios() {
        assert!(Scenario::new(5, 4).is_err());
        assert!(Scenario::new(0, 1).is_err());
        assert!(Scenario::new(4, 4).is_ok());
    }

    #[test]
    fn functional_dimension_check() {
        let chsh = CorrelationFunctional::chsh();
        assert!(chsh.matches(&Scenario::chsh()).is_ok());
        assert!(chsh.matches(&Scenario::new(1, 1).unwrap()).is_err());
    }

    #[test]
    fn relabeling_needs_one_label_per_slot() {
        let scenario = Scenario::chsh();
        let label = SpacetimeLabel::new(0.0, 0.0, 0.0, 1.0).unwrap();
        assert!(relabel_temporal(scenario, vec![label; 4]).is_ok());
        assert!(matches!(
            relabel_temporal(scenario, vec![label; 3]),
            Err(Error::LabelCountMismatch { .. })
        ));
    }
}
