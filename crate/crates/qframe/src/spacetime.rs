//! Spacetime coordinate labels shared by the swap timelines and the
//! synchronization simulator. Units are geometric: signal speed 1, so
//! `x1..x3` carry length units and `x4` time units.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A coordinate 4-tuple `(x1, x2, x3; x4 = t)` with finite components.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawLabel", into = "RawLabel")]
pub struct SpacetimeLabel {
    pub x1: f64,
    pub x2: f64,
    pub x3: f64,
    /// Time component.
    pub x4: f64,
}

#[derive(Serialize, Deserialize)]
struct RawLabel(f64, f64, f64, f64);

impl TryFrom<RawLabel> for SpacetimeLabel {
    type Error = Error;
    fn try_from(raw: RawLabel) -> Result<Self> {
        SpacetimeLabel::new(raw.0, raw.1, raw.2, raw.3)
    }
}

impl From<SpacetimeLabel> for RawLabel {
    fn from(l: SpacetimeLabel) -> Self {
        RawLabel(l.x1, l.x2, l.x3, l.x4)
    }
}

impl SpacetimeLabel {
    pub fn new(x1: f64, x2: f64, x3: f64, x4: f64) -> Result<Self> {
        if [x1, x2, x3, x4].iter().all(|c| c.is_finite()) {
            Ok(SpacetimeLabel { x1, x2, x3, x4 })
        } else {
            Err(Error::NonFiniteLabel)
        }
    }

    /// Label for a purely spatial point at time `t`.
    pub fn at(position: [f64; 3], t: f64) -> Result<Self> {
        Self::new(position[0], position[1], position[2], t)
    }

    pub fn spatial(&self) -> [f64; 3] {
        [self.x1, self.x2, self.x3]
    }

    pub fn time(&self) -> f64 {
        self.x4
    }

    /// Euclidean distance between the spatial parts.
    pub fn spatial_distance(&self, other: &SpacetimeLabel) -> f64 {
        let dx = self.x1 - other.x1;
        let dy = self.x2 - other.x2;
        let dz = self.x3 - other.x3;
        (dx * dx + dy * dy + dz * dz).sqrt()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_finite() {
        assert!(SpacetimeLabel::new(0.0, 0.0, f64::NAN, 0.0).is_err());
        assert!(SpacetimeLabel::new(f64::INFINITY, 0.0, 0.0, 0.0).is_err());
    }

    #[test]
    fn serializes_as_coordinate_tuple() {
        let label = SpacetimeLabel::new(1.0, 2.0, 3.0, 4.0).unwrap();
        let json = serde_json::to_string(&label).unwrap();
        assert_eq!(json, "[1.0,2.0,3.0,4.0]");
        let back: SpacetimeLabel = serde_json::from_str(&json).unwrap();
        assert_eq!(back, label);
    }

    #[test]
    fn deserialization_enforces_finiteness() {
        let bad = "[1.0,2.0,null,0.0]";
        assert!(serde_json::from_str::<SpacetimeLabel>(bad).is_err());
    }
}
