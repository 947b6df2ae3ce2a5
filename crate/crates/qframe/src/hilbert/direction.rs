use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hilbert::bell::{bell_state, BellKind, BellLabel};
use crate::hilbert::operator::Operator;
use crate::hilbert::EXACT_TOL;

/// A unit vector in R³ naming a measurement direction.
///
/// The unit-norm invariant is enforced at construction, so downstream
/// operations never see a non-unit direction.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "[f64; 3]", into = "[f64; 3]")]
pub struct Direction([f64; 3]);

impl TryFrom<[f64; 3]> for Direction {
    type Error = Error;
    fn try_from(v: [f64; 3]) -> Result<Self> {
        Direction::new(v[0], v[1], v[2])
    }
}

impl From<Direction> for [f64; 3] {
    fn from(d: Direction) -> Self {
        d.0
    }
}

impl Direction {
    pub const X: Direction = Direction([1.0, 0.0, 0.0]);
    pub const Y: Direction = Direction([0.0, 1.0, 0.0]);
    pub const Z: Direction = Direction([0.0, 0.0, 1.0]);

    /// Accepts only unit vectors (within `1e-12`).
    pub fn new(x: f64, y: f64, z: f64) -> Result<Self> {
        let norm = (x * x + y * y + z * z).sqrt();
        if !norm.is_finite() || (norm - 1.0).abs() > EXACT_TOL {
            return Err(Error::NonUnitDirection(x, y, z));
        }
        Ok(Direction([x, y, z]))
    }

    /// Normalizes an arbitrary nonzero vector.
    pub fn normalized(x: f64, y: f64, z: f64) -> Result<Self> {
        let norm = (x * x + y * y + z * z).sqrt();
        if !norm.is_finite() || norm == 0.0 {
            return Err(Error::NonUnitDirection(x, y, z));
        }
        Ok(Direction([x / norm, y / norm, z / norm]))
    }

    pub fn components(&self) -> [f64; 3] {
        self.0
    }

    pub fn x(&self) -> f64 {
        self.0[0]
    }

    pub fn y(&self) -> f64 {
        self.0[1]
    }

    pub fn z(&self) -> f64 {
        self.0[2]
    }

    pub fn dot(&self, other: &Direction) -> f64 {
        self.0[0] * other.0[0] + self.0[1] * other.0[1] + self.0[2] * other.0[2]
    }

    pub fn cross(&self, other: &Direction) -> Result<Direction> {
        let [ax, ay, az] = self.0;
        let [bx, by, bz] = other.0;
        Direction::normalized(ay * bz - az * by, az * bx - ax * bz, ax * by - ay * bx)
    }

    pub fn negated(&self) -> Direction {
        Direction([-self.0[0], -self.0[1], -self.0[2]])
    }

    /// Angle to another direction, in `[0, π]`.
    pub fn angle_to(&self, other: &Direction) -> f64 {
        self.dot(other).clamp(-1.0, 1.0).acos()
    }

    /// The spin observable `a·σ` for this direction.
    pub fn spin_operator(&self) -> Operator {
        let [x, y, z] = self.0;
        let sx = Operator::pauli_x().scaled(Complex64::new(x, 0.0));
        let sy = Operator::pauli_y().scaled(Complex64::new(y, 0.0));
        let sz = Operator::pauli_z().scaled(Complex64::new(z, 0.0));
        sx.add(&sy).and_then(|s| s.add(&sz)).expect("2x2 operators")
    }

    /// Rotate by `angle` radians about `axis` (Rodrigues formula).
    pub fn rotated_about(&self, axis: &Direction, angle: f64) -> Direction {
        let (sin, cos) = angle.sin_cos();
        let [vx, vy, vz] = self.0;
        let [kx, ky, kz] = axis.0;
        let dot = self.dot(axis);
        let cx = ky * vz - kz * vy;
        let cy = kz * vx - kx * vz;
        let cz = kx * vy - ky * vx;
        let one_minus = 1.0 - cos;
        Direction::normalized(
            vx * cos + cx * sin + kx * dot * one_minus,
            vy * cos + cy * sin + ky * dot * one_minus,
            vz * cos + cz * sin + kz * dot * one_minus,
        )
        .expect("rotation preserves the norm")
    }
}

/// Singlet spin correlation `E(a, b) = ⟨Ψ−| (a·σ)⊗(b·σ) |Ψ−⟩`.
///
/// Computed from the state vector and Pauli observables; analytically this
/// equals `−a·b` (the cosine law), which the tests check rather than assume.
pub fn singlet_correlation(a: Direction, b: Direction) -> f64 {
    let singlet = bell_state(BellLabel::standard(BellKind::PsiMinus));
    let observable = a.spin_operator().kron(&b.spin_operator());
    observable
        .expectation(&singlet)
        .expect("4x4 observable on a 2-qubit state")
        .re
}
