use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Hard capacity: 8 qubits, i.e. at most 256 amplitudes.
pub const MAX_QUBITS: usize = 8;

/// A pure state of `num_qubits` qubits as a dense complex amplitude vector.
///
/// Amplitudes are indexed big-endian: qubit 0 is the leftmost tensor factor
/// and contributes the most significant index bit.
///
/// Serializes as `{num_qubits, amplitudes: [[re, im], ...]}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawState", into = "RawState")]
pub struct StateVector {
    num_qubits: usize,
    amplitudes: Vec<Complex64>,
}

#[derive(Serialize, Deserialize)]
struct RawState {
    num_qubits: usize,
    amplitudes: Vec<[f64; 2]>,
}

impl TryFrom<RawState> for StateVector {
    type Error = Error;
    fn try_from(raw: RawState) -> Result<Self> {
        let amps: Vec<Complex64> = raw
            .amplitudes
            .iter()
            .map(|&[re, im]| Complex64::new(re, im))
            .collect();
        let state = StateVector::from_amplitudes(amps)?;
        if state.num_qubits != raw.num_qubits {
            return Err(Error::DimensionMismatch {
                left: 1 << raw.num_qubits,
                right: state.dim(),
            });
        }
        Ok(state)
    }
}

impl From<StateVector> for RawState {
    fn from(state: StateVector) -> Self {
        RawState {
            num_qubits: state.num_qubits,
            amplitudes: state.amplitudes.iter().map(|a| [a.re, a.im]).collect(),
        }
    }
}

impl StateVector {
    /// Build a state from a dense amplitude vector of length `2^n`, n ≥ 1.
    pub fn from_amplitudes(amplitudes: Vec<Complex64>) -> Result<Self> {
        let len = amplitudes.len();
        if len < 2 || !len.is_power_of_two() {
            return Err(Error::InvalidAmplitudeCount { len });
        }
        let num_qubits = len.trailing_zeros() as usize;
        if num_qubits > MAX_QUBITS {
            return Err(Error::CapacityExceeded {
                requested: num_qubits,
                limit: MAX_QUBITS,
            });
        }
        Ok(StateVector {
            num_qubits,
            amplitudes,
        })
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    /// Dimension of the amplitude vector (`2^num_qubits`).
    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn amplitude(&self, index: usize) -> Complex64 {
        self.amplitudes[index]
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes
            .iter()
            .map(|a| a.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    pub fn is_normalized(&self, tol: f64) -> bool {
        (self.norm() - 1.0).abs() <= tol
    }

    pub fn normalized(&self) -> Result<StateVector> {
        let n = self.norm();
        if n == 0.0 {
            return Err(Error::ZeroState);
        }
        let inv = 1.0 / n;
        Ok(StateVector {
            num_qubits: self.num_qubits,
            amplitudes: self.amplitudes.iter().map(|a| a * inv).collect(),
        })
    }

    /// Inner product `⟨self|other⟩` (conjugate-linear in `self`).
    pub fn inner(&self, other: &StateVector) -> Result<Complex64> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                left: self.dim(),
                right: other.dim(),
            });
        }
        Ok(self
            .amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    /// Multiply every amplitude by a phase/scalar.
    pub fn scaled(&self, factor: Complex64) -> StateVector {
        StateVector {
            num_qubits: self.num_qubits,
            amplitudes: self.amplitudes.iter().map(|a| a * factor).collect(),
        }
    }

    /// Reindex amplitudes so qubit `i` of the input sits at position
    /// `permutation[i]` of the output. Norm-preserving.
    pub fn permute_subsystems(&self, permutation: &[usize]) -> Result<StateVector> {
        let n = self.num_qubits;
        if permutation.len() != n {
            return Err(Error::InvalidPermutation(permutation.to_vec()));
        }
        let mut seen = vec![false; n];
        for &p in permutation {
            if p >= n || seen[p] {
                return Err(Error::InvalidPermutation(permutation.to_vec()));
            }
            seen[p] = true;
        }
        let mut out = vec![Complex64::new(0.0, 0.0); self.dim()];
        for (index, amp) in self.amplitudes.iter().enumerate() {
            let mut target = 0usize;
            for (qubit, &pos) in permutation.iter().enumerate() {
                let bit = (index >> (n - 1 - qubit)) & 1;
                target |= bit << (n - 1 - pos);
            }
            out[target] = *amp;
        }
        Ok(StateVector {
            num_qubits: n,
            amplitudes: out,
        })
    }
}

/// The computational-basis ket for a bitstring, first bit most significant.
pub fn basis_ket(bits: &[u8]) -> Result<StateVector> {
    if bits.is_empty() {
        return Err(Error::EmptyBitstring);
    }
    if bits.len() > MAX_QUBITS {
        return Err(Error::CapacityExceeded {
            requested: bits.len(),
            limit: MAX_QUBITS,
        });
    }
    let mut index = 0usize;
    for (position, &bit) in bits.iter().enumerate() {
        if bit > 1 {
            return Err(Error::InvalidBit {
                position,
                value: bit,
            });
        }
        index = (index << 1) | bit as usize;
    }
    let mut amplitudes = vec![Complex64::new(0.0, 0.0); 1 << bits.len()];
    amplitudes[index] = Complex64::new(1.0, 0.0);
    StateVector::from_amplitudes(amplitudes)
}

/// Kronecker product with `a` as the left (more significant) factor.
pub fn tensor(a: &StateVector, b: &StateVector) -> Result<StateVector> {
    let total = a.num_qubits() + b.num_qubits();
    if total > MAX_QUBITS {
        return Err(Error::CapacityExceeded {
            requested: total,
            limit: MAX_QUBITS,
        });
    }
    let mut amplitudes = Vec::with_capacity(a.dim() * b.dim());
    for x in a.amplitudes() {
        for y in b.amplitudes() {
            amplitudes.push(x * y);
        }
    }
    StateVector::from_amplitudes(amplitudes)
}
