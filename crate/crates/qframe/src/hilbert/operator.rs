use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::hilbert::state::StateVector;

/// Dense complex square matrix acting on state vectors. At dimension ≤ 256
/// dense storage is exact and cheap, which is all the desk-scale scenarios
/// need.
#[derive(Debug, Clone, PartialEq)]
pub struct Operator {
    dim: usize,
    // Row-major.
    data: Vec<Complex64>,
}

impl Operator {
    pub fn new(dim: usize, data: Vec<Complex64>) -> Result<Self> {
        if data.len() != dim * dim {
            return Err(Error::DimensionMismatch {
                left: data.len(),
                right: dim * dim,
            });
        }
        Ok(Operator { dim, data })
    }

    pub fn zeros(dim: usize) -> Self {
        Operator {
            dim,
            data: vec![Complex64::new(0.0, 0.0); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut op = Operator::zeros(dim);
        for i in 0..dim {
            op.data[i * dim + i] = Complex64::new(1.0, 0.0);
        }
        op
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, row: usize, col: usize) -> Complex64 {
        self.data[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: Complex64) {
        self.data[row * self.dim + col] = value;
    }

    /// Rank-1 projector `|state⟩⟨state|`.
    pub fn projector_onto(state: &StateVector) -> Self {
        let dim = state.dim();
        let mut op = Operator::zeros(dim);
        for i in 0..dim {
            for j in 0..dim {
                op.data[i * dim + j] = state.amplitude(i) * state.amplitude(j).conj();
            }
        }
        op
    }

    pub fn kron(&self, other: &Operator) -> Operator {
        let dim = self.dim * other.dim;
        let mut out = Operator::zeros(dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                let a = self.entry(i, j);
                if a == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for k in 0..other.dim {
                    for l in 0..other.dim {
                        out.data[(i * other.dim + k) * dim + (j * other.dim + l)] =
                            a * other.entry(k, l);
                    }
                }
            }
        }
        out
    }

    pub fn matmul(&self, other: &Operator) -> Result<Operator> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        let dim = self.dim;
        let mut out = Operator::zeros(dim);
        for i in 0..dim {
            for k in 0..dim {
                let a = self.entry(i, k);
                if a == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..dim {
                    out.data[i * dim + j] += a * other.entry(k, j);
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Operator) -> Result<Operator> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Operator {
            dim: self.dim,
            data,
        })
    }

    pub fn scaled(&self, factor: Complex64) -> Operator {
        Operator {
            dim: self.dim,
            data: self.data.iter().map(|a| a * factor).collect(),
        }
    }

    /// Largest entry magnitude; used for deviation checks.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|a| a.norm()).fold(0.0, f64::max)
    }

    /// Largest entry magnitude of `self − other`.
    pub fn max_abs_diff(&self, other: &Operator) -> f64 {
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn apply(&self, state: &StateVector) -> Result<StateVector> {
        if self.dim != state.dim() {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: state.dim(),
            });
        }
        let mut out = vec![Complex64::new(0.0, 0.0); self.dim];
        for i in 0..self.dim {
            let mut acc = Complex64::new(0.0, 0.0);
            for j in 0..self.dim {
                acc += self.entry(i, j) * state.amplitude(j);
            }
            out[i] = acc;
        }
        StateVector::from_amplitudes(out)
    }

    /// Expectation value `⟨state|Op|state⟩`.
    pub fn expectation(&self, state: &StateVector) -> Result<Complex64> {
        let applied = self.apply(state)?;
        state.inner(&applied)
    }

    /// Lift a single-qubit operator to `qubit` of an `n`-qubit register
    /// (big-endian: qubit 0 is the leftmost factor).
    pub fn on_qubit(op: &Operator, qubit: usize, n: usize) -> Result<Operator> {
        if op.dim != 2 || qubit >= n {
            return Err(Error::DimensionMismatch {
                left: op.dim,
                right: 2,
            });
        }
        let mut out = Operator::identity(1);
        for q in 0..n {
            let factor = if q == qubit {
                op.clone()
            } else {
                Operator::identity(2)
            };
            out = out.kron(&factor);
        }
        Ok(out)
    }

    pub fn pauli_x() -> Operator {
        let o = Complex64::new(0.0, 0.0);
        let l = Complex64::new(1.0, 0.0);
        Operator::new(2, vec![o, l, l, o]).unwrap()
    }

    pub fn pauli_y() -> Operator {
        let o = Complex64::new(0.0, 0.0);
        Operator::new(
            2,
            vec![o, Complex64::new(0.0, -1.0), Complex64::new(0.0, 1.0), o],
        )
        .unwrap()
    }

    pub fn pauli_z() -> Operator {
        let o = Complex64::new(0.0, 0.0);
        let l = Complex64::new(1.0, 0.0);
        Operator::new(2, vec![l, o, o, -l]).unwrap()
    }
}
