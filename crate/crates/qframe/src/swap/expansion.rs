use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hilbert::{bell_state, tensor, BellKind, BellLabel, PhaseConvention, StateVector};

/// Coefficients of a four-qubit state in the product basis
/// `|Bell_i(outer)⟩ ⊗ |Bell_j(inner)⟩`, indexed by [`BellKind::ALL`].
#[derive(Debug, Clone, Serialize)]
pub struct PairBasisExpansion {
    convention: PhaseConvention,
    /// `coefficients[outer][inner]`, serialized as `[re, im]` pairs.
    coefficients: [[Complex64; 4]; 4],
}

impl PairBasisExpansion {
    pub fn convention(&self) -> PhaseConvention {
        self.convention
    }

    pub fn coefficient(&self, outer: BellKind, inner: BellKind) -> Complex64 {
        self.coefficients[outer.index()][inner.index()]
    }

    pub fn coefficients(&self) -> &[[Complex64; 4]; 4] {
        &self.coefficients
    }

    /// Sum of squared magnitudes; 1 for a unit-norm expanded state.
    pub fn total_weight(&self) -> f64 {
        self.coefficients
            .iter()
            .flatten()
            .map(|c| c.norm_sqr())
            .sum()
    }

    /// The diagonal `(Ψ+Ψ+, Ψ−Ψ−, Φ+Φ+, Φ−Φ−)` coefficients.
    pub fn diagonal(&self) -> [Complex64; 4] {
        let mut out = [Complex64::new(0.0, 0.0); 4];
        for (k, kind) in BellKind::ALL.iter().enumerate() {
            out[k] = self.coefficient(*kind, *kind);
        }
        out
    }

    /// Snap every coefficient to the nearest Gaussian half-integer
    /// `(m + n·i)/2`. Returns the snap distance alongside the table; for the
    /// pair-product inputs handled here the distance is at rounding level.
    pub fn snapped_to_half_integers(&self) -> ([[Complex64; 4]; 4], f64) {
        let mut snapped = [[Complex64::new(0.0, 0.0); 4]; 4];
        let mut worst = 0.0f64;
        for i in 0..4 {
            for j in 0..4 {
                let c = self.coefficients[i][j];
                let s = Complex64::new((c.re * 2.0).round() / 2.0, (c.im * 2.0).round() / 2.0);
                worst = worst.max((c - s).norm());
                snapped[i][j] = s;
            }
        }
        (snapped, worst)
    }
}

fn check_partition(outer: (usize, usize), inner: (usize, usize)) -> Result<()> {
    let mut seen = [false; 4];
    for idx in [outer.0, outer.1, inner.0, inner.1] {
        if idx > 3 || seen[idx] {
            return Err(Error::NotAPartition { outer, inner });
        }
        seen[idx] = true;
    }
    Ok(())
}

/// Expand a four-qubit state in the Bell bases of the `outer` and `inner`
/// qubit pairs: `c_ij = ⟨Bell_i(outer) ⊗ Bell_j(inner) | state⟩`.
pub fn expand_in_pair_bases(
    state4: &StateVector,
    outer: (usize, usize),
    inner: (usize, usize),
    convention: PhaseConvention,
) -> Result<PairBasisExpansion> {
    if state4.num_qubits() != 4 {
        return Err(Error::DimensionMismatch {
            left: state4.dim(),
            right: 16,
        });
    }
    check_partition(outer, inner)?;
    // Send the outer pair to positions (0,1) and the inner pair to (2,3).
    let mut permutation = [0usize; 4];
    permutation[outer.0] = 0;
    permutation[outer.1] = 1;
    permutation[inner.0] = 2;
    permutation[inner.1] = 3;
    let permuted = state4.permute_subsystems(&permutation)?;

    let mut coefficients = [[Complex64::new(0.0, 0.0); 4]; 4];
    for (i, &outer_kind) in BellKind::ALL.iter().enumerate() {
        let outer_state = bell_state(BellLabel {
            kind: outer_kind,
            convention,
        });
        for (j, &inner_kind) in BellKind::ALL.iter().enumerate() {
            let inner_state = bell_state(BellLabel {
                kind: inner_kind,
                convention,
            });
            let basis = tensor(&outer_state, &inner_state)?;
            coefficients[i][j] = basis.inner(&permuted)?;
        }
    }
    Ok(PairBasisExpansion {
        convention,
        coefficients,
    })
}

/// Diagonal sign tables of the four pair-product decompositions in the
/// standard convention, rows and columns ordered as [`BellKind::ALL`]:
/// `|B B⟩ on (0,1)(2,3) = ½ Σ_P sign(B,P) |P(0,3) P(1,2)⟩`.
const STANDARD_SIGNS: [[f64; 4]; 4] = [
    [1.0, -1.0, 1.0, -1.0],  // Ψ+Ψ+
    [1.0, -1.0, -1.0, 1.0],  // Ψ−Ψ−
    [1.0, 1.0, 1.0, 1.0],    // Φ+Φ+
    [-1.0, -1.0, 1.0, 1.0],  // Φ−Φ−
];

/// Verification record for one pair-product decomposition identity.
#[derive(Debug, Clone, Serialize)]
pub struct DecompositionCheck {
    /// The Bell kind `B` of the product state `|B⟩⊗|B⟩` being decomposed.
    pub product: BellKind,
    /// Max amplitude deviation between the state and its reconstruction
    /// from the tabulated coefficients.
    pub residual: f64,
    /// Diagonal coefficients actually computed, `[re, im]` pairs.
    pub diagonal: [Complex64; 4],
    /// Full 4×4 coefficient table actually computed.
    pub table: [[Complex64; 4]; 4],
}

/// Verification of all four decomposition identities in one convention.
#[derive(Debug, Clone, Serialize)]
pub struct DecompositionReport {
    pub convention: PhaseConvention,
    pub checks: Vec<DecompositionCheck>,
    pub max_residual: f64,
}

/// Rebuild `Σ_ij c_ij |Bell_i(0,3) Bell_j(1,2)⟩` as a four-qubit state.
fn reconstruct(table: &[[Complex64; 4]; 4], convention: PhaseConvention) -> Result<StateVector> {
    let mut amps = vec![Complex64::new(0.0, 0.0); 16];
    for (i, &outer_kind) in BellKind::ALL.iter().enumerate() {
        for (j, &inner_kind) in BellKind::ALL.iter().enumerate() {
            let c = table[i][j];
            if c == Complex64::new(0.0, 0.0) {
                continue;
            }
            let pair = tensor(
                &bell_state(BellLabel {
                    kind: outer_kind,
                    convention,
                }),
                &bell_state(BellLabel {
                    kind: inner_kind,
                    convention,
                }),
            )?;
            // Outer qubits to positions (0,3), inner to (1,2).
            let placed = pair.permute_subsystems(&[0, 3, 1, 2])?;
            for (k, amp) in placed.amplitudes().iter().enumerate() {
                amps[k] += c * amp;
            }
        }
    }
    StateVector::from_amplitudes(amps)
}

/// Verify the four pair-product decomposition identities.
///
/// In the standard convention the right-hand side is rebuilt from the fixed
/// ±½ sign table; in the magic convention the paper of record for the signs
/// is the computation itself, so the computed table is snapped to exact
/// half-integers and the reconstruction is checked against that. Residuals
/// are max amplitude deviations.
pub fn verify_swap_identities(convention: PhaseConvention) -> DecompositionReport {
    let mut checks = Vec::with_capacity(4);
    let mut max_residual = 0.0f64;
    for (row, &kind) in BellKind::ALL.iter().enumerate() {
        let pair = bell_state(BellLabel { kind, convention });
        let lhs = tensor(&pair, &pair).expect("4 qubits");
        let expansion = expand_in_pair_bases(&lhs, (0, 3), (1, 2), convention)
            .expect("valid partition");

        let table = match convention {
            PhaseConvention::Standard => {
                let mut t = [[Complex64::new(0.0, 0.0); 4]; 4];
                for (k, sign) in STANDARD_SIGNS[row].iter().enumerate() {
                    t[k][k] = Complex64::new(0.5 * sign, 0.0);
                }
                t
            }
            PhaseConvention::Magic => expansion.snapped_to_half_integers().0,
        };

        let rhs = reconstruct(&table, convention).expect("16 amplitudes");
        let residual = lhs
            .amplitudes()
            .iter()
            .zip(rhs.amplitudes())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max);
        max_residual = max_residual.max(residual);
        checks.push(DecompositionCheck {
            product: kind,
            residual,
            diagonal: expansion.diagonal(),
            table: *expansion.coefficients(),
        });
    }
    DecompositionReport {
        convention,
        checks,
        max_residual,
    }
}
