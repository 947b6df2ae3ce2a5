use num_complex::Complex64;
use rand::Rng;

use crate::error::{Error, Result};
use crate::hilbert::bell::{bell_state, BellKind, BellLabel, PhaseConvention};
use crate::hilbert::direction::Direction;
use crate::hilbert::operator::Operator;
use crate::hilbert::state::{basis_ket, StateVector};
use crate::hilbert::COMPOSED_TOL;

/// Result of one projective measurement.
#[derive(Debug, Clone)]
pub struct MeasurementOutcome {
    /// Index into the projector sequence.
    pub outcome: usize,
    /// Born probability of the sampled outcome.
    pub probability: f64,
    /// Renormalized post-measurement state.
    pub post_state: StateVector,
}

fn validate_projectors(state: &StateVector, projectors: &[Operator]) -> Result<()> {
    let dim = state.dim();
    for p in projectors {
        if p.dim() != dim {
            return Err(Error::DimensionMismatch {
                left: p.dim(),
                right: dim,
            });
        }
    }
    let mut sum = Operator::zeros(dim);
    for p in projectors {
        sum = sum.add(p)?;
    }
    let deviation = sum.max_abs_diff(&Operator::identity(dim));
    if deviation > COMPOSED_TOL {
        return Err(Error::IncompleteProjectors { deviation });
    }
    for i in 0..projectors.len() {
        for j in (i + 1)..projectors.len() {
            let overlap = projectors[i].matmul(&projectors[j])?.max_abs();
            if overlap > COMPOSED_TOL {
                return Err(Error::NonOrthogonalProjectors { i, j, overlap });
            }
        }
    }
    Ok(())
}

/// Born probabilities of a complete orthogonal projector set.
pub fn born_probabilities(state: &StateVector, projectors: &[Operator]) -> Result<Vec<f64>> {
    validate_projectors(state, projectors)?;
    let norm_sqr = state.norm().powi(2);
    projectors
        .iter()
        .map(|p| Ok((p.expectation(state)?.re / norm_sqr).max(0.0)))
        .collect()
}

/// Sample one outcome of a complete orthogonal projector set with Born
/// probabilities and collapse the state. Deterministic given the generator
/// state.
pub fn measure_projective(
    state: &StateVector,
    projectors: &[Operator],
    rng: &mut impl Rng,
) -> Result<MeasurementOutcome> {
    let probabilities = born_probabilities(state, projectors)?;
    let total: f64 = probabilities.iter().sum();
    let mut draw = rng.gen::<f64>() * total;
    let mut outcome = probabilities.len() - 1;
    for (k, &p) in probabilities.iter().enumerate() {
        if draw < p {
            outcome = k;
            break;
        }
        draw -= p;
    }
    let probability = probabilities[outcome];
    let projected = projectors[outcome].apply(state)?;
    let post_state = projected.normalized().map_err(|_| Error::EmptyPostselection {
        probability,
    })?;
    Ok(MeasurementOutcome {
        outcome,
        probability,
        post_state,
    })
}

/// The `2^n` rank-1 projectors onto the computational basis.
pub fn computational_projectors(num_qubits: usize) -> Vec<Operator> {
    let dim = 1usize << num_qubits;
    (0..dim)
        .map(|i| {
            let mut bits = Vec::with_capacity(num_qubits);
            for q in 0..num_qubits {
                bits.push(((i >> (num_qubits - 1 - q)) & 1) as u8);
            }
            Operator::projector_onto(&basis_ket(&bits).expect("valid bits"))
        })
        .collect()
}

/// Projectors `[|0⟩⟨0|, |1⟩⟨1|]` on one qubit of an `n`-qubit register.
pub fn qubit_projectors(qubit: usize, num_qubits: usize) -> Result<[Operator; 2]> {
    let p0 = Operator::projector_onto(&basis_ket(&[0])?);
    let p1 = Operator::projector_onto(&basis_ket(&[1])?);
    Ok([
        Operator::on_qubit(&p0, qubit, num_qubits)?,
        Operator::on_qubit(&p1, qubit, num_qubits)?,
    ])
}

/// Spin projectors `(I ± a·σ)/2` along a direction; index 0 is the `+1`
/// outcome.
pub fn spin_projectors(direction: Direction) -> [Operator; 2] {
    let obs = direction.spin_operator();
    let id = Operator::identity(2);
    let half = Complex64::new(0.5, 0.0);
    let plus = id.add(&obs).expect("dims match").scaled(half);
    let minus = id.add(&obs.scaled(Complex64::new(-1.0, 0.0))).expect("dims match").scaled(half);
    [plus, minus]
}

/// The four Bell-basis projectors on a two-qubit register, ordered as
/// [`BellKind::ALL`].
pub fn bell_projectors(convention: PhaseConvention) -> [Operator; 4] {
    let mk = |kind| Operator::projector_onto(&bell_state(BellLabel { kind, convention }));
    [
        mk(BellKind::PsiPlus),
        mk(BellKind::PsiMinus),
        mk(BellKind::PhiPlus),
        mk(BellKind::PhiMinus),
    ]
}
