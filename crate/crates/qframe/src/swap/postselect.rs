use num_complex::Complex64;
use rand::Rng;

use crate::error::{Error, Result};
use crate::hilbert::{bell_state, BellKind, BellLabel, StateVector, EXACT_TOL};
use crate::rng::Seed;

/// Result of a Bell-state measurement on the inner pair with postselection.
#[derive(Debug, Clone)]
pub struct PostselectionOutcome {
    /// Born probabilities of the four inner Bell outcomes, in
    /// [`BellKind::ALL`] order.
    pub probabilities: [f64; 4],
    /// The label kept by postselection.
    pub kept: BellKind,
    /// Born probability of the kept outcome.
    pub kept_probability: f64,
    /// Renormalized outer-pair state conditioned on the kept outcome. The
    /// outer qubits keep their original relative order.
    pub outer_state: StateVector,
    /// Squared overlap of the outer state with the Bell state of the kept
    /// label.
    pub fidelity: f64,
    /// Seeded ensemble counts of the four inner outcomes.
    pub sampled_counts: [u64; 4],
    pub samples: u64,
}

/// Measure the `inner` qubit pair of a four-qubit state in the Bell basis,
/// postselect on `keep`, and return the conditional outer-pair state, its
/// fidelity to the matching Bell state, and seeded ensemble statistics.
pub fn bell_measure_and_postselect(
    state4: &StateVector,
    inner: (usize, usize),
    keep: BellLabel,
    samples: u64,
    seed: Seed,
) -> Result<PostselectionOutcome> {
    if state4.num_qubits() != 4 {
        return Err(Error::DimensionMismatch {
            left: state4.dim(),
            right: 16,
        });
    }
    let outer: Vec<usize> = (0..4).filter(|q| *q != inner.0 && *q != inner.1).collect();
    if outer.len() != 2 {
        return Err(Error::NotAPartition {
            outer: (usize::MAX, usize::MAX),
            inner,
        });
    }
    let outer = (outer[0], outer[1]);

    // Outer pair to positions (0,1), inner to (2,3); then project the inner
    // half onto each Bell state.
    let mut permutation = [0usize; 4];
    permutation[outer.0] = 0;
    permutation[outer.1] = 1;
    permutation[inner.0] = 2;
    permutation[inner.1] = 3;
    let permuted = state4.permute_subsystems(&permutation)?;

    let mut probabilities = [0.0f64; 4];
    let mut conditional: Vec<Vec<Complex64>> = Vec::with_capacity(4);
    for (k, &kind) in BellKind::ALL.iter().enumerate() {
        let inner_bell = bell_state(BellLabel {
            kind,
            convention: keep.convention,
        });
        // ⟨Bell_k|_(2,3) ψ: a 4-amplitude residual vector on the outer pair.
        let mut reduced = vec![Complex64::new(0.0, 0.0); 4];
        for (outer_bits, slot) in reduced.iter_mut().enumerate() {
            let mut acc = Complex64::new(0.0, 0.0);
            for inner_bits in 0..4 {
                let amp = permuted.amplitude(outer_bits * 4 + inner_bits);
                acc += inner_bell.amplitude(inner_bits).conj() * amp;
            }
            *slot = acc;
        }
        probabilities[k] = reduced.iter().map(|c| c.norm_sqr()).sum();
        conditional.push(reduced);
    }

    let kept_index = keep.kind.index();
    let kept_probability = probabilities[kept_index];
    if kept_probability < EXACT_TOL {
        return Err(Error::EmptyPostselection {
            probability: kept_probability,
        });
    }
    let outer_state = StateVector::from_amplitudes(conditional[kept_index].clone())?
        .normalized()
        .map_err(|_| Error::EmptyPostselection {
            probability: kept_probability,
        })?;
    let reference = bell_state(keep);
    let fidelity = reference.inner(&outer_state)?.norm_sqr();

    let mut rng = seed.rng();
    let mut sampled_counts = [0u64; 4];
    let total: f64 = probabilities.iter().sum();
    for _ in 0..samples {
        let mut draw = rng.gen::<f64>() * total;
        let mut outcome = 3;
        for (k, &p) in probabilities.iter().enumerate() {
            if draw < p {
                outcome = k;
                break;
            }
            draw -= p;
        }
        sampled_counts[outcome] += 1;
    }

    Ok(PostselectionOutcome {
        probabilities,
        kept: keep.kind,
        kept_probability,
        outer_state,
        fidelity,
        sampled_counts,
        samples,
    })
}
