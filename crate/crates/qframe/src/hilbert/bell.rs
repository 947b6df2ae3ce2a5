use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::hilbert::state::StateVector;

/// The four maximally entangled two-qubit states.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BellKind {
    PsiPlus,
    PsiMinus,
    PhiPlus,
    PhiMinus,
}

impl BellKind {
    pub const ALL: [BellKind; 4] = [
        BellKind::PsiPlus,
        BellKind::PsiMinus,
        BellKind::PhiPlus,
        BellKind::PhiMinus,
    ];

    pub fn index(self) -> usize {
        match self {
            BellKind::PsiPlus => 0,
            BellKind::PsiMinus => 1,
            BellKind::PhiPlus => 2,
            BellKind::PhiMinus => 3,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            BellKind::PsiPlus => "psi+",
            BellKind::PsiMinus => "psi-",
            BellKind::PhiPlus => "phi+",
            BellKind::PhiMinus => "phi-",
        }
    }
}

/// Phase convention for the Bell basis.
///
/// `Standard` uses real amplitudes throughout. `Magic` multiplies `Ψ−` and
/// `Φ+` by the imaginary unit, which makes two-qubit basis changes real in
/// that basis; probabilities are unaffected.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PhaseConvention {
    Standard,
    Magic,
}

/// A Bell-basis element: which state, in which phase convention.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BellLabel {
    pub kind: BellKind,
    pub convention: PhaseConvention,
}

impl BellLabel {
    pub fn standard(kind: BellKind) -> Self {
        BellLabel {
            kind,
            convention: PhaseConvention::Standard,
        }
    }

    pub fn magic(kind: BellKind) -> Self {
        BellLabel {
            kind,
            convention: PhaseConvention::Magic,
        }
    }
}

/// The unit-normalized Bell state for a label.
///
/// `Ψ± = (|01⟩ ± |10⟩)/√2`, `Φ± = (|00⟩ ± |11⟩)/√2`, with the magic-basis
/// phase factor applied to `Ψ−` and `Φ+` when requested.
pub fn bell_state(label: BellLabel) -> StateVector {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let z = Complex64::new(0.0, 0.0);
    let p = Complex64::new(s, 0.0);
    let m = Complex64::new(-s, 0.0);
    let amps = match label.kind {
        BellKind::PsiPlus => vec![z, p, p, z],
        BellKind::PsiMinus => vec![z, p, m, z],
        BellKind::PhiPlus => vec![p, z, z, p],
        BellKind::PhiMinus => vec![p, z, z, m],
    };
    let state = StateVector::from_amplitudes(amps).expect("4 amplitudes");
    let magic_phase = matches!(
        (label.convention, label.kind),
        (PhaseConvention::Magic, BellKind::PsiMinus) | (PhaseConvention::Magic, BellKind::PhiPlus)
    );
    if magic_phase {
        state.scaled(Complex64::new(0.0, 1.0))
    } else {
        state
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hilbert::EXACT_TOL;

    #[test]
    fn singlet_amplitudes() {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let psim = bell_state(BellLabel::standard(BellKind::PsiMinus));
        let amps = psim.amplitudes();
        assert_eq!(amps[0], Complex64::new(0.0, 0.0));
        assert!((amps[1] - Complex64::new(s, 0.0)).norm() < EXACT_TOL);
        assert!((amps[2] - Complex64::new(-s, 0.0)).norm() < EXACT_TOL);
        assert_eq!(amps[3], Complex64::new(0.0, 0.0));
    }

    #[test]
    fn phi_plus_amplitudes() {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let phip = bell_state(BellLabel::standard(BellKind::PhiPlus));
        assert!((phip.amplitude(0) - Complex64::new(s, 0.0)).norm() < EXACT_TOL);
        assert!((phip.amplitude(3) - Complex64::new(s, 0.0)).norm() < EXACT_TOL);
    }

    #[test]
    fn magic_phases_only_on_psi_minus_and_phi_plus() {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let psim = bell_state(BellLabel::magic(BellKind::PsiMinus));
        assert!((psim.amplitude(1) - Complex64::new(0.0, s)).norm() < EXACT_TOL);
        let phip = bell_state(BellLabel::magic(BellKind::PhiPlus));
        assert!((phip.amplitude(0) - Complex64::new(0.0, s)).norm() < EXACT_TOL);
        // The other two stay real.
        let psip = bell_state(BellLabel::magic(BellKind::PsiPlus));
        assert!((psip.amplitude(1) - Complex64::new(s, 0.0)).norm() < EXACT_TOL);
        let phim = bell_state(BellLabel::magic(BellKind::PhiMinus));
        assert!((phim.amplitude(0) - Complex64::new(s, 0.0)).norm() < EXACT_TOL);
    }

    #[test]
    fn unit_norm_and_pairwise_orthogonality_in_both_conventions() {
        for convention in [PhaseConvention::Standard, PhaseConvention::Magic] {
            let states: Vec<_> = BellKind::ALL
                .iter()
                .map(|&kind| bell_state(BellLabel { kind, convention }))
                .collect();
            for (i, a) in states.iter().enumerate() {
                assert!((a.norm() - 1.0).abs() < EXACT_TOL);
                for b in states.iter().skip(i + 1) {
                    assert!(a.inner(b).unwrap().norm() < EXACT_TOL);
                }
            }
        }
    }
}
