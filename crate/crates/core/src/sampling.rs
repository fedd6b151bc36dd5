//! Seeded random inputs for property checks and benchmarks.

use rand::Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::channel::{StrategyProfile, ThreeQubitState};
use crate::game::StateWeights;
use crate::tensor::{parse_basis_label, Complex, DIM};

fn gaussian_complex<R: Rng + ?Sized>(rng: &mut R) -> Complex {
    Complex::new(StandardNormal.sample(rng), StandardNormal.sample(rng))
}

fn normalized(mut amplitudes: [Complex; DIM]) -> ThreeQubitState {
    let norm = amplitudes.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    amplitudes.iter_mut().for_each(|z| *z /= norm);
    ThreeQubitState::new(amplitudes).expect("normalized by construction")
}

/// Haar-distributed pure state.
pub fn random_state<R: Rng + ?Sized>(rng: &mut R) -> ThreeQubitState {
    normalized(std::array::from_fn(|_| gaussian_complex(rng)))
}

/// Random state supported on `|111⟩, |222⟩, |211⟩, |122⟩` only.
pub fn random_admissible_state<R: Rng + ?Sized>(rng: &mut R) -> ThreeQubitState {
    let mut amplitudes = [Complex::new(0.0, 0.0); DIM];
    for label in ["111", "222", "211", "122"] {
        amplitudes[parse_basis_label(label).unwrap()] = gaussian_complex(rng);
    }
    normalized(amplitudes)
}

pub fn random_profile<R: Rng + ?Sized>(rng: &mut R) -> StrategyProfile {
    StrategyProfile {
        p: rng.random(),
        q: rng.random(),
        r: rng.random(),
    }
}

/// Admissible weights with `w1` uniform on `[0, 1]`.
pub fn random_admissible_weights<R: Rng + ?Sized>(rng: &mut R) -> StateWeights {
    let w1: f64 = rng.random();
    StateWeights {
        w1,
        w2: 1.0 - w1,
        w3: 0.0,
        w4: 0.0,
    }
}

/// Multiplies every amplitude by an independent random unit phase.
pub fn with_random_phases<R: Rng + ?Sized>(state: &ThreeQubitState, rng: &mut R) -> ThreeQubitState {
    let amplitudes = state
        .amplitudes()
        .map(|z| z * Complex::from_polar(1.0, rng.random_range(0.0..std::f64::consts::TAU)));
    ThreeQubitState::new(amplitudes).expect("unit phases preserve the norm")
}
