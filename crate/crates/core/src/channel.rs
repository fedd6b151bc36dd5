//! The arbiter's initial state and the probabilistic strategy channel.
//!
//! Each player applies the identity with its own probability and the
//! spin-flip σ otherwise. The final state is the convex combination over
//! all eight operator choices:
//!
//! ```text
//! ρ_fin = Σ Pr(U_A) Pr(U_B) Pr(U_C) (U_A ⊗ U_B ⊗ U_C) ρ_in (U_A ⊗ U_B ⊗ U_C)†
//! ```

use nalgebra::{SMatrix, SymmetricEigen};

use crate::error::{Error, Result};
use crate::tensor::{self, Complex, Matrix8, DIM, MATRIX_TOL};

/// Allowed deviation of Σ|c|² from one.
pub const NORM_TOL: f64 = 1e-9;

/// Eigenvalues above `-PSD_FLOOR` count as non-negative.
pub const PSD_FLOOR: f64 = 1e-9;

/// Pure three-qubit initial state, amplitudes in basis-index order
/// (`c_111` at index 0, `c_222` at index 7).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThreeQubitState {
    amplitudes: [Complex; DIM],
}

impl ThreeQubitState {
    /// Validates normalization; the amplitudes are never rescaled.
    pub fn new(amplitudes: [Complex; DIM]) -> Result<Self> {
        if let Some(bad) = amplitudes.iter().find(|z| !(z.re.is_finite() && z.im.is_finite())) {
            return Err(Error::Domain {
                what: "amplitude",
                value: if bad.re.is_finite() { bad.im } else { bad.re },
                range: "finite values",
            });
        }
        let norm: f64 = amplitudes.iter().map(|z| z.norm_sqr()).sum();
        if (norm - 1.0).abs() > NORM_TOL {
            return Err(Error::Normalization { norm });
        }
        Ok(Self { amplitudes })
    }

    pub fn from_real(amplitudes: [f64; DIM]) -> Result<Self> {
        Self::new(amplitudes.map(|a| Complex::new(a, 0.0)))
    }

    /// The computational basis state `|k⟩`.
    pub fn basis(k: usize) -> Self {
        let mut amplitudes = [Complex::new(0.0, 0.0); DIM];
        amplitudes[k] = Complex::new(1.0, 0.0);
        Self { amplitudes }
    }

    /// Equal-weight superposition of two distinct basis states.
    pub fn equal_superposition(j: usize, k: usize) -> Self {
        assert_ne!(j, k, "superposition needs two distinct basis states");
        let h = Complex::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        let mut amplitudes = [Complex::new(0.0, 0.0); DIM];
        amplitudes[j] = h;
        amplitudes[k] = h;
        Self { amplitudes }
    }

    pub fn amplitudes(&self) -> &[Complex; DIM] {
        &self.amplitudes
    }

    pub fn amplitude(&self, index: usize) -> Complex {
        self.amplitudes[index]
    }

    /// `|c_k|²` for every basis state.
    pub fn probabilities(&self) -> [f64; DIM] {
        self.amplitudes.map(|z| z.norm_sqr())
    }
}

/// Per-invariant residuals of a candidate density matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityDiagnostics {
    pub hermiticity_gap: f64,
    pub trace_error: f64,
    pub min_eigenvalue: f64,
}

impl DensityDiagnostics {
    pub fn is_valid(&self) -> bool {
        self.hermiticity_gap <= MATRIX_TOL && self.trace_error <= MATRIX_TOL && self.min_eigenvalue >= -PSD_FLOOR
    }
}

/// Hermitian, unit-trace, positive semidefinite 8×8 matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityMatrix {
    matrix: Matrix8,
}

impl DensityMatrix {
    pub fn new(matrix: Matrix8) -> Result<Self> {
        if !matrix.is_finite() {
            return Err(Error::NotDensityMatrix("non-finite entry".into()));
        }
        let d = diagnose(&matrix);
        if !d.is_valid() {
            return Err(Error::NotDensityMatrix(format!(
                "hermiticity gap {:e}, trace error {:e}, min eigenvalue {:e}",
                d.hermiticity_gap, d.trace_error, d.min_eigenvalue
            )));
        }
        Ok(Self { matrix })
    }

    pub fn matrix(&self) -> &Matrix8 {
        &self.matrix
    }

    pub fn diagnostics(&self) -> DensityDiagnostics {
        diagnose(&self.matrix)
    }
}

fn diagnose(m: &Matrix8) -> DensityDiagnostics {
    DensityDiagnostics {
        hermiticity_gap: m.hermiticity_gap(),
        trace_error: (m.trace() - Complex::new(1.0, 0.0)).norm(),
        min_eigenvalue: min_eigenvalue(m),
    }
}

/// Smallest eigenvalue of the Hermitian part of `m`.
pub fn min_eigenvalue(m: &Matrix8) -> f64 {
    let h = SMatrix::<Complex, DIM, DIM>::from_fn(|i, j| (m.get(i, j) + m.get(j, i).conj()) * 0.5);
    SymmetricEigen::new(h)
        .eigenvalues
        .iter()
        .copied()
        .fold(f64::INFINITY, f64::min)
}

/// `|ψ⟩⟨ψ|`.
pub fn density_of(state: &ThreeQubitState) -> DensityMatrix {
    DensityMatrix {
        matrix: Matrix8::outer(state.amplitudes(), state.amplitudes()),
    }
}

/// Probabilities `(p, q, r)` with which A, B and C apply the identity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StrategyProfile {
    pub p: f64,
    pub q: f64,
    pub r: f64,
}

impl StrategyProfile {
    pub fn new(p: f64, q: f64, r: f64) -> Result<Self> {
        let profile = Self { p, q, r };
        profile.validate()?;
        Ok(profile)
    }

    pub fn validate(&self) -> Result<()> {
        for (what, value) in [("p", self.p), ("q", self.q), ("r", self.r)] {
            if !(0.0..=1.0).contains(&value) {
                return Err(Error::Domain {
                    what,
                    value,
                    range: "[0, 1]",
                });
            }
        }
        Ok(())
    }

    pub fn as_array(&self) -> [f64; 3] {
        [self.p, self.q, self.r]
    }

    pub fn from_array([p, q, r]: [f64; 3]) -> Result<Self> {
        Self::new(p, q, r)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LocalOperator {
    Identity,
    Flip,
}

impl LocalOperator {
    pub fn matrix(self) -> tensor::Mat2 {
        match self {
            LocalOperator::Identity => tensor::identity2(),
            LocalOperator::Flip => tensor::sigma_x(),
        }
    }

    /// Probability of this operator when the identity has probability `p_identity`.
    pub fn probability(self, p_identity: f64) -> f64 {
        match self {
            LocalOperator::Identity => p_identity,
            LocalOperator::Flip => 1.0 - p_identity,
        }
    }
}

/// One operator per player, `[A, B, C]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct OperatorChoice(pub [LocalOperator; 3]);

impl OperatorChoice {
    /// All eight combinations.
    pub fn all() -> impl Iterator<Item = OperatorChoice> {
        use LocalOperator::{Flip, Identity};
        (0..8u8).map(|bits| {
            let pick = |mask: u8| if bits & mask == 0 { Identity } else { Flip };
            OperatorChoice([pick(4), pick(2), pick(1)])
        })
    }

    pub fn unitary(&self) -> Matrix8 {
        let [a, b, c] = self.0;
        tensor::kron(&a.matrix(), &b.matrix(), &c.matrix())
    }

    pub fn probability(&self, profile: &StrategyProfile) -> f64 {
        self.0
            .iter()
            .zip(profile.as_array())
            .map(|(op, p)| op.probability(p))
            .product()
    }
}

/// Applies the players' probabilistic strategies to `rho_in`.
pub fn apply_strategy_channel(rho_in: &DensityMatrix, profile: &StrategyProfile) -> Result<DensityMatrix> {
    profile.validate()?;
    let mut out = Matrix8::zeros();
    for choice in OperatorChoice::all() {
        let weight = choice.probability(profile);
        if weight == 0.0 {
            continue;
        }
        let u = choice.unitary();
        let conjugated = tensor::mul(&tensor::mul(&u, &rho_in.matrix), &tensor::dagger(&u));
        out = out + conjugated.scale(weight);
    }
    Ok(DensityMatrix { matrix: out })
}
