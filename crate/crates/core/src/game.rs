//! Payoff constants, payoff operators and the two payoff routes.
//!
//! Constants are stored in the game's own enumeration of basis states,
//! `t = 1..8` ↔ `|111⟩, |211⟩, |121⟩, |112⟩, |122⟩, |212⟩, |221⟩, |222⟩`,
//! which differs from basis-index order. [`T_ORDER_BASIS`] converts.
//!
//! Payoffs are computed two ways:
//! * [`payoff_by_trace`] pushes the state through the strategy channel and
//!   takes `Tr[(P)_oper ρ_fin]`; this is the reference path.
//! * [`payoff_closed_form_a`] evaluates player A's four-row polynomial
//!   dotted with the [`StateWeights`]; B and C follow by relabeling qubits.

use crate::channel::{self, StrategyProfile, ThreeQubitState};
use crate::error::{Error, Result};
use crate::player::Player;
use crate::tensor::{self, Matrix8, DIM};

/// Basis index of the state at each position `t - 1` of the constant tables.
pub const T_ORDER_BASIS: [usize; DIM] = [0, 4, 2, 1, 3, 5, 6, 7];

/// Weights on `|121⟩/|212⟩` or `|112⟩/|221⟩` above this make a state inadmissible.
pub const ADMISSIBILITY_TOL: f64 = 1e-9;

/// Constant relations must hold to this precision for a symmetric game.
pub const RELATION_TOL: f64 = 1e-12;

/// Bound on the imaginary part of a payoff trace.
pub const IMAG_TOL: f64 = 1e-10;

/// Symmetry relations `α_a = β_b = γ_g`, 1-based as `(a, b, g)`.
pub const SYMMETRY_RELATIONS: [(usize, usize, usize); 8] = [
    (1, 1, 1),
    (2, 3, 4),
    (3, 2, 3),
    (4, 4, 2),
    (5, 6, 7),
    (6, 5, 6),
    (7, 7, 5),
    (8, 8, 8),
];

/// Player A's constants for the three-player majority game.
pub const STANDARD_ALPHA: [f64; DIM] = [0.0, -2.0, 1.0, 1.0, -2.0, 1.0, 1.0, 0.0];

/// The 24 constants `α_t, β_t, γ_t`, each array in t-order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PayoffConstants {
    pub alpha: [f64; DIM],
    pub beta: [f64; DIM],
    pub gamma: [f64; DIM],
    pub symmetric: bool,
}

impl PayoffConstants {
    /// An arbitrary game; not flagged symmetric.
    pub fn new(alpha: [f64; DIM], beta: [f64; DIM], gamma: [f64; DIM]) -> Result<Self> {
        for (what, table) in [("alpha", &alpha), ("beta", &beta), ("gamma", &gamma)] {
            if let Some(&bad) = table.iter().find(|v| !v.is_finite()) {
                return Err(Error::Domain {
                    what,
                    value: bad,
                    range: "finite values",
                });
            }
        }
        Ok(Self {
            alpha,
            beta,
            gamma,
            symmetric: false,
        })
    }

    /// Fills β and γ from α through the symmetry relations.
    pub fn symmetric_from_alpha(alpha: [f64; DIM]) -> Self {
        let mut beta = [0.0; DIM];
        let mut gamma = [0.0; DIM];
        for (a, b, g) in SYMMETRY_RELATIONS {
            beta[b - 1] = alpha[a - 1];
            gamma[g - 1] = alpha[a - 1];
        }
        Self {
            alpha,
            beta,
            gamma,
            symmetric: true,
        }
    }

    pub fn for_player(&self, player: Player) -> &[f64; DIM] {
        match player {
            Player::A => &self.alpha,
            Player::B => &self.beta,
            Player::C => &self.gamma,
        }
    }

    /// The player's constant for the basis state at `index` (basis-index order).
    pub fn at_basis(&self, player: Player, index: usize) -> f64 {
        let t = T_ORDER_BASIS.iter().position(|&k| k == index).expect("basis index < 8");
        self.for_player(player)[t]
    }

    /// Largest spread `max(|α_a-β_b|, |α_a-γ_g|)` for each relation, in table order.
    pub fn relation_residuals(&self) -> [f64; DIM] {
        SYMMETRY_RELATIONS.map(|(a, b, g)| {
            let alpha = self.alpha[a - 1];
            (alpha - self.beta[b - 1]).abs().max((alpha - self.gamma[g - 1]).abs())
        })
    }
}

pub fn standard_constants() -> PayoffConstants {
    PayoffConstants::symmetric_from_alpha(STANDARD_ALPHA)
}

/// Diagonal payoff operator `Σ_t c_t |t⟩⟨t|` for one player.
pub fn payoff_operator(constants: &PayoffConstants, player: Player) -> Matrix8 {
    let mut diag = [0.0; DIM];
    for (t, &value) in constants.for_player(player).iter().enumerate() {
        diag[T_ORDER_BASIS[t]] = value;
    }
    Matrix8::from_real_diagonal(&diag)
}

/// `Tr[(P)_oper ρ_fin]` through the full strategy channel.
pub fn payoff_by_trace(
    state: &ThreeQubitState,
    profile: &StrategyProfile,
    constants: &PayoffConstants,
    player: Player,
) -> Result<f64> {
    let rho_fin = channel::apply_strategy_channel(&channel::density_of(state), profile)?;
    let value = tensor::trace_of_product(&payoff_operator(constants, player), rho_fin.matrix());
    assert!(
        value.im.abs() < IMAG_TOL,
        "payoff trace has imaginary part {}",
        value.im
    );
    Ok(value.re)
}

/// Pair sums of squared amplitudes that enter the closed-form payoffs.
///
/// * `w1 = |c111|² + |c222|²`
/// * `w2 = |c211|² + |c122|²`
/// * `w3 = |c121|² + |c212|²`
/// * `w4 = |c112|² + |c221|²`
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StateWeights {
    pub w1: f64,
    pub w2: f64,
    pub w3: f64,
    pub w4: f64,
}

impl StateWeights {
    pub fn new(w1: f64, w2: f64, w3: f64, w4: f64) -> Result<Self> {
        for (what, value) in [("w1", w1), ("w2", w2), ("w3", w3), ("w4", w4)] {
            if !(value >= 0.0 && value.is_finite()) {
                return Err(Error::Domain {
                    what,
                    value,
                    range: "[0, inf)",
                });
            }
        }
        let total = w1 + w2 + w3 + w4;
        if (total - 1.0).abs() > channel::NORM_TOL {
            return Err(Error::Normalization { norm: total });
        }
        Ok(Self { w1, w2, w3, w4 })
    }

    /// Weights of an admissible state: `w3 = w4 = 0`.
    pub fn symmetric(w1: f64, w2: f64) -> Result<Self> {
        Self::new(w1, w2, 0.0, 0.0)
    }

    pub fn as_array(&self) -> [f64; 4] {
        [self.w1, self.w2, self.w3, self.w4]
    }

    pub fn is_admissible(&self) -> bool {
        self.w3 <= ADMISSIBILITY_TOL && self.w4 <= ADMISSIBILITY_TOL
    }

    pub fn require_admissible(&self) -> Result<()> {
        if self.is_admissible() {
            Ok(())
        } else {
            Err(Error::Admissibility {
                w3: self.w3,
                w4: self.w4,
            })
        }
    }
}

pub fn state_weights(state: &ThreeQubitState) -> StateWeights {
    let prob = state.probabilities();
    let pair = |x: [u8; 3], y: [u8; 3]| prob[tensor::basis_index(x)] + prob[tensor::basis_index(y)];
    StateWeights {
        w1: pair([1, 1, 1], [2, 2, 2]),
        w2: pair([2, 1, 1], [1, 2, 2]),
        w3: pair([1, 2, 1], [2, 1, 2]),
        w4: pair([1, 1, 2], [2, 2, 1]),
    }
}

/// The four polynomial rows of player A's payoff, one per weight.
fn rows_a(p: f64, q: f64, r: f64) -> [f64; 4] {
    [
        -4.0 * r * q - 2.0 * p + 2.0 * p * r + 2.0 * p * q + r + q,
        -4.0 * r * q + 2.0 * p - 2.0 * p * r - 2.0 * p * q + 3.0 * r + 3.0 * q - 2.0,
        4.0 * r * q + 2.0 * p * r - 2.0 * p * q - 3.0 * r - q + 1.0,
        4.0 * r * q - 2.0 * p * r + 2.0 * p * q - r - 3.0 * q + 1.0,
    ]
}

fn dot(rows: [f64; 4], w: [f64; 4]) -> f64 {
    rows.iter().zip(w).map(|(r, w)| r * w).sum()
}

/// Player A's payoff as the polynomial rows dotted with the state weights.
pub fn payoff_closed_form_a(profile: &StrategyProfile, weights: &StateWeights) -> f64 {
    dot(rows_a(profile.p, profile.q, profile.r), weights.as_array())
}

/// Closed-form payoff for any player.
///
/// B's constants are A's with qubits A and B exchanged, which also exchanges
/// the `w2` and `w3` sectors; C exchanges A with C and so `w2` with `w4`.
pub fn payoff_closed_form(player: Player, profile: &StrategyProfile, weights: &StateWeights) -> f64 {
    let StrategyProfile { p, q, r } = *profile;
    let StateWeights { w1, w2, w3, w4 } = *weights;
    match player {
        Player::A => dot(rows_a(p, q, r), [w1, w2, w3, w4]),
        Player::B => dot(rows_a(q, p, r), [w1, w3, w2, w4]),
        Player::C => dot(rows_a(r, q, p), [w1, w4, w3, w2]),
    }
}

/// `P(p, q, r)`: payoff to the `p` player in the symmetric game.
pub fn symmetric_payoff(profile: &StrategyProfile, weights: &StateWeights) -> Result<f64> {
    weights.require_admissible()?;
    let rows = rows_a(profile.p, profile.q, profile.r);
    Ok(weights.w1 * rows[0] + weights.w2 * rows[1])
}

#[derive(Debug, Clone, PartialEq)]
pub struct SymmetryViolation {
    pub condition: String,
    pub magnitude: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SymmetryVerdict {
    pub admissible: bool,
    pub violations: Vec<SymmetryViolation>,
}

/// Checks the state conditions `w3 = w4 = 0` and the eight constant relations.
pub fn check_symmetry(state: &ThreeQubitState, constants: &PayoffConstants) -> SymmetryVerdict {
    let weights = state_weights(state);
    let mut violations = Vec::new();
    for (name, w) in [("w3 nonzero", weights.w3), ("w4 nonzero", weights.w4)] {
        if w > ADMISSIBILITY_TOL {
            violations.push(SymmetryViolation {
                condition: name.to_string(),
                magnitude: w,
            });
        }
    }
    for ((a, b, g), residual) in SYMMETRY_RELATIONS.iter().zip(constants.relation_residuals()) {
        if residual.is_nan() || residual > RELATION_TOL {
            violations.push(SymmetryViolation {
                condition: format!("alpha{a} = beta{b} = gamma{g}"),
                magnitude: residual,
            });
        }
    }
    SymmetryVerdict {
        admissible: violations.is_empty(),
        violations,
    }
}
