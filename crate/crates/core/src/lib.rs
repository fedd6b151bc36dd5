//! Three-player quantum coalition game in the Marinatto-Weber scheme.
//!
//! Players hold one qubit each of an arbiter-prepared pure state and apply
//! either the identity or the spin-flip with classical probabilities
//! `(p, q, r)`. Payoffs are expectation values of diagonal payoff
//! operators. The crate computes those payoffs, solves the classical
//! coalition game, and derives the quantum coalition values that decide
//! whether two players still gain by teaming up against the third.
//!
//! Modules, bottom up:
//! * [`tensor`]: fixed 8×8 complex algebra.
//! * [`channel`]: initial states, density matrices, the strategy channel.
//! * [`game`]: payoff constants and operators, trace and closed-form payoffs.
//! * [`classical`]: the classical coalition matrix, dominance, 2×2 solver.
//! * [`coalition`]: quantum coalition values and the motivation verdict.
//! * [`verify`]: seeded randomized self-checks.

pub mod channel;
pub mod classical;
pub mod coalition;
pub mod error;
pub mod game;
pub mod player;
pub mod sampling;
pub mod tensor;
pub mod verify;

pub use channel::{apply_strategy_channel, density_of, DensityMatrix, StrategyProfile, ThreeQubitState};
pub use classical::{classical_coalition_values, CoalitionSpec, MixedSolution};
pub use coalition::{solve_coalition_value, CoalitionValueReport, Verdict};
pub use error::{Error, Result};
pub use game::{standard_constants, state_weights, PayoffConstants, StateWeights};
pub use player::Player;
pub use tensor::{Complex, Matrix8};
