//! Randomized self-check suite, deterministic for a given seed.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::channel::{apply_strategy_channel, density_of};
use crate::coalition::{solve_coalition_value, REPORT_GRID_RESOLUTION};
use crate::game::{payoff_by_trace, payoff_closed_form, standard_constants, PayoffConstants};
use crate::player::Player;
use crate::sampling;
use crate::tensor::MATRIX_TOL;
use crate::{game, Result};

pub const DEFAULT_SEED: u64 = 20061;

pub const ORACLE_TOL: f64 = 1e-10;
pub const PHASE_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerifyOptions {
    pub seed: u64,
    pub oracle_trials: usize,
    pub trials: usize,
    /// Perturbs the constants used on the trace side; the oracle check must then fail.
    pub corrupt_constants: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            seed: DEFAULT_SEED,
            oracle_trials: 1000,
            trials: 100,
            corrupt_constants: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PropertyOutcome {
    pub name: &'static str,
    pub trials: usize,
    pub worst_gap: f64,
    pub tolerance: f64,
    pub passed: bool,
}

impl PropertyOutcome {
    fn new(name: &'static str, trials: usize, worst_gap: f64, tolerance: f64) -> Self {
        Self {
            name,
            trials,
            worst_gap,
            tolerance,
            passed: worst_gap <= tolerance,
        }
    }
}

fn trace_constants(options: &VerifyOptions) -> PayoffConstants {
    let mut constants = standard_constants();
    if options.corrupt_constants {
        constants.alpha[1] += 0.5;
    }
    constants
}

pub fn run_property_suite(options: &VerifyOptions) -> Result<Vec<PropertyOutcome>> {
    let mut rng = ChaCha8Rng::seed_from_u64(options.seed);
    let constants = trace_constants(options);
    let mut outcomes = Vec::new();

    let mut oracle_gap: f64 = 0.0;
    for _ in 0..options.oracle_trials {
        let state = sampling::random_state(&mut rng);
        let profile = sampling::random_profile(&mut rng);
        let weights = game::state_weights(&state);
        for player in Player::ALL {
            let traced = payoff_by_trace(&state, &profile, &constants, player)?;
            let closed = payoff_closed_form(player, &profile, &weights);
            oracle_gap = oracle_gap.max((traced - closed).abs());
        }
    }
    outcomes.push(PropertyOutcome::new(
        "oracle equivalence",
        options.oracle_trials,
        oracle_gap,
        ORACLE_TOL,
    ));

    let mut herm_trace_gap: f64 = 0.0;
    let mut negative_eig: f64 = 0.0;
    for _ in 0..options.oracle_trials {
        let state = sampling::random_state(&mut rng);
        let profile = sampling::random_profile(&mut rng);
        let d = apply_strategy_channel(&density_of(&state), &profile)?.diagnostics();
        herm_trace_gap = herm_trace_gap.max(d.hermiticity_gap).max(d.trace_error);
        negative_eig = negative_eig.max(-d.min_eigenvalue);
    }
    outcomes.push(PropertyOutcome::new(
        "channel hermitian and unit trace",
        options.oracle_trials,
        herm_trace_gap,
        MATRIX_TOL,
    ));
    outcomes.push(PropertyOutcome::new(
        "channel positive semidefinite",
        options.oracle_trials,
        negative_eig,
        crate::channel::PSD_FLOOR,
    ));

    let mut phase_gap: f64 = 0.0;
    for _ in 0..options.trials {
        let state = sampling::random_state(&mut rng);
        let rotated = sampling::with_random_phases(&state, &mut rng);
        let profile = sampling::random_profile(&mut rng);
        for player in Player::ALL {
            let before = payoff_by_trace(&state, &profile, &constants, player)?;
            let after = payoff_by_trace(&rotated, &profile, &constants, player)?;
            phase_gap = phase_gap.max((before - after).abs());
        }
    }
    outcomes.push(PropertyOutcome::new(
        "phase invariance",
        options.trials,
        phase_gap,
        PHASE_TOL,
    ));

    let mut saddle_gap: f64 = 0.0;
    for _ in 0..options.trials {
        let weights = sampling::random_admissible_weights(&mut rng);
        let report = solve_coalition_value(&weights)?;
        saddle_gap = saddle_gap.max(report.grid_check_gap);
    }
    outcomes.push(PropertyOutcome::new(
        "saddle cross-check",
        options.trials,
        saddle_gap,
        2.0 * REPORT_GRID_RESOLUTION,
    ));

    Ok(outcomes)
}
