use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use qcoop_core::channel::{apply_strategy_channel, density_of};
use qcoop_core::classical::classical_coalition_values;
use qcoop_core::coalition::{maximin_grid_oracle, solve_coalition_value};
use qcoop_core::game::{payoff_by_trace, payoff_closed_form, standard_constants, state_weights, StateWeights};
use qcoop_core::sampling::{random_profile, random_state};
use qcoop_core::Player;

fn payoffs(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let state = random_state(&mut rng);
    let profile = random_profile(&mut rng);
    let rho = density_of(&state);
    let constants = standard_constants();
    let weights = state_weights(&state);

    c.bench_function("strategy channel", |b| {
        b.iter(|| apply_strategy_channel(black_box(&rho), black_box(&profile)).unwrap())
    });
    c.bench_function("payoff by trace", |b| {
        b.iter(|| payoff_by_trace(black_box(&state), black_box(&profile), &constants, Player::A).unwrap())
    });
    c.bench_function("payoff closed form", |b| {
        b.iter(|| payoff_closed_form(Player::A, black_box(&profile), black_box(&weights)))
    });
}

fn coalitions(c: &mut Criterion) {
    let weights = StateWeights::symmetric(0.7, 0.3).unwrap();
    c.bench_function("classical coalition values", |b| {
        b.iter(|| classical_coalition_values().unwrap())
    });
    c.bench_function("quantum coalition value", |b| {
        b.iter(|| solve_coalition_value(black_box(&weights)).unwrap())
    });
    c.bench_function("maximin grid 1e-2", |b| {
        b.iter(|| maximin_grid_oracle(|l, m| black_box(l * m - 0.5 * l), 1e-2).unwrap())
    });
}

criterion_group!(benches, payoffs, coalitions);
criterion_main!(benches);
