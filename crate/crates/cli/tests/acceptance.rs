//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

use std::process::Command;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use qcoop_core::channel::{apply_strategy_channel, density_of, StrategyProfile, ThreeQubitState};
use qcoop_core::classical::{
    classical_coalition_values, classical_payoff, coalition_matrix, eliminate_dominated, solve_2x2_zero_sum,
    CoalitionSpec, PureProfile, Strategy,
};
use qcoop_core::coalition::{solve_coalition_value, zero_sum_deficit, Verdict};
use qcoop_core::game::{payoff_by_trace, payoff_closed_form, standard_constants, state_weights, StateWeights};
use qcoop_core::sampling::{random_admissible_weights, random_profile, random_state, with_random_phases};
use qcoop_core::{Complex, Player};

const SEED: u64 = 0x5eed_acce;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn basis_state(amplitudes: &[(usize, f64)]) -> ThreeQubitState {
    let mut a = [Complex::new(0.0, 0.0); 8];
    for &(k, v) in amplitudes {
        a[k] = Complex::new(v, 0.0);
    }
    ThreeQubitState::new(a).expect("normalized")
}

/// Expected classical table, written out by hand: a matching pair
/// takes one unit each from the odd man; unanimity pays nothing.
fn expected_classical(labels: [u8; 3]) -> [f64; 3] {
    match labels {
        [1, 1, 1] | [2, 2, 2] => [0.0, 0.0, 0.0],
        [1, 1, 2] | [2, 2, 1] => [1.0, 1.0, -2.0],
        [1, 2, 1] | [2, 1, 2] => [1.0, -2.0, 1.0],
        [2, 1, 1] | [1, 2, 2] => [-2.0, 1.0, 1.0],
        _ => unreachable!(),
    }
}

fn classical_table() -> Outcome {
    let constants = standard_constants();
    let origin = basis_state(&[(0, 1.0)]);
    let mut mismatches = Vec::new();
    for profile in PureProfile::all() {
        let labels = profile.0.map(|s| s.label());
        let got = classical_payoff(&profile);
        // identity probability 1 keeps strategy [1]; 0 flips to [2]
        let q = StrategyProfile::from_array(profile.0.map(|s| if s == Strategy::One { 1.0 } else { 0.0 })).unwrap();
        let via_trace: Vec<f64> = Player::ALL
            .iter()
            .map(|&pl| payoff_by_trace(&origin, &q, &constants, pl).unwrap())
            .collect();
        if got != expected_classical(labels) || via_trace != got.to_vec() {
            mismatches.push(format!("{labels:?}"));
        }
    }
    check(
        mismatches.is_empty(),
        format!("8 rows exact; mismatches: {mismatches:?}"),
    )
}

fn classical_coalition_value() -> Outcome {
    let mut problems = Vec::new();
    for coalition in CoalitionSpec::all().into_iter().filter(|c| c.len() == 2) {
        let reduced = eliminate_dominated(&coalition_matrix(&coalition).unwrap());
        if reduced.rows.len() != 2 {
            problems.push(format!("{coalition}: {} rows after elimination", reduced.rows.len()));
            continue;
        }
        let m = [reduced.rows[0].payoffs, reduced.rows[1].payoffs];
        let s = solve_2x2_zero_sum(m).unwrap();
        if s.value != 1.0 || s.row_mixture != [0.5, 0.5] || s.col_mixture != [0.5, 0.5] {
            problems.push(format!("{coalition}: {s:?}"));
        }
    }
    let values = classical_coalition_values().unwrap();
    for (c, v) in &values {
        let expected = if c.len() == 2 { 1.0 } else { -1.0 };
        if *v != expected {
            problems.push(format!("v({c}) = {v}"));
        }
    }
    check(
        problems.is_empty() && values.len() == 6,
        format!("pairs value 1 at (1/2,1/2)/(1/2,1/2), singletons -1; problems: {problems:?}"),
    )
}

fn oracle_equivalence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let constants = standard_constants();
    let trials = 1000;
    let mut worst = [0.0f64; 3];
    for _ in 0..trials {
        let state = random_state(&mut rng);
        let profile = random_profile(&mut rng);
        let weights = state_weights(&state);
        for (i, &pl) in Player::ALL.iter().enumerate() {
            let t = payoff_by_trace(&state, &profile, &constants, pl).unwrap();
            let c = payoff_closed_form(pl, &profile, &weights);
            worst[i] = worst[i].max((t - c).abs());
        }
    }
    check(
        worst.iter().all(|&w| w <= 1e-10),
        format!(
            "{trials} trials, worst gap A/B/C = {:.3e}/{:.3e}/{:.3e} (tol 1e-10)",
            worst[0], worst[1], worst[2]
        ),
    )
}

fn channel_sanity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 1);
    let trials = 1000;
    let (mut herm, mut trace, mut min_eig) = (0.0f64, 0.0f64, f64::INFINITY);
    for _ in 0..trials {
        let rho = density_of(&random_state(&mut rng));
        let out = apply_strategy_channel(&rho, &random_profile(&mut rng)).unwrap();
        let d = out.diagnostics();
        herm = herm.max(d.hermiticity_gap);
        trace = trace.max(d.trace_error);
        min_eig = min_eig.min(d.min_eigenvalue);
    }
    check(
        herm <= 1e-12 && trace <= 1e-12 && min_eig >= -1e-9,
        format!("{trials} trials, hermiticity {herm:.3e}, trace error {trace:.3e}, min eigenvalue {min_eig:.3e}"),
    )
}

fn quantum_coalition_value() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 2);
    let trials = 100;
    let (mut l_gap, mut v_gap, mut grid_gap) = (0.0f64, 0.0f64, 0.0f64);
    for _ in 0..trials {
        let w = random_admissible_weights(&mut rng);
        let r = solve_coalition_value(&w).unwrap();
        l_gap = l_gap.max((r.l_star - 0.5).abs());
        v_gap = v_gap.max((r.v_coalition - (w.w1 - w.w2)).abs());
        grid_gap = grid_gap.max(r.grid_check_gap);
    }
    check(
        l_gap <= 1e-12 && v_gap <= 1e-12 && grid_gap <= 2e-3,
        format!("{trials} weights, |l*-1/2| {l_gap:.3e}, |v-(w1-w2)| {v_gap:.3e}, grid gap {grid_gap:.3e} (tol 2e-3)"),
    )
}

fn no_motivation_state() -> Outcome {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    // |211> is index 4, |122> is index 3
    let state = basis_state(&[(4, h), (3, h)]);
    let r = solve_coalition_value(&state_weights(&state)).unwrap();
    check(
        (r.v_coalition + 1.0).abs() <= 1e-12 && (r.v_oddman + 1.0).abs() <= 1e-12 && r.verdict == Verdict::Indifferent,
        format!(
            "v_coalition {}, v_oddman {}, verdict {}",
            r.v_coalition, r.v_oddman, r.verdict
        ),
    )
}

fn classical_reduction() -> Outcome {
    let r = solve_coalition_value(&StateWeights::symmetric(1.0, 0.0).unwrap()).unwrap();
    let values = classical_coalition_values().unwrap();
    let pair = values[&CoalitionSpec::new(&[Player::B, Player::C]).unwrap()];
    let single = values[&CoalitionSpec::new(&[Player::A]).unwrap()];
    check(
        (r.v_coalition - pair).abs() <= 1e-12 && (r.v_oddman - single).abs() <= 1e-12,
        format!(
            "quantum ({}, {}) vs classical ({pair}, {single})",
            r.v_coalition, r.v_oddman
        ),
    )
}

fn zero_sum_deficit_check() -> Outcome {
    let pure_w2 = StateWeights::symmetric(0.0, 1.0).unwrap();
    let half = zero_sum_deficit(&StrategyProfile::new(0.5, 0.5, 0.5).unwrap(), &pure_w2).unwrap();
    let origin = zero_sum_deficit(&StrategyProfile::new(0.0, 0.0, 0.0).unwrap(), &pure_w2).unwrap();
    let pure_w1 = StateWeights::symmetric(1.0, 0.0).unwrap();
    let mut worst = 0.0f64;
    for i in 0..=20 {
        for j in 0..=20 {
            for k in 0..=20 {
                let p = StrategyProfile::new(i as f64 / 20.0, j as f64 / 20.0, k as f64 / 20.0).unwrap();
                worst = worst.max(zero_sum_deficit(&p, &pure_w1).unwrap().abs());
            }
        }
    }
    check(
        half.abs() <= 1e-12 && (origin + 6.0).abs() <= 1e-12 && worst <= 1e-12,
        format!("w2=1: {half} at 1/2, {origin} at origin; w2=0: max |deficit| {worst:.3e} on 21^3 grid"),
    )
}

fn phase_invariance() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 3);
    let constants = standard_constants();
    let trials = 100;
    let mut worst = 0.0f64;
    for _ in 0..trials {
        let state = random_state(&mut rng);
        let shifted = with_random_phases(&state, &mut rng);
        let profile = random_profile(&mut rng);
        for pl in Player::ALL {
            let a = payoff_by_trace(&state, &profile, &constants, pl).unwrap();
            let b = payoff_by_trace(&shifted, &profile, &constants, pl).unwrap();
            worst = worst.max((a - b).abs());
        }
    }
    check(
        worst <= 1e-12,
        format!("{trials} perturbations, worst change {worst:.3e} (tol 1e-12)"),
    )
}

fn cli_sweep() -> Outcome {
    let dir = std::env::temp_dir().join(format!("qcoop-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).map_err(|e| e.to_string())?;
    let path = dir.join("sweep.json");
    std::fs::write(&path, r#"{"sweep": {"start": 0, "stop": 1, "step": 0.1}}"#).map_err(|e| e.to_string())?;
    let output = Command::new(env!("CARGO_BIN_EXE_qcoop"))
        .arg("sweep")
        .arg(&path)
        .output()
        .map_err(|e| e.to_string())?;
    let _ = std::fs::remove_dir_all(&dir);
    if !output.status.success() {
        return Err(format!(
            "exit {:?}: {}",
            output.status.code(),
            String::from_utf8_lossy(&output.stderr)
        ));
    }
    let text = String::from_utf8(output.stdout).map_err(|e| e.to_string())?;
    let mut lines = text.lines();
    let header: Vec<&str> = lines.next().unwrap_or_default().split(',').collect();
    let col = |name: &str| {
        header
            .iter()
            .position(|h| *h == name)
            .ok_or(format!("missing column {name}"))
    };
    let (t_col, v_col, verdict_col) = (col("t")?, col("v_coalition")?, col("verdict")?);
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    let mut worst = 0.0f64;
    let mut indifferent_at = Vec::new();
    for row in &rows {
        let t: f64 = row[t_col].parse().map_err(|_| format!("bad t {:?}", row[t_col]))?;
        let v: f64 = row[v_col].parse().map_err(|_| format!("bad v {:?}", row[v_col]))?;
        worst = worst.max((v - (1.0 - 2.0 * t)).abs());
        if row[verdict_col] == "Indifferent" {
            indifferent_at.push(t);
        }
    }
    check(
        rows.len() == 11 && worst <= 1e-9 && indifferent_at == [1.0],
        format!(
            "{} rows, worst |v-(1-2t)| {worst:.3e}, Indifferent at t = {indifferent_at:?}",
            rows.len()
        ),
    )
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("classical payoff table", classical_table),
        ("classical coalition values", classical_coalition_value),
        ("closed form matches trace", oracle_equivalence),
        ("channel output is a density matrix", channel_sanity),
        ("quantum coalition value", quantum_coalition_value),
        ("no-motivation state", no_motivation_state),
        ("classical reduction", classical_reduction),
        ("zero-sum deficit", zero_sum_deficit_check),
        ("phase invariance", phase_invariance),
        ("cli sweep end-to-end", cli_sweep),
    ];
    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let ms = start.elapsed().as_secs_f64() * 1e3;
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} [{ms:.0} ms]", i + 1),
            Err(detail) => {
                failures += 1;
                println!("FAIL {:>2} {name}: {detail} [{ms:.0} ms]", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}
