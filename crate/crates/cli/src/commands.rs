use std::io::Write;

use qcoop_core::classical::{self, CoalitionSpec, MatrixRow};
use qcoop_core::coalition::{self, REPORT_GRID_RESOLUTION};
use qcoop_core::game::{self, payoff_by_trace, payoff_closed_form};
use qcoop_core::verify::{run_property_suite, VerifyOptions};
use qcoop_core::{Player, StrategyProfile, ThreeQubitState};

use crate::config::{OutputFormat, RunConfig};
use crate::format::num;
use crate::CliError;

pub const PAYOFF_USAGE: &str = "usage: qcoop payoff <config>  (config needs \"state\" and \"profile\")";
pub const ANALYZE_USAGE: &str = "usage: qcoop analyze <config>  (config needs \"state\")";
pub const SWEEP_USAGE: &str = "usage: qcoop sweep <config>  (config needs \"sweep\": {\"step\": ...})";

pub const SWEEP_HEADER: &str = "t,w1,w2,v_coalition,v_oddman,verdict,deficit_at_origin";

type Out<'a> = &'a mut dyn Write;

fn core(e: qcoop_core::Error) -> CliError {
    CliError::Config(e.to_string())
}

pub fn payoff(config: &RunConfig, out: Out) -> Result<(), CliError> {
    let state = config.state(PAYOFF_USAGE)?;
    let profile = config.strategy_profile(PAYOFF_USAGE)?;
    let constants = game::standard_constants();
    let weights = game::state_weights(&state);

    let mut rows = Vec::new();
    for player in Player::ALL {
        let traced = payoff_by_trace(&state, &profile, &constants, player).map_err(core)?;
        let closed = payoff_closed_form(player, &profile, &weights);
        rows.push((player, traced, closed));
    }
    let discrepancy = rows.iter().map(|(_, t, c)| (t - c).abs()).fold(0.0, f64::max);

    match config.output.unwrap_or(OutputFormat::Report) {
        OutputFormat::Csv => {
            writeln!(out, "player,trace,closed_form,discrepancy")?;
            for (player, t, c) in &rows {
                writeln!(out, "{player},{},{},{}", num(*t), num(*c), num((t - c).abs()))?;
            }
        }
        OutputFormat::Report => {
            writeln!(
                out,
                "profile: p = {}, q = {}, r = {}",
                num(profile.p),
                num(profile.q),
                num(profile.r)
            )?;
            write_weights(out, &weights)?;
            for (player, t, c) in &rows {
                writeln!(
                    out,
                    "P_{player} = {}  (trace {}, closed form {})",
                    num(*t),
                    num(*t),
                    num(*c)
                )?;
            }
            writeln!(out, "max discrepancy = {}", num(discrepancy))?;
        }
    }
    Ok(())
}

fn write_weights(out: Out, w: &game::StateWeights) -> Result<(), CliError> {
    writeln!(
        out,
        "weights: w1 = {}, w2 = {}, w3 = {}, w4 = {}",
        num(w.w1),
        num(w.w2),
        num(w.w3),
        num(w.w4)
    )?;
    Ok(())
}

pub fn analyze(config: &RunConfig, out: Out) -> Result<(), CliError> {
    let state = config.state(ANALYZE_USAGE)?;
    let profile = config
        .profile
        .map(|p| StrategyProfile::from_array(p).map_err(|e| CliError::Config(format!("profile: {e}"))))
        .transpose()?;
    analyze_state(
        &state,
        profile.as_ref(),
        config.output.unwrap_or(OutputFormat::Report),
        out,
    )
}

fn analyze_state(
    state: &ThreeQubitState,
    profile: Option<&StrategyProfile>,
    output: OutputFormat,
    out: Out,
) -> Result<(), CliError> {
    let verdict = game::check_symmetry(state, &game::standard_constants());
    let weights = game::state_weights(state);
    if !verdict.admissible {
        writeln!(out, "admissible: no")?;
        for v in &verdict.violations {
            writeln!(out, "violation: {} (magnitude {})", v.condition, num(v.magnitude))?;
        }
        write_weights(out, &weights)?;
        let names: Vec<&str> = verdict.violations.iter().map(|v| v.condition.as_str()).collect();
        return Err(CliError::Inadmissible(names.join(", ")));
    }
    let report = coalition::solve_coalition_value(&weights).map_err(core)?;
    let deficit = profile
        .map(|p| coalition::zero_sum_deficit(p, &weights))
        .transpose()
        .map_err(core)?;

    match output {
        OutputFormat::Csv => {
            writeln!(out, "w1,w2,l_star,v_coalition,v_oddman,grid_check_gap,verdict")?;
            writeln!(
                out,
                "{},{},{},{},{},{},{}",
                num(weights.w1),
                num(weights.w2),
                num(report.l_star),
                num(report.v_coalition),
                num(report.v_oddman),
                num(report.grid_check_gap),
                report.verdict
            )?;
        }
        OutputFormat::Report => {
            writeln!(out, "admissible: yes")?;
            write_weights(out, &weights)?;
            writeln!(out, "coalition {{B,C}} against odd man A")?;
            writeln!(out, "l* = {}", num(report.l_star))?;
            writeln!(out, "v_coalition = {}", num(report.v_coalition))?;
            writeln!(out, "v_oddman = {}", num(report.v_oddman))?;
            writeln!(
                out,
                "grid_check_gap = {} (resolution {})",
                num(report.grid_check_gap),
                num(REPORT_GRID_RESOLUTION)
            )?;
            if let (Some(p), Some(d)) = (profile, deficit) {
                writeln!(
                    out,
                    "zero-sum deficit at ({}, {}, {}) = {}",
                    num(p.p),
                    num(p.q),
                    num(p.r),
                    num(d)
                )?;
            }
            writeln!(out, "verdict: {}", report.verdict)?;
        }
    }
    Ok(())
}

fn write_matrix(out: Out, rows: &[MatrixRow]) -> Result<(), CliError> {
    writeln!(out, "{:>8}{:>8}{:>8}", "", "[1]", "[2]")?;
    for row in rows {
        writeln!(
            out,
            "{:>8}{:>8}{:>8}",
            row.label.to_string(),
            num(row.payoffs[0]),
            num(row.payoffs[1])
        )?;
    }
    Ok(())
}

fn mixture(weights: &[f64], labels: &[String]) -> String {
    weights
        .iter()
        .zip(labels)
        .map(|(w, l)| format!("{} {l}", num(*w)))
        .collect::<Vec<_>>()
        .join(" + ")
}

pub fn classical(out: Out) -> Result<(), CliError> {
    for coalition in CoalitionSpec::all().into_iter().filter(|c| c.len() == 2) {
        let sol = classical::solve_classical_coalition(&coalition).map_err(core)?;
        writeln!(out, "coalition {coalition} against odd man {}", sol.matrix.odd_man)?;
        write_matrix(out, &sol.matrix.rows)?;
        let removed: Vec<String> = sol
            .eliminated
            .iter()
            .map(|s| format!("{} (dominated by {})", s.removed, s.dominated_by))
            .collect();
        writeln!(out, "eliminated rows: {}", removed.join(", "))?;
        writeln!(out, "reduced matrix:")?;
        write_matrix(out, &sol.reduced.rows)?;
        let row_labels: Vec<String> = sol.reduced.labels().iter().map(ToString::to_string).collect();
        let col_labels = ["[1]".to_string(), "[2]".to_string()];
        writeln!(
            out,
            "coalition mixture: {}",
            mixture(&sol.solution.row_mixture, &row_labels)
        )?;
        writeln!(
            out,
            "odd-man mixture: {}",
            mixture(&sol.solution.col_mixture, &col_labels)
        )?;
        writeln!(out, "value = {}", num(sol.solution.value))?;
        writeln!(out)?;
    }
    writeln!(out, "coalition values:")?;
    for (coalition, value) in classical::classical_coalition_values().map_err(core)? {
        writeln!(out, "v({coalition}) = {}", num(value))?;
    }
    Ok(())
}

/// One point of the family `c111 = √(1-t)`, `c211 = √t`.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub t: f64,
    pub w1: f64,
    pub w2: f64,
    pub v_coalition: f64,
    pub v_oddman: f64,
    pub verdict: coalition::Verdict,
    pub deficit_at_origin: f64,
}

pub fn sweep_row(t: f64) -> Result<SweepRow, CliError> {
    let mut amps = [0.0; 8];
    amps[0] = (1.0 - t).sqrt();
    amps[4] = t.sqrt();
    let state = ThreeQubitState::from_real(amps).map_err(|e| CliError::State(e.to_string()))?;
    let weights = game::state_weights(&state);
    let report = coalition::solve_coalition_value(&weights).map_err(core)?;
    let origin = StrategyProfile::new(0.0, 0.0, 0.0).map_err(core)?;
    Ok(SweepRow {
        t,
        w1: weights.w1,
        w2: weights.w2,
        v_coalition: report.v_coalition,
        v_oddman: report.v_oddman,
        verdict: report.verdict,
        deficit_at_origin: coalition::zero_sum_deficit(&origin, &weights).map_err(core)?,
    })
}

pub fn sweep(config: &RunConfig, out: Out) -> Result<(), CliError> {
    let spec = config
        .sweep
        .ok_or_else(|| CliError::Usage(format!("config has no \"sweep\"\n{SWEEP_USAGE}")))?;
    let rows = spec
        .points()?
        .into_iter()
        .map(sweep_row)
        .collect::<Result<Vec<_>, _>>()?;
    match config.output.unwrap_or(OutputFormat::Csv) {
        OutputFormat::Csv => write_sweep_csv(&rows, out),
        OutputFormat::Report => {
            writeln!(
                out,
                "{:>6} {:>14} {:>14} {:>14} {:>14} {:>12} {:>14}",
                "t", "w1", "w2", "v_coalition", "v_oddman", "verdict", "deficit(0)"
            )?;
            for r in &rows {
                writeln!(
                    out,
                    "{:>6} {:>14} {:>14} {:>14} {:>14} {:>12} {:>14}",
                    num(r.t),
                    num(r.w1),
                    num(r.w2),
                    num(r.v_coalition),
                    num(r.v_oddman),
                    r.verdict.to_string(),
                    num(r.deficit_at_origin)
                )?;
            }
            Ok(())
        }
    }
}

fn write_sweep_csv(rows: &[SweepRow], out: Out) -> Result<(), CliError> {
    let mut text = String::new();
    text.push_str(SWEEP_HEADER);
    text.push('\n');
    for r in rows {
        text.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            num(r.t),
            num(r.w1),
            num(r.w2),
            num(r.v_coalition),
            num(r.v_oddman),
            r.verdict,
            num(r.deficit_at_origin)
        ));
    }
    out.write_all(text.as_bytes())?;
    Ok(())
}

pub fn verify(options: &VerifyOptions, out: Out) -> Result<(), CliError> {
    let outcomes = run_property_suite(options).map_err(core)?;
    writeln!(out, "seed: {}", options.seed)?;
    if options.corrupt_constants {
        writeln!(out, "note: trace-side constants deliberately corrupted")?;
    }
    for o in &outcomes {
        writeln!(
            out,
            "{} {}: trials = {}, worst gap = {}, tolerance = {}",
            if o.passed { "PASS" } else { "FAIL" },
            o.name,
            o.trials,
            num(o.worst_gap),
            num(o.tolerance)
        )?;
    }
    let failed: Vec<&str> = outcomes.iter().filter(|o| !o.passed).map(|o| o.name).collect();
    if failed.is_empty() {
        writeln!(out, "all properties passed")?;
        Ok(())
    } else {
        Err(CliError::PropertyFailure(failed.join(", ")))
    }
}
