//! JSON run configuration.
//!
//! ```json
//! {
//!   "state": { "111": [0.7071067811865476, 0.0], "222": [0.7071067811865476, 0.0], ... },
//!   "profile": { "p": 0.0, "q": 0.0, "r": 1.0 },
//!   "sweep": { "start": 0.0, "stop": 1.0, "step": 0.1 },
//!   "output": "report",
//!   "seed": 7
//! }
//! ```
//!
//! All eight basis labels must be present when `state` is given. `profile`
//! may also be written as `[p, q, r]`.

use std::collections::BTreeMap;
use std::io::Read;
use std::path::Path;

use serde::Deserialize;

use qcoop_core::tensor::{parse_basis_label, BASIS_LABELS, DIM};
use qcoop_core::{Complex, StrategyProfile, ThreeQubitState};

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Report,
    Csv,
}

#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(untagged)]
enum RawProfile {
    Named { p: f64, q: f64, r: f64 },
    Triple([f64; 3]),
}

#[derive(Debug, Clone, Copy, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepSpec {
    #[serde(default)]
    pub start: f64,
    #[serde(default = "one")]
    pub stop: f64,
    pub step: f64,
}

fn one() -> f64 {
    1.0
}

impl SweepSpec {
    /// Grid points `start + i·(stop-start)/n`, endpoints exact.
    pub fn points(&self) -> Result<Vec<f64>, CliError> {
        let SweepSpec { start, stop, step } = *self;
        let bad = |why: &str| {
            Err(CliError::Config(format!(
                "sweep {why} (start {start}, stop {stop}, step {step})"
            )))
        };
        if ![start, stop, step].iter().all(|v| v.is_finite()) {
            return bad("values must be finite");
        }
        if !(0.0..=1.0).contains(&start) || !(0.0..=1.0).contains(&stop) || start > stop {
            return bad("range must satisfy 0 <= start <= stop <= 1");
        }
        if step <= 0.0 {
            return bad("step must be positive");
        }
        let span = stop - start;
        let intervals = (span / step).round();
        if (intervals * step - span).abs() > 1e-9 {
            return bad("step must divide the range");
        }
        let n = intervals as usize;
        if n == 0 {
            return Ok(vec![start]);
        }
        Ok((0..=n).map(|i| start + span * i as f64 / n as f64).collect())
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    state: Option<BTreeMap<String, [f64; 2]>>,
    profile: Option<RawProfile>,
    sweep: Option<SweepSpec>,
    output: Option<OutputFormat>,
    seed: Option<u64>,
}

/// Parsed but not yet physically validated configuration.
#[derive(Debug, Clone, Default)]
pub struct RunConfig {
    pub amplitudes: Option<[Complex; DIM]>,
    pub profile: Option<[f64; 3]>,
    pub sweep: Option<SweepSpec>,
    /// `None` lets each command pick its natural format.
    pub output: Option<OutputFormat>,
    pub seed: Option<u64>,
}

impl RunConfig {
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        let raw: RawConfig =
            serde_json::from_str(text).map_err(|e| CliError::Config(format!("invalid config: {e}")))?;
        let amplitudes = raw.state.map(amplitudes_from_map).transpose()?;
        let profile = raw.profile.map(|p| match p {
            RawProfile::Named { p, q, r } => [p, q, r],
            RawProfile::Triple(t) => t,
        });
        Ok(Self {
            amplitudes,
            profile,
            sweep: raw.sweep,
            output: raw.output,
            seed: raw.seed,
        })
    }

    /// Reads a file, or standard input for `-`.
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = if path == Path::new("-") {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| CliError::Config(format!("reading standard input: {e}")))?;
            buf
        } else {
            std::fs::read_to_string(path).map_err(|e| CliError::Config(format!("reading {}: {e}", path.display())))?
        };
        Self::from_json(&text)
    }

    pub fn state(&self, usage: &str) -> Result<ThreeQubitState, CliError> {
        let amplitudes = self
            .amplitudes
            .ok_or_else(|| CliError::Usage(format!("config has no \"state\"\n{usage}")))?;
        ThreeQubitState::new(amplitudes).map_err(|e| CliError::State(e.to_string()))
    }

    pub fn strategy_profile(&self, usage: &str) -> Result<StrategyProfile, CliError> {
        let triple = self
            .profile
            .ok_or_else(|| CliError::Usage(format!("config has no \"profile\"\n{usage}")))?;
        StrategyProfile::from_array(triple).map_err(|e| CliError::Config(format!("profile: {e}")))
    }
}

fn amplitudes_from_map(map: BTreeMap<String, [f64; 2]>) -> Result<[Complex; DIM], CliError> {
    let mut amplitudes = [Complex::new(0.0, 0.0); DIM];
    for (label, [re, im]) in &map {
        let k = parse_basis_label(label).ok_or_else(|| {
            CliError::Config(format!(
                "unknown basis label \"{label}\" (expected one of {})",
                BASIS_LABELS.join(", ")
            ))
        })?;
        if !(re.is_finite() && im.is_finite()) {
            return Err(CliError::Config(format!("amplitude for \"{label}\" is not finite")));
        }
        amplitudes[k] = Complex::new(*re, *im);
    }
    let missing: Vec<&str> = BASIS_LABELS.iter().copied().filter(|l| !map.contains_key(*l)).collect();
    if !missing.is_empty() {
        return Err(CliError::Config(format!(
            "state is missing basis labels: {}",
            missing.join(", ")
        )));
    }
    Ok(amplitudes)
}
