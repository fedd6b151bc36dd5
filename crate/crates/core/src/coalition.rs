//! Quantum coalition values for admissible initial states.
//!
//! The coalition `{B, C}` mixes `l[11] + (1-l)[22]` against the odd man's
//! `m[1] + (1-m)[2]`, where `[1]` means applying the identity with
//! probability 0. The coalition payoff is bilinear in `(l, m)` over four
//! corner payoffs, each twice the symmetric payoff `P` at a pure corner.
//! The coalition's value comes from the stationarity condition
//! `∂P_℘/∂m = 0`, and every report carries an independent grid maximin
//! of the same surface.

use std::fmt;

use crate::channel::StrategyProfile;
use crate::error::{Error, Result};
use crate::game::{symmetric_payoff, StateWeights};

/// Tolerance for the motivation verdict.
pub const VERDICT_EPS: f64 = 1e-9;

/// Grid step used for the cross-check embedded in every report.
pub const REPORT_GRID_RESOLUTION: f64 = 1e-3;

fn probability(what: &'static str, value: f64) -> Result<f64> {
    if (0.0..=1.0).contains(&value) {
        Ok(value)
    } else {
        Err(Error::Domain {
            what,
            value,
            range: "[0, 1]",
        })
    }
}

/// Weight `l` on the coalition's `[11]`; the rest goes to `[22]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoalitionMixedStrategy(f64);

impl CoalitionMixedStrategy {
    pub fn new(l: f64) -> Result<Self> {
        probability("l", l).map(Self)
    }

    pub fn l(self) -> f64 {
        self.0
    }
}

/// Weight `m` on the odd man's `[1]`; the rest goes to `[2]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OddManMixedStrategy(f64);

impl OddManMixedStrategy {
    pub fn new(m: f64) -> Result<Self> {
        probability("m", m).map(Self)
    }

    pub fn m(self) -> f64 {
        self.0
    }
}

/// Coalition payoffs at the four pure corners, named `[coalition coalition odd-man]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CornerPayoffs {
    pub p111: f64,
    pub p112: f64,
    pub p221: f64,
    pub p222: f64,
}

impl CornerPayoffs {
    /// The bilinear coalition payoff at `(l, m)`.
    pub fn surface(&self, l: f64, m: f64) -> f64 {
        l * m * self.p111 + l * (1.0 - m) * self.p112 + (1.0 - l) * m * self.p221 + (1.0 - l) * (1.0 - m) * self.p222
    }

    /// Rows `[11], [22]` against columns `[1], [2]`.
    pub fn as_matrix(&self) -> [[f64; 2]; 2] {
        [[self.p111, self.p112], [self.p221, self.p222]]
    }
}

pub fn corner_payoffs(weights: &StateWeights) -> Result<CornerPayoffs> {
    let twice = |p, q, r| -> Result<f64> { Ok(2.0 * symmetric_payoff(&StrategyProfile::new(p, q, r)?, weights)?) };
    Ok(CornerPayoffs {
        p111: twice(0.0, 0.0, 0.0)?,
        p112: twice(0.0, 0.0, 1.0)?,
        p221: twice(1.0, 1.0, 0.0)?,
        p222: twice(1.0, 1.0, 1.0)?,
    })
}

pub fn coalition_payoff(l: CoalitionMixedStrategy, m: OddManMixedStrategy, weights: &StateWeights) -> Result<f64> {
    Ok(corner_payoffs(weights)?.surface(l.l(), m.m()))
}

/// The coalition mixture that makes its payoff independent of `m`.
pub fn stationary_strategy(corners: &CornerPayoffs) -> Result<CoalitionMixedStrategy> {
    // ∂P/∂m = l (p111 - p112 - p221 + p222) + (p221 - p222)
    let slope = corners.p111 - corners.p112 - corners.p221 + corners.p222;
    if slope == 0.0 {
        return Err(Error::Degenerate("coalition payoff has no l-m interaction"));
    }
    let l = (corners.p222 - corners.p221) / slope;
    CoalitionMixedStrategy::new(l).map_err(|_| Error::Degenerate("stationary point outside [0, 1]"))
}

/// Grid maximin of a bilinear surface `f(l, m)`.
///
/// `l` runs over the grid `0, h, 2h, …, 1`; the inner minimum over `m` is
/// taken at the endpoints, which is exact for a surface linear in `m`.
/// Ties keep the smallest `l`. Returns `(l_hat, value_hat)`.
pub fn maximin_grid_oracle(surface: impl Fn(f64, f64) -> f64, resolution: f64) -> Result<(f64, f64)> {
    if !(resolution > 0.0 && resolution <= 0.1) {
        return Err(Error::Domain {
            what: "resolution",
            value: resolution,
            range: "(0, 0.1]",
        });
    }
    let steps = (1.0 / resolution - 1e-9).ceil() as usize;
    let mut best = (0.0, f64::NEG_INFINITY);
    for i in 0..=steps {
        let l = (i as f64 * resolution).min(1.0);
        let worst = surface(l, 0.0).min(surface(l, 1.0));
        if worst > best.1 {
            best = (l, worst);
        }
    }
    Ok(best)
}

pub fn oddman_value(weights: &StateWeights) -> Result<f64> {
    weights.require_admissible()?;
    Ok(-(weights.w1 + weights.w2))
}

/// `P(p,q,r) + P(q,p,r) + P(r,p,q)`; nonzero means the quantum game is not zero-sum here.
pub fn zero_sum_deficit(profile: &StrategyProfile, weights: &StateWeights) -> Result<f64> {
    profile.validate()?;
    let StrategyProfile { p, q, r } = *profile;
    [(p, q, r), (q, p, r), (r, p, q)]
        .into_iter()
        .map(|(x, y, z)| symmetric_payoff(&StrategyProfile { p: x, q: y, r: z }, weights))
        .sum()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Motivated,
    Indifferent,
    Antimotivated,
}

impl Verdict {
    /// Classifies `v_coalition - v_oddman`.
    pub fn from_advantage(advantage: f64) -> Self {
        if advantage > VERDICT_EPS {
            Verdict::Motivated
        } else if advantage.abs() <= VERDICT_EPS {
            Verdict::Indifferent
        } else {
            Verdict::Antimotivated
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Motivated => "Motivated",
            Verdict::Indifferent => "Indifferent",
            Verdict::Antimotivated => "Antimotivated",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoalitionValueReport {
    pub l_star: f64,
    pub v_coalition: f64,
    pub v_oddman: f64,
    pub verdict: Verdict,
    /// `|v_coalition - grid maximin|` at [`REPORT_GRID_RESOLUTION`].
    pub grid_check_gap: f64,
}

pub fn solve_coalition_value(weights: &StateWeights) -> Result<CoalitionValueReport> {
    let corners = corner_payoffs(weights)?;
    let l_star = stationary_strategy(&corners)?.l();
    // independent of m at the stationary point; average the two endpoints
    let v_coalition = 0.5 * (corners.surface(l_star, 0.0) + corners.surface(l_star, 1.0));
    let v_oddman = oddman_value(weights)?;
    let (_, grid_value) = maximin_grid_oracle(|l, m| corners.surface(l, m), REPORT_GRID_RESOLUTION)?;
    Ok(CoalitionValueReport {
        l_star,
        v_coalition,
        v_oddman,
        verdict: Verdict::from_advantage(v_coalition - v_oddman),
        grid_check_gap: (v_coalition - grid_value).abs(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classical::solve_2x2_zero_sum;

    fn w(w1: f64, w2: f64) -> StateWeights {
        StateWeights::symmetric(w1, w2).unwrap()
    }

    fn lm(l: f64, m: f64) -> (CoalitionMixedStrategy, OddManMixedStrategy) {
        (
            CoalitionMixedStrategy::new(l).unwrap(),
            OddManMixedStrategy::new(m).unwrap(),
        )
    }

    #[test]
    fn corner_cases() {
        let c = corner_payoffs(&w(1.0, 0.0)).unwrap();
        assert_eq!((c.p111, c.p112, c.p221, c.p222), (0.0, 2.0, 2.0, 0.0));
        let c = corner_payoffs(&w(0.0, 1.0)).unwrap();
        assert_eq!((c.p111, c.p112, c.p221, c.p222), (-4.0, 2.0, 2.0, -4.0));
        let c = corner_payoffs(&w(0.5, 0.5)).unwrap();
        assert_eq!((c.p111, c.p112), (-2.0, 2.0));
    }

    #[test]
    fn corners_reject_inadmissible() {
        let bad = StateWeights::new(0.5, 0.0, 0.25, 0.25).unwrap();
        assert!(matches!(corner_payoffs(&bad), Err(Error::Admissibility { .. })));
        let (l, m) = lm(0.5, 0.5);
        assert!(coalition_payoff(l, m, &bad).is_err());
        assert!(oddman_value(&bad).is_err());
        assert!(solve_coalition_value(&bad).is_err());
        assert!(zero_sum_deficit(&StrategyProfile::new(0.1, 0.2, 0.3).unwrap(), &bad).is_err());
    }

    #[test]
    fn coalition_payoff_cases() {
        let (l, m) = lm(1.0, 1.0);
        assert_eq!(coalition_payoff(l, m, &w(1.0, 0.0)).unwrap(), 0.0);
        for m in [0.0, 0.3, 1.0] {
            let (l, m) = lm(0.5, m);
            assert_eq!(coalition_payoff(l, m, &w(1.0, 0.0)).unwrap(), 1.0);
            let v = coalition_payoff(l, m, &w(0.7, 0.3)).unwrap();
            assert!((v - 0.4).abs() < 1e-12);
        }
    }

    #[test]
    fn mixed_strategy_ranges() {
        assert!(CoalitionMixedStrategy::new(1.01).is_err());
        assert!(OddManMixedStrategy::new(-0.01).is_err());
    }

    #[test]
    fn solve_cases() {
        let r = solve_coalition_value(&w(1.0, 0.0)).unwrap();
        assert_eq!(r.l_star, 0.5);
        assert_eq!((r.v_coalition, r.v_oddman), (1.0, -1.0));
        assert_eq!(r.verdict, Verdict::Motivated);
        assert!(r.grid_check_gap < 1e-12);

        let r = solve_coalition_value(&w(0.0, 1.0)).unwrap();
        assert_eq!(r.l_star, 0.5);
        assert_eq!((r.v_coalition, r.v_oddman), (-1.0, -1.0));
        assert_eq!(r.verdict, Verdict::Indifferent);

        let r = solve_coalition_value(&w(0.6, 0.4)).unwrap();
        assert!((r.v_coalition - 0.2).abs() < 1e-12);
        assert!((r.v_oddman + 1.0).abs() < 1e-12);
        assert_eq!(r.verdict, Verdict::Motivated);
        assert!(r.grid_check_gap <= 2e-3);
    }

    #[test]
    fn stationarity_agrees_with_the_2x2_solver() {
        for i in 0..=20 {
            let w1 = i as f64 / 20.0;
            let corners = corner_payoffs(&w(w1, 1.0 - w1)).unwrap();
            let l = stationary_strategy(&corners).unwrap().l();
            let solved = solve_2x2_zero_sum(corners.as_matrix()).unwrap();
            let v = solve_coalition_value(&w(w1, 1.0 - w1)).unwrap().v_coalition;
            assert!((solved.row_mixture[0] - l).abs() < 1e-12);
            assert!((solved.value - v).abs() < 1e-12);
        }
    }

    #[test]
    fn oddman_value_matches_its_own_maximin() {
        // Odd man A against the coalition's [11], [22]; rows are A's [1], [2].
        for (w1, w2) in [(1.0, 0.0), (0.0, 1.0), (0.3, 0.7), (0.5, 0.5)] {
            let weights = w(w1, w2);
            let pa = |p: f64, q: f64| symmetric_payoff(&StrategyProfile::new(p, q, q).unwrap(), &weights).unwrap();
            let game = [[pa(0.0, 0.0), pa(0.0, 1.0)], [pa(1.0, 0.0), pa(1.0, 1.0)]];
            let solved = solve_2x2_zero_sum(game).unwrap().value;
            assert!((solved - oddman_value(&weights).unwrap()).abs() < 1e-12, "{w1},{w2}");
        }
    }

    #[test]
    fn grid_oracle_cases() {
        let corners = corner_payoffs(&w(1.0, 0.0)).unwrap();
        let (l, v) = maximin_grid_oracle(|l, m| corners.surface(l, m), 0.001).unwrap();
        assert!((v - 1.0).abs() < 1e-9);
        assert!((l - 0.5).abs() < 1e-12);

        assert_eq!(maximin_grid_oracle(|_, _| 3.0, 0.01).unwrap(), (0.0, 3.0));

        let corners = corner_payoffs(&w(0.0, 1.0)).unwrap();
        let (_, v) = maximin_grid_oracle(|l, m| corners.surface(l, m), 0.001).unwrap();
        assert!((v + 1.0).abs() < 1e-9);
    }

    #[test]
    fn grid_oracle_resolution_domain() {
        assert!(maximin_grid_oracle(|_, _| 0.0, 0.0).is_err());
        assert!(maximin_grid_oracle(|_, _| 0.0, 0.2).is_err());
        assert!(maximin_grid_oracle(|_, _| 0.0, f64::NAN).is_err());
        // a step that does not divide 1 still reaches l = 1
        let (l, _) = maximin_grid_oracle(|l, _| l, 0.03).unwrap();
        assert_eq!(l, 1.0);
    }

    #[test]
    fn oddman_cases() {
        assert_eq!(oddman_value(&w(1.0, 0.0)).unwrap(), -1.0);
        assert_eq!(oddman_value(&w(0.0, 1.0)).unwrap(), -1.0);
        assert!((oddman_value(&w(0.3, 0.7)).unwrap() + 1.0).abs() < 1e-15);
    }

    #[test]
    fn deficit_cases() {
        let prof = |p, q, r| StrategyProfile::new(p, q, r).unwrap();
        for p in [prof(0.0, 0.0, 0.0), prof(0.2, 0.9, 0.4), prof(1.0, 0.0, 1.0)] {
            assert!(zero_sum_deficit(&p, &w(1.0, 0.0)).unwrap().abs() < 1e-12);
        }
        let close = |a: f64, b: f64| (a - b).abs() < 1e-12;
        assert!(close(
            zero_sum_deficit(&prof(0.5, 0.5, 0.5), &w(0.0, 1.0)).unwrap(),
            0.0
        ));
        assert!(close(
            zero_sum_deficit(&prof(0.0, 0.0, 0.0), &w(0.0, 1.0)).unwrap(),
            -6.0
        ));
        assert!(close(
            zero_sum_deficit(&prof(0.0, 0.0, 0.0), &w(0.5, 0.5)).unwrap(),
            -3.0
        ));
    }

    #[test]
    fn verdict_rule() {
        assert_eq!(Verdict::from_advantage(2.0), Verdict::Motivated);
        assert_eq!(Verdict::from_advantage(1e-10), Verdict::Indifferent);
        assert_eq!(Verdict::from_advantage(-1e-10), Verdict::Indifferent);
        assert_eq!(Verdict::from_advantage(-1e-3), Verdict::Antimotivated);
    }
}
