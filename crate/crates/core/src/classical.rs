//! The classical three-player majority game and its coalition form.
//!
//! A pair coalition plays one of `[11], [12], [21], [22]` against the odd
//! man's `[1], [2]`; the coalition's payoff is the sum of its members'
//! payoffs. Dominated coalition rows are removed and the remaining 2×2
//! zero-sum game is solved in closed form.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::player::Player;

/// A classical pure strategy, `[1]` or `[2]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Strategy {
    One,
    Two,
}

impl Strategy {
    pub const BOTH: [Strategy; 2] = [Strategy::One, Strategy::Two];

    pub fn label(self) -> u8 {
        match self {
            Strategy::One => 1,
            Strategy::Two => 2,
        }
    }

    pub fn from_label(label: u8) -> Result<Self> {
        match label {
            1 => Ok(Strategy::One),
            2 => Ok(Strategy::Two),
            other => Err(Error::Domain {
                what: "strategy label",
                value: f64::from(other),
                range: "{1, 2}",
            }),
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

/// One pure strategy per player, `[A, B, C]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PureProfile(pub [Strategy; 3]);

impl PureProfile {
    pub fn from_labels(labels: [u8; 3]) -> Result<Self> {
        Ok(Self([
            Strategy::from_label(labels[0])?,
            Strategy::from_label(labels[1])?,
            Strategy::from_label(labels[2])?,
        ]))
    }

    pub fn all() -> impl Iterator<Item = PureProfile> {
        (0..8u8).map(|bits| {
            let pick = |mask: u8| if bits & mask == 0 { Strategy::One } else { Strategy::Two };
            PureProfile([pick(4), pick(2), pick(1)])
        })
    }

    pub fn of(&self, player: Player) -> Strategy {
        self.0[player.index()]
    }
}

/// Payoffs `(P_A, P_B, P_C)`: a matching pair collects one unit each from the odd man.
pub fn classical_payoff(profile: &PureProfile) -> [f64; 3] {
    let s = profile.0;
    std::array::from_fn(|i| match s.iter().filter(|&&x| x == s[i]).count() {
        3 => 0.0,
        2 => 1.0,
        _ => -2.0,
    })
}

/// A non-empty proper subset of the players.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CoalitionSpec {
    mask: u8,
}

impl CoalitionSpec {
    pub fn new(members: &[Player]) -> Result<Self> {
        let mask = members.iter().fold(0u8, |m, p| m | (1 << p.index()));
        let size = mask.count_ones() as usize;
        if !(1..=2).contains(&size) {
            return Err(Error::CoalitionSize { size });
        }
        Ok(Self { mask })
    }

    pub fn members(&self) -> Vec<Player> {
        Player::ALL
            .into_iter()
            .filter(|p| self.mask & (1 << p.index()) != 0)
            .collect()
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn contains(&self, player: Player) -> bool {
        self.mask & (1 << player.index()) != 0
    }

    /// The opposing coalition `ℜ − ℘`.
    pub fn complement(&self) -> CoalitionSpec {
        CoalitionSpec {
            mask: !self.mask & 0b111,
        }
    }

    /// All six coalitions: singletons first, then pairs.
    pub fn all() -> Vec<CoalitionSpec> {
        let mut all: Vec<_> = (1u8..7).map(|mask| CoalitionSpec { mask }).collect();
        all.sort_by_key(|c| (c.len(), c.members()));
        all
    }
}

impl fmt::Display for CoalitionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self.members().iter().map(Player::to_string).collect();
        write!(f, "{{{}}}", names.join(","))
    }
}

impl fmt::Debug for CoalitionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A coalition's joint pure strategy, members in player order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct JointStrategy(pub [Strategy; 2]);

impl JointStrategy {
    pub fn all() -> [JointStrategy; 4] {
        use Strategy::{One, Two};
        [
            JointStrategy([One, One]),
            JointStrategy([One, Two]),
            JointStrategy([Two, One]),
            JointStrategy([Two, Two]),
        ]
    }
}

impl fmt::Display for JointStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}{}]", self.0[0], self.0[1])
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MatrixRow {
    pub label: JointStrategy,
    /// Coalition payoff against the odd man's `[1]` and `[2]`.
    pub payoffs: [f64; 2],
}

/// Coalition payoffs: rows are the coalition's joint strategies, columns the
/// odd man's `[1], [2]`.
#[derive(Debug, Clone, PartialEq)]
pub struct CoalitionMatrix {
    pub coalition: CoalitionSpec,
    pub odd_man: Player,
    pub rows: Vec<MatrixRow>,
}

impl CoalitionMatrix {
    pub fn row(&self, label: JointStrategy) -> Option<&MatrixRow> {
        self.rows.iter().find(|r| r.label == label)
    }

    pub fn labels(&self) -> Vec<JointStrategy> {
        self.rows.iter().map(|r| r.label).collect()
    }
}

pub fn coalition_matrix(coalition: &CoalitionSpec) -> Result<CoalitionMatrix> {
    let members = coalition.members();
    if members.len() != 2 {
        return Err(Error::CoalitionSize { size: members.len() });
    }
    let odd_man = coalition.complement().members()[0];
    let rows = JointStrategy::all()
        .into_iter()
        .map(|joint| {
            let payoffs = Strategy::BOTH.map(|odd| {
                let mut s = [Strategy::One; 3];
                s[members[0].index()] = joint.0[0];
                s[members[1].index()] = joint.0[1];
                s[odd_man.index()] = odd;
                let pay = classical_payoff(&PureProfile(s));
                pay[members[0].index()] + pay[members[1].index()]
            });
            MatrixRow { label: joint, payoffs }
        })
        .collect();
    Ok(CoalitionMatrix {
        coalition: *coalition,
        odd_man,
        rows,
    })
}

/// A row removed during elimination and the row that removed it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EliminationStep {
    pub removed: JointStrategy,
    pub dominated_by: JointStrategy,
}

/// `a` is at least `b` everywhere and strictly better somewhere.
fn dominates(a: &[f64; 2], b: &[f64; 2]) -> bool {
    a.iter().zip(b).all(|(x, y)| x >= y) && a.iter().zip(b).any(|(x, y)| x > y)
}

/// Iterated removal of dominated coalition rows, with the removal record.
///
/// A row equal to an earlier surviving row is also removed, so the first in
/// label order survives.
pub fn eliminate_dominated_traced(matrix: &CoalitionMatrix) -> (CoalitionMatrix, Vec<EliminationStep>) {
    let mut rows = matrix.rows.clone();
    let mut steps = Vec::new();
    'fixpoint: loop {
        for j in 0..rows.len() {
            let by = (0..rows.len()).find(|&i| {
                i != j
                    && (dominates(&rows[i].payoffs, &rows[j].payoffs) || (i < j && rows[i].payoffs == rows[j].payoffs))
            });
            if let Some(i) = by {
                steps.push(EliminationStep {
                    removed: rows[j].label,
                    dominated_by: rows[i].label,
                });
                rows.remove(j);
                continue 'fixpoint;
            }
        }
        break;
    }
    (CoalitionMatrix { rows, ..matrix.clone() }, steps)
}

pub fn eliminate_dominated(matrix: &CoalitionMatrix) -> CoalitionMatrix {
    eliminate_dominated_traced(matrix).0
}

/// Optimal mixtures and value of a zero-sum game, row player maximizing.
#[derive(Debug, Clone, PartialEq)]
pub struct MixedSolution {
    pub row_mixture: Vec<f64>,
    pub col_mixture: Vec<f64>,
    pub value: f64,
}

/// Solves a 2×2 zero-sum game.
///
/// A pure saddle point (row minimum that is also its column maximum) is
/// preferred, first in row-major order. Otherwise the interior solution
/// equalizes both sides.
pub fn solve_2x2_zero_sum(m: [[f64; 2]; 2]) -> Result<MixedSolution> {
    for (i, row) in m.iter().enumerate() {
        let row_min = row[0].min(row[1]);
        for (j, &v) in row.iter().enumerate() {
            let col_max = m[0][j].max(m[1][j]);
            if v == row_min && v == col_max {
                let unit = |k: usize| if k == 0 { vec![1.0, 0.0] } else { vec![0.0, 1.0] };
                return Ok(MixedSolution {
                    row_mixture: unit(i),
                    col_mixture: unit(j),
                    value: v,
                });
            }
        }
    }
    let [[a11, a12], [a21, a22]] = m;
    let denom = a11 + a22 - a12 - a21;
    if denom == 0.0 {
        return Err(Error::Degenerate("no pure saddle and zero denominator"));
    }
    let x = (a22 - a21) / denom;
    let y = (a22 - a12) / denom;
    Ok(MixedSolution {
        row_mixture: vec![x, 1.0 - x],
        col_mixture: vec![y, 1.0 - y],
        value: (a11 * a22 - a12 * a21) / denom,
    })
}

/// Full classical pipeline for one pair coalition.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassicalCoalitionSolution {
    pub matrix: CoalitionMatrix,
    pub eliminated: Vec<EliminationStep>,
    pub reduced: CoalitionMatrix,
    pub solution: MixedSolution,
}

pub fn solve_classical_coalition(coalition: &CoalitionSpec) -> Result<ClassicalCoalitionSolution> {
    let matrix = coalition_matrix(coalition)?;
    let (reduced, eliminated) = eliminate_dominated_traced(&matrix);
    let solution = match reduced.rows.as_slice() {
        [only] => {
            let j = if only.payoffs[0] <= only.payoffs[1] { 0 } else { 1 };
            let mut col = vec![0.0; 2];
            col[j] = 1.0;
            MixedSolution {
                row_mixture: vec![1.0],
                col_mixture: col,
                value: only.payoffs[j],
            }
        }
        [r0, r1] => solve_2x2_zero_sum([r0.payoffs, r1.payoffs])?,
        _ => return Err(Error::Degenerate("more than two undominated coalition rows")),
    };
    Ok(ClassicalCoalitionSolution {
        matrix,
        eliminated,
        reduced,
        solution,
    })
}

/// Values of all six coalitions. Pairs are solved directly; a singleton
/// gets the negated value of the opposing pair since the game is zero-sum.
pub fn classical_coalition_values() -> Result<BTreeMap<CoalitionSpec, f64>> {
    let mut values = BTreeMap::new();
    for coalition in CoalitionSpec::all().into_iter().filter(|c| c.len() == 2) {
        let value = solve_classical_coalition(&coalition)?.solution.value;
        values.insert(coalition, value);
        values.insert(coalition.complement(), -value);
    }
    Ok(values)
}
