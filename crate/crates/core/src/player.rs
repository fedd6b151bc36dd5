use std::fmt;

/// One of the three players. A holds the most significant qubit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Player {
    A,
    B,
    C,
}

impl Player {
    pub const ALL: [Player; 3] = [Player::A, Player::B, Player::C];

    /// Position in `(A, B, C)` tuples.
    pub fn index(self) -> usize {
        self as usize
    }

    /// Bit mask of this player's qubit in a basis index.
    pub fn bit(self) -> usize {
        4 >> self.index()
    }
}

impl fmt::Display for Player {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Player::A => "A",
            Player::B => "B",
            Player::C => "C",
        };
        f.write_str(name)
    }
}
