//! Fixed-size complex linear algebra over the three-qubit Hilbert space.
//!
//! Basis index convention: a label `i ∈ {1, 2}` maps to bit `i - 1`, and
//! player A owns the most significant bit, so `|ijk⟩` sits at row
//! `4·(i-1) + 2·(j-1) + (k-1)`. Every other module inherits this.

use std::fmt;
use std::ops::{Add, Mul};

pub use num_complex::Complex64 as Complex;

/// Hilbert-space dimension for three qubits.
pub const DIM: usize = 8;

/// Entrywise tolerance for matrix equality and Hermiticity.
pub const MATRIX_TOL: f64 = 1e-12;

/// Basis labels in index order.
pub const BASIS_LABELS: [&str; DIM] = ["111", "112", "121", "122", "211", "212", "221", "222"];

const ZERO: Complex = Complex::new(0.0, 0.0);
const ONE: Complex = Complex::new(1.0, 0.0);

/// Row index of `|ijk⟩` for labels in `{1, 2}`.
///
/// Panics if a label is outside `{1, 2}`.
pub fn basis_index(labels: [u8; 3]) -> usize {
    labels.iter().fold(0, |acc, &l| {
        assert!(l == 1 || l == 2, "basis label must be 1 or 2, got {l}");
        (acc << 1) | usize::from(l - 1)
    })
}

/// Parses a label string such as `"211"` into its basis index.
pub fn parse_basis_label(label: &str) -> Option<usize> {
    BASIS_LABELS.iter().position(|&l| l == label)
}

/// A 2×2 complex matrix acting on a single qubit.
pub type Mat2 = [[Complex; 2]; 2];

pub fn identity2() -> Mat2 {
    [[ONE, ZERO], [ZERO, ONE]]
}

/// The Pauli spin-flip σ_x.
pub fn sigma_x() -> Mat2 {
    [[ZERO, ONE], [ONE, ZERO]]
}

#[derive(Clone, Copy, PartialEq)]
pub struct Matrix8 {
    entries: [[Complex; DIM]; DIM],
}

impl Matrix8 {
    pub fn zeros() -> Self {
        Self {
            entries: [[ZERO; DIM]; DIM],
        }
    }

    pub fn identity() -> Self {
        Self::from_real_diagonal(&[1.0; DIM])
    }

    pub fn from_entries(entries: [[Complex; DIM]; DIM]) -> Self {
        Self { entries }
    }

    pub fn from_real_diagonal(diag: &[f64; DIM]) -> Self {
        let mut m = Self::zeros();
        for (k, &d) in diag.iter().enumerate() {
            m.entries[k][k] = Complex::new(d, 0.0);
        }
        m
    }

    /// Outer product `|u⟩⟨v|`.
    pub fn outer(u: &[Complex; DIM], v: &[Complex; DIM]) -> Self {
        let mut m = Self::zeros();
        for (row, ui) in m.entries.iter_mut().zip(u) {
            for (entry, vj) in row.iter_mut().zip(v) {
                *entry = ui * vj.conj();
            }
        }
        m
    }

    /// Projector `|k⟩⟨k|` onto a basis state.
    pub fn projector(k: usize) -> Self {
        let mut m = Self::zeros();
        m.entries[k][k] = ONE;
        m
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> Complex {
        self.entries[row][col]
    }

    #[inline]
    pub fn set(&mut self, row: usize, col: usize, value: Complex) {
        self.entries[row][col] = value;
    }

    pub fn entries(&self) -> &[[Complex; DIM]; DIM] {
        &self.entries
    }

    pub fn diagonal(&self) -> [Complex; DIM] {
        std::array::from_fn(|k| self.entries[k][k])
    }

    pub fn is_diagonal(&self) -> bool {
        (0..DIM).all(|i| (0..DIM).all(|j| i == j || self.entries[i][j] == ZERO))
    }

    pub fn scale(&self, s: f64) -> Self {
        let mut m = *self;
        m.entries.iter_mut().flatten().for_each(|z| *z *= s);
        m
    }

    pub fn trace(&self) -> Complex {
        (0..DIM).map(|k| self.entries[k][k]).sum()
    }

    /// Largest entrywise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.entries
            .iter()
            .flatten()
            .zip(other.entries.iter().flatten())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.max_abs_diff(other) <= tol
    }

    /// Largest entrywise modulus of `self - self†`.
    pub fn hermiticity_gap(&self) -> f64 {
        self.max_abs_diff(&dagger(self))
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermiticity_gap() <= tol
    }

    pub fn is_finite(&self) -> bool {
        self.entries
            .iter()
            .flatten()
            .all(|z| z.re.is_finite() && z.im.is_finite())
    }
}

impl Default for Matrix8 {
    fn default() -> Self {
        Self::zeros()
    }
}

impl fmt::Debug for Matrix8 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix8 [")?;
        for row in &self.entries {
            write!(f, "  ")?;
            for z in row {
                write!(f, "{:>9.4}{:+.4}i ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// `a ⊗ b ⊗ c`, with `a` (player A) as the most significant factor.
pub fn kron(a: &Mat2, b: &Mat2, c: &Mat2) -> Matrix8 {
    let mut m = Matrix8::zeros();
    for row in 0..DIM {
        let (ra, rb, rc) = (row >> 2, (row >> 1) & 1, row & 1);
        for col in 0..DIM {
            let (ca, cb, cc) = (col >> 2, (col >> 1) & 1, col & 1);
            m.entries[row][col] = a[ra][ca] * b[rb][cb] * c[rc][cc];
        }
    }
    m
}

pub fn mul(a: &Matrix8, b: &Matrix8) -> Matrix8 {
    let mut m = Matrix8::zeros();
    for i in 0..DIM {
        for k in 0..DIM {
            let aik = a.entries[i][k];
            if aik == ZERO {
                continue;
            }
            for j in 0..DIM {
                m.entries[i][j] += aik * b.entries[k][j];
            }
        }
    }
    m
}

/// Conjugate transpose.
pub fn dagger(a: &Matrix8) -> Matrix8 {
    let mut m = Matrix8::zeros();
    for i in 0..DIM {
        for j in 0..DIM {
            m.entries[j][i] = a.entries[i][j].conj();
        }
    }
    m
}

/// `Tr(a·b)` without forming the product; O(n) when `a` is diagonal.
pub fn trace_of_product(a: &Matrix8, b: &Matrix8) -> Complex {
    if a.is_diagonal() {
        return (0..DIM).map(|k| a.entries[k][k] * b.entries[k][k]).sum();
    }
    let mut acc = ZERO;
    for i in 0..DIM {
        for j in 0..DIM {
            acc += a.entries[i][j] * b.entries[j][i];
        }
    }
    acc
}

impl Mul for Matrix8 {
    type Output = Matrix8;

    fn mul(self, rhs: Matrix8) -> Matrix8 {
        mul(&self, &rhs)
    }
}

impl Add for Matrix8 {
    type Output = Matrix8;

    fn add(mut self, rhs: Matrix8) -> Matrix8 {
        for (a, b) in self.entries.iter_mut().flatten().zip(rhs.entries.iter().flatten()) {
            *a += b;
        }
        self
    }
}
