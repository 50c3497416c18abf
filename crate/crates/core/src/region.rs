//! The staircase region filled by DS pipe dreams for a pair `(λ in a×b, μ in c×d)`.
//!
//! Rows are numbered from the bottom (1..=a+b) and columns from the west
//! (1..=n with n = a+b+c+d). The lower half is rows `1..=b`, the upper half rows
//! `b+1..=b+a`.

use std::fmt::Write as _;

use crate::partitions::BoxedPartition;
use crate::tiles::{Half, Letter, Word};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Region {
    lambda: BoxedPartition,
    mu: BoxedPartition,
    a: usize,
    b: usize,
    c: usize,
    d: usize,
    /// First `b` letters of λ's bit string, 0 -> R, 1 -> 0; entry `y-1` sits east of lower row `y`.
    lambda1: Vec<Letter>,
    /// Last `a` letters of λ's bit string, 0 -> R, 1 -> Q, in reading order (top row first).
    lambda2: Vec<Letter>,
    mu_bits: Vec<Letter>,
    q_star: usize,
}

/// A cell position `(col, row)`.
pub type Cell = (usize, usize);

pub fn build_region(lambda: &BoxedPartition, mu: &BoxedPartition) -> Region {
    Region::new(lambda, mu)
}

fn bit_letter(bit: bool) -> Letter {
    if bit {
        Letter::One
    } else {
        Letter::Zero
    }
}

impl Region {
    pub fn new(lambda: &BoxedPartition, mu: &BoxedPartition) -> Region {
        let (a, b) = (lambda.rows(), lambda.cols());
        let (c, d) = (mu.rows(), mu.cols());
        let lb = lambda.bits();
        let lambda1 = lb.bits()[..b]
            .iter()
            .map(|&bit| if bit { Letter::Zero } else { Letter::R })
            .collect();
        let lambda2: Vec<Letter> = lb.bits()[b..]
            .iter()
            .map(|&bit| if bit { Letter::Q } else { Letter::R })
            .collect();
        let q_star = lambda2.iter().filter(|&&l| l == Letter::Q).count();
        Region {
            lambda: lambda.clone(),
            mu: mu.clone(),
            a,
            b,
            c,
            d,
            lambda1,
            lambda2,
            mu_bits: mu
                .bits()
                .bits()
                .iter()
                .map(|&bit| bit_letter(bit))
                .collect(),
            q_star,
        }
    }

    pub fn lambda(&self) -> &BoxedPartition {
        &self.lambda
    }

    pub fn mu(&self) -> &BoxedPartition {
        &self.mu
    }

    /// `(a, b, c, d)`.
    pub fn dims(&self) -> (usize, usize, usize, usize) {
        (self.a, self.b, self.c, self.d)
    }

    /// Total width `a+b+c+d`, also the length of ν's bit string.
    pub fn width(&self) -> usize {
        self.a + self.b + self.c + self.d
    }

    pub fn height(&self) -> usize {
        self.a + self.b
    }

    /// Number of Q letters in the upper-west labels.
    pub fn q_star(&self) -> usize {
        self.q_star
    }

    pub fn half_of_row(&self, row: usize) -> Half {
        if row <= self.b {
            Half::Lower
        } else {
            Half::Upper
        }
    }

    /// Inclusive column range of a row.
    pub fn row_span(&self, row: usize) -> (usize, usize) {
        assert!((1..=self.height()).contains(&row), "row {row} out of range");
        let inner = self.b + self.d + self.c;
        if row <= self.b {
            (self.b - row + 1, inner)
        } else {
            (1, inner + row - self.b)
        }
    }

    pub fn contains(&self, (col, row): Cell) -> bool {
        (1..=self.height()).contains(&row) && {
            let (lo, hi) = self.row_span(row);
            (lo..=hi).contains(&col)
        }
    }

    /// All cells in scan order: rows bottom to top, lower rows west to east,
    /// upper rows east to west.
    pub fn scan_order(&self) -> Vec<Cell> {
        let mut out = Vec::new();
        for row in 1..=self.height() {
            let (lo, hi) = self.row_span(row);
            match self.half_of_row(row) {
                Half::Lower => out.extend((lo..=hi).map(|c| (c, row))),
                Half::Upper => out.extend((lo..=hi).rev().map(|c| (c, row))),
            }
        }
        out
    }

    pub fn num_cells(&self) -> usize {
        (1..=self.height())
            .map(|r| {
                let (lo, hi) = self.row_span(r);
                hi + 1 - lo
            })
            .sum()
    }

    /// Fixed label on the horizontal edge south of a cell, if that edge is on the
    /// region's boundary.
    pub fn fixed_south(&self, (col, row): Cell) -> Option<Letter> {
        if !self.contains((col, row)) {
            return None;
        }
        let (lo, hi) = self.row_span(row);
        match self.half_of_row(row) {
            Half::Lower if col == lo => Some(Letter::R),
            Half::Upper if col == hi => {
                let k = row - self.b;
                Some(if k <= self.q_star {
                    Letter::Q
                } else {
                    Letter::Zero
                })
            }
            _ if row == 1 => Some(self.mu_bits[col - self.b - 1]),
            _ => None,
        }
    }

    /// Fixed label on the vertical edge where the scan enters a row: the west
    /// edge of a lower row, the east edge of an upper row.
    pub fn row_entry_label(&self, row: usize) -> Word {
        match self.half_of_row(row) {
            Half::Lower => Word::single(Letter::Zero),
            Half::Upper => Word::single(Letter::One),
        }
    }

    /// Fixed label on the vertical edge where the scan leaves a row: east of a
    /// lower row (from λ's first letters), west of an upper row (from λ's last letters).
    pub fn row_exit_label(&self, row: usize) -> Word {
        match self.half_of_row(row) {
            Half::Lower => Word::single(self.lambda1[row - 1]),
            Half::Upper => {
                let k = row - self.b;
                Word::single(self.lambda2[self.a - k])
            }
        }
    }

    /// Whether an equivariant tile may sit in this cell.
    pub fn in_eq_zone(&self, (col, row): Cell) -> bool {
        let (_, b, c, d) = self.dims();
        match self.half_of_row(row) {
            Half::Lower => col > b + d && col <= b + d + c,
            Half::Upper => col <= b + d,
        }
    }

    /// Labels across the south boundary of row 1 (columns `b+1..=b+d+c`), west to east.
    pub fn south_labels(&self) -> &[Letter] {
        &self.mu_bits
    }

    /// Labels east of the lower rows, bottom to top.
    pub fn lower_east_labels(&self) -> &[Letter] {
        &self.lambda1
    }

    /// Labels west of the upper rows, top to bottom.
    pub fn upper_west_labels(&self) -> &[Letter] {
        &self.lambda2
    }

    /// Staircase labels south of the last cell of each upper row, bottom to top.
    pub fn staircase_labels(&self) -> Vec<Letter> {
        (1..=self.a)
            .map(|k| {
                if k <= self.q_star {
                    Letter::Q
                } else {
                    Letter::Zero
                }
            })
            .collect()
    }

    /// Text grid of the region with its fixed boundary labels. Cells are `.`,
    /// shaded (equivariant-allowed) cells are `*`.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let (a, b, c, d) = self.dims();
        let _ = writeln!(
            out,
            "region for {} x {}  (a={a} b={b} c={c} d={d}, width {})",
            self.lambda,
            self.mu,
            self.width()
        );
        let n = self.width();
        for row in (1..=self.height()).rev() {
            let (lo, hi) = self.row_span(row);
            let mut line = String::new();
            for col in 1..=n {
                if col == lo {
                    let west = match self.half_of_row(row) {
                        Half::Lower => self.row_entry_label(row),
                        Half::Upper => self.row_exit_label(row),
                    };
                    let _ = write!(line, "{west}");
                } else {
                    line.push(' ');
                }
                if (lo..=hi).contains(&col) {
                    line.push(if self.in_eq_zone((col, row)) {
                        '*'
                    } else {
                        '.'
                    });
                } else {
                    line.push(' ');
                }
                if col == hi {
                    let east = match self.half_of_row(row) {
                        Half::Lower => self.row_exit_label(row),
                        Half::Upper => self.row_entry_label(row),
                    };
                    let _ = write!(line, "{east}");
                }
            }
            let _ = writeln!(out, "{:>3} {}", row, line.trim_end());
            let mut south = String::new();
            for col in 1..=n {
                south.push(' ');
                south.push(match self.fixed_south((col, row)) {
                    Some(l) => l.symbol(),
                    _ => ' ',
                });
            }
            if !south.trim().is_empty() {
                let _ = writeln!(out, "    {}", south.trim_end());
            }
        }
        out
    }
}
