//! Tableaux with distinct positive entries, increasing along rows (left to
//! right) and columns (bottom to top). A tableau is *standard* when its
//! entries are exactly `1..=n`.

mod counting;
mod enumerate;

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::shapes::{Shape, Square};

pub use counting::{
    count_standard, verify_dimension_formula, verify_upward_recursion, StandardCounter,
};
pub use enumerate::{enumerate_standard, enumerate_standard_bounded, LISTING_BOUND};

/// A filling of a Ferrers diagram. Rows are stored bottom-up.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RowsRepr", into = "RowsRepr")]
pub struct Tableau {
    rows: Vec<Vec<u32>>,
}

#[derive(Serialize, Deserialize)]
struct RowsRepr {
    rows: Vec<Vec<u32>>,
}

impl TryFrom<RowsRepr> for Tableau {
    type Error = Error;

    fn try_from(repr: RowsRepr) -> Result<Self> {
        Tableau::new(repr.rows)
    }
}

impl From<Tableau> for RowsRepr {
    fn from(t: Tableau) -> Self {
        RowsRepr { rows: t.rows }
    }
}

impl Tableau {
    /// Validates shape, positivity, distinctness, and monotonicity.
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        let lens: Vec<usize> = rows.iter().map(Vec::len).collect();
        if lens.contains(&0) || lens.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidTableau(format!("row lengths {lens:?} do not form a shape")));
        }
        let mut seen = BTreeSet::new();
        for &v in rows.iter().flatten() {
            if v == 0 {
                return Err(Error::ZeroEntry);
            }
            if !seen.insert(v) {
                return Err(Error::DuplicateEntry(v));
            }
        }
        for (r, row) in rows.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                if c > 0 && row[c - 1] >= v {
                    return Err(Error::InvalidTableau(format!(
                        "row {} is not increasing at column {}",
                        r + 1,
                        c + 1
                    )));
                }
                if r > 0 && rows[r - 1][c] >= v {
                    return Err(Error::InvalidTableau(format!(
                        "column {} is not increasing at row {}",
                        c + 1,
                        r + 1
                    )));
                }
            }
        }
        Ok(Tableau { rows })
    }

    pub fn empty() -> Self {
        Tableau::default()
    }

    /// Rows bottom-up.
    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Vec<u32>> {
        self.rows
    }

    pub fn shape(&self) -> Shape {
        Shape::from_parts_unchecked(self.rows.iter().map(Vec::len).collect())
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn get(&self, sq: Square) -> Option<u32> {
        if sq.row == 0 || sq.col == 0 {
            return None;
        }
        self.rows.get(sq.row - 1)?.get(sq.col - 1).copied()
    }

    /// The square holding `value`, if present.
    pub fn position(&self, value: u32) -> Option<Square> {
        self.rows.iter().enumerate().find_map(|(r, row)| {
            row.iter().position(|&v| v == value).map(|c| Square::new(r + 1, c + 1))
        })
    }

    pub fn contains(&self, value: u32) -> bool {
        self.rows.iter().flatten().any(|&v| v == value)
    }

    /// Entries in increasing order.
    pub fn entries(&self) -> Vec<u32> {
        let mut all: Vec<u32> = self.rows.iter().flatten().copied().collect();
        all.sort_unstable();
        all
    }

    /// `(square, entry)` pairs, bottom row first.
    pub fn cells(&self) -> impl Iterator<Item = (Square, u32)> + '_ {
        self.rows.iter().enumerate().flat_map(|(r, row)| {
            row.iter().enumerate().map(move |(c, &v)| (Square::new(r + 1, c + 1), v))
        })
    }

    pub fn max_entry(&self) -> Option<u32> {
        self.rows.iter().flatten().copied().max()
    }

    pub fn is_standard(&self) -> bool {
        self.entries().into_iter().zip(1..).all(|(v, k)| v == k)
    }

    /// The sub-tableau of entries `<= bound`. Monotonicity guarantees the
    /// surviving squares form a shape.
    pub fn restrict_below(&self, bound: u32) -> Tableau {
        let rows = self
            .rows
            .iter()
            .map(|row| row.iter().copied().take_while(|&v| v <= bound).collect::<Vec<_>>())
            .take_while(|row| !row.is_empty())
            .collect();
        Tableau { rows }
    }

    /// Removes the largest entry, returning the smaller tableau, the vacated
    /// square, and the entry.
    pub fn remove_max(&self) -> Result<(Tableau, Square, u32)> {
        let max = self.max_entry().ok_or(Error::EmptyTableau)?;
        let sq = self.position(max).expect("max entry is present");
        let mut rows = self.rows.clone();
        rows[sq.row - 1].pop();
        if rows[sq.row - 1].is_empty() {
            rows.pop();
        }
        Ok((Tableau { rows }, sq, max))
    }

    /// Places `value` in the addible square `sq`.
    pub fn add_entry(&self, sq: Square, value: u32) -> Result<Tableau> {
        let shape = self.shape();
        if !shape.is_addible(sq) {
            return Err(Error::NotAddible { shape, square: sq });
        }
        if value == 0 {
            return Err(Error::ZeroEntry);
        }
        if self.contains(value) {
            return Err(Error::DuplicateEntry(value));
        }
        let left = (sq.col > 1).then(|| self.rows[sq.row - 1][sq.col - 2]);
        let below = (sq.row > 1).then(|| self.rows[sq.row - 2][sq.col - 1]);
        if left.into_iter().chain(below).any(|v| v >= value) {
            return Err(Error::Monotonicity { square: sq, value });
        }
        Ok(self.add_entry_unchecked(sq, value))
    }

    /// Places `value` at `sq` without checking anything. The insertion and
    /// inversion algorithms only call this where the invariants are known
    /// to hold.
    pub(crate) fn add_entry_unchecked(&self, sq: Square, value: u32) -> Tableau {
        let mut rows = self.rows.clone();
        if sq.row > rows.len() {
            rows.push(Vec::new());
        }
        rows[sq.row - 1].push(value);
        Tableau { rows }
    }

    pub(crate) fn push_unchecked(&mut self, sq: Square, value: u32) {
        if sq.row > self.rows.len() {
            self.rows.push(Vec::new());
        }
        self.rows[sq.row - 1].push(value);
    }

    /// Reflection through the main diagonal.
    pub fn transpose(&self) -> Tableau {
        let width = self.rows.first().map_or(0, Vec::len);
        let rows = (0..width)
            .map(|c| self.rows.iter().take_while(|row| row.len() > c).map(|row| row[c]).collect())
            .collect();
        Tableau { rows }
    }

    /// Renders rows top-first so the diagram reads right side up.
    pub fn render(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return f.write_str("∅");
        }
        let width = self.max_entry().map_or(1, |m| m.to_string().len());
        for (i, row) in self.rows.iter().rev().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let line: Vec<String> = row.iter().map(|v| format!("{v:>width$}")).collect();
            f.write_str(&line.join(" "))?;
        }
        Ok(())
    }
}
