//! Integer partitions drawn as Ferrers diagrams, and the local structure of
//! the Young lattice around a shape.
//!
//! Coordinates are French: row 1 is the bottom row and rows grow upward,
//! columns grow to the right. Both are 1-based. Every list of squares
//! returned from this module is ordered bottom-to-top.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A cell of a Ferrers diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "[usize; 2]", into = "[usize; 2]")]
pub struct Square {
    pub row: usize,
    pub col: usize,
}

impl Square {
    pub const fn new(row: usize, col: usize) -> Self {
        Square { row, col }
    }

    /// Reflection through the main diagonal.
    pub const fn transpose(self) -> Self {
        Square { row: self.col, col: self.row }
    }
}

impl From<[usize; 2]> for Square {
    fn from([row, col]: [usize; 2]) -> Self {
        Square { row, col }
    }
}

impl From<Square> for [usize; 2] {
    fn from(sq: Square) -> Self {
        [sq.row, sq.col]
    }
}

impl From<(usize, usize)> for Square {
    fn from((row, col): (usize, usize)) -> Self {
        Square { row, col }
    }
}

impl fmt::Display for Square {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

impl FromStr for Square {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("expected `(row,col)`, got `{s}`"));
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(bad)?;
        let (r, c) = inner.split_once(',').ok_or_else(bad)?;
        let row: usize = r.trim().parse().map_err(|_| bad())?;
        let col: usize = c.trim().parse().map_err(|_| bad())?;
        if row == 0 || col == 0 {
            return Err(bad());
        }
        Ok(Square { row, col })
    }
}

/// An integer partition `λ₁ ≥ λ₂ ≥ … ≥ λ_k ≥ 1`, possibly empty.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Shape {
    parts: Vec<usize>,
}

impl Shape {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidShape(parts));
        }
        Ok(Shape { parts })
    }

    /// Builds a shape from row lengths that are already known to be valid.
    pub(crate) fn from_parts_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(Shape::new(parts.clone()).is_ok(), "bad parts {parts:?}");
        Shape { parts }
    }

    pub fn empty() -> Self {
        Shape::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of squares.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of nonzero rows.
    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Length of row `row` (1-based); zero above the diagram.
    pub fn row_len(&self, row: usize) -> usize {
        match row {
            0 => usize::MAX,
            r => self.parts.get(r - 1).copied().unwrap_or(0),
        }
    }

    /// Height of column `col` (1-based).
    pub fn col_len(&self, col: usize) -> usize {
        self.parts.iter().take_while(|&&p| p >= col).count()
    }

    pub fn contains_square(&self, sq: Square) -> bool {
        sq.row >= 1 && sq.col >= 1 && sq.col <= self.row_len(sq.row)
    }

    /// All squares, row by row from the bottom, left to right.
    pub fn squares(&self) -> impl Iterator<Item = Square> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (1..=len).map(move |c| Square::new(r + 1, c)))
    }

    /// Whether every square of `other` lies in `self`.
    pub fn contains(&self, other: &Shape) -> bool {
        other.parts.len() <= self.parts.len()
            && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// The largest shape contained in both.
    pub fn meet(&self, other: &Shape) -> Shape {
        Shape::from_parts_unchecked(
            self.parts.iter().zip(&other.parts).map(|(a, b)| *a.min(b)).collect(),
        )
    }

    /// Squares whose removal leaves a shape, bottom-to-top.
    pub fn removable_squares(&self) -> Vec<Square> {
        (1..=self.rows())
            .filter(|&r| self.row_len(r) > self.row_len(r + 1))
            .map(|r| Square::new(r, self.row_len(r)))
            .collect()
    }

    /// Squares whose addition yields a shape, bottom-to-top. There is always
    /// exactly one more of these than there are removable squares.
    pub fn addible_squares(&self) -> Vec<Square> {
        (1..=self.rows() + 1)
            .filter(|&r| self.row_len(r - 1) > self.row_len(r))
            .map(|r| Square::new(r, self.row_len(r) + 1))
            .collect()
    }

    pub fn is_removable(&self, sq: Square) -> bool {
        sq.row >= 1
            && sq.row <= self.rows()
            && sq.col == self.row_len(sq.row)
            && self.row_len(sq.row + 1) < sq.col
    }

    pub fn is_addible(&self, sq: Square) -> bool {
        sq.row >= 1 && sq.col == self.row_len(sq.row) + 1 && self.row_len(sq.row - 1) >= sq.col
    }

    pub fn with_square_added(&self, sq: Square) -> Result<Shape> {
        if !self.is_addible(sq) {
            return Err(Error::NotAddible { shape: self.clone(), square: sq });
        }
        let mut parts = self.parts.clone();
        if sq.row > parts.len() {
            parts.push(1);
        } else {
            parts[sq.row - 1] += 1;
        }
        Ok(Shape::from_parts_unchecked(parts))
    }

    pub fn with_square_removed(&self, sq: Square) -> Result<Shape> {
        if !self.is_removable(sq) {
            return Err(Error::NotRemovable { shape: self.clone(), square: sq });
        }
        let mut parts = self.parts.clone();
        parts[sq.row - 1] -= 1;
        if parts[sq.row - 1] == 0 {
            parts.pop();
        }
        Ok(Shape::from_parts_unchecked(parts))
    }

    /// The shapes λ⁻, one per removable square, in the order of
    /// [`Shape::removable_squares`].
    pub fn predecessors(&self) -> Result<Vec<Shape>> {
        if self.is_empty() {
            return Err(Error::EmptyShape("predecessors"));
        }
        self.removable_squares()
            .into_iter()
            .map(|sq| self.with_square_removed(sq))
            .collect()
    }

    /// The shapes λ⁺, one per addible square, in the order of
    /// [`Shape::addible_squares`].
    pub fn successors(&self) -> Vec<Shape> {
        self.addible_squares()
            .into_iter()
            .map(|sq| self.with_square_added(sq).expect("addible square"))
            .collect()
    }

    /// The shapes λ⁺⁻: add a square, then remove a different one. The result
    /// is sorted in canonical (lexicographically descending) order and never
    /// contains `self`.
    pub fn plus_minus_shapes(&self) -> Result<Vec<Shape>> {
        if self.is_empty() {
            return Err(Error::EmptyShape("λ⁺⁻ shapes"));
        }
        let mut out = Vec::new();
        for added in self.addible_squares() {
            let up = self.with_square_added(added)?;
            for removed in up.removable_squares() {
                if removed != added {
                    out.push(up.with_square_removed(removed)?);
                }
            }
        }
        out.sort_unstable_by(|a, b| b.cmp(a));
        out.dedup();
        Ok(out)
    }

    /// Same set as [`Shape::plus_minus_shapes`], reached by removing first.
    pub fn minus_plus_shapes(&self) -> Result<Vec<Shape>> {
        if self.is_empty() {
            return Err(Error::EmptyShape("λ⁺⁻ shapes"));
        }
        let mut out = Vec::new();
        for removed in self.removable_squares() {
            let down = self.with_square_removed(removed)?;
            for added in down.addible_squares() {
                if added != removed {
                    out.push(down.with_square_added(added)?);
                }
            }
        }
        out.sort_unstable_by(|a, b| b.cmp(a));
        out.dedup();
        Ok(out)
    }

    /// Transposed diagram.
    pub fn conjugate(&self) -> Shape {
        let width = self.row_len(1);
        Shape::from_parts_unchecked((1..=width).map(|c| self.col_len(c)).collect())
    }
}

/// The unique square of `outer` that is not in `inner`, when `outer`
/// covers `inner` in the Young lattice.
pub fn skew_square(outer: &Shape, inner: &Shape) -> Result<Square> {
    let not_covering = || Error::NotCovering { outer: outer.clone(), inner: inner.clone() };
    if outer.size() != inner.size() + 1 || !outer.contains(inner) {
        return Err(not_covering());
    }
    let row = (1..=outer.rows())
        .find(|&r| outer.row_len(r) != inner.row_len(r))
        .ok_or_else(not_covering)?;
    Ok(Square::new(row, outer.row_len(row)))
}

/// All partitions of `n` in lexicographically descending order.
pub fn all_partitions(n: usize) -> Vec<Shape> {
    fn go(remaining: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Shape>) {
        if remaining == 0 {
            out.push(Shape::from_parts_unchecked(prefix.clone()));
            return;
        }
        for part in (1..=max_part.min(remaining)).rev() {
            prefix.push(part);
            go(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Shape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Shape::empty());
        }
        let parts = s
            .split(',')
            .map(|p| p.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| Error::Parse(format!("shape `{s}`: {e}")))?;
        Shape::new(parts)
    }
}

impl TryFrom<String> for Shape {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<Shape> for String {
    fn from(shape: Shape) -> Self {
        shape.to_string()
    }
}
