//! The insertion scheme induced by a bumping scheme, its inverse, and an
//! independent implementation of Schensted row insertion for comparison.
//!
//! Forward insertion of `i` into `S` runs iteratively: keep the entries of
//! `S` below `i`, put `i` in the lone square, then re-add the larger entries
//! of `S` in increasing order. An entry whose old square is still free goes
//! back there; an entry whose old square is taken (necessarily a removable
//! square of the current shape) is bumped to its image under the scheme.
//!
//! Entries need only be distinct positive integers; "largest" and "greater
//! than `i`" refer to the numeric order of the actual entries.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bumping::{BumpingScheme, RowScheme};
use crate::error::{Error, Result};
use crate::report::Report;
use crate::shapes::{all_partitions, skew_square, Shape, Square};
use crate::tableaux::{enumerate_standard, Tableau};

/// Which rule placed an entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Rule {
    /// The inserted entry, into the lone square.
    Lone,
    /// An entry returned to its own square.
    SameSquare,
    /// An entry displaced through the bumping scheme.
    Bump,
}

impl Rule {
    pub fn label(self) -> &'static str {
        match self {
            Rule::Lone => "LONE",
            Rule::SameSquare => "SAME_SQUARE",
            Rule::Bump => "BUMP",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Step {
    pub entry: u32,
    pub square: Square,
    pub rule: Rule,
}

/// Every placement made while inserting, plus the tableaux before and after.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InsertionTrace {
    pub steps: Vec<Step>,
    pub initial: Tableau,
    #[serde(rename = "final")]
    pub final_tableau: Tableau,
}

impl InsertionTrace {
    /// The intermediate tableaux, one per step: the first holds the entries
    /// of the initial tableau below the inserted one plus the inserted entry,
    /// the last equals the final tableau.
    pub fn snapshots(&self) -> Vec<Tableau> {
        let Some(first) = self.steps.first() else {
            return Vec::new();
        };
        let mut current = self.initial.restrict_below(first.entry - 1);
        self.steps
            .iter()
            .map(|step| {
                current.push_unchecked(step.square, step.entry);
                current.clone()
            })
            .collect()
    }

    /// Entries placed by the bumping rule.
    pub fn bumped_entries(&self) -> Vec<u32> {
        self.steps.iter().filter(|s| s.rule == Rule::Bump).map(|s| s.entry).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InsertResult {
    pub tableau: Tableau,
    pub trace: InsertionTrace,
}

/// Inserts `value` into `tableau` using `scheme`.
pub fn insert<S: BumpingScheme + ?Sized>(
    scheme: &S,
    tableau: &Tableau,
    value: u32,
) -> Result<InsertResult> {
    if value == 0 {
        return Err(Error::ZeroEntry);
    }
    if tableau.contains(value) {
        return Err(Error::DuplicateEntry(value));
    }

    let mut current = tableau.restrict_below(value - 1);
    let lone = scheme.lone_square(&current.shape())?;
    current.push_unchecked(lone, value);
    let mut steps = vec![Step { entry: value, square: lone, rule: Rule::Lone }];

    let mut larger: Vec<(Square, u32)> = tableau.cells().filter(|&(_, v)| v > value).collect();
    larger.sort_unstable_by_key(|&(_, v)| v);

    for (home, entry) in larger {
        let shape = current.shape();
        let (square, rule) = if current.get(home).is_none() {
            (home, Rule::SameSquare)
        } else {
            (scheme.bump(&shape, home)?, Rule::Bump)
        };
        if !shape.is_addible(square) {
            return Err(Error::NotAddible { shape, square });
        }
        current.push_unchecked(square, entry);
        steps.push(Step { entry, square, rule });
    }

    Ok(InsertResult {
        tableau: current.clone(),
        trace: InsertionTrace { steps, initial: tableau.clone(), final_tableau: current },
    })
}

/// Inverts [`insert`]: given `tableau` and a shape `target` that it covers,
/// returns the unique `(S, i)` with `sh(S) = target` and
/// `insert(scheme, S, i) = tableau`.
///
/// The largest entry is peeled off repeatedly while the target shape is
/// tracked downward. Peeling stops when the largest entry sits in the lone
/// square of the current target; that entry is the one that was inserted.
pub fn uninsert<S: BumpingScheme + ?Sized>(
    scheme: &S,
    tableau: &Tableau,
    target: &Shape,
) -> Result<(Tableau, u32)> {
    skew_square(&tableau.shape(), target)?;

    let mut current = tableau.clone();
    let mut target = target.clone();
    // (square in S, entry), largest entry first
    let mut restored: Vec<(Square, u32)> = Vec::new();

    loop {
        let (rest, vacated, max) = current.remove_max()?;
        let rest_shape = rest.shape();
        let home = if rest_shape == target {
            if vacated == scheme.lone_square(&target)? {
                let mut source = rest;
                for (sq, v) in restored.into_iter().rev() {
                    source.push_unchecked(sq, v);
                }
                return Ok((source, max));
            }
            // The entry was bumped out of the removable square that maps to
            // the square it now occupies.
            scheme.unbump(&target, vacated)?
        } else {
            // The entry stayed in its own square: the square of the target
            // missing from what remains.
            let lower = target.meet(&rest_shape);
            skew_square(&target, &lower).map_err(|_| Error::NotCovering {
                outer: rest_shape.clone(),
                inner: target.clone(),
            })?
        };
        target = target.with_square_removed(home)?;
        restored.push((home, max));
        current = rest;
    }
}

/// Schensted row insertion, written directly: insert into the bottom row,
/// carry whatever is bumped to the row above. Returns the new tableau and
/// the square added to its shape.
pub fn classical_row_insert(tableau: &Tableau, value: u32) -> Result<(Tableau, Square)> {
    if value == 0 {
        return Err(Error::ZeroEntry);
    }
    if tableau.contains(value) {
        return Err(Error::DuplicateEntry(value));
    }
    let mut rows = tableau.rows().to_vec();
    let mut carry = value;
    for (r, row) in rows.iter_mut().enumerate() {
        match row.iter().position(|&a| a > carry) {
            Some(c) => carry = std::mem::replace(&mut row[c], carry),
            None => {
                row.push(carry);
                let square = Square::new(r + 1, row.len());
                return Ok((Tableau::new(rows)?, square));
            }
        }
    }
    rows.push(vec![carry]);
    let square = Square::new(rows.len(), 1);
    Ok((Tableau::new(rows)?, square))
}

/// Compares insertion under the row scheme with [`classical_row_insert`]
/// for every shape of size `1..=n_max`, every standard tableau `T` of that
/// shape and every `i` in `1..=n+1`, inserting `i` into `T` with the
/// entries `>= i` shifted up by one.
pub fn verify_row_scheme_equivalence(n_max: usize) -> Report {
    let shapes: Vec<Shape> = (1..=n_max).flat_map(all_partitions).collect();
    let mut report = Report::new(format!("row scheme = row insertion, n <= {n_max}"));
    let parts: Vec<Report> = shapes
        .par_iter()
        .map(|shape| {
            let mut local = Report::new("");
            let n = shape.size() as u32;
            let tableaux = match enumerate_standard(shape) {
                Ok(t) => t,
                Err(e) => {
                    local.check(false, || format!("({shape}): {e}"));
                    return local;
                }
            };
            for t in &tableaux {
                for i in 1..=n + 1 {
                    let s = shift_from(t, i);
                    let ours = insert(&RowScheme, &s, i).map(|r| r.tableau);
                    let theirs = classical_row_insert(&s, i).map(|r| r.0);
                    local.check(ours.is_ok() && ours == theirs, || {
                        format!("insert {i} into {s:?}: {ours:?} vs {theirs:?}")
                    });
                }
            }
            local
        })
        .collect();
    for p in parts {
        report.merge(p);
    }
    report
}

/// `t` with every entry `>= i` incremented, so that `i` is free.
pub fn shift_from(t: &Tableau, i: u32) -> Tableau {
    let rows = t
        .rows()
        .iter()
        .map(|row| row.iter().map(|&v| if v >= i { v + 1 } else { v }).collect())
        .collect();
    Tableau::new(rows).expect("shifting preserves order")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bumping::{ColumnScheme, RandomScheme, ReversingScheme};

    fn tab(rows: &[&[u32]]) -> Tableau {
        Tableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn s22() -> Tableau {
        tab(&[&[1, 2, 6, 7, 9], &[4, 5, 8], &[10, 11]])
    }

    #[test]
    fn row_scheme_matches_row_insertion_on_s22() {
        let out = insert(&RowScheme, &s22(), 3).unwrap();
        let expected = tab(&[&[1, 2, 3, 7, 9], &[4, 5, 6], &[8, 11], &[10]]);
        assert_eq!(out.tableau, expected);
        assert_eq!(classical_row_insert(&s22(), 3).unwrap().0, expected);
        assert_eq!(out.trace.bumped_entries(), vec![6, 8, 10]);
        assert_eq!(out.trace.final_tableau, out.tableau);
        assert_eq!(out.trace.initial, s22());
    }

    #[test]
    fn reversing_scheme_on_s22() {
        // Hand simulation: 6 is bumped from (1,3) in shape (3,2) to the top
        // addible square (3,1); 10 is bumped from (3,1) in shape (5,3,1) to
        // the second-highest addible square (2,4).
        let out = insert(&ReversingScheme, &s22(), 3).unwrap();
        assert_eq!(out.tableau, tab(&[&[1, 2, 3, 7, 9], &[4, 5, 8, 10], &[6, 11]]));
        assert_eq!(out.trace.bumped_entries(), vec![6, 10]);
        let rules: Vec<Rule> = out.trace.steps.iter().map(|s| s.rule).collect();
        use Rule::*;
        assert_eq!(
            rules,
            vec![Lone, SameSquare, SameSquare, Bump, SameSquare, SameSquare, SameSquare, Bump, SameSquare]
        );
    }

    #[test]
    fn insert_into_empty() {
        for scheme in [&RowScheme as &dyn BumpingScheme, &ColumnScheme, &ReversingScheme] {
            let out = insert(scheme, &Tableau::empty(), 7).unwrap();
            assert_eq!(out.tableau, tab(&[&[7]]));
            assert_eq!(out.trace.steps, vec![Step { entry: 7, square: Square::new(1, 1), rule: Rule::Lone }]);
        }
    }

    #[test]
    fn insert_rejects_present_or_zero() {
        assert_eq!(insert(&RowScheme, &s22(), 6).unwrap_err(), Error::DuplicateEntry(6));
        assert_eq!(insert(&RowScheme, &s22(), 0).unwrap_err(), Error::ZeroEntry);
        assert_eq!(classical_row_insert(&s22(), 6).unwrap_err(), Error::DuplicateEntry(6));
    }

    #[test]
    fn uninsert_examples() {
        let t = insert(&RowScheme, &s22(), 3).unwrap().tableau;
        let target = Shape::new(vec![5, 3, 2]).unwrap();
        assert_eq!(uninsert(&RowScheme, &t, &target).unwrap(), (s22(), 3));

        let single = tab(&[&[7]]);
        assert_eq!(uninsert(&ReversingScheme, &single, &Shape::empty()).unwrap(), (Tableau::empty(), 7));

        let start = tab(&[&[1, 2, 3, 7, 11], &[5, 6, 12, 14], &[8, 10], &[9]]);
        let end = tab(&[&[1, 2, 3, 4, 11], &[5, 6, 7, 14], &[8, 10, 12], &[9]]);
        let target = Shape::new(vec![5, 4, 2, 1]).unwrap();
        assert_eq!(uninsert(&RowScheme, &end, &target).unwrap(), (start, 4));
    }

    #[test]
    fn uninsert_rejects_uncovered_target() {
        let t = tab(&[&[1, 2], &[3]]);
        assert!(matches!(
            uninsert(&RowScheme, &t, &Shape::new(vec![3]).unwrap()),
            Err(Error::NotCovering { .. })
        ));
        assert!(uninsert(&RowScheme, &t, &Shape::new(vec![1]).unwrap()).is_err());
    }

    #[test]
    fn classical_examples() {
        let before = tab(&[&[1, 2, 3, 7, 11], &[5, 6, 12, 14], &[8, 10], &[9]]);
        let (after, sq) = classical_row_insert(&before, 4).unwrap();
        assert_eq!(after, tab(&[&[1, 2, 3, 4, 11], &[5, 6, 7, 14], &[8, 10, 12], &[9]]));
        assert_eq!(sq, Square::new(3, 3));

        assert_eq!(
            classical_row_insert(&Tableau::empty(), 5).unwrap(),
            (tab(&[&[5]]), Square::new(1, 1))
        );

        // 8 is already present.
        assert_eq!(classical_row_insert(&after, 8).unwrap_err(), Error::DuplicateEntry(8));
        // 13 is the only free value below 15 and exceeds all of row 1.
        let (after13, sq13) = classical_row_insert(&after, 13).unwrap();
        assert_eq!(after13, tab(&[&[1, 2, 3, 4, 11, 13], &[5, 6, 7, 14], &[8, 10, 12], &[9]]));
        assert_eq!(sq13, Square::new(1, 6));
    }

    #[test]
    fn classical_bump_through_all_rows() {
        let t = tab(&[&[2], &[3], &[4]]);
        let (after, sq) = classical_row_insert(&t, 1).unwrap();
        assert_eq!(after, tab(&[&[1], &[2], &[3], &[4]]));
        assert_eq!(sq, Square::new(4, 1));
    }

    #[test]
    fn snapshots_track_steps() {
        let out = insert(&ReversingScheme, &s22(), 3).unwrap();
        let snaps = out.trace.snapshots();
        assert_eq!(snaps.len(), out.trace.steps.len());
        assert_eq!(snaps[0], tab(&[&[1, 2, 3]]));
        assert_eq!(snaps.last().unwrap(), &out.tableau);
        assert!(snaps.iter().all(|t| Tableau::new(t.rows().to_vec()).is_ok()));
    }

    #[test]
    fn trace_json_format() {
        let out = insert(&RowScheme, &tab(&[&[2]]), 1).unwrap();
        let json = serde_json::to_string(&out.trace).unwrap();
        assert_eq!(
            json,
            r#"{"steps":[{"entry":1,"square":[1,1],"rule":"LONE"},{"entry":2,"square":[2,1],"rule":"BUMP"}],"initial":{"rows":[[2]]},"final":{"rows":[[1],[2]]}}"#
        );
        let back: InsertionTrace = serde_json::from_str(&json).unwrap();
        assert_eq!(back, out.trace);
    }

    #[test]
    fn row_equivalence_small() {
        let one = verify_row_scheme_equivalence(1);
        assert!(one.passed());
        assert_eq!(one.checked, 2);
        assert!(verify_row_scheme_equivalence(5).passed());
    }

    #[test]
    fn maximal_entry_goes_to_lone_square() {
        let scheme = RandomScheme::new(11);
        let out = insert(&scheme, &s22(), 12).unwrap();
        assert_eq!(out.trace.steps.len(), 1);
        assert_eq!(out.trace.steps[0].square, scheme.lone_square(&s22().shape()).unwrap());
    }
}
