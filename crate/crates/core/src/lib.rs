//! Robinson–Schensted-type correspondences parametrized by bumping schemes.
//!
//! A [`BumpingScheme`] picks, for every shape, an injection from its
//! removable squares into its addible squares. Each scheme induces an
//! insertion algorithm ([`insert`], inverted by [`uninsert`]) and, through
//! it, a bijection between permutations and pairs of same-shape standard
//! tableaux ([`rs_forward`], [`rs_inverse`]). The row scheme recovers
//! Schensted row insertion and the column scheme column insertion.
//!
//! Shapes use French coordinates: row 1 is the bottom row.

pub mod bumping;
pub mod correspondence;
pub mod error;
pub mod insertion;
pub mod report;
pub mod shapes;
pub mod tableaux;

pub use bumping::{
    BuiltinScheme, BumpingScheme, ColumnScheme, RandomScheme, ReversingScheme, RowScheme,
    SchemeTable, TableScheme,
};
pub use correspondence::{
    first_row_length, lis_statistic, rs_forward, rs_forward_with_steps, rs_inverse, scramble,
    verify_bijection, verify_bijection_bounded, Permutation, TableauPair, BIJECTION_BOUND,
};
pub use error::{Error, Result};
pub use insertion::{
    classical_row_insert, insert, shift_from, uninsert, verify_row_scheme_equivalence,
    InsertResult, InsertionTrace, Rule, Step,
};
pub use report::Report;
pub use shapes::{all_partitions, skew_square, Shape, Square};
pub use tableaux::{
    count_standard, enumerate_standard, enumerate_standard_bounded, verify_dimension_formula,
    verify_upward_recursion, StandardCounter, Tableau, LISTING_BOUND,
};
