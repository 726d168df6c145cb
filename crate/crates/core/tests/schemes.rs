mod common;

use std::collections::HashSet;

use common::{shapes_up_to, test_schemes};
use schensted_core::{BumpingScheme, ColumnScheme, ReversingScheme, RowScheme, Square};

#[test]
fn injective_with_a_single_lone_square() {
    for scheme in test_schemes() {
        for shape in shapes_up_to(10) {
            let image = scheme.injection(&shape).unwrap();
            let distinct: HashSet<Square> = image.iter().copied().collect();
            assert_eq!(distinct.len(), image.len(), "{} on ({shape})", scheme.name());
            assert!(image.iter().all(|&a| shape.is_addible(a)));
            let off: Vec<Square> =
                shape.addible_squares().into_iter().filter(|a| !distinct.contains(a)).collect();
            assert_eq!(off, vec![scheme.lone_square(&shape).unwrap()]);
        }
    }
}

#[test]
fn unbump_inverts_bump() {
    for scheme in test_schemes() {
        for shape in shapes_up_to(10) {
            for sq in shape.removable_squares() {
                let image = scheme.bump(&shape, sq).unwrap();
                assert_eq!(scheme.unbump(&shape, image).unwrap(), sq);
            }
        }
    }
}

#[test]
fn lone_square_positions() {
    for shape in shapes_up_to(10) {
        assert_eq!(RowScheme.lone_square(&shape).unwrap(), Square::new(1, shape.row_len(1) + 1));
        assert_eq!(ReversingScheme.lone_square(&shape).unwrap().row, 1);
        assert_eq!(ColumnScheme.lone_square(&shape).unwrap(), Square::new(shape.col_len(1) + 1, 1));
    }
}

#[test]
fn column_scheme_is_conjugated_row_scheme() {
    for shape in shapes_up_to(10) {
        let conj = shape.conjugate();
        for sq in shape.removable_squares() {
            let via_row = RowScheme.bump(&conj, sq.transpose()).unwrap().transpose();
            assert_eq!(ColumnScheme.bump(&shape, sq).unwrap(), via_row, "({shape}) {sq}");
        }
    }
}
