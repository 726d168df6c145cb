#![allow(dead_code)]

use schensted_core::{
    BumpingScheme, ColumnScheme, RandomScheme, ReversingScheme, RowScheme, Shape, Tableau,
};

/// The schemes every bijectivity property is checked against.
pub fn test_schemes() -> Vec<Box<dyn BumpingScheme>> {
    vec![
        Box::new(RowScheme),
        Box::new(ColumnScheme),
        Box::new(ReversingScheme),
        Box::new(RandomScheme::new(1)),
        Box::new(RandomScheme::new(2)),
    ]
}

pub fn shapes_up_to(n: usize) -> impl Iterator<Item = Shape> {
    (0..=n).flat_map(schensted_core::all_partitions)
}

pub fn tab(rows: &[&[u32]]) -> Tableau {
    Tableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
}
