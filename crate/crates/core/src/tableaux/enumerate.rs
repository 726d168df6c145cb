use crate::error::{Error, Result};
use crate::shapes::Shape;

use super::Tableau;

/// Default size limit for listing every standard tableau of a shape.
pub const LISTING_BOUND: usize = 8;

/// Every standard tableau of `shape`, each once, with size capped at
/// [`LISTING_BOUND`].
pub fn enumerate_standard(shape: &Shape) -> Result<Vec<Tableau>> {
    enumerate_standard_bounded(shape, LISTING_BOUND)
}

/// Lists standard tableaux by growing `1, 2, …, n` one addible square at a
/// time, staying inside `shape`.
pub fn enumerate_standard_bounded(shape: &Shape, bound: usize) -> Result<Vec<Tableau>> {
    let size = shape.size();
    if size > bound {
        return Err(Error::BoundExceeded { size, bound });
    }
    let mut out = Vec::new();
    grow(shape, Tableau::empty(), 1, &mut out);
    Ok(out)
}

fn grow(target: &Shape, current: Tableau, next: u32, out: &mut Vec<Tableau>) {
    if current.size() == target.size() {
        out.push(current);
        return;
    }
    for sq in current.shape().addible_squares() {
        if target.contains_square(sq) {
            grow(target, current.add_entry_unchecked(sq, next), next + 1, out);
        }
    }
}
