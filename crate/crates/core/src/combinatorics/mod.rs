//! Exact combinatorics of matchings and basketballs.

mod basketball;
mod enumerate;
mod matching;
mod partition;

pub use basketball::{Basketball, Bimatching, Quartet, SymmetryOp};
pub use enumerate::{
    count_basketballs, crossing_histogram, enumerate_basketballs, enumerate_partitions,
    rotation_class_count, rotation_class_representatives, OrderLimit,
};
pub use matching::Matching;
pub use partition::Nc4Partition;

use crate::error::CombinatoricsError;

/// An unordered pair, stored as `(min, max)`.
pub type Pair = (usize, usize);

pub(crate) fn canonical(a: usize, b: usize) -> Pair {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Whether two disjoint pairs cross: exactly one element of `q` lies strictly
/// between the elements of `p`.
pub fn crosses(p: Pair, q: Pair) -> Result<bool, CombinatoricsError> {
    let (a, b) = canonical(p.0, p.1);
    let (c, d) = canonical(q.0, q.1);
    if a == b || c == d || a == c || a == d || b == c || b == d {
        return Err(CombinatoricsError::InvalidInput(format!(
            "pairs {p:?} and {q:?} are not disjoint pairs of distinct elements"
        )));
    }
    Ok(crosses_unchecked((a, b), (c, d)))
}

#[inline]
pub(crate) fn crosses_unchecked(p: Pair, q: Pair) -> bool {
    let inside = |x: usize| p.0 < x && x < p.1;
    inside(q.0) != inside(q.1)
}
