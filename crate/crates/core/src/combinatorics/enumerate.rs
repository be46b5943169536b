use std::collections::{BTreeMap, HashMap, HashSet};

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;

use super::{Basketball, Bimatching, Matching, Nc4Partition};
use crate::error::CombinatoricsError;

/// Environment variable overriding the default enumeration limit.
pub const MAX_ORDER_ENV: &str = "HARMONICA_MAX_ORDER";

/// Guard on the order accepted by the exhaustive enumerations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrderLimit {
    pub max_order: usize,
}

impl Default for OrderLimit {
    fn default() -> Self {
        OrderLimit { max_order: 8 }
    }
}

impl OrderLimit {
    pub fn unlimited() -> Self {
        OrderLimit { max_order: usize::MAX }
    }

    /// The default limit, overridden by `HARMONICA_MAX_ORDER` when it parses.
    pub fn from_env() -> Self {
        std::env::var(MAX_ORDER_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .map(|max_order| OrderLimit { max_order })
            .unwrap_or_default()
    }

    pub fn check(&self, order: usize) -> Result<(), CombinatoricsError> {
        if order > self.max_order {
            Err(CombinatoricsError::OrderTooLarge { order, limit: self.max_order })
        } else {
            Ok(())
        }
    }
}

/// Block lists of all noncrossing 4-block partitions of `[0, len)`,
/// memoized on `len`.
fn shapes(len: usize, memo: &mut HashMap<usize, Vec<Vec<[usize; 4]>>>) -> Vec<Vec<[usize; 4]>> {
    if len == 0 {
        return vec![Vec::new()];
    }
    if let Some(v) = memo.get(&len) {
        return v.clone();
    }
    let mut out = Vec::new();
    let offset = |v: &[[usize; 4]], by: usize| -> Vec<[usize; 4]> {
        v.iter().map(|b| b.map(|x| x + by)).collect()
    };
    // The block containing 0 is {0, b, c, d}; every gap it leaves has size
    // divisible by 4 and is filled independently.
    for b in (1..len).step_by(4) {
        for c in (b + 1..len).step_by(4) {
            for d in (c + 1..len).step_by(4) {
                let g1 = shapes(b - 1, memo);
                let g2 = shapes(c - b - 1, memo);
                let g3 = shapes(d - c - 1, memo);
                let g4 = shapes(len - d - 1, memo);
                for p1 in &g1 {
                    for p2 in &g2 {
                        for p3 in &g3 {
                            for p4 in &g4 {
                                let mut blocks = Vec::with_capacity(len / 4);
                                blocks.push([0, b, c, d]);
                                blocks.extend(offset(p1, 1));
                                blocks.extend(offset(p2, b + 1));
                                blocks.extend(offset(p3, c + 1));
                                blocks.extend(offset(p4, d + 1));
                                out.push(blocks);
                            }
                        }
                    }
                }
            }
        }
    }
    memo.insert(len, out.clone());
    out
}

/// Every noncrossing partition of `[0, 4n-1]` into blocks of size 4.
pub fn enumerate_partitions(n: usize, limit: OrderLimit) -> Result<Vec<Nc4Partition>, CombinatoricsError> {
    if n == 0 {
        return Err(CombinatoricsError::InvalidInput("order must be positive".into()));
    }
    limit.check(n)?;
    let mut memo = HashMap::new();
    Ok(shapes(4 * n, &mut memo)
        .into_iter()
        .map(|mut blocks| {
            blocks.sort_unstable();
            Nc4Partition::from_sorted_unchecked(n, blocks)
        })
        .collect())
}

/// Every basketball of order `n`, each exactly once.
pub fn enumerate_basketballs(n: usize, limit: OrderLimit) -> Result<Vec<Basketball>, CombinatoricsError> {
    enumerate_partitions(n, limit)?
        .par_iter()
        .map(Basketball::from_partition)
        .collect()
}

fn binomial(n: u64, k: u64) -> BigUint {
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// `C(4n, n) / (3n + 1)`, exactly.
pub fn count_basketballs(n: usize) -> BigUint {
    let n = n as u64;
    let num = binomial(4 * n, n);
    let den = BigUint::from(3 * n + 1);
    assert!((&num % &den).is_zero(), "quasi-Catalan division is exact");
    num / den
}

/// Lexicographically least partner key over the `2n` rotations.
fn rotation_canonical_key(b: &Basketball) -> Vec<u8> {
    let key = b.partner_key();
    let size = key.len();
    let mut best: Option<Vec<u8>> = None;
    for shift in (0..size).step_by(2) {
        // Relabel i -> i - shift.
        let mut rotated = vec![0u8; size];
        for (i, &p) in key.iter().enumerate() {
            let ni = (i + size - shift) % size;
            rotated[ni] = ((p as usize + size - shift) % size) as u8;
        }
        if best.as_ref().is_none_or(|b| rotated < *b) {
            best = Some(rotated);
        }
    }
    best.expect("at least one rotation")
}

/// One representative (the lexicographically least rotation key) per
/// rotation class of order-`n` basketballs.
pub fn rotation_class_representatives(
    n: usize,
    limit: OrderLimit,
) -> Result<Vec<Basketball>, CombinatoricsError> {
    let all = enumerate_basketballs(n, limit)?;
    let mut seen = HashSet::new();
    let mut reps = Vec::new();
    for b in all {
        if seen.insert(rotation_canonical_key(&b)) {
            reps.push(b);
        }
    }
    Ok(reps)
}

/// Number of rotation classes of order-`n` basketballs.
pub fn rotation_class_count(n: usize, limit: OrderLimit) -> Result<u64, CombinatoricsError> {
    let all = enumerate_basketballs(n, limit)?;
    let keys: HashSet<Vec<u8>> = all.par_iter().map(rotation_canonical_key).collect();
    Ok(keys.len() as u64)
}

/// Histogram of total (even, odd) crossings over all bimatchings of order
/// `n` whose halves are both noncrossing.
pub fn crossing_histogram(n: usize, limit: OrderLimit) -> Result<BTreeMap<usize, u64>, CombinatoricsError> {
    limit.check(n)?;
    let all = Matching::all_noncrossing(n);
    let partial: Vec<BTreeMap<usize, u64>> = all
        .par_iter()
        .map(|me| {
            let mut h = BTreeMap::new();
            for mo in &all {
                let b = Bimatching::interleave(me, mo).expect("same size");
                *h.entry(b.total_crossings()).or_insert(0) += 1;
            }
            h
        })
        .collect();
    let mut hist = BTreeMap::new();
    for h in partial {
        for (k, v) in h {
            *hist.entry(k).or_insert(0) += v;
        }
    }
    Ok(hist)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::SymmetryOp;

    #[test]
    fn closed_form_values() {
        let expect = [1u32, 4, 22, 140, 969, 7084];
        for (n, &v) in (1..=6).zip(&expect) {
            assert_eq!(count_basketballs(n), BigUint::from(v));
        }
    }

    #[test]
    fn enumeration_matches_closed_form() {
        for n in 1..=5 {
            let all = enumerate_basketballs(n, OrderLimit::default()).unwrap();
            assert_eq!(BigUint::from(all.len()), count_basketballs(n));
            let distinct: HashSet<_> = all.iter().collect();
            assert_eq!(distinct.len(), all.len());
        }
    }

    #[test]
    fn guard_rejects_large_orders() {
        let limit = OrderLimit { max_order: 3 };
        assert_eq!(
            enumerate_basketballs(4, limit).unwrap_err(),
            CombinatoricsError::OrderTooLarge { order: 4, limit: 3 }
        );
        assert!(crossing_histogram(4, limit).is_err());
    }

    #[test]
    fn small_rotation_classes() {
        assert_eq!(rotation_class_count(1, OrderLimit::default()).unwrap(), 1);
        assert_eq!(rotation_class_count(2, OrderLimit::default()).unwrap(), 2);
        assert_eq!(rotation_class_count(3, OrderLimit::default()).unwrap(), 6);
    }

    #[test]
    fn representatives_cover_every_class() {
        for n in 1..=4 {
            let reps = rotation_class_representatives(n, OrderLimit::default()).unwrap();
            let mut orbit_union = HashSet::new();
            for r in &reps {
                for k in 0..2 * n {
                    orbit_union.insert(r.apply_symmetry(SymmetryOp::Rotation, k));
                }
            }
            assert_eq!(
                BigUint::from(orbit_union.len()),
                count_basketballs(n),
                "orbits of the representatives exhaust order {n}"
            );
        }
    }

    #[test]
    fn histogram_small_orders() {
        let h1 = crossing_histogram(1, OrderLimit::default()).unwrap();
        assert_eq!(h1, BTreeMap::from([(1, 1)]));
        let h2 = crossing_histogram(2, OrderLimit::default()).unwrap();
        assert_eq!(h2.get(&2), Some(&4));
        assert_eq!(h2.values().sum::<u64>(), 4);
        for n in 1..=4 {
            let h = crossing_histogram(n, OrderLimit::default()).unwrap();
            assert_eq!(*h.keys().next().unwrap(), n);
            assert_eq!(BigUint::from(h[&n]), count_basketballs(n));
        }
    }

    #[test]
    fn env_limit_parses() {
        // Only checks the parsing path; the variable is not set in tests.
        let l = OrderLimit::from_env();
        assert!(l.max_order >= 1);
    }
}
