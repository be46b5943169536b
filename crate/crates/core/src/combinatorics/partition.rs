use serde::{Deserialize, Serialize};

use super::{Basketball, Bimatching};
use crate::error::CombinatoricsError;

/// A noncrossing partition of `[0, 4n-1]` into `n` blocks of size 4.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawPartition")]
pub struct Nc4Partition {
    n: usize,
    blocks: Vec<[usize; 4]>,
}

#[derive(Deserialize)]
struct RawPartition {
    n: usize,
    blocks: Vec<[usize; 4]>,
}

impl TryFrom<RawPartition> for Nc4Partition {
    type Error = CombinatoricsError;

    fn try_from(raw: RawPartition) -> Result<Self, Self::Error> {
        Nc4Partition::new(raw.n, raw.blocks)
    }
}

/// Which of the four gaps of the sorted block `a` contains `x`; the gap
/// before `a[0]` and the one after `a[3]` are the same cyclic gap.
fn gap_index(a: &[usize; 4], x: usize) -> usize {
    a.iter().filter(|&&e| e < x).count() % 4
}

fn blocks_cross(a: &[usize; 4], b: &[usize; 4]) -> bool {
    let g = gap_index(a, b[0]);
    b[1..].iter().any(|&x| gap_index(a, x) != g)
}

impl Nc4Partition {
    pub fn new(n: usize, blocks: Vec<[usize; 4]>) -> Result<Self, CombinatoricsError> {
        let size = 4 * n;
        if n == 0 || blocks.len() != n {
            return Err(CombinatoricsError::InvalidInput(format!(
                "expected {n} blocks, got {}",
                blocks.len()
            )));
        }
        let mut seen = vec![false; size];
        let mut sorted = Vec::with_capacity(n);
        for mut block in blocks {
            block.sort_unstable();
            for &x in &block {
                if x >= size || std::mem::replace(&mut seen[x], true) {
                    return Err(CombinatoricsError::InvalidInput(format!(
                        "block {block:?} repeats or exceeds labels in [0, {}]",
                        size - 1
                    )));
                }
            }
            sorted.push(block);
        }
        sorted.sort_unstable();
        for (i, a) in sorted.iter().enumerate() {
            if sorted[i + 1..].iter().any(|b| blocks_cross(a, b)) {
                return Err(CombinatoricsError::NotNoncrossing);
            }
        }
        for block in &sorted {
            let [a, b, c, d] = *block;
            let gaps = [b - a - 1, c - b - 1, d - c - 1, size - 1 - d + a];
            if gaps.iter().any(|g| g % 4 != 0) {
                return Err(CombinatoricsError::BadBlockResidues(*block));
            }
        }
        Ok(Nc4Partition { n, blocks: sorted })
    }

    pub(crate) fn from_sorted_unchecked(n: usize, blocks: Vec<[usize; 4]>) -> Self {
        Nc4Partition { n, blocks }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[[usize; 4]] {
        &self.blocks
    }

    /// Splits every block `{a<b<c<d}` into the even and odd pairs `{a,c}`,
    /// `{b,d}`.
    pub fn to_basketball(&self) -> Result<Basketball, CombinatoricsError> {
        let mut even = Vec::with_capacity(self.n);
        let mut odd = Vec::with_capacity(self.n);
        for &[a, b, c, d] in &self.blocks {
            let (p, q) = ((a, c), (b, d));
            if a % 2 == 0 {
                even.push(p);
                odd.push(q);
            } else {
                odd.push(p);
                even.push(q);
            }
        }
        Basketball::validate(Bimatching::new(self.n, even, odd)?)
    }

    /// Merges every quartet of `b` into one block.
    pub fn from_basketball(b: &Basketball) -> Nc4Partition {
        let mut blocks: Vec<[usize; 4]> = b.quartets().iter().map(|q| q.labels()).collect();
        blocks.sort_unstable();
        Nc4Partition { n: b.order(), blocks }
    }
}

impl Basketball {
    /// The noncrossing 4-block partition obtained by merging each quartet.
    pub fn to_partition(&self) -> Nc4Partition {
        Nc4Partition::from_basketball(self)
    }

    pub fn from_partition(q: &Nc4Partition) -> Result<Basketball, CombinatoricsError> {
        q.to_basketball()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{enumerate_basketballs, enumerate_partitions, OrderLimit};

    fn quintic_basketball() -> Basketball {
        Basketball::from_pairs(
            5,
            &[(0, 10), (2, 8), (4, 6), (12, 18), (14, 16)],
            &[(1, 19), (3, 5), (7, 9), (11, 13), (15, 17)],
        )
        .unwrap()
    }

    #[test]
    fn quintic_partition() {
        let q = quintic_basketball().to_partition();
        assert_eq!(
            q.blocks(),
            &[[0, 1, 10, 19], [2, 7, 8, 9], [3, 4, 5, 6], [11, 12, 13, 18], [14, 15, 16, 17]]
        );
        assert_eq!(Basketball::from_partition(&q).unwrap(), quintic_basketball());
    }

    #[test]
    fn order_one() {
        let q = Nc4Partition::new(1, vec![[0, 1, 2, 3]]).unwrap();
        let b = q.to_basketball().unwrap();
        assert_eq!(b, Basketball::from_pairs(1, &[(0, 2)], &[(1, 3)]).unwrap());
        assert_eq!(b.to_partition(), q);
    }

    #[test]
    fn rejects_bad_partitions() {
        let err = Nc4Partition::new(2, vec![[0, 1, 2, 5], [3, 4, 6, 7]]).unwrap_err();
        assert!(matches!(
            err,
            CombinatoricsError::NotNoncrossing | CombinatoricsError::BadBlockResidues(_)
        ));
        // Noncrossing, but the first block's gaps have size 1 and 3.
        let err = Nc4Partition::new(2, vec![[0, 2, 6, 7], [1, 3, 4, 5]]).unwrap_err();
        assert!(matches!(
            err,
            CombinatoricsError::NotNoncrossing | CombinatoricsError::BadBlockResidues(_)
        ));
        assert!(Nc4Partition::new(2, vec![[0, 1, 2, 3], [3, 4, 5, 6]]).is_err());
    }

    #[test]
    fn bijection_round_trips() {
        for n in 1..=4 {
            for q in enumerate_partitions(n, OrderLimit::default()).unwrap() {
                let b = Basketball::from_partition(&q).unwrap();
                assert_eq!(b.to_partition(), q);
            }
            for b in enumerate_basketballs(n, OrderLimit::default()).unwrap() {
                assert_eq!(Basketball::from_partition(&b.to_partition()).unwrap(), b);
                // The merged partition re-validates from scratch.
                let q = b.to_partition();
                assert_eq!(Nc4Partition::new(n, q.blocks().to_vec()).unwrap(), q);
            }
        }
    }

    #[test]
    fn json_shape() {
        let q = Nc4Partition::new(1, vec![[3, 1, 2, 0]]).unwrap();
        assert_eq!(serde_json::to_string(&q).unwrap(), r#"{"n":1,"blocks":[[0,1,2,3]]}"#);
    }
}
