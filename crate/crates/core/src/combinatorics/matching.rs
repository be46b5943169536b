use serde::{Deserialize, Serialize};

use super::{canonical, crosses_unchecked, Pair};
use crate::error::CombinatoricsError;

/// A perfect matching on the ground set `[0, 2m-1]`.
///
/// Pairs are stored as `(min, max)` and sorted, so equality and hashing are
/// structural.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawMatching")]
pub struct Matching {
    m: usize,
    pairs: Vec<Pair>,
}

#[derive(Deserialize)]
struct RawMatching {
    m: usize,
    pairs: Vec<Pair>,
}

impl TryFrom<RawMatching> for Matching {
    type Error = CombinatoricsError;

    fn try_from(raw: RawMatching) -> Result<Self, Self::Error> {
        Matching::new(raw.m, raw.pairs)
    }
}

impl Matching {
    /// Builds a matching on `[0, 2m-1]`, checking that `pairs` partition it.
    pub fn new(m: usize, pairs: impl IntoIterator<Item = Pair>) -> Result<Self, CombinatoricsError> {
        if m == 0 {
            return Err(CombinatoricsError::InvalidInput("matching of size 0".into()));
        }
        let mut seen = vec![false; 2 * m];
        let mut out = Vec::with_capacity(m);
        for (a, b) in pairs {
            if a == b || a >= 2 * m || b >= 2 * m {
                return Err(CombinatoricsError::InvalidInput(format!(
                    "pair ({a}, {b}) is not a pair of distinct elements of [0, {}]",
                    2 * m - 1
                )));
            }
            for x in [a, b] {
                if std::mem::replace(&mut seen[x], true) {
                    return Err(CombinatoricsError::InvalidInput(format!(
                        "element {x} appears twice"
                    )));
                }
            }
            out.push(canonical(a, b));
        }
        if out.len() != m {
            return Err(CombinatoricsError::InvalidInput(format!(
                "expected {m} pairs, got {}",
                out.len()
            )));
        }
        out.sort_unstable();
        Ok(Matching { m, pairs: out })
    }

    pub(crate) fn from_sorted_unchecked(m: usize, pairs: Vec<Pair>) -> Self {
        debug_assert!(pairs.windows(2).all(|w| w[0] < w[1]));
        Matching { m, pairs }
    }

    /// Number of pairs.
    pub fn m(&self) -> usize {
        self.m
    }

    /// Size of the ground set, `2m`.
    pub fn ground_size(&self) -> usize {
        2 * self.m
    }

    pub fn pairs(&self) -> &[Pair] {
        &self.pairs
    }

    pub fn contains(&self, a: usize, b: usize) -> bool {
        self.pairs.binary_search(&canonical(a, b)).is_ok()
    }

    /// `partner[i]` is the element matched with `i`.
    pub fn partners(&self) -> Vec<usize> {
        let mut p = vec![0; 2 * self.m];
        for &(a, b) in &self.pairs {
            p[a] = b;
            p[b] = a;
        }
        p
    }

    pub fn is_noncrossing(&self) -> bool {
        // Stack check: scanning left to right, each closing element must
        // close the most recently opened pair.
        let partners = self.partners();
        let mut stack = Vec::with_capacity(self.m);
        for (i, &p) in partners.iter().enumerate() {
            if p > i {
                stack.push(i);
            } else if stack.pop() != Some(p) {
                return false;
            }
        }
        true
    }

    /// Number of unordered pairs of pairs that cross.
    pub fn crossing_count(&self) -> usize {
        let mut count = 0;
        for (i, &p) in self.pairs.iter().enumerate() {
            for &q in &self.pairs[i + 1..] {
                if crosses_unchecked(p, q) {
                    count += 1;
                }
            }
        }
        count
    }

    /// Relabels every element `i` as `i + k` modulo `2m`.
    pub fn shift(&self, k: isize) -> Matching {
        let size = (2 * self.m) as isize;
        let s = |x: usize| (x as isize + k).rem_euclid(size) as usize;
        let mut pairs: Vec<Pair> = self.pairs.iter().map(|&(a, b)| canonical(s(a), s(b))).collect();
        pairs.sort_unstable();
        Matching { m: self.m, pairs }
    }

    /// The extension `{{0, 2m+1}} ∪ {{i+1, j+1} : {i, j} ∈ M}` on `[0, 2m+1]`.
    pub fn hat(&self) -> Matching {
        let mut pairs = Vec::with_capacity(self.m + 1);
        pairs.push((0, 2 * self.m + 1));
        pairs.extend(self.pairs.iter().map(|&(a, b)| (a + 1, b + 1)));
        pairs.sort_unstable();
        Matching { m: self.m + 1, pairs }
    }

    /// Inverse of [`Matching::hat`]: removes the outer pair `{0, 2m-1}` and
    /// shifts everything down by one.
    pub fn unhat(&self) -> Result<Matching, CombinatoricsError> {
        let top = 2 * self.m - 1;
        if self.m < 2 || !self.contains(0, top) {
            return Err(CombinatoricsError::MissingOuterPair(top));
        }
        let pairs = self
            .pairs
            .iter()
            .filter(|&&p| p != (0, top))
            .map(|&(a, b)| (a - 1, b - 1))
            .collect();
        Ok(Matching { m: self.m - 1, pairs })
    }

    /// All noncrossing matchings on `[0, 2m-1]`, in lexicographic order of
    /// their sorted pair lists.
    pub fn all_noncrossing(m: usize) -> Vec<Matching> {
        let mut out: Vec<Matching> = noncrossing_on(0, 2 * m)
            .into_iter()
            .map(|mut pairs| {
                pairs.sort_unstable();
                Matching { m, pairs }
            })
            .collect();
        out.sort();
        out
    }

    /// All perfect matchings on `[0, 2m-1]` (there are `(2m-1)!!`).
    pub fn all(m: usize) -> Vec<Matching> {
        fn rec(free: &mut Vec<usize>, cur: &mut Vec<Pair>, m: usize, out: &mut Vec<Matching>) {
            if free.is_empty() {
                let mut pairs = cur.clone();
                pairs.sort_unstable();
                out.push(Matching { m, pairs });
                return;
            }
            let a = free.remove(0);
            for idx in 0..free.len() {
                let b = free.remove(idx);
                cur.push((a, b));
                rec(free, cur, m, out);
                cur.pop();
                free.insert(idx, b);
            }
            free.insert(0, a);
        }
        let mut out = Vec::new();
        rec(&mut (0..2 * m).collect(), &mut Vec::new(), m, &mut out);
        out
    }
}

/// Noncrossing matchings of the interval `[lo, hi)`.
fn noncrossing_on(lo: usize, hi: usize) -> Vec<Vec<Pair>> {
    if lo >= hi {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for j in (lo + 1..hi).step_by(2) {
        let inner = noncrossing_on(lo + 1, j);
        let outer = noncrossing_on(j + 1, hi);
        for a in &inner {
            for b in &outer {
                let mut v = Vec::with_capacity(1 + a.len() + b.len());
                v.push((lo, j));
                v.extend_from_slice(a);
                v.extend_from_slice(b);
                out.push(v);
            }
        }
    }
    out
}
