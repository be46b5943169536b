//! Necklaces of noncrossing matchings.
//!
//! A necklace of order `n` is a tuple `(M_1, …, M_{n-1})` of noncrossing
//! matchings on `[0, 2n-1]` such that each `M_{t+1}` arises from `M_t` by a
//! single swap `{i,j},{k,l} → {i,l},{j,k}`, where the closing matching `M_n`
//! is `M_1` with every label shifted down by one.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::combinatorics::{Basketball, Bimatching, Matching, OrderLimit};
use crate::error::CombinatoricsError;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawNecklace")]
pub struct Necklace {
    n: usize,
    matchings: Vec<Matching>,
}

#[derive(Deserialize)]
struct RawNecklace {
    n: usize,
    matchings: Vec<Matching>,
}

impl TryFrom<RawNecklace> for Necklace {
    type Error = CombinatoricsError;

    fn try_from(raw: RawNecklace) -> Result<Self, Self::Error> {
        Necklace::validate(raw.n, raw.matchings)
    }
}

/// Whether `next` arises from `cur` by replacing exactly one pair of pairs
/// with another pairing of the same four labels, and is noncrossing.
pub fn is_transition(cur: &Matching, next: &Matching) -> Result<bool, CombinatoricsError> {
    if cur.m() != next.m() {
        return Err(CombinatoricsError::InvalidInput(format!(
            "ground sets differ: [0, {}] vs [0, {}]",
            cur.ground_size() - 1,
            next.ground_size() - 1
        )));
    }
    // Two perfect matchings on the same ground set that differ in exactly two
    // pairs on each side re-pair the same four labels.
    let removed = cur.pairs().iter().filter(|p| next.pairs().binary_search(p).is_err()).count();
    let added = next.pairs().iter().filter(|p| cur.pairs().binary_search(p).is_err()).count();
    Ok(removed == 2 && added == 2 && next.is_noncrossing())
}

/// Noncrossing matchings reachable from `cur` by one swap.
pub fn successors(cur: &Matching) -> Vec<Matching> {
    let pairs = cur.pairs();
    let mut out = Vec::new();
    for i in 0..pairs.len() {
        for j in i + 1..pairs.len() {
            let (a, b) = pairs[i];
            let (c, d) = pairs[j];
            for (p, q) in [((a, c), (b, d)), ((a, d), (b, c))] {
                let mut v: Vec<_> = pairs
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| k != i && k != j)
                    .map(|(_, &x)| x)
                    .collect();
                v.push(p);
                v.push(q);
                let m = Matching::new(cur.m(), v).expect("re-pairing keeps a perfect matching");
                if m.is_noncrossing() {
                    out.push(m);
                }
            }
        }
    }
    out
}

/// Which values of the split index a multiear may use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SplitRange {
    /// `t ∈ {1, …, n-1}`.
    #[default]
    Interior,
    /// `t ∈ {0, …, n}`, also admitting the all-suffix and all-prefix cases.
    Inclusive,
}

/// An index `i` with `{i,i+1}` in `M_1..M_t` and `{i-1,i}` in `M_{t+1}..M_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Multiear {
    pub index: usize,
    pub split: usize,
}

impl Necklace {
    /// Validates a tuple of `n-1` matchings on `[0, 2n-1]` as a necklace.
    pub fn validate(n: usize, matchings: Vec<Matching>) -> Result<Self, CombinatoricsError> {
        if n < 2 {
            return Err(CombinatoricsError::InvalidInput("necklaces have order at least 2".into()));
        }
        if matchings.len() != n - 1 {
            return Err(CombinatoricsError::WrongLength { got: matchings.len(), expected: n - 1 });
        }
        if let Some(m) = matchings.iter().find(|m| m.m() != n) {
            return Err(CombinatoricsError::InvalidInput(format!(
                "matching on [0, {}] in a necklace of order {n}",
                m.ground_size() - 1
            )));
        }
        if let Some(t) = matchings.iter().position(|m| !m.is_noncrossing()) {
            return Err(CombinatoricsError::CrossingMatching { index: t + 1 });
        }
        let necklace = Necklace { n, matchings };
        let full = necklace.full_cycle();
        for t in 0..n - 1 {
            if !is_transition(&full[t], &full[t + 1])? {
                return Err(CombinatoricsError::BadTransition { index: t + 1 });
            }
        }
        Ok(necklace)
    }

    pub(crate) fn from_unchecked(n: usize, matchings: Vec<Matching>) -> Self {
        Necklace { n, matchings }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// `(M_1, …, M_{n-1})`.
    pub fn matchings(&self) -> &[Matching] {
        &self.matchings
    }

    /// `M_n = {{i-1, j-1} : {i,j} ∈ M_1}`.
    pub fn closing(&self) -> Matching {
        self.matchings[0].shift(-1)
    }

    /// `(M_1, …, M_n)`.
    pub fn full_cycle(&self) -> Vec<Matching> {
        let mut v = self.matchings.clone();
        v.push(self.closing());
        v
    }

    /// The necklace re-rooted at its second matching: `(M_2, …, M_n)`.
    pub fn rerooted(&self) -> Result<Necklace, CombinatoricsError> {
        let full = self.full_cycle();
        Necklace::validate(self.n, full[1..].to_vec())
    }

    pub fn multiears(&self, range: SplitRange) -> Vec<Multiear> {
        let full = self.full_cycle();
        let size = 2 * self.n;
        let splits = match range {
            SplitRange::Interior => 1..self.n,
            SplitRange::Inclusive => 0..self.n + 1,
        };
        let mut out = Vec::new();
        for i in 0..size {
            let up = ((i + 1) % size, i);
            let down = ((i + size - 1) % size, i);
            for t in splits.clone() {
                let prefix = full[..t].iter().all(|m| m.contains(up.0, up.1));
                let suffix = full[t..].iter().all(|m| m.contains(down.0, down.1));
                if prefix && suffix {
                    out.push(Multiear { index: i, split: t });
                }
            }
        }
        out
    }

    /// Whether every `(M_t, M_u)` with `t < u ≤ n` interleaves to a basketball.
    pub fn pairwise_basketball_check(&self) -> bool {
        let full = self.full_cycle();
        (0..full.len()).all(|t| {
            (t + 1..full.len()).all(|u| {
                Bimatching::interleave(&full[t], &full[u])
                    .and_then(Basketball::validate)
                    .is_ok()
            })
        })
    }
}

/// All necklaces of order `n`, by depth-first search over swap successors.
pub fn enumerate_necklaces(n: usize, limit: OrderLimit) -> Result<Vec<Necklace>, CombinatoricsError> {
    if n < 2 {
        return Err(CombinatoricsError::InvalidInput("necklaces have order at least 2".into()));
    }
    limit.check(n)?;
    fn dfs(n: usize, path: &mut Vec<Matching>, closing: &Matching, out: &mut Vec<Necklace>) {
        let last = path.last().expect("nonempty path");
        if path.len() == n - 1 {
            if is_transition(last, closing).expect("same ground set") {
                out.push(Necklace::from_unchecked(n, path.clone()));
            }
            return;
        }
        for next in successors(last) {
            path.push(next);
            dfs(n, path, closing, out);
            path.pop();
        }
    }
    let starts = Matching::all_noncrossing(n);
    let per_start: Vec<Vec<Necklace>> = starts
        .par_iter()
        .map(|m1| {
            let mut out = Vec::new();
            let closing = m1.shift(-1);
            dfs(n, &mut vec![m1.clone()], &closing, &mut out);
            out
        })
        .collect();
    Ok(per_start.into_iter().flatten().collect())
}

/// `2 (2n)^{n-2}`.
pub fn count_necklaces(n: usize) -> num_bigint::BigUint {
    assert!(n >= 2);
    num_bigint::BigUint::from(2u32) * num_bigint::BigUint::from(2 * n).pow((n - 2) as u32)
}
