use serde::{Deserialize, Serialize};

use super::{canonical, crosses_unchecked, Matching, Pair};
use crate::error::CombinatoricsError;

/// A pair of matchings on `[0, 4n-1]`: one on the even labels, one on the odd.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawBimatching")]
pub struct Bimatching {
    n: usize,
    even: Vec<Pair>,
    odd: Vec<Pair>,
}

#[derive(Deserialize)]
struct RawBimatching {
    n: usize,
    even: Vec<Pair>,
    odd: Vec<Pair>,
}

impl TryFrom<RawBimatching> for Bimatching {
    type Error = CombinatoricsError;

    fn try_from(raw: RawBimatching) -> Result<Self, Self::Error> {
        Bimatching::new(raw.n, raw.even, raw.odd)
    }
}

fn check_half(n: usize, pairs: &[Pair], parity: usize) -> Result<Vec<Pair>, CombinatoricsError> {
    let size = 4 * n;
    let mut seen = vec![false; size];
    let mut out = Vec::with_capacity(n);
    for &(a, b) in pairs {
        if a == b || a >= size || b >= size || a % 2 != parity || b % 2 != parity {
            return Err(CombinatoricsError::InvalidInput(format!(
                "pair ({a}, {b}) is not a pair of distinct {} labels in [0, {}]",
                if parity == 0 { "even" } else { "odd" },
                size - 1
            )));
        }
        for x in [a, b] {
            if std::mem::replace(&mut seen[x], true) {
                return Err(CombinatoricsError::InvalidInput(format!("label {x} appears twice")));
            }
        }
        out.push(canonical(a, b));
    }
    if out.len() != n {
        return Err(CombinatoricsError::InvalidInput(format!(
            "expected {n} pairs per half, got {}",
            out.len()
        )));
    }
    out.sort_unstable();
    Ok(out)
}

impl Bimatching {
    pub fn new(
        n: usize,
        even: impl IntoIterator<Item = Pair>,
        odd: impl IntoIterator<Item = Pair>,
    ) -> Result<Self, CombinatoricsError> {
        if n == 0 {
            return Err(CombinatoricsError::InvalidInput("bimatching of order 0".into()));
        }
        let even = check_half(n, &even.into_iter().collect::<Vec<_>>(), 0)?;
        let odd = check_half(n, &odd.into_iter().collect::<Vec<_>>(), 1)?;
        Ok(Bimatching { n, even, odd })
    }

    /// Places `me` on the even labels via `i ↦ 2i` and `mo` on the odd labels
    /// via `i ↦ 2i+1`.
    pub fn interleave(me: &Matching, mo: &Matching) -> Result<Self, CombinatoricsError> {
        if me.m() != mo.m() {
            return Err(CombinatoricsError::InvalidInput(format!(
                "size mismatch: {} vs {}",
                me.m(),
                mo.m()
            )));
        }
        let even = me.pairs().iter().map(|&(a, b)| (2 * a, 2 * b)).collect();
        let odd = mo.pairs().iter().map(|&(a, b)| (2 * a + 1, 2 * b + 1)).collect();
        Ok(Bimatching { n: me.m(), even, odd })
    }

    /// Inverse of [`Bimatching::interleave`].
    pub fn split(&self) -> (Matching, Matching) {
        (self.even_matching(), self.odd_matching())
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn even(&self) -> &[Pair] {
        &self.even
    }

    pub fn odd(&self) -> &[Pair] {
        &self.odd
    }

    /// The even half as a matching on `[0, 2n-1]`.
    pub fn even_matching(&self) -> Matching {
        Matching::from_sorted_unchecked(
            self.n,
            self.even.iter().map(|&(a, b)| (a / 2, b / 2)).collect(),
        )
    }

    /// The odd half as a matching on `[0, 2n-1]`.
    pub fn odd_matching(&self) -> Matching {
        Matching::from_sorted_unchecked(
            self.n,
            self.odd.iter().map(|&(a, b)| (a / 2, b / 2)).collect(),
        )
    }

    /// For every even pair, the number of odd pairs it crosses.
    pub fn even_crossing_counts(&self) -> Vec<usize> {
        self.even
            .iter()
            .map(|&e| self.odd.iter().filter(|&&o| crosses_unchecked(e, o)).count())
            .collect()
    }

    /// For every odd pair, the number of even pairs it crosses.
    pub fn odd_crossing_counts(&self) -> Vec<usize> {
        self.odd
            .iter()
            .map(|&o| self.even.iter().filter(|&&e| crosses_unchecked(e, o)).count())
            .collect()
    }

    /// Total number of (even, odd) crossings.
    pub fn total_crossings(&self) -> usize {
        self.even_crossing_counts().iter().sum()
    }

    fn map_labels(&self, even_from: &[Pair], odd_from: &[Pair], f: impl Fn(usize) -> usize) -> Self {
        let map = |ps: &[Pair]| {
            let mut v: Vec<Pair> = ps.iter().map(|&(a, b)| canonical(f(a), f(b))).collect();
            v.sort_unstable();
            v
        };
        Bimatching { n: self.n, even: map(even_from), odd: map(odd_from) }
    }
}

/// An even pair together with the unique odd pair it crosses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Quartet {
    pub even: Pair,
    pub odd: Pair,
}

impl Quartet {
    /// The four labels in increasing order.
    pub fn labels(&self) -> [usize; 4] {
        let mut l = [self.even.0, self.even.1, self.odd.0, self.odd.1];
        l.sort_unstable();
        l
    }

    /// If the labels are `{s, s+1, s+2, s+3}` modulo `size`, returns `s`.
    pub fn consecutive_start(&self, size: usize) -> Option<usize> {
        let labels = self.labels();
        labels.iter().copied().find(|&s| {
            let mut run: Vec<usize> = (0..4).map(|k| (s + k) % size).collect();
            run.sort_unstable();
            run == labels
        })
    }
}

/// The symmetries of the set of basketballs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SymmetryOp {
    /// Every label `i` becomes `i - 2` modulo `4n`.
    Rotation,
    /// `{i,j},{k,l}` becomes `{k-1,l-1},{i-1,j-1}`: odd pairs shifted down
    /// become even pairs and vice versa.
    HalfRotation,
    /// Every label `i` becomes `-i` modulo `4n`.
    Reflection,
}

/// A bimatching with noncrossing halves in which every even pair crosses
/// exactly one odd pair.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Bimatching", into = "Bimatching")]
pub struct Basketball {
    inner: Bimatching,
    quartets: Vec<Quartet>,
}

impl From<Basketball> for Bimatching {
    fn from(b: Basketball) -> Self {
        b.inner
    }
}

impl TryFrom<Bimatching> for Basketball {
    type Error = CombinatoricsError;

    fn try_from(b: Bimatching) -> Result<Self, Self::Error> {
        Basketball::validate(b)
    }
}

impl Basketball {
    /// Checks the basketball conditions and pairs every even pair with the
    /// odd pair it crosses.
    pub fn validate(b: Bimatching) -> Result<Self, CombinatoricsError> {
        let (me, mo) = b.split();
        if !me.is_noncrossing() {
            return Err(CombinatoricsError::CrossingHalf("even"));
        }
        if !mo.is_noncrossing() {
            return Err(CombinatoricsError::CrossingHalf("odd"));
        }
        let even_counts = b.even_crossing_counts();
        let odd_counts = b.odd_crossing_counts();
        // Noncrossing halves force an odd number of crossings per pair.
        assert!(
            even_counts.iter().chain(&odd_counts).all(|c| c % 2 == 1),
            "odd-crossing property violated by {b:?}"
        );
        for (&e, &c) in b.even.iter().zip(&even_counts) {
            if c != 1 {
                return Err(CombinatoricsError::ExcessCrossings { pair: e, count: c });
            }
        }
        for (&o, &c) in b.odd.iter().zip(&odd_counts) {
            if c != 1 {
                return Err(CombinatoricsError::ExcessCrossings { pair: o, count: c });
            }
        }
        let quartets = b
            .even
            .iter()
            .map(|&e| {
                let odd = *b.odd.iter().find(|&&o| crosses_unchecked(e, o)).expect("one crossing");
                Quartet { even: e, odd }
            })
            .collect();
        Ok(Basketball { inner: b, quartets })
    }

    /// Convenience constructor from raw pair lists.
    pub fn from_pairs(n: usize, even: &[Pair], odd: &[Pair]) -> Result<Self, CombinatoricsError> {
        Self::validate(Bimatching::new(n, even.iter().copied(), odd.iter().copied())?)
    }

    pub fn order(&self) -> usize {
        self.inner.n
    }

    pub fn bimatching(&self) -> &Bimatching {
        &self.inner
    }

    pub fn even(&self) -> &[Pair] {
        &self.inner.even
    }

    pub fn odd(&self) -> &[Pair] {
        &self.inner.odd
    }

    pub fn quartets(&self) -> &[Quartet] {
        &self.quartets
    }

    pub fn split(&self) -> (Matching, Matching) {
        self.inner.split()
    }

    /// Quartets whose four labels are cyclically consecutive modulo `4n`.
    pub fn ears(&self) -> Vec<Quartet> {
        let size = 4 * self.order();
        self.quartets
            .iter()
            .filter(|q| q.consecutive_start(size).is_some())
            .copied()
            .collect()
    }

    /// Adds `k` to every label modulo `4n`. `k` must be even so that the
    /// halves keep their parity.
    pub fn shift(&self, k: isize) -> Basketball {
        assert!(k % 2 == 0, "odd shifts swap the halves");
        let size = (4 * self.order()) as isize;
        let f = |x: usize| (x as isize + k).rem_euclid(size) as usize;
        let b = self.inner.map_labels(&self.inner.even, &self.inner.odd, f);
        Basketball::validate(b).expect("shifts preserve basketballs")
    }

    /// Applies `op` `k` times.
    pub fn apply_symmetry(&self, op: SymmetryOp, k: usize) -> Basketball {
        let mut cur = self.clone();
        for _ in 0..k {
            cur = cur.apply_once(op);
        }
        cur
    }

    fn apply_once(&self, op: SymmetryOp) -> Basketball {
        let size = 4 * self.order();
        let b = match op {
            SymmetryOp::Rotation => return self.shift(-2),
            SymmetryOp::HalfRotation => {
                self.inner.map_labels(&self.inner.odd, &self.inner.even, |x| (x + size - 1) % size)
            }
            SymmetryOp::Reflection => {
                self.inner.map_labels(&self.inner.even, &self.inner.odd, |x| (size - x) % size)
            }
        };
        Basketball::validate(b).expect("symmetries preserve basketballs")
    }

    /// Inverse of one half-rotation: odd pairs shifted up become even pairs
    /// and vice versa.
    pub fn inverse_half_rotation(&self) -> Basketball {
        let size = 4 * self.order();
        let b = self.inner.map_labels(&self.inner.odd, &self.inner.even, |x| (x + 1) % size);
        Basketball::validate(b).expect("symmetries preserve basketballs")
    }

    /// `partner[i]` over all `4n` labels; a compact canonical key.
    pub fn partner_key(&self) -> Vec<u8> {
        let mut key = vec![0u8; 4 * self.order()];
        for &(a, b) in self.even().iter().chain(self.odd()) {
            key[a] = b as u8;
            key[b] = a as u8;
        }
        key
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::enumerate_basketballs;
    use crate::combinatorics::OrderLimit;

    pub(crate) fn quintic_basketball() -> Basketball {
        Basketball::from_pairs(
            5,
            &[(0, 10), (2, 8), (4, 6), (12, 18), (14, 16)],
            &[(1, 19), (3, 5), (7, 9), (11, 13), (15, 17)],
        )
        .unwrap()
    }

    #[test]
    fn quintic_quartets() {
        let b = quintic_basketball();
        let q: Vec<(Pair, Pair)> = b.quartets().iter().map(|q| (q.even, q.odd)).collect();
        assert_eq!(
            q,
            vec![
                ((0, 10), (1, 19)),
                ((2, 8), (7, 9)),
                ((4, 6), (3, 5)),
                ((12, 18), (11, 13)),
                ((14, 16), (15, 17)),
            ]
        );
    }

    #[test]
    fn order_one() {
        let b = Basketball::from_pairs(1, &[(0, 2)], &[(1, 3)]).unwrap();
        assert_eq!(b.quartets().len(), 1);
        assert_eq!(b.ears(), b.quartets().to_vec());
        assert_eq!(b.apply_symmetry(SymmetryOp::Rotation, 1), b);
    }

    #[test]
    fn excess_crossings_detected() {
        // An odd pair {5,19} crossing three even pairs.
        let b = Bimatching::new(
            5,
            [(0, 10), (2, 8), (4, 6), (12, 14), (16, 18)],
            [(1, 3), (5, 19), (7, 9), (11, 13), (15, 17)],
        )
        .unwrap();
        assert!(b.even_matching().is_noncrossing() && b.odd_matching().is_noncrossing());
        match Basketball::validate(b) {
            Err(CombinatoricsError::ExcessCrossings { count, .. }) => assert_eq!(count, 3),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn crossing_half_detected() {
        let b = Bimatching::new(2, [(0, 4), (2, 6)], [(1, 3), (5, 7)]).unwrap();
        assert_eq!(Basketball::validate(b), Err(CombinatoricsError::CrossingHalf("even")));
    }

    #[test]
    fn quintic_ears() {
        let ears = quintic_basketball().ears();
        let labels: Vec<[usize; 4]> = ears.iter().map(|q| q.labels()).collect();
        assert_eq!(labels, vec![[3, 4, 5, 6], [14, 15, 16, 17]]);
    }

    #[test]
    fn wraparound_ears() {
        let b = quintic_basketball().shift(4);
        let labels: Vec<[usize; 4]> = b.ears().iter().map(|q| q.labels()).collect();
        assert_eq!(labels, vec![[0, 1, 18, 19], [7, 8, 9, 10]]);
        assert_eq!(b.ears()[0].consecutive_start(20), Some(18));
        assert_eq!(b.ears()[1].consecutive_start(20), Some(7));
    }

    #[test]
    fn reflection_is_involution() {
        let b = quintic_basketball();
        assert_eq!(b.apply_symmetry(SymmetryOp::Reflection, 2), b);
    }

    #[test]
    fn symmetry_laws_exhaustive() {
        for n in 1..=4 {
            for b in enumerate_basketballs(n, OrderLimit::default()).unwrap() {
                assert_eq!(b.apply_symmetry(SymmetryOp::Rotation, 2 * n), b);
                assert_eq!(b.apply_symmetry(SymmetryOp::Reflection, 2), b);
                assert_eq!(
                    b.apply_symmetry(SymmetryOp::HalfRotation, 2),
                    b.apply_symmetry(SymmetryOp::Rotation, 1)
                );
                assert_eq!(b.apply_symmetry(SymmetryOp::HalfRotation, 1).inverse_half_rotation(), b);
            }
        }
    }

    #[test]
    fn interleave_split() {
        let me = Matching::new(1, [(0, 1)]).unwrap();
        let b = Bimatching::interleave(&me, &me).unwrap();
        assert_eq!(b, Bimatching::new(1, [(0, 2)], [(1, 3)]).unwrap());
        for n in 1..=3 {
            let all = Matching::all_noncrossing(n);
            for me in &all {
                for mo in &all {
                    let b = Bimatching::interleave(me, mo).unwrap();
                    assert_eq!(b.split(), (me.clone(), mo.clone()));
                }
            }
        }
        let two = Matching::all_noncrossing(2);
        assert!(Bimatching::interleave(&me, &two[0]).is_err());
    }

    #[test]
    fn json_shape() {
        let b = Basketball::from_pairs(1, &[(0, 2)], &[(1, 3)]).unwrap();
        let s = serde_json::to_string(&b).unwrap();
        assert_eq!(s, r#"{"n":1,"even":[[0,2]],"odd":[[1,3]]}"#);
        let back: Basketball = serde_json::from_str(&s).unwrap();
        assert_eq!(back, b);
        let bad = r#"{"n":2,"even":[[0,4],[2,6]],"odd":[[1,3],[5,7]]}"#;
        assert!(serde_json::from_str::<Basketball>(bad).is_err());
        assert!(serde_json::from_str::<Bimatching>(bad).is_ok());
    }
}
