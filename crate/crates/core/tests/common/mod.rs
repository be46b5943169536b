//! Helpers shared by the integration tests.
#![allow(dead_code)]

use std::f64::consts::PI;

use harmonica::combinatorics::{Matching, Pair};
use harmonica::curves::singular_angles;
use harmonica::MonicPolynomial;
use num_complex::Complex64;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Random monic polynomial with roots drawn from the disk of radius 2,
/// kept at least `0.2` apart so that it is comfortably square-free.
pub fn random_polynomial(rng: &mut ChaCha8Rng, degree: usize) -> MonicPolynomial {
    loop {
        let mut roots: Vec<Complex64> = Vec::with_capacity(degree);
        while roots.len() < degree {
            let z = Complex64::from_polar(2.0 * rng.gen::<f64>().sqrt(), rng.gen_range(0.0..2.0 * PI));
            roots.push(z);
        }
        let separated = roots
            .iter()
            .enumerate()
            .all(|(i, a)| roots[i + 1..].iter().all(|b| (a - b).norm() > 0.2));
        if separated {
            return MonicPolynomial::from_roots(&roots).unwrap();
        }
    }
}

/// Cyclic distance between angles mod π.
pub fn angle_gap(a: f64, b: f64) -> f64 {
    let d = (a - b).rem_euclid(PI);
    d.min(PI - d)
}

/// Smallest distance between a candidate angle and the singular angles.
pub fn singular_distance(f: &MonicPolynomial, theta: f64) -> f64 {
    singular_angles(f)
        .unwrap()
        .angles
        .iter()
        .map(|&s| angle_gap(s, theta))
        .fold(PI, f64::min)
}

/// Midpoint of the largest gap between consecutive singular angles on the
/// circle `ℝ/πℤ`, together with the smallest gap between them.
pub fn widest_gap_midpoint(f: &MonicPolynomial) -> (f64, f64) {
    let mut s = singular_angles(f).unwrap().angles;
    if s.is_empty() {
        return (PI / 3.0, PI);
    }
    s.sort_by(f64::total_cmp);
    let mut best = (0.0, 0.0);
    let mut smallest = PI;
    for i in 0..s.len() {
        let a = s[i];
        let b = if i + 1 < s.len() { s[i + 1] } else { s[0] + PI };
        let gap = b - a;
        smallest = smallest.min(gap);
        if gap > best.1 {
            best = ((0.5 * (a + b)).rem_euclid(PI), gap);
        }
    }
    (best.0, smallest)
}

/// Hat extension written out by hand: `{0, 2m+1}` plus every pair moved up by one.
pub fn hat_by_hand(m: &Matching) -> Vec<Pair> {
    let size = m.ground_size();
    let mut pairs = vec![(0, size + 1)];
    pairs.extend(m.pairs().iter().map(|&(a, b)| (a + 1, b + 1)));
    pairs.sort_unstable();
    pairs
}

/// Whether chords `{a,b}` and `{c,d}` of a circle cross.
pub fn chords_cross(p: Pair, q: Pair) -> bool {
    let (a, b) = (p.0.min(p.1), p.0.max(p.1));
    let inside = |x: usize| a < x && x < b;
    inside(q.0) != inside(q.1)
}

/// `C(4n, n) / (3n + 1)`, computed with exact integers.
pub fn fuss_catalan_4(n: u64) -> u128 {
    let mut binom: u128 = 1;
    for i in 0..n as u128 {
        binom = binom * (4 * n as u128 - i) / (i + 1);
    }
    binom / (3 * n as u128 + 1)
}
