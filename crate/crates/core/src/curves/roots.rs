use std::f64::consts::TAU;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::MonicPolynomial;
use crate::error::CurveError;

const MAX_ITER: usize = 600;
const MAX_RESTARTS: usize = 6;
/// Accepted backward error `|p(z)| / Σ|a_k||z|^k` of a returned root.
pub const ROOT_RESIDUAL_TOL: f64 = 1e-10;

/// `(p(z), p'(z), Σ|a_k||z|^k)` by Horner, from ascending coefficients.
fn horner(full: &[Complex64], z: Complex64) -> (Complex64, Complex64, f64) {
    let n = full.len() - 1;
    let mut p = full[n];
    let mut dp = Complex64::new(0.0, 0.0);
    let mut scale = full[n].norm();
    let az = z.norm();
    for k in (0..n).rev() {
        dp = dp * z + p;
        p = p * z + full[k];
        scale = scale * az + full[k].norm();
    }
    (p, dp, scale)
}

/// Initial approximations on circles whose radii come from the upper convex
/// hull of `(k, log|a_k|)`.
fn initial_guesses(full: &[Complex64], offset: f64) -> Vec<Complex64> {
    let n = full.len() - 1;
    let pts: Vec<(usize, f64)> = full
        .iter()
        .enumerate()
        .filter(|(_, c)| c.norm() > 0.0)
        .map(|(k, c)| (k, c.norm().ln()))
        .collect();
    let mut hull: Vec<(usize, f64)> = Vec::new();
    for &p in &pts {
        while hull.len() >= 2 {
            let (a, b) = (hull[hull.len() - 2], hull[hull.len() - 1]);
            let cross = (b.0 as f64 - a.0 as f64) * (p.1 - a.1) - (b.1 - a.1) * (p.0 as f64 - a.0 as f64);
            if cross >= 0.0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(p);
    }
    let mut out = Vec::with_capacity(n);
    for w in hull.windows(2) {
        let (i, li) = w[0];
        let (j, lj) = w[1];
        let m = j - i;
        let radius = ((li - lj) / m as f64).exp();
        let base = TAU * i as f64 / n as f64 + offset;
        for t in 0..m {
            out.push(Complex64::from_polar(radius, base + TAU * t as f64 / m as f64));
        }
    }
    out
}

fn aberth(full: &[Complex64], mut z: Vec<Complex64>) -> Option<Vec<Complex64>> {
    let n = z.len();
    let eps = f64::EPSILON;
    let mut done = vec![false; n];
    for _ in 0..MAX_ITER {
        for i in 0..n {
            if done[i] {
                continue;
            }
            let (p, dp, scale) = horner(full, z[i]);
            if p.norm() <= 4.0 * n as f64 * eps * scale {
                done[i] = true;
                continue;
            }
            let ratio = p / dp;
            let sum: Complex64 = (0..n).filter(|&j| j != i).map(|j| (z[i] - z[j]).inv()).sum();
            let w = ratio / (Complex64::new(1.0, 0.0) - ratio * sum);
            if !w.re.is_finite() || !w.im.is_finite() {
                return None;
            }
            z[i] -= w;
            if w.norm() <= eps * z[i].norm() {
                done[i] = true;
            }
        }
        if done.iter().all(|&d| d) {
            return Some(z);
        }
    }
    None
}

fn backward_error(full: &[Complex64], z: Complex64) -> f64 {
    let (p, _, scale) = horner(full, z);
    if scale == 0.0 {
        0.0
    } else {
        p.norm() / scale
    }
}

/// All roots of `p` with multiplicity, by Aberth–Ehrlich iteration.
///
/// Exact zero roots (vanishing low coefficients) are split off first.
/// Stagnation triggers a restart from perturbed starting points, drawn from
/// a ChaCha generator seeded with `seed`.
pub fn polynomial_roots_seeded(p: &MonicPolynomial, seed: u64) -> Result<Vec<Complex64>, CurveError> {
    let full = p.full_coeffs();
    let zeros = full.iter().take_while(|c| c.norm() == 0.0).count();
    let mut roots = vec![Complex64::new(0.0, 0.0); zeros];
    let rest = &full[zeros..];
    let m = rest.len() - 1;
    if m == 0 {
        return Ok(roots);
    }
    if m == 1 {
        roots.push(-rest[0]);
        return Ok(roots);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 0..=MAX_RESTARTS {
        let offset = if attempt == 0 { 0.4 } else { rng.gen_range(0.0..TAU) };
        let mut guesses = initial_guesses(rest, offset);
        if attempt > 0 {
            for g in guesses.iter_mut() {
                *g *= 1.0 + rng.gen_range(-0.05..0.05);
            }
        }
        if let Some(z) = aberth(rest, guesses) {
            if z.iter().all(|&r| backward_error(rest, r) <= ROOT_RESIDUAL_TOL) {
                roots.extend(z);
                return Ok(roots);
            }
        }
    }
    Err(CurveError::NoConvergence { restarts: MAX_RESTARTS })
}

pub const DEFAULT_SEED: u64 = 0x5eed;

pub fn polynomial_roots(p: &MonicPolynomial) -> Result<Vec<Complex64>, CurveError> {
    polynomial_roots_seeded(p, DEFAULT_SEED)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn contains(roots: &[Complex64], r: Complex64, tol: f64) -> bool {
        roots.iter().any(|&x| (x - r).norm() < tol)
    }

    #[test]
    fn simple_roots() {
        let roots = polynomial_roots(&MonicPolynomial::from_real(&[1.0, 0.0]).unwrap()).unwrap();
        assert!(contains(&roots, c(0.0, 1.0), 1e-12) && contains(&roots, c(0.0, -1.0), 1e-12));
        let lin = MonicPolynomial::new(vec![c(-3.0, -4.0)]).unwrap();
        assert_eq!(polynomial_roots(&lin).unwrap(), vec![c(3.0, 4.0)]);
    }

    #[test]
    fn quintic_vieta() {
        let p = MonicPolynomial::from_real(&[-2.0, 5.0, 3.0, 6.0, 0.0]).unwrap();
        let roots = polynomial_roots(&p).unwrap();
        assert_eq!(roots.len(), 5);
        let prod: Complex64 = roots.iter().product();
        // Product of roots of a quintic is -a_0.
        assert!((prod - c(2.0, 0.0)).norm() < 1e-10);
        for r in roots {
            assert!(p.eval(r).norm() < 1e-10 * (1.0 + r.norm()).powi(5));
        }
    }

    #[test]
    fn zero_roots_split_off() {
        let p = MonicPolynomial::from_real(&[0.0, 0.0]).unwrap();
        assert_eq!(polynomial_roots(&p).unwrap(), vec![c(0.0, 0.0); 2]);
        let q = MonicPolynomial::from_real(&[0.0, -64.0]).unwrap();
        let roots = polynomial_roots(&q).unwrap();
        assert!(contains(&roots, c(0.0, 0.0), 1e-300) && contains(&roots, c(64.0, 0.0), 1e-12));
    }

    #[test]
    fn widely_spread_roots() {
        let want = [c(1e6, 1e6), c(-3.0, 0.5), c(0.01, 0.0), c(250.0, -40.0), c(0.0, 2.0)];
        let p = MonicPolynomial::from_roots(&want).unwrap();
        let roots = polynomial_roots(&p).unwrap();
        for w in want {
            assert!(contains(&roots, w, 1e-7 * (1.0 + w.norm())), "{w}");
        }
    }

    #[test]
    fn roots_of_unity() {
        let mut coeffs = vec![c(0.0, 0.0); 8];
        coeffs[0] = c(-1.0, 0.0);
        let roots = polynomial_roots(&MonicPolynomial::new(coeffs).unwrap()).unwrap();
        for k in 0..8 {
            assert!(contains(&roots, Complex64::from_polar(1.0, TAU * k as f64 / 8.0), 1e-12));
        }
    }
}
