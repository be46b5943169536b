mod common;

use std::f64::consts::PI;

use harmonica::contour::oracle_matching;
use harmonica::curves::{
    boundary_points, matching_of, necklace_of, polynomial_roots, safe_radius, singular_angles,
};
use harmonica::realize::{insert_root, rotate_frame};
use harmonica::{Angle, CurveError, Matching, MonicPolynomial};
use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::*;

fn quintic() -> MonicPolynomial {
    MonicPolynomial::from_real(&[-2.0, 5.0, 3.0, 6.0, 0.0]).unwrap()
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Sign changes of `Im(e^{-iθ} f)` sampled on the circle of radius `r`.
fn sampled_sign_changes(f: &MonicPolynomial, theta: f64, r: f64, samples: usize) -> usize {
    let rot = Complex64::from_polar(1.0, -theta);
    let vals: Vec<f64> = (0..samples)
        .map(|k| (rot * f.eval(Complex64::from_polar(r, 2.0 * PI * k as f64 / samples as f64))).im)
        .collect();
    (0..samples).filter(|&k| (vals[k] > 0.0) != (vals[(k + 1) % samples] > 0.0)).count()
}

#[test]
fn quintic_boundary_matches_sampling() {
    let f = quintic();
    let theta = Angle::new(PI / 2.0);
    let cfg = safe_radius(&f, theta).unwrap();
    assert_eq!(sampled_sign_changes(&f, PI / 2.0, cfg.radius, 20_000), 10);
    let pts = boundary_points(&f, theta, &cfg).unwrap();
    assert_eq!(pts.len(), 10);
    for p in &pts {
        let asymptote = (p.label as f64 * PI + PI / 2.0) / 5.0;
        assert!(angle_gap(p.angle, asymptote) < PI / 20.0, "label {} at {}", p.label, p.angle);
    }
}

#[test]
fn hyperbola_agrees_with_oracle() {
    let f = MonicPolynomial::from_real(&[-1.0, 0.0]).unwrap();
    let theta = Angle::new(PI / 2.0);
    let (m, cert) = matching_of(&f, theta).unwrap();
    assert_eq!(Some(m.clone()), oracle_matching(&f, theta, cert.radius));
    assert_eq!(m, Matching::new(2, [(0, 3), (1, 2)]).unwrap());
}

#[test]
fn quintic_agrees_with_oracle_across_angles() {
    let f = quintic();
    for theta in [0.2, 0.9, 1.7, 2.4, 3.0] {
        if singular_distance(&f, theta) < 1e-2 {
            continue;
        }
        let t = Angle::new(theta);
        let (m, cert) = matching_of(&f, t).unwrap();
        assert_eq!(Some(m), oracle_matching(&f, t, cert.radius), "θ = {theta}");
    }
}

#[test]
fn quintic_vieta() {
    let roots = polynomial_roots(&quintic()).unwrap();
    let prod: Complex64 = roots.iter().product();
    assert!((prod - c(2.0, 0.0)).norm() < 1e-10);
}

#[test]
fn singular_angle_examples() {
    assert!(singular_angles(&MonicPolynomial::identity()).unwrap().angles.is_empty());
    let s = singular_angles(&MonicPolynomial::from_real(&[-1.0, 0.0]).unwrap()).unwrap();
    assert_eq!(s.angles.len(), 1);
    assert!(angle_gap(s.angles[0], 0.0) < 1e-12);
    assert!(!s.degenerate);
    let err = matching_of(&MonicPolynomial::from_real(&[0.0, 0.0]).unwrap(), Angle::new(1.0)).unwrap_err();
    assert!(matches!(err, CurveError::Degenerate));
}

#[test]
fn flow_residuals_stay_small() {
    let (_, cert) = matching_of(&quintic(), Angle::new(1.0)).unwrap();
    assert_eq!(cert.components.len(), 5);
    for comp in &cert.components {
        assert!(comp.max_residual <= cert.config.newton_tol, "{}", comp.max_residual);
    }
}

#[test]
fn cubic_insertion_hat_extends_both() {
    let f = MonicPolynomial::new(vec![c(-2.0, 0.0), c(1.0, 0.0), c(0.0, 1.0)]).unwrap();
    let thetas = [Angle::new(PI / 6.0), Angle::new(2.0 * PI / 3.0)];
    let (g, _) = insert_root(&f, &thetas).unwrap();
    for t in thetas {
        let (mf, _) = matching_of(&f, t).unwrap();
        let (mg, _) = matching_of(&g, t).unwrap();
        assert_eq!(mg.pairs(), hat_by_hand(&mf).as_slice());
    }
}

/// Sum of the critical points of `g_R = (z - R) f` is `(n/(n+1))(R - a_{n-1})`,
/// and the largest one stays a bounded distance from `nR/(n+1)`.
#[test]
fn critical_point_drift() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for degree in 2..=4 {
        let f = random_polynomial(&mut rng, degree);
        let (t1, _) = widest_gap_midpoint(&f);
        let (_, r) = insert_root(&f, &[Angle::new(t1)]).unwrap();
        let n = degree as f64;
        let a = f.coeffs()[degree - 1];
        let mut offsets = Vec::new();
        for big_r in [r, 2.0 * r] {
            let g = f.times_linear(c(big_r, 0.0));
            let crit = polynomial_roots(&g.normalized_derivative().unwrap()).unwrap();
            let sum: Complex64 = crit.iter().sum();
            let expected = (c(big_r, 0.0) - a) * (n / (n + 1.0));
            assert!((sum - expected).norm() < 1e-8 * (1.0 + big_r), "sum {sum} vs {expected}");
            let beta = crit.iter().copied().max_by(|x, y| x.norm().total_cmp(&y.norm())).unwrap();
            offsets.push((beta - n * big_r / (n + 1.0)).norm());
        }
        let bound = a.norm() + 4.0 * n;
        assert!(offsets.iter().all(|&d| d < bound), "{offsets:?} vs {bound}");
    }
}

#[test]
fn rotated_frame_rotates_curves() {
    let f = quintic();
    for eta in [0.3, -0.7] {
        let g = rotate_frame(&f, eta);
        for theta in [0.5, 2.1] {
            let (mf, _) = matching_of(&f, Angle::new(theta)).unwrap();
            let rotated = theta + 5.0 * eta;
            let (mg, _) = matching_of(&g, Angle::new(rotated)).unwrap();
            // Labels wrap by one each time the rotated angle passes a multiple of π.
            let wraps = (rotated / PI).floor() as isize;
            assert_eq!(mg, mf.shift(wraps), "η = {eta}, θ = {theta}");
        }
    }
}

#[test]
fn hyperbola_necklace() {
    let nk = necklace_of(&MonicPolynomial::from_real(&[-1.0, 0.0]).unwrap()).unwrap();
    assert_eq!(nk.order(), 2);
    assert_eq!(nk.matchings().len(), 1);
}
