//! Realizing a basketball as `B(f,α,β)` for a monic polynomial `f`.
//!
//! The recursion removes an ear, realizes the smaller basketball, and puts
//! the ear back by multiplying with `z - R` for a large real `R`, which
//! hat-extends both matchings. Rotations and half-rotations needed to move
//! the ear into place are carried out on the polynomial by rotating the
//! frame, `f ↦ e^{inη} f(e^{-iη} z)`.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::combinatorics::{Basketball, Bimatching, Matching, SymmetryOp};
use crate::curves::{Angle, CurveAnalysis, MonicPolynomial, TraceConfig};
use crate::error::{CurveError, RealizeError};

/// Doublings of `R` tried per insertion.
pub const MAX_INSERT_DOUBLINGS: usize = 8;

/// A realizing polynomial and the bookkeeping that produced it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RealizationResult {
    pub polynomial: MonicPolynomial,
    /// `R` for every root insertion, innermost first.
    pub inserted_radii: Vec<f64>,
    /// Every frame rotation `η`, innermost first.
    pub rotation_log: Vec<f64>,
    /// `B(f,α,β)` recomputed from the final polynomial.
    pub verification: Basketball,
}

/// `e^{inη} f(e^{-iη} z)`. Its curve `C_{θ+nη}` is `C_θ(f)` rotated by `η`.
pub fn rotate_frame(f: &MonicPolynomial, eta: f64) -> MonicPolynomial {
    f.rotate_frame(eta)
}

/// Removes the outer pair `{0, 2m-1}` and shifts the rest down by one.
pub fn unhat(m: &Matching) -> Result<Matching, RealizeError> {
    Ok(m.unhat()?)
}

/// `g(z) = (z - R) f(z)` with `R` large enough that, for every angle in
/// `thetas`, `M(g,θ)` is the hat extension of `M(f,θ)`. Checked by tracing,
/// starting from `R` = 16 times the largest certified radius of `f` and
/// doubling.
pub fn insert_root(f: &MonicPolynomial, thetas: &[Angle]) -> Result<(MonicPolynomial, f64), RealizeError> {
    insert_root_with(f, thetas, &TraceConfig::default())
}

/// [`insert_root`] with explicit tolerances.
pub fn insert_root_with(
    f: &MonicPolynomial,
    thetas: &[Angle],
    cfg: &TraceConfig,
) -> Result<(MonicPolynomial, f64), RealizeError> {
    let analysis = CurveAnalysis::with_config(f, *cfg)?;
    let mut targets = Vec::with_capacity(thetas.len());
    let mut radius: f64 = 0.0;
    for &theta in thetas {
        if theta.radians() == 0.0 {
            return Err(CurveError::SingularTheta { theta: 0.0, singular: 0.0, margin: 0.0 }.into());
        }
        let (m, cert) = analysis.matching(theta)?;
        radius = radius.max(cert.radius);
        targets.push(m.hat());
    }
    let mut r = 16.0 * radius;
    for _ in 0..=MAX_INSERT_DOUBLINGS {
        let g = f.times_linear(num_complex::Complex64::new(r, 0.0));
        if hat_holds(&g, thetas, &targets, cfg) {
            return Ok((g, r));
        }
        r *= 2.0;
    }
    Err(RealizeError::InsertionFailed { doublings: MAX_INSERT_DOUBLINGS })
}

fn hat_holds(g: &MonicPolynomial, thetas: &[Angle], targets: &[Matching], cfg: &TraceConfig) -> bool {
    let Ok(analysis) = CurveAnalysis::with_config(g, *cfg) else {
        return false;
    };
    thetas
        .iter()
        .zip(targets)
        .all(|(&theta, want)| matches!(analysis.matching(theta), Ok((m, _)) if m == *want))
}

struct Log {
    radii: Vec<f64>,
    rotations: Vec<f64>,
    cfg: TraceConfig,
}

/// A polynomial `f` with `B(f,α,β) = b`, for `0 ≤ α < β < π`.
pub fn realize(b: &Basketball, alpha: f64, beta: f64) -> Result<RealizationResult, RealizeError> {
    realize_with(b, alpha, beta, &TraceConfig::default())
}

/// [`realize`] with explicit tolerances for every analysis it runs.
pub fn realize_with(
    b: &Basketball,
    alpha: f64,
    beta: f64,
    cfg: &TraceConfig,
) -> Result<RealizationResult, RealizeError> {
    if !(0.0 <= alpha && alpha < beta && beta < PI) {
        return Err(CurveError::AngleOrder { alpha, beta }.into());
    }
    let mut log = Log { radii: Vec::new(), rotations: Vec::new(), cfg: *cfg };
    let polynomial = if alpha == 0.0 {
        // Realize at (s, β + s) with α ≠ 0, then rotate the frame back.
        let s = 0.5 * (PI - beta);
        let f = realize_rec(b, s, beta + s, &mut log)?;
        let eta = -s / b.order() as f64;
        log.rotations.push(eta);
        rotate_frame(&f, eta)
    } else {
        realize_rec(b, alpha, beta, &mut log)?
    };
    let (verification, _) = CurveAnalysis::with_config(&polynomial, *cfg)?.basketball(alpha, beta)?;
    if verification != *b {
        return Err(RealizeError::VerificationFailed);
    }
    Ok(RealizationResult {
        polynomial,
        inserted_radii: log.radii,
        rotation_log: log.rotations,
        verification,
    })
}

/// The ear to remove: even-start ears first (no half-rotation needed),
/// then the fewest rotations, then the smallest start label.
fn choose_ear(b: &Basketball) -> (usize, bool) {
    let n = b.order();
    let size = 4 * n;
    b.ears()
        .iter()
        .filter_map(|q| q.consecutive_start(size))
        .map(|s| (s, s % 2 == 1))
        .min_by_key(|&(s, odd)| (odd, ((s + 2) / 2) % (2 * n), s))
        .expect("every basketball of order at least 2 has an ear")
}

fn realize_rec(b: &Basketball, alpha: f64, beta: f64, log: &mut Log) -> Result<MonicPolynomial, RealizeError> {
    let n = b.order();
    if n == 1 {
        return Ok(MonicPolynomial::identity());
    }
    let (s, odd_start) = choose_ear(b);
    if odd_start {
        // B(f_η, β-α-γ, π-γ) is the half-rotation of B(f,α,β) when
        // η = -(α+γ)/n, for any 0 < γ < β-α.
        let gamma = 0.5 * (beta - alpha);
        let turned = b.apply_symmetry(SymmetryOp::HalfRotation, 1);
        let g = realize_rec(&turned, beta - alpha - gamma, PI - gamma, log)?;
        let eta = (alpha + gamma) / n as f64;
        log.rotations.push(eta);
        return Ok(rotate_frame(&g, eta));
    }
    // Move the ear {s, s+1, s+2, s+3} to {4n-2, 4n-1, 0, 1}, where both
    // halves contain their outer pair.
    let k = ((s + 2) / 2) % (2 * n);
    let moved = b.shift(-2 * k as isize);
    let (me, mo) = moved.split();
    let inner = Bimatching::interleave(&me.unhat()?, &mo.unhat()?)?;
    let inner = Basketball::validate(inner)?;
    let f = realize_rec(&inner, alpha, beta, log)?;
    let (g, r) = insert_root_with(&f, &[Angle::new(alpha), Angle::new(beta)], &log.cfg)?;
    log.radii.push(r);
    if k == 0 {
        return Ok(g);
    }
    // Rotating by η = kπ/n shifts both matchings up by k.
    let eta = k as f64 * PI / n as f64;
    log.rotations.push(eta);
    Ok(rotate_frame(&g, eta))
}
