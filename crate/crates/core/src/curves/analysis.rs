use std::f64::consts::{PI, TAU};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::polynomial::reduce_mod_pi;
use super::roots::DEFAULT_SEED;
use super::{polynomial_roots_seeded, Angle, MonicPolynomial};
use crate::combinatorics::{Basketball, Bimatching, Matching};
use crate::error::CurveError;
use crate::necklace::Necklace;

/// Tolerances and radius used when extracting `M(f,θ)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TraceConfig {
    /// Radius of the boundary circle `S_r`.
    pub radius: f64,
    /// Smallest step, relative to `1 + |z|`, before a trace gives up.
    pub ode_tol: f64,
    /// Newton projection tolerance, relative to `1 + |z|`.
    pub newton_tol: f64,
    /// A trace may not pass within `min_fprime * (1 + |c|)` of a critical
    /// point `c`.
    pub min_fprime: f64,
    pub max_steps: usize,
    pub singular_angle_margin: f64,
    /// Seed for the root finder's restart perturbations.
    pub seed: u64,
}

impl Default for TraceConfig {
    fn default() -> Self {
        TraceConfig {
            radius: 1.0,
            ode_tol: 1e-9,
            newton_tol: 1e-10,
            min_fprime: 1e-8,
            max_steps: 1_000_000,
            singular_angle_margin: 1e-3,
            seed: DEFAULT_SEED,
        }
    }
}

/// Critical points of `f` and the angles at which `C_θ(f)` passes through
/// one of them.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SingularAngleSet {
    pub critical_points: Vec<Complex64>,
    /// `arg f(c) mod π` for every critical point `c` with `f(c) != 0`,
    /// sorted, with repetitions.
    pub angles: Vec<f64>,
    /// Set when some critical value vanishes, i.e. `f` has a repeated root.
    pub degenerate: bool,
}

/// A point of `C_θ(f) ∩ S_r`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundaryPoint {
    pub label: usize,
    /// Polar angle in `[0, 2π)`.
    pub angle: f64,
    pub z: Complex64,
}

/// One traced arc of `C_θ(f) ∩ D_r`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComponentTrace {
    pub entry: usize,
    pub exit: usize,
    pub steps: usize,
    /// Largest accepted `|Im(e^{-iθ} f)| / (|f'| (1 + |z|))`, i.e. relative
    /// distance to the curve, along the path.
    pub max_residual: f64,
    /// Accepted points, from the entry point to the exit point.
    #[serde(skip)]
    pub path: Vec<Complex64>,
}

/// Evidence for one computed matching `M(f,θ)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalysisCertificate {
    pub theta: f64,
    pub radius: f64,
    pub boundary: Vec<BoundaryPoint>,
    pub components: Vec<ComponentTrace>,
    pub config: TraceConfig,
}

/// Roots, critical points and singular angles of one polynomial, shared by
/// every angle at which it is analyzed.
#[derive(Debug, Clone)]
pub struct CurveAnalysis {
    poly: MonicPolynomial,
    roots: Vec<Complex64>,
    singular: SingularAngleSet,
    max_root: f64,
    config: TraceConfig,
}

const MAX_DOUBLINGS: usize = 20;

fn circular_distance(a: f64, b: f64) -> f64 {
    let d = (a - b).rem_euclid(TAU);
    d.min(TAU - d)
}

impl CurveAnalysis {
    pub fn new(poly: &MonicPolynomial) -> Result<Self, CurveError> {
        Self::with_config(poly, TraceConfig::default())
    }

    /// `config.radius` is ignored; radii are certified per angle.
    pub fn with_config(poly: &MonicPolynomial, config: TraceConfig) -> Result<Self, CurveError> {
        let roots = polynomial_roots_seeded(poly, config.seed)?;
        let max_root = roots.iter().map(|r| r.norm()).fold(0.0, f64::max);
        let critical_points = match poly.normalized_derivative() {
            Some(d) => polynomial_roots_seeded(&d, config.seed)?,
            None => Vec::new(),
        };
        let mut degenerate = false;
        let mut angles = Vec::new();
        for &c in &critical_points {
            if roots.iter().any(|&r| (r - c).norm() <= 1e-6 * (1.0 + c.norm())) {
                degenerate = true;
            } else {
                angles.push(reduce_mod_pi(product(&roots, c).arg()));
            }
        }
        angles.sort_by(f64::total_cmp);
        Ok(CurveAnalysis {
            poly: poly.clone(),
            roots,
            singular: SingularAngleSet { critical_points, angles, degenerate },
            max_root,
            config,
        })
    }

    pub fn polynomial(&self) -> &MonicPolynomial {
        &self.poly
    }

    pub fn roots(&self) -> &[Complex64] {
        &self.roots
    }

    pub fn singular_angles(&self) -> &SingularAngleSet {
        &self.singular
    }

    pub fn config(&self) -> &TraceConfig {
        &self.config
    }

    fn degree(&self) -> usize {
        self.poly.degree()
    }

    /// `f(z)` from the roots.
    fn f(&self, z: Complex64) -> Complex64 {
        product(&self.roots, z)
    }

    /// `f'(z) = Σ_j ∏_{k≠j} (z - ρ_k)`, by prefix and suffix products.
    fn df(&self, z: Complex64) -> Complex64 {
        let n = self.roots.len();
        let mut prefix = vec![Complex64::new(1.0, 0.0); n + 1];
        for j in 0..n {
            prefix[j + 1] = prefix[j] * (z - self.roots[j]);
        }
        let mut suffix = Complex64::new(1.0, 0.0);
        let mut sum = Complex64::new(0.0, 0.0);
        for j in (0..n).rev() {
            sum += prefix[j] * suffix;
            suffix *= z - self.roots[j];
        }
        sum
    }

    /// Errors unless `θ` is a usable angle for this polynomial.
    pub fn check_theta(&self, theta: Angle) -> Result<(), CurveError> {
        if self.singular.degenerate {
            return Err(CurveError::Degenerate);
        }
        let margin = self.config.singular_angle_margin;
        for &s in &self.singular.angles {
            if theta.distance(Angle::new(s)) < margin {
                return Err(CurveError::SingularTheta { theta: theta.radians(), singular: s, margin });
            }
        }
        Ok(())
    }

    /// `Im(e^{-iθ} f(re^{iφ})) / r^n`, written so that it stays well scaled
    /// for large `r`.
    fn circle_function(&self, theta: f64, r: f64, phi: f64) -> f64 {
        let n = self.degree() as f64;
        let w = Complex64::from_polar(r, phi);
        let tail: Complex64 = self.roots.iter().map(|&rho| Complex64::new(1.0, 0.0) - rho / w).product();
        (Complex64::from_polar(1.0, n * phi - theta) * tail).im
    }

    /// Locates and checks the `2n` points of `C_θ(f) ∩ S_r`, or explains
    /// why `r` is not certified.
    fn certify(&self, theta: Angle, r: f64) -> Result<Vec<BoundaryPoint>, String> {
        let n = self.degree();
        let th = theta.radians();
        if !r.is_finite() || r <= self.max_root * (1.0 + 1e-9) {
            return Err(format!("radius {r} does not enclose every root"));
        }
        let samples = 128 * n;
        let signs: Vec<bool> = (0..samples)
            .map(|i| self.circle_function(th, r, TAU * i as f64 / samples as f64) >= 0.0)
            .collect();
        let changes = (0..samples).filter(|&i| signs[i] != signs[(i + 1) % samples]).count();
        if changes != 2 * n {
            return Err(format!("{changes} sign changes on the circle, expected {}", 2 * n));
        }
        let half = PI / (2 * n) as f64;
        let mut points = Vec::with_capacity(2 * n);
        for k in 0..2 * n {
            let a = (k as f64 * PI + th) / n as f64;
            let (mut lo, mut hi) = (a - half, a + half);
            let lo_sign = self.circle_function(th, r, lo) >= 0.0;
            if lo_sign == (self.circle_function(th, r, hi) >= 0.0) {
                return Err(format!("no sign change around asymptote {k}"));
            }
            for _ in 0..200 {
                let mid = 0.5 * (lo + hi);
                if mid <= lo || mid >= hi {
                    break;
                }
                if (self.circle_function(th, r, mid) >= 0.0) == lo_sign {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            let phi = 0.5 * (lo + hi);
            if (phi - a).abs() >= PI / (4 * n) as f64 {
                return Err(format!("point {k} is {} away from its asymptote", (phi - a).abs()));
            }
            let z = Complex64::from_polar(r, phi);
            // d arg f / dφ = Re(z f'/f) = Σ Re(z / (z - ρ)); it is at least n/2
            // once r exceeds every root, so this only catches bad input.
            let slope: f64 = self.roots.iter().map(|&rho| (z / (z - rho)).re).sum();
            if slope < 0.25 * n as f64 {
                return Err(format!("crossing {k} is nearly tangent"));
            }
            points.push(BoundaryPoint { label: k, angle: phi.rem_euclid(TAU), z });
        }
        // Away from θ = 0 the labels must also run counterclockwise from the
        // positive real axis.
        if th != 0.0 && (points[0].angle > PI || points[2 * n - 1].angle < PI) {
            return Err("labels do not start at the positive real axis".into());
        }
        Ok(points)
    }

    /// The first radius `4 (1 + 2 max_k |a_{n-k}|^{1/k})`, doubled until the
    /// boundary crossings are certified.
    pub fn safe_radius(&self, theta: Angle) -> Result<TraceConfig, CurveError> {
        self.check_theta(theta)?;
        let mut r = 4.0 * (1.0 + 2.0 * self.poly.root_scale());
        for _ in 0..=MAX_DOUBLINGS {
            if self.certify(theta, r).is_ok() {
                return Ok(TraceConfig { radius: r, ..self.config });
            }
            r *= 2.0;
        }
        Err(CurveError::RadiusSearchFailed { doublings: MAX_DOUBLINGS })
    }

    pub fn boundary_points(&self, theta: Angle, cfg: &TraceConfig) -> Result<Vec<BoundaryPoint>, CurveError> {
        self.certify(theta, cfg.radius)
            .map_err(|_| CurveError::BracketLost { radius: cfg.radius })
    }

    /// Follows the arc of `C_θ(f)` entering the disk at `start` until it
    /// leaves again, and reports the boundary point where it leaves.
    pub fn trace_component(
        &self,
        theta: Angle,
        start: usize,
        boundary: &[BoundaryPoint],
        cfg: &TraceConfig,
    ) -> Result<ComponentTrace, CurveError> {
        let n = self.degree();
        let r = cfg.radius;
        let rot = Complex64::from_polar(1.0, theta.radians());
        let g = |z: Complex64| rot.conj() * self.f(z);
        // Unit direction along which Re g increases and Im g is constant.
        let dir = |z: Complex64| {
            let d = rot * self.df(z).conj();
            d / d.norm()
        };
        let crit_dist = |z: Complex64| {
            self.singular
                .critical_points
                .iter()
                .map(|&c| ((z - c).norm(), cfg.min_fprime * (1.0 + c.norm())))
                .fold((f64::INFINITY, 0.0), |acc, x| if x.0 < acc.0 { x } else { acc })
        };

        let z0 = boundary[start].z;
        let sigma = if (dir(z0) * z0.conj()).re > 0.0 { -1.0 } else { 1.0 };
        let u = |z: Complex64| dir(z) * sigma;

        let mut z = z0;
        let mut level = sigma * g(z).re;
        let mut h = r / 64.0;
        let mut steps = 0usize;
        let mut max_residual: f64 = 0.0;
        let mut path = vec![z0];
        loop {
            if steps >= cfg.max_steps {
                return Err(CurveError::StepLimit(cfg.max_steps));
            }
            let (dc, floor) = crit_dist(z);
            if dc < floor {
                return Err(CurveError::NearSingular { distance: dc });
            }
            h = h.min(r / 16.0).min(0.25 * dc);
            if h < cfg.ode_tol * (1.0 + z.norm()) {
                return Err(CurveError::NearSingular { distance: dc });
            }

            let k1 = u(z);
            let k2 = u(z + k1 * (0.5 * h));
            let k3 = u(z + k2 * (0.5 * h));
            let k4 = u(z + k3 * h);
            let guess = z + (k1 + k2 * 2.0 + k3 * 2.0 + k4) * (h / 6.0);

            let mut w = guess;
            let mut converged = false;
            for _ in 0..20 {
                let gp = rot.conj() * self.df(w);
                let delta = Complex64::new(0.0, -g(w).im) / gp;
                if !delta.re.is_finite() || !delta.im.is_finite() {
                    break;
                }
                w += delta;
                if delta.norm() <= cfg.newton_tol * (1.0 + w.norm()) {
                    converged = true;
                    break;
                }
            }
            let accepted = converged
                && (w - guess).norm() <= 0.1 * h
                && (u(w) * k1.conj()).arg().abs() <= 0.35
                && sigma * g(w).re > level;
            if !accepted {
                h *= 0.5;
                continue;
            }

            steps += 1;
            let gw = g(w);
            let residual = gw.im.abs() / (self.df(w).norm() * (1.0 + w.norm()));
            max_residual = max_residual.max(residual);

            if w.norm() > r {
                // Where the chord from z to w meets the circle.
                let d = w - z;
                let a = d.norm_sqr();
                let b = 2.0 * (z.conj() * d).re;
                let c = z.norm_sqr() - r * r;
                let t = (-b + (b * b - 4.0 * a * c).max(0.0).sqrt()) / (2.0 * a);
                let q = z + d * t;
                let angle = q.arg().rem_euclid(TAU);
                let (nearest, dist) = boundary
                    .iter()
                    .map(|p| (p.label, circular_distance(p.angle, angle)))
                    .fold((usize::MAX, f64::INFINITY), |acc, x| if x.1 < acc.1 { x } else { acc });
                if dist > PI / (8 * n) as f64 {
                    return Err(CurveError::ExitMismatch { start, angle });
                }
                if nearest == start {
                    return Err(CurveError::InconsistentTrace(format!(
                        "arc from label {start} returned to its starting point"
                    )));
                }
                path.push(boundary[nearest].z);
                return Ok(ComponentTrace { entry: start, exit: nearest, steps, max_residual, path });
            }
            z = w;
            level = sigma * gw.re;
            path.push(z);
            h *= 1.6;
        }
    }

    /// `M(f,θ)` at an explicit radius, which must pass certification.
    pub fn matching_with(&self, theta: Angle, cfg: &TraceConfig) -> Result<(Matching, AnalysisCertificate), CurveError> {
        self.check_theta(theta)?;
        let n = self.degree();
        let boundary = self.boundary_points(theta, cfg)?;
        let mut partner = vec![usize::MAX; 2 * n];
        let mut components = Vec::with_capacity(n);
        for k in 0..2 * n {
            if partner[k] != usize::MAX {
                continue;
            }
            let tr = self.trace_component(theta, k, &boundary, cfg)?;
            if partner[tr.exit] != usize::MAX {
                return Err(CurveError::InconsistentTrace(format!(
                    "label {} reached from both {} and {k}",
                    tr.exit, partner[tr.exit]
                )));
            }
            partner[k] = tr.exit;
            partner[tr.exit] = k;
            components.push(tr);
        }
        let pairs = components.iter().map(|t| (t.entry, t.exit));
        let m = Matching::new(n, pairs).map_err(|e| CurveError::InconsistentTrace(e.to_string()))?;
        if !m.is_noncrossing() {
            return Err(CurveError::InconsistentTrace("traced arcs cross".into()));
        }
        let cert = AnalysisCertificate {
            theta: theta.radians(),
            radius: cfg.radius,
            boundary,
            components,
            config: *cfg,
        };
        Ok((m, cert))
    }

    pub fn matching(&self, theta: Angle) -> Result<(Matching, AnalysisCertificate), CurveError> {
        let cfg = self.safe_radius(theta)?;
        self.matching_with(theta, &cfg)
    }

    pub fn matching_at_radius(&self, theta: Angle, radius: f64) -> Result<(Matching, AnalysisCertificate), CurveError> {
        self.matching_with(theta, &TraceConfig { radius, ..self.config })
    }

    /// `B(f,α,β)`: the points of `C_α` get the even labels, those of `C_β`
    /// the odd ones.
    pub fn basketball(
        &self,
        alpha: f64,
        beta: f64,
    ) -> Result<(Basketball, [AnalysisCertificate; 2]), CurveError> {
        if !(0.0 <= alpha && alpha < beta && beta < PI) {
            return Err(CurveError::AngleOrder { alpha, beta });
        }
        let (ma, ca) = self.matching(Angle::new(alpha))?;
        let (mb, cb) = self.matching(Angle::new(beta))?;
        let bi = Bimatching::interleave(&ma, &mb).map_err(CurveError::NotABasketball)?;
        let b = Basketball::validate(bi).map_err(CurveError::NotABasketball)?;
        Ok((b, [ca, cb]))
    }

    /// The necklace `(M_1, ..., M_{n-1})` of matchings on the arcs between
    /// consecutive singular angles, starting with the arc that contains
    /// `0⁺` (or that starts at 0 when 0 itself is singular).
    pub fn necklace(&self) -> Result<Necklace, CurveError> {
        let n = self.degree();
        if n < 2 {
            return Err(CurveError::NecklaceDegenerate("degree must be at least 2".into()));
        }
        if self.singular.degenerate {
            return Err(CurveError::NecklaceDegenerate("polynomial has a repeated root".into()));
        }
        let s = &self.singular.angles;
        if s.len() != n - 1 {
            return Err(CurveError::NecklaceDegenerate(format!(
                "{} distinct critical points, expected {}",
                s.len(),
                n - 1
            )));
        }
        let margin = self.config.singular_angle_margin;
        for i in 0..s.len() {
            for j in i + 1..s.len() {
                if Angle::new(s[i]).distance(Angle::new(s[j])) <= 2.0 * margin {
                    return Err(CurveError::NecklaceDegenerate(format!(
                        "singular angles {} and {} collide",
                        s[i], s[j]
                    )));
                }
            }
        }
        let m = s.len();
        let mut out = Vec::with_capacity(m);
        let zero_singular = s[0] == 0.0;
        if !zero_singular {
            // The wrap-around arc (s_m, s_1 + π) contains 0⁺. Past π the
            // labels are those at 0⁺; before π they are shifted down by one.
            let mid = 0.5 * (s[m - 1] + s[0] + PI);
            if mid >= PI {
                out.push(self.matching(Angle::new(mid - PI))?.0);
            } else {
                out.push(self.matching(Angle::new(mid))?.0.shift(1));
            }
        }
        for i in 0..m - 1 {
            out.push(self.matching(Angle::new(0.5 * (s[i] + s[i + 1])))?.0);
        }
        if zero_singular {
            out.push(self.matching(Angle::new(0.5 * (s[m - 1] + PI)))?.0);
        }
        Necklace::validate(n, out).map_err(CurveError::NotANecklace)
    }
}

fn product(roots: &[Complex64], z: Complex64) -> Complex64 {
    roots.iter().map(|&r| z - r).product()
}

pub fn singular_angles(f: &MonicPolynomial) -> Result<SingularAngleSet, CurveError> {
    Ok(CurveAnalysis::new(f)?.singular)
}

pub fn safe_radius(f: &MonicPolynomial, theta: Angle) -> Result<TraceConfig, CurveError> {
    CurveAnalysis::new(f)?.safe_radius(theta)
}

pub fn boundary_points(f: &MonicPolynomial, theta: Angle, cfg: &TraceConfig) -> Result<Vec<BoundaryPoint>, CurveError> {
    let a = CurveAnalysis::new(f)?;
    a.check_theta(theta)?;
    a.boundary_points(theta, cfg)
}

/// The trace of the arc entering the disk at boundary label `start`.
pub fn trace_component(
    f: &MonicPolynomial,
    theta: Angle,
    start: usize,
    cfg: &TraceConfig,
) -> Result<ComponentTrace, CurveError> {
    let a = CurveAnalysis::new(f)?;
    a.check_theta(theta)?;
    let boundary = a.boundary_points(theta, cfg)?;
    if start >= boundary.len() {
        return Err(CurveError::InvalidPolynomial(format!("no boundary label {start}")));
    }
    a.trace_component(theta, start, &boundary, cfg)
}

pub fn matching_of(f: &MonicPolynomial, theta: Angle) -> Result<(Matching, AnalysisCertificate), CurveError> {
    CurveAnalysis::new(f)?.matching(theta)
}

pub fn matching_of_at_radius(
    f: &MonicPolynomial,
    theta: Angle,
    radius: f64,
) -> Result<(Matching, AnalysisCertificate), CurveError> {
    CurveAnalysis::new(f)?.matching_at_radius(theta, radius)
}

pub fn basketball_of(
    f: &MonicPolynomial,
    alpha: f64,
    beta: f64,
) -> Result<(Basketball, [AnalysisCertificate; 2]), CurveError> {
    CurveAnalysis::new(f)?.basketball(alpha, beta)
}

pub fn necklace_of(f: &MonicPolynomial) -> Result<Necklace, CurveError> {
    CurveAnalysis::new(f)?.necklace()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quintic() -> MonicPolynomial {
        MonicPolynomial::from_real(&[-2.0, 5.0, 3.0, 6.0, 0.0]).unwrap()
    }

    fn mk(m: usize, pairs: &[(usize, usize)]) -> Matching {
        Matching::new(m, pairs.iter().copied()).unwrap()
    }

    #[test]
    fn singular_angle_examples() {
        let z = MonicPolynomial::identity();
        assert!(singular_angles(&z).unwrap().angles.is_empty());
        let s = singular_angles(&MonicPolynomial::from_real(&[-1.0, 0.0]).unwrap()).unwrap();
        assert_eq!(s.angles.len(), 1);
        assert!(Angle::new(s.angles[0]).distance(Angle::new(0.0)) < 1e-12);
        assert!(!s.degenerate);
        assert!(singular_angles(&MonicPolynomial::from_real(&[0.0, 0.0]).unwrap()).unwrap().degenerate);
    }

    #[test]
    fn identity_curve() {
        let z = MonicPolynomial::identity();
        let cfg = safe_radius(&z, Angle::new(PI / 4.0)).unwrap();
        assert_eq!(cfg.radius, 4.0);
        let pts = boundary_points(&z, Angle::new(PI / 4.0), &cfg).unwrap();
        assert!((pts[0].angle - PI / 4.0).abs() < 1e-12);
        assert!((pts[1].angle - 5.0 * PI / 4.0).abs() < 1e-12);
        let pts0 = boundary_points(&z, Angle::new(0.0), &cfg).unwrap();
        assert!(pts0[0].angle < 1e-12 || pts0[0].angle > TAU - 1e-12);
        let tr = trace_component(&z, Angle::new(PI / 4.0), 0, &cfg).unwrap();
        assert_eq!(tr.exit, 1);
        for theta in [0.0, 0.3, 1.0, 3.0] {
            assert_eq!(matching_of(&z, Angle::new(theta)).unwrap().0, mk(1, &[(0, 1)]));
        }
    }

    #[test]
    fn hyperbola() {
        // Re(z^2 - 1) = 0 is x^2 - y^2 = 1: one branch through each of ±1.
        let f = MonicPolynomial::from_real(&[-1.0, 0.0]).unwrap();
        let (m, cert) = matching_of(&f, Angle::new(PI / 2.0)).unwrap();
        assert_eq!(m, mk(2, &[(0, 3), (1, 2)]));
        assert_eq!(cert.boundary.len(), 4);
        assert!(cert.components.iter().all(|c| c.max_residual <= 1e-10));
    }

    #[test]
    fn singular_theta_rejected() {
        let f = MonicPolynomial::from_real(&[-1.0, 0.0]).unwrap();
        assert!(matches!(matching_of(&f, Angle::new(0.0)), Err(CurveError::SingularTheta { .. })));
        let sq = MonicPolynomial::from_real(&[0.0, 0.0]).unwrap();
        assert_eq!(matching_of(&sq, Angle::new(0.5)).unwrap_err(), CurveError::Degenerate);
    }

    #[test]
    fn quintic_boundary() {
        let f = quintic();
        let theta = Angle::new(PI / 2.0);
        let cfg = safe_radius(&f, theta).unwrap();
        let pts = boundary_points(&f, theta, &cfg).unwrap();
        assert_eq!(pts.len(), 10);
        for p in &pts {
            let a = (p.label as f64 * PI + PI / 2.0) / 5.0;
            assert!(circular_distance(p.angle, a) < PI / 20.0);
        }
        let (m1, _) = matching_of(&f, theta).unwrap();
        let (m2, _) = matching_of_at_radius(&f, theta, 2.0 * cfg.radius).unwrap();
        assert_eq!(m1, m2);
    }

    #[test]
    fn bad_angle_order() {
        let z = MonicPolynomial::identity();
        assert!(matches!(basketball_of(&z, 1.0, 0.5), Err(CurveError::AngleOrder { .. })));
        let (b, _) = basketball_of(&z, PI / 6.0, 2.0 * PI / 3.0).unwrap();
        assert_eq!(b.even(), &[(0, 2)]);
        assert_eq!(b.odd(), &[(1, 3)]);
    }

    #[test]
    fn hyperbola_necklace() {
        let f = MonicPolynomial::from_real(&[-1.0, 0.0]).unwrap();
        let nk = necklace_of(&f).unwrap();
        assert_eq!(nk.order(), 2);
        assert_eq!(nk.matchings().len(), 1);
    }

    #[test]
    fn symmetric_quartic_is_degenerate() {
        // z^4 - 2z^2 + 2 has critical values 2, 1, 1.
        let f = MonicPolynomial::from_real(&[2.0, 0.0, -2.0, 0.0]).unwrap();
        assert!(matches!(necklace_of(&f), Err(CurveError::NecklaceDegenerate(_))));
    }
}
