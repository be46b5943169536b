//! Numerical analysis of the harmonic curves `C_θ(f)`.
//!
//! For `r` larger than every root of `f`, the circle `|z| = r` meets
//! `C_θ(f)` in `2n` points near the asymptote angles `(kπ + θ)/n`. When `θ`
//! is not a singular angle the curve is a disjoint union of `n` arcs, and
//! following each arc from one boundary point to another yields the
//! noncrossing matching `M(f,θ)`.

mod analysis;
mod polynomial;
mod roots;

pub use analysis::{
    basketball_of, boundary_points, matching_of, matching_of_at_radius, necklace_of, safe_radius,
    singular_angles, trace_component, AnalysisCertificate, BoundaryPoint, ComponentTrace,
    CurveAnalysis, SingularAngleSet, TraceConfig,
};
pub use polynomial::{parse_radians, Angle, MonicPolynomial};
pub use roots::{polynomial_roots, polynomial_roots_seeded, DEFAULT_SEED, ROOT_RESIDUAL_TOL};
