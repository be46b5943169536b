//! Basketballs and necklaces of noncrossing matchings, together
//! with the numerical machinery that extracts them from the harmonic curves
//! `C_θ(f) = { z : Im(e^{-iθ} f(z)) = 0 }` of a monic complex polynomial and
//! the constructive procedure that realizes any basketball by a polynomial.
//!
//! The crate is organized bottom-up:
//!
//! * [`combinatorics`] exact matchings, bimatchings, basketballs, the
//!   4-block partition bijection, ears, symmetries and counting.
//! * [`necklace`] necklaces of matchings and their multiears.
//! * [`curves`] root finding, singular angles, boundary certification and
//!   curve tracing for `M(f,θ)`, `B(f,α,β)` and the necklace of `f`.
//! * [`contour`] a grid-based zero-level-set extractor, used for plotting and
//!   as an independent check on the tracer.
//! * [`realize`] the inverse construction: basketball to polynomial.
//! * [`render`] SVG chord diagrams and curve plots.

pub mod combinatorics;
pub mod contour;
pub mod curves;
pub mod error;
pub mod necklace;
pub mod realize;
pub mod render;

pub use combinatorics::{
    Basketball, Bimatching, Matching, Nc4Partition, OrderLimit, Pair, SymmetryOp,
};
pub use curves::{Angle, MonicPolynomial, TraceConfig};
pub use error::{CombinatoricsError, CurveError, RealizeError};
pub use necklace::Necklace;
