//! SVG chord diagrams of matchings and basketballs, and plots of the curves
//! `C_θ(f)`. Output is a plain string and depends only on the inputs.

use std::f64::consts::{PI, TAU};
use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::combinatorics::{Basketball, Matching, Pair};
use crate::contour::zero_set_segments;
use crate::curves::{Angle, CurveAnalysis, MonicPolynomial};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RenderKind {
    ChordDiagram,
    CurvePlot,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RenderSpec {
    pub kind: RenderKind,
    /// Width and height of one panel, in pixels.
    pub size: u32,
    pub even_stroke: String,
    pub odd_stroke: String,
    /// Cells per side of the marching-squares grid in curve plots.
    pub grid: usize,
}

impl Default for RenderSpec {
    fn default() -> Self {
        RenderSpec {
            kind: RenderKind::ChordDiagram,
            size: 360,
            even_stroke: "#1f5fbf".into(),
            odd_stroke: "#c8322d".into(),
            grid: 400,
        }
    }
}

impl RenderSpec {
    pub fn validate(&self) -> Result<(), String> {
        if self.size == 0 {
            return Err("size must be positive".into());
        }
        if self.grid < 64 {
            return Err("grid resolution must be at least 64".into());
        }
        Ok(())
    }
}

fn header(out: &mut String, width: u32, height: u32) {
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(out, r#"<rect width="{width}" height="{height}" fill="white"/>"#);
}

/// Chords between labeled points on a circle. `layers` lists chord sets
/// with their stroke colors; labels `0..points` run counterclockwise from
/// the positive x axis.
fn chords(points: usize, layers: &[(&[Pair], &str)], spec: &RenderSpec) -> String {
    let s = spec.size as f64;
    let (cx, cy, rad) = (s / 2.0, s / 2.0, s * 0.38);
    let at = |k: usize, r: f64| {
        let phi = TAU * k as f64 / points as f64;
        (cx + r * phi.cos(), cy - r * phi.sin())
    };
    let mut out = String::new();
    header(&mut out, spec.size, spec.size);
    let _ = writeln!(
        out,
        r##"<circle cx="{cx:.2}" cy="{cy:.2}" r="{rad:.2}" fill="none" stroke="#999" stroke-width="1"/>"##
    );
    for (pairs, color) in layers {
        for &(a, b) in pairs.iter() {
            let (x1, y1) = at(a, rad);
            let (x2, y2) = at(b, rad);
            let _ = writeln!(
                out,
                r#"<line x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}" stroke="{color}" stroke-width="2"/>"#
            );
        }
    }
    let font = (s / 30.0).max(8.0);
    for k in 0..points {
        let (x, y) = at(k, rad);
        let (tx, ty) = at(k, rad + font * 1.2);
        let _ = writeln!(out, r#"<circle cx="{x:.2}" cy="{y:.2}" r="3" fill="black"/>"#);
        let _ = writeln!(
            out,
            r#"<text x="{tx:.2}" y="{ty:.2}" font-family="sans-serif" font-size="{font:.1}" text-anchor="middle" dominant-baseline="central">{k}</text>"#
        );
    }
    out.push_str("</svg>\n");
    out
}

/// Even chords in the even stroke, odd chords in the odd stroke.
pub fn basketball_diagram(b: &Basketball, spec: &RenderSpec) -> String {
    chords(
        4 * b.order(),
        &[(b.even(), spec.even_stroke.as_str()), (b.odd(), spec.odd_stroke.as_str())],
        spec,
    )
}

pub fn matching_diagram(m: &Matching, spec: &RenderSpec) -> String {
    chords(m.ground_size(), &[(m.pairs(), spec.even_stroke.as_str())], spec)
}

/// Half-width of the plotted window and the radius of the drawn circle.
fn window(f: &MonicPolynomial, theta: f64) -> (f64, f64) {
    let fallback = 4.0 * (1.0 + 2.0 * f.root_scale());
    let r = CurveAnalysis::new(f)
        .ok()
        .and_then(|a| a.safe_radius(Angle::new(theta)).ok())
        .map(|c| c.radius)
        .unwrap_or(fallback);
    (1.15 * r, r)
}

fn panel(out: &mut String, f: &MonicPolynomial, layers: &[(f64, &str)], x0: f64, spec: &RenderSpec, caption: &str) {
    let s = spec.size as f64;
    let (w, r) = window(f, layers[0].0);
    let scale = s / (2.0 * w);
    let map = |z: num_complex::Complex64| (x0 + (z.re + w) * scale, (w - z.im) * scale);
    let _ = writeln!(
        out,
        r##"<circle cx="{:.2}" cy="{:.2}" r="{:.2}" fill="none" stroke="#bbb" stroke-dasharray="4 3"/>"##,
        x0 + s / 2.0,
        s / 2.0,
        r * scale
    );
    for &(theta, color) in layers {
        let mut d = String::new();
        for (a, b) in zero_set_segments(f, Angle::new(theta), w, spec.grid) {
            let (x1, y1) = map(a);
            let (x2, y2) = map(b);
            let _ = write!(d, "M{x1:.2} {y1:.2}L{x2:.2} {y2:.2}");
        }
        let _ = writeln!(out, r#"<path d="{d}" fill="none" stroke="{color}" stroke-width="1.5"/>"#);
    }
    let _ = writeln!(
        out,
        r#"<text x="{:.2}" y="{:.2}" font-family="sans-serif" font-size="14" text-anchor="middle">{caption}</text>"#,
        x0 + s / 2.0,
        s + 18.0
    );
}

fn theta_caption(theta: f64) -> String {
    let q = theta / PI;
    for d in [1u32, 2, 3, 4, 6, 8, 12] {
        let num = q * d as f64;
        if (num - num.round()).abs() < 1e-9 {
            let k = num.round() as i64;
            return match (k, d) {
                (0, _) => "θ = 0".into(),
                (1, 1) => "θ = π".into(),
                (1, _) => format!("θ = π/{d}"),
                (_, 1) => format!("θ = {k}π"),
                _ => format!("θ = {k}π/{d}"),
            };
        }
    }
    format!("θ = {theta:.4}")
}

/// One panel per angle, each showing `C_θ(f)` and the circle `S_r`.
pub fn curve_plot(f: &MonicPolynomial, thetas: &[f64], spec: &RenderSpec) -> String {
    let s = spec.size;
    let mut out = String::new();
    header(&mut out, s * thetas.len().max(1) as u32, s + 28);
    for (i, &theta) in thetas.iter().enumerate() {
        let caption = theta_caption(theta);
        panel(&mut out, f, &[(theta, spec.even_stroke.as_str())], (i as u32 * s) as f64, spec, &caption);
    }
    out.push_str("</svg>\n");
    out
}

/// `C_α` in the even stroke and `C_β` in the odd stroke, superimposed.
pub fn basketball_plot(f: &MonicPolynomial, alpha: f64, beta: f64, spec: &RenderSpec) -> String {
    let mut out = String::new();
    header(&mut out, spec.size, spec.size + 28);
    let caption = format!("{}, {}", theta_caption(alpha), theta_caption(beta));
    panel(
        &mut out,
        f,
        &[(alpha, spec.even_stroke.as_str()), (beta, spec.odd_stroke.as_str())],
        0.0,
        spec,
        &caption,
    );
    out.push_str("</svg>\n");
    out
}
