//! WebAssembly bindings for the static demo page in `www/`.
//!
//! Every export takes and returns strings: JSON in the same formats as the
//! command-line tool, plus SVG markup ready to be dropped into the page.

use serde_json::json;
use wasm_bindgen::prelude::*;

use harmonica::combinatorics::{count_basketballs, enumerate_basketballs};
use harmonica::curves::{parse_radians, CurveAnalysis};
use harmonica::realize::realize;
use harmonica::render::{basketball_diagram, basketball_plot, RenderSpec};
use harmonica::{Basketball, MonicPolynomial, OrderLimit};

/// Largest order the gallery enumerates in the browser.
pub const GALLERY_MAX_ORDER: usize = 6;

fn spec(size: u32) -> RenderSpec {
    RenderSpec { size, grid: 300, ..RenderSpec::default() }
}

fn angle(s: &str) -> Result<f64, String> {
    parse_radians(s)
}

/// `B(f,α,β)` of a polynomial given as `{"coeffs": [[re, im], ...]}`.
pub fn analyze_json(poly: &str, alpha: &str, beta: &str) -> Result<String, String> {
    let f: MonicPolynomial = serde_json::from_str(poly).map_err(|e| e.to_string())?;
    let (a, b) = (angle(alpha)?, angle(beta)?);
    let analysis = CurveAnalysis::new(&f).map_err(|e| e.to_string())?;
    let (bb, _) = analysis.basketball(a, b).map_err(|e| e.to_string())?;
    Ok(json!({
        "basketball": bb,
        "singular_angles": analysis.singular_angles().angles,
        "curves_svg": basketball_plot(&f, a, b, &spec(360)),
        "chords_svg": basketball_diagram(&bb, &spec(360)),
    })
    .to_string())
}

/// The `index`-th basketball of the given order, wrapping around.
pub fn basketball_json(order: usize, index: usize) -> Result<String, String> {
    if order == 0 || order > GALLERY_MAX_ORDER {
        return Err(format!("order must be between 1 and {GALLERY_MAX_ORDER}"));
    }
    let all = enumerate_basketballs(order, OrderLimit::default()).map_err(|e| e.to_string())?;
    let i = index % all.len();
    let b = &all[i];
    Ok(json!({
        "index": i,
        "count": count_basketballs(order).to_string(),
        "ears": b.ears().len(),
        "basketball": b,
        "chords_svg": basketball_diagram(b, &spec(360)),
    })
    .to_string())
}

/// A polynomial realizing a basketball given as `{"n", "even", "odd"}`.
pub fn realize_json(basketball: &str, alpha: &str, beta: &str) -> Result<String, String> {
    let b: Basketball = serde_json::from_str(basketball).map_err(|e| e.to_string())?;
    let (a, be) = (angle(alpha)?, angle(beta)?);
    let res = realize(&b, a, be).map_err(|e| e.to_string())?;
    Ok(json!({
        "polynomial": res.polynomial,
        "display": res.polynomial.to_string(),
        "inserted_radii": res.inserted_radii,
        "curves_svg": basketball_plot(&res.polynomial, a, be, &spec(360)),
    })
    .to_string())
}

#[wasm_bindgen]
pub fn analyze(poly: &str, alpha: &str, beta: &str) -> Result<String, JsError> {
    analyze_json(poly, alpha, beta).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn basketball(order: usize, index: usize) -> Result<String, JsError> {
    basketball_json(order, index).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = "realizeBasketball")]
pub fn realize_basketball(basketball: &str, alpha: &str, beta: &str) -> Result<String, JsError> {
    realize_json(basketball, alpha, beta).map_err(|e| JsError::new(&e))
}
