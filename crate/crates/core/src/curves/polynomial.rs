use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::CurveError;

/// A monic polynomial `z^n + a_{n-1} z^{n-1} + ... + a_0` with complex
/// coefficients. The leading 1 is implicit.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawPolynomial", into = "RawPolynomial")]
pub struct MonicPolynomial {
    coeffs: Vec<Complex64>,
}

#[derive(Serialize, Deserialize)]
struct RawPolynomial {
    coeffs: Vec<[f64; 2]>,
}

impl TryFrom<RawPolynomial> for MonicPolynomial {
    type Error = CurveError;

    fn try_from(raw: RawPolynomial) -> Result<Self, Self::Error> {
        MonicPolynomial::new(raw.coeffs.iter().map(|&[re, im]| Complex64::new(re, im)).collect())
    }
}

impl From<MonicPolynomial> for RawPolynomial {
    fn from(p: MonicPolynomial) -> Self {
        RawPolynomial { coeffs: p.coeffs.iter().map(|c| [c.re, c.im]).collect() }
    }
}

impl MonicPolynomial {
    /// `coeffs[k]` is `a_k`; the degree is `coeffs.len()`.
    pub fn new(coeffs: Vec<Complex64>) -> Result<Self, CurveError> {
        if coeffs.is_empty() {
            return Err(CurveError::InvalidPolynomial("degree must be at least 1".into()));
        }
        if coeffs.iter().any(|c| !c.re.is_finite() || !c.im.is_finite()) {
            return Err(CurveError::InvalidPolynomial("coefficients must be finite".into()));
        }
        Ok(MonicPolynomial { coeffs })
    }

    /// Convenience constructor from real coefficients `a_0, ..., a_{n-1}`.
    pub fn from_real(coeffs: &[f64]) -> Result<Self, CurveError> {
        Self::new(coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    /// The polynomial `z`.
    pub fn identity() -> Self {
        MonicPolynomial { coeffs: vec![Complex64::new(0.0, 0.0)] }
    }

    /// `∏ (z - ρ)` over the given roots.
    pub fn from_roots(roots: &[Complex64]) -> Result<Self, CurveError> {
        let mut full = vec![Complex64::new(1.0, 0.0)];
        for &r in roots {
            full.push(Complex64::new(0.0, 0.0));
            for k in (1..full.len()).rev() {
                full[k] = full[k - 1] - r * full[k];
            }
            full[0] = -r * full[0];
        }
        // `full` is ascending with a trailing leading coefficient of 1.
        full.pop();
        Self::new(full)
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len()
    }

    /// `a_0, ..., a_{n-1}`.
    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// All `n + 1` coefficients in ascending order, leading 1 included.
    pub fn full_coeffs(&self) -> Vec<Complex64> {
        let mut v = self.coeffs.clone();
        v.push(Complex64::new(1.0, 0.0));
        v
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.coeffs.iter().rev().fold(Complex64::new(1.0, 0.0), |acc, &c| acc * z + c)
    }

    /// `f'(z)`, by Horner.
    pub fn eval_derivative(&self, z: Complex64) -> Complex64 {
        let n = self.degree();
        let mut acc = Complex64::new(n as f64, 0.0);
        for k in (1..n).rev() {
            acc = acc * z + self.coeffs[k] * k as f64;
        }
        acc
    }

    /// `f' / n`, which is monic of degree `n - 1`; `None` when `n = 1`.
    pub fn normalized_derivative(&self) -> Option<MonicPolynomial> {
        let n = self.degree();
        if n < 2 {
            return None;
        }
        let coeffs = (1..n).map(|k| self.coeffs[k] * (k as f64 / n as f64)).collect();
        Some(MonicPolynomial { coeffs })
    }

    /// `(z - r) f(z)`.
    pub fn times_linear(&self, r: Complex64) -> MonicPolynomial {
        let full = self.full_coeffs();
        let n = self.degree();
        let mut out = vec![Complex64::new(0.0, 0.0); n + 1];
        for k in 0..=n {
            if k > 0 {
                out[k] += full[k - 1];
            }
            out[k] -= r * full[k];
        }
        MonicPolynomial { coeffs: out }
    }

    /// The rotated polynomial `e^{inη} f(e^{-iη} z)`: coefficient `a_k` picks
    /// up the factor `e^{i(n-k)η}`, and every root `ρ` moves to `e^{iη} ρ`.
    pub fn rotate_frame(&self, eta: f64) -> MonicPolynomial {
        let n = self.degree();
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, &a)| a * Complex64::from_polar(1.0, (n - k) as f64 * eta))
            .collect();
        MonicPolynomial { coeffs }
    }

    /// Largest coefficient modulus, excluding the leading 1.
    pub fn max_coeff_modulus(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// `max_k |a_{n-k}|^{1/k}`, a scale for the roots: every root has
    /// modulus at most twice this.
    pub fn root_scale(&self) -> f64 {
        let n = self.degree();
        (1..=n)
            .map(|k| self.coeffs[n - k].norm().powf(1.0 / k as f64))
            .fold(0.0, f64::max)
    }
}

impl fmt::Display for MonicPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.degree();
        write!(f, "z^{n}")?;
        for k in (0..n).rev() {
            let c = self.coeffs[k];
            if c.re == 0.0 && c.im == 0.0 {
                continue;
            }
            let term = match k {
                0 => String::new(),
                1 => "z".to_string(),
                _ => format!("z^{k}"),
            };
            if c.im == 0.0 {
                let sign = if c.re < 0.0 { '-' } else { '+' };
                write!(f, " {sign} {}{term}", c.re.abs())?;
            } else {
                write!(f, " + ({}{:+}i){term}", c.re, c.im)?;
            }
        }
        Ok(())
    }
}

/// An angle in `ℝ/πℤ`, stored as its representative in `[0, π)`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(from = "f64", into = "f64")]
pub struct Angle(f64);

impl Angle {
    pub fn new(theta: f64) -> Angle {
        Angle(reduce_mod_pi(theta))
    }

    pub fn radians(self) -> f64 {
        self.0
    }

    /// Distance to `other` in `ℝ/πℤ`.
    pub fn distance(self, other: Angle) -> f64 {
        let d = (self.0 - other.0).abs();
        d.min(PI - d)
    }
}

impl From<f64> for Angle {
    fn from(x: f64) -> Self {
        Angle::new(x)
    }
}

impl From<Angle> for f64 {
    fn from(a: Angle) -> Self {
        a.0
    }
}

impl fmt::Display for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl FromStr for Angle {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_radians(s).map(Angle::new)
    }
}

pub(crate) fn reduce_mod_pi(x: f64) -> f64 {
    let r = x.rem_euclid(PI);
    if r >= PI {
        0.0
    } else {
        r
    }
}

/// Parses radians written as a decimal (`0.5`) or as a rational multiple of
/// π (`pi`, `-pi/6`, `2pi/3`, `2*pi/3`, `3π/4`).
pub fn parse_radians(s: &str) -> Result<f64, String> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect::<String>().to_lowercase();
    let t = t.replace('π', "pi");
    if t.is_empty() {
        return Err("empty angle".into());
    }
    let Some(pos) = t.find("pi") else {
        return t.parse::<f64>().map_err(|e| format!("bad angle {s:?}: {e}"));
    };
    let head = t[..pos].trim_end_matches('*');
    let tail = &t[pos + 2..];
    let coeff = match head {
        "" | "+" => 1.0,
        "-" => -1.0,
        h => h.parse::<f64>().map_err(|e| format!("bad angle {s:?}: {e}"))?,
    };
    let denom = match tail {
        "" => 1.0,
        d => d
            .strip_prefix('/')
            .ok_or_else(|| format!("bad angle {s:?}"))?
            .parse::<f64>()
            .map_err(|e| format!("bad angle {s:?}: {e}"))?,
    };
    if denom == 0.0 {
        return Err(format!("bad angle {s:?}: zero denominator"));
    }
    Ok(coeff * PI / denom)
}
