//! Grid-based extraction of the zero set of `Im(e^{-iθ} f)` by marching
//! squares.
//!
//! Values come from Horner evaluation of the coefficients, never from the
//! root finder, so the pairing computed here is an independent check on the
//! tracer. The same segments are used to draw curves.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::combinatorics::Matching;
use crate::curves::{Angle, MonicPolynomial};

/// A line segment of the extracted zero set, in the complex plane.
pub type Segment = (Complex64, Complex64);

struct Grid {
    half_width: f64,
    cells: usize,
    values: Vec<f64>,
}

impl Grid {
    fn sample(f: &MonicPolynomial, theta: Angle, half_width: f64, cells: usize) -> Grid {
        let rot = Complex64::from_polar(1.0, -theta.radians());
        let mut values = Vec::with_capacity((cells + 1) * (cells + 1));
        for j in 0..=cells {
            for i in 0..=cells {
                values.push((rot * f.eval(Grid::point(half_width, cells, i, j))).im);
            }
        }
        Grid { half_width, cells, values }
    }

    fn point(half_width: f64, cells: usize, i: usize, j: usize) -> Complex64 {
        let step = 2.0 * half_width / cells as f64;
        Complex64::new(-half_width + step * i as f64, -half_width + step * j as f64)
    }

    fn at(&self, i: usize, j: usize) -> f64 {
        self.values[j * (self.cells + 1) + i]
    }

    fn pos(&self, i: usize, j: usize) -> bool {
        self.at(i, j) >= 0.0
    }

    /// Edge ids: horizontal edges `(i,j)-(i+1,j)` first, then vertical
    /// edges `(i,j)-(i,j+1)`.
    fn h_edge(&self, i: usize, j: usize) -> usize {
        j * self.cells + i
    }

    fn v_edge(&self, i: usize, j: usize) -> usize {
        self.cells * (self.cells + 1) + i * self.cells + j
    }

    fn edge_count(&self) -> usize {
        2 * self.cells * (self.cells + 1)
    }

    /// Endpoints of an edge, as grid indices.
    fn edge_ends(&self, e: usize) -> ((usize, usize), (usize, usize)) {
        let n = self.cells;
        if e < n * (n + 1) {
            let (j, i) = (e / n, e % n);
            ((i, j), (i + 1, j))
        } else {
            let e = e - n * (n + 1);
            let (i, j) = (e / n, e % n);
            ((i, j), (i, j + 1))
        }
    }

    fn crosses(&self, e: usize) -> bool {
        let (a, b) = self.edge_ends(e);
        self.pos(a.0, a.1) != self.pos(b.0, b.1)
    }

    /// Linear interpolation of the zero on a crossing edge.
    fn crossing_point(&self, e: usize) -> Complex64 {
        let (a, b) = self.edge_ends(e);
        let (va, vb) = (self.at(a.0, a.1), self.at(b.0, b.1));
        let t = va / (va - vb);
        let pa = Grid::point(self.half_width, self.cells, a.0, a.1);
        let pb = Grid::point(self.half_width, self.cells, b.0, b.1);
        pa + (pb - pa) * t
    }

    /// Pairs of crossing edges joined by a segment inside each cell.
    fn cell_links(&self) -> Vec<(usize, usize)> {
        let n = self.cells;
        let mut links = Vec::new();
        for j in 0..n {
            for i in 0..n {
                let bottom = self.h_edge(i, j);
                let right = self.v_edge(i + 1, j);
                let top = self.h_edge(i, j + 1);
                let left = self.v_edge(i, j);
                let crossing: Vec<usize> =
                    [bottom, right, top, left].into_iter().filter(|&e| self.crosses(e)).collect();
                match crossing.len() {
                    2 => links.push((crossing[0], crossing[1])),
                    4 => {
                        // Saddle: the center value decides which diagonal
                        // corners are connected.
                        let center =
                            self.at(i, j) + self.at(i + 1, j) + self.at(i + 1, j + 1) + self.at(i, j + 1);
                        if (center >= 0.0) == self.pos(i, j) {
                            links.push((bottom, right));
                            links.push((top, left));
                        } else {
                            links.push((bottom, left));
                            links.push((right, top));
                        }
                    }
                    _ => {}
                }
            }
        }
        links
    }

    fn boundary_edges(&self) -> Vec<usize> {
        let n = self.cells;
        let mut v = Vec::with_capacity(4 * n);
        for i in 0..n {
            v.push(self.h_edge(i, 0));
            v.push(self.h_edge(i, n));
            v.push(self.v_edge(0, i));
            v.push(self.v_edge(n, i));
        }
        v
    }
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Segments of the zero set of `Im(e^{-iθ} f)` over the square
/// `[-w, w]²`, on a `cells × cells` grid.
pub fn zero_set_segments(f: &MonicPolynomial, theta: Angle, half_width: f64, cells: usize) -> Vec<Segment> {
    let grid = Grid::sample(f, theta, half_width, cells);
    grid.cell_links()
        .into_iter()
        .map(|(a, b)| (grid.crossing_point(a), grid.crossing_point(b)))
        .collect()
}

/// The matching of square-boundary exits joined inside the square, with
/// exits labeled by their nearest asymptote angle `(kπ + θ)/n`. `None` when
/// the grid picture is not a perfect matching on `2n` labels.
pub fn grid_matching(f: &MonicPolynomial, theta: Angle, half_width: f64, cells: usize) -> Option<Matching> {
    let n = f.degree();
    let grid = Grid::sample(f, theta, half_width, cells);
    let mut parent: Vec<usize> = (0..grid.edge_count()).collect();
    for (a, b) in grid.cell_links() {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        parent[ra] = rb;
    }
    let mut exits: Vec<(usize, usize)> = Vec::new();
    for e in grid.boundary_edges() {
        if !grid.crosses(e) {
            continue;
        }
        let phi = grid.crossing_point(e).arg();
        let x = (n as f64 * phi - theta.radians()) / PI;
        let k = x.round();
        if (x - k).abs() > 0.25 {
            return None;
        }
        let label = k.rem_euclid(2.0 * n as f64) as usize;
        exits.push((find(&mut parent, e), label));
    }
    if exits.len() != 2 * n {
        return None;
    }
    exits.sort_unstable();
    let mut pairs = Vec::with_capacity(n);
    for w in exits.chunks(2) {
        if w[0].0 != w[1].0 {
            return None;
        }
        pairs.push((w[0].1, w[1].1));
    }
    Matching::new(n, pairs).ok()
}

/// [`grid_matching`] at increasing resolution until two consecutive
/// resolutions agree.
pub fn oracle_matching(f: &MonicPolynomial, theta: Angle, half_width: f64) -> Option<Matching> {
    let mut prev: Option<Matching> = None;
    let mut cells = 200;
    while cells <= 3200 {
        let cur = grid_matching(f, theta, half_width, cells);
        if cur.is_some() && cur == prev {
            return cur;
        }
        prev = cur;
        cells *= 2;
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn line_through_origin() {
        let z = MonicPolynomial::identity();
        let m = oracle_matching(&z, Angle::new(0.4), 4.0).unwrap();
        assert_eq!(m.pairs(), &[(0, 1)]);
    }

    #[test]
    fn hyperbola_branches() {
        let f = MonicPolynomial::from_real(&[-1.0, 0.0]).unwrap();
        let m = oracle_matching(&f, Angle::new(PI / 2.0), 8.0).unwrap();
        assert_eq!(m.pairs(), &[(0, 3), (1, 2)]);
    }

    #[test]
    fn segments_lie_near_the_curve() {
        let f = MonicPolynomial::from_real(&[-2.0, 5.0, 3.0, 6.0, 0.0]).unwrap();
        let theta = Angle::new(1.0);
        let rot = Complex64::from_polar(1.0, -1.0);
        let segs = zero_set_segments(&f, theta, 3.0, 300);
        assert!(!segs.is_empty());
        for (a, _) in segs {
            let v = rot * f.eval(a);
            let d = f.eval_derivative(a).norm();
            assert!(v.im.abs() / d < 0.05);
        }
    }
}
