//! X-ray plots: the curves `Im f = 0` (thick) and `Re f = 0` (thin) over a
//! rectangle, traced by marching squares and written as SVG.

use std::fmt::Write;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::zerofind::{AnalyticFunction, Rectangle};

/// Samples within this distance of a declared pole are skipped.
pub const PUNCTURE_RADIUS: f64 = 1e-6;

#[derive(Clone, Debug)]
pub struct XRayGrid {
    pub rect: Rectangle,
    pub nx: usize,
    pub ny: usize,
    /// Row-major samples, `samples[j * nx + i]` at `σ_i`, `t_j`; `None` where punctured.
    pub samples: Vec<Option<Complex64>>,
}

impl XRayGrid {
    pub fn sample<F: AnalyticFunction + ?Sized>(f: &F, rect: &Rectangle, nx: usize, ny: usize) -> Result<Self> {
        if nx < 32 || ny < 32 {
            return Err(Error::Domain(format!("resolution {nx}×{ny} below 32×32")));
        }
        let poles = f.poles();
        let grid = XRayGrid { rect: *rect, nx, ny, samples: Vec::new() };
        let samples = (0..nx * ny)
            .into_par_iter()
            .map(|k| {
                let s = grid.point(k % nx, k / nx);
                if poles.iter().any(|p| (s - p).norm() < PUNCTURE_RADIUS) {
                    return Ok(None);
                }
                match f.eval(s) {
                    Ok(v) if v.is_finite() => Ok(Some(v)),
                    Ok(_) | Err(Error::Pole { .. }) => Ok(None),
                    Err(e) => Err(e),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(XRayGrid { samples, ..grid })
    }

    pub fn point(&self, i: usize, j: usize) -> Complex64 {
        let r = &self.rect;
        Complex64::new(
            r.sigma_min + r.width() * i as f64 / (self.nx - 1) as f64,
            r.t_min + r.height() * j as f64 / (self.ny - 1) as f64,
        )
    }

    fn at(&self, i: usize, j: usize) -> Option<Complex64> {
        self.samples[j * self.nx + i]
    }

    /// Cells left out because a corner was punctured.
    pub fn punctured_cells(&self) -> usize {
        let mut n = 0;
        for j in 0..self.ny - 1 {
            for i in 0..self.nx - 1 {
                if self.corners(i, j).is_none() {
                    n += 1;
                }
            }
        }
        n
    }

    fn corners(&self, i: usize, j: usize) -> Option<[Complex64; 4]> {
        Some([self.at(i, j)?, self.at(i + 1, j)?, self.at(i + 1, j + 1)?, self.at(i, j + 1)?])
    }
}

/// A segment in cell coordinates: `(x, y)` with `x ∈ [0, nx−1]`, `y ∈ [0, ny−1]`.
pub type Segment = ((f64, f64), (f64, f64));

/// Marching squares on one cell with corner values `v` (counter-clockwise from the
/// lower-left corner at `(i, j)`).
fn cell_segments(v: [f64; 4], i: usize, j: usize) -> Vec<Segment> {
    let (x, y) = (i as f64, j as f64);
    let pos = [(x, y), (x + 1.0, y), (x + 1.0, y + 1.0), (x, y + 1.0)];
    let crossing = |a: usize, b: usize| -> Option<(f64, f64)> {
        let (va, vb) = (v[a], v[b]);
        if (va > 0.0) == (vb > 0.0) {
            return None;
        }
        let u = va / (va - vb);
        Some((pos[a].0 + u * (pos[b].0 - pos[a].0), pos[a].1 + u * (pos[b].1 - pos[a].1)))
    };
    let edges: Vec<(f64, f64)> = (0..4).filter_map(|e| crossing(e, (e + 1) % 4)).collect();
    match edges.len() {
        2 => vec![(edges[0], edges[1])],
        4 => {
            // Saddle: pair by the sign of the cell centre.
            let centre = v.iter().sum::<f64>() / 4.0;
            if (centre > 0.0) == (v[0] > 0.0) {
                vec![(edges[0], edges[3]), (edges[1], edges[2])]
            } else {
                vec![(edges[0], edges[1]), (edges[2], edges[3])]
            }
        }
        _ => Vec::new(),
    }
}

fn intersect(a: &Segment, b: &Segment) -> Option<(f64, f64)> {
    let (p, r) = (a.0, (a.1 .0 - a.0 .0, a.1 .1 - a.0 .1));
    let (q, s) = (b.0, (b.1 .0 - b.0 .0, b.1 .1 - b.0 .1));
    let den = r.0 * s.1 - r.1 * s.0;
    if den == 0.0 {
        return None;
    }
    let qp = (q.0 - p.0, q.1 - p.1);
    let t = (qp.0 * s.1 - qp.1 * s.0) / den;
    let u = (qp.0 * r.1 - qp.1 * r.0) / den;
    if (0.0..=1.0).contains(&t) && (0.0..=1.0).contains(&u) {
        Some((p.0 + t * r.0, p.1 + t * r.1))
    } else {
        None
    }
}

/// Contours of `Im f = 0` and `Re f = 0` and their crossings, in cell coordinates.
#[derive(Clone, Debug, Default)]
pub struct Contours {
    pub real_locus: Vec<Segment>,
    pub imaginary_locus: Vec<Segment>,
    pub crossings: Vec<(f64, f64)>,
}

pub fn contours(grid: &XRayGrid) -> Contours {
    let mut out = Contours::default();
    for j in 0..grid.ny - 1 {
        for i in 0..grid.nx - 1 {
            let Some(c) = grid.corners(i, j) else { continue };
            let thick = cell_segments([c[0].im, c[1].im, c[2].im, c[3].im], i, j);
            let thin = cell_segments([c[0].re, c[1].re, c[2].re, c[3].re], i, j);
            for a in &thick {
                for b in &thin {
                    if let Some(p) = intersect(a, b) {
                        out.crossings.push(p);
                    }
                }
            }
            out.real_locus.extend(thick);
            out.imaginary_locus.extend(thin);
        }
    }
    out
}

impl XRayGrid {
    /// Cell coordinates to a point of the plane.
    pub fn to_plane(&self, p: (f64, f64)) -> Complex64 {
        let r = &self.rect;
        Complex64::new(
            r.sigma_min + r.width() * p.0 / (self.nx - 1) as f64,
            r.t_min + r.height() * p.1 / (self.ny - 1) as f64,
        )
    }

    /// A plane point to cell coordinates.
    pub fn to_cells(&self, s: Complex64) -> (f64, f64) {
        let r = &self.rect;
        (
            (s.re - r.sigma_min) / r.width() * (self.nx - 1) as f64,
            (s.im - r.t_min) / r.height() * (self.ny - 1) as f64,
        )
    }
}

/// SVG with one user unit per grid cell, `t` increasing upwards.
pub fn render_svg(grid: &XRayGrid, c: &Contours, poles: &[Complex64]) -> String {
    let (w, h) = ((grid.nx - 1) as f64, (grid.ny - 1) as f64);
    let flip = |p: (f64, f64)| (p.0, h - p.1);
    let path = |segs: &[Segment]| -> String {
        let mut d = String::new();
        for &(a, b) in segs {
            let (a, b) = (flip(a), flip(b));
            let _ = write!(d, "M{:.3} {:.3}L{:.3} {:.3}", a.0, a.1, b.0, b.1);
        }
        d
    };
    let scale = (1000.0 / w.max(h)).max(1.0);
    let mut svg = String::new();
    let _ = writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{:.0}\" height=\"{:.0}\" viewBox=\"0 0 {w} {h}\">",
        w * scale,
        h * scale
    );
    let r = &grid.rect;
    let _ = writeln!(
        svg,
        "<!-- rectangle ({}, {}) x ({}, {}), grid {}x{}, punctured cells {} -->",
        r.sigma_min,
        r.sigma_max,
        r.t_min,
        r.t_max,
        grid.nx,
        grid.ny,
        grid.punctured_cells()
    );
    let _ = writeln!(svg, "<rect width=\"{w}\" height=\"{h}\" fill=\"white\"/>");
    let sw = 1.0 / scale;
    let _ = writeln!(
        svg,
        "<path class=\"real\" fill=\"none\" stroke=\"black\" stroke-width=\"{:.4}\" d=\"{}\"/>",
        2.0 * sw,
        path(&c.real_locus)
    );
    let _ = writeln!(
        svg,
        "<path class=\"imaginary\" fill=\"none\" stroke=\"black\" stroke-width=\"{:.4}\" d=\"{}\"/>",
        sw,
        path(&c.imaginary_locus)
    );
    for &p in &c.crossings {
        let (x, y) = flip(p);
        let _ = writeln!(svg, "<circle class=\"zero\" cx=\"{x:.3}\" cy=\"{y:.3}\" r=\"{:.4}\" fill=\"red\"/>", 3.0 * sw);
    }
    for &p in poles {
        if grid.rect.contains(p) {
            let (x, y) = flip(grid.to_cells(p));
            let d = 4.0 * sw;
            let _ = writeln!(
                svg,
                "<path class=\"pole\" stroke=\"blue\" stroke-width=\"{sw:.4}\" d=\"M{:.3} {:.3}L{:.3} {:.3}M{:.3} {:.3}L{:.3} {:.3}\"/>",
                x - d,
                y - d,
                x + d,
                y + d,
                x - d,
                y + d,
                x + d,
                y - d
            );
        }
    }
    svg.push_str("</svg>\n");
    svg
}

/// Samples `f`, traces both loci and renders the SVG.
pub fn xray_svg<F: AnalyticFunction + ?Sized>(f: &F, rect: &Rectangle, nx: usize, ny: usize) -> Result<String> {
    let grid = XRayGrid::sample(f, rect, nx, ny)?;
    let c = contours(&grid);
    Ok(render_svg(&grid, &c, &f.poles()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zerofind::FnAnalytic;

    #[test]
    fn identity_axes() {
        let f = FnAnalytic::new(|z| Ok((z, Complex64::new(1.0, 0.0))));
        let r = Rectangle::new(-1.0, 1.0, -1.0, 1.0).unwrap();
        let g = XRayGrid::sample(&f, &r, 32, 32).unwrap();
        let c = contours(&g);
        for &(a, b) in &c.real_locus {
            assert!(g.to_plane(a).im.abs() < 1e-12 && g.to_plane(b).im.abs() < 1e-12);
        }
        for &(a, b) in &c.imaginary_locus {
            assert!(g.to_plane(a).re.abs() < 1e-12 && g.to_plane(b).re.abs() < 1e-12);
        }
        assert_eq!(c.crossings.len(), 1);
        assert!(g.to_plane(c.crossings[0]).norm() < 1e-12);
        assert!(XRayGrid::sample(&f, &r, 16, 32).is_err());
    }

    #[test]
    fn saddle_cell() {
        let segs = cell_segments([1.0, -1.0, 1.0, -1.0], 0, 0);
        assert_eq!(segs.len(), 2);
    }
}
