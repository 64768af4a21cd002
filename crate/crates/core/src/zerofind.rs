//! Zeros of analytic functions in rectangles by the argument principle, with
//! Newton refinement and the map from zeros to `α`-coordinates.

use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sequence::RiemannSequenceCandidate;

/// A function that can be evaluated together with its derivative away from its poles.
pub trait AnalyticFunction: Sync {
    fn eval(&self, s: Complex64) -> Result<Complex64>;
    fn eval_with_derivative(&self, s: Complex64) -> Result<(Complex64, Complex64)>;
    /// Simple poles of the function.
    fn poles(&self) -> Vec<Complex64> {
        Vec::new()
    }
}

/// Wraps a closure returning `(f(s), f'(s))`.
pub struct FnAnalytic<F> {
    f: F,
    poles: Vec<Complex64>,
}

impl<F> FnAnalytic<F>
where
    F: Fn(Complex64) -> Result<(Complex64, Complex64)> + Sync,
{
    pub fn new(f: F) -> Self {
        FnAnalytic { f, poles: Vec::new() }
    }

    pub fn with_poles(f: F, poles: Vec<Complex64>) -> Self {
        FnAnalytic { f, poles }
    }
}

impl<F> AnalyticFunction for FnAnalytic<F>
where
    F: Fn(Complex64) -> Result<(Complex64, Complex64)> + Sync,
{
    fn eval(&self, s: Complex64) -> Result<Complex64> {
        Ok((self.f)(s)?.0)
    }

    fn eval_with_derivative(&self, s: Complex64) -> Result<(Complex64, Complex64)> {
        (self.f)(s)
    }

    fn poles(&self) -> Vec<Complex64> {
        self.poles.clone()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Rectangle {
    pub sigma_min: f64,
    pub sigma_max: f64,
    pub t_min: f64,
    pub t_max: f64,
}

impl Rectangle {
    pub fn new(sigma_min: f64, sigma_max: f64, t_min: f64, t_max: f64) -> Result<Self> {
        let finite = [sigma_min, sigma_max, t_min, t_max].iter().all(|v| v.is_finite());
        if !finite || sigma_min >= sigma_max || t_min >= t_max {
            return Err(Error::Domain(format!(
                "bad rectangle ({sigma_min}, {sigma_max}) × ({t_min}, {t_max})"
            )));
        }
        Ok(Rectangle { sigma_min, sigma_max, t_min, t_max })
    }

    pub fn width(&self) -> f64 {
        self.sigma_max - self.sigma_min
    }

    pub fn height(&self) -> f64 {
        self.t_max - self.t_min
    }

    pub fn center(&self) -> Complex64 {
        Complex64::new(0.5 * (self.sigma_min + self.sigma_max), 0.5 * (self.t_min + self.t_max))
    }

    pub fn contains(&self, z: Complex64) -> bool {
        z.re > self.sigma_min && z.re < self.sigma_max && z.im > self.t_min && z.im < self.t_max
    }

    /// Distance from an interior point to the boundary.
    pub fn inner_distance(&self, z: Complex64) -> f64 {
        (z.re - self.sigma_min)
            .min(self.sigma_max - z.re)
            .min(z.im - self.t_min)
            .min(self.t_max - z.im)
    }

    /// The rectangle moved inward by `eps` on every side.
    pub fn shrink(&self, eps: f64) -> Rectangle {
        Rectangle {
            sigma_min: self.sigma_min + eps,
            sigma_max: self.sigma_max - eps,
            t_min: self.t_min + eps,
            t_max: self.t_max - eps,
        }
    }

    /// Four children split at fraction `frac` of each side.
    pub fn quadrisect(&self, frac: f64) -> [Rectangle; 4] {
        let sm = self.sigma_min + frac * self.width();
        let tm = self.t_min + frac * self.height();
        [
            Rectangle { sigma_max: sm, t_max: tm, ..*self },
            Rectangle { sigma_min: sm, t_max: tm, ..*self },
            Rectangle { sigma_max: sm, t_min: tm, ..*self },
            Rectangle { sigma_min: sm, t_min: tm, ..*self },
        ]
    }

    fn corners(&self) -> [Complex64; 4] {
        [
            Complex64::new(self.sigma_min, self.t_min),
            Complex64::new(self.sigma_max, self.t_min),
            Complex64::new(self.sigma_max, self.t_max),
            Complex64::new(self.sigma_min, self.t_max),
        ]
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ZeroRecord {
    pub location: Complex64,
    pub multiplicity: u32,
    /// `|f|` at the refined point.
    pub residual: f64,
    /// Size of the last Newton step.
    pub step: f64,
    pub isolation_radius: f64,
}

const MAX_BISECTIONS: u32 = 48;
const INITIAL_STEP: f64 = 0.25;

fn value_at<F: AnalyticFunction + ?Sized>(f: &F, z: Complex64) -> Result<Complex64> {
    match f.eval(z) {
        Ok(v) if v.is_finite() && v != Complex64::new(0.0, 0.0) => Ok(v),
        Ok(v) => Err(Error::BoundaryProximity(format!("f({z}) = {v} on the contour"))),
        Err(Error::Pole { .. }) => Err(Error::BoundaryProximity(format!("pole at {z} on the contour"))),
        Err(e) => Err(e),
    }
}

/// Change of `arg f` along the segment `path(u)`, `u ∈ [0, 1]`, with adaptive bisection
/// so that every accepted increment stays below `π/2`.
fn arg_change<F, P>(f: &F, path: &P, pieces: usize) -> Result<f64>
where
    F: AnalyticFunction + ?Sized,
    P: Fn(f64) -> Complex64 + Sync,
{
    let nodes: Vec<f64> = (0..=pieces).map(|k| k as f64 / pieces as f64).collect();
    let values = nodes.par_iter().map(|&u| value_at(f, path(u))).collect::<Result<Vec<_>>>()?;
    (0..pieces)
        .into_par_iter()
        .map(|k| segment(f, path, nodes[k], values[k], nodes[k + 1], values[k + 1], 0))
        .collect::<Result<Vec<f64>>>()
        .map(|d| d.iter().sum())
}

fn segment<F, P>(f: &F, path: &P, u0: f64, f0: Complex64, u1: f64, f1: Complex64, depth: u32) -> Result<f64>
where
    F: AnalyticFunction + ?Sized,
    P: Fn(f64) -> Complex64 + Sync,
{
    let um = 0.5 * (u0 + u1);
    let fm = value_at(f, path(um))?;
    let d = (f1 / f0).arg();
    let d1 = (fm / f0).arg();
    let d2 = (f1 / fm).arg();
    if d.abs() < FRAC_PI_2 && d1.abs() < FRAC_PI_2 && d2.abs() < FRAC_PI_2 && (d1 + d2 - d).abs() < 1e-9 {
        return Ok(d1 + d2);
    }
    if depth >= MAX_BISECTIONS {
        return Err(Error::BoundaryProximity(format!(
            "argument not resolved near {} after {depth} bisections",
            path(um)
        )));
    }
    let a = segment(f, path, u0, f0, um, fm, depth + 1)?;
    let b = segment(f, path, um, fm, u1, f1, depth + 1)?;
    Ok(a + b)
}

fn winding_of_total(total: f64) -> Result<i64> {
    let w = total / (2.0 * PI);
    let r = w.round();
    if (w - r).abs() > 0.05 {
        return Err(Error::BoundaryProximity(format!("non-integral winding {w}")));
    }
    Ok(r as i64)
}

/// Zeros minus poles inside `rect`, counted with multiplicity.
pub fn winding_count<F: AnalyticFunction + ?Sized>(f: &F, rect: &Rectangle) -> Result<i64> {
    let c = rect.corners();
    let edges: Vec<(Complex64, Complex64)> = (0..4).map(|k| (c[k], c[(k + 1) % 4])).collect();
    let total = edges
        .par_iter()
        .map(|&(a, b)| {
            let pieces = (((b - a).norm() / INITIAL_STEP).ceil() as usize).max(4);
            arg_change(f, &|u: f64| a + (b - a) * u, pieces)
        })
        .collect::<Result<Vec<f64>>>()?
        .iter()
        .sum();
    winding_of_total(total)
}

/// Winding number of `f` around the circle `|s − center| = radius`.
pub fn circle_winding<F: AnalyticFunction + ?Sized>(f: &F, center: Complex64, radius: f64) -> Result<i64> {
    let total = arg_change(f, &|u: f64| center + Complex64::from_polar(radius, 2.0 * PI * u), 16)?;
    winding_of_total(total)
}

fn poles_inside<F: AnalyticFunction + ?Sized>(f: &F, rect: &Rectangle) -> i64 {
    f.poles().iter().filter(|p| rect.contains(**p)).count() as i64
}

/// Number of zeros inside `rect` with multiplicity (winding plus enclosed poles).
pub fn zero_count<F: AnalyticFunction + ?Sized>(f: &F, rect: &Rectangle) -> Result<i64> {
    Ok(winding_count(f, rect)? + poles_inside(f, rect))
}

/// Newton iteration (with multiplicity `m`) from `z`; `None` if it stalls or leaves `rect`.
fn newton<F: AnalyticFunction + ?Sized>(f: &F, rect: &Rectangle, mut z: Complex64, m: u32, tol: f64) -> Option<(Complex64, f64)> {
    for _ in 0..50 {
        let (v, d) = f.eval_with_derivative(z).ok()?;
        if v == Complex64::new(0.0, 0.0) {
            return Some((z, 0.0));
        }
        if d == Complex64::new(0.0, 0.0) || !d.is_finite() {
            return None;
        }
        let step = v / d * m as f64;
        z -= step;
        if !rect.contains(z) {
            return None;
        }
        if step.norm() <= tol * (1.0 + z.norm()) {
            return Some((z, step.norm()));
        }
    }
    None
}

const SPLITS: [f64; 4] = [0.5371, 0.4629, 0.5813, 0.4187];

fn isolate_in<F: AnalyticFunction + ?Sized>(
    f: &F,
    rect: Rectangle,
    count: i64,
    tol: f64,
    depth: u32,
    max_depth: u32,
) -> Result<Vec<ZeroRecord>> {
    if count <= 0 {
        return Ok(Vec::new());
    }
    let poles: Vec<Complex64> = f.poles().into_iter().filter(|p| rect.contains(*p)).collect();
    let tiny = rect.width().max(rect.height()) < 1e3 * tol;
    if count == 1 || tiny {
        let m = count as u32;
        if let Some((z, step)) = newton(f, &rect, rect.center(), m, tol) {
            let mut radius = 0.9 * rect.inner_distance(z);
            for p in &poles {
                radius = radius.min(0.5 * (z - p).norm());
            }
            let radius = radius.min(0.1).max(10.0 * tol * (1.0 + z.norm()));
            let w = circle_winding(f, z, radius)?;
            if w == count {
                return Ok(vec![ZeroRecord {
                    location: z,
                    multiplicity: m,
                    residual: f.eval(z)?.norm(),
                    step,
                    isolation_radius: radius,
                }]);
            }
        }
        if tiny {
            return Err(Error::NonConvergence(format!(
                "Newton failed for {count} zero(s) in {rect:?}"
            )));
        }
    }
    if depth >= max_depth {
        return Err(Error::DepthExhausted(format!("{count} zero(s) unresolved in {rect:?}")));
    }
    let mut last = None;
    for frac in SPLITS {
        let children = rect.quadrisect(frac);
        let counts = children.par_iter().map(|c| zero_count(f, c)).collect::<Vec<_>>();
        match counts.into_iter().collect::<Result<Vec<i64>>>() {
            Ok(counts) if counts.iter().sum::<i64>() == count => {
                let found = children
                    .par_iter()
                    .zip(counts.par_iter())
                    .map(|(c, &n)| isolate_in(f, *c, n, tol, depth + 1, max_depth))
                    .collect::<Result<Vec<_>>>()?;
                return Ok(found.into_iter().flatten().collect());
            }
            Ok(counts) => {
                last = Some(Error::Inconsistent(format!(
                    "children of {rect:?} hold {counts:?}, parent holds {count}"
                )))
            }
            Err(e @ Error::BoundaryProximity(_)) => last = Some(e),
            Err(e) => return Err(e),
        }
    }
    Err(last.unwrap_or_else(|| Error::DepthExhausted(format!("{rect:?}"))))
}

/// Outcome of a scan: the rectangle actually used (after any inward jitter), its
/// winding number and the zeros found.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ZeroScan {
    pub rect: Rectangle,
    pub jitter: f64,
    pub winding: i64,
    pub poles: Vec<Complex64>,
    pub zeros: Vec<ZeroRecord>,
}

impl ZeroScan {
    pub fn zero_total(&self) -> u32 {
        self.zeros.iter().map(|z| z.multiplicity).sum()
    }
}

/// Like [`isolate_zeros`], also reporting winding number, enclosed poles and jitter.
pub fn scan_zeros<F: AnalyticFunction + ?Sized>(f: &F, rect: &Rectangle, tol: f64, max_depth: u32) -> Result<ZeroScan> {
    let mut jitter = 0.0;
    let mut err = None;
    for _ in 0..6 {
        let r = rect.shrink(jitter);
        match winding_count(f, &r) {
            Ok(winding) => {
                let poles: Vec<Complex64> = f.poles().into_iter().filter(|p| r.contains(*p)).collect();
                let count = winding + poles.len() as i64;
                let mut zeros = isolate_in(f, r, count, tol, 0, max_depth)?;
                zeros.sort_by(|a, b| {
                    a.location
                        .im
                        .total_cmp(&b.location.im)
                        .then(a.location.re.total_cmp(&b.location.re))
                });
                return Ok(ZeroScan { rect: r, jitter, winding, poles, zeros });
            }
            Err(e @ Error::BoundaryProximity(_)) => {
                err = Some(e);
                jitter += 1e-3;
            }
            Err(e) => return Err(e),
        }
    }
    Err(err.expect("at least one attempt"))
}

/// All zeros in `rect`, refined to a Newton step below `tol`, sorted by imaginary then real part.
pub fn isolate_zeros<F: AnalyticFunction + ?Sized>(f: &F, rect: &Rectangle, tol: f64, max_depth: u32) -> Result<Vec<ZeroRecord>> {
    Ok(scan_zeros(f, rect, tol, max_depth)?.zeros)
}

/// `s = β + iγ` with `γ > 0` becomes `α = γ + i(1/2 − β)`.
pub fn zero_to_alpha(s: Complex64) -> Complex64 {
    Complex64::new(s.im, 0.5 - s.re)
}

/// Zeros in the upper half-plane as a sequence of `α`, conjugate partners adjacent.
pub fn zeros_to_sequence(zeros: &[ZeroRecord], label: &str) -> Result<RiemannSequenceCandidate> {
    const PAIR_TOL: f64 = 1e-8;
    let mut alphas: Vec<Complex64> = zeros
        .iter()
        .filter(|z| z.location.im > PAIR_TOL)
        .flat_map(|z| std::iter::repeat_n(zero_to_alpha(z.location), z.multiplicity as usize))
        .collect();
    for a in &alphas {
        if a.im.abs() > PAIR_TOL {
            let mine = alphas.iter().filter(|b| (*b - a).norm() <= PAIR_TOL).count();
            let partners = alphas.iter().filter(|b| (*b - a.conj()).norm() <= PAIR_TOL).count();
            if mine != partners {
                return Err(Error::SymmetryViolation(format!("α = {a} has no matching conjugate")));
            }
        }
    }
    // Give conjugate partners identical real parts so the ordering is exact.
    let snapped: Vec<Complex64> = alphas
        .iter()
        .map(|a| match alphas.iter().find(|b| a.im.abs() > PAIR_TOL && (*b - a.conj()).norm() <= PAIR_TOL) {
            Some(b) => Complex64::new(0.5 * (a.re + b.re), a.im),
            None => *a,
        })
        .collect();
    alphas = snapped;
    alphas.sort_by(|a, b| {
        if (a.re - b.re).abs() <= PAIR_TOL {
            a.im.abs().total_cmp(&b.im.abs()).then(b.im.total_cmp(&a.im))
        } else {
            a.re.total_cmp(&b.re)
        }
    });
    RiemannSequenceCandidate::new(alphas, label)
}
