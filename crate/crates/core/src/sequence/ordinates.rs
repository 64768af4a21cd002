//! Ordinates of the zeta zeros on the critical line: a Riemann–Siegel sign scan
//! followed by refinement on Hardy's function evaluated by Euler–Maclaurin.

use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::numerics::{hurwitz_zeta, log_gamma};

/// `θ(t) = Im log Γ(1/4 + it/2) − (t/2) log π`.
pub fn riemann_siegel_theta(t: f64) -> Result<f64> {
    if t >= 10.0 {
        let t2 = t * t;
        return Ok(0.5 * t * (t / (2.0 * PI)).ln() - 0.5 * t - PI / 8.0
            + 1.0 / (48.0 * t)
            + 7.0 / (5760.0 * t * t2)
            + 31.0 / (80640.0 * t * t2 * t2));
    }
    Ok(log_gamma(Complex64::new(0.25, 0.5 * t))?.im - 0.5 * t * PI.ln())
}

/// Hardy's `Z(t) = e^{iθ(t)} ζ(1/2 + it)`, real for real `t`.
pub fn hardy_z(t: f64) -> Result<f64> {
    let z = hurwitz_zeta(Complex64::new(0.5, t), 1.0)?;
    Ok((Complex64::from_polar(1.0, riemann_siegel_theta(t)?) * z).re)
}

fn c0(p: f64) -> f64 {
    let den = (2.0 * PI * p).cos();
    if den.abs() < 1e-3 {
        return 0.5 * (c0(p - 2e-3) + c0(p + 2e-3));
    }
    (2.0 * PI * (p * p - p - 1.0 / 16.0)).cos() / den
}

/// Riemann–Siegel approximation to `Z(t)` with the leading correction term; `t ≥ 10`.
pub fn riemann_siegel_z(t: f64) -> Result<f64> {
    if t < 10.0 {
        return hardy_z(t);
    }
    let theta = riemann_siegel_theta(t)?;
    let a = (t / (2.0 * PI)).sqrt();
    let n = a.floor() as usize;
    let main: f64 = (1..=n).map(|k| (theta - t * (k as f64).ln()).cos() / (k as f64).sqrt()).sum();
    let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
    Ok(2.0 * main + sign * c0(a - n as f64) / a.sqrt())
}

/// Root of `Z` in `[a, b]` where `Z` changes sign, by Illinois iteration.
fn refine(mut a: f64, mut b: f64, z: impl Fn(f64) -> Result<f64>, tol: f64) -> Result<f64> {
    let tol = tol.max(8.0 * f64::EPSILON * b.abs());
    let (mut fa, mut fb) = (z(a)?, z(b)?);
    if fa == 0.0 {
        return Ok(a);
    }
    let mut side = 0;
    for _ in 0..100 {
        let c = (a * fb - b * fa) / (fb - fa);
        let fc = z(c)?;
        if fc == 0.0 || (b - a).abs() < tol {
            return Ok(c);
        }
        if fc.signum() == fb.signum() {
            b = c;
            fb = fc;
            if side == -1 {
                fa *= 0.5;
            }
            side = -1;
        } else {
            a = c;
            fa = fc;
            if side == 1 {
                fb *= 0.5;
            }
            side = 1;
        }
        if (b - a).abs() < tol {
            return Ok(0.5 * (a + b));
        }
    }
    Err(Error::NonConvergence(format!("root of Z not resolved in [{a}, {b}]")))
}

/// The first `count` positive ordinates `τ_n` (all assumed on the critical line).
pub fn zeta_ordinates(count: usize) -> Result<Vec<f64>> {
    const STEP: f64 = 0.005;
    let mut brackets: Vec<(f64, f64)> = Vec::with_capacity(count);
    let mut t = 10.0;
    let mut prev = riemann_siegel_z(t)?;
    while brackets.len() < count {
        let next = riemann_siegel_z(t + STEP)?;
        if prev.signum() != next.signum() {
            brackets.push((t, t + STEP));
        }
        prev = next;
        t += STEP;
    }
    brackets
        .par_iter()
        .map(|&(a, b)| {
            let rough = refine(a, b, riemann_siegel_z, 1e-9)?;
            let h = 1e-6;
            refine(rough - h, rough + h, hardy_z, 1e-12)
                .or_else(|_| refine(a, b, hardy_z, 1e-12))
        })
        .collect()
}
