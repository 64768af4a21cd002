//! Hurwitz zeta `ζ(s, a) = Σ_{n≥0} (n + a)^{-s}` by Euler–Maclaurin summation.
//!
//! The head `Σ_{n<K}` is summed directly; the tail is replaced by the integral,
//! the half-endpoint term and the Bernoulli corrections
//! `Σ_j B_{2j}/(2j)! · s(s+1)…(s+2j−2) · (K+a)^{−s−2j+1}`.
//! For `Re s < 0` and rational `a` the reflection through `ζ(u, k/q)` with
//! `u = 1 − s` is used instead, because the direct head sum cancels badly there.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::bernoulli::bernoulli_over_factorial_f64;
use super::double_double::DoubleDouble;
use super::gamma::log_gamma;
use super::rational::Rational;
use crate::error::{pole, Error, Result};

/// Value, `s`-derivative and the magnitude of the largest partial contributions
/// (an estimate of the absolute rounding floor).
#[derive(Clone, Copy, Debug)]
pub struct EmValue {
    pub value: Complex64,
    pub derivative: Complex64,
    pub scale: f64,
}

const TERM_TOL: f64 = 1e-17;
const MAX_ORDER: usize = 79;

/// `ζ(s, a)` for `a ∈ (0, 1]`, `s ≠ 1`.
pub fn hurwitz_zeta(s: Complex64, a: f64) -> Result<Complex64> {
    if !(a > 0.0 && a <= 1.0) {
        return Err(Error::Domain(format!("Hurwitz shift {a} outside (0, 1]")));
    }
    if s == Complex64::new(1.0, 0.0) {
        return Err(pole(s));
    }
    if s.re < 0.0 {
        if let Some((r, q)) = small_fraction(a) {
            return reflected(s, r, q);
        }
    }
    Ok(hurwitz_em(s, a).value)
}

/// `ζ(s, r/q)` for an exact rational shift in `(0, 1]`.
pub fn hurwitz_zeta_rational(s: Complex64, a: &Rational) -> Result<Complex64> {
    if !a.is_positive() || *a > Rational::one() {
        return Err(Error::Domain(format!("Hurwitz shift {a} outside (0, 1]")));
    }
    if s == Complex64::new(1.0, 0.0) {
        return Err(pole(s));
    }
    if s.re < 0.0 {
        use num_traits::ToPrimitive;
        if let (Some(r), Some(q)) = (a.numer().to_i64(), a.denom().to_i64()) {
            if q <= 4096 {
                return reflected(s, r, q);
            }
        }
    }
    Ok(hurwitz_em(s, a.to_f64()).value)
}

/// Recognizes `a = r/q` with `q ≤ 64`.
fn small_fraction(a: f64) -> Option<(i64, i64)> {
    (1..=64i64).find_map(|q| {
        let r = (a * q as f64).round();
        ((a * q as f64 - r).abs() < 1e-13 && r >= 1.0).then_some((r as i64, q))
    })
}

/// `ζ(1−u, r/q) = 2Γ(u)(2πq)^{−u} Σ_{k=1}^{q} cos(πu/2 − 2πkr/q) ζ(u, k/q)`.
fn reflected(s: Complex64, r: i64, q: i64) -> Result<Complex64> {
    let u = Complex64::new(1.0, 0.0) - s;
    let lg = log_gamma(u)?;
    let pref = (lg - u * (2.0 * PI * q as f64).ln()).exp() * 2.0;
    let half = u * (PI / 2.0);
    let mut acc = Complex64::new(0.0, 0.0);
    for k in 1..=q {
        let theta = 2.0 * PI * ((k * r) % q) as f64 / q as f64;
        let z = hurwitz_em(u, k as f64 / q as f64).value;
        acc += (half - theta).cos() * z;
    }
    Ok(pref * acc)
}

/// Euler–Maclaurin evaluation for any `a > 0`, with derivative in `s`.
pub(crate) fn hurwitz_em(s: Complex64, a: f64) -> EmValue {
    let mut k = ((s.norm() / PI).ceil() as usize + 10).max(10);
    loop {
        if let Some(v) = em_attempt(s, a, k) {
            return v;
        }
        k *= 2;
    }
}

fn em_attempt(s: Complex64, a: f64, k: usize) -> Option<EmValue> {
    let one = Complex64::new(1.0, 0.0);
    let mut value = Complex64::new(0.0, 0.0);
    let mut derivative = Complex64::new(0.0, 0.0);
    let mut scale = 0.0f64;
    for n in 0..k {
        let x = n as f64 + a;
        let lx = x.ln();
        let t = (-s * lx).exp();
        value += t;
        derivative -= t * lx;
        scale += t.norm();
    }
    let big_n = k as f64 + a;
    let ln_n = big_n.ln();
    let n_pow = (-s * ln_n).exp(); // N^{-s}
    let sm1 = s - one;
    let integral = n_pow * big_n / sm1;
    value += integral + n_pow * 0.5;
    derivative += -integral * ln_n - integral / sm1 - n_pow * (0.5 * ln_n);
    scale = scale.max(integral.norm()).max(n_pow.norm());

    // Rising factorial P_j = s(s+1)…(s+2j−2) and its derivative.
    let mut p = s;
    let mut dp = one;
    let mut npow = n_pow / big_n; // N^{-s-1}
    let inv_n2 = 1.0 / (big_n * big_n);
    let mut prev = f64::INFINITY;
    for j in 1..=MAX_ORDER {
        let c = bernoulli_over_factorial_f64(j);
        let term = p * npow * c;
        let dterm = (dp - p * ln_n) * npow * c;
        value += term;
        derivative += dterm;
        let mag = term.norm().max(dterm.norm() / (1.0 + ln_n));
        if mag < TERM_TOL * scale.max(value.norm()) {
            return Some(EmValue { value, derivative, scale });
        }
        if mag > prev && j > 2 {
            return None;
        }
        prev = mag;
        let f1 = s + (2 * j - 1) as f64;
        let f2 = s + (2 * j) as f64;
        dp = dp * f1 * f2 + p * (f1 + f2);
        p = p * f1 * f2;
        npow *= inv_n2;
    }
    None
}

/// Real `ζ(σ, a)` in paired-double precision for `σ > 1`, `a > 0`.
pub fn hurwitz_zeta_real_dd(sigma: DoubleDouble, a: &Rational) -> Result<DoubleDouble> {
    if sigma.hi <= 1.0 {
        return Err(Error::Domain(format!("extended Hurwitz needs σ > 1, got {}", sigma.hi)));
    }
    if !a.is_positive() {
        return Err(Error::Domain(format!("Hurwitz shift {a} must be positive")));
    }
    let a_dd = a.to_double_double();
    let k = 40usize + (sigma.hi / PI).ceil() as usize;
    let mut sum = DoubleDouble::ZERO;
    for n in 0..k {
        let x = a_dd + DoubleDouble::from(n as f64);
        sum = sum + (-(sigma * x.ln())).exp();
    }
    let big_n = a_dd + DoubleDouble::from(k as f64);
    let ln_n = big_n.ln();
    let n_pow = (-(sigma * ln_n)).exp();
    let sm1 = sigma - DoubleDouble::ONE;
    sum = sum + n_pow * big_n / sm1 + n_pow.mul_f64(0.5);
    let mut p = sigma;
    let mut npow = n_pow / big_n;
    let inv_n2 = (big_n * big_n).recip();
    let mut fact = Rational::one();
    for j in 1..=40usize {
        fact = fact * Rational::from_integer(((2 * j - 1) * (2 * j)) as i64);
        let c = (super::bernoulli::bernoulli_number(2 * j) / &fact).to_double_double();
        let term = p * npow * c;
        sum = sum + term;
        if term.hi.abs() < 1e-34 * sum.hi.abs() {
            return Ok(sum);
        }
        let f1 = sigma + DoubleDouble::from((2 * j - 1) as f64);
        let f2 = sigma + DoubleDouble::from((2 * j) as f64);
        p = p * f1 * f2;
        npow = npow * inv_n2;
    }
    Err(Error::NonConvergence("extended Euler–Maclaurin tail did not settle".into()))
}
