//! Candidate Riemann sequences: structural checks, sums over the terms, the
//! constant `B`, theta sums, `Z_α` and its closed-form values.

mod ordinates;

use std::f64::consts::{FRAC_PI_4, PI};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

pub use ordinates::{riemann_siegel_theta, riemann_siegel_z, zeta_ordinates, hardy_z};

use crate::asymptotics::{coeff_a, expansion_main, EULER_GAMMA};
use crate::error::{Error, Result};
use crate::numerics::{digamma, euler_number, log_gamma, Rational};
use crate::zetabuild::ZetaLikeFunction;

const PAIR_TOL: f64 = 1e-8;

/// Smooth surrogate for the terms above `t_max`, with density `(1/2π) log(t/2π)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct TailModel {
    pub t_max: f64,
}

impl TailModel {
    pub fn density(t: f64) -> f64 {
        (t / (2.0 * PI)).ln() / (2.0 * PI)
    }

    /// `∫_{t_max}^∞ h(t) d(t) dt`, via `t = t_max/u` and double-exponential quadrature.
    pub fn integrate<H: Fn(f64) -> f64>(&self, h: H) -> f64 {
        let t0 = self.t_max;
        quadrature::integrate(
            |u: f64| {
                if u <= 0.0 {
                    return 0.0;
                }
                let t = t0 / u;
                h(t) * Self::density(t) * t0 / (u * u)
            },
            0.0,
            1.0,
            1e-15,
        )
        .integral
    }

    /// Closed form of `∫_{t_max}^∞ t^{−σ} d(t) dt` for `σ > 1`.
    pub fn power_moment(&self, sigma: f64) -> f64 {
        let t = self.t_max;
        let e = sigma - 1.0;
        t.powf(-e) * ((t / (2.0 * PI)).ln() / e + 1.0 / (e * e)) / (2.0 * PI)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RiemannSequenceCandidate {
    pub terms: Vec<Complex64>,
    pub label: String,
    pub tail: Option<TailModel>,
}

impl RiemannSequenceCandidate {
    /// Terms must be finite with non-decreasing real parts.
    pub fn new(terms: Vec<Complex64>, label: &str) -> Result<Self> {
        if let Some(bad) = terms.iter().position(|a| !a.is_finite()) {
            return Err(Error::Domain(format!("term {} is not finite", bad + 1)));
        }
        if let Some(k) = terms.windows(2).position(|w| w[1].re < w[0].re) {
            return Err(Error::Domain(format!(
                "real parts decrease at term {}: {} after {}",
                k + 2,
                terms[k + 1],
                terms[k]
            )));
        }
        Ok(RiemannSequenceCandidate { terms, label: label.to_string(), tail: None })
    }

    /// Real terms (ordinates of zeros on the critical line) with the default tail attached
    /// half a mean spacing above the last ordinate.
    pub fn from_ordinates(ordinates: &[f64], label: &str) -> Result<Self> {
        let seq = Self::new(ordinates.iter().map(|&t| Complex64::new(t, 0.0)).collect(), label)?;
        match ordinates.last() {
            Some(&last) if last > 2.0 * PI => {
                let half_gap = PI / (last / (2.0 * PI)).ln();
                Ok(seq.with_tail(TailModel { t_max: last + half_gap }))
            }
            _ => Ok(seq),
        }
    }

    pub fn with_tail(mut self, tail: TailModel) -> Self {
        self.tail = Some(tail);
        self
    }

    pub fn without_tail(mut self) -> Self {
        self.tail = None;
        self
    }

    /// The first `k` terms, keeping a tail model above the last kept term.
    pub fn truncated(&self, k: usize) -> Result<Self> {
        if k > self.terms.len() {
            return Err(Error::InsufficientData(format!("{k} terms requested, {} stored", self.terms.len())));
        }
        let ords: Vec<f64> = self.terms[..k].iter().map(|a| a.re).collect();
        let mut seq = Self::new(self.terms[..k].to_vec(), &self.label)?;
        if self.tail.is_some() {
            seq = Self::from_ordinates(&ords, &self.label)?;
            seq.terms = self.terms[..k].to_vec();
        }
        Ok(seq)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn tail_start(&self) -> f64 {
        match self.tail {
            Some(t) => t.t_max,
            None => self.terms.last().map_or(0.0, |a| a.re),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Verdict {
    pub pass: bool,
    pub witness: f64,
    pub detail: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SequenceKind {
    Real,
    Complex,
    Undetermined,
}

/// One row of the asymptotic-expansion table: `Σ 2x/(x²+α²) − main(x, N)` and the
/// same residual scaled by `x^{N+1}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResidualRow {
    pub x: f64,
    pub order: usize,
    pub residual: f64,
    pub scaled: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CertificationReport {
    pub label: String,
    pub terms: usize,
    pub c: f64,
    pub ordering: Verdict,
    pub conjugates: Verdict,
    pub bounded_imaginary: Verdict,
    pub sector: Verdict,
    pub kind: SequenceKind,
    pub expansion: Vec<ResidualRow>,
}

impl CertificationReport {
    pub fn structure_passes(&self) -> bool {
        self.ordering.pass && self.conjugates.pass && self.bounded_imaginary.pass && self.sector.pass
    }
}

fn unmatched_conjugates(terms: &[Complex64]) -> usize {
    let mut pending: Vec<Complex64> = terms.iter().copied().filter(|a| a.im.abs() > PAIR_TOL).collect();
    let mut unmatched = 0;
    while let Some(a) = pending.pop() {
        match pending.iter().position(|b| (*b - a.conj()).norm() <= PAIR_TOL * (1.0 + a.norm())) {
            Some(k) => {
                pending.swap_remove(k);
            }
            None => unmatched += 1,
        }
    }
    unmatched
}

/// Ordering, conjugate symmetry, `|Im α| < C` and `|Im α| < Re α`.
pub fn check_structure(seq: &RiemannSequenceCandidate, c: f64) -> CertificationReport {
    let first = seq.terms.first().map_or(f64::NAN, |a| a.re);
    let monotone = seq.terms.windows(2).all(|w| w[0].re <= w[1].re);
    let ordering = Verdict {
        pass: first > 1.0 && monotone,
        witness: first,
        detail: format!("Re α₁ = {first}, monotone = {monotone}"),
    };
    let unmatched = unmatched_conjugates(&seq.terms);
    let conjugates = Verdict {
        pass: unmatched == 0 && !seq.terms.is_empty(),
        witness: unmatched as f64,
        detail: format!("{unmatched} non-real term(s) without a conjugate partner"),
    };
    let max_im = seq.terms.iter().map(|a| a.im.abs()).fold(0.0, f64::max);
    let bounded_imaginary = Verdict {
        pass: max_im < c,
        witness: max_im,
        detail: format!("max |Im α| = {max_im} against C = {c}"),
    };
    let max_ratio = seq.terms.iter().map(|a| a.im.abs() / a.re).fold(0.0, f64::max);
    let sector = Verdict {
        pass: max_ratio < 1.0,
        witness: max_ratio,
        detail: format!("max |Im α|/Re α = {max_ratio}"),
    };
    let kind = if !conjugates.pass {
        SequenceKind::Undetermined
    } else if max_im > PAIR_TOL {
        SequenceKind::Complex
    } else {
        SequenceKind::Real
    };
    CertificationReport {
        label: seq.label.clone(),
        terms: seq.terms.len(),
        c,
        ordering,
        conjugates,
        bounded_imaginary,
        sector,
        kind,
        expansion: Vec::new(),
    }
}

/// Residuals of the zero sum against `expansion_main` over a grid of `x` and orders.
pub fn expansion_table(seq: &RiemannSequenceCandidate, xs: &[f64], orders: &[usize]) -> Result<Vec<ResidualRow>> {
    let mut rows = Vec::new();
    for &x in xs {
        let sum = zero_sum(seq, x)?.re;
        for &n in orders {
            let residual = sum - expansion_main(Complex64::new(x, 0.0), n)?.re;
            rows.push(ResidualRow { x, order: n, residual, scaled: residual * x.powi(n as i32 + 1) });
        }
    }
    Ok(rows)
}

/// [`check_structure`] plus the expansion table.
pub fn certify(seq: &RiemannSequenceCandidate, c: f64, xs: &[f64], orders: &[usize]) -> Result<CertificationReport> {
    let mut report = check_structure(seq, c);
    report.expansion = expansion_table(seq, xs, orders)?;
    Ok(report)
}

/// `Σ 2x/(x² + α²)` over the stored terms plus the tail integral.
pub fn zero_sum(seq: &RiemannSequenceCandidate, x: f64) -> Result<Complex64> {
    if x <= 0.0 || !x.is_finite() {
        return Err(Error::Domain(format!("zero sum needs x > 0, got {x}")));
    }
    let mut acc = Complex64::new(0.0, 0.0);
    for a in &seq.terms {
        let d = x * x + a * a;
        if d.norm() < 1e-12 {
            return Err(Error::NearSingularity(format!("x² + α² ≈ 0 at α = {a}")));
        }
        acc += 2.0 * x / d;
    }
    if let Some(tail) = seq.tail {
        acc += tail.integrate(|t| 2.0 * x / (x * x + t * t));
    }
    Ok(acc)
}

/// `Σ 2x/(x² + τ²)` over the zeta zeros in closed form:
/// `ζ'/ζ(1/2 + x) − (1/2) log π + 1/(x − 1/2) + (1/2) ψ(x/2 + 5/4)`.
pub fn zeta_zero_sum_oracle(x: f64) -> Result<f64> {
    if x == 0.5 {
        return Err(Error::Pole { re: x, im: 0.0 });
    }
    if x <= 0.5 || !x.is_finite() {
        return Err(Error::Domain(format!("oracle needs x > 1/2, got {x}")));
    }
    let s = Complex64::new(0.5 + x, 0.0);
    let (z, dz) = ZetaLikeFunction::riemann().eval_with_derivative(s)?;
    let psi = digamma(Complex64::new(0.5 * x + 1.25, 0.0))?.re;
    Ok((dz / z).re - 0.5 * PI.ln() + 1.0 / (x - 0.5) + 0.5 * psi)
}

/// Polynomial extrapolation of `(h_i, y_i)` to `h = 0`.
fn extrapolate_to_zero(hs: &[f64], ys: &[f64]) -> f64 {
    let mut p = ys.to_vec();
    let n = hs.len();
    for level in 1..n {
        for i in 0..n - level {
            p[i] = (hs[i + level] * p[i] - hs[i] * p[i + 1]) / (hs[i + level] - hs[i]);
        }
    }
    p[0]
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BEstimate {
    pub b: f64,
    /// Difference between extrapolations with and without the smallest grid point.
    pub spread: f64,
    /// Largest `|Im|` of the bracketed quantity on the grid.
    pub imaginary: f64,
    pub values: Vec<(f64, f64)>,
    pub converged: bool,
}

/// `Σ log(1 + x²/α²) − (x/2) log(x/2π) + x/2 − (7/4) log x` with tail compensation.
pub fn b_bracket(seq: &RiemannSequenceCandidate, x: f64) -> Result<Complex64> {
    if x <= 0.0 {
        return Err(Error::Domain(format!("need x > 0, got {x}")));
    }
    let mut acc = Complex64::new(0.0, 0.0);
    for a in &seq.terms {
        acc += (Complex64::new(1.0, 0.0) + x * x / (a * a)).ln();
    }
    if let Some(tail) = seq.tail {
        acc += tail.integrate(|t| (x * x / (t * t)).ln_1p());
    }
    Ok(acc - 0.5 * x * (x / (2.0 * PI)).ln() + 0.5 * x - 1.75 * x.ln())
}

/// Constant `B` of the logarithmic form, extrapolated in `1/x` over `x_grid`.
pub fn estimate_b(seq: &RiemannSequenceCandidate, x_grid: &[f64], tol: f64) -> Result<BEstimate> {
    if x_grid.len() < 2 || x_grid.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Domain("x grid must be ascending with at least two points".into()));
    }
    let raw = x_grid.iter().map(|&x| b_bracket(seq, x)).collect::<Result<Vec<_>>>()?;
    let imaginary = raw.iter().map(|v| v.im.abs()).fold(0.0, f64::max);
    let hs: Vec<f64> = x_grid.iter().map(|x| 1.0 / x).collect();
    let ys: Vec<f64> = raw.iter().map(|v| v.re).collect();
    let b = extrapolate_to_zero(&hs, &ys);
    let coarse = extrapolate_to_zero(&hs[1..], &ys[1..]);
    let spread = (b - coarse).abs();
    Ok(BEstimate {
        b,
        spread,
        imaginary,
        values: x_grid.iter().copied().zip(ys).collect(),
        converged: spread <= tol,
    })
}

/// `Ξ_α(0) = exp((1/4) log(π/2) − B)`.
pub fn xi_alpha_at_zero(b: f64) -> f64 {
    (0.25 * (PI / 2.0).ln() - b).exp()
}

/// `Ξ_α(z) = Ξ_α(0) Π (1 − z²/α²)` over the stored terms with the tail in log form.
pub fn xi_alpha(seq: &RiemannSequenceCandidate, z: Complex64, b: f64) -> Result<Complex64> {
    let one = Complex64::new(1.0, 0.0);
    let mut log = Complex64::new(xi_alpha_at_zero(b).ln(), 0.0);
    for a in &seq.terms {
        let w = one - z * z / (a * a);
        if w.norm() == 0.0 {
            return Ok(Complex64::new(0.0, 0.0));
        }
        log += w.ln();
    }
    if let Some(tail) = seq.tail {
        if z.norm() >= tail.t_max {
            return Err(Error::InsufficientData(format!("|z| = {} beyond the stored range", z.norm())));
        }
        let z2 = z * z;
        log += Complex64::new(
            tail.integrate(|t| (one - z2 / (t * t)).ln().re),
            tail.integrate(|t| (one - z2 / (t * t)).ln().im),
        );
    }
    Ok(log.exp())
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct TailedValue {
    pub value: Complex64,
    pub tail_bound: f64,
}

/// `Σ e^{−α² x}` with a bound on the omitted terms.
pub fn theta_sum(seq: &RiemannSequenceCandidate, x: f64, tol: f64) -> Result<TailedValue> {
    if x <= 0.0 {
        return Err(Error::Domain(format!("theta sum needs x > 0, got {x}")));
    }
    let value: Complex64 = seq.terms.iter().map(|a| (-(a * a) * x).exp()).sum();
    let t0 = seq.tail_start();
    let tail_bound = if t0 > 2.0 * PI {
        2.0 * TailModel { t_max: t0 }.integrate(|t| (-x * t * t).exp())
    } else {
        f64::INFINITY
    };
    if tail_bound > tol {
        return Err(Error::InsufficientData(format!(
            "tail bound {tail_bound:e} above {tol:e} at x = {x}; more terms needed"
        )));
    }
    Ok(TailedValue { value, tail_bound })
}

/// First `terms` pieces of the small-`x` expansion of `2 Σ e^{−α² x}`:
/// the logarithmic lead plus `Σ_{n<terms} a_{n+1} x^{n/2} / Γ(1 + n/2)`.
pub fn smallx_expansion(x: f64, terms: usize) -> Result<f64> {
    if x <= 0.0 {
        return Err(Error::Domain(format!("small-x expansion needs x > 0, got {x}")));
    }
    let mut acc = ((-EULER_GAMMA).exp() / (16.0 * PI * PI * x)).ln() / (4.0 * (PI * x).sqrt());
    for n in 0..terms {
        let g = log_gamma(Complex64::new(1.0 + n as f64 / 2.0, 0.0))?.re.exp();
        acc += coeff_a(n + 1).to_f64() / g * x.powf(n as f64 / 2.0);
    }
    Ok(acc)
}

/// `2 Σ e^{−α² x}` minus the first `n` pieces of its small-`x` expansion; of order `x^{n/2}`.
pub fn smallx_residual(seq: &RiemannSequenceCandidate, x: f64, n: usize, tol: f64) -> Result<f64> {
    let theta = theta_sum(seq, x, tol)?;
    Ok(2.0 * theta.value.re - smallx_expansion(x, n)?)
}

/// `|∫₀^∞ f(x) e^{−x t²} dx − Σ 1/(t² + α²)|` with `f(x) = Σ e^{−α² x}`.
pub fn laplace_residual(seq: &RiemannSequenceCandidate, t: Complex64) -> Result<f64> {
    if t.arg().abs() >= FRAC_PI_4 || t.norm() == 0.0 {
        return Err(Error::Domain(format!("need |arg t| < π/4, got arg {} ", t.arg())));
    }
    let t2 = t * t;
    let rates: Vec<Complex64> = seq.terms.iter().map(|a| a * a + t2).collect();
    if rates.iter().any(|r| r.re <= 0.0) {
        return Err(Error::Domain("a term makes the integrand non-decaying".into()));
    }
    let direct: Complex64 = rates.iter().map(|r| r.inv()).sum();
    let fastest = rates.iter().map(|r| r.norm()).fold(0.0, f64::max);
    let slowest = rates.iter().map(|r| r.re).fold(f64::INFINITY, f64::min);
    let integrand = |x: f64| -> Complex64 { rates.iter().map(|r| (-r * x).exp()).sum() };
    let end = 60.0 / slowest;
    let mut lo = 0.0;
    let mut hi = 1.0 / fastest;
    let mut acc = Complex64::new(0.0, 0.0);
    while lo < end {
        let re = quadrature::integrate(|x| integrand(x).re, lo, hi, 1e-16).integral;
        let im = quadrature::integrate(|x| integrand(x).im, lo, hi, 1e-16).integral;
        acc += Complex64::new(re, im);
        lo = hi;
        hi *= 2.0;
    }
    Ok((acc - direct).norm())
}

/// `Σ_{n≤K} α_n^{−s}` (principal branch) with the tail bound
/// `e^{π|Im s|/4} ∫_{Re α_K}^∞ u^{−σ} d(u) du`.
pub fn z_partial(seq: &RiemannSequenceCandidate, s: Complex64, k: usize) -> Result<TailedValue> {
    if s.re <= 1.0 {
        return Err(Error::Domain(format!("Z_α needs Re s > 1, got {s}")));
    }
    if k == 0 || k > seq.terms.len() {
        return Err(Error::InsufficientData(format!("K = {k} with {} stored terms", seq.terms.len())));
    }
    let value: Complex64 = seq.terms[..k].iter().map(|a| (-s * a.ln()).exp()).sum();
    let t0 = seq.terms[k - 1].re;
    let tail_bound = if t0 > 2.0 * PI {
        (PI * s.im.abs() / 4.0).exp() * TailModel { t_max: t0 }.power_moment(s.re)
    } else {
        f64::INFINITY
    };
    Ok(TailedValue { value, tail_bound })
}

/// `Z_α(−2n) = (−1)ⁿ (8 − E_{2n}) / 2^{2n+3}`.
pub fn z_special_value(n: usize) -> Rational {
    let sign = if n.is_multiple_of(2) { Rational::one() } else { -Rational::one() };
    sign * (Rational::from_integer(8) - euler_number(2 * n)) * Rational::new(1, 2).pow(2 * n as i32 + 3)
}

/// The same value assembled as `(−1)ⁿ a_{2n+1} / 2`.
pub fn z_special_value_from_coefficients(n: usize) -> Rational {
    let sign = if n.is_multiple_of(2) { Rational::one() } else { -Rational::one() };
    sign * coeff_a(2 * n + 1) * Rational::new(1, 2)
}

/// Coefficient of `1/(π(s + 2n − 1))` in `Z_α`: `(−1)ⁿ a_{2n}`.
pub fn z_pole_main_part(n: usize) -> Rational {
    assert!(n >= 1, "odd poles start at n = 1");
    let sign = if n.is_multiple_of(2) { Rational::one() } else { -Rational::one() };
    sign * coeff_a(2 * n)
}

/// Residue of the double pole of `Z_α` at `s = 1`: `−log(2π)/(2π)`.
pub fn z_double_pole_residue() -> f64 {
    -(2.0 * PI).ln() / (2.0 * PI)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CountingFit {
    /// Smallest `C` with `N(x) ≤ C x log(x + 1)` on the data.
    pub c: f64,
    /// Log-log slope of `N(x)/(x log(x+1))` over the upper half of the data.
    pub trend: f64,
    pub bounded: bool,
    pub ratios: Vec<(f64, f64)>,
}

/// Empirical counting function `N(x) = #{n : Re α_n ≤ x}` against `x log(x + 1)`.
pub fn counting_check(seq: &RiemannSequenceCandidate) -> Result<CountingFit> {
    if seq.terms.len() < 10 {
        return Err(Error::InsufficientData(format!("{} terms, need at least 10", seq.terms.len())));
    }
    let res: Vec<f64> = seq.terms.iter().map(|a| a.re).collect();
    let mut ratios = Vec::new();
    for (i, &x) in res.iter().enumerate() {
        if i + 1 < res.len() && res[i + 1] == x {
            continue;
        }
        ratios.push((x, (i + 1) as f64 / (x * (x + 1.0).ln())));
    }
    let c = ratios.iter().map(|r| r.1).fold(0.0, f64::max);
    let upper = &ratios[ratios.len() / 2..];
    let trend = if upper.len() >= 2 {
        slope(
            &upper.iter().map(|r| r.0.ln()).collect::<Vec<_>>(),
            &upper.iter().map(|r| r.1.ln()).collect::<Vec<_>>(),
        )
    } else {
        0.0
    };
    Ok(CountingFit { c, trend, bounded: trend.abs() <= 0.25, ratios })
}

/// Least-squares slope of `y` against `x`.
pub fn slope(x: &[f64], y: &[f64]) -> f64 {
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let sxy: f64 = x.iter().zip(y).map(|(a, b)| (a - mx) * (b - my)).sum();
    let sxx: f64 = x.iter().map(|a| (a - mx) * (a - mx)).sum();
    sxy / sxx
}
