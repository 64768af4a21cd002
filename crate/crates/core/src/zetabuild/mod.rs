//! Zeta-like functions built from self-dual measures: `g_N`, `ζ + δ g_N` and the
//! thirteen-term function `ζ_M`, with their completed forms, residues, the
//! zero-free abscissa `σ₀` and an admissible `δ₀`.

mod combination;
mod surd;

use std::collections::BTreeMap;
use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use combination::{
    canonicalize, combination_from_measure, DirichletSeries, HurwitzCombination, HurwitzTerm, SNAP_TOL,
};
pub use surd::Surd;

use crate::crystal::CrystallineMeasure;
use crate::error::{Error, Result};
use crate::numerics::{hurwitz_em, hurwitz_zeta_real_dd, log_gamma, DoubleDouble, Precision, Rational};
use crate::zerofind::AnalyticFunction;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Variant {
    Riemann,
    Combination,
    ZetaN { delta: f64 },
}

/// A Dirichlet series with finitely many Hurwitz pieces, evaluable on all of `C \ {1}`.
#[derive(Clone, Debug)]
pub struct ZetaLikeFunction {
    pub label: String,
    pub variant: Variant,
    combination: HurwitzCombination,
    exact_weights: Option<Vec<Surd>>,
    measure: Option<CrystallineMeasure>,
}

impl ZetaLikeFunction {
    pub fn riemann() -> Self {
        let term = HurwitzTerm::new(1.0, Rational::one(), Rational::one()).expect("valid term");
        ZetaLikeFunction {
            label: "zeta".into(),
            variant: Variant::Riemann,
            combination: HurwitzCombination::new(vec![term]).expect("nonempty"),
            exact_weights: Some(vec![Surd::int(1, 0)]),
            measure: None,
        }
    }

    pub fn from_combination(label: impl Into<String>, combination: HurwitzCombination) -> Self {
        ZetaLikeFunction {
            label: label.into(),
            variant: Variant::Combination,
            combination,
            exact_weights: None,
            measure: None,
        }
    }

    /// `g_N(s) = Σ_{n≥1} c_n (n/N)^{−s}`.
    pub fn g_n(measure: &CrystallineMeasure) -> Result<Self> {
        let combination = combination_from_measure(measure)?;
        Ok(ZetaLikeFunction {
            label: format!("g_{}", measure.n),
            variant: Variant::Combination,
            combination,
            exact_weights: None,
            measure: Some(measure.clone()),
        })
    }

    /// `ζ(s) + δ g_N(s)`.
    pub fn zeta_n(measure: &CrystallineMeasure, delta: f64) -> Result<Self> {
        let g = combination_from_measure(measure)?;
        let mut terms = vec![HurwitzTerm::new(1.0, Rational::one(), Rational::one())?];
        terms.extend(g.terms().iter().map(|t| HurwitzTerm { weight: delta * t.weight, ..t.clone() }));
        Ok(ZetaLikeFunction {
            label: format!("zeta_{}", measure.n),
            variant: Variant::ZetaN { delta },
            combination: HurwitzCombination::new(terms)?,
            exact_weights: None,
            measure: Some(measure.clone()),
        })
    }

    pub fn combination(&self) -> &HurwitzCombination {
        &self.combination
    }

    pub fn measure(&self) -> Option<&CrystallineMeasure> {
        self.measure.as_ref()
    }

    pub fn eval(&self, s: Complex64) -> Result<Complex64> {
        self.combination.eval(s)
    }

    pub fn eval_with_derivative(&self, s: Complex64) -> Result<(Complex64, Complex64)> {
        self.combination.eval_with_derivative(s)
    }

    pub fn dirichlet_head(&self, limit: &Rational) -> DirichletSeries {
        self.combination.dirichlet_head(limit)
    }

    /// `ξ(s) = (s(s−1)/2) Γ(s/2) π^{−s/2} F(s)`, written as `(s−1) Γ(s/2+1) π^{−s/2} F(s)`.
    pub fn xi_eval(&self, s: Complex64) -> Result<Complex64> {
        let one = Complex64::new(1.0, 0.0);
        if s == one {
            // Γ(3/2) π^{−1/2} = 1/2
            return Ok(Complex64::new(0.5 * self.combination.residue(), 0.0));
        }
        if s.im == 0.0 && s.re <= -2.0 && s.re % 2.0 == 0.0 {
            // Γ(s/2+1) has a pole cancelled by a zero of F; use the symmetric point.
            return self.xi_eval(one - s);
        }
        let lg = log_gamma(s * 0.5 + 1.0)?;
        Ok((s - 1.0) * (lg - s * (0.5 * PI.ln())).exp() * self.eval(s)?)
    }

    /// `Ξ(t) = ξ(1/2 + it)`.
    #[allow(non_snake_case)]
    pub fn Xi_eval(&self, t: Complex64) -> Result<Complex64> {
        self.xi_eval(Complex64::new(0.5, 0.0) + Complex64::i() * t)
    }

    /// `π^{−s/2} Γ(s/2) F(s)`.
    pub fn completed(&self, s: Complex64) -> Result<Complex64> {
        let lg = log_gamma(s * 0.5)?;
        Ok((lg - s * (0.5 * PI.ln())).exp() * self.eval(s)?)
    }

    /// Weights of the combination in paired-double precision when they are known exactly.
    fn weights_dd(&self) -> Vec<DoubleDouble> {
        match &self.exact_weights {
            Some(w) => w.iter().map(Surd::to_double_double).collect(),
            None => self.combination.terms().iter().map(|t| DoubleDouble::from(t.weight)).collect(),
        }
    }

    /// Majorant `Σ_j |w_j| b_j^{−σ} ζ(σ, a_j')` of all non-constant Dirichlet terms, where
    /// `a_j' = a_j + 1` for the terms that start at frequency `1` and `a_j' = a_j` otherwise.
    pub fn majorant(&self, sigma: f64) -> f64 {
        self.combination
            .terms()
            .iter()
            .map(|t| {
                let a = if t.first_frequency() == Rational::one() { t.shift.to_f64() + 1.0 } else { t.shift.to_f64() };
                t.weight.abs() * (-sigma * t.base.to_f64().ln()).exp() * hurwitz_em(Complex64::new(sigma, 0.0), a).value.re
            })
            .sum()
    }

    fn majorant_dd(&self, sigma: DoubleDouble, weights: &[DoubleDouble]) -> Result<DoubleDouble> {
        let mut acc = DoubleDouble::ZERO;
        for (t, w) in self.combination.terms().iter().zip(weights) {
            let a = if t.first_frequency() == Rational::one() { &t.shift + &Rational::one() } else { t.shift.clone() };
            let b = t.base.to_double_double();
            let z = hurwitz_zeta_real_dd(sigma, &a)?;
            acc = acc + w.abs() * (-(sigma * b.ln())).exp() * z;
        }
        Ok(acc)
    }

    /// Abscissa `σ₀` beyond which the constant Dirichlet term dominates: the root of
    /// `majorant(σ) = 1`, found by bisection to `tol`.
    pub fn sigma0(&self, tol: f64, precision: Precision) -> Result<DoubleDouble> {
        let constant: f64 = self.combination.constant_terms().map(|t| t.weight).sum();
        if (constant - 1.0).abs() > 1e-12 {
            return Err(Error::Domain(format!("constant Dirichlet term is {constant}, not 1")));
        }
        let stop = if precision == Precision::Double { tol.max(1e-15) } else { 1e-9 };
        let (a, b) = bracket_unit_majorant(|s| self.majorant(s), stop)?;
        if precision == Precision::Double {
            return Ok(DoubleDouble::from(0.5 * (a + b)));
        }
        let weights = self.weights_dd();
        let (mut a, mut b) = (DoubleDouble::from(a - 1e-9), DoubleDouble::from(b + 1e-9));
        let tol = DoubleDouble::from(tol.max(1e-28));
        while b - a > tol {
            let m = (a + b).mul_f64(0.5);
            if self.majorant_dd(m, &weights)? > DoubleDouble::ONE {
                a = m;
            } else {
                b = m;
            }
        }
        Ok((a + b).mul_f64(0.5))
    }

    /// Residue at `s = 1`, checked against `lim_{h→0} h·F(1+h)` extrapolated from
    /// `h = 10^{-2}, …, 10^{-5}`.
    pub fn residue_at_1(&self) -> Result<f64> {
        let descriptor = self.combination.residue();
        let hs: Vec<f64> = (2..=5).map(|k| 10f64.powi(-k)).collect();
        let gs = hs
            .iter()
            .map(|&h| Ok(h * self.eval(Complex64::new(1.0 + h, 0.0))?.re))
            .collect::<Result<Vec<f64>>>()?;
        let numeric = neville_at_zero(&hs, &gs);
        if (numeric - descriptor).abs() > 1e-8 {
            return Err(Error::Inconsistent(format!(
                "residue {descriptor} from the terms, {numeric} from the limit"
            )));
        }
        Ok(descriptor)
    }
}

const MAJORANT_BRACKET: (f64, f64) = (1.0 + 1e-3, 1000.0);

/// Bisection bracket `[a, b]`, `b − a ≤ stop`, around the root of a decreasing
/// `majorant(σ) = 1` on `MAJORANT_BRACKET`.
pub(crate) fn bracket_unit_majorant(majorant: impl Fn(f64) -> f64, stop: f64) -> Result<(f64, f64)> {
    let (lo, hi) = MAJORANT_BRACKET;
    if majorant(lo) <= 1.0 {
        return Err(Error::NoRoot(format!("majorant ≤ 1 already at σ = {lo}")));
    }
    if majorant(hi) > 1.0 {
        return Err(Error::NoRoot(format!("majorant > 1 still at σ = {hi}")));
    }
    let (mut a, mut b) = (lo, hi);
    while b - a > stop {
        let m = 0.5 * (a + b);
        if majorant(m) > 1.0 {
            a = m;
        } else {
            b = m;
        }
    }
    Ok((a, b))
}

/// Polynomial extrapolation of `(x_i, y_i)` to `x = 0`.
fn neville_at_zero(xs: &[f64], ys: &[f64]) -> f64 {
    let mut p = ys.to_vec();
    let n = xs.len();
    for level in 1..n {
        for i in 0..n - level {
            let (xi, xj) = (xs[i], xs[i + level]);
            p[i] = (xj * p[i] - xi * p[i + 1]) / (xj - xi);
        }
    }
    p[0]
}

impl AnalyticFunction for ZetaLikeFunction {
    fn eval(&self, s: Complex64) -> Result<Complex64> {
        ZetaLikeFunction::eval(self, s)
    }

    fn eval_with_derivative(&self, s: Complex64) -> Result<(Complex64, Complex64)> {
        ZetaLikeFunction::eval_with_derivative(self, s)
    }

    fn poles(&self) -> Vec<Complex64> {
        if self.combination.residue().abs() > 1e-14 {
            vec![Complex64::new(1.0, 0.0)]
        } else {
            Vec::new()
        }
    }
}

/// Offsets `o ∈ (0, period]` and weights of a periodic comb `Σ_o w_o Σ_n δ_{o + n·period}`.
type Comb = BTreeMap<Rational, Surd>;

/// `P(x) = (1−a)cos 2πx + 2cos(5πx/2) − (1+a)cos 3πx + 2cos(7πx/2) + (1−a)cos 4πx`, `a = √3`,
/// as (frequency f, coefficient) for `cos(2πfx)`.
fn trig_polynomial() -> Vec<(Rational, Surd)> {
    let one_minus_a = Surd::int(1, -1);
    vec![
        (Rational::from_integer(1), one_minus_a.clone()),
        (Rational::new(5, 4), Surd::int(2, 0)),
        (Rational::new(3, 2), Surd::int(-1, -1)),
        (Rational::new(7, 4), Surd::int(2, 0)),
        (Rational::from_integer(2), one_minus_a),
    ]
}

/// `μ = Pσ` with `σ = (1/3) Σ δ_{n/3}`: weight `P(r/3)/3` on `4k + r/3`.
fn mu_comb() -> Comb {
    let mut comb = Comb::new();
    for r in 0..12i64 {
        let mut value = Surd::default();
        for (f, c) in trig_polynomial() {
            // cos(2π f r/3) = cos(kπ/6) with k = 4 f r, an integer for these f.
            let k = Rational::from_integer(4 * r) * f;
            let k: i64 = k.to_f64() as i64;
            value = value + c * Surd::cos_pi_sixths(k);
        }
        let value = value * Surd::rational(Rational::new(1, 3));
        if !value.is_zero() {
            let offset = if r == 0 { Rational::from_integer(4) } else { Rational::new(r, 3) };
            comb.insert(offset, value);
        }
    }
    comb
}

/// `ν = μ̂ = P̂ * Σ δ_{3n}`: each `cos(2πfx)` contributes `½(δ_f + δ_{−f})`.
fn nu_comb() -> Comb {
    let period = Rational::from_integer(3);
    let mut comb = Comb::new();
    for (f, c) in trig_polynomial() {
        for sign in [1i64, -1] {
            let x = Rational::from_integer(sign) * &f;
            // Reduce into (0, 3].
            let q = (&x / &period).frac_in_unit_interval() * &period;
            let half = c.clone() * Surd::rational(Rational::new(1, 2));
            let e = comb.entry(q).or_default();
            *e = e.clone() + half;
        }
    }
    comb.retain(|_, w| !w.is_zero());
    comb
}

/// Weights of `ζ_M` keyed by `(base, shift)`, generated from `μ + ν` and normalized so
/// that the atom at `1` has mass `1`.
pub fn zeta_m_weights() -> Vec<(Rational, Rational, Surd)> {
    let mu = mu_comb();
    let nu = nu_comb();
    let one = Rational::one();
    let at_one = mu.get(&one).cloned().unwrap_or_default() + nu.get(&one).cloned().unwrap_or_default();
    let norm = Surd::int(1, 0) / at_one;
    let mut terms: BTreeMap<(Rational, Rational), Surd> = BTreeMap::new();
    for (period, comb) in [(Rational::from_integer(4), &mu), (Rational::from_integer(3), &nu)] {
        for (offset, w) in comb.iter() {
            let key = (period.clone(), offset / &period);
            let e = terms.entry(key).or_default();
            *e = e.clone() + w.clone() * norm.clone();
        }
    }
    terms
        .into_iter()
        .filter(|(_, w)| !w.is_zero())
        .map(|((b, a), w)| (b, a, w))
        .collect()
}

/// Weights of the thirteen-term display, used as a consistency check.
pub fn zeta_m_reference_weights() -> Vec<(Rational, Rational, Surd)> {
    let r = Rational::new;
    let four = Rational::from_integer(4);
    let three = Rational::from_integer(3);
    let s = |p: (i64, i64), q: (i64, i64)| Surd::new(r(p.0, p.1), r(q.0, q.1));
    let w14 = s((-1, 2), (-1, 2));
    let w13 = s((2, 1), (4, 3));
    let w512 = s((-4, 1), (-2, 1));
    let w12 = s((9, 2), (5, 2));
    let w1 = s((1, 2), (-1, 6));
    let v13 = s((3, 2), (1, 2));
    let v512 = s((-3, 1), (-2, 1));
    vec![
        (four.clone(), r(1, 4), w14.clone()),
        (four.clone(), r(3, 4), w14),
        (four.clone(), r(1, 3), w13.clone()),
        (four.clone(), r(2, 3), w13),
        (four.clone(), r(5, 12), w512.clone()),
        (four.clone(), r(7, 12), w512),
        (four.clone(), r(1, 2), w12.clone()),
        (four, Rational::one(), w1),
        (three.clone(), r(1, 3), v13.clone()),
        (three.clone(), r(2, 3), v13),
        (three.clone(), r(5, 12), v512.clone()),
        (three.clone(), r(7, 12), v512),
        (three, r(1, 2), w12),
    ]
}

/// `ζ_M`, generated from the measure `μ + ν` and checked against the reference display.
pub fn build_zeta_m() -> Result<ZetaLikeFunction> {
    let generated = zeta_m_weights();
    let reference = zeta_m_reference_weights();
    for (b, a, w) in &reference {
        let found = generated.iter().find(|(gb, ga, _)| gb == b && ga == a);
        match found {
            Some((_, _, g)) if (g.to_f64() - w.to_f64()).abs() <= 1e-12 => {}
            Some((_, _, g)) => {
                return Err(Error::Inconsistent(format!("weight on base {b}, shift {a}: generated {g}, expected {w}")))
            }
            None => return Err(Error::Inconsistent(format!("missing term on base {b}, shift {a}"))),
        }
    }
    if generated.len() != reference.len() {
        return Err(Error::Inconsistent(format!("{} generated terms, expected {}", generated.len(), reference.len())));
    }
    let terms = generated
        .iter()
        .map(|(b, a, w)| HurwitzTerm::new(w.to_f64(), b.clone(), a.clone()))
        .collect::<Result<Vec<_>>>()?;
    Ok(ZetaLikeFunction {
        label: "zeta_M".into(),
        variant: Variant::Combination,
        combination: HurwitzCombination::new(terms)?,
        exact_weights: Some(generated.into_iter().map(|(_, _, w)| w).collect()),
        measure: None,
    })
}

/// The head `1 − (3+2a)(5/4)^{−s} + (2+4/a)(4/3)^{−s} + …` of `ζ_M` up to `λ = 2`.
pub fn zeta_m_reference_head() -> Vec<(Rational, Surd)> {
    let r = Rational::new;
    vec![
        (Rational::one(), Surd::int(1, 0)),
        (r(5, 4), Surd::int(-3, -2)),
        (r(4, 3), Surd::new(Rational::from_integer(2), r(4, 3))),
        (r(3, 2), Surd::new(r(9, 2), r(5, 2))),
        (r(5, 3), Surd::int(-4, -2)),
        (r(7, 4), Surd::int(-3, -2)),
        (Rational::from_integer(2), Surd::int(6, 3)),
    ]
}

/// Both criteria for an admissible perturbation size and the resulting `δ₀`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Delta0Report {
    pub delta0: f64,
    /// `(2 − ζ(2)) / Σ_{n>NT} |c_n| (n/N)^{−2}`.
    pub criterion_half_plane: f64,
    /// `m̂ / (2M̂)` from the grid.
    pub criterion_rectangle: f64,
    pub min_zeta: f64,
    pub max_g: f64,
    pub safety_factor: f64,
    pub grid: usize,
}

/// Grid estimate of `δ₀` on `[1/2, 2] × [−3/2, 3/2]` (non-rigorous; safety factor 1/2).
pub fn delta0_bound(m: &CrystallineMeasure) -> Result<Delta0Report> {
    let g = ZetaLikeFunction::g_n(m)?;
    let zeta = ZetaLikeFunction::riemann();
    let n2 = (m.n * m.n) as f64;
    let mut tail = 0.0;
    for r in 1..=m.modulus() {
        let c = m.coefficient(r as i64);
        if c != 0.0 {
            tail += c.abs() * hurwitz_em(Complex64::new(2.0, 0.0), r as f64 / n2).value.re / n2;
        }
    }
    let zeta2 = PI * PI / 6.0;
    let crit_i = if tail > 0.0 { (2.0 - zeta2) / tail } else { f64::INFINITY };
    const GRID: usize = 101;
    let points: Vec<Complex64> = (0..GRID)
        .flat_map(|i| {
            (0..GRID).map(move |j| {
                Complex64::new(0.5 + 1.5 * i as f64 / (GRID - 1) as f64, -1.5 + 3.0 * j as f64 / (GRID - 1) as f64)
            })
        })
        .collect();
    let values = points
        .par_iter()
        .map(|&s| {
            if s == Complex64::new(1.0, 0.0) {
                return Ok((1.0, g.combination.residue().abs()));
            }
            let sm1 = s - 1.0;
            Ok(((sm1 * zeta.eval(s)?).norm(), (sm1 * g.eval(s)?).norm()))
        })
        .collect::<Result<Vec<(f64, f64)>>>()?;
    let min_zeta = values.iter().map(|v| v.0).fold(f64::INFINITY, f64::min);
    let max_g = values.iter().map(|v| v.1).fold(0.0, f64::max);
    let crit_ii = if max_g > 0.0 { min_zeta / (2.0 * max_g) } else { f64::INFINITY };
    let safety = 0.5;
    Ok(Delta0Report {
        delta0: safety * crit_i.min(crit_ii),
        criterion_half_plane: crit_i,
        criterion_rectangle: crit_ii,
        min_zeta,
        max_g,
        safety_factor: safety,
        grid: GRID,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crystal::{construct_selfdual, measure_from_function};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn zeta_m_generation_matches_reference() {
        let z = build_zeta_m().unwrap();
        assert_eq!(z.combination().terms().len(), 13);
        let gen = zeta_m_weights();
        assert_eq!(gen, {
            let mut r = zeta_m_reference_weights();
            r.sort_by(|x, y| (&x.0, &x.1).cmp(&(&y.0, &y.1)));
            r
        });
    }

    #[test]
    fn measure_coefficients() {
        let mu = mu_comb();
        let a = Surd::sqrt3();
        assert_eq!(mu[&Rational::from_integer(2)], Surd::int(-1, -1)); // c_6
        assert_eq!(mu[&Rational::new(4, 3)], Surd::rational(Rational::new(-4, 3))); // c_4
        assert_eq!(mu[&Rational::from_integer(4)], (Surd::int(5, 0) - Surd::int(3, 0) * a) / Surd::int(3, 0)); // c_0
        assert!(!mu.contains_key(&Rational::new(1, 3)));
        let nu = nu_comb();
        assert_eq!(nu.len(), 5);
        assert_eq!(nu[&Rational::new(3, 2)], Surd::int(-1, -1));
        assert_eq!(nu[&Rational::new(5, 4)], Surd::int(2, 0));
    }

    #[test]
    fn head_and_residue() {
        let z = build_zeta_m().unwrap();
        let head = z.dirichlet_head(&Rational::from_integer(2));
        let reference = zeta_m_reference_head();
        assert_eq!(head.entries.len(), reference.len());
        for ((l, c), (rl, rc)) in head.entries.iter().zip(&reference) {
            assert_eq!(l, rl);
            assert!((c - rc.to_f64()).abs() < 1e-12, "λ = {l}");
        }
        let expect = (3.0 - 3f64.sqrt()) / 6.0;
        assert!((z.residue_at_1().unwrap() - expect).abs() < 1e-10);
        assert!((ZetaLikeFunction::riemann().residue_at_1().unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn agrees_with_dirichlet_series_far_right() {
        let z = build_zeta_m().unwrap();
        let head = z.dirichlet_head(&Rational::from_integer(40));
        let bound: f64 = head.entries.iter().map(|(_, c)| c.abs()).sum::<f64>() * 40f64.powi(-20);
        let s = c(20.0, 0.0);
        assert!((z.eval(s).unwrap() - head.eval(s)).norm() <= 1e-12 + bound);
        for &(re, im) in &[(15.0, 3.0), (18.0, -40.0)] {
            let s = c(re, im);
            assert!((z.eval(s).unwrap() - head.eval(s)).norm() < 1e-11);
        }
    }

    #[test]
    fn sigma0_double() {
        let z = build_zeta_m().unwrap();
        assert!(z.majorant(11.0) < 1.0 && z.majorant(10.0) > 1.0);
        let s = z.sigma0(1e-12, Precision::Double).unwrap().to_f64();
        assert!((s - 10.564_029_176_912_431).abs() < 1e-9, "{s}");
    }

    #[test]
    fn sigma0_without_other_terms_has_no_root() {
        let constant = DirichletSeries { entries: vec![(Rational::one(), 1.0)] };
        assert_eq!(constant.majorant(2.0), 0.0);
        assert!(matches!(constant.sigma0(1e-10), Err(Error::NoRoot(_))));
        // ζ(σ) = 2 near σ = 1.7286
        let z = ZetaLikeFunction::riemann().sigma0(1e-12, Precision::Double).unwrap().to_f64();
        assert!((z - 1.728_647_238_998_183).abs() < 1e-9, "{z}");
    }

    #[test]
    fn sigma0_extended() {
        let z = build_zeta_m().unwrap();
        let s = z.sigma0(1e-25, Precision::Extended).unwrap();
        assert!(s.to_decimal(20).starts_with("10.56402917691243117"), "{}", s.to_decimal(20));
    }

    #[test]
    fn g_n_is_entire_and_conjugate_symmetric() {
        let f = construct_selfdual(5, 1).unwrap();
        let m = measure_from_function(&f, 5).unwrap();
        let g = ZetaLikeFunction::g_n(&m).unwrap();
        assert!(g.combination().residue().abs() < 1e-12);
        assert!(g.combination().terms().iter().all(|t| t.shift > Rational::new(5, 25)));
        let head = g.dirichlet_head(&Rational::from_integer(3));
        assert_eq!(head.entries[0].0, Rational::new(6, 5));
        let s = c(-3.0, 7.0);
        assert!((g.eval(s.conj()).unwrap() - g.eval(s).unwrap().conj()).norm() < 1e-12);
    }

    #[test]
    fn xi_is_real_on_critical_line_and_at_half() {
        let z = ZetaLikeFunction::riemann();
        let x = z.Xi_eval(c(0.0, 0.0)).unwrap();
        assert!((x.re - 0.497_120_778_188_314_1).abs() < 1e-12);
        let zm = build_zeta_m().unwrap();
        for &t in &[3.0, 17.5, 44.0] {
            let v = zm.Xi_eval(c(t, 0.0)).unwrap();
            assert!(v.im.abs() <= 1e-10 * v.norm(), "{t}: {v}");
        }
        assert!(z.xi_eval(c(-4.0, 0.0)).unwrap().re > 0.0);
    }

    #[test]
    fn delta0_is_positive() {
        let f = construct_selfdual(5, 1).unwrap();
        let m = measure_from_function(&f, 5).unwrap();
        let rep = delta0_bound(&m).unwrap();
        assert!(rep.delta0 > 0.0 && rep.delta0.is_finite());
        assert!(rep.delta0 <= 0.5 * rep.criterion_half_plane && rep.delta0 <= 0.5 * rep.criterion_rectangle);
    }
}
