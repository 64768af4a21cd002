//! Finite combinations `F(s) = Σ_j w_j b_j^{−s} ζ(s, a_j)` and their Dirichlet series.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::crystal::CrystallineMeasure;
use crate::error::{pole, Error, Result};
use crate::numerics::{digamma, hurwitz_em, log_gamma, Rational};

/// Relative size below which merged weights are treated as exact cancellations.
pub const SNAP_TOL: f64 = 1e-10;

#[derive(Clone, Debug, PartialEq)]
pub struct HurwitzTerm {
    pub weight: f64,
    pub base: Rational,
    pub shift: Rational,
}

impl HurwitzTerm {
    pub fn new(weight: f64, base: Rational, shift: Rational) -> Result<Self> {
        if !base.is_positive() {
            return Err(Error::Domain(format!("base {base} must be positive")));
        }
        if !shift.is_positive() || shift > Rational::one() {
            return Err(Error::Domain(format!("shift {shift} outside (0, 1]")));
        }
        Ok(HurwitzTerm { weight, base, shift })
    }

    /// First Dirichlet frequency `b·a`.
    pub fn first_frequency(&self) -> Rational {
        &self.base * &self.shift
    }
}

/// A finite Hurwitz combination together with its dual, used left of `Re s = 0`.
#[derive(Clone, Debug)]
pub struct HurwitzCombination {
    terms: Vec<HurwitzTerm>,
    residue: f64,
    dual_cos: Vec<HurwitzTerm>,
    dual_sin: Vec<HurwitzTerm>,
}

impl PartialEq for HurwitzCombination {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

/// Pieces of `F(1 − u) = 2Γ(u)(2π)^{−u} [cos(πu/2) C(u) + sin(πu/2) S(u)]`.
struct DualParts {
    c: Complex64,
    dc: Complex64,
    s: Complex64,
    ds: Complex64,
}

impl HurwitzCombination {
    pub fn new(terms: Vec<HurwitzTerm>) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::Domain("empty Hurwitz combination".into()));
        }
        let residue = terms.iter().map(|t| t.weight / t.base.to_f64()).sum();
        let (dual_cos, dual_sin) = dual_families(&terms);
        Ok(HurwitzCombination {
            terms,
            residue,
            dual_cos: canonicalize(&dual_cos),
            dual_sin: canonicalize(&dual_sin),
        })
    }

    pub fn terms(&self) -> &[HurwitzTerm] {
        &self.terms
    }

    /// Residue at `s = 1`: `Σ w_j / b_j`.
    pub fn residue(&self) -> f64 {
        self.residue
    }

    /// Dual combinations `(C, S)` on a common lattice.
    pub fn dual(&self) -> (&[HurwitzTerm], &[HurwitzTerm]) {
        (&self.dual_cos, &self.dual_sin)
    }

    pub fn eval(&self, s: Complex64) -> Result<Complex64> {
        Ok(self.eval_with_derivative(s)?.0)
    }

    /// `(F(s), F'(s))`.
    pub fn eval_with_derivative(&self, s: Complex64) -> Result<(Complex64, Complex64)> {
        if s == Complex64::new(1.0, 0.0) {
            return Err(pole(s));
        }
        if s.re >= 0.0 {
            Ok(direct(&self.terms, s))
        } else {
            self.via_dual(s)
        }
    }

    fn via_dual(&self, s: Complex64) -> Result<(Complex64, Complex64)> {
        let u = Complex64::new(1.0, 0.0) - s;
        let (c, dc) = direct(&self.dual_cos, u);
        let (sv, ds) = direct(&self.dual_sin, u);
        let parts = DualParts { c, dc, s: sv, ds };
        let i = Complex64::i();
        let log_g = log_gamma(u)? + 2f64.ln() - u * (2.0 * PI).ln();
        let x = u * (PI / 2.0);
        // cos x·C + sin x·S = ½[e^{ix}(C − iS) + e^{−ix}(C + iS)]
        let e_plus = (log_g + i * x).exp();
        let e_minus = (log_g - i * x).exp();
        let minus = parts.c - i * parts.s;
        let plus = parts.c + i * parts.s;
        let value = (e_plus * minus + e_minus * plus) * 0.5;
        let lg_prime = digamma(u)? - (2.0 * PI).ln();
        let dminus = parts.dc - i * parts.ds;
        let dplus = parts.dc + i * parts.ds;
        let du = (e_plus * ((lg_prime + i * (PI / 2.0)) * minus + dminus)
            + e_minus * ((lg_prime - i * (PI / 2.0)) * plus + dplus))
            * 0.5;
        Ok((value, -du))
    }

    /// All `(λ, coefficient)` with `λ ≤ limit`, accumulated over terms.
    pub fn dirichlet_head(&self, limit: &Rational) -> DirichletSeries {
        let mut acc: BTreeMap<Rational, f64> = BTreeMap::new();
        for t in &self.terms {
            let mut lambda = t.first_frequency();
            while &lambda <= limit {
                *acc.entry(lambda.clone()).or_insert(0.0) += t.weight;
                lambda = lambda + &t.base;
            }
        }
        let scale = acc.values().fold(0.0f64, |m, v| m.max(v.abs()));
        DirichletSeries {
            entries: acc.into_iter().filter(|(_, c)| c.abs() > 1e-12 * scale).collect(),
        }
    }

    /// Terms whose first frequency is `1`; they carry the constant Dirichlet term.
    pub fn constant_terms(&self) -> impl Iterator<Item = &HurwitzTerm> {
        self.terms.iter().filter(|t| t.first_frequency() == Rational::one())
    }
}

/// Terms `(c_r, N, r/N²)` for every residue `r = 1..=N²` with `c_r ≠ 0`, which is
/// `g_N(s) = Σ_{n≥1} c_n (n/N)^{−s}`.
pub fn combination_from_measure(m: &CrystallineMeasure) -> Result<HurwitzCombination> {
    let modulus = m.modulus();
    let base = Rational::from_integer(m.n as i64);
    let mut terms = Vec::new();
    for r in 1..=modulus {
        let c = m.coefficient(r as i64);
        if c != 0.0 {
            terms.push(HurwitzTerm::new(c, base.clone(), Rational::new(r as i64, modulus as i64))?);
        }
    }
    if terms.is_empty() {
        return Err(Error::Domain("measure has no atoms on positive frequencies".into()));
    }
    HurwitzCombination::new(terms)
}

fn direct(terms: &[HurwitzTerm], s: Complex64) -> (Complex64, Complex64) {
    let mut value = Complex64::new(0.0, 0.0);
    let mut derivative = Complex64::new(0.0, 0.0);
    for t in terms {
        let z = hurwitz_em(s, t.shift.to_f64());
        let lb = t.base.to_f64().ln();
        let bs = (-s * lb).exp() * t.weight;
        value += bs * z.value;
        derivative += bs * (z.derivative - z.value * lb);
    }
    (value, derivative)
}

/// `w b^{s−1} ζ(1−s, r/q)` expands into families on base `q/b` and shifts `k/q`
/// with weights `(w/b)·cos(2πkr/q)` and `(w/b)·sin(2πkr/q)`.
fn dual_families(terms: &[HurwitzTerm]) -> (Vec<HurwitzTerm>, Vec<HurwitzTerm>) {
    let mut cos_terms = Vec::new();
    let mut sin_terms = Vec::new();
    for t in terms {
        let r = t.shift.numer().to_i64().expect("shift numerator fits i64");
        let q = t.shift.denom().to_i64().expect("shift denominator fits i64");
        let scale = t.weight / t.base.to_f64();
        let base = Rational::from_integer(q) / &t.base;
        for k in 1..=q {
            let theta = 2.0 * PI * ((k * r) % q) as f64 / q as f64;
            let shift = Rational::new(k, q);
            cos_terms.push(HurwitzTerm { weight: scale * theta.cos(), base: base.clone(), shift: shift.clone() });
            sin_terms.push(HurwitzTerm { weight: scale * theta.sin(), base: base.clone(), shift });
        }
    }
    (cos_terms, sin_terms)
}

/// Rewrites families `λ = b(n + a)` on a common arithmetic lattice and merges equal
/// progressions. Family `j` has offset `O_j/L` and step `D_j/L`; with `P = lcm D_j`
/// each family splits into `P/D_j` progressions `(O_j + mD_j + nP)/L`, and the result
/// has terms `W_A (P/L)^{−s} ζ(s, A/P)`. Merged weights below `SNAP_TOL` times the
/// largest input weight are dropped.
pub fn canonicalize(families: &[HurwitzTerm]) -> Vec<HurwitzTerm> {
    if families.is_empty() {
        return Vec::new();
    }
    let mut l = BigInt::one();
    for f in families {
        l = l.lcm(f.base.denom());
        l = l.lcm(f.first_frequency().denom());
    }
    let lr = Rational::from_bigint(l.clone());
    let steps: Vec<BigInt> = families.iter().map(|f| (&f.base * &lr).numer().clone()).collect();
    let offsets: Vec<BigInt> = families.iter().map(|f| (f.first_frequency() * &lr).numer().clone()).collect();
    let mut p = BigInt::one();
    for d in &steps {
        p = p.lcm(d);
    }
    let mut merged: BTreeMap<BigInt, f64> = BTreeMap::new();
    for ((f, d), o) in families.iter().zip(&steps).zip(&offsets) {
        if f.weight == 0.0 {
            continue;
        }
        let reps = (&p / d).to_usize().expect("lattice period too large");
        let mut a = o.clone();
        for _ in 0..reps {
            *merged.entry(a.clone()).or_insert(0.0) += f.weight;
            a += d;
        }
    }
    // Cancellation noise scales with the inputs, not with what survives merging.
    let peak = families.iter().fold(0.0f64, |m, f| m.max(f.weight.abs()));
    let base = Rational::from_big(p.clone(), l);
    merged
        .into_iter()
        .filter(|(_, w)| w.abs() > SNAP_TOL * peak)
        .map(|(a, w)| HurwitzTerm { weight: w, base: base.clone(), shift: Rational::from_big(a, p.clone()) })
        .collect()
}

/// Ascending frequencies with their coefficients.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DirichletSeries {
    pub entries: Vec<(Rational, f64)>,
}

impl DirichletSeries {
    pub fn eval(&self, s: Complex64) -> Complex64 {
        self.entries
            .iter()
            .map(|(l, c)| (-s * l.to_f64().ln()).exp() * *c)
            .sum()
    }

    pub fn coefficient(&self, lambda: &Rational) -> Option<f64> {
        self.entries.iter().find(|(l, _)| l == lambda).map(|(_, c)| *c)
    }

    /// `Σ_{λ>1} |c_λ| λ^{−σ}`.
    pub fn majorant(&self, sigma: f64) -> f64 {
        let one = Rational::one();
        self.entries
            .iter()
            .filter(|(l, _)| *l != one)
            .map(|(l, c)| c.abs() * (-sigma * l.to_f64().ln()).exp())
            .sum()
    }

    /// Root of `majorant(σ) = 1` for a polynomial whose term at `λ = 1` is `1`.
    pub fn sigma0(&self, tol: f64) -> Result<f64> {
        if self.coefficient(&Rational::one()) != Some(1.0) {
            return Err(Error::Domain("constant Dirichlet term is not 1".into()));
        }
        let (a, b) = super::bracket_unit_majorant(|s| self.majorant(s), tol)?;
        Ok(0.5 * (a + b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn riemann() -> HurwitzCombination {
        HurwitzCombination::new(vec![HurwitzTerm::new(1.0, Rational::one(), Rational::one()).unwrap()]).unwrap()
    }

    #[test]
    fn riemann_dual_is_itself() {
        let z = riemann();
        let (c, s) = z.dual();
        assert_eq!(c.len(), 1);
        assert!(s.is_empty());
        assert_eq!(c[0].base, Rational::one());
        assert!((c[0].weight - 1.0).abs() < 1e-15);
    }

    #[test]
    fn riemann_values_left_of_the_axis() {
        let z = riemann();
        // ζ(−1) = −1/12, ζ(−2) = 0, ζ(−3) = 1/120
        assert!((z.eval(Complex64::new(-1.0, 0.0)).unwrap() - Complex64::new(-1.0 / 12.0, 0.0)).norm() < 1e-14);
        assert!(z.eval(Complex64::new(-2.0, 0.0)).unwrap().norm() < 1e-14);
        assert!((z.eval(Complex64::new(-3.0, 0.0)).unwrap().re - 1.0 / 120.0).abs() < 1e-14);
        assert!(z.eval(Complex64::new(1.0, 0.0)).is_err());
    }

    #[test]
    fn derivative_left_and_right() {
        let z = riemann();
        for &(re, im) in &[(-3.5, 12.0), (0.5, 20.0), (-0.25, -3.0)] {
            let s = Complex64::new(re, im);
            let (_, d) = z.eval_with_derivative(s).unwrap();
            let h = 1e-6;
            let fd = (z.eval(s + h).unwrap() - z.eval(s - h).unwrap()) / (2.0 * h);
            assert!((d - fd).norm() < 1e-6 * (1.0 + d.norm()), "{s}: {d} {fd}");
        }
    }

    #[test]
    fn canonical_lattice_merges_progressions() {
        // Odd and even integers together give ζ(s).
        let fam = vec![
            HurwitzTerm::new(1.0, Rational::from_integer(2), Rational::new(1, 2)).unwrap(),
            HurwitzTerm::new(1.0, Rational::from_integer(2), Rational::one()).unwrap(),
        ];
        let c = canonicalize(&fam);
        assert_eq!(c.len(), 2);
        let f1 = HurwitzCombination::new(fam).unwrap();
        let f2 = HurwitzCombination::new(c).unwrap();
        let s = Complex64::new(0.7, 9.0);
        assert!((f1.eval(s).unwrap() - f2.eval(s).unwrap()).norm() < 1e-13);
        assert!((f1.eval(s).unwrap() - riemann().eval(s).unwrap()).norm() < 1e-13);
    }
}
