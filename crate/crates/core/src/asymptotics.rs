//! Coefficients `a_n` of the asymptotic expansion of `Σ 2z/(z² + α²)` and the
//! three evaluators built from them: the logarithmic form, its derivative and the
//! small-`x` theta form.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::numerics::{bernoulli_number, euler_number, log_gamma, Rational};

/// Euler's constant `C₀`.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Exact `a_n`, `n ≥ 1`.
///
/// `a_{2n+1} = (8 − E_{2n}) / 2^{2n+2}` (this gives `a_1 = 7/4`) and
/// `a_{2n} = (1 − 2^{1−2n}) B_{2n} / (4n)`.
pub fn coeff_a(n: usize) -> Rational {
    assert!(n >= 1, "coefficients start at a_1");
    if n % 2 == 1 {
        let m = (n - 1) / 2;
        (Rational::from_integer(8) - euler_number(2 * m)) * Rational::new(1, 2).pow(2 * m as i32 + 2)
    } else {
        let m = n / 2;
        let factor = Rational::one() - Rational::new(1, 2).pow(2 * m as i32 - 1);
        factor * bernoulli_number(2 * m) / Rational::from_integer(4 * m as i64)
    }
}

/// `B_n(5/4)` from the closed forms in terms of `E_{2k}` and `B_{2k}`.
pub fn bernoulli_at_5_4(n: usize) -> Rational {
    let half = n / 2;
    if n % 2 == 1 {
        let num = Rational::from_integer(n as i64) * (Rational::from_integer(4) - euler_number(2 * half));
        num * Rational::new(1, 2).pow(4 * half as i32 + 2)
    } else {
        let two_pow = Rational::from_integer(2).pow(2 * half as i32);
        let num = Rational::from_integer(8 * half as i64)
            - (two_pow - Rational::from_integer(2)) * bernoulli_number(2 * half);
        num * Rational::new(1, 2).pow(4 * half as i32)
    }
}

/// Coefficients `a_1..=a_n` together with the constants of the logarithmic form.
#[derive(Clone, Debug, PartialEq)]
pub struct ExpansionCoefficients {
    pub a: Vec<Rational>,
    /// `A = (1/4) log(π/2) − log Ξ(0)` for the Riemann zeros.
    pub constant_a: f64,
    /// Estimated constant for a generic sequence, when one has been computed.
    pub constant_b: Option<f64>,
}

impl ExpansionCoefficients {
    pub fn new(n_max: usize) -> Result<Self> {
        Ok(ExpansionCoefficients {
            a: (1..=n_max).map(coeff_a).collect(),
            constant_a: constant_a()?,
            constant_b: None,
        })
    }

    /// `a_n`, 1-based.
    pub fn get(&self, n: usize) -> &Rational {
        &self.a[n - 1]
    }

    /// Coefficients of `z^{-n}`, `n = 1..=N`, in the logarithmic form: `−a_{n+1}/n`.
    pub fn log_tail(&self, n_terms: usize) -> Vec<Rational> {
        log_tail_coefficients(n_terms)
    }
}

/// `−a_{n+1}/n` for `n = 1..=N`.
pub fn log_tail_coefficients(n_terms: usize) -> Vec<Rational> {
    (1..=n_terms)
        .map(|n| -(coeff_a(n + 1) / Rational::from_integer(n as i64)))
        .collect()
}

/// Term-by-term derivative of `Σ c_n z^{-n}` as coefficients of `z^{-n-1}`: `−n·c_n`.
pub fn differentiate_tail(tail: &[Rational]) -> Vec<Rational> {
    tail.iter()
        .enumerate()
        .map(|(i, c)| -(c * &Rational::from_integer(i as i64 + 1)))
        .collect()
}

/// `Ξ(0) = ξ(1/2) = −(1/8) π^{-1/4} Γ(1/4) ζ(1/2)`.
pub fn xi_half() -> Result<f64> {
    let g = log_gamma(Complex64::new(0.25, 0.0))?.re.exp();
    let z = crate::numerics::hurwitz_zeta(Complex64::new(0.5, 0.0), 1.0)?.re;
    Ok(-0.125 * PI.powf(-0.25) * g * z)
}

/// `A = (1/4) log(π/2) − log Ξ(0)`.
pub fn constant_a() -> Result<f64> {
    Ok(0.25 * (PI / 2.0).ln() - xi_half()?.ln())
}

fn check_right_half(z: Complex64) -> Result<()> {
    if z.re > 0.0 {
        Ok(())
    } else {
        Err(Error::Domain(format!("expansion needs Re z > 0, got {z}")))
    }
}

/// `(z/2) log(z/2π) − z/2 + (7/4) log z + constant − Σ_{n=1}^{N} a_{n+1}/(n zⁿ)`.
pub fn expansion_log(z: Complex64, n_terms: usize, constant: f64) -> Result<Complex64> {
    check_right_half(z)?;
    let mut acc = z * 0.5 * (z / (2.0 * PI)).ln() - z * 0.5 + z.ln() * 1.75 + constant;
    let zinv = z.inv();
    let mut zp = zinv;
    for c in log_tail_coefficients(n_terms) {
        acc += zp * c.to_f64();
        zp *= zinv;
    }
    Ok(acc)
}

/// `(1/2) log(z/2π) + Σ_{n=1}^{N} a_n / zⁿ`.
pub fn expansion_main(z: Complex64, n_terms: usize) -> Result<Complex64> {
    check_right_half(z)?;
    let mut acc = (z / (2.0 * PI)).ln() * 0.5;
    let zinv = z.inv();
    let mut zp = zinv;
    for n in 1..=n_terms {
        acc += zp * coeff_a(n).to_f64();
        zp *= zinv;
    }
    Ok(acc)
}

/// Small-`x` form of `2 Σ e^{−α² x}`:
/// `(1/(4√(πx))) log(e^{−C₀}/(16π²x)) + Σ_{n=0}^{N} a_{n+1}/Γ(1+n/2) · x^{n/2}`.
pub fn expansion_smallx(x: f64, n_terms: usize) -> Result<f64> {
    if x <= 0.0 || x.is_nan() {
        return Err(Error::Domain(format!("small-x expansion needs x > 0, got {x}")));
    }
    let lead = ((-EULER_GAMMA).exp() / (16.0 * PI * PI * x)).ln() / (4.0 * (PI * x).sqrt());
    let mut acc = lead;
    for n in 0..=n_terms {
        let g = log_gamma(Complex64::new(1.0 + n as f64 / 2.0, 0.0))?.re.exp();
        acc += coeff_a(n + 1).to_f64() / g * x.powf(n as f64 / 2.0);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::bernoulli_polynomial;

    #[test]
    fn first_coefficients() {
        let expect = [
            Rational::new(7, 4),
            Rational::new(1, 48),
            Rational::new(9, 16),
            Rational::new(-7, 1920),
            Rational::new(3, 64),
        ];
        for (n, e) in expect.iter().enumerate() {
            assert_eq!(&coeff_a(n + 1), e);
        }
    }

    #[test]
    fn log_tail_first_six() {
        let expect = [
            Rational::new(-1, 48),
            Rational::new(-9, 32),
            Rational::new(7, 5760),
            Rational::new(-3, 256),
            Rational::new(-31, 80640),
            Rational::new(-23, 512),
        ];
        assert_eq!(log_tail_coefficients(6), expect.to_vec());
    }

    #[test]
    fn tail_matches_bernoulli_form() {
        for n in 1..=6usize {
            let lhs = -(coeff_a(n + 1) / Rational::from_integer(n as i64));
            let two_n = Rational::from_integer(2).pow(n as i32);
            let sign = if n % 2 == 1 { Rational::one() } else { -Rational::one() };
            let rhs = -(Rational::one() / (Rational::from_integer(n as i64) * &two_n))
                + sign * two_n * bernoulli_polynomial(n + 1, &Rational::new(5, 4))
                    / Rational::from_integer((n * (n + 1)) as i64);
            assert_eq!(lhs, rhs, "n = {n}");
        }
    }

    #[test]
    fn closed_forms_at_five_quarters() {
        let x = Rational::new(5, 4);
        for n in 0..=20 {
            assert_eq!(bernoulli_at_5_4(n), bernoulli_polynomial(n, &x), "n = {n}");
        }
        assert_eq!(bernoulli_at_5_4(1), Rational::new(3, 4));
        assert_eq!(bernoulli_at_5_4(2), Rational::new(23, 48));
    }

    #[test]
    fn derivative_of_log_form_is_main_form() {
        for n in 0..8 {
            let d = differentiate_tail(&log_tail_coefficients(n));
            let expect: Vec<Rational> = (2..=n + 1).map(coeff_a).collect();
            assert_eq!(d, expect);
        }
    }

    #[test]
    fn constant_a_value() {
        let xi = xi_half().unwrap();
        assert!((xi - 0.497_120_778_188_314_1).abs() < 1e-12, "{xi}");
        assert!((constant_a().unwrap() - (0.25 * (PI / 2.0).ln() - xi.ln())).abs() < 1e-15);
    }

    #[test]
    fn evaluator_edge_cases() {
        let z = Complex64::new(2.0 * PI, 0.0);
        assert!(expansion_main(z, 0).unwrap().norm() < 1e-15);
        assert!(expansion_main(Complex64::new(-1.0, 0.0), 3).is_err());
        assert!(expansion_log(Complex64::new(0.0, 1.0), 3, 0.0).is_err());
        let x0 = (-EULER_GAMMA).exp() / (16.0 * PI * PI);
        assert!((expansion_smallx(x0, 0).unwrap() - 1.75).abs() < 1e-12);
        let x = 0.01;
        let d = expansion_smallx(x, 1).unwrap() - expansion_smallx(x, 0).unwrap();
        assert!((d - (1.0 / 48.0) / (PI.sqrt() / 2.0) * x.sqrt()).abs() < 1e-15);
        assert!(expansion_smallx(0.0, 1).is_err());
    }
}
