//! Exact arithmetic in `Q(√3)`, enough to carry the coefficients of the concrete
//! self-dual measure without rounding.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::numerics::{DoubleDouble, Rational};

/// `p + q√3`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Surd {
    pub p: Rational,
    pub q: Rational,
}

impl Surd {
    pub fn new(p: Rational, q: Rational) -> Self {
        Surd { p, q }
    }

    pub fn rational(p: Rational) -> Self {
        Surd { p, q: Rational::zero() }
    }

    pub fn int(p: i64, q: i64) -> Self {
        Surd { p: Rational::from_integer(p), q: Rational::from_integer(q) }
    }

    pub fn sqrt3() -> Self {
        Surd::int(0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }

    pub fn conj(&self) -> Self {
        Surd { p: self.p.clone(), q: -&self.q }
    }

    /// `p² − 3q²`.
    pub fn norm(&self) -> Rational {
        &self.p * &self.p - Rational::from_integer(3) * &self.q * &self.q
    }

    pub fn to_f64(&self) -> f64 {
        self.to_double_double().to_f64()
    }

    pub fn to_double_double(&self) -> DoubleDouble {
        self.p.to_double_double() + self.q.to_double_double() * DoubleDouble::from(3.0).sqrt()
    }

    /// `cos(kπ/6)`.
    pub fn cos_pi_sixths(k: i64) -> Self {
        let half = Rational::new(1, 2);
        match k.rem_euclid(12) {
            0 => Surd::int(1, 0),
            1 | 11 => Surd::new(Rational::zero(), half),
            2 | 10 => Surd::rational(half),
            3 | 9 => Surd::int(0, 0),
            4 | 8 => Surd::rational(-half),
            5 | 7 => Surd::new(Rational::zero(), -half),
            _ => Surd::int(-1, 0),
        }
    }
}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}·√3", self.p, self.q)
    }
}

impl Add for Surd {
    type Output = Surd;
    fn add(self, o: Surd) -> Surd {
        Surd { p: self.p + o.p, q: self.q + o.q }
    }
}

impl Sub for Surd {
    type Output = Surd;
    fn sub(self, o: Surd) -> Surd {
        Surd { p: self.p - o.p, q: self.q - o.q }
    }
}

impl Neg for Surd {
    type Output = Surd;
    fn neg(self) -> Surd {
        Surd { p: -self.p, q: -self.q }
    }
}

impl Mul for Surd {
    type Output = Surd;
    fn mul(self, o: Surd) -> Surd {
        let three = Rational::from_integer(3);
        Surd {
            p: &self.p * &o.p + three * &self.q * &o.q,
            q: &self.p * &o.q + &self.q * &o.p,
        }
    }
}

impl Div for Surd {
    type Output = Surd;
    fn div(self, o: Surd) -> Surd {
        let n = o.norm();
        assert!(!n.is_zero(), "division by zero in Q(√3)");
        let num = self * o.conj();
        Surd { p: num.p / &n, q: num.q / &n }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let a = Surd::sqrt3();
        assert_eq!(a.clone() * a.clone(), Surd::int(3, 0));
        let x = Surd::int(2, 0) - Surd::new(Rational::zero(), Rational::new(4, 3));
        let inv = Surd::int(1, 0) / x.clone();
        assert_eq!(inv * x, Surd::int(1, 0));
        assert!((Surd::int(1, 1).to_f64() - (1.0 + 3f64.sqrt())).abs() < 1e-15);
    }

    #[test]
    fn cosine_table() {
        for k in 0..24 {
            let exact = Surd::cos_pi_sixths(k).to_f64();
            assert!((exact - (k as f64 * std::f64::consts::PI / 6.0).cos()).abs() < 1e-14, "{k}");
        }
    }
}
