//! Paired-double ("double-double") arithmetic: an unevaluated sum `hi + lo` with
//! `|lo| <= ulp(hi)/2`, giving roughly 106 bits of significand.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct DoubleDouble {
    pub hi: f64,
    pub lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let e = (a - (s - bb)) + (b - bb);
    (s, e)
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

impl DoubleDouble {
    pub const ZERO: DoubleDouble = DoubleDouble { hi: 0.0, lo: 0.0 };
    pub const ONE: DoubleDouble = DoubleDouble { hi: 1.0, lo: 0.0 };
    pub const LN2: DoubleDouble = DoubleDouble {
        hi: std::f64::consts::LN_2,
        lo: 2.319_046_813_846_299_6e-17,
    };

    pub fn new(hi: f64, lo: f64) -> Self {
        let (hi, lo) = two_sum(hi, lo);
        DoubleDouble { hi, lo }
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    pub fn abs(self) -> Self {
        if self.hi < 0.0 {
            -self
        } else {
            self
        }
    }

    pub fn is_finite(self) -> bool {
        self.hi.is_finite() && self.lo.is_finite()
    }

    pub fn recip(self) -> Self {
        DoubleDouble::ONE / self
    }

    pub fn mul_f64(self, b: f64) -> Self {
        let (p, e) = two_prod(self.hi, b);
        let e = e + self.lo * b;
        let (hi, lo) = quick_two_sum(p, e);
        DoubleDouble { hi, lo }
    }

    pub fn sqrt(self) -> Self {
        if self.hi <= 0.0 {
            return DoubleDouble::ZERO;
        }
        let x = self.hi.sqrt();
        // One Newton step on the double-double residual.
        let r = self - DoubleDouble::from(x) * DoubleDouble::from(x);
        DoubleDouble::from(x) + DoubleDouble::from(r.hi / (2.0 * x))
    }

    pub fn exp(self) -> Self {
        if self.hi > 709.0 {
            return DoubleDouble::from(f64::INFINITY);
        }
        if self.hi < -745.0 {
            return DoubleDouble::ZERO;
        }
        // exp(x) = 2^k * exp(r)^16, |r| <= ln2 / 32.
        let k = (self.hi / std::f64::consts::LN_2).round();
        let r = (self - DoubleDouble::LN2.mul_f64(k)).mul_f64(1.0 / 16.0);
        let mut term = DoubleDouble::ONE;
        let mut sum = DoubleDouble::ONE;
        for i in 1..=24 {
            term = term * r / DoubleDouble::from(i as f64);
            sum = sum + term;
            if term.hi.abs() < 1e-34 {
                break;
            }
        }
        for _ in 0..4 {
            sum = sum * sum;
        }
        sum.mul_f64(2f64.powi(k as i32))
    }

    pub fn ln(self) -> Self {
        if self.hi <= 0.0 {
            return DoubleDouble::from(f64::NAN);
        }
        // Newton on exp: y <- y + x*exp(-y) - 1, twice from a double seed.
        let mut y = DoubleDouble::from(self.hi.ln());
        for _ in 0..2 {
            y = y + self * (-y).exp() - DoubleDouble::ONE;
        }
        y
    }

    /// `self^p` for positive `self`.
    pub fn powf(self, p: DoubleDouble) -> Self {
        (self.ln() * p).exp()
    }

    pub fn powi(self, n: i32) -> Self {
        let mut base = if n < 0 { self.recip() } else { self };
        let mut e = n.unsigned_abs();
        let mut acc = DoubleDouble::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    /// Decimal rendering with `digits` significant digits.
    pub fn to_decimal(self, digits: usize) -> String {
        if !self.is_finite() {
            return format!("{}", self.hi);
        }
        if self.hi == 0.0 {
            return "0".to_string();
        }
        let neg = self.hi < 0.0;
        let mut x = self.abs();
        let mut exp10 = x.hi.log10().floor() as i32;
        x = x * DoubleDouble::from(10.0).powi(-exp10);
        if x.hi >= 10.0 {
            x = x.mul_f64(0.1);
            exp10 += 1;
        } else if x.hi < 1.0 {
            x = x.mul_f64(10.0);
            exp10 -= 1;
        }
        let mut ds = Vec::with_capacity(digits + 1);
        for _ in 0..=digits {
            let d = x.hi.floor().clamp(0.0, 9.0);
            ds.push(d as u8);
            x = (x - DoubleDouble::from(d)).mul_f64(10.0);
        }
        // Round half up on the extra digit.
        if ds[digits] >= 5 {
            let mut i = digits;
            loop {
                if i == 0 {
                    ds.insert(0, 1);
                    exp10 += 1;
                    break;
                }
                i -= 1;
                if ds[i] == 9 {
                    ds[i] = 0;
                } else {
                    ds[i] += 1;
                    break;
                }
            }
        }
        ds.truncate(digits);
        let mut s = String::new();
        if neg {
            s.push('-');
        }
        let digit_str: String = ds.iter().map(|d| char::from(b'0' + d)).collect();
        if (0..=20).contains(&exp10) {
            let split = (exp10 + 1) as usize;
            if split >= digit_str.len() {
                s.push_str(&digit_str);
                s.extend(std::iter::repeat_n('0', split - digit_str.len()));
            } else {
                s.push_str(&digit_str[..split]);
                s.push('.');
                s.push_str(&digit_str[split..]);
            }
        } else if (-6..0).contains(&exp10) {
            s.push_str("0.");
            s.extend(std::iter::repeat_n('0', (-exp10 - 1) as usize));
            s.push_str(&digit_str);
        } else {
            s.push_str(&digit_str[..1]);
            s.push('.');
            s.push_str(&digit_str[1..]);
            s.push_str(&format!("e{exp10}"));
        }
        s
    }
}

impl From<f64> for DoubleDouble {
    fn from(x: f64) -> Self {
        DoubleDouble { hi: x, lo: 0.0 }
    }
}

impl Add for DoubleDouble {
    type Output = DoubleDouble;
    fn add(self, b: DoubleDouble) -> DoubleDouble {
        let (s1, s2) = two_sum(self.hi, b.hi);
        let (t1, t2) = two_sum(self.lo, b.lo);
        let s2 = s2 + t1;
        let (s1, s2) = quick_two_sum(s1, s2);
        let s2 = s2 + t2;
        let (hi, lo) = quick_two_sum(s1, s2);
        DoubleDouble { hi, lo }
    }
}

impl Sub for DoubleDouble {
    type Output = DoubleDouble;
    fn sub(self, b: DoubleDouble) -> DoubleDouble {
        self + (-b)
    }
}

impl Neg for DoubleDouble {
    type Output = DoubleDouble;
    fn neg(self) -> DoubleDouble {
        DoubleDouble { hi: -self.hi, lo: -self.lo }
    }
}

impl Mul for DoubleDouble {
    type Output = DoubleDouble;
    fn mul(self, b: DoubleDouble) -> DoubleDouble {
        let (p, e) = two_prod(self.hi, b.hi);
        let e = e + (self.hi * b.lo + self.lo * b.hi);
        let (hi, lo) = quick_two_sum(p, e);
        DoubleDouble { hi, lo }
    }
}

impl Div for DoubleDouble {
    type Output = DoubleDouble;
    fn div(self, b: DoubleDouble) -> DoubleDouble {
        let q1 = self.hi / b.hi;
        let r = self - b.mul_f64(q1);
        let q2 = r.hi / b.hi;
        let r = r - b.mul_f64(q2);
        let q3 = r.hi / b.hi;
        let (hi, lo) = quick_two_sum(q1, q2);
        DoubleDouble { hi, lo } + DoubleDouble::from(q3)
    }
}

impl PartialOrd for DoubleDouble {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match self.hi.partial_cmp(&other.hi) {
            Some(Ordering::Equal) => self.lo.partial_cmp(&other.lo),
            o => o,
        }
    }
}

impl fmt::Display for DoubleDouble {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f.precision().unwrap_or(32);
        f.write_str(&self.to_decimal(digits))
    }
}

impl std::iter::Sum for DoubleDouble {
    fn sum<I: Iterator<Item = DoubleDouble>>(iter: I) -> Self {
        iter.fold(DoubleDouble::ZERO, |a, b| a + b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::Rational;

    fn exact(x: DoubleDouble) -> Rational {
        Rational::from_f64_exact(x.hi).unwrap() + Rational::from_f64_exact(x.lo).unwrap()
    }

    #[test]
    fn division_is_accurate_to_double_double() {
        let q = DoubleDouble::from(1.0) / DoubleDouble::from(3.0);
        let err = (exact(q) - Rational::new(1, 3)).abs().to_f64();
        assert!(err < 1e-32);
    }

    #[test]
    fn exp_ln_roundtrip() {
        for &x in &[0.5, 1.0, 2.5, 10.5640291769, 50.0] {
            let v = DoubleDouble::from(x);
            let back = v.ln().exp();
            assert!(((back - v) / v).hi.abs() < 1e-30, "{x}");
        }
    }

    #[test]
    fn ln2_constant_and_e() {
        let e = DoubleDouble::ONE.exp();
        // e = 2.71828182845904523536028747135266...
        assert_eq!(e.to_decimal(30), "2.71828182845904523536028747135");
        assert_eq!(DoubleDouble::from(2.0).ln().to_decimal(30), "0.693147180559945309417232121458");
    }

    #[test]
    fn decimal_rendering_rounds() {
        assert_eq!(DoubleDouble::from(0.125).to_decimal(3), "0.125");
        assert_eq!(DoubleDouble::from(9.9996).to_decimal(4), "10.00");
        assert_eq!(DoubleDouble::from(-1234.5).to_decimal(5), "-1234.5");
    }

    #[test]
    fn sqrt_three() {
        let r = DoubleDouble::from(3.0).sqrt();
        assert_eq!(r.to_decimal(31), "1.732050807568877293527446341506");
    }
}
