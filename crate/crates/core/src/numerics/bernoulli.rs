//! Bernoulli numbers, Euler numbers and Bernoulli polynomials as exact rationals.
//!
//! Conventions follow the generating functions
//! `t/(e^t - 1) = Σ B_n t^n/n!` (so `B_1 = -1/2`) and
//! `2e^t/(e^{2t} + 1) = sech t = Σ E_n t^n/n!` (so `E_2 = -1`, `E_4 = 5`).

use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::rational::{binomial, Rational};

static BERNOULLI: OnceLock<RwLock<Vec<Rational>>> = OnceLock::new();
static EULER: OnceLock<RwLock<Vec<BigInt>>> = OnceLock::new();
static BERNOULLI_F64: OnceLock<Vec<f64>> = OnceLock::new();

/// Exact `B_n`.
pub fn bernoulli_number(n: usize) -> Rational {
    if n == 1 {
        return Rational::new(-1, 2);
    }
    if n % 2 == 1 {
        return Rational::zero();
    }
    let k = n / 2;
    let table = BERNOULLI.get_or_init(|| RwLock::new(Vec::new()));
    if let Some(b) = table.read().expect("bernoulli table poisoned").get(k) {
        return b.clone();
    }
    let mut guard = table.write().expect("bernoulli table poisoned");
    if guard.len() <= k {
        *guard = even_bernoulli(k.max(2 * guard.len()).max(16));
    }
    guard[k].clone()
}

/// `B_{2k}` for `k = 0..=kmax` via tangent numbers (Brent–Harvey).
fn even_bernoulli(kmax: usize) -> Vec<Rational> {
    let mut tangent = vec![BigInt::zero(); kmax + 1];
    if kmax >= 1 {
        tangent[1] = BigInt::one();
    }
    for k in 2..=kmax {
        tangent[k] = BigInt::from(k - 1) * &tangent[k - 1];
    }
    for k in 2..=kmax {
        for j in k..=kmax {
            tangent[j] = BigInt::from(j - k) * &tangent[j - 1] + BigInt::from(j - k + 2) * &tangent[j];
        }
    }
    let mut out = Vec::with_capacity(kmax + 1);
    out.push(Rational::one());
    for (k, t) in tangent.iter().enumerate().skip(1) {
        let four_k = BigInt::one() << (2 * k);
        let denom = &four_k * (&four_k - BigInt::one());
        let mut numer = BigInt::from(2 * k) * t;
        if k % 2 == 0 {
            numer = -numer;
        }
        out.push(Rational::from_big(numer, denom));
    }
    out
}

/// Exact `E_n` (zero for odd `n`).
pub fn euler_number(n: usize) -> Rational {
    Rational::from_bigint(euler_number_int(n))
}

pub(crate) fn euler_number_int(n: usize) -> BigInt {
    if n % 2 == 1 {
        return BigInt::zero();
    }
    let table = EULER.get_or_init(|| RwLock::new(Vec::new()));
    let k = n / 2;
    if let Some(e) = table.read().expect("euler table poisoned").get(k) {
        return e.clone();
    }
    let mut guard = table.write().expect("euler table poisoned");
    if guard.len() <= k {
        *guard = secant_numbers(k.max(2 * guard.len()));
    }
    guard[k].clone()
}

/// `E_{2k}` for `k = 0..=kmax` from the Seidel boustrophedon triangle of zigzag numbers.
fn secant_numbers(kmax: usize) -> Vec<BigInt> {
    let nmax = 2 * kmax;
    let mut zigzag = Vec::with_capacity(nmax + 1);
    let mut row = vec![BigInt::one()];
    zigzag.push(BigInt::one());
    for n in 1..=nmax {
        let mut next = Vec::with_capacity(n + 1);
        next.push(BigInt::zero());
        for i in 0..n {
            let v = &next[i] + &row[n - 1 - i];
            next.push(v);
        }
        zigzag.push(next[n].clone());
        row = next;
    }
    (0..=kmax)
        .map(|k| {
            let a = zigzag[2 * k].clone();
            if k % 2 == 1 {
                -a
            } else {
                a
            }
        })
        .collect()
}

/// Exact `B_n(x) = Σ_k C(n,k) B_k x^{n-k}`.
pub fn bernoulli_polynomial(n: usize, x: &Rational) -> Rational {
    let mut acc = Rational::zero();
    let mut xpow = Rational::one();
    // Horner-free: accumulate from the top power of x downwards via k = n - j.
    for j in 0..=n {
        let k = n - j;
        let c = Rational::from_bigint(binomial(n as u64, k as u64));
        acc = acc + c * bernoulli_number(k) * &xpow;
        xpow = xpow * x;
    }
    acc
}

/// `B_{2j} / (2j)!` as doubles for `j = 0..`, used by the Euler–Maclaurin tails.
pub(crate) fn bernoulli_over_factorial_f64(j: usize) -> f64 {
    let table = BERNOULLI_F64.get_or_init(|| {
        let mut fact = BigInt::one();
        let mut out = Vec::with_capacity(80);
        for jj in 0..80usize {
            if jj > 0 {
                fact *= BigInt::from(2 * jj - 1) * BigInt::from(2 * jj);
            }
            let b = bernoulli_number(2 * jj);
            out.push((b / Rational::from_bigint(fact.clone())).to_f64());
        }
        out
    });
    table[j]
}
