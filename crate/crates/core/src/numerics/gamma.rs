//! Complex log-gamma (Lanczos, g = 607/128) and digamma.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{pole, Result};

const LANCZOS_G: f64 = 607.0 / 128.0;
const LANCZOS: [f64; 15] = [
    0.999_999_999_999_997_1,
    57.156_235_665_862_92,
    -59.597_960_355_475_49,
    14.136_097_974_741_747,
    -0.491_913_816_097_620_2,
    0.339_946_499_848_118_9e-4,
    0.465_236_289_270_485_8e-4,
    -0.983_744_753_048_795_6e-4,
    0.158_088_703_224_912_5e-3,
    -0.210_264_441_724_104_9e-3,
    0.217_439_618_115_212_6e-3,
    -0.164_318_106_536_763_9e-3,
    0.844_182_239_838_527_4e-4,
    -0.261_908_384_015_814_1e-4,
    0.368_991_826_595_316_2e-5,
];
const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;
const LN_PI: f64 = 1.144_729_885_849_400_2;

fn is_nonpositive_integer(s: Complex64) -> bool {
    s.im == 0.0 && s.re <= 0.0 && s.re == s.re.round()
}

/// `log Γ(s)`, principal branch continued from the positive real axis.
pub fn log_gamma(s: Complex64) -> Result<Complex64> {
    if is_nonpositive_integer(s) {
        return Err(pole(s));
    }
    if s.re < 0.5 {
        // log Γ(s) = log π − log sin(πs) − log Γ(1−s), with the branch fixed so the
        // result is continuous in the upper and lower half-planes.
        let reflected = log_gamma_right(Complex64::new(1.0, 0.0) - s);
        let sign = if s.im < 0.0 { -1.0 } else { 1.0 };
        let branch = Complex64::new(0.0, sign * 2.0 * PI * (0.5 * s.re + 0.25).floor());
        return Ok(Complex64::new(LN_PI, 0.0) + branch - log_sin_pi(s) - reflected);
    }
    Ok(log_gamma_right(s))
}

/// `log sin(πs)` stable for large `|Im s|`.
fn log_sin_pi(s: Complex64) -> Complex64 {
    if s.im.abs() < 20.0 {
        return (s * PI).sin().ln();
    }
    // sin(πs) = ∓(e^{∓iπs})/(2i)·(1 − e^{±2πis}) with the decaying exponential factored out.
    let z = s * PI;
    let i = Complex64::i();
    let v = if s.im > 0.0 {
        let log_lead = -i * z - Complex64::new(2f64.ln(), 0.0) + Complex64::new(0.0, PI / 2.0);
        log_lead + (Complex64::new(1.0, 0.0) - (2.0 * i * z).exp()).ln()
    } else {
        let log_lead = i * z - Complex64::new(2f64.ln(), 0.0) - Complex64::new(0.0, PI / 2.0);
        log_lead + (Complex64::new(1.0, 0.0) - (-2.0 * i * z).exp()).ln()
    };
    // Fold back to the principal branch.
    Complex64::new(v.re, v.im - 2.0 * PI * (v.im / (2.0 * PI)).round())
}

fn log_gamma_right(z: Complex64) -> Complex64 {
    let zm1 = z - 1.0;
    let mut ser = Complex64::new(LANCZOS[0], 0.0);
    for (j, &c) in LANCZOS.iter().enumerate().skip(1) {
        ser += c / (zm1 + j as f64);
    }
    let t = zm1 + LANCZOS_G + 0.5;
    (zm1 + 0.5) * t.ln() - t + LN_SQRT_2PI + ser.ln()
}

/// `Γ(s)`.
pub fn gamma(s: Complex64) -> Result<Complex64> {
    Ok(log_gamma(s)?.exp())
}

/// Digamma `ψ(s) = Γ'(s)/Γ(s)`.
pub fn digamma(s: Complex64) -> Result<Complex64> {
    if is_nonpositive_integer(s) {
        return Err(pole(s));
    }
    if s.re < 0.5 {
        // ψ(s) = ψ(1−s) − π cot(πs)
        let z = s * PI;
        let cot = z.cos() / z.sin();
        return Ok(digamma_right(Complex64::new(1.0, 0.0) - s) - cot * PI);
    }
    Ok(digamma_right(s))
}

fn digamma_right(mut z: Complex64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    while z.norm() < 10.0 || z.re < 10.0 {
        acc -= z.inv();
        z += 1.0;
    }
    // ψ(z) ~ log z − 1/(2z) − Σ B_{2k}/(2k z^{2k})
    const B: [f64; 8] = [
        1.0 / 6.0,
        -1.0 / 30.0,
        1.0 / 42.0,
        -1.0 / 30.0,
        5.0 / 66.0,
        -691.0 / 2730.0,
        7.0 / 6.0,
        -3617.0 / 510.0,
    ];
    let inv2 = (z * z).inv();
    let mut pow = inv2;
    let mut series = Complex64::new(0.0, 0.0);
    for (k, b) in B.iter().enumerate() {
        series += pow * (*b / (2.0 * (k + 1) as f64));
        pow *= inv2;
    }
    acc + z.ln() - z.inv() * 0.5 - series
}
