//! Finite Fourier transform on `Z/MZ`, its eigenspaces, and periodic combs on
//! `(1/N)Z` that are their own Fourier transform.

use std::f64::consts::PI;

use nalgebra::{DMatrix, Schur};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Self-duality tolerance for constructed vectors.
pub const SELFDUAL_TOL: f64 = 1e-10;
const KERNEL_TOL: f64 = 1e-10;
const EIGEN_TOL: f64 = 1e-6;

/// A complex function on `Z/MZ`, stored by residue `0..M`.
#[derive(Clone, Debug, PartialEq)]
pub struct CyclicFunction {
    pub modulus: usize,
    pub values: Vec<Complex64>,
}

impl CyclicFunction {
    pub fn new(values: Vec<Complex64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Dimension("cyclic function needs a positive modulus".into()));
        }
        Ok(CyclicFunction { modulus: values.len(), values })
    }

    pub fn from_real(values: &[f64]) -> Result<Self> {
        Self::new(values.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    /// Value at any integer, reduced mod `M`.
    pub fn at(&self, n: i64) -> Complex64 {
        self.values[n.rem_euclid(self.modulus as i64) as usize]
    }

    pub fn norm(&self) -> f64 {
        self.values.iter().map(|v| v.norm_sqr()).sum::<f64>().sqrt()
    }

    /// `‖self − other‖₂`.
    pub fn distance(&self, other: &CyclicFunction) -> f64 {
        self.values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| (a - b).norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    pub fn is_real(&self, tol: f64) -> bool {
        self.values.iter().all(|v| v.im.abs() <= tol)
    }

    pub fn is_symmetric(&self, tol: f64) -> bool {
        let m = self.modulus;
        (0..m).all(|n| (self.values[n] - self.values[(m - n) % m]).norm() <= tol)
    }
}

/// Unitary transform `f̂(n) = M^{-1/2} Σ_m f(m) e^{−2πi mn/M}`.
pub fn finite_fourier(f: &CyclicFunction) -> CyclicFunction {
    let m = f.modulus;
    let scale = 1.0 / (m as f64).sqrt();
    let twiddle: Vec<Complex64> = (0..m)
        .map(|k| Complex64::from_polar(1.0, -2.0 * PI * k as f64 / m as f64))
        .collect();
    let values = (0..m)
        .map(|n| {
            let mut acc = Complex64::new(0.0, 0.0);
            for (j, v) in f.values.iter().enumerate() {
                acc += v * twiddle[(j * n) % m];
            }
            acc * scale
        })
        .collect();
    CyclicFunction { modulus: m, values }
}

/// The `M×M` matrix of the finite Fourier transform.
pub fn fourier_matrix(m: usize) -> DMatrix<Complex64> {
    let scale = 1.0 / (m as f64).sqrt();
    DMatrix::from_fn(m, m, |n, k| Complex64::from_polar(scale, -2.0 * PI * ((n * k) % m) as f64 / m as f64))
}

/// Multiplicities of the eigenvalues `(1, −1, −i, i)` of the finite Fourier transform.
pub fn eigenspace_dimensions(m: usize) -> Result<(usize, usize, usize, usize)> {
    if m == 0 {
        return Err(Error::Dimension("modulus must be positive".into()));
    }
    let schur = Schur::new(fourier_matrix(m));
    let eig = schur
        .eigenvalues()
        .ok_or_else(|| Error::Degeneracy("Schur form did not triangularize".into()))?;
    let roots = [
        Complex64::new(1.0, 0.0),
        Complex64::new(-1.0, 0.0),
        Complex64::new(0.0, -1.0),
        Complex64::new(0.0, 1.0),
    ];
    let mut counts = [0usize; 4];
    for lam in eig.iter() {
        let (idx, dist) = roots
            .iter()
            .enumerate()
            .map(|(i, r)| (i, (lam - r).norm()))
            .fold((0, f64::INFINITY), |best, cur| if cur.1 < best.1 { cur } else { best });
        if dist > EIGEN_TOL {
            return Err(Error::Degeneracy(format!("eigenvalue {lam} is not a fourth root of unity")));
        }
        counts[idx] += 1;
    }
    Ok((counts[0], counts[1], counts[2], counts[3]))
}

/// Real symmetric `f` on `Z/N²Z` with `f̂ = f`, `f(n) = 0` for `|n| ≤ NT`, largest entry `1`.
///
/// The kernel of `w ↦ w − Fw` on the space of symmetric window-vanishing vectors is
/// found by SVD; when it has several dimensions the vector returned is the first row
/// of the reduced row echelon form of a kernel basis, which does not depend on the
/// basis the SVD happens to produce.
pub fn construct_selfdual(n: usize, t: usize) -> Result<CyclicFunction> {
    if n.is_multiple_of(2) {
        return Err(Error::Dimension(format!("N = {n} must be odd")));
    }
    let m = n * n;
    if m <= 4 * n * t + 1 {
        return Err(Error::Dimension(format!("N² = {m} must exceed 4NT + 1 = {}", 4 * n * t + 1)));
    }
    let k = (m - 1) / 4;
    let window = n * t;
    // Basis of W: (δ_j + δ_{−j})/√2 for window < j ≤ 2K.
    let js: Vec<usize> = (window + 1..=2 * k).collect();
    let d = js.len();
    let cosines = cosine_matrix(m);
    let inv_sqrt2 = 1.0 / 2f64.sqrt();
    let mut a = DMatrix::<f64>::zeros(m, d);
    for (col, &j) in js.iter().enumerate() {
        for row in 0..m {
            let w = if row == j || row == m - j { inv_sqrt2 } else { 0.0 };
            let fw = (cosines[(row, j)] + cosines[(row, m - j)]) * inv_sqrt2;
            a[(row, col)] = w - fw;
        }
    }
    let svd = a.svd(false, true);
    let v_t = svd.v_t.ok_or_else(|| Error::Rank("SVD returned no right singular vectors".into()))?;
    let kernel_rows: Vec<usize> = (0..svd.singular_values.len())
        .filter(|&i| svd.singular_values[i] < KERNEL_TOL)
        .collect();
    // A wide system (d > M) cannot happen here since d ≤ 2K < M.
    if kernel_rows.is_empty() {
        return Err(Error::Rank("numerical kernel is empty".into()));
    }
    let mut basis = DMatrix::<f64>::zeros(kernel_rows.len(), d);
    for (r, &i) in kernel_rows.iter().enumerate() {
        basis.set_row(r, &v_t.row(i));
    }
    let coords = first_rref_row(basis);
    let mut values = vec![0.0; m];
    for (c, &j) in js.iter().enumerate() {
        values[j] += coords[c] * inv_sqrt2;
        values[m - j] += coords[c] * inv_sqrt2;
    }
    let peak = values
        .iter()
        .copied()
        .fold(0.0f64, |best, v| if v.abs() > best.abs() + 1e-12 { v } else { best });
    if peak == 0.0 {
        return Err(Error::Rank("kernel vector vanished".into()));
    }
    for v in values.iter_mut() {
        *v /= peak;
    }
    let f = CyclicFunction::from_real(&values)?;
    let residual = finite_fourier(&f).distance(&f);
    if residual > SELFDUAL_TOL * f.norm() {
        return Err(Error::Rank(format!("self-duality residual {residual:e} too large")));
    }
    Ok(f)
}

/// `cos(2π nm/M)/√M`.
fn cosine_matrix(m: usize) -> DMatrix<f64> {
    let scale = 1.0 / (m as f64).sqrt();
    DMatrix::from_fn(m, m, |a, b| scale * (2.0 * PI * ((a * b) % m) as f64 / m as f64).cos())
}

/// First row of the reduced row echelon form (partial pivoting).
fn first_rref_row(mut b: DMatrix<f64>) -> Vec<f64> {
    let (rows, cols) = b.shape();
    let mut pivot_row = 0;
    for col in 0..cols {
        if pivot_row == rows {
            break;
        }
        let (best, mag) = (pivot_row..rows)
            .map(|r| (r, b[(r, col)].abs()))
            .fold((pivot_row, -1.0), |acc, cur| if cur.1 > acc.1 { cur } else { acc });
        if mag < 1e-9 {
            continue;
        }
        b.swap_rows(pivot_row, best);
        let p = b[(pivot_row, col)];
        for c in 0..cols {
            b[(pivot_row, c)] /= p;
        }
        for r in 0..rows {
            if r != pivot_row {
                let factor = b[(r, col)];
                if factor != 0.0 {
                    for c in 0..cols {
                        let v = b[(pivot_row, c)];
                        b[(r, c)] -= factor * v;
                    }
                }
            }
        }
        pivot_row += 1;
    }
    b.row(0).iter().copied().collect()
}

/// Periodic comb `Σ_n c_n δ_{n/N}` with `c_{n+N²} = c_n`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CrystallineMeasure {
    pub n: usize,
    pub coefficients: Vec<f64>,
}

impl CrystallineMeasure {
    /// Checks length, symmetry and self-duality.
    pub fn new(n: usize, coefficients: Vec<f64>) -> Result<Self> {
        let m = CrystallineMeasure { n, coefficients };
        m.validate()?;
        Ok(m)
    }

    pub fn validate(&self) -> Result<()> {
        let m = self.n * self.n;
        if self.n.is_multiple_of(2) || self.coefficients.len() != m {
            return Err(Error::Dimension(format!(
                "measure with N = {} needs an odd N and N² coefficients, got {}",
                self.n,
                self.coefficients.len()
            )));
        }
        for k in 1..m {
            if self.coefficients[k] != self.coefficients[m - k] {
                return Err(Error::SymmetryViolation(format!("c_{k} ≠ c_{}", m - k)));
            }
        }
        let r = self.selfdual_residual();
        if r > SELFDUAL_TOL {
            return Err(Error::Inconsistent(format!("self-duality residual {r:e}")));
        }
        Ok(())
    }

    pub fn modulus(&self) -> usize {
        self.n * self.n
    }

    /// `c_n` for any integer `n`.
    pub fn coefficient(&self, n: i64) -> f64 {
        self.coefficients[n.rem_euclid(self.modulus() as i64) as usize]
    }

    pub fn spacing(&self) -> f64 {
        1.0 / self.n as f64
    }

    pub fn as_function(&self) -> CyclicFunction {
        CyclicFunction {
            modulus: self.modulus(),
            values: self.coefficients.iter().map(|&c| Complex64::new(c, 0.0)).collect(),
        }
    }

    pub fn selfdual_residual(&self) -> f64 {
        let f = self.as_function();
        finite_fourier(&f).distance(&f)
    }

    /// Largest `W` with `c_n = 0` for all `|n| ≤ W`.
    pub fn window(&self) -> usize {
        let half = (self.modulus() - 1) / 2;
        (0..=half).take_while(|&k| self.coefficients[k] == 0.0).count().saturating_sub(1)
    }

    /// `P(x) = Σ_{r<N²} (c_r/N) e^{−2πi r x/N²}`; the transform has mass `P(m)` at `m/N`.
    pub fn trig_polynomial(&self, x: f64) -> Complex64 {
        let m = self.modulus() as f64;
        let n = self.n as f64;
        self.coefficients
            .iter()
            .enumerate()
            .map(|(r, &c)| Complex64::from_polar(c / n, -2.0 * PI * r as f64 * x / m))
            .sum()
    }
}

/// Measure with `c_n = f(n)`, extended periodically.
pub fn measure_from_function(f: &CyclicFunction, n: usize) -> Result<CrystallineMeasure> {
    if f.modulus != n * n {
        return Err(Error::Dimension(format!("modulus {} is not N² = {}", f.modulus, n * n)));
    }
    if !f.is_real(0.0) {
        return Err(Error::Domain("coefficients must be real".into()));
    }
    CrystallineMeasure::new(n, f.values.iter().map(|v| v.re).collect())
}
