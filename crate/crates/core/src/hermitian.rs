//! Dense Hermitian matrices and a cyclic Jacobi eigensolver.
//!
//! Everything in the tangle pipeline reduces to eigenvalues of Hermitian
//! matrices of dimension at most 2^6 = 64. The cyclic-by-row Jacobi method is
//! used: it is provably convergent for Hermitian input and needs no
//! factorization machinery, so every number it produces can be checked from
//! first principles.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Absolute tolerance for the Hermitian symmetry check.
pub const HERMITIAN_TOL: f64 = 1e-12;

/// Eigenvalues below `-NEG_EIGEN_EPS` are classified as negative.
pub const NEG_EIGEN_EPS: f64 = 1e-12;

/// Default cap on cyclic Jacobi sweeps.
pub const DEFAULT_MAX_SWEEPS: usize = 100;

/// Convergence threshold: off-diagonal Frobenius norm below this factor
/// times the Frobenius norm of the input.
const OFF_DIAG_FACTOR: f64 = 1e-13;

/// Dense square complex matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct SquareMatrix {
    dim: usize,
    data: Vec<Complex64>,
}

impl SquareMatrix {
    pub fn zeros(dim: usize) -> Self {
        assert!(dim >= 1, "dimension must be at least 1");
        SquareMatrix {
            dim,
            data: vec![Complex64::new(0.0, 0.0); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.set(i, i, Complex64::new(1.0, 0.0));
        }
        m
    }

    /// Build from real-valued rows. Panics if the rows are not square.
    pub fn from_real_rows(rows: &[Vec<f64>]) -> Self {
        let dim = rows.len();
        let mut m = Self::zeros(dim);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), dim, "row {i} has wrong length");
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, Complex64::new(v, 0.0));
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.dim + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Complex64) {
        self.data[i * self.dim + j] = v;
    }

    #[inline]
    pub fn add_at(&mut self, i: usize, j: usize, v: Complex64) {
        self.data[i * self.dim + j] += v;
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Largest absolute deviation from `entry(i,j) = conj(entry(j,i))`.
    pub fn hermitian_deviation(&self) -> (usize, usize, f64) {
        let mut worst = (0, 0, 0.0);
        for i in 0..self.dim {
            for j in i..self.dim {
                let dev = (self.get(i, j) - self.get(j, i).conj()).norm();
                if dev > worst.2 {
                    worst = (i, j, dev);
                }
            }
        }
        worst
    }

    pub fn check_hermitian(&self, tol: f64) -> Result<()> {
        let (i, j, deviation) = self.hermitian_deviation();
        if deviation > tol {
            return Err(Error::NotHermitian { i, j, deviation });
        }
        Ok(())
    }
}

/// Real spectrum of a Hermitian matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenResult {
    /// Eigenvalues in ascending order.
    pub eigenvalues: Vec<f64>,
    pub converged: bool,
    /// Number of full cyclic sweeps performed.
    pub iterations: usize,
}

/// All eigenvalues of a Hermitian matrix via cyclic-by-row Jacobi rotations.
pub fn eigenvalues_hermitian(m: &SquareMatrix) -> Result<EigenResult> {
    eigenvalues_hermitian_capped(m, DEFAULT_MAX_SWEEPS)
}

pub fn eigenvalues_hermitian_capped(m: &SquareMatrix, max_sweeps: usize) -> Result<EigenResult> {
    m.check_hermitian(HERMITIAN_TOL)?;
    let n = m.dim;
    let mut a = m.data.clone();
    let threshold = OFF_DIAG_FACTOR * m.frobenius_norm();

    let mut sweeps = 0;
    loop {
        let off = off_diag_norm(&a, n);
        if off <= threshold {
            break;
        }
        if sweeps >= max_sweeps {
            return Err(Error::NoConvergence {
                sweeps,
                off_norm: off,
            });
        }
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut a, n, p, q);
            }
        }
        sweeps += 1;
    }

    let mut eigenvalues: Vec<f64> = (0..n).map(|i| a[i * n + i].re).collect();
    eigenvalues.sort_by(f64::total_cmp);
    Ok(EigenResult {
        eigenvalues,
        converged: true,
        iterations: sweeps,
    })
}

fn off_diag_norm(a: &[Complex64], n: usize) -> f64 {
    let mut sum = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                sum += a[i * n + j].norm_sqr();
            }
        }
    }
    sum.sqrt()
}

/// One complex Jacobi rotation zeroing the (p, q) entry.
///
/// For the Hermitian 2x2 block [[alpha, beta], [conj(beta), gamma]] with
/// beta = |beta| e^{i phi}, the unitary
///
/// ```text
/// R = [[ c,          -s e^{i phi}],
///      [ s e^{-i phi},  c        ]]
/// ```
///
/// with tan(theta) = t solving t^2 - 2 zeta t - 1 = 0, zeta = (gamma -
/// alpha) / (2 |beta|), annihilates the off-diagonal entry of R^dag A R.
fn rotate(a: &mut [Complex64], n: usize, p: usize, q: usize) {
    let beta = a[p * n + q];
    let abs_b = beta.norm();
    if abs_b == 0.0 {
        return;
    }
    let phase = beta / abs_b;
    let alpha = a[p * n + p].re;
    let gamma = a[q * n + q].re;
    let zeta = (gamma - alpha) / (2.0 * abs_b);
    // Smaller-magnitude root for stability.
    let t = if zeta >= 0.0 {
        -1.0 / (zeta + (zeta * zeta + 1.0).sqrt())
    } else {
        1.0 / (-zeta + (zeta * zeta + 1.0).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;

    for k in 0..n {
        if k == p || k == q {
            continue;
        }
        let akp = a[k * n + p];
        let akq = a[k * n + q];
        let nkp = akp * c + akq * s * phase.conj();
        let nkq = -akp * s * phase + akq * c;
        a[k * n + p] = nkp;
        a[p * n + k] = nkp.conj();
        a[k * n + q] = nkq;
        a[q * n + k] = nkq.conj();
    }
    a[p * n + p] = Complex64::new(alpha + t * abs_b, 0.0);
    a[q * n + q] = Complex64::new(gamma - t * abs_b, 0.0);
    a[p * n + q] = Complex64::new(0.0, 0.0);
    a[q * n + p] = Complex64::new(0.0, 0.0);
}

/// Trace norm of a Hermitian matrix: sum of |eigenvalue|.
pub fn trace_norm(m: &SquareMatrix) -> Result<f64> {
    let eig = eigenvalues_hermitian(m)?;
    Ok(eig.eigenvalues.iter().map(|l| l.abs()).sum())
}

/// Sum of |lambda| over eigenvalues below `-NEG_EIGEN_EPS`.
pub fn negative_eigenvalue_sum(m: &SquareMatrix) -> Result<f64> {
    negative_eigenvalue_sum_with(m, NEG_EIGEN_EPS)
}

/// Same with a caller-chosen zero threshold.
pub fn negative_eigenvalue_sum_with(m: &SquareMatrix, eps_zero: f64) -> Result<f64> {
    let eig = eigenvalues_hermitian(m)?;
    Ok(eig
        .eigenvalues
        .iter()
        .filter(|&&l| l < -eps_zero)
        .map(|l| -l)
        .sum())
}
