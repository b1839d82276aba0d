//! Eigenvalue oracle independent of the Jacobi solver.
//!
//! Eigenvalues are located as roots of the characteristic polynomial by
//! bisection on the inertia count of the shifted matrix (number of negative
//! pivots of the LDL* factorization of m - x I, by Sylvester's law). The
//! routine never diagonalizes anything, so it provides a second route for
//! the negativity values reported by `tangle-sweep check`.

use num_complex::Complex64;
use rindler_tangle::hermitian::SquareMatrix;

/// Number of eigenvalues of `m` strictly below `x`.
pub fn count_eigs_below(m: &SquareMatrix, x: f64) -> usize {
    let n = m.dim();
    let scale = m.frobenius_norm().max(1.0);
    let mut shift = x;
    'retry: loop {
        let mut a: Vec<Complex64> = (0..n * n)
            .map(|k| {
                let (i, j) = (k / n, k % n);
                let mut v = m.get(i, j);
                if i == j {
                    v -= Complex64::new(shift, 0.0);
                }
                v
            })
            .collect();
        let mut neg = 0;
        for col in 0..n {
            let d = a[col * n + col].re;
            if d.abs() < 1e-14 * scale {
                // Pivot breakdown: x sits on an eigenvalue of a leading
                // minor. Nudge the shift and refactor.
                shift += 1e-12 * scale;
                continue 'retry;
            }
            if d < 0.0 {
                neg += 1;
            }
            for row in (col + 1)..n {
                let factor = a[row * n + col] / d;
                for j in (col + 1)..n {
                    let sub = factor * a[col * n + j];
                    a[row * n + j] -= sub;
                }
            }
        }
        return neg;
    }
}

/// All eigenvalues in ascending order, each located by bisection.
pub fn eigen_bisect(m: &SquareMatrix) -> Vec<f64> {
    let n = m.dim();
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for i in 0..n {
        let center = m.get(i, i).re;
        let radius: f64 = (0..n)
            .filter(|&j| j != i)
            .map(|j| m.get(i, j).norm())
            .sum();
        lo = lo.min(center - radius);
        hi = hi.max(center + radius);
    }
    let (lo, hi) = (lo - 1e-6, hi + 1e-6);
    (1..=n)
        .map(|k| {
            let (mut a, mut b) = (lo, hi);
            while b - a > 1e-13 {
                let mid = 0.5 * (a + b);
                if count_eigs_below(m, mid) >= k {
                    b = mid;
                } else {
                    a = mid;
                }
            }
            0.5 * (a + b)
        })
        .collect()
}

/// 2 * sum of |negative eigenvalues|, via the bisection route.
pub fn negativity_bisect(m: &SquareMatrix) -> f64 {
    2.0 * eigen_bisect(m)
        .into_iter()
        .filter(|&l| l < -1e-12)
        .map(|l| -l)
        .sum::<f64>()
}
