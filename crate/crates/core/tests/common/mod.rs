//! Shared test helpers: an eigenvalue oracle independent of the Jacobi
//! solver (characteristic polynomial evaluated as det(m - x I) by Gaussian
//! elimination, roots located by sign-change bisection) and random input
//! generators.

use std::collections::BTreeMap;

use num_complex::Complex64;
use rand::Rng;
use rindler_tangle::fock::{make_custom_state, BasisKet, PureState};
use rindler_tangle::hermitian::SquareMatrix;
use rindler_tangle::rindler::RindlerParameter;

/// det(m - x I), real for Hermitian m; LU with partial pivoting.
pub fn det_shifted(m: &SquareMatrix, x: f64) -> f64 {
    let n = m.dim();
    let mut a: Vec<Complex64> = (0..n * n)
        .map(|k| {
            let (i, j) = (k / n, k % n);
            let mut v = m.get(i, j);
            if i == j {
                v -= Complex64::new(x, 0.0);
            }
            v
        })
        .collect();
    let mut det = Complex64::new(1.0, 0.0);
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&p, &q| a[p * n + col].norm().total_cmp(&a[q * n + col].norm()))
            .unwrap();
        if a[pivot * n + col].norm() == 0.0 {
            return 0.0;
        }
        if pivot != col {
            for j in 0..n {
                a.swap(col * n + j, pivot * n + j);
            }
            det = -det;
        }
        let d = a[col * n + col];
        det *= d;
        for row in (col + 1)..n {
            let factor = a[row * n + col] / d;
            for j in col..n {
                let sub = factor * a[col * n + j];
                a[row * n + j] -= sub;
            }
        }
    }
    det.re
}

/// Interval guaranteed to contain every eigenvalue (Gershgorin discs).
pub fn gershgorin_bounds(m: &SquareMatrix) -> (f64, f64) {
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
    (lo, hi)
}

/// Number of eigenvalues of `m` strictly below `x`: negative pivots of the
/// LDL* factorization of (m - x I), by Sylvester's law of inertia. Nudges
/// `x` when a pivot degenerates.
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

/// Eigenvalues located by bisection on the inertia count. Robust to
/// clustered and repeated eigenvalues; entirely independent of the Jacobi
/// path.
pub fn eigen_bisect(m: &SquareMatrix) -> Vec<f64> {
    let n = m.dim();
    let (lo, hi) = gershgorin_bounds(m);
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

/// Negativity oracle: 2 * sum of |negative roots| of the characteristic
/// polynomial, bypassing the Jacobi solver entirely.
pub fn negativity_bisect(m: &SquareMatrix) -> f64 {
    2.0 * eigen_bisect(m)
        .into_iter()
        .filter(|&l| l < -1e-12)
        .map(|l| -l)
        .sum::<f64>()
}

pub fn random_hermitian<R: Rng>(rng: &mut R, n: usize) -> SquareMatrix {
    let mut m = SquareMatrix::zeros(n);
    for i in 0..n {
        m.set(i, i, Complex64::new(rng.gen_range(-1.0..1.0), 0.0));
        for j in (i + 1)..n {
            let z = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            m.set(i, j, z);
            m.set(j, i, z.conj());
        }
    }
    m
}

pub fn random_pure_state<R: Rng>(rng: &mut R) -> PureState {
    let mut amps = BTreeMap::new();
    for idx in 0..8 {
        let z = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        amps.insert(BasisKet::from_index(idx, 3), z);
    }
    make_custom_state(&amps).expect("random amplitudes are not all zero").0
}

pub fn random_parameter<R: Rng>(rng: &mut R) -> RindlerParameter {
    RindlerParameter::new(rng.gen_range(0.0..std::f64::consts::FRAC_PI_4)).unwrap()
}
