//! Cross-checks of the Jacobi eigensolver against the characteristic
//! polynomial oracle.

mod common;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rindler_tangle::fock::{ModeLabel, Party, Wedge};
use rindler_tangle::hermitian::eigenvalues_hermitian;
use rindler_tangle::measures::{density_from_pure, partial_trace, partial_transpose};
use rindler_tangle::rindler::{apply_rindler, party_accelerations};

/// Each interval between midpoints of consecutive Jacobi eigenvalues must
/// contain exactly one root of the characteristic polynomial, so the
/// determinant sign flips across every boundary.
#[test]
fn jacobi_eigenvalue_count_agrees_with_sturm_bisection() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..100 {
        let m = common::random_hermitian(&mut rng, 8);
        let eig = eigenvalues_hermitian(&m).unwrap().eigenvalues;
        let (lo, hi) = common::gershgorin_bounds(&m);
        let mut boundaries = vec![lo - 1.0];
        for pair in eig.windows(2) {
            boundaries.push(0.5 * (pair[0] + pair[1]));
        }
        boundaries.push(hi + 1.0);
        let signs: Vec<f64> = boundaries
            .iter()
            .map(|&b| common::det_shifted(&m, b).signum())
            .collect();
        for (k, pair) in signs.windows(2).enumerate() {
            assert!(
                pair[0] * pair[1] < 0.0,
                "no sign change across interval {k} holding eigenvalue {}",
                eig[k]
            );
        }
    }
}

#[test]
fn jacobi_matches_bisection_eigenvalues() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..20 {
        let m = common::random_hermitian(&mut rng, 8);
        let jacobi = eigenvalues_hermitian(&m).unwrap().eigenvalues;
        let bisect = common::eigen_bisect(&m);
        assert_eq!(bisect.len(), 8, "oracle missed a root");
        for (a, b) in jacobi.iter().zip(&bisect) {
            assert!((a - b).abs() < 1e-9, "jacobi {a} vs bisection {b}");
        }
    }
}

/// One-tangles on random states and accelerations: Jacobi route vs the
/// polynomial-bisection route.
#[test]
fn negativity_oracle_equivalence_on_random_states() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let keep: Vec<ModeLabel> = Party::ALL.iter().map(|&p| ModeLabel::rindler_i(p)).collect();
    for _ in 0..20 {
        let state = common::random_pure_state(&mut rng);
        let params = party_accelerations(
            common::random_parameter(&mut rng),
            common::random_parameter(&mut rng),
            common::random_parameter(&mut rng),
        );
        let transformed = apply_rindler(&state, &params).unwrap();
        let rho = density_from_pure(&transformed);
        let reduced = partial_trace(&rho, &keep).unwrap();
        for p in Party::ALL {
            let pt = partial_transpose(&reduced, &[ModeLabel::rindler_i(p)]).unwrap();
            let jacobi = rindler_tangle::measures::one_tangle(&reduced, p).unwrap();
            let oracle = common::negativity_bisect(&pt);
            assert!(
                (jacobi - oracle).abs() < 1e-8,
                "focus {p}: jacobi {jacobi} vs oracle {oracle}"
            );
        }
    }
}

/// The reduced state stays a density matrix through the pipeline.
#[test]
fn reduced_states_remain_psd() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let keep: Vec<ModeLabel> = Party::ALL.iter().map(|&p| ModeLabel::rindler_i(p)).collect();
    for _ in 0..10 {
        let state = common::random_pure_state(&mut rng);
        let params = party_accelerations(
            common::random_parameter(&mut rng),
            common::random_parameter(&mut rng),
            common::random_parameter(&mut rng),
        );
        let transformed = apply_rindler(&state, &params).unwrap();
        let rho = density_from_pure(&transformed);
        let reduced = partial_trace(&rho, &keep).unwrap();
        assert!(reduced.min_eigenvalue().unwrap() >= -1e-10);
        assert!(reduced.mode_order().iter().all(|m| m.wedge == Wedge::RindlerI));
    }
}
