//! Density matrices, partial trace/transpose, and the tangle measures.
//!
//! Basis convention: ket bits are big-endian over the mode order, so for the
//! reduced three-qubit space the A_I bit is the most significant bit of the
//! row index. This matches the row ordering of the 8x8 matrices the
//! scenarios produce.

use std::collections::BTreeMap;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::fock::{ModeLabel, Party, PureState, Wedge};
use crate::hermitian::{self, SquareMatrix};
use crate::rindler::{apply_rindler, RindlerParameter};

/// Trace and Hermitian-symmetry tolerance for density matrices.
pub const DENSITY_TOL: f64 = 1e-12;

/// Trace-1 Hermitian matrix over an ordered mode list.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    mode_order: Vec<ModeLabel>,
    matrix: SquareMatrix,
}

impl DensityMatrix {
    pub fn new(mode_order: Vec<ModeLabel>, matrix: SquareMatrix) -> Result<Self> {
        assert_eq!(matrix.dim(), 1 << mode_order.len(), "dimension mismatch");
        matrix.check_hermitian(DENSITY_TOL)?;
        let trace = matrix.trace();
        let dev = (trace - Complex64::new(1.0, 0.0)).norm();
        if dev > DENSITY_TOL {
            return Err(Error::InvalidSpec {
                reason: format!("density matrix trace deviates from 1 by {dev:e}"),
            });
        }
        Ok(DensityMatrix { mode_order, matrix })
    }

    pub fn mode_order(&self) -> &[ModeLabel] {
        &self.mode_order
    }

    pub fn matrix(&self) -> &SquareMatrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    /// Smallest eigenvalue; a PSD probe for tests and diagnostics.
    pub fn min_eigenvalue(&self) -> Result<f64> {
        let eig = hermitian::eigenvalues_hermitian(&self.matrix)?;
        Ok(eig.eigenvalues[0])
    }
}

/// Outer product |s><s| in the canonical big-endian basis.
pub fn density_from_pure(s: &PureState) -> DensityMatrix {
    let dim = s.dim();
    let mut v = vec![Complex64::new(0.0, 0.0); dim];
    for (ket, amp) in s.amplitudes() {
        v[ket.index()] = *amp;
    }
    let mut m = SquareMatrix::zeros(dim);
    for i in 0..dim {
        if v[i] == Complex64::new(0.0, 0.0) {
            continue;
        }
        for j in 0..dim {
            m.set(i, j, v[i] * v[j].conj());
        }
    }
    DensityMatrix::new(s.mode_order().to_vec(), m).expect("outer product is a density matrix")
}

#[inline]
fn bit_mask(mode_pos: usize, n: usize) -> usize {
    1 << (n - 1 - mode_pos)
}

fn positions_of(d: &DensityMatrix, modes: &[ModeLabel]) -> Result<Vec<usize>> {
    modes
        .iter()
        .map(|m| {
            d.mode_order
                .iter()
                .position(|o| o == m)
                .ok_or(Error::UnknownMode(*m))
        })
        .collect()
}

/// Trace out every mode not listed in `keep`. The output mode order is
/// `keep` sorted canonically; the trace is preserved.
pub fn partial_trace(d: &DensityMatrix, keep: &[ModeLabel]) -> Result<DensityMatrix> {
    if keep.is_empty() {
        return Err(Error::EmptyKeep);
    }
    let mut keep_sorted = keep.to_vec();
    keep_sorted.sort();
    keep_sorted.dedup();
    let keep_pos = positions_of(d, &keep_sorted)?;
    let n = d.mode_order.len();
    let env_pos: Vec<usize> = (0..n).filter(|p| !keep_pos.contains(p)).collect();
    let k = keep_pos.len();
    let reduced_dim = 1 << k;
    let env_dim = 1 << env_pos.len();

    // Map a reduced index + an environment index to a full basis index.
    let embed = |reduced: usize, env: usize| -> usize {
        let mut idx = 0;
        for (t, &p) in keep_pos.iter().enumerate() {
            if (reduced >> (k - 1 - t)) & 1 == 1 {
                idx |= bit_mask(p, n);
            }
        }
        for (t, &p) in env_pos.iter().enumerate() {
            if (env >> (env_pos.len() - 1 - t)) & 1 == 1 {
                idx |= bit_mask(p, n);
            }
        }
        idx
    };

    let mut out = SquareMatrix::zeros(reduced_dim);
    for ri in 0..reduced_dim {
        for rj in 0..reduced_dim {
            let mut sum = Complex64::new(0.0, 0.0);
            for e in 0..env_dim {
                sum += d.matrix.get(embed(ri, e), embed(rj, e));
            }
            out.set(ri, rj, sum);
        }
    }
    DensityMatrix::new(keep_sorted, out)
}

/// Transpose the indices belonging to `party_modes`. The result is Hermitian
/// with trace 1 but in general not positive semi-definite.
pub fn partial_transpose(d: &DensityMatrix, party_modes: &[ModeLabel]) -> Result<SquareMatrix> {
    let pos = positions_of(d, party_modes)?;
    let n = d.mode_order.len();
    let mask: usize = pos.iter().map(|&p| bit_mask(p, n)).sum();
    let dim = d.dim();
    let mut out = SquareMatrix::zeros(dim);
    for i in 0..dim {
        for j in 0..dim {
            let ti = (i & !mask) | (j & mask);
            let tj = (j & !mask) | (i & mask);
            out.set(ti, tj, d.matrix.get(i, j));
        }
    }
    Ok(out)
}

fn party_modes(d: &DensityMatrix, party: Party) -> Result<Vec<ModeLabel>> {
    let modes: Vec<ModeLabel> = d
        .mode_order
        .iter()
        .copied()
        .filter(|m| m.party == party)
        .collect();
    if modes.is_empty() {
        return Err(Error::MissingParty(party));
    }
    Ok(modes)
}

/// Negativity of `focus` against the rest: twice the absolute sum of the
/// negative eigenvalues of the partial transpose.
pub fn one_tangle(d: &DensityMatrix, focus: Party) -> Result<f64> {
    let modes = party_modes(d, focus)?;
    let pt = partial_transpose(d, &modes)?;
    Ok(2.0 * hermitian::negative_eigenvalue_sum(&pt)?)
}

/// Negativity of the two-party reduced state after tracing out the third
/// party. The partial transpose is taken over the first member of the pair;
/// the spectrum is the same either way for a bipartite state.
pub fn two_tangle(d: &DensityMatrix, pair: (Party, Party)) -> Result<f64> {
    if pair.0 == pair.1 {
        return Err(Error::SamePartyPair(pair.0));
    }
    let mut keep = party_modes(d, pair.0)?;
    keep.extend(party_modes(d, pair.1)?);
    let reduced = partial_trace(d, &keep)?;
    let pt_modes = party_modes(&reduced, pair.0)?;
    let pt = partial_transpose(&reduced, &pt_modes)?;
    Ok(2.0 * hermitian::negative_eigenvalue_sum(&pt)?)
}

/// Every tangle measure for one scenario point.
#[derive(Debug, Clone, PartialEq)]
pub struct TangleReport {
    /// Acceleration parameters, indexed Alice, Bob, Charlie.
    pub r_values: [RindlerParameter; 3],
    /// One-tangles N_A(BC), N_B(AC), N_C(AB).
    pub one_tangles: [f64; 3],
    /// Two-tangles N_AB, N_AC, N_BC.
    pub two_tangles: [f64; 3],
    /// Residual entanglements pi_A, pi_B, pi_C, reported unclamped.
    pub residuals: [f64; 3],
    /// Average of the three residuals.
    pub pi_tangle: f64,
}

fn pair_index(a: Party, b: Party) -> usize {
    match (a.index() + b.index(), a == b) {
        (_, true) => panic!("pair must name two distinct parties"),
        (1, _) => 0, // AB
        (2, _) => 1, // AC
        (3, _) => 2, // BC
        _ => unreachable!(),
    }
}

impl TangleReport {
    pub fn one_tangle(&self, p: Party) -> f64 {
        self.one_tangles[p.index()]
    }

    pub fn two_tangle(&self, a: Party, b: Party) -> f64 {
        self.two_tangles[pair_index(a, b)]
    }

    pub fn residual(&self, p: Party) -> f64 {
        self.residuals[p.index()]
    }
}

/// Run the whole pipeline for a Minkowski-frame state: Rindler channel,
/// trace over region II, then all one-tangles, two-tangles, residuals and
/// the pi-tangle.
pub fn full_report(
    s: &PureState,
    params: &BTreeMap<Party, RindlerParameter>,
) -> Result<TangleReport> {
    let rindler = apply_rindler(s, params)?;
    let rho = density_from_pure(&rindler);
    let keep: Vec<ModeLabel> = rho
        .mode_order()
        .iter()
        .copied()
        .filter(|m| m.wedge == Wedge::RindlerI)
        .collect();
    let reduced = partial_trace(&rho, &keep)?;

    let mut one_tangles = [0.0; 3];
    for p in Party::ALL {
        one_tangles[p.index()] = one_tangle(&reduced, p)?;
    }
    let pairs = [
        (Party::Alice, Party::Bob),
        (Party::Alice, Party::Charlie),
        (Party::Bob, Party::Charlie),
    ];
    let mut two_tangles = [0.0; 3];
    for (i, pair) in pairs.into_iter().enumerate() {
        two_tangles[i] = two_tangle(&reduced, pair)?;
    }
    let mut residuals = [0.0; 3];
    for p in Party::ALL {
        let others: Vec<Party> = Party::ALL.into_iter().filter(|&q| q != p).collect();
        residuals[p.index()] = one_tangles[p.index()].powi(2)
            - two_tangles[pair_index(p, others[0])].powi(2)
            - two_tangles[pair_index(p, others[1])].powi(2);
    }
    let pi_tangle = residuals.iter().sum::<f64>() / 3.0;

    let r_values = [
        params[&Party::Alice],
        params[&Party::Bob],
        params[&Party::Charlie],
    ];
    Ok(TangleReport {
        r_values,
        one_tangles,
        two_tangles,
        residuals,
        pi_tangle,
    })
}
