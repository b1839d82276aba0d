use thiserror::Error;

use crate::fock::{ModeLabel, Party};

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is not Hermitian: |entry({i},{j}) - conj(entry({j},{i}))| = {deviation:e}")]
    NotHermitian { i: usize, j: usize, deviation: f64 },

    #[error("Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    NoConvergence { sweeps: usize, off_norm: f64 },

    #[error("state has no nonzero amplitude")]
    AllZeroAmplitudes,

    #[error("mode list is not a permutation of the state's mode order")]
    NotAPermutation,

    #[error("basis ket has {got} bits, expected {expected}")]
    WrongKetLength { expected: usize, got: usize },

    #[error("parse error on line {line}: {reason}")]
    Parse { line: usize, reason: String },

    #[error("acceleration parameter {r} outside [0, pi/4]")]
    OutOfRange { r: f64 },

    #[error("invalid acceleration spec: {reason}")]
    InvalidSpec { reason: String },

    #[error("no Rindler parameter supplied for party {0}")]
    MissingParty(Party),

    #[error("state contains non-Minkowski mode {0}")]
    NotMinkowski(ModeLabel),

    #[error("partial trace must keep at least one mode")]
    EmptyKeep,

    #[error("mode {0} not present in the density matrix")]
    UnknownMode(ModeLabel),

    #[error("party pair must name two distinct parties, got {0} twice")]
    SamePartyPair(Party),
}

pub type Result<T> = std::result::Result<T, Error>;
