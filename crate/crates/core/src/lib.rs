//! Tripartite fermionic entanglement seen from uniformly accelerated frames.
//!
//! A three-qubit state shared by Alice, Bob and Charlie is prepared in the
//! inertial (Minkowski) frame. When an observer moves with uniform proper
//! acceleration, her Minkowski mode splits into a pair of Rindler modes
//! living in two causally disconnected wedges; only the region-I mode is
//! accessible. This crate applies that single-mode fermionic channel,
//! traces out the inaccessible region-II modes, and quantifies what is left
//! with negativity-based measures: one-tangles, two-tangles, residual
//! entanglements and the pi-tangle.
//!
//! The pipeline is built from small, independently testable pieces:
//!
//! - [`hermitian`]: dense Hermitian matrices, a cyclic Jacobi eigensolver,
//!   trace norm and negative-eigenvalue sums.
//! - [`fock`]: occupation-number kets, sparse pure states, and the W / GHZ /
//!   custom state builders.
//! - [`rindler`]: the acceleration parameter `r` and the Minkowski-to-Rindler
//!   mode transformation.
//! - [`measures`]: density matrices, partial trace, partial transpose, and
//!   the tangle measures.
//! - [`closed_form`]: analytic curves for the equal-acceleration W scenario,
//!   used to cross-validate the numeric pipeline.
//!
//! ```
//! use rindler_tangle::fock::make_w_state;
//! use rindler_tangle::measures::full_report;
//! use rindler_tangle::rindler::{uniform_acceleration, RindlerParameter};
//!
//! let w = make_w_state();
//! let params = uniform_acceleration(RindlerParameter::INERTIAL);
//! let report = full_report(&w, &params).unwrap();
//! // Inertial W state: one-tangle 2*sqrt(2)/3 for every focus qubit.
//! assert!((report.one_tangles[0] - 0.9428090415820633).abs() < 1e-10);
//! ```

pub mod closed_form;
pub mod error;
pub mod fock;
pub mod hermitian;
pub mod measures;
pub mod rindler;

pub use error::{Error, Result};
pub use fock::{BasisKet, ModeLabel, Party, PureState, Wedge};
pub use hermitian::{EigenResult, SquareMatrix};
pub use measures::{DensityMatrix, TangleReport};
pub use rindler::{AccelerationSpec, RindlerParameter};
