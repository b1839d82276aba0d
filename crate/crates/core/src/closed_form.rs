//! Analytic curves for the W scenario with all three observers at the same
//! acceleration, used as validators for the numeric eigensolver pipeline.
//!
//! The numeric pipeline is the ground truth; these expressions cross-check
//! it. Two published decimal values disagree slightly with the expressions
//! themselves (see [`W_ONE_TANGLE_AT_MAX`]); the expressions and the
//! partial-transpose spectrum agree with each other to machine precision.

use std::f64::consts::FRAC_PI_4;

use crate::error::Result;
use crate::fock::{make_w_state, Party};
use crate::measures::full_report;
use crate::rindler::{uniform_acceleration, RindlerParameter};

/// One-tangle of the W scenario at r = pi/4: (sqrt(17) - 3) / 12.
///
/// The commonly quoted 0.0971 is not reproduced by either the closed form
/// or the partial-transpose spectrum; both give this value.
pub const W_ONE_TANGLE_AT_MAX: f64 = 0.09359213546813838;

/// One-tangle of the W scenario at r = 0: 2 sqrt(2) / 3.
pub const W_ONE_TANGLE_AT_ZERO: f64 = 0.9428090415820634;

/// Two-tangle of the W scenario at r = 0: (sqrt(5) - 1) / 3.
pub const W_TWO_TANGLE_AT_ZERO: f64 = 0.41202265916659654;

/// One-tangle N(r) = -2 (c/2 - c^2/2 - (c/6) sqrt(17 c^2 - 18 c + 9)) with
/// c = cos^2 r; the same expression holds for every focus qubit.
pub fn w_one_tangle_closed(r: RindlerParameter) -> f64 {
    let c = r.cos().powi(2);
    -2.0 * (0.5 * c - 0.5 * c * c - c / 6.0 * (17.0 * c * c - 18.0 * c + 9.0).sqrt())
}

/// The displayed two-tangle expression without clamping; goes negative past
/// the zero crossing, where the partial transpose has no negative
/// eigenvalue. Retained for root finding.
pub fn w_two_tangle_unclamped(r: RindlerParameter) -> f64 {
    let c = r.cos().powi(2);
    -2.0 * (c * c / 3.0 - 2.0 * c / 3.0 - (20.0 * c * c - 24.0 * c + 9.0).sqrt() / 6.0 + 0.5)
}

/// Two-tangle N(r), clamped at zero past the crossing.
pub fn w_two_tangle_closed(r: RindlerParameter) -> f64 {
    w_two_tangle_unclamped(r).max(0.0)
}

/// pi-tangle of the symmetric W scenario: (3 N_one^2 - 6 N_two^2) / 3.
pub fn w_pi_tangle_closed(r: RindlerParameter) -> f64 {
    let n1 = w_one_tangle_closed(r);
    let n2 = w_two_tangle_closed(r);
    n1 * n1 - 2.0 * n2 * n2
}

/// The three closed-form curves of the symmetric W scenario.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosedFormCurve {
    WOneTangle,
    WTwoTangle,
    WPiTangle,
}

impl ClosedFormCurve {
    pub fn eval(self, r: RindlerParameter) -> f64 {
        match self {
            ClosedFormCurve::WOneTangle => w_one_tangle_closed(r),
            ClosedFormCurve::WTwoTangle => w_two_tangle_closed(r),
            ClosedFormCurve::WPiTangle => w_pi_tangle_closed(r),
        }
    }
}

/// Bisection root of the unclamped two-tangle expression on [0, pi/4].
///
/// The root satisfies cos^2(r*) = 2 - sqrt(2); the sign change is
/// guaranteed since the expression is positive at 0 and negative at pi/4.
pub fn find_two_tangle_zero() -> RindlerParameter {
    let f = |r: f64| w_two_tangle_unclamped(RindlerParameter::new(r).unwrap());
    let (mut lo, mut hi) = (0.0_f64, FRAC_PI_4);
    while hi - lo > 1e-13 {
        let mid = 0.5 * (lo + hi);
        if f(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    RindlerParameter::new(0.5 * (lo + hi)).unwrap()
}

/// One grid point of a closed-form vs numeric comparison.
#[derive(Debug, Clone, PartialEq)]
pub struct CrossValidationRow {
    pub r: RindlerParameter,
    pub one_tangle_closed: f64,
    pub one_tangle_numeric: f64,
    pub two_tangle_closed: f64,
    pub two_tangle_numeric: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CrossValidation {
    pub rows: Vec<CrossValidationRow>,
    pub max_one_tangle_diff: f64,
    pub max_two_tangle_diff: f64,
}

/// Evaluate both routes on a grid and report the worst discrepancy.
pub fn cross_validate(grid: &[RindlerParameter]) -> Result<CrossValidation> {
    let w = make_w_state();
    let mut rows = Vec::with_capacity(grid.len());
    let mut max_one = 0.0_f64;
    let mut max_two = 0.0_f64;
    for &r in grid {
        let report = full_report(&w, &uniform_acceleration(r))?;
        let row = CrossValidationRow {
            r,
            one_tangle_closed: w_one_tangle_closed(r),
            one_tangle_numeric: report.one_tangle(Party::Alice),
            two_tangle_closed: w_two_tangle_closed(r),
            two_tangle_numeric: report.two_tangle(Party::Alice, Party::Bob),
        };
        max_one = max_one.max((row.one_tangle_closed - row.one_tangle_numeric).abs());
        max_two = max_two.max((row.two_tangle_closed - row.two_tangle_numeric).abs());
        rows.push(row);
    }
    Ok(CrossValidation {
        rows,
        max_one_tangle_diff: max_one,
        max_two_tangle_diff: max_two,
    })
}

/// Uniform grid of `steps` parameters over [lo, hi].
pub fn uniform_grid(lo: RindlerParameter, hi: RindlerParameter, steps: usize) -> Vec<RindlerParameter> {
    assert!(steps >= 1 && lo.value() <= hi.value());
    if steps == 1 {
        return vec![lo];
    }
    (0..steps)
        .map(|i| {
            let t = i as f64 / (steps - 1) as f64;
            let r = lo.value() + t * (hi.value() - lo.value());
            RindlerParameter::new(r.min(FRAC_PI_4)).unwrap()
        })
        .collect()
}
