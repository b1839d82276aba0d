//! The Minkowski-to-Rindler single-mode fermionic channel.
//!
//! An observer with proper acceleration `a` sees the Minkowski vacuum of a
//! fermionic mode as a two-mode state over the Rindler wedges:
//!
//! ```text
//! |0>_M -> cos(r) |0>_I |0>_II + sin(r) |1>_I |1>_II
//! |1>_M -> |1>_I |0>_II
//! ```
//!
//! with cos(r) = (e^{-2 pi omega c / a} + 1)^{-1/2}. The parameter r runs
//! from 0 (inertial) to pi/4 (infinite acceleration).

use std::collections::BTreeMap;
use std::f64::consts::FRAC_PI_4;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::fock::{BasisKet, ModeLabel, Party, PureState, Wedge};

/// Acceleration parameter r in [0, pi/4].
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct RindlerParameter(f64);

impl RindlerParameter {
    /// r = 0, the inertial frame.
    pub const INERTIAL: RindlerParameter = RindlerParameter(0.0);

    /// r = pi/4, the infinite-acceleration limit.
    pub const MAX: RindlerParameter = RindlerParameter(FRAC_PI_4);

    pub fn new(r: f64) -> Result<Self> {
        if !r.is_finite() || !(0.0..=FRAC_PI_4).contains(&r) {
            return Err(Error::OutOfRange { r });
        }
        Ok(RindlerParameter(r))
    }

    pub fn value(self) -> f64 {
        self.0
    }

    pub fn cos(self) -> f64 {
        self.0.cos()
    }

    pub fn sin(self) -> f64 {
        self.0.sin()
    }
}

/// Physical inputs determining the acceleration parameter.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AccelerationSpec {
    /// Mode angular frequency, s^-1.
    pub omega: f64,
    /// Speed of light, m/s.
    pub c: f64,
    /// Proper acceleration, m/s^2. Infinity is allowed as the limit case.
    pub a: f64,
}

impl AccelerationSpec {
    pub fn new(omega: f64, c: f64, a: f64) -> Result<Self> {
        if !(omega > 0.0) || !omega.is_finite() {
            return Err(Error::InvalidSpec {
                reason: format!("omega must be positive and finite, got {omega}"),
            });
        }
        if !(c > 0.0) || !c.is_finite() {
            return Err(Error::InvalidSpec {
                reason: format!("c must be positive and finite, got {c}"),
            });
        }
        if !(a >= 0.0) {
            return Err(Error::InvalidSpec {
                reason: format!("a must be non-negative, got {a}"),
            });
        }
        Ok(AccelerationSpec { omega, c, a })
    }
}

/// r = arccos((e^{-2 pi omega c / a} + 1)^{-1/2}); a = 0 maps to r = 0.
pub fn acceleration_to_r(spec: &AccelerationSpec) -> RindlerParameter {
    if spec.a == 0.0 {
        return RindlerParameter::INERTIAL;
    }
    let exponent = -2.0 * std::f64::consts::PI * spec.omega * spec.c / spec.a;
    let cos_r = (exponent.exp() + 1.0).powf(-0.5);
    // cos_r is in [2^-1/2, 1]; clamp guards the last-ulp rounding of acos.
    RindlerParameter(cos_r.acos().clamp(0.0, FRAC_PI_4))
}

/// Same parameter for all three parties.
pub fn uniform_acceleration(r: RindlerParameter) -> BTreeMap<Party, RindlerParameter> {
    party_accelerations(r, r, r)
}

pub fn party_accelerations(
    alice: RindlerParameter,
    bob: RindlerParameter,
    charlie: RindlerParameter,
) -> BTreeMap<Party, RindlerParameter> {
    let mut map = BTreeMap::new();
    map.insert(Party::Alice, alice);
    map.insert(Party::Bob, bob);
    map.insert(Party::Charlie, charlie);
    map
}

/// Replace each party's Minkowski mode by its (region I, region II) pair.
///
/// The output mode order is party-major with region I first, i.e. for the
/// canonical three-party input: A_I, A_II, B_I, B_II, C_I, C_II.
pub fn apply_rindler(
    s: &PureState,
    params: &BTreeMap<Party, RindlerParameter>,
) -> Result<PureState> {
    for m in s.mode_order() {
        if m.wedge != Wedge::Minkowski {
            return Err(Error::NotMinkowski(*m));
        }
    }
    let parties: Vec<Party> = s.mode_order().iter().map(|m| m.party).collect();
    let rs: Vec<RindlerParameter> = parties
        .iter()
        .map(|p| params.get(p).copied().ok_or(Error::MissingParty(*p)))
        .collect::<Result<_>>()?;

    let mut out_order = Vec::with_capacity(2 * parties.len());
    for &p in &parties {
        out_order.push(ModeLabel::rindler_i(p));
        out_order.push(ModeLabel::rindler_ii(p));
    }
    let out_len = out_order.len();

    let mut out: BTreeMap<BasisKet, Complex64> = BTreeMap::new();
    for (ket, amp) in s.amplitudes() {
        let mut terms: Vec<(usize, Complex64)> = vec![(0, *amp)];
        for (i, rp) in rs.iter().enumerate() {
            let mut next = Vec::with_capacity(terms.len() * 2);
            for &(bits, coeff) in &terms {
                let shifted = bits << 2;
                if ket.bit(i) == 1 {
                    // |1>_M -> |1>_I |0>_II
                    next.push((shifted | 0b10, coeff));
                } else {
                    // |0>_M -> cos r |00> + sin r |11>
                    let (c, sn) = (rp.cos(), rp.sin());
                    if c != 0.0 {
                        next.push((shifted, coeff * c));
                    }
                    if sn != 0.0 {
                        next.push((shifted | 0b11, coeff * sn));
                    }
                }
            }
            terms = next;
        }
        for (bits, coeff) in terms {
            *out.entry(BasisKet::from_index(bits, out_len))
                .or_insert(Complex64::new(0.0, 0.0)) += coeff;
        }
    }
    PureState::from_parts(out_order, out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fock::{make_ghz_state, make_w_state};

    fn rp(r: f64) -> RindlerParameter {
        RindlerParameter::new(r).unwrap()
    }

    #[test]
    fn parameter_range() {
        assert!(RindlerParameter::new(-0.1).is_err());
        assert!(RindlerParameter::new(1.0).is_err());
        assert!(RindlerParameter::new(FRAC_PI_4).is_ok());
    }

    #[test]
    fn zero_acceleration_is_inertial() {
        let spec = AccelerationSpec::new(1.0, 1.0, 0.0).unwrap();
        assert_eq!(acceleration_to_r(&spec).value(), 0.0);
    }

    #[test]
    fn infinite_acceleration_saturates_at_pi_over_4() {
        let spec = AccelerationSpec::new(1.0, 1.0, f64::INFINITY).unwrap();
        let r = acceleration_to_r(&spec);
        assert!((r.value() - FRAC_PI_4).abs() < 1e-15);
        assert!((r.cos() - 0.5_f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn acceleration_two_pi_reference_point() {
        // omega = c = 1, a = 2 pi: cos r = (e^-1 + 1)^(-1/2).
        let spec = AccelerationSpec::new(1.0, 1.0, 2.0 * std::f64::consts::PI).unwrap();
        let r = acceleration_to_r(&spec);
        assert!((r.cos() - 0.855019636400243664).abs() < 1e-12);
        assert!((r.value() - 0.545207623830583585).abs() < 1e-12);
    }

    #[test]
    fn rejects_invalid_spec() {
        assert!(AccelerationSpec::new(0.0, 1.0, 1.0).is_err());
        assert!(AccelerationSpec::new(1.0, -1.0, 1.0).is_err());
        assert!(AccelerationSpec::new(1.0, 1.0, -1.0).is_err());
    }

    #[test]
    fn w_state_twelve_terms_with_displayed_coefficients() {
        let r = rp(0.3);
        let out = apply_rindler(&make_w_state(), &uniform_acceleration(r)).unwrap();
        assert_eq!(out.term_count(), 12);
        let norm3 = 1.0 / 3.0_f64.sqrt();
        let (c, s) = (r.cos(), r.sin());
        let cases: [(&str, f64); 12] = [
            ("000010", c * c),
            ("110010", s * c),
            ("001000", c * c),
            ("111000", c * s),
            ("001011", s * c),
            ("111011", s * s),
            ("001110", s * c),
            ("111110", s * s),
            ("100000", c * c),
            ("100011", c * s),
            ("101100", c * s),
            ("101111", s * s),
        ];
        for (ket, coeff) in cases {
            let amp = out.amplitude(&ket.parse().unwrap());
            assert!(
                (amp.re - coeff * norm3).abs() < 1e-14,
                "ket {ket}: got {}, want {}",
                amp.re,
                coeff * norm3
            );
        }
    }

    #[test]
    fn ghz_state_nine_terms() {
        let (ra, r) = (rp(0.2), rp(0.5));
        let out =
            apply_rindler(&make_ghz_state(), &party_accelerations(ra, r, r)).unwrap();
        assert_eq!(out.term_count(), 9);
        let norm2 = 1.0 / 2.0_f64.sqrt();
        let amp_111 = out.amplitude(&"101010".parse().unwrap());
        assert!((amp_111.re - norm2).abs() < 1e-14);
        let amp_000 = out.amplitude(&"000000".parse().unwrap());
        assert!((amp_000.re - r.cos() * r.cos() * ra.cos() * norm2).abs() < 1e-14);
    }

    #[test]
    fn inertial_channel_appends_zero_region_ii_bits() {
        let out = apply_rindler(
            &make_w_state(),
            &uniform_acceleration(RindlerParameter::INERTIAL),
        )
        .unwrap();
        assert_eq!(out.term_count(), 3);
        let norm3 = 1.0 / 3.0_f64.sqrt();
        for ket in ["000010", "001000", "100000"] {
            assert!((out.amplitude(&ket.parse().unwrap()).re - norm3).abs() < 1e-15);
        }
    }

    #[test]
    fn missing_party_is_an_error() {
        let mut params = BTreeMap::new();
        params.insert(Party::Alice, rp(0.1));
        assert_eq!(
            apply_rindler(&make_w_state(), &params),
            Err(Error::MissingParty(Party::Bob))
        );
    }

    #[test]
    fn already_transformed_state_is_rejected() {
        let once =
            apply_rindler(&make_w_state(), &uniform_acceleration(rp(0.1))).unwrap();
        let err = apply_rindler(&once, &uniform_acceleration(rp(0.1))).unwrap_err();
        assert!(matches!(err, Error::NotMinkowski(_)));
    }

    #[test]
    fn norm_preserved() {
        for r in [0.0, 0.1, 0.3, FRAC_PI_4] {
            let out =
                apply_rindler(&make_w_state(), &uniform_acceleration(rp(r))).unwrap();
            assert!((out.norm() - 1.0).abs() < 1e-12);
        }
    }
}
