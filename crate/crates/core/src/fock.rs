//! Occupation-number kets and sparse pure states.
//!
//! A state lives over an ordered list of modes; each fermionic mode holds 0
//! or 1 excitations, so a basis ket is a bitstring with the leftmost bit
//! belonging to the first mode. Amplitudes are kept in a sparse map since
//! every state of interest has at most a dozen terms.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Amplitudes with modulus below this are pruned after construction.
pub const AMP_PRUNE: f64 = 1e-15;

/// Norm must be 1 within this tolerance after construction or transformation.
pub const NORM_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Party {
    Alice,
    Bob,
    Charlie,
}

impl Party {
    pub const ALL: [Party; 3] = [Party::Alice, Party::Bob, Party::Charlie];

    pub fn index(self) -> usize {
        match self {
            Party::Alice => 0,
            Party::Bob => 1,
            Party::Charlie => 2,
        }
    }
}

impl fmt::Display for Party {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Party::Alice => "A",
            Party::Bob => "B",
            Party::Charlie => "C",
        };
        f.write_str(s)
    }
}

/// Frame the mode belongs to. Ordering puts region I before region II so the
/// derived `Ord` on [`ModeLabel`] yields the canonical A_I, A_II, B_I, B_II,
/// C_I, C_II sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Wedge {
    Minkowski,
    RindlerI,
    RindlerII,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ModeLabel {
    pub party: Party,
    pub wedge: Wedge,
}

impl ModeLabel {
    pub fn minkowski(party: Party) -> Self {
        ModeLabel {
            party,
            wedge: Wedge::Minkowski,
        }
    }

    pub fn rindler_i(party: Party) -> Self {
        ModeLabel {
            party,
            wedge: Wedge::RindlerI,
        }
    }

    pub fn rindler_ii(party: Party) -> Self {
        ModeLabel {
            party,
            wedge: Wedge::RindlerII,
        }
    }
}

impl fmt::Display for ModeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w = match self.wedge {
            Wedge::Minkowski => "M",
            Wedge::RindlerI => "I",
            Wedge::RindlerII => "II",
        };
        write!(f, "{}_{}", self.party, w)
    }
}

/// The three Minkowski modes in canonical order.
pub fn minkowski_modes() -> Vec<ModeLabel> {
    Party::ALL.iter().map(|&p| ModeLabel::minkowski(p)).collect()
}

/// Occupation bitstring; bit 0 is the leftmost (first) mode.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BasisKet {
    len: u8,
    bits: u16,
}

impl BasisKet {
    pub fn from_bits(bits: &[u8]) -> Self {
        assert!(!bits.is_empty() && bits.len() <= 12, "unsupported ket length");
        let mut packed = 0u16;
        for &b in bits {
            assert!(b <= 1, "occupation must be 0 or 1");
            packed = (packed << 1) | u16::from(b);
        }
        BasisKet {
            len: bits.len() as u8,
            bits: packed,
        }
    }

    /// Ket whose big-endian integer value over `len` modes is `index`.
    pub fn from_index(index: usize, len: usize) -> Self {
        assert!(len >= 1 && len <= 12 && index < (1 << len));
        BasisKet {
            len: len as u8,
            bits: index as u16,
        }
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Occupation of mode `i` (0 = leftmost).
    pub fn bit(&self, i: usize) -> u8 {
        assert!(i < self.len());
        ((self.bits >> (self.len() - 1 - i)) & 1) as u8
    }

    /// Row/column index of this ket in the dense basis (big-endian).
    pub fn index(&self) -> usize {
        self.bits as usize
    }
}

impl FromStr for BasisKet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.is_empty() || s.len() > 12 {
            return Err(Error::WrongKetLength {
                expected: 3,
                got: s.len(),
            });
        }
        let mut bits = Vec::with_capacity(s.len());
        for ch in s.chars() {
            match ch {
                '0' => bits.push(0),
                '1' => bits.push(1),
                _ => {
                    return Err(Error::Parse {
                        line: 0,
                        reason: format!("invalid occupation digit '{ch}'"),
                    })
                }
            }
        }
        Ok(BasisKet::from_bits(&bits))
    }
}

impl fmt::Display for BasisKet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len() {
            write!(f, "{}", self.bit(i))?;
        }
        Ok(())
    }
}

/// Normalized pure state as a sparse amplitude map over basis kets.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    mode_order: Vec<ModeLabel>,
    amps: BTreeMap<BasisKet, Complex64>,
}

impl PureState {
    /// Prunes near-zero amplitudes and enforces the unit-norm invariant.
    pub(crate) fn from_parts(
        mode_order: Vec<ModeLabel>,
        amps: BTreeMap<BasisKet, Complex64>,
    ) -> Result<Self> {
        let n = mode_order.len();
        let mut pruned = BTreeMap::new();
        for (ket, amp) in amps {
            if ket.len() != n {
                return Err(Error::WrongKetLength {
                    expected: n,
                    got: ket.len(),
                });
            }
            if amp.norm() >= AMP_PRUNE {
                pruned.insert(ket, amp);
            }
        }
        let state = PureState {
            mode_order,
            amps: pruned,
        };
        let norm = state.norm();
        if (norm - 1.0).abs() > NORM_TOL {
            return Err(Error::AllZeroAmplitudes);
        }
        Ok(state)
    }

    pub fn mode_order(&self) -> &[ModeLabel] {
        &self.mode_order
    }

    pub fn num_modes(&self) -> usize {
        self.mode_order.len()
    }

    /// Dimension of the dense Hilbert space, 2^(mode count).
    pub fn dim(&self) -> usize {
        1 << self.num_modes()
    }

    pub fn amplitude(&self, ket: &BasisKet) -> Complex64 {
        self.amps
            .get(ket)
            .copied()
            .unwrap_or(Complex64::new(0.0, 0.0))
    }

    pub fn amplitudes(&self) -> impl Iterator<Item = (&BasisKet, &Complex64)> {
        self.amps.iter()
    }

    pub fn term_count(&self) -> usize {
        self.amps.len()
    }

    pub fn norm(&self) -> f64 {
        self.amps
            .values()
            .map(|a| a.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// Distinct parties, in mode order.
    pub fn parties(&self) -> Vec<Party> {
        let mut out = Vec::new();
        for m in &self.mode_order {
            if !out.contains(&m.party) {
                out.push(m.party);
            }
        }
        out
    }
}

/// |W> = (|001> + |010> + |100>) / sqrt(3) over the Minkowski modes.
pub fn make_w_state() -> PureState {
    let amp = Complex64::new(1.0 / 3.0_f64.sqrt(), 0.0);
    let mut amps = BTreeMap::new();
    for bits in [[0, 0, 1], [0, 1, 0], [1, 0, 0]] {
        amps.insert(BasisKet::from_bits(&bits), amp);
    }
    PureState::from_parts(minkowski_modes(), amps).expect("W state is normalized")
}

/// |GHZ> = (|000> + |111>) / sqrt(2) over the Minkowski modes.
pub fn make_ghz_state() -> PureState {
    let amp = Complex64::new(1.0 / 2.0_f64.sqrt(), 0.0);
    let mut amps = BTreeMap::new();
    amps.insert(BasisKet::from_bits(&[0, 0, 0]), amp);
    amps.insert(BasisKet::from_bits(&[1, 1, 1]), amp);
    PureState::from_parts(minkowski_modes(), amps).expect("GHZ state is normalized")
}

/// Arbitrary 3-qubit state from an amplitude map. Renormalizes if needed;
/// the returned flag is true when renormalization was applied.
pub fn make_custom_state(amps: &BTreeMap<BasisKet, Complex64>) -> Result<(PureState, bool)> {
    for ket in amps.keys() {
        if ket.len() != 3 {
            return Err(Error::WrongKetLength {
                expected: 3,
                got: ket.len(),
            });
        }
    }
    let norm = amps
        .values()
        .map(|a| a.norm_sqr())
        .sum::<f64>()
        .sqrt();
    if norm < AMP_PRUNE {
        return Err(Error::AllZeroAmplitudes);
    }
    let renormalized = (norm - 1.0).abs() > NORM_TOL;
    let scaled: BTreeMap<BasisKet, Complex64> =
        amps.iter().map(|(k, a)| (*k, a / norm)).collect();
    let state = PureState::from_parts(minkowski_modes(), scaled)?;
    Ok((state, renormalized))
}

/// Re-index a state onto a permuted mode order; the physical state is
/// unchanged. Antisymmetrization signs from fermionic reordering are not
/// tracked, matching the positive-coefficient ket convention used throughout.
pub fn tensor_reorder(s: &PureState, new_order: &[ModeLabel]) -> Result<PureState> {
    let mut sorted_old: Vec<ModeLabel> = s.mode_order.to_vec();
    let mut sorted_new: Vec<ModeLabel> = new_order.to_vec();
    sorted_old.sort();
    sorted_new.sort();
    if sorted_old != sorted_new {
        return Err(Error::NotAPermutation);
    }
    // old position of the mode sitting at each new position
    let old_pos: Vec<usize> = new_order
        .iter()
        .map(|m| s.mode_order.iter().position(|o| o == m).unwrap())
        .collect();
    let n = s.num_modes();
    let mut amps = BTreeMap::new();
    for (ket, amp) in s.amplitudes() {
        let bits: Vec<u8> = (0..n).map(|i| ket.bit(old_pos[i])).collect();
        amps.insert(BasisKet::from_bits(&bits), *amp);
    }
    PureState::from_parts(new_order.to_vec(), amps)
}

/// Parse a custom 3-qubit state from the key-value text format:
/// one `bitstring = re [im]` entry per line, `#` starts a comment.
pub fn parse_custom_state(text: &str) -> Result<(PureState, bool)> {
    let mut amps: BTreeMap<BasisKet, Complex64> = BTreeMap::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (lhs, rhs) = line.split_once('=').ok_or_else(|| Error::Parse {
            line: line_no,
            reason: "expected `bitstring = re [im]`".into(),
        })?;
        let key = lhs.trim();
        if key.len() != 3 {
            return Err(Error::Parse {
                line: line_no,
                reason: format!("bitstring `{key}` must have exactly 3 bits"),
            });
        }
        let ket: BasisKet = key.parse().map_err(|_| Error::Parse {
            line: line_no,
            reason: format!("invalid bitstring `{key}`"),
        })?;
        let parts: Vec<&str> = rhs.split_whitespace().collect();
        if parts.is_empty() || parts.len() > 2 {
            return Err(Error::Parse {
                line: line_no,
                reason: "expected one or two numbers after `=`".into(),
            });
        }
        let mut nums = [0.0; 2];
        for (i, p) in parts.iter().enumerate() {
            nums[i] = p.parse::<f64>().map_err(|_| Error::Parse {
                line: line_no,
                reason: format!("invalid number `{p}`"),
            })?;
        }
        if amps
            .insert(ket, Complex64::new(nums[0], nums[1]))
            .is_some()
        {
            return Err(Error::Parse {
                line: line_no,
                reason: format!("duplicate ket `{key}`"),
            });
        }
    }
    make_custom_state(&amps)
}
