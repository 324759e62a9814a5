//! Positive binary numerals, unary naturals and total sequences.

mod decimal;
pub(crate) mod limbs;

use std::cmp::Ordering;
use std::fmt;
use std::num::NonZeroU64;
use std::ops::{Add, Mul};
use std::str::FromStr;

use crate::error::{ArithError, Result};

/// A positive binary numeral.
///
/// Stored as little-endian 64-bit limbs with no most-significant zero limb,
/// so every value `>= 1` has exactly one representation. The constructor
/// view (`1`, `S0 p`, `S1 p`) is available through [`BinPos::head`] and
/// [`BinPos::tail`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinPos {
    pub(crate) limbs: Vec<u64>,
}

/// Outermost constructor of a [`BinPos`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Head {
    One,
    S0,
    S1,
}

impl BinPos {
    pub fn one() -> Self {
        BinPos { limbs: vec![1] }
    }

    pub(crate) fn from_limbs_unchecked(mut limbs: Vec<u64>) -> Self {
        limbs::normalize(&mut limbs);
        debug_assert!(!limbs.is_empty());
        BinPos { limbs }
    }

    /// Builds a numeral from little-endian limbs; `None` for zero.
    pub fn from_le_limbs(mut limbs: Vec<u64>) -> Option<Self> {
        limbs::normalize(&mut limbs);
        (!limbs.is_empty()).then_some(BinPos { limbs })
    }

    pub fn to_le_limbs(&self) -> &[u64] {
        &self.limbs
    }

    /// `S0 p = 2p`
    pub fn s0(&self) -> Self {
        BinPos { limbs: limbs::shl(&self.limbs, 1) }
    }

    /// `S1 p = 2p + 1`
    pub fn s1(&self) -> Self {
        let mut limbs = limbs::shl(&self.limbs, 1);
        limbs[0] |= 1;
        BinPos { limbs }
    }

    pub fn head(&self) -> Head {
        if self.is_one() {
            Head::One
        } else if self.limbs[0] & 1 == 0 {
            Head::S0
        } else {
            Head::S1
        }
    }

    /// The argument of the outermost constructor, or `None` for `1`.
    pub fn tail(&self) -> Option<Self> {
        if self.is_one() {
            None
        } else {
            Some(BinPos { limbs: limbs::shr(&self.limbs, 1) })
        }
    }

    pub fn is_one(&self) -> bool {
        self.limbs.len() == 1 && self.limbs[0] == 1
    }

    pub fn is_even(&self) -> bool {
        self.limbs[0] & 1 == 0
    }

    pub fn is_odd(&self) -> bool {
        !self.is_even()
    }

    pub fn pow2(k: u64) -> Self {
        BinPos { limbs: limbs::shl(&[1], k) }
    }

    pub fn bit_len(&self) -> u64 {
        limbs::bit_len(&self.limbs)
    }

    /// Number of constructors above `1`, i.e. `floor(log2 p)`.
    pub fn pos_log(&self) -> UnaryNat {
        UnaryNat(self.bit_len() - 1)
    }

    pub fn trailing_zeros(&self) -> u64 {
        limbs::trailing_zeros(&self.limbs)
    }

    pub fn succ(&self) -> Self {
        let mut limbs = self.limbs.clone();
        limbs::add_at(&mut limbs, 0, &[1]);
        BinPos { limbs }
    }

    pub fn add(&self, other: &BinPos) -> Self {
        BinPos { limbs: limbs::add(&self.limbs, &other.limbs) }
    }

    pub fn mul(&self, other: &BinPos) -> Self {
        BinPos { limbs: limbs::mul(&self.limbs, &other.limbs) }
    }

    pub fn square(&self) -> Self {
        self.mul(self)
    }

    /// `self - other`, defined only when `self > other`.
    pub fn sub_strict(&self, other: &BinPos) -> Result<Self> {
        if limbs::cmp(&self.limbs, &other.limbs) != Ordering::Greater {
            return Err(ArithError::Underflow);
        }
        let mut limbs = self.limbs.clone();
        limbs::sub_assign(&mut limbs, &other.limbs);
        Ok(BinPos { limbs })
    }

    pub fn shl(&self, k: u64) -> Self {
        BinPos { limbs: limbs::shl(&self.limbs, k) }
    }

    /// `floor(self / 2^k)`, `None` when that is zero.
    pub fn shr(&self, k: u64) -> Option<Self> {
        BinPos::from_le_limbs(limbs::shr(&self.limbs, k))
    }

    pub fn to_u64(&self) -> Option<u64> {
        match self.limbs.as_slice() {
            [v] => Some(*v),
            _ => None,
        }
    }

    pub fn to_u128(&self) -> Option<u128> {
        match self.limbs.as_slice() {
            [v] => Some(u128::from(*v)),
            [lo, hi] => Some(u128::from(*lo) | (u128::from(*hi) << 64)),
            _ => None,
        }
    }

    pub fn parse_decimal(s: &str) -> Result<Self> {
        decimal::parse(s)
    }

    pub fn to_decimal(&self) -> String {
        decimal::print(self)
    }
}

impl Ord for BinPos {
    fn cmp(&self, other: &Self) -> Ordering {
        limbs::cmp(&self.limbs, &other.limbs)
    }
}

impl PartialOrd for BinPos {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for &BinPos {
    type Output = BinPos;
    fn add(self, rhs: &BinPos) -> BinPos {
        BinPos::add(self, rhs)
    }
}

impl Mul for &BinPos {
    type Output = BinPos;
    fn mul(self, rhs: &BinPos) -> BinPos {
        BinPos::mul(self, rhs)
    }
}

impl From<NonZeroU64> for BinPos {
    fn from(v: NonZeroU64) -> Self {
        BinPos { limbs: vec![v.get()] }
    }
}

impl TryFrom<u64> for BinPos {
    type Error = ArithError;
    fn try_from(v: u64) -> Result<Self> {
        NonZeroU64::new(v).map(BinPos::from).ok_or(ArithError::Zero)
    }
}

impl TryFrom<u128> for BinPos {
    type Error = ArithError;
    fn try_from(v: u128) -> Result<Self> {
        BinPos::from_le_limbs(vec![v as u64, (v >> 64) as u64]).ok_or(ArithError::Zero)
    }
}

impl FromStr for BinPos {
    type Err = ArithError;
    fn from_str(s: &str) -> Result<Self> {
        decimal::parse(s)
    }
}

impl fmt::Display for BinPos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(&self.to_decimal())
    }
}

impl fmt::Debug for BinPos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinPos({self})")
    }
}

/// A natural number with zero/successor semantics, held as a machine counter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct UnaryNat(pub u64);

impl UnaryNat {
    pub const ZERO: UnaryNat = UnaryNat(0);

    pub fn get(self) -> u64 {
        self.0
    }

    pub fn succ(self) -> Self {
        UnaryNat(self.0 + 1)
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Truncated subtraction.
    pub fn monus(self, other: UnaryNat) -> Self {
        UnaryNat(self.0.saturating_sub(other.0))
    }
}

impl From<u64> for UnaryNat {
    fn from(v: u64) -> Self {
        UnaryNat(v)
    }
}

impl Add for UnaryNat {
    type Output = UnaryNat;
    fn add(self, rhs: UnaryNat) -> UnaryNat {
        UnaryNat(self.0 + rhs.0)
    }
}

impl Mul for UnaryNat {
    type Output = UnaryNat;
    fn mul(self, rhs: UnaryNat) -> UnaryNat {
        UnaryNat(self.0 * rhs.0)
    }
}

impl fmt::Display for UnaryNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

/// Value embedding of a positive numeral into the naturals.
///
/// # Panics
/// If `p` does not fit the 64-bit counter.
pub fn pos_to_nat(p: &BinPos) -> UnaryNat {
    UnaryNat(p.to_u64().expect("positive numeral exceeds the natural-number counter"))
}

/// `0 ↦ 1`, otherwise the identity on values.
pub fn nat_to_pos(n: UnaryNat) -> BinPos {
    BinPos::try_from(n.0.max(1)).expect("nonzero")
}

/// A total sequence of positive numerals: a finite table plus a default.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PosSeq {
    entries: Vec<BinPos>,
    default: BinPos,
}

impl PosSeq {
    pub fn new(entries: Vec<BinPos>, default: BinPos) -> Self {
        PosSeq { entries, default }
    }

    /// Table with default `1`.
    pub fn from_vec(entries: Vec<BinPos>) -> Self {
        PosSeq::new(entries, BinPos::one())
    }

    pub fn constant(v: BinPos) -> Self {
        PosSeq::new(Vec::new(), v)
    }

    pub fn get(&self, i: usize) -> &BinPos {
        self.entries.get(i).unwrap_or(&self.default)
    }

    /// The first `n` entries as an owned vector.
    pub fn prefix(&self, n: usize) -> Vec<BinPos> {
        (0..n).map(|i| self.get(i).clone()).collect()
    }
}
