//! Integer square roots.

use crate::numerals::{BinPos, UnaryNat};
use crate::search::{nat_least, pos_mon_max};

/// Least `m` with `n ≤ m²` (the rounded-up root).
pub fn nat_sqrt_ceil(n: UnaryNat) -> UnaryNat {
    let target = u128::from(n.0);
    nat_least(n.succ(), |m| target <= u128::from(m.0) * u128::from(m.0))
}

/// `⌊√p⌋` by bisection over `q² ≤ p`.
pub fn pos_sqrt_floor(p: &BinPos) -> BinPos {
    pos_sqrt_floor_probed(p, &mut 0)
}

fn pos_sqrt_floor_probed(p: &BinPos, probes: &mut u64) -> BinPos {
    let steps = UnaryNat(p.pos_log().0 / 2 + 1);
    pos_mon_max(
        |q| {
            *probes += 1;
            q.square() <= *p
        },
        steps,
    )
}

/// `⌊√p⌋` by digit pairs, from the most significant pair downward.
///
/// At each level the root `q` of the argument with its two low digits
/// removed extends to `S1 q` when `(S1 q)²` fits under the current argument,
/// and to `S0 q` otherwise.
pub fn fast_sqrt(p: &BinPos) -> BinPos {
    if let Some(v) = p.to_u64() {
        return BinPos::try_from(fast_sqrt_word(v)).expect("root of a positive word");
    }
    // Levels with argument p >> 2j; the top one lies in {1, 2, 3}.
    let top = (p.bit_len() - 1) / 2;
    let mut q = BinPos::one();
    for j in (0..top).rev() {
        let arg = p.shr(2 * j).expect("argument stays positive below the top level");
        let cand = q.s1();
        q = if cand.square() <= arg { cand } else { q.s0() };
    }
    q
}

// Same digit-pair rule on a machine word.
fn fast_sqrt_word(v: u64) -> u64 {
    let top = (63 - v.leading_zeros()) / 2;
    let mut q: u64 = 1;
    for j in (0..top).rev() {
        let arg = u128::from(v >> (2 * j));
        let cand = 2 * q + 1;
        q = if u128::from(cand) * u128::from(cand) <= arg { cand } else { 2 * q };
    }
    q
}

/// Perfect-square test via [`fast_sqrt`].
pub fn is_square(p: &BinPos) -> bool {
    fast_sqrt(p).square() == *p
}
