//! Primality, least factors, new primes and primes dividing products.

use crate::error::{ArithError, Result};
use crate::gcd::{nat_divides, pos_divides, stein_gcd};
use crate::isqrt::pos_sqrt_floor;
use crate::numerals::{nat_to_pos, BinPos, Head, PosSeq, UnaryNat};
use crate::search::{exb_nat, exb_pos, nat_least};

/// Some `1 < q ≤ ⌊√p⌋` divides `p`.
pub fn is_composed_pos(p: &BinPos) -> bool {
    let bound = pos_sqrt_floor(p);
    exb_pos(&bound, |q| !q.is_one() && pos_divides(q, p))
}

pub fn is_prime_pos(p: &BinPos) -> bool {
    !p.is_one() && !is_composed_pos(p)
}

/// Some `1 < m < n` divides `n`. Quadratic in `n`; meant for small inputs.
pub fn is_composed_nat(n: UnaryNat) -> bool {
    exb_nat(n, |m| m.0 > 1 && nat_divides(m, n))
}

pub fn is_prime_nat(n: UnaryNat) -> bool {
    n.0 > 1 && !is_composed_nat(n)
}

/// Least factor above one on naturals, by unbounded-to-`n` search.
pub fn nat_least_factor(n: UnaryNat) -> UnaryNat {
    nat_least(n, |i| i.0 > 1 && nat_divides(i, n))
}

/// Least factor greater than one (`1` for `1`).
///
/// Odd inputs are searched upward through every candidate below
/// `⌊√p⌋ + 1`, testing divisibility with the binary gcd.
pub fn least_factor(p: &BinPos) -> BinPos {
    least_factor_with(p, false)
}

/// As [`least_factor`], but the odd search visits only odd candidates.
pub fn least_factor_odd_step(p: &BinPos) -> BinPos {
    least_factor_with(p, true)
}

fn least_factor_with(p: &BinPos, odd_step: bool) -> BinPos {
    match p.head() {
        Head::One => BinPos::one(),
        Head::S0 => BinPos::pow2(1),
        Head::S1 => {
            let root = pos_sqrt_floor(p);
            // Search bound ⌊√p⌋+1, saturating for roots beyond the counter.
            let bound = UnaryNat(root.to_u64().map_or(u64::MAX, |r| r.saturating_add(1)));
            let found = if odd_step {
                least_odd_divisor(p, bound)
            } else {
                nat_least(bound, |q| {
                    if q.0 <= 1 {
                        return false;
                    }
                    let q = nat_to_pos(q);
                    stein_gcd(&q, p) == q
                })
            };
            let found = nat_to_pos(found);
            if found <= root {
                found
            } else {
                p.clone()
            }
        }
    }
}

fn least_odd_divisor(p: &BinPos, bound: UnaryNat) -> UnaryNat {
    (3..bound.0)
        .step_by(2)
        .find(|&q| {
            let q = nat_to_pos(UnaryNat(q));
            stein_gcd(&q, p) == q
        })
        .map_or(bound, UnaryNat)
}

/// Product of the first `n` entries.
pub fn prod_seq(ps: &PosSeq, n: usize) -> BinPos {
    (0..n).fold(BinPos::one(), |acc, i| acc.mul(ps.get(i)))
}

/// `LF(∏_{i<n} ps(i) + 1)`: a prime outside the listed ones when they are primes.
pub fn new_prime(ps: &PosSeq, n: usize) -> BinPos {
    least_factor(&prod_seq(ps, n).succ())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Split {
    DividesFirst,
    DividesSecond,
}

/// Which factor of `q0·q1` the prime `p` divides, preferring the first.
pub fn irreducible_split(p: &BinPos, q0: &BinPos, q1: &BinPos) -> Result<Split> {
    if !is_prime_pos(p) {
        return Err(ArithError::Precondition(format!("{p} is not prime")));
    }
    if !pos_divides(p, &q0.mul(q1)) {
        return Err(ArithError::Precondition(format!("{p} does not divide {q0}·{q1}")));
    }
    Ok(if pos_divides(p, q0) {
        Split::DividesFirst
    } else {
        Split::DividesSecond
    })
}

/// Least `i < n` with `p ∣ ∏_{j≤i} ps(j)`.
pub fn prime_index_in_product(p: &BinPos, ps: &PosSeq, n: usize) -> Result<usize> {
    let mut prefix = BinPos::one();
    for i in 0..n {
        prefix = prefix.mul(ps.get(i));
        if pos_divides(p, &prefix) {
            return Ok(i);
        }
    }
    Err(ArithError::Precondition(format!(
        "{p} does not divide the product of the first {n} entries"
    )))
}
