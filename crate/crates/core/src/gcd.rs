//! Greatest common divisors, divisibility and division via the monotone maximum.

use std::cmp::Ordering;

use crate::error::{ArithError, Result};
use crate::numerals::{limbs, BinPos, UnaryNat};
use crate::search::{exb_nat, pos_mon_max};

/// Subtractive gcd on naturals; `gcd(0, n) = n`, `gcd(m, 0) = m`.
pub fn nat_gcd(n: UnaryNat, m: UnaryNat) -> UnaryNat {
    let (mut a, mut b) = (n.0, m.0);
    loop {
        if a == 0 {
            return UnaryNat(b);
        }
        if b == 0 {
            return UnaryNat(a);
        }
        if a < b {
            b -= a;
        } else {
            a -= b;
        }
    }
}

/// `⌊p/q⌋` by bisection on `r·q ≤ p`. Requires `q ≤ p`.
pub fn floor_div(p: &BinPos, q: &BinPos) -> Result<BinPos> {
    if p < q {
        return Err(ArithError::Precondition(format!(
            "floor division needs divisor {q} not above dividend {p}"
        )));
    }
    let steps = p.pos_log().monus(q.pos_log()).succ();
    Ok(pos_mon_max(|r| r.mul(q) <= *p, steps))
}

/// Euclid's algorithm by repeated remainder, the quotient coming from [`floor_div`].
pub fn euclid_gcd_bin(p: &BinPos, q: &BinPos) -> BinPos {
    let (mut p, mut q) = (p.clone(), q.clone());
    loop {
        match p.cmp(&q) {
            Ordering::Less => {
                let kp = floor_div(&q, &p).expect("p < q").mul(&p);
                if kp == q {
                    return p;
                }
                q = q.sub_strict(&kp).expect("remainder is positive");
            }
            Ordering::Greater => {
                let kq = floor_div(&p, &q).expect("q < p").mul(&q);
                if kq == p {
                    return q;
                }
                p = p.sub_strict(&kq).expect("remainder is positive");
            }
            Ordering::Equal => return p,
        }
    }
}

/// Binary gcd.
///
/// Shared factors of two are counted and restored at the end, an even
/// argument facing an odd one loses its low zero digits, and two odd
/// arguments are replaced by the smaller one and half their difference.
pub fn stein_gcd(p: &BinPos, q: &BinPos) -> BinPos {
    let mut a = p.limbs.clone();
    let mut b = q.limbs.clone();
    let shared = limbs::trailing_zeros(&a).min(limbs::trailing_zeros(&b));
    limbs::shr_assign(&mut a, shared);
    limbs::shr_assign(&mut b, shared);
    let odd_part = loop {
        if is_one(&a) || is_one(&b) {
            break vec![1];
        }
        let tz = limbs::trailing_zeros(&a);
        if tz > 0 {
            limbs::shr_assign(&mut a, tz);
            continue;
        }
        let tz = limbs::trailing_zeros(&b);
        if tz > 0 {
            limbs::shr_assign(&mut b, tz);
            continue;
        }
        match limbs::cmp(&a, &b) {
            Ordering::Less => {
                limbs::sub_assign(&mut b, &a);
                limbs::shr1_assign(&mut b);
            }
            Ordering::Greater => {
                limbs::sub_assign(&mut a, &b);
                limbs::shr1_assign(&mut a);
            }
            Ordering::Equal => break a,
        }
    };
    BinPos::from_limbs_unchecked(limbs::shl(&odd_part, shared))
}

fn is_one(a: &[u64]) -> bool {
    a.len() == 1 && a[0] == 1
}

/// `m ∣ n` on naturals: some `l ≤ n` has `l·m = n`.
pub fn nat_divides(m: UnaryNat, n: UnaryNat) -> bool {
    let (m, n) = (u128::from(m.0), u128::from(n.0));
    exb_nat(UnaryNat(n as u64).succ(), |l| u128::from(l.0) * m == n)
}

/// `p ∣ q` iff `gcd(p, q) = p`.
pub fn pos_divides(p: &BinPos, q: &BinPos) -> bool {
    stein_gcd(p, q) == *p
}

/// The `r` with `r·p = q`, for `p ∣ q`.
pub fn div_witness(p: &BinPos, q: &BinPos) -> Result<BinPos> {
    if !pos_divides(p, q) {
        return Err(ArithError::Precondition(format!("{p} does not divide {q}")));
    }
    floor_div(q, p)
}
