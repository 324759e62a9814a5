//! Bézout certificates without negative numbers.

use std::fmt;

use crate::gcd::{floor_div, nat_gcd, stein_gcd};
use crate::numerals::{BinPos, UnaryNat};

/// Witness that `gcd(p0, p1)` is a positive combination of `p0` and `p1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BezoutCert {
    /// `q·p0 = p1`
    Multiple0(BinPos),
    /// `q·p1 = p0`
    Multiple1(BinPos),
    /// `gcd + q0·p0 = q1·p1`
    PlusCase(BinPos, BinPos),
    /// `gcd + q1·p1 = q0·p0`
    MinusCase(BinPos, BinPos),
}

impl BezoutCert {
    pub fn is_multiple(&self) -> bool {
        matches!(self, BezoutCert::Multiple0(_) | BezoutCert::Multiple1(_))
    }
}

impl fmt::Display for BezoutCert {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BezoutCert::Multiple0(q) => write!(f, "Multiple0({q})"),
            BezoutCert::Multiple1(q) => write!(f, "Multiple1({q})"),
            BezoutCert::PlusCase(q0, q1) => write!(f, "PlusCase({q0},{q1})"),
            BezoutCert::MinusCase(q0, q1) => write!(f, "MinusCase({q0},{q1})"),
        }
    }
}

/// Checks the certificate's equation against `stein_gcd(p0, p1)`.
pub fn verify_cert(p0: &BinPos, p1: &BinPos, cert: &BezoutCert) -> bool {
    let g = stein_gcd(p0, p1);
    match cert {
        BezoutCert::Multiple0(q) => q.mul(p0) == *p1,
        BezoutCert::Multiple1(q) => q.mul(p1) == *p0,
        BezoutCert::PlusCase(q0, q1) => g.add(&q0.mul(p0)) == q1.mul(p1),
        BezoutCert::MinusCase(q0, q1) => g.add(&q1.mul(p1)) == q0.mul(p0),
    }
}

#[derive(Debug, Clone, Copy)]
enum SteinStep {
    BothEven,
    // p0 even, p1 odd: p0 halved.
    HalveFirst,
    // p0 odd, p1 even: p1 halved.
    HalveSecond,
    // both odd, p0 < p1: p1 replaced by p1 - p0.
    SubFromSecond,
    // both odd, p1 < p0: p0 replaced by p0 - p1.
    SubFromFirst,
}

/// Certificate built along the binary gcd recursion.
///
/// The descent records which case applied; the ascent rebuilds each parent
/// pair from its child and adjusts the coefficients.
pub fn bezout_stein(p0: &BinPos, p1: &BinPos) -> BezoutCert {
    let fuel = 2 * (p0.pos_log().0 + p1.pos_log().0) + 2;
    let (mut a, mut b) = (p0.clone(), p1.clone());
    let mut steps = Vec::new();
    let mut cert = loop {
        assert!(
            (steps.len() as u64) < fuel,
            "extended binary gcd exceeded its step bound"
        );
        if a.is_one() {
            break BezoutCert::Multiple0(b.clone());
        }
        if b.is_one() {
            break BezoutCert::Multiple1(a.clone());
        }
        let step = match (a.is_even(), b.is_even()) {
            (true, true) => {
                a = a.tail().expect("even");
                b = b.tail().expect("even");
                SteinStep::BothEven
            }
            (true, false) => {
                a = a.tail().expect("even");
                SteinStep::HalveFirst
            }
            (false, true) => {
                b = b.tail().expect("even");
                SteinStep::HalveSecond
            }
            (false, false) => match a.cmp(&b) {
                std::cmp::Ordering::Less => {
                    b = b.sub_strict(&a).expect("a < b");
                    SteinStep::SubFromSecond
                }
                std::cmp::Ordering::Greater => {
                    a = a.sub_strict(&b).expect("b < a");
                    SteinStep::SubFromFirst
                }
                std::cmp::Ordering::Equal => break BezoutCert::Multiple0(BinPos::one()),
            },
        };
        steps.push(step);
    };

    use BezoutCert::*;
    for step in steps.into_iter().rev() {
        cert = match step {
            SteinStep::BothEven => {
                a = a.s0();
                b = b.s0();
                cert
            }
            SteinStep::HalveFirst => {
                // parent (2a, 2h+1)
                let h = b.tail().expect("odd p1 above 1");
                let next = match cert {
                    Multiple0(q) if q.is_one() => Multiple1(BinPos::pow2(1)),
                    Multiple0(_) => PlusCase(h.clone(), a.clone()),
                    Multiple1(q) => Multiple1(q.s0()),
                    PlusCase(q0, q1) => {
                        let q1 = q1.add(&q0.mul(&a));
                        PlusCase(h.succ().mul(&q0), q1)
                    }
                    MinusCase(q0, q1) => {
                        let q1 = q1.add(&q0.mul(&a));
                        MinusCase(q0.add(&q0.mul(&h)), q1)
                    }
                };
                a = a.s0();
                next
            }
            SteinStep::HalveSecond => {
                // parent (2h+1, 2b)
                let h = a.tail().expect("odd p0 above 1");
                let next = match cert {
                    Multiple1(q) if q.is_one() => Multiple0(BinPos::pow2(1)),
                    Multiple1(_) => MinusCase(b.clone(), h.clone()),
                    Multiple0(q) => Multiple0(q.s0()),
                    MinusCase(q0, q1) => {
                        let q0 = q0.add(&q1.mul(&b));
                        MinusCase(q0, h.succ().mul(&q1))
                    }
                    PlusCase(q0, q1) => {
                        let q0 = q0.add(&q1.mul(&b));
                        PlusCase(q0, q1.add(&q1.mul(&h)))
                    }
                };
                b = b.s0();
                next
            }
            SteinStep::SubFromSecond => {
                b = b.add(&a);
                match cert {
                    Multiple0(q) => Multiple0(q.succ()),
                    Multiple1(_) => unreachable!("an even number never divides an odd one"),
                    PlusCase(q0, q1) => PlusCase(q0.add(&q1), q1),
                    MinusCase(q0, q1) => MinusCase(q0.add(&q1), q1),
                }
            }
            SteinStep::SubFromFirst => {
                a = a.add(&b);
                match cert {
                    Multiple1(q) => Multiple1(q.succ()),
                    Multiple0(_) => unreachable!("an even number never divides an odd one"),
                    MinusCase(q0, q1) => {
                        let q1 = q0.add(&q1);
                        MinusCase(q0, q1)
                    }
                    PlusCase(q0, q1) => {
                        let q1 = q0.add(&q1);
                        PlusCase(q0, q1)
                    }
                }
            }
        };
    }
    cert
}

/// Certificate built along Euclid's remainder recursion.
pub fn bezout_euclid(p0: &BinPos, p1: &BinPos) -> BezoutCert {
    use BezoutCert::*;
    // (quotient, whether the remainder replaced p1)
    let mut steps: Vec<(BinPos, bool)> = Vec::new();
    let (mut a, mut b) = (p0.clone(), p1.clone());
    let mut cert = loop {
        match a.cmp(&b) {
            std::cmp::Ordering::Equal => break Multiple0(BinPos::one()),
            std::cmp::Ordering::Less => {
                let k = floor_div(&b, &a).expect("a < b");
                let ka = k.mul(&a);
                if ka == b {
                    break Multiple0(k);
                }
                b = b.sub_strict(&ka).expect("remainder is positive");
                steps.push((k, true));
            }
            std::cmp::Ordering::Greater => {
                let k = floor_div(&a, &b).expect("b < a");
                let kb = k.mul(&b);
                if kb == a {
                    break Multiple1(k);
                }
                a = a.sub_strict(&kb).expect("remainder is positive");
                steps.push((k, false));
            }
        }
    };
    for (k, second) in steps.into_iter().rev() {
        cert = if second {
            match cert {
                Multiple1(_) => PlusCase(k, BinPos::one()),
                PlusCase(x, y) => PlusCase(x.add(&y.mul(&k)), y),
                MinusCase(x, y) => MinusCase(x.add(&y.mul(&k)), y),
                Multiple0(_) => unreachable!("remainder is below the divisor"),
            }
        } else {
            match cert {
                Multiple0(_) => MinusCase(BinPos::one(), k),
                PlusCase(x, y) => {
                    let y = y.add(&x.mul(&k));
                    PlusCase(x, y)
                }
                MinusCase(x, y) => {
                    let y = y.add(&x.mul(&k));
                    MinusCase(x, y)
                }
                Multiple1(_) => unreachable!("remainder is below the divisor"),
            }
        };
    }
    cert
}

/// Which linear equation a [`NatBezoutCert`] asserts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NatSide {
    /// `gcd + l0·n = l1·m`
    First,
    /// `gcd + l0·m = l1·n`
    Second,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NatBezoutCert {
    pub l0: UnaryNat,
    pub l1: UnaryNat,
    pub side: NatSide,
}

/// Certificate for `gcd(n, m)` following the subtractive recursion.
pub fn nat_bezout(n: UnaryNat, m: UnaryNat) -> NatBezoutCert {
    // true: the second argument was reduced.
    let mut steps = Vec::new();
    let (mut a, mut b) = (n.0, m.0);
    let (mut l0, mut l1, side) = loop {
        if a == 0 {
            break (0u64, 1u64, NatSide::First);
        }
        if b == 0 {
            break (0, 1, NatSide::Second);
        }
        if a < b {
            b -= a;
            steps.push(true);
        } else {
            a -= b;
            steps.push(false);
        }
    };
    for second in steps.into_iter().rev() {
        match (second, side) {
            (true, NatSide::First) | (false, NatSide::Second) => l0 += l1,
            (true, NatSide::Second) | (false, NatSide::First) => l1 += l0,
        }
    }
    NatBezoutCert { l0: UnaryNat(l0), l1: UnaryNat(l1), side }
}

pub fn verify_nat_cert(n: UnaryNat, m: UnaryNat, cert: &NatBezoutCert) -> bool {
    let g = u128::from(nat_gcd(n, m).0);
    let (n, m) = (u128::from(n.0), u128::from(m.0));
    let (l0, l1) = (u128::from(cert.l0.0), u128::from(cert.l1.0));
    match cert.side {
        NatSide::First => g + l0 * n == l1 * m,
        NatSide::Second => g + l0 * m == l1 * n,
    }
}
